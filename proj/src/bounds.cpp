#include "wiretap/bounds.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "wiretap/error.hpp"

namespace wiretap {

std::vector<EdgeSet> prune_wiretap_antichain(std::vector<EdgeSet> sets)
{
    for (auto& s : sets) s = canonical(std::move(s));
    std::sort(sets.begin(), sets.end());
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<EdgeSet> kept;
    for (const auto& s : sets) {
        bool dominated = std::any_of(sets.begin(), sets.end(), [&](const EdgeSet& o) {
            return o.size() > s.size() && is_subset(s, o);
        });
        if (!dominated) kept.push_back(s);
    }
    return kept;
}

MessageBoundReport message_upper_bound(const WiretapNetwork& net)
{
    MessageBoundReport report;
    auto residual = [&](const EdgeSet& removed) {
        std::size_t best = std::numeric_limits<std::size_t>::max();
        std::size_t who = 0;
        for (std::size_t u = 0; u < net.users.size(); ++u) {
            auto v = min_cut(net, removed, u);
            if (v < best) {
                best = v;
                who = u;
            }
        }
        return std::pair{best, who};
    };

    if (net.wiretap_sets.empty()) {
        report.bound_logq = residual({}).first;
        return report;
    }
    report.bound_logq = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < net.wiretap_sets.size(); ++i) {
        auto [value, user] = residual(net.wiretap_sets[i]);
        report.per_wiretap.push_back({i, value, user});
        if (value < report.bound_logq) {
            report.bound_logq = value;
            report.witness_wiretap = i;
        }
    }
    return report;
}

BigRational duality_convert(const BigRational& l)
{
    if (l <= 1) throw Error(ErrorCode::DomainError, "duality conversion needs l > 1, got " + to_string(l));
    return l / (l - 1);
}

namespace {

ExtRational tau_from_covering(const ExtRational& l_c)
{
    if (l_c.is_infinite()) return ExtRational(BigRational(0));
    if (l_c.value() == 1) return ExtRational::infinity();
    return ExtRational(1 / (l_c.value() - 1));
}

ExtRational packing_from_covering(const ExtRational& l_c)
{
    if (l_c.is_infinite()) return ExtRational(BigRational(1));
    if (l_c.value() == 1) return ExtRational::infinity();
    return ExtRational(duality_convert(l_c.value()));
}

}  // namespace

CutBound bound_for_blocking_set(const EdgeSet& blocking_set, const std::vector<EdgeSet>& wiretap_sets)
{
    auto aj = build_incidence(blocking_set, wiretap_sets);
    CutBound b{covering_lp(aj), packing_lp(aj), {}};
    b.tau = tau_from_covering(b.covering.value);
    return b;
}

KeyBoundReport tau_bruteforce(const WiretapNetwork& net, const BoundLimits& limits)
{
    KeyBoundReport report;
    report.method = Method::Brute;
    report.wiretap_columns = prune_wiretap_antichain(net.wiretap_sets);
    auto cuts = enumerate_minimal_cuts(net, NetworkLimits{limits.max_cut_candidates});

    std::optional<CutBound> best;
    for (const auto& cut : cuts) {
        auto b = bound_for_blocking_set(cut.edges, report.wiretap_columns);
        // τ(J) grows as l_C(J) shrinks; the first minimal l_C wins ties.
        if (!best || b.covering.value < best->covering.value) {
            best = std::move(b);
            report.witness_blocking_set = cut.edges;
        }
    }

    report.l_C = best->covering.value;
    report.tau = best->tau;
    if (!report.l_C.is_infinite()) {
        report.l_P = best->packing.value;
        report.witness_solution = best->covering.solution;
        report.solution_kind = SolutionKind::Covering;
    } else {
        // No wiretap sets at all leaves the packing LP without variables.
        report.l_P = report.wiretap_columns.empty() ? ExtRational(BigRational(1)) : best->packing.value;
        report.witness_solution = best->packing.solution;
        report.solution_kind = SolutionKind::Packing;
    }
    return report;
}

KeyBoundReport tau_algorithm1(const WiretapNetwork& net, const BoundLimits& limits)
{
    KeyBoundReport report;
    report.method = Method::Algo1;
    report.wiretap_columns = prune_wiretap_antichain(net.wiretap_sets);
    report.solution_kind = SolutionKind::Covering;
    const auto& columns = report.wiretap_columns;
    const std::size_t d = columns.size();
    const std::size_t edges = net.edges.size();

    auto unqualified = [&] {
        report.tau = ExtRational(BigRational(0));
        report.l_C = ExtRational::infinity();
        report.l_P = ExtRational(BigRational(1));
        return report;
    };
    if (d == 0) return unqualified();
    if (binomial(edges + d, d) > limits.max_submatrices)
        throw Error(ErrorCode::InstanceTooLarge, "C(|E|+d, d) = C(" + std::to_string(edges + d) + ", " +
                                                     std::to_string(d) + ") exceeds the submatrix limit");

    // A'_E = [A_E; I_d], b = (1,…,1, 0,…,0).
    EdgeSet all_edges(edges);
    std::iota(all_edges.begin(), all_edges.end(), std::size_t{0});
    auto a = build_incidence(all_edges, columns);
    RatMatrix stacked(edges + d, d);
    RatVector b(edges + d, BigRational(0));
    for (std::size_t e = 0; e < edges; ++e) {
        for (std::size_t j = 0; j < d; ++j) stacked(e, j) = a.entries[e][j];
        b[e] = 1;
    }
    for (std::size_t j = 0; j < d; ++j) stacked(edges + j, j) = 1;

    std::optional<BigRational> best_val;
    std::vector<std::size_t> rows(d);
    std::iota(rows.begin(), rows.end(), std::size_t{0});
    BasisSolver solver(stacked, b);
    do {
        // a) rank(S) = d and x_S >= 0.
        if (!solver.solve(rows) || !solver.nonnegative()) continue;

        // b) F(S) = {e : (aᵉ)ᵀ x_S >= 1} must be a blocking set.
        BigRational val = solver.objective();
        if (best_val && val >= *best_val) continue;
        EdgeSet tight;
        for (std::size_t e = 0; e < edges; ++e)
            if (solver.row_at_least(e, 1)) tight.push_back(e);
        if (!is_blocking_set(net, tight)) continue;

        // c) keep the minimum; strict comparison keeps the lexicographically first S.
        best_val = val;
        report.witness_blocking_set = std::move(tight);
        report.witness_solution = solver.solution();
    } while (next_combination(rows, edges + d));

    if (!best_val) return unqualified();
    report.l_C = ExtRational(*best_val);
    report.tau = tau_from_covering(report.l_C);
    report.l_P = packing_from_covering(report.l_C);
    return report;
}

}  // namespace wiretap
