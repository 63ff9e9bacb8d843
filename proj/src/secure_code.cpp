#include "wiretap/secure_code.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "wiretap/bounds.hpp"
#include "wiretap/error.hpp"
#include "wiretap/lp.hpp"

namespace wiretap {

BigRational RateProfile::key_ratio() const
{
    if (w_total == 0) throw Error(ErrorCode::DegenerateTau, "no message symbols");
    return BigRational(static_cast<long long>(g), static_cast<long long>(w_total));
}

std::size_t LinearScheme::edge_position(const EdgeId& id) const
{
    auto it = std::find(edges.begin(), edges.end(), id);
    if (it == edges.end()) throw Error(ErrorCode::UnknownEdge, "edge '" + id + "' is not carried by the code");
    return static_cast<std::size_t>(it - edges.begin());
}

std::size_t CodeSpec::w_total() const
{
    std::size_t total = 0;
    for (std::size_t i = 0; i < h(); ++i)
        if (!in_tight_set(i)) total += w[i];
    return total;
}

std::size_t CodeSpec::w_max() const
{
    return w.empty() ? 0 : *std::max_element(w.begin(), w.end());
}

bool CodeSpec::in_tight_set(std::size_t position) const
{
    return std::find(tight_set.begin(), tight_set.end(), edge_order.at(position)) != tight_set.end();
}

std::vector<std::size_t> CodeSpec::message_offsets() const
{
    std::vector<std::size_t> offsets(h(), 0);
    std::size_t at = 0;
    for (std::size_t i = 0; i < h(); ++i) {
        offsets[i] = at;
        if (!in_tight_set(i)) at += w[i];
    }
    return offsets;
}

LinearScheme CodeSpec::scheme() const
{
    LinearScheme s;
    s.q = q;
    s.message_dim = w_total();
    s.key_dim = g;
    s.edges = edge_order;
    auto offsets = message_offsets();
    for (std::size_t i = 0; i < h(); ++i) {
        FieldMatrix a(w[i], s.message_dim, q);
        if (!in_tight_set(i))
            for (std::size_t r = 0; r < w[i]; ++r) a(r, offsets[i] + r) = 1;
        s.message_part.push_back(std::move(a));
        s.key_part.push_back(B[i]);
    }
    return s;
}

void require_point_to_point(const WiretapNetwork& net)
{
    if (net.users.size() != 1) throw Error(ErrorCode::NotPointToPoint, "exactly one user is required");
    for (const auto& e : net.edges)
        if (e.tail != net.source || e.head != net.users.front())
            throw Error(ErrorCode::NotPointToPoint, "edge '" + e.id + "' does not run from source to user");
    if (net.edges.empty()) throw Error(ErrorCode::NotPointToPoint, "no edges");
}

RateProfile derive_rates(const WiretapNetwork& net)
{
    require_point_to_point(net);
    RateProfile rate;
    rate.wiretap_columns = prune_wiretap_antichain(net.wiretap_sets);
    const auto& columns = rate.wiretap_columns;
    const std::size_t h = net.edges.size();

    EdgeSet all(h);
    for (std::size_t e = 0; e < h; ++e) all[e] = e;
    auto cut = bound_for_blocking_set(all, columns);
    if (cut.covering.value.is_infinite())
        throw Error(ErrorCode::DegenerateTau, "tau = 0: some edge lies in no wiretap set");
    if (cut.covering.value.value() == 1)
        throw Error(ErrorCode::DegenerateTau, "tau unbounded: a wiretap set observes every edge");

    // max 1ᵀy s.t. A_Jᵀ y <= 1, y >= 0, written as -A_Jᵀ y >= -1 stacked on I y >= 0.
    RatMatrix g(columns.size() + h, h);
    RatVector rhs(columns.size() + h, BigRational(0));
    for (std::size_t i = 0; i < columns.size(); ++i) {
        for (auto e : columns[i]) g(i, e) = -1;
        rhs[i] = -1;
    }
    for (std::size_t e = 0; e < h; ++e) g(columns.size() + e, e) = 1;
    auto best = optimize_over_vertices(g, rhs, Sense::Maximize);
    if (!best) throw Error(ErrorCode::DegenerateTau, "dual LP has no vertex");
    rate.y_star = std::move(best->x);

    rate.g = lcm_of_denominators(rate.y_star).convert_to<std::size_t>();
    std::size_t total = 0;
    for (const auto& y : rate.y_star) {
        BigRational scaled = y * static_cast<long long>(rate.g);
        rate.w.push_back(numerator(scaled).convert_to<std::size_t>());
        total += rate.w.back();
    }
    rate.w_total = total - rate.g;
    rate.w_max = *std::max_element(rate.w.begin(), rate.w.end());

    for (const auto& column : columns) {
        std::size_t load = 0;
        for (auto e : column) load += rate.w[e];
        if (load == rate.g) {
            rate.tight_set = column;
            break;
        }
    }
    if (rate.tight_set.empty()) throw std::logic_error("optimal dual vertex has no tight wiretap set");
    return rate;
}

std::uint64_t default_field_size(const WiretapNetwork& net)
{
    return smallest_prime_above(prune_wiretap_antichain(net.wiretap_sets).size());
}

CodeSpec construct_code(const WiretapNetwork& net, const RateProfile& rate, std::uint64_t q,
                        const ConstructionObserver& observer)
{
    require_point_to_point(net);
    const auto& columns = rate.wiretap_columns;
    if (!is_prime(q)) throw Error(ErrorCode::PreconditionViolated, std::to_string(q) + " is not prime");
    if (q <= columns.size())
        throw Error(ErrorCode::FieldTooSmall, "q = " + std::to_string(q) + " must exceed d = " +
                                                  std::to_string(columns.size()));
    const std::size_t h = net.edges.size();
    if (rate.w.size() != h || rate.y_star.size() != h)
        throw Error(ErrorCode::DimensionMismatch, "rate profile does not match the network");
    if (rate.w_total == 0) throw Error(ErrorCode::DegenerateTau, "no message symbols to protect");

    auto tight = std::find(columns.begin(), columns.end(), rate.tight_set);
    if (tight == columns.end()) throw Error(ErrorCode::PreconditionViolated, "tight set is not a wiretap column");
    const auto tight_index = static_cast<std::size_t>(tight - columns.begin());
    auto in_tight = [&](std::size_t e) { return std::binary_search(rate.tight_set.begin(), rate.tight_set.end(), e); };

    std::vector<std::size_t> order;
    for (std::size_t e = 0; e < h; ++e)
        if (!in_tight(e)) order.push_back(e);
    for (auto e : rate.tight_set) order.push_back(e);

    std::vector<FieldMatrix> kernels(h, FieldMatrix(0, rate.g, q));
    // The tight set carries K itself: its blocks partition the g×g identity.
    std::size_t row = 0;
    for (auto e : rate.tight_set)
        for (std::size_t r = 0; r < rate.w[e]; ++r, ++row) {
            FieldVector unit(rate.g, 0);
            unit[row] = 1;
            kernels[e].append_row(unit);
        }
    if (row != rate.g) throw Error(ErrorCode::PreconditionViolated, "tight set rates do not sum to g");

    // T_i starts as the part of I_i that lies in the tight set.
    std::vector<FieldMatrix> partial(columns.size(), FieldMatrix(0, rate.g, q));
    for (std::size_t i = 0; i < columns.size(); ++i)
        for (auto e : columns[i])
            if (in_tight(e)) partial[i].append_rows(kernels[e]);

    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        const auto e = order[pos];
        if (in_tight(e)) break;
        if (rate.w[e] == 0) continue;
        std::vector<std::size_t> touching;
        std::vector<FieldMatrix> bases;
        for (std::size_t i = 0; i < columns.size(); ++i)
            if (i != tight_index && std::binary_search(columns[i].begin(), columns[i].end(), e)) {
                touching.push_back(i);
                bases.push_back(partial[i]);
            }
        kernels[e] = build_subspace(rate.g, rate.w[e], q, bases);
        for (auto i : touching) partial[i].append_rows(kernels[e]);
        for (const auto& t : partial)
            if (ff_rank(t) != t.rows()) throw std::logic_error("partial key kernel lost full row rank");
        if (observer) observer(pos, partial);
    }

    CodeSpec code;
    code.q = q;
    code.g = rate.g;
    for (auto e : order) {
        code.edge_order.push_back(net.edges[e].id);
        code.w.push_back(rate.w[e]);
        code.B.push_back(kernels[e]);
        code.y_star.push_back(rate.y_star[e]);
    }
    code.tight_set = net.edge_ids(rate.tight_set);
    return code;
}

namespace {

void check_field_vector(const FieldVector& v, std::size_t size, std::uint64_t q, const char* what)
{
    if (v.size() != size)
        throw Error(ErrorCode::DimensionMismatch, std::string(what) + " has length " + std::to_string(v.size()) +
                                                      ", expected " + std::to_string(size));
    for (auto x : v)
        if (x >= q) throw Error(ErrorCode::DimensionMismatch, std::string(what) + " entry outside GF(q)");
}

}  // namespace

std::vector<FieldVector> encode(const CodeSpec& code, const FieldVector& message, const FieldVector& key)
{
    check_field_vector(message, code.w_total(), code.q, "message");
    check_field_vector(key, code.g, code.q, "key");
    const auto offsets = code.message_offsets();
    const auto width = code.w_max();
    std::vector<FieldVector> out;
    for (std::size_t i = 0; i < code.h(); ++i) {
        FieldVector y = code.B[i].multiply(key);
        if (!code.in_tight_set(i))
            for (std::size_t r = 0; r < code.w[i]; ++r) y[r] = (y[r] + message[offsets[i] + r]) % code.q;
        y.resize(width, 0);
        out.push_back(std::move(y));
    }
    return out;
}

FieldVector decode(const CodeSpec& code, const std::vector<FieldVector>& codewords)
{
    if (codewords.size() != code.h())
        throw Error(ErrorCode::DimensionMismatch, "expected one codeword per edge");
    const auto width = code.w_max();
    for (std::size_t i = 0; i < code.h(); ++i) {
        check_field_vector(codewords[i], width, code.q, "codeword");
        for (std::size_t r = code.w[i]; r < width; ++r)
            if (codewords[i][r] != 0)
                throw Error(ErrorCode::InconsistentCodeword, "nonzero padding on edge '" + code.edge_order[i] + "'");
    }

    // The tight set carries K in order.
    FieldVector key;
    for (std::size_t i = 0; i < code.h(); ++i)
        if (code.in_tight_set(i))
            key.insert(key.end(), codewords[i].begin(), codewords[i].begin() + static_cast<long>(code.w[i]));

    FieldVector message;
    for (std::size_t i = 0; i < code.h(); ++i) {
        if (code.in_tight_set(i)) continue;
        auto pad = code.B[i].multiply(key);
        for (std::size_t r = 0; r < code.w[i]; ++r) message.push_back((codewords[i][r] + code.q - pad[r]) % code.q);
    }
    return message;
}

std::vector<WiretapSecurity> security_by_rank(const CodeSpec& code, const WiretapNetwork& net)
{
    const auto scheme = code.scheme();
    std::vector<WiretapSecurity> out;
    for (const auto& set : net.wiretap_sets) {
        WiretapSecurity s;
        s.wiretap = set;
        FieldMatrix key_rows(0, scheme.key_dim, scheme.q);
        FieldMatrix combined(0, scheme.message_dim + scheme.key_dim, scheme.q);
        for (const auto& id : net.edge_ids(set)) {
            const auto pos = scheme.edge_position(id);
            key_rows.append_rows(scheme.key_part[pos]);
            for (std::size_t r = 0; r < scheme.key_part[pos].rows(); ++r) {
                FieldVector joined(scheme.message_part[pos].row(r).begin(), scheme.message_part[pos].row(r).end());
                joined.insert(joined.end(), scheme.key_part[pos].row(r).begin(), scheme.key_part[pos].row(r).end());
                combined.append_row(joined);
            }
        }
        s.observed_rows = key_rows.rows();
        s.key_rank = ff_rank(key_rows);
        s.combined_full_rank = ff_rank(combined) == combined.rows();
        s.secure = s.combined_full_rank && s.key_rank == s.observed_rows;
        out.push_back(std::move(s));
    }
    return out;
}

bool verify_security_rank(const CodeSpec& code, const WiretapNetwork& net)
{
    auto rows = security_by_rank(code, net);
    return std::all_of(rows.begin(), rows.end(), [](const WiretapSecurity& s) { return s.secure; });
}

BigRational mutual_information_oracle(const LinearScheme& scheme, const std::vector<EdgeId>& wiretap,
                                      std::size_t max_outcomes)
{
    const std::size_t dims = scheme.message_dim + scheme.key_dim;
    std::size_t outcomes = 1;
    for (std::size_t i = 0; i < dims; ++i) {
        if (outcomes > max_outcomes / scheme.q)
            throw Error(ErrorCode::InstanceTooLarge,
                        "q^(w+g) = " + std::to_string(scheme.q) + "^" + std::to_string(dims) + " exceeds the oracle cap");
        outcomes *= scheme.q;
    }

    std::vector<std::size_t> observed;
    for (const auto& id : wiretap) observed.push_back(scheme.edge_position(id));

    auto odometer = [q = scheme.q](FieldVector& v) {
        for (std::size_t i = v.size(); i-- > 0;) {
            if (++v[i] < q) return true;
            v[i] = 0;
        }
        return false;
    };

    // Conditional histograms of the observation, one per message value.
    using Histogram = std::map<FieldVector, std::size_t>;
    std::vector<Histogram> conditional;
    Histogram marginal;
    FieldVector m(scheme.message_dim, 0);
    do {
        Histogram hist;
        FieldVector k(scheme.key_dim, 0);
        do {
            FieldVector y;
            for (auto pos : observed) {
                auto a = scheme.message_part[pos].multiply(m);
                auto b = scheme.key_part[pos].multiply(k);
                for (std::size_t r = 0; r < a.size(); ++r) y.push_back((a[r] + b[r]) % scheme.q);
            }
            ++hist[y];
            ++marginal[y];
        } while (odometer(k));
        conditional.push_back(std::move(hist));
    } while (odometer(m));

    if (std::all_of(conditional.begin(), conditional.end(), [&](const Histogram& h) { return h == conditional.front(); }))
        return BigRational(0);

    // Counts: conditional n_m(y) over q^kdim keys, marginal n(y) over q^(mdim+kdim).
    const BigRational per_key = BigRational(1) / BigRational(static_cast<long long>(outcomes / conditional.size()));
    const BigRational per_pair = BigRational(1) / BigRational(static_cast<long long>(outcomes));
    BigRational distance = 0;
    for (const auto& hist : conditional) {
        BigRational tv = 0;
        for (const auto& [y, total] : marginal) {
            auto it = hist.find(y);
            BigRational p_cond = it == hist.end() ? BigRational(0) : BigRational(static_cast<long long>(it->second)) * per_key;
            BigRational diff = p_cond - BigRational(static_cast<long long>(total)) * per_pair;
            tv += diff < 0 ? -diff : diff;
        }
        distance += tv / 2;
    }
    return distance / static_cast<long long>(conditional.size());
}

BigRational mutual_information_oracle(const CodeSpec& code, const std::vector<EdgeId>& wiretap,
                                      std::size_t max_outcomes)
{
    return mutual_information_oracle(code.scheme(), wiretap, max_outcomes);
}

}  // namespace wiretap
