#include "wiretap/lp.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "wiretap/error.hpp"

namespace wiretap {

IncidenceMatrix build_incidence(const EdgeSet& blocking_set, const std::vector<EdgeSet>& wiretap_sets)
{
    IncidenceMatrix m;
    m.edge_order = canonical(blocking_set);
    m.wiretap_order.resize(wiretap_sets.size());
    std::iota(m.wiretap_order.begin(), m.wiretap_order.end(), std::size_t{0});
    m.entries.assign(m.edge_order.size(), std::vector<char>(wiretap_sets.size(), 0));
    for (std::size_t i = 0; i < m.edge_order.size(); ++i)
        for (std::size_t j = 0; j < wiretap_sets.size(); ++j)
            m.entries[i][j] = std::binary_search(wiretap_sets[j].begin(), wiretap_sets[j].end(), m.edge_order[i]);
    return m;
}

std::size_t binomial(std::size_t n, std::size_t k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::size_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > std::numeric_limits<std::size_t>::max()) return std::numeric_limits<std::size_t>::max();
    }
    return static_cast<std::size_t>(r);
}

bool next_combination(std::vector<std::size_t>& combo, std::size_t n)
{
    const std::size_t k = combo.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (combo[i] < n - k + i) {
            ++combo[i];
            for (std::size_t j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
            return true;
        }
    }
    return false;
}

namespace {

constexpr long long kIntegralLimit = 1LL << 20;

bool small_integer(const BigRational& v, long long& out)
{
    if (denominator(v) != 1) return false;
    const auto& n = numerator(v);
    if (n > kIntegralLimit || n < -kIntegralLimit) return false;
    out = n.convert_to<long long>();
    return true;
}

}  // namespace

BasisSolver::BasisSolver(const RatMatrix& g, std::span<const BigRational> h)
    : g_(g), h_(h), d_(g.cols()), num_(g.cols())
{
    if (h.size() != g.rows()) throw Error(ErrorCode::DimensionMismatch, "constraint rows vs right-hand side");
    integral_ = true;
    gi_.resize(g.rows() * d_);
    hi_.resize(g.rows());
    for (std::size_t r = 0; r < g.rows() && integral_; ++r) {
        integral_ = small_integer(h[r], hi_[r]);
        for (std::size_t c = 0; c < d_ && integral_; ++c) integral_ = small_integer(g(r, c), gi_[r * d_ + c]);
    }
    work_.resize(d_ * (d_ + 1));
    nonzeros_.assign(g.rows(), 0);
    for (std::size_t r = 0; r < g.rows() && integral_; ++r)
        for (std::size_t c = 0; c < d_; ++c) nonzeros_[r] += gi_[r * d_ + c] != 0;
}

bool BasisSolver::solve_integral(std::span<const std::size_t> basis)
{
    const std::size_t w = d_ + 1;
    // Sparse rows first: pivoting on a unit row leaves untouched rows unchanged.
    order_.assign(basis.begin(), basis.end());
    std::stable_sort(order_.begin(), order_.end(),
                     [&](std::size_t a, std::size_t b) { return nonzeros_[a] < nonzeros_[b]; });
    for (std::size_t i = 0; i < d_; ++i) {
        std::copy_n(&gi_[order_[i] * d_], d_, &work_[i * w]);
        work_[i * w + d_] = hi_[order_[i]];
    }
    long long prev = 1;
    for (std::size_t k = 0; k < d_; ++k) {
        std::size_t p = k;
        while (p < d_ && work_[p * w + k] == 0) ++p;
        if (p == d_) return false;
        if (p != k) std::swap_ranges(&work_[p * w], &work_[p * w] + w, &work_[k * w]);
        const long long pivot = work_[k * w + k];
        for (std::size_t i = 0; i < d_; ++i) {
            if (i == k) continue;
            const long long factor = work_[i * w + k];
            if (factor == 0 && pivot == prev) continue;
            for (std::size_t j = 0; j < w; ++j) {
                if (j == k) continue;
                long long a, b, diff;
                if (__builtin_mul_overflow(pivot, work_[i * w + j], &a) ||
                    __builtin_mul_overflow(factor, work_[k * w + j], &b) || __builtin_sub_overflow(a, b, &diff))
                    throw std::overflow_error("fraction-free elimination");
                work_[i * w + j] = diff / prev;
            }
            work_[i * w + k] = 0;
        }
        prev = pivot;
    }
    // Every diagonal entry now equals the determinant.
    den_ = prev;
    const long long sign = den_ < 0 ? -1 : 1;
    den_ *= sign;
    for (std::size_t i = 0; i < d_; ++i) num_[i] = sign * work_[i * w + d_];
    return true;
}

bool BasisSolver::solve(std::span<const std::size_t> basis)
{
    if (integral_) {
        try {
            have_int_ = solve_integral(basis);
            return have_int_;
        } catch (const std::overflow_error&) {
        }
    }
    have_int_ = false;
    RatVector rhs(d_);
    for (std::size_t i = 0; i < d_; ++i) rhs[i] = h_[basis[i]];
    std::vector<std::size_t> rows(basis.begin(), basis.end());
    auto x = try_solve_square(g_.select_rows(rows), rhs);
    if (!x) return false;
    x_ = std::move(*x);
    return true;
}

bool BasisSolver::nonnegative() const
{
    if (have_int_) return std::all_of(num_.begin(), num_.end(), [](long long v) { return v >= 0; });
    return std::all_of(x_.begin(), x_.end(), [](const BigRational& v) { return v >= 0; });
}

bool BasisSolver::row_at_least(std::size_t r, long t) const
{
    if (have_int_) {
        __int128 lhs = 0;
        for (std::size_t c = 0; c < d_; ++c) lhs += static_cast<__int128>(gi_[r * d_ + c]) * num_[c];
        return lhs >= static_cast<__int128>(t) * den_;
    }
    BigRational lhs = 0;
    for (std::size_t c = 0; c < d_; ++c) lhs += g_(r, c) * x_[c];
    return lhs >= t;
}

bool BasisSolver::feasible() const
{
    for (std::size_t r = 0; r < g_.rows(); ++r) {
        if (have_int_) {
            __int128 lhs = 0;
            for (std::size_t c = 0; c < d_; ++c) lhs += static_cast<__int128>(gi_[r * d_ + c]) * num_[c];
            if (lhs < static_cast<__int128>(hi_[r]) * den_) return false;
        } else {
            BigRational lhs = 0;
            for (std::size_t c = 0; c < d_; ++c) lhs += g_(r, c) * x_[c];
            if (lhs < h_[r]) return false;
        }
    }
    return true;
}

BigRational BasisSolver::objective() const
{
    if (!have_int_) return sum(x_);
    BigInt total = 0;
    for (long long v : num_) total += v;
    return BigRational(total, BigInt(den_));
}

RatVector BasisSolver::solution() const
{
    if (!have_int_) return x_;
    RatVector x(d_);
    for (std::size_t i = 0; i < d_; ++i) x[i] = BigRational(BigInt(num_[i]), BigInt(den_));
    return x;
}

std::optional<ExtremePoint> optimize_over_vertices(const RatMatrix& g, std::span<const BigRational> h,
                                                   Sense sense, std::size_t max_subsets)
{
    const std::size_t d = g.cols();
    const std::size_t m = g.rows();
    if (h.size() != m) throw Error(ErrorCode::DimensionMismatch, "constraint rows vs right-hand side");
    if (binomial(m, d) > max_subsets)
        throw Error(ErrorCode::InstanceTooLarge,
                    "C(" + std::to_string(m) + ", " + std::to_string(d) + ") basis candidates exceed the limit");
    if (d == 0) {
        bool feasible = std::all_of(h.begin(), h.end(), [](const BigRational& v) { return v <= 0; });
        if (!feasible) return std::nullopt;
        return ExtremePoint{{}, {}, BigRational(0)};
    }
    if (m < d) return std::nullopt;

    std::optional<ExtremePoint> best;
    std::vector<std::size_t> basis(d);
    std::iota(basis.begin(), basis.end(), std::size_t{0});
    BasisSolver solver(g, h);
    do {
        if (!solver.solve(basis) || !solver.feasible()) continue;
        BigRational value = solver.objective();
        bool better = !best || (sense == Sense::Minimize ? value < best->objective : value > best->objective);
        if (better) best = ExtremePoint{solver.solution(), basis, std::move(value)};
    } while (next_combination(basis, m));
    return best;
}

LpSolution covering_lp(const IncidenceMatrix& aj)
{
    const std::size_t rows = aj.rows();
    const std::size_t d = aj.cols();
    for (const auto& row : aj.entries)
        if (std::none_of(row.begin(), row.end(), [](char c) { return c != 0; }))
            return {ExtRational::infinity(), {}};

    // A α >= 1 stacked on α >= 0.
    RatMatrix g(rows + d, d);
    RatVector h(rows + d, BigRational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < d; ++j) g(i, j) = aj.entries[i][j];
        h[i] = 1;
    }
    for (std::size_t j = 0; j < d; ++j) g(rows + j, j) = 1;

    // Nonempty (α = 1) and bounded below by 0, so an optimal vertex exists.
    auto best = optimize_over_vertices(g, h, Sense::Minimize);
    if (!best) return {ExtRational::infinity(), {}};
    return {ExtRational(best->objective), std::move(best->x)};
}

LpSolution packing_lp(const IncidenceMatrix& aj)
{
    const std::size_t rows = aj.rows();
    const std::size_t d = aj.cols();
    // Column j is the indicator of J∖I_j; an empty complement leaves β_j unconstrained.
    for (std::size_t j = 0; j < d; ++j) {
        bool empty = true;
        for (std::size_t i = 0; i < rows && empty; ++i) empty = aj.entries[i][j] != 0;
        if (empty) return {ExtRational::infinity(), {}};
    }

    // -(1 - A) β >= -1 stacked on β >= 0.
    RatMatrix g(rows + d, d);
    RatVector h(rows + d, BigRational(0));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < d; ++j) g(i, j) = aj.entries[i][j] ? 0 : -1;
        h[i] = -1;
    }
    for (std::size_t j = 0; j < d; ++j) g(rows + j, j) = 1;

    auto best = optimize_over_vertices(g, h, Sense::Maximize);
    if (!best) return {ExtRational(BigRational(0)), {}};
    return {ExtRational(best->objective), std::move(best->x)};
}

}  // namespace wiretap
