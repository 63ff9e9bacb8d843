#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "wiretap/network.hpp"
#include "wiretap/rational.hpp"

namespace wiretap {

/**
 * 0/1 matrix with one row per edge of a blocking set J and one column per
 * wiretap set; entry (i, j) is 1 iff edge i lies in wiretap set j.
 */
struct IncidenceMatrix
{
    EdgeSet edge_order;
    std::vector<std::size_t> wiretap_order;
    std::vector<std::vector<char>> entries;

    std::size_t rows() const noexcept { return edge_order.size(); }
    std::size_t cols() const noexcept { return wiretap_order.size(); }
};

IncidenceMatrix build_incidence(const EdgeSet& blocking_set, const std::vector<EdgeSet>& wiretap_sets);

enum class Sense { Minimize, Maximize };

/**
 * Solves the square subsystems G_B x = h_B of one fixed system G x >= h.
 *
 * Small integral systems run fraction-free Gauss-Jordan elimination in 64-bit
 * arithmetic, where every intermediate entry is a minor of G and divisions are
 * exact. Overflow or non-integral input falls back to rational elimination, so
 * results are always exact.
 */
class BasisSolver
{
public:
    BasisSolver(const RatMatrix& g, std::span<const BigRational> h);

    /// Solves for the rows in `basis`; false when they are linearly dependent.
    bool solve(std::span<const std::size_t> basis);

    // The queries below refer to the last successful solve.
    bool nonnegative() const;
    /// G x >= h on every row.
    bool feasible() const;
    /// (G x)_r >= t for row r.
    bool row_at_least(std::size_t r, long t) const;
    BigRational objective() const;
    RatVector solution() const;

private:
    bool solve_integral(std::span<const std::size_t> basis);

    const RatMatrix& g_;
    std::span<const BigRational> h_;
    std::size_t d_;
    bool integral_ = false;
    std::vector<long long> gi_, hi_;
    std::vector<long long> work_;
    std::vector<std::size_t> nonzeros_, order_;

    // Integral result x = num_ / den_ with den_ > 0, or the rational fallback.
    bool have_int_ = false;
    std::vector<long long> num_;
    long long den_ = 1;
    RatVector x_;
};

/// A vertex of {x : G x >= h}, with the rows of G it is tight on.
struct ExtremePoint
{
    RatVector x;
    std::vector<std::size_t> basis;
    BigRational objective;
};

/**
 * Optimizes 1ᵀx over the basic feasible solutions of {x : G x >= h} by
 * enumerating every d-row subset of G in lexicographic order; ties keep the
 * first subset found. Returns nullopt when there is no basic feasible solution.
 * Throws InstanceTooLarge when C(rows, d) exceeds `max_subsets`.
 *
 * The caller is responsible for boundedness in the requested direction.
 */
std::optional<ExtremePoint> optimize_over_vertices(const RatMatrix& g, std::span<const BigRational> h,
                                                   Sense sense, std::size_t max_subsets = 10'000'000);

struct LpSolution
{
    ExtRational value;
    RatVector solution;
};

/// min 1ᵀα s.t. A α >= 1, α >= 0. Infinite (empty α) when some row is all zero.
LpSolution covering_lp(const IncidenceMatrix& aj);

/// max Σ β(J∖I) s.t. every edge of J carries total weight <= 1, β >= 0.
/// Infinite when some wiretap set contains all of J.
LpSolution packing_lp(const IncidenceMatrix& aj);

/// Number of k-subsets of n, saturating at SIZE_MAX.
std::size_t binomial(std::size_t n, std::size_t k);

/// Advances `combo` (strictly increasing indices below n) to the next k-subset
/// in lexicographic order; false after the last one.
bool next_combination(std::vector<std::size_t>& combo, std::size_t n);

}  // namespace wiretap
