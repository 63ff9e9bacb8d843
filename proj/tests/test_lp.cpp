#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "wiretap/lp.hpp"

using namespace wiretap;

namespace {

IncidenceMatrix matrix_from_rows(const std::vector<std::vector<char>>& rows)
{
    IncidenceMatrix m;
    for (std::size_t i = 0; i < rows.size(); ++i) m.edge_order.push_back(i);
    if (!rows.empty())
        for (std::size_t j = 0; j < rows[0].size(); ++j) m.wiretap_order.push_back(j);
    m.entries = rows;
    return m;
}

// Optimum over the grid {0, 1/12, …, 1}^d. Vertices of these 0/1 systems with
// d <= 3 have denominators dividing 2, and optimal weights never exceed 1.
struct GridOptimum
{
    bool feasible = false;
    BigRational value;
};

template <class Feasible>
GridOptimum grid_search(std::size_t d, Sense sense, Feasible&& feasible)
{
    constexpr int steps = 12;
    GridOptimum best;
    std::vector<int> ticks(d, 0);
    for (;;) {
        RatVector x(d);
        for (std::size_t j = 0; j < d; ++j) x[j] = BigRational(ticks[j], steps);
        if (feasible(x)) {
            auto v = sum(x);
            if (!best.feasible || (sense == Sense::Minimize ? v < best.value : v > best.value)) best = {true, v};
        }
        std::size_t j = 0;
        while (j < d && ++ticks[j] > steps) ticks[j++] = 0;
        if (j == d) break;
    }
    return best;
}

}  // namespace

TEST_CASE("build_incidence")
{
    auto m = build_incidence({0, 1, 2}, {{0, 1}, {1, 2}});
    CHECK(m.entries == std::vector<std::vector<char>>{{1, 0}, {1, 1}, {0, 1}});
    CHECK(m.cols() == 2);
    // Rows follow the blocking set; wiretap sets that stick out still contribute their overlap.
    auto partial = build_incidence({2}, {{0, 1}, {1, 2}});
    CHECK(partial.entries == std::vector<std::vector<char>>{{0, 1}});
}

TEST_CASE("covering_lp")
{
    auto pairs = covering_lp(build_incidence({0, 1, 2}, {{0, 1}, {1, 2}}));
    CHECK(pairs.value == ExtRational(BigRational(2)));
    CHECK(pairs.solution == RatVector{1, 1});

    auto single = covering_lp(build_incidence({0}, {{0}}));
    CHECK(single.value == ExtRational(BigRational(1)));
    CHECK(single.solution == RatVector{1});

    auto uncovered = covering_lp(build_incidence({0, 1}, {{0}}));
    CHECK(uncovered.value.is_infinite());
    CHECK(uncovered.solution.empty());

    auto triangle = covering_lp(matrix_from_rows({{1, 0, 1}, {1, 1, 0}, {0, 1, 1}}));
    CHECK(triangle.value == ExtRational(BigRational(3, 2)));
}

TEST_CASE("packing_lp")
{
    auto pairs = packing_lp(build_incidence({0, 1, 2}, {{0, 1}, {1, 2}}));
    CHECK(pairs.value == ExtRational(BigRational(2)));
    // β on J∖{e1,e2} = {e3} and J∖{e2,e3} = {e1}.
    CHECK(pairs.solution == RatVector{1, 1});

    CHECK(packing_lp(build_incidence({0}, {{0}})).value.is_infinite());

    auto uncovered = packing_lp(build_incidence({0, 1, 2}, {{0}}));
    CHECK(uncovered.value == ExtRational(BigRational(1)));
}

TEST_CASE("combinatorics helpers")
{
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(3, 5) == 0);
    CHECK(binomial(13, 3) == 286);
    std::vector<std::size_t> c{0, 1};
    std::size_t count = 1;
    while (next_combination(c, 4)) ++count;
    CHECK(count == 6);
}

TEST_CASE("optimize_over_vertices respects the subset limit")
{
    RatMatrix g = RatMatrix::identity(3);
    RatVector h{0, 0, 0};
    CHECK_THROWS(optimize_over_vertices(g, h, Sense::Minimize, 0));
    auto v = optimize_over_vertices(g, h, Sense::Minimize);
    REQUIRE(v.has_value());
    CHECK(v->objective == 0);
}

TEST_CASE("property: vertex optimum matches grid search and the duality identity")
{
    std::mt19937_64 rng(99);
    std::bernoulli_distribution coin(0.5);
    int finite_pairs = 0;
    for (int trial = 0; trial < 250; ++trial) {
        const std::size_t rows = 1 + trial % 5, d = 1 + (trial / 5) % 3;
        std::vector<std::vector<char>> entries(rows, std::vector<char>(d));
        for (auto& r : entries)
            for (auto& v : r) v = coin(rng);
        auto m = matrix_from_rows(entries);

        auto cover = covering_lp(m);
        auto cover_grid = grid_search(d, Sense::Minimize, [&](const RatVector& x) {
            for (const auto& r : entries) {
                BigRational load = 0;
                for (std::size_t j = 0; j < d; ++j)
                    if (r[j]) load += x[j];
                if (load < 1) return false;
            }
            return true;
        });
        CHECK(cover.value.is_infinite() == !cover_grid.feasible);
        if (cover_grid.feasible) CHECK(cover.value.value() == cover_grid.value);

        auto pack = packing_lp(m);
        bool unbounded = false;
        for (std::size_t j = 0; j < d; ++j) {
            bool empty = true;
            for (const auto& r : entries) empty = empty && r[j];
            unbounded = unbounded || empty;
        }
        CHECK(pack.value.is_infinite() == unbounded);
        if (!unbounded) {
            auto pack_grid = grid_search(d, Sense::Maximize, [&](const RatVector& x) {
                for (const auto& r : entries) {
                    BigRational load = 0;
                    for (std::size_t j = 0; j < d; ++j)
                        if (!r[j]) load += x[j];
                    if (load > 1) return false;
                }
                return true;
            });
            CHECK(pack.value.value() == pack_grid.value);
        }

        if (!cover.value.is_infinite() && !pack.value.is_infinite()) {
            ++finite_pairs;
            const auto& lc = cover.value.value();
            const auto& lp = pack.value.value();
            CHECK(lc * lp == lc + lp);
        }
    }
    CHECK(finite_pairs > 30);
}

TEST_CASE("property: integer fast path agrees with rational elimination")
{
    std::mt19937_64 rng(77);
    for (long magnitude : {1L, 9L, 1L << 19}) {
        std::uniform_int_distribution<long> entry(-magnitude, magnitude);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t d = 1 + trial % 7;
            const std::size_t m = d + 3;
            RatMatrix g(m, d);
            RatVector h(m);
            for (std::size_t r = 0; r < m; ++r) {
                h[r] = entry(rng);
                // Sparse rows make singular subsystems common.
                for (std::size_t c = 0; c < d; ++c) g(r, c) = trial % 3 == 0 && entry(rng) > 0 ? 0 : entry(rng);
            }
            BasisSolver solver(g, h);
            std::vector<std::size_t> basis(d);
            std::iota(basis.begin(), basis.end(), std::size_t{0});
            do {
                RatVector rhs(d);
                for (std::size_t i = 0; i < d; ++i) rhs[i] = h[basis[i]];
                auto expected = try_solve_square(g.select_rows(basis), rhs);
                REQUIRE(solver.solve(basis) == expected.has_value());
                if (!expected) continue;
                CHECK(solver.solution() == *expected);
                CHECK(solver.objective() == sum(*expected));
                CHECK(solver.nonnegative() ==
                      std::all_of(expected->begin(), expected->end(), [](const BigRational& v) { return v >= 0; }));
                auto lhs = g.multiply(*expected);
                bool feasible = true;
                for (std::size_t r = 0; r < m; ++r) {
                    feasible = feasible && lhs[r] >= h[r];
                    CHECK(solver.row_at_least(r, 1) == (lhs[r] >= 1));
                }
                CHECK(solver.feasible() == feasible);
            } while (next_combination(basis, m));
        }
    }
}
