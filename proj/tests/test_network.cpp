#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "fixtures.hpp"
#include "wiretap/error.hpp"
#include "wiretap/network.hpp"

using namespace wiretap;
using namespace wiretap::testing;

namespace {

ErrorCode validation_error(const WiretapNetwork& net)
{
    try {
        validate(net);
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("validation unexpectedly passed");
    return ErrorCode::ParseError;
}

WiretapNetwork path_network()
{
    WiretapNetwork net;
    net.nodes = {"s", "v", "u"};
    net.edges = {{"a", "s", "v"}, {"b", "v", "u"}};
    net.source = "s";
    net.users = {"u"};
    return net;
}

// Every edge subset, checked by reachability alone.
std::vector<EdgeSet> brute_force_cuts(const WiretapNetwork& net)
{
    std::vector<EdgeSet> blocking;
    const std::size_t m = net.edges.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        EdgeSet s;
        for (std::size_t e = 0; e < m; ++e)
            if (mask >> e & 1) s.push_back(e);
        if (is_blocking_set(net, s)) blocking.push_back(s);
    }
    std::vector<EdgeSet> minimal;
    for (const auto& s : blocking) {
        bool has_smaller = std::any_of(blocking.begin(), blocking.end(), [&](const EdgeSet& o) {
            return o.size() < s.size() && is_subset(o, s);
        });
        if (!has_smaller) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end());
    return minimal;
}

// Largest number of edge-disjoint s–u paths, by exhaustive search over path choices.
std::size_t disjoint_path_count(const WiretapNetwork& net, std::size_t user)
{
    std::vector<EdgeSet> paths;
    const auto target = net.users[user];
    std::function<void(const NodeId&, EdgeSet&)> walk = [&](const NodeId& at, EdgeSet& used) {
        if (at == target) {
            paths.push_back(canonical(used));
            return;
        }
        for (std::size_t e = 0; e < net.edges.size(); ++e)
            if (net.edges[e].tail == at) {
                used.push_back(e);
                walk(net.edges[e].head, used);
                used.pop_back();
            }
    };
    EdgeSet used;
    walk(net.source, used);

    std::size_t best = 0;
    std::function<void(std::size_t, std::vector<char>&, std::size_t)> pack = [&](std::size_t i, std::vector<char>& taken,
                                                                                std::size_t count) {
        best = std::max(best, count);
        if (i == paths.size() || count + (paths.size() - i) <= best) return;
        bool free = std::none_of(paths[i].begin(), paths[i].end(), [&](std::size_t e) { return taken[e]; });
        if (free) {
            for (auto e : paths[i]) taken[e] = 1;
            pack(i + 1, taken, count + 1);
            for (auto e : paths[i]) taken[e] = 0;
        }
        pack(i + 1, taken, count);
    };
    std::vector<char> taken(net.edges.size(), 0);
    pack(0, taken, 0);
    return best;
}

}  // namespace

TEST_CASE("validate")
{
    auto net = parallel_edges(3, {{0}});
    CHECK_NOTHROW(validate(net));

    SUBCASE("two-cycle")
    {
        net.edges.push_back({"e4", "u", "s"});
        CHECK(validation_error(net) == ErrorCode::CyclicGraph);
    }
    SUBCASE("unknown wiretap edge")
    {
        net.wiretap_sets = {{8}};
        CHECK(validation_error(net) == ErrorCode::UnknownEdgeInWiretapSet);
    }
    SUBCASE("unreachable user")
    {
        net.nodes.push_back("x");
        net.users.push_back("x");
        CHECK(validation_error(net) == ErrorCode::UnreachableUser);
    }
    SUBCASE("source is a user")
    {
        net.users = {"s"};
        CHECK(validation_error(net) == ErrorCode::SourceIsUser);
    }
    SUBCASE("duplicate wiretap set")
    {
        net.wiretap_sets = {{0, 1}, {0, 1}};
        CHECK(validation_error(net) == ErrorCode::DuplicateWiretapSet);
    }
    SUBCASE("no users")
    {
        net.users.clear();
        CHECK(validation_error(net) == ErrorCode::EmptyUsers);
    }
}

TEST_CASE("min_cut")
{
    auto net = parallel_edges(3);
    CHECK(min_cut(net, {}, "u") == 3);
    CHECK(min_cut(net, {0}, "u") == 2);
    CHECK(min_cut(net, {0, 1, 2}, "u") == 0);
    CHECK(min_cut(butterfly(), {}, "U1") == 2);
    CHECK(min_cut(butterfly(), {}, "U2") == 2);
    CHECK_THROWS_AS(min_cut(net, {}, "s"), Error);
}

TEST_CASE("is_blocking_set")
{
    auto net = parallel_edges(3);
    CHECK(is_blocking_set(net, {0, 1, 2}));
    CHECK_FALSE(is_blocking_set(net, {0, 1}));
    CHECK(is_blocking_set(butterfly(), {0, 1}));
    // Only U1 is cut off: blocking under the at-least-one-user rule.
    CHECK(is_blocking_set(butterfly(), {0, 4}));
    CHECK_FALSE(is_blocking_set(butterfly(), {0}));
}

TEST_CASE("enumerate_minimal_cuts")
{
    auto three = enumerate_minimal_cuts(parallel_edges(3));
    REQUIRE(three.size() == 1);
    CHECK(three[0].edges == EdgeSet{0, 1, 2});

    auto path = enumerate_minimal_cuts(path_network());
    REQUIRE(path.size() == 2);
    CHECK(path[0].edges == EdgeSet{0});
    CHECK(path[1].edges == EdgeSet{1});

    auto fly = butterfly();
    auto cuts = enumerate_minimal_cuts(fly);
    std::vector<EdgeSet> sets;
    for (const auto& c : cuts) sets.push_back(c.edges);
    CHECK(sets == brute_force_cuts(fly));
    CHECK(std::find(sets.begin(), sets.end(), EdgeSet{0, 1}) != sets.end());
    CHECK(std::find(sets.begin(), sets.end(), EdgeSet{0, 4}) != sets.end());

    NetworkLimits tiny{4};
    CHECK_THROWS_AS(enumerate_minimal_cuts(fly, tiny), Error);
}

TEST_CASE("property: cut structure on random DAGs")
{
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 150; ++trial) {
        auto net = random_dag(rng, 6, 9, 0);
        REQUIRE_NOTHROW(validate(net));

        auto cuts = enumerate_minimal_cuts(net);
        std::vector<EdgeSet> sets;
        for (const auto& c : cuts) sets.push_back(c.edges);
        CHECK(sets == brute_force_cuts(net));

        for (const auto& c : cuts) {
            CHECK(is_blocking_set(net, c.edges));
            CHECK_FALSE(reaches_user(net, c.edges, c.user));
            for (std::size_t drop = 0; drop < c.edges.size(); ++drop) {
                EdgeSet smaller = c.edges;
                smaller.erase(smaller.begin() + static_cast<long>(drop));
                CHECK(reaches_user(net, smaller, c.user));
            }
        }

        std::uniform_int_distribution<std::size_t> pick(0, net.edges.size() - 1);
        for (std::size_t u = 0; u < net.users.size(); ++u) {
            if (net.edges.size() <= 10) CHECK(min_cut(net, {}, u) == disjoint_path_count(net, u));
            EdgeSet removed;
            std::size_t previous = min_cut(net, removed, u);
            for (int step = 0; step < 4; ++step) {
                removed = canonical([&] { auto r = removed; r.push_back(pick(rng)); return r; }());
                auto value = min_cut(net, removed, u);
                CHECK(value <= previous);
                CHECK((value == 0) == !reaches_user(net, removed, u));
                previous = value;
            }
        }
    }
}
