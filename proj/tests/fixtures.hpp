#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "wiretap/finite_field.hpp"
#include "wiretap/network.hpp"

namespace wiretap::testing {

inline std::string edge_name(std::size_t i) { return "e" + std::to_string(i + 1); }

/// n parallel channels s→u named e1..en.
inline WiretapNetwork parallel_edges(std::size_t n, std::vector<EdgeSet> wiretaps = {})
{
    WiretapNetwork net;
    net.nodes = {"s", "u"};
    for (std::size_t i = 0; i < n; ++i) net.edges.push_back({edge_name(i), "s", "u"});
    net.source = "s";
    net.users = {"u"};
    net.wiretap_sets = std::move(wiretaps);
    return net;
}

/// All r-subsets of {0..n-1} in lexicographic order.
inline std::vector<EdgeSet> all_subsets_of_size(std::size_t n, std::size_t r)
{
    std::vector<EdgeSet> out;
    std::vector<char> pick(n, 0);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(r), 1);
    do {
        EdgeSet s;
        for (std::size_t i = 0; i < n; ++i)
            if (pick[i]) s.push_back(i);
        out.push_back(s);
    } while (std::prev_permutation(pick.begin(), pick.end()));
    return out;
}

/// Three parallel edges with wiretap sets {e1,e2} and {e2,e3}.
inline WiretapNetwork overlapping_pairs() { return parallel_edges(3, {{0, 1}, {1, 2}}); }

/// Butterfly: S→A e1, S→B e2, A→U1 e3, A→C e4, B→C e5, B→U2 e6, C→D e7, D→U1 e8, D→U2 e9.
inline WiretapNetwork butterfly(std::vector<EdgeSet> wiretaps = {})
{
    WiretapNetwork net;
    net.nodes = {"S", "A", "B", "C", "D", "U1", "U2"};
    net.edges = {{"e1", "S", "A"}, {"e2", "S", "B"}, {"e3", "A", "U1"}, {"e4", "A", "C"}, {"e5", "B", "C"},
                 {"e6", "B", "U2"}, {"e7", "C", "D"}, {"e8", "D", "U1"}, {"e9", "D", "U2"}};
    net.source = "S";
    net.users = {"U1", "U2"};
    net.wiretap_sets = std::move(wiretaps);
    return net;
}

/// Wiretap collection {{e1},{e3},{e5,e6},{e5,e7},{e6,e7}} on the butterfly.
inline std::vector<EdgeSet> butterfly_wiretaps() { return {{0}, {2}, {4, 5}, {4, 6}, {5, 6}}; }

/**
 * Random DAG: nodes v0..v{n-1} in topological order, v0 the source, edges
 * only from lower to higher index (parallel edges allowed), users drawn from
 * nodes reachable from v0, and up to `max_wiretaps` distinct nonempty wiretap sets.
 */
inline WiretapNetwork random_dag(std::mt19937_64& rng, std::size_t max_nodes, std::size_t max_edges,
                                 std::size_t max_wiretaps)
{
    for (;;) {
        std::uniform_int_distribution<std::size_t> node_count(2, max_nodes);
        const std::size_t n = node_count(rng);
        std::uniform_int_distribution<std::size_t> edge_count(std::min(n, max_edges), max_edges);
        const std::size_t m = edge_count(rng);

        WiretapNetwork net;
        for (std::size_t v = 0; v < n; ++v) net.nodes.push_back("v" + std::to_string(v));
        net.source = "v0";
        std::uniform_int_distribution<std::size_t> pick(0, n - 1);
        for (std::size_t e = 0; e < m; ++e) {
            std::size_t a = pick(rng), b = pick(rng);
            while (a == b) b = pick(rng);
            if (a > b) std::swap(a, b);
            net.edges.push_back({edge_name(e), net.nodes[a], net.nodes[b]});
        }

        std::vector<std::size_t> reachable;
        for (std::size_t v = 1; v < n; ++v) {
            WiretapNetwork probe = net;
            probe.users = {net.nodes[v]};
            if (reaches_user(probe, {}, 0)) reachable.push_back(v);
        }
        if (reachable.empty()) continue;
        std::shuffle(reachable.begin(), reachable.end(), rng);
        std::uniform_int_distribution<std::size_t> user_count(1, std::min<std::size_t>(2, reachable.size()));
        const std::size_t k = user_count(rng);
        for (std::size_t i = 0; i < k; ++i) net.users.push_back(net.nodes[reachable[i]]);

        // Mostly small wiretap sets, so bounded positive τ is common; d = 0 stays possible.
        std::uniform_int_distribution<std::size_t> wiretap_count(0, max_wiretaps);
        std::size_t d = wiretap_count(rng);
        if (d == 0 && std::bernoulli_distribution(0.7)(rng)) d = max_wiretaps;
        std::uniform_int_distribution<std::size_t> set_size(1, std::max<std::size_t>(1, (m + 1) / 2));
        std::vector<std::size_t> all(m);
        std::iota(all.begin(), all.end(), std::size_t{0});
        for (std::size_t i = 0; i < d; ++i) {
            std::shuffle(all.begin(), all.end(), rng);
            EdgeSet set(all.begin(), all.begin() + static_cast<long>(set_size(rng)));
            std::sort(set.begin(), set.end());
            if (std::find(net.wiretap_sets.begin(), net.wiretap_sets.end(), set) == net.wiretap_sets.end())
                net.wiretap_sets.push_back(set);
        }
        return net;
    }
}

/// Point-to-point instance with h parallel edges and 1..max_wiretaps distinct wiretap sets.
inline WiretapNetwork random_point_to_point(std::mt19937_64& rng, std::size_t max_edges, std::size_t max_wiretaps)
{
    std::uniform_int_distribution<std::size_t> edge_count(1, max_edges);
    const std::size_t h = edge_count(rng);
    auto net = parallel_edges(h);
    std::uniform_int_distribution<std::size_t> wiretap_count(1, max_wiretaps);
    const std::size_t d = wiretap_count(rng);
    std::bernoulli_distribution coin(0.45);
    for (std::size_t i = 0; i < d; ++i) {
        EdgeSet set;
        for (std::size_t e = 0; e < h; ++e)
            if (coin(rng)) set.push_back(e);
        if (set.empty()) set.push_back(std::uniform_int_distribution<std::size_t>(0, h - 1)(rng));
        if (std::find(net.wiretap_sets.begin(), net.wiretap_sets.end(), set) == net.wiretap_sets.end())
            net.wiretap_sets.push_back(set);
    }
    return net;
}

/// Calls f on every vector of GF(q)^n, first coordinate fastest.
inline void for_each_vector(std::size_t n, std::uint64_t q, auto&& f)
{
    FieldVector v(n, 0);
    for (;;) {
        f(v);
        std::size_t i = 0;
        while (i < n && ++v[i] == q) v[i++] = 0;
        if (i == n) return;
    }
}

}  // namespace wiretap::testing
