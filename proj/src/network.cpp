#include "wiretap/network.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "wiretap/error.hpp"

namespace wiretap {

std::size_t WiretapNetwork::node_index(const NodeId& id) const
{
    auto it = std::find(nodes.begin(), nodes.end(), id);
    if (it == nodes.end()) throw Error(ErrorCode::UnknownNode, "node '" + id + "'");
    return static_cast<std::size_t>(it - nodes.begin());
}

std::size_t WiretapNetwork::edge_index(const EdgeId& id) const
{
    auto it = std::find_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.id == id; });
    if (it == edges.end()) throw Error(ErrorCode::UnknownEdge, "edge '" + id + "'");
    return static_cast<std::size_t>(it - edges.begin());
}

EdgeSet WiretapNetwork::edge_set(const std::vector<EdgeId>& ids) const
{
    EdgeSet out;
    out.reserve(ids.size());
    for (const auto& id : ids) out.push_back(edge_index(id));
    return canonical(std::move(out));
}

std::vector<EdgeId> WiretapNetwork::edge_ids(const EdgeSet& set) const
{
    std::vector<EdgeId> out;
    out.reserve(set.size());
    for (auto e : set) out.push_back(edges.at(e).id);
    return out;
}

EdgeSet canonical(EdgeSet set)
{
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    return set;
}

bool is_subset(const EdgeSet& small, const EdgeSet& large)
{
    return std::includes(large.begin(), large.end(), small.begin(), small.end());
}

namespace {

struct Arc
{
    std::size_t to;
    std::size_t edge;
};

// Outgoing arcs per node index, skipping removed edges.
std::vector<std::vector<Arc>> adjacency(const WiretapNetwork& net, const EdgeSet& removed)
{
    std::vector<char> gone(net.edges.size(), 0);
    for (auto e : removed) {
        if (e >= net.edges.size()) throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(e));
        gone[e] = 1;
    }
    std::vector<std::vector<Arc>> out(net.nodes.size());
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        if (gone[e]) continue;
        out[net.node_index(net.edges[e].tail)].push_back({net.node_index(net.edges[e].head), e});
    }
    return out;
}

std::vector<char> reachable_from(const std::vector<std::vector<Arc>>& adj, std::size_t start)
{
    std::vector<char> seen(adj.size(), 0);
    std::vector<std::size_t> stack{start};
    seen[start] = 1;
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        for (const auto& a : adj[v])
            if (!seen[a.to]) {
                seen[a.to] = 1;
                stack.push_back(a.to);
            }
    }
    return seen;
}

}  // namespace

void validate(const WiretapNetwork& net)
{
    std::set<NodeId> node_names;
    for (const auto& n : net.nodes)
        if (!node_names.insert(n).second) throw Error(ErrorCode::DuplicateNode, "node '" + n + "'");

    std::set<EdgeId> edge_names;
    for (const auto& e : net.edges) {
        if (!edge_names.insert(e.id).second) throw Error(ErrorCode::DuplicateEdgeId, "edge '" + e.id + "'");
        net.node_index(e.tail);
        net.node_index(e.head);
    }
    net.node_index(net.source);

    // Kahn's algorithm; leftover nodes lie on a cycle.
    std::vector<std::size_t> indegree(net.nodes.size(), 0);
    auto adj = adjacency(net, {});
    for (const auto& arcs : adj)
        for (const auto& a : arcs) ++indegree[a.to];
    std::deque<std::size_t> ready;
    for (std::size_t v = 0; v < indegree.size(); ++v)
        if (indegree[v] == 0) ready.push_back(v);
    std::size_t visited = 0;
    while (!ready.empty()) {
        auto v = ready.front();
        ready.pop_front();
        ++visited;
        for (const auto& a : adj[v])
            if (--indegree[a.to] == 0) ready.push_back(a.to);
    }
    if (visited != net.nodes.size()) throw Error(ErrorCode::CyclicGraph, "directed cycle present");

    if (net.users.empty()) throw Error(ErrorCode::EmptyUsers, "at least one user is required");
    auto seen = reachable_from(adj, net.node_index(net.source));
    std::set<NodeId> user_names;
    for (const auto& u : net.users) {
        if (u == net.source) throw Error(ErrorCode::SourceIsUser, "user '" + u + "' is the source");
        if (!user_names.insert(u).second) throw Error(ErrorCode::DuplicateNode, "user '" + u + "' listed twice");
        if (!seen[net.node_index(u)]) throw Error(ErrorCode::UnreachableUser, "user '" + u + "'");
    }

    std::set<EdgeSet> sets;
    for (const auto& w : net.wiretap_sets) {
        for (auto e : w)
            if (e >= net.edges.size())
                throw Error(ErrorCode::UnknownEdgeInWiretapSet, "edge index " + std::to_string(e));
        if (!sets.insert(canonical(w)).second)
            throw Error(ErrorCode::DuplicateWiretapSet, "wiretap set listed twice");
    }
}

std::size_t min_cut(const WiretapNetwork& net, const EdgeSet& removed, const NodeId& user)
{
    auto it = std::find(net.users.begin(), net.users.end(), user);
    if (it == net.users.end()) throw Error(ErrorCode::UnknownUser, "'" + user + "' is not a user");
    return min_cut(net, removed, static_cast<std::size_t>(it - net.users.begin()));
}

std::size_t min_cut(const WiretapNetwork& net, const EdgeSet& removed, std::size_t user_index)
{
    if (user_index >= net.users.size()) throw Error(ErrorCode::UnknownUser, "user index out of range");
    auto adj = adjacency(net, removed);
    const std::size_t s = net.node_index(net.source);
    const std::size_t t = net.node_index(net.users[user_index]);

    // Residual graph on unit capacities: flow[e] is 0 or 1 for each original edge.
    std::vector<char> flow(net.edges.size(), 0);
    std::vector<std::vector<Arc>> incoming(net.nodes.size());
    for (std::size_t v = 0; v < adj.size(); ++v)
        for (const auto& a : adj[v]) incoming[a.to].push_back({v, a.edge});

    std::size_t value = 0;
    for (;;) {
        // BFS over forward arcs with spare capacity and backward arcs carrying flow.
        struct Step { std::size_t prev; std::size_t edge; bool forward; };
        std::vector<char> seen(net.nodes.size(), 0);
        std::vector<Step> how(net.nodes.size());
        std::deque<std::size_t> queue{s};
        seen[s] = 1;
        while (!queue.empty() && !seen[t]) {
            auto v = queue.front();
            queue.pop_front();
            for (const auto& a : adj[v])
                if (!flow[a.edge] && !seen[a.to]) {
                    seen[a.to] = 1;
                    how[a.to] = {v, a.edge, true};
                    queue.push_back(a.to);
                }
            for (const auto& a : incoming[v])
                if (flow[a.edge] && !seen[a.to]) {
                    seen[a.to] = 1;
                    how[a.to] = {v, a.edge, false};
                    queue.push_back(a.to);
                }
        }
        if (!seen[t]) return value;
        for (auto v = t; v != s; v = how[v].prev) flow[how[v].edge] = how[v].forward ? 1 : 0;
        ++value;
    }
}

bool reaches_user(const WiretapNetwork& net, const EdgeSet& removed, std::size_t user_index)
{
    auto seen = reachable_from(adjacency(net, removed), net.node_index(net.source));
    return seen[net.node_index(net.users.at(user_index))] != 0;
}

bool is_blocking_set(const WiretapNetwork& net, const EdgeSet& edges)
{
    auto seen = reachable_from(adjacency(net, edges), net.node_index(net.source));
    return std::any_of(net.users.begin(), net.users.end(),
                       [&](const NodeId& u) { return !seen[net.node_index(u)]; });
}

std::vector<CutEdgeSet> enumerate_minimal_cuts(const WiretapNetwork& net, const NetworkLimits& limits)
{
    const std::size_t n = net.nodes.size();
    const std::size_t s = net.node_index(net.source);
    if (n - 1 >= 63 || ((std::size_t{1} << (n - 1)) * net.users.size()) > limits.max_cut_candidates)
        throw Error(ErrorCode::InstanceTooLarge,
                    "cut enumeration over " + std::to_string(n) + " nodes exceeds the configured limit");

    std::vector<std::size_t> others;
    for (std::size_t v = 0; v < n; ++v)
        if (v != s) others.push_back(v);

    std::vector<std::size_t> user_nodes;
    for (const auto& u : net.users) user_nodes.push_back(net.node_index(u));

    // Every minimal cut is E_W for W = nodes still reachable after deleting it,
    // so scanning all W ∋ s and filtering is exhaustive.
    // Edge set -> lowest-index user it separates.
    std::map<EdgeSet, std::size_t> found;
    std::vector<char> in_w(n, 0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
        std::fill(in_w.begin(), in_w.end(), 0);
        in_w[s] = 1;
        for (std::size_t i = 0; i < others.size(); ++i)
            if (mask >> i & 1) in_w[others[i]] = 1;
        auto outside = std::find_if(user_nodes.begin(), user_nodes.end(), [&](std::size_t v) { return !in_w[v]; });
        if (outside == user_nodes.end()) continue;
        const auto user = static_cast<std::size_t>(outside - user_nodes.begin());
        EdgeSet crossing;
        for (std::size_t e = 0; e < net.edges.size(); ++e)
            if (in_w[net.node_index(net.edges[e].tail)] && !in_w[net.node_index(net.edges[e].head)])
                crossing.push_back(e);
        auto [it, inserted] = found.emplace(std::move(crossing), user);
        if (!inserted) it->second = std::min(it->second, user);
    }
    std::vector<CutEdgeSet> candidates;
    for (auto& [edges, user] : found) candidates.push_back({user, edges});

    std::vector<CutEdgeSet> minimal;
    for (const auto& c : candidates) {
        bool dominated = std::any_of(candidates.begin(), candidates.end(), [&](const CutEdgeSet& o) {
            return o.edges.size() < c.edges.size() && is_subset(o.edges, c.edges);
        });
        if (!dominated) minimal.push_back(c);
    }
    return minimal;
}

}  // namespace wiretap
