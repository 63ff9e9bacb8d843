#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace wiretap {

using NodeId = std::string;
using EdgeId = std::string;

struct Edge
{
    EdgeId id;
    NodeId tail;
    NodeId head;
};

/// Sorted list of positions into WiretapNetwork::edges.
using EdgeSet = std::vector<std::size_t>;

/**
 * Directed acyclic multigraph of unit-capacity channels with a source, a set
 * of users (sinks), and the collection of edge sets an adversary may observe.
 *
 * Edges are referred to by their position in `edges`; the string ids are only
 * used at the file boundary.
 */
struct WiretapNetwork
{
    std::vector<NodeId> nodes;
    std::vector<Edge> edges;
    NodeId source;
    std::vector<NodeId> users;
    std::vector<EdgeSet> wiretap_sets;

    std::size_t node_index(const NodeId& id) const;
    std::size_t edge_index(const EdgeId& id) const;
    EdgeSet edge_set(const std::vector<EdgeId>& ids) const;
    std::vector<EdgeId> edge_ids(const EdgeSet& set) const;
};

/// An inclusion-minimal source–user edge cut, tagged with one user it separates.
struct CutEdgeSet
{
    std::size_t user;  // index into WiretapNetwork::users
    EdgeSet edges;

    friend bool operator==(const CutEdgeSet&, const CutEdgeSet&) = default;
};

struct NetworkLimits
{
    std::size_t max_cut_candidates = std::size_t{1} << 20;
};

/// Throws Error with the violated invariant's code; returns normally otherwise.
void validate(const WiretapNetwork& net);

/// Unit-capacity max-flow from the source to `user` after deleting `removed`.
std::size_t min_cut(const WiretapNetwork& net, const EdgeSet& removed, const NodeId& user);
std::size_t min_cut(const WiretapNetwork& net, const EdgeSet& removed, std::size_t user_index);

/// True iff the source can still reach `user_index` once `removed` is deleted.
bool reaches_user(const WiretapNetwork& net, const EdgeSet& removed, std::size_t user_index);

/// Deleting the set disconnects the source from at least one user.
bool is_blocking_set(const WiretapNetwork& net, const EdgeSet& edges);

std::vector<CutEdgeSet> enumerate_minimal_cuts(const WiretapNetwork& net, const NetworkLimits& limits = {});

/// Sorts and removes duplicates.
EdgeSet canonical(EdgeSet set);

bool is_subset(const EdgeSet& small, const EdgeSet& large);

}  // namespace wiretap
