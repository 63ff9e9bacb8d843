#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wiretap/lp.hpp"
#include "wiretap/network.hpp"
#include "wiretap/rational.hpp"

namespace wiretap {

/// Drops duplicates and every set contained in another; output sorted.
std::vector<EdgeSet> prune_wiretap_antichain(std::vector<EdgeSet> sets);

struct MessageBoundReport
{
    struct Row
    {
        std::size_t wiretap;   // index into net.wiretap_sets
        std::size_t residual;  // min over users of mincut(ℰ∖I)
        std::size_t user;      // first user attaining it
    };

    /// H(M) <= bound_logq · log q.
    std::size_t bound_logq = 0;
    std::optional<std::size_t> witness_wiretap;
    std::vector<Row> per_wiretap;
};

/// min over wiretap sets I and users u of mincut(ℰ∖I); plain min-cut when there are no wiretap sets.
MessageBoundReport message_upper_bound(const WiretapNetwork& net);

/// l ↦ l/(l−1), the covering/packing optimum conversion. Requires l > 1.
BigRational duality_convert(const BigRational& l);

enum class Method { Brute, Algo1 };
enum class SolutionKind { Covering, Packing };

struct KeyBoundReport
{
    ExtRational tau;  // infinite: some wiretap set contains a full cut
    ExtRational l_C;
    ExtRational l_P;
    EdgeSet witness_blocking_set;
    RatVector witness_solution;
    SolutionKind solution_kind = SolutionKind::Covering;
    Method method = Method::Brute;
    /// Wiretap sets after pruning; witness_solution is indexed by this list.
    std::vector<EdgeSet> wiretap_columns;
};

struct BoundLimits
{
    std::size_t max_cut_candidates = std::size_t{1} << 20;
    std::size_t max_submatrices = 10'000'000;
};

/// Both LP optima for one blocking set.
struct CutBound
{
    LpSolution covering;
    LpSolution packing;
    ExtRational tau;
};

/// τ(J) from the covering LP; columns are every given wiretap set (entries e ∈ I).
CutBound bound_for_blocking_set(const EdgeSet& blocking_set, const std::vector<EdgeSet>& wiretap_sets);

/// τ = max over minimal cuts J of τ(J), solving both LPs on each cut.
KeyBoundReport tau_bruteforce(const WiretapNetwork& net, const BoundLimits& limits = {});

/// τ via d×d submatrices of the incidence matrix stacked on the identity.
KeyBoundReport tau_algorithm1(const WiretapNetwork& net, const BoundLimits& limits = {});

}  // namespace wiretap
