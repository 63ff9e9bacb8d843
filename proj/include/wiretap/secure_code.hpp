#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wiretap/finite_field.hpp"
#include "wiretap/network.hpp"
#include "wiretap/rational.hpp"

namespace wiretap {

/// Optimal per-edge rates of a point-to-point instance.
struct RateProfile
{
    RatVector y_star;            // dual optimum, indexed by edge position
    std::size_t g = 0;           // key length: lcm of y* denominators
    std::vector<std::size_t> w;  // w_i = g·y*_i
    std::size_t w_total = 0;     // message length Σw_i − g
    std::size_t w_max = 0;
    EdgeSet tight_set;           // wiretap set with Σ w_i = g; carries the raw key
    std::vector<EdgeSet> wiretap_columns;  // pruned wiretap sets the LP was solved over

    /// H(K)/H(M) achieved by a code with these rates: g / w_total.
    BigRational key_ratio() const;
};

/**
 * Linear map (m, k) ↦ (A_e m + B_e k)_e over GF(q), one block per edge.
 * The distribution oracle and the rank test work on this form.
 */
struct LinearScheme
{
    std::uint64_t q = 2;
    std::size_t message_dim = 0;
    std::size_t key_dim = 0;
    std::vector<EdgeId> edges;
    std::vector<FieldMatrix> message_part;  // w_e × message_dim
    std::vector<FieldMatrix> key_part;      // w_e × key_dim

    std::size_t edge_position(const EdgeId& id) const;
};

/**
 * Secure linear code for a point-to-point network. `edge_order` lists the
 * message-bearing edges (ascending network order) followed by the tight-set
 * edges; `w` and `B` follow the same order. Zero-rate edges stay in the order
 * with an empty B and transmit only padding.
 */
struct CodeSpec
{
    std::uint64_t q = 2;
    std::size_t g = 0;
    std::vector<EdgeId> edge_order;
    std::vector<std::size_t> w;
    std::vector<EdgeId> tight_set;
    std::vector<FieldMatrix> B;
    RatVector y_star;  // aligned with edge_order

    std::size_t h() const noexcept { return edge_order.size(); }
    std::size_t w_total() const;
    std::size_t w_max() const;
    bool in_tight_set(std::size_t position) const;
    /// Offset of each message-bearing edge's block inside m.
    std::vector<std::size_t> message_offsets() const;

    LinearScheme scheme() const;
};

/// Throws NotPointToPoint unless there is one user and every edge runs source → user.
void require_point_to_point(const WiretapNetwork& net);

RateProfile derive_rates(const WiretapNetwork& net);

/// Called after each message-bearing edge is assigned, with that edge's
/// position in edge_order and the partial key-kernel stack T_i for every wiretap column.
using ConstructionObserver = std::function<void(std::size_t position, const std::vector<FieldMatrix>& partial)>;

CodeSpec construct_code(const WiretapNetwork& net, const RateProfile& rate, std::uint64_t q,
                        const ConstructionObserver& observer = {});

/// Default field: smallest prime strictly above the number of pruned wiretap sets.
std::uint64_t default_field_size(const WiretapNetwork& net);

/// One codeword per edge of edge_order, zero-padded to w_max.
std::vector<FieldVector> encode(const CodeSpec& code, const FieldVector& message, const FieldVector& key);
FieldVector decode(const CodeSpec& code, const std::vector<FieldVector>& codewords);

struct WiretapSecurity
{
    EdgeSet wiretap;
    std::size_t key_rank = 0;
    std::size_t observed_rows = 0;
    bool combined_full_rank = false;
    bool secure = false;
};

/// Rank test per wiretap set: rank(T_I) = Σ_{e∈I} w_e, with rank(C) = row(C).
std::vector<WiretapSecurity> security_by_rank(const CodeSpec& code, const WiretapNetwork& net);
bool verify_security_rank(const CodeSpec& code, const WiretapNetwork& net);

/**
 * Exhaustive check of the observed symbols' independence from M, with M and
 * K uniform. Returns 0 exactly when every conditional distribution of the
 * observation given m is the same; otherwise the mean total-variation
 * distance Σ_m P(m)·½Σ_y |P(y|m) − P(y)| (a diagnostic, not an entropy).
 */
BigRational mutual_information_oracle(const LinearScheme& scheme, const std::vector<EdgeId>& wiretap,
                                      std::size_t max_outcomes = std::size_t{1} << 20);
BigRational mutual_information_oracle(const CodeSpec& code, const std::vector<EdgeId>& wiretap,
                                      std::size_t max_outcomes = std::size_t{1} << 20);

}  // namespace wiretap
