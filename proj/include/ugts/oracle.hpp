#pragma once

#include "ugts/order.hpp"
#include "ugts/rules.hpp"

namespace ugts {

/// Bounds for exhaustive enumeration. The effective element bound
/// (max_elements when set, max_nodes + max_edges otherwise) must stay <= 8.
struct EnumBounds {
    int max_nodes = 0;
    int max_edges = 0;
    std::optional<int> max_elements;
    std::optional<PathBound> path_bound;
    int effective_elements() const {
        return max_elements ? *max_elements : max_nodes + max_edges;
    }
};

/// One representative per isomorphism class of valid graphs within the bounds,
/// in a deterministic order (nodes first, then edges in label/endpoint order).
/// Throws std::invalid_argument when the bounds exceed the enumeration guard.
std::vector<Hypergraph> enumerate_graphs(const Signature& sig, const EnumBounds& b);

struct ForwardEntry {
    Hypergraph host;
    std::vector<Hypergraph> successors;  // one rewrite step, every applicable pair
};

/// Forward closure of the enumeration: every host together with all of its
/// one-step successors under the given rules.
std::vector<ForwardEntry> forward_successors(const std::vector<UQRule>& rules,
                                             const Signature& sig, const EnumBounds& b);

/// Brute-force predecessor set of the upward closure of g: all enumerated
/// hosts with a one-step successor covering g.
std::vector<Hypergraph> pred_oracle(const std::vector<UQRule>& rules, const Hypergraph& g,
                                    const Signature& sig, const EnumBounds& b);

}  // namespace ugts
