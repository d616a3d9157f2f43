#pragma once

#include "ugts/morphism.hpp"

namespace ugts {

/// Antichain of minimal representatives of an upward-closed set under the
/// subgraph ordering: members pairwise incomparable, no two isomorphic.
struct Basis {
    std::vector<Hypergraph> members;
    size_t size() const { return members.size(); }
};

/// Minimal representatives of the input's upward closure. Deterministic given
/// the input order: isomorphic duplicates keep the earliest graph, survivors
/// keep their relative order.
Basis minimize(const std::vector<Hypergraph>& graphs);

/// True iff some member is below g, i.e. g lies in the represented
/// upward-closed set.
bool represented(const Hypergraph& g, const Basis& basis);

}  // namespace ugts
