#pragma once

#include "ugts/hypergraph.hpp"

namespace ugts {

/// Deterministic DOT rendering: round nodes, binary edges as labeled arrows,
/// unary edges as node annotations, other arities as square label nodes with
/// numbered tentacles.
std::string render_dot(const Hypergraph& g, const Signature& sig);

}  // namespace ugts
