#pragma once

#include "ugts/morphism.hpp"

namespace ugts {

/// Pushout of two partial morphisms with a shared source. The object is built
/// from the valid equivalence classes over the disjoint union of the two
/// targets; left_inj/right_inj send each target element to its class when that
/// class is valid and are undefined otherwise.
struct PushoutResult {
    Hypergraph object;
    PartialMorphism left_inj;   // target(phi) -> object
    PartialMorphism right_inj;  // target(psi) -> object
};

/// Total construction; pushouts always exist in this category.
PushoutResult pushout(const PartialMorphism& phi, const PartialMorphism& psi);

/// True iff candidate is the pushout of (phi, psi): isomorphic to the
/// constructed object compatibly with both injections.
bool is_pushout(const PartialMorphism& phi, const PartialMorphism& psi,
                const PushoutResult& candidate);

/// Unique morphism object -> X factoring a commuting cospan (to_left from
/// target(phi), to_right from target(psi)) through the pushout. Returns
/// nullopt when no such morphism exists.
std::optional<PartialMorphism> mediating_morphism(const PushoutResult& po,
                                                  const PartialMorphism& to_left,
                                                  const PartialMorphism& to_right);

struct PocResult {
    Hypergraph complement;
    PartialMorphism match;  // source(delta) -> complement, total injective
    PartialMorphism glue;   // complement -> host of the comatch
};

/// All minimal pushout complements of (delta : A -> B, comatch : B -> G) with a
/// total injective match of A. Each result's square is certified via
/// is_pushout; results are pairwise incomparable under the subgraph ordering.
/// When path_bound is set, complements beyond the bound are dropped before any
/// minimization. Empty when no complement exists.
std::vector<PocResult> minimal_pushout_complements(const PartialMorphism& delta,
                                                   const PartialMorphism& comatch,
                                                   std::optional<PathBound> path_bound = {});

}  // namespace ugts
