#pragma once

#include <map>
#include <string>

#include "ugts/pushout.hpp"

namespace ugts {

/// Rewriting rule: a partial morphism from the left side to the right side.
/// Unmapped left elements are deleted, right elements without preimage created.
struct Rule {
    Hypergraph lhs;
    Hypergraph rhs;
    PartialMorphism morphism;  // lhs -> rhs
};

/// Universal quantification attached to a rule: p extends the left side
/// (total injective) and q rewrites the extended pattern. q must preserve the
/// embedded original left side element-wise, each image with exactly one
/// preimage.
struct Quantification {
    PartialMorphism p;  // lhs -> extended pattern, total injective
    PartialMorphism q;  // extended pattern -> extended replacement
};

struct UQRule {
    std::string name;
    Rule base;
    std::vector<Quantification> quants;
};

/// Rule derived by gluing quantification copies onto the base rule; identified
/// by how often each quantification was used.
struct Instantiation {
    PartialMorphism pi;      // lhs -> extended lhs, total injective
    PartialMorphism gamma;   // extended lhs -> extended rhs
    std::vector<int> counts; // uses per quantification
    const Hypergraph& lhs_ext() const { return pi.target(); }
    const Hypergraph& rhs_ext() const { return gamma.target(); }
    int length() const;
};

/// One instantiation step together with the embeddings of the previous
/// extended sides into the new ones.
struct InstantiationStep {
    Instantiation inst;
    PartialMorphism lhs_embed;  // previous extended lhs -> new extended lhs (total injective)
    PartialMorphism rhs_embed;  // previous extended rhs -> new extended rhs
};

std::vector<Violation> validate_rule(const UQRule& rho);

/// Nodes of the rule's left side owning at least one quantification-only edge.
std::vector<NodeId> quantified_nodes(const UQRule& rho, const Quantification& u);
std::vector<NodeId> quantified_nodes(const UQRule& rho);

/// The zero-length instantiation: identity on the left side, the base morphism.
Instantiation base_instantiation(const UQRule& rho);

/// Extends an instantiation by one use of quantification quant_index via the
/// two pushouts and the mediating morphism.
InstantiationStep instantiation_step(const UQRule& rho, const Instantiation& inst, int quant_index);

/// Instantiation for the given per-quantification counts (canonical step order).
Instantiation instantiate(const UQRule& rho, const std::vector<int>& counts);

/// Instantiation built along an explicit sequence of quantification indices.
Instantiation instantiate_sequence(const UQRule& rho, const std::vector<int>& order);

/// Upper bound on instantiation lengths needed for a backward step against g:
/// 0 when quantifications cannot change the right side, |V_g| when every
/// quantification-created edge hangs on a created node, |V_g|+|E_g| otherwise.
int instantiation_bound(const UQRule& rho, const Hypergraph& g);

/// Neighbourhood totality: no host edge incident to the image of a quantified
/// node may lack a preimage under the match.
bool satisfies_application_condition(const UQRule& rho, const Instantiation& inst,
                                     const PartialMorphism& match);

/// All (instantiation, total injective match) pairs applicable to g.
std::vector<std::pair<Instantiation, PartialMorphism>> applicable_instances(const UQRule& rho,
                                                                            const Hypergraph& g);

/// Rewrites the match target; requires an applicable pair.
Hypergraph apply_instance(const UQRule& rho, const Instantiation& inst,
                          const PartialMorphism& match);

/// True when a pair of compatible isomorphisms between the extended sides
/// commutes with both instantiations.
bool instantiations_isomorphic(const Instantiation& a, const Instantiation& b);

/// Cache of instantiations per count vector. Count vectors are unique up to
/// isomorphism, so cached values are exact under the canonical step order.
class InstantiationMemo {
public:
    explicit InstantiationMemo(const UQRule& rho) : rule_(&rho) {}
    const Instantiation& get(const std::vector<int>& counts);

private:
    const UQRule* rule_;
    std::map<std::vector<int>, Instantiation> memo_;
};

}  // namespace ugts
