#pragma once

#include <cstddef>
#include <unordered_map>

#include "ugts/hypergraph.hpp"

namespace ugts {

/// Partial structure-preserving map between hypergraphs: mapped edges keep
/// their label and map their connection sequence pointwise, and a mapped edge
/// forces all its incident nodes to be mapped. Matches are the total injective
/// case; subgraph witnesses the partial injective surjective case.
class PartialMorphism {
public:
    PartialMorphism() = default;
    PartialMorphism(Hypergraph source, Hypergraph target);
    static PartialMorphism identity(const Hypergraph& g);

    const Hypergraph& source() const { return source_; }
    const Hypergraph& target() const { return target_; }

    bool node_defined(NodeId v) const { return node_map_[static_cast<size_t>(v)] >= 0; }
    bool edge_defined(EdgeId e) const { return edge_map_[static_cast<size_t>(e)] >= 0; }
    std::optional<NodeId> node_image(NodeId v) const;
    std::optional<EdgeId> edge_image(EdgeId e) const;

    void map_node(NodeId from, NodeId to);
    void map_edge(EdgeId from, EdgeId to);

    const std::vector<int>& node_map() const { return node_map_; }  // -1 = undefined
    const std::vector<int>& edge_map() const { return edge_map_; }

    /// Morphism laws: ranges, label preservation, pointwise connection images.
    bool is_valid() const;
    bool is_total() const;
    bool is_injective() const;
    bool is_surjective() const;

    /// Same source, target and maps.
    bool same_mapping(const PartialMorphism& other) const;

private:
    Hypergraph source_;
    Hypergraph target_;
    std::vector<int> node_map_;
    std::vector<int> edge_map_;
};

/// Apply f first, then g. Defined exactly where both stages are defined.
/// Throws std::invalid_argument unless f's target equals g's source.
PartialMorphism compose(const PartialMorphism& f, const PartialMorphism& g);

/// All total injective morphisms pattern -> host, in a deterministic order.
std::vector<PartialMorphism> enumerate_matches(const Hypergraph& pattern, const Hypergraph& host);

/// All label/connection-preserving bijections g -> h.
std::vector<PartialMorphism> enumerate_isomorphisms(const Hypergraph& g, const Hypergraph& h);

/// First isomorphism witness if one exists.
std::optional<PartialMorphism> isomorphic(const Hypergraph& g, const Hypergraph& h);

struct SubgraphQuotient {
    PartialMorphism witness;  // g -> rep: partial, injective, surjective
    Hypergraph rep;
};

/// One (witness, representative) pair per isomorphism class of subgraphs of g,
/// where a subgraph keeps a node subset and a subset of the edges whose
/// endpoints survive. Includes the identity class and the empty class.
std::vector<SubgraphQuotient> enumerate_subgraph_quotients(const Hypergraph& g);

/// Subgraph ordering test: a witness g2 -> g1 (partial injective surjective)
/// iff g1 can be obtained from g2 by node and edge deletions.
std::optional<PartialMorphism> subgraph_leq(const Hypergraph& g1, const Hypergraph& g2);

/// Partial inverse of a total injective morphism: defined exactly on the
/// image, hence injective and surjective (a subgraph witness).
PartialMorphism inverse_witness(const PartialMorphism& embedding);

/// Set of graphs up to isomorphism, bucketed by canonical hash.
class CanonicalSet {
public:
    /// Returns true if the graph was new.
    bool insert(const Hypergraph& g);
    bool contains(const Hypergraph& g) const;
    size_t size() const { return size_; }

private:
    std::unordered_map<std::uint64_t, std::vector<Hypergraph>> buckets_;
    size_t size_ = 0;
};

}  // namespace ugts
