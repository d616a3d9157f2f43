#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ugts {

using NodeId = int;
using EdgeId = int;
using LabelId = int;

/// Edge alphabet: label names with a fixed arity per label (arity 0 permitted).
class Signature {
public:
    LabelId add_label(std::string name, int arity);
    std::optional<LabelId> find(std::string_view name) const;
    int arity(LabelId label) const { return arities_[static_cast<size_t>(label)]; }
    const std::string& name(LabelId label) const { return names_[static_cast<size_t>(label)]; }
    int label_count() const { return static_cast<int>(names_.size()); }
    bool operator==(const Signature&) const = default;

private:
    std::vector<std::string> names_;
    std::vector<int> arities_;
};

/// Bound k on the length of simple undirected paths.
struct PathBound {
    int k = 0;
};

struct Edge {
    LabelId label = 0;
    std::vector<NodeId> nodes;  // connection sequence; length must equal the label arity
    auto operator<=>(const Edge&) const = default;
};

/// Finite labeled hypergraph. Nodes are 0..node_count-1, edges 0..edge_count-1;
/// identifiers are local to the graph and carry no meaning across graphs.
/// Immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int node_count, std::vector<Edge> edges);

    int node_count() const { return node_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int element_count() const { return node_count_ + edge_count(); }
    bool empty() const { return element_count() == 0; }
    const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
    const std::vector<Edge>& edges() const { return edges_; }

    /// Edges whose connection sequence mentions v (each edge listed once).
    const std::vector<EdgeId>& incident_edges(NodeId v) const {
        return incidence_[static_cast<size_t>(v)];
    }
    /// Number of occurrences of v over all connection sequences.
    int degree(NodeId v) const { return degrees_[static_cast<size_t>(v)]; }

    bool operator==(const Hypergraph& other) const {
        return node_count_ == other.node_count_ && edges_ == other.edges_;
    }

private:
    int node_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
    std::vector<int> degrees_;
};

struct Violation {
    std::string message;
};

/// Checks the graph invariants against a signature: known labels, arity of each
/// connection sequence, endpoints inside the node range. Returns one violation
/// per offense, empty if the graph is valid.
std::vector<Violation> validate_graph(const Hypergraph& g, const Signature& sig);
bool is_valid(const Hypergraph& g, const Signature& sig);

/// Length (edge count) of the longest simple undirected path: an alternating
/// node/edge sequence with all nodes and edges pairwise distinct where
/// consecutive nodes are incident to the edge between them.
int longest_simple_path(const Hypergraph& g);

/// True iff no simple undirected path is longer than bound.k edges.
bool within_path_bound(const Hypergraph& g, PathBound bound);

/// Isomorphism-invariant fingerprint built from the multiset of
/// (label, endpoint-degree-sequence) tuples plus node data. Collisions are
/// possible; callers use it only to bucket candidates before real checks.
std::uint64_t canonical_hash(const Hypergraph& g);

/// Sorted (label, count) histogram of edge labels.
std::vector<std::pair<LabelId, int>> label_counts(const Hypergraph& g);

/// True iff every label count in a is <= the matching count in b.
bool label_counts_leq(const std::vector<std::pair<LabelId, int>>& a,
                      const std::vector<std::pair<LabelId, int>>& b);

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// Deterministic relabeling such that isomorphic graphs produce identical
/// values. Exact for graphs with at most 8 nodes (permutation search within
/// degree-signature cells); beyond that the order falls back to the signature
/// sort alone and is only deterministic per input.
Hypergraph canonical_form(const Hypergraph& g);

}  // namespace ugts
