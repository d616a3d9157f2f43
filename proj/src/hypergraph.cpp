#include "ugts/hypergraph.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace ugts {

LabelId Signature::add_label(std::string name, int arity) {
    if (arity < 0) throw std::invalid_argument("negative arity for label " + name);
    if (find(name)) throw std::invalid_argument("duplicate label " + name);
    names_.push_back(std::move(name));
    arities_.push_back(arity);
    return static_cast<LabelId>(names_.size()) - 1;
}

std::optional<LabelId> Signature::find(std::string_view name) const {
    for (size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<LabelId>(i);
    return std::nullopt;
}

Hypergraph::Hypergraph(int node_count, std::vector<Edge> edges)
    : node_count_(node_count), edges_(std::move(edges)) {
    incidence_.resize(static_cast<size_t>(node_count_));
    degrees_.assign(static_cast<size_t>(node_count_), 0);
    for (EdgeId e = 0; e < edge_count(); ++e) {
        for (NodeId v : edges_[static_cast<size_t>(e)].nodes) {
            if (v < 0 || v >= node_count_) continue;  // tolerated here, reported by validate_graph
            degrees_[static_cast<size_t>(v)]++;
            auto& inc = incidence_[static_cast<size_t>(v)];
            if (inc.empty() || inc.back() != e) inc.push_back(e);
        }
    }
}

std::vector<Violation> validate_graph(const Hypergraph& g, const Signature& sig) {
    std::vector<Violation> out;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (edge.label < 0 || edge.label >= sig.label_count()) {
            out.push_back({"edge " + std::to_string(e) + ": unknown label id " +
                           std::to_string(edge.label)});
            continue;
        }
        int want = sig.arity(edge.label);
        if (static_cast<int>(edge.nodes.size()) != want) {
            out.push_back({"edge " + std::to_string(e) + ": arity mismatch for label " +
                           sig.name(edge.label) + " (expected " + std::to_string(want) + ", got " +
                           std::to_string(edge.nodes.size()) + ")"});
        }
        for (NodeId v : edge.nodes) {
            if (v < 0 || v >= g.node_count()) {
                out.push_back({"edge " + std::to_string(e) + ": dangling endpoint " +
                               std::to_string(v)});
            }
        }
    }
    return out;
}

bool is_valid(const Hypergraph& g, const Signature& sig) {
    return validate_graph(g, sig).empty();
}

namespace {

// DFS over alternating node/edge sequences; returns as soon as a path longer
// than `limit` is found (limit < 0 means "find the true maximum").
struct PathSearch {
    const Hypergraph& g;
    std::vector<char> node_used;
    std::vector<char> edge_used;
    int limit;
    int best = 0;
    bool exceeded = false;

    PathSearch(const Hypergraph& graph, int lim)
        : g(graph),
          node_used(static_cast<size_t>(graph.node_count()), 0),
          edge_used(static_cast<size_t>(graph.edge_count()), 0),
          limit(lim) {}

    void dfs(NodeId v, int len) {
        best = std::max(best, len);
        if (limit >= 0 && len > limit) {
            exceeded = true;
            return;
        }
        for (EdgeId e : g.incident_edges(v)) {
            if (edge_used[static_cast<size_t>(e)]) continue;
            for (NodeId w : g.edge(e).nodes) {
                if (w == v || w < 0 || w >= g.node_count()) continue;
                if (node_used[static_cast<size_t>(w)]) continue;
                edge_used[static_cast<size_t>(e)] = 1;
                node_used[static_cast<size_t>(w)] = 1;
                dfs(w, len + 1);
                node_used[static_cast<size_t>(w)] = 0;
                edge_used[static_cast<size_t>(e)] = 0;
                if (exceeded) return;
            }
            if (exceeded) return;
        }
    }

    int run() {
        for (NodeId v = 0; v < g.node_count(); ++v) {
            node_used[static_cast<size_t>(v)] = 1;
            dfs(v, 0);
            node_used[static_cast<size_t>(v)] = 0;
            if (exceeded) break;
        }
        return best;
    }
};

}  // namespace

int longest_simple_path(const Hypergraph& g) {
    PathSearch search(g, -1);
    return search.run();
}

bool within_path_bound(const Hypergraph& g, PathBound bound) {
    PathSearch search(g, bound.k);
    search.run();
    return !search.exceeded;
}

namespace {

std::uint64_t hash_mix(std::uint64_t h, std::uint64_t v) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

std::uint64_t canonical_hash(const Hypergraph& g) {
    std::vector<std::vector<std::uint64_t>> tuples;
    tuples.reserve(static_cast<size_t>(g.edge_count()));
    for (const Edge& e : g.edges()) {
        std::vector<std::uint64_t> t;
        t.push_back(static_cast<std::uint64_t>(e.label) + 1);
        for (NodeId v : e.nodes)
            t.push_back((v >= 0 && v < g.node_count())
                            ? static_cast<std::uint64_t>(g.degree(v))
                            : ~0ULL);
        tuples.push_back(std::move(t));
    }
    std::sort(tuples.begin(), tuples.end());
    std::vector<int> degrees;
    degrees.reserve(static_cast<size_t>(g.node_count()));
    for (NodeId v = 0; v < g.node_count(); ++v) degrees.push_back(g.degree(v));
    std::sort(degrees.begin(), degrees.end());

    std::uint64_t h = 1469598103934665603ULL;
    h = hash_mix(h, static_cast<std::uint64_t>(g.node_count()));
    h = hash_mix(h, static_cast<std::uint64_t>(g.edge_count()));
    for (int d : degrees) h = hash_mix(h, static_cast<std::uint64_t>(d) + 7);
    for (const auto& t : tuples) {
        h = hash_mix(h, 0x51ed270b);
        for (std::uint64_t x : t) h = hash_mix(h, x);
    }
    return h;
}

std::vector<std::pair<LabelId, int>> label_counts(const Hypergraph& g) {
    std::map<LabelId, int> m;
    for (const Edge& e : g.edges()) m[e.label]++;
    return {m.begin(), m.end()};
}

bool label_counts_leq(const std::vector<std::pair<LabelId, int>>& a,
                      const std::vector<std::pair<LabelId, int>>& b) {
    size_t j = 0;
    for (const auto& [label, count] : a) {
        while (j < b.size() && b[j].first < label) ++j;
        if (j == b.size() || b[j].first != label || b[j].second < count) return false;
    }
    return true;
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    std::vector<Edge> edges = a.edges();
    for (const Edge& e : b.edges()) {
        Edge shifted = e;
        for (NodeId& v : shifted.nodes) v += a.node_count();
        edges.push_back(std::move(shifted));
    }
    return Hypergraph(a.node_count() + b.node_count(), std::move(edges));
}

namespace {

// Sort key describing a node without reference to identifiers.
std::vector<std::vector<int>> node_signature(const Hypergraph& g, NodeId v) {
    std::vector<std::vector<int>> sig;
    for (EdgeId e : g.incident_edges(v)) {
        const Edge& edge = g.edge(e);
        std::vector<int> entry{edge.label};
        for (size_t i = 0; i < edge.nodes.size(); ++i)
            if (edge.nodes[i] == v) entry.push_back(static_cast<int>(i));
        sig.push_back(std::move(entry));
    }
    std::sort(sig.begin(), sig.end());
    return sig;
}

std::vector<Edge> relabeled_sorted_edges(const Hypergraph& g, const std::vector<int>& perm) {
    // perm maps old node id -> new node id
    std::vector<Edge> edges = g.edges();
    for (Edge& e : edges)
        for (NodeId& v : e.nodes) v = perm[static_cast<size_t>(v)];
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::tie(a.label, a.nodes) < std::tie(b.label, b.nodes);
    });
    return edges;
}

void minimal_permutation(const std::vector<std::vector<int>>& cells, size_t cell_idx,
                         std::vector<int>& perm, std::vector<Edge>& best, bool& have_best,
                         const Hypergraph& g, long& budget) {
    if (budget <= 0) return;
    if (cell_idx == cells.size()) {
        --budget;
        std::vector<Edge> candidate = relabeled_sorted_edges(g, perm);
        if (!have_best || candidate < best) {
            best = std::move(candidate);
            have_best = true;
        }
        return;
    }
    std::vector<int> cell = cells[cell_idx];
    std::sort(cell.begin(), cell.end());
    do {
        int next = 0;
        for (size_t c = 0; c < cell_idx; ++c) next += static_cast<int>(cells[c].size());
        for (size_t i = 0; i < cell.size(); ++i)
            perm[static_cast<size_t>(cell[i])] = next + static_cast<int>(i);
        minimal_permutation(cells, cell_idx + 1, perm, best, have_best, g, budget);
    } while (std::next_permutation(cell.begin(), cell.end()) && budget > 0);
}

}  // namespace

Hypergraph canonical_form(const Hypergraph& g) {
    int n = g.node_count();
    // Partition nodes by signature; cells are ordered by their signature so the
    // result does not depend on input numbering.
    std::vector<std::pair<std::vector<std::vector<int>>, NodeId>> keyed;
    keyed.reserve(static_cast<size_t>(n));
    for (NodeId v = 0; v < n; ++v) keyed.emplace_back(node_signature(g, v), v);
    std::stable_sort(keyed.begin(), keyed.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::vector<int>> cells;
    for (size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) cells.emplace_back();
        cells.back().push_back(keyed[i].second);
    }

    long budget = 1;
    for (const auto& cell : cells) {
        for (size_t i = 2; i <= cell.size(); ++i) {
            budget *= static_cast<long>(i);
            if (budget > 100000) break;
        }
        if (budget > 100000) break;
    }

    std::vector<int> perm(static_cast<size_t>(n), 0);
    if (budget > 100000) {
        // Too many symmetric nodes to search; settle for the signature order.
        int next = 0;
        for (const auto& cell : cells)
            for (int v : cell) perm[static_cast<size_t>(v)] = next++;
        return Hypergraph(n, relabeled_sorted_edges(g, perm));
    }

    std::vector<Edge> best;
    bool have_best = false;
    long steps = 200000;
    minimal_permutation(cells, 0, perm, best, have_best, g, steps);
    assert(have_best);
    return Hypergraph(n, std::move(best));
}

}  // namespace ugts
