#include "ugts/morphism.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>

namespace ugts {

PartialMorphism::PartialMorphism(Hypergraph source, Hypergraph target)
    : source_(std::move(source)), target_(std::move(target)) {
    node_map_.assign(static_cast<size_t>(source_.node_count()), -1);
    edge_map_.assign(static_cast<size_t>(source_.edge_count()), -1);
}

PartialMorphism PartialMorphism::identity(const Hypergraph& g) {
    PartialMorphism m(g, g);
    for (NodeId v = 0; v < g.node_count(); ++v) m.map_node(v, v);
    for (EdgeId e = 0; e < g.edge_count(); ++e) m.map_edge(e, e);
    return m;
}

std::optional<NodeId> PartialMorphism::node_image(NodeId v) const {
    int t = node_map_[static_cast<size_t>(v)];
    if (t < 0) return std::nullopt;
    return t;
}

std::optional<EdgeId> PartialMorphism::edge_image(EdgeId e) const {
    int t = edge_map_[static_cast<size_t>(e)];
    if (t < 0) return std::nullopt;
    return t;
}

void PartialMorphism::map_node(NodeId from, NodeId to) {
    node_map_[static_cast<size_t>(from)] = to;
}

void PartialMorphism::map_edge(EdgeId from, EdgeId to) {
    edge_map_[static_cast<size_t>(from)] = to;
}

bool PartialMorphism::is_valid() const {
    for (NodeId v = 0; v < source_.node_count(); ++v) {
        int t = node_map_[static_cast<size_t>(v)];
        if (t >= target_.node_count()) return false;
    }
    for (EdgeId e = 0; e < source_.edge_count(); ++e) {
        int t = edge_map_[static_cast<size_t>(e)];
        if (t < 0) continue;
        if (t >= target_.edge_count()) return false;
        const Edge& se = source_.edge(e);
        const Edge& te = target_.edge(t);
        if (se.label != te.label) return false;
        if (se.nodes.size() != te.nodes.size()) return false;
        for (size_t i = 0; i < se.nodes.size(); ++i) {
            int nv = node_map_[static_cast<size_t>(se.nodes[i])];
            if (nv < 0 || nv != te.nodes[i]) return false;
        }
    }
    return true;
}

bool PartialMorphism::is_total() const {
    for (int t : node_map_)
        if (t < 0) return false;
    for (int t : edge_map_)
        if (t < 0) return false;
    return true;
}

bool PartialMorphism::is_injective() const {
    std::vector<char> seen_n(static_cast<size_t>(target_.node_count()), 0);
    for (int t : node_map_) {
        if (t < 0) continue;
        if (seen_n[static_cast<size_t>(t)]) return false;
        seen_n[static_cast<size_t>(t)] = 1;
    }
    std::vector<char> seen_e(static_cast<size_t>(target_.edge_count()), 0);
    for (int t : edge_map_) {
        if (t < 0) continue;
        if (seen_e[static_cast<size_t>(t)]) return false;
        seen_e[static_cast<size_t>(t)] = 1;
    }
    return true;
}

bool PartialMorphism::is_surjective() const {
    std::vector<char> hit_n(static_cast<size_t>(target_.node_count()), 0);
    for (int t : node_map_)
        if (t >= 0) hit_n[static_cast<size_t>(t)] = 1;
    for (char c : hit_n)
        if (!c) return false;
    std::vector<char> hit_e(static_cast<size_t>(target_.edge_count()), 0);
    for (int t : edge_map_)
        if (t >= 0) hit_e[static_cast<size_t>(t)] = 1;
    for (char c : hit_e)
        if (!c) return false;
    return true;
}

bool PartialMorphism::same_mapping(const PartialMorphism& other) const {
    return source_ == other.source_ && target_ == other.target_ &&
           node_map_ == other.node_map_ && edge_map_ == other.edge_map_;
}

PartialMorphism compose(const PartialMorphism& f, const PartialMorphism& g) {
    if (!(f.target() == g.source()))
        throw std::invalid_argument("compose: target of first morphism differs from source of second");
    PartialMorphism out(f.source(), g.target());
    for (NodeId v = 0; v < f.source().node_count(); ++v) {
        auto mid = f.node_image(v);
        if (!mid) continue;
        auto end = g.node_image(*mid);
        if (end) out.map_node(v, *end);
    }
    for (EdgeId e = 0; e < f.source().edge_count(); ++e) {
        auto mid = f.edge_image(e);
        if (!mid) continue;
        auto end = g.edge_image(*mid);
        if (end) out.map_edge(e, *end);
    }
    return out;
}

namespace {

// Backtracking matcher for total injective morphisms. The visitor may return
// false to stop the search after the current solution.
struct Matcher {
    const Hypergraph& pattern;
    const Hypergraph& host;
    std::vector<int> node_map;
    std::vector<int> edge_map;
    std::vector<char> host_node_used;
    std::vector<char> host_edge_used;
    std::vector<EdgeId> edge_order;
    std::vector<NodeId> isolated;
    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit;
    bool stopped = false;

    Matcher(const Hypergraph& p, const Hypergraph& h,
            const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& v)
        : pattern(p),
          host(h),
          node_map(static_cast<size_t>(p.node_count()), -1),
          edge_map(static_cast<size_t>(p.edge_count()), -1),
          host_node_used(static_cast<size_t>(h.node_count()), 0),
          host_edge_used(static_cast<size_t>(h.edge_count()), 0),
          visit(v) {
        // Edges with high arity and rare labels first.
        std::vector<int> host_label_freq;
        for (const Edge& e : h.edges()) {
            if (e.label >= static_cast<int>(host_label_freq.size()))
                host_label_freq.resize(static_cast<size_t>(e.label) + 1, 0);
            host_label_freq[static_cast<size_t>(e.label)]++;
        }
        auto freq = [&](LabelId l) {
            return l < static_cast<int>(host_label_freq.size())
                       ? host_label_freq[static_cast<size_t>(l)]
                       : 0;
        };
        for (EdgeId e = 0; e < p.edge_count(); ++e) edge_order.push_back(e);
        std::stable_sort(edge_order.begin(), edge_order.end(), [&](EdgeId a, EdgeId b) {
            const Edge& ea = p.edge(a);
            const Edge& eb = p.edge(b);
            if (ea.nodes.size() != eb.nodes.size()) return ea.nodes.size() > eb.nodes.size();
            return freq(ea.label) < freq(eb.label);
        });
        for (NodeId v = 0; v < p.node_count(); ++v)
            if (p.incident_edges(v).empty()) isolated.push_back(v);
    }

    void assign_edges(size_t idx) {
        if (stopped) return;
        if (idx == edge_order.size()) {
            assign_isolated(0);
            return;
        }
        EdgeId pe = edge_order[idx];
        const Edge& pedge = pattern.edge(pe);
        for (EdgeId he = 0; he < host.edge_count(); ++he) {
            if (host_edge_used[static_cast<size_t>(he)]) continue;
            const Edge& hedge = host.edge(he);
            if (hedge.label != pedge.label || hedge.nodes.size() != pedge.nodes.size()) continue;
            std::vector<NodeId> newly;
            bool ok = true;
            for (size_t i = 0; i < pedge.nodes.size() && ok; ++i) {
                NodeId pv = pedge.nodes[i];
                NodeId hv = hedge.nodes[i];
                int cur = node_map[static_cast<size_t>(pv)];
                if (cur >= 0) {
                    ok = cur == hv;
                } else if (host_node_used[static_cast<size_t>(hv)]) {
                    ok = false;
                } else {
                    node_map[static_cast<size_t>(pv)] = hv;
                    host_node_used[static_cast<size_t>(hv)] = 1;
                    newly.push_back(pv);
                }
            }
            if (ok) {
                edge_map[static_cast<size_t>(pe)] = he;
                host_edge_used[static_cast<size_t>(he)] = 1;
                assign_edges(idx + 1);
                host_edge_used[static_cast<size_t>(he)] = 0;
                edge_map[static_cast<size_t>(pe)] = -1;
            }
            for (NodeId pv : newly) {
                host_node_used[static_cast<size_t>(node_map[static_cast<size_t>(pv)])] = 0;
                node_map[static_cast<size_t>(pv)] = -1;
            }
            if (stopped) return;
        }
    }

    void assign_isolated(size_t idx) {
        if (stopped) return;
        if (idx == isolated.size()) {
            if (!visit(node_map, edge_map)) stopped = true;
            return;
        }
        NodeId pv = isolated[idx];
        for (NodeId hv = 0; hv < host.node_count(); ++hv) {
            if (host_node_used[static_cast<size_t>(hv)]) continue;
            node_map[static_cast<size_t>(pv)] = hv;
            host_node_used[static_cast<size_t>(hv)] = 1;
            assign_isolated(idx + 1);
            host_node_used[static_cast<size_t>(hv)] = 0;
            node_map[static_cast<size_t>(pv)] = -1;
            if (stopped) return;
        }
    }
};

void for_each_match(const Hypergraph& pattern, const Hypergraph& host,
                    const std::function<bool(const std::vector<int>&, const std::vector<int>&)>& visit) {
    if (pattern.node_count() > host.node_count() || pattern.edge_count() > host.edge_count())
        return;
    if (!label_counts_leq(label_counts(pattern), label_counts(host))) return;
    Matcher m(pattern, host, visit);
    m.assign_edges(0);
}

PartialMorphism build_morphism(const Hypergraph& src, const Hypergraph& tgt,
                               const std::vector<int>& node_map, const std::vector<int>& edge_map) {
    PartialMorphism out(src, tgt);
    for (NodeId v = 0; v < src.node_count(); ++v)
        if (node_map[static_cast<size_t>(v)] >= 0) out.map_node(v, node_map[static_cast<size_t>(v)]);
    for (EdgeId e = 0; e < src.edge_count(); ++e)
        if (edge_map[static_cast<size_t>(e)] >= 0) out.map_edge(e, edge_map[static_cast<size_t>(e)]);
    return out;
}

}  // namespace

std::vector<PartialMorphism> enumerate_matches(const Hypergraph& pattern, const Hypergraph& host) {
    std::vector<PartialMorphism> out;
    for_each_match(pattern, host, [&](const std::vector<int>& nm, const std::vector<int>& em) {
        out.push_back(build_morphism(pattern, host, nm, em));
        return true;
    });
    return out;
}

std::vector<PartialMorphism> enumerate_isomorphisms(const Hypergraph& g, const Hypergraph& h) {
    if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return {};
    // A total injective morphism between equal-sized graphs is bijective.
    return enumerate_matches(g, h);
}

std::optional<PartialMorphism> isomorphic(const Hypergraph& g, const Hypergraph& h) {
    if (g.node_count() != h.node_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (canonical_hash(g) != canonical_hash(h)) return std::nullopt;
    std::optional<PartialMorphism> found;
    for_each_match(g, h, [&](const std::vector<int>& nm, const std::vector<int>& em) {
        found = build_morphism(g, h, nm, em);
        return false;
    });
    return found;
}

std::vector<SubgraphQuotient> enumerate_subgraph_quotients(const Hypergraph& g) {
    int n = g.node_count();
    int m = g.edge_count();
    if (n > 20 || m > 20)
        throw std::invalid_argument("enumerate_subgraph_quotients: graph too large");
    std::vector<SubgraphQuotient> out;
    CanonicalSet seen;
    for (unsigned node_mask = 0; node_mask < (1u << n); ++node_mask) {
        // Edges whose endpoints all survive this node selection.
        std::vector<EdgeId> compatible;
        for (EdgeId e = 0; e < m; ++e) {
            bool ok = true;
            for (NodeId v : g.edge(e).nodes)
                if (!(node_mask >> v & 1u)) ok = false;
            if (ok) compatible.push_back(e);
        }
        size_t cm = compatible.size();
        for (unsigned edge_mask = 0; edge_mask < (1u << cm); ++edge_mask) {
            std::vector<int> node_to_new(static_cast<size_t>(n), -1);
            int next = 0;
            for (NodeId v = 0; v < n; ++v)
                if (node_mask >> v & 1u) node_to_new[static_cast<size_t>(v)] = next++;
            std::vector<Edge> edges;
            std::vector<int> edge_to_new(static_cast<size_t>(m), -1);
            for (size_t i = 0; i < cm; ++i) {
                if (!(edge_mask >> i & 1u)) continue;
                EdgeId e = compatible[i];
                Edge copy = g.edge(e);
                for (NodeId& v : copy.nodes) v = node_to_new[static_cast<size_t>(v)];
                edge_to_new[static_cast<size_t>(e)] = static_cast<int>(edges.size());
                edges.push_back(std::move(copy));
            }
            Hypergraph rep(next, std::move(edges));
            if (!seen.insert(rep)) continue;
            PartialMorphism witness(g, rep);
            for (NodeId v = 0; v < n; ++v)
                if (node_to_new[static_cast<size_t>(v)] >= 0)
                    witness.map_node(v, node_to_new[static_cast<size_t>(v)]);
            for (EdgeId e = 0; e < m; ++e)
                if (edge_to_new[static_cast<size_t>(e)] >= 0)
                    witness.map_edge(e, edge_to_new[static_cast<size_t>(e)]);
            out.push_back({std::move(witness), std::move(rep)});
        }
    }
    return out;
}

std::optional<PartialMorphism> subgraph_leq(const Hypergraph& g1, const Hypergraph& g2) {
    std::optional<PartialMorphism> embed;
    for_each_match(g1, g2, [&](const std::vector<int>& nm, const std::vector<int>& em) {
        embed = build_morphism(g1, g2, nm, em);
        return false;
    });
    if (!embed) return std::nullopt;
    // The witness runs opposite to the embedding: defined exactly on the image.
    return inverse_witness(*embed);
}

PartialMorphism inverse_witness(const PartialMorphism& embedding) {
    if (!embedding.is_total() || !embedding.is_injective() || !embedding.is_valid())
        throw std::invalid_argument("inverse_witness: morphism must be total and injective");
    PartialMorphism witness(embedding.target(), embedding.source());
    for (NodeId v = 0; v < embedding.source().node_count(); ++v)
        witness.map_node(*embedding.node_image(v), v);
    for (EdgeId e = 0; e < embedding.source().edge_count(); ++e)
        witness.map_edge(*embedding.edge_image(e), e);
    return witness;
}

bool CanonicalSet::insert(const Hypergraph& g) {
    auto& bucket = buckets_[canonical_hash(g)];
    for (const Hypergraph& other : bucket)
        if (isomorphic(g, other)) return false;
    bucket.push_back(g);
    ++size_;
    return true;
}

bool CanonicalSet::contains(const Hypergraph& g) const {
    auto it = buckets_.find(canonical_hash(g));
    if (it == buckets_.end()) return false;
    for (const Hypergraph& other : it->second)
        if (isomorphic(g, other)) return true;
    return false;
}

}  // namespace ugts
