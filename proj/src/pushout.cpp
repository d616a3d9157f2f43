#include "ugts/pushout.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace ugts {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) { parent[static_cast<size_t>(find(a))] = find(b); }
};

}  // namespace

PushoutResult pushout(const PartialMorphism& phi, const PartialMorphism& psi) {
    if (!(phi.source() == psi.source()))
        throw std::invalid_argument("pushout: morphisms must share their source");
    const Hypergraph& g0 = phi.source();
    const Hypergraph& g1 = phi.target();
    const Hypergraph& g2 = psi.target();

    const int n1 = g1.node_count(), n2 = g2.node_count();
    const int e1 = g1.edge_count(), e2 = g2.edge_count();
    UnionFind node_classes(n1 + n2);
    UnionFind edge_classes(e1 + e2);
    auto nslot1 = [](NodeId v) { return v; };
    auto nslot2 = [n1](NodeId v) { return n1 + v; };
    auto eslot1 = [](EdgeId e) { return e; };
    auto eslot2 = [e1](EdgeId e) { return e1 + e; };

    std::vector<int> node_poison, edge_poison;
    for (NodeId v = 0; v < g0.node_count(); ++v) {
        auto a = phi.node_image(v);
        auto b = psi.node_image(v);
        if (a && b)
            node_classes.unite(nslot1(*a), nslot2(*b));
        else if (a)
            node_poison.push_back(nslot1(*a));
        else if (b)
            node_poison.push_back(nslot2(*b));
    }
    for (EdgeId e = 0; e < g0.edge_count(); ++e) {
        auto a = phi.edge_image(e);
        auto b = psi.edge_image(e);
        if (a && b)
            edge_classes.unite(eslot1(*a), eslot2(*b));
        else if (a)
            edge_poison.push_back(eslot1(*a));
        else if (b)
            edge_poison.push_back(eslot2(*b));
    }

    std::vector<char> node_invalid(static_cast<size_t>(n1 + n2), 0);
    for (int s : node_poison) node_invalid[static_cast<size_t>(node_classes.find(s))] = 1;
    std::vector<char> edge_invalid(static_cast<size_t>(e1 + e2), 0);
    for (int s : edge_poison) edge_invalid[static_cast<size_t>(edge_classes.find(s))] = 1;

    // An edge class is also invalid when any member is incident to a node with
    // an invalid class.
    auto poison_edge_by_nodes = [&](int slot, const Edge& edge, bool second) {
        for (NodeId v : edge.nodes) {
            int ns = second ? nslot2(v) : nslot1(v);
            if (node_invalid[static_cast<size_t>(node_classes.find(ns))]) {
                edge_invalid[static_cast<size_t>(edge_classes.find(slot))] = 1;
                return;
            }
        }
    };
    for (EdgeId e = 0; e < e1; ++e) poison_edge_by_nodes(eslot1(e), g1.edge(e), false);
    for (EdgeId e = 0; e < e2; ++e) poison_edge_by_nodes(eslot2(e), g2.edge(e), true);

    // Number the valid classes in order of their first member slot.
    std::vector<int> node_class_id(static_cast<size_t>(n1 + n2), -1);
    int next_node = 0;
    for (int s = 0; s < n1 + n2; ++s) {
        int root = node_classes.find(s);
        if (node_invalid[static_cast<size_t>(root)]) continue;
        if (node_class_id[static_cast<size_t>(root)] < 0)
            node_class_id[static_cast<size_t>(root)] = next_node++;
    }
    std::vector<int> edge_class_id(static_cast<size_t>(e1 + e2), -1);
    std::vector<int> edge_class_rep(static_cast<size_t>(e1 + e2), -1);
    int next_edge = 0;
    for (int s = 0; s < e1 + e2; ++s) {
        int root = edge_classes.find(s);
        if (edge_invalid[static_cast<size_t>(root)]) continue;
        if (edge_class_id[static_cast<size_t>(root)] < 0) {
            edge_class_id[static_cast<size_t>(root)] = next_edge++;
            edge_class_rep[static_cast<size_t>(root)] = s;
        }
    }

    auto node_id_of_slot = [&](int slot) { return node_class_id[static_cast<size_t>(node_classes.find(slot))]; };

    std::vector<Edge> object_edges(static_cast<size_t>(next_edge));
    for (int s = 0; s < e1 + e2; ++s) {
        int root = edge_classes.find(s);
        if (edge_class_rep[static_cast<size_t>(root)] != s) continue;
        bool second = s >= e1;
        const Edge& member = second ? g2.edge(s - e1) : g1.edge(s);
        Edge out;
        out.label = member.label;
        for (NodeId v : member.nodes) {
            int id = node_id_of_slot(second ? nslot2(v) : nslot1(v));
            assert(id >= 0);  // otherwise the edge class would be invalid
            out.nodes.push_back(id);
        }
        object_edges[static_cast<size_t>(edge_class_id[static_cast<size_t>(root)])] = std::move(out);
    }

    Hypergraph object(next_node, std::move(object_edges));
    PartialMorphism left(g1, object), right(g2, object);
    for (NodeId v = 0; v < n1; ++v) {
        int id = node_id_of_slot(nslot1(v));
        if (id >= 0) left.map_node(v, id);
    }
    for (NodeId v = 0; v < n2; ++v) {
        int id = node_id_of_slot(nslot2(v));
        if (id >= 0) right.map_node(v, id);
    }
    for (EdgeId e = 0; e < e1; ++e) {
        int root = edge_classes.find(eslot1(e));
        int id = edge_class_id[static_cast<size_t>(root)];
        if (id >= 0) left.map_edge(e, id);
    }
    for (EdgeId e = 0; e < e2; ++e) {
        int root = edge_classes.find(eslot2(e));
        int id = edge_class_id[static_cast<size_t>(root)];
        if (id >= 0) right.map_edge(e, id);
    }

    if (!left.is_valid() || !right.is_valid())
        throw std::logic_error("pushout: input morphisms are not structure-preserving");
    return {std::move(object), std::move(left), std::move(right)};
}

namespace {

// Forced element map between two pushout cospans over the same span. Fills
// node_out/edge_out (object of `from` -> object of `to`), returning false on
// any definedness or consistency conflict.
bool forced_cospan_map(const PushoutResult& from, const PushoutResult& to,
                       std::vector<int>& node_out, std::vector<int>& edge_out) {
    node_out.assign(static_cast<size_t>(from.object.node_count()), -1);
    edge_out.assign(static_cast<size_t>(from.object.edge_count()), -1);
    auto bind = [](std::vector<int>& out, std::optional<int> a, std::optional<int> b) {
        if (a.has_value() != b.has_value()) return false;
        if (!a) return true;
        int& slot = out[static_cast<size_t>(*a)];
        if (slot >= 0 && slot != *b) return false;
        slot = *b;
        return true;
    };
    const Hypergraph& g1 = from.left_inj.source();
    const Hypergraph& g2 = from.right_inj.source();
    for (NodeId v = 0; v < g1.node_count(); ++v)
        if (!bind(node_out, from.left_inj.node_image(v), to.left_inj.node_image(v))) return false;
    for (NodeId v = 0; v < g2.node_count(); ++v)
        if (!bind(node_out, from.right_inj.node_image(v), to.right_inj.node_image(v))) return false;
    for (EdgeId e = 0; e < g1.edge_count(); ++e)
        if (!bind(edge_out, from.left_inj.edge_image(e), to.left_inj.edge_image(e))) return false;
    for (EdgeId e = 0; e < g2.edge_count(); ++e)
        if (!bind(edge_out, from.right_inj.edge_image(e), to.right_inj.edge_image(e))) return false;
    return true;
}

}  // namespace

bool is_pushout(const PartialMorphism& phi, const PartialMorphism& psi,
                const PushoutResult& candidate) {
    if (!(candidate.left_inj.source() == phi.target())) return false;
    if (!(candidate.right_inj.source() == psi.target())) return false;
    if (!(candidate.left_inj.target() == candidate.object)) return false;
    if (!(candidate.right_inj.target() == candidate.object)) return false;
    if (!candidate.left_inj.is_valid() || !candidate.right_inj.is_valid()) return false;

    PushoutResult canonical = pushout(phi, psi);
    std::vector<int> node_map, edge_map;
    if (!forced_cospan_map(canonical, candidate, node_map, edge_map)) return false;

    // Every class carries at least one member, so the forced map is total;
    // it must additionally be a bijective structure-preserving map.
    PartialMorphism iso(canonical.object, candidate.object);
    for (NodeId v = 0; v < canonical.object.node_count(); ++v) {
        if (node_map[static_cast<size_t>(v)] < 0) return false;
        iso.map_node(v, node_map[static_cast<size_t>(v)]);
    }
    for (EdgeId e = 0; e < canonical.object.edge_count(); ++e) {
        if (edge_map[static_cast<size_t>(e)] < 0) return false;
        iso.map_edge(e, edge_map[static_cast<size_t>(e)]);
    }
    return iso.is_valid() && iso.is_injective() && iso.is_surjective();
}

std::optional<PartialMorphism> mediating_morphism(const PushoutResult& po,
                                                  const PartialMorphism& to_left,
                                                  const PartialMorphism& to_right) {
    if (!(to_left.source() == po.left_inj.source())) return std::nullopt;
    if (!(to_right.source() == po.right_inj.source())) return std::nullopt;
    if (!(to_left.target() == to_right.target())) return std::nullopt;
    const Hypergraph& x = to_left.target();

    // Per object element: every preimage under an injection pins the image
    // (or its absence). -1 unconstrained, -2 pinned undefined.
    std::vector<int> node_pin(static_cast<size_t>(po.object.node_count()), -1);
    std::vector<int> edge_pin(static_cast<size_t>(po.object.edge_count()), -1);
    auto pin = [](std::vector<int>& pins, std::optional<int> at, std::optional<int> value) {
        if (!at) return true;
        int want = value ? *value : -2;
        int& slot = pins[static_cast<size_t>(*at)];
        if (slot != -1 && slot != want) return false;
        slot = want;
        return true;
    };
    const Hypergraph& g1 = po.left_inj.source();
    const Hypergraph& g2 = po.right_inj.source();
    for (NodeId v = 0; v < g1.node_count(); ++v)
        if (!pin(node_pin, po.left_inj.node_image(v), to_left.node_image(v))) return std::nullopt;
    for (NodeId v = 0; v < g2.node_count(); ++v)
        if (!pin(node_pin, po.right_inj.node_image(v), to_right.node_image(v))) return std::nullopt;
    for (EdgeId e = 0; e < g1.edge_count(); ++e)
        if (!pin(edge_pin, po.left_inj.edge_image(e), to_left.edge_image(e))) return std::nullopt;
    for (EdgeId e = 0; e < g2.edge_count(); ++e)
        if (!pin(edge_pin, po.right_inj.edge_image(e), to_right.edge_image(e))) return std::nullopt;

    PartialMorphism eta(po.object, x);
    for (NodeId v = 0; v < po.object.node_count(); ++v)
        if (node_pin[static_cast<size_t>(v)] >= 0) eta.map_node(v, node_pin[static_cast<size_t>(v)]);
    for (EdgeId e = 0; e < po.object.edge_count(); ++e)
        if (edge_pin[static_cast<size_t>(e)] >= 0) eta.map_edge(e, edge_pin[static_cast<size_t>(e)]);
    if (!eta.is_valid()) return std::nullopt;
    if (!compose(po.left_inj, eta).same_mapping(to_left)) return std::nullopt;
    if (!compose(po.right_inj, eta).same_mapping(to_right)) return std::nullopt;
    return eta;
}

std::vector<PocResult> minimal_pushout_complements(const PartialMorphism& delta,
                                                   const PartialMorphism& comatch,
                                                   std::optional<PathBound> path_bound) {
    if (!(delta.target() == comatch.source()))
        throw std::invalid_argument("minimal_pushout_complements: comatch source must be delta target");
    if (!comatch.is_total() || !comatch.is_injective() || !comatch.is_valid())
        throw std::invalid_argument("minimal_pushout_complements: comatch must be total and injective");

    const Hypergraph& a = delta.source();
    const Hypergraph& b = delta.target();
    const Hypergraph& g = comatch.target();

    // Host elements hit by the comatch, with their preimage in b.
    std::vector<int> covered_node(static_cast<size_t>(g.node_count()), -1);
    std::vector<int> covered_edge(static_cast<size_t>(g.edge_count()), -1);
    for (NodeId v = 0; v < b.node_count(); ++v) covered_node[static_cast<size_t>(*comatch.node_image(v))] = v;
    for (EdgeId e = 0; e < b.edge_count(); ++e) covered_edge[static_cast<size_t>(*comatch.edge_image(e))] = e;

    // delta fibers over b nodes.
    std::vector<std::vector<NodeId>> node_fiber(static_cast<size_t>(b.node_count()));
    for (NodeId v = 0; v < a.node_count(); ++v)
        if (auto img = delta.node_image(v)) node_fiber[static_cast<size_t>(*img)].push_back(v);

    // Complement layout: context copies of the uncovered part of g first, then
    // a fresh copy of all of a. Fresh identifiers follow construction order so
    // repeated runs produce identical graphs.
    std::vector<int> context_node_id(static_cast<size_t>(g.node_count()), -1);
    int context_nodes = 0;
    for (NodeId v = 0; v < g.node_count(); ++v)
        if (covered_node[static_cast<size_t>(v)] < 0) context_node_id[static_cast<size_t>(v)] = context_nodes++;
    const int total_nodes = context_nodes + a.node_count();
    auto copy_of = [&](NodeId av) { return context_nodes + av; };

    // Context edge endpoints: uncovered endpoints take the unique context copy;
    // covered endpoints attach to a member of the delta fiber (a choice point
    // when delta merges nodes; no complement at all when the fiber is empty).
    struct ContextEdge {
        EdgeId host_edge;
        std::vector<std::vector<NodeId>> position_choices;  // complement node ids
    };
    std::vector<ContextEdge> context_edges;
    size_t combination_count = 1;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (covered_edge[static_cast<size_t>(e)] >= 0) continue;
        ContextEdge ce{e, {}};
        for (NodeId w : g.edge(e).nodes) {
            std::vector<NodeId> choices;
            int bnode = covered_node[static_cast<size_t>(w)];
            if (bnode < 0) {
                choices.push_back(context_node_id[static_cast<size_t>(w)]);
            } else {
                for (NodeId av : node_fiber[static_cast<size_t>(bnode)]) choices.push_back(copy_of(av));
                if (choices.empty()) return {};  // forced context edge has no endpoint preimage
            }
            combination_count *= choices.size();
            if (combination_count > 1000000)
                throw std::runtime_error("minimal_pushout_complements: candidate space too large");
            ce.position_choices.push_back(std::move(choices));
        }
        context_edges.push_back(std::move(ce));
    }

    // Choice slots across all context edge positions.
    std::vector<std::pair<size_t, size_t>> slots;
    for (size_t i = 0; i < context_edges.size(); ++i)
        for (size_t p = 0; p < context_edges[i].position_choices.size(); ++p)
            if (context_edges[i].position_choices[p].size() > 1) slots.emplace_back(i, p);

    std::vector<PocResult> out;
    CanonicalSet seen;
    std::vector<size_t> pick(slots.size(), 0);
    while (true) {
        std::vector<Edge> edges;
        std::vector<int> context_edge_id(static_cast<size_t>(g.edge_count()), -1);
        for (size_t i = 0; i < context_edges.size(); ++i) {
            const ContextEdge& ce = context_edges[i];
            Edge out_edge;
            out_edge.label = g.edge(ce.host_edge).label;
            for (size_t p = 0; p < ce.position_choices.size(); ++p) {
                size_t which = 0;
                for (size_t s = 0; s < slots.size(); ++s)
                    if (slots[s] == std::make_pair(i, p)) which = pick[s];
                out_edge.nodes.push_back(ce.position_choices[p][which]);
            }
            context_edge_id[static_cast<size_t>(ce.host_edge)] = static_cast<int>(edges.size());
            edges.push_back(std::move(out_edge));
        }
        const int context_edge_count = static_cast<int>(edges.size());
        for (EdgeId e = 0; e < a.edge_count(); ++e) {
            Edge copy = a.edge(e);
            for (NodeId& v : copy.nodes) v = copy_of(v);
            edges.push_back(std::move(copy));
        }
        Hypergraph complement(total_nodes, std::move(edges));

        PartialMorphism match(a, complement);
        for (NodeId v = 0; v < a.node_count(); ++v) match.map_node(v, copy_of(v));
        for (EdgeId e = 0; e < a.edge_count(); ++e) match.map_edge(e, context_edge_count + e);

        PartialMorphism glue(complement, g);
        for (NodeId v = 0; v < g.node_count(); ++v)
            if (context_node_id[static_cast<size_t>(v)] >= 0)
                glue.map_node(context_node_id[static_cast<size_t>(v)], v);
        for (NodeId v = 0; v < a.node_count(); ++v)
            if (auto img = delta.node_image(v)) glue.map_node(copy_of(v), *comatch.node_image(*img));
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (context_edge_id[static_cast<size_t>(e)] >= 0)
                glue.map_edge(context_edge_id[static_cast<size_t>(e)], e);
        for (EdgeId e = 0; e < a.edge_count(); ++e)
            if (auto img = delta.edge_image(e))
                glue.map_edge(context_edge_count + e, *comatch.edge_image(*img));

        bool keep = is_pushout(delta, match, PushoutResult{g, comatch, glue});
        if (keep && path_bound && !within_path_bound(complement, *path_bound)) keep = false;
        if (keep && seen.insert(complement))
            out.push_back({std::move(complement), std::move(match), std::move(glue)});

        // Advance the mixed-radix choice vector.
        size_t s = 0;
        for (; s < slots.size(); ++s) {
            auto [i, p] = slots[s];
            if (++pick[s] < context_edges[i].position_choices[p].size()) break;
            pick[s] = 0;
        }
        if (s == slots.size()) break;
    }
    return out;
}

}  // namespace ugts
