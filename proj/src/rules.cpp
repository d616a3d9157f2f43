#include "ugts/rules.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ugts {

int Instantiation::length() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

std::vector<Violation> validate_rule(const UQRule& rho) {
    std::vector<Violation> out;
    auto where = [&](size_t qi) { return rho.name + " quantification " + std::to_string(qi); };

    if (!(rho.base.morphism.source() == rho.base.lhs) ||
        !(rho.base.morphism.target() == rho.base.rhs))
        out.push_back({rho.name + ": rule morphism does not connect lhs to rhs"});
    else if (!rho.base.morphism.is_valid())
        out.push_back({rho.name + ": rule morphism is not structure-preserving"});

    for (size_t qi = 0; qi < rho.quants.size(); ++qi) {
        const Quantification& u = rho.quants[qi];
        if (!(u.p.source() == rho.base.lhs)) {
            out.push_back({where(qi) + ": p does not start at the rule's left side"});
            continue;
        }
        if (!u.p.is_valid() || !u.p.is_total() || !u.p.is_injective()) {
            out.push_back({where(qi) + ": p is not total and injective"});
            continue;
        }
        if (!(u.q.source() == u.p.target())) {
            out.push_back({where(qi) + ": q does not start at p's target"});
            continue;
        }
        if (!u.q.is_valid()) {
            out.push_back({where(qi) + ": q is not structure-preserving"});
            continue;
        }
        const Hypergraph& lhs = rho.base.lhs;
        for (NodeId v = 0; v < lhs.node_count(); ++v) {
            auto img = u.q.node_image(*u.p.node_image(v));
            if (!img) {
                out.push_back({where(qi) + ": q(p(node " + std::to_string(v) + ")) undefined"});
                continue;
            }
            int preimages = 0;
            for (NodeId w = 0; w < u.q.source().node_count(); ++w)
                if (u.q.node_image(w) == img) ++preimages;
            if (preimages != 1)
                out.push_back({where(qi) + ": image of node " + std::to_string(v) + " has " +
                               std::to_string(preimages) + " preimages (want exactly 1)"});
        }
        for (EdgeId e = 0; e < lhs.edge_count(); ++e) {
            auto img = u.q.edge_image(*u.p.edge_image(e));
            if (!img) {
                out.push_back({where(qi) + ": q(p(edge " + std::to_string(e) + ")) undefined"});
                continue;
            }
            int preimages = 0;
            for (EdgeId f = 0; f < u.q.source().edge_count(); ++f)
                if (u.q.edge_image(f) == img) ++preimages;
            if (preimages != 1)
                out.push_back({where(qi) + ": image of edge " + std::to_string(e) + " has " +
                               std::to_string(preimages) + " preimages (want exactly 1)"});
        }
        if (quantified_nodes(rho, u).empty())
            out.push_back({where(qi) + ": no quantified nodes (adds no edge at any shared node)"});
    }
    return out;
}

std::vector<NodeId> quantified_nodes(const UQRule& rho, const Quantification& u) {
    const Hypergraph& lhs = rho.base.lhs;
    const Hypergraph& pattern = u.p.target();
    std::vector<char> from_lhs(static_cast<size_t>(pattern.edge_count()), 0);
    for (EdgeId e = 0; e < lhs.edge_count(); ++e)
        if (auto img = u.p.edge_image(e)) from_lhs[static_cast<size_t>(*img)] = 1;
    std::vector<NodeId> out;
    for (NodeId v = 0; v < lhs.node_count(); ++v) {
        auto pv = u.p.node_image(v);
        if (!pv) continue;
        for (EdgeId e : pattern.incident_edges(*pv)) {
            if (!from_lhs[static_cast<size_t>(e)]) {
                out.push_back(v);
                break;
            }
        }
    }
    return out;
}

std::vector<NodeId> quantified_nodes(const UQRule& rho) {
    std::set<NodeId> set;
    for (const Quantification& u : rho.quants)
        for (NodeId v : quantified_nodes(rho, u)) set.insert(v);
    return {set.begin(), set.end()};
}

Instantiation base_instantiation(const UQRule& rho) {
    Instantiation inst;
    inst.pi = PartialMorphism::identity(rho.base.lhs);
    inst.gamma = rho.base.morphism;
    inst.counts.assign(rho.quants.size(), 0);
    return inst;
}

InstantiationStep instantiation_step(const UQRule& rho, const Instantiation& inst,
                                     int quant_index) {
    const Quantification& u = rho.quants[static_cast<size_t>(quant_index)];
    PushoutResult left = pushout(inst.pi, u.p);
    PushoutResult right = pushout(compose(inst.pi, inst.gamma), compose(u.p, u.q));
    auto eta = mediating_morphism(left, compose(inst.gamma, right.left_inj),
                                  compose(u.q, right.right_inj));
    if (!eta) throw std::logic_error("instantiation_step: mediating morphism does not exist");

    InstantiationStep step{{}, left.left_inj, right.left_inj};
    step.inst.pi = compose(inst.pi, left.left_inj);
    step.inst.gamma = *eta;
    step.inst.counts = inst.counts;
    step.inst.counts[static_cast<size_t>(quant_index)]++;
    assert(step.inst.pi.is_total() && step.inst.pi.is_injective());
    return step;
}

Instantiation instantiate(const UQRule& rho, const std::vector<int>& counts) {
    if (counts.size() != rho.quants.size())
        throw std::invalid_argument("instantiate: counts size does not match quantifications");
    Instantiation inst = base_instantiation(rho);
    for (size_t qi = 0; qi < counts.size(); ++qi)
        for (int i = 0; i < counts[qi]; ++i)
            inst = instantiation_step(rho, inst, static_cast<int>(qi)).inst;
    return inst;
}

Instantiation instantiate_sequence(const UQRule& rho, const std::vector<int>& order) {
    Instantiation inst = base_instantiation(rho);
    for (int qi : order) {
        if (qi < 0 || qi >= static_cast<int>(rho.quants.size()))
            throw std::invalid_argument("instantiate_sequence: bad quantification index");
        inst = instantiation_step(rho, inst, qi).inst;
    }
    return inst;
}

int instantiation_bound(const UQRule& rho, const Hypergraph& g) {
    if (rho.quants.empty()) return 0;
    bool right_sides_unchanged = true;
    bool created_edges_on_created_nodes = true;
    Instantiation base = base_instantiation(rho);
    for (size_t qi = 0; qi < rho.quants.size(); ++qi) {
        InstantiationStep step = instantiation_step(rho, base, static_cast<int>(qi));
        const Hypergraph& rhs_ext = step.inst.rhs_ext();
        if (!isomorphic(rhs_ext, rho.base.rhs)) right_sides_unchanged = false;
        std::vector<char> node_has_preimage(static_cast<size_t>(rhs_ext.node_count()), 0);
        std::vector<char> edge_has_preimage(static_cast<size_t>(rhs_ext.edge_count()), 0);
        for (NodeId v = 0; v < rho.base.rhs.node_count(); ++v)
            if (auto img = step.rhs_embed.node_image(v)) node_has_preimage[static_cast<size_t>(*img)] = 1;
        for (EdgeId e = 0; e < rho.base.rhs.edge_count(); ++e)
            if (auto img = step.rhs_embed.edge_image(e)) edge_has_preimage[static_cast<size_t>(*img)] = 1;
        for (EdgeId e = 0; e < rhs_ext.edge_count(); ++e) {
            if (edge_has_preimage[static_cast<size_t>(e)]) continue;
            bool touches_created = false;
            for (NodeId v : rhs_ext.edge(e).nodes)
                if (!node_has_preimage[static_cast<size_t>(v)]) touches_created = true;
            if (!touches_created) created_edges_on_created_nodes = false;
        }
    }
    if (right_sides_unchanged) return 0;
    if (created_edges_on_created_nodes) return g.node_count();
    return g.node_count() + g.edge_count();
}

bool satisfies_application_condition(const UQRule& rho, const Instantiation& inst,
                                     const PartialMorphism& match) {
    const Hypergraph& host = match.target();
    std::vector<char> in_image(static_cast<size_t>(host.edge_count()), 0);
    for (EdgeId e = 0; e < match.source().edge_count(); ++e)
        if (auto img = match.edge_image(e)) in_image[static_cast<size_t>(*img)] = 1;
    for (NodeId x : quantified_nodes(rho)) {
        auto xb = inst.pi.node_image(x);
        if (!xb) return false;
        auto hx = match.node_image(*xb);
        if (!hx) return false;
        for (EdgeId e : host.incident_edges(*hx))
            if (!in_image[static_cast<size_t>(e)]) return false;
    }
    return true;
}

std::vector<std::pair<Instantiation, PartialMorphism>> applicable_instances(const UQRule& rho,
                                                                            const Hypergraph& g) {
    std::vector<std::pair<Instantiation, PartialMorphism>> out;
    InstantiationMemo memo(rho);
    // Count vectors in graded order; each step strictly grows the extended left
    // side, so a branch dies once it cannot embed into g any more.
    std::set<std::vector<int>> frontier{std::vector<int>(rho.quants.size(), 0)};
    while (!frontier.empty()) {
        std::set<std::vector<int>> next;
        for (const std::vector<int>& counts : frontier) {
            const Instantiation& inst = memo.get(counts);
            if (inst.lhs_ext().element_count() > g.element_count()) continue;
            for (const PartialMorphism& m : enumerate_matches(inst.lhs_ext(), g))
                if (satisfies_application_condition(rho, inst, m)) out.emplace_back(inst, m);
            for (size_t qi = 0; qi < rho.quants.size(); ++qi) {
                std::vector<int> extended = counts;
                extended[qi]++;
                next.insert(std::move(extended));
            }
        }
        frontier = std::move(next);
    }
    return out;
}

Hypergraph apply_instance(const UQRule& rho, const Instantiation& inst,
                          const PartialMorphism& match) {
    if (!(match.source() == inst.lhs_ext()))
        throw std::invalid_argument("apply_instance: match source must be the extended left side");
    if (!match.is_valid() || !match.is_total() || !match.is_injective())
        throw std::invalid_argument("apply_instance: match must be total and injective");
    if (!satisfies_application_condition(rho, inst, match))
        throw std::invalid_argument("apply_instance: application condition violated");
    return pushout(inst.gamma, match).object;
}

bool instantiations_isomorphic(const Instantiation& a, const Instantiation& b) {
    if (!(a.pi.source() == b.pi.source())) return false;
    for (const PartialMorphism& iso_l : enumerate_isomorphisms(a.lhs_ext(), b.lhs_ext())) {
        if (!compose(a.pi, iso_l).same_mapping(b.pi)) continue;
        for (const PartialMorphism& iso_r : enumerate_isomorphisms(a.rhs_ext(), b.rhs_ext()))
            if (compose(a.gamma, iso_r).same_mapping(compose(iso_l, b.gamma))) return true;
    }
    return false;
}

const Instantiation& InstantiationMemo::get(const std::vector<int>& counts) {
    auto it = memo_.find(counts);
    if (it != memo_.end()) return it->second;
    Instantiation inst;
    if (std::all_of(counts.begin(), counts.end(), [](int c) { return c == 0; })) {
        inst = base_instantiation(*rule_);
    } else {
        size_t last = counts.size();
        while (last > 0 && counts[last - 1] == 0) --last;
        std::vector<int> prev = counts;
        prev[last - 1]--;
        inst = instantiation_step(*rule_, get(prev), static_cast<int>(last - 1)).inst;
    }
    return memo_.emplace(counts, std::move(inst)).first->second;
}

}  // namespace ugts
