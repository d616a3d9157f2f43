#include "ugts/oracle.hpp"

#include <functional>
#include <stdexcept>

namespace ugts {

namespace {

void edge_types_for(const Signature& sig, int n, std::vector<Edge>& out) {
    out.clear();
    for (LabelId l = 0; l < sig.label_count(); ++l) {
        int arity = sig.arity(l);
        if (arity > 0 && n == 0) continue;  // no tuples exist without nodes
        std::vector<NodeId> tuple(static_cast<size_t>(arity), 0);
        while (true) {
            out.push_back({l, tuple});
            int pos = arity - 1;
            while (pos >= 0 && tuple[static_cast<size_t>(pos)] == n - 1) --pos;
            if (pos < 0) break;
            tuple[static_cast<size_t>(pos)]++;
            for (int i = pos + 1; i < arity; ++i) tuple[static_cast<size_t>(i)] = 0;
        }
    }
}

}  // namespace

std::vector<Hypergraph> enumerate_graphs(const Signature& sig, const EnumBounds& b) {
    if (b.effective_elements() > 8)
        throw std::invalid_argument("enumerate_graphs: bounds exceed the exhaustive-search guard");
    if (b.max_nodes < 0 || b.max_edges < 0)
        throw std::invalid_argument("enumerate_graphs: negative bounds");

    std::vector<Hypergraph> out;
    CanonicalSet seen;
    std::vector<Edge> types;
    for (int n = 0; n <= std::min(b.max_nodes, b.effective_elements()); ++n) {
        edge_types_for(sig, n, types);
        int edge_limit = std::min(b.max_edges, b.effective_elements() - n);
        // Non-decreasing sequences over the type list; node permutations are
        // collapsed afterwards by isomorphism rejection.
        std::vector<size_t> chosen;
        auto emit = [&]() {
            std::vector<Edge> edges;
            edges.reserve(chosen.size());
            for (size_t t : chosen) edges.push_back(types[t]);
            Hypergraph g(n, std::move(edges));
            if (b.path_bound && !within_path_bound(g, *b.path_bound)) return;
            if (seen.insert(g)) out.push_back(std::move(g));
        };
        std::function<void(size_t)> rec = [&](size_t min_type) {
            emit();
            if (static_cast<int>(chosen.size()) >= edge_limit) return;
            for (size_t t = min_type; t < types.size(); ++t) {
                chosen.push_back(t);
                rec(t);
                chosen.pop_back();
            }
        };
        rec(0);
    }
    return out;
}

std::vector<ForwardEntry> forward_successors(const std::vector<UQRule>& rules,
                                             const Signature& sig, const EnumBounds& b) {
    std::vector<ForwardEntry> out;
    for (Hypergraph& host : enumerate_graphs(sig, b)) {
        ForwardEntry entry{std::move(host), {}};
        for (const UQRule& rho : rules)
            for (const auto& [inst, match] : applicable_instances(rho, entry.host))
                entry.successors.push_back(apply_instance(rho, inst, match));
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<Hypergraph> pred_oracle(const std::vector<UQRule>& rules, const Hypergraph& g,
                                    const Signature& sig, const EnumBounds& b) {
    std::vector<Hypergraph> out;
    auto gc = label_counts(g);
    for (const ForwardEntry& entry : forward_successors(rules, sig, b)) {
        for (const Hypergraph& succ : entry.successors) {
            if (succ.element_count() < g.element_count()) continue;
            if (!label_counts_leq(gc, label_counts(succ))) continue;
            if (subgraph_leq(g, succ)) {
                out.push_back(entry.host);
                break;
            }
        }
    }
    return out;
}

}  // namespace ugts
