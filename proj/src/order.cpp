#include "ugts/order.hpp"

#include <algorithm>

namespace ugts {

Basis minimize(const std::vector<Hypergraph>& graphs) {
    // Dedup isomorphic inputs first (hash buckets), keeping the earliest.
    std::vector<const Hypergraph*> distinct;
    {
        CanonicalSet seen;
        for (const Hypergraph& g : graphs)
            if (seen.insert(g)) distinct.push_back(&g);
    }

    // Only smaller-or-equal element counts can sit below a graph; comparing
    // against size-sorted candidates keeps the quadratic part short.
    std::vector<size_t> by_size(distinct.size());
    for (size_t i = 0; i < by_size.size(); ++i) by_size[i] = i;
    std::stable_sort(by_size.begin(), by_size.end(), [&](size_t a, size_t b) {
        return distinct[a]->element_count() < distinct[b]->element_count();
    });

    std::vector<char> keep(distinct.size(), 1);
    std::vector<std::vector<std::pair<LabelId, int>>> counts(distinct.size());
    for (size_t i = 0; i < distinct.size(); ++i) counts[i] = label_counts(*distinct[i]);
    for (size_t bi = 0; bi < by_size.size(); ++bi) {
        size_t i = by_size[bi];
        if (!keep[i]) continue;
        for (size_t bj = 0; bj < bi; ++bj) {
            size_t j = by_size[bj];
            if (!keep[j]) continue;
            if (distinct[j]->element_count() > distinct[i]->element_count()) continue;
            if (!label_counts_leq(counts[j], counts[i])) continue;
            if (subgraph_leq(*distinct[j], *distinct[i])) {
                keep[i] = 0;
                break;
            }
        }
    }

    Basis out;
    for (size_t i = 0; i < distinct.size(); ++i)
        if (keep[i]) out.members.push_back(*distinct[i]);
    return out;
}

bool represented(const Hypergraph& g, const Basis& basis) {
    auto gc = label_counts(g);
    for (const Hypergraph& b : basis.members) {
        if (b.element_count() > g.element_count()) continue;
        if (!label_counts_leq(label_counts(b), gc)) continue;
        if (subgraph_leq(b, g)) return true;
    }
    return false;
}

}  // namespace ugts
