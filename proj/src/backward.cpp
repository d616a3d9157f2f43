#include "ugts/backward.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ugts {

const std::vector<SubgraphQuotient>& QuotientCache::get(const std::string& rule,
                                                        const std::vector<int>& counts,
                                                        const Hypergraph& rhs_ext) {
    auto key = std::make_pair(rule, counts);
    auto it = cache_.find(key);
    if (it == cache_.end())
        it = cache_.emplace(std::move(key), enumerate_subgraph_quotients(rhs_ext)).first;
    return it->second;
}

namespace {

// Lifted application condition: a co-match pinning the image of a quantified
// node next to an unmatched host edge admits no complement worth keeping.
bool comatch_admissible(const UQRule& rho, const Instantiation& inst,
                        const PartialMorphism& composed, const PartialMorphism& comatch) {
    const Hypergraph& host = comatch.target();
    std::vector<char> in_image(static_cast<size_t>(host.edge_count()), 0);
    for (EdgeId e = 0; e < comatch.source().edge_count(); ++e)
        if (auto img = comatch.edge_image(e)) in_image[static_cast<size_t>(*img)] = 1;
    for (NodeId x : quantified_nodes(rho)) {
        auto mid = composed.node_image(*inst.pi.node_image(x));
        if (!mid) continue;
        auto hx = comatch.node_image(*mid);
        if (!hx) continue;
        for (EdgeId e : host.incident_edges(*hx))
            if (!in_image[static_cast<size_t>(e)]) return false;
    }
    return true;
}

}  // namespace

std::vector<Predecessor> backward_step(const UQRule& rho, const Hypergraph& g,
                                       const SearchConfig& cfg, QuotientCache* cache) {
    if (cfg.mode == SearchConfig::Mode::restricted) {
        if (!cfg.path_bound) throw std::invalid_argument("backward_step: restricted mode needs a path bound");
        if (!within_path_bound(g, *cfg.path_bound))
            throw std::invalid_argument("backward_step: graph outside the bounded-path class");
    }
    std::optional<PathBound> poc_bound =
        cfg.mode == SearchConfig::Mode::restricted ? cfg.path_bound : std::nullopt;

    int bound = cfg.coarse_instantiation_bound ? g.node_count() + g.edge_count()
                                               : instantiation_bound(rho, g);

    std::vector<Predecessor> out;
    InstantiationMemo memo(rho);
    QuotientCache local_cache;
    QuotientCache& quotients = cache ? *cache : local_cache;

    std::vector<std::vector<int>> level{std::vector<int>(rho.quants.size(), 0)};
    for (int length = 0; length <= bound && !level.empty(); ++length) {
        for (const std::vector<int>& counts : level) {
            const Instantiation& inst = memo.get(counts);
            for (const SubgraphQuotient& quot : quotients.get(rho.name, counts, inst.rhs_ext())) {
                PartialMorphism composed = compose(inst.gamma, quot.witness);
                for (const PartialMorphism& comatch : enumerate_matches(quot.rep, g)) {
                    if (cfg.postcond_lift && !comatch_admissible(rho, inst, composed, comatch))
                        continue;
                    for (PocResult& poc : minimal_pushout_complements(composed, comatch, poc_bound)) {
                        if (!satisfies_application_condition(rho, inst, poc.match)) continue;
                        out.push_back({std::move(poc.complement), counts, std::move(poc.match)});
                    }
                }
            }
        }
        // Next length level in graded order.
        std::vector<std::vector<int>> next;
        for (const std::vector<int>& counts : level) {
            for (size_t qi = 0; qi < rho.quants.size(); ++qi) {
                std::vector<int> extended = counts;
                extended[qi]++;
                if (std::find(next.begin(), next.end(), extended) == next.end())
                    next.push_back(std::move(extended));
            }
        }
        level = std::move(next);
    }
    return out;
}

SearchState backward_search(const std::vector<UQRule>& rules,
                            const std::vector<Hypergraph>& finals, const SearchConfig& cfg) {
    for (size_t i = 0; i < rules.size(); ++i) {
        auto violations = validate_rule(rules[i]);
        if (!violations.empty())
            throw std::invalid_argument("backward_search: invalid rule " + rules[i].name + ": " +
                                        violations.front().message);
        for (size_t j = 0; j < i; ++j)
            if (rules[j].name == rules[i].name)  // the quotient cache keys on names
                throw std::invalid_argument("backward_search: duplicate rule name " +
                                            rules[i].name);
    }
    if (cfg.mode == SearchConfig::Mode::restricted) {
        if (!cfg.path_bound)
            throw std::invalid_argument("backward_search: restricted mode needs a path bound");
        for (const Hypergraph& f : finals)
            if (!within_path_bound(f, *cfg.path_bound))
                throw std::invalid_argument(
                    "backward_search: final graph outside the bounded-path class");
    }
    int budget = cfg.max_iterations.value_or(
        cfg.mode == SearchConfig::Mode::general ? 1000 : std::numeric_limits<int>::max());

    SearchState state;
    state.working = minimize(finals);
    QuotientCache cache;
    CanonicalSet expanded;

    while (true) {
        std::vector<Hypergraph> dirty;
        for (const Hypergraph& g : state.working.members)
            if (!expanded.contains(g)) dirty.push_back(g);
        if (dirty.empty()) {
            state.stationary = true;
            break;
        }
        if (state.iterations >= budget) break;  // budget exhausted, not stationary
        state.iterations++;

        std::vector<Hypergraph> pool = state.working.members;
        for (const Hypergraph& g : dirty) {
            expanded.insert(g);
            for (const UQRule& rho : rules) {
                StepRecord record{g, rho.name, backward_step(rho, g, cfg, &cache)};
                state.backward_steps++;
                for (const Predecessor& p : record.produced) pool.push_back(p.graph);
                state.trace.push_back(std::move(record));
            }
        }
        state.working = minimize(pool);
        state.sweep_bases.push_back(state.working);
    }
    return state;
}

VerdictKind verdict(const Hypergraph& init, const SearchState& state, const SearchConfig&) {
    if (!state.stationary) return VerdictKind::inconclusive;
    return represented(init, state.working) ? VerdictKind::inconclusive : VerdictKind::safe;
}

}  // namespace ugts
