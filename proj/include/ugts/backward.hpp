#pragma once

#include "ugts/oracle.hpp"
#include "ugts/order.hpp"
#include "ugts/rules.hpp"

namespace ugts {

struct SearchConfig {
    enum class Mode { restricted, general };
    Mode mode = Mode::general;
    std::optional<PathBound> path_bound;  // required in restricted mode
    bool postcond_lift = true;            // skip co-matches with no admissible complement
    std::optional<int> max_iterations;    // sweeps; general mode defaults to 1000
    bool coarse_instantiation_bound = false;  // always use |V|+|E| instead of the tight bound
};

/// Predecessor candidate with enough provenance to replay its derivation:
/// instantiate the rule with `counts` and apply it to `graph` via `match`.
struct Predecessor {
    Hypergraph graph;
    std::vector<int> counts;
    PartialMorphism match;  // extended lhs -> graph, total injective
};

struct StepRecord {
    Hypergraph source;
    std::string rule;
    std::vector<Predecessor> produced;
};

struct SearchState {
    Basis working;
    int iterations = 0;      // completed sweeps
    bool stationary = false;
    long backward_steps = 0;
    std::vector<StepRecord> trace;
    std::vector<Basis> sweep_bases;  // basis after each sweep
};

/// Quotient enumeration cache keyed by (rule, counts); extended right sides
/// depend only on those, not on the host.
class QuotientCache {
public:
    const std::vector<SubgraphQuotient>& get(const std::string& rule,
                                             const std::vector<int>& counts,
                                             const Hypergraph& rhs_ext);

private:
    std::map<std::pair<std::string, std::vector<int>>, std::vector<SubgraphQuotient>> cache_;
};

/// One backward step: all predecessor candidates of the upward closure of g
/// under rho, before minimization. Restricted mode drops candidates beyond the
/// path bound; every candidate satisfies the application condition.
std::vector<Predecessor> backward_step(const UQRule& rho, const Hypergraph& g,
                                       const SearchConfig& cfg, QuotientCache* cache = nullptr);

/// Fixpoint of the working basis under backward steps over all rules, starting
/// from the final graphs. Sweeps process members not expanded before; the
/// search is stationary once a sweep leaves the basis unchanged.
SearchState backward_search(const std::vector<UQRule>& rules,
                            const std::vector<Hypergraph>& finals, const SearchConfig& cfg);

enum class VerdictKind { safe, inconclusive };

/// safe: the initial graph cannot cover any final graph (within the bounded
/// class in restricted mode). inconclusive: represented by the working set or
/// the search never became stationary.
VerdictKind verdict(const Hypergraph& init, const SearchState& state, const SearchConfig& cfg);

}  // namespace ugts
