#include "ugts/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace ugts {

Report build_report(const SpecFile& spec, const SearchState& state, const SearchConfig& cfg,
                    long wall_ms) {
    Report report;
    report.stationary = state.stationary;
    report.iterations = state.iterations;
    report.backward_steps = state.backward_steps;
    report.wall_ms = wall_ms;

    std::vector<Hypergraph> canon;
    canon.reserve(state.working.members.size());
    for (const Hypergraph& g : state.working.members) canon.push_back(canonical_form(g));
    std::sort(canon.begin(), canon.end(), [&](const Hypergraph& a, const Hypergraph& b) {
        auto key = [&](const Hypergraph& g) {
            return std::make_tuple(g.element_count(), canonical_hash(g),
                                   print_graph(g, "b", spec.signature, true));
        };
        return key(a) < key(b);
    });
    report.basis = std::move(canon);

    for (const std::string& name : spec.inits) {
        const Hypergraph* g = spec.find_graph(name);
        report.verdicts.emplace_back(name, verdict(*g, state, cfg));
    }
    return report;
}

std::vector<std::string> basis_lines(const Report& report, const Signature& sig) {
    std::vector<std::string> out;
    out.reserve(report.basis.size());
    for (size_t i = 0; i < report.basis.size(); ++i)
        out.push_back(print_graph(report.basis[i], "b" + std::to_string(i), sig, true));
    return out;
}

std::string render_json(const Report& report, const Signature& sig) {
    nlohmann::ordered_json j;
    j["stationary"] = report.stationary;
    j["basis"] = basis_lines(report, sig);
    nlohmann::ordered_json verdicts = nlohmann::ordered_json::object();
    for (const auto& [name, v] : report.verdicts)
        verdicts[name] = v == VerdictKind::safe ? "safe" : "inconclusive";
    j["verdicts"] = std::move(verdicts);
    j["stats"] = {{"iterations", report.iterations},
                  {"backward_steps", report.backward_steps},
                  {"wall_ms", report.wall_ms}};
    return j.dump(2) + "\n";
}

std::string render_text(const Report& report, const Signature& sig) {
    std::ostringstream out;
    out << (report.stationary ? "search reached a stationary basis"
                              : "search stopped before becoming stationary (iteration budget)")
        << "\n";
    out << "basis: " << report.basis.size() << " minimal graph(s)\n";
    for (const std::string& line : basis_lines(report, sig)) out << "  " << line << "\n";
    if (!report.verdicts.empty()) {
        out << "verdicts:\n";
        for (const auto& [name, v] : report.verdicts)
            out << "  " << name << ": " << (v == VerdictKind::safe ? "safe" : "inconclusive")
                << "\n";
    }
    out << "stats: " << report.iterations << " iteration(s), " << report.backward_steps
        << " backward step(s), " << report.wall_ms << " ms\n";
    return out.str();
}

}  // namespace ugts
