#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ugts/backward.hpp"
#include "ugts/dot.hpp"
#include "ugts/fixtures.hpp"
#include "ugts/report.hpp"
#include "ugts/spec_parser.hpp"

namespace {

constexpr int kExitSafe = 0;
constexpr int kExitInconclusive = 1;
constexpr int kExitInputError = 2;
constexpr int kExitBudget = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ugts::SpecFile load_spec(const std::string& path) {
    try {
        return ugts::parse_spec(read_file(path));
    } catch (const ugts::SpecError& e) {
        throw std::runtime_error(path + ":" + e.what());
    }
}

int run_check(const std::string& path, const std::string& mode, std::optional<int> path_bound,
              std::optional<int> max_iterations, const std::string& dot_dir, bool no_postcond_lift,
              bool json) {
    ugts::SpecFile spec = load_spec(path);
    if (spec.errors.empty()) throw std::runtime_error(path + ": no error graphs declared");

    ugts::SearchConfig cfg;
    if (mode == "restricted") {
        if (!path_bound) throw std::runtime_error("--mode restricted requires --path-bound");
        cfg.mode = ugts::SearchConfig::Mode::restricted;
        cfg.path_bound = ugts::PathBound{*path_bound};
    } else if (mode == "general") {
        cfg.mode = ugts::SearchConfig::Mode::general;
    } else {
        throw std::runtime_error("unknown mode " + mode);
    }
    cfg.postcond_lift = !no_postcond_lift;
    cfg.max_iterations = max_iterations;

    std::vector<ugts::Hypergraph> finals;
    for (const std::string& name : spec.errors) finals.push_back(*spec.find_graph(name));

    auto started = std::chrono::steady_clock::now();
    ugts::SearchState state = ugts::backward_search(spec.rules, finals, cfg);
    long wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - started)
                       .count();

    ugts::Report report = ugts::build_report(spec, state, cfg, wall_ms);
    std::cout << (json ? ugts::render_json(report, spec.signature)
                       : ugts::render_text(report, spec.signature));

    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (size_t i = 0; i < report.basis.size(); ++i) {
            std::ofstream out(std::filesystem::path(dot_dir) /
                              ("basis_" + std::to_string(i) + ".dot"));
            out << ugts::render_dot(report.basis[i], spec.signature);
        }
    }

    if (!report.stationary) return kExitBudget;
    for (const auto& [name, v] : report.verdicts)
        if (v == ugts::VerdictKind::inconclusive) return kExitInconclusive;
    return kExitSafe;
}

int run_show(const std::string& path, const std::string& graph_name) {
    ugts::SpecFile spec = load_spec(path);
    const ugts::Hypergraph* g = spec.find_graph(graph_name);
    if (!g) throw std::runtime_error(path + ": no graph named " + graph_name);
    std::cout << ugts::render_dot(*g, spec.signature);
    return kExitSafe;
}

// Agreement of the backward step with the brute-force predecessor search on
// every enumerable host, using the built-in dining system.
int run_selftest(int max_size) {
    if (max_size < 1 || max_size > 8)
        throw std::runtime_error("--max-size must be between 1 and 8");
    ugts::SpecFile spec = ugts::parse_spec(ugts::kDiningSpec);
    ugts::EnumBounds bounds{max_size, max_size, max_size, {}};

    std::cout << "enumerating hosts up to " << max_size << " elements..." << std::flush;
    auto entries = ugts::forward_successors(spec.rules, spec.signature, bounds);
    std::cout << " " << entries.size() << " graphs\n";

    ugts::SearchConfig cfg;
    ugts::QuotientCache cache;
    size_t checked = 0, failures = 0;
    for (const auto& entry : entries) {
        const ugts::Hypergraph& g = entry.host;
        std::vector<ugts::Hypergraph> produced;
        for (const ugts::UQRule& rho : spec.rules)
            for (const ugts::Predecessor& p : ugts::backward_step(rho, g, cfg, &cache))
                if (p.graph.element_count() <= max_size) produced.push_back(p.graph);
        ugts::Basis via_backward = ugts::minimize(produced);

        std::vector<ugts::Hypergraph> preds;
        auto gc = ugts::label_counts(g);
        for (const auto& other : entries) {
            for (const ugts::Hypergraph& succ : other.successors) {
                if (succ.element_count() >= g.element_count() &&
                    ugts::label_counts_leq(gc, ugts::label_counts(succ)) &&
                    ugts::subgraph_leq(g, succ)) {
                    preds.push_back(other.host);
                    break;
                }
            }
        }
        ugts::Basis via_oracle = ugts::minimize(preds);

        bool same = via_backward.size() == via_oracle.size();
        if (same)
            for (const ugts::Hypergraph& b : via_backward.members)
                if (!std::any_of(via_oracle.members.begin(), via_oracle.members.end(),
                                 [&](const ugts::Hypergraph& o) {
                                     return ugts::isomorphic(b, o).has_value();
                                 }))
                    same = false;
        ++checked;
        if (!same) {
            ++failures;
            std::cout << "MISMATCH on host: "
                      << ugts::print_graph(g, "host", spec.signature, true) << "\n";
        }
    }
    std::cout << "selftest: " << checked << " hosts checked, " << failures << " mismatch(es)\n";
    return failures == 0 ? kExitSafe : kExitInconclusive;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Coverability checker for graph transformation systems with universally "
                 "quantified rules"};
    app.require_subcommand(1);

    std::string spec_path, mode = "general", dot_dir, graph_name;
    std::optional<int> path_bound, max_iterations;
    bool no_postcond_lift = false, json = false;
    int max_size = 4;

    CLI::App* check = app.add_subcommand("check", "Run the backward search on a spec file");
    check->add_option("spec", spec_path, "spec file")->required();
    check->add_option("--mode", mode, "restricted or general")->check(CLI::IsMember({"restricted", "general"}));
    check->add_option("--path-bound", path_bound, "path bound k for restricted mode");
    check->add_option("--max-iterations", max_iterations, "sweep budget");
    check->add_option("--emit-dot", dot_dir, "write basis members as DOT files into this directory");
    check->add_flag("--no-postcond-lift", no_postcond_lift, "disable the lifted application condition");
    check->add_flag("--json", json, "machine-readable report");

    CLI::App* selftest = app.add_subcommand("selftest", "Check the backward step against the brute-force oracle");
    selftest->add_option("--max-size", max_size, "max host size in nodes+edges (default 4)");

    CLI::App* show = app.add_subcommand("show", "Print a graph from a spec file as DOT");
    show->add_option("spec", spec_path, "spec file")->required();
    show->add_option("--graph", graph_name, "graph name")->required();

    try {
        app.parse(argc, argv);
        if (check->parsed())
            return run_check(spec_path, mode, path_bound, max_iterations, dot_dir,
                             no_postcond_lift, json);
        if (selftest->parsed()) return run_selftest(max_size);
        return run_show(spec_path, graph_name);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
}
