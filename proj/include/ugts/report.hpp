#pragma once

#include "ugts/backward.hpp"
#include "ugts/spec_parser.hpp"

namespace ugts {

struct Report {
    bool stationary = false;
    std::vector<Hypergraph> basis;  // canonical forms in a canonical order
    std::vector<std::pair<std::string, VerdictKind>> verdicts;  // per init, file order
    int iterations = 0;
    long backward_steps = 0;
    long wall_ms = 0;
};

/// Canonicalizes the basis (canonical form per member, sorted by size, hash and
/// serialization) and derives the per-init verdicts.
Report build_report(const SpecFile& spec, const SearchState& state, const SearchConfig& cfg,
                    long wall_ms);

/// Basis members serialized in graph syntax, in report order.
std::vector<std::string> basis_lines(const Report& report, const Signature& sig);

std::string render_json(const Report& report, const Signature& sig);
std::string render_text(const Report& report, const Signature& sig);

}  // namespace ugts
