#pragma once

#include <stdexcept>

#include "ugts/rules.hpp"

namespace ugts {

/// Parse or validation failure with its position in the input text.
class SpecError : public std::runtime_error {
public:
    SpecError(const std::string& message, int line, int col)
        : std::runtime_error(std::to_string(line) + ":" + std::to_string(col) + ": " + message),
          line_(line),
          col_(col) {}
    int line() const { return line_; }
    int col() const { return col_; }

private:
    int line_;
    int col_;
};

struct SpecFile {
    Signature signature;
    std::vector<std::pair<std::string, Hypergraph>> graphs;
    std::vector<UQRule> rules;
    std::vector<std::string> inits;    // graph names
    std::vector<std::string> errors;   // graph names, the final set
    const Hypergraph* find_graph(std::string_view name) const;
    const UQRule* find_rule(std::string_view name) const;
};

/// Parses the textual spec format and validates everything against the
/// signature. Throws SpecError with line/column on the first problem.
SpecFile parse_spec(const std::string& text);

/// Graph in spec syntax, reparsable. Nodes print as n0, n1, ...
std::string print_graph(const Hypergraph& g, const std::string& name, const Signature& sig,
                        bool single_line = false);

/// Whole spec in spec syntax; reparsing yields isomorphic graphs and rules.
std::string print_spec(const SpecFile& spec);

}  // namespace ugts
