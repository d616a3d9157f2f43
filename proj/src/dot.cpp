#include "ugts/dot.hpp"

#include <algorithm>
#include <sstream>

namespace ugts {

std::string render_dot(const Hypergraph& g, const Signature& sig) {
    std::ostringstream out;
    out << "digraph G {\n";
    if (g.node_count() > 0) out << "  node [shape=circle];\n";

    // Unary edges annotate their node.
    std::vector<std::vector<std::string>> annotations(static_cast<size_t>(g.node_count()));
    for (const Edge& e : g.edges())
        if (e.nodes.size() == 1)
            annotations[static_cast<size_t>(e.nodes[0])].push_back(sig.name(e.label));
    for (auto& a : annotations) std::sort(a.begin(), a.end());

    for (NodeId v = 0; v < g.node_count(); ++v) {
        out << "  n" << v << " [label=\"n" << v;
        for (const std::string& a : annotations[static_cast<size_t>(v)]) out << ":" << a;
        out << "\"];\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        if (edge.nodes.size() == 1) continue;
        if (edge.nodes.size() == 2) {
            out << "  n" << edge.nodes[0] << " -> n" << edge.nodes[1] << " [label=\""
                << sig.name(edge.label) << "\"];\n";
        } else {
            out << "  e" << e << " [shape=box, label=\"" << sig.name(edge.label) << "\"];\n";
            for (size_t i = 0; i < edge.nodes.size(); ++i)
                out << "  e" << e << " -> n" << edge.nodes[i] << " [label=\"" << (i + 1)
                    << "\"];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace ugts
