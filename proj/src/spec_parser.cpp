#include "ugts/spec_parser.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace ugts {

const Hypergraph* SpecFile::find_graph(std::string_view name) const {
    for (const auto& [n, g] : graphs)
        if (n == name) return &g;
    return nullptr;
}

const UQRule* SpecFile::find_rule(std::string_view name) const {
    for (const UQRule& r : rules)
        if (r.name == name) return &r;
    return nullptr;
}

namespace {

struct Token {
    enum Kind { ident, number, punct, end };
    Kind kind;
    std::string text;
    int line;
    int col;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

private:
    void advance() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                col_ = 1;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++col_;
                ++pos_;
            } else if (c == '/' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '/') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
        current_.line = line_;
        current_.col = col_;
        if (pos_ >= text_.size()) {
            current_ = {Token::end, "", line_, col_};
            return;
        }
        char c = text_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_')) {
                ++pos_;
                ++col_;
            }
            current_ = {Token::ident, text_.substr(start, pos_ - start), current_.line, current_.col};
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
                ++col_;
            }
            current_ = {Token::number, text_.substr(start, pos_ - start), current_.line, current_.col};
        } else if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
            pos_ += 2;
            col_ += 2;
            current_ = {Token::punct, "->", current_.line, current_.col};
        } else {
            ++pos_;
            ++col_;
            current_ = {Token::punct, std::string(1, c), current_.line, current_.col};
        }
    }

    const std::string& text_;
    size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token current_{Token::end, "", 1, 1};
};

struct EdgeDecl {
    std::string id;  // empty when anonymous
    std::string label;
    std::vector<std::string> args;
    int line, col;
};

struct BodyDecl {
    std::vector<std::string> node_names;
    std::vector<EdgeDecl> edges;
    int line, col;
};

struct MapEntry {
    std::string from, to;
    int line, col;
};

struct ForallDecl {
    std::string name;
    BodyDecl left, right;
    std::vector<MapEntry> map;
    int line, col;
};

struct RuleDecl {
    std::string name;
    BodyDecl left, right;
    std::vector<MapEntry> map;
    std::vector<ForallDecl> foralls;
    int line, col;
};

// Elaborated body: graph plus name tables.
struct BodyGraph {
    Hypergraph graph;
    std::map<std::string, NodeId> nodes;
    std::map<std::string, EdgeId> edges;  // named edges only
};

class Parser {
public:
    explicit Parser(const std::string& text) : lex_(text) {}

    SpecFile run() {
        expect_keyword("signature");
        expect_punct("{");
        while (!at_punct("}")) {
            Token name = expect(Token::ident, "label name");
            expect_punct("/");
            Token arity = expect(Token::number, "arity");
            if (spec_.signature.find(name.text))
                fail("duplicate label " + name.text, name);
            spec_.signature.add_label(name.text, std::stoi(arity.text));
        }
        expect_punct("}");
        if (spec_.signature.label_count() == 0)
            fail("signature must declare at least one label", lex_.peek());

        while (lex_.peek().kind != Token::end) {
            Token t = expect(Token::ident, "'graph', 'rule', 'init' or 'error'");
            if (t.text == "graph") {
                Token name = expect(Token::ident, "graph name");
                if (spec_.find_graph(name.text)) fail("duplicate graph " + name.text, name);
                expect_punct("{");
                BodyDecl body = parse_body(name);
                expect_punct("}");
                spec_.graphs.emplace_back(name.text, elaborate_body(body).graph);
            } else if (t.text == "rule") {
                RuleDecl decl = parse_rule();
                if (spec_.find_rule(decl.name)) fail("duplicate rule " + decl.name, t);
                spec_.rules.push_back(elaborate_rule(decl));
            } else if (t.text == "init" || t.text == "error") {
                Token name = expect(Token::ident, "graph name");
                expect_punct(";");
                if (!spec_.find_graph(name.text))
                    fail("unknown graph " + name.text, name);
                (t.text == "init" ? spec_.inits : spec_.errors).push_back(name.text);
            } else {
                fail("expected 'graph', 'rule', 'init' or 'error', got '" + t.text + "'", t);
            }
        }
        return std::move(spec_);
    }

private:
    [[noreturn]] void fail(const std::string& msg, const Token& at) {
        throw SpecError(msg, at.line, at.col);
    }

    Token expect(Token::Kind kind, const std::string& what) {
        Token t = lex_.take();
        if (t.kind != kind) fail("expected " + what + ", got '" + t.text + "'", t);
        return t;
    }

    void expect_punct(const std::string& p) {
        Token t = lex_.take();
        if (t.kind != Token::punct || t.text != p) fail("expected '" + p + "'", t);
    }

    void expect_keyword(const std::string& kw) {
        Token t = lex_.take();
        if (t.kind != Token::ident || t.text != kw) fail("expected '" + kw + "'", t);
    }

    bool at_punct(const std::string& p) {
        return lex_.peek().kind == Token::punct && lex_.peek().text == p;
    }

    bool at_ident(const std::string& word) {
        return lex_.peek().kind == Token::ident && lex_.peek().text == word;
    }

    BodyDecl parse_body(const Token& at) {
        BodyDecl body;
        body.line = at.line;
        body.col = at.col;
        if (at_ident("nodes")) {
            lex_.take();
            while (lex_.peek().kind == Token::ident)
                body.node_names.push_back(lex_.take().text);
            expect_punct(";");
            if (body.node_names.empty()) fail("empty node list", lex_.peek());
        }
        while (lex_.peek().kind == Token::ident) {
            Token first = lex_.take();
            EdgeDecl edge;
            edge.line = first.line;
            edge.col = first.col;
            if (at_punct(":")) {
                lex_.take();
                edge.id = first.text;
                edge.label = expect(Token::ident, "edge label").text;
            } else {
                edge.label = first.text;
            }
            expect_punct("(");
            if (!at_punct(")")) {
                edge.args.push_back(expect(Token::ident, "node name").text);
                while (at_punct(",")) {
                    lex_.take();
                    edge.args.push_back(expect(Token::ident, "node name").text);
                }
            }
            expect_punct(")");
            expect_punct(";");
            body.edges.push_back(std::move(edge));
        }
        return body;
    }

    std::vector<MapEntry> parse_map() {
        expect_keyword("map");
        expect_punct("{");
        std::vector<MapEntry> out;
        while (!at_punct("}")) {
            Token from = expect(Token::ident, "element name");
            expect_punct("->");
            Token to = expect(Token::ident, "element name");
            expect_punct(";");
            out.push_back({from.text, to.text, from.line, from.col});
        }
        expect_punct("}");
        return out;
    }

    RuleDecl parse_rule() {
        RuleDecl decl;
        Token name = expect(Token::ident, "rule name");
        decl.name = name.text;
        decl.line = name.line;
        decl.col = name.col;
        expect_punct("{");
        expect_keyword("left");
        expect_punct("{");
        decl.left = parse_body(name);
        expect_punct("}");
        expect_keyword("right");
        expect_punct("{");
        decl.right = parse_body(name);
        expect_punct("}");
        decl.map = parse_map();
        while (at_ident("forall")) {
            lex_.take();
            ForallDecl forall;
            Token fname = expect(Token::ident, "quantification name");
            forall.name = fname.text;
            forall.line = fname.line;
            forall.col = fname.col;
            expect_punct("{");
            expect_keyword("left");
            expect_punct("{");
            forall.left = parse_body(fname);
            expect_punct("}");
            expect_keyword("right");
            expect_punct("{");
            forall.right = parse_body(fname);
            expect_punct("}");
            forall.map = parse_map();
            expect_punct("}");
            decl.foralls.push_back(std::move(forall));
        }
        expect_punct("}");
        return decl;
    }

    BodyGraph elaborate_body(const BodyDecl& body) {
        BodyGraph out;
        std::vector<Edge> edges;
        for (const std::string& n : body.node_names) {
            if (out.nodes.count(n))
                throw SpecError("duplicate node " + n, body.line, body.col);
            out.nodes.emplace(n, static_cast<NodeId>(out.nodes.size()));
        }
        for (const EdgeDecl& e : body.edges) {
            auto label = spec_.signature.find(e.label);
            if (!label) throw SpecError("unknown label " + e.label, e.line, e.col);
            if (spec_.signature.arity(*label) != static_cast<int>(e.args.size()))
                throw SpecError("arity mismatch: " + e.label + "/" +
                                    std::to_string(spec_.signature.arity(*label)) + " used with " +
                                    std::to_string(e.args.size()) + " nodes",
                                e.line, e.col);
            Edge edge;
            edge.label = *label;
            for (const std::string& arg : e.args) {
                auto it = out.nodes.find(arg);
                if (it == out.nodes.end())
                    throw SpecError("dangling node " + arg + " (not declared in this body)", e.line,
                                    e.col);
                edge.nodes.push_back(it->second);
            }
            if (!e.id.empty()) {
                if (out.edges.count(e.id))
                    throw SpecError("duplicate edge id " + e.id, e.line, e.col);
                out.edges.emplace(e.id, static_cast<EdgeId>(edges.size()));
            }
            edges.push_back(std::move(edge));
        }
        out.graph = Hypergraph(static_cast<int>(out.nodes.size()), std::move(edges));
        return out;
    }

    // Morphism induced by a map block between two elaborated bodies.
    PartialMorphism elaborate_map(const BodyGraph& from, const BodyGraph& to,
                                  const std::vector<MapEntry>& entries) {
        PartialMorphism m(from.graph, to.graph);
        for (const MapEntry& entry : entries) {
            auto fn = from.nodes.find(entry.from);
            auto fe = from.edges.find(entry.from);
            if (fn != from.nodes.end()) {
                auto tn = to.nodes.find(entry.to);
                if (tn == to.nodes.end())
                    throw SpecError("map target " + entry.to + " is not a node on the right side",
                                    entry.line, entry.col);
                if (m.node_image(fn->second))
                    throw SpecError("duplicate map entry for node " + entry.from, entry.line,
                                    entry.col);
                m.map_node(fn->second, tn->second);
            } else if (fe != from.edges.end()) {
                auto te = to.edges.find(entry.to);
                if (te == to.edges.end())
                    throw SpecError("map target " + entry.to + " is not a named edge on the right side",
                                    entry.line, entry.col);
                if (m.edge_image(fe->second))
                    throw SpecError("duplicate map entry for edge " + entry.from, entry.line,
                                    entry.col);
                m.map_edge(fe->second, te->second);
            } else {
                throw SpecError("map source " + entry.from + " is not declared on the left side",
                                entry.line, entry.col);
            }
        }
        for (const MapEntry& entry : entries) {
            auto fe = from.edges.find(entry.from);
            if (fe == from.edges.end()) continue;
            EdgeId e = fe->second;
            EdgeId t = *m.edge_image(e);
            const Edge& se = from.graph.edge(e);
            const Edge& te = to.graph.edge(t);
            if (se.label != te.label)
                throw SpecError("map entry " + entry.from + " -> " + entry.to +
                                    " changes the edge label",
                                entry.line, entry.col);
            for (size_t i = 0; i < se.nodes.size(); ++i) {
                auto img = m.node_image(se.nodes[i]);
                if (!img)
                    throw SpecError("edge " + entry.from + " is mapped but its endpoint #" +
                                        std::to_string(i + 1) + " is not",
                                    entry.line, entry.col);
                if (*img != te.nodes[i])
                    throw SpecError("map entry " + entry.from + " -> " + entry.to +
                                        " is inconsistent with the node map at endpoint #" +
                                        std::to_string(i + 1),
                                    entry.line, entry.col);
            }
        }
        return m;
    }

    UQRule elaborate_rule(const RuleDecl& decl) {
        BodyGraph left = elaborate_body(decl.left);
        BodyGraph right = elaborate_body(decl.right);
        UQRule rho;
        rho.name = decl.name;
        rho.base.lhs = left.graph;
        rho.base.rhs = right.graph;
        rho.base.morphism = elaborate_map(left, right, decl.map);

        for (const ForallDecl& forall : decl.foralls) {
            BodyGraph fleft = elaborate_body(forall.left);
            BodyGraph fright = elaborate_body(forall.right);

            // The embedding of the rule's left side is induced by shared names.
            PartialMorphism p(left.graph, fleft.graph);
            for (const auto& [name, v] : left.nodes) {
                auto it = fleft.nodes.find(name);
                if (it == fleft.nodes.end())
                    throw SpecError("forall " + forall.name + ": rule node " + name +
                                        " missing from the quantification's left side",
                                    forall.line, forall.col);
                p.map_node(v, it->second);
            }
            for (const auto& [name, e] : left.edges) {
                auto it = fleft.edges.find(name);
                if (it == fleft.edges.end())
                    throw SpecError("forall " + forall.name + ": rule edge " + name +
                                        " missing from the quantification's left side",
                                    forall.line, forall.col);
                p.map_edge(e, it->second);
            }
            if (static_cast<int>(left.edges.size()) != left.graph.edge_count())
                throw SpecError("rule " + decl.name +
                                    ": every left edge must be named when forall blocks are used",
                                forall.line, forall.col);
            if (!p.is_valid())
                throw SpecError("forall " + forall.name +
                                    ": shared names do not embed the rule's left side",
                                forall.line, forall.col);
            rho.quants.push_back({p, elaborate_map(fleft, fright, forall.map)});
        }

        auto violations = validate_rule(rho);
        if (!violations.empty())
            throw SpecError("rule " + decl.name + ": " + violations.front().message, decl.line,
                            decl.col);
        return rho;
    }

    Lexer lex_;
    SpecFile spec_;
};

}  // namespace

SpecFile parse_spec(const std::string& text) {
    return Parser(text).run();
}

std::string print_graph(const Hypergraph& g, const std::string& name, const Signature& sig,
                        bool single_line) {
    std::ostringstream out;
    const char* sep = single_line ? " " : "\n  ";
    out << "graph " << name << " {";
    if (g.node_count() > 0) {
        out << sep << "nodes";
        for (NodeId v = 0; v < g.node_count(); ++v) out << " n" << v;
        out << ";";
    }
    for (const Edge& e : g.edges()) {
        out << sep << sig.name(e.label) << "(";
        for (size_t i = 0; i < e.nodes.size(); ++i) {
            if (i) out << ", ";
            out << "n" << e.nodes[i];
        }
        out << ");";
    }
    out << (single_line ? " }" : "\n}");
    return out.str();
}

namespace {

void print_body(std::ostringstream& out, const Hypergraph& g, const Signature& sig,
                const std::string& node_prefix, const std::string& edge_prefix,
                const std::string& indent) {
    if (g.node_count() > 0) {
        out << indent << "nodes";
        for (NodeId v = 0; v < g.node_count(); ++v) out << " " << node_prefix << v;
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& edge = g.edge(e);
        out << indent << edge_prefix << e << ": " << sig.name(edge.label) << "(";
        for (size_t i = 0; i < edge.nodes.size(); ++i) {
            if (i) out << ", ";
            out << node_prefix << edge.nodes[i];
        }
        out << ");\n";
    }
}

void print_map(std::ostringstream& out, const PartialMorphism& m, const std::string& from_node,
               const std::string& from_edge, const std::string& to_node,
               const std::string& to_edge, const std::string& indent) {
    out << indent << "map {";
    bool any = false;
    for (NodeId v = 0; v < m.source().node_count(); ++v)
        if (auto img = m.node_image(v)) {
            out << " " << from_node << v << " -> " << to_node << *img << ";";
            any = true;
        }
    for (EdgeId e = 0; e < m.source().edge_count(); ++e)
        if (auto img = m.edge_image(e)) {
            out << " " << from_edge << e << " -> " << to_edge << *img << ";";
            any = true;
        }
    out << (any ? " }" : "}") << "\n";
}

}  // namespace

std::string print_spec(const SpecFile& spec) {
    std::ostringstream out;
    out << "signature {";
    for (LabelId l = 0; l < spec.signature.label_count(); ++l)
        out << " " << spec.signature.name(l) << "/" << spec.signature.arity(l);
    out << " }\n";

    for (const UQRule& rho : spec.rules) {
        out << "\nrule " << rho.name << " {\n";
        out << "  left {\n";
        print_body(out, rho.base.lhs, spec.signature, "n", "e", "    ");
        out << "  }\n  right {\n";
        print_body(out, rho.base.rhs, spec.signature, "m", "f", "    ");
        out << "  }\n";
        print_map(out, rho.base.morphism, "n", "e", "m", "f", "  ");
        for (size_t qi = 0; qi < rho.quants.size(); ++qi) {
            const Quantification& u = rho.quants[qi];
            // Shared elements reuse the rule-side names so that reparsing
            // reconstructs the embedding.
            const Hypergraph& lu = u.p.target();
            std::vector<std::string> node_names(static_cast<size_t>(lu.node_count()));
            std::vector<std::string> edge_names(static_cast<size_t>(lu.edge_count()));
            for (NodeId v = 0; v < lu.node_count(); ++v) node_names[static_cast<size_t>(v)] = "q" + std::to_string(v);
            for (EdgeId e = 0; e < lu.edge_count(); ++e) edge_names[static_cast<size_t>(e)] = "g" + std::to_string(e);
            for (NodeId v = 0; v < rho.base.lhs.node_count(); ++v)
                node_names[static_cast<size_t>(*u.p.node_image(v))] = "n" + std::to_string(v);
            for (EdgeId e = 0; e < rho.base.lhs.edge_count(); ++e)
                edge_names[static_cast<size_t>(*u.p.edge_image(e))] = "e" + std::to_string(e);

            out << "  forall u" << qi << " {\n    left {\n";
            if (lu.node_count() > 0) {
                out << "      nodes";
                for (const std::string& n : node_names) out << " " << n;
                out << ";\n";
            }
            for (EdgeId e = 0; e < lu.edge_count(); ++e) {
                const Edge& edge = lu.edge(e);
                out << "      " << edge_names[static_cast<size_t>(e)] << ": "
                    << spec.signature.name(edge.label) << "(";
                for (size_t i = 0; i < edge.nodes.size(); ++i) {
                    if (i) out << ", ";
                    out << node_names[static_cast<size_t>(edge.nodes[i])];
                }
                out << ");\n";
            }
            out << "    }\n    right {\n";
            print_body(out, u.q.target(), spec.signature, "r", "h", "      ");
            out << "    }\n    map {";
            for (NodeId v = 0; v < lu.node_count(); ++v)
                if (auto img = u.q.node_image(v))
                    out << " " << node_names[static_cast<size_t>(v)] << " -> r" << *img << ";";
            for (EdgeId e = 0; e < lu.edge_count(); ++e)
                if (auto img = u.q.edge_image(e))
                    out << " " << edge_names[static_cast<size_t>(e)] << " -> h" << *img << ";";
            out << " }\n  }\n";
        }
        out << "}\n";
    }

    out << "\n";
    for (const auto& [name, g] : spec.graphs) out << print_graph(g, name, spec.signature) << "\n";
    for (const std::string& name : spec.errors) out << "error " << name << ";\n";
    for (const std::string& name : spec.inits) out << "init " << name << ";\n";
    return out.str();
}

}  // namespace ugts
