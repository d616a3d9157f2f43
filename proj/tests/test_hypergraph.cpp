#include "doctest.h"
#include "test_util.hpp"
#include "ugts/hypergraph.hpp"

using namespace ugts;
using namespace ugts::testing;

TEST_CASE("validate_graph accepts the empty graph") {
    CHECK(validate_graph(Hypergraph(), dining_signature()).empty());
}

TEST_CASE("validate_graph flags dangling endpoints") {
    // one node, edge F(p, q) where q does not exist
    Hypergraph g = graph(1, {{F, {0, 5}}});
    auto v = validate_graph(g, dining_signature());
    REQUIRE(v.size() == 1);
    CHECK(v[0].message.find("dangling endpoint 5") != std::string::npos);
}

TEST_CASE("validate_graph flags arity mismatches") {
    Hypergraph g = graph(1, {{OF, {0}}});  // OF has arity 2
    auto v = validate_graph(g, dining_signature());
    REQUIRE(v.size() == 1);
    CHECK(v[0].message.find("arity mismatch") != std::string::npos);
}

TEST_CASE("validate_graph flags unknown labels") {
    Hypergraph g = graph(1, {{99, {0}}});
    auto v = validate_graph(g, dining_signature());
    REQUIRE(v.size() == 1);
    CHECK(v[0].message.find("unknown label") != std::string::npos);
}

TEST_CASE("isomorphic: identity and renaming") {
    Hypergraph g = graph(2, {{F, {0, 1}}});
    auto id = isomorphic(g, g);
    REQUIRE(id);
    CHECK(id->is_total());
    CHECK(id->is_injective());
    CHECK(id->is_surjective());

    Hypergraph h = graph(2, {{F, {1, 0}}});  // same shape, nodes swapped
    auto w = isomorphic(g, h);
    REQUIRE(w);
    CHECK(*w->node_image(0) == 1);
    CHECK(*w->node_image(1) == 0);
}

TEST_CASE("isomorphic distinguishes a loop from a two-node edge") {
    Hypergraph g = graph(2, {{F, {0, 1}}});
    Hypergraph h = graph(1, {{F, {0, 0}}});
    CHECK(!isomorphic(g, h));
}

TEST_CASE("isomorphic is an equivalence on random graphs") {
    Rng rng(1234);
    std::vector<Hypergraph> pool;
    for (int i = 0; i < 40; ++i) pool.push_back(random_graph(rng, 6));
    for (size_t i = 0; i < pool.size(); ++i) {
        CHECK(isomorphic(pool[i], pool[i]));  // reflexive
        for (size_t j = 0; j < pool.size(); ++j) {
            auto w = isomorphic(pool[i], pool[j]);
            auto back = isomorphic(pool[j], pool[i]);
            CHECK(w.has_value() == back.has_value());  // symmetric
            if (!w) continue;
            for (size_t k = 0; k < pool.size(); ++k) {
                auto second = isomorphic(pool[j], pool[k]);
                if (second) CHECK(isomorphic(pool[i], pool[k]));  // transitive
            }
        }
    }
}

TEST_CASE("within_path_bound basics") {
    CHECK(within_path_bound(graph(1, {}), PathBound{0}));

    // triangle of three binary edges: longest simple path has 2 edges
    Hypergraph triangle = graph(3, {{F, {0, 1}}, {F, {1, 2}}, {F, {2, 0}}});
    CHECK(longest_simple_path(triangle) == 2);
    CHECK(within_path_bound(triangle, PathBound{2}));
    CHECK(!within_path_bound(triangle, PathBound{1}));

    // unary edges never join two distinct nodes
    Hypergraph unary = graph(1, {{T, {0}}, {H, {0}}, {E, {0}}});
    CHECK(within_path_bound(unary, PathBound{0}));

    // a loop cannot extend a path either
    Hypergraph loop = graph(1, {{F, {0, 0}}});
    CHECK(within_path_bound(loop, PathBound{0}));
}

TEST_CASE("within_path_bound is monotone in k and antitone in edges") {
    Rng rng(99);
    for (int i = 0; i < 60; ++i) {
        Hypergraph g = random_graph(rng, 7);
        int longest = longest_simple_path(g);
        for (int k = 0; k <= longest + 1; ++k)
            CHECK(within_path_bound(g, PathBound{k}) == (k >= longest));
        // adding an edge can only grow the longest path
        if (g.node_count() >= 2) {
            auto edges = g.edges();
            edges.push_back({F, {0, g.node_count() - 1}});
            Hypergraph bigger(g.node_count(), edges);
            CHECK(longest_simple_path(bigger) >= longest);
        }
    }
}

TEST_CASE("bounded-path membership is closed under subgraphs") {
    Rng rng(314);
    for (int i = 0; i < 25; ++i) {
        Hypergraph g = random_graph(rng, 6);
        int k = longest_simple_path(g);
        REQUIRE(within_path_bound(g, PathBound{k}));
        for (const auto& [witness, rep] : enumerate_subgraph_quotients(g))
            CHECK(within_path_bound(rep, PathBound{k}));
    }
}

TEST_CASE("canonical_hash is invariant under node renaming") {
    Rng rng(5);
    for (int i = 0; i < 50; ++i) {
        Hypergraph g = random_graph(rng, 7);
        // reverse the node order
        int n = g.node_count();
        std::vector<Edge> edges = g.edges();
        for (Edge& e : edges)
            for (NodeId& v : e.nodes) v = n - 1 - v;
        Hypergraph h(n, edges);
        CHECK(canonical_hash(g) == canonical_hash(h));
    }
}

TEST_CASE("canonical_form maps isomorphic graphs to the same value") {
    Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Hypergraph g = random_graph(rng, 7);
        int n = g.node_count();
        std::vector<Edge> edges = g.edges();
        for (Edge& e : edges)
            for (NodeId& v : e.nodes) v = n - 1 - v;
        std::reverse(edges.begin(), edges.end());
        Hypergraph h(n, edges);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(isomorphic(canonical_form(g), g));
    }
}

TEST_CASE("disjoint_union sizes and labels") {
    Hypergraph a = graph(1, {{T, {0}}});
    Hypergraph b = graph(2, {{F, {0, 1}}});
    Hypergraph u = disjoint_union(a, b);
    CHECK(u.node_count() == 3);
    CHECK(u.edge_count() == 2);
    CHECK(u.edge(1).nodes == std::vector<NodeId>{1, 2});
}
