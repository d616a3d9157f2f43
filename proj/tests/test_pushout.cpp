#include "doctest.h"
#include "test_util.hpp"
#include "ugts/pushout.hpp"

using namespace ugts;
using namespace ugts::testing;

TEST_CASE("pushout of identities reproduces the source") {
    Hypergraph g0 = graph(2, {{F, {0, 1}}, {T, {0}}});
    PartialMorphism id = PartialMorphism::identity(g0);
    PushoutResult po = pushout(id, id);
    CHECK(isomorphic(po.object, g0));
    CHECK(po.left_inj.is_total());
    CHECK(po.right_inj.is_total());
}

TEST_CASE("pushout merges two endpoints into a loop") {
    Hypergraph g0 = graph(2, {});
    Hypergraph merged = graph(1, {});
    Hypergraph spanned = graph(2, {{F, {0, 1}}});
    PartialMorphism phi(g0, merged);
    phi.map_node(0, 0);
    phi.map_node(1, 0);
    PartialMorphism psi(g0, spanned);
    psi.map_node(0, 0);
    psi.map_node(1, 1);
    PushoutResult po = pushout(phi, psi);
    CHECK(po.object.node_count() == 1);
    REQUIRE(po.object.edge_count() == 1);
    CHECK(po.object.edge(0).label == F);
    CHECK(po.object.edge(0).nodes == std::vector<NodeId>{0, 0});
}

TEST_CASE("pushout deletion invalidates incident edges") {
    Hypergraph g0 = graph(1, {});
    Hypergraph empty;
    Hypergraph with_state = graph(1, {{T, {0}}});
    PartialMorphism phi(g0, empty);  // node deleted
    PartialMorphism psi(g0, with_state);
    psi.map_node(0, 0);
    PushoutResult po = pushout(phi, psi);
    CHECK(po.object.node_count() == 0);
    CHECK(po.object.edge_count() == 0);
    CHECK(!po.right_inj.node_image(0));
    CHECK(!po.right_inj.edge_image(0));
}

TEST_CASE("is_pushout accepts the construction and rejects perturbations") {
    Hypergraph g0 = graph(2, {});
    Hypergraph merged = graph(1, {});
    PartialMorphism phi(g0, merged);
    phi.map_node(0, 0);
    phi.map_node(1, 0);
    PartialMorphism psi = PartialMorphism::identity(g0);

    PushoutResult po = pushout(phi, psi);
    CHECK(is_pushout(phi, psi, po));

    SUBCASE("extra isolated node breaks uniqueness") {
        Hypergraph bigger = graph(po.object.node_count() + 1, po.object.edges());
        PartialMorphism left(merged, bigger), right(g0, bigger);
        for (NodeId v = 0; v < merged.node_count(); ++v)
            if (auto img = po.left_inj.node_image(v)) left.map_node(v, *img);
        for (NodeId v = 0; v < g0.node_count(); ++v)
            if (auto img = po.right_inj.node_image(v)) right.map_node(v, *img);
        CHECK(!is_pushout(phi, psi, {bigger, left, right}));
    }

    SUBCASE("missing merge breaks commutativity") {
        Hypergraph two = graph(2, {});
        PartialMorphism left(merged, two), right(g0, two);
        left.map_node(0, 0);
        right.map_node(0, 0);
        right.map_node(1, 1);  // should have been merged with node 0
        CHECK(!is_pushout(phi, psi, {two, left, right}));
    }
}

TEST_CASE("pushout properties on random spans") {
    Rng rng(2024);
    for (int i = 0; i < 250; ++i) {
        Hypergraph g0 = random_graph(rng, 5);
        PartialMorphism phi = random_morphism_from(rng, g0, 3);
        PartialMorphism psi = random_morphism_from(rng, g0, 3);
        REQUIRE(phi.is_valid());
        REQUIRE(psi.is_valid());
        PushoutResult po = pushout(phi, psi);
        CHECK(is_pushout(phi, psi, po));
        // symmetry: the swapped cospan is the pushout of the swapped span
        CHECK(is_pushout(psi, phi, {po.object, po.right_inj, po.left_inj}));
    }
}

TEST_CASE("pushout preserves totality and injectivity of the opposite leg") {
    Rng rng(555);
    for (int i = 0; i < 100; ++i) {
        Hypergraph g0 = random_graph(rng, 5);
        PartialMorphism phi = random_morphism_from(rng, g0, 3);
        // a total injective psi: embed g0 into itself plus context
        Hypergraph extended = disjoint_union(g0, random_graph(rng, 3));
        PartialMorphism psi(g0, extended);
        for (NodeId v = 0; v < g0.node_count(); ++v) psi.map_node(v, v);
        for (EdgeId e = 0; e < g0.edge_count(); ++e) psi.map_edge(e, e);
        REQUIRE(psi.is_total());
        REQUIRE(psi.is_injective());
        PushoutResult po = pushout(phi, psi);
        CHECK(po.left_inj.is_total());
        CHECK(po.left_inj.is_injective());
    }
}

TEST_CASE("mediating morphism factors commuting cospans uniquely") {
    // span: the shared philosopher embeds into two one-fork contexts
    Hypergraph g0 = graph(1, {{H, {0}}});
    Hypergraph g1 = graph(2, {{H, {0}}, {OF, {1, 0}}});
    Hypergraph g2 = graph(2, {{H, {0}}, {F, {0, 1}}});
    PartialMorphism phi(g0, g1);
    phi.map_node(0, 0);
    phi.map_edge(0, 0);
    PartialMorphism psi(g0, g2);
    psi.map_node(0, 0);
    psi.map_edge(0, 0);
    PushoutResult po = pushout(phi, psi);

    // a competing cospan into a larger graph
    Hypergraph x = graph(4, {{H, {0}}, {OF, {1, 0}}, {F, {0, 2}}, {T, {3}}});
    PartialMorphism to_left(g1, x);
    to_left.map_node(0, 0);
    to_left.map_node(1, 1);
    to_left.map_edge(0, 0);
    to_left.map_edge(1, 1);
    PartialMorphism to_right(g2, x);
    to_right.map_node(0, 0);
    to_right.map_node(1, 2);
    to_right.map_edge(0, 0);
    to_right.map_edge(1, 2);

    auto eta = mediating_morphism(po, to_left, to_right);
    REQUIRE(eta);
    CHECK(compose(po.left_inj, *eta).same_mapping(to_left));
    CHECK(compose(po.right_inj, *eta).same_mapping(to_right));

    // breaking commutativity on the shared part kills the factorization
    PartialMorphism broken = to_right;
    broken.map_node(0, 3);
    CHECK(!mediating_morphism(po, to_left, broken));
}

TEST_CASE("minimal pushout complement of the identity is the host") {
    Hypergraph a = graph(1, {{H, {0}}});
    Hypergraph g = graph(2, {{H, {0}}, {F, {0, 1}}});
    PartialMorphism comatch(a, g);
    comatch.map_node(0, 0);
    comatch.map_edge(0, 0);
    auto pocs = minimal_pushout_complements(PartialMorphism::identity(a), comatch);
    REQUIRE(pocs.size() == 1);
    CHECK(isomorphic(pocs[0].complement, g));
    CHECK(pocs[0].match.is_total());
    CHECK(pocs[0].match.is_injective());
}

TEST_CASE("minimal pushout complement reverses a deletion-creation rule") {
    // delta: {p, T(p)} -> {p, H(p)} deleting T and creating H
    Hypergraph a = graph(1, {{T, {0}}});
    Hypergraph b = graph(1, {{H, {0}}});
    PartialMorphism delta(a, b);
    delta.map_node(0, 0);
    PartialMorphism comatch = PartialMorphism::identity(b);
    auto pocs = minimal_pushout_complements(delta, comatch);
    REQUIRE(pocs.size() == 1);
    CHECK(isomorphic(pocs[0].complement, a));
}

TEST_CASE("minimal pushout complement with empty image side is a disjoint union") {
    Hypergraph a = graph(1, {{T, {0}}});
    Hypergraph empty;
    PartialMorphism delta(a, empty);  // everything deleted
    Hypergraph g = graph(2, {{E, {0}}, {F, {0, 1}}});
    PartialMorphism comatch(empty, g);
    auto pocs = minimal_pushout_complements(delta, comatch);
    REQUIRE(pocs.size() == 1);
    CHECK(isomorphic(pocs[0].complement, disjoint_union(g, a)));
}

TEST_CASE("complements vanish when a context edge touches a created node") {
    // delta creates a fresh node carrying the only H; the host hangs an F edge
    // on the comatch image of that created node.
    Hypergraph a = graph(0, {});
    Hypergraph b = graph(1, {{H, {0}}});
    PartialMorphism delta(a, b);
    Hypergraph g = graph(2, {{H, {0}}, {F, {0, 1}}});
    PartialMorphism comatch(b, g);
    comatch.map_node(0, 0);
    comatch.map_edge(0, 0);
    CHECK(minimal_pushout_complements(delta, comatch).empty());
}

TEST_CASE("path bound filters complements before the caller minimizes") {
    // delta deletes everything; complements are host + fresh chain piece
    Hypergraph a = graph(3, {{F, {0, 1}}, {F, {1, 2}}});
    Hypergraph empty;
    PartialMorphism delta(a, empty);
    Hypergraph g = graph(2, {{F, {0, 1}}});
    PartialMorphism comatch(empty, g);
    auto unbounded = minimal_pushout_complements(delta, comatch);
    REQUIRE(unbounded.size() == 1);
    CHECK(longest_simple_path(unbounded[0].complement) == 2);
    CHECK(minimal_pushout_complements(delta, comatch, PathBound{1}).empty());
    CHECK(minimal_pushout_complements(delta, comatch, PathBound{2}).size() == 1);
}

TEST_CASE("merging rules split complements into fiber choices") {
    // delta merges a1 and a2 onto b; only a1 carries the T edge. A host edge
    // hanging on the comatch image of b can re-attach to either preimage,
    // giving two non-isomorphic minimal complements.
    Hypergraph a = graph(2, {{T, {0}}});
    Hypergraph b = graph(1, {{T, {0}}});
    PartialMorphism delta(a, b);
    delta.map_node(0, 0);
    delta.map_node(1, 0);
    delta.map_edge(0, 0);
    Hypergraph g = graph(2, {{T, {0}}, {F, {0, 1}}});
    PartialMorphism comatch(b, g);
    comatch.map_node(0, 0);
    comatch.map_edge(0, 0);

    auto pocs = minimal_pushout_complements(delta, comatch);
    REQUIRE(pocs.size() == 2);
    CHECK(!isomorphic(pocs[0].complement, pocs[1].complement));
    std::vector<Hypergraph> got;
    for (const auto& poc : pocs) {
        CHECK(isomorphic(pushout(delta, poc.match).object, g));
        got.push_back(poc.complement);
    }
    Basis expected = minimize(poc_oracle(delta, comatch, dining_signature()));
    CHECK(bases_isomorphic(minimize(got), expected));
}

TEST_CASE("complement round-trip against the brute-force oracle") {
    Signature sig = dining_signature();
    const UQRule& rho = dining_rule("get_hungry");
    const PartialMorphism& delta = rho.base.morphism;
    EnumBounds bounds{4, 4, 4, {}};
    for (const Hypergraph& g : enumerate_graphs(sig, bounds)) {
        for (const PartialMorphism& comatch : enumerate_matches(rho.base.rhs, g)) {
            auto pocs = minimal_pushout_complements(delta, comatch);
            std::vector<Hypergraph> got;
            for (const auto& poc : pocs) {
                // each complement really rewrites back onto the host
                PushoutResult po = pushout(delta, poc.match);
                CHECK(isomorphic(po.object, g));
                got.push_back(poc.complement);
            }
            Basis expected = minimize(poc_oracle(delta, comatch, sig));
            CHECK(bases_isomorphic(minimize(got), expected));
        }
    }
}
