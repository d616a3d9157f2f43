#include <algorithm>

#include "doctest.h"
#include "test_util.hpp"
#include "ugts/rules.hpp"

using namespace ugts;
using namespace ugts::testing;

namespace {

// Rule with two quantifications on the same node: one converts F spokes into
// owned forks, the other consumes OF spokes.
UQRule two_quant_rule() {
    UQRule rho;
    rho.name = "sync";
    rho.base.lhs = graph(1, {});
    rho.base.rhs = graph(1, {});
    rho.base.morphism = PartialMorphism(rho.base.lhs, rho.base.rhs);
    rho.base.morphism.map_node(0, 0);

    Quantification u1;
    Hypergraph l1 = graph(2, {{F, {1, 0}}});
    Hypergraph r1 = graph(2, {{OF, {1, 0}}});
    u1.p = PartialMorphism(rho.base.lhs, l1);
    u1.p.map_node(0, 0);
    u1.q = PartialMorphism(l1, r1);
    u1.q.map_node(0, 0);
    u1.q.map_node(1, 1);
    rho.quants.push_back(u1);

    Quantification u2;
    Hypergraph l2 = graph(2, {{OF, {1, 0}}});
    Hypergraph r2 = graph(2, {});
    u2.p = PartialMorphism(rho.base.lhs, l2);
    u2.p.map_node(0, 0);
    u2.q = PartialMorphism(l2, r2);
    u2.q.map_node(0, 0);
    u2.q.map_node(1, 1);
    rho.quants.push_back(u2);
    return rho;
}

}  // namespace

TEST_CASE("validate_rule accepts the fixture rules") {
    for (const UQRule& rho : dining_spec().rules) {
        auto v = validate_rule(rho);
        CHECK_MESSAGE(v.empty(), rho.name, ": ", v.empty() ? "" : v[0].message);
    }
    CHECK(validate_rule(two_quant_rule()).empty());
}

TEST_CASE("validate_rule rejects a quantification deleting the shared part") {
    UQRule rho;
    rho.name = "bad";
    rho.base.lhs = graph(1, {{H, {0}}});
    rho.base.rhs = graph(1, {{E, {0}}});
    rho.base.morphism = PartialMorphism(rho.base.lhs, rho.base.rhs);
    rho.base.morphism.map_node(0, 0);

    Quantification u;
    Hypergraph lu = graph(2, {{H, {0}}, {OF, {1, 0}}});
    Hypergraph ru = graph(2, {{OF, {1, 0}}});
    u.p = PartialMorphism(rho.base.lhs, lu);
    u.p.map_node(0, 0);
    u.p.map_edge(0, 0);
    u.q = PartialMorphism(lu, ru);  // drops the shared H edge
    u.q.map_node(0, 0);
    u.q.map_node(1, 1);
    u.q.map_edge(1, 0);
    rho.quants.push_back(u);

    auto v = validate_rule(rho);
    REQUIRE(!v.empty());
    CHECK(v[0].message.find("undefined") != std::string::npos);
}

TEST_CASE("validate_rule rejects empty quantified node sets") {
    UQRule rho;
    rho.name = "no_neighbourhood";
    rho.base.lhs = graph(1, {});
    rho.base.rhs = graph(1, {});
    rho.base.morphism = PartialMorphism(rho.base.lhs, rho.base.rhs);
    rho.base.morphism.map_node(0, 0);
    Quantification u;
    Hypergraph lu = graph(2, {});  // adds a node but no incident edge
    u.p = PartialMorphism(rho.base.lhs, lu);
    u.p.map_node(0, 0);
    u.q = PartialMorphism::identity(lu);
    rho.quants.push_back(u);
    REQUIRE(quantified_nodes(rho, rho.quants[0]).empty());
    auto v = validate_rule(rho);
    REQUIRE(!v.empty());
    CHECK(v[0].message.find("no quantified nodes") != std::string::npos);
}

TEST_CASE("quantified nodes of the fixture rules") {
    const UQRule& release_all = dining_rule("release_all");
    REQUIRE(release_all.quants.size() == 1);
    CHECK(quantified_nodes(release_all, release_all.quants[0]) ==
          std::vector<NodeId>{0});  // the philosopher

    // union over quantifications
    UQRule sync = two_quant_rule();
    CHECK(quantified_nodes(sync) == std::vector<NodeId>{0});
}

TEST_CASE("zero-count instantiation is the base rule") {
    const UQRule& rho = dining_rule("release_all");
    Instantiation inst = instantiate(rho, {0});
    CHECK(inst.pi.same_mapping(PartialMorphism::identity(rho.base.lhs)));
    CHECK(inst.gamma.same_mapping(rho.base.morphism));
    CHECK(inst.length() == 0);
}

TEST_CASE("release_all instantiation of length one") {
    const UQRule& rho = dining_rule("release_all");
    Instantiation inst = instantiate(rho, {1});
    // extended left: E-philosopher with one owned fork
    Hypergraph expect_l = graph(2, {{E, {0}}, {OF, {1, 0}}});
    Hypergraph expect_r = graph(2, {{T, {0}}, {F, {1, 0}}});
    CHECK(isomorphic(inst.lhs_ext(), expect_l));
    CHECK(isomorphic(inst.rhs_ext(), expect_r));
    CHECK(inst.pi.is_total());
    CHECK(inst.pi.is_injective());

    // gamma keeps the philosopher and the fork's far end, drops both edges
    int defined_edges = 0;
    for (EdgeId e = 0; e < inst.lhs_ext().edge_count(); ++e)
        if (inst.gamma.edge_image(e)) ++defined_edges;
    CHECK(defined_edges == 0);
    CHECK(inst.gamma.node_image(*inst.pi.node_image(0)));
}

TEST_CASE("start_eating instantiation keeps owned forks") {
    const UQRule& rho = dining_rule("start_eating");
    Instantiation inst = instantiate(rho, {2});
    Hypergraph expect_l = graph(3, {{H, {0}}, {OF, {1, 0}}, {OF, {2, 0}}});
    Hypergraph expect_r = graph(3, {{E, {0}}, {OF, {1, 0}}, {OF, {2, 0}}});
    CHECK(isomorphic(inst.lhs_ext(), expect_l));
    CHECK(isomorphic(inst.rhs_ext(), expect_r));
    // the two fork edges survive rewriting
    int defined_edges = 0;
    for (EdgeId e = 0; e < inst.lhs_ext().edge_count(); ++e)
        if (inst.gamma.edge_image(e)) ++defined_edges;
    CHECK(defined_edges == 2);
}

TEST_CASE("instantiation order independence") {
    UQRule sync = two_quant_rule();
    for (int c1 = 0; c1 <= 3; ++c1) {
        for (int c2 = 0; c1 + c2 <= 3; ++c2) {
            // all interleavings of c1 uses of quant 0 and c2 of quant 1
            std::vector<int> order;
            for (int i = 0; i < c1; ++i) order.push_back(0);
            for (int i = 0; i < c2; ++i) order.push_back(1);
            std::sort(order.begin(), order.end());
            Instantiation reference = instantiate(sync, {c1, c2});
            do {
                Instantiation other = instantiate_sequence(sync, order);
                CHECK(instantiations_isomorphic(reference, other));
            } while (std::next_permutation(order.begin(), order.end()));
        }
    }
}

TEST_CASE("one-step extensions embed backwards into the extension") {
    for (const char* name : {"start_eating", "release_all"}) {
        const UQRule& rho = dining_rule(name);
        Instantiation inst = base_instantiation(rho);
        for (int len = 0; len < 3; ++len) {
            InstantiationStep step = instantiation_step(rho, inst, 0);
            PartialMorphism back_l = inverse_witness(step.lhs_embed);
            PartialMorphism back_r = inverse_witness(step.rhs_embed);
            CHECK(back_l.is_injective());
            CHECK(back_l.is_surjective());
            CHECK(back_r.is_injective());
            CHECK(back_r.is_surjective());
            // gamma after deleting the fresh copy equals deleting after eta
            CHECK(compose(back_l, inst.gamma).same_mapping(compose(step.inst.gamma, back_r)));
            inst = step.inst;
        }
    }
}

TEST_CASE("instantiation bound classification") {
    Hypergraph g = graph(3, {{E, {0}}, {OF, {1, 0}}, {OF, {2, 0}}, {F, {1, 2}}});

    CHECK(instantiation_bound(dining_rule("get_hungry"), g) == 0);   // no quants
    CHECK(instantiation_bound(dining_rule("release_all"), g) == 3);  // |V|
    CHECK(instantiation_bound(dining_rule("start_eating"), g) == 3);

    // worst case: the quantification creates an edge that only touches
    // original nodes
    UQRule worst;
    worst.name = "worst";
    worst.base.lhs = graph(1, {});
    worst.base.rhs = graph(1, {});
    worst.base.morphism = PartialMorphism(worst.base.lhs, worst.base.rhs);
    worst.base.morphism.map_node(0, 0);
    Quantification u;
    Hypergraph lu = graph(2, {{F, {1, 0}}});
    Hypergraph ru = graph(2, {{F, {1, 0}}, {T, {0}}});
    u.p = PartialMorphism(worst.base.lhs, lu);
    u.p.map_node(0, 0);
    u.q = PartialMorphism(lu, ru);
    u.q.map_node(0, 0);
    u.q.map_node(1, 1);
    u.q.map_edge(0, 0);
    worst.quants.push_back(u);
    REQUIRE(validate_rule(worst).empty());
    CHECK(instantiation_bound(worst, g) == 7);  // |V| + |E|

    // a quantification that rewrites only the extended left side
    UQRule absorb;
    absorb.name = "absorb";
    absorb.base.lhs = graph(1, {});
    absorb.base.rhs = graph(1, {});
    absorb.base.morphism = PartialMorphism(absorb.base.lhs, absorb.base.rhs);
    absorb.base.morphism.map_node(0, 0);
    Quantification v;
    Hypergraph lv = graph(2, {{OF, {1, 0}}});
    Hypergraph rv = graph(1, {});
    v.p = PartialMorphism(absorb.base.lhs, lv);
    v.p.map_node(0, 0);
    v.q = PartialMorphism(lv, rv);
    v.q.map_node(0, 0);
    absorb.quants.push_back(v);
    REQUIRE(validate_rule(absorb).empty());
    CHECK(instantiation_bound(absorb, g) == 0);
}

TEST_CASE("applicable instances saturate the neighbourhood") {
    const UQRule& rho = dining_rule("start_eating");

    // philosopher owning both incident forks: only the length-2 instantiation
    Hypergraph owns_two = graph(3, {{H, {0}}, {OF, {1, 0}}, {OF, {2, 0}}});
    auto instances = applicable_instances(rho, owns_two);
    REQUIRE(instances.size() == 2);  // the two fork assignments
    for (const auto& [inst, match] : instances) CHECK(inst.counts == std::vector<int>{2});

    // a free fork blocks eating
    Hypergraph free_fork = graph(2, {{H, {0}}, {F, {1, 0}}});
    CHECK(applicable_instances(rho, free_fork).empty());

    // plain rule: one instance of length zero
    const UQRule& get_hungry = dining_rule("get_hungry");
    Hypergraph thinking = graph(1, {{T, {0}}});
    auto plain = applicable_instances(get_hungry, thinking);
    REQUIRE(plain.size() == 1);
    CHECK(plain[0].first.length() == 0);
}

TEST_CASE("apply rewrites the host") {
    const UQRule& get_hungry = dining_rule("get_hungry");
    Hypergraph thinking = graph(1, {{T, {0}}});
    auto plain = applicable_instances(get_hungry, thinking);
    REQUIRE(plain.size() == 1);
    CHECK(isomorphic(apply_instance(get_hungry, plain[0].first, plain[0].second),
                     graph(1, {{H, {0}}})));

    const UQRule& release_all = dining_rule("release_all");
    Hypergraph eating = graph(3, {{E, {0}}, {OF, {1, 0}}, {OF, {2, 0}}});
    auto instances = applicable_instances(release_all, eating);
    REQUIRE(!instances.empty());
    Hypergraph expect = graph(3, {{T, {0}}, {F, {1, 0}}, {F, {2, 0}}});
    for (const auto& [inst, match] : instances)
        CHECK(isomorphic(apply_instance(release_all, inst, match), expect));

    // the pair must satisfy the application condition
    Hypergraph blocked = graph(2, {{E, {0}}, {F, {1, 0}}});
    Instantiation plain_release = instantiate(release_all, {0});
    auto matches = enumerate_matches(plain_release.lhs_ext(), blocked);
    REQUIRE(matches.size() == 1);
    CHECK_THROWS_AS(apply_instance(release_all, plain_release, matches[0]),
                    std::invalid_argument);
}

TEST_CASE("instantiation memo returns exact cached values") {
    const UQRule& rho = dining_rule("start_eating");
    InstantiationMemo memo(rho);
    const Instantiation& a = memo.get({2});
    const Instantiation& b = memo.get({2});
    CHECK(&a == &b);
    CHECK(a.pi.same_mapping(instantiate(rho, {2}).pi));
    CHECK(a.gamma.same_mapping(instantiate(rho, {2}).gamma));
}
