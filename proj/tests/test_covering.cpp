#include <doctest.h>

#include <algorithm>

#include "nichols/covering.hpp"
#include "nichols/error.hpp"

using namespace nichols;

namespace {

void check_invariants(const CoveringResult& r) {
    CHECK(braiding(r.base).satisfies_yang_baxter());
    CHECK(braiding(r.covering).satisfies_yang_baxter());
    CHECK(verify_yd(r.covering));
    CHECK(braiding_matches_base(r));
    CHECK(supports_generate(r));
    const auto center = r.extension.group().center();
    for (std::size_t o = 0; o < r.orbits.size(); ++o) {
        const bool central = std::count(center.begin(), center.end(), r.covering.degree(static_cast<int>(o))) > 0;
        CHECK(central == (r.tags[o] == NodeTag::Inert));
        CHECK(r.orbits[o].size() == (central ? 1u : 2u));
    }
}

}  // namespace

TEST_CASE("unramified coverings") {
    struct Row {
        const char* group;
        DynkinType type;
        int exponent;
    };
    for (const Row r : {Row{"D4", {'A', 2}, 6}, Row{"D4xZ2", {'A', 3}, 12}, Row{"D4cD4", {'A', 4}, 20},
                        Row{"D4xZ2^2", {'D', 4}, 24}, Row{"Z3xD4", {'A', 2}, 6}}) {
        CAPTURE(r.group);
        const CoveringResult c = construct_unramified(preset_extension(r.group), r.type);
        CHECK(c.folded_type == r.type.str());
        CHECK(c.unfolded_type == r.type.str() + "x" + r.type.str());
        CHECK(c.dimension_exponent() == r.exponent);
        check_invariants(c);
    }
}

TEST_CASE("unramified E6 and D5 over symplectic extensions") {
    const CoveringResult e6 = construct_unramified(symplectic_extension(3, 0), {'E', 6});
    CHECK(e6.dimension_exponent() == 72);
    check_invariants(e6);
    const CoveringResult d5 = construct_unramified(symplectic_extension(2, 1), {'D', 5});
    CHECK(d5.dimension_exponent() == 40);
    check_invariants(d5);
}

TEST_CASE("ramified coverings") {
    const CoveringResult c3 = construct_ramified_cn(preset_extension("D4xZ2"), 3);
    CHECK(c3.folded_type == "C3");
    CHECK(c3.unfolded_type == "A5");
    CHECK(c3.dimension_exponent() == 15);
    check_invariants(c3);
    const CoveringResult c4 = construct_ramified_cn(preset_extension("D4xZ2^2"), 4);
    CHECK(c4.folded_type == "C4");
    CHECK(c4.dimension_exponent() == 28);
    check_invariants(c4);
    const CoveringResult f4 = construct_ramified_f4(preset_extension("Z2sqxD4"));
    CHECK(f4.folded_type == "F4");
    CHECK(f4.unfolded_type == "E6");
    CHECK(f4.dimension_exponent() == 36);
    CHECK(std::count(f4.tags.begin(), f4.tags.end(), NodeTag::Inert) == 2);
    check_invariants(f4);
}

TEST_CASE("disconnected plans") {
    const DisconnectedPlan p = DisconnectedPlan::parse("A2,C3,k0=2");
    CHECK(p.blocks == std::vector<std::string>{"A2", "C3"});
    CHECK(p.inert_nodes == 2);
    CHECK(DisconnectedPlan::parse(p.str()).blocks == p.blocks);
    const CoveringResult r = construct_disconnected(preset_extension("D4xZ2^2"), DisconnectedPlan::parse("A2,k0=2"));
    CHECK(r.folded_type == "A2xA1xA1");
    check_invariants(r);
    CHECK_THROWS_AS(construct_disconnected(preset_extension("D4xZ2^2"), DisconnectedPlan::parse("A2")), Error);
    CHECK_THROWS_AS(DisconnectedPlan::parse("A2,k0=x"), Error);
}

TEST_CASE("wrong group shapes are refused") {
    CHECK_THROWS_AS(construct_unramified(preset_extension("D4"), {'A', 3}), Error);
    CHECK_THROWS_AS(construct_ramified_cn(preset_extension("D4cD4"), 3), Error);
    CHECK_THROWS_AS(construct_ramified_f4(preset_extension("D4cD4")), Error);
    CHECK_THROWS_AS(construct_unramified(preset_extension("Z2^2"), {'A', 2}), Error);
}

TEST_CASE("covering_module checks the twisted symmetry") {
    const CoveringResult r = construct_unramified(preset_extension("D4"), {'A', 2});
    CHECK(verify_twisted_symmetry(r.base, r.symmetry, r.extension));
    std::vector<int> id(r.symmetry.size());
    for (std::size_t i = 0; i < id.size(); ++i) id[i] = static_cast<int>(i);
    CHECK_FALSE(verify_twisted_symmetry(r.base, id, r.extension));
    CHECK_THROWS_AS(covering_module(r.base, id, r.extension), Error);
    const CoveringResult again = covering_module(r.base, r.symmetry, r.extension);
    CHECK(again.covering.degrees() == r.covering.degrees());
}

TEST_CASE("commutators of sections follow the form") {
    for (const char* name : {"D4", "Q8", "D4xZ2", "D4xZ2^2", "D4cD4", "Z2sqxD4", "Z3xD4"}) {
        CAPTURE(name);
        const CentralExtension E = preset_extension(name);
        const FiniteGroup& G = E.group();
        for (int g = 0; g < G.size(); ++g) {
            for (int h = 0; h < G.size(); ++h) {
                REQUIRE(G.commutator(g, h) == E.element(E.form(E.project(g), E.project(h)), 0));
            }
        }
    }
}

TEST_CASE("symplectic extensions") {
    const CentralExtension E = symplectic_extension(2, 1);
    CHECK(E.group().size() == 64);
    const ExtensionSpace V(E);
    CHECK(V.dimension() == 5);
    CHECK(V.nullity() == 1);
}

TEST_CASE("Matsumoto counts") {
    CHECK(matsumoto_count(2, 2, 2) == 2);
    CHECK(matsumoto_count(1, 2, 2) == 1);
    CHECK(matsumoto_count(8, 8, 2) == 2);
    CHECK_THROWS_AS(matsumoto_count(1, 4, 2), Error);
    CHECK(schur_multiplier_order("D4") == 2);
    CHECK(schur_multiplier_order("Q8") == 1);
    CHECK(schur_multiplier_order("D4xZ2") == 8);
}

TEST_CASE("mixed monodromy and diagonal Hilbert series") {
    const CoveringResult r = construct_unramified(preset_extension("D4"), {'A', 2});
    CHECK(mixed_monodromy_trivial(r.base, {0, 1}, {2, 3}));
    CHECK_FALSE(mixed_monodromy_trivial(r.base, {0, 2}, {1, 3}));
    CHECK(diagonal_hilbert(r.base) == r.hilbert);
}
