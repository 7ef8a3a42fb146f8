#include <doctest.h>

#include "nichols/symplectic.hpp"

using namespace nichols;

TEST_CASE("standard symplectic space") {
    const SympSpace S = SympSpace::standard(2, 1);
    CHECK(S.dimension() == 5);
    CHECK(S.rank() == 4);
    CHECK(S.nullity() == 1);
    CHECK(S.pair(0b00001, 0b00010) == 1);
    CHECK(S.pair(0b00001, 0b00100) == 0);
    CHECK(nullspace(S) == std::vector<F2Vec>{0b10000});
}

TEST_CASE("symplectic basis of a degenerate form") {
    const SympSpace S = SympSpace::from_matrix({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    const SymplecticBasis B = symplectic_basis(S);
    REQUIRE(B.pairs.size() == 1);
    REQUIRE(B.nulls.size() == 1);
    CHECK(S.pair(B.pairs[0].first, B.pairs[0].second) == 1);
    CHECK(B.nulls[0] == 0b111);
}

TEST_CASE("minimal root systems for ADE diagrams") {
    std::vector<DynkinType> types;
    for (int n = 1; n <= 8; ++n) types.push_back({'A', n});
    for (int n = 4; n <= 8; ++n) types.push_back({'D', n});
    for (int n = 6; n <= 8; ++n) types.push_back({'E', n});
    for (const auto& t : types) {
        CAPTURE(t.str());
        const int expected = t.series == 'D' ? 2 - t.rank % 2 : t.rank % 2;
        CHECK(required_nullity(t) == expected);
        const Decoration d = minimal_root_system(t);
        const RootSystemReport r = verify_root_system(d);
        CHECK(r.valid);
        CHECK(r.minimal);
        CHECK(r.spans);
        CHECK(d.space.nullity() == expected);
        CHECK(d.space.dimension() == t.rank);
    }
}

TEST_CASE("a broken decoration reports its violating pair") {
    Decoration d = minimal_root_system({'A', 3});
    d.phi[2] = 0;
    const RootSystemReport r = verify_root_system(d);
    CHECK_FALSE(r.valid);
    CHECK_FALSE(r.violations.empty());
}

TEST_CASE("exhaustive searches") {
    const auto a2 = SimpleGraph::of_type({'A', 2});
    const auto a3 = SimpleGraph::of_type({'A', 3});
    const auto d4 = SimpleGraph::of_type({'D', 4});
    CHECK(exists_minimal_decoration(a2, 1, 0));
    CHECK_FALSE(exists_minimal_decoration(a2, 0, 2));
    CHECK(exists_minimal_decoration(a3, 1, 1));
    CHECK_FALSE(exists_minimal_decoration(a3, 0, 3));
    CHECK(exists_minimal_decoration(d4, 1, 2));
    CHECK_FALSE(exists_minimal_decoration(d4, 2, 0));
    CHECK_FALSE(exists_minimal_decoration(d4, 0, 4));
}
