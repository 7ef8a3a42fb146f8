#include <doctest.h>

#include "nichols/covering.hpp"
#include "nichols/error.hpp"
#include "nichols/oracle.hpp"

using namespace nichols;

namespace {

// A2 over Z2 x Z2 with q_ii = -1.
DiagonalYD a2_module() {
    const AbelianGroup A = AbelianGroup::elementary(2);
    return DiagonalYD(A, {{{1, 0}, Character(A, {1, 1})}, {{0, 1}, Character(A, {0, 1})}});
}

}  // namespace

TEST_CASE("diagonal braiding satisfies Yang-Baxter") {
    const DiagonalYD M = a2_module();
    const QMatrix q = q_matrix(M);
    CHECK(q[0][0] == RootOfUnity::minus_one());
    CHECK(q[1][1] == RootOfUnity::minus_one());
    CHECK((q[0][1] * q[1][0]) == RootOfUnity::minus_one());
    CHECK(braiding(M).satisfies_yang_baxter());
    CHECK(cartan_from_q(q) == CartanMatrix::of_type({'A', 2}));
}

TEST_CASE("A2 over Z2^2 has dimension 8 with profile 1,2,2,2,1") {
    CHECK(hilbert_prefix(a2_module(), 5) == std::vector<std::uint64_t>{1, 2, 2, 2, 1, 0});
}

TEST_CASE("a signed permutation that breaks Yang-Baxter is caught") {
    BraidingOperator c;
    c.m = 2;
    c.map = MonomialMatrix{{0, 2, 1, 3}, {1, 1, 1, -1}};
    CHECK(c.satisfies_yang_baxter());
    BraidingOperator bad;
    bad.m = 2;
    bad.map = MonomialMatrix{{1, 0, 2, 3}, {1, 1, 1, 1}};
    CHECK_FALSE(bad.satisfies_yang_baxter());
}

TEST_CASE("simple conjugacy modules are Yetter-Drinfeld") {
    const CentralExtension E = preset_extension("D4");
    const FiniteGroup& G = E.group();
    const int rep = E.section(1);
    const auto cent = G.centralizer(rep);
    CHECK(cent.size() == 4);
    std::vector<int> chi(G.size(), 0);
    for (int g : cent) chi[g] = (g == E.theta() || g == E.element(-1, 1)) ? -1 : 1;
    const MonomialYD M = simple_conjugacy_module(G, rep, chi);
    CHECK(M.dimension() == 2);
    CHECK(verify_yd(M));
    CHECK(braiding(M).satisfies_yang_baxter());
    CHECK(decompose_simples(M).size() == 1);
}

TEST_CASE("twisting by the extension form flips characters") {
    const CentralExtension E = preset_extension("D4");
    const TwistForm f = form_from_extension(E);
    CHECK(f({1, 0}, {0, 1}) == -1);
    CHECK(f({1, 0}, {1, 0}) == 1);
    const DiagonalYD M = a2_module();
    const DiagonalYD T = twist_by_form(M, f);
    CHECK(T.summands()[0].character.exponents() == std::vector<int>{1, 0});
    CHECK(T.summands()[1].character.exponents() == std::vector<int>{1, 1});
    CHECK(twist_by_form(M, TwistForm::trivial(M.group())).summands()[0].character == M.summands()[0].character);
}

TEST_CASE("D4 flagship profile") {
    const CoveringResult r = construct_unramified(preset_extension("D4"), {'A', 2});
    CHECK(hilbert_prefix(r.covering, 6) == std::vector<std::uint64_t>{1, 4, 8, 12, 14, 12, 8});
    CHECK(hilbert_prefix(r.base, 6) == std::vector<std::uint64_t>{1, 4, 8, 12, 14, 12, 8});
}

// Frozen oracle values.
TEST_CASE("frozen prefixes") {
    const auto c3 = construct_ramified_cn(preset_extension("D4xZ2"), 3);
    CHECK(hilbert_prefix(c3.covering, 3) == std::vector<std::uint64_t>{1, 5, 14, 33});
    const auto f4 = construct_ramified_f4(preset_extension("Z2sqxD4"));
    CHECK(hilbert_prefix(f4.covering, 3) == std::vector<std::uint64_t>{1, 6, 20, 55});
    const auto a4 = construct_unramified(preset_extension("D4cD4"), {'A', 4});
    CHECK(hilbert_prefix(a4.covering, 3) == std::vector<std::uint64_t>{1, 8, 34, 108});
}

TEST_CASE("cross-oracle on small modules") {
    for (const auto& M : {braiding(a2_module()), braiding(construct_unramified(preset_extension("D4"), {'A', 2}).covering)}) {
        for (int d = 0; d <= 4; ++d) CHECK(nichols_dim(M, d).rank == skew_derivation_dim(M, d));
    }
}

TEST_CASE("braid lifts do not depend on the reduced word") {
    const BraidingOperator c = braiding(construct_unramified(preset_extension("D4"), {'A', 2}).covering);
    const std::vector<std::vector<int>> perms = {{2, 0, 3, 1}, {3, 2, 1, 0}, {1, 3, 0, 2}};
    for (const auto& p : perms) {
        const auto l = reduced_word(p, true);
        const auto r = reduced_word(p, false);
        for (std::uint64_t w = 0; w < 256; w += 7) CHECK(braid_lift(c, 4, l, w) == braid_lift(c, 4, r, w));
    }
}

TEST_CASE("exact audit agrees with modular ranks") {
    OracleOptions opts;
    opts.exact_audit = true;
    const auto rep = nichols_dim(braiding(a2_module()), 3, opts);
    CHECK(rep.agreement);
    CHECK(rep.rank == 2);
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(rank_mod_p({{{0, 1}, {1, 2}}, {{0, 2}, {1, 4}}}, 7) == 1);
}

TEST_CASE("threads give the same answer") {
    const BraidingOperator c = braiding(construct_ramified_cn(preset_extension("D4xZ2"), 3).covering);
    OracleOptions one, four;
    four.threads = 4;
    CHECK(hilbert_prefix(c, 4, one) == hilbert_prefix(c, 4, four));
}

TEST_CASE("oracle refuses oversized degrees") {
    OracleOptions small;
    small.sparse_bound = 100;
    CHECK_THROWS_AS(nichols_dim(braiding(a2_module()), 8, small), Error);
}
