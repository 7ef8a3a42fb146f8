#include <doctest.h>

#include "nichols/covering.hpp"
#include "nichols/error.hpp"
#include "nichols/oracle.hpp"

using namespace nichols;

TEST_CASE("every registry example reaches its expected data") {
    const auto ids = worked_example_ids();
    CHECK(ids.size() == 13);
    for (const auto& id : ids) {
        CAPTURE(id);
        const WorkedExample ex = worked_example(id);
        CHECK(ex.type == ex.expected_type);
        CHECK(ex.finer_type == ex.expected_finer_type);
        CHECK(ex.hilbert == ex.expected_series);
        CHECK(ex.hilbert.two_exponent() == ex.expected_exponent);
        CHECK(verify_yd(ex.module));
        CHECK(braiding(ex.module).satisfies_yang_baxter());
        CHECK(ex.twisted == !ex.partner.empty());
        if (ex.covering) CHECK(braiding_matches_base(*ex.covering));
    }
}

TEST_CASE("faithfulness of twisted examples") {
    CHECK(worked_example("A2-D4-twist").faithful);
    CHECK(worked_example("C3-D4xZ2-twist").faithful);
    CHECK(worked_example("F4-Z2sqxD4-twist").faithful);
    CHECK_FALSE(worked_example("A2-D4-diag").faithful);
    CHECK(worked_example("A2-D4-diag").diagonal);
    CHECK_FALSE(worked_example("A2-D4-twist").diagonal);
}

TEST_CASE("twisted and diagonal variants share their profile") {
    for (const char* base : {"A2-D4", "A3-D4xZ2", "C3-D4xZ2"}) {
        const auto d = hilbert_prefix(worked_example(std::string(base) + "-diag").module, 4);
        const auto t = hilbert_prefix(worked_example(std::string(base) + "-twist").module, 4);
        CHECK(d == t);
    }
}

TEST_CASE("A4 characters") {
    const WorkedExample ex = worked_example("A4-D4cD4");
    REQUIRE(ex.character_values.size() == 8);
    CHECK(ex.character_values[0] == "chi1=(-1,-1,-1,+1)");
    CHECK(ex.character_values[3] == "chi4=(+1,+1,+1,-1)");
    CHECK(ex.character_values[5] == "chi6=(-1,-1,-1,+1)");
}

TEST_CASE("adjoint Cartan matrix of the D4 example") {
    const WorkedExample ex = worked_example("A2-D4-twist");
    CHECK(ex.cartan == CartanMatrix::of_type({'A', 2}));
}

TEST_CASE("unknown ids") {
    CHECK_THROWS_AS(worked_example("B2-nowhere"), Error);
}

TEST_CASE("table rows") {
    const auto rows = intro_table(true);
    REQUIRE(rows.size() == 5);
    CHECK(rows[0].dimension == "2^{n(n+1)}");
    CHECK(rows[3].diagram == "F_4");
    for (const auto& r : rows) {
        for (const auto& [label, formula, got] : r.checks) {
            CAPTURE(label);
            CHECK(formula == got);
        }
    }
}

TEST_CASE("two-power series helper") {
    const HilbertSeries H = two_power_series({2, 1}, true);
    CHECK(H.at_one() == 64);
    CHECK(H.factors().size() == 2);
}
