#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "nichols/cli.hpp"
#include "nichols/error.hpp"
#include "nichols/io.hpp"

using namespace nichols;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) { return (std::filesystem::temp_directory_path() / name).string(); }

}  // namespace

TEST_CASE("json round trips") {
    const CoveringResult r = construct_unramified(preset_extension("D4xZ2"), {'A', 3});
    const json j = to_json(r);
    const CentralExtension E = extension_from_json(j["extension"]);
    CHECK(E.group().size() == 16);
    CHECK(E.is_stem());
    const DiagonalYD base = diagonal_from_json(j["base"]);
    CHECK(base.dimension() == r.base.dimension());
    const MonomialYD M = monomial_from_json(j["covering"], E.group());
    CHECK(M.degrees() == r.covering.degrees());
    CHECK(cartan_from_json(j["folded_cartan"]) == r.folded_cartan);
    CHECK(hilbert_from_json(j["hilbert"]) == r.hilbert);
    CHECK_THROWS_AS(diagonal_from_json(json{{"group", {2}}}), Error);
}

TEST_CASE("orbit and Cartan parsing") {
    CHECK(parse_orbits("{1,5}{2,4}{3}") == std::vector<std::vector<int>>{{0, 4}, {1, 3}, {2}});
    CHECK_THROWS_AS(parse_orbits("1,5"), Error);
    CHECK_THROWS_AS(parse_orbits("{1,a}"), Error);
    CHECK(parse_cartan("A3xA2").size() == 5);
    CHECK(parse_cartan("[[2,-1],[-1,2]]") == CartanMatrix::of_type({'A', 2}));
    CHECK(parse_cartan("2 -1\n-1 2\n") == CartanMatrix::of_type({'A', 2}));
}

TEST_CASE("group files") {
    const CentralExtension E = parse_group_file("# D4\n2 2\n1 1 1 1\n1 1 1 1\n1 -1 1 -1\n1 -1 1 -1\n", "mine");
    CHECK(E.group().size() == 8);
    CHECK_FALSE(E.group().is_abelian());
    CHECK_THROWS_AS(parse_group_file("2 2\n1 1 1\n"), Error);
    CHECK_THROWS_AS(resolve_group("no-such-group"), Error);
}

TEST_CASE("cli exit codes") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"bogus"}).code == 2);
    CHECK(cli({"--help"}).code == 0);
    CHECK(cli({"examples", "--id", "nope"}).code == 2);
    CHECK(cli({"construct", "--group", "nope", "--type", "unramified:A2"}).code == 2);
    CHECK(cli({"construct", "--group", "D4", "--type", "weird"}).code == 2);
    CHECK(cli({"construct", "--group", "D4", "--type", "unramified:A3"}).code == 1);
    CHECK(cli({"srs", "E6"}).code == 0);
    CHECK(cli({"srs", "Q9"}).code == 2);
}

TEST_CASE("cli construct, verify and oracle") {
    const std::string path = temp_path("nichols_c3.json");
    REQUIRE(cli({"construct", "--group", "D4xZ2", "--type", "cn:3", "--out", path}).code == 0);
    const Run v = cli({"verify", path});
    CHECK(v.code == 0);
    CHECK(v.out.find("certificate: PASS") != std::string::npos);
    const Run o = cli({"oracle", path, "--dmax", "3", "--derivations"});
    CHECK(o.code == 0);
    const json j = json::parse(o.out);
    CHECK(j["coefficients"] == json({1, 5, 14, 33}));
    CHECK(j["cross_oracle_agreement"] == true);

    json tampered = json::parse(read_file(path));
    tampered["covering"]["actions"][0]["sign"][0] = -tampered["covering"]["actions"][0]["sign"][0].get<int>();
    const std::string bad = temp_path("nichols_c3_bad.json");
    std::ofstream(bad) << tampered.dump();
    const Run vb = cli({"verify", bad});
    CHECK(vb.code == 1);
    CHECK(vb.out.find("FAIL") != std::string::npos);
    std::filesystem::remove(path);
    std::filesystem::remove(bad);
}

TEST_CASE("cli fold, examples and table") {
    const Run f = cli({"fold", "--cartan", "A5", "--orbits", "{1,5}{2,4}{3}"});
    CHECK(f.code == 0);
    CHECK(json::parse(f.out)["type"] == "C3");
    const Run e = cli({"examples", "--id", "A2-D4-twist", "--check"});
    CHECK(e.code == 0);
    CHECK(e.out.find("(1+t)^4 (1+t^2)^2") != std::string::npos);
    const Run t = cli({"table", "--json"});
    CHECK(t.code == 0);
    CHECK(json::parse(t.out).size() == 5);
}

#ifdef NICHOLS_CLI_PATH
TEST_CASE("installed binary") {
    const std::string cmd = std::string(NICHOLS_CLI_PATH) + " table 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string text;
    std::array<char, 256> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) text += buf.data();
    CHECK(pclose(pipe) == 0);
    int lines = 0;
    for (char ch : text) lines += ch == '\n';
    CHECK(lines == 6);
}
#endif
