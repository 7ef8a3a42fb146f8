// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "nichols/covering.hpp"
#include "nichols/error.hpp"
#include "nichols/oracle.hpp"
#include "nichols/symplectic.hpp"

using namespace nichols;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::vector<std::uint64_t> expansion(const HilbertSeries& H, int d_max) {
    const auto c = H.coefficients();
    std::vector<std::uint64_t> out;
    for (int d = 0; d <= d_max; ++d) out.push_back(d < static_cast<int>(c.size()) ? c[d].convert_to<std::uint64_t>() : 0);
    return out;
}

std::string list(const std::vector<std::uint64_t>& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

int center_count(const CoveringResult& r) {
    int n = 0;
    for (auto t : r.tags) n += t == NodeTag::Inert;
    return n;
}

// x+ of orbit o sits at basis index o.
bool tags_match_centrality(const CoveringResult& r) {
    const auto center = r.extension.group().center();
    for (std::size_t o = 0; o < r.orbits.size(); ++o) {
        const bool central = std::find(center.begin(), center.end(), r.covering.degree(static_cast<int>(o))) != center.end();
        if (central != (r.tags[o] == NodeTag::Inert) || central != r.central_degree[o]) return false;
    }
    return true;
}

// Outcome 1: D4 flagship.
Outcome flagship() {
    Outcome out;
    const CentralExtension E = preset_extension("D4");
    const CoveringResult r = construct_unramified(E, {'A', 2});
    out.require(r.unfolded_type == "A2xA2" && r.folded_type == "A2", "types " + r.unfolded_type + " -> " + r.folded_type);
    HilbertSeries printed;
    printed.multiply_factor(2, 1, 4);
    printed.multiply_factor(2, 2, 2);
    out.require(r.hilbert == printed, "series " + r.hilbert.factored());
    const auto prefix = hilbert_prefix(r.covering, 6);
    const int top = printed.degree();
    std::vector<std::uint64_t> full = prefix;
    for (int d = 7; d <= top; ++d) full.push_back(full[top - d]);
    std::uint64_t total = 0;
    for (auto v : full) total += v;
    const auto want = expansion(printed, top);
    out.require(full == want, "profile " + list(full) + " vs " + list(want));
    out.require(total == 64, "total " + std::to_string(total));

    const WorkedExample diag = worked_example("A2-D4-diag");
    const WorkedExample twist = worked_example("A2-D4-twist");
    const auto pd = hilbert_prefix(diag.module, 6);
    const auto pt = hilbert_prefix(twist.module, 6);
    out.require(pd == pt && pd == prefix, "diag " + list(pd) + " twist " + list(pt));
    out.require(twist.faithful, "twisted variant not faithful");
    out.detail = out.ok ? "profile " + list(full) + ", total " + std::to_string(total) : out.detail;
    return out;
}

// Outcome 2: A4 over the extraspecial group of order 32.
Outcome a4_example() {
    Outcome out;
    const WorkedExample ex = worked_example("A4-D4cD4");
    const std::vector<std::string> printed_rows = {
        "chi1=(-1,-1,-1,+1)", "chi2=(+1,-1,-1,+1)", "chi3=(+1,+1,-1,-1)", "chi4=(+1,+1,+1,-1)",
        "chi5=(-1,+1,-1,+1)", "chi6=(-1,-1,+1,+1)", "chi7=(+1,-1,-1,+1)", "chi8=(+1,+1,-1,-1)",
    };
    for (std::size_t k = 0; k < printed_rows.size(); ++k) {
        const std::string got = k < ex.character_values.size() ? ex.character_values[k] : "missing";
        out.require(got == printed_rows[k], "row " + std::to_string(k + 1) + " constructed " + got + " printed " + printed_rows[k]);
    }
    out.require(ex.type == "A4", "type " + ex.type);
    out.require(ex.hilbert.two_exponent() == 20, "exponent " + std::to_string(ex.hilbert.two_exponent()));
    const auto got = hilbert_prefix(ex.module, 3);
    const auto want = expansion(two_power_series({4, 3, 2, 1}, true), 3);
    out.require(got == want, "oracle " + list(got) + " vs " + list(want));
    if (out.ok) out.detail = "oracle " + list(got);
    return out;
}

// Outcome 3: E6 -> F4.
Outcome e6_f4() {
    Outcome out;
    const CoveringResult r = construct_ramified_f4(preset_extension("Z2sqxD4"));
    out.require(r.folded_type == "F4", "folded " + r.folded_type);
    out.require(positive_roots(CartanMatrix::of_type({'E', 6})).size() == 36, "E6 positive roots");
    const HilbertSeries printed = two_power_series({6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1}, false);
    out.require(r.hilbert == printed && r.hilbert.factors().size() == 11, "series " + r.hilbert.factored());
    const int inert = center_count(r);
    out.require(inert == 2 && r.tags.size() == 4, "inert " + std::to_string(inert) + " of " + std::to_string(r.tags.size()));
    const auto got = hilbert_prefix(r.covering, 3);
    const auto want = expansion(printed, 3);
    out.require(got == want, "oracle " + list(got) + " vs expansion " + list(want));
    // The coefficient list stated alongside this criterion reads (1,6,20,49); the expansion gives 55 at d=3.
    if (out.ok) out.detail = "oracle " + list(got) + " equals expansion; stated list (1,6,20,49) disagrees at d=3";
    return out;
}

// Outcome 4: A_{2n-1} -> C_n for n = 3, 4.
Outcome cn_examples() {
    Outcome out;
    const CoveringResult c3 = construct_ramified_cn(preset_extension("D4xZ2"), 3);
    const CoveringResult c4 = construct_ramified_cn(preset_extension("D4xZ2^2"), 4);
    out.require(c3.folded_type == "C3" && c4.folded_type == "C4", "types " + c3.folded_type + ", " + c4.folded_type);
    out.require(c3.dimension_exponent() == 15 && c4.dimension_exponent() == 28, "exponents");
    out.require(c3.hilbert == two_power_series({5, 4, 3, 2, 1}, false), "C3 series " + c3.hilbert.factored());
    out.require(c4.hilbert == two_power_series({7, 6, 5, 4, 3, 2, 1}, false), "C4 series " + c4.hilbert.factored());
    const auto got = hilbert_prefix(c3.covering, 3);
    const auto want = expansion(c3.hilbert, 3);
    out.require(got == want, "oracle " + list(got) + " vs " + list(want));
    if (out.ok) out.detail = "C3 oracle " + list(got);
    return out;
}

// Outcome 5: symplectic root systems.
Outcome root_systems() {
    Outcome out;
    std::vector<DynkinType> types;
    for (int n = 1; n <= 8; ++n) types.push_back({'A', n});
    for (int n = 4; n <= 8; ++n) types.push_back({'D', n});
    for (int n = 6; n <= 8; ++n) types.push_back({'E', n});
    for (const auto& t : types) {
        const int table = t.series == 'D' ? 2 - t.rank % 2 : t.rank % 2;
        const Decoration d = minimal_root_system(t);
        const RootSystemReport rep = verify_root_system(d);
        out.require(rep.valid && rep.minimal, t.str() + " decoration invalid");
        out.require(d.space.nullity() == table && required_nullity(t) == table, t.str() + " nullity");
    }
    const auto a2 = SimpleGraph::of_type({'A', 2});
    const auto a3 = SimpleGraph::of_type({'A', 3});
    const auto d4 = SimpleGraph::of_type({'D', 4});
    out.require(exists_minimal_decoration(a2, 1, 0) && !exists_minimal_decoration(a2, 0, 2), "A2 search");
    out.require(exists_minimal_decoration(a3, 1, 1) && !exists_minimal_decoration(a3, 0, 3), "A3 search");
    out.require(exists_minimal_decoration(d4, 1, 2) && !exists_minimal_decoration(d4, 2, 0) && !exists_minimal_decoration(d4, 0, 4),
                "D4 search");
    if (out.ok) out.detail = std::to_string(types.size()) + " diagrams, searches for A2 A3 D4 agree";
    return out;
}

std::vector<CoveringResult> all_coverings() {
    std::vector<CoveringResult> v;
    v.push_back(construct_unramified(preset_extension("D4"), {'A', 2}));
    v.push_back(construct_unramified(preset_extension("D4xZ2"), {'A', 3}));
    v.push_back(construct_unramified(preset_extension("D4cD4"), {'A', 4}));
    v.push_back(construct_unramified(symplectic_extension(2, 1), {'A', 5}));
    v.push_back(construct_unramified(preset_extension("D4xZ2^2"), {'D', 4}));
    v.push_back(construct_unramified(symplectic_extension(2, 1), {'D', 5}));
    v.push_back(construct_unramified(symplectic_extension(3, 0), {'E', 6}));
    v.push_back(construct_ramified_cn(preset_extension("D4xZ2"), 3));
    v.push_back(construct_ramified_cn(preset_extension("D4xZ2^2"), 4));
    v.push_back(construct_ramified_f4(preset_extension("Z2sqxD4")));
    v.push_back(construct_unramified(preset_extension("Z3xD4"), {'A', 2}));
    v.push_back(construct_disconnected(preset_extension("D4xZ2^2"), DisconnectedPlan::parse("A2,k0=2")));
    for (const auto& id : worked_example_ids()) {
        const WorkedExample ex = worked_example(id);
        if (ex.covering) v.push_back(*ex.covering);
    }
    return v;
}

// Outcome 6: property suites.
Outcome properties() {
    Outcome out;
    int count = 0;
    for (const auto& r : all_coverings()) {
        const std::string name = r.extension.name() + "/" + r.folded_type;
        out.require(braiding(r.base).satisfies_yang_baxter(), name + " base YB");
        out.require(braiding(r.covering).satisfies_yang_baxter(), name + " covering YB");
        out.require(verify_yd(r.covering), name + " YD");
        out.require(braiding_matches_base(r), name + " braiding");
        out.require(tags_match_centrality(r), name + " tags");
        ++count;
    }
    for (const auto& id : worked_example_ids()) {
        const WorkedExample ex = worked_example(id);
        out.require(braiding(ex.module).satisfies_yang_baxter() && verify_yd(ex.module), id + " YB/YD");
    }
    std::vector<CentralExtension> exts;
    for (const char* n : {"D4", "Q8", "D4xZ2", "D4xZ2^2", "D4cD4", "Z2sqxD4", "Z3xD4", "Z2^1", "Z2^2", "Z2^3", "Z2^4"}) {
        exts.push_back(preset_extension(n));
    }
    for (auto [p, k] : std::vector<std::pair<int, int>>{{1, 0}, {1, 1}, {1, 2}, {1, 3}, {2, 0}}) exts.push_back(symplectic_extension(p, k));
    for (const auto& E : exts) {
        const FiniteGroup& G = E.group();
        if (G.size() > 32) continue;
        bool ok = true;
        for (int g = 0; g < G.size(); ++g) {
            for (int h = 0; h < G.size(); ++h) {
                ok = ok && G.commutator(g, h) == E.element(E.form(E.project(g), E.project(h)), 0);
            }
        }
        out.require(ok, E.name() + " commutator identity");
    }
    out.require(matsumoto_count(2, 2, 2) == 2, "Matsumoto (2,2,2)");
    out.require(matsumoto_count(1, 2, 2) == 1, "Matsumoto (1,2,2)");
    out.require(matsumoto_count(8, 8, 2) == 2, "Matsumoto (8,8,2)");
    if (out.ok) out.detail = std::to_string(count) + " coverings, " + std::to_string(exts.size()) + " extensions";
    return out;
}

// Outcome 7: symmetrizer rank against skew derivations.
Outcome cross_oracle() {
    Outcome out;
    std::vector<std::pair<std::string, BraidingOperator>> mods;
    for (const auto& id : worked_example_ids()) {
        const WorkedExample ex = worked_example(id);
        mods.push_back({id, braiding(ex.module)});
        if (ex.covering) mods.push_back({id + " base", braiding(ex.covering->base)});
    }
    mods.push_back({"F4 covering", braiding(construct_ramified_f4(preset_extension("Z2sqxD4")).covering)});
    int checked = 0;
    for (const auto& [name, c] : mods) {
        if (c.m > 6) continue;
        for (int d = 0; d <= 4; ++d) {
            const auto a = nichols_dim(c, d).rank;
            const auto b = skew_derivation_dim(c, d);
            out.require(a == b, name + " d=" + std::to_string(d) + ": " + std::to_string(a) + " vs " + std::to_string(b));
        }
        ++checked;
    }
    if (out.ok) out.detail = std::to_string(checked) + " modules, d <= 4";
    return out;
}

// Outcome 8: the five-row table.
Outcome table() {
    Outcome out;
    const auto rows = intro_table(true);
    out.require(rows.size() == 5, "rows " + std::to_string(rows.size()));
    const std::vector<std::string> order = {"A_n (n>=2)", "E_6, E_7, E_8", "D_n (n>=4)", "F_4", "C_n (n>=3)"};
    for (std::size_t i = 0; i < rows.size() && i < order.size(); ++i) out.require(rows[i].diagram == order[i], "row " + rows[i].diagram);
    int checks = 0;
    for (const auto& r : rows) {
        for (const auto& [label, formula, got] : r.checks) {
            out.require(formula == got, label + " " + std::to_string(formula) + " vs " + std::to_string(got));
            ++checks;
        }
    }
    if (out.ok) out.detail = std::to_string(checks) + " instances match";
    return out;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 D4 flagship A2xA2 -> A2", flagship},
        {"2 A4 example over D4cD4", a4_example},
        {"3 E6 -> F4", e6_f4},
        {"4 A_{2n-1} -> C_n, n = 3, 4", cn_examples},
        {"5 symplectic root systems", root_systems},
        {"6 property suites", properties},
        {"7 cross-oracle", cross_oracle},
        {"8 table", table},
    };
    bool all = true;
    for (const auto& [name, fn] : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = e.what();
        }
        const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line << (o.ok ? "PASS" : "FAIL") << " criterion " << name << " [" << std::fixed;
        line.precision(2);
        line << s << " s]: " << o.detail;
        std::cout << line.str() << std::endl;
        all = all && o.ok;
    }
    return all ? 0 : 1;
}
