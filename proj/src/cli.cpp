#include "nichols/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>

#include <CLI11.hpp>

#include "nichols/error.hpp"
#include "nichols/io.hpp"

namespace nichols {

namespace {

constexpr int kOk = 0;
constexpr int kFailed = 1;
constexpr int kUsage = 2;

class Certificate {
public:
    void check(const std::string& name, bool ok, const std::string& detail = {}) {
        lines_.push_back({name, ok, detail});
        ok_ = ok_ && ok;
    }
    void note(const std::string& text) { lines_.push_back({text, true, "", true}); }
    bool ok() const { return ok_; }

    void print(std::ostream& out) const {
        for (const auto& l : lines_) {
            if (l.info) {
                out << "  " << l.name << "\n";
            } else {
                out << (l.ok ? "PASS " : "FAIL ") << l.name << (l.detail.empty() ? "" : ": " + l.detail) << "\n";
            }
        }
    }

private:
    struct Line {
        std::string name;
        bool ok;
        std::string detail;
        bool info = false;
    };
    std::vector<Line> lines_;
    bool ok_ = true;
};

int default_threads() {
    if (const char* env = std::getenv("NICHOLS_THREADS")) {
        try {
            return std::max(1, std::stoi(env));
        } catch (const std::exception&) {
        }
    }
    return 1;
}

int degree_cap(int m) {
    if (m <= 4) return 6;
    if (m <= 6) return 4;
    if (m <= 8) return 3;
    return 2;
}

std::string join(const std::vector<std::uint64_t>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

std::vector<std::uint64_t> expected_prefix(const HilbertSeries& H, int d_max) {
    const std::vector<BigInt> c = H.coefficients();
    std::vector<std::uint64_t> out;
    for (int d = 0; d <= d_max; ++d) out.push_back(d < static_cast<int>(c.size()) ? c[d].convert_to<std::uint64_t>() : 0);
    return out;
}

// (1+t)^4 (1+t^2)^2 when every factor is [2].
std::string binomial_form(const HilbertSeries& H) {
    std::string s;
    for (const auto& [key, mult] : H.factors()) {
        if (key.second != 2) return H.factored();
        s += std::string(s.empty() ? "" : " ") + "(1+t" + (key.first > 1 ? "^" + std::to_string(key.first) : "") + ")";
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s.empty() ? "1" : s;
}

void emit(std::ostream& out, const json& j, const std::string& path) {
    if (path.empty()) {
        out << j.dump(2) << "\n";
        return;
    }
    std::ofstream f(path);
    if (!f) throw Error(ErrorKind::MalformedInput, "cannot write " + path);
    f << j.dump(2) << "\n";
}

json load_json(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, path + ": " + e.what());
    }
}

void oracle_check(Certificate& cert, const BraidingOperator& c, const HilbertSeries& expected, int d_max,
                  const OracleOptions& opts, const std::string& what) {
    const auto got = hilbert_prefix(c, d_max, opts);
    const auto want = expected_prefix(expected, d_max);
    cert.check("oracle " + what + " d<=" + std::to_string(d_max), got == want, "oracle (" + join(got) + ") series (" + join(want) + ")");
}

// ------------------------------------------------------------- subcommands

int cmd_srs(const std::string& diagram, std::ostream& out) {
    const DynkinType t = DynkinType::parse(diagram);
    json j = to_json(minimal_root_system(t));
    j["diagram"] = t.str();
    j["required_nullity"] = required_nullity(t);
    out << j.dump(2) << "\n";
    return kOk;
}

CoveringResult construct_from_type(const CentralExtension& E, const std::string& type) {
    const auto colon = type.find(':');
    const std::string kind = type.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : type.substr(colon + 1);
    if (kind == "unramified") return construct_unramified(E, DynkinType::parse(arg));
    if (kind == "cn") {
        int n = 0;
        try {
            n = std::stoi(arg);
        } catch (const std::exception&) {
            throw Error(ErrorKind::MalformedInput, "cn needs an integer, got '" + arg + "'");
        }
        return construct_ramified_cn(E, n);
    }
    if (kind == "f4") return construct_ramified_f4(E);
    if (kind == "disconnected") return construct_disconnected(E, DisconnectedPlan::parse(arg));
    throw Error(ErrorKind::MalformedInput, "unknown construction type '" + type + "'");
}

int cmd_construct(const std::string& group, const std::string& type, const std::string& path, std::ostream& out) {
    const CentralExtension E = resolve_group(group);
    emit(out, to_json(construct_from_type(E, type)), path);
    return kOk;
}

int cmd_fold(const std::string& cartan, const std::string& orbits, std::ostream& out) {
    const CartanMatrix C = parse_cartan(cartan);
    const auto orb = parse_orbits(orbits);
    const CartanMatrix F = fold(C, orb);
    json o = json::array();
    for (const auto& v : orb) {
        json a = json::array();
        for (int x : v) a.push_back(x + 1);
        o.push_back(a);
    }
    out << json{{"input", to_json(C)}, {"orbits", o}, {"folded", to_json(F)}, {"type", type_label(classify(F))}}.dump(2) << "\n";
    return kOk;
}

int cmd_verify(const std::string& path, int d_max, const OracleOptions& opts, std::ostream& out) {
    const json b = load_json(path);
    if (b.value("kind", "") != "covering") throw Error(ErrorKind::MalformedInput, path + " is not a covering bundle");
    const CentralExtension E = extension_from_json(b.at("extension"));
    const DiagonalYD base = diagonal_from_json(b.at("base"));
    const auto perm = b.at("symmetry").get<std::vector<int>>();
    Certificate cert;
    cert.check("cocycle and extension", true, E.base().str() + ", |G| = " + std::to_string(E.group().size()));
    cert.check("twisted symmetry", verify_twisted_symmetry(base, perm, E));

    CoveringResult r;
    try {
        r = covering_module(base, perm, E);
        cert.check("covering construction", true);
    } catch (const Error& e) {
        cert.check("covering construction", false, e.what());
        cert.print(out);
        out << "certificate: FAIL\n";
        return kFailed;
    }
    const MonomialYD stored = monomial_from_json(b.at("covering"), E.group());
    bool same = stored.degrees() == r.covering.degrees() && stored.generators() == r.covering.generators();
    for (int g = 0; same && g < E.group().size(); ++g) same = stored.action(g) == r.covering.action(g);
    cert.check("stored covering matches recomputation", same);

    const BraidingOperator cb = braiding(base);
    const BraidingOperator cc = braiding(r.covering);
    cert.check("Yang-Baxter (base)", cb.satisfies_yang_baxter());
    cert.check("Yang-Baxter (covering)", cc.satisfies_yang_baxter());
    cert.check("Yetter-Drinfeld condition over G", verify_yd(r.covering));
    cert.check("covering braiding equals base braiding", braiding_matches_base(r));
    bool tags_ok = b.at("tags").size() == r.tags.size();
    for (std::size_t o = 0; tags_ok && o < r.tags.size(); ++o) {
        tags_ok = b.at("tags")[o].get<std::string>() == to_string(r.tags[o]) &&
                  r.central_degree[o] == (r.tags[o] == NodeTag::Inert);
    }
    cert.check("split/inert tags match centrality", tags_ok);
    cert.check("supports generate G", supports_generate(r));
    cert.check("folded Cartan matrix", cartan_from_json(b.at("folded_cartan")) == r.folded_cartan, r.folded_type);
    cert.check("Hilbert series", hilbert_from_json(b.at("hilbert")) == r.hilbert, r.hilbert.factored());
    const int d = d_max >= 0 ? d_max : degree_cap(base.dimension());
    oracle_check(cert, cc, r.hilbert, d, opts, "covering");
    const auto pb = hilbert_prefix(cb, d, opts);
    const auto pc = hilbert_prefix(cc, d, opts);
    cert.check("covering and base profiles agree", pb == pc);
    cert.print(out);
    out << "certificate: " << (cert.ok() ? "PASS" : "FAIL") << "\n";
    return cert.ok() ? kOk : kFailed;
}

int cmd_oracle(const std::string& path, int d_max, bool derivations, const OracleOptions& opts, std::ostream& out) {
    const json j = load_json(path);
    BraidingOperator c;
    const std::string kind = j.value("kind", "");
    if (kind == "covering") {
        const CentralExtension E = extension_from_json(j.at("extension"));
        c = braiding(monomial_from_json(j.at("covering"), E.group()));
    } else if (kind == "diagonal") {
        c = braiding(diagonal_from_json(j));
    } else if (j.contains("extension") && j.contains("module")) {
        const CentralExtension E = extension_from_json(j.at("extension"));
        c = braiding(monomial_from_json(j.at("module"), E.group()));
    } else {
        throw Error(ErrorKind::MalformedInput, path + " holds no module");
    }
    const auto start = std::chrono::steady_clock::now();
    json degrees = json::array(), coeffs = json::array();
    std::vector<std::uint32_t> primes;
    bool agree = true;
    json derived = json::array();
    for (int d = 0; d <= d_max; ++d) {
        const SymmetrizerReport rep = nichols_dim(c, d, opts);
        degrees.push_back(d);
        coeffs.push_back(rep.rank);
        primes = rep.primes;
        if (derivations) {
            const auto s = skew_derivation_dim(c, d, opts);
            derived.push_back(s);
            agree = agree && s == rep.rank;
        }
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    json res{{"degrees", degrees}, {"coefficients", coeffs}, {"primes", primes}, {"runtime_ms", ms}};
    if (derivations) {
        res["derivation_coefficients"] = derived;
        res["cross_oracle_agreement"] = agree;
    }
    out << res.dump(2) << "\n";
    return agree ? kOk : kFailed;
}

Certificate check_example(const WorkedExample& ex, int d_max, const OracleOptions& opts) {
    Certificate cert;
    cert.note("summands: " + [&] {
        std::string s;
        for (const auto& x : ex.summands) s += (s.empty() ? "" : " + ") + x;
        return s;
    }());
    for (const auto& v : ex.character_values) cert.note(v);
    cert.check("type", ex.type == ex.expected_type, ex.type);
    cert.check("finer PBW type", ex.finer_type == ex.expected_finer_type, ex.finer_type);
    cert.check("series", ex.hilbert == ex.expected_series, binomial_form(ex.hilbert));
    cert.check("dimension", ex.hilbert.two_exponent() == ex.expected_exponent,
               "2^" + std::to_string(ex.hilbert.two_exponent()) + " = " + ex.hilbert.at_one().str());
    const BraidingOperator c = braiding(ex.module);
    cert.check("Yang-Baxter", c.satisfies_yang_baxter());
    cert.check("Yetter-Drinfeld condition", verify_yd(ex.module));
    if (ex.covering) {
        cert.check("covering braiding equals base braiding", braiding_matches_base(*ex.covering));
        cert.check("supports generate G", supports_generate(*ex.covering));
    }
    const int d = d_max >= 0 ? d_max : degree_cap(ex.module.dimension());
    oracle_check(cert, c, ex.expected_series, d, opts, "profile");
    cert.note(std::string("faithful: ") + (ex.faithful ? "yes" : "no") + ", diagonal: " + (ex.diagonal ? "yes" : "no"));
    return cert;
}

int cmd_examples(const std::string& id, bool check, int d_max, const OracleOptions& opts, std::ostream& out) {
    const std::vector<std::string> ids = id.empty() ? worked_example_ids() : std::vector<std::string>{id};
    if (!check) {
        if (!id.empty()) {
            out << to_json(worked_example(id)).dump(2) << "\n";
            return kOk;
        }
        out << std::left << std::setw(20) << "id" << std::setw(8) << "type" << std::setw(10) << "finer" << std::setw(10)
            << "dim" << "faithful\n";
        for (const auto& x : ids) {
            const WorkedExample ex = worked_example(x);
            out << std::left << std::setw(20) << x << std::setw(8) << ex.type << std::setw(10) << ex.finer_type << std::setw(10)
                << "2^" + std::to_string(ex.hilbert.two_exponent()) << (ex.faithful ? "yes" : "no") << "\n";
        }
        return kOk;
    }
    bool all = true;
    for (const auto& x : ids) {
        const Certificate cert = check_example(worked_example(x), d_max, opts);
        out << x << "\n";
        cert.print(out);
        out << "certificate: " << (cert.ok() ? "PASS" : "FAIL") << "\n";
        all = all && cert.ok();
    }
    return all ? kOk : kFailed;
}

int cmd_table(bool verify, bool as_json, std::ostream& out) {
    const auto rows = intro_table(verify);
    bool ok = true;
    for (const auto& r : rows) {
        for (const auto& [label, formula, got] : r.checks) ok = ok && formula == got;
    }
    if (as_json) {
        json j = json::array();
        for (const auto& r : rows) {
            json checks = json::array();
            for (const auto& [label, formula, got] : r.checks) checks.push_back({{"instance", label}, {"formula", formula}, {"constructed", got}});
            j.push_back({{"type", r.diagram}, {"two_rank", r.two_rank}, {"two_center", r.two_center}, {"dimension", r.dimension}, {"checks", checks}});
        }
        out << j.dump(2) << "\n";
        return ok ? kOk : kFailed;
    }
    auto line = [&](const std::string& a, const std::string& b, const std::string& c, const std::string& d) {
        out << std::left << std::setw(10) << a << std::setw(16) << b << std::setw(16) << c << d << "\n";
    };
    line("2-rank", "2-center", "type", "dimension");
    for (const auto& r : rows) line(r.two_rank, r.two_center, r.diagram, r.dimension);
    if (verify) {
        out << "\n";
        for (const auto& r : rows) {
            for (const auto& [label, formula, got] : r.checks) {
                out << (formula == got ? "PASS " : "FAIL ") << label << ": formula 2^" << formula << ", constructed 2^" << got << "\n";
            }
        }
    }
    return ok ? kOk : kFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Covering Nichols algebras over groups with commutator subgroup Z2"};
    app.require_subcommand(1);
    int threads = default_threads();
    app.add_option("--threads", threads, "Worker threads for the oracle (default NICHOLS_THREADS or 1)")->check(CLI::PositiveNumber);

    std::string diagram;
    auto* srs = app.add_subcommand("srs", "Print a minimal symplectic root system");
    srs->add_option("diagram", diagram, "ADE diagram, e.g. D4")->required();

    std::string group, type, out_path;
    auto* construct = app.add_subcommand("construct", "Build a covering module and print its bundle");
    construct->add_option("--group", group, "Preset name or group file")->required();
    construct->add_option("--type", type, "unramified:Xn | cn:n | f4 | disconnected:plan")->required();
    construct->add_option("--out", out_path, "Write the bundle to a file");

    std::string cartan, orbits;
    auto* foldc = app.add_subcommand("fold", "Fold a Cartan matrix along node orbits");
    foldc->add_option("--cartan", cartan, "Type name, matrix file or inline matrix")->required();
    foldc->add_option("--orbits", orbits, "Orbits like {1,5}{2,4}{3}")->required();

    std::string bundle;
    int d_max = -1;
    auto* verify = app.add_subcommand("verify", "Check every invariant of a covering bundle");
    verify->add_option("bundle", bundle)->required()->check(CLI::ExistingFile);
    verify->add_option("--dmax", d_max, "Oracle degree bound");

    std::string module;
    bool derivations = false;
    bool audit = false;
    auto* oracle = app.add_subcommand("oracle", "Graded dimensions of a module by brute force");
    oracle->add_option("module", module)->required()->check(CLI::ExistingFile);
    oracle->add_option("--dmax", d_max, "Largest degree")->required()->check(CLI::Range(0, 12));
    oracle->add_flag("--derivations", derivations, "Also run the skew-derivation oracle");
    oracle->add_flag("--exact-audit", audit, "Fraction-free audit of small blocks");

    std::string id;
    bool check = false;
    auto* examples = app.add_subcommand("examples", "Registry of worked examples");
    examples->add_option("--id", id, "Example id");
    examples->add_flag("--check", check, "Run the oracle validation");
    examples->add_option("--dmax", d_max, "Oracle degree bound");

    bool table_verify = false, table_json = false;
    auto* table = app.add_subcommand("table", "Types and dimensions by 2-rank and 2-center");
    table->add_flag("--verify", table_verify, "Confirm each row by explicit constructions");
    table->add_flag("--json", table_json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    }

    OracleOptions opts;
    opts.threads = threads;
    opts.exact_audit = audit;
    try {
        if (*srs) return cmd_srs(diagram, out);
        if (*construct) return cmd_construct(group, type, out_path, out);
        if (*foldc) return cmd_fold(cartan, orbits, out);
        if (*verify) return cmd_verify(bundle, d_max, opts, out);
        if (*oracle) return cmd_oracle(module, d_max, derivations, opts, out);
        if (*examples) return cmd_examples(id, check, d_max, opts, out);
        if (*table) return cmd_table(table_verify, table_json, out);
    } catch (const Error& e) {
        err << e.what() << "\n";
        switch (e.kind()) {
            case ErrorKind::MalformedInput:
            case ErrorKind::UnknownId:
                return kUsage;
            default:
                return kFailed;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kUsage;
}

}  // namespace nichols
