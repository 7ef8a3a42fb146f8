#include "nichols/io.hpp"

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::MalformedInput, "cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

CentralExtension parse_group_file(const std::string& text, const std::string& name) {
    std::istringstream in(text);
    std::string line;
    std::vector<int> factors;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
        std::istringstream ls(line);
        int f = 0;
        while (ls >> f) {
            if (f < 2) throw Error(ErrorKind::MalformedInput, "invariant factors must be at least 2");
            factors.push_back(f);
        }
        if (!ls.eof()) throw Error(ErrorKind::MalformedInput, "bad factor line: " + line);
        break;
    }
    const AbelianGroup A(factors);
    Cocycle2 sigma;
    int v = 0;
    std::vector<int> values;
    while (in >> v) values.push_back(v);
    if (!in.eof()) throw Error(ErrorKind::MalformedInput, "cocycle table contains a non-integer entry");
    const std::size_t n = A.order();
    if (values.size() != n * n) {
        throw Error(ErrorKind::MalformedInput, "cocycle table needs " + std::to_string(n * n) + " entries, got " +
                                                   std::to_string(values.size()));
    }
    sigma.table.assign(n, std::vector<int>(n));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) sigma.table[i][j] = values[i * n + j];
    }
    return CentralExtension(A, sigma, name);
}

CentralExtension resolve_group(const std::string& spec) {
    try {
        return preset_extension(spec);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::UnknownId) throw;
    }
    if (!std::filesystem::exists(spec)) throw Error(ErrorKind::UnknownId, "unknown group " + spec);
    return parse_group_file(read_file(spec), std::filesystem::path(spec).stem().string());
}

// ---------------------------------------------------------------- writers

json to_json(const AbelianGroup& A) { return A.factors(); }

json to_json(const CentralExtension& E) {
    return json{{"name", E.name()},
                {"factors", E.base().factors()},
                {"cocycle", E.cocycle().table},
                {"order", E.group().size()},
                {"stem", E.is_stem()}};
}

json to_json(const DiagonalYD& M) {
    json s = json::array();
    for (const auto& x : M.summands()) s.push_back({{"degree", x.degree}, {"character", x.character.exponents()}});
    return json{{"kind", "diagonal"}, {"group", M.group().factors()}, {"summands", s}};
}

json to_json(const MonomialYD& M) {
    json actions = json::array();
    for (const auto& A : M.generator_action()) actions.push_back({{"target", A.target}, {"sign", A.sign}});
    std::vector<std::string> labels;
    for (int d : M.degrees()) labels.push_back(M.group().label(d));
    return json{{"kind", "monomial"},
                {"degrees", M.degrees()},
                {"degree_labels", labels},
                {"generators", M.generators()},
                {"actions", actions}};
}

json to_json(const CartanMatrix& C) {
    std::string type;
    try {
        type = type_label(classify(C));
    } catch (const Error&) {
        type = "";
    }
    return json{{"entries", C.entries()}, {"type", type}};
}

json to_json(const HilbertSeries& H) {
    json factors = json::array();
    for (const auto& [key, mult] : H.factors()) factors.push_back({{"h", key.first}, {"N", key.second}, {"multiplicity", mult}});
    json coeffs = json::array();
    for (const auto& c : H.coefficients()) coeffs.push_back(c.str());
    return json{{"factored", H.factored()},
                {"factors", factors},
                {"coefficients", coeffs},
                {"dimension", H.at_one().str()},
                {"exponent", H.two_exponent()}};
}

json to_json(const CoveringResult& r) {
    std::vector<std::string> tags;
    for (auto t : r.tags) tags.push_back(to_string(t));
    return json{{"kind", "covering"},
                {"extension", to_json(r.extension)},
                {"base", to_json(r.base)},
                {"symmetry", r.symmetry},
                {"covering", to_json(r.covering)},
                {"basis_change", r.basis_change},
                {"orbits", r.orbits},
                {"tags", tags},
                {"central_degree", r.central_degree},
                {"unfolded_cartan", to_json(r.unfolded_cartan)},
                {"folded_cartan", to_json(r.folded_cartan)},
                {"unfolded_type", r.unfolded_type},
                {"folded_type", r.folded_type},
                {"hilbert", to_json(r.hilbert)},
                {"dimension_exponent", r.dimension_exponent()}};
}

json to_json(const Decoration& d) {
    json phi = json::array();
    for (F2Vec v : d.phi) {
        std::string s;
        for (int b = 0; b < d.space.dimension(); ++b) s += bit(v, b) ? '1' : '0';
        phi.push_back(s);
    }
    std::vector<std::vector<int>> gram;
    for (int i = 0; i < d.space.dimension(); ++i) {
        gram.emplace_back();
        for (int j = 0; j < d.space.dimension(); ++j) gram.back().push_back(bit(d.space.gram()[i], j));
    }
    const RootSystemReport rep = verify_root_system(d);
    return json{{"nodes", d.graph.nodes},
                {"edges", d.graph.edges},
                {"dimension", d.space.dimension()},
                {"nullity", d.space.nullity()},
                {"gram", gram},
                {"phi", phi},
                {"valid", rep.valid},
                {"minimal", rep.minimal}};
}

json to_json(const WorkedExample& ex) {
    json j{{"id", ex.id},
           {"extension", to_json(ex.extension)},
           {"module", to_json(ex.module)},
           {"summands", ex.summands},
           {"character_values", ex.character_values},
           {"twisted", ex.twisted},
           {"cartan", to_json(ex.cartan)},
           {"type", ex.type},
           {"finer_type", ex.finer_type},
           {"hilbert", to_json(ex.hilbert)},
           {"faithful", ex.faithful},
           {"diagonal", ex.diagonal},
           {"expected",
            {{"type", ex.expected_type},
             {"finer_type", ex.expected_finer_type},
             {"series", ex.expected_series.factored()},
             {"exponent", ex.expected_exponent}}}};
    if (!ex.partner.empty()) j["partner"] = ex.partner;
    if (ex.covering) j["covering"] = to_json(*ex.covering);
    return j;
}

json to_json(const SymmetrizerReport& r) {
    return json{{"degree", r.degree}, {"ambient", r.ambient}, {"rank", r.rank}, {"primes", r.primes}, {"agreement", r.agreement}};
}

// ---------------------------------------------------------------- readers

namespace {

template <class T>
T get(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::MalformedInput, std::string("missing field ") + key);
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("field ") + key + ": " + e.what());
    }
}

}  // namespace

AbelianGroup abelian_from_json(const json& j) {
    try {
        return AbelianGroup(j.get<std::vector<int>>());
    } catch (const json::exception& e) {
        throw Error(ErrorKind::MalformedInput, std::string("group factors: ") + e.what());
    }
}

CentralExtension extension_from_json(const json& j) {
    const AbelianGroup A(get<std::vector<int>>(j, "factors"));
    Cocycle2 sigma{get<std::vector<std::vector<int>>>(j, "cocycle")};
    return CentralExtension(A, sigma, j.value("name", std::string{}));
}

DiagonalYD diagonal_from_json(const json& j) {
    const AbelianGroup A = abelian_from_json(j.at("group"));
    std::vector<DiagonalSummand> s;
    for (const auto& x : get<json>(j, "summands")) {
        const auto degree = get<std::vector<int>>(x, "degree");
        const auto chi = get<std::vector<int>>(x, "character");
        if (static_cast<int>(degree.size()) != A.rank() || static_cast<int>(chi.size()) != A.rank()) {
            throw Error(ErrorKind::MalformedInput, "summand of wrong length");
        }
        s.push_back({degree, Character(A, chi)});
    }
    return DiagonalYD(A, std::move(s));
}

MonomialYD monomial_from_json(const json& j, const FiniteGroup& G) {
    std::vector<MonomialMatrix> actions;
    for (const auto& a : get<json>(j, "actions")) {
        actions.push_back({get<std::vector<int>>(a, "target"), get<std::vector<int>>(a, "sign")});
    }
    return MonomialYD(G, get<std::vector<int>>(j, "degrees"), get<std::vector<int>>(j, "generators"), actions);
}

CartanMatrix cartan_from_json(const json& j) {
    if (j.is_array()) return CartanMatrix(j.get<std::vector<std::vector<int>>>());
    return CartanMatrix(get<std::vector<std::vector<int>>>(j, "entries"));
}

HilbertSeries hilbert_from_json(const json& j) {
    HilbertSeries H;
    for (const auto& f : get<json>(j, "factors")) H.multiply_factor(get<int>(f, "N"), get<int>(f, "h"), get<int>(f, "multiplicity"));
    return H;
}

std::vector<std::vector<int>> parse_orbits(const std::string& text) {
    static const std::regex group(R"(\{([^{}]*)\})");
    std::vector<std::vector<int>> out;
    for (std::sregex_iterator it(text.begin(), text.end(), group), end; it != end; ++it) {
        std::vector<int> orbit;
        std::stringstream ss((*it)[1].str());
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                orbit.push_back(std::stoi(tok) - 1);
            } catch (const std::exception&) {
                throw Error(ErrorKind::MalformedInput, "bad orbit entry '" + tok + "'");
            }
        }
        out.push_back(orbit);
    }
    std::string stripped = std::regex_replace(text, group, "");
    if (out.empty() || stripped.find_first_not_of(" ") != std::string::npos) {
        throw Error(ErrorKind::MalformedInput, "orbits must look like {1,5}{2,4}{3}");
    }
    return out;
}

CartanMatrix parse_cartan(const std::string& text) {
    static const std::regex type_list(R"(\s*[A-Ga-g]_?\d+(\s*x\s*[A-Ga-g]_?\d+)*\s*)");
    if (std::regex_match(text, type_list)) {
        std::vector<CartanMatrix> blocks;
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, 'x')) blocks.push_back(CartanMatrix::of_type(DynkinType::parse(tok)));
        return CartanMatrix::block_diagonal(blocks);
    }
    const std::string body = std::filesystem::exists(text) ? read_file(text) : text;
    const auto first = body.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && (body[first] == '[' || body[first] == '{')) {
        try {
            return cartan_from_json(json::parse(body));
        } catch (const json::exception& e) {
            throw Error(ErrorKind::MalformedInput, std::string("Cartan JSON: ") + e.what());
        }
    }
    std::vector<std::vector<int>> rows;
    std::istringstream in(body);
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<int> row;
        int v = 0;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) throw Error(ErrorKind::MalformedInput, "Cartan matrix row is not numeric: " + line);
        if (!row.empty()) rows.push_back(row);
    }
    if (rows.empty()) throw Error(ErrorKind::MalformedInput, "no Cartan matrix in " + text);
    return CartanMatrix(rows);
}

}  // namespace nichols
