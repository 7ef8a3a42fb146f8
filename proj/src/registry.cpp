#include <algorithm>
#include <map>

#include "nichols/covering.hpp"
#include "nichols/error.hpp"
#include "nichols/oracle.hpp"

namespace nichols {

// ------------------------------------------------------------ adjoint Cartan

namespace {

using Tensor = std::map<std::vector<int>, long>;

// g_a . e_l, read off c(e_a (x) e_l) = (g_a . e_l) (x) e_a.
std::pair<int, int> act(const BraidingOperator& c, int a, int l) {
    const int idx = a * c.m + l;
    return {c.map.target[idx] / c.m, c.map.sign[idx]};
}

// ad_{e_a}(Y) = e_a Y - (g_a . Y) e_a
Tensor adjoint(const BraidingOperator& c, int a, const Tensor& Y) {
    Tensor out;
    for (const auto& [word, coef] : Y) {
        std::vector<int> left{a};
        left.insert(left.end(), word.begin(), word.end());
        out[left] += coef;
        std::vector<int> right;
        long sign = 1;
        for (int l : word) {
            const auto [t, s] = act(c, a, l);
            right.push_back(t);
            sign *= s;
        }
        right.push_back(a);
        out[right] -= sign * coef;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
    return out;
}

bool vanishes_in_nichols(const BraidingOperator& c, const Tensor& Y) {
    if (Y.empty()) return true;
    const int d = static_cast<int>(Y.begin()->first.size());
    std::map<std::uint64_t, long> sum;
    for (const auto& [word, coef] : Y) {
        std::uint64_t idx = 0;
        for (int l : word) idx = idx * c.m + l;
        for (const auto& [row, v] : symmetrizer_column(c, d, idx)) sum[row] += coef * v;
    }
    return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second == 0; });
}

// Is ad_{M_i}^k (M_j) zero in the Nichols algebra?
bool adjoint_power_vanishes(const BraidingOperator& c, const std::vector<int>& bi, const std::vector<int>& bj, int k) {
    std::vector<Tensor> layer;
    for (int b : bj) layer.push_back(Tensor{{{b}, 1}});
    for (int step = 0; step < k; ++step) {
        std::vector<Tensor> next;
        for (const auto& Y : layer) {
            for (int a : bi) {
                Tensor Z = adjoint(c, a, Y);
                if (!Z.empty()) next.push_back(std::move(Z));
            }
        }
        layer = std::move(next);
    }
    return std::all_of(layer.begin(), layer.end(), [&](const Tensor& Y) { return vanishes_in_nichols(c, Y); });
}

}  // namespace

CartanMatrix cartan_by_adjoint(const BraidingOperator& c, const std::vector<std::vector<int>>& blocks, int bound) {
    const int n = static_cast<int>(blocks.size());
    std::vector<std::vector<int>> C(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        C[i][i] = 2;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            int found = -1;
            for (int m = 0; m <= bound && found < 0; ++m) {
                if (adjoint_power_vanishes(c, blocks[i], blocks[j], m + 1)) found = m;
            }
            if (found < 0) {
                throw Error(ErrorKind::NotFiniteCartan, "ad-nilpotency exceeds " + std::to_string(bound) + " for blocks " +
                                                            std::to_string(i + 1) + ", " + std::to_string(j + 1));
            }
            C[i][j] = -found;
        }
    }
    return CartanMatrix(std::move(C));
}

// ---------------------------------------------------------------- cohomology

long long matsumoto_count(long long h2_G, long long h2_Gamma, long long p) {
    if (h2_G < 1 || h2_Gamma < 1 || p < 1) throw Error(ErrorKind::Precondition, "cohomology orders must be positive");
    if ((h2_G * p) % h2_Gamma != 0) {
        throw Error(ErrorKind::InconsistentCohomology, std::to_string(h2_G) + " * " + std::to_string(p) + " / " +
                                                           std::to_string(h2_Gamma) + " is not an integer");
    }
    return h2_G * p / h2_Gamma;
}

long long schur_multiplier_order(const std::string& group) {
    if (group == "D4") return 2;
    if (group == "Q8") return 1;
    if (group == "D4xZ2") return 8;
    if (group == "D4xZ2^2") return 64;
    if (group.rfind("Z2^", 0) == 0) {
        int n = -1;
        try {
            n = std::stoi(group.substr(3));
        } catch (const std::exception&) {
        }
        if (n < 0 || n > 10) throw Error(ErrorKind::UnknownId, "no multiplier recorded for " + group);
        return 1LL << (n * (n - 1) / 2);
    }
    throw Error(ErrorKind::UnknownId, "no multiplier recorded for " + group);
}

// --------------------------------------------------------------- intro table

std::vector<TableRow> intro_table(bool verify) {
    std::vector<TableRow> rows{
        {"A_n (n>=2)", "n", "n mod 2", "2^{n(n+1)}", {}},
        {"E_6, E_7, E_8", "6, 7, 8", "n mod 2", "2^72, 2^126, 2^240", {}},
        {"D_n (n>=4)", "n", "2 - (n mod 2)", "2^{2n(n-1)}", {}},
        {"F_4", "4", "2", "2^36", {}},
        {"C_n (n>=3)", "n", "2 - (n mod 2)", "2^{n(2n-1)}", {}},
    };
    if (!verify) return rows;
    auto check = [](TableRow& row, const std::string& label, int formula, const CoveringResult& r) {
        row.checks.emplace_back(label, formula, r.dimension_exponent());
    };
    for (int n = 2; n <= 5; ++n) {
        const auto E = symplectic_extension(n / 2, n % 2);
        check(rows[0], "A" + std::to_string(n), n * (n + 1), construct_unramified(E, {'A', n}));
    }
    const int e_formula[] = {72, 126, 240};
    for (int n = 6; n <= 8; ++n) {
        const int k = required_nullity({'E', n});
        const auto E = symplectic_extension((n - k) / 2, k);
        check(rows[1], "E" + std::to_string(n), e_formula[n - 6], construct_unramified(E, {'E', n}));
    }
    for (int n = 4; n <= 6; ++n) {
        const int k = required_nullity({'D', n});
        const auto E = symplectic_extension((n - k) / 2, k);
        check(rows[2], "D" + std::to_string(n), 2 * n * (n - 1), construct_unramified(E, {'D', n}));
    }
    check(rows[3], "F4", 36, construct_ramified_f4(symplectic_extension(1, 2)));
    for (int n = 3; n <= 5; ++n) {
        const int k = 1 + ((n - 1) % 2);
        const auto E = symplectic_extension((n - k) / 2, k);
        check(rows[4], "C" + std::to_string(n), n * (2 * n - 1), construct_ramified_cn(E, n));
    }
    return rows;
}

// ------------------------------------------------------------------ registry

namespace {

struct Constraint {
    int a;
    std::string at_a;
    int b;
    std::string at_b;
    int value;
};

struct ExampleSpec {
    std::string id;
    std::string group;
    std::vector<std::string> reps;
    std::vector<Constraint> constraints;
    std::string type;
    std::string finer;
    HilbertSeries series;
    int exponent;
};

const std::vector<std::string> kCharacterNames{"chi", "phi", "psi", "rho"};

std::vector<ExampleSpec> base_specs() {
    const HilbertSeries a2 = two_power_series({2, 1}, true);
    const HilbertSeries a3 = two_power_series({3, 2, 1}, true);
    const HilbertSeries c3 = two_power_series({5, 4, 3, 2, 1}, false);
    const HilbertSeries d4 = two_power_series({4, 3, 3, 1, 1}, true);
    const HilbertSeries c4 = two_power_series({7, 6, 5, 4, 3, 2, 1}, false);
    const HilbertSeries f4 = two_power_series({6, 5, 5, 5, 4, 3, 3, 2, 1, 1, 1}, false);
    return {
        {"A2-D4", "D4", {"h", "gh"}, {}, "A2", "A2xA2", a2, 6},
        {"A3-D4xZ2", "D4xZ2", {"h", "gh", "zh"}, {{0, "zh", 2, "h", 1}}, "A3", "A3xA3", a3, 12},
        {"C3-D4xZ2", "D4xZ2", {"h", "gh", "z"}, {{0, "z", 2, "h", 1}, {1, "z", 2, "gh", -1}}, "C3", "A5", c3, 15},
        {"D4-D4xZ2sq",
         "D4xZ2^2",
         {"h", "gh", "zh", "wh"},
         {{0, "zh", 2, "h", 1}, {0, "wh", 3, "h", 1}, {2, "wh", 3, "zh", 1}},
         "D4",
         "D4xD4",
         d4,
         24},
        {"C4-D4xZ2sq",
         "D4xZ2^2",
         {"h", "gh", "zh", "w"},
         {{0, "zh", 2, "h", 1}, {0, "w", 3, "h", 1}, {1, "w", 3, "gh", 1}, {2, "w", 3, "zh", -1}},
         "C4",
         "A7",
         c4,
         28},
        {"F4-Z2sqxD4",
         "Z2sqxD4",
         {"h", "gh", "z", "w"},
         {{0, "z", 2, "h", 1}, {0, "w", 3, "h", 1}, {1, "w", 3, "gh", 1}, {1, "z", 2, "gh", -1}, {2, "w", 3, "z", -1}},
         "F4",
         "E6",
         f4,
         36},
    };
}

struct Names {
    std::map<std::string, int> element;
    std::vector<int> central;  // z, w when present
    int eps = 1;
};

Names names_for(const std::string& group, const CentralExtension& E) {
    const AbelianGroup& A = E.base();
    auto s = [&](int k) { return E.section(A.generator(k)); };
    Names n;
    int h = 0, gh = 0;
    if (group == "Z2sqxD4") {
        n.central = {s(0), s(1)};
        h = s(2);
        gh = s(3);
    } else {
        h = s(0);
        gh = s(1);
        for (int k = 2; k < A.rank(); ++k) n.central.push_back(s(k));
    }
    const FiniteGroup& G = E.group();
    n.element["h"] = h;
    n.element["gh"] = gh;
    n.element["eps"] = n.eps = E.theta();
    const char* central_names[] = {"z", "w"};
    for (std::size_t k = 0; k < n.central.size(); ++k) {
        const std::string c = central_names[k];
        n.element[c] = n.central[k];
        n.element[c + "h"] = G.mul(n.central[k], h);
    }
    return n;
}

std::string sign_str(int v) { return v > 0 ? "+1" : "-1"; }

WorkedExample build_example(const ExampleSpec& spec, bool twisted) {
    WorkedExample ex;
    ex.id = spec.id + (twisted ? "-twist" : "-diag");
    ex.twisted = twisted;
    if (twisted) ex.partner = spec.id + "-diag";
    ex.extension = preset_extension(spec.group);
    const FiniteGroup& G = ex.extension.group();
    const Names names = names_for(spec.group, ex.extension);
    const std::vector<int> center = G.center();

    // Generators and fixed values of each centralizer; free entries are 0.
    struct Slot {
        std::vector<int> gens;
        std::vector<int> values;
        std::vector<std::string> labels;
    };
    std::vector<Slot> slots;
    const char* central_names[] = {"z", "w"};
    for (const auto& rep : spec.reps) {
        const int r = names.element.at(rep);
        Slot s;
        if (std::binary_search(center.begin(), center.end(), r)) {
            s.gens = {names.element.at("h"), names.element.at("gh")};
            s.labels = {"h", "gh"};
            s.values = {0, 0};
        } else {
            s.gens = {r, names.eps};
            s.labels = {rep, "eps"};
            s.values = {-1, twisted ? -1 : 1};
        }
        for (std::size_t k = 0; k < names.central.size(); ++k) {
            s.gens.push_back(names.central[k]);
            s.labels.push_back(central_names[k]);
            s.values.push_back(names.central[k] == r ? -1 : 0);
        }
        slots.push_back(s);
    }
    std::vector<std::pair<int, int>> free;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        for (std::size_t k = 0; k < slots[i].values.size(); ++k) {
            if (slots[i].values[k] == 0) free.emplace_back(static_cast<int>(i), static_cast<int>(k));
        }
    }

    std::vector<std::vector<int>> chis;
    bool solved = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()) && !solved; ++mask) {
        auto trial = slots;
        for (std::size_t f = 0; f < free.size(); ++f) {
            const bool minus = (mask >> (free.size() - 1 - f)) & 1u;
            trial[free[f].first].values[free[f].second] = minus ? -1 : 1;
        }
        chis.clear();
        for (const auto& s : trial) chis.push_back(character_on_subgroup(G, s.gens, s.values));
        solved = true;
        for (const auto& c : spec.constraints) {
            const int va = chis[c.a][names.element.at(c.at_a)];
            const int vb = chis[c.b][names.element.at(c.at_b)];
            if (va == 0 || vb == 0) throw Error(ErrorKind::Internal, "constraint outside a centralizer in " + spec.id);
            if (va * vb != c.value) solved = false;
        }
        if (solved) {
            for (std::size_t i = 0; i < trial.size(); ++i) {
                std::string desc;
                for (std::size_t k = 0; k < trial[i].labels.size(); ++k) {
                    desc += (k ? " " : "") + kCharacterNames[i] + "(" + trial[i].labels[k] + ")=" + sign_str(trial[i].values[k]);
                }
                ex.character_values.push_back(desc);
            }
        }
    }
    if (!solved) throw Error(ErrorKind::Internal, "no character choice satisfies the constraints of " + spec.id);

    for (std::size_t i = 0; i < spec.reps.size(); ++i) {
        const int r = names.element.at(spec.reps[i]);
        const bool central = std::binary_search(center.begin(), center.end(), r);
        ex.summands.push_back((central ? "{" + spec.reps[i] + "}" : "[" + spec.reps[i] + "]") + "^" + kCharacterNames[i]);
        const MonomialYD part = simple_conjugacy_module(G, r, chis[i]);
        ex.module = i == 0 ? part : direct_sum(ex.module, part);
    }

    ex.expected_type = spec.type;
    ex.expected_finer_type = spec.finer;
    ex.expected_series = spec.series;
    ex.expected_exponent = spec.exponent;
    return ex;
}

void finish(WorkedExample& ex) {
    const BraidingOperator c = braiding(ex.module);
    ex.cartan = cartan_by_adjoint(c, decompose_simples(ex.module));
    ex.type = type_label(classify(ex.cartan));
    ex.faithful = is_faithful(ex.module);
    ex.diagonal = ex.module.action(ex.extension.theta()).is_identity();
    if (ex.diagonal) {
        if (!ex.covering) {
            const Descent d = descend(ex.extension, ex.module);
            ex.covering = covering_module(d.module, d.symmetry, ex.extension);
        }
        ex.finer_type = ex.covering->unfolded_type;
        ex.hilbert = ex.covering->hilbert;
    } else {
        const WorkedExample partner = worked_example(ex.partner);
        ex.finer_type = partner.finer_type;
        ex.hilbert = partner.hilbert;
    }
}

}  // namespace

std::vector<std::string> worked_example_ids() {
    std::vector<std::string> ids;
    for (const auto& s : base_specs()) {
        ids.push_back(s.id + "-diag");
        ids.push_back(s.id + "-twist");
        if (s.id == "C3-D4xZ2") ids.push_back("A4-D4cD4");
    }
    return ids;
}

WorkedExample worked_example(const std::string& id) {
    if (id == "A4-D4cD4") {
        WorkedExample ex;
        ex.id = id;
        ex.extension = preset_extension("D4cD4");
        ex.covering = construct_unramified(ex.extension, {'A', 4});
        ex.module = ex.covering->covering;
        for (int i = 0; i < ex.module.dimension(); ++i) ex.summands.push_back("x" + std::to_string(i + 1));
        // chi_k on (x, y, x', y')
        const auto& base = ex.covering->base.summands();
        for (std::size_t k = 0; k < base.size(); ++k) {
            std::string row = "chi" + std::to_string(k + 1) + "=(";
            for (int i = 0; i < 4; ++i) row += std::string(i ? "," : "") + (*base[k].character.on_generator(i).sign() > 0 ? "+1" : "-1");
            ex.character_values.push_back(row + ")");
        }
        ex.expected_type = "A4";
        ex.expected_finer_type = "A4xA4";
        ex.expected_series = two_power_series({4, 3, 2, 1}, true);
        ex.expected_exponent = 20;
        finish(ex);
        return ex;
    }
    for (const auto& spec : base_specs()) {
        for (bool twisted : {false, true}) {
            if (id == spec.id + (twisted ? "-twist" : "-diag")) {
                WorkedExample ex = build_example(spec, twisted);
                finish(ex);
                return ex;
            }
        }
    }
    throw Error(ErrorKind::UnknownId, "unknown example id " + id);
}

}  // namespace nichols
