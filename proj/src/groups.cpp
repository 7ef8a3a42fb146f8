#include "nichols/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "nichols/error.hpp"

namespace nichols {

namespace {

std::vector<int> prime_factors(int n) {
    std::vector<int> primes;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            primes.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) primes.push_back(n);
    return primes;
}

int p_part(int n, int p) {
    int r = 1;
    while (n % p == 0) {
        n /= p;
        r *= p;
    }
    return r;
}

int log_base(int n, int p) {
    int k = 0;
    while (n > 1) {
        n /= p;
        ++k;
    }
    return k;
}

bool contains_sorted(const std::vector<int>& set, int x) { return std::binary_search(set.begin(), set.end(), x); }

}  // namespace

// ---------------------------------------------------------------- AbelianGroup

AbelianGroup::AbelianGroup(std::vector<int> invariant_factors) : factors_(std::move(invariant_factors)) {
    for (int f : factors_) {
        if (f < 2) throw Error(ErrorKind::MalformedInput, "invariant factors must be at least 2");
        order_ *= static_cast<std::size_t>(f);
    }
}

AbelianGroup AbelianGroup::elementary(int rank, int p) { return AbelianGroup(std::vector<int>(rank, p)); }

Exponents AbelianGroup::generator(int i) const {
    Exponents e = identity();
    e.at(i) = 1;
    return e;
}

Exponents AbelianGroup::add(const Exponents& a, const Exponents& b) const {
    Exponents r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (a[i] + b[i]) % factors_[i];
    return r;
}

Exponents AbelianGroup::negate(const Exponents& a) const {
    Exponents r(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) r[i] = (factors_[i] - a[i]) % factors_[i];
    return r;
}

bool AbelianGroup::contains(const Exponents& a) const {
    if (a.size() != factors_.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < 0 || a[i] >= factors_[i]) return false;
    }
    return true;
}

std::size_t AbelianGroup::index_of(const Exponents& a) const {
    if (!contains(a)) throw Error(ErrorKind::MalformedInput, "tuple is not an element of " + str());
    std::size_t idx = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) idx = idx * factors_[i] + a[i];
    return idx;
}

Exponents AbelianGroup::element(std::size_t index) const {
    Exponents e(factors_.size());
    for (std::size_t i = factors_.size(); i-- > 0;) {
        e[i] = static_cast<int>(index % factors_[i]);
        index /= factors_[i];
    }
    return e;
}

std::size_t AbelianGroup::add_index(std::size_t a, std::size_t b) const {
    return index_of(add(element(a), element(b)));
}

std::string AbelianGroup::str() const {
    if (factors_.empty()) return "1";
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += "x";
        s += "Z" + std::to_string(factors_[i]);
    }
    return s;
}

// ------------------------------------------------------------------- Character

Character::Character(const AbelianGroup& group, Exponents exponents)
    : factors_(group.factors()), exponents_(std::move(exponents)) {
    if (exponents_.size() != factors_.size()) {
        throw Error(ErrorKind::MalformedInput, "character exponent tuple has wrong length");
    }
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        exponents_[i] %= factors_[i];
        if (exponents_[i] < 0) exponents_[i] += factors_[i];
    }
}

Character Character::trivial(const AbelianGroup& group) { return Character(group, group.identity()); }

Character Character::from_signs(const AbelianGroup& group, const std::vector<int>& signs) {
    if (static_cast<int>(signs.size()) != group.rank()) {
        throw Error(ErrorKind::MalformedInput, "sign list has wrong length");
    }
    Exponents e(signs.size(), 0);
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] < 0) {
            if (group.factors()[i] % 2) throw Error(ErrorKind::MalformedInput, "-1 on a generator of odd order");
            e[i] = group.factors()[i] / 2;
        }
    }
    return Character(group, e);
}

RootOfUnity Character::on_generator(int i) const { return RootOfUnity(exponents_.at(i), factors_.at(i)); }

RootOfUnity Character::operator()(const Exponents& g) const {
    RootOfUnity value;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        value = value * RootOfUnity(static_cast<std::int64_t>(exponents_[i]) * g.at(i), factors_[i]);
    }
    return value;
}

Character Character::operator*(const Character& other) const {
    if (factors_ != other.factors_) throw Error(ErrorKind::MalformedInput, "characters of different groups");
    Exponents e(factors_.size());
    for (std::size_t i = 0; i < factors_.size(); ++i) e[i] = (exponents_[i] + other.exponents_[i]) % factors_[i];
    return Character(AbelianGroup(factors_), e);
}

// -------------------------------------------------------------------- Cocycle2

Cocycle2 Cocycle2::trivial(const AbelianGroup& group) {
    return {std::vector<std::vector<int>>(group.order(), std::vector<int>(group.order(), 1))};
}

Cocycle2 Cocycle2::bilinear(const AbelianGroup& group, const std::vector<std::vector<int>>& B) {
    const int r = group.rank();
    if (static_cast<int>(B.size()) != r) throw Error(ErrorKind::MalformedInput, "bilinear matrix has wrong size");
    for (int i = 0; i < r; ++i) {
        if (static_cast<int>(B[i].size()) != r) throw Error(ErrorKind::MalformedInput, "bilinear matrix has wrong size");
        for (int j = 0; j < r; ++j) {
            if ((B[i][j] & 1) && (group.factors()[i] % 2 || group.factors()[j] % 2)) {
                throw Error(ErrorKind::MalformedInput, "bilinear cocycle needs even factors on its support");
            }
        }
    }
    const std::size_t n = group.order();
    Cocycle2 sigma{std::vector<std::vector<int>>(n, std::vector<int>(n, 1))};
    for (std::size_t a = 0; a < n; ++a) {
        const Exponents g = group.element(a);
        for (std::size_t b = 0; b < n; ++b) {
            const Exponents h = group.element(b);
            int e = 0;
            for (int i = 0; i < r; ++i) {
                for (int j = 0; j < r; ++j) e += (B[i][j] & 1) * g[i] * h[j];
            }
            sigma.table[a][b] = (e & 1) ? -1 : 1;
        }
    }
    return sigma;
}

bool validate_cocycle(const AbelianGroup& group, const Cocycle2& sigma) {
    const std::size_t n = group.order();
    if (sigma.table.size() != n) throw Error(ErrorKind::MalformedInput, "cocycle table has wrong number of rows");
    for (const auto& row : sigma.table) {
        if (row.size() != n) throw Error(ErrorKind::MalformedInput, "cocycle table has wrong number of columns");
        for (int v : row) {
            if (v != 1 && v != -1) return false;
        }
    }
    for (std::size_t g = 0; g < n; ++g) {
        if (sigma(0, g) != 1 || sigma(g, 0) != 1) return false;
    }
    std::vector<std::vector<std::size_t>> add(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) add[a][b] = group.add_index(a, b);
    }
    for (std::size_t g = 0; g < n; ++g) {
        for (std::size_t h = 0; h < n; ++h) {
            for (std::size_t k = 0; k < n; ++k) {
                if (sigma(g, h) * sigma(add[g][h], k) != sigma(h, k) * sigma(g, add[h][k])) return false;
            }
        }
    }
    return true;
}

// ----------------------------------------------------------------- FiniteGroup

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels)
    : table_(std::move(cayley)), labels_(std::move(labels)) {
    const int n = static_cast<int>(table_.size());
    if (n == 0) throw Error(ErrorKind::MalformedInput, "empty Cayley table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) throw Error(ErrorKind::MalformedInput, "Cayley table is not square");
        for (int v : row) {
            if (v < 0 || v >= n) throw Error(ErrorKind::MalformedInput, "Cayley table entry out of range");
        }
    }
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = table_[e][a] == a && table_[a][e] == a;
        if (ok) identity_ = e;
    }
    if (identity_ < 0) throw Error(ErrorKind::MalformedInput, "Cayley table has no identity");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b) {
            if (table_[a][b] == identity_) {
                if (found >= 0) throw Error(ErrorKind::MalformedInput, "element with two inverses");
                found = b;
            }
        }
        if (found < 0 || table_[found][a] != identity_) throw Error(ErrorKind::MalformedInput, "element without inverse");
        inverse_[a] = found;
    }
    if (n <= 64 && !is_associative()) throw Error(ErrorKind::MalformedInput, "Cayley table is not associative");
    if (labels_.empty()) {
        for (int a = 0; a < n; ++a) labels_.push_back(std::to_string(a));
    } else if (static_cast<int>(labels_.size()) != n) {
        throw Error(ErrorKind::MalformedInput, "label count differs from group size");
    }
}

FiniteGroup FiniteGroup::from_abelian(const AbelianGroup& group) {
    const std::size_t n = group.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<int>(group.add_index(a, b));
        std::string s = "(";
        const Exponents e = group.element(a);
        for (std::size_t i = 0; i < e.size(); ++i) s += (i ? "," : "") + std::to_string(e[i]);
        labels.push_back(s + ")");
    }
    return FiniteGroup(std::move(t), std::move(labels));
}

bool FiniteGroup::is_associative() const {
    const int n = size();
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            const int ab = table_[a][b];
            for (int c = 0; c < n; ++c) {
                if (table_[ab][c] != table_[a][table_[b][c]]) return false;
            }
        }
    }
    return true;
}

int FiniteGroup::power(int a, long k) const {
    if (k < 0) {
        a = inv(a);
        k = -k;
    }
    int r = identity_;
    for (long i = 0; i < k; ++i) r = mul(r, a);
    return r;
}

int FiniteGroup::order_of(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

std::vector<int> FiniteGroup::generated_subgroup(const std::vector<int>& gens) const {
    std::vector<char> in(size(), 0);
    std::vector<int> elems{identity_};
    in[identity_] = 1;
    for (std::size_t i = 0; i < elems.size(); ++i) {
        for (int g : gens) {
            const int x = mul(elems[i], g);
            if (!in[x]) {
                in[x] = 1;
                elems.push_back(x);
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return elems;
}

std::vector<int> FiniteGroup::centralizer(int a) const {
    std::vector<int> c;
    for (int g = 0; g < size(); ++g) {
        if (commute(a, g)) c.push_back(g);
    }
    return c;
}

std::vector<int> FiniteGroup::conjugacy_class(int a) const {
    std::set<int> cls;
    for (int g = 0; g < size(); ++g) cls.insert(conj(g, a));
    return {cls.begin(), cls.end()};
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (int a = 0; a < size(); ++a) {
        bool central = true;
        for (int g = 0; g < size() && central; ++g) central = commute(a, g);
        if (central) z.push_back(a);
    }
    return z;
}

std::vector<int> FiniteGroup::commutator_subgroup() const {
    std::set<int> comms;
    for (int a = 0; a < size(); ++a) {
        for (int b = 0; b < size(); ++b) comms.insert(commutator(a, b));
    }
    return generated_subgroup({comms.begin(), comms.end()});
}

std::vector<int> FiniteGroup::power_subgroup(int p) const {
    std::set<int> powers;
    for (int a = 0; a < size(); ++a) powers.insert(power(a, p));
    return generated_subgroup({powers.begin(), powers.end()});
}

bool FiniteGroup::is_abelian() const { return static_cast<int>(center().size()) == size(); }

std::vector<int> FiniteGroup::prime_divisors() const { return prime_factors(size()); }

std::vector<int> FiniteGroup::p_elements(int p) const {
    std::vector<int> out;
    for (int a = 0; a < size(); ++a) {
        int o = order_of(a);
        while (o % p == 0) o /= p;
        if (o == 1) out.push_back(a);
    }
    return out;
}

bool FiniteGroup::is_nilpotent() const {
    for (int p : prime_divisors()) {
        if (static_cast<int>(p_elements(p).size()) != p_part(size(), p)) return false;
    }
    return true;
}

// ------------------------------------------------------------ CentralExtension

CentralExtension::CentralExtension(AbelianGroup base, Cocycle2 cocycle, std::string name)
    : base_(std::move(base)), cocycle_(std::move(cocycle)), name_(std::move(name)) {
    if (!validate_cocycle(base_, cocycle_)) throw Error(ErrorKind::InvalidCocycle, "cocycle fails normalization or the cocycle identity");
    const std::size_t n = base_.order();
    std::vector<std::vector<int>> t(2 * n, std::vector<int>(2 * n));
    std::vector<std::string> labels(2 * n);
    for (std::size_t g = 0; g < n; ++g) {
        const Exponents eg = base_.element(g);
        std::string tuple = "(";
        for (std::size_t i = 0; i < eg.size(); ++i) tuple += (i ? "," : "") + std::to_string(eg[i]);
        tuple += ")";
        labels[element(+1, g)] = "+" + tuple;
        labels[element(-1, g)] = "-" + tuple;
        for (std::size_t h = 0; h < n; ++h) {
            const std::size_t gh = base_.add_index(g, h);
            for (int l : {1, -1}) {
                for (int m : {1, -1}) t[element(l, g)][element(m, h)] = element(l * m * cocycle_(g, h), gh);
            }
        }
    }
    group_ = FiniteGroup(std::move(t), std::move(labels));
    stem_ = contains_sorted(group_.commutator_subgroup(), theta());
}

CentralExtension central_extension(const AbelianGroup& group, const Cocycle2& sigma) {
    return CentralExtension(group, sigma);
}

// -------------------------------------------------------------- CommutatorData

int CommutatorData::pair(F2Vec a, F2Vec b) const {
    int s = 0;
    for (int i = 0; i < dimension; ++i) {
        if (bit(a, i)) s ^= dot(gram[i], b);
    }
    return s;
}

CommutatorData commutator_data(const FiniteGroup& G, bool require_z2, int bound) {
    const int n = G.size();
    if (n > bound) throw Error(ErrorKind::Resource, "group order " + std::to_string(n) + " exceeds bound");
    CommutatorData d;
    d.commutator_subgroup = G.commutator_subgroup();
    d.center = G.center();
    d.squares = G.power_subgroup(2);
    if (require_z2 && d.commutator_subgroup.size() > 2) {
        throw Error(ErrorKind::UnsupportedCommutator, "commutator subgroup has order " + std::to_string(d.commutator_subgroup.size()));
    }

    // Coset key of g modulo the normal subgroup G^2: smallest element of g G^2.
    std::vector<int> key(n);
    for (int g = 0; g < n; ++g) {
        int best = n;
        for (int s : d.squares) best = std::min(best, G.mul(g, s));
        key[g] = best;
    }

    std::vector<int> span = d.squares;
    for (int g = 0; g < n; ++g) {
        if (contains_sorted(span, g)) continue;
        d.basis.push_back(g);
        std::vector<int> gens = d.squares;
        gens.insert(gens.end(), d.basis.begin(), d.basis.end());
        span = G.generated_subgroup(gens);
    }
    d.dimension = static_cast<int>(d.basis.size());
    if (d.dimension > 31) throw Error(ErrorKind::Resource, "G/G^2 too large");

    std::map<int, F2Vec> coords_of_key;
    for (F2Vec c = 0; c < (F2Vec{1} << d.dimension); ++c) {
        int x = G.identity();
        for (int i = 0; i < d.dimension; ++i) {
            if (bit(c, i)) x = G.mul(x, d.basis[i]);
        }
        coords_of_key[key[x]] = c;
    }
    d.coordinates.resize(n);
    for (int g = 0; g < n; ++g) d.coordinates[g] = coords_of_key.at(key[g]);

    d.gram.assign(d.dimension, 0);
    for (int i = 0; i < d.dimension; ++i) {
        for (int j = 0; j < d.dimension; ++j) {
            if (!G.commute(d.basis[i], d.basis[j])) d.gram[i] |= F2Vec{1} << j;
        }
    }

    if (d.commutator_subgroup.size() == 2) {
        bool ok = true;
        for (int c : d.commutator_subgroup) {
            for (int g = 0; g < n && ok; ++g) ok = G.commute(c, g);
        }
        for (int g = 0; g < n && ok; ++g) {
            for (int h = 0; h < n && ok; ++h) {
                ok = G.commute(g, h) == (d.pair(d.coordinates[g], d.coordinates[h]) == 0);
            }
        }
        if (ok && n <= 64) {
            for (int g = 0; g < n && ok; ++g) {
                for (int g2 = 0; g2 < n && ok; ++g2) {
                    for (int h = 0; h < n && ok; ++h) {
                        ok = G.commutator(G.mul(g, g2), h) == G.mul(G.commutator(g, h), G.commutator(g2, h));
                    }
                }
            }
        }
        d.bimultiplicative = ok;
    }
    return d;
}

bool is_two_saturated(const FiniteGroup& G) {
    if (!G.is_nilpotent()) throw Error(ErrorKind::Unsupported, "group is not nilpotent");
    const auto comm = G.commutator_subgroup();
    auto frattini_rank = [&](int p) {
        std::vector<int> gens = comm;
        for (int a = 0; a < G.size(); ++a) gens.push_back(G.power(a, p));
        return log_base(G.size() / static_cast<int>(G.generated_subgroup(gens).size()), p);
    };
    const int rank2 = frattini_rank(2);
    for (int p : G.prime_divisors()) {
        if (frattini_rank(p) > rank2) return false;
    }
    return true;
}

std::vector<int> lift_basis_to_generators(const FiniteGroup& G, const CommutatorData& data,
                                          const std::vector<F2Vec>& basis) {
    if (static_cast<int>(basis.size()) != data.dimension || !f2_independent(basis)) {
        throw Error(ErrorKind::Precondition, "cosets do not form a basis of G/G^2");
    }
    if (!is_two_saturated(G)) throw Error(ErrorKind::Precondition, "group is not 2-saturated");

    std::vector<int> lifts;
    for (F2Vec c : basis) {
        int chosen = -1;
        for (int g = 0; g < G.size() && chosen < 0; ++g) {
            if (data.coordinates[g] != c) continue;
            const int o = G.order_of(g);
            if ((o & (o - 1)) == 0) chosen = g;
        }
        if (chosen < 0) throw Error(ErrorKind::Internal, "coset without a 2-element");
        lifts.push_back(chosen);
    }

    // Burnside bases of the odd Sylow subgroups, spread over the lifts.
    for (int p : G.prime_divisors()) {
        if (p == 2) continue;
        const std::vector<int> P = G.p_elements(p);
        std::vector<int> phi_gens;
        for (int a : P) {
            phi_gens.push_back(G.power(a, p));
            for (int b : P) phi_gens.push_back(G.commutator(a, b));
        }
        std::vector<int> span = G.generated_subgroup(phi_gens);
        std::vector<int> chosen;
        for (int a : P) {
            if (span.size() == P.size()) break;
            if (contains_sorted(span, a)) continue;
            chosen.push_back(a);
            std::vector<int> gens = phi_gens;
            gens.insert(gens.end(), chosen.begin(), chosen.end());
            span = G.generated_subgroup(gens);
        }
        if (chosen.size() > lifts.size()) throw Error(ErrorKind::Internal, "odd Frattini rank exceeds 2-rank");
        for (std::size_t i = 0; i < chosen.size(); ++i) lifts[i] = G.mul(lifts[i], chosen[i]);
    }

    if (static_cast<int>(G.generated_subgroup(lifts).size()) != G.size()) {
        throw Error(ErrorKind::Internal, "lifted basis does not generate the group");
    }
    return lifts;
}

// -------------------------------------------------------------- ExtensionSpace

ExtensionSpace::ExtensionSpace(const CentralExtension& E) : base_(E.base()) {
    for (int k = 0; k < base_.rank(); ++k) {
        if (base_.factors()[k] % 2 == 0) even_generators_.push_back(k);
    }
    const int n = dimension();
    gram_.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (E.form(base_.generator(even_generators_[i]), base_.generator(even_generators_[j])) < 0) {
                gram_[i] |= F2Vec{1} << j;
            }
        }
    }
}

F2Vec ExtensionSpace::coordinates(const Exponents& g) const {
    F2Vec v = 0;
    for (int i = 0; i < dimension(); ++i) {
        if (g.at(even_generators_[i]) & 1) v |= F2Vec{1} << i;
    }
    return v;
}

Exponents ExtensionSpace::lift(F2Vec v) const {
    Exponents g = base_.identity();
    for (int i = 0; i < dimension(); ++i) g[even_generators_[i]] = bit(v, i);
    return g;
}

int ExtensionSpace::pair(F2Vec a, F2Vec b) const {
    int s = 0;
    for (int i = 0; i < dimension(); ++i) {
        if (bit(a, i)) s ^= dot(gram_[i], b);
    }
    return s;
}

int ExtensionSpace::nullity() const { return dimension() - f2_rank(gram_); }

// ---------------------------------------------------------------------- presets

namespace {

// D4 cocycle block on coordinates (a, b): sigma = (-1)^(g_b h_a).
void add_d4_block(std::vector<std::vector<int>>& B, int a, int b) { B[b][a] = 1; }

}  // namespace

std::vector<std::string> preset_names() {
    return {"D4", "Q8", "Z2^n", "D4xZ2", "D4xZ2^2", "D4cD4", "Z2sqxD4", "Z3xD4"};
}

CentralExtension preset_extension(const std::string& name) {
    auto zero = [](int r) { return std::vector<std::vector<int>>(r, std::vector<int>(r, 0)); };
    if (name == "D4") {
        auto B = zero(2);
        add_d4_block(B, 0, 1);
        AbelianGroup g({2, 2});
        return CentralExtension(g, Cocycle2::bilinear(g, B), name);
    }
    if (name == "Q8") {
        AbelianGroup g({2, 2});
        return CentralExtension(g, Cocycle2::bilinear(g, {{1, 1}, {0, 1}}), name);
    }
    if (name == "D4xZ2" || name == "D4xZ2^2" || name == "Z2sqxD4" || name == "D4cD4" || name == "D4*D4") {
        const int r = name == "D4xZ2" ? 3 : 4;
        auto B = zero(r);
        if (name == "Z2sqxD4") {
            add_d4_block(B, 2, 3);
        } else {
            add_d4_block(B, 0, 1);
        }
        if (name == "D4cD4" || name == "D4*D4") add_d4_block(B, 2, 3);
        AbelianGroup g = AbelianGroup::elementary(r);
        return CentralExtension(g, Cocycle2::bilinear(g, B), name == "D4*D4" ? "D4cD4" : name);
    }
    if (name == "Z3xD4") {
        auto B = zero(3);
        add_d4_block(B, 1, 2);
        AbelianGroup g({3, 2, 2});
        return CentralExtension(g, Cocycle2::bilinear(g, B), name);
    }
    if (name.rfind("Z2^", 0) == 0) {
        int r = 0;
        try {
            r = std::stoi(name.substr(3));
        } catch (const std::exception&) {
            throw Error(ErrorKind::UnknownId, "unknown group preset " + name);
        }
        if (r < 0 || r > 8) throw Error(ErrorKind::Unsupported, "Z2^n preset needs 0 <= n <= 8");
        AbelianGroup g = AbelianGroup::elementary(r);
        return CentralExtension(g, Cocycle2::trivial(g), name);
    }
    throw Error(ErrorKind::UnknownId, "unknown group preset " + name);
}

}  // namespace nichols
