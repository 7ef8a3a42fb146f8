#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nichols/f2.hpp"
#include "nichols/root_of_unity.hpp"

namespace nichols {

using Exponents = std::vector<int>;

/** Direct product of cyclic groups Z_{f_1} x ... x Z_{f_r}. */
class AbelianGroup {
public:
    AbelianGroup() = default;
    explicit AbelianGroup(std::vector<int> invariant_factors);

    static AbelianGroup elementary(int rank, int p = 2);

    const std::vector<int>& factors() const { return factors_; }
    int rank() const { return static_cast<int>(factors_.size()); }
    std::size_t order() const { return order_; }

    Exponents identity() const { return Exponents(factors_.size(), 0); }
    Exponents generator(int i) const;
    Exponents add(const Exponents& a, const Exponents& b) const;
    Exponents negate(const Exponents& a) const;
    bool contains(const Exponents& a) const;

    // Lexicographic position of a tuple; first coordinate most significant.
    std::size_t index_of(const Exponents& a) const;
    Exponents element(std::size_t index) const;
    std::size_t add_index(std::size_t a, std::size_t b) const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.factors_ == b.factors_; }

    std::string str() const;

private:
    std::vector<int> factors_;
    std::size_t order_ = 1;
};

class Character {
public:
    Character() = default;
    Character(const AbelianGroup& group, Exponents exponents);

    static Character trivial(const AbelianGroup& group);
    // -1 on the generators whose entry is negative; needs even factors there.
    static Character from_signs(const AbelianGroup& group, const std::vector<int>& signs);

    const std::vector<int>& factors() const { return factors_; }
    const Exponents& exponents() const { return exponents_; }

    RootOfUnity operator()(const Exponents& g) const;
    RootOfUnity on_generator(int i) const;
    Character operator*(const Character& other) const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.factors_ == b.factors_ && a.exponents_ == b.exponents_;
    }

private:
    std::vector<int> factors_;
    Exponents exponents_;
};

/** Normalized 2-cocycle with values in {+1,-1}, indexed in canonical element order. */
struct Cocycle2 {
    std::vector<std::vector<int>> table;

    static Cocycle2 trivial(const AbelianGroup& group);
    // sigma(g,h) = (-1)^(g^T B h); B[i][j] nonzero needs even factors i and j.
    static Cocycle2 bilinear(const AbelianGroup& group, const std::vector<std::vector<int>>& B);

    int operator()(std::size_t g, std::size_t h) const { return table[g][h]; }
};

bool validate_cocycle(const AbelianGroup& group, const Cocycle2& sigma);

class FiniteGroup {
public:
    FiniteGroup() = default;
    explicit FiniteGroup(std::vector<std::vector<int>> cayley, std::vector<std::string> labels = {});

    static FiniteGroup from_abelian(const AbelianGroup& group);

    int size() const { return static_cast<int>(table_.size()); }
    int identity() const { return identity_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int power(int a, long k) const;
    int order_of(int a) const;
    int conj(int g, int h) const { return mul(mul(g, h), inv(g)); }
    int commutator(int g, int h) const { return mul(mul(g, h), mul(inv(g), inv(h))); }
    bool commute(int a, int b) const { return mul(a, b) == mul(b, a); }

    const std::vector<std::vector<int>>& table() const { return table_; }
    const std::string& label(int a) const { return labels_[a]; }
    const std::vector<std::string>& labels() const { return labels_; }

    // Sorted element list of the subgroup generated by gens.
    std::vector<int> generated_subgroup(const std::vector<int>& gens) const;
    std::vector<int> centralizer(int a) const;
    std::vector<int> conjugacy_class(int a) const;
    std::vector<int> center() const;
    std::vector<int> commutator_subgroup() const;
    // Subgroup generated by p-th powers.
    std::vector<int> power_subgroup(int p) const;
    bool is_abelian() const;
    bool is_associative() const;
    // Every Sylow subgroup normal, tested by counting p-elements.
    bool is_nilpotent() const;
    std::vector<int> prime_divisors() const;
    std::vector<int> p_elements(int p) const;

private:
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<std::string> labels_;
    int identity_ = 0;
};

/**
 * Extension 1 -> {+1,-1} -> G -> Gamma -> 1 built from a cocycle.
 * Element (lambda, g) has index 2*idx(g) + (lambda == -1).
 */
class CentralExtension {
public:
    CentralExtension() = default;
    CentralExtension(AbelianGroup base, Cocycle2 cocycle, std::string name = {});

    const AbelianGroup& base() const { return base_; }
    const Cocycle2& cocycle() const { return cocycle_; }
    const FiniteGroup& group() const { return group_; }
    const std::string& name() const { return name_; }

    int element(int sign, std::size_t base_index) const {
        return static_cast<int>(2 * base_index) + (sign < 0 ? 1 : 0);
    }
    int section(std::size_t base_index) const { return element(+1, base_index); }
    int section(const Exponents& g) const { return section(base_.index_of(g)); }
    std::size_t project(int g) const { return static_cast<std::size_t>(g) / 2; }
    int sign_of(int g) const { return (g & 1) ? -1 : 1; }
    int theta() const { return 1; }
    bool is_stem() const { return stem_; }

    // <g,h> = sigma(g,h) sigma(h,g)^{-1} in {+1,-1}.
    int form(std::size_t g, std::size_t h) const { return cocycle_(g, h) * cocycle_(h, g); }
    int form(const Exponents& g, const Exponents& h) const {
        return form(base_.index_of(g), base_.index_of(h));
    }

private:
    AbelianGroup base_;
    Cocycle2 cocycle_;
    FiniteGroup group_;
    std::string name_;
    bool stem_ = false;
};

CentralExtension central_extension(const AbelianGroup& group, const Cocycle2& sigma);

struct CommutatorData {
    std::vector<int> commutator_subgroup;
    std::vector<int> center;
    std::vector<int> squares;
    std::vector<int> basis;            // group elements lifting a basis of V = G/G^2
    std::vector<F2Vec> coordinates;    // V-coordinates of every group element
    std::vector<F2Vec> gram;           // row i as a bit mask
    int dimension = 0;
    bool bimultiplicative = false;

    int pair(F2Vec a, F2Vec b) const;
};

CommutatorData commutator_data(const FiniteGroup& G, bool require_z2 = false, int bound = 512);

bool is_two_saturated(const FiniteGroup& G);

// basis entries are V-coordinates with respect to data.
std::vector<int> lift_basis_to_generators(const FiniteGroup& G, const CommutatorData& data,
                                          const std::vector<F2Vec>& basis);

/**
 * V = Gamma / Gamma^2 for an extension, with basis the images of the even-order
 * generators of Gamma, and the commutator form on it.
 */
class ExtensionSpace {
public:
    explicit ExtensionSpace(const CentralExtension& E);

    int dimension() const { return static_cast<int>(even_generators_.size()); }
    const std::vector<int>& even_generators() const { return even_generators_; }
    const std::vector<F2Vec>& gram() const { return gram_; }

    F2Vec coordinates(const Exponents& g) const;
    Exponents lift(F2Vec v) const;
    int pair(F2Vec a, F2Vec b) const;
    // Two-center dimension: nullity of the form on V.
    int nullity() const;

private:
    AbelianGroup base_;
    std::vector<int> even_generators_;
    std::vector<F2Vec> gram_;
};

/** Named extensions: D4, Q8, Z2^n, D4xZ2, D4xZ2^2, D4cD4, Z2sqxD4, Z3xD4. */
CentralExtension preset_extension(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace nichols
