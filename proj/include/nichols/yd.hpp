#pragma once

#include <string>
#include <vector>

#include "nichols/cartan.hpp"
#include "nichols/groups.hpp"

namespace nichols {

struct DiagonalSummand {
    Exponents degree;
    Character character;
};

/** Direct sum of one-dimensional modules over an abelian group. */
class DiagonalYD {
public:
    DiagonalYD() = default;
    DiagonalYD(AbelianGroup group, std::vector<DiagonalSummand> summands);

    const AbelianGroup& group() const { return group_; }
    const std::vector<DiagonalSummand>& summands() const { return summands_; }
    int dimension() const { return static_cast<int>(summands_.size()); }
    DiagonalYD direct_sum(const DiagonalYD& other) const;

private:
    AbelianGroup group_;
    std::vector<DiagonalSummand> summands_;
};

QMatrix q_matrix(const DiagonalYD& M);

/** Signed permutation: e_b maps to sign[b] * e_{target[b]}. */
struct MonomialMatrix {
    std::vector<int> target;
    std::vector<int> sign;

    static MonomialMatrix identity(int m);
    int size() const { return static_cast<int>(target.size()); }
    bool is_identity() const;
    // (A * B)(e_b) = A(B(e_b))
    friend MonomialMatrix operator*(const MonomialMatrix& A, const MonomialMatrix& B);
    friend bool operator==(const MonomialMatrix& A, const MonomialMatrix& B) {
        return A.target == B.target && A.sign == B.sign;
    }
};

/** Module over a finite group acting by signed permutations of a homogeneous basis. */
class MonomialYD {
public:
    MonomialYD() = default;
    MonomialYD(FiniteGroup group, std::vector<int> degrees, std::vector<int> generators,
               std::vector<MonomialMatrix> generator_action);

    const FiniteGroup& group() const { return group_; }
    int dimension() const { return static_cast<int>(degrees_.size()); }
    int degree(int b) const { return degrees_[b]; }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<int>& generators() const { return generators_; }
    const std::vector<MonomialMatrix>& generator_action() const { return generator_action_; }
    const MonomialMatrix& action(int g) const { return action_[g]; }

private:
    FiniteGroup group_;
    std::vector<int> degrees_;
    std::vector<int> generators_;
    std::vector<MonomialMatrix> generator_action_;
    std::vector<MonomialMatrix> action_;
};

/** Braiding on M (x) M, basis e_a (x) e_b at index a*m + b. */
struct BraidingOperator {
    int m = 0;
    MonomialMatrix map;

    bool satisfies_yang_baxter() const;
    // Entry of the matrix: coefficient of e_row in c(e_col).
    int entry(int row, int col) const { return map.target[col] == row ? map.sign[col] : 0; }
};

BraidingOperator braiding(const DiagonalYD& M);
BraidingOperator braiding(const MonomialYD& M);

bool verify_yd(const MonomialYD& M, std::vector<std::string>* violations = nullptr);

/** Bimultiplicative skew form on an abelian group, F2 Gram matrix on generators (bit = value -1). */
struct TwistForm {
    AbelianGroup group;
    std::vector<F2Vec> gram;

    int operator()(const Exponents& g, const Exponents& h) const;
    static TwistForm trivial(const AbelianGroup& group);
};

TwistForm form_from_extension(const CentralExtension& E);
DiagonalYD twist_by_form(const DiagonalYD& M, const TwistForm& f);
bool verify_twisted_symmetry(const DiagonalYD& M, const std::vector<int>& perm, const CentralExtension& E);

// Character values on G: +1/-1 on the subgroup generated by gens, 0 elsewhere.
std::vector<int> character_on_subgroup(const FiniteGroup& G, const std::vector<int>& gens, const std::vector<int>& values);

std::vector<int> greedy_generators(const FiniteGroup& G);

MonomialYD simple_conjugacy_module(const FiniteGroup& G, int representative, const std::vector<int>& chi);
MonomialYD direct_sum(const MonomialYD& a, const MonomialYD& b);
MonomialYD restrict_module(const MonomialYD& M, const std::vector<int>& block);

std::vector<std::vector<int>> decompose_simples(const MonomialYD& M);
bool is_faithful(const MonomialYD& M);

}  // namespace nichols
