#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "nichols/root_of_unity.hpp"

namespace nichols {

using BigInt = boost::multiprecision::cpp_int;

struct DynkinType {
    char series = 'A';
    int rank = 1;

    static DynkinType parse(const std::string& text);
    std::string str() const { return std::string(1, series) + std::to_string(rank); }
    bool simply_laced() const { return series == 'A' || series == 'D' || series == 'E'; }

    friend bool operator==(const DynkinType& a, const DynkinType& b) { return a.series == b.series && a.rank == b.rank; }
};

/** Generalized Cartan matrix, nonpositive off the diagonal. A row with -2 or -3 is a short node. */
class CartanMatrix {
public:
    CartanMatrix() = default;
    explicit CartanMatrix(std::vector<std::vector<int>> entries);

    static CartanMatrix of_type(const DynkinType& type);
    static CartanMatrix block_diagonal(const std::vector<CartanMatrix>& blocks);

    int size() const { return static_cast<int>(c_.size()); }
    int operator()(int i, int j) const { return c_[i][j]; }
    const std::vector<std::vector<int>>& entries() const { return c_; }

    friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.c_ == b.c_; }

private:
    std::vector<std::vector<int>> c_;
};

struct Component {
    std::vector<int> nodes;  // nodes[k] is the original index of standard node k
    DynkinType type;
};

std::vector<Component> classify(const CartanMatrix& C);
// Component labels joined by "x", e.g. "A2xA2".
std::string type_label(const std::vector<Component>& components);

struct RootSet {
    std::vector<std::vector<int>> roots;  // sorted by height, then lexicographically

    int height(std::size_t k) const;
    std::map<int, int> height_histogram() const;
    std::size_t size() const { return roots.size(); }
};

RootSet positive_roots(const CartanMatrix& C);

/** Product of factors [N]_{t^h} = 1 + t^h + ... + t^{(N-1)h}, kept in factored form. */
class HilbertSeries {
public:
    HilbertSeries() = default;

    void multiply_factor(int N, int h, int multiplicity = 1);
    HilbertSeries operator*(const HilbertSeries& other) const;
    HilbertSeries squared() const { return *this * *this; }

    const std::map<std::pair<int, int>, int>& factors() const { return factors_; }  // (h, N) -> multiplicity
    std::vector<BigInt> coefficients() const;
    BigInt at_one() const;
    int degree() const;
    // Number of factors when every factor is [2], else -1.
    int two_exponent() const;
    std::string factored() const;

    friend bool operator==(const HilbertSeries& a, const HilbertSeries& b) { return a.factors_ == b.factors_; }

private:
    std::map<std::pair<int, int>, int> factors_;
};

HilbertSeries hilbert_from_roots(const RootSet& roots);
// Expanded polynomial to BigInt coefficient list.
std::vector<BigInt> expand(const HilbertSeries& series);

using QMatrix = std::vector<std::vector<RootOfUnity>>;

CartanMatrix cartan_from_q(const QMatrix& q, int bound = 8);

// orbits: singletons and pairs of node indices covering every node once.
CartanMatrix fold(const CartanMatrix& C, const std::vector<std::vector<int>>& orbits);

}  // namespace nichols
