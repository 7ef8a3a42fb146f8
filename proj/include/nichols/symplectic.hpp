#pragma once

#include <string>
#include <utility>
#include <vector>

#include "nichols/cartan.hpp"
#include "nichols/f2.hpp"

namespace nichols {

/** F2 vector space with an alternating, possibly degenerate, form. */
class SympSpace {
public:
    SympSpace() = default;
    explicit SympSpace(std::vector<F2Vec> gram_rows);

    static SympSpace from_matrix(const std::vector<std::vector<int>>& gram);
    // Basis order x1, y1, ..., xp, yp, z1, ..., zk.
    static SympSpace standard(int pairs, int nulls);

    int dimension() const { return static_cast<int>(gram_.size()); }
    const std::vector<F2Vec>& gram() const { return gram_; }
    int pair(F2Vec a, F2Vec b) const;
    int rank() const;
    int nullity() const { return dimension() - rank(); }

private:
    std::vector<F2Vec> gram_;
};

std::vector<F2Vec> nullspace(const SympSpace& space);

struct SymplecticBasis {
    std::vector<std::pair<F2Vec, F2Vec>> pairs;
    std::vector<F2Vec> nulls;
};

SymplecticBasis symplectic_basis(const SympSpace& space);

struct SimpleGraph {
    int nodes = 0;
    std::vector<std::pair<int, int>> edges;

    bool adjacent(int i, int j) const;
    static SimpleGraph of_type(const DynkinType& type);
};

struct Decoration {
    SimpleGraph graph;
    SympSpace space;
    std::vector<F2Vec> phi;
};

struct RootSystemReport {
    bool valid = false;
    bool minimal = false;
    bool spans = false;
    std::vector<std::pair<int, int>> violations;
};

RootSystemReport verify_root_system(const Decoration& d);

// Nullity the minimal symplectic root system of a simply-laced diagram must have.
int required_nullity(const DynkinType& type);

Decoration minimal_root_system(const DynkinType& type);

// Exhaustive search for a minimal decoration over the standard space of the given shape.
bool exists_minimal_decoration(const SimpleGraph& graph, int pairs, int nulls);

}  // namespace nichols
