#include "nichols/symplectic.hpp"

#include <algorithm>
#include <functional>

#include "nichols/error.hpp"

namespace nichols {

SympSpace::SympSpace(std::vector<F2Vec> gram_rows) : gram_(std::move(gram_rows)) {
    const int n = dimension();
    if (n > 32) throw Error(ErrorKind::Resource, "symplectic spaces are limited to dimension 32");
    for (int i = 0; i < n; ++i) {
        if (n < 32 && (gram_[i] >> n) != 0) throw Error(ErrorKind::MalformedInput, "Gram row has bits beyond the dimension");
        if (bit(gram_[i], i)) throw Error(ErrorKind::MalformedInput, "Gram matrix has a nonzero diagonal");
        for (int j = 0; j < n; ++j) {
            if (bit(gram_[i], j) != bit(gram_[j], i)) throw Error(ErrorKind::MalformedInput, "Gram matrix is not symmetric");
        }
    }
}

SympSpace SympSpace::from_matrix(const std::vector<std::vector<int>>& gram) {
    std::vector<F2Vec> rows;
    for (const auto& row : gram) {
        if (row.size() != gram.size()) throw Error(ErrorKind::MalformedInput, "Gram matrix is not square");
        F2Vec r = 0;
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j] & 1) r |= F2Vec{1} << j;
        }
        rows.push_back(r);
    }
    return SympSpace(std::move(rows));
}

SympSpace SympSpace::standard(int pairs, int nulls) {
    std::vector<F2Vec> rows(2 * pairs + nulls, 0);
    for (int k = 0; k < pairs; ++k) {
        rows[2 * k] = F2Vec{1} << (2 * k + 1);
        rows[2 * k + 1] = F2Vec{1} << (2 * k);
    }
    return SympSpace(std::move(rows));
}

int SympSpace::pair(F2Vec a, F2Vec b) const {
    int s = 0;
    for (int i = 0; i < dimension(); ++i) {
        if (bit(a, i)) s ^= dot(gram_[i], b);
    }
    return s;
}

int SympSpace::rank() const { return f2_rank(gram_); }

std::vector<F2Vec> nullspace(const SympSpace& space) { return f2_kernel(space.gram(), space.dimension()); }

SymplecticBasis symplectic_basis(const SympSpace& space) {
    std::vector<F2Vec> pool;
    for (int i = 0; i < space.dimension(); ++i) pool.push_back(F2Vec{1} << i);
    SymplecticBasis out;
    while (!pool.empty()) {
        const F2Vec u = pool.front();
        pool.erase(pool.begin());
        auto partner = std::find_if(pool.begin(), pool.end(), [&](F2Vec w) { return space.pair(u, w) == 1; });
        if (partner == pool.end()) {
            out.nulls.push_back(u);
            continue;
        }
        const F2Vec w = *partner;
        pool.erase(partner);
        for (F2Vec& v : pool) {
            F2Vec r = v;
            if (space.pair(v, w)) r ^= u;
            if (space.pair(v, u)) r ^= w;
            v = r;
        }
        out.pairs.emplace_back(u, w);
    }
    return out;
}

// ------------------------------------------------------------------ decorations

bool SimpleGraph::adjacent(int i, int j) const {
    for (const auto& [a, b] : edges) {
        if ((a == i && b == j) || (a == j && b == i)) return true;
    }
    return false;
}

SimpleGraph SimpleGraph::of_type(const DynkinType& type) {
    if (!type.simply_laced()) throw Error(ErrorKind::Unsupported, "diagram " + type.str() + " is not simply laced");
    const CartanMatrix c = CartanMatrix::of_type(type);
    SimpleGraph g;
    g.nodes = type.rank;
    for (int i = 0; i < g.nodes; ++i) {
        for (int j = i + 1; j < g.nodes; ++j) {
            if (c(i, j) != 0) g.edges.emplace_back(i, j);
        }
    }
    return g;
}

RootSystemReport verify_root_system(const Decoration& d) {
    RootSystemReport r;
    const int n = d.graph.nodes;
    if (static_cast<int>(d.phi.size()) != n) throw Error(ErrorKind::MalformedInput, "decoration does not cover every node");
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if ((d.space.pair(d.phi[i], d.phi[j]) == 1) != d.graph.adjacent(i, j)) r.violations.emplace_back(i, j);
        }
    }
    const int rank = f2_rank(d.phi);
    r.spans = rank == d.space.dimension();
    r.valid = r.violations.empty() && r.spans;
    r.minimal = r.valid && rank == n;
    return r;
}

int required_nullity(const DynkinType& type) {
    if (!type.simply_laced()) throw Error(ErrorKind::Unsupported, "diagram " + type.str() + " is not simply laced");
    if (type.series == 'D' && type.rank % 2 == 0) return 2;
    return type.rank % 2;
}

Decoration minimal_root_system(const DynkinType& type) {
    if (!type.simply_laced()) throw Error(ErrorKind::Unsupported, "diagram " + type.str() + " is not simply laced");
    if (type.rank > 16) throw Error(ErrorKind::Unsupported, "diagram rank above 16");
    const int n = type.rank;
    Decoration d;
    d.graph = SimpleGraph::of_type(type);

    if (type.series == 'A') {
        // x_{k-1}+x_k on odd nodes, y_k on even nodes, closing null vector for odd rank.
        const int pairs = n / 2;
        const int nulls = n % 2;
        d.space = SympSpace::standard(pairs, nulls);
        auto x = [](int k) { return k >= 1 ? F2Vec{1} << (2 * (k - 1)) : F2Vec{0}; };
        auto y = [](int k) { return F2Vec{1} << (2 * (k - 1) + 1); };
        for (int node = 1; node <= n; ++node) {
            if (node % 2 == 0) {
                d.phi.push_back(y(node / 2));
            } else {
                const int k = (node + 1) / 2;
                if (k <= pairs) {
                    d.phi.push_back(x(k - 1) ^ x(k));
                } else {
                    d.phi.push_back(x(k - 1) ^ (F2Vec{1} << (2 * pairs)));
                }
            }
        }
    } else {
        // The adjacency form itself, rewritten in a symplectic basis.
        std::vector<F2Vec> adjacency(n, 0);
        for (const auto& [a, b] : d.graph.edges) {
            adjacency[a] |= F2Vec{1} << b;
            adjacency[b] |= F2Vec{1} << a;
        }
        const SymplecticBasis sb = symplectic_basis(SympSpace(adjacency));
        std::vector<F2Vec> basis;
        for (const auto& [u, w] : sb.pairs) {
            basis.push_back(u);
            basis.push_back(w);
        }
        basis.insert(basis.end(), sb.nulls.begin(), sb.nulls.end());
        d.space = SympSpace::standard(static_cast<int>(sb.pairs.size()), static_cast<int>(sb.nulls.size()));
        for (int i = 0; i < n; ++i) d.phi.push_back(*f2_coordinates(basis, F2Vec{1} << i));
    }

    const RootSystemReport report = verify_root_system(d);
    if (!report.minimal || d.space.nullity() != required_nullity(type)) {
        throw Error(ErrorKind::Internal, "generated decoration for " + type.str() + " fails verification");
    }
    return d;
}

bool exists_minimal_decoration(const SimpleGraph& graph, int pairs, int nulls) {
    const SympSpace space = SympSpace::standard(pairs, nulls);
    const int dim = space.dimension();
    if (dim != graph.nodes || dim > 12) return false;
    std::vector<F2Vec> phi;
    std::function<bool(int)> extend = [&](int i) {
        if (i == graph.nodes) return true;
        for (F2Vec v = 1; v < (F2Vec{1} << dim); ++v) {
            bool ok = true;
            for (int j = 0; j < i && ok; ++j) ok = (space.pair(phi[j], v) == 1) == graph.adjacent(i, j);
            if (!ok) continue;
            phi.push_back(v);
            if (f2_independent(phi) && extend(i + 1)) return true;
            phi.pop_back();
        }
        return false;
    };
    return extend(0);
}

}  // namespace nichols
