#include "nichols/f2.hpp"

namespace nichols {

int f2_rank(std::vector<F2Vec> rows) {
    int rank = 0;
    for (int col = 0; col < 32; ++col) {
        const F2Vec mask = F2Vec{1} << col;
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r] & mask) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        }
        ++rank;
    }
    return rank;
}

bool f2_independent(const std::vector<F2Vec>& vectors) {
    return f2_rank(vectors) == static_cast<int>(vectors.size());
}

std::vector<F2Vec> f2_kernel(const std::vector<F2Vec>& rows_in, int n) {
    std::vector<F2Vec> rows = rows_in;
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        const F2Vec mask = F2Vec{1} << col;
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r] & mask) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    std::vector<bool> is_pivot(n, false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<F2Vec> kernel;
    for (int free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        F2Vec v = F2Vec{1} << free;
        for (int r = 0; r < rank; ++r) {
            if (rows[r] & (F2Vec{1} << free)) v |= F2Vec{1} << pivot_col[r];
        }
        kernel.push_back(v);
    }
    return kernel;
}

std::optional<F2Vec> f2_solve(const std::vector<F2Vec>& rows_in, F2Vec rhs, int n) {
    // Augment each row with its right-hand side in bit n.
    std::vector<std::uint64_t> rows;
    for (std::size_t i = 0; i < rows_in.size(); ++i) {
        rows.push_back(std::uint64_t{rows_in[i]} | (static_cast<std::uint64_t>(bit(rhs, static_cast<int>(i))) << n));
    }
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n; ++col) {
        const std::uint64_t mask = std::uint64_t{1} << col;
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r] & mask) { pivot = r; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r != rank && (rows[r] & mask)) rows[r] ^= rows[rank];
        }
        pivot_col.push_back(col);
        ++rank;
    }
    for (int r = rank; r < static_cast<int>(rows.size()); ++r) {
        if (rows[r] >> n & 1u) return std::nullopt;
    }
    F2Vec x = 0;
    for (int r = 0; r < rank; ++r) {
        if (rows[r] >> n & 1u) x |= F2Vec{1} << pivot_col[r];
    }
    return x;
}

std::optional<F2Vec> f2_coordinates(const std::vector<F2Vec>& basis, F2Vec v) {
    // Transpose: unknown coefficient k multiplies basis[k].
    const int n = static_cast<int>(basis.size());
    std::vector<F2Vec> rows(32, 0);
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < 32; ++i) {
            if (bit(basis[k], i)) rows[i] |= F2Vec{1} << k;
        }
    }
    return f2_solve(rows, v, n);
}

}  // namespace nichols
