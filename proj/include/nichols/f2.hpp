#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

namespace nichols {

// Vectors over F2 of dimension at most 32, bit i is coordinate i.
using F2Vec = std::uint32_t;

inline int parity(F2Vec v) { return std::popcount(v) & 1; }
inline int dot(F2Vec a, F2Vec b) { return parity(a & b); }
inline int bit(F2Vec v, int i) { return static_cast<int>((v >> i) & 1u); }

int f2_rank(std::vector<F2Vec> rows);
bool f2_independent(const std::vector<F2Vec>& vectors);

// Basis of {v : dot(row, v) = 0 for all rows}, n = number of coordinates.
std::vector<F2Vec> f2_kernel(const std::vector<F2Vec>& rows, int n);

// Some x with dot(rows[i], x) = rhs bit i, or nothing if inconsistent.
std::optional<F2Vec> f2_solve(const std::vector<F2Vec>& rows, F2Vec rhs, int n);

// Coordinates of v in terms of an independent family, or nothing if v is outside the span.
std::optional<F2Vec> f2_coordinates(const std::vector<F2Vec>& basis, F2Vec v);

}  // namespace nichols
