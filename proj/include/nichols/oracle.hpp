#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nichols/cartan.hpp"
#include "nichols/yd.hpp"

namespace nichols {

struct OracleOptions {
    std::uint64_t dense_bound = 4096;
    std::uint64_t sparse_bound = 32768;
    int threads = 1;
    std::vector<std::uint32_t> primes = {2147483647u, 2147483629u};
    // Also run fraction-free elimination over the integers on every block below 1024 rows.
    bool exact_audit = false;
};

struct SymmetrizerReport {
    int degree = 0;
    std::uint64_t ambient = 0;
    std::uint64_t rank = 0;
    std::vector<std::uint32_t> primes;
    bool agreement = true;
};

// Words of length d are indexed row-major: the first letter is the most significant digit.
SymmetrizerReport nichols_dim(const BraidingOperator& c, int d, const OracleOptions& options = {});
std::vector<std::uint64_t> hilbert_prefix(const BraidingOperator& c, int d_max, const OracleOptions& options = {});
std::vector<std::uint64_t> hilbert_prefix(const DiagonalYD& M, int d_max, const OracleOptions& options = {});
std::vector<std::uint64_t> hilbert_prefix(const MonomialYD& M, int d_max, const OracleOptions& options = {});

// Rank of the matrix of iterated skew derivations, rows indexed by derivation sequences.
std::uint64_t skew_derivation_dim(const BraidingOperator& c, int d, const OracleOptions& options = {});

using SparseVector = std::vector<std::pair<std::uint64_t, std::int64_t>>;

// S_d applied to a basis word, as a sorted sparse vector.
SparseVector symmetrizer_column(const BraidingOperator& c, int d, std::uint64_t word);

// T_w for a word in the simple transpositions s_1..s_{d-1} (entries 1-based, rightmost applied first).
std::pair<std::uint64_t, int> braid_lift(const BraidingOperator& c, int d, const std::vector<int>& simple_word,
                                         std::uint64_t word);
// A reduced word of a permutation of {0..d-1}, by bubble sort from the left or from the right.
std::vector<int> reduced_word(const std::vector<int>& perm, bool from_left);

// Rank of a sparse column set, modulo p.
std::uint64_t rank_mod_p(const std::vector<SparseVector>& columns, std::uint32_t p);
// Exact rank by fraction-free elimination.
std::size_t exact_rank(std::vector<std::vector<BigInt>> rows);

}  // namespace nichols
