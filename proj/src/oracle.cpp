#include "nichols/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <numeric>
#include <thread>

#include "nichols/error.hpp"

namespace nichols {

namespace {

void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body) {
    const std::size_t workers = std::min<std::size_t>(std::max(threads, 1), std::max<std::size_t>(count, 1));
    if (workers <= 1) {
        for (std::size_t i = 0; i < count; ++i) body(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::atomic<bool> failed{false};
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) {
                if (failed) return;
                try {
                    body(i);
                } catch (...) {
                    if (!failed.exchange(true)) failure = std::current_exception();
                }
            }
        });
    }
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

std::vector<int> letters_of(std::uint64_t word, int m, int d) {
    std::vector<int> w(d);
    for (int i = d - 1; i >= 0; --i) {
        w[i] = static_cast<int>(word % m);
        word /= m;
    }
    return w;
}

std::uint64_t index_of(const std::vector<int>& w, int m, int len) {
    std::uint64_t idx = 0;
    for (int i = 0; i < len; ++i) idx = idx * m + w[i];
    return idx;
}

// Applies the braiding to positions (i, i+1), 0-based.
inline void apply_c(const BraidingOperator& c, std::vector<int>& w, int i, int& sign) {
    const int m = c.m;
    const int src = w[i] * m + w[i + 1];
    const int t = c.map.target[src];
    sign *= c.map.sign[src];
    w[i] = t / m;
    w[i + 1] = t % m;
}

SparseVector compress(std::vector<std::pair<std::uint64_t, std::int64_t>>& terms) {
    std::sort(terms.begin(), terms.end());
    SparseVector out;
    for (const auto& [idx, v] : terms) {
        if (!out.empty() && out.back().first == idx) {
            out.back().second += v;
        } else {
            out.emplace_back(idx, v);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(), [](const auto& e) { return e.second == 0; }), out.end());
    return out;
}

// S_len on the prefix of length len: (S_{len-1} x id) (sum_k c_{len-1} ... c_k).
void symmetrize(const BraidingOperator& c, std::vector<int>& w, int len, int sign, int d,
                std::vector<std::pair<std::uint64_t, std::int64_t>>& out) {
    if (len <= 1) {
        out.emplace_back(index_of(w, c.m, d), sign);
        return;
    }
    for (int k = len; k >= 1; --k) {
        std::vector<int> v = w;
        int s = sign;
        for (int i = k; i <= len - 1; ++i) apply_c(c, v, i - 1, s);
        symmetrize(c, v, len - 1, s, d, out);
    }
}

std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, e = p - 2;
    while (e) {
        if (e & 1) r = r * a % p;
        a = a * a % p;
        e >>= 1;
    }
    return r;
}

std::size_t dense_rank_mod_p(std::vector<std::vector<std::uint64_t>>& a, std::uint64_t p) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        const std::uint64_t inv = mod_inverse(a[rank][col], p);
        for (std::size_t j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv % p;
        for (std::size_t r = rank + 1; r < rows; ++r) {
            const std::uint64_t f = a[r][col];
            if (f == 0) continue;
            for (std::size_t j = col; j < cols; ++j) {
                if (a[rank][j]) a[r][j] = (a[r][j] + (p - f) * a[rank][j]) % p;
            }
        }
        ++rank;
    }
    return rank;
}

struct Block {
    std::vector<std::uint64_t> rows;
    std::vector<std::size_t> cols;
};

std::vector<Block> split_blocks(const std::vector<SparseVector>& columns) {
    // Union-find over columns, joined through shared row indices.
    const std::size_t n = columns.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::pair<std::uint64_t, std::size_t>> incidences;
    for (std::size_t j = 0; j < n; ++j) {
        for (const auto& [row, v] : columns[j]) incidences.emplace_back(row, j);
    }
    std::sort(incidences.begin(), incidences.end());
    for (std::size_t i = 1; i < incidences.size(); ++i) {
        if (incidences[i].first == incidences[i - 1].first) {
            const std::size_t a = find(incidences[i].second), b = find(incidences[i - 1].second);
            if (a != b) parent[std::max(a, b)] = std::min(a, b);
        }
    }
    std::vector<Block> blocks;
    std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
    for (std::size_t j = 0; j < n; ++j) {
        if (columns[j].empty()) continue;
        const std::size_t r = find(j);
        if (slot[r] == static_cast<std::size_t>(-1)) {
            slot[r] = blocks.size();
            blocks.emplace_back();
        }
        blocks[slot[r]].cols.push_back(j);
    }
    for (auto& b : blocks) {
        for (std::size_t j : b.cols) {
            for (const auto& [row, v] : columns[j]) b.rows.push_back(row);
        }
        std::sort(b.rows.begin(), b.rows.end());
        b.rows.erase(std::unique(b.rows.begin(), b.rows.end()), b.rows.end());
    }
    return blocks;
}

std::size_t block_rank(const Block& b, const std::vector<SparseVector>& columns, std::uint64_t p) {
    // Transposed: one dense row per column of the block.
    std::vector<std::vector<std::uint64_t>> a(b.cols.size(), std::vector<std::uint64_t>(b.rows.size(), 0));
    for (std::size_t k = 0; k < b.cols.size(); ++k) {
        for (const auto& [row, v] : columns[b.cols[k]]) {
            const std::size_t pos = std::lower_bound(b.rows.begin(), b.rows.end(), row) - b.rows.begin();
            const std::int64_t r = v % static_cast<std::int64_t>(p);
            a[k][pos] = static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p) : r);
        }
    }
    return dense_rank_mod_p(a, p);
}

std::size_t block_exact_rank(const Block& b, const std::vector<SparseVector>& columns) {
    std::vector<std::vector<BigInt>> a(b.cols.size(), std::vector<BigInt>(b.rows.size(), 0));
    for (std::size_t k = 0; k < b.cols.size(); ++k) {
        for (const auto& [row, v] : columns[b.cols[k]]) {
            a[k][std::lower_bound(b.rows.begin(), b.rows.end(), row) - b.rows.begin()] = v;
        }
    }
    return exact_rank(std::move(a));
}

SymmetrizerReport certified_rank(const std::vector<SparseVector>& columns, int d, std::uint64_t ambient,
                                 const OracleOptions& options) {
    if (options.primes.size() < 2) throw Error(ErrorKind::Precondition, "at least two primes are required");
    std::uint64_t factorial = 1;
    for (int k = 2; k <= d; ++k) factorial *= k;
    for (auto p : options.primes) {
        if (p <= factorial) throw Error(ErrorKind::Precondition, "prime " + std::to_string(p) + " does not exceed d!");
    }
    const std::vector<Block> blocks = split_blocks(columns);
    const std::size_t np = options.primes.size();
    std::vector<std::vector<std::size_t>> ranks(np, std::vector<std::size_t>(blocks.size(), 0));
    std::vector<std::size_t> exact(blocks.size(), 0);
    parallel_for(blocks.size(), options.threads, [&](std::size_t i) {
        const std::uint64_t cells = static_cast<std::uint64_t>(blocks[i].rows.size()) * blocks[i].cols.size();
        if (cells > std::uint64_t{1} << 28) throw Error(ErrorKind::Resource, "dense block too large");
        for (std::size_t k = 0; k < np; ++k) ranks[k][i] = block_rank(blocks[i], columns, options.primes[k]);
        if (options.exact_audit && blocks[i].rows.size() < 1024 && blocks[i].cols.size() < 1024) {
            exact[i] = block_exact_rank(blocks[i], columns);
        } else {
            exact[i] = ranks[0][i];
        }
    });
    SymmetrizerReport report;
    report.degree = d;
    report.ambient = ambient;
    report.primes = options.primes;
    std::vector<std::uint64_t> totals(np, 0);
    std::uint64_t exact_total = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t k = 0; k < np; ++k) totals[k] += ranks[k][i];
        exact_total += exact[i];
    }
    report.rank = totals[0];
    report.agreement = std::all_of(totals.begin(), totals.end(), [&](auto t) { return t == totals[0]; }) &&
                       exact_total == totals[0];
    if (!report.agreement) {
        throw Error(ErrorKind::NumericIntegrity, "modular ranks disagree in degree " + std::to_string(d));
    }
    return report;
}

void check_size(const BraidingOperator& c, int d, const OracleOptions& options, std::uint64_t& ambient) {
    if (d < 0) throw Error(ErrorKind::Precondition, "negative degree");
    if (d > 12) throw Error(ErrorKind::Resource, "degree above 12");
    if (c.m <= 0) throw Error(ErrorKind::Precondition, "empty braided space");
    ambient = 1;
    for (int i = 0; i < d; ++i) {
        ambient *= static_cast<std::uint64_t>(c.m);
        if (ambient > options.sparse_bound) {
            throw Error(ErrorKind::Resource, "m^d exceeds the bound " + std::to_string(options.sparse_bound));
        }
    }
}

}  // namespace

SparseVector symmetrizer_column(const BraidingOperator& c, int d, std::uint64_t word) {
    std::vector<int> w = letters_of(word, c.m, d);
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
    symmetrize(c, w, d, 1, d, terms);
    return compress(terms);
}

SymmetrizerReport nichols_dim(const BraidingOperator& c, int d, const OracleOptions& options) {
    std::uint64_t ambient = 0;
    check_size(c, d, options, ambient);
    if (d <= 1) {
        SymmetrizerReport r;
        r.degree = d;
        r.ambient = ambient;
        r.rank = ambient;
        r.primes = options.primes;
        return r;
    }
    std::vector<SparseVector> columns(ambient);
    parallel_for(ambient, options.threads, [&](std::size_t u) { columns[u] = symmetrizer_column(c, d, u); });
    return certified_rank(columns, d, ambient, options);
}

std::vector<std::uint64_t> hilbert_prefix(const BraidingOperator& c, int d_max, const OracleOptions& options) {
    std::vector<std::uint64_t> out;
    for (int d = 0; d <= d_max; ++d) out.push_back(nichols_dim(c, d, options).rank);
    return out;
}

std::vector<std::uint64_t> hilbert_prefix(const DiagonalYD& M, int d_max, const OracleOptions& options) {
    return hilbert_prefix(braiding(M), d_max, options);
}

std::vector<std::uint64_t> hilbert_prefix(const MonomialYD& M, int d_max, const OracleOptions& options) {
    return hilbert_prefix(braiding(M), d_max, options);
}

std::uint64_t skew_derivation_dim(const BraidingOperator& c, int d, const OracleOptions& options) {
    std::uint64_t ambient = 0;
    check_size(c, d, options, ambient);
    if (ambient > options.dense_bound) throw Error(ErrorKind::Resource, "m^d exceeds the dense bound");
    if (d <= 1) return ambient;
    const int m = c.m;
    // g_k acting on letter b, read off c(e_k x e_b) = (g_k.e_b) x e_k.
    std::vector<std::vector<std::pair<int, int>>> act(m, std::vector<std::pair<int, int>>(m));
    for (int k = 0; k < m; ++k) {
        for (int b = 0; b < m; ++b) {
            const int t = c.map.target[k * m + b];
            if (t % m != k) throw Error(ErrorKind::Unsupported, "braiding is not of group type in this basis");
            act[k][b] = {t / m, c.map.sign[k * m + b]};
        }
    }
    std::vector<SparseVector> columns(ambient);
    parallel_for(ambient, options.threads, [&](std::size_t u) {
        std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
        std::function<void(const std::vector<int>&, std::uint64_t, int)> derive =
            [&](const std::vector<int>& w, std::uint64_t seq, int sign) {
                if (w.empty()) {
                    terms.emplace_back(seq, sign);
                    return;
                }
                for (std::size_t j = 0; j < w.size(); ++j) {
                    const int k = w[j];
                    std::vector<int> v(w.begin(), w.begin() + static_cast<long>(j));
                    int s = sign;
                    for (std::size_t r = j + 1; r < w.size(); ++r) {
                        v.push_back(act[k][w[r]].first);
                        s *= act[k][w[r]].second;
                    }
                    derive(v, seq * m + k, s);
                }
            };
        derive(letters_of(u, m, d), 0, 1);
        columns[u] = compress(terms);
    });
    return certified_rank(columns, d, ambient, options).rank;
}

std::pair<std::uint64_t, int> braid_lift(const BraidingOperator& c, int d, const std::vector<int>& simple_word,
                                         std::uint64_t word) {
    std::vector<int> w = letters_of(word, c.m, d);
    int sign = 1;
    for (auto it = simple_word.rbegin(); it != simple_word.rend(); ++it) {
        if (*it < 1 || *it >= d) throw Error(ErrorKind::MalformedInput, "simple transposition out of range");
        apply_c(c, w, *it - 1, sign);
    }
    return {index_of(w, c.m, d), sign};
}

std::vector<int> reduced_word(const std::vector<int>& perm, bool from_left) {
    // Sorting perm by adjacent swaps; the swaps, reversed, spell perm.
    std::vector<int> p = perm;
    const int n = static_cast<int>(p.size());
    std::vector<int> swaps;
    bool changed = true;
    while (changed) {
        changed = false;
        if (from_left) {
            for (int i = 0; i + 1 < n; ++i) {
                if (p[i] > p[i + 1]) {
                    std::swap(p[i], p[i + 1]);
                    swaps.push_back(i + 1);
                    changed = true;
                }
            }
        } else {
            for (int i = n - 2; i >= 0; --i) {
                if (p[i] > p[i + 1]) {
                    std::swap(p[i], p[i + 1]);
                    swaps.push_back(i + 1);
                    changed = true;
                }
            }
        }
    }
    std::reverse(swaps.begin(), swaps.end());
    return swaps;
}

std::uint64_t rank_mod_p(const std::vector<SparseVector>& columns, std::uint32_t p) {
    std::uint64_t total = 0;
    for (const Block& b : split_blocks(columns)) total += block_rank(b, columns, p);
    return total;
}

std::size_t exact_rank(std::vector<std::vector<BigInt>> a) {
    const std::size_t rows = a.size();
    if (rows == 0) return 0;
    const std::size_t cols = a[0].size();
    std::size_t rank = 0;
    BigInt prev = 1;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][col] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[rank], a[pivot]);
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t j = col + 1; j < cols; ++j) {
                a[r][j] = (a[rank][col] * a[r][j] - a[r][col] * a[rank][j]) / prev;
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    return rank;
}

}  // namespace nichols
