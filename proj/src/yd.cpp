#include "nichols/yd.hpp"

#include <algorithm>
#include <numeric>

#include "nichols/error.hpp"

namespace nichols {

namespace {

int sign_of(const RootOfUnity& z, const char* what) {
    const auto s = z.sign();
    if (!s) throw Error(ErrorKind::Unsupported, std::string(what) + " has a scalar that is not +1 or -1");
    return *s;
}

}  // namespace

// ------------------------------------------------------------------ DiagonalYD

DiagonalYD::DiagonalYD(AbelianGroup group, std::vector<DiagonalSummand> summands)
    : group_(std::move(group)), summands_(std::move(summands)) {
    for (const auto& s : summands_) {
        if (!group_.contains(s.degree)) throw Error(ErrorKind::MalformedInput, "summand degree outside the group");
        if (s.character.factors() != group_.factors()) throw Error(ErrorKind::MalformedInput, "summand character of another group");
    }
}

DiagonalYD DiagonalYD::direct_sum(const DiagonalYD& other) const {
    if (!(group_ == other.group_)) throw Error(ErrorKind::MalformedInput, "direct sum over different groups");
    auto s = summands_;
    s.insert(s.end(), other.summands_.begin(), other.summands_.end());
    return DiagonalYD(group_, std::move(s));
}

QMatrix q_matrix(const DiagonalYD& M) {
    const int m = M.dimension();
    QMatrix q(m, std::vector<RootOfUnity>(m));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) q[i][j] = M.summands()[j].character(M.summands()[i].degree);
    }
    return q;
}

// --------------------------------------------------------------- MonomialMatrix

MonomialMatrix MonomialMatrix::identity(int m) {
    MonomialMatrix A;
    A.target.resize(m);
    std::iota(A.target.begin(), A.target.end(), 0);
    A.sign.assign(m, 1);
    return A;
}

bool MonomialMatrix::is_identity() const {
    for (int b = 0; b < size(); ++b) {
        if (target[b] != b || sign[b] != 1) return false;
    }
    return true;
}

MonomialMatrix operator*(const MonomialMatrix& A, const MonomialMatrix& B) {
    MonomialMatrix C;
    C.target.resize(B.size());
    C.sign.resize(B.size());
    for (int b = 0; b < B.size(); ++b) {
        C.target[b] = A.target[B.target[b]];
        C.sign[b] = A.sign[B.target[b]] * B.sign[b];
    }
    return C;
}

// ------------------------------------------------------------------ MonomialYD

MonomialYD::MonomialYD(FiniteGroup group, std::vector<int> degrees, std::vector<int> generators,
                       std::vector<MonomialMatrix> generator_action)
    : group_(std::move(group)),
      degrees_(std::move(degrees)),
      generators_(std::move(generators)),
      generator_action_(std::move(generator_action)) {
    const int m = dimension();
    const int n = group_.size();
    if (generators_.size() != generator_action_.size()) {
        throw Error(ErrorKind::MalformedInput, "one action matrix per generator expected");
    }
    for (int d : degrees_) {
        if (d < 0 || d >= n) throw Error(ErrorKind::MalformedInput, "degree outside the group");
    }
    for (const auto& A : generator_action_) {
        if (A.size() != m || static_cast<int>(A.sign.size()) != m) throw Error(ErrorKind::MalformedInput, "action matrix of wrong size");
        std::vector<int> hit(m, 0);
        for (int b = 0; b < m; ++b) {
            if (A.target[b] < 0 || A.target[b] >= m || (A.sign[b] != 1 && A.sign[b] != -1)) {
                throw Error(ErrorKind::MalformedInput, "action matrix is not a signed permutation");
            }
            if (hit[A.target[b]]++) throw Error(ErrorKind::MalformedInput, "action matrix is not a signed permutation");
        }
    }
    // Word evaluation along a breadth-first spanning tree, checking every relation x*s.
    action_.assign(n, MonomialMatrix{});
    std::vector<char> known(n, 0);
    std::vector<int> queue{group_.identity()};
    action_[group_.identity()] = MonomialMatrix::identity(m);
    known[group_.identity()] = 1;
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        for (std::size_t k = 0; k < generators_.size(); ++k) {
            const int y = group_.mul(x, generators_[k]);
            const MonomialMatrix A = action_[x] * generator_action_[k];
            if (!known[y]) {
                known[y] = 1;
                action_[y] = A;
                queue.push_back(y);
            } else if (!(action_[y] == A)) {
                throw Error(ErrorKind::MalformedInput, "generator matrices do not define a group action");
            }
        }
    }
    if (static_cast<int>(queue.size()) != n) throw Error(ErrorKind::MalformedInput, "listed generators do not generate the group");
}

// -------------------------------------------------------------------- braiding

bool BraidingOperator::satisfies_yang_baxter() const {
    const int mm = m * m;
    auto apply12 = [&](int idx, int& sgn) {
        const int ab = idx / m, c = idx % m;
        sgn *= map.sign[ab];
        return map.target[ab] * m + c;
    };
    auto apply23 = [&](int idx, int& sgn) {
        const int a = idx / mm, bc = idx % mm;
        sgn *= map.sign[bc];
        return a * mm + map.target[bc];
    };
    for (int idx = 0; idx < mm * m; ++idx) {
        int s1 = 1, s2 = 1;
        const int l = apply12(apply23(apply12(idx, s1), s1), s1);
        const int r = apply23(apply12(apply23(idx, s2), s2), s2);
        if (l != r || s1 != s2) return false;
    }
    return true;
}

BraidingOperator braiding(const DiagonalYD& M) {
    const int m = M.dimension();
    const QMatrix q = q_matrix(M);
    BraidingOperator c{m, MonomialMatrix::identity(m * m)};
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            c.map.target[i * m + j] = j * m + i;
            c.map.sign[i * m + j] = sign_of(q[i][j], "braiding");
        }
    }
    if (!c.satisfies_yang_baxter()) throw Error(ErrorKind::InvariantViolation, "braiding fails the Yang-Baxter equation");
    return c;
}

BraidingOperator braiding(const MonomialYD& M) {
    const int m = M.dimension();
    BraidingOperator c{m, MonomialMatrix::identity(m * m)};
    for (int a = 0; a < m; ++a) {
        const MonomialMatrix& g = M.action(M.degree(a));
        for (int b = 0; b < m; ++b) {
            c.map.target[a * m + b] = g.target[b] * m + a;
            c.map.sign[a * m + b] = g.sign[b];
        }
    }
    if (!c.satisfies_yang_baxter()) throw Error(ErrorKind::InvariantViolation, "braiding fails the Yang-Baxter equation");
    return c;
}

bool verify_yd(const MonomialYD& M, std::vector<std::string>* violations) {
    const FiniteGroup& G = M.group();
    bool ok = true;
    for (std::size_t k = 0; k < M.generators().size(); ++k) {
        const int s = M.generators()[k];
        const MonomialMatrix& A = M.generator_action()[k];
        for (int b = 0; b < M.dimension(); ++b) {
            const int expected = G.conj(s, M.degree(b));
            if (M.degree(A.target[b]) != expected) {
                ok = false;
                if (violations) {
                    violations->push_back("generator " + G.label(s) + " maps basis " + std::to_string(b) +
                                          " of degree " + G.label(M.degree(b)) + " to degree " +
                                          G.label(M.degree(A.target[b])) + ", expected " + G.label(expected));
                }
            }
        }
    }
    return ok;
}

// -------------------------------------------------------------------- twisting

int TwistForm::operator()(const Exponents& g, const Exponents& h) const {
    int e = 0;
    for (int i = 0; i < group.rank(); ++i) {
        for (int j = 0; j < group.rank(); ++j) e += bit(gram[i], j) * g[i] * h[j];
    }
    return (e & 1) ? -1 : 1;
}

TwistForm TwistForm::trivial(const AbelianGroup& group) {
    return TwistForm{group, std::vector<F2Vec>(group.rank(), 0)};
}

TwistForm form_from_extension(const CentralExtension& E) {
    const AbelianGroup& A = E.base();
    TwistForm f{A, std::vector<F2Vec>(A.rank(), 0)};
    for (int i = 0; i < A.rank(); ++i) {
        for (int j = 0; j < A.rank(); ++j) {
            if (E.form(A.generator(i), A.generator(j)) < 0) f.gram[i] |= F2Vec{1} << j;
        }
    }
    return f;
}

DiagonalYD twist_by_form(const DiagonalYD& M, const TwistForm& f) {
    const AbelianGroup& A = M.group();
    std::vector<DiagonalSummand> out;
    for (const auto& s : M.summands()) {
        std::vector<int> signs(A.rank());
        for (int k = 0; k < A.rank(); ++k) signs[k] = f(A.generator(k), s.degree);
        out.push_back({s.degree, s.character * Character::from_signs(A, signs)});
    }
    return DiagonalYD(A, std::move(out));
}

bool verify_twisted_symmetry(const DiagonalYD& M, const std::vector<int>& perm, const CentralExtension& E) {
    const int m = M.dimension();
    if (static_cast<int>(perm.size()) != m) throw Error(ErrorKind::Precondition, "permutation length differs from module rank");
    std::vector<int> hit(m, 0);
    for (int i = 0; i < m; ++i) {
        if (perm[i] < 0 || perm[i] >= m || hit[perm[i]]++) throw Error(ErrorKind::Precondition, "not a permutation of summands");
        if (M.summands()[perm[i]].degree != M.summands()[i].degree) {
            throw Error(ErrorKind::Precondition, "permutation moves summand " + std::to_string(i + 1) + " to a different degree");
        }
    }
    if (!(M.group() == E.base())) throw Error(ErrorKind::Precondition, "extension over a different group");
    const QMatrix q = q_matrix(M);
    for (int i = 0; i < m; ++i) {
        const int pi = perm[i];
        if (!(q[pi][pi] == q[i][i])) return false;
        for (int j = 0; j < m; ++j) {
            const int pj = perm[j];
            if (!(q[pi][pj] * q[pj][pi] == q[i][j] * q[j][i])) return false;
            const int form = E.form(M.summands()[i].degree, M.summands()[j].degree);
            if (!(q[pi][pj] == RootOfUnity::from_sign(form) * q[i][j])) return false;
        }
    }
    return true;
}

// ------------------------------------------------------- nonabelian modules

std::vector<int> character_on_subgroup(const FiniteGroup& G, const std::vector<int>& gens, const std::vector<int>& values) {
    if (gens.size() != values.size()) throw Error(ErrorKind::MalformedInput, "one value per generator expected");
    std::vector<int> chi(G.size(), 0);
    chi[G.identity()] = 1;
    std::vector<int> queue{G.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i) {
        const int x = queue[i];
        for (std::size_t k = 0; k < gens.size(); ++k) {
            if (values[k] != 1 && values[k] != -1) throw Error(ErrorKind::MalformedInput, "character values must be +1 or -1");
            const int y = G.mul(x, gens[k]);
            const int v = chi[x] * values[k];
            if (chi[y] == 0) {
                chi[y] = v;
                queue.push_back(y);
            } else if (chi[y] != v) {
                throw Error(ErrorKind::MalformedInput, "prescribed values are not multiplicative");
            }
        }
    }
    return chi;
}

std::vector<int> greedy_generators(const FiniteGroup& G) {
    std::vector<int> gens;
    std::vector<int> span{G.identity()};
    for (int g = 0; g < G.size() && static_cast<int>(span.size()) < G.size(); ++g) {
        if (std::binary_search(span.begin(), span.end(), g)) continue;
        gens.push_back(g);
        span = G.generated_subgroup(gens);
    }
    return gens;
}

MonomialYD simple_conjugacy_module(const FiniteGroup& G, int representative, const std::vector<int>& chi) {
    const int n = G.size();
    if (static_cast<int>(chi.size()) != n) throw Error(ErrorKind::MalformedInput, "character table has wrong length");
    const std::vector<int> C = G.centralizer(representative);
    for (int a : C) {
        if (chi[a] != 1 && chi[a] != -1) throw Error(ErrorKind::MalformedInput, "character undefined on the centralizer");
        for (int b : C) {
            if (chi[G.mul(a, b)] != chi[a] * chi[b]) throw Error(ErrorKind::MalformedInput, "character is not multiplicative on the centralizer");
        }
    }
    // Transversal: lowest element of each left coset tC, ordered by that element.
    std::vector<int> coset_of(n, -1);
    std::vector<int> transversal;
    for (int t = 0; t < n; ++t) {
        if (coset_of[t] >= 0) continue;
        const int k = static_cast<int>(transversal.size());
        transversal.push_back(t);
        for (int c : C) coset_of[G.mul(t, c)] = k;
    }
    const int m = static_cast<int>(transversal.size());
    if (m * static_cast<int>(C.size()) != n) throw Error(ErrorKind::Internal, "orbit-stabilizer count mismatch");
    std::vector<int> degrees;
    for (int t : transversal) degrees.push_back(G.conj(t, representative));

    auto action_of = [&](int g) {
        MonomialMatrix A = MonomialMatrix::identity(m);
        for (int k = 0; k < m; ++k) {
            const int gt = G.mul(g, transversal[k]);
            const int l = coset_of[gt];
            const int h = G.mul(G.inv(transversal[l]), gt);
            A.target[k] = l;
            A.sign[k] = chi[h];
        }
        return A;
    };
    const std::vector<int> gens = greedy_generators(G);
    std::vector<MonomialMatrix> mats;
    for (int g : gens) mats.push_back(action_of(g));
    return MonomialYD(G, degrees, gens, mats);
}

MonomialYD direct_sum(const MonomialYD& a, const MonomialYD& b) {
    if (a.group().table() != b.group().table()) throw Error(ErrorKind::MalformedInput, "direct sum over different groups");
    const int ma = a.dimension();
    std::vector<int> degrees = a.degrees();
    degrees.insert(degrees.end(), b.degrees().begin(), b.degrees().end());
    std::vector<MonomialMatrix> mats;
    for (int g : a.generators()) {
        MonomialMatrix A = a.action(g);
        const MonomialMatrix& B = b.action(g);
        for (int k = 0; k < B.size(); ++k) {
            A.target.push_back(B.target[k] + ma);
            A.sign.push_back(B.sign[k]);
        }
        mats.push_back(A);
    }
    return MonomialYD(a.group(), degrees, a.generators(), mats);
}

MonomialYD restrict_module(const MonomialYD& M, const std::vector<int>& block) {
    std::vector<int> pos(M.dimension(), -1);
    for (std::size_t k = 0; k < block.size(); ++k) pos[block[k]] = static_cast<int>(k);
    std::vector<int> degrees;
    for (int b : block) degrees.push_back(M.degree(b));
    std::vector<MonomialMatrix> mats;
    for (std::size_t g = 0; g < M.generators().size(); ++g) {
        const MonomialMatrix& A = M.generator_action()[g];
        MonomialMatrix R = MonomialMatrix::identity(static_cast<int>(block.size()));
        for (std::size_t k = 0; k < block.size(); ++k) {
            const int t = pos[A.target[block[k]]];
            if (t < 0) throw Error(ErrorKind::Precondition, "block is not stable under the group");
            R.target[k] = t;
            R.sign[k] = A.sign[block[k]];
        }
        mats.push_back(R);
    }
    return MonomialYD(M.group(), degrees, M.generators(), mats);
}

std::vector<std::vector<int>> decompose_simples(const MonomialYD& M) {
    const int m = M.dimension();
    std::vector<int> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& A : M.generator_action()) {
        for (int b = 0; b < m; ++b) {
            const int r1 = find(b), r2 = find(A.target[b]);
            if (r1 != r2) parent[std::max(r1, r2)] = std::min(r1, r2);
        }
    }
    std::vector<std::vector<int>> blocks;
    std::vector<int> slot(m, -1);
    for (int b = 0; b < m; ++b) {
        const int r = find(b);
        if (slot[r] < 0) {
            slot[r] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[slot[r]].push_back(b);
    }
    return blocks;
}

bool is_faithful(const MonomialYD& M) {
    if (M.dimension() == 0) return false;
    for (int g = 0; g < M.group().size(); ++g) {
        if (g != M.group().identity() && M.action(g).is_identity()) return false;
    }
    return true;
}

}  // namespace nichols
