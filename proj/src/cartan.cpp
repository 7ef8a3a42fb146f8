#include "nichols/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "nichols/error.hpp"

namespace nichols {

// ------------------------------------------------------------------ DynkinType

DynkinType DynkinType::parse(const std::string& text) {
    if (text.size() < 2) throw Error(ErrorKind::MalformedInput, "bad diagram name '" + text + "'");
    DynkinType t;
    t.series = static_cast<char>(std::toupper(static_cast<unsigned char>(text[0])));
    std::string digits = text.substr(1);
    if (!digits.empty() && digits[0] == '_') digits = digits.substr(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit)) {
        throw Error(ErrorKind::MalformedInput, "bad diagram name '" + text + "'");
    }
    t.rank = std::stoi(digits);
    bool ok = false;
    switch (t.series) {
        case 'A': ok = t.rank >= 1; break;
        case 'B': ok = t.rank >= 2; break;
        case 'C': ok = t.rank >= 2; break;
        case 'D': ok = t.rank >= 4; break;
        case 'E': ok = t.rank >= 6 && t.rank <= 8; break;
        case 'F': ok = t.rank == 4; break;
        case 'G': ok = t.rank == 2; break;
        default: break;
    }
    if (!ok) throw Error(ErrorKind::MalformedInput, "no finite diagram named '" + text + "'");
    return t;
}

// ---------------------------------------------------------------- CartanMatrix

CartanMatrix::CartanMatrix(std::vector<std::vector<int>> entries) : c_(std::move(entries)) {
    const int n = size();
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(c_[i].size()) != n) throw Error(ErrorKind::MalformedInput, "Cartan matrix is not square");
        if (c_[i][i] != 2) throw Error(ErrorKind::MalformedInput, "Cartan matrix diagonal must be 2");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            if (c_[i][j] > 0) throw Error(ErrorKind::MalformedInput, "positive off-diagonal Cartan entry");
            if ((c_[i][j] == 0) != (c_[j][i] == 0)) throw Error(ErrorKind::MalformedInput, "Cartan matrix zero pattern not symmetric");
        }
    }
}

CartanMatrix CartanMatrix::of_type(const DynkinType& t) {
    const int n = t.rank;
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto edge = [&](int a, int b) { c[a][b] = c[b][a] = -1; };
    switch (t.series) {
        case 'A':
        case 'B':
        case 'C':
            for (int i = 0; i + 1 < n; ++i) edge(i, i + 1);
            if (t.series == 'B') c[n - 1][n - 2] = -2;
            if (t.series == 'C') c[n - 2][n - 1] = -2;
            break;
        case 'D':
            for (int i = 0; i + 2 < n; ++i) edge(i, i + 1);
            edge(n - 3, n - 1);
            break;
        case 'E':
            edge(0, 2);
            edge(1, 3);
            for (int i = 2; i + 1 < n; ++i) edge(i, i + 1);
            break;
        case 'F':
            edge(0, 1);
            edge(1, 2);
            edge(2, 3);
            c[2][1] = -2;
            break;
        case 'G':
            edge(0, 1);
            c[0][1] = -3;
            break;
        default:
            throw Error(ErrorKind::MalformedInput, "unknown series");
    }
    return CartanMatrix(std::move(c));
}

CartanMatrix CartanMatrix::block_diagonal(const std::vector<CartanMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.size();
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.size(); ++i) {
            for (int j = 0; j < b.size(); ++j) c[off + i][off + j] = b(i, j);
        }
        off += b.size();
    }
    return CartanMatrix(std::move(c));
}

// ------------------------------------------------------------------- classify

namespace {

std::string component_name(const std::vector<int>& nodes) {
    std::string s = "{";
    for (std::size_t i = 0; i < nodes.size(); ++i) s += (i ? "," : "") + std::to_string(nodes[i] + 1);
    return s + "}";
}

Component classify_component(const CartanMatrix& C, const std::vector<int>& nodes) {
    const int k = static_cast<int>(nodes.size());
    auto fail = [&](const std::string& why) -> Error {
        return Error(ErrorKind::Classification, "component " + component_name(nodes) + " " + why);
    };

    std::map<int, std::vector<int>> adj;
    int edges = 0;
    std::vector<std::pair<int, int>> multi;
    int max_product = 1;
    for (int a : nodes) {
        adj[a];
        for (int b : nodes) {
            if (a == b || C(a, b) == 0) continue;
            adj[a].push_back(b);
            if (a < b) {
                ++edges;
                const int p = C(a, b) * C(b, a);
                if (p >= 4) throw fail("has an edge of product " + std::to_string(p) + ", not of finite type");
                if (p >= 2) multi.emplace_back(a, b);
                max_product = std::max(max_product, p);
            }
        }
    }
    if (edges != k - 1) throw fail("contains a cycle, not of finite type");
    if (multi.size() > 1) throw fail("has more than one multiple edge, not of finite type");

    auto walk_path = [&](int start) {
        std::vector<int> path{start};
        int prev = -1;
        int cur = start;
        while (true) {
            int next = -1;
            for (int b : adj[cur]) {
                if (b != prev) next = b;
            }
            if (next < 0) break;
            path.push_back(next);
            prev = cur;
            cur = next;
        }
        return path;
    };

    Component out;
    int max_degree = 0;
    for (auto& [a, nb] : adj) max_degree = std::max<int>(max_degree, static_cast<int>(nb.size()));
    if (max_degree > 3) throw fail("has a node of degree > 3, not of finite type");

    if (multi.empty()) {
        std::vector<int> branches;
        for (auto& [a, nb] : adj) {
            if (nb.size() == 3) branches.push_back(a);
        }
        if (branches.empty()) {
            int start = nodes.front();
            for (int a : nodes) {
                if (adj[a].size() <= 1) { start = a; break; }
            }
            out.nodes = walk_path(start);
            out.type = {'A', k};
        } else {
            if (branches.size() > 1) throw fail("has two branch points, not of finite type");
            const int b = branches.front();
            std::vector<std::vector<int>> arms;
            for (int start : adj[b]) {
                std::vector<int> arm{start};
                int prev = b;
                int cur = start;
                while (true) {
                    int next = -1;
                    for (int x : adj[cur]) {
                        if (x != prev) next = x;
                    }
                    if (next < 0) break;
                    arm.push_back(next);
                    prev = cur;
                    cur = next;
                }
                arms.push_back(arm);
            }
            std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
                return x.size() != y.size() ? x.size() < y.size() : x.front() < y.front();
            });
            const std::size_t a1 = arms[0].size(), a2 = arms[1].size(), a3 = arms[2].size();
            if (a1 == 1 && a2 == 1) {
                std::vector<int> seq(arms[2].rbegin(), arms[2].rend());
                seq.push_back(b);
                seq.push_back(arms[0][0]);
                seq.push_back(arms[1][0]);
                out.nodes = seq;
                out.type = {'D', k};
            } else if (a1 == 1 && a2 == 2 && a3 >= 2 && a3 <= 4) {
                std::vector<int> seq{arms[1][1], arms[0][0], arms[1][0], b};
                seq.insert(seq.end(), arms[2].begin(), arms[2].end());
                out.nodes = seq;
                out.type = {'E', k};
            } else {
                throw fail("has a branch shape that is not of finite type");
            }
        }
    } else {
        if (max_degree > 2) throw fail("has a branch point and a multiple edge, not of finite type");
        int start = nodes.front();
        for (int a : nodes) {
            if (adj[a].size() <= 1) { start = a; break; }
        }
        std::vector<int> path = walk_path(start);
        const auto [u, v] = multi.front();
        const int pu = static_cast<int>(std::find(path.begin(), path.end(), u) - path.begin());
        const int pv = static_cast<int>(std::find(path.begin(), path.end(), v) - path.begin());
        int pos = std::min(pu, pv);
        if (max_product == 3) {
            if (k != 2) throw fail("has a triple edge in rank > 2, not of finite type");
            const int s = C(u, v) == -3 ? u : v;
            out.nodes = {s, s == u ? v : u};
            out.type = {'G', 2};
        } else if (k == 2) {
            const int s = C(u, v) == -2 ? u : v;
            out.nodes = {s == u ? v : u, s};
            out.type = {'B', 2};
        } else if (pos == 0 || pos == k - 2) {
            if (pos == 0) std::reverse(path.begin(), path.end());
            const int last = path[k - 1], prev = path[k - 2];
            out.nodes = path;
            out.type = {C(last, prev) == -2 ? 'B' : 'C', k};
        } else if (k == 4 && pos == 1) {
            if (C(path[2], path[1]) != -2) std::reverse(path.begin(), path.end());
            out.nodes = path;
            out.type = {'F', 4};
        } else {
            throw fail("has a double edge in an interior position, not of finite type");
        }
    }

    const CartanMatrix standard = CartanMatrix::of_type(out.type);
    for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
            if (C(out.nodes[a], out.nodes[b]) != standard(a, b)) {
                throw fail("matches no finite type (closest shape " + out.type.str() + ")");
            }
        }
    }
    return out;
}

}  // namespace

std::vector<Component> classify(const CartanMatrix& C) {
    const int n = C.size();
    std::vector<int> comp(n, -1);
    std::vector<Component> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> nodes{s};
        comp[s] = s;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            for (int b = 0; b < n; ++b) {
                if (comp[b] < 0 && C(nodes[i], b) != 0) {
                    comp[b] = s;
                    nodes.push_back(b);
                }
            }
        }
        std::sort(nodes.begin(), nodes.end());
        out.push_back(classify_component(C, nodes));
    }
    return out;
}

std::string type_label(const std::vector<Component>& components) {
    std::string s;
    for (std::size_t i = 0; i < components.size(); ++i) s += (i ? "x" : "") + components[i].type.str();
    return s;
}

// --------------------------------------------------------------------- roots

int RootSet::height(std::size_t k) const { return std::accumulate(roots[k].begin(), roots[k].end(), 0); }

std::map<int, int> RootSet::height_histogram() const {
    std::map<int, int> h;
    for (std::size_t k = 0; k < roots.size(); ++k) ++h[height(k)];
    return h;
}

RootSet positive_roots(const CartanMatrix& C) {
    classify(C);
    const int n = C.size();
    std::set<std::vector<int>> seen;
    std::deque<std::vector<int>> queue;
    for (int i = 0; i < n; ++i) {
        std::vector<int> a(n, 0);
        a[i] = 1;
        seen.insert(a);
        queue.push_back(a);
    }
    while (!queue.empty()) {
        const std::vector<int> beta = queue.front();
        queue.pop_front();
        for (int i = 0; i < n; ++i) {
            int pairing = 0;
            for (int j = 0; j < n; ++j) pairing += C(i, j) * beta[j];
            if (pairing == 0) continue;
            std::vector<int> r = beta;
            r[i] -= pairing;
            if (std::any_of(r.begin(), r.end(), [](int x) { return x < 0; })) continue;
            if (std::all_of(r.begin(), r.end(), [](int x) { return x == 0; })) continue;
            if (seen.insert(r).second) {
                if (seen.size() > 100000) throw Error(ErrorKind::NotFiniteCartan, "root closure does not terminate");
                queue.push_back(r);
            }
        }
    }
    RootSet rs{{seen.begin(), seen.end()}};
    std::stable_sort(rs.roots.begin(), rs.roots.end(), [](const auto& a, const auto& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    return rs;
}

// -------------------------------------------------------------- HilbertSeries

void HilbertSeries::multiply_factor(int N, int h, int multiplicity) {
    if (N < 2 || h < 1 || multiplicity < 0) throw Error(ErrorKind::MalformedInput, "bad Hilbert factor");
    if (multiplicity) factors_[{h, N}] += multiplicity;
}

HilbertSeries HilbertSeries::operator*(const HilbertSeries& other) const {
    HilbertSeries r = *this;
    for (const auto& [key, mult] : other.factors_) r.factors_[key] += mult;
    return r;
}

int HilbertSeries::degree() const {
    int d = 0;
    for (const auto& [key, mult] : factors_) d += mult * (key.second - 1) * key.first;
    return d;
}

std::vector<BigInt> HilbertSeries::coefficients() const { return expand(*this); }

std::vector<BigInt> expand(const HilbertSeries& series) {
    std::vector<BigInt> poly{1};
    for (const auto& [key, mult] : series.factors()) {
        const auto [h, N] = key;
        for (int m = 0; m < mult; ++m) {
            std::vector<BigInt> next(poly.size() + static_cast<std::size_t>((N - 1) * h), 0);
            for (std::size_t d = 0; d < poly.size(); ++d) {
                if (poly[d] == 0) continue;
                for (int k = 0; k < N; ++k) next[d + static_cast<std::size_t>(k * h)] += poly[d];
            }
            poly = std::move(next);
        }
    }
    return poly;
}

BigInt HilbertSeries::at_one() const {
    BigInt r = 1;
    for (const auto& [key, mult] : factors_) {
        for (int m = 0; m < mult; ++m) r *= key.second;
    }
    return r;
}

int HilbertSeries::two_exponent() const {
    int e = 0;
    for (const auto& [key, mult] : factors_) {
        if (key.second != 2) return -1;
        e += mult;
    }
    return e;
}

std::string HilbertSeries::factored() const {
    std::string s;
    for (const auto& [key, mult] : factors_) {
        const auto [h, N] = key;
        if (!s.empty()) s += " ";
        s += "[" + std::to_string(N) + "]_";
        s += h == 1 ? std::string("t") : "{t^" + std::to_string(h) + "}";
        if (mult > 1) s += "^" + std::to_string(mult);
    }
    return s.empty() ? "1" : s;
}

HilbertSeries hilbert_from_roots(const RootSet& roots) {
    HilbertSeries h;
    for (const auto& [height, count] : roots.height_histogram()) h.multiply_factor(2, height, count);
    return h;
}

// ------------------------------------------------------------- cartan_from_q

CartanMatrix cartan_from_q(const QMatrix& q, int bound) {
    const int n = static_cast<int>(q.size());
    std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(q[i].size()) != n) throw Error(ErrorKind::MalformedInput, "q-matrix is not square");
        if (q[i][i].is_one()) throw Error(ErrorKind::NotFiniteCartan, "q_ii = 1 at node " + std::to_string(i + 1));
    }
    for (int i = 0; i < n; ++i) {
        c[i][i] = 2;
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const RootOfUnity mono = q[i][j] * q[j][i];
            int found = -1;
            for (int m = 0; m <= bound && found < 0; ++m) {
                if (q[i][i].pow(-m) == mono || q[i][i].pow(m + 1).is_one()) found = m;
            }
            if (found < 0) {
                throw Error(ErrorKind::NotFiniteCartan, "no exponent <= " + std::to_string(bound) + " for entry (" +
                                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
            }
            c[i][j] = -found;
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && (c[i][j] == 0) != (c[j][i] == 0)) {
                throw Error(ErrorKind::NotFiniteCartan, "q-matrix yields an asymmetric zero pattern");
            }
        }
    }
    return CartanMatrix(std::move(c));
}

// ---------------------------------------------------------------------- fold

CartanMatrix fold(const CartanMatrix& C, const std::vector<std::vector<int>>& orbits) {
    const int n = C.size();
    std::vector<int> seen(n, 0);
    for (const auto& o : orbits) {
        if (o.empty() || o.size() > 2) throw Error(ErrorKind::MalformedInput, "orbits must be singletons or pairs");
        for (int v : o) {
            if (v < 0 || v >= n) throw Error(ErrorKind::MalformedInput, "orbit node out of range");
            if (seen[v]++) throw Error(ErrorKind::MalformedInput, "node listed in two orbits");
        }
        if (o.size() == 2 && C(o[0], o[1]) != 0) {
            throw Error(ErrorKind::UnsupportedFolding, "split orbit with connected nodes");
        }
    }
    if (std::count(seen.begin(), seen.end(), 1) != n) throw Error(ErrorKind::MalformedInput, "orbits do not cover all nodes");

    const int m = static_cast<int>(orbits.size());
    std::vector<std::vector<int>> f(m, std::vector<int>(m, 0));
    for (int k = 0; k < m; ++k) {
        f[k][k] = 2;
        for (int l = 0; l < m; ++l) {
            if (k == l) continue;
            const auto& ok = orbits[k];
            const auto& ol = orbits[l];
            bool connected = false;
            for (int a : ok) {
                for (int b : ol) connected = connected || C(a, b) != 0;
            }
            if (!connected) continue;
            auto unsupported = [&] {
                return Error(ErrorKind::UnsupportedFolding,
                             "orbits " + component_name(ok) + " and " + component_name(ol) + " form an unsupported local pattern");
            };
            if (ok.size() == 1 && ol.size() == 1) {
                f[k][l] = C(ok[0], ol[0]);
            } else if (ok.size() == 2 && ol.size() == 2) {
                // Each node of one pair joined by a simple edge to exactly one node of the other.
                for (int a : ok) {
                    int links = 0;
                    for (int b : ol) {
                        if (C(a, b) == 0) continue;
                        if (C(a, b) != -1 || C(b, a) != -1) throw unsupported();
                        ++links;
                    }
                    if (links != 1) throw unsupported();
                }
                for (int b : ol) {
                    int links = 0;
                    for (int a : ok) links += C(a, b) != 0;
                    if (links != 1) throw unsupported();
                }
                f[k][l] = -1;
            } else {
                const auto& pair = ok.size() == 2 ? ok : ol;
                const int single = ok.size() == 1 ? ok[0] : ol[0];
                for (int a : pair) {
                    if (C(a, single) != -1 || C(single, a) != -1) throw unsupported();
                }
                f[k][l] = ok.size() == 2 ? -2 : -1;
            }
        }
    }
    return CartanMatrix(std::move(f));
}

}  // namespace nichols
