#include "nichols/covering.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "nichols/error.hpp"

namespace nichols {

const char* to_string(NodeTag tag) { return tag == NodeTag::Inert ? "inert" : "split"; }

namespace {

int real_sign(const RootOfUnity& z, const char* what) {
    const auto s = z.sign();
    if (!s) throw Error(ErrorKind::Unsupported, std::string(what) + " is not +1 or -1");
    return *s;
}

CartanMatrix submatrix(const CartanMatrix& C, const std::vector<int>& nodes) {
    std::vector<std::vector<int>> e(nodes.size(), std::vector<int>(nodes.size()));
    for (std::size_t a = 0; a < nodes.size(); ++a) {
        for (std::size_t b = 0; b < nodes.size(); ++b) e[a][b] = C(nodes[a], nodes[b]);
    }
    return CartanMatrix(std::move(e));
}

std::vector<std::string> sorted_components(const CartanMatrix& C) {
    std::vector<std::string> out;
    for (const auto& c : classify(C)) out.push_back(c.type.str());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

// ----------------------------------------------------------------- Hilbert

HilbertSeries diagonal_hilbert(const DiagonalYD& M) {
    const QMatrix q = q_matrix(M);
    const CartanMatrix C = cartan_from_q(q);
    HilbertSeries H;
    for (const auto& comp : classify(C)) {
        const auto& nodes = comp.nodes;
        if (nodes.size() == 1) {
            H.multiply_factor(static_cast<int>(q[nodes[0]][nodes[0]].order()), 1);
            continue;
        }
        for (int i : nodes) {
            if (!(q[i][i] == RootOfUnity::minus_one())) {
                throw Error(ErrorKind::Unsupported, "Hilbert series only for components with all q_ii = -1");
            }
            for (int j : nodes) {
                if (i != j && !(q[i][j] * q[j][i] == q[i][i].pow(C(i, j)))) {
                    throw Error(ErrorKind::Unsupported, "component is not of Cartan type");
                }
            }
        }
        H = H * hilbert_from_roots(positive_roots(submatrix(C, nodes)));
    }
    return H;
}

HilbertSeries two_power_series(const std::vector<int>& multiplicities, bool squared) {
    HilbertSeries H;
    for (std::size_t h = 0; h < multiplicities.size(); ++h) {
        if (multiplicities[h] > 0) H.multiply_factor(2, static_cast<int>(h) + 1, multiplicities[h]);
    }
    return squared ? H.squared() : H;
}

// ---------------------------------------------------------------- covering

CoveringResult covering_module(const DiagonalYD& M, const std::vector<int>& perm, const CentralExtension& E) {
    const int m = M.dimension();
    if (!verify_twisted_symmetry(M, perm, E)) {
        throw Error(ErrorKind::Precondition, "permutation is not a twisted symmetry for the extension");
    }
    for (int i = 0; i < m; ++i) {
        if (perm[perm[i]] != i) throw Error(ErrorKind::Precondition, "twisted symmetry is not an involution");
    }
    const auto& S = M.summands();
    for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
            if (S[i].degree == S[j].degree && S[i].character == S[j].character) {
                throw Error(ErrorKind::Unsupported, "summands " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                                        " are isomorphic");
            }
        }
    }
    const AbelianGroup& A = E.base();
    // On generators: chi_{p(j)} = <., g_j> chi_j.
    for (int j = 0; j < m; ++j) {
        for (int k = 0; k < A.rank(); ++k) {
            const Exponents e = A.generator(k);
            const RootOfUnity lhs = S[perm[j]].character(e);
            const RootOfUnity rhs = RootOfUnity::from_sign(E.form(e, S[j].degree)) * S[j].character(e);
            if (!(lhs == rhs)) throw Error(ErrorKind::Precondition, "symmetry does not twist characters by the commutator form");
        }
    }

    CoveringResult r;
    r.base = M;
    r.symmetry = perm;
    r.extension = E;
    for (int i = 0; i < m; ++i) {
        if (perm[i] == i) {
            r.orbits.push_back({i});
        } else if (i < perm[i]) {
            r.orbits.push_back({i, perm[i]});
        }
    }

    // x-basis: x+ (or the inert y) for every orbit, then x- for split orbits.
    struct XVec {
        int orbit;
        bool minus;
    };
    std::vector<XVec> xs;
    for (std::size_t o = 0; o < r.orbits.size(); ++o) xs.push_back({static_cast<int>(o), false});
    for (std::size_t o = 0; o < r.orbits.size(); ++o) {
        if (r.orbits[o].size() == 2) xs.push_back({static_cast<int>(o), true});
    }
    std::vector<int> slot_plus(r.orbits.size(), -1), slot_minus(r.orbits.size(), -1);
    r.basis_change.assign(m, std::vector<int>(m, 0));
    std::vector<int> degrees(m);
    for (int k = 0; k < m; ++k) {
        const auto& orb = r.orbits[xs[k].orbit];
        const std::size_t gbar = A.index_of(S[orb[0]].degree);
        r.basis_change[orb[0]][k] = 1;
        if (orb.size() == 2) r.basis_change[orb[1]][k] = xs[k].minus ? -1 : 1;
        degrees[k] = xs[k].minus ? E.element(-1, gbar) : E.section(gbar);
        (xs[k].minus ? slot_minus : slot_plus)[xs[k].orbit] = k;
    }

    std::vector<int> generators;
    std::vector<MonomialMatrix> actions;
    for (int g = 0; g < A.rank(); ++g) {
        const Exponents e = A.generator(g);
        MonomialMatrix act = MonomialMatrix::identity(m);
        for (std::size_t o = 0; o < r.orbits.size(); ++o) {
            const auto& orb = r.orbits[o];
            const int c = real_sign(S[orb[0]].character(e), "character value on a generator");
            const int kp = slot_plus[o];
            if (orb.size() == 1) {
                act.sign[kp] = c;
                continue;
            }
            const int km = slot_minus[o];
            const int ratio = c * real_sign(S[orb[1]].character(e), "character value on a generator");
            act.sign[kp] = c;
            act.sign[km] = c;
            if (ratio < 0) {
                act.target[kp] = km;
                act.target[km] = kp;
            }
        }
        generators.push_back(E.section(A.index_of(e)));
        actions.push_back(act);
    }
    generators.push_back(E.element(-1, 0));
    actions.push_back(MonomialMatrix::identity(m));
    r.covering = MonomialYD(E.group(), degrees, generators, actions);

    std::vector<std::string> violations;
    if (!verify_yd(r.covering, &violations)) {
        throw Error(ErrorKind::InvariantViolation, "covering fails the Yetter-Drinfeld condition: " + violations.front());
    }

    const std::vector<int> center = E.group().center();
    for (const auto& orb : r.orbits) {
        r.tags.push_back(orb.size() == 1 ? NodeTag::Inert : NodeTag::Split);
        const bool central = std::binary_search(center.begin(), center.end(), E.section(S[orb[0]].degree));
        r.central_degree.push_back(central);
        if (central != (orb.size() == 1)) {
            throw Error(ErrorKind::Internal, "node classification disagrees with centrality of the degree");
        }
    }

    r.unfolded_cartan = cartan_from_q(q_matrix(M));
    r.unfolded_type = type_label(classify(r.unfolded_cartan));
    r.folded_cartan = fold(r.unfolded_cartan, r.orbits);
    r.folded_type = type_label(classify(r.folded_cartan));
    r.hilbert = diagonal_hilbert(M);
    return r;
}

bool braiding_matches_base(const CoveringResult& r) {
    const BraidingOperator C = braiding(r.base);
    const BraidingOperator Ct = braiding(r.covering);
    const int m = C.m;
    const auto& P = r.basis_change;
    auto column = [&](int a) {
        std::vector<std::pair<int, int>> v;
        for (int i = 0; i < m; ++i) {
            if (P[i][a] != 0) v.emplace_back(i, P[i][a]);
        }
        return v;
    };
    for (int a = 0; a < m; ++a) {
        for (int b = 0; b < m; ++b) {
            std::map<int, long> lhs, rhs;
            const int t = Ct.map.target[a * m + b];
            const int s = Ct.map.sign[a * m + b];
            for (auto [i, pi] : column(t / m)) {
                for (auto [j, pj] : column(t % m)) lhs[i * m + j] += s * pi * pj;
            }
            for (auto [i, pi] : column(a)) {
                for (auto [j, pj] : column(b)) rhs[C.map.target[i * m + j]] += C.map.sign[i * m + j] * pi * pj;
            }
            std::erase_if(lhs, [](const auto& kv) { return kv.second == 0; });
            std::erase_if(rhs, [](const auto& kv) { return kv.second == 0; });
            if (lhs != rhs) return false;
        }
    }
    return true;
}

bool supports_generate(const CoveringResult& r) {
    const FiniteGroup& G = r.covering.group();
    return static_cast<int>(G.generated_subgroup(r.covering.degrees()).size()) == G.size();
}

bool mixed_monodromy_trivial(const DiagonalYD& M, const std::vector<int>& first, const std::vector<int>& second) {
    const QMatrix q = q_matrix(M);
    for (int i : first) {
        for (int j : second) {
            if (!(q[i][j] * q[j][i]).is_one()) return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ constructions

namespace {

struct Node {
    F2Vec degree;
    F2Vec functional;  // values on V, as a mask in V-coordinates
};

struct BlockNodes {
    std::vector<Node> inert;
    std::vector<Node> split;
    std::vector<Node> twisted;
};

struct Frame {
    std::vector<std::pair<F2Vec, F2Vec>> pairs;
    std::vector<F2Vec> nulls;

    std::vector<F2Vec> vectors() const {
        std::vector<F2Vec> v;
        for (const auto& [x, y] : pairs) {
            v.push_back(x);
            v.push_back(y);
        }
        v.insert(v.end(), nulls.begin(), nulls.end());
        return v;
    }
};

class Context {
public:
    explicit Context(const CentralExtension& E) : E_(E), space_(E) {
        const SymplecticBasis sb = symplectic_basis(SympSpace(space_.gram()));
        whole_.pairs = sb.pairs;
        whole_.nulls = sb.nulls;
    }

    const CentralExtension& extension() const { return E_; }
    const ExtensionSpace& space() const { return space_; }
    const Frame& whole() const { return whole_; }

    // Functional with the prescribed values, vanishing on basis vectors outside the frame.
    F2Vec functional(const Frame& frame, const std::vector<std::pair<F2Vec, int>>& values) const {
        std::vector<F2Vec> rows;
        F2Vec rhs = 0;
        auto add = [&](F2Vec v, int value) {
            if (value & 1) rhs |= F2Vec{1} << rows.size();
            rows.push_back(v);
        };
        for (const auto& [v, value] : values) add(v, value);
        const std::vector<F2Vec> inside = frame.vectors();
        for (F2Vec v : whole_.vectors()) {
            if (std::find(inside.begin(), inside.end(), v) == inside.end()) add(v, 0);
        }
        if (rows.size() > 32) throw Error(ErrorKind::Resource, "too many functional constraints");
        const auto f = f2_solve(rows, rhs, space_.dimension());
        if (!f) throw Error(ErrorKind::Internal, "inconsistent functional constraints");
        return *f;
    }

    // The functional v -> <v, g> of the commutator form.
    F2Vec twist(F2Vec g) const {
        F2Vec t = 0;
        for (int b = 0; b < space_.dimension(); ++b) {
            if (space_.pair(F2Vec{1} << b, g)) t |= F2Vec{1} << b;
        }
        return t;
    }

    Character character(F2Vec f) const {
        const AbelianGroup& A = E_.base();
        std::vector<int> signs(A.rank(), 1);
        const auto& even = space_.even_generators();
        for (std::size_t p = 0; p < even.size(); ++p) {
            if (bit(f, static_cast<int>(p))) signs[even[p]] = -1;
        }
        return Character::from_signs(A, signs);
    }

    std::map<F2Vec, Exponents> lift_degrees(const std::vector<F2Vec>& vs) const {
        std::map<F2Vec, Exponents> out;
        const auto& factors = E_.base().factors();
        const bool odd = std::any_of(factors.begin(), factors.end(), [](int f) { return f % 2 != 0; });
        if (!odd) {
            for (F2Vec v : vs) out[v] = space_.lift(v);
            return out;
        }
        if (static_cast<int>(vs.size()) != space_.dimension() || !f2_independent(vs)) {
            throw Error(ErrorKind::Precondition, "degrees must form a basis of G/G^2 to lift over odd factors");
        }
        const FiniteGroup& G = E_.group();
        const CommutatorData cd = commutator_data(G);
        std::vector<F2Vec> coords;
        for (F2Vec v : vs) coords.push_back(cd.coordinates[E_.section(space_.lift(v))]);
        const std::vector<int> lifts = lift_basis_to_generators(G, cd, coords);
        for (std::size_t i = 0; i < vs.size(); ++i) out[vs[i]] = E_.base().element(E_.project(lifts[i]));
        return out;
    }

private:
    CentralExtension E_;
    ExtensionSpace space_;
    Frame whole_;
};

// Image of a standard-space vector (x1, y1, ..., z1, ...) in the frame.
F2Vec map_standard(const Frame& frame, F2Vec v, int pairs) {
    F2Vec out = 0;
    for (int k = 0; k < pairs; ++k) {
        if (bit(v, 2 * k)) out ^= frame.pairs[k].first;
        if (bit(v, 2 * k + 1)) out ^= frame.pairs[k].second;
    }
    for (std::size_t j = 0; j < frame.nulls.size(); ++j) {
        if (bit(v, 2 * pairs + static_cast<int>(j))) out ^= frame.nulls[j];
    }
    return out;
}

// phi of the minimal root system of a simply-laced diagram, placed in the frame.
std::vector<F2Vec> place_root_system(const Frame& frame, const DynkinType& type) {
    const int n = type.rank;
    const int dim = 2 * static_cast<int>(frame.pairs.size()) + static_cast<int>(frame.nulls.size());
    if (dim != n || static_cast<int>(frame.nulls.size()) != required_nullity(type)) {
        throw Error(ErrorKind::NoSymplecticRootSystem,
                    type.str() + " needs 2-rank " + std::to_string(n) + " and 2-center " + std::to_string(required_nullity(type)) +
                        ", got " + std::to_string(dim) + " and " + std::to_string(frame.nulls.size()));
    }
    const Decoration d = minimal_root_system(type);
    std::vector<F2Vec> phi;
    for (F2Vec v : d.phi) phi.push_back(map_standard(frame, v, static_cast<int>(frame.pairs.size())));
    return phi;
}

// chi_i(g_j) = -1 iff i = j or (i < j and adjacent).
int step_one_value(const SimpleGraph& g, int i, int j) { return (i == j || (i < j && g.adjacent(i, j))) ? 1 : 0; }

BlockNodes unramified_block(const Context& ctx, const Frame& frame, const DynkinType& type) {
    const std::vector<F2Vec> phi = place_root_system(frame, type);
    const SimpleGraph graph = SimpleGraph::of_type(type);
    BlockNodes out;
    for (int i = 0; i < type.rank; ++i) {
        std::vector<std::pair<F2Vec, int>> values;
        for (int j = 0; j < type.rank; ++j) values.emplace_back(phi[j], step_one_value(graph, i, j));
        const F2Vec f = ctx.functional(frame, values);
        out.split.push_back({phi[i], f});
        out.twisted.push_back({phi[i], f ^ ctx.twist(phi[i])});
    }
    return out;
}

BlockNodes ramified_cn_block(const Context& ctx, const Frame& frame, int n) {
    if (n < 3) throw Error(ErrorKind::Precondition, "C_n construction needs n >= 3");
    const int nullity = 1 + ((n - 1) % 2);
    const int dim = 2 * static_cast<int>(frame.pairs.size()) + static_cast<int>(frame.nulls.size());
    if (dim != n || static_cast<int>(frame.nulls.size()) != nullity) {
        throw Error(ErrorKind::NoSymplecticRootSystem, "C" + std::to_string(n) + " needs 2-rank " + std::to_string(n) +
                                                           " and 2-center " + std::to_string(nullity));
    }
    const F2Vec z = frame.nulls[0];
    Frame w{frame.pairs, std::vector<F2Vec>(frame.nulls.begin() + 1, frame.nulls.end())};
    const DynkinType a{'A', n - 1};
    const std::vector<F2Vec> phi = place_root_system(w, a);
    const SimpleGraph graph = SimpleGraph::of_type(a);

    BlockNodes out;
    std::vector<std::pair<F2Vec, int>> inert{{z, 1}};
    for (int k = 0; k < n - 1; ++k) inert.emplace_back(phi[k], k == 0 ? 1 : 0);
    out.inert.push_back({z, ctx.functional(frame, inert)});
    for (int i = 0; i < n - 1; ++i) {
        std::vector<std::pair<F2Vec, int>> values{{z, 0}};
        for (int j = 0; j < n - 1; ++j) values.emplace_back(phi[j], step_one_value(graph, i, j));
        const F2Vec f = ctx.functional(frame, values);
        out.split.push_back({phi[i], f});
        out.twisted.push_back({phi[i], f ^ ctx.twist(phi[i])});
    }
    return out;
}

BlockNodes ramified_f4_block(const Context& ctx, const Frame& frame) {
    if (frame.pairs.size() != 1 || frame.nulls.size() != 2) {
        throw Error(ErrorKind::NoSymplecticRootSystem, "F4 needs 2-rank 4 and 2-center 2");
    }
    // Frame vectors b = 0..3: z, z', x, y. Unknown bit 4i+b is the value of f_{i+1} on vector b.
    const std::vector<F2Vec> vec{frame.nulls[0], frame.nulls[1], frame.pairs[0].first, frame.pairs[0].second};
    const std::vector<int> deg{0, 1, 2, 3, 2, 3};
    const std::vector<std::pair<int, int>> edges{{0, 1}, {1, 2}, {1, 4}, {2, 3}, {4, 5}};
    auto twist_value = [&](int node, int b) {
        if (node == 4) return ctx.space().pair(vec[b], vec[2]);
        if (node == 5) return ctx.space().pair(vec[b], vec[3]);
        return 0;
    };
    auto unknown = [](int node, int b) {
        const int base = node < 4 ? node : node - 2;
        return F2Vec{1} << (4 * base + b);
    };

    std::vector<F2Vec> rows;
    F2Vec rhs = 0;
    auto equation = [&](F2Vec row, int value) {
        if (value & 1) rhs |= F2Vec{1} << rows.size();
        rows.push_back(row);
    };
    for (int i = 0; i < 6; ++i) equation(unknown(i, deg[i]), 1 ^ twist_value(i, deg[i]));
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            const bool edge = std::find(edges.begin(), edges.end(), std::make_pair(i, j)) != edges.end();
            const int constant = twist_value(i, deg[j]) ^ twist_value(j, deg[i]);
            equation(unknown(i, deg[j]) ^ unknown(j, deg[i]), (edge ? 1 : 0) ^ constant);
        }
    }
    const std::vector<int> third{0, 1, 1, 1};
    for (int b = 0; b < 4; ++b) equation(unknown(2, b), third[b]);

    const auto particular = f2_solve(rows, rhs, 16);
    if (!particular) throw Error(ErrorKind::Precondition, "F4 character constraints have no solution");
    const std::vector<F2Vec> kernel = f2_kernel(rows, 16);
    std::optional<F2Vec> best;
    for (std::uint32_t mask = 0; mask < (1u << kernel.size()); ++mask) {
        F2Vec u = *particular;
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            if ((mask >> k) & 1u) u ^= kernel[k];
        }
        std::vector<F2Vec> fs;
        for (int i = 0; i < 4; ++i) fs.push_back((u >> (4 * i)) & 15u);
        if (f2_rank(fs) == 4 && (!best || u < *best)) best = u;
    }
    if (!best) throw Error(ErrorKind::Precondition, "F4 character constraints have no solution of full rank");

    auto node = [&](int i) {
        std::vector<std::pair<F2Vec, int>> values;
        for (int b = 0; b < 4; ++b) {
            const int base = i < 4 ? i : i - 2;
            values.emplace_back(vec[b], bit(*best, 4 * base + b) ^ twist_value(i, b));
        }
        return Node{vec[deg[i]], ctx.functional(frame, values)};
    };
    BlockNodes out;
    out.inert = {node(0), node(1)};
    out.split = {node(2), node(3)};
    out.twisted = {node(4), node(5)};
    if (out.twisted[0].functional != (out.split[0].functional ^ ctx.twist(vec[2])) ||
        out.twisted[1].functional != (out.split[1].functional ^ ctx.twist(vec[3]))) {
        throw Error(ErrorKind::Internal, "F4 partner characters are not the twisted ones");
    }
    return out;
}

CoveringResult assemble(const Context& ctx, const std::vector<BlockNodes>& blocks, std::vector<std::string> expected) {
    std::vector<Node> nodes;
    std::vector<int> perm;
    std::vector<int> first, second;
    for (const auto& b : blocks) {
        for (const auto& v : b.inert) {
            perm.push_back(static_cast<int>(nodes.size()));
            nodes.push_back(v);
        }
        const int s0 = static_cast<int>(nodes.size());
        const int k = static_cast<int>(b.split.size());
        for (int i = 0; i < k; ++i) {
            first.push_back(s0 + i);
            perm.push_back(s0 + k + i);
            nodes.push_back(b.split[i]);
        }
        for (int i = 0; i < k; ++i) {
            second.push_back(s0 + k + i);
            perm.push_back(s0 + i);
            nodes.push_back(b.twisted[i]);
        }
    }
    std::vector<F2Vec> distinct;
    for (const auto& v : nodes) {
        if (std::find(distinct.begin(), distinct.end(), v.degree) == distinct.end()) distinct.push_back(v.degree);
    }
    const auto lifted = ctx.lift_degrees(distinct);
    std::vector<DiagonalSummand> summands;
    for (const auto& v : nodes) summands.push_back({lifted.at(v.degree), ctx.character(v.functional)});
    const DiagonalYD M(ctx.extension().base(), std::move(summands));

    if (!mixed_monodromy_trivial(M, first, second)) {
        throw Error(ErrorKind::InvariantViolation, "mixed monodromy between the two halves is not trivial");
    }
    CoveringResult r = covering_module(M, perm, ctx.extension());
    std::sort(expected.begin(), expected.end());
    if (sorted_components(r.folded_cartan) != expected) {
        throw Error(ErrorKind::Internal, "folded diagram " + r.folded_type + " differs from the prescribed one");
    }
    return r;
}

void require_stem(const CentralExtension& E) {
    if (!E.is_stem()) throw Error(ErrorKind::Precondition, "extension is not a stem extension");
}

}  // namespace

CoveringResult construct_unramified(const CentralExtension& E, const DynkinType& diagram) {
    require_stem(E);
    if (!diagram.simply_laced()) throw Error(ErrorKind::Unsupported, "unramified construction needs a simply-laced diagram");
    const Context ctx(E);
    return assemble(ctx, {unramified_block(ctx, ctx.whole(), diagram)}, {diagram.str()});
}

CoveringResult construct_ramified_cn(const CentralExtension& E, int n) {
    require_stem(E);
    const Context ctx(E);
    return assemble(ctx, {ramified_cn_block(ctx, ctx.whole(), n)}, {"C" + std::to_string(n)});
}

CoveringResult construct_ramified_f4(const CentralExtension& E) {
    require_stem(E);
    const Context ctx(E);
    return assemble(ctx, {ramified_f4_block(ctx, ctx.whole())}, {"F4"});
}

// ------------------------------------------------------------- disconnected

DisconnectedPlan DisconnectedPlan::parse(const std::string& text) {
    std::string body = text;
    const std::string prefix = "disconnected:";
    if (body.rfind(prefix, 0) == 0) body = body.substr(prefix.size());
    DisconnectedPlan plan;
    std::stringstream ss(body);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        if (tok.rfind("k0=", 0) == 0) {
            try {
                plan.inert_nodes = std::stoi(tok.substr(3));
            } catch (const std::exception&) {
                throw Error(ErrorKind::MalformedInput, "bad inert count in " + tok);
            }
            if (plan.inert_nodes < 0) throw Error(ErrorKind::MalformedInput, "negative inert count");
            continue;
        }
        const DynkinType t = DynkinType::parse(tok);
        if (t.series == 'B' || t.series == 'G' || (t.series == 'F' && t.rank != 4)) {
            throw Error(ErrorKind::Unsupported, "no covering construction for block " + t.str());
        }
        plan.blocks.push_back(t.str());
    }
    if (plan.blocks.empty() && plan.inert_nodes == 0) throw Error(ErrorKind::MalformedInput, "empty disconnected plan");
    return plan;
}

std::string DisconnectedPlan::str() const {
    std::string s = "disconnected:";
    for (std::size_t i = 0; i < blocks.size(); ++i) s += (i ? "," : "") + blocks[i];
    if (inert_nodes > 0) s += (blocks.empty() ? "" : ",") + std::string("k0=") + std::to_string(inert_nodes);
    return s;
}

CoveringResult construct_disconnected(const CentralExtension& E, const DisconnectedPlan& plan) {
    require_stem(E);
    const Context ctx(E);
    const Frame& whole = ctx.whole();
    std::size_t next_pair = 0, next_null = 0;
    std::vector<BlockNodes> blocks;
    std::vector<std::string> expected;
    auto take = [&](int pairs, int nulls, const std::string& what) {
        if (next_pair + pairs > whole.pairs.size() || next_null + nulls > whole.nulls.size()) {
            throw Error(ErrorKind::Precondition, "plan exceeds the 2-rank or 2-center of the group at block " + what);
        }
        Frame f;
        f.pairs.assign(whole.pairs.begin() + next_pair, whole.pairs.begin() + next_pair + pairs);
        f.nulls.assign(whole.nulls.begin() + next_null, whole.nulls.begin() + next_null + nulls);
        next_pair += pairs;
        next_null += nulls;
        return f;
    };
    for (const auto& name : plan.blocks) {
        const DynkinType t = DynkinType::parse(name);
        expected.push_back(t.str());
        if (t.simply_laced()) {
            const int k = required_nullity(t);
            blocks.push_back(unramified_block(ctx, take((t.rank - k) / 2, k, name), t));
        } else if (t.series == 'C') {
            const int k = 1 + ((t.rank - 1) % 2);
            blocks.push_back(ramified_cn_block(ctx, take((t.rank - k) / 2, k, name), t.rank));
        } else if (t.series == 'F' && t.rank == 4) {
            blocks.push_back(ramified_f4_block(ctx, take(1, 2, name)));
        } else {
            throw Error(ErrorKind::Unsupported, "no covering construction for block " + name);
        }
    }
    BlockNodes extra;
    for (int j = 0; j < plan.inert_nodes; ++j) {
        const Frame f = take(0, 1, "k0");
        extra.inert.push_back({f.nulls[0], ctx.functional(f, {{f.nulls[0], 1}})});
        expected.push_back("A1");
    }
    if (next_pair != whole.pairs.size() || next_null != whole.nulls.size()) {
        throw Error(ErrorKind::Precondition, "plan " + plan.str() + " does not exhaust 2-rank " +
                                                 std::to_string(ctx.space().dimension()) + " and 2-center " +
                                                 std::to_string(ctx.space().nullity()));
    }
    if (!extra.inert.empty()) blocks.push_back(extra);
    return assemble(ctx, blocks, expected);
}

CentralExtension symplectic_extension(int pairs, int nulls) {
    if (pairs < 0 || nulls < 0 || 2 * pairs + nulls > 10) throw Error(ErrorKind::Unsupported, "extension too large");
    const int r = 2 * pairs + nulls;
    std::vector<std::vector<int>> B(r, std::vector<int>(r, 0));
    for (int k = 0; k < pairs; ++k) B[2 * k + 1][2 * k] = 1;
    const AbelianGroup A = AbelianGroup::elementary(r);
    return CentralExtension(A, Cocycle2::bilinear(A, B),
                            "symplectic(" + std::to_string(pairs) + "," + std::to_string(nulls) + ")");
}

// ----------------------------------------------------------------- descent

Descent descend(const CentralExtension& E, const MonomialYD& M) {
    const FiniteGroup& G = M.group();
    if (G.table() != E.group().table()) throw Error(ErrorKind::Precondition, "module over a different group");
    if (!M.action(E.theta()).is_identity()) throw Error(ErrorKind::Precondition, "theta does not act trivially");
    const AbelianGroup& A = E.base();
    const int m = M.dimension();
    std::vector<int> even;
    for (int k = 0; k < A.rank(); ++k) {
        if (A.factors()[k] % 2 == 0) even.push_back(k);
    }
    // sum over gamma of lambda(gamma) s(gamma).e_b
    auto project = [&](const Character& lambda, int b) {
        std::vector<long> v(m, 0);
        for (std::size_t g = 0; g < A.order(); ++g) {
            const int s = real_sign(lambda(A.element(g)), "character value");
            const MonomialMatrix& act = M.action(E.section(g));
            v[act.target[b]] += s * act.sign[b];
        }
        long d = 0;
        for (long x : v) d = std::gcd(d, std::abs(x));
        if (d > 1) {
            for (long& x : v) x /= d;
        }
        return v;
    };
    Descent out;
    std::vector<DiagonalSummand> summands;
    for (const auto& block : decompose_simples(M)) {
        std::vector<Character> found;
        for (int b : block) {
            for (std::uint32_t mask = 0; mask < (1u << even.size()) && found.size() < block.size(); ++mask) {
                std::vector<int> signs(A.rank(), 1);
                for (std::size_t p = 0; p < even.size(); ++p) {
                    if ((mask >> p) & 1u) signs[even[p]] = -1;
                }
                const Character lambda = Character::from_signs(A, signs);
                const std::vector<long> v = project(lambda, b);
                if (std::all_of(v.begin(), v.end(), [](long x) { return x == 0; })) continue;
                // Eigenvectors for distinct characters are independent.
                if (std::find(found.begin(), found.end(), lambda) != found.end()) continue;
                found.push_back(lambda);
                summands.push_back({A.element(E.project(M.degree(b))), lambda});
                out.eigenvectors.push_back(std::vector<int>(v.begin(), v.end()));
            }
        }
        if (found.size() != block.size()) {
            throw Error(ErrorKind::Unsupported, "simple summand has repeated characters and no diagonal basis by projection");
        }
    }

    // f_theta: +1 on section degrees, -1 on theta-shifted ones.
    const int n = static_cast<int>(out.eigenvectors.size());
    auto apply_f = [&](const std::vector<int>& v) {
        std::vector<int> w(v);
        for (int b = 0; b < m; ++b) {
            if (E.sign_of(M.degree(b)) < 0) w[b] = -w[b];
        }
        return w;
    };
    auto negate = [](std::vector<int> v) {
        for (int& x : v) x = -x;
        return v;
    };
    out.symmetry.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (out.symmetry[i] >= 0) continue;
        const std::vector<int> fi = apply_f(out.eigenvectors[i]);
        for (int j = i; j < n; ++j) {
            if (out.symmetry[j] >= 0 && j != i) continue;
            if (fi == out.eigenvectors[j] || fi == negate(out.eigenvectors[j])) {
                if (j == i && fi != out.eigenvectors[i]) {
                    throw Error(ErrorKind::Unsupported, "theta acts by -1 on a fixed eigenvector");
                }
                out.eigenvectors[j] = fi;
                out.symmetry[i] = j;
                out.symmetry[j] = i;
                break;
            }
        }
        if (out.symmetry[i] < 0) throw Error(ErrorKind::Unsupported, "theta does not permute the eigenvectors");
    }
    out.module = DiagonalYD(A, std::move(summands));
    return out;
}

}  // namespace nichols
