#pragma once

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "nichols/cartan.hpp"
#include "nichols/groups.hpp"
#include "nichols/symplectic.hpp"
#include "nichols/yd.hpp"

namespace nichols {

enum class NodeTag { Inert, Split };

const char* to_string(NodeTag tag);

struct CoveringResult {
    DiagonalYD base;
    std::vector<int> symmetry;
    CentralExtension extension;
    MonomialYD covering;
    // Column k holds x_k in y-coordinates.
    std::vector<std::vector<int>> basis_change;
    std::vector<std::vector<int>> orbits;
    std::vector<NodeTag> tags;
    std::vector<bool> central_degree;  // per orbit: s(g_i) is central in G
    CartanMatrix unfolded_cartan;
    CartanMatrix folded_cartan;
    std::string unfolded_type;
    std::string folded_type;
    HilbertSeries hilbert;

    int dimension_exponent() const { return hilbert.two_exponent(); }
};

CoveringResult covering_module(const DiagonalYD& M, const std::vector<int>& perm, const CentralExtension& E);

// (P x P) C_covering = C_base (P x P) as integer matrices.
bool braiding_matches_base(const CoveringResult& r);
bool supports_generate(const CoveringResult& r);
// Every pair from different halves has trivial monodromy.
bool mixed_monodromy_trivial(const DiagonalYD& M, const std::vector<int>& first, const std::vector<int>& second);

// Hilbert series of a diagonal module from its Cartan components.
HilbertSeries diagonal_hilbert(const DiagonalYD& M);

CoveringResult construct_unramified(const CentralExtension& E, const DynkinType& diagram);
CoveringResult construct_ramified_cn(const CentralExtension& E, int n);
CoveringResult construct_ramified_f4(const CentralExtension& E);

struct DisconnectedPlan {
    std::vector<std::string> blocks;  // "A2", "D4", "C3", "F4", ...
    int inert_nodes = 0;              // k0 extra A1 nodes on null vectors

    static DisconnectedPlan parse(const std::string& text);
    std::string str() const;
};

CoveringResult construct_disconnected(const CentralExtension& E, const DisconnectedPlan& plan);

// Extension of Z2^(2p+k) with p D4 blocks: 2-rank 2p+k, 2-center k.
CentralExtension symplectic_extension(int pairs, int nulls);

/** A G-module whose kernel contains theta, rewritten as a diagonal module over Gamma. */
struct Descent {
    DiagonalYD module;
    std::vector<int> symmetry;
    std::vector<std::vector<int>> eigenvectors;  // y_i in the original basis
};

Descent descend(const CentralExtension& E, const MonomialYD& M);

// Cartan matrix between the simple blocks of a braided space, from ad-nilpotency.
CartanMatrix cartan_by_adjoint(const BraidingOperator& c, const std::vector<std::vector<int>>& blocks, int bound = 4);

long long matsumoto_count(long long h2_G, long long h2_Gamma, long long p);
// Orders of second cohomology for the named presets.
long long schur_multiplier_order(const std::string& group);

struct TableRow {
    std::string diagram;
    std::string two_rank;
    std::string two_center;
    std::string dimension;
    // Checked instances: (label, exponent by formula, exponent by construction).
    std::vector<std::tuple<std::string, int, int>> checks;
};

std::vector<TableRow> intro_table(bool verify);

/** One of the rank 2, 3 and 4 examples over groups of order 8 to 32. */
struct WorkedExample {
    std::string id;
    CentralExtension extension;
    MonomialYD module;
    std::vector<std::string> summands;        // e.g. "[h]^chi"
    std::vector<std::string> character_values;  // free values chosen for each summand
    bool twisted = false;
    std::string partner;  // the diagonal example with the same data, for twisted ones

    CartanMatrix cartan;  // from ad-nilpotency on the simple summands
    std::string type;
    std::string finer_type;
    HilbertSeries hilbert;
    std::optional<CoveringResult> covering;  // diagonal examples, rebuilt by descent
    bool faithful = false;
    bool diagonal = false;  // theta acts trivially

    std::string expected_type;
    std::string expected_finer_type;
    HilbertSeries expected_series;
    int expected_exponent = 0;
};

std::vector<std::string> worked_example_ids();
WorkedExample worked_example(const std::string& id);

// Factored series product over [2]_{t^h}^{multiplicity[h-1]}, optionally squared.
HilbertSeries two_power_series(const std::vector<int>& multiplicities, bool squared);

}  // namespace nichols
