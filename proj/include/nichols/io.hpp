#pragma once

#include <string>

#include <json.hpp>

#include "nichols/covering.hpp"
#include "nichols/oracle.hpp"

namespace nichols {

using json = nlohmann::json;

// Group file: first line the invariant factors, then |Gamma| rows of +1/-1 cocycle values.
CentralExtension parse_group_file(const std::string& text, const std::string& name = {});
// A preset name or a path to a group file.
CentralExtension resolve_group(const std::string& spec);

json to_json(const AbelianGroup& A);
json to_json(const CentralExtension& E);
json to_json(const DiagonalYD& M);
json to_json(const MonomialYD& M);
json to_json(const CartanMatrix& C);
json to_json(const HilbertSeries& H);
json to_json(const CoveringResult& r);
json to_json(const Decoration& d);
json to_json(const WorkedExample& ex);
json to_json(const SymmetrizerReport& r);

AbelianGroup abelian_from_json(const json& j);
CentralExtension extension_from_json(const json& j);
DiagonalYD diagonal_from_json(const json& j);
MonomialYD monomial_from_json(const json& j, const FiniteGroup& G);
CartanMatrix cartan_from_json(const json& j);
HilbertSeries hilbert_from_json(const json& j);

// Orbit list like "{1,5}{2,4}{3}", 1-based, to 0-based orbits.
std::vector<std::vector<int>> parse_orbits(const std::string& text);
// Cartan matrix from a type name ("A5", "A3xA2") or from JSON / whitespace separated text.
CartanMatrix parse_cartan(const std::string& text);

std::string read_file(const std::string& path);

}  // namespace nichols
