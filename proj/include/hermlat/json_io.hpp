#pragma once

#include <json.hpp>

#include "hermlat/catalog.hpp"
#include "hermlat/cycles.hpp"
#include "hermlat/lattice.hpp"

namespace hermlat {

using Json = nlohmann::ordered_json;

// Element encoding: integral elements as [u, v], other quadratic values as
// [u, v, den] meaning (u + v sqrt(D)) / (2 den), plain rationals as numbers
// or "p/q" strings.  Parsing additionally accepts the textual element
// grammar, including "pi".
Json elem_to_json(const KRat& x);
KRat json_to_elem(int delta, const Json& j);

Json matrix_to_json(const ExactMatrix& m);
ExactMatrix json_to_matrix(const Json& j);

Json lattice_to_json(const HermLattice& l);
HermLattice json_to_lattice(const Json& j);

Json disc_group_to_json(const DiscGroup& g);
Json chain_report_to_json(const ChainReport& r);
Json reduction_to_json(const ModPiReduction& r);
Json solution_set_to_json(const RepSolutionSet& s);
Json case_profile_to_json(const CaseProfile& p);
Json case_report_to_json(const CaseReport& r);

Json int_to_json(const Int& n);  // number when it fits, decimal string otherwise

}  // namespace hermlat
