#pragma once

#include <vector>

#include "hermlat/lattice.hpp"

namespace hermlat {

// Solutions of h(x, x) = t in a positive-definite lattice, canonically
// ordered (lexicographic on the (u, v) coordinate pairs).
struct RepSolutionSet {
    Int t;
    std::vector<std::vector<KElem>> vectors;  // O_k coordinates in the lattice basis
    Int count = 0;
};

// Exact branch-and-bound (Fincke-Pohst) on the 2n-dimensional trace form;
// enumerate_vectors parallelizes over the top-level search coordinate,
// enumerate_vectors_serial is the reference implementation.
RepSolutionSet enumerate_vectors(const HermLattice& l, const Int& t);
RepSolutionSet enumerate_vectors_serial(const HermLattice& l, const Int& t);

Int rep_count(const HermLattice& l, const Int& t);

// L intersected with the orthogonal complement of x (lattice coordinates),
// as a rank n-1 lattice with the restricted form.
HermLattice perp_lattice(const HermLattice& l, const std::vector<KRat>& x);

// For signature (n-1, 1): does the negative-line locus perpendicular to x
// remain nonempty?  True iff h(x, x) > 0.
bool dx_nonempty(const HermLattice& l, const std::vector<KRat>& x);

// h(x, x) for a vector in lattice coordinates (always rational).
Rat herm_norm(const HermLattice& l, const std::vector<KRat>& x);

}  // namespace hermlat
