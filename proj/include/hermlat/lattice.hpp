#pragma once

#include <utility>
#include <vector>

#include "hermlat/linalg.hpp"

namespace hermlat {

// Hermitian space over k: form h(x, y) = x^T G conj(y), linear in the first
// slot, conjugate-linear in the second.
struct HermSpace {
    RingDesc ring;
    int n = 0;
    ExactMatrix gram;  // hermitian, nonsingular, over k

    bool operator==(const HermSpace& o) const { return ring.delta == o.ring.delta && gram == o.gram; }
};

// O_k-lattice spanned by the columns of `basis` (coordinates in the ambient
// space, entries in k, nonsingular).
struct HermLattice {
    HermSpace space;
    ExactMatrix basis;

    int rank() const { return space.n; }
};

struct DiscGroup {
    std::vector<KElem> divisors;  // nontrivial SNF divisors (units dropped)
    Int order = 1;
    std::vector<Int> shape;  // cyclic prime-power orders, ascending

    bool trivial() const { return shape.empty(); }
};

// A Z-bilinear form of rank 2n together with the matrix J of the canonical
// O_k-generator (omega, i, or delta) acting on the underlying Z-module.
struct ZFormWithAction {
    RingDesc ring;
    bool alternating = false;
    ExactMatrix S;  // over Z
    ExactMatrix J;  // over Z
};

struct ChainReport {
    bool holds = false;
    DiscGroup quotient_1;  // dual / lattice
    DiscGroup quotient_2;  // pi^{-1} lattice / dual
    Int total_index = 1;   // |pi^{-1} L / L|
    bool multiplicative = false;
};

struct ModPiReduction {
    int p = 0;
    ExactMatrix residue;        // n x n over Z, entries in [0, p)
    int radical_dim = 0;
    ExactMatrix radical_basis;  // n x radical_dim over Z, kernel of the residue form
};

// --- construction ----------------------------------------------------------

HermSpace make_space(const RingDesc& ring, const ExactMatrix& gram);
HermLattice standard_lattice(const RingDesc& ring, const ExactMatrix& gram);
HermLattice lattice_in_space(const HermSpace& space, const ExactMatrix& basis);

// --- basic invariants ------------------------------------------------------

ExactMatrix lattice_gram(const HermLattice& l);  // B^T G conj(B)
bool is_integral_lattice(const HermLattice& l);
// Canonical form: minimal positive integer scale making the basis integral,
// plus the column HNF of the scaled basis.
std::pair<Int, ExactMatrix> canonical_basis(const HermLattice& l);
bool lattice_equal(const HermLattice& a, const HermLattice& b);

// --- duality ---------------------------------------------------------------

HermLattice dual(const HermLattice& l);
bool is_sublattice(const HermLattice& m, const HermLattice& n);
// Quotient N / M for M a sublattice of N of full rank.
DiscGroup disc_group(const HermLattice& m, const HermLattice& n);
DiscGroup disc_group_dual(const HermLattice& l);  // dual(l) / l
bool is_self_dual(const HermLattice& l);

std::pair<int, int> signature(const HermLattice& l);
bool is_positive_definite(const HermLattice& l);

HermLattice scale(const HermLattice& l, const KRat& alpha);

// Abelian group O_k / (d) as a list of cyclic orders.
std::vector<Int> quotient_shape(const KElem& d);

// --- Z-form correspondences ------------------------------------------------

// Z-basis {b_1..b_n, g b_1..g b_n}; S_ij = tr(h(x_i, x_j)/sqrt(D)).
ZFormWithAction trace_alt_form(const HermLattice& l);
// S_ij = tr(h(x_i, x_j)).
ZFormWithAction trace_sym_form(const HermLattice& l);
// Eisenstein only: S_ij = tr(h(x_i, x_j))/3.
ZFormWithAction sym_from_herm_scaled(const HermLattice& l);

// Inverses: recover the hermitian lattice from a Z-form with O_k-action.
HermLattice herm_from_alt(const ZFormWithAction& z);
HermLattice herm_from_sym_scaled(const ZFormWithAction& z);   // D = -3, factor 3/2
HermLattice herm_from_sym_gaussian(const ZFormWithAction& z); // D = -4, h = s + s(x, tau y) i

// --- chains and reduction --------------------------------------------------

ChainReport verify_chain(const HermLattice& lambda, const KElem& pi);
ModPiReduction reduce_mod_pi(const HermLattice& lambda, const KElem& pi);

}  // namespace hermlat
