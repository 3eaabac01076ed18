#pragma once

#include <string>
#include <vector>

#include "hermlat/lattice.hpp"

namespace hermlat {

// Dossier of one of the four occult cases, with every value the source
// material states for it.
struct CaseProfile {
    std::string name;
    int delta = 0;
    int d = 0;  // 0 marks the principally polarized case
    int n = 0;
    std::pair<int, int> sig;
    int dim_a = 0;
    Int pol_degree = 1;
    std::vector<Int> quotient_1;  // dual / lattice
    std::vector<Int> quotient_2;  // pi^{-1} lattice / dual
    int zrank = 0;
    int excluded_cycle_t = 0;
    int radical_dim = 0;
    bool check_self_dual = false;
    // L-level facts for L = pi * dual(lattice)
    bool has_l_dual_shape = false;
    std::vector<Int> l_dual_shape;  // L^dual / L
    bool has_l_pi_shape = false;
    std::vector<Int> l_pi_shape;  // L^dual / pi^{-1} L
    bool has_sym_disc = false;
    Int sym_disc = 0;  // |det| of the scaled symmetric Z-form on L
};

struct CaseCheck {
    std::string id;
    std::string expected;
    std::string actual;
    bool pass = false;
};

struct CaseReport {
    std::string name;
    std::vector<CaseCheck> checks;
    bool pass = false;
};

const std::vector<std::string>& case_names();
CaseProfile case_profile(const std::string& name);  // throws UnknownCase

// Polarization degree d^{n-1} (n odd) or d^{n-2} (n even); d square-free > 1.
Int star_degree(long d, int n);
// t(p) = 2 floor((n-1)/2) if p | d, else 0.
Int star_t_function(long d, int n, long p);

HermLattice build_case_lattice(const std::string& name);
CaseReport verify_case(const std::string& name, const HermLattice& lambda);

}  // namespace hermlat
