#include "hermlat/catalog.hpp"

#include <sstream>

namespace hermlat {

namespace {

std::vector<Int> rep(long q, int count) { return std::vector<Int>((size_t)count, Int(q)); }

Int power(long base, int exp) {
    Int r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::string shape_str(const std::vector<Int>& s) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << "]";
    return os.str();
}

std::string sig_str(std::pair<int, int> s) {
    return "(" + std::to_string(s.first) + "," + std::to_string(s.second) + ")";
}

bool squarefree(long d) {
    for (long p = 2; p * p <= d; ++p)
        if (d % (p * p) == 0) return false;
    return true;
}

}  // namespace

const std::vector<std::string>& case_names() {
    static const std::vector<std::string> names = {"cubic-surfaces", "cubic-threefolds", "genus3",
                                                   "genus4"};
    return names;
}

CaseProfile case_profile(const std::string& name) {
    CaseProfile p;
    p.name = name;
    if (name == "cubic-surfaces") {
        p.delta = -3;
        p.d = 0;
        p.n = 5;
        p.sig = {4, 1};
        p.pol_degree = 1;
        p.quotient_2 = rep(3, 5);
        p.excluded_cycle_t = 1;
        p.radical_dim = 0;
        p.check_self_dual = true;
    } else if (name == "cubic-threefolds") {
        p.delta = -3;
        p.d = 3;
        p.n = 11;
        p.sig = {10, 1};
        p.pol_degree = power(3, 10);
        p.quotient_1 = rep(3, 10);
        p.quotient_2 = rep(3, 1);
        p.excluded_cycle_t = 3;
        p.radical_dim = 10;
        p.has_l_pi_shape = true;
        p.l_pi_shape = rep(3, 1);
        p.has_sym_disc = true;
        p.sym_disc = 3;
    } else if (name == "genus3") {
        p.delta = -4;
        p.d = 2;
        p.n = 7;
        p.sig = {6, 1};
        p.pol_degree = power(2, 6);
        p.quotient_1 = rep(2, 6);
        p.quotient_2 = rep(2, 1);
        p.excluded_cycle_t = 2;
        p.radical_dim = 6;
        p.has_l_dual_shape = true;
        p.l_dual_shape = rep(2, 8);
    } else if (name == "genus4") {
        p.delta = -3;
        p.d = 3;
        p.n = 10;
        p.sig = {9, 1};
        p.pol_degree = power(3, 8);
        p.quotient_1 = rep(3, 8);
        p.quotient_2 = rep(3, 2);
        p.excluded_cycle_t = 2;
        p.radical_dim = 8;
        p.has_l_pi_shape = true;
        p.l_pi_shape = rep(3, 2);
    } else {
        throw UnknownCase();
    }
    p.dim_a = p.n;
    p.zrank = 2 * p.n;
    return p;
}

Int star_degree(long d, int n) {
    if (d <= 1 || !squarefree(d) || n < 1) throw BadD();
    Int r = 1;
    int e = n % 2 == 1 ? n - 1 : n - 2;
    for (int i = 0; i < e; ++i) r *= d;
    return r;
}

Int star_t_function(long d, int n, long p) {
    if (d <= 1 || !squarefree(d) || n < 1 || p < 2) throw BadD();
    return d % p == 0 ? Int(2 * ((n - 1) / 2)) : Int(0);
}

namespace {

KRat ke(int delta, long u, long v) { return kr_from_elem(KElem(delta, u, v)); }

// Orthogonal sum of square blocks.
ExactMatrix block_sum(int delta, const std::vector<ExactMatrix>& blocks) {
    int n = 0;
    for (const auto& b : blocks) n += b.rows;
    ExactMatrix g(RingTag::Kt(delta), n, n);
    int off = 0;
    for (const auto& b : blocks) {
        for (int i = 0; i < b.rows; ++i)
            for (int j = 0; j < b.cols; ++j) g.at(off + i, off + j) = b.at(i, j);
        off += b.rows;
    }
    return g;
}

ExactMatrix diag1(int delta, long d) {
    ExactMatrix m(RingTag::Kt(delta), 1, 1);
    m.at(0, 0) = ke(delta, 2 * d, 0);
    return m;
}

// G4 = 3 I + pi T, T antisymmetric integer with t12 = t34 = 1, t13 = -1,
// t24 = 1; positive definite with det 9 and all SNF dual divisors pi.
ExactMatrix g4_block(const KElem& pi) {
    int t[4][4] = {};
    t[0][1] = 1;
    t[2][3] = 1;
    t[0][2] = -1;
    t[1][3] = 1;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < i; ++j) t[i][j] = -t[j][i];
    ExactMatrix g(RingTag::Kt(pi.delta), 4, 4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            KElem x = k_mul(pi, k_from_int(pi.delta, t[i][j]));
            if (i == j) x = k_add(x, k_from_int(pi.delta, 3));
            g.at(i, j) = kr_from_elem(x);
        }
    return g;
}

ExactMatrix e_block(const KElem& pi) {
    ExactMatrix m(RingTag::Kt(pi.delta), 2, 2);
    m.at(0, 0) = ke(pi.delta, 6, 0);
    m.at(0, 1) = kr_from_elem(pi);
    m.at(1, 0) = kr_from_elem(k_neg(pi));
    return m;
}

ExactMatrix b2_block(int delta) {
    ExactMatrix m(RingTag::Kt(delta), 2, 2);
    m.at(0, 0) = ke(delta, 4, 0);
    m.at(0, 1) = ke(delta, 2, 1);
    m.at(1, 0) = ke(delta, 2, -1);
    m.at(1, 1) = ke(delta, 4, 0);
    return m;
}

void add_check(CaseReport& r, const std::string& id, const std::string& expected,
               const std::string& actual) {
    r.checks.push_back({id, expected, actual, expected == actual});
}

template <typename F>
std::string guarded(F&& f) {
    try {
        return f();
    } catch (const Error& e) {
        return std::string("error: ") + e.what();
    }
}

}  // namespace

HermLattice build_case_lattice(const std::string& name) {
    CaseProfile p = case_profile(name);
    RingDesc ring = make_ring(p.delta);
    if (name == "cubic-surfaces") {
        return standard_lattice(
            ring, block_sum(-3, {diag1(-3, 1), diag1(-3, 1), diag1(-3, 1), diag1(-3, 1), diag1(-3, -1)}));
    }
    if (name == "genus3") {
        return standard_lattice(
            ring, block_sum(-4, {b2_block(-4), b2_block(-4), b2_block(-4), diag1(-4, -1)}));
    }
    KElem pi = ramified_prime(ring, 3);
    if (name == "cubic-threefolds") {
        return standard_lattice(
            ring, block_sum(-3, {g4_block(pi), g4_block(pi), e_block(pi), diag1(-3, 1)}));
    }
    // genus4
    return standard_lattice(ring,
                            block_sum(-3, {g4_block(pi), g4_block(pi), diag1(-3, 1), diag1(-3, -1)}));
}

CaseReport verify_case(const std::string& name, const HermLattice& lambda) {
    CaseProfile p = case_profile(name);
    if (lambda.space.ring.delta != p.delta) throw MixedRings();
    RingDesc ring = make_ring(p.delta);
    KElem pi = ramified_prime(ring, ring.ramified_primes()[0]);

    CaseReport r;
    r.name = name;

    add_check(r, "signature", sig_str(p.sig), guarded([&] { return sig_str(signature(lambda)); }));

    add_check(r, "chain-quotient-1", shape_str(p.quotient_1), guarded([&] {
                  ChainReport c = verify_chain(lambda, pi);
                  if (!c.holds) throw Error("chain does not hold");
                  return shape_str(c.quotient_1.shape);
              }));
    add_check(r, "chain-quotient-2", shape_str(p.quotient_2), guarded([&] {
                  ChainReport c = verify_chain(lambda, pi);
                  if (!c.multiplicative) throw Error("chain index not multiplicative");
                  return shape_str(c.quotient_2.shape);
              }));

    if (p.check_self_dual)
        add_check(r, "self-dual", "true",
                  guarded([&] { return std::string(is_self_dual(lambda) ? "true" : "false"); }));

    if (p.d != 0) {
        add_check(r, "l-zrank", std::to_string(p.zrank), guarded([&] {
                      HermLattice l = scale(dual(lambda), kr_from_elem(pi));
                      return std::to_string(trace_sym_form(l).S.rows);
                  }));
        if (p.has_l_dual_shape)
            add_check(r, "l-dual-quotient", shape_str(p.l_dual_shape), guarded([&] {
                          HermLattice l = scale(dual(lambda), kr_from_elem(pi));
                          return shape_str(disc_group_dual(l).shape);
                      }));
        if (p.has_l_pi_shape)
            add_check(r, "l-pi-quotient", shape_str(p.l_pi_shape), guarded([&] {
                          HermLattice l = scale(dual(lambda), kr_from_elem(pi));
                          return shape_str(
                              disc_group(scale(l, kr_inv(kr_from_elem(pi))), dual(l)).shape);
                      }));
    }

    add_check(r, "radical-dim", std::to_string(p.radical_dim),
              guarded([&] { return std::to_string(reduce_mod_pi(lambda, pi).radical_dim); }));

    if (p.has_sym_disc) {
        std::ostringstream want;
        want << p.sym_disc;
        add_check(r, "sym-disc", want.str(), guarded([&] {
                      HermLattice l = scale(dual(lambda), kr_from_elem(pi));
                      Rat d = det(sym_from_herm_scaled(l).S).a;
                      std::ostringstream os;
                      os << abs(d.get_num());
                      return os.str();
                  }));
    }

    r.pass = true;
    for (const auto& c : r.checks) r.pass = r.pass && c.pass;
    return r;
}

}  // namespace hermlat
