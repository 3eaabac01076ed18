// End-to-end verification of the headline lattice facts.  Each criterion
// prints a single pass/fail line; the exit code is the number of failures.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "hermlat/catalog.hpp"
#include "hermlat/cycles.hpp"
#include "hermlat/json_io.hpp"

using namespace hermlat;

namespace {

KRat ke(int delta, long u, long v) { return kr_from_elem(KElem(delta, u, v)); }

ExactMatrix diag_ints(int delta, std::vector<long> d) {
    int n = (int)d.size();
    ExactMatrix m(RingTag::Kt(delta), n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ke(delta, 2 * d[i], 0);
    return m;
}

std::vector<Int> rep(long q, int count) { return std::vector<Int>((size_t)count, Int(q)); }

KElem random_elem(std::mt19937& rng, int delta, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    while (true) {
        KElem x(delta, d(rng), d(rng));
        if (is_integral(x)) return x;
    }
}

ExactMatrix random_hermitian_gram(std::mt19937& rng, int delta, int n, int bound) {
    while (true) {
        ExactMatrix g(RingTag::Kt(delta), n, n);
        std::uniform_int_distribution<int> d(-bound, bound);
        for (int i = 0; i < n; ++i) {
            g.at(i, i) = ke(delta, 2 * d(rng), 0);
            for (int j = i + 1; j < n; ++j) {
                KElem x = random_elem(rng, delta, bound);
                g.at(i, j) = kr_from_elem(x);
                g.at(j, i) = kr_from_elem(k_conj(x));
            }
        }
        if (!det(g).is_zero()) return g;
    }
}

HermLattice random_integral_lattice(std::mt19937& rng, int delta, int n, int bound) {
    return standard_lattice(make_ring(delta), random_hermitian_gram(rng, delta, n, bound));
}

// Z-coordinates (length 2n) of an ambient vector relative to {b_j, g b_j}.
std::vector<Rat> zcoords(const HermLattice& l, const std::vector<KRat>& x) {
    int n = l.space.n;
    KElem g = l.space.ring.generator();
    std::vector<KRat> c = solve(l.basis, x);
    std::vector<Rat> w(2 * n);
    for (int i = 0; i < n; ++i) {
        Rat t = c[i].b * 2;
        w[i] = c[i].a - c[i].b * g.u;
        w[n + i] = t;
    }
    return w;
}

std::vector<KRat> basis_column(const HermLattice& l, int j) {
    std::vector<KRat> col(l.space.n);
    for (int i = 0; i < l.space.n; ++i) col[i] = l.basis.at(i, j);
    return col;
}

bool pairs_integrally(const ExactMatrix& s, const std::vector<Rat>& w) {
    for (int i = 0; i < s.rows; ++i) {
        Rat acc = 0;
        for (int j = 0; j < s.cols; ++j) acc += s.at(i, j).a * w[j];
        if (acc.get_den() != 1) return false;
    }
    return true;
}

// The derived pi-modular level of a case lattice.
HermLattice level_lattice(const HermLattice& lambda, const KElem& pi) {
    return scale(dual(lambda), kr_from_elem(pi));
}

// ---- enumeration oracle -------------------------------------------------
//
// Exhaustive scan over the integer coordinate box that provably contains
// every solution of q(w) <= 2 tmax, with q the trace form of the lattice.
// Box half-widths come from the classical bound w_i^2 <= q_max (S^-1)_ii.
struct OracleBuckets {
    long tmax;
    std::vector<std::vector<std::vector<KElem>>> by_t;  // index t = 1..tmax
};

OracleBuckets oracle_scan(const HermLattice& l, long tmax) {
    int n = l.space.n, m = 2 * n;
    int delta = l.space.ring.delta;
    long gu = (long)l.space.ring.generator().u.get_si();
    ExactMatrix sm = trace_sym_form(l).S;
    ExactMatrix sinv = inverse(sm);

    std::vector<long> s(m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) s[i * m + j] = (long)sm.at(i, j).a.get_num().get_si();

    std::vector<long> bound(m);
    for (int i = 0; i < m; ++i) {
        Rat r = Rat(2 * tmax) * sinv.at(i, i).a;
        Int c = r.get_num() / r.get_den() + 1;
        Int b = sqrt(c) + 1;
        bound[i] = (long)b.get_si();
    }

    OracleBuckets out{tmax, std::vector<std::vector<std::vector<KElem>>>(tmax + 1)};
    std::vector<long> w(m);
    for (int i = 0; i < m; ++i) w[i] = -bound[i];
    while (true) {
        long q = 0;
        for (int i = 0; i < m; ++i) {
            long row = 0;
            for (int j = 0; j < m; ++j) row += s[i * m + j] * w[j];
            q += row * w[i];
        }
        long t = q / 2;
        if (t >= 1 && t <= tmax) {
            std::vector<KElem> x(n);
            for (int i = 0; i < n; ++i) x[i] = KElem(delta, 2 * w[i] + gu * w[n + i], w[n + i]);
            out.by_t[t].push_back(std::move(x));
        }
        int i = 0;
        for (; i < m; ++i) {
            if (++w[i] <= bound[i]) break;
            w[i] = -bound[i];
        }
        if (i == m) break;
    }
    auto lex = [](const std::vector<KElem>& a, const std::vector<KElem>& b) {
        for (size_t i = 0; i < a.size(); ++i) {
            if (a[i].u != b[i].u) return a[i].u < b[i].u;
            if (a[i].v != b[i].v) return a[i].v < b[i].v;
        }
        return false;
    };
    for (long t = 1; t <= tmax; ++t) std::sort(out.by_t[t].begin(), out.by_t[t].end(), lex);
    return out;
}

bool oracle_matches(const HermLattice& l, long tmax) {
    OracleBuckets ob = oracle_scan(l, tmax);
    for (long t = 1; t <= tmax; ++t) {
        RepSolutionSet got = enumerate_vectors(l, t);
        if (got.vectors.size() != ob.by_t[t].size()) return false;
        for (size_t k = 0; k < got.vectors.size(); ++k)
            for (size_t i = 0; i < got.vectors[k].size(); ++i)
                if (got.vectors[k][i].u != ob.by_t[t][k][i].u ||
                    got.vectors[k][i].v != ob.by_t[t][k][i].v)
                    return false;
    }
    return true;
}

// ---- CLI replay ---------------------------------------------------------

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(HERMLAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* p = popen(cmd.c_str(), "r");
    RunResult r;
    if (!p) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
    int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

// ---- criteria -----------------------------------------------------------

bool crit_surfaces() {
    HermLattice l = build_case_lattice("cubic-surfaces");
    return is_integral_lattice(l) && is_self_dual(l) && signature(l) == std::make_pair(4, 1);
}

bool crit_threefolds() {
    HermLattice l = build_case_lattice("cubic-threefolds");
    if (l.rank() != 11) return false;
    KElem pi = ramified_prime(l.space.ring, 3);
    ChainReport c = verify_chain(l, pi);
    if (!c.holds || c.quotient_1.shape != rep(3, 10) || c.quotient_2.shape != rep(3, 1)) return false;
    HermLattice lev = level_lattice(l, pi);
    DiscGroup q = disc_group(scale(lev, kr_inv(kr_from_elem(pi))), dual(lev));
    if (q.shape != rep(3, 1)) return false;
    Rat d = det(sym_from_herm_scaled(lev).S).a;
    return abs(d) == 3;
}

bool crit_genus3() {
    HermLattice l = build_case_lattice("genus3");
    if (l.rank() != 7) return false;
    KElem pi = ramified_prime(l.space.ring, 2);
    ChainReport c = verify_chain(l, pi);
    if (!c.holds || c.quotient_1.shape != rep(2, 6) || c.quotient_2.shape != rep(2, 1)) return false;
    HermLattice lev = level_lattice(l, pi);
    if (disc_group(lev, dual(lev)).order != 256) return false;
    // the hermitian dual is the dual of the symmetric form s = tr(h)/2
    ZFormWithAction z = trace_sym_form(l);
    ExactMatrix s_half = mat_scalar_mul(z.S, KRat(Rat(1, 2)));
    if (!mat_is_integral(s_half)) return false;
    HermLattice d = dual(l);
    KRat g = kr_from_elem(l.space.ring.generator());
    for (int j = 0; j < l.space.n; ++j) {
        std::vector<KRat> col = basis_column(d, j);
        if (!pairs_integrally(s_half, zcoords(l, col))) return false;
        for (auto& x : col) x = kr_mul(x, g);
        if (!pairs_integrally(s_half, zcoords(l, col))) return false;
    }
    return abs(det(s_half).a) == Rat(disc_group(l, d).order);
}

bool crit_genus4() {
    HermLattice l = build_case_lattice("genus4");
    if (l.rank() != 10) return false;
    KElem pi = ramified_prime(l.space.ring, 3);
    ChainReport c = verify_chain(l, pi);
    if (!c.holds || c.quotient_1.shape != rep(3, 8) || c.quotient_2.shape != rep(3, 2)) return false;
    HermLattice lev = level_lattice(l, pi);
    DiscGroup q = disc_group(scale(lev, kr_inv(kr_from_elem(pi))), dual(lev));
    return q.shape == rep(3, 2);
}

bool crit_radical() {
    HermLattice l = build_case_lattice("cubic-threefolds");
    KElem pi = ramified_prime(l.space.ring, 3);
    return reduce_mod_pi(l, pi).radical_dim == 10;
}

bool crit_star() {
    struct Row {
        long d;
        int n;
        long degree_base, degree_exp;
        long t;
    };
    const Row rows[] = {{3, 11, 3, 10, 10}, {2, 7, 2, 6, 6}, {3, 10, 3, 8, 8}};
    for (const Row& r : rows) {
        Int want = 1;
        for (long i = 0; i < r.degree_exp; ++i) want *= r.degree_base;
        if (star_degree(r.d, r.n) != want) return false;
        if (star_t_function(r.d, r.n, r.d) != r.t) return false;
        if (star_t_function(r.d, r.n, 5) != 0) return false;
    }
    return true;
}

bool crit_trace_signature() {
    for (const std::string& name : case_names()) {
        CaseProfile p = case_profile(name);
        ExactMatrix s = trace_sym_form(build_case_lattice(name)).S;
        CongruenceResult c = congruence_diagonalize(s);
        if (c.pos != 2 * (p.n - 1) || c.neg != 2) return false;
    }
    return true;
}

bool crit_duality_random() {
    std::mt19937 rng(2024);
    int done = 0;
    for (int delta : {-3, -4, -7, -8, -11})
        for (int it = 0; it < 48; ++it, ++done) {
            HermLattice l = random_integral_lattice(rng, delta, 1 + it % 4, 10);
            HermLattice d = dual(l);
            if (!lattice_equal(dual(d), l)) return false;
            Rat dg = kr_norm(det(lattice_gram(l)));
            if (disc_group(l, d).order != abs(dg.get_num())) return false;
        }
    return done >= 200;
}

bool crit_eisenstein_random() {
    std::mt19937 rng(5);
    for (int it = 0; it < 110; ++it) {
        HermLattice l = random_integral_lattice(rng, -3, 1 + it % 3, 6);
        ZFormWithAction z = trace_alt_form(l);
        HermLattice back = herm_from_alt(z);
        if (!(lattice_gram(back) == lattice_gram(l))) return false;
        if (is_self_dual(l) != (abs(det(z.S).a) == 1)) return false;
    }
    return true;
}

bool crit_enumeration_oracle() {
    // the worked examples first
    {
        RingDesc e = make_ring(-3);
        HermLattice one = standard_lattice(e, diag_ints(-3, {1}));
        if (rep_count(one, 1) != 6 || rep_count(one, 2) != 0 || rep_count(one, 3) != 6) return false;
        HermLattice gi = standard_lattice(make_ring(-4), diag_ints(-4, {1}));
        if (rep_count(gi, 1) != 4) return false;
        ExactMatrix b2(RingTag::Kt(-4), 2, 2);
        b2.at(0, 0) = ke(-4, 4, 0);
        b2.at(1, 1) = ke(-4, 4, 0);
        b2.at(0, 1) = ke(-4, 2, 1);
        b2.at(1, 0) = ke(-4, 2, -1);
        if (rep_count(standard_lattice(make_ring(-4), b2), 2) != 24) return false;
    }
    const long tmax = 20;
    for (int delta : {-3, -4}) {
        RingDesc ring = make_ring(delta);
        for (long a = 1; a <= 10; ++a)
            if (!oracle_matches(standard_lattice(ring, diag_ints(delta, {a})), tmax)) return false;
        for (long a = 1; a <= 10; ++a)
            for (long b = a; b <= 10; ++b)
                for (long u = -4; u <= 4; ++u)
                    for (long v = -4; v <= 4; ++v) {
                        KElem off(delta, u, v);
                        if (!is_integral(off)) continue;
                        if (4 * k_norm(off) >= 4 * a * b) continue;  // keep it definite
                        if (u < 0 || (u == 0 && v < 0)) continue;    // conjugate gram, same counts
                        ExactMatrix g(RingTag::Kt(delta), 2, 2);
                        g.at(0, 0) = ke(delta, 2 * a, 0);
                        g.at(1, 1) = ke(delta, 2 * b, 0);
                        g.at(0, 1) = kr_from_elem(off);
                        g.at(1, 0) = kr_from_elem(k_conj(off));
                        if (!oracle_matches(standard_lattice(ring, g), tmax)) return false;
                    }
    }
    return true;
}

bool crit_cli_replay() {
    RunResult a = run_cli("case-verify cubic-surfaces --build");
    if (a.code != 0 || a.out.find("\"pass\":true}\n") == std::string::npos) return false;
    RunResult b = run_cli("signature --ring -3 --gram '[[3,\"pi\"],[\"-pi\",0]]'");
    if (b.code != 0 || b.out != "{\"p\":1,\"q\":1}\n") return false;
    RunResult c = run_cli("enumerate --ring -4 --gram '[[2,[2,1]],[[2,-1],2]]' --t 2");
    if (c.code != 0 || c.out.find("\"count\":24") == std::string::npos) return false;
    RunResult d = run_cli("snf --ring -3 --matrix '[[1,\"1/2\"]]'");
    if (d.code != 2) return false;
    // determinism across runs
    RunResult c2 = run_cli("enumerate --ring -4 --gram '[[2,[2,1]],[[2,-1],2]]' --t 2");
    return c2.out == c.out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<bool()> fn;
    };
    const std::vector<Criterion> criteria = {
        {"cubic surfaces lattice is self-dual of signature (4,1)", crit_surfaces},
        {"cubic threefolds chain (3)^10 / 3 and level facts", crit_threefolds},
        {"genus 3 chain (2)^6 / 2, level order 2^8, dual agreement", crit_genus3},
        {"genus 4 chain (3)^8 / (3)^2 and level quotient", crit_genus4},
        {"cubic threefolds mod-pi radical has dimension 10", crit_radical},
        {"star polarization degrees and t-function values", crit_star},
        {"symmetric trace forms have signature (2(n-1), 2)", crit_trace_signature},
        {"duality involution and index identity (random sweep)", crit_duality_random},
        {"alternating-form round trip and self-duality (random sweep)", crit_eisenstein_random},
        {"enumeration agrees with exhaustive box search", crit_enumeration_oracle},
        {"CLI examples replay byte-identically", crit_cli_replay},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        bool ok = false;
        try {
            ok = criteria[i].fn();
        } catch (const std::exception& e) {
            std::fprintf(stderr, "criterion %zu raised: %s\n", i + 1, e.what());
        }
        double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("%s  %2zu. %s  (%.2fs)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].label, dt);
        if (!ok) ++failures;
    }
    return failures;
}
