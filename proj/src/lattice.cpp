#include "hermlat/lattice.hpp"

#include <algorithm>

namespace hermlat {

namespace {

ExactMatrix retag(const ExactMatrix& m, RingTag tag) {
    ExactMatrix r = m;
    r.tag = tag;
    return r;
}

void check_ring_match(const RingDesc& ring, const ExactMatrix& m) {
    if (m.tag.delta != 0 && m.tag.delta != ring.delta) throw MixedRings();
    for (const auto& x : m.e)
        if (x.delta != 0 && x.delta != ring.delta) throw MixedRings();
}

// Writes an integral x as s + t*g where g is the ring generator (g has
// v-coordinate 1, so t is just the v-part).
void decompose(const KElem& x, const KElem& g, Int& s, Int& t) {
    t = x.v;
    s = (x.u - x.v * g.u) / 2;
}

void append_prime_powers(Int e, std::vector<Int>& shape) {
    e = abs(e);
    for (Int p = 2; p * p <= e; ++p) {
        if (e % p != 0) continue;
        Int q = 1;
        while (e % p == 0) {
            q *= p;
            e /= p;
        }
        shape.push_back(q);
    }
    if (e > 1) shape.push_back(e);
}

ExactMatrix gram_of(const HermLattice& l) {
    return mat_mul(mat_mul(mat_transpose(l.basis), l.space.gram), mat_conj(l.basis));
}

// Minimal positive integer m with m * (column span of B) contained in O_k^n.
Int clearing_scale(const ExactMatrix& b) {
    Int l = 1;
    for (const auto& x : b.e) {
        Int u, v, den;
        kr_half_coords(x, u, v, den);
        Int m = den;
        if ((u - v * x.delta) % 2 != 0) m *= 2;
        l = lcm(l, m);
    }
    return l;
}

}  // namespace

HermSpace make_space(const RingDesc& ring, const ExactMatrix& gram) {
    check_ring_match(ring, gram);
    if (gram.rows != gram.cols || gram.rows == 0) throw NotHermitian();
    if (!mat_is_hermitian(gram)) throw NotHermitian();
    ExactMatrix g = retag(gram, RingTag::Kt(ring.delta));
    if (det(g).is_zero()) throw SingularGram();
    return HermSpace{ring, gram.rows, std::move(g)};
}

HermLattice standard_lattice(const RingDesc& ring, const ExactMatrix& gram) {
    HermSpace sp = make_space(ring, gram);
    ExactMatrix b = ExactMatrix::identity(RingTag::Kt(ring.delta), sp.n);
    return HermLattice{std::move(sp), std::move(b)};
}

HermLattice lattice_in_space(const HermSpace& space, const ExactMatrix& basis) {
    check_ring_match(space.ring, basis);
    if (basis.rows != space.n || basis.cols != space.n) throw Error("basis shape mismatch");
    ExactMatrix b = retag(basis, RingTag::Kt(space.ring.delta));
    if (det(b).is_zero()) throw SingularGram();
    return HermLattice{space, std::move(b)};
}

ExactMatrix lattice_gram(const HermLattice& l) { return gram_of(l); }

bool is_integral_lattice(const HermLattice& l) { return mat_is_integral(gram_of(l)); }

std::pair<Int, ExactMatrix> canonical_basis(const HermLattice& l) {
    Int s = clearing_scale(l.basis);
    ExactMatrix scaled = retag(mat_scalar_mul(l.basis, KRat(Rat(s))), RingTag::OKt(l.space.ring.delta));
    return {s, hnf(scaled).H};
}

bool lattice_equal(const HermLattice& a, const HermLattice& b) {
    if (!(a.space == b.space)) return false;
    auto ca = canonical_basis(a);
    auto cb = canonical_basis(b);
    return ca.first == cb.first && ca.second == cb.second;
}

HermLattice dual(const HermLattice& l) {
    ExactMatrix gr = gram_of(l);
    if (det(gr).is_zero()) throw SingularGram();
    ExactMatrix bd = mat_mul(l.basis, inverse(mat_conj(gr)));
    return HermLattice{l.space, std::move(bd)};
}

bool is_sublattice(const HermLattice& m, const HermLattice& n) {
    if (!(m.space == n.space)) return false;
    ExactMatrix c = mat_mul(inverse(n.basis), m.basis);
    return mat_is_integral(c);
}

std::vector<Int> quotient_shape(const KElem& d) {
    std::vector<Int> shape;
    if (d.delta == 0) {
        append_prime_powers(d.u / 2, shape);
        return shape;
    }
    RingDesc ring = make_ring(d.delta);
    KElem g = ring.generator();
    Int s1, t1, s2, t2;
    decompose(d, g, s1, t1);
    decompose(k_mul(d, g), g, s2, t2);
    ExactMatrix m(RingTag::Zt(), 2, 2);
    m.at(0, 0) = KRat(Rat(s1));
    m.at(0, 1) = KRat(Rat(s2));
    m.at(1, 0) = KRat(Rat(t1));
    m.at(1, 1) = KRat(Rat(t2));
    for (const KElem& e : snf(m).divisors) append_prime_powers(e.u / 2, shape);
    std::sort(shape.begin(), shape.end());
    return shape;
}

DiscGroup disc_group(const HermLattice& m, const HermLattice& n) {
    if (!(m.space == n.space)) throw NotASublattice();
    ExactMatrix c = mat_mul(inverse(n.basis), m.basis);
    if (!mat_is_integral(c)) throw NotASublattice();
    SnfResult s = snf(retag(c, RingTag::OKt(m.space.ring.delta)));
    DiscGroup g;
    for (const KElem& d : s.divisors) {
        if (is_unit(d)) continue;
        g.divisors.push_back(d);
        g.order *= abs(k_norm(d).get_num());
        for (const Int& q : quotient_shape(d)) g.shape.push_back(q);
    }
    std::sort(g.shape.begin(), g.shape.end());
    return g;
}

DiscGroup disc_group_dual(const HermLattice& l) { return disc_group(l, dual(l)); }

bool is_self_dual(const HermLattice& l) { return lattice_equal(dual(l), l); }

std::pair<int, int> signature(const HermLattice& l) {
    CongruenceResult c = congruence_diagonalize(gram_of(l));
    if (c.zero != 0) throw SingularGram();
    return {c.pos, c.neg};
}

bool is_positive_definite(const HermLattice& l) {
    auto sig = signature(l);
    return sig.second == 0;
}

HermLattice scale(const HermLattice& l, const KRat& alpha) {
    if (alpha.is_zero()) throw ZeroScalar();
    if (alpha.delta != 0 && alpha.delta != l.space.ring.delta) throw MixedRings();
    return HermLattice{l.space, mat_scalar_mul(l.basis, alpha)};
}

// --- trace forms -----------------------------------------------------------

namespace {

// h on the Z-basis {b_1..b_n, g b_1..g b_n}: H_{pq} = g^a Gr_{ij} conj(g)^b
// where p = a*n + i, q = b*n + j.
std::vector<KElem> trace_basis_values(const HermLattice& l) {
    if (!is_integral_lattice(l)) throw NonIntegralLattice();
    int n = l.space.n;
    KElem g = l.space.ring.generator();
    KElem gc = k_conj(g);
    ExactMatrix gr = gram_of(l);
    std::vector<KElem> h(static_cast<size_t>(4) * n * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            KElem base = kr_to_elem(gr.at(i, j));
            h[static_cast<size_t>(i) * 2 * n + j] = base;
            h[static_cast<size_t>(i) * 2 * n + (n + j)] = k_mul(base, gc);
            h[static_cast<size_t>(n + i) * 2 * n + j] = k_mul(g, base);
            h[static_cast<size_t>(n + i) * 2 * n + (n + j)] = k_mul(k_mul(g, base), gc);
        }
    return h;
}

ExactMatrix generator_action(const RingDesc& ring, int n) {
    KElem g = ring.generator();
    Int tr = k_trace(g);
    Int nm = k_norm(g).get_num();
    ExactMatrix j(RingTag::Zt(), 2 * n, 2 * n);
    for (int i = 0; i < n; ++i) {
        j.at(n + i, i) = KRat(Rat(1));          // g * b_i = (g b_i)
        j.at(i, n + i) = KRat(Rat(-nm));        // g * (g b_i) = -N(g) b_i + tr(g) (g b_i)
        j.at(n + i, n + i) = KRat(Rat(tr));
    }
    return j;
}

ZFormWithAction trace_form(const HermLattice& l, bool alternating) {
    int n = l.space.n;
    std::vector<KElem> h = trace_basis_values(l);
    ExactMatrix s(RingTag::Zt(), 2 * n, 2 * n);
    for (int p = 0; p < 2 * n; ++p)
        for (int q = 0; q < 2 * n; ++q) {
            const KElem& x = h[static_cast<size_t>(p) * 2 * n + q];
            s.at(p, q) = KRat(Rat(alternating ? x.v : x.u));
        }
    return ZFormWithAction{l.space.ring, alternating, std::move(s), generator_action(l.space.ring, n)};
}

}  // namespace

ZFormWithAction trace_alt_form(const HermLattice& l) { return trace_form(l, true); }

ZFormWithAction trace_sym_form(const HermLattice& l) { return trace_form(l, false); }

ZFormWithAction sym_from_herm_scaled(const HermLattice& l) {
    if (l.space.ring.delta != -3) throw WrongDiscriminant();
    ZFormWithAction z = trace_form(l, false);
    for (auto& x : z.S.e) {
        x.a /= 3;
        if (x.a.get_den() != 1) throw NonIntegralEntries();
    }
    return z;
}

// --- recovering a hermitian lattice from a Z-form with action ---------------

namespace {

void validate_action(const ZFormWithAction& z) {
    const ExactMatrix& s = z.S;
    const ExactMatrix& j = z.J;
    if (s.rows != s.cols || s.rows == 0 || s.rows % 2 != 0) throw ActionIncompatible();
    if (j.rows != s.rows || j.cols != s.cols) throw ActionIncompatible();
    if (!mat_is_integral(s) || !mat_is_integral(j)) throw ActionIncompatible();
    ExactMatrix st = mat_transpose(s);
    if (z.alternating ? (st != mat_neg(s)) : (st != s)) throw ActionIncompatible();
    if (det(s).is_zero()) throw SingularGram();

    KElem g = z.ring.generator();
    Int tr = k_trace(g);
    Int nm = k_norm(g).get_num();
    ExactMatrix id = ExactMatrix::identity(RingTag::Zt(), j.rows);
    // minimal polynomial: J^2 - tr(g) J + N(g) = 0
    ExactMatrix mp = mat_add(mat_sub(mat_mul(j, j), mat_scalar_mul(j, KRat(Rat(tr)))),
                             mat_scalar_mul(id, KRat(Rat(nm))));
    if (mp != ExactMatrix::zero(mp.tag, j.rows, j.cols)) throw ActionIncompatible();
    // adjointness: S(Jx, y) = S(x, (tr(g) - J) y)
    ExactMatrix lhs = mat_mul(mat_transpose(j), s);
    ExactMatrix rhs = mat_mul(s, mat_sub(mat_scalar_mul(id, KRat(Rat(tr))), j));
    if (lhs != rhs) throw ActionIncompatible();
}

// Incremental Q-rank tracker (row-reduced basis).
struct SpanTracker {
    std::vector<std::vector<Rat>> rows;  // reduced, each with a leading 1
    std::vector<int> pivots;

    // Reduces v against the stored rows; returns false if v lies in the span,
    // otherwise inserts the residual.
    bool insert(std::vector<Rat> v) {
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rat& c = v[pivots[r]];
            if (c != 0)
                for (size_t k = 0; k < v.size(); ++k) v[k] -= c * rows[r][k];
        }
        int p = -1;
        for (size_t k = 0; k < v.size(); ++k)
            if (v[k] != 0) {
                p = static_cast<int>(k);
                break;
            }
        if (p < 0) return false;
        Rat inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        rows.push_back(std::move(v));
        pivots.push_back(p);
        return true;
    }

    bool in_span(const std::vector<Rat>& v) {
        std::vector<Rat> w = v;
        for (size_t r = 0; r < rows.size(); ++r) {
            const Rat& c = w[pivots[r]];
            if (c != 0)
                for (size_t k = 0; k < w.size(); ++k) w[k] -= c * rows[r][k];
        }
        for (const auto& x : w)
            if (x != 0) return false;
        return true;
    }
};

std::vector<Rat> matrix_column(const ExactMatrix& m, int j) {
    std::vector<Rat> v(m.rows);
    for (int i = 0; i < m.rows; ++i) v[i] = m.at(i, j).a;
    return v;
}

// Free O_k-basis of Z^{2n} under the J-action: greedily pick standard basis
// vectors that stay k-independent, express everything in that k-basis, and
// HNF-reduce the resulting coordinate module.  Returns the basis vectors as
// the columns of a 2n x n rational matrix.
ExactMatrix free_basis_vectors(const ZFormWithAction& z) {
    int nn = z.J.rows;
    int n = nn / 2;
    KElem g = z.ring.generator();

    SpanTracker span;
    std::vector<int> picks;
    for (int j = 0; j < nn && static_cast<int>(picks.size()) < n; ++j) {
        std::vector<Rat> ej(nn, 0);
        ej[j] = 1;
        if (span.in_span(ej)) continue;
        span.insert(ej);
        span.insert(matrix_column(z.J, j));
        picks.push_back(j);
    }
    if (static_cast<int>(picks.size()) != n) throw ActionIncompatible();

    // F = [u_1 .. u_n | J u_1 .. J u_n]
    ExactMatrix f(RingTag::Qt(), nn, nn);
    for (int a = 0; a < n; ++a) {
        f.at(picks[a], a) = KRat(Rat(1));
        for (int i = 0; i < nn; ++i) f.at(i, n + a) = z.J.at(i, picks[a]);
    }
    ExactMatrix finv = inverse(f);

    // k-coordinates of the standard generators: column j is Finv e_j split as
    // (x; y) with value x + y*g.
    KRat gk = kr_from_elem(g);
    ExactMatrix w(RingTag::Kt(z.ring.delta), n, nn);
    for (int j = 0; j < nn; ++j)
        for (int a = 0; a < n; ++a) {
            KRat x(finv.at(a, j).a);
            KRat y(finv.at(n + a, j).a);
            w.at(a, j) = kr_add(x, kr_mul(y, gk));
        }

    Int l = clearing_scale(w);
    ExactMatrix h = hnf(retag(mat_scalar_mul(w, KRat(Rat(l))), RingTag::OKt(z.ring.delta))).H;

    // First n columns of the HNF, scaled back, are a free O_k-basis in
    // k-coordinates; map to ambient Z-coordinates through F.
    ExactMatrix coords(RingTag::Qt(), nn, n);
    for (int a = 0; a < n; ++a) {
        bool nonzero = false;
        for (int b = 0; b < n; ++b) {
            KRat c = kr_div(h.at(b, a), KRat(Rat(l)));
            // c = x + y*g with y = 2*coef of sqrt(D), x = rational part - y*g_u/2
            Rat y = c.b * 2;
            Rat x = c.a - c.b * g.u;
            coords.at(b, a) = KRat(x);
            coords.at(n + b, a) = KRat(y);
            if (!c.is_zero()) nonzero = true;
        }
        if (!nonzero) throw ActionIncompatible();
    }
    return mat_mul(f, coords);
}

HermLattice herm_from_zform(const ZFormWithAction& z, const ExactMatrix& umat, const ExactMatrix& vmat) {
    int n = umat.rows;
    ExactMatrix gram(RingTag::Kt(z.ring.delta), n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            gram.at(a, b) = KRat(z.ring.delta, umat.at(a, b).a / 2, vmat.at(a, b).a / 2);
    if (!mat_is_integral(gram)) throw ActionIncompatible();
    return standard_lattice(z.ring, gram);
}

}  // namespace

HermLattice herm_from_alt(const ZFormWithAction& z) {
    if (!z.alternating) throw ActionIncompatible();
    validate_action(z);
    ExactMatrix w = free_basis_vectors(z);
    KElem g = z.ring.generator();
    // matrix of sqrt(D): R = 2J - tr(g)
    ExactMatrix r = mat_sub(mat_scalar_mul(z.J, KRat(Rat(2))),
                            mat_scalar_mul(ExactMatrix::identity(RingTag::Zt(), z.J.rows), KRat(Rat(k_trace(g)))));
    ExactMatrix sw = mat_mul(z.S, w);
    // h = (S(Rx, y) + S(x, y) sqrt(D)) / 2
    ExactMatrix umat = mat_mul(mat_transpose(mat_mul(r, w)), sw);
    ExactMatrix vmat = mat_mul(mat_transpose(w), sw);
    return herm_from_zform(z, umat, vmat);
}

HermLattice herm_from_sym_scaled(const ZFormWithAction& z) {
    if (z.ring.delta != -3) throw WrongDiscriminant();
    if (z.alternating) throw ActionIncompatible();
    validate_action(z);
    ExactMatrix w = free_basis_vectors(z);
    ExactMatrix r = mat_sub(mat_scalar_mul(z.J, KRat(Rat(2))),
                            mat_scalar_mul(ExactMatrix::identity(RingTag::Zt(), z.J.rows), KRat(Rat(-1))));
    ExactMatrix sw = mat_mul(z.S, w);
    // h = (3 s(x, y) - s(Rx, y) sqrt(D)) / 2
    ExactMatrix umat = mat_scalar_mul(mat_mul(mat_transpose(w), sw), KRat(Rat(3)));
    ExactMatrix vmat = mat_neg(mat_mul(mat_transpose(mat_mul(r, w)), sw));
    return herm_from_zform(z, umat, vmat);
}

HermLattice herm_from_sym_gaussian(const ZFormWithAction& z) {
    if (z.ring.delta != -4) throw WrongDiscriminant();
    if (z.alternating) throw ActionIncompatible();
    validate_action(z);
    ExactMatrix w = free_basis_vectors(z);
    // h = s(x, y) + s(x, Jy) i = (2 s(x, y) + s(x, Jy) sqrt(D)) / 2
    ExactMatrix umat = mat_scalar_mul(mat_mul(mat_transpose(w), mat_mul(z.S, w)), KRat(Rat(2)));
    ExactMatrix vmat = mat_mul(mat_transpose(w), mat_mul(z.S, mat_mul(z.J, w)));
    return herm_from_zform(z, umat, vmat);
}

// --- chains and mod-pi reduction -------------------------------------------

namespace {

void check_ramified(const RingDesc& ring, const KElem& pi) {
    if (pi.delta != ring.delta) throw MixedRings();
    if (!is_integral(pi)) throw NotRamifiedElement();
    Int p = k_norm(pi).get_num();
    if (!p.fits_sint_p()) throw NotRamifiedElement();
    auto rp = ring.ramified_primes();
    if (std::find(rp.begin(), rp.end(), static_cast<int>(p.get_si())) == rp.end())
        throw NotRamifiedElement();
}

}  // namespace

ChainReport verify_chain(const HermLattice& lambda, const KElem& pi) {
    check_ramified(lambda.space.ring, pi);
    HermLattice d = dual(lambda);
    HermLattice top = scale(lambda, kr_inv(kr_from_elem(pi)));

    ChainReport r;
    bool lower = is_sublattice(lambda, d);
    bool upper = is_sublattice(d, top);
    r.holds = lower && upper;
    if (lower) r.quotient_1 = disc_group(lambda, d);
    if (upper) r.quotient_2 = disc_group(d, top);
    r.total_index = disc_group(lambda, top).order;
    r.multiplicative = r.holds && r.quotient_1.order * r.quotient_2.order == r.total_index;
    return r;
}

ModPiReduction reduce_mod_pi(const HermLattice& lambda, const KElem& pi) {
    check_ramified(lambda.space.ring, pi);
    if (!is_integral_lattice(lambda)) throw NonIntegralLattice();
    const RingDesc& ring = lambda.space.ring;
    long p = k_norm(pi).get_num().get_si();
    KElem g = ring.generator();

    // residue of the generator: the d0 in {0..p-1} with pi | g - d0
    long d0 = 0;
    for (; d0 < p; ++d0)
        if (k_norm(k_sub(g, k_from_int(ring.delta, d0))).get_num() % p == 0) break;

    int n = lambda.space.n;
    ExactMatrix gr = gram_of(lambda);
    std::vector<std::vector<long>> m(n, std::vector<long>(n));
    ModPiReduction red;
    red.p = static_cast<int>(p);
    red.residue = ExactMatrix(RingTag::Zt(), n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            KElem x = kr_to_elem(gr.at(i, j));
            Int s, t;
            decompose(x, g, s, t);
            Int r = (s + t * d0) % p;
            if (r < 0) r += p;
            m[i][j] = r.get_si();
            red.residue.at(i, j) = KRat(Rat(r));
        }

    // kernel of the residue form over F_p
    std::vector<int> pivot_col;
    int rank = 0;
    for (int col = 0; col < n && rank < n; ++col) {
        int piv = -1;
        for (int i = rank; i < n; ++i)
            if (m[i][col] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        std::swap(m[rank], m[piv]);
        long inv = 1;
        for (long x = 1; x < p; ++x)
            if (m[rank][col] * x % p == 1) {
                inv = x;
                break;
            }
        for (int j = 0; j < n; ++j) m[rank][j] = m[rank][j] * inv % p;
        for (int i = 0; i < n; ++i) {
            if (i == rank || m[i][col] == 0) continue;
            long c = m[i][col];
            for (int j = 0; j < n; ++j) m[i][j] = ((m[i][j] - c * m[rank][j]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++rank;
    }

    red.radical_dim = n - rank;
    red.radical_basis = ExactMatrix(RingTag::Zt(), n, red.radical_dim);
    int out = 0;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        red.radical_basis.at(col, out) = KRat(Rat(1));
        for (int r = 0; r < rank; ++r) {
            long c = (p - m[r][col]) % p;
            red.radical_basis.at(pivot_col[r], out) = KRat(Rat(c));
        }
        ++out;
    }
    return red;
}

}  // namespace hermlat
