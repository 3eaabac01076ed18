#include "hermlat/cycles.hpp"

#include <algorithm>

namespace hermlat {

namespace {

// LDL^T decomposition of a symmetric positive-definite rational matrix.
struct Ldl {
    int m = 0;
    std::vector<Rat> d;
    std::vector<std::vector<Rat>> l;  // unit lower triangular, l[i][j] for j < i

    static Ldl from(const ExactMatrix& s) {
        int m = s.rows;
        Ldl r;
        r.m = m;
        r.d.assign(m, 0);
        r.l.assign(m, std::vector<Rat>(m, 0));
        std::vector<std::vector<Rat>> a(m, std::vector<Rat>(m));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) a[i][j] = s.at(i, j).a;
        for (int j = 0; j < m; ++j) {
            Rat dj = a[j][j];
            for (int k = 0; k < j; ++k) dj -= r.d[k] * r.l[j][k] * r.l[j][k];
            if (dj <= 0) throw NotDefinite();
            r.d[j] = dj;
            r.l[j][j] = 1;
            for (int i = j + 1; i < m; ++i) {
                Rat v = a[i][j];
                for (int k = 0; k < j; ++k) v -= r.d[k] * r.l[i][k] * r.l[j][k];
                r.l[i][j] = v / dj;
            }
        }
        return r;
    }
};

// Q(w) = sum_i d_i (w_i + sum_{j>i} l[j][i] w_j)^2; coordinates assigned from
// the last index down.  Exact interval scan: no square roots, just outward
// walks from the center while the budget allows.
struct Search {
    const Ldl& f;
    Rat target;

    Rat center(int i, const std::vector<Int>& w) const {
        Rat c = 0;
        for (int j = i + 1; j < f.m; ++j) c -= f.l[j][i] * Rat(w[j]);
        return c;
    }

    void level(int i, std::vector<Int>& w, const Rat& remaining,
               std::vector<std::vector<Int>>& out) const {
        Rat c = center(i, w);
        Int start(detail::round_half_to_zero(c));
        for (int dir = 0; dir < 2; ++dir) {
            Int wi = dir == 0 ? start : start + 1;
            while (true) {
                Rat diff = Rat(wi) - c;
                Rat term = f.d[i] * diff * diff;
                if (term > remaining) break;
                w[i] = wi;
                if (i == 0) {
                    if (term == remaining) out.push_back(w);
                } else {
                    level(i - 1, w, remaining - term, out);
                }
                wi += dir == 0 ? -1 : 1;
            }
        }
    }
};

std::vector<KElem> to_coords(const std::vector<Int>& w, int n, const KElem& g) {
    std::vector<KElem> x(n);
    for (int i = 0; i < n; ++i) x[i] = KElem(g.delta, 2 * w[i] + g.u * w[n + i], w[n + i]);
    return x;
}

bool coord_less(const std::vector<KElem>& a, const std::vector<KElem>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].u != b[i].u) return a[i].u < b[i].u;
        if (a[i].v != b[i].v) return a[i].v < b[i].v;
    }
    return false;
}

RepSolutionSet finish(const HermLattice& l, const Int& t, std::vector<std::vector<Int>> raw) {
    int n = l.space.n;
    KElem g = l.space.ring.generator();
    RepSolutionSet s;
    s.t = t;
    s.vectors.reserve(raw.size());
    for (const auto& w : raw) s.vectors.push_back(to_coords(w, n, g));
    std::sort(s.vectors.begin(), s.vectors.end(), coord_less);
    s.count = static_cast<long>(s.vectors.size());
    return s;
}

Ldl prepare(const HermLattice& l, const Int& t) {
    if (!is_positive_definite(l)) throw NotDefinite();
    (void)t;
    return Ldl::from(trace_sym_form(l).S);
}

}  // namespace

RepSolutionSet enumerate_vectors_serial(const HermLattice& l, const Int& t) {
    if (!is_positive_definite(l)) throw NotDefinite();
    if (t <= 0) return finish(l, t, {});
    Ldl f = prepare(l, t);
    Search srch{f, Rat(2 * t)};
    std::vector<std::vector<Int>> raw;
    std::vector<Int> w(f.m, 0);
    srch.level(f.m - 1, w, srch.target, raw);
    // drop the zero vector (t > 0 makes it infeasible, but guard anyway)
    raw.erase(std::remove(raw.begin(), raw.end(), std::vector<Int>(f.m, 0)), raw.end());
    return finish(l, t, std::move(raw));
}

RepSolutionSet enumerate_vectors(const HermLattice& l, const Int& t) {
    if (!is_positive_definite(l)) throw NotDefinite();
    if (t <= 0) return finish(l, t, {});
    Ldl f = prepare(l, t);
    Search srch{f, Rat(2 * t)};
    int top = f.m - 1;

    // feasible values of the top coordinate: d_top w^2 <= 2t
    std::vector<Int> tops;
    for (Int w = 0;; ++w) {
        if (f.d[top] * Rat(w) * Rat(w) > srch.target) break;
        tops.push_back(w);
        if (w != 0) tops.push_back(-w);
    }

    std::vector<std::vector<std::vector<Int>>> parts(tops.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(tops.size()); ++idx) {
        std::vector<Int> w(f.m, 0);
        w[top] = tops[idx];
        Rat used = f.d[top] * Rat(tops[idx]) * Rat(tops[idx]);
        if (top == 0) {
            if (used == srch.target) parts[idx].push_back(w);
        } else {
            srch.level(top - 1, w, srch.target - used, parts[idx]);
        }
    }

    std::vector<std::vector<Int>> raw;
    for (auto& p : parts)
        for (auto& w : p) raw.push_back(std::move(w));
    raw.erase(std::remove(raw.begin(), raw.end(), std::vector<Int>(f.m, 0)), raw.end());
    return finish(l, t, std::move(raw));
}

Int rep_count(const HermLattice& l, const Int& t) { return enumerate_vectors(l, t).count; }

Rat herm_norm(const HermLattice& l, const std::vector<KRat>& x) {
    if (x.size() != static_cast<size_t>(l.space.n)) throw Error("vector dimension mismatch");
    ExactMatrix gr = lattice_gram(l);
    KRat acc(l.space.ring.delta, 0, 0);
    for (int i = 0; i < l.space.n; ++i)
        for (int j = 0; j < l.space.n; ++j)
            acc = kr_add(acc, kr_mul(kr_mul(x[i], gr.at(i, j)), kr_conj(x[j])));
    if (acc.b != 0) throw Error("hermitian norm not rational");
    return acc.a;
}

HermLattice perp_lattice(const HermLattice& l, const std::vector<KRat>& x) {
    int n = l.space.n;
    if (x.size() != static_cast<size_t>(n)) throw Error("vector dimension mismatch");
    for (const auto& c : x)
        if (!kr_is_integral(c)) throw NotInLattice();
    if (herm_norm(l, x) == 0) throw IsotropicVector();

    // kernel of y -> h(y, x) = y^T (Gr conj(x)), saturated via HNF
    ExactMatrix gr = lattice_gram(l);
    ExactMatrix row(RingTag::Kt(l.space.ring.delta), 1, n);
    for (int j = 0; j < n; ++j) {
        KRat acc(l.space.ring.delta, 0, 0);
        for (int i = 0; i < n; ++i) acc = kr_add(acc, kr_mul(gr.at(j, i), kr_conj(x[i])));
        row.at(0, j) = acc;
    }
    // clear denominators so the HNF applies; the kernel is unchanged
    Int s = 1;
    for (const auto& c : row.e) {
        Int u, v, den;
        kr_half_coords(c, u, v, den);
        s = lcm(s, 2 * den);
    }
    ExactMatrix cleared(RingTag::OKt(l.space.ring.delta), 1, n);
    cleared.e = mat_scalar_mul(row, KRat(Rat(s))).e;
    HnfResult h = hnf(cleared);

    ExactMatrix kern(RingTag::Kt(l.space.ring.delta), n, n - 1);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < n; ++i) kern.at(i, j - 1) = h.T.at(i, j);

    // restricted Gram on the kernel basis
    ExactMatrix sub = mat_mul(mat_mul(mat_transpose(kern), gr), mat_conj(kern));
    return standard_lattice(l.space.ring, sub);
}

bool dx_nonempty(const HermLattice& l, const std::vector<KRat>& x) {
    auto sig = signature(l);
    if (sig.second != 1) throw WrongSignature();
    for (const auto& c : x)
        if (!kr_is_integral(c)) throw NotInLattice();
    Rat q = herm_norm(l, x);
    if (q == 0) throw IsotropicVector();
    return q > 0;
}

}  // namespace hermlat
