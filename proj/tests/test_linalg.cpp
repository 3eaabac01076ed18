#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hermlat/linalg.hpp"

using namespace hermlat;

namespace {

ExactMatrix mat_from_ints(RingTag tag, int rows, int cols, std::initializer_list<long> vals) {
    ExactMatrix m(tag, rows, cols);
    auto it = vals.begin();
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m.at(i, j) = KRat(tag.delta, Rat(*it++), 0);
    return m;
}

KRat elem(int delta, long u, long v) { return kr_from_elem(KElem(delta, u, v)); }

// Random unimodular matrix: product of elementary column operations.
ExactMatrix random_unimodular(std::mt19937& rng, RingTag tag, int n, int steps = 12) {
    std::uniform_int_distribution<int> idx(0, n - 1), coef(-2, 2);
    ExactMatrix t = ExactMatrix::identity(tag, n);
    RingDesc ring = tag.quadratic() ? make_ring(tag.delta) : RingDesc{};
    for (int s = 0; s < steps; ++s) {
        int i = idx(rng), j = idx(rng);
        if (i == j) continue;
        KRat c(tag.delta, Rat(coef(rng)), 0);
        if (tag.quadratic() && coef(rng) > 0) c = kr_mul(c, kr_from_elem(ring.generator()));
        for (int r = 0; r < n; ++r) t.at(r, j) = kr_add(t.at(r, j), kr_mul(c, t.at(r, i)));
    }
    return t;
}

ExactMatrix random_integral_matrix(std::mt19937& rng, RingTag tag, int rows, int cols, int bound) {
    std::uniform_int_distribution<int> d(-bound, bound);
    ExactMatrix m(tag, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (tag.quadratic()) {
                int u = d(rng), v = d(rng);
                if ((u - v * tag.delta) % 2 != 0) ++u;
                m.at(i, j) = elem(tag.delta, u, v);
            } else {
                m.at(i, j) = KRat(0, Rat(d(rng)), 0);
            }
        }
    return m;
}

bool is_unit_det(const ExactMatrix& m) {
    KRat d = det(m);
    return kr_norm(d) == 1 || kr_norm(d) == -1;
}

}  // namespace

TEST_CASE("hnf worked examples") {
    // Gaussian 1x2: [2, 1+i] -> [1+i, 0]
    ExactMatrix m(RingTag::OKt(-4), 1, 2);
    m.at(0, 0) = elem(-4, 4, 0);
    m.at(0, 1) = elem(-4, 2, 1);
    HnfResult h = hnf(m);
    CHECK(h.H.at(0, 0) == elem(-4, 2, 1));
    CHECK(h.H.at(0, 1).is_zero());
    CHECK(h.H == mat_mul(m, h.T));
    CHECK(is_unit_det(h.T));

    // identity fixed
    ExactMatrix id = ExactMatrix::identity(RingTag::OKt(-3), 3);
    CHECK(hnf(id).H == id);

    // Z case: determinant magnitude preserved
    ExactMatrix z = mat_from_ints(RingTag::Zt(), 2, 2, {2, 4, 6, 8});
    HnfResult hz = hnf(z);
    Rat dz = det(hz.H).a;
    if (dz < 0) dz = -dz;
    CHECK(dz == 8);
}

TEST_CASE("hnf rejects non-integral entries") {
    ExactMatrix m(RingTag::Qt(), 1, 1);
    m.at(0, 0) = KRat(0, Rat(1, 2), 0);
    CHECK_THROWS_AS(hnf(m), NonIntegralEntries);
}

TEST_CASE("snf worked examples") {
    // Eisenstein [[3, pi], [-pi, 0]] -> divisors (pi, pi)
    ExactMatrix m(RingTag::OKt(-3), 2, 2);
    m.at(0, 0) = elem(-3, 6, 0);
    m.at(0, 1) = elem(-3, 0, 2);
    m.at(1, 0) = elem(-3, 0, -2);
    SnfResult s = snf(m);
    CHECK(s.divisors.size() == 2);
    CHECK(s.divisors[0] == KElem(-3, 0, 2));
    CHECK(s.divisors[1] == KElem(-3, 0, 2));

    // 1x1
    ExactMatrix p(RingTag::OKt(-3), 1, 1);
    p.at(0, 0) = elem(-3, 0, 2);
    CHECK(snf(p).divisors[0] == KElem(-3, 0, 2));

    // Z: [[2,4],[6,8]] -> (2, 4)
    SnfResult sz = snf(mat_from_ints(RingTag::Zt(), 2, 2, {2, 4, 6, 8}));
    CHECK(kr_from_elem(sz.divisors[0]).a == 2);
    CHECK(kr_from_elem(sz.divisors[1]).a == 4);
}

TEST_CASE("snf contract: UMV diagonal, divisibility, determinant") {
    std::mt19937 rng(21);
    for (int delta : {-3, -4, -7, -8, -11}) {
        RingTag tag = RingTag::OKt(delta);
        for (int it = 0; it < 20; ++it) {
            ExactMatrix m = random_integral_matrix(rng, tag, 3, 3, 6);
            SnfResult s = snf(m);
            ExactMatrix d = mat_mul(mat_mul(s.U, m), s.V);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    if (i != j) CHECK(d.at(i, j).is_zero());
            for (int i = 0; i < 3; ++i) CHECK(d.at(i, i) == kr_from_elem(s.divisors[i]));
            CHECK(is_unit_det(s.U));
            CHECK(is_unit_det(s.V));
            // d1 | d2 | d3
            for (int i = 0; i + 1 < 3; ++i) {
                if (s.divisors[i + 1].is_zero()) continue;
                CHECK(!s.divisors[i].is_zero());
                CHECK(kr_is_integral(kr_div(kr_from_elem(s.divisors[i + 1]), kr_from_elem(s.divisors[i]))));
            }
            // product of divisors = det up to a unit
            KRat dm = det(m);
            if (!dm.is_zero()) {
                KRat prod(delta, 1, 0);
                for (const auto& dv : s.divisors) prod = kr_mul(prod, kr_from_elem(dv));
                KRat ratio = kr_div(dm, prod);
                CHECK(kr_is_integral(ratio));
                CHECK(kr_norm(ratio) == 1);
            }
        }
    }
}

TEST_CASE("snf divisors invariant under unimodular multiplication") {
    std::mt19937 rng(31);
    for (int delta : {-3, -4}) {
        RingTag tag = RingTag::OKt(delta);
        ExactMatrix m = random_integral_matrix(rng, tag, 3, 3, 5);
        SnfResult base = snf(m);
        for (int it = 0; it < 50; ++it) {
            ExactMatrix a = random_unimodular(rng, tag, 3);
            ExactMatrix b = random_unimodular(rng, tag, 3);
            SnfResult s = snf(mat_mul(mat_mul(a, m), b));
            CHECK(s.divisors == base.divisors);
        }
    }
    // Z case too
    ExactMatrix z = mat_from_ints(RingTag::Zt(), 3, 3, {2, 0, 1, 0, 6, 2, 4, 2, 10});
    SnfResult base = snf(z);
    for (int it = 0; it < 50; ++it) {
        ExactMatrix a = random_unimodular(rng, RingTag::Zt(), 3);
        ExactMatrix b = random_unimodular(rng, RingTag::Zt(), 3);
        CHECK(snf(mat_mul(mat_mul(a, z), b)).divisors == base.divisors);
    }
}

TEST_CASE("hnf and snf idempotent on their outputs") {
    std::mt19937 rng(77);
    for (int delta : {-3, -4, -8}) {
        RingTag tag = RingTag::OKt(delta);
        for (int it = 0; it < 10; ++it) {
            ExactMatrix m = random_integral_matrix(rng, tag, 3, 4, 5);
            HnfResult h = hnf(m);
            CHECK(hnf(h.H).H == h.H);
            ExactMatrix sq = random_integral_matrix(rng, tag, 3, 3, 5);
            SnfResult s = snf(sq);
            ExactMatrix d = mat_mul(mat_mul(s.U, sq), s.V);
            SnfResult s2 = snf(d);
            CHECK(s2.divisors == s.divisors);
        }
    }
}

TEST_CASE("det worked examples") {
    ExactMatrix g(RingTag::OKt(-4), 2, 2);
    g.at(0, 0) = elem(-4, 4, 0);
    g.at(0, 1) = elem(-4, 2, 1);
    g.at(1, 0) = elem(-4, 2, -1);
    g.at(1, 1) = elem(-4, 4, 0);
    CHECK(det(g) == elem(-4, 4, 0));  // 2*2 - norm(1+i) = 2

    ExactMatrix e(RingTag::OKt(-3), 2, 2);
    e.at(0, 0) = elem(-3, 6, 0);
    e.at(0, 1) = elem(-3, 0, 2);
    e.at(1, 0) = elem(-3, 0, -2);
    CHECK(det(e) == elem(-3, -6, 0));  // -3
}

TEST_CASE("inverse and solve") {
    CHECK(inverse(ExactMatrix::identity(RingTag::Kt(-3), 4)) == ExactMatrix::identity(RingTag::Kt(-3), 4));

    std::mt19937 rng(3);
    for (int delta : {-3, -4, -11}) {
        RingTag tag = RingTag::OKt(delta);
        for (int it = 0; it < 10; ++it) {
            ExactMatrix m = random_integral_matrix(rng, tag, 3, 3, 5);
            if (det(m).is_zero()) continue;
            ExactMatrix mi = inverse(m);
            CHECK(mat_mul(m, mi) == ExactMatrix::identity(RingTag::Kt(delta), 3));
            std::vector<KRat> rhs = {elem(delta, 2, 0), elem(delta, 0, 2), elem(delta, 4, 0)};
            auto x = solve(m, rhs);
            for (int i = 0; i < 3; ++i) {
                KRat acc(delta, 0, 0);
                for (int j = 0; j < 3; ++j) acc = kr_add(acc, kr_mul(m.at(i, j), x[j]));
                CHECK(acc == rhs[i]);
            }
        }
    }
    ExactMatrix sing(RingTag::Zt(), 2, 2);
    CHECK_THROWS_AS(inverse(sing), SingularMatrix);
}

TEST_CASE("congruence diagonalization worked examples") {
    // [[2, 1+i], [1-i, 2]] -> diag (2, 1), signature (2, 0)
    ExactMatrix g(RingTag::OKt(-4), 2, 2);
    g.at(0, 0) = elem(-4, 4, 0);
    g.at(0, 1) = elem(-4, 2, 1);
    g.at(1, 0) = elem(-4, 2, -1);
    g.at(1, 1) = elem(-4, 4, 0);
    CongruenceResult c = congruence_diagonalize(g);
    CHECK(c.pos == 2);
    CHECK(c.neg == 0);
    CHECK(c.diag[0] == 2);
    CHECK(c.diag[1] == 1);

    // [[3, pi], [-pi, 0]] -> diag (3, -1), signature (1, 1)
    ExactMatrix e(RingTag::OKt(-3), 2, 2);
    e.at(0, 0) = elem(-3, 6, 0);
    e.at(0, 1) = elem(-3, 0, 2);
    e.at(1, 0) = elem(-3, 0, -2);
    CongruenceResult ce = congruence_diagonalize(e);
    CHECK(ce.pos == 1);
    CHECK(ce.neg == 1);
    CHECK(ce.diag[0] == 3);
    CHECK(ce.diag[1] == -1);

    // already diagonal
    ExactMatrix d = ExactMatrix::identity(RingTag::OKt(-3), 5);
    d.at(4, 4) = kr_neg(d.at(4, 4));
    CongruenceResult cd = congruence_diagonalize(d);
    CHECK(cd.pos == 4);
    CHECK(cd.neg == 1);

    ExactMatrix ns(RingTag::OKt(-3), 2, 2);
    ns.at(0, 1) = elem(-3, 2, 0);
    CHECK_THROWS_AS(congruence_diagonalize(ns), NotHermitian);
}

TEST_CASE("P* G P is diagonal and signature is congruence invariant") {
    std::mt19937 rng(17);
    for (int delta : {-3, -4, -7}) {
        RingTag tag = RingTag::OKt(delta);
        for (int it = 0; it < 10; ++it) {
            ExactMatrix a = random_integral_matrix(rng, tag, 3, 3, 4);
            // hermitianize: g = a + a*
            ExactMatrix g = mat_add(a, mat_conj_transpose(a));
            CongruenceResult c = congruence_diagonalize(g);
            ExactMatrix pg = mat_mul(mat_mul(mat_conj_transpose(c.P), g), c.P);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j) {
                    if (i != j) CHECK(pg.at(i, j).is_zero());
                    else CHECK(pg.at(i, i) == KRat(delta, c.diag[i], 0));
                }
            // invariance under Q* G Q
            for (int trial = 0; trial < 20; ++trial) {
                ExactMatrix q = random_unimodular(rng, tag, 3);
                CongruenceResult c2 = congruence_diagonalize(mat_mul(mat_mul(mat_conj_transpose(q), g), q));
                CHECK(c2.pos == c.pos);
                CHECK(c2.neg == c.neg);
            }
        }
    }
}
