#include "hermlat/linalg.hpp"

#include <algorithm>

namespace hermlat {

bool ExactMatrix::operator==(const ExactMatrix& o) const {
    if (rows != o.rows || cols != o.cols) return false;
    for (size_t i = 0; i < e.size(); ++i)
        if (e[i] != o.e[i]) return false;
    return true;
}

ExactMatrix ExactMatrix::identity(RingTag tag, int n) {
    ExactMatrix m(tag, n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = KRat(tag.delta, 1, 0);
    return m;
}

namespace {

void check_shape(bool ok, const char* what) {
    if (!ok) throw Error(std::string("shape mismatch in ") + what);
}

RingTag join_tag(const RingTag& a, const RingTag& b) {
    if (a.delta != 0 && b.delta != 0 && a.delta != b.delta) throw MixedRings();
    RingTag t;
    t.delta = a.delta != 0 ? a.delta : b.delta;
    bool quad = a.quadratic() || b.quadratic();
    bool integral = a.integral() && b.integral();
    t.kind = quad ? (integral ? RingKind::OK : RingKind::K) : (integral ? RingKind::Z : RingKind::Q);
    return t;
}

}  // namespace

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b) {
    check_shape(a.rows == b.rows && a.cols == b.cols, "mat_add");
    ExactMatrix r(join_tag(a.tag, b.tag), a.rows, a.cols);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = kr_add(a.e[i], b.e[i]);
    return r;
}

ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b) {
    check_shape(a.rows == b.rows && a.cols == b.cols, "mat_sub");
    ExactMatrix r(join_tag(a.tag, b.tag), a.rows, a.cols);
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = kr_sub(a.e[i], b.e[i]);
    return r;
}

ExactMatrix mat_neg(const ExactMatrix& a) {
    ExactMatrix r = a;
    for (auto& x : r.e) x = kr_neg(x);
    return r;
}

ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b) {
    check_shape(a.cols == b.rows, "mat_mul");
    ExactMatrix r(join_tag(a.tag, b.tag), a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (int j = 0; j < b.cols; ++j)
                r.at(i, j) = kr_add(r.at(i, j), kr_mul(a.at(i, k), b.at(k, j)));
        }
    return r;
}

ExactMatrix mat_scalar_mul(const ExactMatrix& a, const KRat& s) {
    ExactMatrix r = a;
    r.tag = join_tag(a.tag, RingTag{RingKind::K, s.delta});
    for (auto& x : r.e) x = kr_mul(x, s);
    return r;
}

ExactMatrix mat_transpose(const ExactMatrix& a) {
    ExactMatrix r(a.tag, a.cols, a.rows);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < a.cols; ++j) r.at(j, i) = a.at(i, j);
    return r;
}

ExactMatrix mat_conj(const ExactMatrix& a) {
    ExactMatrix r = a;
    for (auto& x : r.e) x = kr_conj(x);
    return r;
}

ExactMatrix mat_conj_transpose(const ExactMatrix& a) { return mat_conj(mat_transpose(a)); }

bool mat_is_integral(const ExactMatrix& a) {
    for (const auto& x : a.e)
        if (!kr_is_integral(x)) return false;
    return true;
}

bool mat_is_hermitian(const ExactMatrix& a) {
    if (a.rows != a.cols) return false;
    for (int i = 0; i < a.rows; ++i)
        for (int j = i; j < a.cols; ++j)
            if (a.at(i, j) != kr_conj(a.at(j, i))) return false;
    return true;
}

// --- Euclidean scalar layer ------------------------------------------------

namespace {

// Canonical associate; for the rational integers this is the absolute value.
KElem canon(const KElem& a) {
    if (a.delta == 0) return a.u < 0 ? k_neg(a) : a;
    return canonical_associate(a);
}

bool divides(const KElem& d, const KElem& a) {
    if (d.is_zero()) return a.is_zero();
    return kr_is_integral(kr_div(kr_from_elem(a), kr_from_elem(d)));
}

KElem exact_div(const KElem& a, const KElem& d) {
    return kr_to_elem(kr_div(kr_from_elem(a), kr_from_elem(d)));
}

struct EuclMat {
    int delta;  // 0 for Z
    int rows, cols;
    std::vector<KElem> e;

    KElem& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const KElem& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    static EuclMat from(const ExactMatrix& m) {
        if (!mat_is_integral(m)) throw NonIntegralEntries();
        EuclMat r;
        r.delta = m.tag.quadratic() ? m.tag.delta : 0;
        r.rows = m.rows;
        r.cols = m.cols;
        r.e.reserve(m.e.size());
        for (const auto& x : m.e) {
            KRat y = x;
            y.delta = r.delta;
            r.e.push_back(kr_to_elem(y));
        }
        return r;
    }

    static EuclMat identity(int delta, int n) {
        EuclMat r;
        r.delta = delta;
        r.rows = r.cols = n;
        r.e.assign(static_cast<size_t>(n) * n, KElem(delta, 0, 0));
        for (int i = 0; i < n; ++i) r.at(i, i) = KElem(delta, 2, 0);
        return r;
    }

    ExactMatrix to_exact(RingTag tag) const {
        ExactMatrix m(tag, rows, cols);
        for (size_t i = 0; i < e.size(); ++i) m.e[i] = kr_from_elem(e[i]);
        return m;
    }

    void swap_cols(int a, int b) {
        if (a == b) return;
        for (int i = 0; i < rows; ++i) std::swap(at(i, a), at(i, b));
    }
    void swap_rows(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < cols; ++j) std::swap(at(a, j), at(b, j));
    }
    // col_j -= q * col_t
    void col_axpy(int j, const KElem& q, int t) {
        for (int i = 0; i < rows; ++i) at(i, j) = k_sub(at(i, j), k_mul(q, at(i, t)));
    }
    void row_axpy(int i, const KElem& q, int t) {
        for (int j = 0; j < cols; ++j) at(i, j) = k_sub(at(i, j), k_mul(q, at(t, j)));
    }
    void scale_col(int j, const KElem& u) {
        for (int i = 0; i < rows; ++i) at(i, j) = k_mul(at(i, j), u);
    }
    void scale_row(int i, const KElem& u) {
        for (int j = 0; j < cols; ++j) at(i, j) = k_mul(at(i, j), u);
    }
};

RingTag work_tag(const ExactMatrix& m) {
    return m.tag.quadratic() ? RingTag::OKt(m.tag.delta) : RingTag::Zt();
}

}  // namespace

// --- HNF -------------------------------------------------------------------

HnfResult hnf(const ExactMatrix& m) {
    EuclMat H = EuclMat::from(m);
    EuclMat T = EuclMat::identity(H.delta, H.cols);

    int pivot_col = 0;
    for (int row = 0; row < H.rows && pivot_col < H.cols; ++row) {
        // Gcd sweep across columns pivot_col..end in this row.
        while (true) {
            int best = -1;
            Rat best_norm;
            for (int j = pivot_col; j < H.cols; ++j) {
                if (H.at(row, j).is_zero()) continue;
                Rat n = k_norm(H.at(row, j));
                if (n < 0) n = -n;
                if (best < 0 || n < best_norm) {
                    best = j;
                    best_norm = n;
                }
            }
            if (best < 0) break;  // row has no pivot
            H.swap_cols(best, pivot_col);
            T.swap_cols(best, pivot_col);
            bool clean = true;
            for (int j = pivot_col + 1; j < H.cols; ++j) {
                if (H.at(row, j).is_zero()) continue;
                KElem q, r;
                euclid_divmod(H.at(row, j), H.at(row, pivot_col), q, r);
                H.col_axpy(j, q, pivot_col);
                T.col_axpy(j, q, pivot_col);
                if (!r.is_zero()) clean = false;
            }
            if (clean) break;
        }
        if (H.at(row, pivot_col).is_zero()) continue;  // next row, same pivot column

        KElem c = canon(H.at(row, pivot_col));
        if (c != H.at(row, pivot_col)) {
            KElem u = exact_div(c, H.at(row, pivot_col));
            H.scale_col(pivot_col, u);
            T.scale_col(pivot_col, u);
        }
        for (int j = 0; j < pivot_col; ++j) {
            if (H.at(row, j).is_zero()) continue;
            KElem q, r;
            euclid_divmod(H.at(row, j), H.at(row, pivot_col), q, r);
            H.col_axpy(j, q, pivot_col);
            T.col_axpy(j, q, pivot_col);
        }
        ++pivot_col;
    }

    RingTag tag = work_tag(m);
    return {H.to_exact(tag), T.to_exact(tag)};
}

// --- SNF -------------------------------------------------------------------

namespace {

// Clears row t and column t of A beyond the pivot, assuming some nonzero
// entry exists in the trailing block.  Updates U (rows) and V (cols).
void snf_pivot_step(EuclMat& A, EuclMat& U, EuclMat& V, int t) {
    while (true) {
        int bi = -1, bj = -1;
        Rat best_norm;
        for (int i = t; i < A.rows; ++i)
            for (int j = t; j < A.cols; ++j) {
                if (A.at(i, j).is_zero()) continue;
                Rat n = k_norm(A.at(i, j));
                if (n < 0) n = -n;
                if (bi < 0 || n < best_norm) {
                    bi = i;
                    bj = j;
                    best_norm = n;
                }
            }
        if (bi < 0) return;  // trailing block all zero
        A.swap_rows(bi, t);
        U.swap_rows(bi, t);
        A.swap_cols(bj, t);
        V.swap_cols(bj, t);

        bool clean = true;
        for (int i = t + 1; i < A.rows; ++i) {
            if (A.at(i, t).is_zero()) continue;
            KElem q, r;
            euclid_divmod(A.at(i, t), A.at(t, t), q, r);
            A.row_axpy(i, q, t);
            U.row_axpy(i, q, t);
            if (!r.is_zero()) clean = false;
        }
        for (int j = t + 1; j < A.cols; ++j) {
            if (A.at(t, j).is_zero()) continue;
            KElem q, r;
            euclid_divmod(A.at(t, j), A.at(t, t), q, r);
            A.col_axpy(j, q, t);
            V.col_axpy(j, q, t);
            if (!r.is_zero()) clean = false;
        }
        if (!clean) continue;
        bool zeroed = true;
        for (int i = t + 1; i < A.rows && zeroed; ++i)
            if (!A.at(i, t).is_zero()) zeroed = false;
        for (int j = t + 1; j < A.cols && zeroed; ++j)
            if (!A.at(t, j).is_zero()) zeroed = false;
        if (zeroed) return;
    }
}

}  // namespace

SnfResult snf(const ExactMatrix& m) {
    EuclMat A = EuclMat::from(m);
    EuclMat U = EuclMat::identity(A.delta, A.rows);
    EuclMat V = EuclMat::identity(A.delta, A.cols);
    int mn = std::min(A.rows, A.cols);

    for (int t = 0; t < mn; ++t) snf_pivot_step(A, U, V, t);

    // Repair divisibility violations d_i | d_{i+1}.
    bool again = true;
    while (again) {
        again = false;
        for (int i = 0; i + 1 < mn; ++i) {
            const KElem& di = A.at(i, i);
            const KElem& dj = A.at(i + 1, i + 1);
            if (di.is_zero() && !dj.is_zero()) {
                A.swap_rows(i, i + 1);
                U.swap_rows(i, i + 1);
                A.swap_cols(i, i + 1);
                V.swap_cols(i, i + 1);
                again = true;
                continue;
            }
            if (dj.is_zero() || divides(di, dj)) continue;
            // Fold d_{i+1} into column i and re-diagonalize the 2x2 corner.
            A.col_axpy(i, k_neg(KElem(A.delta, 2, 0)), i + 1);  // col_i += col_{i+1}
            V.col_axpy(i, k_neg(KElem(A.delta, 2, 0)), i + 1);
            snf_pivot_step(A, U, V, i);
            snf_pivot_step(A, U, V, i + 1);
            again = true;
        }
    }

    // Canonicalize the divisors.
    std::vector<KElem> divisors;
    divisors.reserve(mn);
    for (int i = 0; i < mn; ++i) {
        KElem d = A.at(i, i);
        KElem c = canon(d);
        if (!d.is_zero() && c != d) {
            KElem u = exact_div(c, d);
            A.scale_row(i, u);
            U.scale_row(i, u);
        }
        divisors.push_back(A.at(i, i));
    }

    RingTag tag = work_tag(m);
    return {U.to_exact(tag), V.to_exact(tag), std::move(divisors)};
}

// --- field linear algebra --------------------------------------------------

namespace {

RingTag field_tag(const ExactMatrix& m) {
    return m.tag.quadratic() ? RingTag::Kt(m.tag.delta) : RingTag::Qt();
}

}  // namespace

KRat det(const ExactMatrix& m) {
    if (m.rows != m.cols) throw Error("det: matrix not square");
    ExactMatrix a = m;
    int n = m.rows;
    KRat d(a.tag.delta, 1, 0);
    for (int t = 0; t < n; ++t) {
        int p = -1;
        for (int i = t; i < n; ++i)
            if (!a.at(i, t).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return KRat(a.tag.delta, 0, 0);
        if (p != t) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(t, j));
            d = kr_neg(d);
        }
        d = kr_mul(d, a.at(t, t));
        KRat inv = kr_inv(a.at(t, t));
        for (int i = t + 1; i < n; ++i) {
            if (a.at(i, t).is_zero()) continue;
            KRat f = kr_mul(a.at(i, t), inv);
            for (int j = t; j < n; ++j) a.at(i, j) = kr_sub(a.at(i, j), kr_mul(f, a.at(t, j)));
        }
    }
    return d;
}

int mat_rank(const ExactMatrix& m) {
    ExactMatrix a = m;
    int rank = 0;
    int row = 0;
    for (int col = 0; col < a.cols && row < a.rows; ++col) {
        int p = -1;
        for (int i = row; i < a.rows; ++i)
            if (!a.at(i, col).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        for (int j = 0; j < a.cols; ++j) std::swap(a.at(p, j), a.at(row, j));
        KRat inv = kr_inv(a.at(row, col));
        for (int i = row + 1; i < a.rows; ++i) {
            if (a.at(i, col).is_zero()) continue;
            KRat f = kr_mul(a.at(i, col), inv);
            for (int j = col; j < a.cols; ++j) a.at(i, j) = kr_sub(a.at(i, j), kr_mul(f, a.at(row, j)));
        }
        ++row;
        ++rank;
    }
    return rank;
}

std::vector<KRat> solve(const ExactMatrix& m, const std::vector<KRat>& rhs) {
    if (m.rows != m.cols || rhs.size() != static_cast<size_t>(m.rows)) throw Error("solve: bad shapes");
    int n = m.rows;
    ExactMatrix a = m;
    std::vector<KRat> b = rhs;
    for (int t = 0; t < n; ++t) {
        int p = -1;
        for (int i = t; i < n; ++i)
            if (!a.at(i, t).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) throw SingularMatrix();
        if (p != t) {
            for (int j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(t, j));
            std::swap(b[p], b[t]);
        }
        KRat inv = kr_inv(a.at(t, t));
        for (int i = 0; i < n; ++i) {
            if (i == t || a.at(i, t).is_zero()) continue;
            KRat f = kr_mul(a.at(i, t), inv);
            for (int j = t; j < n; ++j) a.at(i, j) = kr_sub(a.at(i, j), kr_mul(f, a.at(t, j)));
            b[i] = kr_sub(b[i], kr_mul(f, b[t]));
        }
    }
    std::vector<KRat> x(n);
    for (int i = 0; i < n; ++i) x[i] = kr_div(b[i], a.at(i, i));
    return x;
}

ExactMatrix inverse(const ExactMatrix& m) {
    if (m.rows != m.cols) throw Error("inverse: matrix not square");
    int n = m.rows;
    ExactMatrix a = m;
    ExactMatrix inv = ExactMatrix::identity(field_tag(m), n);
    for (int t = 0; t < n; ++t) {
        int p = -1;
        for (int i = t; i < n; ++i)
            if (!a.at(i, t).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) throw SingularMatrix();
        if (p != t)
            for (int j = 0; j < n; ++j) {
                std::swap(a.at(p, j), a.at(t, j));
                std::swap(inv.at(p, j), inv.at(t, j));
            }
        KRat pivinv = kr_inv(a.at(t, t));
        for (int j = 0; j < n; ++j) {
            a.at(t, j) = kr_mul(a.at(t, j), pivinv);
            inv.at(t, j) = kr_mul(inv.at(t, j), pivinv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == t || a.at(i, t).is_zero()) continue;
            KRat f = a.at(i, t);
            for (int j = 0; j < n; ++j) {
                a.at(i, j) = kr_sub(a.at(i, j), kr_mul(f, a.at(t, j)));
                inv.at(i, j) = kr_sub(inv.at(i, j), kr_mul(f, inv.at(t, j)));
            }
        }
    }
    return inv;
}

// --- congruence diagonalization -------------------------------------------

namespace {

struct Congr {
    ExactMatrix A;  // running Gram, A[p][q] = h(b_p, b_q), linear first slot
    ExactMatrix P;

    void swap_basis(int a, int b) {
        if (a == b) return;
        for (int j = 0; j < A.cols; ++j) std::swap(A.at(a, j), A.at(b, j));
        for (int i = 0; i < A.rows; ++i) std::swap(A.at(i, a), A.at(i, b));
        for (int i = 0; i < P.rows; ++i) std::swap(P.at(i, a), P.at(i, b));
    }

    // b_j += beta * b_t
    void add_basis(int j, const KRat& beta, int t) {
        for (int q = 0; q < A.cols; ++q) A.at(j, q) = kr_add(A.at(j, q), kr_mul(beta, A.at(t, q)));
        KRat cb = kr_conj(beta);
        for (int p = 0; p < A.rows; ++p) A.at(p, j) = kr_add(A.at(p, j), kr_mul(cb, A.at(p, t)));
        for (int i = 0; i < P.rows; ++i) P.at(i, j) = kr_add(P.at(i, j), kr_mul(beta, P.at(i, t)));
    }
};

}  // namespace

CongruenceResult congruence_diagonalize(const ExactMatrix& g) {
    if (!mat_is_hermitian(g)) throw NotHermitian();
    int n = g.rows;
    Congr c{g, ExactMatrix::identity(field_tag(g), n)};
    c.A.tag = field_tag(g);

    for (int t = 0; t < n; ++t) {
        if (c.A.at(t, t).is_zero()) {
            int dj = -1;
            for (int j = t + 1; j < n; ++j)
                if (!c.A.at(j, j).is_zero()) {
                    dj = j;
                    break;
                }
            if (dj >= 0) {
                c.swap_basis(t, dj);
            } else {
                // all remaining diagonal entries vanish: hyperbolic repair
                int bp = -1, bq = -1;
                for (int p = t; p < n && bp < 0; ++p)
                    for (int q = p + 1; q < n; ++q)
                        if (!c.A.at(p, q).is_zero()) {
                            bp = p;
                            bq = q;
                            break;
                        }
                if (bp < 0) break;  // zero block, remaining diagonal stays 0
                KRat one(c.A.tag.delta, 1, 0);
                c.add_basis(bp, one, bq);
                if (c.A.at(bp, bp).is_zero()) {
                    c.add_basis(bp, kr_neg(one), bq);  // undo
                    KRat sq(c.A.tag.delta, 0, 1);      // sqrt(D)
                    c.add_basis(bp, sq, bq);
                }
                c.swap_basis(t, bp);
            }
        }
        KRat piv = c.A.at(t, t);
        if (piv.is_zero()) continue;
        for (int j = t + 1; j < n; ++j) {
            if (c.A.at(j, t).is_zero()) continue;
            KRat f = kr_neg(kr_div(c.A.at(j, t), piv));
            c.add_basis(j, f, t);
        }
    }

    CongruenceResult res;
    // c.P satisfies P^T G conj(P) = diag; conjugate to meet the P* G P contract.
    res.P = mat_conj(c.P);
    res.diag.reserve(n);
    for (int i = 0; i < n; ++i) {
        const KRat& d = c.A.at(i, i);
        if (d.b != 0) throw Error("congruence: non-real diagonal");
        res.diag.push_back(d.a);
        if (d.a > 0) ++res.pos;
        else if (d.a < 0) ++res.neg;
        else ++res.zero;
    }
    return res;
}

}  // namespace hermlat
