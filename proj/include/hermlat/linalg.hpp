#pragma once

#include <utility>
#include <vector>

#include "hermlat/ring.hpp"

namespace hermlat {

enum class RingKind { Z, Q, OK, K };

struct RingTag {
    RingKind kind = RingKind::Z;
    int delta = 0;

    bool quadratic() const { return kind == RingKind::OK || kind == RingKind::K; }
    bool integral() const { return kind == RingKind::Z || kind == RingKind::OK; }
    bool operator==(const RingTag& o) const { return kind == o.kind && delta == o.delta; }

    static RingTag Zt() { return {RingKind::Z, 0}; }
    static RingTag Qt() { return {RingKind::Q, 0}; }
    static RingTag OKt(int delta) { return {RingKind::OK, delta}; }
    static RingTag Kt(int delta) { return {RingKind::K, delta}; }
};

struct ExactMatrix {
    RingTag tag;
    int rows = 0;
    int cols = 0;
    std::vector<KRat> e;

    ExactMatrix() = default;
    ExactMatrix(RingTag tag, int rows, int cols)
        : tag(tag), rows(rows), cols(cols), e(static_cast<size_t>(rows) * cols, KRat(tag.delta, 0, 0)) {}

    KRat& at(int i, int j) { return e[static_cast<size_t>(i) * cols + j]; }
    const KRat& at(int i, int j) const { return e[static_cast<size_t>(i) * cols + j]; }

    bool operator==(const ExactMatrix& o) const;
    bool operator!=(const ExactMatrix& o) const { return !(*this == o); }

    static ExactMatrix identity(RingTag tag, int n);
    static ExactMatrix zero(RingTag tag, int rows, int cols) { return ExactMatrix(tag, rows, cols); }
};

// --- basic algebra ---------------------------------------------------------

ExactMatrix mat_add(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_sub(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_mul(const ExactMatrix& a, const ExactMatrix& b);
ExactMatrix mat_neg(const ExactMatrix& a);
ExactMatrix mat_scalar_mul(const ExactMatrix& a, const KRat& s);
ExactMatrix mat_transpose(const ExactMatrix& a);
ExactMatrix mat_conj(const ExactMatrix& a);
ExactMatrix mat_conj_transpose(const ExactMatrix& a);

bool mat_is_integral(const ExactMatrix& a);
bool mat_is_hermitian(const ExactMatrix& a);  // symmetric when the ring is Z/Q

// --- canonical forms over Z or O_k ----------------------------------------

struct HnfResult {
    ExactMatrix H;  // H = M * T, column echelon, canonical pivots
    ExactMatrix T;  // unimodular
};

struct SnfResult {
    ExactMatrix U, V;           // U * M * V diagonal
    std::vector<KElem> divisors;  // d1 | d2 | ..., canonical associates, zeros trailing
};

HnfResult hnf(const ExactMatrix& m);
SnfResult snf(const ExactMatrix& m);

// --- exact field linear algebra -------------------------------------------

KRat det(const ExactMatrix& m);
std::vector<KRat> solve(const ExactMatrix& m, const std::vector<KRat>& rhs);
ExactMatrix inverse(const ExactMatrix& m);
int mat_rank(const ExactMatrix& m);

// Conjugate-transpose congruence diagonalization of a hermitian matrix:
// P^* G P diagonal with real rational entries.
struct CongruenceResult {
    std::vector<Rat> diag;
    ExactMatrix P;
    int pos = 0, neg = 0, zero = 0;
};

CongruenceResult congruence_diagonalize(const ExactMatrix& g);

}  // namespace hermlat
