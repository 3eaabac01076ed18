#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "hermlat/errors.hpp"

namespace hermlat {

using Int = mpz_class;
using Rat = mpq_class;

// Element (u + v*sqrt(D))/2 of k = Q(sqrt(D)).  Integral (lies in O_k)
// iff u = v*D (mod 2).
struct KElem {
    int delta = 0;
    Int u = 0;
    Int v = 0;

    KElem() = default;
    KElem(int delta, Int u, Int v) : delta(delta), u(std::move(u)), v(std::move(v)) {}

    bool is_zero() const { return u == 0 && v == 0; }
    bool operator==(const KElem& o) const { return delta == o.delta && u == o.u && v == o.v; }
    bool operator!=(const KElem& o) const { return !(*this == o); }
};

// Element a + b*sqrt(D) of k with rational coordinates.  delta == 0 marks a
// plain rational (b must then be zero).
struct KRat {
    int delta = 0;
    Rat a = 0;
    Rat b = 0;

    KRat() = default;
    KRat(const Rat& r) : delta(0), a(r) {}       // NOLINT(google-explicit-constructor)
    KRat(long n) : delta(0), a(n) {}             // NOLINT(google-explicit-constructor)
    KRat(int delta, Rat a, Rat b) : delta(delta), a(std::move(a)), b(std::move(b)) {}

    bool is_zero() const { return a == 0 && b == 0; }
    bool is_rational() const { return b == 0; }
    bool operator==(const KRat& o) const;
    bool operator!=(const KRat& o) const { return !(*this == o); }
};

struct RingDesc {
    int delta = 0;
    int unit_count = 0;

    // All units of O_k, canonical generator first.
    std::vector<KElem> units() const;
    // omega for D = -3, i for D = -4, (D + sqrt(D))/2 otherwise.
    KElem generator() const;
    KElem different_generator() const { return KElem(delta, 0, 2); }  // sqrt(D)
    std::vector<int> ramified_primes() const;

    KElem zero() const { return KElem(delta, 0, 0); }
    KElem one() const { return KElem(delta, 2, 0); }
};

// --- ring construction -----------------------------------------------------

RingDesc make_ring(int delta);
bool supported_discriminant(int delta);

// --- KElem arithmetic ------------------------------------------------------

KElem k_add(const KElem& a, const KElem& b);
KElem k_sub(const KElem& a, const KElem& b);
KElem k_neg(const KElem& a);
// Product; throws if the result leaves the half-coordinate representation
// (cannot happen when both factors are integral).
KElem k_mul(const KElem& a, const KElem& b);
KElem k_conj(const KElem& a);
Rat k_norm(const KElem& a);   // (u^2 - D v^2)/4
Int k_trace(const KElem& a);  // u

KElem k_from_int(int delta, const Int& n);
bool is_integral(const KElem& a);
bool is_unit(const KElem& a);

// --- KRat arithmetic -------------------------------------------------------

KRat kr_from_elem(const KElem& a);
KRat kr_add(const KRat& a, const KRat& b);
KRat kr_sub(const KRat& a, const KRat& b);
KRat kr_neg(const KRat& a);
KRat kr_mul(const KRat& a, const KRat& b);
KRat kr_div(const KRat& a, const KRat& b);
KRat kr_inv(const KRat& a);
KRat kr_conj(const KRat& a);
Rat kr_norm(const KRat& a);
Rat kr_trace(const KRat& a);

bool kr_is_integral(const KRat& a);  // lies in O_k (or Z when delta == 0)
KElem kr_to_elem(const KRat& a);     // requires kr_is_integral
// Canonical half-coordinates (u, v, den) with value (u + v sqrt(D))/(2 den),
// den > 0 minimal.
void kr_half_coords(const KRat& a, Int& u, Int& v, Int& den);

// --- Euclidean structure ---------------------------------------------------

// a = q b + r with norm(r) < norm(b).  Coordinate rounding, halves toward zero.
void euclid_divmod(const KElem& a, const KElem& b, KElem& q, KElem& r);

// Generator of the ideal (a, b), canonical associate.
KElem k_gcd(const KElem& a, const KElem& b);

// Among the associates of a: smallest trace >= 0, ties broken by
// lexicographically maximal (u, v).
KElem canonical_associate(const KElem& a);

// Canonical generator pi_p with norm(pi_p) = p, for p | D prime.
KElem ramified_prime(const RingDesc& ring, int p);

// --- text syntax -----------------------------------------------------------

// "u/2+v/2*sqrt(D)" reduced form, e.g. "1", "-1/2+1/2*sqrt(-3)", "sqrt(-4)".
std::string k_to_string(const KElem& a);
std::string kr_to_string(const KRat& a);
// Parses the grammar above plus "pi" terms bound to the ring's ramified
// prime (each supported ring has exactly one).
KRat kr_parse(int delta, const std::string& text);

namespace detail {
// Nearest integer, halves toward zero.
Int round_half_to_zero(const Rat& q);
}  // namespace detail

}  // namespace hermlat
