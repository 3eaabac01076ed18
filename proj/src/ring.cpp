#include "hermlat/ring.hpp"

#include <algorithm>
#include <cctype>

namespace hermlat {

namespace {

void check_same_ring(int da, int db) {
    if (da != db) throw MixedRings();
}

// Parity condition u = v*D (mod 2).
bool half_parity_ok(int delta, const Int& u, const Int& v) {
    Int diff = u - v * delta;
    return mpz_even_p(diff.get_mpz_t());
}

}  // namespace

bool supported_discriminant(int delta) {
    return delta == -3 || delta == -4 || delta == -7 || delta == -8 || delta == -11;
}

RingDesc make_ring(int delta) {
    if (!supported_discriminant(delta)) throw UnsupportedDiscriminant("unsupported discriminant " + std::to_string(delta));
    RingDesc r;
    r.delta = delta;
    r.unit_count = (delta == -3) ? 6 : (delta == -4) ? 4 : 2;
    return r;
}

std::vector<KElem> RingDesc::units() const {
    std::vector<KElem> us;
    us.push_back(one());
    us.push_back(k_neg(one()));
    if (delta == -3) {
        KElem w = generator();                 // omega
        KElem w2 = k_mul(w, w);                // omega^2
        us.push_back(w);
        us.push_back(k_neg(w));
        us.push_back(w2);
        us.push_back(k_neg(w2));
    } else if (delta == -4) {
        KElem i = generator();
        us.push_back(i);
        us.push_back(k_neg(i));
    }
    return us;
}

KElem RingDesc::generator() const {
    if (delta == -3) return KElem(delta, -1, 1);  // omega = (-1 + sqrt(-3))/2
    if (delta == -4) return KElem(delta, 0, 1);   // i = sqrt(-4)/2
    return KElem(delta, delta, 1);                // (D + sqrt(D))/2
}

std::vector<int> RingDesc::ramified_primes() const {
    switch (delta) {
        case -3: return {3};
        case -4: return {2};
        case -7: return {7};
        case -8: return {2};
        case -11: return {11};
        default: return {};
    }
}

// --- KElem arithmetic ------------------------------------------------------

KElem k_add(const KElem& a, const KElem& b) {
    check_same_ring(a.delta, b.delta);
    return KElem(a.delta, a.u + b.u, a.v + b.v);
}

KElem k_sub(const KElem& a, const KElem& b) {
    check_same_ring(a.delta, b.delta);
    return KElem(a.delta, a.u - b.u, a.v - b.v);
}

KElem k_neg(const KElem& a) { return KElem(a.delta, -a.u, -a.v); }

KElem k_mul(const KElem& a, const KElem& b) {
    check_same_ring(a.delta, b.delta);
    // ((u1+v1 s)/2)((u2+v2 s)/2) = (u1 u2 + v1 v2 D + (u1 v2 + u2 v1) s)/4
    Int uu = a.u * b.u + a.v * b.v * a.delta;
    Int vv = a.u * b.v + b.u * a.v;
    if (mpz_odd_p(uu.get_mpz_t()) || mpz_odd_p(vv.get_mpz_t()))
        throw Error("k_mul: product leaves half-coordinate representation");
    return KElem(a.delta, uu / 2, vv / 2);
}

KElem k_conj(const KElem& a) { return KElem(a.delta, a.u, -a.v); }

Rat k_norm(const KElem& a) {
    Rat n(a.u * a.u - Int(a.delta) * a.v * a.v);
    n /= 4;
    n.canonicalize();
    return n;
}

Int k_trace(const KElem& a) { return a.u; }

KElem k_from_int(int delta, const Int& n) { return KElem(delta, 2 * n, 0); }

bool is_integral(const KElem& a) { return half_parity_ok(a.delta, a.u, a.v); }

bool is_unit(const KElem& a) { return is_integral(a) && k_norm(a) == 1; }

// --- KRat ------------------------------------------------------------------

bool KRat::operator==(const KRat& o) const {
    if (a != o.a || b != o.b) return false;
    // Rationals compare equal regardless of the carried delta tag.
    if (b == 0) return true;
    return delta == o.delta;
}

KRat kr_from_elem(const KElem& e) {
    Rat a(e.u), b(e.v);
    a /= 2;
    b /= 2;
    a.canonicalize();
    b.canonicalize();
    return KRat(e.delta, a, b);
}

namespace {
int join_delta(const KRat& a, const KRat& b) {
    if (a.delta == b.delta) return a.delta;
    if (a.delta == 0 && a.b == 0) return b.delta;
    if (b.delta == 0 && b.b == 0) return a.delta;
    throw MixedRings();
}
}  // namespace

KRat kr_add(const KRat& a, const KRat& b) {
    int d = join_delta(a, b);
    return KRat(d, a.a + b.a, a.b + b.b);
}

KRat kr_sub(const KRat& a, const KRat& b) {
    int d = join_delta(a, b);
    return KRat(d, a.a - b.a, a.b - b.b);
}

KRat kr_neg(const KRat& a) { return KRat(a.delta, -a.a, -a.b); }

KRat kr_mul(const KRat& a, const KRat& b) {
    int d = join_delta(a, b);
    return KRat(d, a.a * b.a + a.b * b.b * d, a.a * b.b + a.b * b.a);
}

KRat kr_conj(const KRat& a) { return KRat(a.delta, a.a, -a.b); }

Rat kr_norm(const KRat& a) { return a.a * a.a - a.b * a.b * a.delta; }

Rat kr_trace(const KRat& a) { return 2 * a.a; }

KRat kr_inv(const KRat& a) {
    if (a.is_zero()) throw DivisionByZero();
    Rat n = kr_norm(a);
    return KRat(a.delta, a.a / n, -a.b / n);
}

KRat kr_div(const KRat& a, const KRat& b) { return kr_mul(a, kr_inv(b)); }

bool kr_is_integral(const KRat& a) {
    Rat u2 = 2 * a.a, v2 = 2 * a.b;
    if (u2.get_den() != 1 || v2.get_den() != 1) return false;
    if (a.delta == 0) return a.b == 0 && mpz_even_p(u2.get_num().get_mpz_t());
    return half_parity_ok(a.delta, u2.get_num(), v2.get_num());
}

KElem kr_to_elem(const KRat& a) {
    if (!kr_is_integral(a)) throw NonIntegralEntries("kr_to_elem: not integral");
    Rat u2 = 2 * a.a, v2 = 2 * a.b;
    return KElem(a.delta, u2.get_num(), v2.get_num());
}

void kr_half_coords(const KRat& a, Int& u, Int& v, Int& den) {
    Rat u2 = 2 * a.a, v2 = 2 * a.b;
    Int d;
    mpz_lcm(d.get_mpz_t(), u2.get_den().get_mpz_t(), v2.get_den().get_mpz_t());
    u = Rat(u2 * d).get_num();
    v = Rat(v2 * d).get_num();
    den = d;
}

// --- Euclidean structure ---------------------------------------------------

namespace detail {

Int round_half_to_zero(const Rat& q) {
    Rat t = q + Rat(1, 2);
    Int n;
    mpz_fdiv_q(n.get_mpz_t(), t.get_num().get_mpz_t(), t.get_den().get_mpz_t());
    if (t == Rat(n) && q > 0) n -= 1;  // exact half, pull toward zero
    return n;
}

}  // namespace detail

void euclid_divmod(const KElem& a, const KElem& b, KElem& q, KElem& r) {
    check_same_ring(a.delta, b.delta);
    if (b.is_zero()) throw DivisionByZero();
    KRat c = kr_div(kr_from_elem(a), kr_from_elem(b));
    // c = x + y sqrt(D); quotient (u0 + v0 sqrt(D))/2 in O_k nearest to c.
    Int v0 = detail::round_half_to_zero(2 * c.b);
    Int u0;
    Int par = v0 * a.delta;
    if (mpz_odd_p(par.get_mpz_t())) {
        u0 = 2 * detail::round_half_to_zero(c.a - Rat(1, 2)) + 1;
    } else {
        u0 = 2 * detail::round_half_to_zero(c.a);
    }
    q = KElem(a.delta, u0, v0);
    r = k_sub(a, k_mul(q, b));
}

KElem canonical_associate(const KElem& a) {
    if (a.is_zero()) return a;
    RingDesc ring = make_ring(a.delta);
    std::vector<KElem> assoc;
    for (const KElem& u : ring.units()) assoc.push_back(k_mul(a, u));
    // Positive rational representative wins, then positive multiple of sqrt(D),
    // then smallest-trace-first among trace >= 0 with lexicographic tie-break.
    for (const KElem& c : assoc)
        if (c.v == 0 && c.u > 0) return c;
    for (const KElem& c : assoc)
        if (c.u == 0 && c.v > 0) return c;
    KElem best = a;
    bool have = false;
    for (const KElem& cand : assoc) {
        if (k_trace(cand) < 0) continue;
        if (!have) {
            best = cand;
            have = true;
            continue;
        }
        Int tc = k_trace(cand), tb = k_trace(best);
        if (tc < tb || (tc == tb && (cand.u > best.u || (cand.u == best.u && cand.v > best.v))))
            best = cand;
    }
    return best;
}

KElem k_gcd(const KElem& a, const KElem& b) {
    if (!is_integral(a) || !is_integral(b)) throw NonIntegralEntries("gcd: operands must be integral");
    KElem x = a, y = b;
    while (!y.is_zero()) {
        KElem q, r;
        euclid_divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return canonical_associate(x);
}

KElem ramified_prime(const RingDesc& ring, int p) {
    if (p <= 1 || ring.delta % p != 0) throw NotRamified("prime " + std::to_string(p) + " is not ramified");
    // Tiny search for an element of norm p, then normalize.
    for (long u = 0; u <= 2L * p; ++u) {
        for (long v = 0; v <= 2L * p; ++v) {
            KElem cand(ring.delta, u, v);
            if (is_integral(cand) && k_norm(cand) == p) return canonical_associate(cand);
        }
    }
    throw NotRamified("no element of norm " + std::to_string(p));
}

// --- text syntax -----------------------------------------------------------

namespace {

std::string rat_str(const Rat& r) {
    std::string s = r.get_num().get_str();
    if (r.get_den() != 1) s += "/" + r.get_den().get_str();
    return s;
}

}  // namespace

std::string kr_to_string(const KRat& a) {
    if (a.is_zero()) return "0";
    std::string s;
    if (a.a != 0) s = rat_str(a.a);
    if (a.b != 0) {
        Rat c = a.b;
        std::string term;
        if (c == 1) term = "sqrt(" + std::to_string(a.delta) + ")";
        else if (c == -1) term = "-sqrt(" + std::to_string(a.delta) + ")";
        else term = rat_str(c) + "*sqrt(" + std::to_string(a.delta) + ")";
        if (!s.empty() && term[0] != '-') s += "+";
        s += term;
    }
    return s;
}

std::string k_to_string(const KElem& a) { return kr_to_string(kr_from_elem(a)); }

namespace {

struct Parser {
    const std::string& s;
    size_t pos = 0;
    int delta;

    explicit Parser(const std::string& s, int delta) : s(s), delta(delta) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    bool peek_word(const char* w) {
        skip_ws();
        return s.compare(pos, std::string(w).size(), w) == 0;
    }

    Rat number() {
        skip_ws();
        size_t start = pos;
        if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
        size_t digits = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == digits) throw ParseError("expected number at position " + std::to_string(start));
        Int num(s.substr(start, pos - start));
        Int den = 1;
        if (eat('/')) {
            skip_ws();
            size_t dstart = pos;
            while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
            if (pos == dstart) throw ParseError("expected denominator");
            den = Int(s.substr(dstart, pos - dstart));
            if (den == 0) throw ParseError("zero denominator");
        }
        Rat r(num, den);
        r.canonicalize();
        return r;
    }

    // term := coeff | coeff '*' radical | radical | "pi"  (with optional sign folded in)
    KRat term(int sign) {
        skip_ws();
        if (peek_word("pi")) {
            pos += 2;
            return with_sign(pi_value(), sign);
        }
        if (peek_word("sqrt")) return with_sign(radical(), sign);
        Rat c = number();
        if (eat('*')) {
            skip_ws();
            if (peek_word("pi")) {
                pos += 2;
                return with_sign(kr_mul(KRat(c), pi_value()), sign);
            }
            KRat rad = radical();
            return with_sign(kr_mul(KRat(c), rad), sign);
        }
        return with_sign(KRat(c), sign);
    }

    KRat radical() {
        skip_ws();
        if (!peek_word("sqrt")) throw ParseError("expected sqrt(...)");
        pos += 4;
        if (!eat('(')) throw ParseError("expected ( after sqrt");
        Rat d = number();
        if (!eat(')')) throw ParseError("expected ) in sqrt");
        if (delta == 0 || d != delta) throw ParseError("sqrt argument does not match ring discriminant");
        return KRat(delta, 0, 1);
    }

    KRat pi_value() {
        if (delta == 0) throw ParseError("pi literal needs a quadratic ring");
        RingDesc ring = make_ring(delta);
        return kr_from_elem(ramified_prime(ring, ring.ramified_primes().front()));
    }

    static KRat with_sign(const KRat& x, int sign) { return sign < 0 ? kr_neg(x) : x; }

    KRat parse() {
        KRat acc(delta, 0, 0);
        int sign = 1;
        if (eat('-')) sign = -1;
        else eat('+');
        acc = kr_add(acc, term(sign));
        while (true) {
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('+')) sign = 1;
            else if (eat('-')) sign = -1;
            else throw ParseError("unexpected character at position " + std::to_string(pos));
            acc = kr_add(acc, term(sign));
        }
        return acc;
    }
};

}  // namespace

KRat kr_parse(int delta, const std::string& text) {
    Parser p(text, delta);
    KRat r = p.parse();
    if (delta == 0 && r.b != 0) throw ParseError("quadratic element in rational context");
    return r;
}

}  // namespace hermlat
