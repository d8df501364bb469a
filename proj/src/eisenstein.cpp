#include "mirrorcert/eisenstein.hpp"

#include <stdexcept>

namespace mirrorcert {

std::string Eis::str() const {
    return a.get_str() + (sgn(b) >= 0 ? "+" : "") + b.get_str() + "w";
}

Eis unit6(int k) {
    static const Eis u[6] = {
        Eis{1, 0}, Eis{1, 1}, Eis{0, 1}, Eis{-1, 0}, Eis{-1, -1}, Eis{0, -1},
    };
    return u[((k % 6) + 6) % 6];
}

// Round n/d (d > 0) to the nearest integer, ties toward zero.
static mpz_class round_nearest(const mpz_class& n, const mpz_class& d) {
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    mpz_class twice = 2 * r;
    if (twice > d) return q + 1;
    if (twice < d) return q;
    return sgn(q) >= 0 ? q : q + 1; // tie: pick the quotient of smaller magnitude
}

EisDiv divmod_nearest(const Eis& x, const Eis& y) {
    if (y.is_zero()) throw std::domain_error("Eis division by zero");
    Eis num = x * y.conj();
    mpz_class den = y.norm();
    Eis q{round_nearest(num.a, den), round_nearest(num.b, den)};
    return {q, x - q * y};
}

std::optional<Eis> div_exact(const Eis& x, const Eis& y) {
    if (y.is_zero()) return x.is_zero() ? std::optional<Eis>(Eis{}) : std::nullopt;
    Eis num = x * y.conj();
    mpz_class den = y.norm();
    if (num.a % den != 0 || num.b % den != 0) return std::nullopt;
    return Eis{num.a / den, num.b / den};
}

bool divides(const Eis& y, const Eis& x) { return div_exact(x, y).has_value(); }

Eis gcd(Eis x, Eis y) {
    while (!y.is_zero()) {
        Eis r = divmod_nearest(x, y).rem;
        x = y;
        y = r;
    }
    return canonical_associate(x).value;
}

EisCanon canonical_associate(const Eis& x) {
    if (x.is_zero()) return {x, 0};
    Eis cur = x;
    for (int k = 0; k < 6; ++k) {
        if (cur.b >= 0 && cur.a > cur.b) return {cur, k};
        cur = cur * unit6(1);
    }
    throw std::logic_error("no canonical associate found");
}

Residue13 crt13(const Eis& x) {
    // 13 = p1 * conj(p1) with p1 = 3 - w; w = 3 mod p1 and w = 9 mod conj(p1).
    mpz_class u = (x.a + 3 * x.b) % 13, v = (x.a + 9 * x.b) % 13;
    if (u < 0) u += 13;
    if (v < 0) v += 13;
    return {(int)u.get_si(), (int)v.get_si()};
}

} // namespace mirrorcert
