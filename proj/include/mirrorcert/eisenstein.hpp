#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <gmpxx.h>

namespace mirrorcert {

// Eisenstein integer a + b*w, w = exp(2*pi*i/3), so w^2 = -1 - w.
struct Eis {
    mpz_class a, b;

    Eis() : a(0), b(0) {}
    Eis(long x) : a(x), b(0) {}
    Eis(mpz_class x, mpz_class y) : a(std::move(x)), b(std::move(y)) {}
    static Eis omega() { return {0, 1}; }
    static Eis omega_bar() { return {-1, -1}; }
    static Eis theta() { return {1, 2}; }     // w - conj(w) = 1 + 2w = i*sqrt(3)
    static Eis p() { return {2, 1}; }         // 2 + w, norm 3
    static Eis p1() { return {3, -1}; }        // 3 - w, norm 13
    bool operator==(const Eis& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Eis& o) const { return !(*this == o); }
    bool operator<(const Eis& o) const { return a < o.a || (a == o.a && b < o.b); }
    bool is_zero() const { return a == 0 && b == 0; }

    Eis operator+(const Eis& o) const { return {a + o.a, b + o.b}; }
    Eis operator-(const Eis& o) const { return {a - o.a, b - o.b}; }
    Eis operator-() const { return {-a, -b}; }
    Eis operator*(const Eis& o) const {
        mpz_class bd = b * o.b;
        return {a * o.a - bd, a * o.b + b * o.a - bd};
    }
    Eis& operator+=(const Eis& o) { a += o.a; b += o.b; return *this; }
    Eis& operator-=(const Eis& o) { a -= o.a; b -= o.b; return *this; }

    Eis conj() const { return {a - b, -b}; }
    mpz_class norm() const { return a * a - a * b + b * b; }
    bool is_unit() const { return norm() == 1; }
    std::string str() const;
};

// The six units, in rotation order: unit6(k) = (-w^2)^k rotates by 60 degrees.
Eis unit6(int k);

// Quotient with remainder of minimal norm: each coordinate of the exact
// quotient in Q(w) is rounded to the nearest integer, ties toward zero.
// Guarantees norm(rem) <= (3/4) norm(b).
struct EisDiv { Eis quot, rem; };
EisDiv divmod_nearest(const Eis& x, const Eis& y);

// Exact division; nullopt if y does not divide x.
std::optional<Eis> div_exact(const Eis& x, const Eis& y);
bool divides(const Eis& y, const Eis& x);

Eis gcd(Eis x, Eis y);

// Canonical associate: the unique unit multiple with argument in [0, 60),
// i.e. b >= 0 and a > b (zero maps to zero). Returns the associate and the
// k with unit6(k) * x = associate.
struct EisCanon { Eis value; int k; };
EisCanon canonical_associate(const Eis& x);

// Image of x under E/13E = F_13 x F_13, the splitting 13 = p1 * conj(p1),
// p1 = 3 - w.  Sends w to (3, 9).
struct Residue13 {
    int u = 0, v = 0;
    bool operator==(const Residue13& o) const { return u == o.u && v == o.v; }
    Residue13 operator+(const Residue13& o) const { return {(u + o.u) % 13, (v + o.v) % 13}; }
    Residue13 operator*(const Residue13& o) const { return {(u * o.u) % 13, (v * o.v) % 13}; }
};
Residue13 crt13(const Eis& x);

} // namespace mirrorcert
