#pragma once

#include <array>
#include <complex>
#include <optional>
#include <string>

#include "mirrorcert/eisenstein.hpp"

namespace mirrorcert {

// Element of the real quadratic field Q(sqrt 3): a + b*sqrt(3).
struct Q3 {
    mpq_class a, b;

    Q3() : a(0), b(0) {}
    Q3(long x) : a(x), b(0) {}
    Q3(mpq_class x, mpq_class y) : a(std::move(x)), b(std::move(y)) {}
    static Q3 sqrt3() { return {0, 1}; }

    bool operator==(const Q3& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Q3& o) const { return !(*this == o); }
    Q3 operator+(const Q3& o) const { return {a + o.a, b + o.b}; }
    Q3 operator-(const Q3& o) const { return {a - o.a, b - o.b}; }
    Q3 operator-() const { return {-a, -b}; }
    Q3 operator*(const Q3& o) const { return {a * o.a + 3 * b * o.b, a * o.b + b * o.a}; }
    Q3 inv() const;
    Q3 operator/(const Q3& o) const { return *this * o.inv(); }

    bool is_zero() const { return a == 0 && b == 0; }
    int sign() const;
    bool operator<(const Q3& o) const { return (*this - o).sign() < 0; }
    bool operator<=(const Q3& o) const { return (*this - o).sign() <= 0; }
    bool operator>(const Q3& o) const { return (*this - o).sign() > 0; }
    bool operator>=(const Q3& o) const { return (*this - o).sign() >= 0; }
    double to_double() const { return a.get_d() + b.get_d() * 1.7320508075688772935; }
    std::string str() const;
};

// Element of Q(zeta), zeta = exp(i*pi/6), minimal polynomial x^4 - x^2 + 1.
// Coordinates c[k] over the basis (1, zeta, zeta^2, zeta^3). Contains the
// constants the lattice computations need: w = zeta^2 - 1, xi = zeta - zeta^3,
// i = zeta^3, sqrt(3) = 2 zeta - zeta^3.
struct Cy {
    std::array<mpq_class, 4> c;

    Cy() : c{0, 0, 0, 0} {}
    Cy(long x) : c{x, 0, 0, 0} {}
    Cy(mpq_class x) : c{std::move(x), 0, 0, 0} {}
    Cy(mpq_class c0, mpq_class c1, mpq_class c2, mpq_class c3)
        : c{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static Cy zeta() { return {0, 1, 0, 0}; }
    static Cy i() { return {0, 0, 0, 1}; }
    static Cy omega() { return {-1, 0, 1, 0}; }
    static Cy omega_bar() { return {0, 0, -1, 0}; }
    static Cy xi() { return {0, 1, 0, -1}; }       // exp(-i*pi/6)
    static Cy xi_bar() { return zeta(); }
    static Cy sqrt3() { return {0, 2, 0, -1}; }
    static Cy theta() { return {-1, 0, 2, 0}; }    // i*sqrt(3)
    static Cy from_eis(const Eis& e);               // a + b*w -> (a-b) + b*zeta^2
    static Cy from_q3(const Q3& x);

    bool operator==(const Cy& o) const { return c == o.c; }
    bool operator!=(const Cy& o) const { return !(*this == o); }
    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }

    Cy operator+(const Cy& o) const;
    Cy operator-(const Cy& o) const;
    Cy operator-() const;
    Cy operator*(const Cy& o) const;
    Cy& operator+=(const Cy& o) { *this = *this + o; return *this; }
    Cy& operator-=(const Cy& o) { *this = *this - o; return *this; }

    Cy conj() const;      // complex conjugation, zeta -> zeta^11
    Cy galois5() const;   // zeta -> zeta^5
    Cy galois7() const;   // zeta -> zeta^7
    Cy inv() const;       // via the product of Galois conjugates
    Cy operator/(const Cy& o) const { return *this * o.inv(); }

    // |x|^2 = x * conj(x), always in the real subfield.
    Q3 abs2() const;
    Q3 real() const;
    Q3 imag() const;
    // Exact recognitions.
    bool is_rational(mpq_class* out = nullptr) const;
    bool is_real(Q3* out = nullptr) const;
    bool is_eis(Eis* out = nullptr) const;

    std::complex<double> embed() const;
    std::array<std::string, 4> serialize() const;
    std::string str() const;
};

Cy operator*(const mpq_class& s, const Cy& x);
Q3 operator*(const mpq_class& s, const Q3& x);

} // namespace mirrorcert
