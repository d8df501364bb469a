#include "mirrorcert/cyclo12.hpp"

#include <stdexcept>

namespace mirrorcert {

Q3 Q3::inv() const {
    // 1/(a + b sqrt3) = (a - b sqrt3)/(a^2 - 3 b^2)
    mpq_class den = a * a - 3 * b * b;
    if (den == 0) throw std::domain_error("Q3 division by zero");
    return {a / den, -b / den};
}

int Q3::sign() const {
    int sa = sgn(a), sb = sgn(b);
    if (sa == 0 && sb == 0) return 0;
    if (sa >= 0 && sb >= 0) return 1;
    if (sa <= 0 && sb <= 0) return -1;
    // mixed signs; sqrt3 is irrational so the value cannot vanish
    mpq_class lhs = a * a, rhs = 3 * b * b;
    if (sa > 0) return lhs > rhs ? 1 : -1;  // a > 0 > b
    return rhs > lhs ? 1 : -1;              // b > 0 > a
}

std::string Q3::str() const {
    if (b == 0) return a.get_str();
    return a.get_str() + (sgn(b) >= 0 ? "+" : "") + b.get_str() + "*sqrt3";
}

Cy Cy::from_eis(const Eis& e) {
    return {mpq_class(e.a - e.b), 0, mpq_class(e.b), 0};
}

Cy Cy::from_q3(const Q3& x) {
    return {x.a, 2 * x.b, 0, -x.b};
}

Cy Cy::operator+(const Cy& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2], c[3] + o.c[3]};
}
Cy Cy::operator-(const Cy& o) const {
    return {c[0] - o.c[0], c[1] - o.c[1], c[2] - o.c[2], c[3] - o.c[3]};
}
Cy Cy::operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

Cy Cy::operator*(const Cy& o) const {
    // convolution followed by reduction with zeta^4 = zeta^2 - 1,
    // zeta^5 = zeta^3 - zeta, zeta^6 = -1
    mpq_class d[7];
    for (int k = 0; k <= 6; ++k) d[k] = 0;
    for (int i = 0; i < 4; ++i) {
        if (c[i] == 0) continue;
        for (int j = 0; j < 4; ++j) {
            if (o.c[j] == 0) continue;
            d[i + j] += c[i] * o.c[j];
        }
    }
    return {d[0] - d[4] - d[6], d[1] - d[5], d[2] + d[4], d[3] + d[5]};
}

Cy Cy::conj() const { return {c[0] + c[2], c[1], -c[2], -c[1] - c[3]}; }
Cy Cy::galois5() const { return {c[0] + c[2], -c[1], -c[2], c[1] + c[3]}; }
Cy Cy::galois7() const { return {c[0], -c[1], c[2], -c[3]}; }

Cy Cy::inv() const {
    if (is_zero()) throw std::domain_error("Cy division by zero");
    Cy y = galois5() * galois7() * conj();
    Cy n = *this * y;
    if (n.c[1] != 0 || n.c[2] != 0 || n.c[3] != 0)
        throw std::logic_error("field norm not rational");
    mpq_class inv_n = 1 / n.c[0];
    return {y.c[0] * inv_n, y.c[1] * inv_n, y.c[2] * inv_n, y.c[3] * inv_n};
}

Q3 Cy::abs2() const {
    Q3 out;
    if (!(*this * conj()).is_real(&out)) throw std::logic_error("abs2 not real");
    return out;
}

Q3 Cy::real() const {
    Cy twice = *this + conj();
    return {twice.c[0] / 2, twice.c[1] / 4};
}

Q3 Cy::imag() const {
    // Im(x) = Re(-i * x)
    return ((-i()) * *this).real();
}

bool Cy::is_rational(mpq_class* out) const {
    if (c[1] != 0 || c[2] != 0 || c[3] != 0) return false;
    if (out) *out = c[0];
    return true;
}

bool Cy::is_real(Q3* out) const {
    if (c[2] != 0 || c[1] != -2 * c[3]) return false;
    if (out) *out = Q3{c[0], c[1] / 2};
    return true;
}

bool Cy::is_eis(Eis* out) const {
    if (c[1] != 0 || c[3] != 0) return false;
    if (c[0].get_den() != 1 || c[2].get_den() != 1) return false;
    if (out) *out = Eis{c[0].get_num() + c[2].get_num(), c[2].get_num()};
    return true;
}

std::complex<double> Cy::embed() const {
    static const std::complex<double> z{0.8660254037844386468, 0.5};
    std::complex<double> acc{c[3].get_d(), 0};
    acc = acc * z + c[2].get_d();
    acc = acc * z + c[1].get_d();
    acc = acc * z + c[0].get_d();
    return acc;
}

std::array<std::string, 4> Cy::serialize() const {
    return {c[0].get_str(), c[1].get_str(), c[2].get_str(), c[3].get_str()};
}

std::string Cy::str() const {
    return "(" + c[0].get_str() + "," + c[1].get_str() + "," + c[2].get_str() +
           "," + c[3].get_str() + ")";
}

Cy operator*(const mpq_class& s, const Cy& x) {
    return {s * x.c[0], s * x.c[1], s * x.c[2], s * x.c[3]};
}

Q3 operator*(const mpq_class& s, const Q3& x) { return {s * x.a, s * x.b}; }

} // namespace mirrorcert
