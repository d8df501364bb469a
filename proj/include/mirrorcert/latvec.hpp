#pragma once

#include <array>
#include <complex>

#include "mirrorcert/cyclo12.hpp"

namespace mirrorcert {

// Coordinates over the orthogonal reference basis (w_P, x_1, ..., x_13),
// whose gram matrix is diag(3, -3, ..., -3).
using Vec14 = std::array<Cy, 14>;
using EisVec = std::array<Eis, 14>;
using EisMat = std::array<std::array<Eis, 14>, 14>;

inline Vec14 zero_vec14() { return Vec14{}; }

// Hermitian form, conjugate-linear in the first variable.
inline Cy ip(const Vec14& u, const Vec14& v) {
    Cy acc = u[0].conj() * v[0];
    for (int k = 1; k < 14; ++k) acc -= u[k].conj() * v[k];
    mpq_class three(3);
    return three * acc;
}

inline Q3 norm_q3(const Vec14& v) {
    Q3 out;
    if (!ip(v, v).is_real(&out)) throw std::logic_error("norm not real");
    return out;
}

inline Vec14 add(const Vec14& u, const Vec14& v) {
    Vec14 w;
    for (int k = 0; k < 14; ++k) w[k] = u[k] + v[k];
    return w;
}

inline Vec14 sub(const Vec14& u, const Vec14& v) {
    Vec14 w;
    for (int k = 0; k < 14; ++k) w[k] = u[k] - v[k];
    return w;
}

inline Vec14 scale(const Cy& s, const Vec14& v) {
    Vec14 w;
    for (int k = 0; k < 14; ++k) w[k] = s * v[k];
    return w;
}

inline std::array<std::complex<double>, 14> embed(const Vec14& v) {
    std::array<std::complex<double>, 14> w;
    for (int k = 0; k < 14; ++k) w[k] = v[k].embed();
    return w;
}

inline bool eq(const Vec14& u, const Vec14& v) {
    for (int k = 0; k < 14; ++k)
        if (!(u[k] == v[k])) return false;
    return true;
}

// u = unit * v for some sixth root of unity; returns the unit index if so.
inline std::optional<int> unit_multiple_of(const Vec14& u, const Vec14& v) {
    for (int k = 0; k < 6; ++k) {
        if (eq(u, scale(Cy::from_eis(unit6(k)), v)))
            return k;
    }
    return std::nullopt;
}

} // namespace mirrorcert
