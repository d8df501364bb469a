#pragma once

#include <random>
#include <utility>
#include <vector>

#include "mirrorcert/lattice.hpp"

namespace mirrorcert {

// 2x2 integer matrix, used for SL_2(Z) elements
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;
    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    long long det() const { return a * d - b * c; }
};
Mat2 mat2_mul(const Mat2& x, const Mat2& y);
Mat2 mat2_inv_det1(const Mat2& x);
Mat2 mat2_S();   // (0 -1; 1 0)
Mat2 mat2_T();   // (1 1; 0 1)
Mat2 mat2_nu();  // (0 1; -1 5)

using Mat2Cy = std::array<std::array<Cy, 2>, 2>;
using FCoord = std::pair<Cy, Cy>;  // z = first * w_P + second * w_L

Mat2Cy beta_matrix();     // (p w; 1 conj p)
Mat2Cy jf_matrix();       // (3 4p; 4 conj p 3)
Cy ip_F(const FCoord& z, const FCoord& w);          // via the gram of F
Cy ip_via_beta(const FCoord& z, const FCoord& w);   // theta-bar (tau1' conj tau2 - tau2' conj tau1)
bool jf_identity_holds();                            // J_F = conj(theta) beta* S beta

// Moebius image of [a w_P + b w_L]: (p a + w b)/(a + conj(p) b)
Cy beta_fwd(const Cy& a, const Cy& b);
// the lift of tau: ((1 + p tau), w^2 (tau - p))
FCoord beta_inv_coords(const Cy& tau);

// membership of beta^{-1} g beta in Aut(F): p1 | (p (a-d) + (b+c)),
// cross-checked against nu g nu^{-1} in Gamma_0(13)
struct AutFCheck {
    bool by_divisibility = false;
    bool by_conjugation = false;
};
AutFCheck in_autF(const Mat2& g);
Mat2Cy beta_conj(const Mat2& g);  // g1 = beta^{-1} g beta
bool entries_eis(const Mat2Cy& m);
bool preserves_JF(const Mat2Cy& m);

// discriminant action of g1 on the image of L/(F + F-perp):
// lambda = 3k(4 + 3w) + d + 3 p conj(w) b mod 13, phi(lambda) = (d+5b, 2k+d+8b)
struct ExtLambda {
    Eis lambda;
    Residue13 phi;
    bool extends = false;  // phi = (u, v) with u v = 1 mod 13
};
ExtLambda extension_lambda(const Mat2& g);

// norm-3 vectors map to SL_2(Z) translates of w
Mat2 gz_norm3(const std::pair<Eis, Eis>& z);
struct OrthGz {
    std::pair<Eis, Eis> z;  // primitive vector of F orthogonal to r
    Mat2 g;
};
OrthGz gz_orthogonal(const std::pair<Eis, Eis>& r);  // r of norm -3

// sigma restricted to F induces tau -> -1/tau
Mat2 sigma_H2(const Lattice& lat);

// F-coordinate helpers
Cy norm_F(const std::pair<Eis, Eis>& z);
std::pair<Eis, Eis> apply_g1(const Mat2Cy& g1, const std::pair<Eis, Eis>& z);

// seeded samplers
std::vector<Mat2> sample_sl2(std::mt19937_64& rng, int n, int maxlen);
Mat2 sample_autF(std::mt19937_64& rng);      // member of nu^{-1} Gamma_0(13) nu
Mat2 sample_gamma13(std::mt19937_64& rng);   // member of Gamma(13)

} // namespace mirrorcert
