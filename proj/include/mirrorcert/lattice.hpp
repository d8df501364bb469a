#pragma once

#include <optional>
#include <vector>

#include "mirrorcert/latvec.hpp"
#include "mirrorcert/plane.hpp"

namespace mirrorcert {

// The rank-14 Eisenstein lattice built from the incidence graph of P^2(F_3)
// with p = 2 + w: 26 simple roots (13 point roots, 13 line roots) spanning a
// signature (1,13) lattice presented over the orthogonal reference basis
// (w_P, x_1, ..., x_13) with gram diag(3, -3, ..., -3).
struct Lattice {
    IncidencePlane plane;
    std::vector<Vec14> roots;  // 26: points then lines, plane vertex order
    std::vector<Vec14> rho;    // rho_i = r_i for points, xi * r_i for lines

    Vec14 w_P, w_L, rho_bar, rho_plus, rho_minus, z0, sigma_P;
    Q3 R;  // |rho_bar|^2 = (4 sqrt3 - 3)/26

    // row-echelon basis over E of the scaled lattice 3L in reference
    // coordinates; basis vector r = hnf row / 3
    std::vector<EisVec> hnf;
    std::array<int, 14> pivot{};
    EisMat gram_int{};   // gram matrix of the hnf/3 basis
    Eis det_gram;        // -3^7

    // left kernel of the incidence matrix over F_3: parity checks for the
    // column-space membership test
    std::vector<std::array<int8_t, 13>> parity;

    std::array<Vec14, 14> sigma_img;  // sigma on the reference basis
    EisMat sigma_int{};               // sigma on integral coordinates
};

// Builds (and caches) the q = 3 lattice; |p|^2 = q is checked.
const Lattice& lattice();
Lattice build_lattice(const Eis& p);

std::optional<EisVec> to_integral(const Lattice& lat, const Vec14& v);
Vec14 from_integral(const Lattice& lat, const EisVec& coeffs);
bool membership(const Lattice& lat, const Vec14& v);

// Root pattern test from the inner products (A, B_1..B_13) with the
// reference basis: r = (A w_P - sum B_i x_i)/3 lies in L iff all entries are
// in pE, (B_i/p mod p) is in the F_3 column space of the incidence matrix,
// and sum(B_i/p) = A/p mod p. Equivalent to membership(); used by scans.
bool pattern_in_lattice(const Lattice& lat, const Eis& A, const std::array<Eis, 13>& B);
Vec14 vector_of_pattern(const Eis& A, const std::array<Eis, 13>& B);

// sigma: the diagram automorphism induced by the polarity; sigma(x) = -w l,
// sigma(l) = x, gram-preserving, sigma(w_P) = -w w_L, sigma(w_L) = w_P.
Vec14 sigma_apply(const Lattice& lat, const Vec14& v);

// orthogonal projections onto F^C = span(w_P, w_L) and its complement
Vec14 pi_F(const Lattice& lat, const Vec14& v);
Vec14 pi_Fperp(const Lattice& lat, const Vec14& v);

// discriminant group of a nondegenerate hermitian gram matrix over E
struct DiscGroup {
    mpz_class order;            // |det|^2
    std::vector<Eis> divisors;  // Smith normal form divisors, canonical associates
};
DiscGroup disc_group(std::vector<std::vector<Eis>> gram);

// F-perp data: span of {x - x0} and {l - l0}, x0 = point 0, l0 = line 0
struct FperpData {
    std::vector<EisVec> hnf;  // scaled by 3
    int rank = 0;
    std::vector<std::vector<Eis>> gram;
    Eis det;
};
FperpData fperp_data(const Lattice& lat);

std::vector<std::vector<Eis>> gram_F();  // ((3, 4p), (4 conj p, 3))

// determinant over E (Bareiss) and the Z-realification cross-check
Eis det_eis(std::vector<std::vector<Eis>> m);
mpz_class z_hnf_det28(const std::vector<EisVec>& gens);

// matrix helpers for 14x14 integer-lattice automorphisms
EisMat mat_identity();
EisMat mat_mul(const EisMat& a, const EisMat& b);
EisVec mat_apply(const EisMat& m, const EisVec& v);
bool mat_eq(const EisMat& a, const EisMat& b);
bool mat_preserves_gram(const Lattice& lat, const EisMat& m);

} // namespace mirrorcert
