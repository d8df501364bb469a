#pragma once

#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "mirrorcert/lattice.hpp"

namespace mirrorcert {

using CVec14 = std::array<std::complex<double>, 14>;

// --- exact ingredients -----------------------------------------------------

// cosh^2 of the distance between positive-norm points
Q3 cosh2_dist(const Vec14& x, const Vec14& y);
// sinh^2 of the distance from a positive-norm point to the mirror of a
// negative-norm root
Q3 sinh2_dist_mirror(const Vec14& x, const Vec14& r);

// --- float views -------------------------------------------------------------

double dist(const Vec14& x, const Vec14& y);
double dist_point_mirror(const Vec14& x, const Vec14& r);
std::complex<double> ip_c(const CVec14& u, const CVec14& v);
double dist_c(const CVec14& x, const CVec14& y);
double dist_point_mirror_c(const CVec14& x, const CVec14& r);

// projection of x onto the mirror of r (exact)
Vec14 pr_mirror(const Vec14& x, const Vec14& r);

// --- per-pair data for the triangle certificates ----------------------------

struct PairGeom {
    int v1, v2;        // plane vertices of the simple roots
    bool braiding;     // <rho1, rho2> = sqrt3 (incident) vs 0
    Vec14 rho1, rho2;  // rho-variants
    Vec14 p1, p2, q;   // projections of rho_bar onto the mirrors and their meet
    Q3 alpha;          // 3 - sqrt3 or 3
    double c;          // positive root of the quadratic for s
    CVec14 s;          // s = rho_bar + c (rho1 + rho2)
};
PairGeom make_pair_geom(const Lattice& lat, int v1, int v2);

// max over a totally real triangle of the distance to a mirror, via the
// vertex bound d(x_i, H) + max of adjacent sides
double md_mirror_triangle(const Vec14& root, const CVec14& a, const CVec14& b,
                          const CVec14& c);
// max over the triangle of the distance to a point is attained at a vertex
double md_point_triangle(const CVec14& z, const CVec14& a, const CVec14& b,
                         const CVec14& c);

// --- exact convex tests ------------------------------------------------------

struct ZeroConvex {
    enum Kind { None, VertexOnly, Nontrivial } kind;
    std::array<bool, 3> vertex{};  // flagged zero entries when VertexOnly
};
ZeroConvex zero_convex_combination(const Cy& g1, const Cy& g2, const Cy& g3);

// the nonzero values all lie in some open half-plane through the origin
bool open_half_plane(const std::vector<Cy>& values);

struct TriHit {
    enum Kind { Empty, Point, Edge, Other } kind;
    std::array<Q3, 3> t{};       // barycentric coordinates for Point
    int e1 = -1, e2 = -1;        // vertices of the edge for Edge
};
// intersection of the mirror of r with the totally real triangle
// Conv(va, vb, vc); exact throughout
TriHit triangle_mirror_intersect(const Vec14& r, const Vec14& va, const Vec14& vb,
                                 const Vec14& vc);

} // namespace mirrorcert
