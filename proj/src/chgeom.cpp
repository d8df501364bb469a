#include "mirrorcert/chgeom.hpp"

#include <cmath>
#include <stdexcept>

namespace mirrorcert {

Q3 cosh2_dist(const Vec14& x, const Vec14& y) {
    Q3 nx = norm_q3(x), ny = norm_q3(y);
    if (nx.sign() <= 0 || ny.sign() <= 0)
        throw std::invalid_argument("cosh2_dist needs positive-norm points");
    return ip(x, y).abs2() / (nx * ny);
}

Q3 sinh2_dist_mirror(const Vec14& x, const Vec14& r) {
    Q3 nx = norm_q3(x), nr = norm_q3(r);
    if (nx.sign() <= 0 || nr.sign() >= 0)
        throw std::invalid_argument("sinh2_dist_mirror needs signs (+, -)");
    return ip(r, x).abs2() / (nx * (-nr));
}

double dist(const Vec14& x, const Vec14& y) {
    double c2 = cosh2_dist(x, y).to_double();
    return std::acosh(std::sqrt(std::max(1.0, c2)));
}

double dist_point_mirror(const Vec14& x, const Vec14& r) {
    double s2 = sinh2_dist_mirror(x, r).to_double();
    return std::asinh(std::sqrt(std::max(0.0, s2)));
}

std::complex<double> ip_c(const CVec14& u, const CVec14& v) {
    std::complex<double> acc = std::conj(u[0]) * v[0];
    for (int k = 1; k < 14; ++k) acc -= std::conj(u[k]) * v[k];
    return 3.0 * acc;
}

double dist_c(const CVec14& x, const CVec14& y) {
    double nx = ip_c(x, x).real(), ny = ip_c(y, y).real();
    double c = std::abs(ip_c(x, y)) / std::sqrt(nx * ny);
    return std::acosh(std::max(1.0, c));
}

double dist_point_mirror_c(const CVec14& x, const CVec14& r) {
    double nx = ip_c(x, x).real(), nr = -ip_c(r, r).real();
    double s = std::abs(ip_c(r, x)) / std::sqrt(nx * nr);
    return std::asinh(s);
}

Vec14 pr_mirror(const Vec14& x, const Vec14& r) {
    Cy lam = ip(r, x) / ip(r, r);
    return sub(x, scale(lam, r));
}

PairGeom make_pair_geom(const Lattice& lat, int v1, int v2) {
    if (v1 == v2) throw std::invalid_argument("pair needs distinct roots");
    PairGeom g;
    g.v1 = v1;
    g.v2 = v2;
    g.rho1 = lat.rho[v1];
    g.rho2 = lat.rho[v2];
    Cy ip12 = ip(g.rho1, g.rho2);
    if (ip12 == Cy::sqrt3()) {
        g.braiding = true;
        g.alpha = Q3{3, -1};
    } else if (ip12.is_zero()) {
        g.braiding = false;
        g.alpha = Q3{3, 0};
    } else {
        throw std::logic_error("unexpected rho inner product");
    }
    const Q3& R = lat.R;
    Cy t1 = Cy::from_q3(R / Q3{3, 0});
    g.p1 = add(lat.rho_bar, scale(t1, g.rho1));
    g.p2 = add(lat.rho_bar, scale(t1, g.rho2));
    Cy t2 = Cy::from_q3(R / g.alpha);
    g.q = add(lat.rho_bar, scale(t2, add(g.rho1, g.rho2)));

    // (4 + (2 alpha / R)(1 + R/3)) c^2 - (4/3) R c - R/3 = 0, positive root
    Q3 A = Q3{4, 0} + (Q3{2, 0} * g.alpha / R) * (Q3{1, 0} + R / Q3{3, 0});
    Q3 B = Q3{mpq_class(4, 3), 0} * R;
    Q3 C = R / Q3{3, 0};
    double a = A.to_double(), b = B.to_double(), c0 = C.to_double();
    g.c = (b + std::sqrt(b * b + 4 * a * c0)) / (2 * a);

    auto rb = embed(lat.rho_bar);
    auto r1 = embed(g.rho1), r2 = embed(g.rho2);
    for (int k = 0; k < 14; ++k) g.s[k] = rb[k] + g.c * (r1[k] + r2[k]);
    return g;
}

double md_mirror_triangle(const Vec14& root, const CVec14& a, const CVec14& b,
                          const CVec14& c) {
    CVec14 r;
    auto re = embed(root);
    for (int k = 0; k < 14; ++k) r[k] = re[k];
    double da = dist_point_mirror_c(a, r), db = dist_point_mirror_c(b, r),
           dc = dist_point_mirror_c(c, r);
    double ab = dist_c(a, b), bc = dist_c(b, c), ca = dist_c(c, a);
    double d1 = da + std::max(ab, ca);
    double d2 = db + std::max(ab, bc);
    double d3 = dc + std::max(bc, ca);
    return std::min({d1, d2, d3});
}

double md_point_triangle(const CVec14& z, const CVec14& a, const CVec14& b,
                         const CVec14& c) {
    return std::max({dist_c(z, a), dist_c(z, b), dist_c(z, c)});
}

namespace {

struct P2 {  // point of Q(sqrt3)^2
    Q3 x, y;
};

Q3 cross(const P2& u, const P2& v) { return u.x * v.y - u.y * v.x; }
Q3 dot(const P2& u, const P2& v) { return u.x * v.x + u.y * v.y; }

P2 plane_point(const Cy& g) { return {g.real(), g.imag()}; }

bool antipodal(const P2& u, const P2& v) {
    return cross(u, v).sign() == 0 && dot(u, v).sign() < 0;
}

// exists a positive combination of the nonzero points equal to zero; by
// Caratheodory in the plane it suffices to check pairs and triples
bool positive_combo_zero(const std::vector<P2>& pts) {
    const size_t n = pts.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (antipodal(pts[i], pts[j])) return true;
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            for (size_t k = j + 1; k < n; ++k) {
                int s1 = cross(pts[i], pts[j]).sign();
                int s2 = cross(pts[j], pts[k]).sign();
                int s3 = cross(pts[k], pts[i]).sign();
                if (s1 != 0 && s1 == s2 && s2 == s3) return true;
            }
    return false;
}

} // namespace

bool open_half_plane(const std::vector<Cy>& values) {
    std::vector<P2> pts;
    for (const auto& v : values)
        if (!v.is_zero()) pts.push_back(plane_point(v));
    return !positive_combo_zero(pts);
}

ZeroConvex zero_convex_combination(const Cy& g1, const Cy& g2, const Cy& g3) {
    std::array<const Cy*, 3> g{&g1, &g2, &g3};
    ZeroConvex out{ZeroConvex::None, {}};
    std::vector<P2> nz;
    int zeros = 0;
    for (int i = 0; i < 3; ++i) {
        if (g[i]->is_zero()) {
            out.vertex[i] = true;
            ++zeros;
        } else {
            nz.push_back(plane_point(*g[i]));
        }
    }
    if (positive_combo_zero(nz) || zeros >= 2) {
        out.kind = ZeroConvex::Nontrivial;
        out.vertex = {};
        return out;
    }
    out.kind = zeros == 1 ? ZeroConvex::VertexOnly : ZeroConvex::None;
    if (out.kind == ZeroConvex::None) out.vertex = {};
    return out;
}

TriHit triangle_mirror_intersect(const Vec14& r, const Vec14& va, const Vec14& vb,
                                 const Vec14& vc) {
    std::array<Cy, 3> g = {ip(va, r), ip(vb, r), ip(vc, r)};
    std::array<bool, 3> zero = {g[0].is_zero(), g[1].is_zero(), g[2].is_zero()};
    int nzeros = zero[0] + zero[1] + zero[2];

    TriHit hit;
    if (nzeros == 3) {
        hit.kind = TriHit::Other;  // whole triangle on the mirror
        return hit;
    }
    if (nzeros == 2) {
        hit.kind = TriHit::Edge;
        int a = -1, b = -1;
        for (int i = 0; i < 3; ++i)
            if (zero[i]) (a < 0 ? a : b) = i;
        hit.e1 = a;
        hit.e2 = b;
        return hit;
    }
    if (nzeros == 1) {
        int zi = zero[0] ? 0 : (zero[1] ? 1 : 2);
        int i = (zi + 1) % 3, j = (zi + 2) % 3;
        if (antipodal(plane_point(g[i]), plane_point(g[j]))) {
            hit.kind = TriHit::Other;  // a segment from the zero vertex
            return hit;
        }
        hit.kind = TriHit::Point;
        hit.t[zi] = Q3{1, 0};
        return hit;
    }

    // no zero entries
    P2 p1 = plane_point(g[0]), p2 = plane_point(g[1]), p3 = plane_point(g[2]);
    Q3 c23 = cross(p2, p3), c31 = cross(p3, p1), c12 = cross(p1, p2);
    Q3 area = c23 + c31 + c12;
    if (area.sign() != 0) {
        std::array<Q3, 3> t = {c23 / area, c31 / area, c12 / area};
        for (const auto& ti : t)
            if (ti.sign() < 0) {
                hit.kind = TriHit::Empty;
                return hit;
            }
        hit.kind = TriHit::Point;
        hit.t = t;
        return hit;
    }
    // collinear values
    if (c12.sign() == 0 && c23.sign() == 0 && c31.sign() == 0) {
        // on a common line through the origin
        bool pos = false, neg = false;
        P2 d = p1;  // reference direction
        for (const P2& p : {p1, p2, p3}) {
            int s = dot(d, p).sign();
            (s >= 0 ? pos : neg) = true;
        }
        if (pos && neg) hit.kind = TriHit::Other;  // a segment of solutions
        else hit.kind = TriHit::Empty;             // common argument: no zero combo
        return hit;
    }
    hit.kind = TriHit::Empty;
    return hit;
}

} // namespace mirrorcert
