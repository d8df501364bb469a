#include "mirrorcert/modular.hpp"

#include <stdexcept>

namespace mirrorcert {

Mat2 mat2_mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

Mat2 mat2_inv_det1(const Mat2& x) { return {x.d, -x.b, -x.c, x.a}; }
Mat2 mat2_S() { return {0, -1, 1, 0}; }
Mat2 mat2_T() { return {1, 1, 0, 1}; }
Mat2 mat2_nu() { return {0, 1, -1, 5}; }

Mat2Cy beta_matrix() {
    return {{{Cy::from_eis(Eis::p()), Cy::omega()},
             {Cy(1), Cy::from_eis(Eis::p().conj())}}};
}

Mat2Cy jf_matrix() {
    return {{{Cy(3), Cy::from_eis(Eis{4, 0} * Eis::p())},
             {Cy::from_eis(Eis{4, 0} * Eis::p().conj()), Cy(3)}}};
}

namespace {

Mat2Cy mat2cy_mul(const Mat2Cy& x, const Mat2Cy& y) {
    Mat2Cy z;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) z[i][j] = x[i][0] * y[0][j] + x[i][1] * y[1][j];
    return z;
}

Mat2Cy mat2cy_star(const Mat2Cy& x) {  // conjugate transpose
    return {{{x[0][0].conj(), x[1][0].conj()}, {x[0][1].conj(), x[1][1].conj()}}};
}

Mat2Cy mat2cy_of(const Mat2& g) {
    return {{{Cy((long)g.a), Cy((long)g.b)}, {Cy((long)g.c), Cy((long)g.d)}}};
}

Mat2Cy beta_adjugate() {  // p1 * beta^{-1}
    return {{{Cy::from_eis(Eis::p().conj()), -Cy::omega()},
             {Cy(-1), Cy::from_eis(Eis::p())}}};
}

} // namespace

Cy ip_F(const FCoord& z, const FCoord& w) {
    Mat2Cy J = jf_matrix();
    Cy za = z.first.conj(), zb = z.second.conj();
    return za * (J[0][0] * w.first + J[0][1] * w.second) +
           zb * (J[1][0] * w.first + J[1][1] * w.second);
}

Cy ip_via_beta(const FCoord& z, const FCoord& w) {
    Mat2Cy B = beta_matrix();
    Cy t1 = B[0][0] * z.first + B[0][1] * z.second;
    Cy t2 = B[1][0] * z.first + B[1][1] * z.second;
    Cy s1 = B[0][0] * w.first + B[0][1] * w.second;
    Cy s2 = B[1][0] * w.first + B[1][1] * w.second;
    return Cy::theta().conj() * (s1 * t2.conj() - s2 * t1.conj());
}

bool jf_identity_holds() {
    Mat2Cy B = beta_matrix();
    Mat2Cy S = {{{Cy(0), Cy(-1)}, {Cy(1), Cy(0)}}};
    Mat2Cy rhs = mat2cy_mul(mat2cy_star(B), mat2cy_mul(S, B));
    Cy tb = Cy::theta().conj();
    Mat2Cy J = jf_matrix();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(tb * rhs[i][j] == J[i][j])) return false;
    return true;
}

Cy beta_fwd(const Cy& a, const Cy& b) {
    Cy den = a + Cy::from_eis(Eis::p().conj()) * b;
    if (den.is_zero()) throw std::domain_error("beta: image is the cusp at infinity");
    return (Cy::from_eis(Eis::p()) * a + Cy::omega() * b) / den;
}

FCoord beta_inv_coords(const Cy& tau) {
    Cy p = Cy::from_eis(Eis::p());
    Cy w2 = Cy::omega() * Cy::omega();
    return {Cy(1) + p * tau, w2 * (tau - p)};
}

AutFCheck in_autF(const Mat2& g) {
    if (g.det() != 1) throw std::invalid_argument("determinant must be 1");
    AutFCheck out;
    Eis s{(long)(g.a - g.d), 0}, t{(long)(g.b + g.c), 0};
    out.by_divisibility = divides(Eis::p1(), Eis::p() * s + t);
    Mat2 conj = mat2_mul(mat2_nu(), mat2_mul(g, mat2_inv_det1(mat2_nu())));
    long long ll = conj.c % 13;
    out.by_conjugation = (ll == 0);
    return out;
}

Mat2Cy beta_conj(const Mat2& g) {
    // beta^{-1} g beta = adj(beta) g beta / p1
    Mat2Cy m = mat2cy_mul(beta_adjugate(), mat2cy_mul(mat2cy_of(g), beta_matrix()));
    Cy inv_p1 = Cy::from_eis(Eis::p1()).inv();
    for (auto& row : m)
        for (auto& e : row) e = inv_p1 * e;
    return m;
}

bool entries_eis(const Mat2Cy& m) {
    for (const auto& row : m)
        for (const auto& e : row)
            if (!e.is_eis()) return false;
    return true;
}

bool preserves_JF(const Mat2Cy& m) {
    Mat2Cy lhs = mat2cy_mul(mat2cy_star(m), mat2cy_mul(jf_matrix(), m));
    Mat2Cy J = jf_matrix();
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            if (!(lhs[i][j] == J[i][j])) return false;
    return true;
}

ExtLambda extension_lambda(const Mat2& g) {
    auto chk = in_autF(g);
    if (!chk.by_divisibility) throw std::invalid_argument("g is not in nu^-1 Gamma_0(13) nu");
    ExtLambda out;
    // g = ((2k + d, b), (3k - b, d)) mod 13, so k = 7 (a - d)
    long long k = ((g.a - g.d) % 13) * 7 % 13;
    long long b = g.b % 13, d = g.d % 13;
    Eis lam = Eis{(long)(3 * k), 0} * Eis{4, 3} + Eis{(long)d, 0} +
              Eis{(long)(3 * b), 0} * Eis::p() * Eis::omega_bar();
    // reduce mod 13E
    auto norm13z = [](mpz_class x) {
        x %= 13;
        if (x < 0) x += 13;
        return x;
    };
    auto norm13 = [](long long x) { return (int)((x % 13 + 13) % 13); };
    out.lambda = Eis{norm13z(lam.a), norm13z(lam.b)};
    out.phi = crt13(out.lambda);
    // closed form from the CRT computation: (d + 5b, 2k + d + 8b)
    Residue13 closed{norm13(d + 5 * b), norm13(2 * k + d + 8 * b)};
    if (!(out.phi == closed)) throw std::logic_error("lambda closed form mismatch");
    out.extends = (out.phi.u * out.phi.v) % 13 == 1;
    return out;
}

Cy norm_F(const std::pair<Eis, Eis>& z) {
    FCoord c{Cy::from_eis(z.first), Cy::from_eis(z.second)};
    return ip_F(c, c);
}

std::pair<Eis, Eis> apply_g1(const Mat2Cy& g1, const std::pair<Eis, Eis>& z) {
    Cy u = g1[0][0] * Cy::from_eis(z.first) + g1[0][1] * Cy::from_eis(z.second);
    Cy v = g1[1][0] * Cy::from_eis(z.first) + g1[1][1] * Cy::from_eis(z.second);
    Eis a, b;
    if (!u.is_eis(&a) || !v.is_eis(&b)) throw std::logic_error("g1 image not integral");
    return {a, b};
}

namespace {

// digits of an Eisenstein integer x = x1 w + x2
std::pair<long long, long long> eis_digits(const Eis& e) {
    return {e.b.get_si(), (e.a).get_si()};
}

} // namespace

Mat2 gz_norm3(const std::pair<Eis, Eis>& z) {
    if (!(norm_F(z) == Cy(3))) throw std::invalid_argument("z must have norm 3 in F");
    Mat2Cy B = beta_matrix();
    Cy s_cy = B[0][0] * Cy::from_eis(z.first) + B[0][1] * Cy::from_eis(z.second);
    Cy t_cy = B[1][0] * Cy::from_eis(z.first) + B[1][1] * Cy::from_eis(z.second);
    Eis s, t;
    if (!s_cy.is_eis(&s) || !t_cy.is_eis(&t)) throw std::logic_error("beta z not integral");
    auto [s1, s2] = eis_digits(s);
    auto [t1, t2] = eis_digits(t);
    Mat2 g{s1, s2, t1, t2};
    if (g.det() != 1) throw std::logic_error("gz determinant is not 1");
    return g;
}

OrthGz gz_orthogonal(const std::pair<Eis, Eis>& r) {
    if (!(norm_F(r) == Cy(-3))) throw std::invalid_argument("r must have norm -3 in F");
    Mat2Cy B = beta_matrix();
    Cy s_cy = B[0][0] * Cy::from_eis(r.first) + B[0][1] * Cy::from_eis(r.second);
    Cy t_cy = B[1][0] * Cy::from_eis(r.first) + B[1][1] * Cy::from_eis(r.second);
    Eis s, t;
    if (!s_cy.is_eis(&s) || !t_cy.is_eis(&t)) throw std::logic_error("beta r not integral");

    // z with beta z proportional to (conj s; conj t): z = adj(beta)(conj s; conj t),
    // made primitive
    Mat2Cy adj = beta_adjugate();
    Cy u_cy = adj[0][0] * Cy::from_eis(s.conj()) + adj[0][1] * Cy::from_eis(t.conj());
    Cy v_cy = adj[1][0] * Cy::from_eis(s.conj()) + adj[1][1] * Cy::from_eis(t.conj());
    Eis u, v;
    if (!u_cy.is_eis(&u) || !v_cy.is_eis(&v)) throw std::logic_error("z not integral");
    Eis g0 = gcd(u, v);
    u = *div_exact(u, g0);
    v = *div_exact(v, g0);

    OrthGz out;
    out.z = {u, v};
    auto [s1, s2] = eis_digits(s.conj());
    auto [t1, t2] = eis_digits(t.conj());
    out.g = {s1, s2, t1, t2};
    if (out.g.det() != 1) throw std::logic_error("gz determinant is not 1");
    // the primitive orthogonal vector really is orthogonal
    FCoord zc{Cy::from_eis(out.z.first), Cy::from_eis(out.z.second)};
    FCoord rc{Cy::from_eis(r.first), Cy::from_eis(r.second)};
    if (!ip_F(zc, rc).is_zero()) throw std::logic_error("z not orthogonal to r");
    return out;
}

Mat2 sigma_H2(const Lattice& lat) {
    // sigma|F in w-coordinates: sigma(u w_P + v w_L) = v w_P - w u w_L
    Mat2Cy sF = {{{Cy(0), Cy(1)}, {-Cy::omega(), Cy(0)}}};
    // check against the lattice sigma
    Vec14 swp = sigma_apply(lat, lat.w_P);
    if (!eq(swp, scale(-Cy::omega(), lat.w_L))) throw std::logic_error("sigma|F mismatch");
    Mat2Cy m = mat2cy_mul(beta_matrix(), mat2cy_mul(sF, beta_adjugate()));
    // m should be a scalar multiple of S = (0 -1; 1 0)
    if (!m[0][0].is_zero() || !m[1][1].is_zero() || !(m[0][1] == -m[1][0]))
        throw std::logic_error("sigma does not induce S");
    return mat2_S();
}

std::vector<Mat2> sample_sl2(std::mt19937_64& rng, int n, int maxlen) {
    std::vector<Mat2> out;
    Mat2 S = mat2_S(), T = mat2_T(), Ti = mat2_inv_det1(T);
    while ((int)out.size() < n) {
        Mat2 g;
        int len = 1 + (int)(rng() % maxlen);
        for (int i = 0; i < len; ++i) {
            switch (rng() % 3) {
                case 0: g = mat2_mul(g, S); break;
                case 1: g = mat2_mul(g, T); break;
                default: g = mat2_mul(g, Ti); break;
            }
        }
        out.push_back(g);
    }
    return out;
}

Mat2 sample_autF(std::mt19937_64& rng) {
    while (true) {
        Mat2 g = sample_sl2(rng, 1, 12)[0];
        if (in_autF(g).by_divisibility) return g;
    }
}

Mat2 sample_gamma13(std::mt19937_64& rng) {
    // words in the unipotents (1 13; 0 1) and (1 0; 13 1)
    Mat2 A{1, 13, 0, 1}, B{1, 0, 13, 1};
    Mat2 g;
    int len = 1 + (int)(rng() % 4);
    for (int i = 0; i < len; ++i) {
        switch (rng() % 4) {
            case 0: g = mat2_mul(g, A); break;
            case 1: g = mat2_mul(g, B); break;
            case 2: g = mat2_mul(g, mat2_inv_det1(A)); break;
            default: g = mat2_mul(g, mat2_inv_det1(B)); break;
        }
    }
    return g;
}

} // namespace mirrorcert
