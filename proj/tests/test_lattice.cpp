#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mirrorcert/lattice.hpp"

using namespace mirrorcert;

static std::mt19937_64 rng(777);

static Vec14 random_lattice_vector(const Lattice& lat, int span = 26, int coeff = 3) {
    Vec14 v = zero_vec14();
    for (int t = 0; t < 5; ++t) {
        int i = (int)(rng() % span);
        long ca = (long)(rng() % (2 * coeff + 1)) - coeff;
        long cb = (long)(rng() % (2 * coeff + 1)) - coeff;
        v = add(v, scale(Cy::from_eis(Eis{ca, cb}), lat.roots[i]));
    }
    return v;
}

TEST_CASE("simple root inner products match the incidence pattern") {
    const auto& lat = lattice();
    const auto& pl = lat.plane;
    for (int i = 0; i < 26; ++i)
        for (int j = 0; j < 26; ++j) {
            Cy v = ip(lat.roots[i], lat.roots[j]);
            if (i == j) {
                CHECK(v == Cy(-3));
            } else if (pl.vertex_adjacent(i, j)) {
                // <x, l> = p for x on l, and <l, x> = conj(p)
                bool i_point = pl.is_point(i);
                CHECK(v == (i_point ? Cy::from_eis(Eis::p())
                                    : Cy::from_eis(Eis::p().conj())));
            } else {
                CHECK(v.is_zero());
            }
        }
}

TEST_CASE("w_P and w_L identities") {
    const auto& lat = lattice();
    CHECK(ip(lat.w_P, lat.w_P) == Cy(3));
    CHECK(ip(lat.w_L, lat.w_L) == Cy(3));
    CHECK(ip(lat.w_P, lat.w_L) == Cy::from_eis(Eis{4, 0} * Eis::p()));
    for (int x = 0; x < 13; ++x) {
        CHECK(ip(lat.w_P, lat.roots[x]).is_zero());
        CHECK(ip(lat.roots[x], lat.w_L) == Cy::from_eis(Eis::p()));
        // lemma-style identities: <x', w_P> = 0, <l', w_P> = conj(p)
        CHECK(ip(lat.roots[13 + x], lat.w_P) == Cy::from_eis(Eis::p().conj()));
        CHECK(ip(lat.w_L, lat.roots[13 + x]).is_zero());
    }
    // w_P is the image of w_l = conj(p) l + sum of points on l, for every l
    for (int l = 0; l < 13; ++l) {
        Vec14 wl = scale(Cy::from_eis(Eis::p().conj()), lat.roots[13 + l]);
        for (int x : lat.plane.line_pts[l]) wl = add(wl, lat.roots[x]);
        CHECK(eq(wl, lat.w_P));
    }
    // and dually w_L = p x + sum of lines through x
    for (int x = 0; x < 13; ++x) {
        Vec14 wx = scale(Cy::from_eis(Eis::p()), lat.roots[x]);
        for (int l : lat.plane.pt_lines[x]) wx = add(wx, lat.roots[13 + l]);
        CHECK(eq(wx, lat.w_L));
    }
}

TEST_CASE("rho_bar is the average of the rho system") {
    const auto& lat = lattice();
    Vec14 s = zero_vec14();
    for (const auto& r : lat.rho) s = add(s, r);
    CHECK(eq(scale(Cy(mpq_class(1, 26)), s), lat.rho_bar));
    // <rho_i, rho_bar> = |rho_bar|^2 for every i
    Cy r2 = Cy::from_q3(lat.R);
    for (const auto& r : lat.rho) CHECK(ip(r, lat.rho_bar) == r2);
    // |rho_bar|^2 = sqrt3 / (2 (4 + sqrt3)) = (4 sqrt3 - 3)/26
    CHECK(lat.R == Q3{mpq_class(-3, 26), mpq_class(2, 13)});
    // |rho_minus|^2 = -sqrt3 / (2 (4 - sqrt3))
    CHECK(norm_q3(lat.rho_minus) == Q3{mpq_class(-3, 26), mpq_class(-2, 13)});
}

TEST_CASE("z0 is isotropic and Sigma_P is the point sum") {
    const auto& lat = lattice();
    CHECK(norm_q3(lat.z0) == Q3{0, 0});
    Vec14 s = zero_vec14();
    for (int x = 0; x < 13; ++x) s = add(s, lat.roots[x]);
    CHECK(eq(s, lat.sigma_P));
}

TEST_CASE("integral basis and membership") {
    const auto& lat = lattice();
    CHECK(lat.det_gram == Eis{-2187, 0});
    for (const auto& r : lat.roots) CHECK(membership(lat, r));
    CHECK(membership(lat, lat.w_P));
    CHECK(membership(lat, lat.w_L));
    CHECK(membership(lat, lat.z0));
    CHECK(membership(lat, lat.sigma_P));
    // x_1 / 3 is not in L
    CHECK(!membership(lat, scale(Cy(mpq_class(1, 3)), lat.roots[0])));
    // rho_bar is not a lattice vector (it is a genuine 1/26 average)
    CHECK(!membership(lat, lat.rho_bar));
    // round trips through integral coordinates
    for (int t = 0; t < 50; ++t) {
        Vec14 v = random_lattice_vector(lat);
        auto c = to_integral(lat, v);
        REQUIRE(c.has_value());
        CHECK(eq(from_integral(lat, *c), v));
    }
}

TEST_CASE("inner products of lattice vectors lie in pE") {
    const auto& lat = lattice();
    for (int t = 0; t < 1000; ++t) {
        Vec14 u = random_lattice_vector(lat), v = random_lattice_vector(lat);
        Eis e;
        REQUIRE(ip(u, v).is_eis(&e));
        CHECK(divides(Eis::p(), e));
    }
}

TEST_CASE("dual scaling: p * gram^{-1} is E-integral") {
    const auto& lat = lattice();
    // invert the 14x14 gram over the field
    std::array<std::array<Cy, 28>, 14> aug{};
    for (int i = 0; i < 14; ++i) {
        for (int j = 0; j < 14; ++j) aug[i][j] = Cy::from_eis(lat.gram_int[i][j]);
        aug[i][14 + i] = Cy(1);
    }
    for (int col = 0; col < 14; ++col) {
        int piv = -1;
        for (int r = col; r < 14; ++r)
            if (!aug[r][col].is_zero()) { piv = r; break; }
        REQUIRE(piv >= 0);
        std::swap(aug[piv], aug[col]);
        Cy inv = aug[col][col].inv();
        for (int k = 0; k < 28; ++k) aug[col][k] = inv * aug[col][k];
        for (int r = 0; r < 14; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            Cy f = aug[r][col];
            for (int k = 0; k < 28; ++k) aug[r][k] -= f * aug[col][k];
        }
    }
    Cy p = Cy::from_eis(Eis::p());
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) CHECK((p * aug[i][14 + j]).is_eis());
}

TEST_CASE("realification cross-check of the lattice determinant") {
    const auto& lat = lattice();
    std::vector<EisVec> gens;
    for (const auto& r : lat.roots) {
        EisVec g;
        for (int k = 0; k < 14; ++k) {
            Eis e;
            REQUIRE((mpq_class(3) * r[k]).is_eis(&e));
            g[k] = e;
        }
        gens.push_back(g);
    }
    mpz_class dz = z_hnf_det28(gens);
    // index of 3L in E^14 as a Z-module equals the E-index norm
    mpz_class de = 1;
    for (int i = 0; i < 14; ++i) de *= lat.hnf[i][lat.pivot[i]].norm();
    CHECK(dz == de);
}

TEST_CASE("pattern membership matches the HNF test") {
    const auto& lat = lattice();
    for (int t = 0; t < 2000; ++t) {
        Eis A = Eis::p() * Eis{(long)(rng() % 5) - 2, (long)(rng() % 5) - 2};
        std::array<Eis, 13> B;
        for (auto& b : B) {
            // random element of pE, often zero
            long pick = (long)(rng() % 4);
            b = pick == 0 ? Eis{0, 0}
                          : Eis::p() * Eis{(long)(rng() % 3) - 1, (long)(rng() % 3) - 1};
        }
        Vec14 v = vector_of_pattern(A, B);
        CHECK(pattern_in_lattice(lat, A, B) == membership(lat, v));
    }
}

TEST_CASE("discriminant groups of F and F-perp") {
    const auto& lat = lattice();
    auto dF = disc_group(gram_F());
    CHECK(dF.order == 13 * 13 * 9);
    auto fp = fperp_data(lat);
    CHECK(fp.rank == 12);
    auto dP = disc_group(fp.gram);
    mpz_class expect = 13 * 13;
    for (int k = 0; k < 12; ++k) expect *= 3;
    CHECK(dP.order == expect);
    // unimodular rank-1 sanity case
    auto triv = disc_group({{Eis{1, 0}}});
    CHECK(triv.order == 1);
}

TEST_CASE("projections to F and F-perp") {
    const auto& lat = lattice();
    // pi_F(x_0) = Sigma_P / 13 = (4 w_P - conj(p) w_L)/13
    Vec14 xbar = pi_F(lat, lat.roots[0]);
    CHECK(eq(scale(Cy(13), xbar), lat.sigma_P));
    for (int t = 0; t < 20; ++t) {
        Vec14 v = random_lattice_vector(lat);
        Vec14 f = pi_F(lat, v), fp = pi_Fperp(lat, v);
        CHECK(eq(add(f, fp), v));
        CHECK(ip(lat.w_P, fp).is_zero());
        CHECK(ip(lat.w_L, fp).is_zero());
    }
    // <x - x_0, w_P> = 0
    CHECK(ip(sub(lat.roots[1], lat.roots[0]), lat.w_P).is_zero());
}

TEST_CASE("sigma is a gram-preserving extension of the polarity") {
    const auto& lat = lattice();
    // sigma(w_P) = -w w_L and sigma(w_L) = w_P, so [rho_bar] is fixed
    CHECK(eq(sigma_apply(lat, lat.w_P), scale(-Cy::omega(), lat.w_L)));
    CHECK(eq(sigma_apply(lat, lat.w_L), lat.w_P));
    Vec14 srho = sigma_apply(lat, lat.rho_bar);
    CHECK(eq(srho, scale(Cy::xi(), lat.rho_bar)));
    // sigma^2 = -w (projectively the identity)
    Vec14 twice = sigma_apply(lat, sigma_apply(lat, lat.roots[4]));
    CHECK(eq(twice, scale(-Cy::omega(), lat.roots[4])));
    CHECK(mat_preserves_gram(lat, lat.sigma_int));
    // discriminant action: sigma(x0 - xbar) = -w (l0 - lbar), which is
    // 3 conj(p) (x0 - xbar) mod F-perp
    Vec14 xbar = pi_F(lat, lat.roots[0]);
    Vec14 lbar = pi_F(lat, lat.roots[13]);
    Vec14 lhs = sigma_apply(lat, sub(lat.roots[0], xbar));
    CHECK(eq(lhs, scale(-Cy::omega(), sub(lat.roots[13], lbar))));
    Vec14 diff = sub(sub(lat.roots[13], lbar),
                     scale(Cy::from_eis(Eis{3, 0} * Eis::p()), sub(lat.roots[0], xbar)));
    CHECK(ip(lat.w_P, diff).is_zero());
    CHECK(ip(lat.w_L, diff).is_zero());
}
