#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mirrorcert/certify.hpp"

using namespace mirrorcert;

static std::mt19937_64 rng(2024);

TEST_CASE("table 1 reproduction") {
    const auto& lat = lattice();
    auto rows = table1_scan(lat);
    REQUIRE(rows.size() == 7);
    CHECK(rows[0].min_ht2 == Q3{1, 0});
    CHECK(!rows[1].root_exists);
    CHECK(!rows[2].root_exists);
    CHECK(rows[3].min_ht2 == Q3{1, 0});
    CHECK(rows[3].root_exists);
    // row 5: (2 + sqrt3)^2 = 7 + 4 sqrt3
    CHECK(rows[4].min_ht2 == Q3{7, 4});
    CHECK(rows[4].root_exists);
    CHECK(rows[5].min_ht == doctest::Approx(3.24).epsilon(0.0035));
    CHECK(rows[6].min_ht == doctest::Approx(2.73).epsilon(0.0035));
    // row 7 minimum is exactly 1 + sqrt3
    CHECK(rows[6].min_ht2 == Q3{4, 2});
    CHECK(rows[6].root_exists);
}

TEST_CASE("candidate mirrors: 130 = 13 + 13 + 104 with the stated heights") {
    const auto& lat = lattice();
    auto cands = candidate_mirrors(lat);
    CHECK(cands.size() == 130);
    int simple = 0, images = 0;
    for (const auto& c : cands) {
        CHECK(norm_q3(c.root) == Q3{-3, 0});
        CHECK(membership(lat, c.root));
        if (c.kind <= 1) {
            CHECK(height2(lat, c.root) == Q3{1, 0});
            ++simple;
        } else {
            CHECK(height2(lat, c.root) == Q3{2, 1});  // |1 + xi|^2 = 2 + sqrt3
            ++images;
        }
    }
    CHECK(simple == 26);
    CHECK(images == 104);
}

TEST_CASE("table 2 exact reproduction") {
    const auto& lat = lattice();
    auto [v1, v2] = pair_representative(lat, PairKind::Incident);
    auto t = table2_values(lat, v1, v2);

    Cy c = Cy::from_q3(Q3{1, mpq_class(1, 3)});  // 1 + 3^{-1/2}
    Cy w = Cy::omega(), wb = Cy::omega_bar(), i = Cy::i(), xi = Cy::xi(), xib = Cy::xi_bar();
    std::array<std::array<Cy, 7>, 4> expect = {{
        {Cy(1), Cy(0), wb, wb * c, wb - i, -(i * c), -i},
        {xib, xib * c, xib - wb, -(wb * c), -wb, Cy(0), -w},
        {Cy(1) + xib, xib * c, xib, Cy(0), -i, -(i * c), -i - w},
        {Cy(1) + xi, xi * c, xi - w, -(w * c), -w - i, -(i * c), -i + wb},
    }};
    for (int j = 0; j < 4; ++j)
        for (int k = 0; k < 7; ++k) CHECK(t.c[j][k] == expect[j][k]);
    CHECK(t.observations_hold);
    // r3 = phi_{r1}(r2) = r2 + r1 and r4 = phi_{r2}(r1) = r1 - w r2
    CHECK(eq(t.r[2], reflect_apply(lat.roots[v1], Cy::omega(), lat.roots[v2])));
    CHECK(eq(t.r[3], reflect_apply(lat.roots[v2], Cy::omega(), lat.roots[v1])));
    CHECK_THROWS(table2_values(lat, 0, 1));  // not a braiding pair
}

TEST_CASE("meetdelta certificates for the three orbit representatives") {
    const auto& lat = lattice();
    auto inc = meetdelta_certificate(lat, PairKind::Incident);
    CHECK(inc.pass);
    CHECK(inc.touching.size() == 4);
    CHECK(inc.ht_bound2 == Q3{3, 1});  // 6/(3 - sqrt3) = 3 + sqrt3
    CHECK(inc.line12_exceptions.size() == 3);

    auto orth = meetdelta_certificate(lat, PairKind::Orthogonal);
    CHECK(orth.pass);
    CHECK(orth.touching.size() == 2);
    CHECK(orth.ht_bound2 == Q3{2, 0});
    CHECK(orth.line12_exceptions.empty());

    auto pp = meetdelta_certificate(lat, PairKind::PointPoint);
    CHECK(pp.pass);
    CHECK(pp.touching.size() == 2);
    CHECK(pp.line12_exceptions.empty());
}

TEST_CASE("certificates are orbit invariants (spot check)") {
    const auto& lat = lattice();
    auto grp = build_group(lat.plane);
    auto po = pair_orbits(lat.plane, grp.full);
    for (PairKind kind : {PairKind::Incident, PairKind::Orthogonal, PairKind::PointPoint}) {
        auto [v1, v2] = pair_representative(lat, kind);
        int orbit = po.orbit_of[v1 * 26 + v2];
        int tested = 0;
        while (tested < 5) {
            const auto& perm = grp.full[rng() % grp.full.size()];
            int w1 = perm[v1], w2 = perm[v2];
            if (po.orbit_of[w1 * 26 + w2] != orbit) continue;
            // the triangle data needs rho_1 of point type; certificates are
            // stated for (point, *) pairs, so skip the swapped images
            if (!lat.plane.is_point(w1)) continue;
            auto rep = meetdelta_certificate_pair(lat, kind, w1, w2);
            CHECK(rep.pass);
            CHECK(rep.touching.size() == (kind == PairKind::Incident ? 4 : 2));
            auto prep = perturb_certificate_pair(lat, kind, w1, w2, mpq_class(1, 100));
            CHECK(prep.pass);
            ++tested;
        }
    }
}

TEST_CASE("perturbation certificates") {
    const auto& lat = lattice();
    auto inc = perturb_certificate(lat, PairKind::Incident, mpq_class(1, 100));
    CHECK(inc.pass);
    CHECK(inc.checks == 4 * (6 + 3));
    auto orth = perturb_certificate(lat, PairKind::Orthogonal, mpq_class(1, 100));
    CHECK(orth.pass);
    CHECK(orth.checks == 2 * (4 + 2));
    auto pp = perturb_certificate(lat, PairKind::PointPoint, mpq_class(1, 100));
    CHECK(pp.pass);
    // other rationals certify as well
    CHECK(perturb_certificate(lat, PairKind::Incident, mpq_class(1, 7)).pass);
    CHECK_THROWS(perturb_certificate(lat, PairKind::Incident, mpq_class(0)));
}

TEST_CASE("delta_r certificate for all simple roots") {
    const auto& lat = lattice();
    for (int v = 0; v < 26; ++v) CHECK(delta_r_certificate(lat, v));
}

TEST_CASE("height filter agrees with direct intersection tests") {
    const auto& lat = lattice();
    // roots excluded by the height bound never meet Delta_1: sample type-5
    // patterns u w_P - u1 x_i - u2 x_j, all of which are roots
    auto [v1, v2] = pair_representative(lat, PairKind::Incident);
    PairGeom g = make_pair_geom(lat, v1, v2);
    int checked = 0;
    while (checked < 50) {
        int i = (int)(rng() % 13), j = (int)(rng() % 13);
        if (i == j) continue;
        Vec14 r = scale(Cy::from_eis(unit6(rng() % 6)), lat.w_P);
        r = sub(r, scale(Cy::from_eis(unit6(rng() % 6)), lat.roots[i]));
        r = sub(r, scale(Cy::from_eis(unit6(rng() % 6)), lat.roots[j]));
        REQUIRE(norm_q3(r) == Q3{-3, 0});
        if (!(height2(lat, r) > g.alpha.inv() * Q3{6, 0})) continue;
        TriHit h = triangle_mirror_intersect(r, lat.rho_bar, g.p1, g.q);
        CHECK(h.kind == TriHit::Empty);
        ++checked;
    }
}
