#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mirrorcert/plane.hpp"

using namespace mirrorcert;

TEST_CASE("plane counts across supported orders") {
    for (int q : {2, 3, 4, 5, 7, 8, 9}) {
        auto pl = build_plane(q);
        CHECK(pl.n == q * q + q + 1);
        for (int l = 0; l < pl.n; ++l) CHECK((int)pl.line_pts[l].size() == q + 1);
        for (int x = 0; x < pl.n; ++x) CHECK((int)pl.pt_lines[x].size() == q + 1);
        // two distinct lines meet in exactly one point
        for (int l = 0; l < pl.n; ++l)
            for (int m = l + 1; m < pl.n; ++m) {
                int common = 0;
                for (int x : pl.line_pts[l])
                    if (pl.incident(x, m)) ++common;
                CHECK(common == 1);
            }
    }
    CHECK_THROWS(build_plane(6));
    CHECK_THROWS(build_plane(11));
}

TEST_CASE("incidence double count") {
    auto pl = build_plane(3);
    int total = 0;
    for (int l = 0; l < pl.n; ++l) total += (int)pl.line_pts[l].size();
    CHECK(total == pl.n * 4);
}

TEST_CASE("group order and incidence preservation") {
    auto pl = build_plane(3);
    auto g = build_group(pl);
    CHECK(g.l33.size() == 5616);
    CHECK(g.full.size() == 11232);
    for (size_t k = 0; k < g.full.size(); k += 97) {
        const auto& p = g.full[k];
        for (int u = 0; u < 26; ++u)
            for (int v = 0; v < 26; ++v)
                CHECK(pl.vertex_adjacent(u, v) == pl.vertex_adjacent(p[u], p[v]));
    }
}

TEST_CASE("polarity properties") {
    auto pl = build_plane(3);
    auto g = build_group(pl);
    for (int v = 0; v < 26; ++v) {
        CHECK(g.polarity[g.polarity[v]] == v);
        CHECK(pl.is_point(v) != pl.is_point(g.polarity[v]));
    }
    for (int x = 0; x < 13; ++x)
        for (int l = 0; l < 13; ++l)
            CHECK(pl.incident(x, l) ==
                  pl.vertex_adjacent(g.polarity[x], g.polarity[13 + l]));
}

TEST_CASE("pair orbits") {
    auto pl = build_plane(3);
    auto g = build_group(pl);
    auto full = pair_orbits(pl, g.full);
    CHECK(full.count == 3);
    auto l33 = pair_orbits(pl, g.l33);
    CHECK(l33.count >= 4);
    CHECK(l33.count == 6);
    std::vector<Perm> id(1, Perm(26));
    for (int i = 0; i < 26; ++i) id[0][i] = (int8_t)i;
    auto triv = pair_orbits(pl, id);
    CHECK(triv.count == 26 * 25);
}

TEST_CASE("twelve-gons alternate and are induced") {
    auto pl = build_plane(3);
    auto gons = enumerate_12gons(pl);
    CHECK(!gons.empty());
    for (const auto& g : gons)
        for (int i = 0; i < 12; ++i) {
            CHECK(pl.is_point(g[i]) != pl.is_point(g[(i + 1) % 12]));
            CHECK(pl.vertex_adjacent(g[i], g[(i + 1) % 12]));
            for (int j = i + 2; j < 12; ++j)
                if (!(i == 0 && j == 11)) CHECK(!pl.vertex_adjacent(g[i], g[j]));
        }
}

TEST_CASE("marked 12-gon transitivity") {
    auto pl = build_plane(3);
    auto g = build_group(pl);
    auto gons = enumerate_12gons(pl);
    auto orb = marked_gon_orbits(pl, g, gons);
    CHECK(orb.total_marked == 24 * (long long)gons.size());
    CHECK(orb.orbits_full == 1);
    CHECK(orb.orbits_l33 == 2);
    // simple transitivity forces |marked gons| = |group|
    CHECK(orb.total_marked == 11232);
}

TEST_CASE("m666 labels") {
    auto pl = build_plane(3);
    auto m = compute_m666(pl);
    CHECK(pl.is_point(m.a));
    for (int i = 0; i < 3; ++i) {
        CHECK(!pl.is_point(m.b[i]));
        CHECK(pl.vertex_adjacent(m.a, m.b[i]));
        CHECK(pl.vertex_adjacent(m.b[i], m.c[i]));
        CHECK(pl.vertex_adjacent(m.c[i], m.d[i]));
        CHECK(pl.vertex_adjacent(m.d[i], m.e[i]));
        CHECK(pl.vertex_adjacent(m.e[i], m.f[i]));
    }
    // the printed gon is among the enumerated 12-gons
    auto gons = enumerate_12gons(pl);
    bool found = false;
    auto marks = markings_of(m.printed_gon);
    for (const auto& g : gons)
        for (const auto& mk : markings_of(g))
            if (mk == m.printed_gon) found = true;
    CHECK(found);
    CHECK(marks.size() == 24);
}
