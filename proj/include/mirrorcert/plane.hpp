#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace mirrorcert {

// P^2(F_q). Points and lines are normalized homogeneous triples (first
// nonzero coordinate 1), listed in lexicographic order; points and lines
// share the same triple list, incidence is the vanishing of the dot form.
// Vertices of the incidence graph D: 0..n-1 points, n..2n-1 lines.
struct IncidencePlane {
    int q = 0, n = 0;
    std::vector<std::array<int, 3>> triples;
    std::vector<std::vector<int>> line_pts;   // per line: sorted point indices
    std::vector<std::vector<int>> pt_lines;   // per point: sorted line indices
    std::vector<uint32_t> adj;                // adjacency bitmask per vertex (2n <= 32 for q = 3)

    int n_vertices() const { return 2 * n; }
    bool is_point(int v) const { return v < n; }
    bool incident(int pt, int ln) const;
    bool vertex_adjacent(int u, int v) const;
    std::string vertex_name(int v) const;
};

// q in {2,3,4,5,7,8,9}; throws on anything else.
IncidencePlane build_plane(int q);

using Perm = std::vector<int8_t>;  // permutation of the 2n vertices

// Full group of diagram automorphisms for q = 3: collineations PGL_3(3)
// plus the dot-product polarity; order 11232.
struct PlaneGroup {
    std::vector<Perm> l33;   // collineations only (5616)
    std::vector<Perm> full;  // with the polarity (11232)
    Perm polarity;
};
PlaneGroup build_group(const IncidencePlane& pl);

// Induced 12-cycles of D, one canonical tuple per unmarked 12-gon.
std::vector<std::array<int, 12>> enumerate_12gons(const IncidencePlane& pl);

// All markings (rotation + direction) of a gon.
std::vector<std::array<int, 12>> markings_of(const std::array<int, 12>& gon);

struct MarkedGonOrbits {
    long long total_marked = 0;
    int orbits_full = 0;
    int orbits_l33 = 0;
};
MarkedGonOrbits marked_gon_orbits(const IncidencePlane& pl, const PlaneGroup& g,
                                  const std::vector<std::array<int, 12>>& gons);

// Orbit partition of ordered pairs of distinct vertices under a permutation set.
struct PairOrbits {
    std::vector<int> orbit_of;                // index v1 * 2n + v2, -1 on diagonal
    std::vector<std::pair<int, int>> reps;    // lexicographically least member per orbit
    int count = 0;
};
PairOrbits pair_orbits(const IncidencePlane& pl, const std::vector<Perm>& perms);

// Frozen M666 labeling: a is a point, b_i the three tree lines through it,
// then arms c_i, d_i, e_i, f_i; a3 is the point closing the printed 12-gon
// (f2,e2,d2,c2,b2,a,b1,c1,d1,e1,f1,a3), which is an induced 12-cycle.
// Deterministic: the lexicographically first valid assignment.
struct M666 {
    int a;
    std::array<int, 3> b, c, d, e, f;
    int a3;
    std::array<int, 12> printed_gon;
};
M666 compute_m666(const IncidencePlane& pl);

} // namespace mirrorcert
