#pragma once

#include <optional>
#include <vector>

#include "mirrorcert/lattice.hpp"

namespace mirrorcert {

// Order-3 complex reflection in a norm -3 root:
//   phi(v) = v + (1 - alpha) (<r, v>/3) r,   alpha = w or conj(w).
// Stored as an exact matrix over E in the integral basis, so words evaluate
// in integer arithmetic.
struct Reflection {
    Vec14 root;
    EisVec root_int{};
    EisMat mat{}, inv{};  // inv = mat^2 (order three)
};

Reflection make_reflection(const Lattice& lat, const Vec14& root);

// generic application on reference coordinates, any exact alpha
Vec14 reflect_apply(const Vec14& root, const Cy& alpha, const Vec14& v);

// the 26 simple omega-reflections, in vertex order (cached)
const std::vector<Reflection>& simple_reflections(const Lattice& lat);

struct RelationRow {
    int i, j;
    bool edge;  // braid expected iff incident in D
    bool ok;
};
// all 325 unordered pairs, exact matrix identities
std::vector<RelationRow> verify_relations(const Lattice& lat);

struct DeflateResult {
    Vec14 value;                // phi_{y1} ... phi_{y10} (y11)
    std::optional<int> unit_k;  // value = unit6(k) * y12 when set
};
DeflateResult deflate_check(const Lattice& lat, const std::array<int, 12>& gon);

// (y11 .. y3) y2^-1 y1 y2 (y11 .. y3)^-1 = (y2 .. y10) y11 (y2 .. y10)^-1
bool min_generation_identity(const Lattice& lat, const std::array<int, 12>& gon);

// ht(r)^2 = |<rho_bar, r>|^2 / |rho_bar|^4, exact, plus the float view
Q3 height2(const Lattice& lat, const Vec14& r);
double height(const Lattice& lat, const Vec14& r);

} // namespace mirrorcert
