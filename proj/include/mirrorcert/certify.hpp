#pragma once

#include <string>
#include <vector>

#include "mirrorcert/chgeom.hpp"
#include "mirrorcert/reflect.hpp"

namespace mirrorcert {

enum class PairKind { Incident, Orthogonal, PointPoint };
std::string pair_kind_name(PairKind k);
// canonical (lexicographically least) representative of each orbit
std::pair<int, int> pair_representative(const Lattice& lat, PairKind k);

// --- Table 1: the seven root types by inner products with (w_P, x_i) --------

struct Table1Row {
    int type = 0;
    std::string wp_pattern, x_pattern;
    bool has_min = true;     // rows without roots report no minimum
    Q3 min_ht2;              // minimum over unit patterns
    double min_ht = 0;
    bool root_exists = false;
};
std::vector<Table1Row> table1_scan(const Lattice& lat);

// --- the 130 candidate mirrors ----------------------------------------------

struct Candidate {
    Vec14 root;         // canonical unit representative
    std::string label;  // "P3", "L7", "phi+(P1,L2)", ...
    int kind;           // 0 point, 1 line, 2 phi+, 3 phi-
};
std::vector<Candidate> candidate_mirrors(const Lattice& lat);
Vec14 canonical_root(const Vec14& v);

// --- Table 2 ------------------------------------------------------------------

struct Table2 {
    int v1, v2;
    std::array<Vec14, 7> z;
    std::array<Vec14, 4> r;                 // r1, r2, r2 + r1, r1 - w r2
    std::array<std::array<Cy, 7>, 4> c;     // c[j][k] = <z_k, r_{j+1}> / R
    bool observations_hold = false;         // the three half-plane observations
};
Table2 table2_values(const Lattice& lat, int v1, int v2);

// --- certificates --------------------------------------------------------------

struct MirrorVerdict {
    std::string label;
    TriHit hit;
};

struct MeetDeltaReport {
    PairKind kind;
    int v1, v2;
    bool pass = false;
    Q3 ht_bound2;                      // exact: 6/alpha
    bool ht_bound_ok = false;          // <= 2.18^2 exactly
    bool type_margins_ok = false;      // type 5-7 minima >= 2.18 + 0.05
    bool types23_empty = false;
    int point12_violations = 0;        // point-root md bounds >= 12 - margin
    std::vector<std::string> line12_exceptions;
    double wp_bound = 0;               // 9 sinh^2 bound for |<w_P, r>|^2
    bool wp10_ok = false;
    std::vector<MirrorVerdict> touching;
    bool touching_expected = false;
};
MeetDeltaReport meetdelta_certificate(const Lattice& lat, PairKind kind);
MeetDeltaReport meetdelta_certificate_pair(const Lattice& lat, PairKind kind, int v1, int v2);

struct PerturbReport {
    PairKind kind;
    int v1, v2;
    mpq_class eps;
    bool pass = false;
    int checks = 0;
    std::vector<std::string> failures;
};
PerturbReport perturb_certificate(const Lattice& lat, PairKind kind, const mpq_class& eps);
PerturbReport perturb_certificate_pair(const Lattice& lat, PairKind kind, int v1, int v2,
                                       const mpq_class& eps);

// d(rho_bar, p_r) > d(rho_bar, M) with M the midpoint towards phi_r(rho_bar),
// plus d(rho_bar, p_r) = d_0; exact
bool delta_r_certificate(const Lattice& lat, int vertex);

} // namespace mirrorcert
