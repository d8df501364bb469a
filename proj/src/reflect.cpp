#include "mirrorcert/reflect.hpp"

#include <stdexcept>

namespace mirrorcert {

Vec14 reflect_apply(const Vec14& root, const Cy& alpha, const Vec14& v) {
    Q3 n = norm_q3(root);
    if (!(n == Q3{-3, 0})) throw std::invalid_argument("root must have norm -3");
    Cy lam = (Cy(1) - alpha) * (mpq_class(1, 3) * ip(root, v));
    return add(v, scale(lam, root));
}

Reflection make_reflection(const Lattice& lat, const Vec14& root) {
    Reflection out;
    out.root = root;
    auto ri = to_integral(lat, root);
    if (!ri) throw std::invalid_argument("root is not a lattice vector");
    out.root_int = *ri;

    // column j of the matrix: e_j + lambda_j * root_int with
    // lambda_j = (1 - w) <r, b_j> / 3, an Eisenstein integer
    Cy one_minus_w = Cy(1) - Cy::omega();
    mpq_class third(1, 3);
    for (int j = 0; j < 14; ++j) {
        Vec14 bj = zero_vec14();
        for (int k = 0; k < 14; ++k) bj[k] = third * Cy::from_eis(lat.hnf[j][k]);
        Cy lam_cy = one_minus_w * (third * ip(root, bj));
        Eis lam;
        if (!lam_cy.is_eis(&lam)) throw std::logic_error("reflection not E-integral");
        for (int i = 0; i < 14; ++i)
            out.mat[i][j] = (i == j ? Eis{1, 0} : Eis{0, 0}) + lam * out.root_int[i];
    }
    out.inv = mat_mul(out.mat, out.mat);
    return out;
}

const std::vector<Reflection>& simple_reflections(const Lattice& lat) {
    static std::vector<Reflection> refl = [&] {
        std::vector<Reflection> v;
        for (const auto& r : lat.roots) v.push_back(make_reflection(lat, r));
        return v;
    }();
    return refl;
}

std::vector<RelationRow> verify_relations(const Lattice& lat) {
    const auto& refl = simple_reflections(lat);
    std::vector<RelationRow> rows;
    for (int i = 0; i < 26; ++i)
        for (int j = i + 1; j < 26; ++j) {
            RelationRow row{i, j, lat.plane.vertex_adjacent(i, j), false};
            const EisMat &A = refl[i].mat, &B = refl[j].mat;
            if (row.edge) {
                row.ok = mat_eq(mat_mul(A, mat_mul(B, A)), mat_mul(B, mat_mul(A, B)));
            } else {
                row.ok = mat_eq(mat_mul(A, B), mat_mul(B, A));
            }
            rows.push_back(row);
        }
    return rows;
}

DeflateResult deflate_check(const Lattice& lat, const std::array<int, 12>& gon) {
    const auto& refl = simple_reflections(lat);
    EisVec v = refl[gon[10]].root_int;
    for (int k = 9; k >= 0; --k) v = mat_apply(refl[gon[k]].mat, v);
    DeflateResult out;
    out.value = from_integral(lat, v);
    out.unit_k = unit_multiple_of(out.value, lat.roots[gon[11]]);
    return out;
}

bool min_generation_identity(const Lattice& lat, const std::array<int, 12>& gon) {
    const auto& refl = simple_reflections(lat);
    auto word = [&](int from, int to) {  // product phi_{y_from} ... phi_{y_to}
        EisMat m = mat_identity();
        if (from >= to)
            for (int k = from; k >= to; --k) m = mat_mul(m, refl[gon[k - 1]].mat);
        else
            for (int k = from; k <= to; ++k) m = mat_mul(m, refl[gon[k - 1]].mat);
        return m;
    };
    EisMat A = word(11, 3);   // y11 y10 ... y3
    EisMat Ainv = mat_identity();
    for (int k = 3; k <= 11; ++k) Ainv = mat_mul(Ainv, refl[gon[k - 1]].inv);
    EisMat B = word(2, 10);   // y2 ... y10
    EisMat Binv = mat_identity();
    for (int k = 10; k >= 2; --k) Binv = mat_mul(Binv, refl[gon[k - 1]].inv);

    const EisMat &y1 = refl[gon[0]].mat, &y2 = refl[gon[1]].mat;
    const EisMat &y2i = refl[gon[1]].inv, &y11 = refl[gon[10]].mat;
    EisMat lhs = mat_mul(A, mat_mul(y2i, mat_mul(y1, mat_mul(y2, Ainv))));
    EisMat rhs = mat_mul(B, mat_mul(y11, Binv));
    return mat_eq(lhs, rhs);
}

Q3 height2(const Lattice& lat, const Vec14& r) {
    Q3 num = ip(lat.rho_bar, r).abs2();
    return num / (lat.R * lat.R);
}

double height(const Lattice& lat, const Vec14& r) {
    double h2 = height2(lat, r).to_double();
    return h2 <= 0 ? 0.0 : std::sqrt(h2);
}

} // namespace mirrorcert
