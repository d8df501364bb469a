#include "mirrorcert/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace mirrorcert {

namespace {

// echelon form over E of a list of row vectors, pivots in increasing column
// order, pivot entries canonical associates, entries above pivots reduced
struct Echelon {
    std::vector<EisVec> rows;
    std::vector<int> pivots;
};

Echelon echelon_eis(std::vector<EisVec> rows) {
    Echelon out;
    for (int col = 0; col < 14; ++col) {
        // Euclid within the column until at most one unprocessed row is nonzero
        while (true) {
            int best = -1;
            for (size_t r = 0; r < rows.size(); ++r)
                if (!rows[r][col].is_zero() &&
                    (best < 0 || rows[r][col].norm() < rows[best][col].norm()))
                    best = (int)r;
            if (best < 0) break;
            bool reduced_any = false;
            for (size_t r = 0; r < rows.size(); ++r) {
                if ((int)r == best || rows[r][col].is_zero()) continue;
                Eis q = divmod_nearest(rows[r][col], rows[best][col]).quot;
                for (int k = 0; k < 14; ++k) rows[r][k] = rows[r][k] - q * rows[best][k];
                reduced_any = true;
            }
            if (!reduced_any) {
                // move the pivot row out
                EisCanon cn = canonical_associate(rows[best][col]);
                Eis u = unit6(cn.k);
                EisVec prow;
                for (int k = 0; k < 14; ++k) prow[k] = u * rows[best][k];
                out.rows.push_back(prow);
                out.pivots.push_back(col);
                rows.erase(rows.begin() + best);
                break;
            }
        }
    }
    // reduce entries above each pivot
    for (size_t r = 0; r < out.rows.size(); ++r)
        for (size_t s = r + 1; s < out.rows.size(); ++s) {
            int pc = out.pivots[s];
            if (out.rows[r][pc].is_zero()) continue;
            Eis q = divmod_nearest(out.rows[r][pc], out.rows[s][pc]).quot;
            if (q.is_zero()) continue;
            for (int k = 0; k < 14; ++k)
                out.rows[r][k] = out.rows[r][k] - q * out.rows[s][k];
        }
    return out;
}

Eis ip_eis_scaled(const EisVec& u, const EisVec& v) {
    // hermitian form of the diag(3,-3,..,-3) reference gram on E-vectors
    Eis acc = u[0].conj() * v[0];
    for (int k = 1; k < 14; ++k) acc -= u[k].conj() * v[k];
    return Eis{3, 0} * acc;
}

int mod3(const mpz_class& x) {
    mpz_class r = x % 3;
    if (r < 0) r += 3;
    return (int)r.get_si();
}

// class of x mod p in E/pE = F_3 (w = 1 mod p)
int eis_mod_p(const Eis& x) { return mod3(x.a + x.b); }

std::vector<std::array<int8_t, 13>> incidence_left_kernel(const IncidencePlane& pl) {
    // rows of N over F_3: N[x][l] = 1 if point x on line l; we need the left
    // kernel of the column space, i.e. {h : h^T N = 0}
    std::array<std::array<int8_t, 13>, 13> N{};
    for (int l = 0; l < 13; ++l)
        for (int x : pl.line_pts[l]) N[x][l] = 1;
    // solve h N = 0 by row-reducing N augmented with the identity; the
    // identity part of the zero rows spans the left kernel
    std::array<std::array<int8_t, 26>, 13> A{};
    for (int x = 0; x < 13; ++x) {
        for (int l = 0; l < 13; ++l) A[x][l] = N[x][l];
        A[x][13 + x] = 1;
    }
    int row = 0;
    for (int col = 0; col < 13 && row < 13; ++col) {
        int piv = -1;
        for (int r = row; r < 13; ++r)
            if (A[r][col] % 3 != 0) { piv = r; break; }
        if (piv < 0) continue;
        std::swap(A[piv], A[row]);
        int inv = (A[row][col] % 3 == 1) ? 1 : 2;
        for (int k = 0; k < 26; ++k) A[row][k] = (int8_t)((A[row][k] * inv) % 3);
        for (int r = 0; r < 13; ++r) {
            if (r == row || A[r][col] % 3 == 0) continue;
            int f = A[r][col] % 3;
            for (int k = 0; k < 26; ++k)
                A[r][k] = (int8_t)(((A[r][k] - f * A[row][k]) % 3 + 3) % 3);
        }
        ++row;
    }
    std::vector<std::array<int8_t, 13>> kernel;
    for (int r = row; r < 13; ++r) {
        std::array<int8_t, 13> h{};
        for (int x = 0; x < 13; ++x) h[x] = A[r][13 + x];
        kernel.push_back(h);
    }
    return kernel;
}

} // namespace

Lattice build_lattice(const Eis& p) {
    if (p.norm() != 3) throw std::invalid_argument("|p|^2 must equal q = 3");
    Lattice lat;
    lat.plane = build_plane(3);
    const int n = 13;

    Cy cp = Cy::from_eis(p);
    mpq_class third(1, 3);
    Cy p_over_3 = third * cp;

    lat.w_P = zero_vec14();
    lat.w_P[0] = Cy(1);
    for (int x = 0; x < n; ++x) {
        Vec14 v = zero_vec14();
        v[1 + x] = Cy(1);
        lat.roots.push_back(v);
    }
    for (int l = 0; l < n; ++l) {
        // l = (p/3)(w_P - sum_{x in l} x)
        Vec14 v = zero_vec14();
        v[0] = p_over_3;
        for (int x : lat.plane.line_pts[l]) v[1 + x] = -p_over_3;
        lat.roots.push_back(v);
    }
    // w_L = (p/3)(4 w_P - Sigma_P)
    lat.w_L = zero_vec14();
    lat.w_L[0] = mpq_class(4) * p_over_3;
    for (int x = 0; x < n; ++x) lat.w_L[1 + x] = -p_over_3;

    // Sigma_P = 4 w_P - conj(p) w_L  (equals the sum of the point roots)
    lat.sigma_P = sub(scale(Cy(4), lat.w_P), scale(Cy::from_eis(p.conj()), lat.w_L));

    Cy xi = Cy::xi();
    mpq_class c_plus_a(2, 13), c_plus_b(-1, 26);   // 1/(2(4+sqrt3)) = (4-sqrt3)/26
    mpq_class c_minus_a(2, 13), c_minus_b(1, 26);  // 1/(2(4-sqrt3)) = (4+sqrt3)/26
    Cy coef_plus = Cy::from_q3(Q3{c_plus_a, c_plus_b});
    Cy coef_minus = Cy::from_q3(Q3{c_minus_a, c_minus_b});
    lat.rho_bar = scale(coef_plus, add(lat.w_P, scale(xi, lat.w_L)));
    lat.rho_plus = lat.rho_bar;
    lat.rho_minus = scale(coef_minus, sub(lat.w_P, scale(xi, lat.w_L)));
    lat.z0 = add(lat.w_P, scale(Cy::theta(), lat.w_L));
    lat.R = norm_q3(lat.rho_bar);

    for (int v = 0; v < 2 * n; ++v)
        lat.rho.push_back(v < n ? lat.roots[v] : scale(xi, lat.roots[v]));

    // integral structure from the 26 generators, scaled by 3
    std::vector<EisVec> gens;
    for (const auto& r : lat.roots) {
        EisVec g;
        for (int k = 0; k < 14; ++k) {
            Eis e;
            if (!(mpq_class(3) * r[k]).is_eis(&e)) throw std::logic_error("non-integral root");
            g[k] = e;
        }
        gens.push_back(g);
    }
    Echelon ech = echelon_eis(gens);
    if (ech.rows.size() != 14) throw std::logic_error("lattice rank != 14");
    lat.hnf = ech.rows;
    for (int i = 0; i < 14; ++i) lat.pivot[i] = ech.pivots[i];

    std::vector<std::vector<Eis>> gram(14, std::vector<Eis>(14));
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) {
            Eis s = ip_eis_scaled(lat.hnf[i], lat.hnf[j]);
            auto d = div_exact(s, Eis{9, 0});
            if (!d) throw std::logic_error("gram not E-integral");
            lat.gram_int[i][j] = *d;
            gram[i][j] = *d;
        }
    lat.det_gram = det_eis(gram);
    if (!(lat.det_gram == Eis{-2187, 0}))
        throw std::logic_error("lattice gram determinant is not -3^7");

    lat.parity = incidence_left_kernel(lat.plane);

    // sigma on the reference basis: sigma(w_P) = -w w_L, sigma(x_i) = -w l_i
    Cy minus_omega = -Cy::omega();
    lat.sigma_img[0] = scale(minus_omega, lat.w_L);
    for (int x = 0; x < n; ++x) lat.sigma_img[1 + x] = scale(minus_omega, lat.roots[n + x]);
    // integral matrix of sigma
    for (int j = 0; j < 14; ++j) {
        Vec14 bj = zero_vec14();
        mpq_class t(1, 3);
        for (int k = 0; k < 14; ++k) bj[k] = t * Cy::from_eis(lat.hnf[j][k]);
        Vec14 img = sigma_apply(lat, bj);
        auto coeffs = to_integral(lat, img);
        if (!coeffs) throw std::logic_error("sigma does not preserve L");
        for (int i = 0; i < 14; ++i) lat.sigma_int[i][j] = (*coeffs)[i];
    }
    if (!mat_preserves_gram(lat, lat.sigma_int))
        throw std::logic_error("sigma fails the gram check");
    return lat;
}

const Lattice& lattice() {
    static const Lattice lat = build_lattice(Eis::p());
    return lat;
}

std::optional<EisVec> to_integral(const Lattice& lat, const Vec14& v) {
    EisVec w;
    for (int k = 0; k < 14; ++k) {
        Eis e;
        if (!(mpq_class(3) * v[k]).is_eis(&e)) return std::nullopt;
        w[k] = e;
    }
    EisVec coeffs{};
    int row = 0;
    for (int col = 0; col < 14; ++col) {
        if (row < 14 && lat.pivot[row] == col) {
            auto q = div_exact(w[col], lat.hnf[row][col]);
            if (!q) return std::nullopt;
            for (int k = 0; k < 14; ++k) w[k] = w[k] - *q * lat.hnf[row][k];
            coeffs[row] = *q;
            ++row;
        } else if (!w[col].is_zero()) {
            return std::nullopt;
        }
    }
    return coeffs;
}

Vec14 from_integral(const Lattice& lat, const EisVec& coeffs) {
    Vec14 v = zero_vec14();
    mpq_class third(1, 3);
    for (int r = 0; r < 14; ++r) {
        if (coeffs[r].is_zero()) continue;
        Cy c = third * Cy::from_eis(coeffs[r]);
        for (int k = 0; k < 14; ++k) v[k] += c * Cy::from_eis(lat.hnf[r][k]);
    }
    return v;
}

bool membership(const Lattice& lat, const Vec14& v) {
    return to_integral(lat, v).has_value();
}

Vec14 vector_of_pattern(const Eis& A, const std::array<Eis, 13>& B) {
    Vec14 v = zero_vec14();
    mpq_class third(1, 3);
    v[0] = third * Cy::from_eis(A);
    for (int i = 0; i < 13; ++i) v[1 + i] = -(third * Cy::from_eis(B[i]));
    return v;
}

bool pattern_in_lattice(const Lattice& lat, const Eis& A, const std::array<Eis, 13>& B) {
    const Eis p = Eis::p();
    auto alpha = div_exact(A, p);
    if (!alpha) return false;
    std::array<int, 13> beta_bar;
    int sum = 0;
    for (int i = 0; i < 13; ++i) {
        auto beta = div_exact(B[i], p);
        if (!beta) return false;
        beta_bar[i] = eis_mod_p(*beta);
        sum = (sum + beta_bar[i]) % 3;
    }
    if (eis_mod_p(*alpha) != sum) return false;
    for (const auto& h : lat.parity) {
        int acc = 0;
        for (int i = 0; i < 13; ++i) acc += h[i] * beta_bar[i];
        if (acc % 3 != 0) return false;
    }
    return true;
}

Vec14 sigma_apply(const Lattice& lat, const Vec14& v) {
    Vec14 out = zero_vec14();
    for (int k = 0; k < 14; ++k) {
        if (v[k].is_zero()) continue;
        for (int j = 0; j < 14; ++j) out[j] += v[k] * lat.sigma_img[k][j];
    }
    return out;
}

Vec14 pi_F(const Lattice& lat, const Vec14& v) {
    // solve (3 4p; 4 conj(p) 3) (a; b) = (<w_P, v>; <w_L, v>)
    Cy g12 = Cy::from_eis(Eis{4, 0} * Eis::p());
    Cy g21 = Cy::from_eis(Eis{4, 0} * Eis::p().conj());
    Cy u = ip(lat.w_P, v), w = ip(lat.w_L, v);
    Cy det = Cy(9) - g12 * g21;  // -39
    Cy a = (Cy(3) * u - g12 * w) / det;
    Cy b = (Cy(3) * w - g21 * u) / det;
    return add(scale(a, lat.w_P), scale(b, lat.w_L));
}

Vec14 pi_Fperp(const Lattice& lat, const Vec14& v) { return sub(v, pi_F(lat, v)); }

namespace {

void smith_step(std::vector<std::vector<Eis>>& m, size_t t) {
    const size_t nr = m.size(), nc = m[0].size();
    while (true) {
        // minimal-norm nonzero entry in the trailing block
        size_t bi = t, bj = t;
        bool found = false;
        for (size_t i = t; i < nr; ++i)
            for (size_t j = t; j < nc; ++j)
                if (!m[i][j].is_zero() &&
                    (!found || m[i][j].norm() < m[bi][bj].norm())) {
                    bi = i; bj = j; found = true;
                }
        if (!found) return;
        std::swap(m[t], m[bi]);
        for (size_t i = 0; i < nr; ++i) std::swap(m[i][t], m[i][bj]);

        bool dirty = false;
        for (size_t i = t + 1; i < nr; ++i) {
            if (m[i][t].is_zero()) continue;
            Eis q = divmod_nearest(m[i][t], m[t][t]).quot;
            for (size_t j = t; j < nc; ++j) m[i][j] = m[i][j] - q * m[t][j];
            if (!m[i][t].is_zero()) dirty = true;
        }
        for (size_t j = t + 1; j < nc; ++j) {
            if (m[t][j].is_zero()) continue;
            Eis q = divmod_nearest(m[t][j], m[t][t]).quot;
            for (size_t i = t; i < nr; ++i) m[i][j] = m[i][j] - q * m[i][t];
            if (!m[t][j].is_zero()) dirty = true;
        }
        if (dirty) continue;
        bool cleared = true;
        for (size_t i = t + 1; i < nr && cleared; ++i)
            if (!m[i][t].is_zero()) cleared = false;
        for (size_t j = t + 1; j < nc && cleared; ++j)
            if (!m[t][j].is_zero()) cleared = false;
        if (cleared) return;
    }
}

} // namespace

DiscGroup disc_group(std::vector<std::vector<Eis>> gram) {
    const size_t n = gram.size();
    Eis d = det_eis(gram);
    if (d.is_zero()) throw std::invalid_argument("degenerate gram matrix");
    for (size_t t = 0; t < n; ++t) smith_step(gram, t);
    std::vector<Eis> divisors;
    for (size_t t = 0; t < n; ++t) divisors.push_back(gram[t][t]);
    // enforce the divisibility chain
    for (size_t i = 0; i < divisors.size(); ++i)
        for (size_t j = i + 1; j < divisors.size(); ++j) {
            if (divides(divisors[i], divisors[j])) continue;
            Eis g = gcd(divisors[i], divisors[j]);
            Eis l = *div_exact(divisors[i] * divisors[j], g);
            divisors[i] = g;
            divisors[j] = l;
        }
    DiscGroup out;
    out.order = 1;
    for (auto& dv : divisors) {
        dv = canonical_associate(dv).value;
        out.order *= dv.norm();
    }
    out.divisors = divisors;
    return out;
}

FperpData fperp_data(const Lattice& lat) {
    std::vector<EisVec> gens;
    auto push = [&](const Vec14& v) {
        EisVec g;
        for (int k = 0; k < 14; ++k) {
            Eis e;
            if (!(mpq_class(3) * v[k]).is_eis(&e)) throw std::logic_error("non-integral gen");
            g[k] = e;
        }
        gens.push_back(g);
    };
    for (int x = 1; x < 13; ++x) push(sub(lat.roots[x], lat.roots[0]));
    for (int l = 1; l < 13; ++l) push(sub(lat.roots[13 + l], lat.roots[13]));
    Echelon ech = echelon_eis(gens);
    FperpData out;
    out.hnf = ech.rows;
    out.rank = (int)ech.rows.size();
    out.gram.assign(out.rank, std::vector<Eis>(out.rank));
    for (int i = 0; i < out.rank; ++i)
        for (int j = 0; j < out.rank; ++j) {
            auto d = div_exact(ip_eis_scaled(out.hnf[i], out.hnf[j]), Eis{9, 0});
            if (!d) throw std::logic_error("F-perp gram not integral");
            out.gram[i][j] = *d;
        }
    out.det = det_eis(out.gram);
    return out;
}

std::vector<std::vector<Eis>> gram_F() {
    Eis p = Eis::p();
    return {{Eis{3, 0}, Eis{4, 0} * p}, {Eis{4, 0} * p.conj(), Eis{3, 0}}};
}

Eis det_eis(std::vector<std::vector<Eis>> m) {
    const size_t n = m.size();
    Eis prev{1, 0};
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t sw = k + 1;
            while (sw < n && m[sw][k].is_zero()) ++sw;
            if (sw == n) return Eis{0, 0};
            std::swap(m[k], m[sw]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Eis num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
                auto q = div_exact(num, prev);
                if (!q) throw std::logic_error("Bareiss division failed");
                m[i][j] = *q;
            }
        prev = m[k][k];
    }
    Eis d = m[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

mpz_class z_hnf_det28(const std::vector<EisVec>& gens) {
    // realify: E^14 = Z^28 via (a, b) coordinates; the Z-module of the
    // E-span needs each generator together with its w-multiple
    std::vector<std::array<mpz_class, 28>> rows;
    for (const auto& g : gens)
        for (int twist = 0; twist < 2; ++twist) {
            std::array<mpz_class, 28> r;
            for (int k = 0; k < 14; ++k) {
                Eis e = twist ? Eis::omega() * g[k] : g[k];
                r[2 * k] = e.a;
                r[2 * k + 1] = e.b;
            }
            rows.push_back(r);
        }
    mpz_class det = 1;
    for (int col = 0; col < 28; ++col) {
        // gcd elimination within the column
        while (true) {
            int best = -1;
            for (size_t r = 0; r < rows.size(); ++r)
                if (rows[r][col] != 0 &&
                    (best < 0 || abs(rows[r][col]) < abs(rows[best][col])))
                    best = (int)r;
            if (best < 0) throw std::logic_error("rank deficiency in Z-HNF");
            bool reduced = false;
            for (size_t r = 0; r < rows.size(); ++r) {
                if ((int)r == best || rows[r][col] == 0) continue;
                mpz_class q;
                mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[best][col].get_mpz_t());
                for (int k = col; k < 28; ++k) rows[r][k] -= q * rows[best][k];
                if (rows[r][col] != 0) reduced = true;
            }
            if (!reduced) {
                det *= abs(rows[best][col]);
                rows.erase(rows.begin() + best);
                break;
            }
        }
    }
    return det;
}

EisMat mat_identity() {
    EisMat m{};
    for (int i = 0; i < 14; ++i) m[i][i] = Eis{1, 0};
    return m;
}

EisMat mat_mul(const EisMat& a, const EisMat& b) {
    EisMat c{};
    for (int i = 0; i < 14; ++i)
        for (int k = 0; k < 14; ++k) {
            if (a[i][k].is_zero()) continue;
            for (int j = 0; j < 14; ++j) {
                if (b[k][j].is_zero()) continue;
                c[i][j] += a[i][k] * b[k][j];
            }
        }
    return c;
}

EisVec mat_apply(const EisMat& m, const EisVec& v) {
    EisVec out{};
    for (int j = 0; j < 14; ++j) {
        if (v[j].is_zero()) continue;
        for (int i = 0; i < 14; ++i) {
            if (m[i][j].is_zero()) continue;
            out[i] += m[i][j] * v[j];
        }
    }
    return out;
}

bool mat_eq(const EisMat& a, const EisMat& b) {
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j)
            if (!(a[i][j] == b[i][j])) return false;
    return true;
}

bool mat_preserves_gram(const Lattice& lat, const EisMat& m) {
    // M* J M = J over E
    for (int i = 0; i < 14; ++i)
        for (int j = 0; j < 14; ++j) {
            Eis acc{0, 0};
            for (int k = 0; k < 14; ++k) {
                if (m[k][i].is_zero()) continue;
                Eis inner{0, 0};
                for (int l = 0; l < 14; ++l) {
                    if (lat.gram_int[k][l].is_zero() || m[l][j].is_zero()) continue;
                    inner += lat.gram_int[k][l] * m[l][j];
                }
                acc += m[k][i].conj() * inner;
            }
            if (!(acc == lat.gram_int[i][j])) return false;
        }
    return true;
}

} // namespace mirrorcert
