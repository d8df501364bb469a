#include "mirrorcert/plane.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mirrorcert {

namespace {

// Small finite field, q = p^k with k <= 3. Elements are coded 0..q-1 as
// base-p digit strings of polynomial coefficients (constant digit first).
struct GF {
    int q, p, k;
    std::vector<int> red;  // reduction of x^k as coefficient list

    explicit GF(int q_) : q(q_) {
        switch (q) {
            case 2: case 3: case 5: case 7: p = q; k = 1; break;
            case 4: p = 2; k = 2; red = {1, 1}; break;        // x^2 = x + 1
            case 8: p = 2; k = 3; red = {1, 1, 0}; break;     // x^3 = x + 1
            case 9: p = 3; k = 2; red = {2, 0}; break;        // x^2 = -1
            default: throw std::invalid_argument("unsupported plane order q");
        }
    }
    std::array<int, 3> digits(int a) const {
        std::array<int, 3> d{0, 0, 0};
        for (int i = 0; i < k; ++i) { d[i] = a % p; a /= p; }
        return d;
    }
    int code(const std::array<int, 3>& d) const {
        int a = 0;
        for (int i = k - 1; i >= 0; --i) a = a * p + d[i];
        return a;
    }
    int add(int a, int b) const {
        auto da = digits(a), db = digits(b);
        for (int i = 0; i < k; ++i) da[i] = (da[i] + db[i]) % p;
        return code(da);
    }
    int mul(int a, int b) const {
        if (k == 1) return (a * b) % p;
        auto da = digits(a), db = digits(b);
        std::array<int, 5> prod{};
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        for (int deg = 2 * k - 2; deg >= k; --deg) {
            int c = prod[deg];
            if (!c) continue;
            prod[deg] = 0;
            for (int i = 0; i < k; ++i) prod[deg - k + i] = (prod[deg - k + i] + c * red[i]) % p;
        }
        return code({prod[0], prod[1], prod[2]});
    }
    int inv(int a) const {
        for (int b = 1; b < q; ++b)
            if (mul(a, b) == 1) return b;
        throw std::domain_error("GF inverse of zero");
    }
    int dot(const std::array<int, 3>& u, const std::array<int, 3>& v) const {
        return add(add(mul(u[0], v[0]), mul(u[1], v[1])), mul(u[2], v[2]));
    }
    std::array<int, 3> normalize(std::array<int, 3> t) const {
        int lead = t[0] ? t[0] : (t[1] ? t[1] : t[2]);
        int s = inv(lead);
        for (auto& c : t) c = mul(s, c);
        return t;
    }
};

std::vector<std::array<int, 3>> normalized_triples(const GF& F) {
    std::vector<std::array<int, 3>> out;
    for (int a = 0; a < F.q; ++a)
        for (int b = 0; b < F.q; ++b)
            for (int c = 0; c < F.q; ++c) {
                if (a == 0 && b == 0 && c == 0) continue;
                std::array<int, 3> t{a, b, c};
                int lead = t[0] ? t[0] : (t[1] ? t[1] : t[2]);
                if (lead != 1) continue;
                out.push_back(t);
            }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

bool IncidencePlane::incident(int pt, int ln) const {
    return std::binary_search(line_pts[ln].begin(), line_pts[ln].end(), pt);
}

bool IncidencePlane::vertex_adjacent(int u, int v) const {
    if (is_point(u) == is_point(v)) return false;
    int pt = is_point(u) ? u : v, ln = (is_point(u) ? v : u) - n;
    return incident(pt, ln);
}

std::string IncidencePlane::vertex_name(int v) const {
    return (is_point(v) ? "P" : "L") + std::to_string(is_point(v) ? v : v - n);
}

IncidencePlane build_plane(int q) {
    GF F(q);
    IncidencePlane pl;
    pl.q = q;
    pl.n = q * q + q + 1;
    pl.triples = normalized_triples(F);
    if ((int)pl.triples.size() != pl.n) throw std::logic_error("bad triple count");

    pl.line_pts.assign(pl.n, {});
    pl.pt_lines.assign(pl.n, {});
    for (int l = 0; l < pl.n; ++l)
        for (int x = 0; x < pl.n; ++x)
            if (F.dot(pl.triples[l], pl.triples[x]) == 0) {
                pl.line_pts[l].push_back(x);
                pl.pt_lines[x].push_back(l);
            }
    for (auto& v : pl.line_pts)
        if ((int)v.size() != q + 1) throw std::logic_error("line has wrong point count");

    if (2 * pl.n <= 32) {
        pl.adj.assign(2 * pl.n, 0);
        for (int l = 0; l < pl.n; ++l)
            for (int x : pl.line_pts[l]) {
                pl.adj[x] |= 1u << (pl.n + l);
                pl.adj[pl.n + l] |= 1u << x;
            }
    }
    return pl;
}

namespace {

// Permutation induced by g in GL_3(F_q): points by t -> g t, lines by
// u -> u g^{-1}, both renormalized.
Perm collineation_perm(const IncidencePlane& pl, const GF& F,
                       const std::array<std::array<int, 3>, 3>& g,
                       const std::array<std::array<int, 3>, 3>& ginv) {
    auto index_of = [&](const std::array<int, 3>& t) {
        auto it = std::lower_bound(pl.triples.begin(), pl.triples.end(), t);
        return (int)(it - pl.triples.begin());
    };
    Perm perm(2 * pl.n);
    for (int x = 0; x < pl.n; ++x) {
        std::array<int, 3> t{0, 0, 0};
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) t[i] = F.add(t[i], F.mul(g[i][j], pl.triples[x][j]));
        perm[x] = (int8_t)index_of(F.normalize(t));
    }
    for (int l = 0; l < pl.n; ++l) {
        std::array<int, 3> t{0, 0, 0};
        for (int j = 0; j < 3; ++j)
            for (int i = 0; i < 3; ++i) t[j] = F.add(t[j], F.mul(pl.triples[l][i], ginv[i][j]));
        perm[pl.n + l] = (int8_t)(pl.n + index_of(F.normalize(t)));
    }
    return perm;
}

Perm compose(const Perm& f, const Perm& g) {  // f after g
    Perm h(g.size());
    for (size_t i = 0; i < g.size(); ++i) h[i] = f[g[i]];
    return h;
}

std::vector<Perm> closure(const std::vector<Perm>& gens, size_t limit) {
    std::set<Perm> seen;
    Perm id(gens.at(0).size());
    for (size_t i = 0; i < id.size(); ++i) id[i] = (int8_t)i;
    seen.insert(id);
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                Perm h = compose(g, p);
                if (seen.insert(h).second) next.push_back(h);
            }
        frontier = std::move(next);
        if (seen.size() > limit) throw std::logic_error("group closure exceeded limit");
    }
    return {seen.begin(), seen.end()};
}

} // namespace

PlaneGroup build_group(const IncidencePlane& pl) {
    if (pl.q != 3) throw std::invalid_argument("group construction implemented for q = 3");
    GF F(3);
    using M = std::array<std::array<int, 3>, 3>;
    // generators of GL_3(3): a transvection, a coordinate cycle, and diag(2,1,1)
    std::vector<std::pair<M, M>> gens = {
        {M{{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}}, M{{{1, 2, 0}, {0, 1, 0}, {0, 0, 1}}}},
        {M{{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}, M{{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}},
        {M{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}, M{{{2, 0, 0}, {0, 1, 0}, {0, 0, 1}}}},
    };
    std::vector<Perm> pgens;
    for (auto& [g, gi] : gens) pgens.push_back(collineation_perm(pl, F, g, gi));

    PlaneGroup grp;
    grp.l33 = closure(pgens, 6000);
    grp.polarity.resize(2 * pl.n);
    for (int v = 0; v < pl.n; ++v) {
        grp.polarity[v] = (int8_t)(pl.n + v);
        grp.polarity[pl.n + v] = (int8_t)v;
    }
    pgens.push_back(grp.polarity);
    grp.full = closure(pgens, 12000);
    return grp;
}

std::vector<std::array<int, 12>> enumerate_12gons(const IncidencePlane& pl) {
    const int N = pl.n_vertices();
    if ((int)pl.adj.size() != N) throw std::logic_error("adjacency masks unavailable");
    std::vector<std::array<int, 12>> out;
    std::array<int, 12> path{};

    auto dfs = [&](auto&& self, int depth, uint32_t mask) -> void {
        if (depth == 12) {
            if (path[1] < path[11]) out.push_back(path);
            return;
        }
        int last = path[depth - 1];
        // at the final slot the new vertex must close the cycle at path[0]
        for (int w = path[0] + 1; w < N; ++w) {
            if (!(pl.adj[last] & (1u << w)) || (mask & (1u << w))) continue;
            uint32_t want = (depth == 11) ? ((1u << last) | (1u << path[0])) : (1u << last);
            if ((pl.adj[w] & mask) != want) continue;
            path[depth] = w;
            self(self, depth + 1, mask | (1u << w));
        }
    };
    for (int v0 = 0; v0 < N; ++v0) {
        path[0] = v0;
        dfs(dfs, 1, 1u << v0);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<std::array<int, 12>> markings_of(const std::array<int, 12>& gon) {
    std::vector<std::array<int, 12>> out;
    std::array<int, 12> rev{};
    for (int i = 0; i < 12; ++i) rev[i] = gon[(12 - i) % 12];
    for (const auto& base : {gon, rev})
        for (int r = 0; r < 12; ++r) {
            std::array<int, 12> m{};
            for (int i = 0; i < 12; ++i) m[i] = base[(r + i) % 12];
            out.push_back(m);
        }
    return out;
}

MarkedGonOrbits marked_gon_orbits(const IncidencePlane& pl, const PlaneGroup& g,
                                  const std::vector<std::array<int, 12>>& gons) {
    (void)pl;
    std::set<std::array<int, 12>> all;
    for (const auto& gon : gons)
        for (const auto& m : markings_of(gon)) all.insert(m);

    // perms contains a whole group, so one sweep per seed exhausts its orbit
    auto count_orbits = [&](const std::vector<Perm>& perms) {
        std::set<std::array<int, 12>> unseen = all;
        int orbits = 0;
        while (!unseen.empty()) {
            ++orbits;
            std::array<int, 12> seed = *unseen.begin();
            for (const auto& p : perms) {
                std::array<int, 12> img{};
                for (int i = 0; i < 12; ++i) img[i] = p[seed[i]];
                unseen.erase(img);
            }
        }
        return orbits;
    };

    MarkedGonOrbits r;
    r.total_marked = (long long)all.size();
    r.orbits_full = count_orbits(g.full);
    r.orbits_l33 = count_orbits(g.l33);
    return r;
}

PairOrbits pair_orbits(const IncidencePlane& pl, const std::vector<Perm>& perms) {
    const int N = pl.n_vertices();
    PairOrbits po;
    po.orbit_of.assign(N * N, -1);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            if (i == j || po.orbit_of[i * N + j] >= 0) continue;
            int id = po.count++;
            po.reps.emplace_back(i, j);
            for (const auto& p : perms) po.orbit_of[p[i] * N + p[j]] = id;
        }
    return po;
}

namespace {

// candidates (c, d, e, f) for one arm hanging off line b at point a
struct Arm { int c, d, e, f; };

std::vector<Arm> arm_candidates(const IncidencePlane& pl, int a, int b_vertex) {
    std::vector<Arm> out;
    int n = pl.n;
    for (int c : pl.line_pts[b_vertex - n]) {
        if (c == a) continue;
        for (int dl : pl.pt_lines[c]) {
            if (n + dl == b_vertex) continue;
            for (int e : pl.line_pts[dl]) {
                if (e == c) continue;
                for (int fl : pl.pt_lines[e]) {
                    if (fl == dl) continue;
                    out.push_back({c, n + dl, e, n + fl});
                }
            }
        }
    }
    return out;
}

bool induced_12gon(const IncidencePlane& pl, const std::array<int, 12>& g) {
    for (int i = 0; i < 12; ++i)
        for (int j = i + 1; j < 12; ++j) {
            if (g[i] == g[j]) return false;
            bool consecutive = (j == i + 1) || (i == 0 && j == 11);
            if (pl.vertex_adjacent(g[i], g[j]) != consecutive) return false;
        }
    return true;
}

} // namespace

M666 compute_m666(const IncidencePlane& pl) {
    if (pl.q != 3) throw std::invalid_argument("M666 labels defined for q = 3");
    const int n = pl.n;
    M666 m{};
    for (m.a = 0; m.a < n; ++m.a) {
        const auto& La = pl.pt_lines[m.a];
        for (int i1 = 0; i1 < 4; ++i1)
            for (int i2 = 0; i2 < 4; ++i2) {
                if (i2 == i1) continue;
                for (int i3 = 0; i3 < 4; ++i3) {
                    if (i3 == i1 || i3 == i2) continue;
                    m.b = {n + La[i1], n + La[i2], n + La[i3]};
                    auto arms1 = arm_candidates(pl, m.a, m.b[0]);
                    auto arms2 = arm_candidates(pl, m.a, m.b[1]);
                    for (const auto& A2 : arms2)
                        for (const auto& A1 : arms1) {
                            if (A1.f == A2.f) continue;
                            int a3 = -1;
                            for (int p0 : pl.line_pts[A1.f - n])
                                if (pl.incident(p0, A2.f - n)) a3 = p0;
                            if (a3 < 0) continue;
                            std::array<int, 12> gon = {A2.f, A2.e, A2.d, A2.c, m.b[1], m.a,
                                                       m.b[0], A1.c, A1.d, A1.e, A1.f, a3};
                            if (!induced_12gon(pl, gon)) continue;
                            m.c[0] = A1.c; m.d[0] = A1.d; m.e[0] = A1.e; m.f[0] = A1.f;
                            m.c[1] = A2.c; m.d[1] = A2.d; m.e[1] = A2.e; m.f[1] = A2.f;
                            m.a3 = a3;
                            m.printed_gon = gon;
                            // arm 3: first choice keeping all sixteen labels distinct
                            for (const auto& A3 : arm_candidates(pl, m.a, m.b[2])) {
                                std::set<int> used = {m.a,    m.b[0], m.b[1], m.b[2],
                                                      A1.c,   A1.d,   A1.e,   A1.f,
                                                      A2.c,   A2.d,   A2.e,   A2.f,
                                                      A3.c,   A3.d,   A3.e,   A3.f};
                                if (used.size() != 16) continue;
                                m.c[2] = A3.c; m.d[2] = A3.d; m.e[2] = A3.e; m.f[2] = A3.f;
                                return m;
                            }
                        }
                }
            }
    }
    throw std::logic_error("no M666 labeling found");
}

} // namespace mirrorcert
