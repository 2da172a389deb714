#include "graphbetti/toric.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <string>

#include "graphbetti/errors.hpp"
#include "graphbetti/invariants.hpp"

namespace gb {

namespace {

// Z_2 independence of a set of column masks.
bool gf2_independent(std::vector<Mask> cols) {
    for (std::size_t i = 0; i < cols.size(); ++i) {
        Mask pivot = cols[i];
        if (pivot == 0) return false;
        Mask bit = pivot & -pivot;
        for (std::size_t j = i + 1; j < cols.size(); ++j)
            if (cols[j] & bit) cols[j] ^= pivot;
    }
    return true;
}

}  // namespace

CharMatrix char_matrix(const PolytopeModel& m) {
    CharMatrix cm;
    cm.rows = m.dim;
    cm.columns.reserve(m.facets.size());
    for (const auto& normal : m.normals) {
        Mask col = 0;
        for (int k = 0; k < m.dim; ++k)
            if (normal[k] % 2 != 0) col |= Mask{1} << k;
        if (col == 0) throw FalsificationError("zero column in the mod-2 facet matrix");
        cm.columns.push_back(col);
    }
    for (const auto& clique : dual_complex(m).maximal_faces) {
        std::vector<Mask> cols;
        cols.reserve(clique.size());
        for (int f : clique) cols.push_back(cm.columns[f]);
        if (!gf2_independent(std::move(cols)))
            throw FalsificationError("facet columns at a vertex are Z_2-dependent");
    }
    return cm;
}

OmegaVector omega(const CharMatrix& cm, Mask S) {
    OmegaVector w(cm.columns.size(), 0);
    for (std::size_t j = 0; j < cm.columns.size(); ++j)
        w[j] = popcount(cm.columns[j] & S) % 2;
    return w;
}

SimplicialComplex p_omega_complex(const PolytopeModel& m, const SimplicialComplex& dual,
                                  const OmegaVector& w) {
    bool any = false;
    for (char c : w) any = any || c;
    if (!any) return SimplicialComplex::minus_one_sphere();
    std::vector<std::vector<int>> faces;
    for (const auto& clique : dual.maximal_faces) {
        std::vector<int> cut;
        for (int f : clique)
            if (w[f]) cut.push_back(f);
        if (!cut.empty()) faces.push_back(std::move(cut));
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // keep only inclusion-maximal intersections
    std::vector<std::vector<int>> maximal;
    for (std::size_t i = 0; i < faces.size(); ++i) {
        bool contained = false;
        for (std::size_t j = 0; j < faces.size() && !contained; ++j)
            contained = i != j && faces[i].size() < faces[j].size() &&
                        std::includes(faces[j].begin(), faces[j].end(), faces[i].begin(),
                                      faces[i].end());
        if (!contained) maximal.push_back(faces[i]);
    }
    SimplicialComplex k;
    k.vertex_count = dual.vertex_count;
    k.maximal_faces = std::move(maximal);
    return k;
}

namespace {

// Clique complex of the cube model's compatibility graph restricted to a
// chosen facet subset; faces keep the model's global facet indices.
SimplicialComplex facet_clique_complex(const PolytopeModel& m, const std::vector<int>& chosen) {
    if (chosen.empty()) return SimplicialComplex::minus_one_sphere();
    const int k = static_cast<int>(chosen.size());
    std::vector<std::vector<char>> adj(k, std::vector<char>(k, 0));
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            adj[i][j] = adj[j][i] = m.compat[chosen[i]][chosen[j]];
    std::vector<std::vector<int>> cliques;
    std::vector<int> cur;
    std::function<void(std::vector<int>, std::vector<int>)> bk =
        [&](std::vector<int> p, std::vector<int> x) {
            if (p.empty() && x.empty()) {
                cliques.push_back(cur);
                return;
            }
            int pivot = -1, best = -1;
            auto consider = [&](int u) {
                int c = 0;
                for (int v : p) c += adj[u][v];
                if (c > best) {
                    best = c;
                    pivot = u;
                }
            };
            for (int u : p) consider(u);
            for (int u : x) consider(u);
            std::vector<int> cand;
            for (int v : p)
                if (!adj[pivot][v]) cand.push_back(v);
            for (int v : cand) {
                std::vector<int> p2, x2;
                for (int w : p)
                    if (adj[v][w]) p2.push_back(w);
                for (int w : x)
                    if (adj[v][w]) x2.push_back(w);
                cur.push_back(v);
                bk(std::move(p2), std::move(x2));
                cur.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    bk(std::move(p), {});
    for (auto& c : cliques) {
        for (int& v : c) v = chosen[v];
        std::sort(c.begin(), c.end());
    }
    std::sort(cliques.begin(), cliques.end());
    SimplicialComplex out;
    out.vertex_count = static_cast<int>(m.facets.size());
    out.maximal_faces = std::move(cliques);
    return out;
}

}  // namespace

SimplicialComplex k_odd(const Graph& g, Mask S) {
    if (g.n == 0) return SimplicialComplex::minus_one_sphere();
    PolytopeModel m = model_cube(g);
    std::vector<int> chosen;
    for (std::size_t i = 0; i < m.facets.size(); ++i) {
        const Facet& f = m.facets[i];
        bool in = f.kind == FacetKind::cube_bar ? ((S >> f.bar) & 1)
                                                : popcount(f.tube & S) % 2 == 1;
        if (in) chosen.push_back(static_cast<int>(i));
    }
    return facet_clique_complex(m, chosen);
}

SimplicialComplex k_odd(const Graph& g) { return k_odd(g, g.vertex_mask()); }

SimplicialComplex k_even(const Graph& h) {
    if (!is_odd(h)) throw std::invalid_argument("the even complex is defined for odd graphs");
    PolytopeModel m = model_cube(h);
    std::vector<int> chosen;
    for (std::size_t i = 0; i < m.facets.size(); ++i) {
        const Facet& f = m.facets[i];
        if (f.kind == FacetKind::cube_tube && popcount(f.tube) % 2 == 0)
            chosen.push_back(static_cast<int>(i));
    }
    return facet_clique_complex(m, chosen);
}

namespace {

// Sum over the 2^dim row subsets of the model's mod-2
// matrix. Degree i collects beta~_{i-1} of each omega subcomplex.
BettiVector oracle_model(const PolytopeModel& m, std::size_t face_cap, bool check_torsion) {
    SimplicialComplex dual = dual_complex(m);
    CharMatrix cm = char_matrix(m);
    BettiVector out;
    out.beta.assign(m.dim + 1, Int(0));
    for (Mask S = 0; S < (Mask{1} << m.dim); ++S) {
        SimplicialComplex k = p_omega_complex(m, dual, omega(cm, S));
        HomologyGroups h = reduced_homology(k, face_cap);
        if (check_torsion && !h.torsion_free())
            throw FalsificationError("torsion in an omega subcomplex");
        for (int i = 0; i <= m.dim; ++i) out.beta[i] += h.reduced_betti(i - 1);
    }
    out.trim();
    return out;
}

BettiVector oracle_run(const Graph& g, PolytopeKind kind, std::size_t face_cap,
                       bool check_torsion) {
    if (kind == PolytopeKind::cube)
        return oracle_model(model_cube(g), face_cap, check_torsion);
    // assoc: per component, combining Betti polynomials multiplicatively
    BettiVector total;
    total.beta = {Int(1)};
    for (Mask comp : components(g)) {
        BettiVector part = oracle_model(model_assoc(induced(g, comp)), face_cap, check_torsion);
        std::vector<Int> prod(total.beta.size() + part.beta.size() - 1, 0);
        for (std::size_t i = 0; i < total.beta.size(); ++i)
            for (std::size_t j = 0; j < part.beta.size(); ++j)
                prod[i + j] += total.beta[i] * part.beta[j];
        total.beta = std::move(prod);
    }
    total.trim();
    return total;
}

}  // namespace

BettiVector betti_via_homology(const Graph& g, PolytopeKind kind, std::size_t face_cap) {
    return oracle_run(g, kind, face_cap, false);
}

CohomologyProfile cohomology_profile(const Graph& g, PolytopeKind kind, std::size_t face_cap) {
    BettiVector beta = oracle_run(g, kind, face_cap, true);
    std::vector<Int> h =
        kind == PolytopeKind::cube ? h_vector_cube(g) : h_vector_assoc(g);
    CohomologyProfile p;
    p.free_rank.assign(h.size(), 0);
    p.z2_rank.assign(h.size(), 0);
    for (std::size_t i = 0; i < h.size(); ++i) {
        p.free_rank[i] = beta.at(static_cast<int>(i));
        p.z2_rank[i] = h[i] - p.free_rank[i];
        if (p.z2_rank[i] < 0)
            throw FalsificationError("free rank exceeds the h-vector entry in degree " +
                                     std::to_string(i));
    }
    return p;
}

std::size_t default_face_cap() {
    if (const char* env = std::getenv("TBETTI_FACE_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return 200000;
}

namespace {

bool groups_equal(const HomologyGroups& a, const HomologyGroups& b) {
    int top = std::max(a.top_dim, b.top_dim);
    for (int q = -1; q <= top; ++q)
        if (a.reduced_betti(q) != b.reduced_betti(q) || a.torsion_in(q) != b.torsion_in(q))
            return false;
    return true;
}

}  // namespace

bool restriction_check(const Graph& g, Mask S) {
    HomologyGroups whole = reduced_homology(k_odd(g, S));
    HomologyGroups restricted = reduced_homology(k_odd(induced(g, S)));
    return groups_equal(whole, restricted);
}

bool even_trivial_check(const Graph& g) {
    if (!is_connected(g) || !is_even(g))
        throw std::invalid_argument("contractibility claim needs a connected even graph");
    return reduced_homology(k_odd(g)).trivial();
}

bool alexander_check(const Graph& g) {
    if (!is_odd(g)) throw std::invalid_argument("duality check is stated for odd graphs");
    HomologyGroups ho = reduced_homology(k_odd(g));
    HomologyGroups he = reduced_homology(k_even(g));
    for (int q = -1; q <= g.n; ++q)
        if (ho.reduced_betti(q) != he.reduced_betti(g.n - q - 2)) return false;
    return true;
}

Poset type_b_poset(const Graph& g) {
    if (2 * g.n > kMaxVertices)
        throw CapacityError("signed subsets exceed the vertex capacity");
    SubsetParity parity = subset_parity(g);
    // label = (positive mask << 32) | negative mask
    std::vector<std::uint64_t> labels;
    for (Mask U = 1; U < (Mask{1} << g.n); ++U) {
        if (!parity.even[U]) continue;
        for (Mask P = U;; P = (P - 1) & U) {
            Mask N = U & ~P;
            labels.push_back((static_cast<std::uint64_t>(P) << 32) | N);
            if (P == 0) break;
        }
    }
    std::stable_sort(labels.begin(), labels.end(), [](std::uint64_t a, std::uint64_t b) {
        int pa = popcount((a >> 32) | (a & 0xffffffffu));
        int pb = popcount((b >> 32) | (b & 0xffffffffu));
        return pa != pb ? pa < pb : a < b;
    });
    Poset p;
    p.labels.push_back(~std::uint64_t{0});
    for (std::uint64_t l : labels) p.labels.push_back(l);
    p.labels.push_back(~std::uint64_t{0} - 1);
    const int m = p.size();
    p.less.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i) {
        p.less[0][i] = i != 0;
        p.less[i][m - 1] = i != m - 1;
    }
    for (std::size_t a = 0; a < labels.size(); ++a)
        for (std::size_t b = 0; b < labels.size(); ++b) {
            if (a == b) continue;
            std::uint64_t pa = labels[a] >> 32, na = labels[a] & 0xffffffffu;
            std::uint64_t pb = labels[b] >> 32, nb = labels[b] & 0xffffffffu;
            if ((pa & pb) == pa && (na & nb) == na && labels[a] != labels[b])
                p.less[a + 1][b + 1] = 1;
        }
    return p;
}

HomologyGroups type_b_homology(const Graph& g) {
    return reduced_homology(order_complex(type_b_poset(g)));
}

}  // namespace gb
