#include "graphbetti/polytope.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "graphbetti/betti.hpp"
#include "graphbetti/errors.hpp"

namespace gb {

std::string Facet::label(int n) const {
    if (kind == FacetKind::cube_bar) return std::to_string(bar + 1) + "~";
    std::string s;
    for (Mask m = tube; m; m &= m - 1) {
        if (!s.empty() && n > 9) s += ',';
        s += std::to_string(lowest_bit(m) + 1);
    }
    return s;
}

namespace {

// Tube-tube compatibility: nested, or the union is not itself a tube.
bool tubes_compatible(const Graph& g, Mask a, Mask b) {
    if ((a & b) == a || (a & b) == b) return true;
    return !connected_in(g, a | b);
}

bool facets_compatible(const Graph& g, const Facet& a, const Facet& b) {
    const bool abar = a.kind == FacetKind::cube_bar;
    const bool bbar = b.kind == FacetKind::cube_bar;
    if (abar && bbar) return a.bar != b.bar;
    if (abar) return !((b.tube >> a.bar) & 1);
    if (bbar) return !((a.tube >> b.bar) & 1);
    return tubes_compatible(g, a.tube, b.tube);
}

void fill_compat(PolytopeModel& m) {
    const int f = static_cast<int>(m.facets.size());
    m.compat.assign(f, std::vector<char>(f, 0));
    for (int i = 0; i < f; ++i)
        for (int j = i + 1; j < f; ++j)
            m.compat[i][j] = m.compat[j][i] =
                facets_compatible(m.graph, m.facets[i], m.facets[j]);
}

std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<char>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out;
    std::vector<int> r;
    std::function<void(std::vector<int>, std::vector<int>)> bk =
        [&](std::vector<int> p, std::vector<int> x) {
            if (p.empty() && x.empty()) {
                out.push_back(r);
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
                r.push_back(v);
                bk(std::move(p2), std::move(x2));
                r.pop_back();
                p.erase(std::find(p.begin(), p.end(), v));
                x.push_back(v);
            }
        };
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) p[i] = i;
    bk(std::move(p), {});
    for (auto& c : out) std::sort(c.begin(), c.end());
    std::sort(out.begin(), out.end());
    (void)n;
    return out;
}

Int det_bareiss(std::vector<std::vector<Int>> a) {
    const int n = static_cast<int>(a.size());
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int p = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    p = i;
                    break;
                }
            if (p < 0) return 0;
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

Int cofactor(const std::vector<std::vector<Int>>& a, int row, int col) {
    const int n = static_cast<int>(a.size());
    std::vector<std::vector<Int>> minor;
    minor.reserve(n - 1);
    for (int i = 0; i < n; ++i) {
        if (i == row) continue;
        std::vector<Int> r;
        r.reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != col) r.push_back(a[i][j]);
        minor.push_back(std::move(r));
    }
    Int d = det_bareiss(std::move(minor));
    return (row + col) % 2 == 0 ? d : -d;
}

}  // namespace

PolytopeModel model_assoc(const Graph& g) {
    if (g.n < 1 || !is_connected(g))
        throw std::invalid_argument("assoc model requires a connected nonempty graph");
    PolytopeModel m;
    m.graph = g;
    m.dim = g.n - 1;
    const Mask full = g.vertex_mask();
    for (Mask I : connected_subsets(g))
        if (I != full) m.facets.push_back({FacetKind::assoc_tube, I, -1});
    fill_compat(m);
    // Distinguished vertex n-1: its coordinate is identically zero and is
    // dropped, leaving length-(n-1) normals.
    for (const Facet& f : m.facets) {
        std::vector<long long> v(m.dim, 0);
        if ((f.tube >> (g.n - 1)) & 1) {
            for (int j = 0; j < g.n - 1; ++j)
                if (!((f.tube >> j) & 1)) v[j] = 1;
        } else {
            for (Mask mm = f.tube; mm; mm &= mm - 1) v[lowest_bit(mm)] = -1;
        }
        m.normals.push_back(std::move(v));
    }
    return m;
}

PolytopeModel model_cube(const Graph& g) {
    if (g.n < 1) throw std::invalid_argument("cube model requires n >= 1");
    PolytopeModel m;
    m.graph = g;
    m.dim = g.n;
    for (Mask I : connected_subsets(g)) m.facets.push_back({FacetKind::cube_tube, I, -1});
    for (int i = 0; i < g.n; ++i) m.facets.push_back({FacetKind::cube_bar, 0, i});
    fill_compat(m);
    for (const Facet& f : m.facets) {
        std::vector<long long> v(m.dim, 0);
        if (f.kind == FacetKind::cube_bar)
            v[f.bar] = -1;
        else
            for (Mask mm = f.tube; mm; mm &= mm - 1) v[lowest_bit(mm)] = 1;
        m.normals.push_back(std::move(v));
    }
    return m;
}

SimplicialComplex dual_complex(const PolytopeModel& m) {
    if (m.facets.empty()) {
        if (m.dim == 0) return SimplicialComplex::minus_one_sphere();
        throw FalsificationError("positive-dimensional model with no facets");
    }
    auto cliques = maximal_cliques(m.compat);
    for (const auto& c : cliques)
        if (static_cast<int>(c.size()) != m.dim)
            throw FalsificationError("maximal clique of size " + std::to_string(c.size()) +
                                     " in a model of dimension " + std::to_string(m.dim));
    SimplicialComplex k;
    k.vertex_count = static_cast<int>(m.facets.size());
    k.maximal_faces = std::move(cliques);
    return k;
}

std::vector<Int> f_vector(const PolytopeModel& m) {
    std::vector<Int> f(m.dim, 0);
    if (m.dim == 0) return f;
    auto faces = enumerate_faces(dual_complex(m));
    for (int i = 0; i < m.dim; ++i) {
        int dual_dim = m.dim - 1 - i;
        if (dual_dim < static_cast<int>(faces.size()))
            f[i] = static_cast<long long>(faces[dual_dim].size());
    }
    return f;
}

std::vector<Int> h_vector(const PolytopeModel& m) {
    const int n = m.dim;
    std::vector<Int> fstar(n + 1, 0);  // fstar[k] = number of (k-1)-faces
    fstar[0] = 1;
    if (n > 0) {
        auto faces = enumerate_faces(dual_complex(m));
        for (std::size_t q = 0; q < faces.size(); ++q)
            fstar[q + 1] = static_cast<long long>(faces[q].size());
    }
    // h(t) = sum_k fstar[k] (t-1)^{n-k}
    std::vector<Int> h(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
        const int d = n - k;
        for (int j = 0; j <= d; ++j) {
            Int c = binomial(d, j);
            if ((d - j) % 2 == 1) c = -c;
            h[j] += fstar[k] * c;
        }
    }
    for (int i = 0; i <= n; ++i)
        if (h[i] != h[n - i] || h[i] < 0)
            throw FalsificationError("h-vector fails Dehn-Sommerville symmetry");
    return h;
}

namespace {

std::vector<Int> poly_mul(const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
}

}  // namespace

std::vector<Int> h_vector_assoc(const Graph& g) {
    std::vector<Int> h{1};
    for (Mask comp : components(g)) h = poly_mul(h, h_vector(model_assoc(induced(g, comp))));
    return h;
}

std::vector<Int> h_vector_cube(const Graph& g) { return h_vector(model_cube(g)); }

bool delzant_check(const PolytopeModel& m) {
    if (m.dim == 0) return true;
    auto dual = dual_complex(m);
    for (const auto& clique : dual.maximal_faces) {
        std::vector<std::vector<Int>> a(m.dim, std::vector<Int>(m.dim));
        for (int col = 0; col < m.dim; ++col)
            for (int row = 0; row < m.dim; ++row) a[row][col] = m.normals[clique[col]][row];
        Int d = det_bareiss(std::move(a));
        if (d != 1 && d != -1) return false;
    }
    return true;
}

bool path_poset_iso(int n) {
    if (n < 1) throw std::invalid_argument("path_poset_iso requires n >= 1");
    PolytopeModel a = model_assoc(path_graph(n + 1));
    PolytopeModel c = model_cube(path_graph(n));
    if (a.facets.size() != c.facets.size())
        throw FalsificationError("facet counts differ in the path identification");
    std::map<std::pair<int, Mask>, int> cube_index;
    for (std::size_t i = 0; i < c.facets.size(); ++i) {
        const Facet& f = c.facets[i];
        if (f.kind == FacetKind::cube_bar)
            cube_index[{1, Mask{1} << f.bar}] = static_cast<int>(i);
        else
            cube_index[{0, f.tube}] = static_cast<int>(i);
    }
    // Tubes avoiding the top vertex map to themselves; a tube containing
    // it, of size n+1-j, maps to the bar at vertex j.
    std::vector<int> image(a.facets.size());
    std::vector<char> hit(c.facets.size(), 0);
    for (std::size_t i = 0; i < a.facets.size(); ++i) {
        Mask I = a.facets[i].tube;
        std::pair<int, Mask> key;
        if ((I >> n) & 1) {
            int j = n - popcount(I);  // 0-indexed bar vertex
            key = {1, Mask{1} << j};
        } else {
            key = {0, I};
        }
        auto it = cube_index.find(key);
        if (it == cube_index.end() || hit[it->second])
            throw FalsificationError("path identification is not a bijection");
        hit[it->second] = 1;
        image[i] = it->second;
    }
    for (std::size_t i = 0; i < a.facets.size(); ++i)
        for (std::size_t j = 0; j < a.facets.size(); ++j)
            if (a.compat[i][j] != c.compat[image[i]][image[j]])
                throw FalsificationError("path identification does not transport compatibility");
    return true;
}

bool star_fan_iso(int n) {
    if (n < 1) throw std::invalid_argument("star_fan_iso requires n >= 1");
    PolytopeModel cube = model_cube(complete_graph(n));
    PolytopeModel assoc = model_assoc(star_graph(n));  // center = vertex n
    if (cube.facets.size() != assoc.facets.size())
        throw FalsificationError("facet counts differ in the star identification");
    std::map<Mask, int> assoc_index;
    for (std::size_t i = 0; i < assoc.facets.size(); ++i)
        assoc_index[assoc.facets[i].tube] = static_cast<int>(i);
    const Mask star_full = (Mask{1} << (n + 1)) - 1;
    std::vector<int> image(cube.facets.size());
    std::vector<char> hit(assoc.facets.size(), 0);
    for (std::size_t i = 0; i < cube.facets.size(); ++i) {
        const Facet& f = cube.facets[i];
        Mask target = f.kind == FacetKind::cube_bar ? Mask{1} << f.bar : star_full & ~f.tube;
        auto it = assoc_index.find(target);
        if (it == assoc_index.end() || hit[it->second])
            throw FalsificationError("star identification is not a bijection");
        hit[it->second] = 1;
        image[i] = it->second;
    }
    for (std::size_t i = 0; i < cube.facets.size(); ++i)
        for (std::size_t j = 0; j < cube.facets.size(); ++j)
            if (cube.compat[i][j] != assoc.compat[image[i]][image[j]])
                throw FalsificationError("star identification does not transport compatibility");

    // Upgrade to a lattice identification: solve U from one vertex's
    // normal frame, then verify it carries every normal across.
    auto dual = dual_complex(cube);
    const auto& clique = dual.maximal_faces.front();
    std::vector<std::vector<Int>> A(n, std::vector<Int>(n)), B(n, std::vector<Int>(n));
    for (int col = 0; col < n; ++col)
        for (int row = 0; row < n; ++row) {
            A[row][col] = cube.normals[clique[col]][row];
            B[row][col] = assoc.normals[image[clique[col]]][row];
        }
    Int detA = det_bareiss(A);
    if (detA != 1 && detA != -1)
        throw FalsificationError("cube vertex frame is not unimodular");
    // U = B * adj(A) / det(A); integral because det(A) = +-1.
    std::vector<std::vector<Int>> adj(n, std::vector<Int>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) adj[i][j] = cofactor(A, j, i);
    std::vector<std::vector<Int>> U(n, std::vector<Int>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += B[i][k] * adj[k][j];
            U[i][j] = s / detA;
        }
    Int detU = det_bareiss(U);
    if (detU != 1 && detU != -1)
        throw FalsificationError("no unimodular matrix identifies the two fans");
    for (std::size_t f = 0; f < cube.facets.size(); ++f)
        for (int i = 0; i < n; ++i) {
            Int s = 0;
            for (int k = 0; k < n; ++k) s += U[i][k] * cube.normals[f][k];
            if (s != assoc.normals[image[f]][i])
                throw FalsificationError("unimodular candidate fails on a facet normal");
        }
    return true;
}

std::vector<std::pair<int, int>> square_facet_witness(const PolytopeModel& m) {
    if (m.dim != 3) throw std::invalid_argument("square facet witness requires dimension 3");
    auto dual = dual_complex(m);
    std::vector<int> vertex_count(m.facets.size(), 0);
    for (const auto& clique : dual.maximal_faces)
        for (int f : clique) ++vertex_count[f];
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < m.facets.size(); ++i) {
        if (vertex_count[i] != 4) continue;
        for (std::size_t j = i + 1; j < m.facets.size(); ++j) {
            if (vertex_count[j] != 4) continue;
            bool opposite = true;
            for (int k = 0; k < m.dim && opposite; ++k)
                if (m.normals[i][k] != -m.normals[j][k]) opposite = false;
            if (opposite) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
        }
    }
    return pairs;
}

}  // namespace gb
