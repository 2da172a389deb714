#include "graphbetti/homology.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <unordered_set>

#include "graphbetti/errors.hpp"

namespace gb {

int SimplicialComplex::dimension() const {
    int d = -2;
    for (const auto& f : maximal_faces) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

namespace {

struct SnfOverflow {};

// Arithmetic shims: the int64 path detects overflow and aborts so the
// caller can retry with arbitrary precision.
template <class T>
struct Ops {
    static T add(const T& a, const T& b) { return a + b; }
    static T sub(const T& a, const T& b) { return a - b; }
    static T mul(const T& a, const T& b) { return a * b; }
    static T gcd(const T& a, const T& b) { return boost::multiprecision::gcd(a, b); }
};
template <>
struct Ops<std::int64_t> {
    static std::int64_t add(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_add_overflow(a, b, &r)) throw SnfOverflow{};
        return r;
    }
    static std::int64_t sub(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_sub_overflow(a, b, &r)) throw SnfOverflow{};
        return r;
    }
    static std::int64_t mul(std::int64_t a, std::int64_t b) {
        std::int64_t r;
        if (__builtin_mul_overflow(a, b, &r)) throw SnfOverflow{};
        return r;
    }
    static std::int64_t gcd(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
};

template <class T>
T abs_of(const T& v) {
    return v < 0 ? T(-v) : v;
}

// Diagonalize by min-pivot row/column reduction, then sweep the diagonal
// into divisibility order. Returns the positive invariant factors.
template <class T>
std::vector<T> smith_diagonal(std::vector<std::vector<T>> m) {
    const int rows = static_cast<int>(m.size());
    const int cols = rows ? static_cast<int>(m[0].size()) : 0;
    std::vector<T> diag;
    int t = 0;
    while (t < rows && t < cols) {
        int pr = -1, pc = -1;
        for (int i = t; i < rows; ++i)
            for (int j = t; j < cols; ++j)
                if (m[i][j] != 0 && (pr < 0 || abs_of(m[i][j]) < abs_of(m[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr < 0) break;
        std::swap(m[t], m[pr]);
        if (pc != t)
            for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][pc]);

        for (;;) {
            bool clean = true;
            for (int i = t + 1; i < rows; ++i) {
                if (m[i][t] == 0) continue;
                T q = m[i][t] / m[t][t];
                if (q != 0)
                    for (int j = t; j < cols; ++j)
                        m[i][j] = Ops<T>::sub(m[i][j], Ops<T>::mul(q, m[t][j]));
                if (m[i][t] != 0) {  // remainder is strictly smaller: new pivot
                    std::swap(m[t], m[i]);
                    clean = false;
                }
            }
            for (int j = t + 1; j < cols; ++j) {
                if (m[t][j] == 0) continue;
                T q = m[t][j] / m[t][t];
                if (q != 0)
                    for (int i = t; i < rows; ++i)
                        m[i][j] = Ops<T>::sub(m[i][j], Ops<T>::mul(q, m[i][t]));
                if (m[t][j] != 0) {
                    for (int i = 0; i < rows; ++i) std::swap(m[i][t], m[i][j]);
                    clean = false;
                }
            }
            if (!clean) continue;
            // The pivot must divide the trailing block; if not, fold the
            // offending row into the pivot row and reduce again.
            bool divides = true;
            for (int i = t + 1; i < rows && divides; ++i)
                for (int j = t + 1; j < cols && divides; ++j)
                    if (m[i][j] % m[t][t] != 0) {
                        for (int jj = t; jj < cols; ++jj)
                            m[t][jj] = Ops<T>::add(m[t][jj], m[i][jj]);
                        divides = false;
                    }
            if (divides) break;
        }
        diag.push_back(abs_of(m[t][t]));
        ++t;
    }
    for (bool changed = true; changed;) {
        changed = false;
        for (std::size_t i = 0; i + 1 < diag.size(); ++i)
            if (diag[i + 1] % diag[i] != 0) {
                T g = Ops<T>::gcd(diag[i], diag[i + 1]);
                T l = Ops<T>::mul(diag[i] / g, diag[i + 1]);
                diag[i] = g;
                diag[i + 1] = l;
                changed = true;
            }
    }
    return diag;
}

// Boundary map out of q-faces (q >= 1): vertex omission with alternating
// signs. emit(row, col, sign) once per incidence.
void fill_boundary(const std::vector<std::vector<int>>& faces_q,
                   const std::map<std::vector<int>, int>& index_below,
                   const std::function<void(int, int, int)>& emit) {
    for (std::size_t j = 0; j < faces_q.size(); ++j) {
        const auto& face = faces_q[j];
        std::vector<int> sub(face.size() - 1);
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::size_t pos = 0;
            for (std::size_t v = 0; v < face.size(); ++v)
                if (v != drop) sub[pos++] = face[v];
            emit(index_below.at(sub), static_cast<int>(j), drop % 2 == 0 ? 1 : -1);
        }
    }
}

}  // namespace

SnfResult smith_normal_form(const IntegerMatrix& m) {
    constexpr std::int64_t kLo = std::numeric_limits<std::int64_t>::min() / 2;
    constexpr std::int64_t kHi = std::numeric_limits<std::int64_t>::max() / 2;
    bool fits = true;
    std::vector<std::vector<std::int64_t>> fast(m.rows, std::vector<std::int64_t>(m.cols));
    for (int i = 0; i < m.rows && fits; ++i)
        for (int j = 0; j < m.cols && fits; ++j) {
            if (m.a[i][j] < kLo || m.a[i][j] > kHi)
                fits = false;
            else
                fast[i][j] = static_cast<std::int64_t>(m.a[i][j]);
        }
    SnfResult r;
    if (fits) {
        try {
            auto d = smith_diagonal(std::move(fast));
            r.factors.assign(d.begin(), d.end());
            r.rank = static_cast<int>(d.size());
            return r;
        } catch (const SnfOverflow&) {
        }
    }
    r.factors = smith_diagonal<Int>(m.a);
    r.rank = static_cast<int>(r.factors.size());
    return r;
}

std::vector<std::vector<std::vector<int>>> enumerate_faces(const SimplicialComplex& k,
                                                           std::size_t face_cap) {
    std::vector<std::vector<std::vector<int>>> by_dim;
    if (k.is_void()) return by_dim;
    std::size_t total = 0;
    auto bump = [&] {
        if (face_cap && ++total > face_cap)
            throw CapacityError("face enumeration exceeded cap of " + std::to_string(face_cap));
    };
    if (k.vertex_count <= 64) {
        std::unordered_set<std::uint64_t> seen;
        std::vector<std::uint64_t> masks;
        for (const auto& f : k.maximal_faces) {
            std::uint64_t full = 0;
            for (int v : f) full |= std::uint64_t{1} << v;
            for (std::uint64_t sub = full; sub; sub = (sub - 1) & full)
                if (seen.insert(sub).second) {
                    bump();
                    masks.push_back(sub);
                }
        }
        std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
            int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
            return pa != pb ? pa < pb : a < b;
        });
        for (std::uint64_t msk : masks) {
            int q = __builtin_popcountll(msk) - 1;
            if (static_cast<int>(by_dim.size()) <= q) by_dim.resize(q + 1);
            std::vector<int> verts;
            for (std::uint64_t mm = msk; mm; mm &= mm - 1) verts.push_back(__builtin_ctzll(mm));
            by_dim[q].push_back(std::move(verts));
        }
    } else {
        std::set<std::vector<int>> seen;
        for (const auto& f : k.maximal_faces) {
            const int sz = static_cast<int>(f.size());
            for (std::uint64_t sub = 1; sub < (std::uint64_t{1} << sz); ++sub) {
                std::vector<int> verts;
                for (std::uint64_t mm = sub; mm; mm &= mm - 1)
                    verts.push_back(f[__builtin_ctzll(mm)]);
                std::sort(verts.begin(), verts.end());
                if (seen.insert(std::move(verts)).second) bump();
            }
        }
        for (const auto& verts : seen) {
            int q = static_cast<int>(verts.size()) - 1;
            if (static_cast<int>(by_dim.size()) <= q) by_dim.resize(q + 1);
            by_dim[q].push_back(verts);
        }
        for (auto& d : by_dim) std::sort(d.begin(), d.end());
    }
    return by_dim;
}

Int HomologyGroups::reduced_betti(int q) const {
    int idx = q + 1;
    if (idx < 0 || idx >= static_cast<int>(betti.size())) return 0;
    return betti[idx];
}

const std::vector<Int>& HomologyGroups::torsion_in(int q) const {
    static const std::vector<Int> none;
    int idx = q + 1;
    if (idx < 0 || idx >= static_cast<int>(torsion.size())) return none;
    return torsion[idx];
}

bool HomologyGroups::torsion_free() const {
    for (const auto& t : torsion)
        if (!t.empty()) return false;
    return true;
}

bool HomologyGroups::trivial() const {
    for (const auto& b : betti)
        if (b != 0) return false;
    return torsion_free();
}

HomologyGroups reduced_homology(const SimplicialComplex& k, std::size_t face_cap) {
    HomologyGroups h;
    if (k.is_void()) return h;
    auto faces = enumerate_faces(k, face_cap);
    const int dim = static_cast<int>(faces.size()) - 1;
    h.top_dim = dim;
    h.betti.assign(dim + 2, Int(0));
    h.torsion.assign(dim + 2, {});
    if (dim < 0) {
        h.betti[0] = 1;  // only the empty face: the (-1)-sphere
        return h;
    }
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    for (int q = 0; q <= dim; ++q)
        for (std::size_t j = 0; j < faces[q].size(); ++j)
            index[q][faces[q][j]] = static_cast<int>(j);

    // rank[q] = rank of the boundary map out of q-chains; rank[0] is the
    // augmentation onto the empty face, rank[dim+1] = 0.
    std::vector<int> rank(dim + 2, 0);
    std::vector<std::vector<Int>> tors(dim + 2);
    rank[0] = 1;
    for (int q = 1; q <= dim; ++q) {
        IntegerMatrix m;
        m.rows = static_cast<int>(faces[q - 1].size());
        m.cols = static_cast<int>(faces[q].size());
        m.a.assign(m.rows, std::vector<Int>(m.cols, 0));
        fill_boundary(faces[q], index[q - 1],
                      [&](int row, int col, int sign) { m.a[row][col] = sign; });
        SnfResult s = smith_normal_form(m);
        rank[q] = s.rank;
        for (const Int& f : s.factors)
            if (f > 1) tors[q].push_back(f);
    }
    for (int q = 0; q <= dim; ++q) {
        h.betti[q + 1] = Int(static_cast<long long>(faces[q].size())) - rank[q] - rank[q + 1];
        // invariant factors of the q-boundary give torsion in degree q-1
        h.torsion[q] = std::move(tors[q]);
    }
    return h;
}

std::vector<Int> reduced_betti_gf2(const SimplicialComplex& k, std::size_t face_cap) {
    std::vector<Int> out;
    if (k.is_void()) return out;
    auto faces = enumerate_faces(k, face_cap);
    const int dim = static_cast<int>(faces.size()) - 1;
    out.assign(dim + 2, Int(0));
    if (dim < 0) {
        out[0] = 1;
        return out;
    }
    std::vector<std::map<std::vector<int>, int>> index(dim + 1);
    for (int q = 0; q <= dim; ++q)
        for (std::size_t j = 0; j < faces[q].size(); ++j)
            index[q][faces[q][j]] = static_cast<int>(j);
    std::vector<int> rank(dim + 2, 0);
    rank[0] = 1;
    for (int q = 1; q <= dim; ++q) {
        const int rows = static_cast<int>(faces[q - 1].size());
        const int cols = static_cast<int>(faces[q].size());
        const int words = (cols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> m(rows, std::vector<std::uint64_t>(words, 0));
        fill_boundary(faces[q], index[q - 1], [&](int row, int col, int) {
            m[row][col / 64] ^= std::uint64_t{1} << (col % 64);
        });
        int r = 0;
        for (int col = 0; col < cols && r < rows; ++col) {
            int pivot = -1;
            for (int i = r; i < rows; ++i)
                if ((m[i][col / 64] >> (col % 64)) & 1) {
                    pivot = i;
                    break;
                }
            if (pivot < 0) continue;
            std::swap(m[r], m[pivot]);
            for (int i = 0; i < rows; ++i)
                if (i != r && ((m[i][col / 64] >> (col % 64)) & 1))
                    for (int w = 0; w < words; ++w) m[i][w] ^= m[r][w];
            ++r;
        }
        rank[q] = r;
    }
    for (int q = 0; q <= dim; ++q)
        out[q + 1] = Int(static_cast<long long>(faces[q].size())) - rank[q] - rank[q + 1];
    return out;
}

SimplicialComplex order_complex(const Poset& p) {
    const int proper = p.size() - 2;
    if (proper < 0) throw std::invalid_argument("order_complex requires a bounded poset");
    if (proper == 0) return SimplicialComplex::minus_one_sphere();
    SimplicialComplex k;
    k.vertex_count = proper;
    auto comparable = [&](int a, int b) { return p.less[a + 1][b + 1] || p.less[b + 1][a + 1]; };
    std::vector<std::vector<int>> chains;
    std::vector<int> cur;
    // Chains grown strictly upward are automatically pairwise comparable.
    // A finished chain is maximal iff no proper element is comparable to
    // every member.
    auto maximal = [&] {
        for (int x = 0; x < proper; ++x) {
            bool extends = true;
            for (int c : cur)
                if (x == c || !comparable(x, c)) {
                    extends = false;
                    break;
                }
            if (extends) return false;
        }
        return true;
    };
    std::function<void()> rec = [&] {
        bool grew = false;
        for (int x = 0; x < proper; ++x) {
            if (cur.empty()) {
                bool is_minimal = true;
                for (int y = 0; y < proper && is_minimal; ++y)
                    if (p.less[y + 1][x + 1]) is_minimal = false;
                if (!is_minimal) continue;
            } else if (!p.less[cur.back() + 1][x + 1]) {
                continue;
            }
            cur.push_back(x);
            grew = true;
            rec();
            cur.pop_back();
        }
        if (!grew && !cur.empty() && maximal()) {
            std::vector<int> face = cur;
            std::sort(face.begin(), face.end());
            chains.push_back(std::move(face));
        }
    };
    rec();
    std::sort(chains.begin(), chains.end());
    chains.erase(std::unique(chains.begin(), chains.end()), chains.end());
    k.maximal_faces = std::move(chains);
    return k;
}

Int euler_characteristic(const SimplicialComplex& k) {
    if (k.is_void()) return 0;
    auto faces = enumerate_faces(k);
    Int chi = -1;  // the empty face in degree -1
    for (std::size_t q = 0; q < faces.size(); ++q) {
        Int cnt = static_cast<long long>(faces[q].size());
        chi += q % 2 == 0 ? cnt : -cnt;
    }
    return chi;
}

}  // namespace gb
