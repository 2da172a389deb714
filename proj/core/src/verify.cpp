#include "graphbetti/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "graphbetti/betti.hpp"
#include "graphbetti/errors.hpp"
#include "graphbetti/homology.hpp"
#include "graphbetti/invariants.hpp"
#include "graphbetti/polytope.hpp"
#include "graphbetti/toric.hpp"

namespace gb {

namespace {

// ----- rooted/free tree enumeration -----

// Rooted trees of each size as balanced-paren encodings; a rooted tree is
// a multiset of child subtrees, enumerated with non-increasing pool index
// to visit each multiset once.
std::vector<std::vector<std::string>> rooted_by_size(int n) {
    std::vector<std::vector<std::string>> by(n + 1);
    if (n >= 1) by[1] = {"()"};
    for (int s = 2; s <= n; ++s) {
        std::vector<std::pair<std::string, int>> pool;
        for (int t = 1; t < s; ++t)
            for (const auto& e : by[t]) pool.emplace_back(e, t);
        std::vector<int> kids;
        std::function<void(int, int)> rec = [&](int rem, int maxi) {
            if (rem == 0) {
                std::string enc = "(";
                for (int k : kids) enc += pool[k].first;
                enc += ")";
                by[s].push_back(std::move(enc));
                return;
            }
            for (int k = std::min(maxi, static_cast<int>(pool.size()) - 1); k >= 0; --k)
                if (pool[k].second <= rem) {
                    kids.push_back(k);
                    rec(rem - pool[k].second, k);
                    kids.pop_back();
                }
        };
        rec(s - 1, static_cast<int>(pool.size()) - 1);
    }
    return by;
}

Graph tree_from_encoding(const std::string& enc) {
    Graph g(static_cast<int>(enc.size() / 2));
    std::vector<int> stack;
    int next = 0;
    for (char c : enc) {
        if (c == '(') {
            int v = next++;
            if (!stack.empty()) g.add_edge(stack.back(), v);
            stack.push_back(v);
        } else {
            stack.pop_back();
        }
    }
    return g;
}

std::string ahu(const Graph& g, int v, int parent) {
    std::vector<std::string> ch;
    for (Mask m = g.adj[v]; m; m &= m - 1) {
        int w = lowest_bit(m);
        if (w != parent) ch.push_back(ahu(g, w, v));
    }
    std::sort(ch.begin(), ch.end());
    std::string out = "(";
    for (const auto& c : ch) out += c;
    return out + ")";
}

std::vector<int> tree_centroids(const Graph& g) {
    const int n = g.n;
    std::vector<int> size(n, 1), maxcomp(n, 0), order, parent(n, -1);
    order.reserve(n);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (Mask m = g.adj[v]; m; m &= m - 1) {
            int w = lowest_bit(m);
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                stack.push_back(w);
            }
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        int v = order[i];
        if (parent[v] >= 0) {
            size[parent[v]] += size[v];
            maxcomp[parent[v]] = std::max(maxcomp[parent[v]], size[v]);
        }
        maxcomp[v] = std::max(maxcomp[v], n - size[v]);
    }
    int best = n;
    for (int v = 0; v < n; ++v) best = std::min(best, maxcomp[v]);
    std::vector<int> cs;
    for (int v = 0; v < n; ++v)
        if (maxcomp[v] == best) cs.push_back(v);
    return cs;
}

std::string tree_canonical(const Graph& g) {
    std::string best;
    for (int c : tree_centroids(g)) {
        std::string s = ahu(g, c, -1);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const auto& p : parts) total += p.n;
    Graph g(total);
    int off = 0;
    for (const auto& p : parts) {
        for (auto [u, v] : p.edges()) g.add_edge(u + off, v + off);
        off += p.n;
    }
    return g;
}

}  // namespace

std::vector<Graph> free_trees(int n) {
    if (n <= 0) return {};
    if (n == 1) return {Graph(1)};
    auto by = rooted_by_size(n);
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const auto& enc : by[n]) {
        Graph g = tree_from_encoding(enc);
        if (seen.insert(tree_canonical(g)).second) out.push_back(std::move(g));
    }
    return out;
}

std::vector<Graph> even_forests_up_to(int max_vertices) {
    std::vector<Graph> even_trees;
    for (int s = 2; s <= max_vertices; s += 2)
        for (Graph& t : free_trees(s)) even_trees.push_back(std::move(t));
    std::vector<Graph> out{Graph(0)};
    std::vector<Graph> cur;
    std::function<void(int, int)> rec = [&](int rem, int maxi) {
        for (int k = maxi; k >= 0; --k) {
            if (even_trees[k].n > rem) continue;
            cur.push_back(even_trees[k]);
            out.push_back(disjoint_union(cur));
            rec(rem - even_trees[k].n, k);
            cur.pop_back();
        }
    };
    rec(max_vertices, static_cast<int>(even_trees.size()) - 1);
    return out;
}

std::vector<Graph> connected_graphs(int n) {
    std::vector<Graph> out;
    if (n <= 0) return out;
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const int e = static_cast<int>(pairs.size());
    std::vector<int> perm(n);
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask) {
        Graph g(n);
        for (int k = 0; k < e; ++k)
            if ((mask >> k) & 1) g.add_edge(pairs[k].first, pairs[k].second);
        if (!is_connected(g)) continue;
        std::iota(perm.begin(), perm.end(), 0);
        std::uint64_t canon = ~std::uint64_t{0};
        do {
            std::uint64_t code = 0;
            for (int k = 0; k < e; ++k)
                if (g.has_edge(perm[pairs[k].first], perm[pairs[k].second]))
                    code |= std::uint64_t{1} << k;
            canon = std::min(canon, code);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (seen.insert(canon).second) out.push_back(std::move(g));
    }
    return out;
}

Graph random_graph(int n, std::mt19937& rng) {
    Graph g(n);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

namespace {

std::string describe(const Graph& g) { return encode_graph6(g); }

using Suite = std::vector<CheckResult>;

void add(Suite& s, const std::string& name, bool pass, std::string detail = "") {
    s.push_back({name, pass, std::move(detail)});
}

Suite suite_duality(const SuiteOptions& opts) {
    Suite s;
    const int max_n = opts.max_n ? opts.max_n : 12;
    std::mt19937 rng(opts.seed);
    bool ok = true;
    std::string bad;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        Graph g = random_graph(n, rng);
        if (b_via_a(g) != b_number(g) || a_via_b(g) != a_number(g)) {
            ok = false;
            bad = describe(g);
            break;
        }
    }
    add(s, "cross-table identities on 500 random graphs", ok, bad);

    ok = true;
    bad.clear();
    for (int trial = 0; trial < 50; ++trial) {
        int n = 1 + static_cast<int>(rng() % 7u);
        Graph g = random_graph(n, rng);
        Poset pe = even_poset(g), po = odd_poset(g);
        Int mu_e = mobius_invariant(pe), mu_o = mobius_invariant(po);
        if (euler_characteristic(order_complex(pe)) != mu_e ||
            euler_characteristic(order_complex(po)) != mu_o ||
            (is_even(g) && mu_e != a_number(g)) || (is_odd(g) && mu_o != b_number(g))) {
            ok = false;
            bad = describe(g);
            break;
        }
    }
    add(s, "order-complex Euler characteristic equals the Mobius invariant", ok, bad);
    return s;
}

Suite suite_signs(const SuiteOptions& opts) {
    Suite s;
    const int max_n = opts.max_n ? opts.max_n : 12;
    std::mt19937 rng(opts.seed);
    bool ok = true;
    std::string bad;
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % static_cast<unsigned>(max_n));
        Graph g = random_graph(n, rng);
        Int a = a_number(g), b = b_number(g);
        if (a != 0 && (a > 0 ? 1 : -1) != sign_of_a(g)) {
            ok = false;
            bad = describe(g);
            break;
        }
        if (b != 0 && (b > 0 ? 1 : -1) != sign_of_b(g)) {
            ok = false;
            bad = describe(g);
            break;
        }
    }
    add(s, "sign law for nonzero invariants on 500 random graphs", ok, bad);
    return s;
}

Suite suite_forest(const SuiteOptions& opts) {
    Suite s;
    const int max_n = opts.max_n ? opts.max_n : 9;
    static const long long kTreeCounts[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    bool counts_ok = true;
    std::string counts_bad;
    std::vector<std::vector<Graph>> trees(max_n + 1);
    for (int n = 1; n <= max_n; ++n) {
        trees[n] = free_trees(n);
        if (n <= 10 && static_cast<long long>(trees[n].size()) != kTreeCounts[n - 1]) {
            counts_ok = false;
            counts_bad = "n=" + std::to_string(n) + " count " + std::to_string(trees[n].size());
        }
    }
    add(s, "free tree counts match the known sequence", counts_ok, counts_bad);

    bool ok = true;
    std::string bad;
    for (int n = 1; n <= max_n && ok; ++n)
        for (const Graph& t : trees[n]) {
            ForestLineReport r = forest_line_identity(t);
            if (!r.betti_equal || (r.even_forest && (!r.signed_identity || !r.abs_identity))) {
                ok = false;
                bad = describe(t);
                break;
            }
        }
    add(s, "tree Betti numbers transfer to the line graph", ok, bad);

    ok = true;
    bad.clear();
    for (const Graph& f : even_forests_up_to(std::min(max_n + 1, 10))) {
        ForestLineReport r = forest_line_identity(f);
        if (!r.betti_equal || !r.signed_identity || !r.abs_identity) {
            ok = false;
            bad = describe(f);
            break;
        }
    }
    add(s, "even-forest spanning-subgraph identity", ok, bad);

    add(s, "5-cycle is a genuine non-example", betti_assoc(cycle_graph(5)) != betti_cube(cycle_graph(5)));
    return s;
}

Suite suite_flags(const SuiteOptions& opts) {
    Suite s;
    const int max_n = opts.max_n ? opts.max_n : 8;

    bool ok = true;
    std::string bad;
    for (int n = 2; n <= max_n && ok; ++n) {
        auto ha = h_vector(model_assoc(path_graph(n)));
        auto hc = h_vector(model_cube(path_graph(n)));
        for (int i = 0; i < n; ++i)
            if (ha[i] != narayana(n, i + 1)) ok = false;
        for (int i = 0; i <= n; ++i)
            if (hc[i] != narayana(n + 1, i + 1)) ok = false;
        if (!ok) bad = "path n=" + std::to_string(n);
    }
    add(s, "path h-vectors are Narayana rows", ok, bad);

    add(s, "small path facet counts", model_assoc(path_graph(4)).facets.size() == 9 &&
                                          model_cube(path_graph(3)).facets.size() == 9 &&
                                          model_cube(path_graph(2)).facets.size() == 5);

    std::vector<Graph> pool;
    for (int n = 1; n <= 5; ++n)
        for (Graph& g : connected_graphs(n)) pool.push_back(std::move(g));
    pool.push_back(path_graph(6));
    pool.push_back(cycle_graph(6));
    pool.push_back(star_graph(5));
    pool.push_back(complete_graph(6));

    ok = true;
    bad.clear();
    for (const Graph& g : pool) {
        auto hc = h_vector_cube(g);  // Dehn-Sommerville asserted inside
        Int hsum = 0;
        for (const Int& x : hc) hsum += x;
        PolytopeModel mc = model_cube(g);
        if (hsum != f_vector(mc)[0] || !delzant_check(mc) || !delzant_check(model_assoc(g))) {
            ok = false;
            bad = describe(g);
            break;
        }
        BettiVector beta = betti_cube(g);
        for (std::size_t i = 0; i < hc.size(); ++i)
            if (hc[i] < beta.at(static_cast<int>(i))) {
                ok = false;
                bad = describe(g);
            }
        h_vector_assoc(g);
    }
    add(s, "h-vectors, vertex counts, normal bases on the small-graph pool", ok, bad);

    ok = true;
    bad.clear();
    for (int n = 1; n <= 6; ++n)
        if (!path_poset_iso(n)) {
            ok = false;
            bad = "n=" + std::to_string(n);
        }
    add(s, "path face-poset identification", ok, bad);

    ok = true;
    bad.clear();
    for (int n = 1; n <= 4; ++n)
        if (!star_fan_iso(n)) {
            ok = false;
            bad = "n=" + std::to_string(n);
        }
    add(s, "complete-graph/star fan identification", ok, bad);

    add(s, "parallel square facets distinguish the two 3-dim models",
        !square_facet_witness(model_assoc(path_graph(4))).empty() &&
            square_facet_witness(model_cube(path_graph(3))).empty());
    return s;
}

Suite suite_oracle(const SuiteOptions& opts) {
    Suite s;
    const int max_n = opts.max_n ? opts.max_n : 5;
    const std::size_t cap = default_face_cap();

    std::vector<Graph> small;
    for (int n = 1; n <= max_n; ++n)
        for (Graph& g : connected_graphs(n)) small.push_back(std::move(g));

    bool ok = true;
    std::string bad;
    for (const Graph& g : small) {
        CohomologyProfile pc = cohomology_profile(g, PolytopeKind::cube, cap);
        CohomologyProfile pa = cohomology_profile(g, PolytopeKind::assoc, cap);
        BettiVector bc = betti_cube(g), ba = betti_assoc(g);
        auto matches = [](const std::vector<Int>& free_rank, const BettiVector& want) {
            for (std::size_t i = 0; i < std::max(free_rank.size(), want.beta.size()); ++i) {
                Int lhs = i < free_rank.size() ? free_rank[i] : Int(0);
                if (lhs != want.at(static_cast<int>(i))) return false;
            }
            return true;
        };
        if (!matches(pc.free_rank, bc) || !matches(pa.free_rank, ba)) {
            ok = false;
            bad = describe(g);
            break;
        }
    }
    add(s, "homology sum matches both counting formulas on all small connected graphs", ok, bad);

    ok = true;
    bad.clear();
    {
        std::vector<Graph> six{path_graph(6), cycle_graph(6), star_graph(5)};
        for (const Graph& g : six) {
            CohomologyProfile pc = cohomology_profile(g, PolytopeKind::cube, cap);
            BettiVector bc = betti_cube(g);
            for (std::size_t i = 0; i < pc.free_rank.size(); ++i)
                if (pc.free_rank[i] != bc.at(static_cast<int>(i))) {
                    ok = false;
                    bad = describe(g);
                }
        }
    }
    add(s, "homology sum matches the counting formula on the 6-vertex samples", ok, bad);

    ok = true;
    bad.clear();
    for (int n = 1; n <= std::min(max_n, 4) && ok; ++n)
        for (const Graph& g : connected_graphs(n)) {
            PolytopeModel m = model_cube(g);
            SimplicialComplex dual = dual_complex(m);
            CharMatrix cm = char_matrix(m);
            for (Mask S = 0; S < (Mask{1} << g.n); ++S) {
                SimplicialComplex direct = k_odd(g, S);
                SimplicialComplex via = p_omega_complex(m, dual, omega(cm, S));
                if (direct.maximal_faces != via.maximal_faces) {
                    ok = false;
                    bad = describe(g) + " S=" + std::to_string(S);
                    break;
                }
            }
            if (!ok) break;
        }
    add(s, "direct odd-subcomplex construction equals the flagged facet union", ok, bad);

    ok = true;
    bad.clear();
    for (const Graph& g : small) {
        if (g.n > 5) continue;
        for (Mask S = 0; S < (Mask{1} << g.n); ++S)
            if (!restriction_check(g, S)) {
                ok = false;
                bad = describe(g) + " S=" + std::to_string(S);
                break;
            }
        if (!ok) break;
    }
    add(s, "odd subcomplex homology only depends on the selected subgraph", ok, bad);

    ok = true;
    bad.clear();
    {
        std::vector<Graph> evens;
        for (const Graph& g : small)
            if (is_even(g)) evens.push_back(g);
        evens.push_back(path_graph(6));
        evens.push_back(cycle_graph(6));
        evens.push_back(star_graph(5));
        for (const Graph& g : evens)
            if (!even_trivial_check(g)) {
                ok = false;
                bad = describe(g);
                break;
            }
    }
    add(s, "odd subcomplex of a connected even graph has trivial homology", ok, bad);

    ok = true;
    bad.clear();
    for (const Graph& g : small)
        if (is_odd(g) && !alexander_check(g)) {
            ok = false;
            bad = describe(g);
            break;
        }
    add(s, "odd/even subcomplex Betti numbers are dual", ok, bad);
    return s;
}

Suite suite_dyck(const SuiteOptions& opts) {
    Suite s;
    const int max_n = opts.max_n ? opts.max_n : 10;
    bool ok = true;
    std::string bad;
    for (int n = 3; n <= max_n && ok; ++n) {
        BettiVector bc = betti_cube(cycle_graph(n));
        for (int i = 0; 2 * i <= n; ++i) {
            DyckCensus c = partial_dyck_census(n, i);
            if (!c.count_is_binomial || !c.classes_match_b || c.class_total != c.count ||
                c.count != bc.at(i)) {
                ok = false;
                bad = "n=" + std::to_string(n) + " i=" + std::to_string(i);
                break;
            }
        }
    }
    add(s, "circular word census matches binomials and class b-values", ok, bad);
    return s;
}

Suite suite_type_b(const SuiteOptions&) {
    Suite s;
    {
        HomologyGroups h = type_b_homology(complete_graph(2));
        add(s, "two-vertex complete graph: four isolated signed sets", h.reduced_betti(0) == 3 && h.top_dim == 0);
    }
    {
        HomologyGroups h = type_b_homology(Graph(1));
        add(s, "single vertex: empty proper part", h.reduced_betti(-1) == 1);
    }
    {
        HomologyGroups h = type_b_homology(star_graph(4));
        add(s, "four-leaf star: disconnected order complex", h.reduced_betti(0) >= 1,
            "beta_0 = " + h.reduced_betti(0).str());
    }
    bool ok = true;
    std::string bad;
    for (const Graph& g : {complete_graph(2), path_graph(3), complete_graph(3)}) {
        Poset p = type_b_poset(g);
        if (euler_characteristic(order_complex(p)) != mobius_invariant(p)) {
            ok = false;
            bad = describe(g);
        }
    }
    add(s, "signed poset satisfies the Euler/Mobius identity", ok, bad);
    return s;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"duality", "signs", "forest", "flags", "oracle", "dyck", "typeB"};
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts) {
    if (suite == "duality") return suite_duality(opts);
    if (suite == "signs") return suite_signs(opts);
    if (suite == "forest") return suite_forest(opts);
    if (suite == "flags") return suite_flags(opts);
    if (suite == "oracle") return suite_oracle(opts);
    if (suite == "dyck") return suite_dyck(opts);
    if (suite == "typeB") return suite_type_b(opts);
    if (suite == "all") {
        std::vector<CheckResult> all;
        for (const auto& name : suite_names()) {
            auto part = run_suite(name, opts);
            for (auto& r : part) {
                r.name = name + ": " + r.name;
                all.push_back(std::move(r));
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace gb
