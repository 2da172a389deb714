#include "graphbetti/betti.hpp"

#include <array>
#include <stdexcept>

#include "graphbetti/invariants.hpp"

namespace gb {

void BettiVector::trim() {
    while (!beta.empty() && beta.back() == 0) beta.pop_back();
}

BettiVector betti_assoc(const Graph& g) {
    SubsetTable t = a_table(g);
    BettiVector v;
    v.beta.assign(g.n / 2 + 1, Int(0));
    for (Mask I = 0; I < t.values.size(); ++I) {
        if (t.values[I] == 0 && I != 0) continue;
        int i = popcount(I) / 2;
        v.beta[i] += abs(t.values[I]);
    }
    v.trim();
    return v;
}

BettiVector betti_cube(const Graph& g) {
    SubsetTable t = b_table(g);
    SubsetParity parity = subset_parity(g);
    BettiVector v;
    v.beta.assign(g.n + 1, Int(0));
    for (Mask I = 0; I < t.values.size(); ++I) {
        if (t.values[I] == 0 && I != 0) continue;
        int i = (popcount(I) + parity.kappa[I]) / 2;
        v.beta[i] += abs(t.values[I]);
    }
    v.trim();
    return v;
}

Int euler_char(const BettiVector& v) {
    Int chi = 0;
    for (std::size_t i = 0; i < v.beta.size(); ++i) chi += (i % 2 == 0) ? v.beta[i] : -v.beta[i];
    return chi;
}

Int euler_char_assoc(const Graph& g) { return euler_char(betti_assoc(g)); }
Int euler_char_cube(const Graph& g) { return euler_char(betti_cube(g)); }

Int binomial(long long n, long long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long long j = 1; j <= k; ++j) {
        r *= n - k + j;
        r /= j;
    }
    return r;
}

Int catalan(int k) { return binomial(2LL * k, k) / (k + 1); }

Int narayana(int n, int k) {
    if (n < 1 || k < 1 || k > n) throw std::out_of_range("narayana indices");
    return binomial(n, k) * binomial(n, k - 1) / n;
}

Int euler_zigzag(int k) {
    if (k == -2) return 0;  // star closed-form convention
    if (k < 0) throw std::out_of_range("euler_zigzag index");
    // Boustrophedon transform of 1,0,0,...
    std::vector<Int> row{1};
    for (int m = 1; m <= k; ++m) {
        std::vector<Int> next(m + 1);
        next[0] = 0;
        for (int j = 1; j <= m; ++j) next[j] = next[j - 1] + row[m - j];
        row = std::move(next);
    }
    return row.back();
}

Int central_binomial(int k) { return binomial(2LL * k, k); }

Int closed_form_assoc(Family family, int vertices, int i) {
    if (i == 0) return 1;
    if (i < 0 || 2 * i > vertices) throw std::out_of_range("closed_form_assoc degree");
    switch (family) {
        case Family::complete: return binomial(vertices, 2 * i) * euler_zigzag(2 * i);
        case Family::path: return binomial(vertices, i) - binomial(vertices, i - 1);
        case Family::cycle:
            return 2 * i < vertices ? binomial(vertices, i) : central_binomial(i) / 2;
        case Family::star: return binomial(vertices - 1, 2 * i - 1) * euler_zigzag(2 * i - 1);
        default: throw std::invalid_argument("no assoc closed form for this family");
    }
}

Int closed_form_cube(Family family, int n, int i) {
    if (i < 0) return 0;
    if (i == 0) return 1;
    switch (family) {
        case Family::path:
            if (2 * i > n + 1) return 0;
            return binomial(n + 1, i) - binomial(n + 1, i - 1);
        case Family::cycle:
            if (2 * i <= n) return binomial(n, i);
            if (n % 2 == 1 && 2 * i == n + 1) return binomial(n - 1, i - 1);
            return 0;
        case Family::complete: return binomial(n, 2 * i - 1) * euler_zigzag(2 * i - 1);
        case Family::star:  // K_{1,n}, n leaves
            return binomial(n, i) + binomial(n, 2 * i - 2) * euler_zigzag(2 * i - 2);
        default: throw std::invalid_argument("no cube closed form for this family");
    }
}

Int b_closed_form(Family family, int n) {
    if (n % 2 == 0) throw std::invalid_argument("b closed forms require odd vertex count");
    const int sign_up = ((n + 1) / 2) % 2 == 0 ? 1 : -1;  // (-1)^{(n+1)/2}
    switch (family) {
        case Family::complete: return sign_up * euler_zigzag(n);
        case Family::path: return sign_up * catalan((n - 1) / 2);
        case Family::cycle: return sign_up * binomial(n - 1, (n - 1) / 2);
        case Family::star: return sign_up * euler_zigzag(n - 1);  // K_{1,n-1}
        default: throw std::invalid_argument("no b closed form for this family");
    }
}

ForestLineReport forest_line_identity(const Graph& g) {
    if (!is_forest(g)) throw std::invalid_argument("forest_line_identity requires a forest");
    ForestLineReport r;
    r.assoc = betti_assoc(g);
    r.cube_of_line = betti_cube(line_graph(g));
    r.betti_equal = r.assoc == r.cube_of_line;
    r.even_forest = is_even(g);
    r.a_value = a_number(g);
    r.signed_sum = 0;
    r.abs_sum = 0;
    if (r.even_forest) {
        auto es = g.edges();
        for (std::uint64_t sub : spanning_subgraphs_no_isolated(g)) {
            // L(H) for the spanning subgraph H with edge set `sub`.
            std::vector<std::pair<int, int>> chosen;
            for (std::uint64_t m = sub; m; m &= m - 1) chosen.push_back(es[lowest_bit(m)]);
            Graph lh(static_cast<int>(chosen.size()));
            for (std::size_t a = 0; a < chosen.size(); ++a)
                for (std::size_t b = a + 1; b < chosen.size(); ++b) {
                    auto [u1, v1] = chosen[a];
                    auto [u2, v2] = chosen[b];
                    if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                        lh.add_edge(static_cast<int>(a), static_cast<int>(b));
                }
            Int b = b_number(lh);
            r.signed_sum += b;
            r.abs_sum += abs(b);
        }
        r.signed_identity = r.signed_sum == r.a_value;
        r.abs_identity = r.abs_sum == abs(r.a_value);
    }
    return r;
}

namespace {

struct DyckWord {
    std::array<char, 16> c;  // '(' ')' '*'
    int n;
};

// Paren run validity and outermost positions. A star-delimited run must
// be a Dyck word as written; the no-star whole-circle case may be cut at
// the global minimum of the prefix sums (cycle lemma) first.
bool analyze_run(const std::vector<char>& word, const std::vector<int>& run, bool circular,
                 std::uint32_t& left_outer, std::uint32_t& right_outer) {
    int sum = 0;
    for (int p : run) sum += word[p] == '(' ? 1 : -1;
    if (sum != 0) return false;
    int best_cut = 0;
    if (circular) {
        int prefix = 0, min_prefix = 0;
        for (std::size_t j = 0; j < run.size(); ++j) {
            prefix += word[run[j]] == '(' ? 1 : -1;
            if (prefix < min_prefix) {
                min_prefix = prefix;
                best_cut = static_cast<int>(j + 1);
            }
        }
    }
    int depth = 0;
    for (std::size_t j = 0; j < run.size(); ++j) {
        int p = run[(best_cut + j) % run.size()];
        if (word[p] == '(') {
            if (depth == 0) left_outer |= 1u << p;
            ++depth;
        } else {
            --depth;
            if (depth < 0) return false;
            if (depth == 0) right_outer |= 1u << p;
        }
    }
    return depth == 0;
}

}  // namespace

DyckCensus partial_dyck_census(int n, int i) {
    if (n < 1 || i < 0 || 2 * i > n) throw std::out_of_range("partial_dyck_census indices");
    Graph cn = cycle_graph(n);
    SubsetTable bt = b_table(cn);

    struct ClassData {
        Int size = 0;
        Mask subset = 0;
    };
    std::vector<std::pair<std::uint64_t, ClassData>> classes;  // key -> data
    auto class_of = [&](std::uint64_t key) -> ClassData& {
        for (auto& [k, d] : classes)
            if (k == key) return d;
        classes.push_back({key, {}});
        return classes.back().second;
    };

    Int total = 0;
    std::vector<char> word(n);
    std::uint64_t limit = 1;
    for (int j = 0; j < n; ++j) limit *= 3;
    for (std::uint64_t code = 0; code < limit; ++code) {
        std::uint64_t c = code;
        int lefts = 0, rights = 0;
        for (int j = 0; j < n; ++j) {
            word[j] = "()*"[c % 3];
            c /= 3;
            lefts += word[j] == '(';
            rights += word[j] == ')';
        }
        if (lefts != i || rights != i) continue;

        // Split into maximal circular paren runs between stars.
        std::uint32_t left_outer = 0, right_outer = 0;
        bool valid = true;
        int star = -1;
        for (int j = 0; j < n; ++j)
            if (word[j] == '*') {
                star = j;
                break;
            }
        if (star < 0) {
            if (lefts > 0) {
                std::vector<int> run(n);
                for (int j = 0; j < n; ++j) run[j] = j;
                valid = analyze_run(word, run, true, left_outer, right_outer);
            }
        } else {
            std::vector<int> run;
            for (int off = 1; off <= n; ++off) {
                int p = (star + off) % n;
                if (word[p] == '*') {
                    if (!run.empty()) {
                        valid = valid && analyze_run(word, run, false, left_outer, right_outer);
                        run.clear();
                    }
                } else {
                    run.push_back(p);
                }
            }
            if (!run.empty()) valid = valid && analyze_run(word, run, false, left_outer, right_outer);
        }
        if (!valid) continue;

        total += 1;
        std::uint64_t key = (std::uint64_t{left_outer} << 32) | right_outer;
        ClassData& cd = class_of(key);
        cd.size += 1;
        // I_f: parens that are inner or left outermost.
        Mask subset = 0;
        for (int j = 0; j < n; ++j)
            if (word[j] != '*' && !((right_outer >> j) & 1)) subset |= Mask{1} << j;
        cd.subset = subset;
    }

    DyckCensus out;
    out.count = total;
    out.count_is_binomial = total == binomial(n, i);
    out.classes_match_b = true;
    out.class_total = 0;
    for (auto& [key, cd] : classes) {
        (void)key;
        Int bval = abs(bt[cd.subset]);
        out.class_sizes.push_back(cd.size);
        out.class_b_values.push_back(bval);
        out.class_total += cd.size;
        if (cd.size != bval) out.classes_match_b = false;
    }
    return out;
}

}  // namespace gb
