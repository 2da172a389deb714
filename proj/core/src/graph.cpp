#include "graphbetti/graph.hpp"

#include <algorithm>
#include <cctype>

namespace gb {

Graph::Graph(int vertices) : n(vertices), adj(vertices, 0) {
    if (vertices < 0 || vertices > kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(vertices) +
                            " outside [0, " + std::to_string(kMaxVertices) + "]");
}

void Graph::add_edge(int u, int v) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (Mask row : adj) twice += popcount(row);
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (has_edge(u, v)) out.emplace_back(u, v);
    return out;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n <= 2) return path_graph(n);
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph star_graph(int leaves) {
    Graph g(leaves + 1);
    for (int i = 0; i < leaves; ++i) g.add_edge(i, leaves);
    return g;
}

Graph octopus_graph(const std::vector<int>& arms) {
    int total = 1;
    for (int len : arms) {
        if (len < 1) throw CapacityError("octopus arm length must be >= 1");
        total += len;
    }
    Graph g(total);
    int next = 1;
    for (int len : arms) {
        int prev = 0;  // hub
        for (int k = 0; k < len; ++k) {
            g.add_edge(prev, next);
            prev = next++;
        }
    }
    return g;
}

Graph spider_graph(const std::vector<int>& arms) {
    return line_graph(octopus_graph(arms));
}

Graph make_family(const FamilySpec& spec) {
    switch (spec.kind) {
        case Family::path: return path_graph(spec.size);
        case Family::cycle: return cycle_graph(spec.size);
        case Family::complete: return complete_graph(spec.size);
        case Family::star:
            if (spec.size < 1) throw CapacityError("star needs >= 1 vertex");
            return star_graph(spec.size - 1);
        case Family::octopus: return octopus_graph(spec.arms);
        case Family::spider: return spider_graph(spec.arms);
    }
    throw std::logic_error("unknown family");
}

namespace {

int parse_int(std::string_view text, std::size_t& pos) {
    std::size_t start = pos;
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + (text[pos] - '0');
        if (value > 1000000) throw ParseError("integer too large", start);
        ++pos;
    }
    if (pos == start) throw ParseError("expected integer", pos);
    return static_cast<int>(value);
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::size_t pos = 0;
    if (text.substr(0, 2) != "n=") throw ParseError("expected 'n='", 0);
    pos = 2;
    int n = parse_int(text, pos);
    if (n > kMaxVertices)
        throw CapacityError("vertex count " + std::to_string(n) + " exceeds cap " +
                            std::to_string(kMaxVertices));
    if (pos >= text.size() || text[pos] != ';') throw ParseError("expected ';'", pos);
    ++pos;
    Graph g(n);
    bool first = true;
    while (pos < text.size()) {
        if (!first) {
            if (text[pos] != ',') throw ParseError("expected ','", pos);
            ++pos;
        }
        first = false;
        std::size_t token_start = pos;
        int u = parse_int(text, pos);
        if (pos >= text.size() || text[pos] != '-') throw ParseError("expected '-'", pos);
        ++pos;
        int v = parse_int(text, pos);
        if (u < 1 || u > n) throw ParseError("vertex " + std::to_string(u) + " out of range [1," + std::to_string(n) + "]", token_start);
        if (v < 1 || v > n) throw ParseError("vertex " + std::to_string(v) + " out of range [1," + std::to_string(n) + "]", token_start);
        if (u == v) throw ParseError("loop " + std::to_string(u) + "-" + std::to_string(v), token_start);
        g.add_edge(u - 1, v - 1);
    }
    return g;
}

Graph parse_graph6(std::string_view text) {
    if (text.empty()) throw ParseError("empty graph6 string", 0);
    for (std::size_t i = 0; i < text.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 character out of range 63..126", i);
    }
    int n = text[0] - 63;
    if (n == 63) throw ParseError("graph6 long form not supported", 0);
    if (n > kMaxVertices)
        throw CapacityError("graph6 vertex count " + std::to_string(n) + " exceeds cap");
    int bits = n * (n - 1) / 2;
    std::size_t expected = 1 + (bits + 5) / 6;
    if (text.size() != expected)
        throw ParseError("graph6 body length " + std::to_string(text.size() - 1) +
                             " does not match n=" + std::to_string(n),
                         text.size() > expected ? expected : text.size());
    Graph g(n);
    int bit = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u, ++bit) {
            int byte = text[1 + bit / 6] - 63;
            if ((byte >> (5 - bit % 6)) & 1) g.add_edge(u, v);
        }
    }
    return g;
}

std::string encode_graph6(const Graph& g) {
    std::string out(1, static_cast<char>(g.n + 63));
    int acc = 0, nbits = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

Graph induced(const Graph& g, Mask I) {
    if (I & ~g.vertex_mask()) throw std::invalid_argument("subset not within vertex set");
    std::vector<int> verts;
    for (Mask m = I; m; m &= m - 1) verts.push_back(lowest_bit(m));
    Graph h(static_cast<int>(verts.size()));
    for (std::size_t a = 0; a < verts.size(); ++a)
        for (std::size_t b = a + 1; b < verts.size(); ++b)
            if (g.has_edge(verts[a], verts[b])) h.add_edge(static_cast<int>(a), static_cast<int>(b));
    return h;
}

std::vector<Mask> components_within(const Graph& g, Mask I) {
    std::vector<Mask> out;
    Mask rest = I;
    while (rest) {
        Mask comp = rest & -rest;
        for (;;) {
            Mask grown = comp;
            for (Mask m = comp; m; m &= m - 1) grown |= g.adj[lowest_bit(m)] & I;
            if (grown == comp) break;
            comp = grown;
        }
        out.push_back(comp);
        rest &= ~comp;
    }
    return out;
}

std::vector<Mask> components(const Graph& g) { return components_within(g, g.vertex_mask()); }

int kappa_within(const Graph& g, Mask I) {
    return static_cast<int>(components_within(g, I).size());
}

int kappa(const Graph& g) { return kappa_within(g, g.vertex_mask()); }

bool connected_in(const Graph& g, Mask I) {
    if (I == 0) return false;
    Mask comp = I & -I;
    for (;;) {
        Mask grown = comp;
        for (Mask m = comp; m; m &= m - 1) grown |= g.adj[lowest_bit(m)] & I;
        if (grown == comp) break;
        comp = grown;
    }
    return comp == I;
}

bool is_connected(const Graph& g) { return g.n > 0 && connected_in(g, g.vertex_mask()); }

std::vector<Mask> connected_subsets(const Graph& g) {
    std::vector<Mask> out;
    for (Mask I = 1; I <= g.vertex_mask() && g.n > 0; ++I)
        if (connected_in(g, I)) out.push_back(I);
    std::stable_sort(out.begin(), out.end(),
                     [](Mask a, Mask b) { return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b; });
    return out;
}

bool is_even_within(const Graph& g, Mask I) {
    for (Mask comp : components_within(g, I))
        if (popcount(comp) % 2 != 0) return false;
    return true;
}

bool is_odd_within(const Graph& g, Mask I) {
    for (Mask comp : components_within(g, I))
        if (popcount(comp) % 2 == 0) return false;
    return true;
}

bool is_even(const Graph& g) { return is_even_within(g, g.vertex_mask()); }
bool is_odd(const Graph& g) { return is_odd_within(g, g.vertex_mask()); }

Graph line_graph(const Graph& g) {
    auto es = g.edges();
    if (static_cast<int>(es.size()) > kMaxVertices)
        throw CapacityError("line graph would have " + std::to_string(es.size()) + " vertices");
    Graph lg(static_cast<int>(es.size()));
    for (std::size_t a = 0; a < es.size(); ++a)
        for (std::size_t b = a + 1; b < es.size(); ++b) {
            auto [u1, v1] = es[a];
            auto [u2, v2] = es[b];
            if (u1 == u2 || u1 == v2 || v1 == u2 || v1 == v2)
                lg.add_edge(static_cast<int>(a), static_cast<int>(b));
        }
    return lg;
}

std::vector<std::uint64_t> spanning_subgraphs_no_isolated(const Graph& g) {
    auto es = g.edges();
    if (es.size() > 24) throw CapacityError("too many edges for spanning-subgraph sweep");
    std::vector<Mask> cover(es.size());
    for (std::size_t i = 0; i < es.size(); ++i)
        cover[i] = (Mask{1} << es[i].first) | (Mask{1} << es[i].second);
    std::vector<std::uint64_t> out;
    const Mask all = g.vertex_mask();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << es.size()); ++sub) {
        Mask covered = 0;
        for (std::uint64_t m = sub; m; m &= m - 1) covered |= cover[lowest_bit(m)];
        if (covered == all) out.push_back(sub);
    }
    return out;
}

bool is_forest(const Graph& g) {
    return g.edge_count() + kappa(g) == g.n;
}

}  // namespace gb
