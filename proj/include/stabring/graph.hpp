#ifndef STABRING_GRAPH_HPP
#define STABRING_GRAPH_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace stabring {

// Hard cap coming from the bitmask adjacency rows. Everything in this
// project is desk scale (guards kick in far below), so 64 is generous.
inline constexpr int kMaxVertices = 64;

enum class Decision { True, False, Undecided };

class parse_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Raised when a computation would exceed its configured exhaustive-search
// bound. Callers surface this as an explicit "undecided at desk scale"
// outcome, never as a silent guess.
class desk_scale_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Finite simple graph, vertices 0..n-1. Immutable after construction: all
// operations below are pure functions of their inputs.
struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;                 // adjacency mask per vertex
    std::vector<std::pair<int, int>> edges;    // u < v, sorted, unique

    bool adjacent(int u, int v) const { return (adj[u] >> v) & 1; }
    uint64_t neighbors(int v) const { return adj[v]; }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    int m() const { return (int)edges.size(); }

    bool operator==(const Graph& o) const { return n == o.n && edges == o.edges; }

    // Stable identity for memoization (not isomorphism-canonical).
    std::string key() const {
        std::string s = std::to_string(n);
        for (auto [u, v] : edges) {
            s += ';';
            s += std::to_string(u);
            s += ',';
            s += std::to_string(v);
        }
        return s;
    }
};

inline Graph make_graph(int n, const std::vector<std::pair<int, int>>& edge_list) {
    if (n < 1) throw parse_error("graph must have at least one vertex");
    if (n > kMaxVertices) throw parse_error("vertex count exceeds supported maximum (64)");
    Graph g;
    g.n = n;
    g.adj.assign(n, 0);
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edge_list) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v) throw parse_error("loop rejected at vertex " + std::to_string(u));
        es.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(es.begin(), es.end());
    es.erase(std::unique(es.begin(), es.end()), es.end());
    for (auto [u, v] : es) {
        g.adj[u] |= 1ull << v;
        g.adj[v] |= 1ull << u;
    }
    g.edges = std::move(es);
    return g;
}

struct ParseResult {
    Graph graph;
    std::vector<std::string> warnings;
};

// Edge-list format: first line "n m", then m lines "u v", 0-based.
// '#' starts a comment anywhere on a line.
inline ParseResult parse_edge_list(const std::string& text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '#') {
            while (i < text.size() && text[i] != '\n') ++i;
            if (i == text.size()) break;
        }
        cleaned += text[i];
    }
    std::istringstream in(cleaned);
    long long n = -1, m = -1;
    if (!(in >> n >> m)) throw parse_error("expected header line \"n m\"");
    if (n < 1) throw parse_error("graph must have at least one vertex");
    if (n > kMaxVertices) throw parse_error("vertex count exceeds supported maximum (64)");
    if (m < 0) throw parse_error("negative edge count");
    std::vector<std::pair<int, int>> es;
    for (long long i = 0; i < m; ++i) {
        long long u, v;
        if (!(in >> u >> v)) throw parse_error("expected " + std::to_string(m) + " edges, got " +
                                               std::to_string(i));
        es.emplace_back((int)u, (int)v);
    }
    long long extra;
    if (in >> extra) throw parse_error("trailing tokens after edge list");

    ParseResult r;
    std::vector<std::pair<int, int>> norm;
    for (auto [u, v] : es) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v) throw parse_error("loop rejected at vertex " + std::to_string(u));
        norm.emplace_back(std::min((int)u, (int)v), std::max((int)u, (int)v));
    }
    std::sort(norm.begin(), norm.end());
    for (size_t i = 1; i < norm.size(); ++i)
        if (norm[i] == norm[i - 1])
            r.warnings.push_back("duplicate edge (" + std::to_string(norm[i].first) + "," +
                                 std::to_string(norm[i].second) + ") deduplicated");
    r.graph = make_graph((int)n, norm);
    return r;
}

// JSON format: {"n": int, "edges": [[u,v],...]}.
inline ParseResult parse_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
        throw parse_error("graph JSON must be an object with \"n\" and \"edges\"");
    if (!j["n"].is_number_integer()) throw parse_error("\"n\" must be an integer");
    long long n = j["n"].get<long long>();
    if (n < 1) throw parse_error("graph must have at least one vertex");
    if (n > kMaxVertices) throw parse_error("vertex count exceeds supported maximum (64)");
    if (!j["edges"].is_array()) throw parse_error("\"edges\" must be an array");
    std::vector<std::pair<int, int>> es;
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
            !e[1].is_number_integer())
            throw parse_error("each edge must be a pair of integers");
        es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    ParseResult r;
    std::vector<std::pair<int, int>> norm;
    for (auto [u, v] : es) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw parse_error("edge endpoint out of range: (" + std::to_string(u) + "," +
                              std::to_string(v) + ")");
        if (u == v) throw parse_error("loop rejected at vertex " + std::to_string(u));
        norm.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(norm.begin(), norm.end());
    for (size_t i = 1; i < norm.size(); ++i)
        if (norm[i] == norm[i - 1])
            r.warnings.push_back("duplicate edge (" + std::to_string(norm[i].first) + "," +
                                 std::to_string(norm[i].second) + ") deduplicated");
    r.graph = make_graph((int)n, norm);
    return r;
}

// Sniffs the format: JSON if the first non-space character is '{'.
inline ParseResult parse_graph(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return parse_graph_json(text);
        break;
    }
    return parse_edge_list(text);
}

inline std::string to_edge_list(const Graph& g) {
    std::string s = std::to_string(g.n) + " " + std::to_string(g.m()) + "\n";
    for (auto [u, v] : g.edges) s += std::to_string(u) + " " + std::to_string(v) + "\n";
    return s;
}

inline std::string to_json_text(const Graph& g) {
    nlohmann::ordered_json j;
    j["n"] = g.n;
    j["edges"] = nlohmann::ordered_json::array();
    for (auto [u, v] : g.edges) j["edges"].push_back({u, v});
    return j.dump();
}

// ---------------------------------------------------------------------------
// Constructors used all over the test corpus.

inline Graph complete_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
    return make_graph(k, es);
}

inline Graph cycle_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < k; ++u) es.emplace_back(u, (u + 1) % k);
    return make_graph(k, es);
}

inline Graph path_graph(int k) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u + 1 < k; ++u) es.emplace_back(u, u + 1);
    return make_graph(k, es);
}

inline Graph disjoint_union(const Graph& a, const Graph& b) {
    std::vector<std::pair<int, int>> es = a.edges;
    for (auto [u, v] : b.edges) es.emplace_back(u + a.n, v + a.n);
    return make_graph(a.n + b.n, es);
}

inline Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> es;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (!g.adjacent(u, v)) es.emplace_back(u, v);
    return make_graph(g.n, es);
}

// Induced subgraph on `verts` (kept in the given order, relabeled 0..k-1).
inline Graph induced_subgraph(const Graph& g, const std::vector<int>& verts) {
    std::vector<int> pos(g.n, -1);
    for (size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = (int)i;
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges)
        if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
    return make_graph((int)verts.size(), es);
}

// ---------------------------------------------------------------------------
// Clique machinery.

struct CliqueFamily {
    enum class Kind { MaximalCliques, KMaxElements };
    Kind kind;
    std::vector<std::vector<int>> members;  // each sorted; family sorted lex

    int max_size() const {
        size_t s = 0;
        for (auto& c : members) s = std::max(s, c.size());
        return (int)s;
    }
    int min_size() const {
        size_t s = members.empty() ? 0 : members[0].size();
        for (auto& c : members) s = std::min(s, c.size());
        return (int)s;
    }
};

namespace detail {

inline uint64_t mask_up_to(int v) {  // bits 0..v set; v may be 63
    return v >= 63 ? ~0ull : (1ull << (v + 1)) - 1;
}

inline void bron_kerbosch(const Graph& g, uint64_t r, uint64_t p, uint64_t x,
                          std::vector<uint64_t>& out) {
    if (p == 0 && x == 0) {
        out.push_back(r);
        return;
    }
    uint64_t px = p | x;
    int pivot = __builtin_ctzll(px);
    int best = -1;
    for (uint64_t t = px; t; t &= t - 1) {
        int u = __builtin_ctzll(t);
        int cnt = __builtin_popcountll(p & g.adj[u]);
        if (cnt > best) { best = cnt; pivot = u; }
    }
    uint64_t cand = p & ~g.adj[pivot];
    for (uint64_t t = cand; t; t &= t - 1) {
        int v = __builtin_ctzll(t);
        uint64_t vb = 1ull << v;
        bron_kerbosch(g, r | vb, p & g.adj[v], x & g.adj[v], out);
        p &= ~vb;
        x |= vb;
    }
}

inline std::vector<int> mask_to_verts(uint64_t m) {
    std::vector<int> v;
    for (uint64_t t = m; t; t &= t - 1) v.push_back(__builtin_ctzll(t));
    return v;
}

}  // namespace detail

// All inclusion-maximal cliques, each sorted, family sorted lexicographically.
// Isolated vertices yield singleton maximal cliques.
inline CliqueFamily maximal_cliques(const Graph& g) {
    std::vector<uint64_t> masks;
    uint64_t all = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
    detail::bron_kerbosch(g, 0, all, 0, masks);
    CliqueFamily f;
    f.kind = CliqueFamily::Kind::MaximalCliques;
    for (uint64_t m : masks) f.members.push_back(detail::mask_to_verts(m));
    std::sort(f.members.begin(), f.members.end());
    return f;
}

// Inclusion-maximal cliques of size <= 3: every triangle, every edge lying in
// no triangle, every isolated vertex.
inline CliqueFamily k_maximal_elements(const Graph& g) {
    CliqueFamily f;
    f.kind = CliqueFamily::Kind::KMaxElements;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (!g.adjacent(a, b)) continue;
            uint64_t common = g.adj[a] & g.adj[b] & ~detail::mask_up_to(b);
            for (uint64_t t = common; t; t &= t - 1)
                f.members.push_back({a, b, __builtin_ctzll(t)});
        }
    for (auto [a, b] : g.edges)
        if ((g.adj[a] & g.adj[b]) == 0) f.members.push_back({a, b});
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] == 0) f.members.push_back({v});
    std::sort(f.members.begin(), f.members.end());
    return f;
}

inline int clique_number(const Graph& g) { return maximal_cliques(g).max_size(); }

// All maximal cliques have equal cardinality. Edgeless graphs are pure.
inline bool is_pure(const Graph& g) {
    auto f = maximal_cliques(g);
    return f.max_size() == f.min_size();
}

// All maximal size-<=3 cliques have equal cardinality.
inline bool is_t_pure(const Graph& g) {
    auto f = k_maximal_elements(g);
    return f.max_size() == f.min_size();
}

// ---------------------------------------------------------------------------
// Chordless odd cycles ("odd holes") of length >= 5.

struct OddHoleSet {
    // Each hole as its canonical vertex sequence: starts at its smallest
    // vertex, direction chosen so the second vertex is smaller than the last.
    std::vector<std::vector<int>> holes;
};

namespace detail {

inline void hole_dfs(const Graph& g, int s, std::vector<int>& path, uint64_t on_path,
                     int max_len, std::vector<std::vector<int>>& out) {
    int last = path.back();
    uint64_t below_s = mask_up_to(s);
    for (uint64_t t = g.adj[last] & ~below_s & ~on_path; t; t &= t - 1) {
        int w = __builtin_ctzll(t);
        // w must see only the path head among earlier path vertices
        bool chord = false;
        for (size_t i = 0; i + 1 < path.size(); ++i)
            if (g.adjacent(w, path[i])) { chord = true; break; }
        if (chord) continue;
        if (g.adjacent(w, s)) {
            // closing vertex: cycle s,path...,w
            size_t len = path.size() + 2;
            if (len >= 5 && len % 2 == 1 && path[0] < w) {
                std::vector<int> hole;
                hole.push_back(s);
                hole.insert(hole.end(), path.begin(), path.end());
                hole.push_back(w);
                out.push_back(hole);
            }
            continue;  // cannot extend through w: the edge to s would be a chord
        }
        if ((int)path.size() + 2 >= max_len) continue;
        path.push_back(w);
        hole_dfs(g, s, path, on_path | (1ull << w), max_len, out);
        path.pop_back();
    }
}

}  // namespace detail

// All chordless odd cycles of length 5 <= len <= max_len (0 = unbounded),
// each reported once in canonical orientation, sorted by (length, sequence).
inline OddHoleSet odd_holes(const Graph& g, int max_len = 0) {
    int cap = (max_len == 0 || max_len > g.n) ? g.n : max_len;
    OddHoleSet hs;
    if (cap < 5) return hs;
    for (int s = 0; s < g.n; ++s) {
        for (uint64_t t = g.adj[s] & ~detail::mask_up_to(s); t; t &= t - 1) {
            int first = __builtin_ctzll(t);
            std::vector<int> path{first};
            detail::hole_dfs(g, s, path, (1ull << s) | (1ull << first), cap, hs.holes);
        }
    }
    std::sort(hs.holes.begin(), hs.holes.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return hs;
}

inline bool has_odd_hole(const Graph& g, int min_len) {
    auto hs = odd_holes(g);
    for (auto& h : hs.holes)
        if ((int)h.size() >= min_len) return true;
    return false;
}

// ---------------------------------------------------------------------------
// Connected components and the clique-number spectrum.

struct ComponentSpectrum {
    std::vector<std::vector<int>> components;  // sorted vertex lists
    std::vector<int> clique_numbers;           // per component
    std::vector<int> kmax_sizes;               // max K-element size per component

    std::vector<int> I;                        // distinct clique numbers, ascending
    std::map<int, std::vector<int>> J;         // d -> component indices
    std::map<int, std::vector<int>> V_class;   // d -> union of vertex sets

    std::vector<int> I_prime;                  // same, by K-element size
    std::map<int, std::vector<int>> J_prime;
    std::map<int, std::vector<int>> V_class_prime;

    int u() const { return (int)I.size(); }
};

inline ComponentSpectrum components(const Graph& g) {
    ComponentSpectrum cs;
    std::vector<int> comp(g.n, -1);
    int nc = 0;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> stack{s};
        comp[s] = nc;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (uint64_t t = g.adj[v]; t; t &= t - 1) {
                int w = __builtin_ctzll(t);
                if (comp[w] < 0) { comp[w] = nc; stack.push_back(w); }
            }
        }
        ++nc;
    }
    cs.components.assign(nc, {});
    for (int v = 0; v < g.n; ++v) cs.components[comp[v]].push_back(v);
    for (int c = 0; c < nc; ++c) {
        Graph sub = induced_subgraph(g, cs.components[c]);
        cs.clique_numbers.push_back(clique_number(sub));
        cs.kmax_sizes.push_back(k_maximal_elements(sub).max_size());
    }
    for (int c = 0; c < nc; ++c) {
        int d = cs.clique_numbers[c];
        cs.J[d].push_back(c);
        auto& vc = cs.V_class[d];
        vc.insert(vc.end(), cs.components[c].begin(), cs.components[c].end());
        int dp = cs.kmax_sizes[c];
        cs.J_prime[dp].push_back(c);
        auto& vp = cs.V_class_prime[dp];
        vp.insert(vp.end(), cs.components[c].begin(), cs.components[c].end());
    }
    for (auto& [d, _] : cs.J) cs.I.push_back(d);
    for (auto& [d, _] : cs.J_prime) cs.I_prime.push_back(d);
    for (auto& [d, v] : cs.V_class) std::sort(v.begin(), v.end());
    for (auto& [d, v] : cs.V_class_prime) std::sort(v.begin(), v.end());
    return cs;
}

// Union of the components whose clique number (primed: max K-element size)
// equals d, as an induced subgraph.
inline Graph class_subgraph(const Graph& g, const ComponentSpectrum& cs, int d,
                            bool primed = false) {
    const auto& m = primed ? cs.V_class_prime : cs.V_class;
    auto it = m.find(d);
    if (it == m.end()) throw std::invalid_argument("no component class of size " + std::to_string(d));
    return induced_subgraph(g, it->second);
}

// ---------------------------------------------------------------------------
// Perfectness at desk scale: no chordless odd cycle of length >= 5 in the
// graph or its complement. Exact but exhaustive; guarded by a size bound.
inline Decision is_perfect(const Graph& g, int guard = 16) {
    if (g.n > guard) return Decision::Undecided;
    if (has_odd_hole(g, 5)) return Decision::False;
    if (has_odd_hole(complement(g), 5)) return Decision::False;
    return Decision::True;
}

inline bool is_bipartite(const Graph& g) {
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (uint64_t t = g.adj[v]; t; t &= t - 1) {
                int w = __builtin_ctzll(t);
                if (color[w] < 0) { color[w] = 1 - color[v]; stack.push_back(w); }
                else if (color[w] == color[v]) return false;
            }
        }
    }
    return true;
}

// All stable sets as bitmasks, ascending. The empty set counts.
inline std::vector<uint64_t> stable_sets(const Graph& g) {
    std::vector<uint64_t> out{0};
    for (int v = 0; v < g.n; ++v) {
        size_t sz = out.size();
        for (size_t i = 0; i < sz; ++i) {
            uint64_t s = out[i];
            if ((g.adj[v] & s) == 0) out.push_back(s | (1ull << v));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Sum of xi over B; the empty sum is 0.
template <class T>
inline T plus_sum(const std::vector<T>& xi, const std::vector<int>& B) {
    T acc{};
    for (int b : B) acc = acc + xi[(size_t)b];
    return acc;
}

}  // namespace stabring

#endif
