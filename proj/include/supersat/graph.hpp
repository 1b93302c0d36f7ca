#pragma once

// Small dense simple graphs stored as one adjacency bitset word per vertex
// (n <= 64), with exact clique/star counting and the clone/delete calculus
// for star counts.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace supersat {

inline constexpr int kMaxVertices = 64;

// Exact C(n,k) as a 64-bit integer; throws std::overflow_error if the value
// does not fit.
inline std::uint64_t binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (n - k + i) / i;  // exact: prefix is C(n-k+i, i)
        if (result > UINT64_MAX) throw std::overflow_error("binom: result exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(result);
}

// Exact C(n,k) as a 128-bit integer for large multipartite star counts.
inline unsigned __int128 binom_wide(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    constexpr unsigned __int128 kMax = ~static_cast<unsigned __int128>(0);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        unsigned __int128 factor = n - k + i;
        if (result > kMax / factor) throw std::overflow_error("binom_wide: result exceeds 128 bits");
        result = result * factor / i;
    }
    return result;
}

class Graph {
public:
    explicit Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
        if (n < 1 || n > kMaxVertices)
            throw std::invalid_argument("Graph: vertex count must be in [1, 64]");
    }

    int order() const { return n_; }

    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("add_edge: loops are not allowed");
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    void remove_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
    }

    // Bitmask of all vertices.
    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    int n_;
    std::vector<std::uint64_t> adj_;
};

namespace detail {

// Number of complete k-subsets of `cand`, assuming every vertex in `cand` is
// adjacent to all previously chosen vertices.
inline std::uint64_t count_complete_subsets(const Graph& g, std::uint64_t cand, int k) {
    if (k == 0) return 1;
    if (std::popcount(cand) < k) return 0;
    if (k == 1) return static_cast<std::uint64_t>(std::popcount(cand));
    std::uint64_t total = 0;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;  // only pick vertices above v later: no double counting
        total += count_complete_subsets(g, cand & g.neighbors(v), k - 1);
    }
    return total;
}

}  // namespace detail

// k_t(g): number of t-vertex subsets inducing a complete subgraph. k_1 = n.
inline std::uint64_t count_cliques(const Graph& g, int t) {
    if (t < 1 || t > kMaxVertices) throw std::invalid_argument("count_cliques: t must be in [1, 64]");
    if (t > g.order()) return 0;
    return detail::count_complete_subsets(g, g.vertex_mask(), t);
}

// k_t(v): number of t-cliques containing v, i.e. k_{t-1} of g[N(v)].
inline std::uint64_t count_cliques_at(const Graph& g, int v, int t) {
    if (t < 1 || t > kMaxVertices) throw std::invalid_argument("count_cliques_at: t must be in [1, 64]");
    std::uint64_t nbrs = g.neighbors(v);  // also validates v
    if (t == 1) return 1;
    return detail::count_complete_subsets(g, nbrs, t - 1);
}

// s_r(g) = sum_v C(d(v), r).
inline std::uint64_t count_stars(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("count_stars: r must be >= 1");
    unsigned __int128 total = 0;
    for (int v = 0; v < g.order(); ++v)
        total += binom(static_cast<std::uint64_t>(g.degree(v)), static_cast<std::uint64_t>(r));
    if (total > UINT64_MAX) throw std::overflow_error("count_stars: result exceeds 64 bits");
    return static_cast<std::uint64_t>(total);
}

// Nonincreasing degree sequence.
inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> degs;
    degs.reserve(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end(), std::greater<int>());
    return degs;
}

// G - x, remaining vertices shifted down to keep a contiguous index range.
inline Graph delete_vertex(const Graph& g, int x) {
    if (g.order() < 2) throw std::invalid_argument("delete_vertex: graph has a single vertex");
    g.neighbors(x);  // range check
    Graph result(g.order() - 1);
    auto shift = [x](int v) { return v > x ? v - 1 : v; };
    for (int u = 0; u < g.order(); ++u) {
        if (u == x) continue;
        for (int v = u + 1; v < g.order(); ++v) {
            if (v == x) continue;
            if (g.has_edge(u, v)) result.add_edge(shift(u), shift(v));
        }
    }
    return result;
}

// G + x': new vertex with N(x') = N(x) and x' nonadjacent to x.
inline Graph clone_vertex(const Graph& g, int x) {
    if (g.order() >= kMaxVertices) throw std::overflow_error("clone_vertex: vertex capacity exceeded");
    std::uint64_t nbrs = g.neighbors(x);
    Graph result(g.order() + 1);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) result.add_edge(u, v);
    int clone = g.order();
    while (nbrs) {
        int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        result.add_edge(clone, v);
    }
    return result;
}

// Exact change of s_t under cloning (b_plus) and deleting (b_minus) vertex x.
struct VertexDelta {
    std::uint64_t b_plus;
    std::uint64_t b_minus;
};

inline VertexDelta vertex_delta(const Graph& g, int x, int t) {
    if (t < 1) throw std::invalid_argument("vertex_delta: t must be >= 1");
    std::uint64_t nbrs = g.neighbors(x);
    std::uint64_t d = static_cast<std::uint64_t>(g.degree(x));
    unsigned __int128 plus = binom(d, static_cast<std::uint64_t>(t));
    unsigned __int128 minus = plus;
    while (nbrs) {
        int v = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        std::uint64_t dv = static_cast<std::uint64_t>(g.degree(v));
        plus += binom(dv, static_cast<std::uint64_t>(t - 1));
        minus += binom(dv - 1, static_cast<std::uint64_t>(t - 1));
    }
    if (plus > UINT64_MAX) throw std::overflow_error("vertex_delta: result exceeds 64 bits");
    return {static_cast<std::uint64_t>(plus), static_cast<std::uint64_t>(minus)};
}

inline bool is_kr1_free(const Graph& g, int r) {
    if (r < 1) throw std::invalid_argument("is_kr1_free: r must be >= 1");
    if (r + 1 > g.order()) return true;
    return detail::count_complete_subsets(g, g.vertex_mask(), r + 1) == 0;
}

namespace detail {

inline bool blowup_search(const Graph& g, int s, int b, std::uint64_t joined, int min_start,
                          std::vector<std::vector<int>>& classes) {
    if (static_cast<int>(classes.size()) == s) return true;
    // candidates for the next class: common neighbors of every placed class
    std::uint64_t cand = g.vertex_mask() & joined;
    // symmetry: classes ordered by minimum vertex, so everything here lies
    // above the previous class's minimum
    if (min_start > 0) cand &= ~((std::uint64_t{1} << min_start) - 1);
    std::vector<int> cls;
    auto pick = [&](auto&& self, std::uint64_t rest) -> bool {
        if (static_cast<int>(cls.size()) == b) {
            std::uint64_t next_joined = joined;
            for (int v : cls) next_joined &= g.neighbors(v);
            classes.push_back(cls);
            if (blowup_search(g, s, b, next_joined, cls.front() + 1, classes)) return true;
            classes.pop_back();
            return false;
        }
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            cls.push_back(v);
            if (self(self, rest)) return true;
            cls.pop_back();
        }
        return false;
    };
    return pick(pick, cand);
}

}  // namespace detail

// Searches for K_s(b) as a (not necessarily induced) subgraph: s disjoint
// b-sets, pairwise completely joined. Exhaustive; intended for s*b <= ~16.
inline std::optional<std::vector<std::vector<int>>> find_blowup(const Graph& g, int s, int b) {
    if (s < 1 || b < 1) throw std::invalid_argument("find_blowup: s and b must be >= 1");
    if (s * b > g.order()) return std::nullopt;
    std::vector<std::vector<int>> classes;
    if (detail::blowup_search(g, s, b, g.vertex_mask(), 0, classes)) return classes;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Edge-list text format: line 1 = decimal n; each following nonempty line is
// "u v" with 0 <= u < v < n; '#'-prefixed lines are comments; LF endings.

struct ParseError : std::runtime_error {
    ParseError(int line_, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
    int line;
};

inline Graph read_edge_list(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_content_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            ++lineno;
            std::size_t start = line.find_first_not_of(" \t\r");
            if (start == std::string::npos) continue;
            if (line[start] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_content_line(header)) throw ParseError(lineno, "missing vertex count");
    long n;
    {
        std::istringstream ss(header);
        std::string extra;
        if (!(ss >> n) || (ss >> extra))
            throw ParseError(lineno, "expected a single decimal vertex count");
        if (n < 1 || n > kMaxVertices)
            throw ParseError(lineno, "vertex count must be in [1, 64]");
    }

    Graph g(static_cast<int>(n));
    std::string edge;
    while (next_content_line(edge)) {
        std::istringstream ss(edge);
        long u, v;
        std::string extra;
        if (!(ss >> u >> v) || (ss >> extra))
            throw ParseError(lineno, "expected \"u v\"");
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError(lineno, "vertex out of range");
        if (u >= v) throw ParseError(lineno, "edges must satisfy u < v");
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError(lineno, "duplicate edge");
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

inline Graph read_edge_list(const std::string& text) {
    std::istringstream ss(text);
    return read_edge_list(ss);
}

inline std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.order() << '\n';
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) out << u << ' ' << v << '\n';
    return out.str();
}

}  // namespace supersat
