#pragma once

// Independent brute-force ground truth: exhaustive search over labeled
// graphs (with pruning for the larger sizes), exhaustive partition search
// for multipartite star counts, and canonical forms for isomorphism
// deduplication at n <= 9.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "supersat/constructions.hpp"
#include "supersat/graph.hpp"

namespace supersat::oracle {

inline constexpr int kMaxBruteVertices = 9;

namespace detail {

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Fixed edge order: (0,1), (0,2), (1,2), (0,3), ... -- pairs (u,v) with
// u < v sorted by (v, u).
inline std::vector<std::pair<int, int>> edge_order(int n) {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(pair_count(n)));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) edges.emplace_back(u, v);
    return edges;
}

inline bool has_complete_subset(const Graph& g, std::uint64_t cand, int k) {
    if (k == 0) return true;
    if (std::popcount(cand) < k) return false;
    if (k == 1) return true;
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        if (has_complete_subset(g, cand & g.neighbors(v), k - 1)) return true;
    }
    return false;
}

}  // namespace detail

// Minimum adjacency-matrix bitstring over all vertex permutations; equal
// keys iff isomorphic. Requires n <= 9 (36 pair bits). The bit for pair
// (i, j), i < j, sits at position m-1-(j(j-1)/2+i), so earlier pairs are
// more significant and the minimum can be found by branch-and-bound on
// prefixes instead of a full n! sweep.
inline std::uint64_t canonical_form(const Graph& g) {
    int n = g.order();
    if (n > kMaxBruteVertices) throw std::invalid_argument("canonical_form: n must be <= 9");
    const int m = detail::pair_count(n);
    if (m == 0) return 0;

    auto key_of = [&](const std::vector<int>& pos) {
        std::uint64_t key = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (g.has_edge(pos[static_cast<std::size_t>(i)],
                               pos[static_cast<std::size_t>(j)]))
                    key |= std::uint64_t{1} << (m - 1 - (j * (j - 1) / 2 + i));
        return key;
    };

    std::vector<int> pos(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(i)] = i;
    std::uint64_t best = key_of(pos);

    std::uint64_t used = 0;
    auto dfs = [&](auto&& self, int k, std::uint64_t key) -> void {
        if (k == n) {
            if (key < best) best = key;
            return;
        }
        int base = k * (k - 1) / 2;  // pair indices of edges into position k
        int prefix_bits = base + k;  // total pairs decided once k is placed
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            std::uint64_t next_key = key;
            for (int i = 0; i < k; ++i)
                if (g.has_edge(pos[static_cast<std::size_t>(i)], v))
                    next_key |= std::uint64_t{1} << (m - 1 - (base + i));
            if ((next_key >> (m - prefix_bits)) > (best >> (m - prefix_bits))) continue;
            pos[static_cast<std::size_t>(k)] = v;
            used |= std::uint64_t{1} << v;
            self(self, k + 1, next_key);
            used &= ~(std::uint64_t{1} << v);
        }
    };
    dfs(dfs, 0, 0);
    return best;
}

// Visits every labeled graph on n vertices (2^C(n,2) of them); fn gets a
// const Graph&. Meant for n <= 7.
template <class Fn>
void for_each_labeled_graph(int n, Fn&& fn) {
    if (n < 1 || n > 7) throw std::invalid_argument("for_each_labeled_graph: n must be in [1, 7]");
    auto edges = detail::edge_order(n);
    int m = static_cast<int>(edges.size());
    Graph g(n);
    std::uint64_t prev = 0;
    std::uint64_t total = std::uint64_t{1} << m;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::uint64_t changed = mask ^ prev;
        while (changed) {
            int e = std::countr_zero(changed);
            changed &= changed - 1;
            auto [u, v] = edges[static_cast<std::size_t>(e)];
            if ((mask >> e) & 1)
                g.add_edge(u, v);
            else
                g.remove_edge(u, v);
        }
        prev = mask;
        fn(static_cast<const Graph&>(g));
    }
}

// DFS over the edge slots with a pruning predicate: `edge_ok(g, u, v)` is
// consulted before an edge is placed, so forbidden structures are cut off as
// soon as they would appear. `leaf` sees every surviving graph.
template <class EdgeOk, class Leaf>
void for_each_graph_pruned(int n, EdgeOk&& edge_ok, Leaf&& leaf) {
    if (n < 1 || n > kMaxBruteVertices)
        throw std::invalid_argument("for_each_graph_pruned: n must be in [1, 9]");
    auto edges = detail::edge_order(n);
    Graph g(n);
    auto rec = [&](auto&& self, std::size_t e) -> void {
        if (e == edges.size()) {
            leaf(static_cast<const Graph&>(g));
            return;
        }
        auto [u, v] = edges[e];
        self(self, e + 1);
        if (edge_ok(static_cast<const Graph&>(g), u, v)) {
            g.add_edge(u, v);
            self(self, e + 1);
            g.remove_edge(u, v);
        }
    };
    rec(rec, 0);
}

enum class Pattern { clique, star };

struct Target {
    Pattern kind;
    int size;  // clique order t, or star leaf-count t (S_t = K_{1,t})
};

inline std::uint64_t count_pattern(const Graph& g, Target target) {
    return target.kind == Pattern::clique ? count_cliques(g, target.size)
                                          : count_stars(g, target.size);
}

struct ExtremalCertificate {
    int n;
    std::uint64_t value;
    std::vector<Graph> witnesses;  // maximizers, one per isomorphism class
};

// Exact maximum of the target count over all forbid-free labeled graphs on n
// vertices, with the maximizers retained up to isomorphism.
inline ExtremalCertificate brute_ex(int n, Target target, Target forbid) {
    if (n < 1 || n > kMaxBruteVertices) throw std::invalid_argument("brute_ex: n must be <= 9");
    if (target.size < 1 || forbid.size < 1) throw std::invalid_argument("brute_ex: sizes must be >= 1");

    auto edge_ok = [&](const Graph& g, int u, int v) {
        if (forbid.kind == Pattern::star)
            // S_m-free == max degree <= m-1
            return g.degree(u) < forbid.size - 1 && g.degree(v) < forbid.size - 1;
        // adding (u,v) creates a K_m iff N(u) & N(v) contains a K_{m-2}
        return !detail::has_complete_subset(g, g.neighbors(u) & g.neighbors(v), forbid.size - 2);
    };

    std::uint64_t best = 0;
    std::vector<std::vector<std::uint64_t>> raw_witnesses;
    auto leaf = [&](const Graph& g) {
        std::uint64_t val = count_pattern(g, target);
        if (val > best) {
            best = val;
            raw_witnesses.clear();
        }
        if (val == best) {
            std::vector<std::uint64_t> adj;
            adj.reserve(static_cast<std::size_t>(n));
            for (int v = 0; v < n; ++v) adj.push_back(g.neighbors(v));
            raw_witnesses.push_back(std::move(adj));
        }
    };
    for_each_graph_pruned(n, edge_ok, leaf);

    // dedupe maximizers by canonical form, sorted by key
    std::vector<std::pair<std::uint64_t, Graph>> canon;
    canon.reserve(raw_witnesses.size());
    for (const auto& adj : raw_witnesses) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if ((adj[static_cast<std::size_t>(u)] >> v) & 1) g.add_edge(u, v);
        canon.emplace_back(canonical_form(g), std::move(g));
    }
    std::sort(canon.begin(), canon.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    canon.erase(std::unique(canon.begin(), canon.end(),
                            [](const auto& a, const auto& b) { return a.first == b.first; }),
                canon.end());

    ExtremalCertificate cert{n, best, {}};
    for (auto& [_, g] : canon) cert.witnesses.push_back(std::move(g));
    return cert;
}

// Non-adjacency is an equivalence relation, i.e. the graph is complete
// multipartite (isolated vertices count as parts).
inline bool is_complete_multipartite(const Graph& g) {
    std::uint64_t all = g.vertex_mask();
    for (int u = 0; u < g.order(); ++u) {
        std::uint64_t non_nbrs_u = all & ~g.neighbors(u);
        for (int v = u + 1; v < g.order(); ++v)
            if (!g.has_edge(u, v) && non_nbrs_u != (all & ~g.neighbors(v))) return false;
    }
    return true;
}

struct MultipartiteOptimum {
    PartitionProfile profile;
    unsigned __int128 value;
};

// Maximizes the exact multipartite star count over all partitions of n into
// at most r parts. Exhaustive partition enumeration; partitions are visited
// largest-first in reverse lexicographic order and ties keep the first.
inline MultipartiteOptimum brute_multipartite_ex(int n, int r, int t) {
    if (n < 1 || r < 1 || t < 1) throw std::invalid_argument("brute_multipartite_ex: bad parameters");
    std::vector<int> parts;
    std::vector<int> best_parts{n};
    unsigned __int128 best = 0;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            PartitionProfile p(parts);
            unsigned __int128 val = multipartite_star_count(p, t);
            if (val > best) {
                best = val;
                best_parts = parts;
            }
            return;
        }
        if (static_cast<int>(parts.size()) == r) return;
        int slots = r - static_cast<int>(parts.size());
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            if (static_cast<long long>(part) * slots < remaining) break;  // cannot finish
            parts.push_back(part);
            self(self, remaining - part, part);
            parts.pop_back();
        }
    };
    rec(rec, n, n);
    return {PartitionProfile(best_parts), best};
}

// True iff every maximizer of (star t count, K_{r+1}-free) on n vertices is
// complete multipartite.
inline bool check_multipartite_theorem(int n, int r, int t) {
    if (n < t + 1) throw std::invalid_argument("check_multipartite_theorem: need n >= t+1");
    auto cert = brute_ex(n, {Pattern::star, t}, {Pattern::clique, r + 1});
    for (const Graph& w : cert.witnesses)
        if (!is_complete_multipartite(w)) return false;
    return true;
}

// Exact minimum of s_{r+1} over all graphs on n vertices with k_t >= kt_min.
inline std::uint64_t min_stars_given_cliques(int n, int r, int t, std::uint64_t kt_min) {
    if (n < 1 || n > kMaxBruteVertices)
        throw std::invalid_argument("min_stars_given_cliques: n must be <= 9");
    if (kt_min > binom(static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(t)))
        throw std::invalid_argument("min_stars_given_cliques: kt_min is infeasible");
    std::uint64_t best = ~std::uint64_t{0};
    auto leaf = [&](const Graph& g) {
        if (count_cliques(g, t) < kt_min) return;
        std::uint64_t s = count_stars(g, r + 1);
        if (s < best) best = s;
    };
    if (n <= 7) {
        for_each_labeled_graph(n, leaf);
    } else {
        for_each_graph_pruned(n, [](const Graph&, int, int) { return true; }, leaf);
    }
    return best;
}

// Erdos-Renyi-style graph with a density itself drawn from the generator, so
// seeded corpora cover sparse through dense instances.
inline Graph random_graph(std::mt19937_64& rng, int n) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double p = unit(rng);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace supersat::oracle
