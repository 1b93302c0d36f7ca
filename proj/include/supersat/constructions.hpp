#pragma once

// Generators for the extremal and sharpness constructions: Turan graphs,
// complete multipartite graphs, disjoint clique unions, and blowups.

#include <numeric>
#include <stdexcept>
#include <vector>

#include "supersat/graph.hpp"

namespace supersat {

// Part sizes of a complete multipartite graph, nonincreasing.
struct PartitionProfile {
    std::vector<int> parts;

    explicit PartitionProfile(std::vector<int> p) : parts(std::move(p)) {
        if (parts.empty()) throw std::invalid_argument("PartitionProfile: no parts");
        for (std::size_t i = 0; i < parts.size(); ++i) {
            if (parts[i] < 1) throw std::invalid_argument("PartitionProfile: parts must be >= 1");
            if (i > 0 && parts[i] > parts[i - 1])
                throw std::invalid_argument("PartitionProfile: parts must be nonincreasing");
        }
    }

    int total() const { return std::accumulate(parts.begin(), parts.end(), 0); }
};

// Parts occupy consecutive index ranges, largest part first.
inline Graph complete_multipartite(const PartitionProfile& p) {
    int n = p.total();
    if (n > kMaxVertices) throw std::overflow_error("complete_multipartite: capacity exceeded");
    Graph g(n);
    int offset_u = 0;
    for (std::size_t i = 0; i < p.parts.size(); ++i) {
        int offset_v = offset_u + p.parts[i];
        for (std::size_t j = i + 1; j < p.parts.size(); ++j) {
            for (int u = offset_u; u < offset_u + p.parts[i]; ++u)
                for (int v = offset_v; v < offset_v + p.parts[j]; ++v) g.add_edge(u, v);
            offset_v += p.parts[j];
        }
        offset_u += p.parts[i];
    }
    return g;
}

// Balanced profile: first (n mod r) parts have size ceil(n/r).
inline PartitionProfile turan_profile(int n, int r) {
    if (r < 1 || r > n) throw std::invalid_argument("turan_profile: need 1 <= r <= n");
    std::vector<int> parts;
    parts.reserve(static_cast<std::size_t>(r));
    int q = n / r, rem = n % r;
    for (int i = 0; i < r; ++i) parts.push_back(i < rem ? q + 1 : q);
    return PartitionProfile(std::move(parts));
}

// T(n, r): complete r-partite graph with parts as equal as possible.
inline Graph turan_graph(int n, int r) {
    if (n > kMaxVertices) throw std::invalid_argument("turan_graph: n must be <= 64");
    return complete_multipartite(turan_profile(n, r));
}

// k disjoint copies of K_s.
inline Graph disjoint_cliques(int k, int s) {
    if (k < 1 || s < 1) throw std::invalid_argument("disjoint_cliques: k and s must be >= 1");
    if (k * s > kMaxVertices) throw std::overflow_error("disjoint_cliques: capacity exceeded");
    Graph g(k * s);
    for (int c = 0; c < k; ++c)
        for (int u = c * s; u < (c + 1) * s; ++u)
            for (int v = u + 1; v < (c + 1) * s; ++v) g.add_edge(u, v);
    return g;
}

// G(b): each vertex becomes an independent b-set, each edge a complete join.
// Copy j of vertex v gets index v*b + j.
inline Graph blowup(const Graph& g, int b) {
    if (b < 1) throw std::invalid_argument("blowup: b must be >= 1");
    if (g.order() * b > kMaxVertices) throw std::overflow_error("blowup: capacity exceeded");
    Graph result(g.order() * b);
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v))
                for (int i = 0; i < b; ++i)
                    for (int j = 0; j < b; ++j) result.add_edge(u * b + i, v * b + j);
    return result;
}

// Exact s_t of the complete multipartite graph with these parts:
// sum_i parts[i] * C(n - parts[i], t). Wide so that part counts at a few
// hundred vertices stay exact.
inline unsigned __int128 multipartite_star_count(const PartitionProfile& p, int t) {
    if (t < 1) throw std::invalid_argument("multipartite_star_count: t must be >= 1");
    long long n = 0;
    for (int part : p.parts) n += part;
    unsigned __int128 total = 0;
    for (int part : p.parts)
        total += static_cast<unsigned __int128>(part) *
                 binom_wide(static_cast<std::uint64_t>(n - part), static_cast<std::uint64_t>(t));
    return total;
}

}  // namespace supersat
