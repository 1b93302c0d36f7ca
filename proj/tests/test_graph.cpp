#include <random>
#include <sstream>

#include "doctest.h"
#include "supersat/constructions.hpp"
#include "supersat/graph.hpp"

using namespace supersat;

namespace {

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(std::min(v, (v + 1) % n), std::max(v, (v + 1) % n));
    return g;
}

// star S_k with center 0
Graph star(int k) {
    Graph g(k + 1);
    for (int v = 1; v <= k; ++v) g.add_edge(0, v);
    return g;
}

Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (unit(rng) < p) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("count_cliques") {
    CHECK(count_cliques(complete(5), 3) == 10);
    CHECK(count_cliques(Graph(6), 2) == 0);
    CHECK(count_cliques(turan_graph(6, 3), 3) == 8);
    CHECK(count_cliques(complete(5), 1) == 5);
    CHECK(count_cliques(complete(3), 5) == 0);
}

TEST_CASE("count_cliques_at") {
    Graph k5 = complete(5);
    for (int v = 0; v < 5; ++v) CHECK(count_cliques_at(k5, v, 3) == 6);
    CHECK(count_cliques_at(star(3), 0, 2) == 3);
    Graph t63 = turan_graph(6, 3);
    for (int v = 0; v < 6; ++v) CHECK(count_cliques_at(t63, v, 3) == 4);
    CHECK_THROWS_AS(count_cliques_at(k5, 5, 2), std::out_of_range);
}

TEST_CASE("count_stars") {
    CHECK(count_stars(cycle(4), 2) == 4);
    CHECK(count_stars(complete(4), 3) == 4);
    CHECK(count_stars(disjoint_cliques(2, 4), 2) == 24);
}

TEST_CASE("degree_sequence") {
    CHECK(degree_sequence(complete(3)) == std::vector<int>{2, 2, 2});
    CHECK(degree_sequence(star(3)) == std::vector<int>{3, 1, 1, 1});
    CHECK(degree_sequence(turan_graph(5, 2)) == std::vector<int>{3, 3, 2, 2, 2});
}

TEST_CASE("delete_vertex") {
    Graph k3 = delete_vertex(complete(4), 0);
    CHECK(k3.order() == 3);
    CHECK(count_cliques(k3, 3) == 1);

    Graph empty3 = delete_vertex(star(3), 0);
    CHECK(count_cliques(empty3, 2) == 0);

    Graph p4 = delete_vertex(cycle(5), 2);
    CHECK(p4.order() == 4);
    CHECK(count_cliques(p4, 2) == 3);
    CHECK(degree_sequence(p4) == std::vector<int>{2, 2, 1, 1});

    CHECK_THROWS(delete_vertex(Graph(1), 0));
    CHECK_THROWS(delete_vertex(complete(3), 3));
}

TEST_CASE("clone_vertex") {
    Graph p3 = clone_vertex(complete(2), 0);
    CHECK(p3.order() == 3);
    CHECK(!p3.has_edge(0, 2));  // clone nonadjacent to original
    CHECK(p3.has_edge(1, 2));

    Graph e2 = clone_vertex(Graph(1), 0);
    CHECK(e2.order() == 2);
    CHECK(count_cliques(e2, 2) == 0);

    Graph k4_minus = clone_vertex(complete(3), 0);
    CHECK(count_cliques(k4_minus, 2) == 5);
    CHECK(count_cliques(k4_minus, 4) == 0);
}

TEST_CASE("vertex_delta on K_4") {
    Graph k4 = complete(4);
    for (int v = 0; v < 4; ++v) {
        auto d = vertex_delta(k4, v, 2);
        CHECK(d.b_plus == 12);
        CHECK(d.b_minus == 9);
    }
    Graph g(3);
    g.add_edge(0, 1);
    auto iso = vertex_delta(g, 2, 2);
    CHECK(iso.b_plus == 0);
    CHECK(iso.b_minus == 0);
}

TEST_CASE("is_kr1_free") {
    CHECK(is_kr1_free(turan_graph(9, 3), 3));
    CHECK(!is_kr1_free(complete(4), 3));
    CHECK(is_kr1_free(cycle(5), 2));
}

TEST_CASE("find_blowup") {
    auto bi = find_blowup(turan_graph(6, 2), 2, 3);
    REQUIRE(bi.has_value());
    CHECK(bi->size() == 2);
    CHECK((*bi)[0].size() == 3);

    CHECK(!find_blowup(cycle(5), 2, 2).has_value());

    auto edge = find_blowup(complete(4), 2, 1);
    REQUIRE(edge.has_value());
    CHECK(complete(4).has_edge((*edge)[0][0], (*edge)[1][0]));
}

TEST_CASE("counting identities on random graphs") {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng() % 13);
        Graph g = random_graph(rng, n, (trial % 10) / 10.0);

        // handshake
        std::uint64_t degsum = 0;
        for (int d : degree_sequence(g)) degsum += static_cast<std::uint64_t>(d);
        CHECK(degsum == 2 * count_cliques(g, 2));

        // vertex-sum identity
        for (int t = 1; t <= n; ++t) {
            std::uint64_t sum = 0;
            for (int v = 0; v < n; ++v) sum += count_cliques_at(g, v, t);
            CHECK(sum == static_cast<std::uint64_t>(t) * count_cliques(g, t));
        }

        // clone/delete deltas against recounts
        for (int t = 1; t <= 4; ++t) {
            std::uint64_t st = count_stars(g, t);
            for (int x = 0; x < n; ++x) {
                auto d = vertex_delta(g, x, t);
                CHECK(d.b_plus >= d.b_minus);
                CHECK(count_stars(clone_vertex(g, x), t) == st + d.b_plus);
                if (n > 1) CHECK(count_stars(delete_vertex(g, x), t) == st - d.b_minus);
            }
        }

        // K_{r+1}-freeness preserved by clone and delete
        for (int r = 2; r <= 3; ++r) {
            if (!is_kr1_free(g, r)) continue;
            for (int x = 0; x < n; ++x) {
                CHECK(is_kr1_free(clone_vertex(g, x), r));
                if (n > 1) CHECK(is_kr1_free(delete_vertex(g, x), r));
            }
        }

        // S_{r+1}-freeness iff max degree <= r
        for (int r = 1; r <= 5; ++r) {
            int maxdeg = degree_sequence(g).front();
            CHECK((count_stars(g, r + 1) == 0) == (maxdeg <= r));
        }
    }
}

TEST_CASE("edge-list format") {
    Graph g = read_edge_list("# a comment\n4\n0 1\n1 3\n\n2 3\n");
    CHECK(g.order() == 4);
    CHECK(g.has_edge(0, 1));
    CHECK(g.has_edge(1, 3));
    CHECK(g.has_edge(2, 3));
    CHECK(count_cliques(g, 2) == 3);

    CHECK(write_edge_list(g) == "4\n0 1\n1 3\n2 3\n");

    // round trip on a random graph
    std::mt19937_64 rng(7);
    Graph h = random_graph(rng, 12, 0.4);
    Graph h2 = read_edge_list(write_edge_list(h));
    CHECK(write_edge_list(h2) == write_edge_list(h));

    auto line_of = [](const std::string& text) {
        try {
            read_edge_list(text);
        } catch (const ParseError& e) {
            return e.line;
        }
        return -1;
    };
    CHECK(line_of("5\n5 5\n") == 2);     // loop
    CHECK(line_of("5\n3 1\n") == 2);     // u >= v
    CHECK(line_of("5\n0 9\n") == 2);     // out of range
    CHECK(line_of("2\n0 1\n0 1\n") == 3);  // duplicate
    CHECK(line_of("x\n") == 1);
    CHECK(line_of("") == 0);
    CHECK(line_of("70\n") == 1);
}
