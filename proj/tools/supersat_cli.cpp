// Command-line front end: exact subgraph counting, closed-form extremal
// bounds, the simplex optimization, crossover scans, and brute-force
// verification suites. Output is deterministic: fixed JSON key order,
// 17-significant-digit floats, LF endings.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "supersat/bounds.hpp"
#include "supersat/constructions.hpp"
#include "supersat/graph.hpp"
#include "supersat/graphon.hpp"
#include "supersat/oracle.hpp"
#include "supersat/realfn.hpp"

namespace {

constexpr int kExitParseError = 2;
constexpr int kExitParamError = 3;
constexpr int kExitOutputError = 4;

using supersat::graphon::format_double;

supersat::Graph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open " << path << "\n";
        std::exit(kExitParseError);
    }
    try {
        return supersat::read_edge_list(in);
    } catch (const supersat::ParseError& e) {
        std::cerr << "error: " << path << ": " << e.what() << "\n";
        std::exit(kExitParseError);
    }
}

// --- verify suites --------------------------------------------------------

struct VerifyState {
    int failures = 0;

    void report(bool ok, const std::string& check, const std::string& instance) {
        std::cout << (ok ? "PASS" : "FAIL") << " " << check << " " << instance << "\n";
        if (!ok) ++failures;
    }
};

void verify_moonmoser(VerifyState& vs, int max_n, std::mt19937_64& rng) {
    for (int n = 3; n <= std::min(max_n, 7); ++n) {
        bool ok = true;
        supersat::oracle::for_each_labeled_graph(n, [&](const supersat::Graph& g) {
            for (int s = 2; s < n; ++s) {
                if (supersat::count_cliques(g, s) == 0 || supersat::count_cliques(g, s - 1) == 0)
                    continue;
                if (supersat::moon_moser_residual(g, s) < -1e-12) ok = false;
            }
        });
        vs.report(ok, "moonmoser-exhaustive", "n=" + std::to_string(n));
    }
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        int n = 5 + static_cast<int>(rng() % 20);
        supersat::Graph g = supersat::oracle::random_graph(rng, n);
        for (int s = 2; s < n; ++s) {
            if (supersat::count_cliques(g, s) == 0 || supersat::count_cliques(g, s - 1) == 0)
                continue;
            if (supersat::moon_moser_residual(g, s) < -1e-12) ok = false;
        }
    }
    vs.report(ok, "moonmoser-random", "graphs=100");
}

void verify_convexity(VerifyState& vs) {
    for (int t = 1; t < 10; ++t)
        for (int s = t + 1; s <= 10; ++s) {
            supersat::GenBinomial ft(t);
            supersat::GenBinomial fs(s);
            double hi = ft.eval(100.0);
            bool ok = true;
            constexpr int kGrid = 1000;
            std::vector<double> vals(kGrid + 1);
            for (int i = 0; i <= kGrid; ++i)
                vals[static_cast<std::size_t>(i)] = fs.eval(ft.inverse(hi * i / kGrid));
            double hinge = static_cast<double>(supersat::binom(
                static_cast<std::uint64_t>(s - 1), static_cast<std::uint64_t>(t)));
            for (int i = 1; i < kGrid; ++i) {
                double second = vals[static_cast<std::size_t>(i + 1)] -
                                2 * vals[static_cast<std::size_t>(i)] +
                                vals[static_cast<std::size_t>(i - 1)];
                double mag = std::abs(vals[static_cast<std::size_t>(i)]);
                if (second < -1e-9 * (1.0 + mag)) ok = false;
                double x_lo = hi * (i - 1) / kGrid;
                if (x_lo > hinge && !(second > 0.0)) ok = false;
            }
            vs.report(ok, "convexity", "t=" + std::to_string(t) + " s=" + std::to_string(s));
        }
}

void verify_multipartite(VerifyState& vs, int max_n) {
    for (int n = 3; n <= std::min(max_n, 7); ++n)
        for (int r = 2; r <= 3; ++r)
            for (int t = 2; t <= std::min(3, n - 1); ++t) {
                bool ok = supersat::oracle::check_multipartite_theorem(n, r, t);
                vs.report(ok, "multipartite",
                          "n=" + std::to_string(n) + " r=" + std::to_string(r) +
                              " t=" + std::to_string(t));
            }
}

void verify_supersat(VerifyState& vs, std::mt19937_64& rng) {
    const std::vector<std::pair<int, int>> pairs = {{2, 2}, {3, 2}, {3, 3}, {4, 3}};
    for (auto [r, t] : pairs) {
        bool ok = true;
        for (int i = 0; i < 200; ++i) {
            int n = 5 + static_cast<int>(rng() % 20);
            supersat::Graph g = supersat::oracle::random_graph(rng, n);
            double lb = supersat::jensen_star_lower_bound(g, r, t);
            if (lb > static_cast<double>(supersat::count_stars(g, r + 1)) + 1e-9) ok = false;
        }
        vs.report(ok, "supersat-jensen", "r=" + std::to_string(r) + " t=" + std::to_string(t));
    }
    // brute-force minimum vs. the delta certificate at small n
    for (auto [r, t] : pairs) {
        bool ok = true;
        for (int n = 4; n <= 6; ++n) {
            for (double eps : {0.25, 1.0}) {
                auto bound = supersat::supersat_delta(r, t, eps);
                double level = bound.threshold * n;
                std::uint64_t kt_min = static_cast<std::uint64_t>(std::ceil(level - 1e-9));
                if (kt_min > supersat::binom(static_cast<std::uint64_t>(n),
                                             static_cast<std::uint64_t>(t)))
                    continue;
                std::uint64_t minimum =
                    supersat::oracle::min_stars_given_cliques(n, r, t, kt_min);
                if (static_cast<double>(minimum) < bound.delta * n - 1e-9) ok = false;
            }
        }
        vs.report(ok, "supersat-delta", "r=" + std::to_string(r) + " t=" + std::to_string(t));
    }
}

void verify_deltas(VerifyState& vs, std::mt19937_64& rng) {
    bool ok = true;
    for (int i = 0; i < 100; ++i) {
        int n = 3 + static_cast<int>(rng() % 12);
        supersat::Graph g = supersat::oracle::random_graph(rng, n);
        for (int t = 1; t <= 4; ++t) {
            std::uint64_t st = supersat::count_stars(g, t);
            for (int x = 0; x < n; ++x) {
                auto delta = supersat::vertex_delta(g, x, t);
                if (delta.b_plus < delta.b_minus) ok = false;
                if (n < supersat::kMaxVertices &&
                    supersat::count_stars(supersat::clone_vertex(g, x), t) != st + delta.b_plus)
                    ok = false;
                if (n > 1 &&
                    supersat::count_stars(supersat::delete_vertex(g, x), t) != st - delta.b_minus)
                    ok = false;
            }
        }
    }
    vs.report(ok, "clone-delete-calculus", "graphs=100");
}

void verify_optimizer(VerifyState& vs) {
    const std::vector<std::pair<int, int>> pairs = {{7, 12}, {7, 13}, {9, 5}, {10, 20}};
    for (auto [r, t] : pairs) {
        auto res = supersat::graphon::solve(supersat::graphon::OptParams(r, t));
        double winner = res.winner == supersat::graphon::Kind::turan ? res.turan.value
                                                                     : res.skew->value;
        double grid = supersat::graphon::skew_grid_value(r, t);
        bool ok = std::abs(winner - grid) <= 1e-8;
        vs.report(ok, "optimizer-oracle", "r=" + std::to_string(r) + " t=" + std::to_string(t));
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Turan numbers, supersaturation bounds, and the "
                 "star-count simplex optimization"};
    app.require_subcommand(1);

    // count
    auto* count = app.add_subcommand("count", "count cliques or stars in an edge-list graph");
    std::string count_kind, graph_file;
    int count_size = 0;
    count->add_option("kind", count_kind, "clique|star")->required();
    count->add_option("size", count_size, "clique order or star leaf-count")->required();
    count->add_option("--graph", graph_file, "edge-list file")->required();

    // bounds
    auto* bounds = app.add_subcommand("bounds", "closed-form extremal bounds and certificates");
    std::string bounds_subtype;
    int b_n = 0, b_r = 0, b_t = 0, b_s = 0;
    double b_eps = 0.0, b_kt = 0.0;
    bounds->add_option("subtype", bounds_subtype,
                       "cliques-no-star|stars-no-star|supersat-delta|theta|star-star-supersat")
        ->required();
    bounds->add_option("--n", b_n, "vertex count");
    bounds->add_option("--r", b_r, "degree/clique parameter r");
    bounds->add_option("--t", b_t, "target order t");
    bounds->add_option("--s", b_s, "clique order s (theta bound)");
    bounds->add_option("--eps", b_eps, "excess fraction");
    bounds->add_option("--kt", b_kt, "clique count hypothesis (theta bound)");

    // optimize
    auto* optimize = app.add_subcommand("optimize", "solve the simplex problem for (r, t)");
    int o_r = 0, o_t = 0;
    optimize->add_option("--r", o_r, "number of parts")->required();
    optimize->add_option("--t", o_t, "star leaf-count")->required();

    // scan
    auto* scan = app.add_subcommand("scan", "crossover scan over a t range, CSV output");
    int s_r = 0;
    std::string s_range, s_out;
    scan->add_option("--r", s_r, "number of parts")->required();
    scan->add_option("--range", s_range, "t range LO:HI")->required();
    scan->add_option("--out", s_out, "output CSV file (stdout if omitted)");

    // verify
    auto* verify = app.add_subcommand("verify", "brute-force verification suites");
    std::string v_suite = "all";
    int v_max_n = 7;
    std::uint64_t v_seed = 0;
    verify->add_option("--suite", v_suite,
                       "moonmoser|convexity|multipartite|supersat|deltas|optimizer-oracle|all");
    verify->add_option("--max-n", v_max_n, "exhaustive size cap");
    verify->add_option("--seed", v_seed, "random corpus seed (default 0)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParamError;
    }

    try {
        if (*count) {
            supersat::Graph g = load_graph(graph_file);
            std::uint64_t value;
            if (count_kind == "clique")
                value = supersat::count_cliques(g, count_size);
            else if (count_kind == "star")
                value = supersat::count_stars(g, count_size);
            else {
                std::cerr << "error: kind must be clique or star\n";
                return kExitParamError;
            }
            std::cout << value << "\n";
        } else if (*bounds) {
            std::string json;
            if (bounds_subtype == "cliques-no-star") {
                auto v = supersat::ex_cliques_no_star(b_n, b_r, b_t);
                json = "{\"bound\":\"cliques-no-star\",\"n\":" + std::to_string(b_n) +
                       ",\"r\":" + std::to_string(b_r) + ",\"t\":" + std::to_string(b_t) +
                       ",\"value\":\"" + v.to_string() + "\"}";
            } else if (bounds_subtype == "stars-no-star") {
                auto v = supersat::ex_stars_no_star(b_n, b_r, b_t);
                json = "{\"bound\":\"stars-no-star\",\"n\":" + std::to_string(b_n) +
                       ",\"r\":" + std::to_string(b_r) + ",\"t\":" + std::to_string(b_t) +
                       ",\"value\":" + std::to_string(v) + "}";
            } else if (bounds_subtype == "supersat-delta") {
                auto v = supersat::supersat_delta(b_r, b_t, b_eps);
                json = "{\"bound\":\"supersat-delta\",\"r\":" + std::to_string(b_r) +
                       ",\"t\":" + std::to_string(b_t) + ",\"eps\":" + format_double(b_eps) +
                       ",\"threshold\":" + format_double(v.threshold) +
                       ",\"delta\":" + format_double(v.delta) + "}";
            } else if (bounds_subtype == "theta") {
                double v = supersat::theta_clique_bound(b_n, b_kt, b_t, b_s);
                json = "{\"bound\":\"theta\",\"n\":" + std::to_string(b_n) +
                       ",\"kt\":" + format_double(b_kt) + ",\"t\":" + std::to_string(b_t) +
                       ",\"s\":" + std::to_string(b_s) + ",\"value\":" + format_double(v) + "}";
            } else if (bounds_subtype == "star-star-supersat") {
                double v = supersat::star_star_supersat(b_n, b_r, b_t, b_eps);
                json = "{\"bound\":\"star-star-supersat\",\"n\":" + std::to_string(b_n) +
                       ",\"r\":" + std::to_string(b_r) + ",\"t\":" + std::to_string(b_t) +
                       ",\"eps\":" + format_double(b_eps) + ",\"value\":" + format_double(v) + "}";
            } else {
                std::cerr << "error: unknown bounds subtype " << bounds_subtype << "\n";
                return kExitParamError;
            }
            std::cout << json << "\n";
        } else if (*optimize) {
            auto res = supersat::graphon::solve(supersat::graphon::OptParams(o_r, o_t));
            std::cout << supersat::graphon::solve_to_json(res) << "\n";
        } else if (*scan) {
            auto colon = s_range.find(':');
            if (colon == std::string::npos) {
                std::cerr << "error: --range must be LO:HI\n";
                return kExitParamError;
            }
            int t_lo = std::stoi(s_range.substr(0, colon));
            int t_hi = std::stoi(s_range.substr(colon + 1));
            std::string csv =
                supersat::graphon::scan_to_csv(supersat::graphon::crossover_scan(s_r, t_lo, t_hi));
            if (s_out.empty()) {
                std::cout << csv;
            } else {
                std::ofstream out(s_out, std::ios::binary);
                if (!out) {
                    std::cerr << "error: cannot write " << s_out << "\n";
                    return kExitOutputError;
                }
                out << csv;
                if (!out.good()) {
                    std::cerr << "error: write failed for " << s_out << "\n";
                    return kExitOutputError;
                }
            }
        } else if (*verify) {
            VerifyState vs;
            std::mt19937_64 rng(v_seed);
            bool known = false;
            if (v_suite == "moonmoser" || v_suite == "all") {
                verify_moonmoser(vs, v_max_n, rng);
                known = true;
            }
            if (v_suite == "convexity" || v_suite == "all") {
                verify_convexity(vs);
                known = true;
            }
            if (v_suite == "multipartite" || v_suite == "all") {
                verify_multipartite(vs, v_max_n);
                known = true;
            }
            if (v_suite == "supersat" || v_suite == "all") {
                verify_supersat(vs, rng);
                known = true;
            }
            if (v_suite == "deltas" || v_suite == "all") {
                verify_deltas(vs, rng);
                known = true;
            }
            if (v_suite == "optimizer-oracle" || v_suite == "all") {
                verify_optimizer(vs);
                known = true;
            }
            if (!known) {
                std::cerr << "error: unknown suite " << v_suite << "\n";
                return kExitParamError;
            }
            std::cout << (vs.failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(vs.failures))
                      << "\n";
            return vs.failures == 0 ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParamError;
    }
    return 0;
}
