#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "supersat/graphon.hpp"

using namespace supersat::graphon;

TEST_CASE("f, g, h and the general derivative") {
    CHECK(f_rho(6, 0.0) == 0.0);
    CHECK(f_rho(6, 1.0) == 0.0);
    CHECK(f_rho(6, 1.0 / 7) == doctest::Approx(std::pow(6.0 / 7, 6) / 7).epsilon(1e-12));

    CHECK(g_rho(6, 1.0 / 7) == doctest::Approx(0.0).scale(1.0));
    CHECK(h_rho(6, 2.0 / 7) == doctest::Approx(0.0).scale(1.0));
    CHECK(g_rho(6, 2.0 / 7) == doctest::Approx(-std::pow(5.0 / 7, 5)).epsilon(1e-12));

    // f_deriv_k specializes to g and h
    for (int t : {3, 6, 11})
        for (double rho = 0.0; rho <= 1.0; rho += 0.1) {
            CHECK(f_deriv_k(t, 1, rho) == doctest::Approx(g_rho(t, rho)).epsilon(1e-12));
            CHECK(f_deriv_k(t, 2, rho) == doctest::Approx(h_rho(t, rho)).epsilon(1e-12));
        }

    // finite differences of f
    for (int t : {4, 9}) {
        double h = 1e-6;
        for (double rho = 0.1; rho < 0.9; rho += 0.13) {
            double fd = (f_rho(t, rho + h) - f_rho(t, rho - h)) / (2 * h);
            CHECK(g_rho(t, rho) == doctest::Approx(fd).epsilon(1e-6));
        }
    }
    CHECK_THROWS(f_rho(6, 1.5));
    CHECK_THROWS(f_deriv_k(6, 7, 0.5));
}

TEST_CASE("alpha_of_phi / beta_of_phi") {
    OptParams p(7, 6);
    CHECK(alpha_of_phi(p, 0.0) == doctest::Approx(1.0 / 7).epsilon(1e-12));
    CHECK(beta_of_phi(p, 0.0) == 1.0);

    // coalescence toward 2/(t+1) just above phi_min
    double near = p.phi_min + 1e-10;
    CHECK(alpha_of_phi(p, near) == doctest::Approx(2.0 / 7).epsilon(1e-4));
    CHECK(beta_of_phi(p, near) == doctest::Approx(2.0 / 7).epsilon(1e-4));

    // residual check
    double a = alpha_of_phi(p, -0.1);
    double b = beta_of_phi(p, -0.1);
    CHECK(std::abs(g_rho(6, a) + 0.1) <= 1e-12);
    CHECK(std::abs(g_rho(6, b) + 0.1) <= 1e-12);
    CHECK(a >= 1.0 / 7);
    CHECK(a < 2.0 / 7);
    CHECK(b > 2.0 / 7);
    CHECK(b <= 1.0);

    CHECK_THROWS(alpha_of_phi(p, 0.5));
    CHECK_THROWS(alpha_of_phi(p, p.phi_min));
}

TEST_CASE("L_ab and F_ab") {
    OptParams p(7, 6);
    int a = 6, b = 1;
    CHECK(L_ab(p, a, b, 0.0) == doctest::Approx(a / 7.0 + b).epsilon(1e-12));
    CHECK(F_ab(p, a, b, 0.0) == doctest::Approx(a * f_rho(6, 1.0 / 7)).epsilon(1e-12));

    // dF/dphi = phi dL/dphi by symmetric differences
    for (double phi : {-0.02, -0.05, -0.1}) {
        double eps = 1e-7;
        double dF = F_ab(p, a, b, phi + eps) - F_ab(p, a, b, phi - eps);
        double dL = L_ab(p, a, b, phi + eps) - L_ab(p, a, b, phi - eps);
        CHECK(dF / dL == doctest::Approx(phi).epsilon(1e-5));
    }
    CHECK_THROWS(L_ab(p, 3, 3, -0.05));  // a + b != r
}

TEST_CASE("dL_dphi") {
    OptParams p(9, 5);
    for (double phi = p.phi_min * 0.9; phi < -1e-3; phi += -p.phi_min / 17) {
        double eps = 1e-6;
        double fd = (L_ab(p, 8, 1, phi + eps) - L_ab(p, 8, 1, phi - eps)) / (2 * eps);
        CHECK(dL_dphi(p, 8, 1, phi) ==
              doctest::Approx(fd).epsilon(1e-5).scale(std::max(1.0, std::abs(fd))));
    }
    CHECK_THROWS(dL_dphi(p, 8, 1, p.phi_min));
    CHECK_THROWS(dL_dphi(p, 8, 1, 0.0));
}

TEST_CASE("find_skew_roots") {
    // phi = 0 is never a root: L(0) = a/(t+1) + b > 1 for b >= 1
    OptParams p13(7, 13);
    CHECK(L_ab(p13, 6, 1, 0.0) > 1.0);

    auto roots = find_skew_roots(p13, 6, 1);
    CHECK(!roots.empty());
    CHECK(roots.size() <= 2);
    for (double phi : roots) {
        CHECK(std::abs(L_ab(p13, 6, 1, phi) - 1.0) <= 1e-9);
        CHECK(phi > p13.phi_min);
        CHECK(phi < 0.0);
    }
    // sorted descending
    for (std::size_t i = 1; i < roots.size(); ++i) CHECK(roots[i - 1] > roots[i]);

    OptParams p5(7, 5);
    auto roots5 = find_skew_roots(p5, 6, 1);
    if (!roots5.empty())
        CHECK(F_ab(p5, 6, 1, roots5.front()) < turan_point(p5).value);
}

TEST_CASE("turan_point") {
    CHECK(turan_point(OptParams(2, 2)).value == doctest::Approx(0.25));
    CHECK(turan_point(OptParams(5, 8)).value == doctest::Approx(std::pow(0.8, 8)));
    CHECK(turan_point(OptParams(7, 13)).value == doctest::Approx(std::pow(6.0 / 7, 13)));
}

TEST_CASE("is_legal") {
    CHECK(is_legal(6, 37));
    CHECK(!is_legal(6, 36));
    CHECK(is_legal(9, 3));
    CHECK(!is_legal(9, 2));
    CHECK(!is_legal(5, 1000));
    CHECK(is_legal(7, 5));
    CHECK(!is_legal(7, 4));
    CHECK(is_legal(8, 4));
    CHECK(!is_legal(8, 3));
    CHECK(is_legal(20, 3));
}

TEST_CASE("monotone_inequality_holds") {
    CHECK(monotone_inequality_holds(9, 3));
    CHECK(!monotone_inequality_holds(6, 36));
    CHECK(monotone_inequality_holds(6, 37));
    CHECK(!monotone_inequality_holds(7, 4));
    CHECK(monotone_inequality_holds(7, 5));
    CHECK_THROWS(monotone_inequality_holds(9, 2));
}

TEST_CASE("solve") {
    auto res13 = solve(OptParams(7, 13));
    CHECK(res13.winner == Kind::skew);
    REQUIRE(res13.skew.has_value());
    CHECK(res13.skew->value > res13.turan.value);

    // crossover for r=7 is at t=11: turan through t=10, skew from t=11 on
    // (verified against the exact partition oracle at large n)
    auto res10 = solve(OptParams(7, 10));
    CHECK(res10.winner == Kind::turan);
    auto res11 = solve(OptParams(7, 11));
    CHECK(res11.winner == Kind::skew);

    auto res93 = solve(OptParams(9, 3));
    double turan_val = std::pow(8.0 / 9, 3);
    if (res93.winner == Kind::turan)
        CHECK(res93.turan.value == doctest::Approx(turan_val));
    else
        CHECK(res93.skew->value > turan_val);

    // KKT: g(rho_i) constant over the winner profile, simplex residual tiny
    for (auto [r, t] : {std::pair{7, 13}, {7, 12}, {9, 3}, {10, 25}}) {
        auto res = solve(OptParams(r, t));
        auto rho = winner_profile(res);
        REQUIRE(static_cast<int>(rho.size()) == r);
        double sum = 0.0;
        for (double x : rho) sum += x;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
        double phi0 = g_rho(t, rho.front());
        for (double x : rho) CHECK(std::abs(g_rho(t, x) - phi0) <= 1e-10);
    }

    // winner dominates the Turan value, strictly when skew
    for (int t = 5; t <= 20; ++t) {
        auto res = solve(OptParams(7, t));
        double winner_val = res.winner == Kind::turan ? res.turan.value : res.skew->value;
        CHECK(winner_val >= res.turan.value);
        if (res.winner == Kind::skew) CHECK(winner_val > res.turan.value);
    }
}

TEST_CASE("grid-search oracle agreement") {
    for (auto [r, t] : {std::pair{7, 12}, {7, 13}, {9, 6}}) {
        auto res = solve(OptParams(r, t));
        double winner_val = res.winner == Kind::turan ? res.turan.value : res.skew->value;
        CHECK(winner_val == doctest::Approx(skew_grid_value(r, t)).epsilon(1e-8));
    }
}

TEST_CASE("crossover_scan and CSV") {
    auto rows = crossover_scan(7, 5, 13);
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 0; i < rows.size(); ++i)
        CHECK(rows[i].winner == (rows[i].t <= 10 ? Kind::turan : Kind::skew));

    // with nine parts the crossover sits at t=13
    auto rows9 = crossover_scan(9, 12, 13);
    CHECK(rows9[0].winner == Kind::turan);
    CHECK(rows9[1].winner == Kind::skew);

    auto single = crossover_scan(9, 4, 4);
    CHECK(single.size() == 1);

    std::string csv = scan_to_csv(single);
    CHECK(csv.rfind("t,winner,turan_value,skew_alpha,skew_beta,skew_phi,skew_value,legal\n", 0) ==
          0);
    CHECK(csv.find("\r") == std::string::npos);

    // legal flag flips at t=37 for r=6
    auto r6 = crossover_scan(6, 36, 37);
    CHECK(!r6[0].legal);
    CHECK(r6[1].legal);
}

TEST_CASE("boundary profiles are never maximizers") {
    // redistributing rho_1 = 0, rho_r -> rho_r/2 each strictly increases F
    std::mt19937_64 rng{42};
    auto unit = [&] { return (rng() >> 11) * 0x1.0p-53; };
    for (int trial = 0; trial < 2000; ++trial) {
        int r = 3 + static_cast<int>(rng() % 8);
        int t = 2 + static_cast<int>(rng() % 20);
        std::vector<double> rho(static_cast<std::size_t>(r));
        double sum = 0.0;
        for (int i = 1; i < r; ++i) sum += rho[static_cast<std::size_t>(i)] = unit() + 0.05;
        for (int i = 1; i < r; ++i) rho[static_cast<std::size_t>(i)] /= sum;
        rho[0] = 0.0;
        auto F = [&](const std::vector<double>& x) {
            double val = 0.0;
            for (double xi : x) val += f_rho(t, xi);
            return val;
        };
        double before = F(rho);
        auto moved = rho;
        moved[0] = moved[static_cast<std::size_t>(r - 1)] / 2;
        moved[static_cast<std::size_t>(r - 1)] /= 2;
        CHECK(F(moved) > before);
    }
}

TEST_CASE("integral identity for F differences") {
    // F(phi1) - F(phi2) equals the integral of phi dL/dphi
    OptParams p(9, 5);
    double phi2 = -0.05, phi1 = -0.01;
    const int steps = 20000;
    double integral = 0.0;
    for (int i = 0; i < steps; ++i) {
        double a = phi2 + (phi1 - phi2) * i / steps;
        double b = phi2 + (phi1 - phi2) * (i + 1) / steps;
        double mid = 0.5 * (a + b);
        integral += (b - a) * mid * dL_dphi(p, 8, 1, mid);
    }
    CHECK(F_ab(p, 8, 1, phi1) - F_ab(p, 8, 1, phi2) ==
          doctest::Approx(integral).epsilon(1e-6));
}

TEST_CASE("L convex past phi_star, dL nonpositive before it") {
    for (auto [r, t] : {std::pair{7, 13}, {9, 4}, {10, 8}}) {
        OptParams p(r, t);
        // second differences of L_{r-1,1} for phi > phi_star
        double lo = p.phi_star * 0.98;
        double hi = -1e-6;
        const int grid = 300;
        for (int i = 1; i < grid; ++i) {
            double step = (hi - lo) / grid;
            double phi = lo + step * i;
            double second =
                L_ab(p, r - 1, 1, phi + step) - 2 * L_ab(p, r - 1, 1, phi) + L_ab(p, r - 1, 1, phi - step);
            CHECK(second >= -1e-8);
        }
        // dL/dphi <= 0 for phi <= phi_star on legal pairs
        if (is_legal(r, t)) {
            for (int i = 1; i <= 40; ++i) {
                double phi = p.phi_min + (p.phi_star - p.phi_min) * i / 41.0;
                CHECK(dL_dphi(p, r - 1, 1, phi) <= 1e-10);
            }
        }
    }
}

TEST_CASE("skew improvement toward a = r-1") {
    // whenever roots exist for (a, b) and (a+1, b-1), the best F improves
    for (auto [r, t] : {std::pair{9, 8}, {10, 12}, {12, 20}}) {
        OptParams p(r, t);
        for (int a = 1; a < r - 1; ++a) {
            auto lo = find_skew_roots(p, a, r - a);
            auto hi = find_skew_roots(p, a + 1, r - a - 1);
            if (lo.empty() || hi.empty()) continue;
            CHECK(F_ab(p, a + 1, r - a - 1, hi.front()) >= F_ab(p, a, r - a, lo.front()) - 1e-12);
        }
    }
}

TEST_CASE("solve JSON schema") {
    auto res = solve(OptParams(7, 13));
    std::string json = solve_to_json(res);
    CHECK(json.find("\"r\":7") != std::string::npos);
    CHECK(json.find("\"t\":13") != std::string::npos);
    CHECK(json.find("\"legal\":true") != std::string::npos);
    CHECK(json.find("\"winner\":\"skew\"") != std::string::npos);
    CHECK(json.find("\"b\":1") != std::string::npos);

    auto none = solve(OptParams(7, 5));
    if (!none.skew)
        CHECK(solve_to_json(none).find("\"skew\":null") != std::string::npos);
}
