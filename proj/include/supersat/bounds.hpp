#pragma once

// Closed-form extremal numbers and supersaturation certificates for
// clique/star counts under star or clique forbidding.

#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

#include "supersat/graph.hpp"
#include "supersat/realfn.hpp"

namespace supersat {

// Exact nonnegative rational, reduced, for bounds that are not integers.
struct Rational {
    std::uint64_t num;
    std::uint64_t den;

    Rational(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        std::uint64_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }

    std::string to_string() const {
        return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
    }

    bool operator==(const Rational&) const = default;
};

// ex_{K_t}(n, S_{r+1}) upper bound (n/t) * C(r, t-1); attained when (r+1) | n.
inline Rational ex_cliques_no_star(int n, int r, int t) {
    if (r < 1 || r > n) throw std::invalid_argument("ex_cliques_no_star: need 1 <= r <= n");
    if (t < 2) throw std::invalid_argument("ex_cliques_no_star: need t >= 2");
    std::uint64_t c = binom(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(t - 1));
    unsigned __int128 num = static_cast<unsigned __int128>(n) * c;
    if (num > UINT64_MAX) throw std::overflow_error("ex_cliques_no_star: overflow");
    return Rational(static_cast<std::uint64_t>(num), static_cast<std::uint64_t>(t));
}

// ex_{S_t}(n, S_{r+1}): n*C(r,t) if nr is even, else from the near-regular
// graph with one vertex of degree r-1.
inline std::uint64_t ex_stars_no_star(int n, int r, int t) {
    if (n < r + 1) throw std::invalid_argument("ex_stars_no_star: need n >= r+1");
    if (t < 2) throw std::invalid_argument("ex_stars_no_star: need t > 1");
    std::uint64_t crt = binom(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(t));
    if (static_cast<long long>(n) * r % 2 == 0)
        return static_cast<std::uint64_t>(n) * crt;
    return static_cast<std::uint64_t>(n - 1) * crt +
           binom(static_cast<std::uint64_t>(r - 1), static_cast<std::uint64_t>(t));
}

// Guaranteed S_{r+1} count given an excess of eps*n*C(r,t) copies of S_t
// in a graph with maximum degree <= r: eps*n*(r-t+1)/t.
inline double star_star_supersat(int n, int r, int t, double eps) {
    if (t > r) throw std::invalid_argument("star_star_supersat: need t <= r");
    if (t < 1 || eps < 0) throw std::invalid_argument("star_star_supersat: bad parameters");
    return eps * n * (r - t + 1) / static_cast<double>(t);
}

// The (eps, r, t) -> delta certificate: any n-vertex graph with
// k_t >= (1+eps) * (n/(r+1)) * C(r+1, t) has s_{r+1} >= delta * n.
struct SupersatBound {
    int r;
    int t;
    double epsilon;
    double threshold;  // k_t hypothesis level per vertex: (1+eps) * C(r+1,t)/(r+1)
    double delta;
};

inline SupersatBound supersat_delta(int r, int t, double eps) {
    if (t < 2 || t > r) throw std::invalid_argument("supersat_delta: need 2 <= t <= r");
    if (eps <= 0) throw std::invalid_argument("supersat_delta: need eps > 0");
    double level = static_cast<double>(binom(static_cast<std::uint64_t>(r),
                                             static_cast<std::uint64_t>(t - 1))) *
                   (1.0 + eps);
    double delta = gen_binomial_composite(r, t, level);
    double threshold = (1.0 + eps) *
                       static_cast<double>(binom(static_cast<std::uint64_t>(r + 1),
                                                 static_cast<std::uint64_t>(t))) /
                       (r + 1);
    return {r, t, eps, threshold, delta};
}

// Convexity step of the supersaturation proof, valid for every graph:
// n * (f_{r+1} o f_{t-1}^{-1}) of the mean of C(d(v), t-1) is <= s_{r+1}(g).
inline double jensen_star_lower_bound(const Graph& g, int r, int t) {
    if (t < 2 || t > r) throw std::invalid_argument("jensen_star_lower_bound: need 2 <= t <= r");
    double sum = 0.0;
    for (int v = 0; v < g.order(); ++v)
        sum += static_cast<double>(binom(static_cast<std::uint64_t>(g.degree(v)),
                                         static_cast<std::uint64_t>(t - 1)));
    double mean = sum / g.order();
    return g.order() * gen_binomial_composite(r, t, mean);
}

// Bollobas-style bound: solve C(theta,t)*(n/theta)^t = kt for real theta,
// then return C(theta,s)*(n/theta)^s when s <= theta+1, else 0.
inline double theta_clique_bound(int n, double kt, int t, int s) {
    if (t < 2 || s < t) throw std::invalid_argument("theta_clique_bound: need 2 <= t <= s");
    if (kt < 0) throw std::invalid_argument("theta_clique_bound: kt must be >= 0");
    if (kt == 0) return 0.0;
    GenBinomial ft(t);
    auto psi = [&](double theta) { return ft.eval(theta) * std::pow(n / theta, t); };
    if (kt > psi(static_cast<double>(n)) * (1.0 + 1e-12))
        throw std::invalid_argument("theta_clique_bound: kt exceeds C(n,t)");
    double lo = std::max(static_cast<double>(t - 1), static_cast<double>(s - 1));
    double hi = static_cast<double>(n);
    if (psi(lo) > kt) {
        if (lo == t - 1) return 0.0;  // psi(t-1) = 0 < kt: unreachable, but keep total
        // theta solving the equation is below s-1: no guarantee
        return 0.0;
    }
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (hi - lo <= 1e-14 * std::max(1.0, mid)) break;
        if (psi(mid) < kt)
            lo = mid;
        else
            hi = mid;
    }
    double theta = 0.5 * (lo + hi);
    if (s > theta + 1 + 1e-12) return 0.0;
    GenBinomial fs(s);
    return fs.eval(theta) * std::pow(n / theta, s);
}

// Moon-Moser residual k_{s+1}/k_s - (s^2 * k_s/k_{s-1} - n)/(s^2 - 1),
// which is >= 0 for every graph where both denominators are nonzero.
inline double moon_moser_residual(const Graph& g, int s) {
    if (s < 2) throw std::invalid_argument("moon_moser_residual: need s >= 2");
    double ks = static_cast<double>(count_cliques(g, s));
    double ksm1 = static_cast<double>(count_cliques(g, s - 1));
    if (ks == 0 || ksm1 == 0)
        throw std::invalid_argument("moon_moser_residual: inapplicable, zero denominator");
    double ksp1 = static_cast<double>(count_cliques(g, s + 1));
    double n = static_cast<double>(g.order());
    return ksp1 / ks - (s * s * ks / ksm1 - n) / (s * s - 1.0);
}

}  // namespace supersat
