#pragma once

// The asymptotic part-proportion problem for star counts in complete
// multipartite K_{r+1}-free graphs: maximize F(rho) = sum_i rho_i(1-rho_i)^t
// over the r-simplex. Classifies the interior critical points (uniform
// "Turan" point vs. skew points with two distinct entries), finds skew
// points by root-finding on L_{a,b}(phi) = 1, and decides which wins.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace supersat::graphon {

inline constexpr int kMaxT = 100000;

inline void check_rho(double rho) {
    if (!(rho >= 0.0 && rho <= 1.0)) throw std::domain_error("rho must be in [0, 1]");
}

// f(rho) = rho (1-rho)^t, the per-part contribution to the objective.
inline double f_rho(int t, double rho) {
    check_rho(rho);
    return rho * std::pow(1.0 - rho, t);
}

// g = f': (1-rho)^{t-1} (1 - (t+1) rho).
inline double g_rho(int t, double rho) {
    check_rho(rho);
    return std::pow(1.0 - rho, t - 1) * (1.0 - (t + 1) * rho);
}

// h = f'': t (1-rho)^{t-2} ((t+1) rho - 2).
inline double h_rho(int t, double rho) {
    check_rho(rho);
    return t * std::pow(1.0 - rho, t - 2) * ((t + 1) * rho - 2.0);
}

// k-th derivative: (-1)^k t(t-1)...(t-k+2) (1-rho)^{t-k} ((t+1) rho - k).
inline double f_deriv_k(int t, int k, double rho) {
    check_rho(rho);
    if (k < 1 || k > t) throw std::invalid_argument("f_deriv_k: need 1 <= k <= t");
    double falling = 1.0;
    for (int i = 0; i < k - 1; ++i) falling *= (t - i);
    double sign = (k % 2 == 0) ? 1.0 : -1.0;
    return sign * falling * std::pow(1.0 - rho, t - k) * ((t + 1) * rho - k);
}

struct OptParams {
    int r;
    int t;
    double phi_min;   // g(2/(t+1)), minimum of g on [0,1]
    double phi_star;  // g(3/(t+1)), convexity threshold for L

    OptParams(int r_, int t_) : r(r_), t(t_) {
        if (r < 2) throw std::invalid_argument("OptParams: need r >= 2");
        if (t < 2 || t > kMaxT) throw std::invalid_argument("OptParams: need 2 <= t <= 1e5");
        phi_min = g_rho(t, 2.0 / (t + 1));
        phi_star = g_rho(t, 3.0 / (t + 1));
    }
};

namespace detail {

// Bisection for g(rho) = phi on [lo, hi] where g is monotone; `increasing`
// gives the direction. Refined to machine precision in rho.
inline double solve_g(int t, double phi, double lo, double hi, bool increasing) {
    for (int iter = 0; iter < 200; ++iter) {
        double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        double val = g_rho(t, mid);
        if ((val < phi) == increasing)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

inline void check_phi(const OptParams& p, double phi) {
    if (!(phi > p.phi_min && phi <= 0.0))
        throw std::domain_error("phi must lie in (phi_min, 0]");
}

}  // namespace detail

// The solution of g(rho) = phi with 1/(t+1) <= rho < 2/(t+1); g is strictly
// decreasing there.
inline double alpha_of_phi(const OptParams& p, double phi) {
    detail::check_phi(p, phi);
    if (phi == 0.0) return 1.0 / (p.t + 1);
    return detail::solve_g(p.t, phi, 1.0 / (p.t + 1), 2.0 / (p.t + 1), false);
}

// The solution with 2/(t+1) < rho <= 1; g is strictly increasing there.
inline double beta_of_phi(const OptParams& p, double phi) {
    detail::check_phi(p, phi);
    if (phi == 0.0) return 1.0;
    return detail::solve_g(p.t, phi, 2.0 / (p.t + 1), 1.0, true);
}

inline void check_ab(const OptParams& p, int a, int b) {
    if (a < 1 || b < 1 || a + b != p.r)
        throw std::invalid_argument("need a, b >= 1 with a + b = r");
}

// L_{a,b}(phi) = a*alpha(phi) + b*beta(phi); skew critical points are the
// roots of L = 1.
inline double L_ab(const OptParams& p, int a, int b, double phi) {
    check_ab(p, a, b);
    return a * alpha_of_phi(p, phi) + b * beta_of_phi(p, phi);
}

// F_{a,b}(phi) = a*f(alpha) + b*f(beta).
inline double F_ab(const OptParams& p, int a, int b, double phi) {
    check_ab(p, a, b);
    return a * f_rho(p.t, alpha_of_phi(p, phi)) + b * f_rho(p.t, beta_of_phi(p, phi));
}

// dL/dphi = a/h(alpha) + b/h(beta); rejected at the coalescence point where
// h vanishes.
inline double dL_dphi(const OptParams& p, int a, int b, double phi) {
    check_ab(p, a, b);
    if (!(phi > p.phi_min && phi < 0.0))
        throw std::domain_error("dL_dphi: phi must lie strictly inside (phi_min, 0)");
    double ha = h_rho(p.t, alpha_of_phi(p, phi));
    double hb = h_rho(p.t, beta_of_phi(p, phi));
    if (ha == 0.0 || hb == 0.0) throw std::domain_error("dL_dphi: h vanishes");
    return a / ha + b / hb;
}

// All roots of L_{a,b}(phi) = 1 in (phi_min, 0), largest first. Sign-change
// scan on a 10^4-point uniform grid, then bisection. The scan includes the
// endpoint phi = 0 (never itself a root: L(0) = a/(t+1) + b > 1) because for
// large t the largest root sits exponentially close to 0.
inline std::vector<double> find_skew_roots(const OptParams& p, int a, int b) {
    check_ab(p, a, b);
    constexpr int kGrid = 10000;
    const double lo = p.phi_min + 1e-9;
    const double hi = 0.0;
    if (lo >= hi) return {};
    std::vector<double> roots;
    auto resid = [&](double phi) { return L_ab(p, a, b, phi) - 1.0; };
    double prev_phi = lo;
    double prev_val = resid(lo);
    for (int i = 1; i <= kGrid; ++i) {
        double phi = lo + (hi - lo) * i / kGrid;
        double val = resid(phi);
        if (prev_val == 0.0) {
            roots.push_back(prev_phi);
        } else if ((prev_val < 0.0) != (val < 0.0)) {
            double a0 = prev_phi, b0 = phi, fa = prev_val;
            for (int iter = 0; iter < 200; ++iter) {
                double mid = 0.5 * (a0 + b0);
                if (mid <= a0 || mid >= b0) break;
                double fm = resid(mid);
                if ((fm < 0.0) == (fa < 0.0)) {
                    a0 = mid;
                    fa = fm;
                } else {
                    b0 = mid;
                }
            }
            roots.push_back(0.5 * (a0 + b0));
        }
        prev_phi = phi;
        prev_val = val;
    }
    std::sort(roots.begin(), roots.end(), std::greater<double>());
    return roots;
}

enum class Kind { turan, skew };

inline const char* kind_name(Kind k) { return k == Kind::turan ? "turan" : "skew"; }

struct CriticalPoint {
    Kind kind;
    int a;
    int b;
    double alpha;
    double beta;
    double phi;
    double value;
    bool degenerate = false;  // root within 1e-9 of phi_min; value from grid search
};

inline CriticalPoint turan_point(const OptParams& p) {
    double rho = 1.0 / p.r;
    return {Kind::turan, p.r, 0, rho, rho, g_rho(p.t, rho), std::pow(1.0 - rho, p.t)};
}

// The parameter region where the two-candidate classification holds:
// r >= 9 with t >= 3, r = 8 with
// t >= 4, r = 7 with t >= 5, r = 6 with t >= 37.
inline bool is_legal(int r, int t) {
    if (r >= 9) return t >= 3;
    if (r == 8) return t >= 4;
    if (r == 7) return t >= 5;
    if (r == 6) return t >= 37;
    return false;
}

// (1 + (1 + (r-3)/(r-1))/(t-2))^{t-1} <= r-1; cross-validates is_legal.
inline bool monotone_inequality_holds(int r, int t) {
    if (t < 3) throw std::invalid_argument("monotone_inequality_holds: need t >= 3");
    double lhs = std::pow(1.0 + (1.0 + static_cast<double>(r - 3) / (r - 1)) / (t - 2), t - 1);
    return lhs <= static_cast<double>(r - 1);
}

// Grid maximization of (r-1) f(alpha) + f(1 - (r-1) alpha) over
// alpha in [0, 1/(r-1)]; fallback when the root coalesces with phi_min.
inline double skew_grid_value(int r, int t, int grid_n = 1000000) {
    double best = 0.0;
    double hi = 1.0 / (r - 1);
    for (int i = 0; i <= grid_n; ++i) {
        double alpha = hi * i / grid_n;
        double beta = 1.0 - (r - 1) * alpha;
        double val = (r - 1) * f_rho(t, alpha) + f_rho(t, beta);
        if (val > best) best = val;
    }
    return best;
}

struct SolveResult {
    int r;
    int t;
    bool legal;
    CriticalPoint turan;
    std::optional<CriticalPoint> skew;  // a = r-1, b = 1, largest root only
    Kind winner;
    bool narrow_margin = false;  // |F_skew - F_turan| <= 1e-10
};

inline SolveResult solve(const OptParams& p) {
    SolveResult res{p.r, p.t, is_legal(p.r, p.t), turan_point(p), std::nullopt, Kind::turan};
    auto roots = find_skew_roots(p, p.r - 1, 1);
    if (res.legal && roots.size() > 2)
        throw std::logic_error("solve: more than two roots of L_{r-1,1} = 1 on a legal pair");
    if (!roots.empty()) {
        double phi = roots.front();
        CriticalPoint sk{Kind::skew,
                         p.r - 1,
                         1,
                         alpha_of_phi(p, phi),
                         beta_of_phi(p, phi),
                         phi,
                         0.0};
        if (phi - p.phi_min < 1e-9) {
            sk.degenerate = true;
            sk.value = skew_grid_value(p.r, p.t);
        } else {
            sk.value = F_ab(p, p.r - 1, 1, phi);
        }
        res.skew = sk;
        if (sk.value > res.turan.value) res.winner = Kind::skew;
        if (std::abs(sk.value - res.turan.value) <= 1e-10) res.narrow_margin = true;
    }
    return res;
}

// Winner expanded to a density profile on the r-simplex.
inline std::vector<double> winner_profile(const SolveResult& res) {
    std::vector<double> rho;
    if (res.winner == Kind::turan) {
        rho.assign(static_cast<std::size_t>(res.r), 1.0 / res.r);
    } else {
        rho.assign(static_cast<std::size_t>(res.r - 1), res.skew->alpha);
        rho.push_back(res.skew->beta);
    }
    return rho;
}

struct ScanRow {
    int t;
    Kind winner;
    double turan_value;
    std::optional<CriticalPoint> skew;
    bool legal;
};

inline std::vector<ScanRow> crossover_scan(int r, int t_lo, int t_hi) {
    if (t_lo > t_hi) throw std::invalid_argument("crossover_scan: need t_lo <= t_hi");
    std::vector<ScanRow> rows;
    for (int t = t_lo; t <= t_hi; ++t) {
        SolveResult res = solve(OptParams(r, t));
        rows.push_back({t, res.winner, res.turan.value, res.skew, res.legal});
    }
    return rows;
}

// --- deterministic text output -------------------------------------------

// 17 significant digits, round-trip safe for doubles.
inline std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string scan_to_csv(const std::vector<ScanRow>& rows) {
    std::string out = "t,winner,turan_value,skew_alpha,skew_beta,skew_phi,skew_value,legal\n";
    for (const ScanRow& row : rows) {
        out += std::to_string(row.t);
        out += ',';
        out += kind_name(row.winner);
        out += ',';
        out += format_double(row.turan_value);
        out += ',';
        if (row.skew) {
            out += format_double(row.skew->alpha);
            out += ',';
            out += format_double(row.skew->beta);
            out += ',';
            out += format_double(row.skew->phi);
            out += ',';
            out += format_double(row.skew->value);
        } else {
            out += ",,,";
        }
        out += ',';
        out += row.legal ? "true" : "false";
        out += '\n';
    }
    return out;
}

inline std::string solve_to_json(const SolveResult& res) {
    std::string out = "{\"r\":" + std::to_string(res.r) + ",\"t\":" + std::to_string(res.t) +
                      ",\"legal\":" + (res.legal ? "true" : "false") +
                      ",\"turan\":{\"value\":" + format_double(res.turan.value) + "},\"skew\":";
    if (res.skew) {
        out += "{\"a\":" + std::to_string(res.skew->a) + ",\"b\":" + std::to_string(res.skew->b) +
               ",\"alpha\":" + format_double(res.skew->alpha) +
               ",\"beta\":" + format_double(res.skew->beta) +
               ",\"phi\":" + format_double(res.skew->phi) +
               ",\"value\":" + format_double(res.skew->value) + "}";
    } else {
        out += "null";
    }
    out += ",\"winner\":\"";
    out += kind_name(res.winner);
    out += "\"}";
    return out;
}

}  // namespace supersat::graphon
