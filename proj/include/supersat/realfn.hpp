#pragma once

// Real-argument binomial family f_s: the falling-factorial extension of
// C(x, s), zero below the hinge x = s-1 and strictly increasing above it,
// together with its derivatives, monotone inverse, and the composite
// f_{r+1} o f_{t-1}^{-1} used in the supersaturation bound.

#include <cmath>
#include <stdexcept>

namespace supersat {

struct GenBinomial {
    int s;

    explicit GenBinomial(int order) : s(order) {
        if (s < 1) throw std::invalid_argument("GenBinomial: order must be >= 1");
    }

    // f_s(x): 0 for x < s-1, else x(x-1)...(x-s+1)/s!.
    double eval(double x) const {
        if (x < 0) throw std::domain_error("GenBinomial::eval: x must be >= 0");
        if (x < s - 1) return 0.0;
        double prod = 1.0;
        for (int i = 0; i < s; ++i) {
            // multiply before dividing: exact at integer x while the prefix
            // binomials fit in 53 bits
            prod *= (x - i);
            prod /= (i + 1);
        }
        return prod;
    }

    // f_s' or f_s'' by the sum-of-products-omitting-factors formulas;
    // defined here for all x > s-1 where the product expressions hold.
    double eval_deriv(double x, int order) const {
        if (x <= s - 1) throw std::domain_error("GenBinomial::eval_deriv: need x > s-1");
        if (order == 1) {
            double sum = 0.0;
            for (int i = 0; i < s; ++i) {
                double prod = 1.0;
                for (int j = 0; j < s; ++j)
                    if (j != i) prod *= (x - j);
                sum += prod;
            }
            return sum / factorial(s);
        }
        if (order == 2) {
            double sum = 0.0;
            for (int i = 0; i < s; ++i)
                for (int j = i + 1; j < s; ++j) {
                    double prod = 1.0;
                    for (int k = 0; k < s; ++k)
                        if (k != i && k != j) prod *= (x - k);
                    sum += prod;
                }
            return 2.0 * sum / factorial(s);
        }
        throw std::invalid_argument("GenBinomial::eval_deriv: order must be 1 or 2");
    }

    // The unique x >= s-1 with f_s(x) = y. Bisection: f_s' vanishes at the
    // hinge for s >= 2, which rules out undamped Newton.
    double inverse(double y) const {
        if (y < 0) throw std::domain_error("GenBinomial::inverse: y must be >= 0");
        if (y == 0.0) return static_cast<double>(s - 1);
        double lo = static_cast<double>(s - 1);
        double hi = static_cast<double>(s);
        while (eval(hi) < y) {
            lo = hi;
            hi *= 2.0;
        }
        for (int iter = 0; iter < 200; ++iter) {
            double mid = 0.5 * (lo + hi);
            if (hi - lo <= 1e-14 * std::max(1.0, mid)) break;
            if (eval(mid) < y)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }

private:
    static double factorial(int s) {
        double f = 1.0;
        for (int i = 2; i <= s; ++i) f *= i;
        return f;
    }
};

// f_{r1+1}(f_{t1-1}^{-1}(x)), the convex map behind the supersaturation
// certificate. Requires 2 <= t1 <= r1.
inline double gen_binomial_composite(int r1, int t1, double x) {
    if (t1 < 2 || t1 > r1)
        throw std::invalid_argument("gen_binomial_composite: need 2 <= t1 <= r1");
    if (x < 0) throw std::domain_error("gen_binomial_composite: x must be >= 0");
    GenBinomial inner(t1 - 1);
    GenBinomial outer(r1 + 1);
    return outer.eval(inner.inverse(x));
}

}  // namespace supersat
