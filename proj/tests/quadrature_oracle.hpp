#pragma once

// Test-only numerical oracles, independent of the library's rounding path.
//
// expected_isolated_count_k3: exact E|S'(beta)| for hyperplane rounding on
// K3 with an exact 120-degree vector coloring. The three projections
// <v_i,r> are jointly Gaussian with pairwise correlation -1/2 and sum zero,
// so |S'| is 1 iff exactly one projection clears beta, and
//   E|S'| = 3 * P[g1 >= beta, g2 < beta, g3 < beta],  g3 = -g1 - g2.
// The probability is an integral of the bivariate normal (rho = -1/2) over
// {x >= beta, -beta - x < y < beta}; the inner integral is the conditional
// CDF (y | x ~ N(-x/2, 3/4)), the outer is adaptive Simpson.

#include <cmath>
#include <functional>

namespace testoracle {

inline double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * M_PI); }
inline double Phi(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double tol, int depth = 0) {
    double c = 0.5 * (a + b);
    double fa = f(a), fb = f(b), fc = f(c);
    double whole = (b - a) / 6.0 * (fa + 4 * fc + fb);
    double l_mid = 0.5 * (a + c), r_mid = 0.5 * (c + b);
    double fl = f(l_mid), fr = f(r_mid);
    double left = (c - a) / 6.0 * (fa + 4 * fl + fc);
    double right = (b - c) / 6.0 * (fc + 4 * fr + fb);
    if (depth > 40 || std::abs(left + right - whole) < 15 * tol) return left + right;
    return adaptive_simpson(f, a, c, tol / 2, depth + 1) +
           adaptive_simpson(f, c, b, tol / 2, depth + 1);
}

inline double expected_isolated_count_k3(double beta) {
    const double sigma = std::sqrt(0.75);  // sd of y given x
    auto integrand = [&](double x) {
        // y | x ~ N(-x/2, 3/4); region -beta - x < y < beta
        double inner = Phi((beta + 0.5 * x) / sigma) - Phi((-beta - 0.5 * x) / sigma);
        return phi(x) * inner;
    };
    double p_single = adaptive_simpson(integrand, beta, beta + 12.0, 1e-12);
    return 3.0 * p_single;
}

}  // namespace testoracle
