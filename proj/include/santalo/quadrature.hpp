#pragma once

#include <cmath>
#include <functional>

#include "santalo/errors.hpp"

namespace santalo {

// Volume of the Euclidean unit ball in R^n.
inline double ball_volume(int n) {
    return std::pow(M_PI, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

namespace detail {

inline double simpson(double a, double b, double fa, double fm, double fb) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

inline double adaptive_step(const std::function<double(double)>& f, double a, double b,
                            double fa, double fm, double fb, double whole, double tol,
                            int depth, bool& converged) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, m, fa, flm, fm);
    const double right = simpson(m, b, fm, frm, fb);
    const double delta = left + right - whole;
    if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
    if (depth <= 0) {
        converged = false;
        return left + right;
    }
    return adaptive_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, converged) +
           adaptive_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, converged);
}

} // namespace detail

// Adaptive Simpson quadrature on [a, b]. Throws NonIntegrable when the
// subdivision limit is reached before the tolerance is met.
inline double integrate(const std::function<double(double)>& f, double a, double b,
                        double tol = 1e-12, int max_depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = detail::simpson(a, b, fa, fm, fb);
    bool converged = true;
    const double result =
        detail::adaptive_step(f, a, b, fa, fm, fb, whole, tol, max_depth, converged);
    if (!converged) throw NonIntegrable();
    return result;
}

} // namespace santalo
