#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include "gr/errors.hpp"

namespace gr {

/// Outcome of a bracketed scalar solve.
///
/// `bracket_lo`/`bracket_hi` is the final enclosing interval: the defining
/// function has opposite signs (or is zero) at its endpoints, and `root`
/// is one of them.
struct RootResult {
    double root = 0.0;
    double residual = 0.0;   ///< defining function evaluated at `root`
    int iterations = 0;
    double bracket_lo = 0.0;
    double bracket_hi = 0.0;

    double bracket_width() const { return bracket_hi - bracket_lo; }
};

namespace detail {

/// Brent's method (bisection + secant/inverse-quadratic) on a sign-changing
/// bracket [a,b]. Converges to a bracket of width ~ 4*eps*|root| + xtol.
template <class F>
RootResult brent_root(F&& f, double a, double b, double fa, double fb,
                      int max_iter = 200, double xtol = 1e-14) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (fa == 0.0) return {a, 0.0, 0, a, a};
    if (fb == 0.0) return {b, 0.0, 0, b, b};
    if ((fa > 0.0) == (fb > 0.0))
        throw SolverError("brent_root: endpoints do not bracket a sign change");

    double c = a, fc = fa;
    double d = b - a, e = d;
    int iter = 0;
    for (; iter < max_iter; ++iter) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a; fc = fa;
            d = b - a; e = d;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b; b = c; c = a;
            fa = fb; fb = fc; fc = fa;
        }
        const double tol1 = 2.0 * eps * std::fabs(b) + 0.5 * xtol;
        const double xm = 0.5 * (c - b);
        if (fb == 0.0) {
            // b is an exact root; the counterpoint is no longer needed.
            c = b;
            fc = fb;
            break;
        }
        if (std::fabs(xm) <= tol1) break;

        if (std::fabs(e) >= tol1 && std::fabs(fa) > std::fabs(fb)) {
            // Interpolation step: secant if only two points, else inverse quadratic.
            const double s = fb / fa;
            double p, q;
            if (a == c) {
                p = 2.0 * xm * s;
                q = 1.0 - s;
            } else {
                q = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * xm * q * (q - r) - (b - a) * (r - 1.0));
                q = (q - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0) q = -q; else p = -p;
            const double min1 = 3.0 * xm * q - std::fabs(tol1 * q);
            const double min2 = std::fabs(e * q);
            if (2.0 * p < (min1 < min2 ? min1 : min2)) {
                e = d;
                d = p / q;
            } else {
                d = xm; e = d;
            }
        } else {
            d = xm; e = d;
        }
        a = b; fa = fb;
        if (std::fabs(d) > tol1)
            b += d;
        else
            b += (xm > 0.0 ? tol1 : -tol1);
        fb = f(b);
    }
    if (iter >= max_iter)
        throw SolverError("brent_root: no convergence within iteration limit");

    RootResult res;
    res.root = b;
    res.residual = fb;
    res.iterations = iter;
    res.bracket_lo = (b < c) ? b : c;
    res.bracket_hi = (b < c) ? c : b;
    return res;
}

template <class F>
RootResult brent_root(F&& f, double a, double b, int max_iter = 200, double xtol = 1e-14) {
    const double fa = f(a);
    const double fb = f(b);
    return brent_root(std::forward<F>(f), a, b, fa, fb, max_iter, xtol);
}

/// Golden-section maximization of a unimodal function on [a,b].
/// Returns {argmax, max}; the interval is shrunk until its width <= xtol.
template <class F>
std::pair<double, double> golden_max(F&& f, double a, double b, double xtol = 1e-12,
                                     int max_iter = 400) {
    constexpr double invphi = 0.6180339887498949;  // 1/phi
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    for (int i = 0; i < max_iter && (b - a) > xtol; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2; f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1; f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        }
    }
    const double xm = 0.5 * (a + b);
    const double fm = f(xm);
    if (f1 >= f2 && f1 >= fm) return {x1, f1};
    if (f2 >= f1 && f2 >= fm) return {x2, f2};
    return {xm, fm};
}

}  // namespace detail
}  // namespace gr
