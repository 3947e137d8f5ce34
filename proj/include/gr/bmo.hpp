#pragma once

#include <cmath>

#include "gr/errors.hpp"
#include "gr/roots.hpp"

namespace gr {

/// BMO norms of f0(x) = ln(1/|x|) on the half-line and the real line, and
/// their ratio C0 (the even-extension lower bound in the BMO setting).
struct BmoReport {
    double t_root = 0.0;         ///< root t > 1 of exp(t ln t/(t+1)) = e(t-1-(t+1)/ln t)
    double norm_halfline = 0.0;  ///< ||f0||_{BMO, half-line} = 2/e
    double norm_realline = 0.0;
    double c0 = 0.0;             ///< norm_realline / norm_halfline
};

namespace detail {

/// LHS - RHS of the defining equation in log form, valid where the RHS
/// t - 1 - (t+1)/ln t is positive (it is negative near t = 1+, where the
/// equation has no root).
inline double bmo_equation_log(double t) {
    const double w = t * std::log(t) / (t + 1.0);
    const double rhs_core = t - 1.0 - (t + 1.0) / std::log(t);
    return w - 1.0 - std::log(rhs_core);
}

inline bool bmo_rhs_positive(double t) {
    return t - 1.0 - (t + 1.0) / std::log(t) > 0.0;
}

}  // namespace detail

/// Finds the root t > 1 of exp(t ln t/(t+1)) = e (t - 1 - (t+1)/ln t) by
/// scanning [1+1e-6, 100] in steps of 0.01 for a sign change of the log-form
/// difference (restricted to where the RHS is positive), then refining.
inline RootResult solve_bmo_t() {
    const double step = 0.01;
    double prev_t = 0.0, prev_h = 0.0;
    bool have_prev = false;
    for (double t = 1.000001; t <= 100.0; t += step) {
        if (!detail::bmo_rhs_positive(t)) {
            have_prev = false;
            continue;
        }
        const double h = detail::bmo_equation_log(t);
        if (have_prev && ((prev_h > 0.0) != (h > 0.0) || prev_h == 0.0)) {
            RootResult r = detail::brent_root(detail::bmo_equation_log, prev_t, t, prev_h, h);
            if (std::fabs(r.residual) > 1e-12)
                throw SolverError("solve_bmo_t: residual above bound");
            return r;
        }
        prev_t = t;
        prev_h = h;
        have_prev = true;
    }
    throw SolverError("solve_bmo_t: no sign change found on [1+1e-6, 100]");
}

/// Assembles the BMO report:
///   ||f0||_R = (2/e) (1/(t+1)) [exp(t ln t/(t+1)) + e t ln t/(t+1)].
inline BmoReport bmo_norm_f0() {
    BmoReport rep;
    rep.t_root = solve_bmo_t().root;
    const double t = rep.t_root;
    const double w = t * std::log(t) / (t + 1.0);
    const double e = std::exp(1.0);
    rep.norm_halfline = 2.0 / e;
    rep.c0 = (std::exp(w) + e * w) / (t + 1.0);
    rep.norm_realline = rep.norm_halfline * rep.c0;
    return rep;
}

}  // namespace gr
