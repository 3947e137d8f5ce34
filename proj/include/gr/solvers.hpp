#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "gr/analytics.hpp"
#include "gr/errors.hpp"
#include "gr/roots.hpp"

namespace gr {

/// Everything needed for one Table-style row half: both Gurov-Reshetnyak
/// "norms" of f_alpha, their ratio, and the two characteristic points.
struct NormReport {
    double alpha = 0.0;
    double eps_halfline = 0.0;  ///< <f_alpha>_(0,1)
    double eps_realline = 0.0;  ///< sup over eta of <f_alpha>_(-eta,1)
    double ratio = 0.0;         ///< eps_realline / eps_halfline = max psi0
    double eta1 = 0.0;          ///< branch point of psi
    double eta_max = 0.0;       ///< interior maximizer of psi0, in (0, eta1)
};

struct SweepPoint {
    double eps = 0.0;
    double c_eps = 0.0;
};

struct SweepResult {
    std::vector<SweepPoint> points;  ///< in input order
    double supremum = 0.0;           ///< running sup of c_eps (lower bound for the
                                     ///< even-extension operator norm)
};

namespace detail {

/// Defining function of eta1: eta^alpha (1 + alpha(eta+1)) - 1, evaluated as
/// expm1(alpha log eta + log c) wherever c = 1 + alpha(1+eta) > 0 so the
/// O(alpha) values near the root keep full relative accuracy. c itself is
/// grouped as (1+alpha) + alpha*eta, which stays exact as alpha -> -1 where
/// the root approaches c's zero.
inline double eta1_equation(double alpha, double eta) {
    const double c = (1.0 + alpha) + alpha * eta;
    if (c > 0.0) return std::expm1(alpha * std::log(eta) + std::log(c));
    return std::pow(eta, alpha) * c - 1.0;
}

}  // namespace detail

/// Solves eta^alpha = 1/(1 + alpha(eta+1)) for the unique eta1 in (0,1).
/// Equivalently eta1 = (mean of f_alpha on (-eta1,1))^(1/alpha).
inline RootResult solve_eta1(PowerExponent alpha) {
    const double a = alpha.alpha();
    const auto g = [a](double eta) { return detail::eta1_equation(a, eta); };
    const double lo = 1e-12, hi = 1.0 - 1e-12;
    // xtol = 0: converge to relative machine width. The root shrinks like
    // (1+alpha)/2 as alpha -> -1 while the slope there grows like its inverse
    // square, so an absolute x-tolerance would breach the residual bound.
    RootResult r = detail::brent_root(g, lo, hi, 200, 0.0);
    if (!(r.root > 0.0) || !(r.root < 1.0) || std::fabs(r.residual) > 1e-13)
        throw SolverError("solve_eta1: converged outside contract");
    return r;
}

/// Locates the interior maximizer eta_max of psi0 on (0, eta1): the root of
/// the stationarity equation for d(psi0)/d(eta), followed by a 10^4-point
/// grid scan of psi0 over [0, eta1] that re-solves around the grid winner if
/// the scan beats the root by more than 1e-9 (the uniqueness of the root is
/// only observed numerically, never proven).
inline RootResult solve_eta_max(PowerExponent alpha) {
    const double a = alpha.alpha();
    const double eta1 = solve_eta1(alpha).root;
    const auto s = [a](double eta) { return detail::eta_max_objective(a, eta); };

    const double delta = 1e-10;
    RootResult r = detail::brent_root(s, delta, eta1 - delta);

    constexpr std::size_t grid_n = 10000;
    double best_eta = r.root;
    double best_psi = detail::psi0_value(a, r.root);
    std::size_t best_idx = grid_n + 1;
    for (std::size_t i = 0; i <= grid_n; ++i) {
        const double eta = eta1 * static_cast<double>(i) / static_cast<double>(grid_n);
        const double v = detail::psi0_value(a, eta);
        if (v > best_psi) {
            best_psi = v;
            best_eta = eta;
            best_idx = i;
        }
    }
    if (best_idx <= grid_n && best_psi > detail::psi0_value(a, r.root) + 1e-9) {
        // Grid found a better stationary point; bracket a sign change of the
        // objective around the winner and re-solve there.
        const double lo = eta1 * static_cast<double>(best_idx > 0 ? best_idx - 1 : 0) /
                          static_cast<double>(grid_n);
        const double hi = eta1 *
                          static_cast<double>(best_idx < grid_n ? best_idx + 1 : grid_n) /
                          static_cast<double>(grid_n);
        const double safe_lo = std::fmax(lo, delta);
        const double safe_hi = std::fmin(hi, eta1 - delta);
        double prev_x = safe_lo, prev_f = s(safe_lo);
        bool resolved = false;
        for (int k = 1; k <= 64 && !resolved; ++k) {
            const double x = safe_lo + (safe_hi - safe_lo) * k / 64.0;
            const double fx = s(x);
            if ((prev_f > 0.0) != (fx > 0.0) || prev_f == 0.0) {
                r = detail::brent_root(s, prev_x, x, prev_f, fx);
                resolved = true;
            }
            prev_x = x;
            prev_f = fx;
        }
        if (!resolved || detail::psi0_value(a, r.root) + 1e-9 < best_psi)
            throw SolverError(
                "solve_eta_max: stationary point is not the grid maximum of psi0 "
                "(alpha=" + std::to_string(a) + ", grid eta=" + std::to_string(best_eta) + ")");
    }
    if (!(r.root > 0.0) || !(r.root < eta1))
        throw SolverError("solve_eta_max: root escaped (0, eta1)");
    return r;
}

/// Full-line norm report:
///   eps_realline = eps_halfline * max_eta psi(alpha, eta) = eps_halfline * psi0(eta_max).
inline NormReport norm_realline(PowerExponent alpha) {
    NormReport rep;
    rep.alpha = alpha.alpha();
    rep.eps_halfline = norm_halfline(alpha);
    rep.eta1 = solve_eta1(alpha).root;
    rep.eta_max = solve_eta_max(alpha).root;
    rep.ratio = detail::psi0_value(alpha.alpha(), rep.eta_max);
    rep.eps_realline = rep.eps_halfline * rep.ratio;
    return rep;
}

/// Limiting positive summability exponent on the half-line: the root p > 1 of
/// p^p/(p-1)^(p-1) = 2/eps, solved in the cancellation-free log form
///   log p - (p-1) log1p(-1/p) = log(2/eps).
inline SummabilityExponent limiting_exponent(double eps) {
    if (!std::isfinite(eps) || !(eps > 0.0) || !(eps < 2.0))
        throw std::domain_error("limiting_exponent: eps must lie in (0,2)");
    const double target = std::log(2.0) - std::log(eps);
    const auto g = [target](double p) {
        return std::log(p) - (p - 1.0) * std::log1p(-1.0 / p) - target;
    };

    double lo = 1.0 + 1e-9;
    while (g(lo) > 0.0 && lo > 1.0 + 1e-15) lo = 1.0 + (lo - 1.0) * 1e-3;
    if (g(lo) > 0.0) {
        // eps is within ~1e-14 of 2; p is indistinguishable from 1 at this scale.
        if (std::fabs(g(lo)) > 1e-12)
            throw SolverError("limiting_exponent: lower bracket failed");
        return SummabilityExponent(lo);
    }
    double hi = 1e6;
    while (g(hi) < 0.0 && hi < 1e300) hi *= 2.0;

    const RootResult r = detail::brent_root(g, lo, hi);
    if (std::fabs(r.residual) > 1e-12)
        throw SolverError("limiting_exponent: residual above bound");
    return SummabilityExponent(r.root);
}

/// For each eps: match alpha = 1/(p(eps)-1) and record C_eps = max psi0, the
/// even-extension blow-up factor. Points come back in input order together
/// with their running supremum.
inline SweepResult extension_factor_sweep(const std::vector<double>& eps_list) {
    SweepResult out;
    out.points.reserve(eps_list.size());
    for (double eps : eps_list) {
        const SummabilityExponent p = limiting_exponent(eps);
        const NormReport rep = norm_realline(PowerExponent(p.alpha_plus()));
        out.points.push_back({eps, rep.ratio});
        if (rep.ratio > out.supremum) out.supremum = rep.ratio;
    }
    return out;
}

/// The alpha = 1 stationarity equation reduces to this quintic; used as an
/// independent residual check on solve_eta_max(1).
inline double quintic_check(double eta) {
    return ((((3.0 * eta - 3.0) * eta - 6.0) * eta - 10.0) * eta - 1.0) * eta + 1.0;
}

}  // namespace gr
