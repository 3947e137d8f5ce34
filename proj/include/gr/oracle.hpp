#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gr/errors.hpp"
#include "gr/quadrature.hpp"
#include "gr/roots.hpp"

namespace gr {

/// A non-negative locally summable sample function. Points where the value
/// blows up (but the integral converges) must be listed in `singularities`;
/// the oracle splits panels there and never samples them. Detection is the
/// caller's responsibility.
struct IntegrableFunction {
    std::function<double(double)> evaluator;
    std::vector<double> singularities{};
};

/// Per-side breakdown of a mean oscillation estimate.
struct OscillationParts {
    OracleEstimate mean;         ///< f_I
    double above = 0.0;          ///< (1/|I|) integral over {f >= f_I} of (f - f_I)
    double below = 0.0;          ///< (1/|I|) integral over {f <= f_I} of (f_I - f)
    OracleEstimate oscillation;  ///< above + below with combined error bound
    std::vector<double> crossings;  ///< located solutions of f(x) = f_I
};

/// Result of the eta-grid supremum scan behind the full-line norm.
struct NormScanResult {
    OracleEstimate estimate;  ///< value = max over eta of <f>_(-eta,1)
    double eta_argmax = 0.0;
};

struct ReflectionCheckResult {
    bool passed = false;
    double worst_margin = 0.0;  ///< min over delta of RHS - LHS
    double worst_delta = 0.0;
    long long evaluations = 0;
};

namespace detail {

inline std::function<double(double)> checked_evaluator(const IntegrableFunction& f) {
    return [eval = f.evaluator](double x) {
        const double v = eval(x);
        if (v < 0.0)
            throw std::domain_error("oracle: sample function is negative at x=" +
                                    std::to_string(x));
        return v;
    };
}

inline std::vector<double> splits_inside(const std::vector<double>& points, double a,
                                         double b) {
    std::vector<double> out;
    for (double s : points)
        if (s > a && s < b) out.push_back(s);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Locates the solutions of g(x) = 0 on (a,b) by a midpoint scan of each
/// segment between declared singularities, followed by bisection to 1e-13
/// in x. Returns the crossings in increasing order.
template <class G>
std::vector<double> find_level_crossings(G&& g, double a, double b,
                                         const std::vector<double>& singular,
                                         EvaluationBudget& budget, long long& evals,
                                         int scan_points = 512) {
    std::vector<double> bounds{a};
    for (double s : splits_inside(singular, a, b)) bounds.push_back(s);
    bounds.push_back(b);

    std::vector<double> crossings;
    const auto record = [&crossings](double x) {
        crossings.push_back(x);
        if (crossings.size() > 64)
            throw SolverError(
                "find_level_crossings: too many crossings; input looks pathological");
    };
    for (std::size_t seg = 0; seg + 1 < bounds.size(); ++seg) {
        const double lo = bounds[seg], hi = bounds[seg + 1];
        const double h = (hi - lo) / scan_points;
        if (!(h > 0.0)) continue;
        // Track the last sample with g != 0; exact zeros open a "pending"
        // run that only becomes a crossing if the sign flips across it.
        // A constant-on-the-level stretch therefore records nothing, while
        // a crossing that happens to land exactly on a sample still counts.
        bool have_nonzero = false;
        double nz_x = 0.0, nz_g = 0.0;
        double pending_zero = std::numeric_limits<double>::quiet_NaN();
        for (int i = 0; i < scan_points; ++i) {
            const double x = lo + (i + 0.5) * h;
            budget.charge(1);
            ++evals;
            const double gx = g(x);
            if (gx == 0.0) {
                if (std::isnan(pending_zero)) pending_zero = x;
                continue;
            }
            if (have_nonzero && (nz_g < 0.0) != (gx < 0.0)) {
                if (!std::isnan(pending_zero)) {
                    record(pending_zero);
                } else {
                    double xl = nz_x, xh = x, gl = nz_g;
                    while (xh - xl > 1e-13) {
                        const double xm = 0.5 * (xl + xh);
                        budget.charge(1);
                        ++evals;
                        const double gm = g(xm);
                        if (gm == 0.0) {
                            xl = xm;
                            xh = xm;
                            break;
                        }
                        if ((gl < 0.0) == (gm < 0.0)) {
                            xl = xm;
                            gl = gm;
                        } else {
                            xh = xm;
                        }
                    }
                    record(0.5 * (xl + xh));
                }
            }
            pending_zero = std::numeric_limits<double>::quiet_NaN();
            have_nonzero = true;
            nz_x = x;
            nz_g = gx;
        }
    }
    std::sort(crossings.begin(), crossings.end());
    return crossings;
}

}  // namespace detail

/// Mean value f_I = (1/|I|) integral of f over (a,b), adaptively to an
/// absolute tolerance `tol` on the mean itself.
inline OracleEstimate oracle_mean(const IntegrableFunction& f, double a, double b,
                                  double tol) {
    if (!(a < b)) throw std::domain_error("oracle_mean: need a < b");
    if (!(tol > 0.0)) throw std::domain_error("oracle_mean: tol must be > 0");
    EvaluationBudget budget;
    const auto eval = detail::checked_evaluator(f);
    OracleEstimate est = detail::integrate_adaptive(
        eval, a, b, detail::splits_inside(f.singularities, a, b), tol * (b - a), budget);
    est.value /= (b - a);
    est.abs_error_bound /= (b - a);
    return est;
}

/// Mean oscillation split by side of the mean. The integrand is kept smooth
/// and sign-definite by cutting panels at the located level crossings
/// f(x) = f_I; half the tolerance is spent on the mean, half on the
/// oscillation quadrature (a mean shift of d moves the oscillation by at
/// most d, so the two shares add).
inline OscillationParts oracle_oscillation_parts(const IntegrableFunction& f, double a,
                                                 double b, double tol) {
    if (!(a < b)) throw std::domain_error("oracle_oscillation: need a < b");
    if (!(tol > 0.0)) throw std::domain_error("oracle_oscillation: tol must be > 0");
    EvaluationBudget budget;
    const auto eval = detail::checked_evaluator(f);
    const std::vector<double> singular = detail::splits_inside(f.singularities, a, b);

    OscillationParts parts;
    {
        OracleEstimate m =
            detail::integrate_adaptive(eval, a, b, singular, 0.5 * tol * (b - a), budget);
        m.value /= (b - a);
        m.abs_error_bound /= (b - a);
        parts.mean = m;
    }
    const double m = parts.mean.value;

    const auto g = [&eval, m](double x) { return eval(x) - m; };
    parts.crossings = detail::find_level_crossings(g, a, b, singular, budget,
                                                   parts.oscillation.evaluations);

    // Regions between consecutive crossings carry one sign of f - f_I each.
    std::vector<double> region_bounds{a};
    for (double c : parts.crossings) region_bounds.push_back(c);
    region_bounds.push_back(b);

    const double quad_tol = 0.5 * tol * (b - a);
    double err_sum = parts.mean.abs_error_bound;  // mean-shift term
    for (std::size_t i = 0; i + 1 < region_bounds.size(); ++i) {
        const double lo = region_bounds[i], hi = region_bounds[i + 1];
        if (!(hi - lo > 1e-13)) continue;
        budget.charge(1);
        ++parts.oscillation.evaluations;
        const double s = g(0.5 * (lo + hi)) < 0.0 ? -1.0 : 1.0;
        const auto signed_dev = [&g, s](double x) { return s * g(x); };
        OracleEstimate piece = detail::integrate_adaptive(
            signed_dev, lo, hi, detail::splits_inside(singular, lo, hi),
            quad_tol * (hi - lo) / (b - a), budget);
        piece.value /= (b - a);
        piece.abs_error_bound /= (b - a);
        if (s > 0.0)
            parts.above += piece.value;
        else
            parts.below += piece.value;
        err_sum += piece.abs_error_bound;
        parts.oscillation.evaluations += piece.evaluations;
    }
    parts.oscillation.value = parts.above + parts.below;
    parts.oscillation.abs_error_bound = err_sum;
    parts.oscillation.evaluations += parts.mean.evaluations;
    return parts;
}

/// Omega(f; (a,b)) = (1/|I|) integral of |f - f_I|.
inline OracleEstimate oracle_oscillation(const IntegrableFunction& f, double a, double b,
                                         double tol) {
    return oracle_oscillation_parts(f, a, b, tol).oscillation;
}

/// Supremum over eta in [0,1] of the relative oscillation <f>_(-eta,1),
/// estimated on a uniform grid of `grid_size` points plus one golden-section
/// refinement around the grid argmax. Valid as the full-line norm only for
/// even f monotone on the positive half-line (caller's responsibility).
/// The error bound combines the quadrature tolerance with a grid-resolution
/// term (max observed slope times the grid step).
inline NormScanResult oracle_norm_realline(const IntegrableFunction& f, int grid_size,
                                           double tol) {
    if (grid_size < 100)
        throw std::domain_error("oracle_norm_realline: grid_size must be >= 100");
    if (!(tol > 0.0)) throw std::domain_error("oracle_norm_realline: tol must be > 0");

    long long evals = 0;
    double bound_at_best = 0.0;
    const auto relative = [&](double eta) {
        const double a = -eta;
        const OscillationParts parts = oracle_oscillation_parts(f, a, 1.0, tol);
        const double rel = parts.oscillation.value / parts.mean.value;
        evals += parts.oscillation.evaluations;
        bound_at_best = (parts.oscillation.abs_error_bound +
                         rel * parts.mean.abs_error_bound) /
                        parts.mean.value;
        return rel;
    };

    const double step = 1.0 / (grid_size - 1);
    std::vector<double> values(static_cast<std::size_t>(grid_size));
    std::size_t best = 0;
    double best_bound = 0.0;
    for (int i = 0; i < grid_size; ++i) {
        values[i] = relative(i * step);
        if (values[i] > values[best]) {
            best = i;
            best_bound = bound_at_best;
        } else if (i == 0) {
            best_bound = bound_at_best;
        }
    }
    double max_slope = 0.0;
    for (int i = 0; i + 1 < grid_size; ++i)
        max_slope = std::fmax(max_slope, std::fabs(values[i + 1] - values[i]) / step);

    NormScanResult out;
    out.eta_argmax = best * step;
    out.estimate.value = values[best];

    const double lo = (best == 0) ? 0.0 : (best - 1) * step;
    const double hi = (best + 1 >= values.size()) ? 1.0 : (best + 1) * step;
    const auto [eta_ref, val_ref] = detail::golden_max(relative, lo, hi, 1e-9);
    if (val_ref > out.estimate.value) {
        out.estimate.value = val_ref;
        out.eta_argmax = eta_ref;
        relative(out.eta_argmax);  // refresh bound_at_best at the reported point
        best_bound = bound_at_best;
    }
    out.estimate.abs_error_bound = best_bound + max_slope * step;
    out.estimate.evaluations = evals;
    return out;
}

/// Checks Omega(f; (-delta b, b)) <= (2/(1+delta)) Omega(f; (0,b)) for an
/// even f on a uniform delta-grid over [0,1]. Reports the worst margin
/// RHS - LHS; the check passes when every margin clears the combined
/// quadrature error allowance.
inline ReflectionCheckResult check_reflection_inequality(const IntegrableFunction& f,
                                                         double b, int delta_grid,
                                                         double tol) {
    if (!(b > 0.0)) throw std::domain_error("check_reflection_inequality: need b > 0");
    if (delta_grid < 2)
        throw std::domain_error("check_reflection_inequality: need delta_grid >= 2");

    const OracleEstimate base = oracle_oscillation(f, 0.0, b, tol);
    ReflectionCheckResult out;
    out.evaluations = base.evaluations;
    out.passed = true;
    bool first = true;
    for (int j = 0; j < delta_grid; ++j) {
        const double delta = static_cast<double>(j) / (delta_grid - 1);
        OracleEstimate lhs;
        if (delta == 0.0) {
            lhs = base;
        } else {
            lhs = oracle_oscillation(f, -delta * b, b, tol);
            out.evaluations += lhs.evaluations;
        }
        const double rhs = 2.0 / (1.0 + delta) * base.value;
        const double margin = rhs - lhs.value;
        const double allowance =
            2.0 / (1.0 + delta) * base.abs_error_bound + lhs.abs_error_bound;
        if (first || margin < out.worst_margin) {
            out.worst_margin = margin;
            out.worst_delta = delta;
            first = false;
        }
        if (margin < -allowance) out.passed = false;
    }
    return out;
}

}  // namespace gr
