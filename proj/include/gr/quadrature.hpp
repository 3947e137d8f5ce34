#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "gr/errors.hpp"

namespace gr {

/// A quadrature-backed estimate: value, a bound on its absolute error, and
/// the number of integrand evaluations spent producing it. The value is only
/// trustworthy when the bound is below the caller's tolerance.
struct OracleEstimate {
    double value = 0.0;
    double abs_error_bound = 0.0;
    long long evaluations = 0;
};

/// Shared evaluation budget for one oracle operation (default 10^7 calls).
class EvaluationBudget {
public:
    explicit EvaluationBudget(long long limit = 10'000'000) : limit_(limit) {}

    void charge(long long n) {
        used_ += n;
        if (used_ > limit_)
            throw BudgetExceededError("quadrature evaluation budget of " +
                                      std::to_string(limit_) + " exceeded");
    }
    long long used() const { return used_; }

private:
    long long used_ = 0;
    long long limit_;
};

namespace detail {

// 15-point Kronrod extension of 7-point Gauss-Legendre (abscissae for the
// positive half plus the centre, and the matching weights). All nodes are
// interior, so panels may abut singular endpoints without sampling them.
inline constexpr std::array<double, 8> kKronrodNodes = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct PanelEstimate {
    double integral = 0.0;
    double abs_error = 0.0;
};

/// One Gauss7/Kronrod15 pass over [a,b]; 15 evaluations. Error estimate per
/// QUADPACK: |K15-G7| sharpened against the scaled oscillation resasc and
/// floored at the roundoff level of resabs.
template <class F>
PanelEstimate qk15(F&& f, double a, double b) {
    constexpr double eps = std::numeric_limits<double>::epsilon();
    const double centre = 0.5 * (a + b);
    const double hlgth = 0.5 * (b - a);

    std::array<double, 15> fv{};
    const double fc = f(centre);
    fv[14] = fc;
    double resg = kGaussWeights[3] * fc;
    double resk = kKronrodWeights[7] * fc;
    double resabs = kKronrodWeights[7] * std::fabs(fc);

    for (int j = 0; j < 7; ++j) {
        const double absc = hlgth * kKronrodNodes[j];
        const double f1 = f(centre - absc);
        const double f2 = f(centre + absc);
        fv[2 * j] = f1;
        fv[2 * j + 1] = f2;
        const double fsum = f1 + f2;
        if (j % 2 == 1) resg += kGaussWeights[j / 2] * fsum;
        resk += kKronrodWeights[j] * fsum;
        resabs += kKronrodWeights[j] * (std::fabs(f1) + std::fabs(f2));
    }

    const double reskh = 0.5 * resk;
    double resasc = kKronrodWeights[7] * std::fabs(fc - reskh);
    for (int j = 0; j < 7; ++j)
        resasc += kKronrodWeights[j] *
                  (std::fabs(fv[2 * j] - reskh) + std::fabs(fv[2 * j + 1] - reskh));

    PanelEstimate est;
    est.integral = resk * hlgth;
    resabs *= std::fabs(hlgth);
    resasc *= std::fabs(hlgth);
    double abserr = std::fabs((resk - resg) * hlgth);
    if (resasc != 0.0 && abserr != 0.0)
        abserr = resasc * std::min(1.0, std::pow(200.0 * abserr / resasc, 1.5));
    const double uflow = std::numeric_limits<double>::min();
    if (resabs > uflow / (50.0 * eps)) abserr = std::max(50.0 * eps * resabs, abserr);
    est.abs_error = abserr;
    return est;
}

struct Panel {
    double a = 0.0;
    double b = 0.0;
    double integral = 0.0;
    double abs_error = 0.0;
};

struct PanelWorstFirst {
    bool operator()(const Panel& x, const Panel& y) const {
        if (x.abs_error != y.abs_error) return x.abs_error > y.abs_error;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    }
};

inline double neumaier_sum(const std::vector<double>& xs) {
    double sum = 0.0, comp = 0.0;
    for (double x : xs) {
        const double t = sum + x;
        comp += (std::fabs(sum) >= std::fabs(x)) ? (sum - t) + x : (x - t) + sum;
        sum = t;
    }
    return sum + comp;
}

/// Globally adaptive integration of f over [a,b] to absolute tolerance
/// `abs_tol`. `interior_splits` become initial panel boundaries (pre-sorted
/// or not); panels abut them but the rule never samples them. The worst
/// panel is bisected until the summed error bound meets the tolerance, the
/// budget runs out, or every panel has collapsed to machine width.
template <class F>
OracleEstimate integrate_adaptive(F&& f, double a, double b,
                                  std::vector<double> interior_splits, double abs_tol,
                                  EvaluationBudget& budget) {
    OracleEstimate out;
    if (a == b) return out;
    if (!(a < b)) throw std::domain_error("integrate_adaptive: need a < b");
    if (!(abs_tol > 0.0)) throw std::domain_error("integrate_adaptive: tol must be > 0");

    std::sort(interior_splits.begin(), interior_splits.end());
    std::vector<double> bounds;
    bounds.push_back(a);
    for (double s : interior_splits)
        if (s > bounds.back() && s < b) bounds.push_back(s);
    bounds.push_back(b);

    const auto eval_panel = [&](double lo, double hi) {
        budget.charge(15);
        out.evaluations += 15;
        const PanelEstimate pe = qk15(f, lo, hi);
        if (!std::isfinite(pe.integral))
            throw std::domain_error(
                "integrate_adaptive: non-finite sample in [" + std::to_string(lo) + ", " +
                std::to_string(hi) + "]; declare the singularity");
        return Panel{lo, hi, pe.integral, pe.abs_error};
    };

    std::multiset<Panel, PanelWorstFirst> active;
    std::vector<Panel> frozen;  // panels at machine width; error irreducible
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        const Panel p = eval_panel(bounds[i], bounds[i + 1]);
        total_err += p.abs_error;
        active.insert(p);
    }

    for (;;) {
        while (total_err > abs_tol) {
            if (active.empty())
                throw BudgetExceededError(
                    "integrate_adaptive: tolerance unattainable, all panels at machine width");
            const Panel worst = *active.begin();
            active.erase(active.begin());
            // A panel whose midpoint no longer separates its endpoints has
            // collapsed to machine width; its error is irreducible.
            const double mid = 0.5 * (worst.a + worst.b);
            if (!(mid > worst.a) || !(mid < worst.b)) {
                frozen.push_back(worst);
                continue;
            }
            total_err -= worst.abs_error;
            const Panel left = eval_panel(worst.a, mid);
            const Panel right = eval_panel(mid, worst.b);
            total_err += left.abs_error + right.abs_error;
            active.insert(left);
            active.insert(right);
        }
        // The running total drifts; recount exactly before accepting it.
        std::vector<double> errs;
        errs.reserve(active.size() + frozen.size());
        for (const Panel& p : active) errs.push_back(p.abs_error);
        for (const Panel& p : frozen) errs.push_back(p.abs_error);
        total_err = neumaier_sum(errs);
        if (total_err <= abs_tol) break;
        if (active.empty())
            throw BudgetExceededError(
                "integrate_adaptive: tolerance unattainable, all panels at machine width");
    }

    std::vector<Panel> all(active.begin(), active.end());
    all.insert(all.end(), frozen.begin(), frozen.end());
    std::sort(all.begin(), all.end(),
              [](const Panel& x, const Panel& y) { return x.a < y.a; });
    std::vector<double> vals, errs;
    vals.reserve(all.size());
    errs.reserve(all.size());
    for (const Panel& p : all) {
        vals.push_back(p.integral);
        errs.push_back(p.abs_error);
    }
    out.value = neumaier_sum(vals);
    out.abs_error_bound = neumaier_sum(errs);
    return out;
}

}  // namespace detail
}  // namespace gr
