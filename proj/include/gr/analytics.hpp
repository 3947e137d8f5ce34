#pragma once

#include <cmath>
#include <stdexcept>

namespace gr {

/// Exponent alpha of the power function f_alpha(x) = |x|^alpha.
/// Valid range: alpha > -1 (local summability) and alpha != 0.
class PowerExponent {
public:
    explicit PowerExponent(double alpha) : alpha_(alpha) {
        if (!std::isfinite(alpha) || !(alpha > -1.0) || alpha == 0.0)
            throw std::domain_error("PowerExponent: alpha must be finite, > -1 and != 0");
    }
    double alpha() const { return alpha_; }

private:
    double alpha_;
};

/// Summability exponent p > 1 together with its companion quantities:
/// p_minus = 1 - p, and the two extremal power exponents 1/(p-1) and -1/p.
class SummabilityExponent {
public:
    explicit SummabilityExponent(double p) : p_(p) {
        if (!std::isfinite(p) || !(p > 1.0))
            throw std::domain_error("SummabilityExponent: p must be finite and > 1");
    }
    double p() const { return p_; }
    double p_minus() const { return 1.0 - p_; }
    double alpha_plus() const { return 1.0 / (p_ - 1.0); }
    double alpha_minus() const { return -1.0 / p_; }

private:
    double p_;
};

/// Left-endpoint scale eta of the normalized interval I = (-eta, 1), eta in [0,1].
class IntervalParam {
public:
    explicit IntervalParam(double eta) : eta_(eta) {
        if (!std::isfinite(eta) || eta < 0.0 || eta > 1.0)
            throw std::domain_error("IntervalParam: eta must lie in [0,1]");
    }
    double eta() const { return eta_; }

private:
    double eta_;
};

/// Mean value, mean oscillation and their ratio for one (alpha, eta) pair.
struct OscillationStats {
    double mean = 0.0;         ///< f_I
    double oscillation = 0.0;  ///< Omega(f; I)
    double relative = 0.0;     ///< Omega(f; I) / f_I, always in [0, 2]
};

/// Which analytic branch of psi produced a value: A for eta <= eta1 (psi0),
/// B for eta >= eta1 (psi1).
enum class Branch { A, B };

struct PsiValue {
    double value = 0.0;
    Branch branch = Branch::A;
};

namespace detail {

inline double sign(double x) { return x < 0.0 ? -1.0 : 1.0; }

/// (1+x)^e evaluated as exp(e*log1p(x)); exact semantics for x > -1 and
/// stable when e ~ 1/alpha blows up while log1p(x) ~ alpha shrinks.
inline double pow1p(double x, double e) { return std::exp(e * std::log1p(x)); }

/// eta^(alpha+1) - eta = eta*(eta^alpha - 1), without cancellation for small alpha.
inline double eta_pow_gap(double alpha, double eta) {
    if (eta == 0.0 || eta == 1.0) return 0.0;
    return eta * std::expm1(alpha * std::log(eta));
}

/// log((1+eta^(alpha+1))/(1+eta)), accurate even when the ratio is 1+O(alpha).
inline double log_mean_ratio(double alpha, double eta) {
    return std::log1p(eta_pow_gap(alpha, eta) / (1.0 + eta));
}

/// (1+eta^(alpha+1))^(1/alpha) / (1+eta)^((alpha+1)/alpha).
/// Shared leading factor of psi0 and psi1; the 1/alpha exponents are folded
/// into one O(1) exponent before exponentiation so nothing overflows as
/// alpha -> 0.
inline double psi_leading(double alpha, double eta) {
    return std::exp(log_mean_ratio(alpha, eta) / alpha - std::log1p(eta));
}

/// m - 1 where m is the interval mean of f_alpha on (-eta, 1); exact
/// rearrangement [eta*(eta^alpha-1) - alpha*(1+eta)] / ((alpha+1)(1+eta)).
inline double mean_minus_one(double alpha, double eta) {
    return (eta_pow_gap(alpha, eta) - alpha * (1.0 + eta)) / ((alpha + 1.0) * (1.0 + eta));
}

inline double mean_value(double alpha, double eta) {
    return (1.0 + std::pow(eta, alpha + 1.0)) / ((alpha + 1.0) * (1.0 + eta));
}

/// ((alpha+1)/alpha) * log(m): the exponent of m^((alpha+1)/alpha).
inline double mean_power_exponent(double alpha, double eta) {
    return ((alpha + 1.0) / alpha) * std::log1p(mean_minus_one(alpha, eta));
}

/// Mean oscillation, branch eta <= eta1: the integral over {f >= f_I} (alpha > 0)
/// or {f <= f_I} (alpha < 0) collapses to
///   (2 sign(alpha)/(1+eta)) * [ (alpha/(alpha+1)) (m^((a+1)/a) - 1) - (m - 1) ].
inline double oscillation_below_eta1(double alpha, double eta) {
    const double d = mean_minus_one(alpha, eta);
    const double bracket =
        (alpha / (alpha + 1.0)) * std::expm1(mean_power_exponent(alpha, eta)) - d;
    return (2.0 * sign(alpha) / (1.0 + eta)) * bracket;
}

/// Mean oscillation, branch eta >= eta1:
///   (4|alpha| / ((1+eta)(alpha+1))) * m^((alpha+1)/alpha).
inline double oscillation_above_eta1(double alpha, double eta) {
    return 4.0 * std::fabs(alpha) / ((1.0 + eta) * (alpha + 1.0)) *
           std::exp(mean_power_exponent(alpha, eta));
}

/// True iff eta is on the psi0 side of the branch point, i.e. eta <= eta1(alpha).
/// Uses the defining property of eta1: it is the unique eta where
/// eta = m(eta)^(1/alpha), and m^(1/alpha) - eta changes sign exactly once.
inline double branch_gap(double alpha, double eta) {
    return std::exp(std::log(mean_value(alpha, eta)) / alpha) - eta;
}

inline bool below_eta1(double alpha, double eta) {
    return branch_gap(alpha, eta) >= 0.0;
}

inline double psi0_value(double alpha, double eta) {
    const double etap1 = std::pow(eta, alpha + 1.0);
    const double bracket = -eta_pow_gap(alpha, eta) / ((1.0 + etap1) * (1.0 + eta));
    const double k = pow1p(alpha, (alpha + 1.0) / alpha);  // (alpha+1)^((alpha+1)/alpha)
    return psi_leading(alpha, eta) + (k / alpha) * bracket;
}

inline double psi1_value(double alpha, double eta) {
    return 2.0 * psi_leading(alpha, eta);
}

/// d(psi0)/d(eta). The displayed form
///   ((a+1)/a) * B / [ (1+eta)^(2+1/a) (1+eta^(a+1))^2 ]
/// has B and the denominator both of size exp(O(1/alpha)); the quotient is
/// assembled from per-term exponent differences, each of which stays O(1).
inline double dpsi0_value(double alpha, double eta) {
    const double A = std::log1p(std::pow(eta, alpha + 1.0));
    const double H = std::log1p(eta);
    const double AmH = log_mean_ratio(alpha, eta);  // A - H without cancellation
    const double l1a = std::log1p(alpha);
    const double eta_pow_alpha_m1 =
        (eta == 0.0) ? -1.0 : std::expm1(alpha * std::log(eta));  // eta^alpha - 1
    const double eta_pow_alpha = eta_pow_alpha_m1 + 1.0;

    const double e1 = AmH / alpha - A - 2.0 * H;
    const double e2 = l1a / alpha - 2.0 * H;
    const double e3 = l1a + l1a / alpha - 2.0 * A;
    const double scaled = std::exp(e1) * eta_pow_alpha_m1 + std::exp(e2) -
                          std::exp(e3) * eta_pow_alpha;
    return ((alpha + 1.0) / alpha) * scaled;
}

/// The scaled stationarity function for eta_max: the bracket of the
/// d(psi0)/d(eta) formula divided by its (positive) denominator. Same roots,
/// no overflow for |alpha| << 1, finite at eta -> 0+ for alpha < 0.
inline double eta_max_objective(double alpha, double eta) {
    return dpsi0_value(alpha, eta) * alpha / (alpha + 1.0);
}

}  // namespace detail

/// Interval mean of f_alpha on (-eta, 1):
///   (1/(alpha+1)) * (1+eta^(alpha+1))/(1+eta).
inline double mean_value_power(PowerExponent alpha, IntervalParam eta) {
    return detail::mean_value(alpha.alpha(), eta.eta());
}

/// Mean oscillation Omega(f_alpha; (-eta,1)); dispatches between the two
/// one-sided closed forms, which agree at the branch point eta1.
inline double mean_oscillation_power(PowerExponent alpha, IntervalParam eta) {
    const double a = alpha.alpha();
    const double e = eta.eta();
    return detail::below_eta1(a, e) ? detail::oscillation_below_eta1(a, e)
                                    : detail::oscillation_above_eta1(a, e);
}

/// Mean, oscillation and relative oscillation <f_alpha>_(-eta,1) in one shot.
inline OscillationStats relative_oscillation_power(PowerExponent alpha, IntervalParam eta) {
    OscillationStats s;
    s.mean = mean_value_power(alpha, eta);
    s.oscillation = mean_oscillation_power(alpha, eta);
    s.relative = s.oscillation / s.mean;
    return s;
}

/// Gurov-Reshetnyak "norm" of f_alpha on the half-line:
///   <f_alpha>_(0,1) = 2|alpha| / (alpha+1)^((alpha+1)/alpha).
/// For alpha = 1/(p-1) and alpha = -1/p this equals 2 (p-1)^(p-1) / p^p.
inline double norm_halfline(PowerExponent alpha) {
    const double a = alpha.alpha();
    return 2.0 * std::fabs(a) * std::exp(-((a + 1.0) / a) * std::log1p(a));
}

/// psi0(alpha, eta) = <f_alpha>_(-eta,1) / <f_alpha>_(0,1) on the branch
/// eta <= eta1 (defined, though not extremal, for all eta in [0,1]).
inline PsiValue psi0(PowerExponent alpha, IntervalParam eta) {
    return {detail::psi0_value(alpha.alpha(), eta.eta()), Branch::A};
}

/// psi1(alpha, eta) = 2 (1+eta^(alpha+1))^(1/alpha) / (1+eta)^((alpha+1)/alpha),
/// the branch eta >= eta1.
inline PsiValue psi1(PowerExponent alpha, IntervalParam eta) {
    return {detail::psi1_value(alpha.alpha(), eta.eta()), Branch::B};
}

/// Piecewise psi: psi0 for eta <= eta1, psi1 for eta >= eta1. `eta1` must be
/// the root produced by the eta1 solver; the two branches are required to
/// agree there to 1e-8 relative, otherwise the argument is rejected.
inline PsiValue psi(PowerExponent alpha, IntervalParam eta, double eta1) {
    if (!(eta1 > 0.0) || !(eta1 < 1.0))
        throw std::invalid_argument("psi: eta1 must lie in (0,1)");
    const double at_a = detail::psi0_value(alpha.alpha(), eta1);
    const double at_b = detail::psi1_value(alpha.alpha(), eta1);
    if (std::fabs(at_a - at_b) > 1e-8 * std::fabs(at_a))
        throw std::invalid_argument("psi: branches disagree at eta1; wrong eta1 argument");
    if (eta.eta() <= eta1) return psi0(alpha, eta);
    return psi1(alpha, eta);
}

/// Partial derivative of psi0 with respect to eta. Rejects eta = 0 for
/// alpha < 0, where the one-sided derivative is +infinity.
inline double dpsi0_deta(PowerExponent alpha, IntervalParam eta) {
    if (alpha.alpha() < 0.0 && eta.eta() == 0.0)
        throw std::domain_error("dpsi0_deta: derivative diverges at eta=0 for alpha<0");
    return detail::dpsi0_value(alpha.alpha(), eta.eta());
}

}  // namespace gr
