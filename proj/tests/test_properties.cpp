#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "gr/solvers.hpp"

using namespace gr;

namespace {

// 20 alpha values over (-1,0) and (0,10].
std::vector<double> alpha_grid() {
    std::vector<double> as;
    for (int i = 0; i < 10; ++i) as.push_back(-0.95 + 0.1 * i);
    for (int i = 0; i < 10; ++i) as.push_back(0.05 + 1.05 * i);
    return as;
}

}  // namespace

TEST_CASE("psi branches join continuously at eta1", "[properties]") {
    for (double alpha : alpha_grid()) {
        const PowerExponent a(alpha);
        const double eta1 = solve_eta1(a).root;
        const double p0 = psi0(a, IntervalParam(eta1)).value;
        const double p1 = psi1(a, IntervalParam(eta1)).value;
        INFO("alpha=" << alpha << " eta1=" << eta1);
        CHECK(std::fabs(p0 - p1) <= 1e-10 * p0);
    }
}

TEST_CASE("psi normalization at the interval ends", "[properties]") {
    constexpr double two_ulp = 2.0 * std::numeric_limits<double>::epsilon();
    for (double alpha : alpha_grid()) {
        const PowerExponent a(alpha);
        CHECK(std::fabs(psi0(a, IntervalParam(0)).value - 1.0) <= two_ulp);
        CHECK(std::fabs(psi1(a, IntervalParam(1)).value - 1.0) <= two_ulp);
    }
}

TEST_CASE("psi is invariant under the exponent map alpha -> -alpha/(alpha+1)",
          "[properties]") {
    for (double alpha : alpha_grid()) {
        const PowerExponent a(alpha);
        const double beta = -alpha / (alpha + 1.0);
        const PowerExponent b(beta);
        const double eta1_a = solve_eta1(a).root;
        const double eta1_b = solve_eta1(b).root;
        for (int j = 0; j < 20; ++j) {
            const double eta = static_cast<double>(j) / 19.0;
            const double lhs = psi(b, IntervalParam(std::pow(eta, alpha + 1.0)), eta1_b).value;
            const double rhs = psi(a, IntervalParam(eta), eta1_a).value;
            INFO("alpha=" << alpha << " eta=" << eta);
            CHECK(std::fabs(lhs - rhs) <= 1e-10 * rhs);
        }
    }
}

TEST_CASE("psi1 decreases strictly on [eta1, 1]", "[properties]") {
    for (double alpha : {-0.8696, -0.5, 0.5, 1.0, 6.6667}) {
        const PowerExponent a(alpha);
        const double eta1 = solve_eta1(a).root;
        double prev = psi1(a, IntervalParam(eta1)).value;
        for (int i = 1; i < 100; ++i) {
            const double eta = eta1 + (1.0 - eta1) * i / 99.0;
            const double v = psi1(a, IntervalParam(eta)).value;
            INFO("alpha=" << alpha << " eta=" << eta);
            CHECK(v < prev);
            prev = v;
        }
    }
}

TEST_CASE("dpsi0_deta agrees with central finite differences", "[properties]") {
    const double h = 1e-6;
    for (double alpha : {-0.5, 0.5, 1.0, 2.0}) {
        const PowerExponent a(alpha);
        for (int i = 1; i <= 50; ++i) {
            const double eta = static_cast<double>(i) / 51.0;
            const double fd = (psi0(a, IntervalParam(eta + h)).value -
                               psi0(a, IntervalParam(eta - h)).value) /
                              (2.0 * h);
            INFO("alpha=" << alpha << " eta=" << eta);
            CHECK(std::fabs(dpsi0_deta(a, IntervalParam(eta)) - fd) <= 1e-5);
        }
    }
}

TEST_CASE("derivative sign structure", "[properties]") {
    for (double alpha : {0.5, 1.0, 2.0, 6.6667}) {
        const PowerExponent a(alpha);
        CHECK(dpsi0_deta(a, IntervalParam(0)) > 0.0);
        CHECK(dpsi0_deta(a, IntervalParam(solve_eta1(a).root)) < 0.0);
    }
    for (double alpha : {-0.8696, -0.5, -0.1667}) {
        const PowerExponent a(alpha);
        CHECK(dpsi0_deta(a, IntervalParam(solve_eta1(a).root)) < 0.0);
    }
}

TEST_CASE("relative oscillation never exceeds 2", "[properties]") {
    for (double alpha : alpha_grid()) {
        const PowerExponent a(alpha);
        for (int j = 0; j <= 20; ++j) {
            const double eta = static_cast<double>(j) / 20.0;
            const OscillationStats s = relative_oscillation_power(a, IntervalParam(eta));
            INFO("alpha=" << alpha << " eta=" << eta);
            CHECK(s.relative >= 0.0);
            CHECK(s.relative <= 2.0);
        }
    }
}

TEST_CASE("half-line norm identity for matched exponent pairs", "[properties]") {
    for (double p : {1.5, 2.0, 3.0, 11.0}) {
        const SummabilityExponent se(p);
        const double a = norm_halfline(PowerExponent(se.alpha_plus()));
        const double b = norm_halfline(PowerExponent(se.alpha_minus()));
        const double direct = 2.0 * std::pow(p - 1.0, p - 1.0) / std::pow(p, p);
        CHECK(std::fabs(a - direct) <= 1e-12 * direct);
        CHECK(std::fabs(b - direct) <= 1e-12 * direct);
    }
}

TEST_CASE("matched exponent pairs share maxima and map their maximizers",
          "[properties]") {
    for (double p : {1.5, 2.0, 3.0, 6.0}) {
        const SummabilityExponent se(p);
        const NormReport plus = norm_realline(PowerExponent(se.alpha_plus()));
        const NormReport minus = norm_realline(PowerExponent(se.alpha_minus()));
        INFO("p=" << p);
        CHECK(std::fabs(plus.ratio - minus.ratio) <= 1e-9 * plus.ratio);
        CHECK(std::fabs(minus.eta_max - std::pow(plus.eta_max, p / (p - 1.0))) <= 1e-8);
    }
}
