#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cplxinfo/asymptotics.hpp"
#include "cplxinfo/entropy.hpp"

using namespace cplxinfo;
using doctest::Approx;

TEST_CASE("gaussian stationary-phase value") {
    const double root4_2pi = std::pow(2.0 * std::numbers::pi, 0.25);

    SUBCASE("sigma = 1e-4, beta = 1") {
        const auto r = gaussian_ce_asymptotic(1e-4, 1.0);
        CHECK(r.value == Approx(root4_2pi * std::sqrt(1e-4)).epsilon(1e-14));
        CHECK(std::abs(r.value - 0.0158324) < 1e-6);
        CHECK(r.regime_ok);
        CHECK(r.lambda == Approx(1.0 / (std::sqrt(2.0 * std::numbers::pi) * 1e-4)).epsilon(1e-14));
    }
    SUBCASE("sigma = beta gives the bare constant") {
        const auto r = gaussian_ce_asymptotic(0.25, 0.25);
        CHECK(r.value == Approx(root4_2pi).epsilon(1e-14));
        CHECK(std::abs(r.value - 1.58324) < 1e-4);
    }
    SUBCASE("sigma = 0.01, beta = 10") {
        const auto r = gaussian_ce_asymptotic(0.01, 10.0);
        CHECK(std::abs(r.value - 0.0500664) < 1e-6);
        CHECK(r.regime_ok); // lambda*beta ~ 399
    }
    SUBCASE("regime flag off when the peak phase is shallow") {
        CHECK(!gaussian_ce_asymptotic(1.0, 1.0).regime_ok);
        CHECK(gaussian_ce_asymptotic(0.001, 1.0).regime_ok);
    }
    SUBCASE("value depends on sigma/beta only") {
        Rng rng(53);
        for (int i = 0; i < 50; ++i) {
            const double sigma = rng.uniform(1e-5, 2.0);
            const double beta = rng.uniform(0.01, 20.0);
            const double k = rng.uniform(0.1, 10.0);
            const double a = gaussian_ce_asymptotic(sigma, beta).value;
            const double b = gaussian_ce_asymptotic(k * sigma, k * beta).value;
            CHECK(a == Approx(b).epsilon(1e-12));
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(gaussian_ce_asymptotic(0.0, 1.0), ValidationError);
        CHECK_THROWS_AS(gaussian_ce_asymptotic(1.0, 0.0), ValidationError);
        CHECK_THROWS_AS(gaussian_ce_asymptotic(-1.0, 1.0), ValidationError);
    }
}

TEST_CASE("quadrature approaches the asymptotic value as sigma shrinks") {
    const double rel_coarse = [] {
        const auto a = gaussian_ce_asymptotic(1e-3, 1.0);
        return std::abs(ce_quadrature(Density(Normal{0, 1e-3}), 1.0).value - a.value) / a.value;
    }();
    const double rel_fine = [] {
        const auto a = gaussian_ce_asymptotic(1e-4, 1.0);
        return std::abs(ce_quadrature(Density(Normal{0, 1e-4}), 1.0).value - a.value) / a.value;
    }();
    CHECK(rel_coarse < 0.20);
    CHECK(rel_fine < 0.05);
    CHECK(rel_fine < rel_coarse);
}
