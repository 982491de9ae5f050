#include <cmath>

#include "bohm/errors.hpp"
#include "bohm/susy.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace bohm::susy;

namespace {
const double kPiQuarter = std::pow(oracle::kPi, -0.25);
}

TEST_CASE("deformation parameter range") {
    CHECK_NOTHROW(DeformationParam{1e-3});
    CHECK_NOTHROW(DeformationParam{-1.5});
    CHECK_NOTHROW(DeformationParam{INFINITY});
    for (double bad : {-1.0, -0.5, 0.0, -1e-12}) {
        CHECK_THROWS_AS(DeformationParam{bad}, bohm::InvalidDeformation);
    }
    CHECK_THROWS_AS(DeformationParam{NAN}, bohm::InvalidDeformation);
}

TEST_CASE("gaussian cumulative") {
    CHECK(gaussian_cumulative(0.0) == doctest::Approx(0.5).epsilon(1e-16));
    CHECK(std::abs(gaussian_cumulative(40.0) - 1.0) <= 1e-15);
    CHECK(gaussian_cumulative(-40.0) >= 0.0);

    // frozen from (1 + erf(1)) / 2 at 30 digits, cross-checked by quadrature below
    CHECK(std::abs(gaussian_cumulative(1.0) - 0.921350396474857434670610317541) <= 1e-12);

    SUBCASE("agrees with adaptive quadrature") {
        for (double x : {-6.0, -3.3, -1.0, -0.25, 0.0, 0.7, 1.0, 2.0, 4.5}) {
            CAPTURE(x);
            CHECK(std::abs(gaussian_cumulative(x) - oracle::gaussian_cumulative(x)) <= 1e-12);
        }
    }

    SUBCASE("strictly increasing inside (0, 1) where representable") {
        double prev = 0.0;
        for (double x = -5.5; x <= 5.0; x += 1e-3) {
            const double v = gaussian_cumulative(x);
            REQUIRE(v > prev);
            REQUIRE(v < 1.0);
            prev = v;
        }
        // the upper tail flattens below one ulp of 1 and saturates
        for (double x = 5.0; x <= 40.0; x += 1e-2) {
            const double v = gaussian_cumulative(x);
            REQUIRE(v >= prev);
            REQUIRE(v <= 1.0);
            prev = v;
        }
    }
}

TEST_CASE("oscillator states carry analytic derivatives") {
    for (const auto& psi : {oscillator_ground(), oscillator_first()}) {
        for (double x = -4.0; x <= 4.0; x += 0.125) {
            const double fd = oracle::central_diff(psi.value, x, 1e-5);
            CHECK(std::abs(fd - psi.derivative(x)) <= 1e-6 * std::max(1.0, std::abs(fd)));
        }
    }
    CHECK(oscillator_ground().energy == 0.5);
    CHECK(oscillator_first().energy == 1.5);
    CHECK(oscillator_ground().value(0.0) == doctest::Approx(kPiQuarter).epsilon(1e-15));
}

TEST_CASE("isospectral ground state") {
    CHECK(std::abs(isospectral_ground(0.0, DeformationParam(1e8)) - 0.751126) <= 1e-6);
    CHECK(isospectral_ground(0.0, DeformationParam(20.0)) ==
          doctest::Approx(0.750902094945059780338982180263).epsilon(1e-14));

    for (double l : {1.0, 5.0, 20.0, -1.5, -7.0}) {
        CAPTURE(l);
        const DeformationParam lam(l);
        const double norm =
            oracle::integrate([&](double x) { return std::pow(isospectral_ground(x, lam), 2); }, -14.0, 14.0, 1e-14);
        CHECK(std::abs(norm - 1.0) <= 1e-8);
    }
}

TEST_CASE("isospectral excited state") {
    const auto g = oscillator_ground();
    const auto e = oscillator_first();

    CHECK(std::abs(isospectral_excited(e, g, DeformationParam(1e8), 1.0) - e.value(1.0)) <= 1e-6);
    CHECK(isospectral_excited(e, g, DeformationParam(20.0), 0.0) ==
          doctest::Approx(0.0146173530525176523397157943487).epsilon(1e-14));

    SUBCASE("ratio to the ground state reproduces phi_hat") {
        for (double l : {1.0, 2.0, 20.0, -1.5}) {
            const DeformationParam lam(l);
            for (double x = -5.0; x <= 5.0; x += 0.01) {
                const double ratio = isospectral_excited(e, g, lam, x) / (std::sqrt(2.0) * isospectral_ground(x, lam));
                REQUIRE(std::abs(ratio - phi_hat(x, lam)) <= 1e-8);
            }
        }
    }

    SUBCASE("node of the ground state is rejected") {
        CHECK_THROWS_AS(isospectral_excited(e, g, DeformationParam(2.0), 40.0), bohm::NodeDivision);
    }
}

TEST_CASE("phi_hat and its derivatives") {
    CHECK(std::abs(phi_hat(1.0, DeformationParam(1e8)) - 1.0) <= 1e-6);
    CHECK(phi_hat(0.0, DeformationParam(20.0)) == doctest::Approx(0.0137648163935264478828065721638).epsilon(1e-14));
    CHECK(phi_hat(0.3, DeformationParam(INFINITY)) == 0.3);

    for (double l : {1.0, 20.0, -1.5}) {
        const DeformationParam lam(l);
        auto f = [&](double x) { return phi_hat(x, lam); };
        auto fp = [&](double x) { return phi_hat_prime(x, lam); };
        for (double x = -4.0; x <= 4.0; x += 0.05) {
            CAPTURE(x);
            CHECK(std::abs(oracle::central_diff(f, x, 1e-5) - fp(x)) <= 1e-6);
            CHECK(std::abs(oracle::central_diff(fp, x, 1e-5) - phi_hat_second(x, lam)) <= 1e-6);
        }
    }
}

TEST_CASE("deformed potential") {
    CHECK(std::abs(deformed_potential(1.0, DeformationParam(1e8)) - 0.5) <= 1e-7);
    CHECK(deformed_potential(0.0, DeformationParam(1.0)) ==
          doctest::Approx(0.141471060526129187350118900776).epsilon(1e-14));

    SUBCASE("psi_hat_0 solves the deformed Schrodinger equation at E = 1/2") {
        for (double l : {1.0, 5.0, 20.0}) {
            const DeformationParam lam(l);
            auto psi = [&](double x) { return isospectral_ground(x, lam); };
            double worst = 0.0;
            for (int i = -6000; i <= 6000; ++i) {
                const double x = i * 1e-3;
                const double r = -0.5 * oracle::second_diff5(psi, x, 1e-3) + deformed_potential(x, lam) * psi(x) -
                                 0.5 * psi(x);
                worst = std::max(worst, std::abs(r));
            }
            CAPTURE(l);
            CHECK(worst <= 1e-4);
        }
    }
}

TEST_CASE("large lambda recovers the oscillator") {
    const DeformationParam lam(1e8);
    for (double x = -4.0; x <= 4.0; x += 0.01) {
        REQUIRE(std::abs(phi_hat(x, lam) - x) < 1e-6);
        REQUIRE(std::abs(deformed_potential(x, lam) - 0.5 * x * x) < 1e-6);
    }
}

TEST_CASE("negative branch stays finite") {
    const DeformationParam lam(-1.5);
    const auto g = oscillator_ground();
    const auto e = oscillator_first();
    for (double x = -4.0; x <= 4.0; x += 0.01) {
        REQUIRE(std::isfinite(phi_hat(x, lam)));
        REQUIRE(std::isfinite(phi_hat_prime(x, lam)));
        REQUIRE(std::isfinite(deformed_potential(x, lam)));
        REQUIRE(std::isfinite(isospectral_ground(x, lam)));
        REQUIRE(std::isfinite(isospectral_excited(e, g, lam, x)));
    }
}
