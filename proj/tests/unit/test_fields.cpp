#include <cmath>
#include <complex>

#include "bohm/errors.hpp"
#include "bohm/fields.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using namespace bohm::fields;
using bohm::susy::DeformationParam;

namespace {

constexpr double kPi = oracle::kPi;

double fd_divergence(const FieldModel& m, Point2 p, double t, double h = 1e-6) {
    return (velocity(m, {p.x + h, p.y}, t).vx - velocity(m, {p.x - h, p.y}, t).vx + velocity(m, {p.x, p.y + h}, t).vy -
            velocity(m, {p.x, p.y - h}, t).vy) /
           (2.0 * h);
}

Point2 draw(std::mt19937_64& g, const FieldModel& m) {
    if (m.is_well()) {
        std::uniform_real_distribution<double> u(0.1, kPi - 0.1);
        return {u(g), u(g)};
    }
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    return {u(g), u(g)};
}

std::vector<FieldModel> all_models() {
    return {
        FieldModel::harmonic({2.03, 1.97}),
        FieldModel::harmonic({1.0, 1.0}),
        FieldModel::isospectral({0.5, 0.5, DeformationParam(20.0), DeformationParam(20.0)}),
        FieldModel::isospectral({1.3, -0.4, DeformationParam(1.0), DeformationParam(-1.5)}),
        FieldModel::square_well({-10.0, -10.0}),
        FieldModel::square_well({2.0, 0.7}),
        FieldModel::harmonic_limit({1.015, 0.985}),
        FieldModel::square_well_limit({1.0, 1.0}),
    };
}

}  // namespace

TEST_CASE("model construction") {
    CHECK_THROWS_AS(FieldModel::harmonic({0.0, 0.0}), bohm::ConfigError);
    CHECK_THROWS_AS(FieldModel::square_well({0.0, 0.0}), bohm::ConfigError);
    CHECK_THROWS_AS(FieldModel::harmonic_limit({0.0, 1.0}), bohm::ConfigError);
    CHECK_THROWS_AS(FieldModel::harmonic({NAN, 1.0}), bohm::ConfigError);
    CHECK_NOTHROW(FieldModel::harmonic({1.0, 0.0}));

    CHECK(FieldModel::harmonic({1, 1}).strobe_period() == doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(FieldModel::isospectral({1, 1, DeformationParam(2), DeformationParam(3)}).strobe_period() ==
          doctest::Approx(2 * kPi).epsilon(1e-15));
    CHECK(FieldModel::square_well({1, 1}).strobe_period() == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
    CHECK(FieldModel::square_well_limit({1, 1}).strobe_period() == doctest::Approx(4 * kPi / 3).epsilon(1e-15));
}

TEST_CASE("velocity examples") {
    const auto v = velocity(FieldModel::harmonic({1.0, 1.0}), {0.0, 0.0}, 0.0);
    CHECK(v.vx == 0.0);
    CHECK(v.vy == 1.0);

    const auto w = velocity(FieldModel::harmonic({2.03, 1.97}), {1.98, 0.0}, 0.0);
    CHECK(w.vx == 0.0);
    CHECK(w.vy == doctest::Approx(0.392477188508586683667370602064).epsilon(1e-14));
}

TEST_CASE("large deformation reproduces the harmonic field") {
    const DeformationParam big(1e8);
    auto g = oracle::rng(3);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    for (int i = 0; i < 200; ++i) {
        const double a0 = u(g);
        const double a1 = u(g);
        const Point2 p{u(g), u(g)};
        const double t = 10 * u(g);
        try {
            const auto h = velocity(FieldModel::harmonic({a0, a1}), p, t);
            const auto s = velocity(FieldModel::isospectral({a0, a1, big, big}), p, t);
            const double scale = std::max(1.0, std::hypot(h.vx, h.vy));
            CHECK(std::abs(h.vx - s.vx) <= 1e-6 * scale);
            CHECK(std::abs(h.vy - s.vy) <= 1e-6 * scale);
        } catch (const bohm::SingularityEncountered&) {
        }
    }
}

TEST_CASE("isospectral field converges monotonically as lambda = mu grows") {
    const auto harm = FieldModel::harmonic({0.9, 1.1});
    double prev = INFINITY;
    for (int k = 2; k <= 8; ++k) {
        const DeformationParam l(std::pow(10.0, k));
        const auto iso = FieldModel::isospectral({0.9, 1.1, l, l});
        double sup = 0.0;
        for (double x = -3.0; x <= 3.0; x += 0.25) {
            for (double y = -3.0; y <= 3.0; y += 0.25) {
                const auto a = velocity(iso, {x, y}, 1.1);
                const auto b = velocity(harm, {x, y}, 1.1);
                sup = std::max({sup, std::abs(a.vx - b.vx), std::abs(a.vy - b.vy)});
            }
        }
        CAPTURE(k);
        CHECK(sup < prev);
        prev = sup;
    }
}

TEST_CASE("divergence") {
    SUBCASE("equal amplitudes give a volume-preserving field") {
        auto g = oracle::rng(5);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        double worst_equal = 0.0;
        double worst_unequal = 0.0;
        const auto eq = FieldModel::harmonic({1.7, 1.7});
        const auto ne = FieldModel::harmonic({2.03, 1.97});
        for (int i = 0; i < 1000; ++i) {
            const Point2 p{u(g), u(g)};
            const double t = 20 * u(g);
            try {
                worst_equal = std::max(worst_equal, std::abs(divergence(eq, p, t)));
                worst_unequal = std::max(worst_unequal, std::abs(divergence(ne, p, t)));
            } catch (const bohm::SingularityEncountered&) {
            }
        }
        CHECK(worst_equal == 0.0);
        CHECK(worst_unequal > 0.0);
    }

    SUBCASE("closed form for the harmonic model") {
        const double a0 = 2.03, a1 = 1.97, t = 0.7;
        const Point2 p{1.0, 1.0};
        const double P = std::cos(t) + a0 * p.x;
        const double Q = std::sin(t) + a1 * p.y;
        const double M = P * P + Q * Q;
        const double expected = 2 * (a0 * a0 - a1 * a1) * Q * P / (M * M);
        const double got = divergence(FieldModel::harmonic({a0, a1}), p, t);
        CHECK(got == doctest::Approx(expected).epsilon(1e-14));
        CHECK(std::abs(fd_divergence(FieldModel::harmonic({a0, a1}), p, t) - got) <= 1e-6 * std::abs(got));
    }

    SUBCASE("matches finite differences for every model") {
        auto g = oracle::rng(6);
        std::uniform_real_distribution<double> ut(0.0, 30.0);
        for (const auto& m : all_models()) {
            int checked = 0;
            for (int i = 0; i < 200; ++i) {
                const Point2 p = draw(g, m);
                const double t = ut(g);
                try {
                    const double an = divergence(m, p, t);
                    const double fd = fd_divergence(m, p, t);
                    CAPTURE(to_string(m.kind()));
                    CAPTURE(p.x);
                    CAPTURE(p.y);
                    CHECK(std::abs(an - fd) <= 1e-6 * std::max(1.0, std::abs(an)));
                    ++checked;
                } catch (const bohm::SingularityEncountered&) {
                }
            }
            CHECK(checked > 150);
        }
    }
}

TEST_CASE("vanishing amplitude freezes its axis") {
    auto g = oracle::rng(7);
    std::uniform_real_distribution<double> ut(0.0, 30.0);
    const std::vector<std::pair<FieldModel, FieldModel>> pairs = {
        {FieldModel::harmonic({0.0, 1.2}), FieldModel::harmonic({1.2, 0.0})},
        {FieldModel::isospectral({0.0, 1.2, DeformationParam(3), DeformationParam(4)}),
         FieldModel::isospectral({1.2, 0.0, DeformationParam(3), DeformationParam(4)})},
        {FieldModel::square_well({0.0, -3.0}), FieldModel::square_well({-3.0, 0.0})},
    };
    for (const auto& [no_x, no_y] : pairs) {
        for (int i = 0; i < 300; ++i) {
            const Point2 p = draw(g, no_x);
            const double t = ut(g);
            try {
                REQUIRE(velocity(no_x, p, t).vx == 0.0);
                REQUIRE(velocity(no_y, p, t).vy == 0.0);
            } catch (const bohm::SingularityEncountered&) {
            }
        }
    }
}

TEST_CASE("limit forms") {
    auto g = oracle::rng(8);
    std::uniform_real_distribution<double> u(-3.0, 3.0);

    SUBCASE("harmonic limit is tangent to circles") {
        const auto m = FieldModel::harmonic_limit({1.015, 0.985});
        for (int i = 0; i < 1000; ++i) {
            const Point2 p{u(g), u(g)};
            const auto v = velocity(m, p, u(g));
            REQUIRE(std::abs(2 * p.x * v.vx + 2 * p.y * v.vy) <= 1e-14);
        }
    }

    SUBCASE("well limit is tangent to sin x sin y level sets") {
        const auto m = FieldModel::square_well_limit({1.0, 1.0});
        std::uniform_real_distribution<double> w(0.05, kPi - 0.05);
        for (int i = 0; i < 1000; ++i) {
            const Point2 p{w(g), w(g)};
            try {
                const auto v = velocity(m, p, 0.0);
                const double rate = std::cos(p.x) * std::sin(p.y) * v.vx + std::sin(p.x) * std::cos(p.y) * v.vy;
                REQUIRE(std::abs(rate) <= 1e-12 * std::max(1.0, std::hypot(v.vx, v.vy)));
            } catch (const bohm::SingularityEncountered&) {
            }
        }
    }

    SUBCASE("limit equals the rescaled finite field for large A") {
        const double A = 1e6;
        const auto lim = FieldModel::harmonic_limit({1.015, 0.985});
        const auto fin = FieldModel::harmonic({1.015 * A, 0.985 * A});
        const Point2 p{0.8, -1.1};
        const auto a = velocity(lim, p, 0.4);
        const auto b = velocity(fin, p, 0.4);
        CHECK(a.vx == doctest::Approx(b.vx).epsilon(1e-5));
        CHECK(a.vy == doctest::Approx(b.vy).epsilon(1e-5));
    }
}

TEST_CASE("square well") {
    const auto m = FieldModel::square_well({-10.0, -10.0});
    SUBCASE("field is tangent to the walls") {
        for (double z : {0.0, kPi}) {
            CHECK(std::abs(m.jet(Axis::x, z).d1) < 1e-15);
            CHECK(std::abs(m.jet(Axis::y, z).d1) < 1e-15);
        }
    }
    SUBCASE("leaving the box is an error") {
        CHECK_THROWS_AS(velocity(m, {-0.01, 1.0}, 0.0), bohm::DomainEscape);
        CHECK_THROWS_AS(velocity(m, {1.0, kPi + 0.01}, 0.0), bohm::DomainEscape);
        CHECK_NOTHROW(velocity(m, {1e-6, 1.0}, 0.0));
    }
}

TEST_CASE("node proximity raises SingularityEncountered") {
    const auto m = FieldModel::harmonic({2.03, 1.97});
    CHECK_THROWS_AS(velocity(m, {-1.0 / 2.03, 0.0}, 0.0), bohm::SingularityEncountered);
    CHECK_THROWS_AS(divergence(m, {-1.0 / 2.03, 0.0}, 0.0), bohm::SingularityEncountered);
    CHECK_THROWS_AS(velocity(FieldModel::harmonic_limit({1, 1}), {0.0, 0.0}, 0.0), bohm::SingularityEncountered);
}

TEST_CASE("integral of motion C") {
    CHECK(integral_of_motion_C(1.0, {0.0, 0.0}, 0.0) == 1.0);
    CHECK(integral_of_motion_C(1.0, {2.0, 0.0}, 0.0) ==
          doctest::Approx(2.80277542266378061720950952616).epsilon(1e-15));
    CHECK_THROWS_AS(integral_of_motion_C(1.0, {-1.0, 0.0}, 0.0), bohm::SingularityEncountered);

    SUBCASE("total time derivative vanishes along the field") {
        auto g = oracle::rng(9);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (double a : {0.5, 1.0, 2.0}) {
            const auto m = FieldModel::harmonic({a, a});
            for (int i = 0; i < 100; ++i) {
                const Point2 p{u(g), u(g)};
                const double t = 5 * u(g);
                if (harmonic_denominator(a, p, t) < 1e-2) continue;
                const auto v = velocity(m, p, t);
                const double h = 1e-5;
                auto c = [&](double dx, double dy, double dt) { return integral_of_motion_C(a, {p.x + dx, p.y + dy}, t + dt); };
                const double dCdt = (c(0, 0, h) - c(0, 0, -h)) / (2 * h);
                const double dCdx = (c(h, 0, 0) - c(-h, 0, 0)) / (2 * h);
                const double dCdy = (c(0, h, 0) - c(0, -h, 0)) / (2 * h);
                const double total = dCdt + dCdx * v.vx + dCdy * v.vy;
                REQUIRE(std::abs(total) <= 1e-6 * std::max({1.0, std::abs(dCdt), std::abs(dCdx * v.vx)}));
            }
        }
    }
}

TEST_CASE("stream function H") {
    CHECK(stream_function_H(1.0, {0.0, 0.0}, 0.0) == 0.0);
    CHECK(stream_function_H(0.5, {1.0, 1.0}, kPi / 2) ==
          doctest::Approx(0.458145365937077532591763605884).epsilon(1e-15));

    SUBCASE("Hamiltonian structure against complex-step partials") {
        auto g = oracle::rng(10);
        std::uniform_real_distribution<double> u(-3.0, 3.0);
        for (double a : {0.5, 1.0, 2.0}) {
            const auto m = FieldModel::harmonic({a, a});
            for (int i = 0; i < 100; ++i) {
                const Point2 p{u(g), u(g)};
                const double t = 5 * u(g);
                Velocity v;
                try {
                    v = velocity(m, p, t);
                } catch (const bohm::SingularityEncountered&) {
                    continue;
                }
                using C = std::complex<double>;
                auto H = [&](C x, C y) {
                    const C u1 = std::cos(t) + a * x;
                    const C v1 = std::sin(t) + a * y;
                    return 0.5 * std::log(u1 * u1 + v1 * v1);
                };
                const double hx = oracle::complex_step([&](C x) { return H(x, C(p.y)); }, p.x);
                const double hy = oracle::complex_step([&](C y) { return H(C(p.x), y); }, p.y);
                const double scale = std::max(1.0, std::hypot(v.vx, v.vy));
                REQUIRE(std::abs(v.vx + hy) <= 1e-10 * scale);
                REQUIRE(std::abs(v.vy - hx) <= 1e-10 * scale);

                const auto grad = stream_function_H_gradient(a, p, t);
                REQUIRE(std::abs(v.vx + grad.dy) <= 1e-10);
                REQUIRE(std::abs(v.vy - grad.dx) <= 1e-10);
            }
        }
    }
}

TEST_CASE("well invariant Delta") {
    CHECK(well_invariant_delta({kPi / 2, kPi / 2}) == 1.0);
    CHECK(well_invariant_delta({kPi / 2, kPi / 6}) == doctest::Approx(0.5).epsilon(1e-15));
}
