#include "bohm/validate.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include "bohm/analysis.hpp"
#include "bohm/dynamics.hpp"
#include "bohm/errors.hpp"
#include "bohm/fields.hpp"

namespace bohm::validate {

namespace {

using fields::FieldModel;
using fields::Point2;
using susy::DeformationParam;
using susy::kPi;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

CheckResult bound(std::string name, double measured, double limit) {
    return {std::move(name), measured <= limit, "measured " + num(measured) + ", limit " + num(limit)};
}

// Composite Simpson on [a, b] with n (even) panels.
template <class F>
double simpson(F f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += (i % 2 ? 4.0 : 2.0) * f(a + i * h);
    return s * h / 3.0;
}

std::vector<FieldModel> sample_models() {
    return {
        FieldModel::harmonic({2.03, 1.97}),
        FieldModel::isospectral({0.7, 1.3, DeformationParam(20.0), DeformationParam(2.0)}),
        FieldModel::square_well({-3.0, -2.5}),
        FieldModel::harmonic_limit({1.015, 0.985}),
        FieldModel::square_well_limit({1.0, 1.2}),
    };
}

Point2 random_point(const FieldModel& m, std::mt19937_64& rng) {
    if (m.is_well()) {
        std::uniform_real_distribution<double> u(0.2, kPi - 0.2);
        return {u(rng), u(rng)};
    }
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    return {u(rng), u(rng)};
}

CheckResult check_cumulative() {
    double worst = 0.0;
    bool monotone = true;
    double prev = 0.0;
    // 1 - I(x) drops below one ulp of 1.0 near x = 5.9, where I saturates.
    for (double x = -5.5; x <= 5.5; x += 0.01) {
        const double v = susy::gaussian_cumulative(x);
        monotone = monotone && v > prev && v < 1.0;
        prev = v;
    }
    for (double x : {-3.0, -1.0, 0.0, 0.5, 1.0, 2.5}) {
        const double q = simpson([](double u) { return std::exp(-u * u) / std::sqrt(kPi); }, -12.0, x, 20000);
        worst = std::max(worst, std::abs(q - susy::gaussian_cumulative(x)));
    }
    CheckResult r = bound("susy.gaussian_cumulative", worst, 1e-12);
    r.passed = r.passed && monotone;
    return r;
}

CheckResult check_phi_cross(const ValidationHooks& hooks) {
    const auto ground = susy::oscillator_ground();
    const auto first = susy::oscillator_first();
    double worst = 0.0;
    for (double l : {1.0, 2.0, 20.0}) {
        const DeformationParam lam(l);
        for (double x = -5.0; x <= 5.0; x += 0.05) {
            const double ratio = susy::isospectral_excited(first, ground, lam, x) /
                                 (std::sqrt(2.0) * susy::isospectral_ground(x, lam));
            worst = std::max(worst, std::abs(ratio - hooks.phi_hat(x, lam)));
        }
    }
    return bound("susy.phi_hat_matches_excited_over_ground", worst, 1e-8);
}

CheckResult check_normalization() {
    double worst = 0.0;
    for (double l : {1.0, 5.0, 20.0, -1.5}) {
        const DeformationParam lam(l);
        const double n = simpson([&](double x) { return std::pow(susy::isospectral_ground(x, lam), 2); }, -12, 12, 4000);
        worst = std::max(worst, std::abs(n - 1.0));
    }
    return bound("susy.ground_normalization", worst, 1e-8);
}

CheckResult check_schrodinger() {
    const double h = 1e-3;
    double worst = 0.0;
    for (double l : {1.0, 5.0, 20.0}) {
        const DeformationParam lam(l);
        auto f = [&](double x) { return susy::isospectral_ground(x, lam); };
        for (double x = -6.0; x <= 6.0; x += 0.01) {
            const double d2 = (-f(x + 2 * h) + 16 * f(x + h) - 30 * f(x) + 16 * f(x - h) - f(x - 2 * h)) / (12 * h * h);
            worst = std::max(worst, std::abs(-0.5 * d2 + susy::deformed_potential(x, lam) * f(x) - 0.5 * f(x)));
        }
    }
    return bound("susy.schrodinger_residual", worst, 1e-4);
}

CheckResult check_isospectral_limit() {
    const DeformationParam lam(1e8);
    double worst = 0.0;
    for (double x = -4.0; x <= 4.0; x += 0.01) {
        worst = std::max({worst, std::abs(susy::phi_hat(x, lam) - x),
                          std::abs(susy::deformed_potential(x, lam) - 0.5 * x * x)});
    }
    return bound("susy.large_lambda_limit", worst, 1e-6);
}

CheckResult check_negative_branch() {
    const DeformationParam lam(-1.5);
    bool finite = true;
    const auto ground = susy::oscillator_ground();
    const auto first = susy::oscillator_first();
    for (double x = -4.0; x <= 4.0; x += 0.05) {
        finite = finite && std::isfinite(susy::phi_hat(x, lam)) && std::isfinite(susy::deformed_potential(x, lam)) &&
                 std::isfinite(susy::isospectral_ground(x, lam)) &&
                 std::isfinite(susy::isospectral_excited(first, ground, lam, x));
    }
    return {"susy.negative_branch_finite", finite, {}};
}

CheckResult check_divergence_symmetric() {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> a(-3.0, 3.0);
    std::uniform_real_distribution<double> t(0.0, 100.0);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const double amp = a(rng);
        if (amp == 0.0) continue;
        const auto m = FieldModel::harmonic({amp, amp});
        try {
            worst = std::max(worst, std::abs(fields::divergence(m, {a(rng), a(rng)}, t(rng))));
        } catch (const SingularityEncountered&) {
        }
    }
    return bound("fields.divergence_vanishes_for_equal_amplitudes", worst, 1e-14);
}

CheckResult check_divergence_fd() {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> t(0.0, 20.0);
    const double h = 1e-6;
    double worst = 0.0;
    for (const auto& m : sample_models()) {
        for (int i = 0; i < 50; ++i) {
            const Point2 p = random_point(m, rng);
            const double tt = t(rng);
            try {
                const double fd = (fields::velocity(m, {p.x + h, p.y}, tt).vx - fields::velocity(m, {p.x - h, p.y}, tt).vx +
                                   fields::velocity(m, {p.x, p.y + h}, tt).vy - fields::velocity(m, {p.x, p.y - h}, tt).vy) /
                                  (2 * h);
                const double an = fields::divergence(m, p, tt);
                worst = std::max(worst, std::abs(fd - an) / std::max(1.0, std::abs(an)));
            } catch (const Error&) {
            }
        }
    }
    return bound("fields.divergence_matches_finite_difference", worst, 1e-6);
}

CheckResult check_hamiltonian() {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    double worst = 0.0;
    for (double a : {0.5, 1.0, 2.0}) {
        const auto m = FieldModel::harmonic({a, a});
        for (int i = 0; i < 100; ++i) {
            const Point2 p{u(rng), u(rng)};
            const double t = 10.0 * u(rng);
            try {
                const auto v = fields::velocity(m, p, t);
                const auto g = fields::stream_function_H_gradient(a, p, t);
                worst = std::max({worst, std::abs(v.vx + g.dy), std::abs(v.vy - g.dx)});
            } catch (const SingularityEncountered&) {
            }
        }
    }
    return bound("fields.hamiltonian_structure", worst, 1e-10);
}

CheckResult check_circle_identity() {
    std::mt19937_64 rng(14);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const auto m = FieldModel::harmonic_limit({1.015, 0.985});
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
        const Point2 p{u(rng), u(rng)};
        const auto v = fields::velocity(m, p, 0.0);
        worst = std::max(worst, std::abs(2 * p.x * v.vx + 2 * p.y * v.vy));
    }
    return bound("fields.limit_field_preserves_radius", worst, 1e-14);
}

CheckResult check_zero_amplitude_axes() {
    std::mt19937_64 rng(15);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    const auto mx = FieldModel::harmonic({0.0, 1.3});
    const auto my = FieldModel::harmonic({1.3, 0.0});
    const auto ix = FieldModel::isospectral({0.0, 1.3, DeformationParam(5.0), DeformationParam(5.0)});
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        const Point2 p{u(rng), u(rng)};
        const double t = 5.0 * u(rng);
        try {
            worst = std::max({worst, std::abs(fields::velocity(mx, p, t).vx), std::abs(fields::velocity(my, p, t).vy),
                              std::abs(fields::velocity(ix, p, t).vx)});
        } catch (const SingularityEncountered&) {
        }
    }
    return {"fields.vanishing_amplitude_freezes_axis", worst == 0.0, "measured " + num(worst)};
}

CheckResult check_isospectral_convergence() {
    const auto harm = FieldModel::harmonic({1.2, 0.8});
    double prev = HUGE_VAL;
    bool decreasing = true;
    std::string detail;
    for (int k = 2; k <= 8; ++k) {
        const DeformationParam l(std::pow(10.0, k));
        const auto iso = FieldModel::isospectral({1.2, 0.8, l, l});
        double sup = 0.0;
        for (double x = -3.0; x <= 3.0; x += 0.5) {
            for (double y = -3.0; y <= 3.0; y += 0.5) {
                const auto a = fields::velocity(iso, {x, y}, 0.3);
                const auto b = fields::velocity(harm, {x, y}, 0.3);
                sup = std::max({sup, std::abs(a.vx - b.vx), std::abs(a.vy - b.vy)});
            }
        }
        decreasing = decreasing && sup < prev;
        prev = sup;
        detail = "sup at 1e8 = " + num(sup);
    }
    return {"fields.isospectral_converges_to_harmonic", decreasing && prev <= 1e-6, detail};
}

CheckResult check_well_tangent() {
    const auto m = FieldModel::square_well({-2.0, -2.0});
    double worst = 0.0;
    for (double z : {0.0, kPi}) {
        worst = std::max({worst, std::abs(m.jet(fields::Axis::x, z).d1), std::abs(m.jet(fields::Axis::y, z).d1)});
    }
    return bound("fields.well_field_tangent_to_walls", worst, 1e-15);
}

Point2 run_steps(const FieldModel& m, Point2 p, double t0, double dt, int n) {
    for (int i = 0; i < n; ++i) p = dynamics::rk4_step(m, p, t0 + i * dt, dt);
    return p;
}

CheckResult check_rk4_order() {
    const auto m = FieldModel::harmonic({1.1, 0.9});
    const Point2 p0{2.0, 0.0};
    const Point2 ref = run_steps(m, p0, 0.0, 1e-4, 100000);
    auto err = [&](double dt, int n) {
        const Point2 p = run_steps(m, p0, 0.0, dt, n);
        return std::hypot(p.x - ref.x, p.y - ref.y);
    };
    const double ratio = err(0.02, 500) / err(0.01, 1000);
    return {"dynamics.rk4_convergence_order", ratio >= 12.0 && ratio <= 20.0, "ratio " + num(ratio)};
}

CheckResult check_time_reversal() {
    const auto m = FieldModel::harmonic({1.0, 1.0});
    const Point2 p0{2.0, 0.0};
    const double dt = 1e-3;
    Point2 p = run_steps(m, p0, 0.0, dt, 10000);
    for (int i = 10000; i > 0; --i) p = dynamics::rk4_step(m, p, i * dt, -dt);
    return bound("dynamics.time_reversal", std::hypot(p.x - p0.x, p.y - p0.y), 1e-8);
}

CheckResult check_strobe_alignment() {
    const auto m = FieldModel::harmonic({1.0, 1.0});
    dynamics::IntegratorConfig cfg;
    cfg.dt_requested = 1e-3;
    cfg.t_end = 100.0;
    cfg.strobe_align = true;
    const auto plan = dynamics::plan_steps(m, cfg);
    double worst = 0.0;
    for (std::int64_t k = 1; k * plan.steps_per_period <= plan.steps; ++k) {
        const double t = plan.time_at(k * plan.steps_per_period);
        worst = std::max(worst, std::abs(t - k * m.strobe_period()) / (k + 1.0));
    }
    const bool n_ok = plan.steps_per_period == 6283;
    CheckResult r = bound("dynamics.strobe_alignment", worst, 1e-9);
    r.passed = r.passed && n_ok;
    return r;
}

CheckResult check_determinism() {
    const auto m = FieldModel::isospectral({0.5, 0.5, DeformationParam(20.0), DeformationParam(20.0)});
    dynamics::IntegratorConfig cfg;
    cfg.t_end = 20.0;
    cfg.stride = 7;
    const auto a = dynamics::integrate(m, {1.0, 0.5}, cfg);
    const auto b = dynamics::integrate(m, {1.0, 0.5}, cfg);
    bool same = a.samples.size() == b.samples.size();
    for (std::size_t i = 0; same && i < a.samples.size(); ++i) {
        same = a.samples[i].t == b.samples[i].t && a.samples[i].p == b.samples[i].p;
    }
    return {"dynamics.deterministic", same, {}};
}

CheckResult check_c_conservation() {
    const auto m = FieldModel::harmonic({1.0, 1.0});
    dynamics::IntegratorConfig cfg;
    cfg.t_end = 200.0;
    cfg.stride = 100;
    const auto rec = dynamics::integrate(m, {2.0, 0.0}, cfg);
    const double drift = analysis::invariant_drift(m, analysis::Probe::C, rec);
    CheckResult r = bound("dynamics.integral_of_motion_conserved", drift, 1e-6);
    r.passed = r.passed && rec.termination == dynamics::Termination::completed;
    return r;
}

CheckResult check_delta_conservation() {
    const auto m = FieldModel::square_well_limit({1.0, 1.0});
    const auto map = analysis::stroboscopic_map(m, {kPi / 2, 1.0}, 1000.0, 1e-3);
    const double d0 = std::sin(1.0);
    double worst = 0.0;
    for (const auto& p : map.points) worst = std::max(worst, std::abs(fields::well_invariant_delta(p) - d0));
    CheckResult r = bound("analysis.well_limit_strobe_on_delta_curve", worst, 1e-8);
    r.passed = r.passed && map.termination == dynamics::Termination::completed;
    return r;
}

CheckResult check_circle_strobe() {
    const auto m = FieldModel::harmonic_limit({1.015, 0.985});
    const double t_end = 2000.0;
    const auto map = analysis::stroboscopic_map(m, {1.0, 0.0}, t_end, 1e-3);
    double worst = 0.0;
    for (const auto& p : map.points) worst = std::max(worst, std::abs(p.x * p.x + p.y * p.y - 1.0));
    const bool count_ok = static_cast<std::int64_t>(map.points.size()) ==
                          static_cast<std::int64_t>(std::floor(t_end / (2 * kPi)));
    CheckResult r = bound("analysis.circle_strobe_and_count", worst, 1e-6);
    r.passed = r.passed && count_ok;
    return r;
}

CheckResult check_divergence_average() {
    const auto m = FieldModel::harmonic({1.0, 1.0});
    const auto avg = analysis::divergence_time_average(m, {2.0, 0.0}, 100.0, 1e-3);
    return bound("analysis.divergence_average_symmetric", std::abs(avg.value), 1e-12);
}

CheckResult check_lyapunov_discrimination() {
    const double t_end = 3000.0;
    const auto chaotic =
        analysis::lyapunov_benettin(FieldModel::harmonic({2.03, 1.97}), {1.98, 0.0}, t_end, 1e-3);
    const auto regular = analysis::lyapunov_benettin(FieldModel::harmonic({1.0, 1.0}), {1.98, 0.0}, t_end, 1e-3);
    const bool ok = chaotic.reliable && regular.reliable && chaotic.lambda_max > 5.0 * regular.lambda_max;
    return {"analysis.lyapunov_separates_chaotic_from_integrable", ok,
            "chaotic " + num(chaotic.lambda_max) + ", integrable " + num(regular.lambda_max)};
}

}  // namespace

std::vector<CheckResult> run_validation(const ValidationHooks& hooks) {
    using Check = std::function<CheckResult()>;
    const std::vector<Check> checks = {
        check_cumulative,
        [&] { return check_phi_cross(hooks); },
        check_normalization,
        check_schrodinger,
        check_isospectral_limit,
        check_negative_branch,
        check_divergence_symmetric,
        check_divergence_fd,
        check_hamiltonian,
        check_circle_identity,
        check_zero_amplitude_axes,
        check_isospectral_convergence,
        check_well_tangent,
        check_rk4_order,
        check_time_reversal,
        check_strobe_alignment,
        check_determinism,
        check_c_conservation,
        check_delta_conservation,
        check_circle_strobe,
        check_divergence_average,
        check_lyapunov_discrimination,
    };
    std::vector<CheckResult> results;
    results.reserve(checks.size());
    for (const auto& c : checks) {
        try {
            results.push_back(c());
        } catch (const std::exception& e) {
            results.push_back({"(check threw)", false, e.what()});
        }
    }
    return results;
}

}  // namespace bohm::validate
