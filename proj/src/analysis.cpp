#include "bohm/analysis.hpp"

#include <algorithm>
#include <cmath>

namespace bohm::analysis {

using dynamics::IntegratorConfig;
using dynamics::StepPlan;

namespace {

StepPlan uniform_plan(double t_end, double dt) {
    IntegratorConfig cfg;
    cfg.dt_requested = dt;
    cfg.t_end = t_end;
    cfg.validate();
    return {dt, dynamics::whole_steps(t_end, dt), 0};
}

bool harmonic_symmetric(const FieldModel& m) {
    return m.kind() == fields::FieldKind::harmonic && m.a0() == m.a1();
}

}  // namespace

StrobeMap stroboscopic_map(const FieldModel& model, Point2 p0, double t_end, double dt, double max_speed) {
    IntegratorConfig cfg;
    cfg.dt_requested = dt;
    cfg.t_end = t_end;
    cfg.strobe_align = true;
    cfg.max_speed = max_speed;
    const StepPlan plan = dynamics::plan_steps(model, cfg);
    if (t_end < model.strobe_period()) throw ConfigError("t_end shorter than one strobe period");

    StrobeMap map{{}, model.strobe_period(), model, 0, plan.dt, Termination::completed, {}};
    map.expected_count = plan.steps / plan.steps_per_period;
    map.points.reserve(static_cast<std::size_t>(map.expected_count));
    const auto res = dynamics::integrate_stream(model, p0, plan, max_speed, [&](std::int64_t i, double, Point2 p) {
        if (i > 0 && i % plan.steps_per_period == 0) map.points.push_back(p);
    });
    map.termination = res.termination;
    map.message = res.message;
    return map;
}

LyapunovEstimate lyapunov_benettin(const FieldModel& model, Point2 p0, double t_end, double dt, double d0,
                                   double renorm_interval, double max_speed) {
    if (!(d0 > 0.0)) throw ConfigError("d0 must be positive");
    if (!(renorm_interval > 0.0)) throw ConfigError("renorm_interval must be positive");
    const StepPlan plan = uniform_plan(t_end, dt);
    const std::int64_t per_renorm = std::llround(renorm_interval / dt);
    if (per_renorm < 1 || std::abs(static_cast<double>(per_renorm) * dt - renorm_interval) > 1e-9 * renorm_interval) {
        throw ConfigError("renorm_interval must be a multiple of dt");
    }
    const std::int64_t intervals = plan.steps / per_renorm;

    LyapunovEstimate est;
    est.d0 = d0;
    est.renorm_interval = renorm_interval;
    est.running.reserve(static_cast<std::size_t>(intervals));

    Point2 p = p0;
    Point2 q{p0.x + d0, p0.y};
    double log_sum = 0.0;
    std::int64_t step = 0;
    try {
        for (std::int64_t k = 1; k <= intervals; ++k) {
            for (std::int64_t j = 0; j < per_renorm; ++j, ++step) {
                const double t = plan.time_at(step);
                p = dynamics::refined_step(model, p, t, plan.dt, max_speed);
                q = dynamics::refined_step(model, q, t, plan.dt, max_speed);
            }
            if (!model.in_domain(p) || !model.in_domain(q)) throw DomainEscape("trajectory left the domain");
            const double ex = q.x - p.x;
            const double ey = q.y - p.y;
            const double d = std::hypot(ex, ey);
            if (!(d > 0.0) || !std::isfinite(d)) throw SingularityEncountered("degenerate separation");
            log_sum += std::log(d / d0);
            q = {p.x + ex * (d0 / d), p.y + ey * (d0 / d)};
            const double elapsed = static_cast<double>(k) * renorm_interval;
            est.running.emplace_back(elapsed, log_sum / elapsed);
        }
    } catch (const Error& e) {
        est.reliable = false;
        est.message = e.what();
    }

    if (!est.running.empty()) {
        est.lambda_max = est.running.back().second;
        const std::size_t n = est.running.size();
        const std::size_t tail = std::max<std::size_t>(1, n / 10);
        auto lo = HUGE_VAL;
        auto hi = -HUGE_VAL;
        for (std::size_t i = n - tail; i < n; ++i) {
            lo = std::min(lo, est.running[i].second);
            hi = std::max(hi, est.running[i].second);
        }
        est.tail_spread = hi - lo;
    } else {
        est.reliable = false;
    }
    return est;
}

DivergenceAverage divergence_time_average(const FieldModel& model, Point2 p0, double t_end, double dt,
                                          double max_speed) {
    const StepPlan plan = uniform_plan(t_end, dt);
    DivergenceAverage avg;
    double integral = 0.0;
    double prev = 0.0;
    bool failed_eval = false;
    const auto res = dynamics::integrate_stream(model, p0, plan, max_speed, [&](std::int64_t i, double t, Point2 p) {
        if (failed_eval) return;
        double div = 0.0;
        try {
            div = fields::divergence(model, p, t);
        } catch (const Error&) {
            failed_eval = true;
            return;
        }
        if (i > 0) {
            integral += 0.5 * (prev + div) * plan.dt;
            avg.t_total = t;
        }
        prev = div;
    });
    avg.termination = failed_eval ? Termination::singularity : res.termination;
    avg.value = avg.t_total > 0.0 ? integral / avg.t_total : 0.0;
    return avg;
}

const char* to_string(Probe p) noexcept {
    switch (p) {
        case Probe::C: return "C";
        case Probe::H_structure: return "H-structure";
        case Probe::Delta: return "Delta";
    }
    return "unknown";
}

double invariant_drift(const FieldModel& model, Probe probe, const TrajectoryRecord& traj) {
    if ((probe == Probe::C || probe == Probe::H_structure) && !harmonic_symmetric(model)) {
        throw IncompatibleProbe(std::string(to_string(probe)) + " probe requires the harmonic model with a0 = a1");
    }
    if (probe == Probe::Delta && !model.is_well()) {
        throw IncompatibleProbe("Delta probe requires a square-well model");
    }
    if (traj.samples.empty()) return 0.0;

    const double a = model.a0();
    if (probe == Probe::H_structure) {
        double worst = 0.0;
        for (const auto& s : traj.samples) {
            const auto v = fields::velocity(model, s.p, s.t);
            const auto g = fields::stream_function_H_gradient(a, s.p, s.t);
            worst = std::max({worst, std::abs(v.vx + g.dy), std::abs(v.vy - g.dx)});
        }
        return worst;
    }

    auto value = [&](const dynamics::Sample& s) {
        return probe == Probe::C ? fields::integral_of_motion_C(a, s.p, s.t) : fields::well_invariant_delta(s.p);
    };
    const double q0 = value(traj.samples.front());
    const double scale = std::max(std::abs(q0), 1e-12);
    double worst = 0.0;
    for (const auto& s : traj.samples) worst = std::max(worst, std::abs(value(s) - q0) / scale);
    return worst;
}

}  // namespace bohm::analysis
