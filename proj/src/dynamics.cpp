#include "bohm/dynamics.hpp"

#include <cmath>
#include <optional>

namespace bohm::dynamics {

namespace {

constexpr int kMaxRefineLevel = 6;  // dt / 64

double speed(fields::Velocity v) noexcept { return std::hypot(v.vx, v.vy); }

// Classical RK4; returns nullopt when some stage is faster than speed_limit.
std::optional<Point2> rk4_checked(const FieldModel& m, Point2 p, double t, double h, double speed_limit) {
    const double half = 0.5 * h;
    const auto k1 = fields::velocity(m, p, t);
    if (speed(k1) > speed_limit) return std::nullopt;
    const auto k2 = fields::velocity(m, {p.x + half * k1.vx, p.y + half * k1.vy}, t + half);
    if (speed(k2) > speed_limit) return std::nullopt;
    const auto k3 = fields::velocity(m, {p.x + half * k2.vx, p.y + half * k2.vy}, t + half);
    if (speed(k3) > speed_limit) return std::nullopt;
    const auto k4 = fields::velocity(m, {p.x + h * k3.vx, p.y + h * k3.vy}, t + h);
    if (speed(k4) > speed_limit) return std::nullopt;
    return Point2{p.x + h / 6.0 * (k1.vx + 2.0 * (k2.vx + k3.vx) + k4.vx),
                  p.y + h / 6.0 * (k1.vy + 2.0 * (k2.vy + k3.vy) + k4.vy)};
}

Point2 refine(const FieldModel& m, Point2 p, double t, double h, double max_speed, int level) {
    const double limit = std::ldexp(max_speed, level);
    if (auto next = rk4_checked(m, p, t, h, limit)) return *next;
    if (level == kMaxRefineLevel) {
        throw SingularityEncountered("speed exceeds " + std::to_string(limit) + " at the finest step near (" +
                                     std::to_string(p.x) + ", " + std::to_string(p.y) +
                                     "), t = " + std::to_string(t));
    }
    const double half = 0.5 * h;
    const Point2 mid = refine(m, p, t, half, max_speed, level + 1);
    return refine(m, mid, t + half, half, max_speed, level + 1);
}

}  // namespace

void IntegratorConfig::validate() const {
    if (!(dt_requested > 0.0) || !std::isfinite(dt_requested)) throw ConfigError("dt must be positive");
    if (!(t_end > 0.0) || !std::isfinite(t_end)) throw ConfigError("t_end must be positive");
    if (stride < 1) throw ConfigError("stride must be >= 1");
    if (std::isnan(max_speed)) throw ConfigError("max_speed must be a number");
}

const char* to_string(Termination t) noexcept {
    switch (t) {
        case Termination::completed: return "completed";
        case Termination::singularity: return "singularity";
        case Termination::domain_escape: return "domain_escape";
    }
    return "unknown";
}

std::int64_t whole_steps(double span, double dt) noexcept {
    return static_cast<std::int64_t>(std::floor(span / dt + 1e-9));
}

StepPlan plan_steps(const FieldModel& model, const IntegratorConfig& cfg) {
    cfg.validate();
    StepPlan plan;
    plan.dt = cfg.dt_requested;
    if (cfg.strobe_align) {
        const double period = model.strobe_period();
        plan.steps_per_period = std::max<std::int64_t>(1, std::llround(period / cfg.dt_requested));
        plan.dt = period / static_cast<double>(plan.steps_per_period);
    }
    plan.steps = whole_steps(cfg.t_end, plan.dt);
    return plan;
}

Point2 rk4_step(const FieldModel& model, Point2 p, double t, double dt) {
    return *rk4_checked(model, p, t, dt, HUGE_VAL);
}

Point2 refined_step(const FieldModel& model, Point2 p, double t, double dt, double max_speed) {
    if (!(max_speed > 0.0) || std::isinf(max_speed)) return rk4_step(model, p, t, dt);
    return refine(model, p, t, dt, max_speed, 0);
}

TrajectoryRecord integrate(const FieldModel& model, Point2 p0, const IntegratorConfig& cfg) {
    const StepPlan plan = plan_steps(model, cfg);
    TrajectoryRecord rec;
    rec.dt_actual = plan.dt;
    rec.samples.reserve(static_cast<std::size_t>(plan.steps / cfg.stride + 1));
    const auto res = integrate_stream(model, p0, plan, cfg.max_speed, [&](std::int64_t i, double t, Point2 p) {
        if (i % cfg.stride == 0) rec.samples.push_back({t, p});
    });
    rec.termination = res.termination;
    rec.message = res.message;
    return rec;
}

}  // namespace bohm::dynamics
