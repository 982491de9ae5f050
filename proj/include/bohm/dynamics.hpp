#pragma once

// Fixed-step RK4 integration of the non-autonomous 2D guidance systems.

#include <cstdint>
#include <string>
#include <vector>

#include "bohm/errors.hpp"
#include "bohm/fields.hpp"

namespace bohm::dynamics {

using fields::FieldModel;
using fields::Point2;

struct IntegratorConfig {
    double dt_requested = 1e-3;
    double t_end = 1.0;
    /// Adjust dt so that every multiple of the model's strobe period is a step.
    bool strobe_align = false;
    /// Stage speed above which a step is split; <= 0 disables refinement.
    double max_speed = 1e3;
    /// Keep every stride-th step in the record.
    std::int64_t stride = 1;

    void validate() const;
};

enum class Termination { completed, singularity, domain_escape };

const char* to_string(Termination t) noexcept;

struct Sample {
    double t = 0.0;
    Point2 p;
};

struct TrajectoryRecord {
    std::vector<Sample> samples;
    double dt_actual = 0.0;
    Termination termination = Termination::completed;
    /// Diagnostic from the field evaluation that stopped the run.
    std::string message;
};

/// Number of uniform steps and their size for one run.
struct StepPlan {
    double dt = 0.0;
    std::int64_t steps = 0;
    /// Steps per strobe period when aligned, otherwise 0.
    std::int64_t steps_per_period = 0;

    double time_at(std::int64_t i) const noexcept { return static_cast<double>(i) * dt; }
};

StepPlan plan_steps(const FieldModel& model, const IntegratorConfig& cfg);

/// Steps that fit in `span` at step size dt, tolerant to representation error.
std::int64_t whole_steps(double span, double dt) noexcept;

/// One classical RK4 step. dt may be negative.
Point2 rk4_step(const FieldModel& model, Point2 p, double t, double dt);

/// RK4 step over [t, t + dt] that splits itself in halves (down to dt/64)
/// while a stage speed exceeds max_speed * (dt / substep). Throws
/// SingularityEncountered when even the finest split is too fast.
Point2 refined_step(const FieldModel& model, Point2 p, double t, double dt, double max_speed);

struct StreamResult {
    Termination termination = Termination::completed;
    /// Index of the last state reached (the failing step did not complete).
    std::int64_t last_index = 0;
    Point2 last_point;
    std::string message;
};

/// Drives the uniform-step recurrence, calling obs(i, t_i, p_i) for every
/// state i = 0..plan.steps (stopping early on singularity or escape).
template <class Observer>
StreamResult integrate_stream(const FieldModel& model, Point2 p0, const StepPlan& plan, double max_speed,
                              Observer&& obs) {
    StreamResult res;
    res.last_point = p0;
    if (!model.in_domain(p0)) {
        res.termination = model.is_well() ? Termination::domain_escape : Termination::singularity;
        res.message = "initial point outside the model domain";
        return res;
    }
    Point2 p = p0;
    obs(std::int64_t{0}, 0.0, p);
    for (std::int64_t i = 0; i < plan.steps; ++i) {
        try {
            p = refined_step(model, p, plan.time_at(i), plan.dt, max_speed);
            if (!model.in_domain(p)) throw DomainEscape("step landed outside the domain");
        } catch (const SingularityEncountered& e) {
            res.termination = Termination::singularity;
            res.message = e.what();
            return res;
        } catch (const DomainEscape& e) {
            res.termination = Termination::domain_escape;
            res.message = e.what();
            return res;
        }
        res.last_index = i + 1;
        res.last_point = p;
        obs(i + 1, plan.time_at(i + 1), p);
    }
    return res;
}

/// Full run keeping every cfg.stride-th state. Failures end the record early
/// and are reported through `termination`, never thrown.
TrajectoryRecord integrate(const FieldModel& model, Point2 p0, const IntegratorConfig& cfg);

}  // namespace bohm::dynamics
