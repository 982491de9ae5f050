#pragma once

// Diagnostics built on top of the integrator: stroboscopic sections,
// largest Lyapunov exponent, time-averaged divergence and invariant drift.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bohm/dynamics.hpp"

namespace bohm::analysis {

using dynamics::Termination;
using dynamics::TrajectoryRecord;
using fields::FieldModel;
using fields::Point2;

struct StrobeMap {
    /// State at t = k T for k = 1..K.
    std::vector<Point2> points;
    double period = 0.0;
    FieldModel model;
    /// floor(t_end / T); points.size() is smaller only after a failure.
    std::int64_t expected_count = 0;
    double dt_actual = 0.0;
    Termination termination = Termination::completed;
    std::string message;
};

StrobeMap stroboscopic_map(const FieldModel& model, Point2 p0, double t_end, double dt, double max_speed = 1e3);

struct LyapunovEstimate {
    double lambda_max = 0.0;
    /// (t_k, running average of ln(d_k / d0) / t_k) after every renormalization.
    std::vector<std::pair<double, double>> running;
    double d0 = 0.0;
    double renorm_interval = 0.0;
    /// max - min of the running series over its last 10%.
    double tail_spread = 0.0;
    /// False when either trajectory hit a singularity or left the domain.
    bool reliable = true;
    std::string message;
};

/// Two-trajectory Benettin estimate. The companion starts at p0 + d0 (1, 0)
/// and is pulled back to distance d0 along the current separation after every
/// renorm_interval.
LyapunovEstimate lyapunov_benettin(const FieldModel& model, Point2 p0, double t_end, double dt, double d0 = 1e-9,
                                   double renorm_interval = 1.0, double max_speed = 1e3);

struct DivergenceAverage {
    /// (1 / T) * integral_0^T div v along the trajectory (trapezoidal rule).
    double value = 0.0;
    double t_total = 0.0;
    Termination termination = Termination::completed;
};

DivergenceAverage divergence_time_average(const FieldModel& model, Point2 p0, double t_end, double dt,
                                          double max_speed = 1e3);

enum class Probe { C, H_structure, Delta };

const char* to_string(Probe p) noexcept;

/// Largest relative drift |Q(t) - Q(0)| / max(|Q(0)|, 1e-12) over the record.
/// For H_structure Q is the Hamiltonian residual max(|vx + dH/dy|, |vy - dH/dx|),
/// whose reference value is zero, so the largest absolute residual is returned.
/// Throws IncompatibleProbe when the probe does not apply to the model.
double invariant_drift(const FieldModel& model, Probe probe, const TrajectoryRecord& traj);

}  // namespace bohm::analysis
