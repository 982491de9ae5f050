#pragma once

// Flat key = value run configuration shared by every CLI command.
//
//   # comment
//   model = harmonic
//   a0 = 2.03
//   sweep_values = inf, 100, 10, 4, 2, 1
//
// Unknown keys and malformed values are hard errors that name the line.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bohm/dynamics.hpp"
#include "bohm/fields.hpp"

namespace bohm::config {

struct RunConfig {
    // model
    std::string model = "harmonic";
    double a0 = 1.0;
    double a1 = 1.0;
    double lambda = 20.0;
    double mu = 20.0;
    double r0 = 1.015;
    double r1 = 0.985;
    // initial point
    double x0 = 2.0;
    double y0 = 0.0;
    // integration
    double t_end = 1000.0;
    double dt = 1e-3;
    double max_speed = 1e3;
    std::int64_t stride = 1;
    bool strobe_align = false;
    // lyapunov
    double d0 = 1e-9;
    double renorm_interval = 1.0;
    // output and execution
    std::string out = ".";
    bool svg = false;
    int jobs = 0;
    // ensemble of initial points around (x0, y0)
    std::uint64_t seed = 1;
    int ensemble = 1;
    double ensemble_spread = 0.05;
    // sweep
    std::string sweep_param = "A";
    std::vector<double> sweep_values;
    std::string sweep_mode = "strobe";
    double ratio0 = 1.015;
    double ratio1 = 0.985;

    friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Applies `key = value` lines to cfg. `origin` prefixes diagnostics.
void apply_text(RunConfig& cfg, std::string_view text, std::string_view origin = "config");

/// Applies a single `key=value` assignment (used for command-line overrides).
void apply_assignment(RunConfig& cfg, std::string_view assignment, std::string_view origin = "--set");

RunConfig load_file(const std::string& path);

/// Every key with its effective value; parsing the result reproduces cfg exactly.
std::string emit(const RunConfig& cfg);

/// Names of all recognised keys in emission order.
const std::vector<std::string>& known_keys();

fields::FieldModel build_model(const RunConfig& cfg);
dynamics::IntegratorConfig build_integrator(const RunConfig& cfg);

/// Initial points: (x0, y0) first, then ensemble - 1 Gaussian perturbations
/// drawn from `seed` (redrawn until they fall inside the model domain).
std::vector<fields::Point2> initial_points(const RunConfig& cfg, const fields::FieldModel& model);

/// 17-significant-digit text that parses back to the same double ("inf" for infinity).
std::string format_double(double v);

}  // namespace bohm::config
