#pragma once

// CSV and SVG emission. Numbers are written with 17 significant digits so
// that they re-parse to the identical doubles; metadata goes into trailing
// '#'-prefixed comment lines.

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "bohm/analysis.hpp"
#include "bohm/dynamics.hpp"

namespace bohm::io {

using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Header `t,x,y`, one row per retained sample.
void write_trajectory_csv(std::ostream& os, const dynamics::TrajectoryRecord& rec, const Metadata& meta);

/// Header `k,x,y` (or `traj,k,x,y` when several maps are written together).
void write_strobe_csv(std::ostream& os, const std::vector<analysis::StrobeMap>& maps, const Metadata& meta);

/// Header `t,partial_lambda`.
void write_lyapunov_csv(std::ostream& os, const analysis::LyapunovEstimate& est, const Metadata& meta);

struct Viewport {
    double xmin = -1.0;
    double xmax = 1.0;
    double ymin = -1.0;
    double ymax = 1.0;
};

/// Fixed viewport per model family: the box (0, pi)^2 for wells, otherwise a
/// symmetric square rounded up to the next 0.5 that holds every point.
Viewport default_viewport(const fields::FieldModel& model, const std::vector<analysis::StrobeMap>& maps);

/// Scatter panel: one 1-px marker per strobe point, axes and a caption line.
void write_strobe_svg(std::ostream& os, const std::vector<analysis::StrobeMap>& maps, const Viewport& view,
                      const std::string& caption);

/// Parses a CSV body (header and '#' lines skipped) back into rows of doubles.
std::vector<std::vector<double>> read_numeric_csv(std::istream& is);

}  // namespace bohm::io
