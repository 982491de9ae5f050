#pragma once

// Reduced-horizon versions of the library's invariant and property checks,
// runnable from the CLI as a self-test of a build.

#include <functional>
#include <string>
#include <vector>

#include "bohm/susy.hpp"

namespace bohm::validate {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Functions under test that can be swapped out, e.g. to confirm that a
/// deliberately broken phi_hat is caught.
struct ValidationHooks {
    std::function<double(double, susy::DeformationParam)> phi_hat = susy::phi_hat;
};

std::vector<CheckResult> run_validation(const ValidationHooks& hooks = {});

}  // namespace bohm::validate
