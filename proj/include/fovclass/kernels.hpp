#pragma once

// Data-parallel inner loops. Each kernel has an OpenMP path and the serial
// loop it is tested against; both produce bit-identical results because
// reductions are always summed serially in index order.

#include <functional>
#include <span>
#include <vector>

#include "fovclass/acuity.hpp"
#include "fovclass/config.hpp"

namespace fovclass {

struct DisplaySpec;

enum class Execution { Serial, Parallel };

using Curve = std::function<double(Degrees)>;

/// f evaluated at every node.
std::vector<double> sample(const Curve& f, std::span<const Degrees> nodes,
                           Execution exec = Execution::Parallel);

/// Composite trapezoid sum of f over sorted nodes.
double trapezoid(const Curve& f, std::span<const Degrees> nodes,
                 Execution exec = Execution::Parallel);

/// For each gaze angle, whether the acuity-clamped perceived profile matches
/// the straight-ahead one within cfg.noticeability_tol on
/// [0, cfg.invariance_extent].
std::vector<char> gaze_invariance_flags(const DisplaySpec& spec, const AcuityModel& adf,
                                        const ClassifierConfig& cfg,
                                        std::span<const Degrees> gazes,
                                        Execution exec = Execution::Parallel);

/// Uniform grid from a to b inclusive with spacing (b - a) / n <= step, where
/// n is the smallest count that achieves it. a == b yields {a}.
std::vector<Degrees> uniform_grid(Degrees a, Degrees b, Degrees step);

int max_threads();

}  // namespace fovclass
