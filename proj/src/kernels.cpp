#include "fovclass/kernels.hpp"

#include <algorithm>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "fovclass/display.hpp"
#include "fovclass/error.hpp"

namespace fovclass {
namespace {

constexpr Degrees kInvarianceSampleStep = 0.01;
constexpr double kCompareSlack = 1e-12;

bool matches_baseline(const DisplaySpec& spec, Degrees gaze, std::span<const Degrees> grid,
                      std::span<const double> clamped_adf, std::span<const double> baseline,
                      double tol) {
  const ResolutionProfile profile = perceived_profile(spec, gaze);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    const double clamped = std::min(profile(grid[j]), clamped_adf[j]);
    if (std::abs(clamped - baseline[j]) > tol + kCompareSlack) return false;
  }
  return true;
}

}  // namespace

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

std::vector<Degrees> uniform_grid(Degrees a, Degrees b, Degrees step) {
  if (!(step > 0.0)) throw DomainError("grid step must be positive");
  if (!(a <= b)) throw DomainError("grid range must satisfy a <= b");
  if (a == b) return {a};
  const auto n = static_cast<std::size_t>(std::ceil((b - a) / step - 1e-9));
  std::vector<Degrees> nodes(n + 1);
  const double h = (b - a) / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) nodes[i] = a + static_cast<double>(i) * h;
  nodes[n] = b;
  return nodes;
}

std::vector<double> sample(const Curve& f, std::span<const Degrees> nodes, Execution exec) {
  std::vector<double> out(nodes.size());
  const auto count = static_cast<std::ptrdiff_t>(nodes.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = f(nodes[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) out[i] = f(nodes[i]);
  return out;
}

double trapezoid(const Curve& f, std::span<const Degrees> nodes, Execution exec) {
  if (nodes.size() < 2) return 0.0;
  if (exec == Execution::Serial) {
    double sum = 0.0;
    double left = f(nodes[0]);
    for (std::size_t i = 1; i < nodes.size(); ++i) {
      const double right = f(nodes[i]);
      sum += 0.5 * (nodes[i] - nodes[i - 1]) * (left + right);
      left = right;
    }
    return sum;
  }
  const auto values = sample(f, nodes, Execution::Parallel);
  double sum = 0.0;
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    sum += 0.5 * (nodes[i] - nodes[i - 1]) * (values[i - 1] + values[i]);
  }
  return sum;
}

std::vector<char> gaze_invariance_flags(const DisplaySpec& spec, const AcuityModel& adf,
                                        const ClassifierConfig& cfg,
                                        std::span<const Degrees> gazes, Execution exec) {
  validate(spec);
  const auto grid = uniform_grid(0.0, cfg.invariance_extent, kInvarianceSampleStep);
  std::vector<double> acuity(grid.size());
  std::vector<double> baseline(grid.size());
  const ResolutionProfile straight = perceived_profile(spec, 0.0);
  for (std::size_t j = 0; j < grid.size(); ++j) {
    acuity[j] = adf(grid[j]);
    baseline[j] = std::min(straight(grid[j]), acuity[j]);
  }

  std::vector<char> flags(gazes.size());
  const auto count = static_cast<std::ptrdiff_t>(gazes.size());
  const double tol = cfg.noticeability_tol;
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t k = 0; k < count; ++k) {
      flags[k] = matches_baseline(spec, gazes[k], grid, acuity, baseline, tol);
    }
    return flags;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (std::ptrdiff_t k = 0; k < count; ++k) {
    flags[k] = matches_baseline(spec, gazes[k], grid, acuity, baseline, tol);
  }
  return flags;
}

}  // namespace fovclass
