#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "fovclass/acuity.hpp"
#include "fovclass/config.hpp"
#include "fovclass/display.hpp"
#include "fovclass/kernels.hpp"
#include "fovclass/profile.hpp"

namespace fovclass {

// All integrals run over the 1D eccentricity slice in degrees (not solid
// angle), so results are in cycles along one radial slice.

/// Largest trapezoid panel. Small enough that the hyperbolic ADF tail is
/// integrated to ~2e-7 relative even on short intervals.
inline constexpr Degrees kQuadratureStep = 0.0025;

struct EccentricityRange {
  Degrees begin = 0.0;
  Degrees end = 0.0;
  friend bool operator==(const EccentricityRange&, const EccentricityRange&) = default;
};

/// Panel boundaries over [a, b]: every breakpoint inside the range, with
/// each gap subdivided uniformly to panels no wider than `max_step`.
std::vector<Degrees> quadrature_nodes(Degrees a, Degrees b, std::span<const Degrees> breakpoints,
                                      Degrees max_step = kQuadratureStep);

/// Composite trapezoid. Throws DomainError when a > b.
double integrate(const Curve& f, Degrees a, Degrees b, std::span<const Degrees> breakpoints = {},
                 Execution exec = Execution::Parallel);
double integrate(const ResolutionProfile& rdf, Degrees a, Degrees b);
double integrate(const AcuityModel& adf, Degrees a, Degrees b);

/// Cycles by which the RDF falls short of the ADF: integral of |min(RDF-ADF, 0)|.
double pixel_deficit(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b);
/// Cycles provisioned beyond the ADF: integral of max(RDF-ADF, 0).
double pixel_waste(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b);
/// 1 - waste / count, count = integral of RDF. Throws UndefinedEfficiency when
/// the range holds no cycles.
double rdf_efficiency(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b);

struct MetricsReport {
  double deficit = 0.0;
  double waste = 0.0;
  double efficiency = 0.0;
  double cycle_count = 0.0;
  EccentricityRange eval_range;
  double foveal_deficit = 0.0;
  double peripheral_deficit = 0.0;
};

/// Interval the peripheral deficit is integrated over:
/// [periphery_start, min(display edge, min_full_field_half_angle)], empty
/// when the display ends before the periphery starts.
EccentricityRange peripheral_window(const DisplaySpec& spec, const ClassifierConfig& cfg);

/// Deficit, waste and efficiency over `range` (default [0, display edge]),
/// plus the foveal and peripheral deficits the classifier uses.
MetricsReport evaluate_metrics(const DisplaySpec& spec, const AcuityModel& adf,
                               const ClassifierConfig& cfg,
                               std::optional<EccentricityRange> range = std::nullopt);

struct BlendScore {
  Degrees width = 0.0;
  double deficit = 0.0;
  double waste = 0.0;
};

inline constexpr Degrees kBlendScanStep = 0.1;

/// Deficit and waste over [0, hi.half_fov] of the two-tier display hi -> lo
/// for each candidate blend width 0, 0.1, ... up to hi.half_fov.
std::vector<BlendScore> blend_width_scores(const Tier& hi, const Tier& lo, const AcuityModel& adf,
                                           Execution exec = Execution::Parallel);

/// Blend width that brings the two-tier RDF closest to the ADF: least
/// deficit first, then least waste, then the narrower band. Throws
/// DomainError when lo out-resolves hi or does not cover hi's extent.
Degrees optimal_blend_width(const Tier& hi, const Tier& lo, const AcuityModel& adf,
                            Execution exec = Execution::Parallel);

}  // namespace fovclass
