#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fovclass/acuity.hpp"
#include "fovclass/config.hpp"
#include "fovclass/profile.hpp"

namespace fovclass {

/// One resolution level of an N-tiered display, centered on the display
/// axis (or on the gaze, when steered).
struct Tier {
  CyclesPerDegree resolution = 0.0;
  Degrees half_fov = 0.0;
  bool steerable = false;
  /// Largest gaze eccentricity the steering can follow. 0 iff not steerable.
  Degrees steer_range = 0.0;
  /// Width of the linear ramp at the tier's outer edge, taken from inside the
  /// tier, down to the next tier's resolution (0 cpd after the last tier).
  Degrees blend_width = 0.0;

  friend bool operator==(const Tier&, const Tier&) = default;
};

/// Lens falloff as a multiplier on resolution over display eccentricity.
struct OffAxisDegradation {
  enum class Kind { None, PiecewiseLinear };

  Kind kind = Kind::None;
  /// (display eccentricity, multiplier). Starts at (0, 1); multipliers are
  /// non-increasing and held constant past the last breakpoint.
  std::vector<std::pair<Degrees, double>> breakpoints;

  double multiplier(Degrees display_eccentricity) const;

  friend bool operator==(const OffAxisDegradation&, const OffAxisDegradation&) = default;
};

struct DisplaySpec {
  std::string name;
  /// Ordered by non-increasing resolution with non-decreasing extent.
  std::vector<Tier> tiers;
  OffAxisDegradation degradation;
  std::string notes;

  /// Half field of view, set by the outermost tier.
  Degrees half_fov() const { return tiers.empty() ? 0.0 : tiers.back().half_fov; }

  friend bool operator==(const DisplaySpec&, const DisplaySpec&) = default;
};

/// Throws InvariantError naming the violated invariant.
void validate(const DisplaySpec& spec);
void validate(const OffAxisDegradation& degradation);

/// On-axis tier shape: resolution of tier `index` at distance `x` from the
/// tier center, including its blend ramp. 0 beyond the tier's edge.
CyclesPerDegree tier_shape(const DisplaySpec& spec, std::size_t index, Degrees x);

/// Perceived resolution at gaze eccentricity `e` while looking `gaze` degrees
/// off the display axis: the worse of the two radial directions, each taking
/// the best tier covering it, times the lens multiplier.
CyclesPerDegree perceived_resolution(const DisplaySpec& spec, Degrees gaze, Degrees e);

/// On-axis RDF (gaze straight ahead). Identical to perceived_profile(spec, 0).
ResolutionProfile build_rdf(const DisplaySpec& spec);

/// Exact piecewise profile of perceived_resolution over gaze eccentricity.
/// Gaze is radial; a negative gaze is canonicalized to its magnitude.
ResolutionProfile perceived_profile(const DisplaySpec& spec, Degrees gaze);

/// Largest scanned gaze G such that for every sampled gaze in [0, G], the
/// acuity-clamped perceived profile min(P_g, ADF) stays within
/// cfg.noticeability_tol of the straight-ahead one on [0, invariance_extent].
/// Capped at cfg.full_gaze_range.
Degrees gaze_invariance_range(const DisplaySpec& spec, const AcuityModel& adf,
                              const ClassifierConfig& cfg);

}  // namespace fovclass
