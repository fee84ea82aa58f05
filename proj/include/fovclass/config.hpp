#pragma once

#include <optional>

#include "fovclass/acuity.hpp"

namespace fovclass {

/// Every threshold the taxonomy leaves qualitative. The defaults are a
/// calibration that reproduces the published classifications of existing
/// head-mounted displays; reports print the values in use.
struct ClassifierConfig {
  /// End of the foveal evaluation interval. Unset means the ADF's e0.
  std::optional<Degrees> fovea_boundary;
  Degrees periphery_start = 10.0;
  /// Narrower displays have a visible edge, counted as a peripheral artifact.
  /// Peripheral deficit is integrated up to min(display edge, this angle).
  Degrees min_full_field_half_angle = 50.0;
  double peripheral_deficit_tol = 0.5;  // cycles
  double foveal_deficit_tol = 1e-9;     // cycles
  CyclesPerDegree noticeability_tol = 0.25;
  Degrees invariance_extent = 15.0;
  Degrees gaze_scan_step = 0.1;
  Degrees class4_bound = 5.0;
  Degrees class3_bound = 15.0;
  Degrees full_gaze_range = 25.0;

  Degrees fovea_boundary_for(const AcuityModel& adf) const {
    return fovea_boundary.value_or(adf.fovea_half_width());
  }

  /// Throws InvariantError when bounds are out of order or a tolerance is
  /// negative.
  void validate() const;
};

}  // namespace fovclass
