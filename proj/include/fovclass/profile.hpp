#pragma once

#include <span>
#include <vector>

#include "fovclass/acuity.hpp"

namespace fovclass {

/// One piece of a resolution profile over [start, end]. The value is
/// c0 + c1*t + c2*t^2 with t = e - start. Tier plateaus are constant and
/// blend ramps are linear; a ramp under off-axis degradation is the product
/// of two linear factors and therefore quadratic.
struct Segment {
  Degrees start = 0.0;
  Degrees end = 0.0;
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  enum class Shape { Constant, Linear, Quadratic };

  Shape shape() const;
  double at(Degrees e) const {
    const double t = e - start;
    return c0 + t * (c1 + t * c2);
  }
  double start_value() const { return c0; }
  double end_value() const { return at(end); }

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Piecewise 1D resolution distribution function over [0, extent()].
///
/// Segments are contiguous and cover the domain. A point shared by two
/// segments belongs to the left one, so a tier that covers e <= h still
/// reports its own resolution at exactly h. Outside the domain the profile
/// is 0 (no display content).
class ResolutionProfile {
 public:
  ResolutionProfile() = default;
  /// Throws InvariantError unless segments start at 0, are contiguous,
  /// have positive length and finite coefficients.
  explicit ResolutionProfile(std::vector<Segment> segments);

  /// Constant `value` over [0, extent].
  static ResolutionProfile constant(CyclesPerDegree value, Degrees extent);

  /// Throws DomainError for negative eccentricity.
  CyclesPerDegree operator()(Degrees e) const;

  Degrees extent() const { return segments_.empty() ? 0.0 : segments_.back().end; }
  bool empty() const { return segments_.empty(); }
  std::span<const Segment> segments() const { return segments_; }
  /// Segment boundaries including 0 and extent().
  std::vector<Degrees> breakpoints() const;

  friend bool operator==(const ResolutionProfile&, const ResolutionProfile&) = default;

 private:
  std::vector<Segment> segments_;
};

}  // namespace fovclass
