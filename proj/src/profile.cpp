#include "fovclass/profile.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fovclass/error.hpp"

namespace fovclass {

Segment::Shape Segment::shape() const {
  if (c2 != 0.0) return Shape::Quadratic;
  if (c1 != 0.0) return Shape::Linear;
  return Shape::Constant;
}

ResolutionProfile::ResolutionProfile(std::vector<Segment> segments)
    : segments_(std::move(segments)) {
  Degrees cursor = 0.0;
  for (std::size_t i = 0; i < segments_.size(); ++i) {
    const auto& s = segments_[i];
    if (s.start != cursor) {
      throw InvariantError("resolution profile: segment " + std::to_string(i) +
                           " is not contiguous with its predecessor");
    }
    if (!(s.end > s.start) || !std::isfinite(s.end)) {
      throw InvariantError("resolution profile: segment " + std::to_string(i) +
                           " has non-positive length");
    }
    if (!std::isfinite(s.c0) || !std::isfinite(s.c1) || !std::isfinite(s.c2)) {
      throw InvariantError("resolution profile: segment " + std::to_string(i) +
                           " has non-finite coefficients");
    }
    cursor = s.end;
  }
}

ResolutionProfile ResolutionProfile::constant(CyclesPerDegree value, Degrees extent) {
  if (!(extent > 0.0)) return ResolutionProfile{};
  return ResolutionProfile({Segment{0.0, extent, value, 0.0, 0.0}});
}

CyclesPerDegree ResolutionProfile::operator()(Degrees e) const {
  if (!(e >= 0.0)) {
    throw DomainError("resolution profile: eccentricity must be >= 0");
  }
  if (segments_.empty() || e > segments_.back().end) return 0.0;
  // First segment whose end is >= e (left-closed ownership of shared points).
  auto it = std::lower_bound(segments_.begin(), segments_.end(), e,
                             [](const Segment& s, Degrees x) { return s.end < x; });
  return it->at(e);
}

std::vector<Degrees> ResolutionProfile::breakpoints() const {
  std::vector<Degrees> out;
  if (segments_.empty()) return out;
  out.reserve(segments_.size() + 1);
  out.push_back(0.0);
  for (const auto& s : segments_) out.push_back(s.end);
  return out;
}

}  // namespace fovclass
