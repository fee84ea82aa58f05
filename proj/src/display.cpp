#include "fovclass/display.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fovclass/error.hpp"
#include "fovclass/kernels.hpp"

namespace fovclass {
namespace {

// Knots closer than this are treated as one.
constexpr double kKnotTol = 1e-12;

struct Line {
  double slope = 0.0;
  double intercept = 0.0;
  double at(double e) const { return intercept + slope * e; }
};

// Quadratic in absolute eccentricity: a0 + a1 e + a2 e^2.
struct Quadratic {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double at(double e) const { return a0 + e * (a1 + e * a2); }
};

Quadratic product(const Line& u, const Line& v) {
  return {u.intercept * v.intercept, u.intercept * v.slope + u.slope * v.intercept,
          u.slope * v.slope};
}

// Line through the values of `f` at the interior third points of (a, b).
template <typename F>
Line fit_line(const F& f, double a, double b) {
  const double e1 = a + (b - a) / 3.0;
  const double e2 = a + 2.0 * (b - a) / 3.0;
  const double v1 = f(e1);
  const double v2 = f(e2);
  const double slope = (v2 - v1) / (e2 - e1);
  return {slope, v1 - slope * e1};
}

void add_roots(const Quadratic& q, double a, double b, std::vector<double>& out) {
  auto keep = [&](double r) {
    if (r > a + kKnotTol && r < b - kKnotTol) out.push_back(r);
  };
  const double scale = std::max({std::abs(q.a0), std::abs(q.a1), std::abs(q.a2), 1.0});
  if (std::abs(q.a2) <= 1e-14 * scale) {
    if (std::abs(q.a1) > 1e-14 * scale) keep(-q.a0 / q.a1);
    return;
  }
  const double disc = q.a1 * q.a1 - 4.0 * q.a2 * q.a0;
  if (disc < 0.0) return;
  const double sq = std::sqrt(disc);
  // Numerically stable pair.
  const double t = -0.5 * (q.a1 + std::copysign(sq, q.a1));
  if (t != 0.0) {
    keep(t / q.a2);
    keep(q.a0 / t);
  } else {
    keep(0.0);
  }
}

std::vector<double> sorted_unique(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  std::vector<double> out;
  for (double x : v) {
    if (out.empty() || x - out.back() > kKnotTol) out.push_back(x);
  }
  return out;
}

Degrees tier_center(const Tier& tier, Degrees gaze) {
  return tier.steerable ? std::min(gaze, tier.steer_range) : 0.0;
}

// Convert an absolute-coordinate quadratic on [a, b] to a segment.
Segment to_segment(const Quadratic& q, double a, double b) {
  return {a, b, q.at(a), q.a1 + 2.0 * q.a2 * a, q.a2};
}

bool same_piece(const Segment& left, const Segment& right) {
  // Re-center the left polynomial at right.start and compare coefficients.
  const double t = right.start - left.start;
  const double c0 = left.c0 + t * (left.c1 + t * left.c2);
  const double c1 = left.c1 + 2.0 * left.c2 * t;
  const double scale = std::max({std::abs(c0), std::abs(right.c0), 1.0});
  const double tol = 1e-12 * scale;
  return std::abs(c0 - right.c0) <= tol && std::abs(c1 - right.c1) <= tol &&
         std::abs(left.c2 - right.c2) <= tol;
}

}  // namespace

double OffAxisDegradation::multiplier(Degrees display_eccentricity) const {
  if (kind == Kind::None || breakpoints.empty()) return 1.0;
  const double x = std::abs(display_eccentricity);
  if (x >= breakpoints.back().first) return breakpoints.back().second;
  auto hi = std::upper_bound(breakpoints.begin(), breakpoints.end(), x,
                             [](double v, const auto& bp) { return v < bp.first; });
  auto lo = hi - 1;
  const double frac = (x - lo->first) / (hi->first - lo->first);
  return lo->second + frac * (hi->second - lo->second);
}

void validate(const OffAxisDegradation& d) {
  if (d.kind == OffAxisDegradation::Kind::None) {
    if (!d.breakpoints.empty()) {
      throw InvariantError("degradation: kind none must not list breakpoints");
    }
    return;
  }
  if (d.breakpoints.empty()) {
    throw InvariantError("degradation: piecewise-linear needs at least one breakpoint");
  }
  if (d.breakpoints.front().first != 0.0 || d.breakpoints.front().second != 1.0) {
    throw InvariantError("degradation: first breakpoint must be (0, 1)");
  }
  for (std::size_t i = 0; i < d.breakpoints.size(); ++i) {
    const auto [deg, mult] = d.breakpoints[i];
    if (!std::isfinite(deg) || !(mult > 0.0 && mult <= 1.0)) {
      throw InvariantError("degradation: multiplier " + std::to_string(i) +
                           " must lie in (0, 1]");
    }
    if (i > 0) {
      if (!(deg > d.breakpoints[i - 1].first)) {
        throw InvariantError("degradation: breakpoint eccentricities must increase");
      }
      if (mult > d.breakpoints[i - 1].second) {
        throw InvariantError("degradation: multipliers must be non-increasing");
      }
    }
  }
}

void validate(const DisplaySpec& spec) {
  if (spec.name.empty()) throw InvariantError("display spec: name must be non-empty");
  if (spec.tiers.empty()) throw InvariantError("display spec: tiers must be non-empty");
  for (std::size_t i = 0; i < spec.tiers.size(); ++i) {
    const Tier& t = spec.tiers[i];
    const std::string where = "display spec '" + spec.name + "' tier " + std::to_string(i);
    if (!(t.resolution > 0.0) || !std::isfinite(t.resolution)) {
      throw InvariantError(where + ": resolution must be positive");
    }
    if (!(t.half_fov > 0.0) || !std::isfinite(t.half_fov)) {
      throw InvariantError(where + ": half field of view must be positive");
    }
    if (!(t.blend_width >= 0.0) || t.blend_width > t.half_fov) {
      throw InvariantError(where + ": blend width must lie in [0, half_fov]");
    }
    if (!(t.steer_range >= 0.0) || !std::isfinite(t.steer_range)) {
      throw InvariantError(where + ": steer range must be >= 0");
    }
    if (t.steerable != (t.steer_range > 0.0)) {
      throw InvariantError(where + ": steerable must hold exactly when steer range > 0");
    }
    if (i > 0) {
      const Tier& prev = spec.tiers[i - 1];
      if (t.resolution > prev.resolution) {
        throw InvariantError(where + ": tiers must be ordered by descending resolution");
      }
      if (t.half_fov < prev.half_fov) {
        throw InvariantError(where + ": tier extents must be non-decreasing");
      }
      if (t.blend_width > t.half_fov - prev.half_fov) {
        throw InvariantError(where +
                             ": blend band overlaps the previous tier's edge "
                             "(wider than the gap between tier edges)");
      }
    }
  }
  validate(spec.degradation);
}

CyclesPerDegree tier_shape(const DisplaySpec& spec, std::size_t index, Degrees x) {
  const Tier& t = spec.tiers[index];
  x = std::abs(x);
  if (x > t.half_fov) return 0.0;
  const double ramp_start = t.half_fov - t.blend_width;
  if (x <= ramp_start || t.blend_width <= 0.0) return t.resolution;
  const double next = index + 1 < spec.tiers.size() ? spec.tiers[index + 1].resolution : 0.0;
  const double frac = (x - ramp_start) / t.blend_width;
  return t.resolution + frac * (next - t.resolution);
}

CyclesPerDegree perceived_resolution(const DisplaySpec& spec, Degrees gaze, Degrees e) {
  if (!(e >= 0.0)) throw DomainError("perceived resolution: eccentricity must be >= 0");
  gaze = std::abs(gaze);
  double worst = 0.0;
  for (int dir : {+1, -1}) {
    const double p = gaze + dir * e;
    double best = 0.0;
    for (std::size_t i = 0; i < spec.tiers.size(); ++i) {
      const double lag = gaze - tier_center(spec.tiers[i], gaze);
      best = std::max(best, tier_shape(spec, i, dir * e + lag));
    }
    const double v = best * spec.degradation.multiplier(p);
    worst = dir == +1 ? v : std::min(worst, v);
  }
  return worst;
}

ResolutionProfile build_rdf(const DisplaySpec& spec) {
  validate(spec);
  return perceived_profile(spec, 0.0);
}

ResolutionProfile perceived_profile(const DisplaySpec& spec, Degrees gaze) {
  validate(spec);
  gaze = std::abs(gaze);
  const std::size_t n = spec.tiers.size();

  // Past this eccentricity the far direction has left every tier.
  double e_max = 0.0;
  for (const Tier& t : spec.tiers) {
    e_max = std::max(e_max, t.half_fov - (gaze - tier_center(t, gaze)));
  }
  if (!(e_max > kKnotTol)) return ResolutionProfile{};

  // Knots as offsets from the gaze direction, e = +/-(knot - gaze). Offsets
  // are formed relative to each tier center first so a tracking tier keeps
  // its edges exactly at its half field of view.
  std::vector<double> offsets{-gaze};
  for (const Tier& t : spec.tiers) {
    const double shift = tier_center(t, gaze) - gaze;
    for (double off : {0.0, t.half_fov - t.blend_width, t.half_fov}) {
      offsets.push_back(shift + off);
      offsets.push_back(shift - off);
    }
  }
  if (spec.degradation.kind == OffAxisDegradation::Kind::PiecewiseLinear) {
    for (const auto& bp : spec.degradation.breakpoints) {
      offsets.push_back(bp.first - gaze);
      offsets.push_back(-bp.first - gaze);
    }
  }
  std::vector<double> e_knots{0.0, e_max};
  for (double off : offsets) {
    for (double e : {off, -off}) {
      if (e > 0.0 && e < e_max) e_knots.push_back(e);
    }
  }
  e_knots = sorted_unique(std::move(e_knots));

  std::vector<Segment> segments;
  auto emit = [&](const Quadratic& q, double a, double b) {
    Segment s = to_segment(q, a, b);
    if (!segments.empty() && same_piece(segments.back(), s)) {
      segments.back().end = b;
    } else {
      segments.push_back(s);
    }
  };

  for (std::size_t k = 0; k + 1 < e_knots.size(); ++k) {
    const double a = e_knots[k];
    const double b = e_knots[k + 1];

    // Per direction: one line per tier and one for the lens multiplier.
    std::vector<Line> tier_lines[2];
    Line lens[2];
    for (int d = 0; d < 2; ++d) {
      const double dir = d == 0 ? 1.0 : -1.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double lag = gaze - tier_center(spec.tiers[i], gaze);
        tier_lines[d].push_back(
            fit_line([&](double e) { return tier_shape(spec, i, dir * e + lag); }, a, b));
      }
      lens[d] = fit_line(
          [&](double e) { return spec.degradation.multiplier(gaze + dir * e); }, a, b);
    }

    // Where the best tier changes inside (a, b).
    std::vector<double> cuts{a, b};
    for (int d = 0; d < 2; ++d) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          const Line& u = tier_lines[d][i];
          const Line& v = tier_lines[d][j];
          add_roots({u.intercept - v.intercept, u.slope - v.slope, 0.0}, a, b, cuts);
        }
      }
    }
    cuts = sorted_unique(std::move(cuts));

    for (std::size_t m = 0; m + 1 < cuts.size(); ++m) {
      const double lo = cuts[m];
      const double hi = cuts[m + 1];
      const double mid = 0.5 * (lo + hi);
      Quadratic dir_value[2];
      for (int d = 0; d < 2; ++d) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < n; ++i) {
          if (tier_lines[d][i].at(mid) > tier_lines[d][best].at(mid)) best = i;
        }
        dir_value[d] = product(tier_lines[d][best], lens[d]);
      }
      // Where the worse direction changes.
      std::vector<double> sub{lo, hi};
      add_roots({dir_value[0].a0 - dir_value[1].a0, dir_value[0].a1 - dir_value[1].a1,
                 dir_value[0].a2 - dir_value[1].a2},
                lo, hi, sub);
      sub = sorted_unique(std::move(sub));
      for (std::size_t r = 0; r + 1 < sub.size(); ++r) {
        const double sm = 0.5 * (sub[r] + sub[r + 1]);
        const Quadratic& q =
            dir_value[0].at(sm) <= dir_value[1].at(sm) ? dir_value[0] : dir_value[1];
        emit(q, sub[r], sub[r + 1]);
      }
    }
  }

  // Trailing zero pieces carry no display content.
  while (!segments.empty() && segments.back().c0 == 0.0 && segments.back().c1 == 0.0 &&
         segments.back().c2 == 0.0) {
    segments.pop_back();
  }
  return ResolutionProfile(std::move(segments));
}

Degrees gaze_invariance_range(const DisplaySpec& spec, const AcuityModel& adf,
                              const ClassifierConfig& cfg) {
  validate(spec);
  cfg.validate();
  const auto gazes = uniform_grid(0.0, cfg.full_gaze_range, cfg.gaze_scan_step);
  const auto flags = gaze_invariance_flags(spec, adf, cfg, gazes);
  for (std::size_t k = 0; k < flags.size(); ++k) {
    if (!flags[k]) return k == 0 ? 0.0 : gazes[k - 1];
  }
  return cfg.full_gaze_range;
}

}  // namespace fovclass
