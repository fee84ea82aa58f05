#include "fovclass/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fovclass/error.hpp"

namespace fovclass {
namespace {

std::vector<Degrees> joined_breakpoints(const ResolutionProfile& rdf, const AcuityModel& adf) {
  auto bps = rdf.breakpoints();
  bps.push_back(adf.plateau_end());
  return bps;
}

double deficit_impl(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b,
                    Execution exec) {
  const auto bps = joined_breakpoints(rdf, adf);
  return integrate([&](Degrees e) { return std::max(adf(e) - rdf(e), 0.0); }, a, b, bps, exec);
}

double waste_impl(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b,
                  Execution exec) {
  const auto bps = joined_breakpoints(rdf, adf);
  return integrate([&](Degrees e) { return std::max(rdf(e) - adf(e), 0.0); }, a, b, bps, exec);
}

}  // namespace

std::vector<Degrees> quadrature_nodes(Degrees a, Degrees b, std::span<const Degrees> breakpoints,
                                      Degrees max_step) {
  if (!(a <= b)) throw DomainError("integration range must satisfy a <= b");
  if (!(max_step > 0.0)) throw DomainError("quadrature step must be positive");
  std::vector<Degrees> edges{a, b};
  for (Degrees x : breakpoints) {
    if (x > a && x < b) edges.push_back(x);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  std::vector<Degrees> nodes{a};
  for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
    const auto panel = uniform_grid(edges[i], edges[i + 1], max_step);
    nodes.insert(nodes.end(), panel.begin() + 1, panel.end());
  }
  return nodes;
}

double integrate(const Curve& f, Degrees a, Degrees b, std::span<const Degrees> breakpoints,
                 Execution exec) {
  if (!(a <= b)) throw DomainError("integration range must satisfy a <= b");
  if (a == b) return 0.0;
  const auto nodes = quadrature_nodes(a, b, breakpoints);
  return trapezoid(f, nodes, exec);
}

double integrate(const ResolutionProfile& rdf, Degrees a, Degrees b) {
  const auto bps = rdf.breakpoints();
  return integrate([&](Degrees e) { return rdf(e); }, a, b, bps);
}

double integrate(const AcuityModel& adf, Degrees a, Degrees b) {
  const Degrees bp[] = {adf.plateau_end()};
  return integrate([&](Degrees e) { return adf(e); }, a, b, bp);
}

double pixel_deficit(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b) {
  return deficit_impl(rdf, adf, a, b, Execution::Parallel);
}

double pixel_waste(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b) {
  return waste_impl(rdf, adf, a, b, Execution::Parallel);
}

double rdf_efficiency(const ResolutionProfile& rdf, const AcuityModel& adf, Degrees a, Degrees b) {
  const double count = integrate(rdf, a, b);
  if (!(count > 0.0)) {
    throw UndefinedEfficiency("RDF efficiency undefined: no display cycles in range");
  }
  return 1.0 - pixel_waste(rdf, adf, a, b) / count;
}

EccentricityRange peripheral_window(const DisplaySpec& spec, const ClassifierConfig& cfg) {
  const Degrees end = std::min(spec.half_fov(), cfg.min_full_field_half_angle);
  if (end <= cfg.periphery_start) return {cfg.periphery_start, cfg.periphery_start};
  return {cfg.periphery_start, end};
}

MetricsReport evaluate_metrics(const DisplaySpec& spec, const AcuityModel& adf,
                               const ClassifierConfig& cfg,
                               std::optional<EccentricityRange> range) {
  cfg.validate();
  const ResolutionProfile rdf = build_rdf(spec);
  MetricsReport r;
  r.eval_range = range.value_or(EccentricityRange{0.0, spec.half_fov()});
  const auto [a, b] = r.eval_range;
  r.deficit = pixel_deficit(rdf, adf, a, b);
  r.waste = pixel_waste(rdf, adf, a, b);
  r.cycle_count = integrate(rdf, a, b);
  r.efficiency = r.cycle_count > 0.0 ? 1.0 - r.waste / r.cycle_count
                                     : std::numeric_limits<double>::quiet_NaN();
  r.foveal_deficit = pixel_deficit(rdf, adf, 0.0, cfg.fovea_boundary_for(adf));
  const auto window = peripheral_window(spec, cfg);
  r.peripheral_deficit = pixel_deficit(rdf, adf, window.begin, window.end);
  return r;
}

std::vector<BlendScore> blend_width_scores(const Tier& hi, const Tier& lo, const AcuityModel& adf,
                                           Execution exec) {
  if (hi.resolution < lo.resolution) {
    throw DomainError("blend width: inner tier must out-resolve the outer tier");
  }
  if (lo.half_fov < hi.half_fov) {
    throw DomainError("blend width: outer tier must cover the inner tier's extent");
  }
  if (!(hi.resolution > 0.0) || !(hi.half_fov > 0.0) || !(lo.resolution > 0.0)) {
    throw DomainError("blend width: degenerate tiers");
  }
  const auto steps = static_cast<std::ptrdiff_t>(std::floor(hi.half_fov / kBlendScanStep + 1e-9));
  std::vector<BlendScore> scores(static_cast<std::size_t>(steps) + 1);

  auto score = [&](std::ptrdiff_t k) {
    DisplaySpec spec;
    spec.name = "blend";
    Tier inner{hi.resolution, hi.half_fov, false, 0.0,
               std::min(static_cast<double>(k) * kBlendScanStep, hi.half_fov)};
    Tier outer{lo.resolution, lo.half_fov, false, 0.0, 0.0};
    spec.tiers = {inner, outer};
    const ResolutionProfile rdf = build_rdf(spec);
    return BlendScore{inner.blend_width,
                      deficit_impl(rdf, adf, 0.0, hi.half_fov, Execution::Serial),
                      waste_impl(rdf, adf, 0.0, hi.half_fov, Execution::Serial)};
  };

  if (exec == Execution::Serial) {
    for (std::ptrdiff_t k = 0; k <= steps; ++k) scores[k] = score(k);
    return scores;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t k = 0; k <= steps; ++k) scores[k] = score(k);
  return scores;
}

Degrees optimal_blend_width(const Tier& hi, const Tier& lo, const AcuityModel& adf,
                            Execution exec) {
  if (hi.resolution == lo.resolution && lo.half_fov >= hi.half_fov) return 0.0;
  const auto scores = blend_width_scores(hi, lo, adf, exec);
  double least_deficit = std::numeric_limits<double>::infinity();
  for (const auto& s : scores) least_deficit = std::min(least_deficit, s.deficit);

  const BlendScore* best = nullptr;
  for (const auto& s : scores) {
    if (s.deficit > least_deficit + 1e-9) continue;
    if (best == nullptr || s.waste < best->waste - 1e-12) best = &s;
  }
  return best->width;
}

}  // namespace fovclass
