#include "fovclass/classify.hpp"

#include <cctype>
#include <exception>

#include "fovclass/error.hpp"
#include "fovclass/metrics.hpp"

namespace fovclass {

void ClassifierConfig::validate() const {
  if (fovea_boundary && !(*fovea_boundary >= 0.0)) {
    throw InvariantError("classifier config: fovea_boundary must be >= 0");
  }
  if (!(periphery_start >= 0.0)) {
    throw InvariantError("classifier config: periphery_start must be >= 0");
  }
  if (!(min_full_field_half_angle >= 0.0)) {
    throw InvariantError("classifier config: min_full_field_half_angle must be >= 0");
  }
  if (!(peripheral_deficit_tol >= 0.0) || !(foveal_deficit_tol >= 0.0) ||
      !(noticeability_tol >= 0.0)) {
    throw InvariantError("classifier config: tolerances must be >= 0");
  }
  if (!(invariance_extent > 0.0)) {
    throw InvariantError("classifier config: invariance_extent must be positive");
  }
  if (!(gaze_scan_step > 0.0)) {
    throw InvariantError("classifier config: gaze_scan_step must be positive");
  }
  if (!(0.0 < class4_bound && class4_bound < class3_bound && class3_bound < full_gaze_range)) {
    throw InvariantError(
        "classifier config: need 0 < class4_bound < class3_bound < full_gaze_range");
  }
}

char letter(ResolutionClass c) { return static_cast<char>('A' + static_cast<int>(c)); }

int digit(GazeClass c) { return static_cast<int>(c); }

ResolutionClassification resolution_class(const DisplaySpec& spec, const AcuityModel& adf,
                                          const ClassifierConfig& cfg) {
  cfg.validate();
  const ResolutionProfile rdf = build_rdf(spec);
  ResolutionClassification out;
  auto& ev = out.evidence;
  ev.foveal_deficit = pixel_deficit(rdf, adf, 0.0, cfg.fovea_boundary_for(adf));
  const auto window = peripheral_window(spec, cfg);
  ev.peripheral_deficit = pixel_deficit(rdf, adf, window.begin, window.end);
  ev.edge_artifact = spec.half_fov() < cfg.min_full_field_half_angle;
  ev.foveal_match = ev.foveal_deficit <= cfg.foveal_deficit_tol;
  ev.peripheral_clean = ev.peripheral_deficit <= cfg.peripheral_deficit_tol && !ev.edge_artifact;

  if (ev.foveal_match) {
    out.cls = ev.peripheral_clean ? ResolutionClass::A : ResolutionClass::B;
  } else {
    out.cls = ev.peripheral_clean ? ResolutionClass::C : ResolutionClass::D;
  }
  return out;
}

GazeClass gaze_class_for_range(Degrees g, const ClassifierConfig& cfg) {
  if (g < cfg.class4_bound) return GazeClass::Non;
  if (g < cfg.class3_bound) return GazeClass::Partially;
  if (g < cfg.full_gaze_range) return GazeClass::Practically;
  return GazeClass::Fully;
}

GazeClassification gaze_class(const DisplaySpec& spec, const AcuityModel& adf,
                              const ClassifierConfig& cfg) {
  const Degrees g = gaze_invariance_range(spec, adf, cfg);
  return {gaze_class_for_range(g, cfg), g};
}

AcuityModel AdfOptions::build(const SnellenFraction& acuity) const {
  return inflate_for_foveation_error(make_adf(kind, acuity, fovea_half_width, roll_off),
                                     foveation_error);
}

bool in_practical_acuity_range(const SnellenFraction& acuity) {
  const double v = acuity.value();
  return v >= 0.5 && v <= 2.0;
}

ClassificationResult classify(const DisplaySpec& spec, const SnellenFraction& acuity,
                              const ClassifierConfig& cfg, const AdfOptions& adf_options) {
  const AcuityModel adf = adf_options.build(acuity);
  const auto res = resolution_class(spec, adf, cfg);
  const auto gaze = gaze_class(spec, adf, cfg);

  ClassificationResult out;
  out.acuity_label = acuity.label();
  out.resolution_class = res.cls;
  out.gaze_class = gaze.cls;
  out.combined = format_combined_label(out.acuity_label, res.cls, gaze.cls);
  out.evidence = res.evidence;
  out.gaze_invariance_range = gaze.invariance_range;
  if (!in_practical_acuity_range(acuity)) {
    out.warnings.push_back("acuity " + out.acuity_label +
                           " is outside the practical evaluation range 20/40 to 20/10");
  }
  return out;
}

std::vector<ClassificationResult> classify_batch(std::span<const DisplaySpec> specs,
                                                 const SnellenFraction& acuity,
                                                 const ClassifierConfig& cfg,
                                                 const AdfOptions& adf, Execution exec) {
  cfg.validate();
  for (const auto& spec : specs) validate(spec);
  std::vector<ClassificationResult> results(specs.size());
  const auto count = static_cast<std::ptrdiff_t>(specs.size());
  if (exec == Execution::Serial) {
    for (std::ptrdiff_t i = 0; i < count; ++i) results[i] = classify(specs[i], acuity, cfg, adf);
    return results;
  }
  // Inputs are validated above; anything thrown here is rethrown after the loop.
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      results[i] = classify(specs[i], acuity, cfg, adf);
    } catch (...) {
#pragma omp critical
      failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return results;
}

std::string format_combined_label(std::string_view acuity_label, ResolutionClass r, GazeClass g) {
  std::string out(acuity_label);
  out += ' ';
  out += letter(r);
  out += static_cast<char>('0' + digit(g));
  return out;
}

CombinedLabel parse_combined_label(std::string_view text) {
  const auto space = text.rfind(' ');
  if (space == std::string_view::npos || text.size() != space + 3) {
    throw ParseError("combined label '" + std::string(text) +
                     "' must look like '<acuity> <letter><digit>'");
  }
  const auto acuity = text.substr(0, space);
  if (acuity.empty() || std::isspace(static_cast<unsigned char>(acuity.front())) ||
      std::isspace(static_cast<unsigned char>(acuity.back()))) {
    throw ParseError("combined label '" + std::string(text) + "': stray whitespace");
  }
  const char l = text[space + 1];
  const char d = text[space + 2];
  if (l < 'A' || l > 'D') {
    throw ParseError("combined label: resolution class '" + std::string(1, l) + "' not in A-D");
  }
  if (d < '1' || d > '4') {
    throw ParseError("combined label: gaze class '" + std::string(1, d) + "' not in 1-4");
  }
  parse_snellen(acuity);
  return {std::string(acuity), static_cast<ResolutionClass>(l - 'A'),
          static_cast<GazeClass>(d - '0')};
}

}  // namespace fovclass
