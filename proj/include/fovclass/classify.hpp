#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fovclass/acuity.hpp"
#include "fovclass/config.hpp"
#include "fovclass/display.hpp"
#include "fovclass/kernels.hpp"

namespace fovclass {

/// A: acuity matched, B: foveally matched, C: peripherally matched,
/// D: non-acuity matched. B and C are not ranked against each other.
enum class ResolutionClass { A, B, C, D };

/// 1: fully, 2: practically, 3: partially, 4: non-foveated.
enum class GazeClass { Fully = 1, Practically = 2, Partially = 3, Non = 4 };

char letter(ResolutionClass c);
int digit(GazeClass c);

struct ResolutionEvidence {
  double foveal_deficit = 0.0;
  double peripheral_deficit = 0.0;
  bool edge_artifact = false;
  bool foveal_match = false;
  bool peripheral_clean = false;
};

struct ResolutionClassification {
  ResolutionClass cls = ResolutionClass::D;
  ResolutionEvidence evidence;
};

/// Foveal match: deficit on [0, fovea boundary] within tolerance. Peripheral
/// clean: deficit on the peripheral window within tolerance and no visible
/// display edge inside the required field.
ResolutionClassification resolution_class(const DisplaySpec& spec, const AcuityModel& adf,
                                          const ClassifierConfig& cfg);

struct GazeClassification {
  GazeClass cls = GazeClass::Non;
  Degrees invariance_range = 0.0;
};

GazeClass gaze_class_for_range(Degrees invariance_range, const ClassifierConfig& cfg);
GazeClassification gaze_class(const DisplaySpec& spec, const AcuityModel& adf,
                              const ClassifierConfig& cfg);

/// How the ADF is built from a Snellen acuity for classification.
struct AdfOptions {
  AdfKind kind = AdfKind::ConstantFoveaSize;
  Degrees fovea_half_width = kDefaultFoveaHalfWidth;
  std::optional<double> roll_off;
  Degrees foveation_error = 0.0;

  AcuityModel build(const SnellenFraction& acuity) const;
};

struct ClassificationResult {
  std::string acuity_label;
  ResolutionClass resolution_class = ResolutionClass::D;
  GazeClass gaze_class = GazeClass::Non;
  /// acuity_label + " " + letter + digit, e.g. "20/20 A3".
  std::string combined;
  ResolutionEvidence evidence;
  Degrees gaze_invariance_range = 0.0;
  std::vector<std::string> warnings;
};

/// Acuities between 20/40 and 20/10 are the practical evaluation range.
bool in_practical_acuity_range(const SnellenFraction& acuity);

ClassificationResult classify(const DisplaySpec& spec, const SnellenFraction& acuity,
                              const ClassifierConfig& cfg, const AdfOptions& adf = {});

/// Classifies every spec; results are in input order.
std::vector<ClassificationResult> classify_batch(std::span<const DisplaySpec> specs,
                                                 const SnellenFraction& acuity,
                                                 const ClassifierConfig& cfg,
                                                 const AdfOptions& adf = {},
                                                 Execution exec = Execution::Parallel);

struct CombinedLabel {
  std::string acuity_label;
  ResolutionClass resolution_class = ResolutionClass::D;
  GazeClass gaze_class = GazeClass::Non;
  friend bool operator==(const CombinedLabel&, const CombinedLabel&) = default;
};

std::string format_combined_label(std::string_view acuity_label, ResolutionClass r, GazeClass g);
/// Inverse of format_combined_label. Throws ParseError.
CombinedLabel parse_combined_label(std::string_view text);

}  // namespace fovclass
