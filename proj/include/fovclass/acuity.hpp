#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace fovclass {

/// Angles are in degrees of visual angle throughout the library; resolutions
/// are in cycles per degree (cpd).
using Degrees = double;
using CyclesPerDegree = double;

/// Snellen acuity ratio, e.g. 20/20 or 6/6.
struct SnellenFraction {
  double numerator = 20.0;
  double denominator = 20.0;

  double value() const { return numerator / denominator; }
  /// Shortest round-trip text, "20/20", "6/6", "20/12.5".
  std::string label() const;

  friend bool operator==(const SnellenFraction&, const SnellenFraction&) = default;
};

/// Parses "N/M" where N and M are positive decimals. Throws ParseError naming
/// the offending token.
SnellenFraction parse_snellen(std::string_view text);

/// Foveal acuity: 30 cpd scaled by the Snellen ratio.
CyclesPerDegree snellen_to_cpd(const SnellenFraction& fraction);

/// Dots per inch needed to resolve `cpd` at `viewing_distance_in` inches:
/// 1 / (D * tan(1 / (2 r))) with the angle taken in degrees.
double cpd_to_dpi(CyclesPerDegree cpd, double viewing_distance_in);

enum class AdfKind {
  ConstantFoveaSize,  ///< S / (e - e0 + S/F) beyond the fovea
  Slope,              ///< F / (S'(e - e0) + 1) beyond the fovea
};

inline constexpr double kDefaultRollOff = 75.0;       // cpd per degree, 30 cpd / 0.4 deg
inline constexpr double kWertheimSlope = 0.44;        // 1/degree
inline constexpr double kAnstisSlope = 0.55;          // 1/degree
inline constexpr Degrees kDefaultFoveaHalfWidth = 2.0;

/// Acuity distribution function: perceived resolution against gaze
/// eccentricity for one user. Immutable; evaluation is pure.
///
/// Foveation error is applied as a left shift of the argument,
/// ADF(max(e - error, 0)), which is the worst case over the error disc for a
/// non-increasing curve. The plateau therefore extends to e0 + error.
class AcuityModel {
 public:
  /// `roll_off` is S (cpd/deg) for ConstantFoveaSize and S' (1/deg) for
  /// Slope. Throws InvariantError on non-positive F or roll-off, negative e0
  /// or negative foveation error.
  AcuityModel(AdfKind kind, CyclesPerDegree foveal_acuity, double roll_off,
              Degrees fovea_half_width, Degrees foveation_error = 0.0);

  /// Throws DomainError for negative or NaN eccentricity.
  CyclesPerDegree operator()(Degrees eccentricity) const;

  AdfKind kind() const { return kind_; }
  CyclesPerDegree foveal_acuity() const { return foveal_acuity_; }
  double roll_off() const { return roll_off_; }
  Degrees fovea_half_width() const { return fovea_half_width_; }
  Degrees foveation_error() const { return foveation_error_; }
  /// Eccentricity where the plateau ends, e0 + foveation error.
  Degrees plateau_end() const { return fovea_half_width_ + foveation_error_; }

  friend bool operator==(const AcuityModel&, const AcuityModel&) = default;

 private:
  AdfKind kind_;
  CyclesPerDegree foveal_acuity_;
  double roll_off_;
  Degrees fovea_half_width_;
  Degrees foveation_error_;
};

/// Builds a model at the given Snellen acuity. When `roll_off` is omitted it
/// defaults to 75 cpd/deg (ConstantFoveaSize) or the Anstis 0.55 (Slope).
AcuityModel make_adf(AdfKind kind, const SnellenFraction& acuity,
                     Degrees fovea_half_width = kDefaultFoveaHalfWidth,
                     std::optional<double> roll_off = std::nullopt);

/// Copy of `model` with its foveation error set to `error` degrees.
AcuityModel inflate_for_foveation_error(const AcuityModel& model, Degrees error);

std::string_view to_string(AdfKind kind);
/// Accepts "constant-fovea" and "slope".
AdfKind parse_adf_kind(std::string_view text);

}  // namespace fovclass
