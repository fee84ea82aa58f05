#include "fovclass/acuity.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

#include "fovclass/error.hpp"

namespace fovclass {
namespace {

std::string format_shortest(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
}

// Digits with at most one '.', at least one digit.
bool is_plain_decimal(std::string_view token) {
  int digits = 0;
  int dots = 0;
  for (char c : token) {
    if (c >= '0' && c <= '9') {
      ++digits;
    } else if (c == '.') {
      ++dots;
    } else {
      return false;
    }
  }
  return digits > 0 && dots <= 1;
}

double parse_component(std::string_view token, std::string_view text) {
  if (!is_plain_decimal(token)) {
    throw ParseError("invalid Snellen component '" + std::string(token) + "' in '" +
                     std::string(text) + "'");
  }
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value,
                                   std::chars_format::fixed);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw ParseError("invalid Snellen component '" + std::string(token) + "'");
  }
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw ParseError("Snellen component '" + std::string(token) + "' must be positive");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

std::string SnellenFraction::label() const {
  return format_shortest(numerator) + "/" + format_shortest(denominator);
}

SnellenFraction parse_snellen(std::string_view text) {
  const auto body = trim(text);
  const auto slash = body.find('/');
  if (slash == std::string_view::npos) {
    throw ParseError("Snellen fraction '" + std::string(text) + "' has no '/'");
  }
  if (body.find('/', slash + 1) != std::string_view::npos) {
    throw ParseError("Snellen fraction '" + std::string(text) + "' has more than one '/'");
  }
  SnellenFraction f;
  f.numerator = parse_component(body.substr(0, slash), text);
  f.denominator = parse_component(body.substr(slash + 1), text);
  return f;
}

CyclesPerDegree snellen_to_cpd(const SnellenFraction& fraction) {
  // 30 * N / M; multiplying first keeps 20/40 -> 600/40 exact.
  return 30.0 * fraction.numerator / fraction.denominator;
}

double cpd_to_dpi(CyclesPerDegree cpd, double viewing_distance_in) {
  if (!(cpd > 0.0) || !std::isfinite(cpd)) {
    throw DomainError("cpd_to_dpi: resolution must be positive");
  }
  if (!(viewing_distance_in > 0.0) || !std::isfinite(viewing_distance_in)) {
    throw DomainError("cpd_to_dpi: viewing distance must be positive");
  }
  const double half_cycle_rad = (1.0 / (2.0 * cpd)) * std::numbers::pi / 180.0;
  return 1.0 / (viewing_distance_in * std::tan(half_cycle_rad));
}

AcuityModel::AcuityModel(AdfKind kind, CyclesPerDegree foveal_acuity, double roll_off,
                         Degrees fovea_half_width, Degrees foveation_error)
    : kind_(kind),
      foveal_acuity_(foveal_acuity),
      roll_off_(roll_off),
      fovea_half_width_(fovea_half_width),
      foveation_error_(foveation_error) {
  if (!(foveal_acuity > 0.0) || !std::isfinite(foveal_acuity)) {
    throw InvariantError("acuity model: foveal acuity F must be positive");
  }
  if (!(roll_off > 0.0) || !std::isfinite(roll_off)) {
    throw InvariantError(kind == AdfKind::Slope ? "acuity model: slope S' must be positive"
                                                : "acuity model: roll-off S must be positive");
  }
  if (!(fovea_half_width >= 0.0) || !std::isfinite(fovea_half_width)) {
    throw InvariantError("acuity model: fovea half-width e0 must be >= 0");
  }
  if (!(foveation_error >= 0.0) || !std::isfinite(foveation_error)) {
    throw InvariantError("acuity model: foveation error must be >= 0");
  }
}

CyclesPerDegree AcuityModel::operator()(Degrees eccentricity) const {
  if (!(eccentricity >= 0.0)) {
    throw DomainError("acuity model: eccentricity must be >= 0");
  }
  const double shifted = std::max(eccentricity - foveation_error_, 0.0);
  if (shifted <= fovea_half_width_) {
    return foveal_acuity_;
  }
  const double beyond = shifted - fovea_half_width_;
  if (kind_ == AdfKind::ConstantFoveaSize) {
    return roll_off_ / (beyond + roll_off_ / foveal_acuity_);
  }
  return foveal_acuity_ / (roll_off_ * beyond + 1.0);
}

AcuityModel make_adf(AdfKind kind, const SnellenFraction& acuity, Degrees fovea_half_width,
                     std::optional<double> roll_off) {
  const double slope =
      roll_off.value_or(kind == AdfKind::ConstantFoveaSize ? kDefaultRollOff : kAnstisSlope);
  return AcuityModel(kind, snellen_to_cpd(acuity), slope, fovea_half_width);
}

AcuityModel inflate_for_foveation_error(const AcuityModel& model, Degrees error) {
  if (!(error >= 0.0)) {
    throw DomainError("foveation error must be >= 0");
  }
  return AcuityModel(model.kind(), model.foveal_acuity(), model.roll_off(),
                     model.fovea_half_width(), error);
}

std::string_view to_string(AdfKind kind) {
  return kind == AdfKind::ConstantFoveaSize ? "constant-fovea" : "slope";
}

AdfKind parse_adf_kind(std::string_view text) {
  if (text == "constant-fovea") return AdfKind::ConstantFoveaSize;
  if (text == "slope") return AdfKind::Slope;
  throw ParseError("unknown ADF model '" + std::string(text) +
                   "' (expected constant-fovea or slope)");
}

}  // namespace fovclass
