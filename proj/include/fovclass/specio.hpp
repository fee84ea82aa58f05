#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "fovclass/acuity.hpp"
#include "fovclass/display.hpp"

namespace fovclass {

/// Display spec documents (`.spec.json`):
///
///   {
///     "name": "varjo_vr1",
///     "tiers": [
///       {"resolution_cpd": 30.0, "half_fov_deg": 16.0, "steerable": false,
///        "steer_range_deg": 0.0, "blend_width_deg": 0.0}, ...
///     ],
///     "degradation": {"kind": "none" | "piecewise-linear",
///                     "breakpoints": [[deg, multiplier], ...]},
///     "notes": "..."
///   }
///
/// Only `name` and `tiers` (with resolution_cpd and half_fov_deg) are
/// required. Unknown keys are rejected.
///
/// Errors: ParseError "line L, column C: ..." for malformed JSON; ParseError
/// "<json pointer>: ..." for schema violations; InvariantError for values
/// that break a DisplaySpec invariant.
DisplaySpec parse_display_spec(std::string_view text);

/// Canonical form: fixed key order, every field explicit, shortest
/// round-trip number formatting, two-space indent, trailing newline.
std::string serialize_display_spec(const DisplaySpec& spec);

/// Reads and parses a spec file. Throws std::runtime_error naming the path
/// when the file cannot be read; parse errors are prefixed with the path.
DisplaySpec load_display_spec(const std::string& path);

/// ADF configuration documents:
///   {"model": "constant-fovea" | "slope", "foveal_acuity_cpd": 30.0,
///    "roll_off": 75.0, "fovea_half_width_deg": 2.0, "foveation_error_deg": 0.0}
AcuityModel parse_acuity_model(std::string_view text);
std::string serialize_acuity_model(const AcuityModel& model);

struct NamedCurve {
  std::string name;
  std::function<double(Degrees)> eval;
};

/// Sampled curves on a shared eccentricity grid.
struct CurveTable {
  std::vector<std::string> columns;  // value columns, excluding eccentricity
  std::vector<Degrees> eccentricities;
  std::vector<std::vector<double>> rows;  // rows[i][j] = columns[j] at eccentricities[i]
};

/// Samples every curve on uniform_grid(begin, end, step). Throws DomainError
/// for an empty curve list, a non-positive step or end < begin.
CurveTable emit_curves(const std::vector<NamedCurve>& curves, Degrees begin, Degrees end,
                       Degrees step);

/// CSV with header "eccentricity_deg,<names...>", values with six decimals,
/// LF line endings.
std::string to_csv(const CurveTable& table);

}  // namespace fovclass
