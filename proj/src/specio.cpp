#include "fovclass/specio.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <initializer_list>
#include <nlohmann/json.hpp>
#include <sstream>

#include "fovclass/error.hpp"
#include "fovclass/kernels.hpp"

namespace fovclass {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void schema_error(const std::string& pointer, const std::string& what) {
  throw ParseError((pointer.empty() ? std::string("/") : pointer) + ": " + what);
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // Byte offsets are 1-based and point just past the offending character.
    const std::size_t upto = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < upto; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string detail = e.what();
    if (auto pos = detail.find(": "); pos != std::string::npos) detail = detail.substr(pos + 2);
    throw ParseError("line " + std::to_string(line) + ", column " + std::to_string(column) +
                     ": " + detail);
  }
}

void require_object(const json& j, const std::string& pointer,
                    std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) schema_error(pointer, "expected an object");
  for (const auto& [key, value] : j.items()) {
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
      schema_error(pointer + "/" + key, "unknown key '" + key + "'");
    }
  }
}

double get_number(const json& obj, const std::string& pointer, const char* key,
                  std::optional<double> fallback = std::nullopt) {
  const std::string where = pointer + "/" + key;
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    schema_error(where, "missing required number");
  }
  const json& v = obj.at(key);
  if (!v.is_number()) schema_error(where, "expected a number");
  return v.get<double>();
}

std::string get_string(const json& obj, const std::string& pointer, const char* key,
                       std::optional<std::string> fallback = std::nullopt) {
  const std::string where = pointer + "/" + key;
  if (!obj.contains(key)) {
    if (fallback) return *fallback;
    schema_error(where, "missing required string");
  }
  const json& v = obj.at(key);
  if (!v.is_string()) schema_error(where, "expected a string");
  return v.get<std::string>();
}

bool get_bool(const json& obj, const std::string& pointer, const char* key, bool fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_boolean()) schema_error(pointer + "/" + key, "expected true or false");
  return v.get<bool>();
}

Tier parse_tier(const json& j, const std::string& pointer) {
  require_object(j, pointer,
                 {"resolution_cpd", "half_fov_deg", "steerable", "steer_range_deg",
                  "blend_width_deg"});
  Tier t;
  t.resolution = get_number(j, pointer, "resolution_cpd");
  t.half_fov = get_number(j, pointer, "half_fov_deg");
  t.steer_range = get_number(j, pointer, "steer_range_deg", 0.0);
  t.steerable = get_bool(j, pointer, "steerable", t.steer_range > 0.0);
  t.blend_width = get_number(j, pointer, "blend_width_deg", 0.0);
  return t;
}

OffAxisDegradation parse_degradation(const json& j, const std::string& pointer) {
  require_object(j, pointer, {"kind", "breakpoints"});
  OffAxisDegradation d;
  const std::string kind = get_string(j, pointer, "kind", "none");
  if (kind == "none") {
    d.kind = OffAxisDegradation::Kind::None;
  } else if (kind == "piecewise-linear") {
    d.kind = OffAxisDegradation::Kind::PiecewiseLinear;
  } else {
    schema_error(pointer + "/kind", "expected 'none' or 'piecewise-linear', got '" + kind + "'");
  }
  if (j.contains("breakpoints")) {
    const json& bps = j.at("breakpoints");
    if (!bps.is_array()) schema_error(pointer + "/breakpoints", "expected an array");
    for (std::size_t i = 0; i < bps.size(); ++i) {
      const std::string where = pointer + "/breakpoints/" + std::to_string(i);
      const json& bp = bps[i];
      if (!bp.is_array() || bp.size() != 2 || !bp[0].is_number() || !bp[1].is_number()) {
        schema_error(where, "expected [eccentricity_deg, multiplier]");
      }
      d.breakpoints.emplace_back(bp[0].get<double>(), bp[1].get<double>());
    }
  }
  return d;
}

const char* to_string(OffAxisDegradation::Kind kind) {
  return kind == OffAxisDegradation::Kind::None ? "none" : "piecewise-linear";
}

std::string format_fixed6(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] =
      std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::fixed, 6);
  std::string s(buf.data(), end);
  if (s == "-0.000000") s = "0.000000";
  return s;
}

}  // namespace

DisplaySpec parse_display_spec(std::string_view text) {
  const json root = parse_json(text);
  require_object(root, "", {"name", "tiers", "degradation", "notes"});
  DisplaySpec spec;
  spec.name = get_string(root, "", "name");
  if (!root.contains("tiers")) schema_error("/tiers", "missing required array");
  const json& tiers = root.at("tiers");
  if (!tiers.is_array()) schema_error("/tiers", "expected an array");
  if (tiers.empty()) schema_error("/tiers", "must list at least one tier");
  for (std::size_t i = 0; i < tiers.size(); ++i) {
    spec.tiers.push_back(parse_tier(tiers[i], "/tiers/" + std::to_string(i)));
  }
  if (root.contains("degradation")) {
    spec.degradation = parse_degradation(root.at("degradation"), "/degradation");
  }
  spec.notes = get_string(root, "", "notes", std::string{});
  validate(spec);
  return spec;
}

std::string serialize_display_spec(const DisplaySpec& spec) {
  ordered_json root;
  root["name"] = spec.name;
  ordered_json tiers = ordered_json::array();
  for (const Tier& t : spec.tiers) {
    ordered_json jt;
    jt["resolution_cpd"] = t.resolution;
    jt["half_fov_deg"] = t.half_fov;
    jt["steerable"] = t.steerable;
    jt["steer_range_deg"] = t.steer_range;
    jt["blend_width_deg"] = t.blend_width;
    tiers.push_back(std::move(jt));
  }
  root["tiers"] = std::move(tiers);
  ordered_json deg;
  deg["kind"] = to_string(spec.degradation.kind);
  ordered_json bps = ordered_json::array();
  for (const auto& [e, m] : spec.degradation.breakpoints) bps.push_back({e, m});
  deg["breakpoints"] = std::move(bps);
  root["degradation"] = std::move(deg);
  root["notes"] = spec.notes;
  return root.dump(2) + "\n";
}

DisplaySpec load_display_spec(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(path + ": cannot open display spec");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return parse_display_spec(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  } catch (const InvariantError& e) {
    throw InvariantError(path + ": " + e.what());
  }
}

AcuityModel parse_acuity_model(std::string_view text) {
  const json root = parse_json(text);
  require_object(root, "",
                 {"model", "foveal_acuity_cpd", "roll_off", "fovea_half_width_deg",
                  "foveation_error_deg"});
  const AdfKind kind = parse_adf_kind(get_string(root, "", "model", "constant-fovea"));
  const double default_roll_off = kind == AdfKind::ConstantFoveaSize ? kDefaultRollOff
                                                                     : kAnstisSlope;
  return AcuityModel(kind, get_number(root, "", "foveal_acuity_cpd"),
                     get_number(root, "", "roll_off", default_roll_off),
                     get_number(root, "", "fovea_half_width_deg", kDefaultFoveaHalfWidth),
                     get_number(root, "", "foveation_error_deg", 0.0));
}

std::string serialize_acuity_model(const AcuityModel& m) {
  ordered_json root;
  root["model"] = std::string(to_string(m.kind()));
  root["foveal_acuity_cpd"] = m.foveal_acuity();
  root["roll_off"] = m.roll_off();
  root["fovea_half_width_deg"] = m.fovea_half_width();
  root["foveation_error_deg"] = m.foveation_error();
  return root.dump(2) + "\n";
}

CurveTable emit_curves(const std::vector<NamedCurve>& curves, Degrees begin, Degrees end,
                       Degrees step) {
  if (curves.empty()) throw DomainError("emit_curves: no curves requested");
  CurveTable table;
  table.eccentricities = uniform_grid(begin, end, step);
  for (const auto& c : curves) table.columns.push_back(c.name);
  table.rows.assign(table.eccentricities.size(), std::vector<double>(curves.size()));
  for (std::size_t j = 0; j < curves.size(); ++j) {
    const auto column = sample(curves[j].eval, table.eccentricities);
    for (std::size_t i = 0; i < column.size(); ++i) table.rows[i][j] = column[i];
  }
  return table;
}

std::string to_csv(const CurveTable& table) {
  std::string out = "eccentricity_deg";
  for (const auto& name : table.columns) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t i = 0; i < table.eccentricities.size(); ++i) {
    out += format_fixed6(table.eccentricities[i]);
    for (double v : table.rows[i]) {
      out += ',';
      out += format_fixed6(v);
    }
    out += '\n';
  }
  return out;
}

}  // namespace fovclass
