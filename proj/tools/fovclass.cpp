// fovclass: conversions, acuity/resolution curves, metrics and
// classification of display specs.

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fovclass/classify.hpp"
#include "fovclass/error.hpp"
#include "fovclass/metrics.hpp"
#include "fovclass/specio.hpp"

namespace {

using namespace fovclass;

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string shortest(double v) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::optional<EccentricityRange> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) return std::nullopt;
  double a = 0.0, b = 0.0;
  const char* first = text.data();
  const char* mid = first + colon;
  const char* last = first + text.size();
  const auto ra = std::from_chars(first, mid, a);
  const auto rb = std::from_chars(mid + 1, last, b);
  if (ra.ec != std::errc() || ra.ptr != mid || rb.ec != std::errc() || rb.ptr != last) {
    return std::nullopt;
  }
  if (!(a >= 0.0) || !(b >= a)) return std::nullopt;
  return EccentricityRange{a, b};
}

const CLI::Validator kSnellen(
    [](std::string& s) -> std::string {
      try {
        parse_snellen(s);
        return {};
      } catch (const std::exception& e) {
        return e.what();
      }
    },
    "N/M", "snellen");

const CLI::Validator kRange(
    [](std::string& s) -> std::string {
      return parse_range(s) ? std::string() : "expected a:b with 0 <= a <= b, got '" + s + "'";
    },
    "A:B", "range");

const CLI::Validator kAdfKind(
    [](std::string& s) -> std::string {
      try {
        parse_adf_kind(s);
        return {};
      } catch (const std::exception& e) {
        return e.what();
      }
    },
    "constant-fovea|slope", "adf-kind");

struct AdfFlags {
  std::string kind = "constant-fovea";
  Degrees e0 = kDefaultFoveaHalfWidth;
  std::optional<double> roll_off;
  std::optional<double> slope;
  Degrees fov_error = 0.0;

  AdfOptions options() const {
    AdfOptions o;
    o.kind = parse_adf_kind(kind);
    o.fovea_half_width = e0;
    o.roll_off = o.kind == AdfKind::Slope ? slope : roll_off;
    o.foveation_error = fov_error;
    return o;
  }
};

void add_adf_shape_flags(CLI::App* cmd, AdfFlags& f) {
  cmd->add_option("--e0", f.e0, "fovea half-width in degrees")->capture_default_str();
  cmd->add_option("--roll-off", f.roll_off, "constant-fovea roll-off S (default 75)");
  cmd->add_option("--slope", f.slope, "slope-model S' (default 0.55; 0.44 for Wertheim)");
}

void add_adf_flags(CLI::App* cmd, AdfFlags& f) {
  cmd->add_option("--adf-model", f.kind, "acuity model")->check(kAdfKind)->capture_default_str();
  add_adf_shape_flags(cmd, f);
  cmd->add_option("--fov-error", f.fov_error, "foveation error in degrees")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
}

void add_config_flags(CLI::App* cmd, ClassifierConfig& c) {
  cmd->add_option("--fovea-boundary", c.fovea_boundary, "end of the foveal interval (default e0)");
  cmd->add_option("--periphery-start", c.periphery_start)->capture_default_str();
  cmd->add_option("--min-full-field", c.min_full_field_half_angle,
                  "half-fov below which the display edge is an artifact")
      ->capture_default_str();
  cmd->add_option("--peripheral-tol", c.peripheral_deficit_tol, "cycles")->capture_default_str();
  cmd->add_option("--foveal-tol", c.foveal_deficit_tol, "cycles")->capture_default_str();
  cmd->add_option("--noticeability-tol", c.noticeability_tol, "cpd")->capture_default_str();
  cmd->add_option("--invariance-extent", c.invariance_extent)->capture_default_str();
  cmd->add_option("--gaze-step", c.gaze_scan_step)->capture_default_str();
  cmd->add_option("--class4-bound", c.class4_bound)->capture_default_str();
  cmd->add_option("--class3-bound", c.class3_bound)->capture_default_str();
  cmd->add_option("--full-gaze-range", c.full_gaze_range)->capture_default_str();
}

std::string describe(const AcuityModel& m) {
  std::string s = std::string(to_string(m.kind())) + ", F=" + shortest(m.foveal_acuity()) +
                  " cpd, " + (m.kind() == AdfKind::Slope ? "S'=" : "S=") + shortest(m.roll_off()) +
                  ", e0=" + shortest(m.fovea_half_width()) + " deg";
  if (m.foveation_error() > 0.0) {
    s += ", foveation error " + shortest(m.foveation_error()) + " deg";
  }
  return s;
}

void print_config(std::ostream& os, const ClassifierConfig& c, const AcuityModel& adf) {
  os << "config:\n"
     << "  fovea_boundary        " << shortest(c.fovea_boundary_for(adf)) << " deg"
     << (c.fovea_boundary ? "" : " (e0)") << "\n"
     << "  periphery_start       " << shortest(c.periphery_start) << " deg\n"
     << "  min_full_field        " << shortest(c.min_full_field_half_angle) << " deg\n"
     << "  peripheral_tol        " << shortest(c.peripheral_deficit_tol) << " cycles\n"
     << "  foveal_tol            " << shortest(c.foveal_deficit_tol) << " cycles\n"
     << "  noticeability_tol     " << shortest(c.noticeability_tol) << " cpd\n"
     << "  invariance_extent     " << shortest(c.invariance_extent) << " deg\n"
     << "  gaze_step             " << shortest(c.gaze_scan_step) << " deg\n"
     << "  class bounds 4/3/2|1  " << shortest(c.class4_bound) << " / "
     << shortest(c.class3_bound) << " / " << shortest(c.full_gaze_range) << " deg\n";
}

constexpr const char* kUnevaluatedNote =
    "note: only resolution and display-edge artifacts are modeled; color differences and "
    "flicker are not evaluated\n";

int cmd_convert(const std::string& snellen, std::optional<double> distance) {
  const auto fraction = parse_snellen(snellen);
  const double cpd = snellen_to_cpd(fraction);
  std::cout << fraction.label() << " = " << fixed(cpd, 1) << " cpd\n";
  if (distance) {
    std::cout << fixed(cpd_to_dpi(cpd, *distance), 1) << " dpi at " << shortest(*distance)
              << " in\n";
  }
  return 0;
}

struct CurvesArgs {
  std::vector<std::string> models;
  std::vector<std::string> acuities;
  std::vector<double> fov_errors;
  AdfFlags shape;
  std::vector<std::string> specs;
  Degrees gaze = 0.0;
  std::string range = "0:80";
  Degrees step = 0.5;
  std::string out;
};

int cmd_curves(const CurvesArgs& a) {
  std::vector<NamedCurve> curves;
  const bool want_adf =
      !a.models.empty() || !a.acuities.empty() || !a.fov_errors.empty() || a.specs.empty();
  if (want_adf) {
    const auto models = a.models.empty() ? std::vector<std::string>{"constant-fovea"} : a.models;
    const auto acuities = a.acuities.empty() ? std::vector<std::string>{"20/20"} : a.acuities;
    const auto errors = a.fov_errors.empty() ? std::vector<double>{0.0} : a.fov_errors;
    for (const auto& model : models) {
      for (const auto& acuity : acuities) {
        for (double err : errors) {
          AdfFlags f = a.shape;
          f.kind = model;
          f.fov_error = err;
          const auto fraction = parse_snellen(acuity);
          const AcuityModel m = f.options().build(fraction);
          std::string name = "adf:" + model + ":" + fraction.label();
          if (err > 0.0) name += ":err" + shortest(err);
          curves.push_back({name, [m](Degrees e) { return m(e); }});
        }
      }
    }
  }
  for (const auto& path : a.specs) {
    const auto spec = load_display_spec(path);
    const ResolutionProfile p = perceived_profile(spec, a.gaze);
    std::string name = "rdf:" + spec.name;
    if (a.gaze != 0.0) name += ":gaze" + shortest(a.gaze);
    curves.push_back({name, [p](Degrees e) { return p(e); }});
  }
  const auto range = *parse_range(a.range);
  const std::string csv = to_csv(emit_curves(curves, range.begin, range.end, a.step));
  if (a.out.empty() || a.out == "-") {
    std::cout << csv;
    return 0;
  }
  std::ofstream file(a.out, std::ios::binary);
  if (!file) throw std::runtime_error(a.out + ": cannot open for writing");
  file << csv;
  if (!file.flush()) throw std::runtime_error(a.out + ": write failed");
  return 0;
}

struct MetricsArgs {
  std::string spec;
  std::string acuity = "20/20";
  std::string range;
  AdfFlags adf;
  ClassifierConfig cfg;
};

int cmd_metrics(const MetricsArgs& a) {
  const auto spec = load_display_spec(a.spec);
  const auto fraction = parse_snellen(a.acuity);
  const AcuityModel adf = a.adf.options().build(fraction);
  std::optional<EccentricityRange> range;
  if (!a.range.empty()) range = parse_range(a.range);
  const auto r = evaluate_metrics(spec, adf, a.cfg, range);
  const Degrees g = gaze_invariance_range(spec, adf, a.cfg);
  const auto window = peripheral_window(spec, a.cfg);

  auto& os = std::cout;
  os << "display: " << spec.name << "\n"
     << "acuity: " << fraction.label() << " (" << describe(adf) << ")\n"
     << "range: [" << shortest(r.eval_range.begin) << ", " << shortest(r.eval_range.end)
     << "] deg\n"
     << "  cycle count          " << fixed(r.cycle_count, 6) << "\n"
     << "  pixel deficit        " << fixed(r.deficit, 6) << "\n"
     << "  pixel waste          " << fixed(r.waste, 6) << "\n"
     << "  rdf efficiency       "
     << (std::isnan(r.efficiency) ? std::string("undefined (no display cycles)")
                                  : fixed(r.efficiency, 6) + " (" +
                                        fixed(100.0 * r.efficiency, 2) + "%)")
     << "\n"
     << "  foveal deficit       " << fixed(r.foveal_deficit, 6) << " on [0, "
     << shortest(a.cfg.fovea_boundary_for(adf)) << "]\n"
     << "  peripheral deficit   " << fixed(r.peripheral_deficit, 6) << " on ["
     << shortest(window.begin) << ", " << shortest(window.end) << "]\n"
     << "  gaze invariance      " << fixed(g, 3) << " deg\n";
  if (!in_practical_acuity_range(fraction)) {
    os << "warning: acuity " << fraction.label()
       << " is outside the practical evaluation range 20/40 to 20/10\n";
  }
  return 0;
}

struct ClassifyArgs {
  std::vector<std::string> specs;
  std::string acuity = "20/20";
  AdfFlags adf;
  ClassifierConfig cfg;
};

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_classify(const ClassifyArgs& a) {
  a.cfg.validate();
  std::vector<DisplaySpec> specs;
  for (const auto& path : a.specs) specs.push_back(load_display_spec(path));
  const auto fraction = parse_snellen(a.acuity);
  const AdfOptions options = a.adf.options();
  const AcuityModel adf = options.build(fraction);
  const auto results = classify_batch(specs, fraction, a.cfg, options);

  auto& os = std::cout;
  os << "acuity: " << fraction.label() << " (" << describe(adf) << ")\n";
  print_config(os, a.cfg, adf);
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& r = results[i];
    const auto& ev = r.evidence;
    os << "\n[" << specs[i].name << "] " << a.specs[i] << "\n"
       << "  resolution class " << letter(r.resolution_class) << "\n"
       << "    foveal deficit      " << fixed(ev.foveal_deficit, 6)
       << " (match: " << yes_no(ev.foveal_match) << ")\n"
       << "    peripheral deficit  " << fixed(ev.peripheral_deficit, 6)
       << " (clean: " << yes_no(ev.peripheral_clean) << ")\n"
       << "    display edge inside required field: " << yes_no(ev.edge_artifact) << "\n"
       << "  gaze class " << digit(r.gaze_class) << "\n"
       << "    gaze invariance     " << fixed(r.gaze_invariance_range, 3) << " deg\n";
    for (const auto& w : r.warnings) os << "  warning: " << w << "\n";
  }
  os << "\n" << kUnevaluatedNote << "\n";
  for (std::size_t i = 0; i < specs.size(); ++i) {
    os << specs[i].name << ": " << results[i].combined << "\n";
  }
  return 0;
}

int run(int argc, char** argv) {
  CLI::App app{"Foveated display classification against acuity models"};
  app.require_subcommand(1);

  auto* convert = app.add_subcommand("convert", "Snellen fraction to cpd and dpi");
  std::string snellen;
  std::optional<double> distance;
  convert->add_option("--snellen", snellen, "acuity as N/M")->required()->check(kSnellen);
  convert->add_option("--distance-in", distance, "viewing distance in inches")
      ->check(CLI::PositiveNumber);

  auto* curves = app.add_subcommand("curves", "Sample ADF and RDF curves to CSV");
  CurvesArgs ca;
  curves->add_option("--adf-model", ca.models, "acuity model (repeatable)")->check(kAdfKind);
  curves->add_option("--acuity", ca.acuities, "acuity N/M (repeatable)")->check(kSnellen);
  curves->add_option("--fov-error", ca.fov_errors, "foveation error in degrees (repeatable)")
      ->check(CLI::NonNegativeNumber);
  add_adf_shape_flags(curves, ca.shape);
  curves->add_option("--spec", ca.specs, "display spec file (repeatable)");
  curves->add_option("--gaze", ca.gaze, "gaze angle for spec RDFs")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  curves->add_option("--range", ca.range, "eccentricity range a:b")
      ->check(kRange)
      ->capture_default_str();
  curves->add_option("--step", ca.step, "sample spacing in degrees")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  curves->add_option("--out", ca.out, "output CSV (default stdout)");

  auto* metrics = app.add_subcommand("metrics", "Pixel deficit, waste and RDF efficiency");
  MetricsArgs ma;
  metrics->add_option("--spec", ma.spec, "display spec file")->required();
  metrics->add_option("--acuity", ma.acuity)->check(kSnellen)->capture_default_str();
  metrics->add_option("--range", ma.range, "evaluation range a:b (default whole display)")
      ->check(kRange);
  add_adf_flags(metrics, ma.adf);
  add_config_flags(metrics, ma.cfg);

  auto* classify_cmd = app.add_subcommand("classify", "Combined resolution/gaze classification");
  ClassifyArgs cl;
  classify_cmd->add_option("--spec,specs", cl.specs, "display spec files")->required();
  classify_cmd->add_option("--acuity", cl.acuity)->check(kSnellen)->capture_default_str();
  add_adf_flags(classify_cmd, cl.adf);
  add_config_flags(classify_cmd, cl.cfg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (*convert) return cmd_convert(snellen, distance);
  if (*curves) return cmd_curves(ca);
  if (*metrics) return cmd_metrics(ma);
  return cmd_classify(cl);
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "fovclass: " << e.what() << "\n";
    return 1;
  }
}
