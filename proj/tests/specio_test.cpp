#include "fovclass/specio.hpp"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fovclass/error.hpp"
#include "oracles.hpp"

namespace fovclass {
namespace {

std::string spec_path(const std::string& name) {
  return std::string(FOVCLASS_SPEC_DIR) + "/" + name + ".spec.json";
}

const char* const kBundled[] = {"vive", "vive_pro", "hololens", "varjo_vr1", "kim2019",
                                "brute_force"};

template <typename E>
std::string error_of(std::string_view text) {
  try {
    parse_display_spec(text);
  } catch (const E& e) {
    return e.what();
  }
  ADD_FAILURE() << "no error for " << text;
  return {};
}

TEST(ParseDisplaySpec, BundledVive) {
  const auto s = load_display_spec(spec_path("vive"));
  EXPECT_EQ(s.name, "vive");
  ASSERT_EQ(s.tiers.size(), 1u);
  EXPECT_EQ(s.tiers[0], (Tier{5.4, 50.0}));
  EXPECT_EQ(s.degradation.kind, OffAxisDegradation::Kind::PiecewiseLinear);
  EXPECT_EQ(s.degradation.breakpoints.front(), (std::pair<Degrees, double>{0.0, 1.0}));
}

TEST(ParseDisplaySpec, BundledTierLayouts) {
  const auto varjo = load_display_spec(spec_path("varjo_vr1"));
  ASSERT_EQ(varjo.tiers.size(), 2u);
  EXPECT_EQ(varjo.tiers[0], (Tier{30.0, 16.0}));
  EXPECT_EQ(varjo.tiers[1], (Tier{7.2, 50.0}));
  const auto kim = load_display_spec(spec_path("kim2019"));
  EXPECT_TRUE(kim.tiers[0].steerable);
  EXPECT_GT(kim.tiers[0].steer_range, 0.0);
  EXPECT_EQ(load_display_spec(spec_path("hololens")).half_fov(), 15.0);
}

TEST(ParseDisplaySpec, MinimalDocumentGetsDefaults) {
  const auto s = parse_display_spec(
      R"({"name": "m", "tiers": [{"resolution_cpd": 10, "half_fov_deg": 20}]})");
  EXPECT_EQ(s.tiers[0], (Tier{10.0, 20.0}));
  EXPECT_EQ(s.degradation.kind, OffAxisDegradation::Kind::None);
  EXPECT_TRUE(s.notes.empty());
}

TEST(ParseDisplaySpec, SchemaErrorsNameTheField) {
  EXPECT_NE(error_of<ParseError>(R"({"name": "x", "tiers": []})").find("/tiers"),
            std::string::npos);
  EXPECT_NE(error_of<ParseError>(R"({"tiers": [{"resolution_cpd": 1, "half_fov_deg": 2}]})")
                .find("name"),
            std::string::npos);
  const auto unknown = error_of<ParseError>(
      R"({"name": "x", "tiers": [{"resolution_cpd": 1, "half_fov_deg": 2, "colour": 3}]})");
  EXPECT_NE(unknown.find("/tiers/0/colour"), std::string::npos) << unknown;
  const auto wrong_type = error_of<ParseError>(
      R"({"name": "x", "tiers": [{"resolution_cpd": "high", "half_fov_deg": 2}]})");
  EXPECT_NE(wrong_type.find("/tiers/0/resolution_cpd"), std::string::npos) << wrong_type;
  EXPECT_NE(error_of<ParseError>(R"({"name": "x", "tiers": [{"resolution_cpd": 1,
      "half_fov_deg": 2}], "degradation": {"kind": "wavy"}})")
                .find("/degradation/kind"),
            std::string::npos);
  error_of<ParseError>("[1, 2]");
}

TEST(ParseDisplaySpec, SyntaxErrorsCarryLineAndColumn) {
  const auto what = error_of<ParseError>("{\n  \"name\": \"x\",\n  \"tiers\": [,]\n}");
  EXPECT_NE(what.find("line 3, column"), std::string::npos) << what;
  EXPECT_NE(error_of<ParseError>("").find("line 1"), std::string::npos);
}

TEST(ParseDisplaySpec, InvariantViolations) {
  const auto neg = error_of<InvariantError>(
      R"({"name": "x", "tiers": [{"resolution_cpd": -5, "half_fov_deg": 20}]})");
  EXPECT_NE(neg.find("resolution"), std::string::npos) << neg;
  error_of<InvariantError>(R"({"name": "x", "tiers": [{"resolution_cpd": 5, "half_fov_deg": 20},
      {"resolution_cpd": 10, "half_fov_deg": 40}]})");
  error_of<InvariantError>(R"({"name": "x", "tiers": [{"resolution_cpd": 5, "half_fov_deg": 20,
      "steerable": true}]})");
}

TEST(LoadDisplaySpec, MissingFileNamesThePath) {
  try {
    load_display_spec("/nonexistent/zz.spec.json");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("/nonexistent/zz.spec.json"), std::string::npos);
  }
}

TEST(SerializeDisplaySpec, BundledRoundTrip) {
  for (const char* name : kBundled) {
    const auto s = load_display_spec(spec_path(name));
    const auto text = serialize_display_spec(s);
    EXPECT_EQ(parse_display_spec(text), s) << name;
    EXPECT_EQ(serialize_display_spec(parse_display_spec(text)), text) << name;
  }
}

TEST(SerializeDisplaySpec, RandomSpecsRoundTrip) {
  oracle::SpecGenerator gen(9);
  for (int i = 0; i < 300; ++i) {
    const auto s = gen();
    EXPECT_EQ(parse_display_spec(serialize_display_spec(s)), s);
  }
}

TEST(SerializeDisplaySpec, EmitsDefaultsExplicitly) {
  const auto text = serialize_display_spec(parse_display_spec(
      R"({"name": "m", "tiers": [{"resolution_cpd": 10, "half_fov_deg": 20}]})"));
  for (const char* key : {"\"steerable\": false", "\"steer_range_deg\": 0.0",
                          "\"blend_width_deg\": 0.0", "\"kind\": \"none\"", "\"breakpoints\": []",
                          "\"notes\": \"\""}) {
    EXPECT_NE(text.find(key), std::string::npos) << key << "\n" << text;
  }
  EXPECT_EQ(text.back(), '\n');
}

TEST(AcuityModelIo, RoundTripAndErrors) {
  for (const auto& m : {make_adf(AdfKind::ConstantFoveaSize, {20, 20}),
                        inflate_for_foveation_error(make_adf(AdfKind::Slope, {20, 30}, 1.5), 2.0)}) {
    EXPECT_EQ(parse_acuity_model(serialize_acuity_model(m)), m);
  }
  const auto m = parse_acuity_model(R"({"model": "slope", "foveal_acuity_cpd": 15})");
  EXPECT_EQ(m.roll_off(), kAnstisSlope);
  EXPECT_EQ(m.fovea_half_width(), 2.0);
  EXPECT_THROW(parse_acuity_model(R"({"model": "slope"})"), ParseError);
  EXPECT_THROW(parse_acuity_model(R"({"model": "cubic", "foveal_acuity_cpd": 15})"), ParseError);
  EXPECT_THROW(parse_acuity_model(R"({"model": "slope", "foveal_acuity_cpd": 0})"), InvariantError);
  EXPECT_THROW(parse_acuity_model(R"({"model": "slope", "foveal_acuity_cpd": 1, "x": 1})"),
               ParseError);
}

TEST(EmitCurves, GridAndColumns) {
  const auto adf = make_adf(AdfKind::ConstantFoveaSize, {20, 20});
  const auto rdf = build_rdf(load_display_spec(spec_path("varjo_vr1")));
  const auto table = emit_curves({{"adf", [&](Degrees e) { return adf(e); }},
                                  {"rdf", [&](Degrees e) { return rdf(e); }}},
                                 0.0, 80.0, 0.5);
  EXPECT_EQ(table.columns, (std::vector<std::string>{"adf", "rdf"}));
  ASSERT_EQ(table.eccentricities.size(), 161u);
  ASSERT_EQ(table.rows.size(), 161u);
  EXPECT_EQ(table.rows[0], (std::vector<double>{30.0, 30.0}));
  EXPECT_EQ(table.rows[40][1], 7.2);
  EXPECT_EQ(table.rows[160][1], 0.0);
  for (std::size_t i = 1; i < table.eccentricities.size(); ++i) {
    EXPECT_GT(table.eccentricities[i], table.eccentricities[i - 1]);
  }
}

TEST(EmitCurves, Errors) {
  const NamedCurve one{"one", [](Degrees) { return 1.0; }};
  EXPECT_THROW(emit_curves({}, 0.0, 1.0, 0.1), DomainError);
  EXPECT_THROW(emit_curves({one}, 0.0, 1.0, 0.0), DomainError);
  EXPECT_THROW(emit_curves({one}, 1.0, 0.0, 0.1), DomainError);
}

TEST(ToCsv, FormatIsFixedAndDeterministic) {
  const auto adf = make_adf(AdfKind::ConstantFoveaSize, {20, 20});
  auto make = [&] {
    return to_csv(emit_curves({{"20/20", [&](Degrees e) { return adf(e); }}}, 0.0, 80.0, 0.5));
  };
  const auto csv = make();
  EXPECT_EQ(csv, make());
  EXPECT_EQ(csv.rfind("eccentricity_deg,20/20\n0.000000,30.000000\n", 0), 0u);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 162);
  EXPECT_NE(csv.find("\n80.000000,0.931677\n"), std::string::npos);
}

}  // namespace
}  // namespace fovclass
