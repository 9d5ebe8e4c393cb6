#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "gba/gba.hpp"

using namespace gba;

// Statements that must each be exercised by at least one scenario. Kept here,
// apart from the registry, so a dropped scenario shows up as a gap.
static const std::set<std::string> required_statements = {
    "relatedness-definitions", "two-related-not-three",  "rc-height-bound",           "ti-height-two",
    "component-groups-conjugate", "component-in-stabilizer", "intermediate-binary",   "point-stabilizer-bound",
    "frobenius-complement",    "two-transitive-section", "involution-graph-dichotomy", "strongly-embedded-families",
    "even-stabilizer-binary",  "sl2-trace",              "suzuki-sylow-product",      "suzuki-order-four-triple",
    "unitary-subgroups",       "lambda-two-transitive",  "isotropic-witness",         "witt-transitivity",
    "cube-graph",              "cube-class-graph",       "pseudo-frobenius",          "class-square",
    "cyclic-ti-triples",       "order-three-trace",      "star-equation",             "borel-frobenius-suborbit",
    "consecutive-squares",     "square-map",             "square-graph",              "sylow-p-component",
    "sylow-p-witness",         "psl2-classification",    "suzuki-classification",     "suzuki-class-counting",
    "ti-positive",             "ti-criterion"};

TEST(Registry, CoversEveryStatement) {
  std::set<std::string> covered;
  for (const auto& s : registry()) covered.insert(s.covers.begin(), s.covers.end());
  for (const auto& k : required_statements) EXPECT_TRUE(covered.count(k)) << "no scenario covers " << k;
  for (const auto& k : covered) EXPECT_TRUE(required_statements.count(k)) << "unlisted statement " << k;
}

TEST(Registry, IdsAreUniqueAndContractIdsExist) {
  std::set<std::string> ids;
  for (const auto& s : registry()) EXPECT_TRUE(ids.insert(s.id).second) << s.id;
  for (const char* id : {"thm-main-psl2", "thm-suzuki", "lemma-cubes"}) EXPECT_TRUE(ids.count(id)) << id;
  for (const auto& id : acceptance_scenarios()) EXPECT_TRUE(ids.count(id)) << id;
  EXPECT_EQ(acceptance_scenarios().size(), 12u);
}

TEST(Registry, UnknownScenario) {
  try {
    run("no-such-scenario");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unknown_scenario);
  }
  EXPECT_THROW(sweep("no-such-family", {4}), error);
}

TEST(Run, ContractExamples) {
  Params p;
  p.q = 8;
  EXPECT_EQ(run("thm-main-psl2", p).result, status::pass);
  EXPECT_EQ(run("thm-suzuki", p).result, status::pass);
  EXPECT_EQ(run("lemma-cubes", p).result, status::pass);
}

TEST(Run, SweepClassification) {
  auto rs = sweep("psl2-binary-classification", {4, 7, 8, 9, 11, 13});
  ASSERT_EQ(rs.size(), 6u);
  for (const auto& r : rs) EXPECT_EQ(r.result, status::pass) << r.params.dump();
  EXPECT_EQ(exit_code(rs), 0);
}

TEST(Run, Deterministic) {
  for (const char* id : {"thm-main-psl2", "ti-positive", "psu3-witness", "component-groups", "dichotomy"}) {
    auto a = run(id), b = run(id);
    EXPECT_EQ(a.measured, b.measured) << id;
    EXPECT_EQ(a.witness, b.witness) << id;
    EXPECT_EQ(a.result, b.result) << id;
  }
}

TEST(Run, CapExceededIsUnknown) {
  Params p;
  p.q = 8;
  p.group_cap = 100;
  auto r = run("thm-main-psl2", p);
  EXPECT_EQ(r.result, status::unknown);
  EXPECT_EQ(exit_code({r}), 2);
}

TEST(Run, ExitCodes) {
  Report pass, fail, unk;
  fail.result = status::fail;
  unk.result = status::unknown;
  EXPECT_EQ(exit_code({pass}), 0);
  EXPECT_EQ(exit_code({pass, unk}), 2);
  EXPECT_EQ(exit_code({unk, fail}), 1);
}

TEST(Report, FailureCarriesDiscrepancy) {
  Report r;
  r.check(true, "fine");
  EXPECT_EQ(r.result, status::pass);
  r.check(false, "broken");
  EXPECT_EQ(r.result, status::fail);
  ASSERT_EQ(r.failures.size(), 1u);
  r.mark_unknown("cap");
  EXPECT_EQ(r.result, status::fail);
}

TEST(Emit, JsonSchemaAndOrder) {
  Params p;
  p.q = 8;
  auto r = run("lemma-cubes", p);
  auto j = report_json(r);
  EXPECT_EQ(j["schema"], report_schema);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  for (const char* k : {"id", "status", "measured", "expected", "witness", "seconds"})
    EXPECT_NE(std::find(keys.begin(), keys.end(), k), keys.end()) << k;
  EXPECT_LT(std::find(keys.begin(), keys.end(), "id") - keys.begin(), std::find(keys.begin(), keys.end(), "status") - keys.begin());
}

TEST(Emit, FilesAndFormats) {
  const auto dir = std::filesystem::temp_directory_path() / "gba-emit-test";
  std::filesystem::remove_all(dir);
  Params p;
  p.q = 9;
  auto r = run("square-graph", p);
  auto js = emit(r, format::json, dir);
  auto cs = emit(r, format::csv, dir);
  auto dt = emit(r, format::dot, dir);
  for (const auto& f : {js, cs, dt}) EXPECT_TRUE(std::filesystem::exists(f)) << f;
  std::ifstream in(js);
  auto parsed = json::parse(in);
  EXPECT_EQ(parsed["id"], "square-graph");
  std::ifstream c(cs);
  std::string header;
  std::getline(c, header);
  EXPECT_EQ(header, csv_header_line());
  std::ifstream d(dt);
  std::stringstream ds;
  ds << d.rdbuf();
  EXPECT_EQ(ds.str().find("digraph"), std::string::npos);
  EXPECT_NE(ds.str().find("graph"), std::string::npos);

  auto plain = run("suzuki-counting");
  EXPECT_THROW(render(plain, format::dot), error);
  try {
    parse_format("xml");
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::unsupported_format);
  }
  std::filesystem::remove_all(dir);
}

TEST(Emit, CsvEscaping) {
  EXPECT_EQ(csv_escape("plain"), "\"plain\"");
  EXPECT_EQ(csv_escape("a\"b"), "\"a\"\"b\"");
}

TEST(Config, ParsesAndRejects) {
  std::istringstream good("# caps\ncap_group = 5000\ncap_omega=77\nout_dir = out  # here\nformat = csv\n");
  auto c = parse_config(good);
  EXPECT_EQ(c.cap_group, std::optional<std::uint64_t>(5000));
  EXPECT_EQ(c.cap_omega, std::optional<std::size_t>(77));
  EXPECT_EQ(c.out_dir, std::optional<std::string>("out"));
  EXPECT_EQ(c.format, std::optional<std::string>("csv"));
  std::istringstream bad_key("colour = red\n");
  EXPECT_THROW(parse_config(bad_key), error);
  std::istringstream bad_num("cap_group = lots\n");
  EXPECT_THROW(parse_config(bad_num), error);
  EXPECT_FALSE(load_config("/nonexistent/gba.conf").cap_group.has_value());
}

TEST(Subgroups, SpecSyntax) {
  auto g = build_psl2(8);
  EXPECT_EQ(scenario::subgroup_from_spec(g, "sylow:2").order(), 8u);
  EXPECT_EQ(scenario::subgroup_from_spec(g, "cyclic:3").order(), 3u);
  EXPECT_THROW(scenario::subgroup_from_spec(g, "sylow:4"), error);
  EXPECT_THROW(scenario::subgroup_from_spec(g, "sylow:x"), error);
}
