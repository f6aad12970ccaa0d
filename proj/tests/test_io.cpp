#include <doctest.h>

#include "ptcat/category_io.hpp"
#include "ptcat/lattice.hpp"

using ptcat::CategoryFileError;
using ptcat::Cyc;
using ptcat::FusionData;
using ptcat::GramMatrix;
using ptcat::IntMat;

namespace {
FusionData semion() { return ptcat::build_pointed_mtc(GramMatrix(IntMat{{2}})); }
}  // namespace

TEST_CASE("byte-identical round trip") {
  for (const IntMat& gram : {IntMat{{2}}, IntMat{{4}}, IntMat{{2, -1}, {-1, 2}}}) {
    FusionData d = ptcat::build_pointed_mtc(GramMatrix(gram));
    std::string once = ptcat::emit_category(d);
    FusionData back = ptcat::parse_category(once);
    CHECK(ptcat::emit_category(back) == once);
    for (const auto& rep : ptcat::verify_all(back)) CHECK(rep.ok());
  }
}

TEST_CASE("parsed data equals the source data") {
  FusionData d = semion();
  FusionData back = ptcat::parse_category(ptcat::emit_category(d));
  CHECK(back.labels == d.labels);
  CHECK(back.unit == d.unit);
  CHECK(back.dual == d.dual);
  CHECK(back.fusion == d.fusion);
  CHECK(back.cyclotomic_order == d.cyclotomic_order);
  for (const auto& [key, value] : d.r_symbols) CHECK(back.r_symbols.at(key) == value);
  for (const auto& [key, value] : d.f_symbols) CHECK(back.f_symbols.at(key) == value);
  for (std::size_t i = 0; i < d.size(); ++i) CHECK(back.twists[i] == d.twists[i]);
}

TEST_CASE("schema violations are rejected") {
  CHECK_THROWS_AS(ptcat::parse_category("not json"), CategoryFileError);
  CHECK_THROWS_AS(ptcat::parse_category("{}"), CategoryFileError);

  // Duplicate labels.
  {
    std::string dup = ptcat::emit_category(semion());
    auto pos = dup.find("\"labels\": [\n    \"0\",\n    \"1\"\n  ]");
    REQUIRE(pos != std::string::npos);
    std::string with_dup = dup;
    with_dup.replace(pos, 33, "\"labels\": [\n    \"0\",\n    \"0\"\n  ]");
    CHECK_THROWS_AS(ptcat::parse_category(with_dup), CategoryFileError);
  }

  std::string text = ptcat::emit_category(semion());
  // Unknown label reference.
  {
    std::string bad = text;
    auto pos = bad.find("\"1\",\n      \"1\",\n      \"0\"");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 3, "\"7\"");
    CHECK_THROWS_AS(ptcat::parse_category(bad), CategoryFileError);
  }
  // Wrong schema marker.
  {
    std::string bad = text;
    auto pos = bad.find("ptcat.category/1");
    bad.replace(pos, 16, "ptcat.category/9");
    CHECK_THROWS_AS(ptcat::parse_category(bad), CategoryFileError);
  }
  // Coefficient vector longer than the field degree (phi(4) = 2).
  {
    std::string bad = text;
    auto pos = bad.find("[\n        \"1\"\n      ]");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 21, "[\"1\", \"0\", \"0\"]");
    CHECK_THROWS_AS(ptcat::parse_category(bad), CategoryFileError);
  }
  // Bad rational.
  {
    std::string bad = text;
    auto pos = bad.find("\"1\"\n      ]");
    REQUIRE(pos != std::string::npos);
    bad.replace(pos, 3, "\"x\"");
    CHECK_THROWS_AS(ptcat::parse_category(bad), CategoryFileError);
  }
}

TEST_CASE("mutated file fails verification but parses") {
  FusionData d = semion();
  d.r_symbols[{1, 1, 0}] = d.r_symbols[{1, 1, 0}].conj();
  FusionData back = ptcat::parse_category(ptcat::emit_category(d));
  bool failed = false;
  std::string located;
  for (const auto& rep : ptcat::verify_all(back))
    if (!rep.ok()) {
      failed = true;
      located = rep.violations.front().location;
    }
  CHECK(failed);
  CHECK(!located.empty());
}

TEST_CASE("report rendering") {
  ptcat::Report rep;
  rep.suite = "demo";
  rep.checks_run = 3;
  rep.add("some-check", "(1,1)", "lhs != rhs");
  std::string text = ptcat::render_reports_text({rep});
  CHECK(text.find("demo") != std::string::npos);
  CHECK(text.find("some-check") != std::string::npos);
  CHECK(text.find("FAIL") != std::string::npos);
  std::string json = ptcat::render_reports_json({rep});
  CHECK(json.find("\"pass\": false") != std::string::npos);
}
