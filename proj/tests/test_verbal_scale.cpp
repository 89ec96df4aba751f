#include "evunits/errors.hpp"
#include "evunits/verbal_scale.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace evunits;

namespace {

std::string describe_builtin(double lr, const std::string& name) {
  const VerbalScale* scale = find_builtin_scale(name);
  REQUIRE(scale != nullptr);
  return describe(LikelihoodRatio(lr), *scale).value_or("<out of range>");
}

std::vector<VerbalScale> parse(const std::string& text) {
  std::istringstream in(text);
  return parse_scales(in);
}

std::size_t parse_error_line(const std::string& text) {
  try {
    parse(text);
  } catch (const ScaleParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("built-in scales are present and valid") {
  std::vector<std::string> names;
  for (const auto& s : builtin_scales()) names.push_back(s.name());
  CHECK(names == std::vector<std::string>{"afsp", "jeffreys", "kass-raftery", "royall", "goodman",
                                          "units"});
  for (const auto& s : builtin_scales()) {
    if (s.kind() == VerbalScale::Kind::Units) continue;
    // Re-running the constructor re-validates the invariants.
    CHECK_NOTHROW(VerbalScale(s.name(), s.bins()));
  }
  CHECK(find_builtin_scale("nope") == nullptr);
}

TEST_CASE("describe: published spot checks") {
  CHECK(describe_builtin(50, "jeffreys") == "very strong");
  CHECK(describe_builtin(1000, "afsp") == "moderately strong");
  CHECK(describe_builtin(8, "royall") == "fairly strong");
  CHECK(describe_builtin(20, "kass-raftery") == "positive");
  CHECK(describe_builtin(100, "goodman") == "very strong");
}

TEST_CASE("describe: inclusive upper, exclusive lower bounds") {
  CHECK(describe_builtin(10, "afsp") == "weak");
  CHECK(describe_builtin(10.000001, "afsp") == "moderate");
  CHECK(describe_builtin(1.5, "afsp") == "weak");
  CHECK(describe_builtin(2e6, "afsp") == "extremely strong");
  CHECK(describe_builtin(3.16, "jeffreys") == "bare mention");
  CHECK(describe_builtin(3.17, "jeffreys") == "substantial");
  CHECK(describe_builtin(31.6, "jeffreys") == "strong");
  CHECK(describe_builtin(101, "jeffreys") == "decisive");
  CHECK(describe_builtin(150, "kass-raftery") == "very strong");  // e^5 = 148.4
  CHECK(describe_builtin(149, "kass-raftery") == "very strong");
  CHECK(describe_builtin(148.4, "kass-raftery") == "strong");
  CHECK(describe_builtin(32, "royall") == "strong");
  CHECK(describe_builtin(33, "royall") == "<out of range>");
  CHECK(describe_builtin(5, "goodman") == "weak");
  CHECK(describe_builtin(8, "goodman") == "moderate");
  CHECK(describe_builtin(101, "goodman") == "<out of range>");
}

TEST_CASE("describe: units scale steps exactly at powers of b") {
  const double b = unit_base();
  CHECK(describe_builtin(b, "units") == "1 units");
  for (int k = 1; k <= 12; ++k) {
    const double edge = std::pow(b, k);
    CHECK(describe_builtin(edge, "units") == std::to_string(k) + " units");
    CHECK(describe_builtin(edge * (1 + 1e-9), "units") == std::to_string(k + 1) + " units");
    CHECK(describe_builtin(edge * (1 - 1e-9), "units") == std::to_string(k) + " units");
  }
  CHECK(describe_builtin(1.0001, "units") == "1 units");
}

TEST_CASE("describe: rejects ratios not above 1") {
  const VerbalScale* s = find_builtin_scale("goodman");
  CHECK_THROWS_WITH_AS(describe(LikelihoodRatio(1.0), *s), doctest::Contains("invert"),
                       DomainError);
  CHECK_THROWS_AS(describe(LikelihoodRatio(0.5), *s), DomainError);
}

TEST_CASE("VerbalScale constructor validation") {
  CHECK_THROWS_AS(VerbalScale("x", std::vector<ScaleBin>{}), DomainError);
  CHECK_THROWS_AS(VerbalScale("x", {{1.0, "a"}}), DomainError);
  CHECK_THROWS_AS(VerbalScale("x", {{5.0, "a"}, {5.0, "b"}}), DomainError);
  CHECK_THROWS_AS(VerbalScale("x", {{std::nullopt, "a"}, {5.0, "b"}}), DomainError);
  CHECK_THROWS_AS(VerbalScale("x", {{5.0, ""}}), DomainError);
  CHECK_THROWS_AS(VerbalScale("", {{5.0, "a"}}), DomainError);
  const VerbalScale ok("x", {{2.0, "a"}, {std::nullopt, "b"}});
  CHECK(ok.has_open_bin());
}

TEST_CASE("parse_scales: valid file") {
  const auto scales = parse(R"(# two scales
scale coarse
10 some evidence
1e3 a lot of evidence
open overwhelming

scale tiny
2.5 slight
)");
  REQUIRE(scales.size() == 2);
  CHECK(scales[0].name() == "coarse");
  REQUIRE(scales[0].bins().size() == 3);
  CHECK(scales[0].bins()[1].upper == 1000.0);
  CHECK(scales[0].bins()[1].descriptor == "a lot of evidence");
  CHECK(scales[0].has_open_bin());
  CHECK(describe(LikelihoodRatio(5e3), scales[0]) == "overwhelming");
  CHECK_FALSE(scales[1].has_open_bin());
  CHECK(describe(LikelihoodRatio(3.0), scales[1]) == std::nullopt);
}

TEST_CASE("parse_scales: errors carry line numbers") {
  CHECK(parse_error_line("scale a\n10 x\n5 y\n") == 3);
  CHECK(parse_error_line("scale a\n10 x\n10 y\n") == 3);
  CHECK(parse_error_line("10 x\n") == 1);
  CHECK(parse_error_line("scale a\n\nabc x\n") == 3);
  CHECK(parse_error_line("scale a\n0.5 x\n") == 2);
  CHECK(parse_error_line("scale a\nopen x\n20 y\n") == 3);
  CHECK(parse_error_line("scale a\n10\n") == 2);
  CHECK(parse_error_line("scale a\n10 x\nscale a\n20 y\n") == 3);
  CHECK(parse_error_line("scale a\nscale b\n10 x\n") == 1);
  CHECK(parse_error_line("scale a\n10 x\nscale b\n") == 3);
  CHECK(parse_error_line("scale\n") == 1);
  CHECK(parse_error_line("scale two words\n") == 1);
}

TEST_CASE("parse_scales_file: unreadable path") {
  CHECK_THROWS_AS(parse_scales_file("/nonexistent/scales.txt"), ScaleParseError);
}

TEST_CASE("show output of a built-in scale parses back to the same bins") {
  for (const auto& s : builtin_scales()) {
    if (s.kind() == VerbalScale::Kind::Units) continue;
    std::string text = "scale " + s.name() + "\n";
    for (const auto& bin : s.bins()) {
      std::ostringstream bound;
      bound.precision(17);
      if (bin.upper) bound << *bin.upper; else bound << "open";
      text += bound.str() + " " + bin.descriptor + "\n";
    }
    const auto parsed = parse(text);
    REQUIRE(parsed.size() == 1);
    REQUIRE(parsed[0].bins().size() == s.bins().size());
    for (std::size_t i = 0; i < s.bins().size(); ++i) {
      CHECK(parsed[0].bins()[i].upper == s.bins()[i].upper);
      CHECK(parsed[0].bins()[i].descriptor == s.bins()[i].descriptor);
    }
  }
}
