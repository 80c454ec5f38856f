#include "doctest.h"

#include "hakit/examples.hpp"
#include "hakit/truncation_io.hpp"

using namespace hakit;

TEST_CASE("presentation emission round-trips byte for byte") {
  for (const auto& P : {enveloping(algebra_dual_numbers()), groupoid_algebra(klein_four()), sweedler_h4()}) {
    const std::string text = emit_presentation(P);
    CHECK(emit_presentation(parse_presentation(text)) == text);
  }
}

TEST_CASE("malformed presentations are parse errors") {
  CHECK_THROWS_AS(parse_presentation("{"), ParseError);
  CHECK_THROWS_AS(parse_presentation("{\"name\": \"x\"}"), ParseError);
}

TEST_CASE("Lie-Rinehart input round-trips") {
  const std::string in = R"({"name": "ax+b", "labels": ["x", "y"], "bracket": [[0, 1, 1, 0, "1"]], "connection": [[0, 0, "1"]]})";
  LieRinehartData d = parse_lie_rinehart(in);
  CHECK(d.rank() == 2);
  const std::string text = emit_lie_rinehart(d);
  CHECK(emit_lie_rinehart(parse_lie_rinehart(text)) == text);
}

TEST_CASE("truncation files check against their stored tables") {
  LieRinehartData d = lie_algebra_data("ax+b", {"x", "y"}, {{0, 1, 1, 1}}, {1, 0});
  const std::string text = emit_truncation(LieRinehartTruncation(d, 3));
  REQUIRE(is_truncation_file(text));
  TruncationFile f = parse_truncation_file(text);
  CHECK(f.kind == "lie-rinehart-trunc");
  CHECK(f.order == 3);
  CHECK(check_truncation_file(f).all_pass());

  const std::string jets = emit_truncation(JetTruncation(d, 2));
  TruncationFile g = parse_truncation_file(jets);
  CHECK(g.kind == "jets-trunc");
  CHECK(check_truncation_file(g).all_pass());
  CHECK_FALSE(is_truncation_file(emit_presentation(sweedler_h4())));
}

TEST_CASE("non-derivation anchor in an input file is a parse error") {
  const std::string in = R"({"name": "bad", "base": {"dim": 2, "unit": [[0, "1"]], "mul": [[0, 0, 0, "1"], [0, 1, 1, "1"], [1, 0, 1, "1"]]}, "labels": ["X"], "anchor": [[0, 1, 0, "1"]]})";
  CHECK_THROWS_AS(parse_lie_rinehart(in), ParseError);
}
