#include <fstream>
#include <sstream>

#include "doctest.h"
#include "parse.hpp"
#include "run.hpp"
#include "support.hpp"

using namespace berktrees;
using namespace berktrees::cli;
using namespace berktrees::testing;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

ErrorCode code_of(const char* text) {
  try {
    parse_series(text);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInvalidArgument;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("series grammar") {
  const PuiseuxSeries s = parse_series("2t^-1 + 3 + (1+1i)t^1/2");
  REQUIRE(s.terms().size() == 3);
  CHECK(s.terms()[0].exp == -1);
  CHECK(s.terms()[0].coef == ExactComplex(2));
  CHECK(s.terms()[1].exp == 0);
  CHECK(s.terms()[1].coef == ExactComplex(3));
  CHECK(s.terms()[2].exp == q(1, 2));
  CHECK(s.terms()[2].coef == ExactComplex(q(1), q(1)));
  CHECK(s.is_exact());
  CHECK(parse_series(" 1/2 * t^(-2/3) - 0.25t ") ==
        PuiseuxSeries::from_terms({{q(-2, 3), ExactComplex(q(1, 2))}, {q(1), ExactComplex(q(-1, 4))}}));
  CHECK(parse_series("1 + t + O(t^2)").cutoff() == ExpBound(q(2)));
  CHECK(parse_series("(0-2i)t").terms()[0].coef == ExactComplex(q(0), q(-2)));
}

TEST_CASE("syntax errors carry an offset") {
  CHECK(code_of("t^1/2 * t^1/2") == ErrorCode::kSyntaxError);
  CHECK(code_of("1 +") == ErrorCode::kSyntaxError);
  CHECK(code_of("2t^") == ErrorCode::kSyntaxError);
  CHECK(code_of("t^1/0") == ErrorCode::kSyntaxError);
  try {
    parse_series("t^1/2 * t^1/2");
  } catch (const SyntaxError& e) {
    CHECK(e.offset() == 6);
    CHECK_FALSE(e.expected().empty());
  }
}

TEST_CASE("printing round-trips") {
  CHECK(parse_series(to_string(parse_series("1 - t"))) == parse_series("1 - t"));
  Rng rng(71);
  for (int i = 0; i < 300; ++i) {
    PuiseuxSeries s = random_series(rng);
    if (uniform(rng, 0, 2) == 0) s = s.truncated(ExpBound(random_exponent(rng, -3, 4)));
    CHECK(parse_series(to_string(s)) == s);
  }
}

TEST_CASE("polynomials in z") {
  const SeriesPoly p = parse_polynomial("t z^3 + [1 + t] z - 2");
  REQUIRE(p.size() == 4);
  CHECK(p[0] == cs(-2));
  CHECK(p[1] == parse_series("1 + t"));
  CHECK(p[2] == PuiseuxSeries());
  CHECK(p[3] == ts(1));
}

TEST_CASE("points") {
  CHECK(parse_point("inf").is_infinity());
  CHECK(parse_point(" ∞ ").is_infinity());
  CHECK(parse_point("t").value() == ts(1));
}

TEST_CASE("job errors map to exit codes") {
  auto run_json = [](const char* text, Command c) { return run_text(text, c); };
  auto r = run_json("{\"families\": {\"X\": {\"a\": \"0\"}}, \"bogus\": 1}", Command::kTree);
  CHECK(r.exit_code == 2);
  CHECK(r.report["error"]["code"] == "INVALID_ARGUMENT");
  r = run_json("{not json", Command::kTree);
  CHECK(r.report["error"]["code"] == "SYNTAX_ERROR");
  r = run_json("{\"families\": {\"X\": {\"a\": \"0\", \"b\": \"1 +\", \"c\": \"inf\"}}}", Command::kTree);
  CHECK(r.report["error"]["code"] == "SYNTAX_ERROR");
  r = run_json("{\"precision\": 2, \"families\": {\"X\": {\"a\": \"0\", \"b\": \"1\", \"c\": \"inf\"}}}", Command::kTree);
  CHECK(r.report["error"]["code"] == "INVALID_ARGUMENT");
  r = run_json("{\"map\": {\"num\": \"z^2\"}}", Command::kCover);
  CHECK(r.exit_code == 2);
  CHECK(exit_code_for(ErrorCode::kPrecisionExhausted) == 3);
}

TEST_CASE("precision exhaustion exits with 3") {
  // the center carries only one term before its cutoff, too few to place the image ball
  const auto r = run_text(R"j({"map": {"num": "z^2", "den": "1"}, "start": {"center": "1 + O(t^1)", "rv": "5"}})j",
                          Command::kOrbit);
  CHECK(r.exit_code == 3);
  CHECK(r.report["error"]["code"] == "PRECISION_EXHAUSTED");
}

TEST_CASE("overrides") {
  const char* job = R"({"map": {"num": "z^2", "den": "t"}, "budgets": {"orbit": 3}})";
  Overrides o;
  o.budget = 5;
  const auto r = run_text(job, Command::kOrbit, o);
  CHECK(r.report["orbit"]["points"].size() == 6);
}

TEST_CASE("tree reports are deterministic") {
  const std::string job = slurp(std::string(BERKTREES_JOBS_DIR) + "/figure1.json");
  const auto a = run_text(job, Command::kTree), b = run_text(job, Command::kTree);
  CHECK(a.report.dump() == b.report.dump());
  REQUIRE(a.dot);
  CHECK(*a.dot == *b.dot);
  CHECK(a.report["tree"]["vertices"].size() == 2);
  CHECK(vertex_id(TypeIIPoint::gauss()) == a.report["tree"]["vertices"][1]["id"]);
}
