#include "doctest.h"
#include "parse.hpp"
#include "support.hpp"

using namespace berktrees;
using namespace berktrees::testing;
using cli::parse_series;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

}  // namespace

TEST_CASE("valuation of simple series") {
  CHECK(valuation(parse_series("3t^2 + t^5")).value() == 2);
  CHECK(valuation(parse_series("0")).is_exact_zero());
  CHECK(valuation(parse_series("t^-1/2 + 1")).value() == q(-1, 2));
}

TEST_CASE("unresolved zero is not exact zero") {
  const auto v = valuation(parse_series("t - t + O(t^3)"));
  CHECK(v.zero_modulo_precision());
  CHECK_FALSE(v.is_exact_zero());
  CHECK_THROWS_AS((void)v.value(), Error);
}

TEST_CASE("addition") {
  CHECK(add(parse_series("t^-1 + 1"), parse_series("-t^-1")) == cs(1));
  CHECK(add(ts(1), ts(1)) == parse_series("2t"));
  CHECK(add(parse_series("1 + t"), parse_series("(0+1i)t")) == parse_series("1 + (1+1i)t"));
}

TEST_CASE("multiplication") {
  CHECK(mul(ts(1, 2), ts(1, 2)) == ts(1));
  CHECK(mul(parse_series("1 + t"), parse_series("1 - t")) == parse_series("1 - t^2"));
  CHECK(valuation(mul(parse_series("2t^1/3"), parse_series("3t^2/3"))).value() == 1);
}

TEST_CASE("cutoff of a product tracks the other factor's valuation") {
  const auto a = parse_series("1 + O(t^3)");
  const auto b = parse_series("t^2");
  CHECK(mul(a, b).cutoff() == ExpBound(q(5)));
}

TEST_CASE("inversion") {
  const auto inv = invert(parse_series("1 - t"), 10);
  CHECK(inv.cutoff() == ExpBound(q(10)));
  // geometric series, coefficient by coefficient
  for (long k = 0; k < 10; ++k) CHECK(inv.coefficient(q(k)) == ExactComplex(1));
  const auto back = mul(inv, parse_series("1 - t"));
  CHECK(back == PuiseuxSeries::from_terms({{q(0), ExactComplex(1)}}, back.cutoff()));
  CHECK(invert(ts(1)) == ts(-1));
  CHECK_THROWS_AS(invert(parse_series("0")), Error);
  try {
    invert(parse_series("0"));
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDivisionByZero);
  }
}

TEST_CASE("numeric evaluation") {
  CHECK(std::abs(evaluate_at(parse_series("1 + t"), 0.01) - 1.01) < 1e-12);
  CHECK(std::abs(evaluate_at(ts(1, 2), 1e-4) - 1e-2) < 1e-12);
  CHECK(std::abs(evaluate_at(ts(-1), 1e-3) - 1e3) < 1e-9);
  // branch k multiplies t^(1/2) by exp(2 pi i k / 2)
  CHECK(std::abs(evaluate_at(ts(1, 2), 1e-4, 1) + 1e-2) < 1e-12);
}

TEST_CASE("ultrametric and multiplicative valuation on seeded inputs") {
  Rng rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_nonzero_series(rng), b = random_nonzero_series(rng);
    const auto va = valuation(a).value(), vb = valuation(b).value();
    const auto s = valuation(add(a, b));
    if (!s.is_exact_zero()) CHECK(s.value() >= std::min(va, vb));
    if (va != vb) CHECK(s.value() == std::min(va, vb));
    CHECK(valuation(mul(a, b)).value() == va + vb);
  }
}

TEST_CASE("ring laws on seeded inputs") {
  Rng rng(12);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_series(rng), b = random_series(rng), c = random_series(rng);
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    if (a.has_terms()) {
      const auto prod = mul(a, invert(a, 12));
      // one up to the cutoff of the product
      CHECK(prod == PuiseuxSeries::from_terms({{q(0), ExactComplex(1)}}, prod.cutoff()));
    }
  }
}

TEST_CASE("evaluation is a homomorphism up to rounding") {
  Rng rng(13);
  const std::complex<double> t0(1e-3, 0.0);
  for (int i = 0; i < 200; ++i) {
    const auto a = random_series(rng, -2, 2), b = random_series(rng, -2, 2);
    const auto lhs = evaluate_at(mul(a, b), t0);
    const auto rhs = evaluate_at(a, t0) * evaluate_at(b, t0);
    const double scale = std::max(1.0, std::abs(rhs));
    CHECK(std::abs(lhs - rhs) <= 1e-9 * scale);
  }
}

TEST_CASE("ramification is the lcm of exponent denominators") {
  CHECK(parse_series("t^1/2 + t^1/3").ramification() == 6);
  CHECK(parse_series("1 + t").ramification() == 1);
}

TEST_CASE("common valuation and residue") {
  std::vector<PuiseuxSeries> list{parse_series("t^2 + t^3"), parse_series("3t"), parse_series("0")};
  CHECK(common_valuation(list) == 1);
  CHECK(residue(parse_series("2 + t")) == ExactComplex(2));
  CHECK(residue(parse_series("t")) == ExactComplex(0));
}
