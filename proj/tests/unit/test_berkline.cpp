#include <algorithm>
#include <array>

#include "doctest.h"
#include "parse.hpp"
#include "support.hpp"

using namespace berktrees;
using namespace berktrees::testing;
using cli::parse_series;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
TypeIIPoint ball(const char* c, long n, long d = 1) { return canonicalize(parse_series(c), q(n, d)); }

}  // namespace

TEST_CASE("canonical forms") {
  CHECK(ball("1 + t", 1) == ball("1", 1));
  CHECK(ball("1 + t", 1).center() == cs(1));
  CHECK(ball("t^-1 + 5t", 0).center() == ts(-1));
  CHECK(ball("0", 0) == TypeIIPoint::gauss());
  const TypeIIPoint x = ball("3t^-2 + t^-1/2 + 7 + t^3", 1, 2);
  for (const auto& term : x.center().terms()) CHECK(term.exp < q(1, 2));
}

TEST_CASE("same ball") {
  CHECK(same_ball(parse_series("2 + t"), parse_series("2 + t + t^5/2"), q(3, 2)));
  CHECK(same_ball(cs(0), cs(1), q(0)));
  CHECK_FALSE(same_ball(cs(0), cs(1), q(1, 2)));
}

TEST_CASE("same ball agrees with canonical equality on seeded inputs") {
  Rng rng(21);
  for (int i = 0; i < 500; ++i) {
    const auto a = random_series(rng);
    const auto rv = random_exponent(rng, -3, 3);
    const auto b = add(a, random_series(rng));
    CHECK(same_ball(a, b, rv) == (canonicalize(a, rv) == canonicalize(b, rv)));
  }
}

TEST_CASE("separating vertices") {
  const PointP1L inf = PointP1L::infinity();
  CHECK(separating_vertex(cs(0), cs(1), inf) == TypeIIPoint::gauss());
  CHECK(separating_vertex(cs(0), ts(1), cs(1)) == ball("0", 1));
  CHECK(separating_vertex(cs(0), ts(-1), parse_series("2t^-1")) == ball("0", -1));
  CHECK_THROWS_AS(separating_vertex(cs(0), cs(0), cs(1)), Error);
}

TEST_CASE("separating vertex is symmetric and minimal") {
  Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    std::array<PointP1L, 3> p{random_series(rng), random_series(rng), random_series(rng)};
    if (uniform(rng, 0, 4) == 0) p[2] = PointP1L::infinity();
    TypeIIPoint v;
    try {
      v = separating_vertex(p[0], p[1], p[2]);
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kNotDistinct);
      continue;
    }
    std::array<int, 3> idx{0, 1, 2};
    do {
      CHECK(separating_vertex(p[idx[0]], p[idx[1]], p[idx[2]]) == v);
    } while (std::next_permutation(idx.begin(), idx.end()));
    std::set<std::string> dirs;
    for (const auto& x : p) dirs.insert(to_string(direction_at(v, x)));
    CHECK(dirs.size() == 3);
    if (v.chart() == Chart::kStandard) {
      // a smaller ball around the same center no longer separates the three
      const TypeIIPoint w = canonicalize(v.center(), v.rv() + q(1, 7));
      std::set<std::string> dirs_w;
      for (const auto& x : p) dirs_w.insert(to_string(direction_at(w, x)));
      CHECK(dirs_w.size() < 3);
    }
  }
}

TEST_CASE("directions at the Gauss point follow reduction") {
  const Triple std_triple{cs(0), cs(1), PointP1L::infinity()};
  const auto g = TypeIIPoint::gauss();
  CHECK(direction_at(g, parse_series("5 + t"), std_triple) == SpherePoint(5));
  CHECK(direction_at(g, ts(-3), std_triple).is_infinity());
  const Triple scaled{cs(0), ts(-1), PointP1L::infinity()};
  CHECK(direction_at(ball("0", -1), parse_series("2t^-1"), scaled) == SpherePoint(2));
}

TEST_CASE("branches at the Gauss point match positive valuation of differences") {
  Rng rng(23);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_series(rng, 0, 2, 3), r = random_series(rng, 0, 2, 3);
    const bool same = direction_at(TypeIIPoint::gauss(), p) == direction_at(TypeIIPoint::gauss(), r);
    const auto v = valuation(add(p, -r));
    CHECK(same == (v.is_exact_zero() || v.value() > 0));
  }
}

TEST_CASE("reduction") {
  CHECK(reduce(parse_series("2 + t + t^3")) == SpherePoint(2));
  CHECK(reduce(ts(1, 2)) == SpherePoint(0));
  CHECK(reduce(parse_series("t^-1 + 1")).is_infinity());
}

TEST_CASE("ball order") {
  CHECK(compare(TypeIIPoint::gauss(), ball("0", 1)) == BallOrder::kAncestor);
  CHECK(compare(ball("0", 1), TypeIIPoint::gauss()) == BallOrder::kDescendant);
  CHECK(compare(ball("0", 1), ball("1", 1)) == BallOrder::kIncomparable);
  CHECK(compare(ball("1 + t", 1), ball("1", 1)) == BallOrder::kEqual);
}

TEST_CASE("inverted chart round trip") {
  const auto x = ball("t^-2", -1);
  const auto y = to_chart(x, Chart::kInverted);
  CHECK(to_chart(y, Chart::kStandard) == x);
}
