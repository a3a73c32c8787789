#include "doctest.h"
#include "parse.hpp"
#include "support.hpp"

using namespace berktrees;
using namespace berktrees::testing;
using cli::parse_point;
using cli::parse_polynomial;
using Status = OrbitRecord::Status;

namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }

RationalMapL map(const char* num, const char* den = "1") {
  return RationalMapL(parse_polynomial(num), parse_polynomial(den));
}

TypeIIPoint ball(long n, long d = 1) { return canonicalize(PuiseuxSeries(), q(n, d)); }

ReducedMap rm(std::initializer_list<long> num, std::initializer_list<long> den) {
  auto poly = [](std::initializer_list<long> c) {
    std::vector<ExactComplex> v;
    for (long x : c) v.emplace_back(x);
    return ComplexPoly(v);
  };
  return ReducedMap::from_pair(poly(num), poly(den));
}

Family family(std::initializer_list<std::pair<const char*, const char*>> entries) {
  Family f;
  for (const auto& [label, text] : entries) f.emplace_back(label, parse_point(text));
  return f;
}

Portrait portrait(const Family& y, const Family& z, std::map<std::string, std::string> f,
                  std::map<std::string, int> deg, int d) {
  Portrait p;
  for (const auto& [l, x] : y) p.Y.push_back(l);
  for (const auto& [l, x] : z) p.Z.push_back(l);
  p.F = std::move(f);
  p.deg = std::move(deg);
  p.degree = d;
  return p;
}

// z^2 + t with its fixed points p0 ~ t and p1 ~ 1, their other preimages, the
// critical point and infinity.
DynamicalSystemTS quadratic_system() {
  const int n = 30;
  const PuiseuxSeries p0 = catalan_root(q(0), q(1), n, true);
  const PuiseuxSeries p1 = catalan_root(q(0), q(1), n, false);
  const Family y{{"c", cs(0)}, {"n", PointP1L::infinity()}, {"p0", p0}, {"m0", -p0}, {"p1", p1}, {"m1", -p1}};
  const Family z{{"v", ts(1)}, {"n", PointP1L::infinity()}, {"p0", p0}, {"p1", p1}};
  const Portrait p = portrait(y, z, {{"c", "v"}, {"n", "n"}, {"p0", "p0"}, {"m0", "p0"}, {"p1", "p1"}, {"m1", "p1"}},
                              {{"c", 2}, {"n", 2}, {"p0", 1}, {"m0", 1}, {"p1", 1}, {"m1", 1}}, 2);
  const TreeCover cover = limit_cover(map("z^2 + t"), y, z, p);
  return build_dynamics(cover, {"n", "p0", "p1"});
}

// z^2/t with critical points 0, inf over themselves, a ball-level 2-cycle
// broken after one step.
TreeCover escaping_cover() {
  const Family y = family({{"o", "0"},
                           {"n", "inf"},
                           {"q1", "t^3/4"},
                           {"q2", "-t^3/4"},
                           {"p", "t^1/2"},
                           {"m", "-t^1/2"}});
  const Family z = family({{"o", "0"}, {"n", "inf"}, {"p", "t^1/2"}, {"w", "1"}});
  const Portrait p = portrait(y, z, {{"o", "o"}, {"n", "n"}, {"q1", "p"}, {"q2", "p"}, {"p", "w"}, {"m", "w"}},
                              {{"o", 2}, {"n", 2}, {"q1", 1}, {"q2", 1}, {"p", 1}, {"m", 1}}, 2);
  return limit_cover(map("z^2", "t"), y, z, p);
}

// t z + 1/z, marked so that both balls <0; 1/3> and <0; -1/3> are X-vertices.
// Preimages of t^(1/3) and t^(-1/3) are Catalan series.
DynamicalSystemTS two_cycle_system() {
  const int n = 60;
  const PointP1L a = ts(1, 3), b = ts(-1, 3);
  const PointP1L a1 = catalan_root(q(-2, 3), q(1, 3), n, false), a2 = catalan_root(q(-2, 3), q(1, 3), n, true);
  const PointP1L b1 = catalan_root(q(-4, 3), q(5, 3), n, false), b2 = catalan_root(q(-4, 3), q(5, 3), n, true);
  const PuiseuxSeries ia = mul(series::constant(ExactComplex::i()), ts(-1, 2));
  const Family z{{"zero", cs(0)},
                 {"inf", PointP1L::infinity()},
                 {"a", a},
                 {"b", b},
                 {"fa", add(ts(-1, 3), ts(4, 3))},
                 {"fb", add(ts(2, 3), ts(1, 3))},
                 {"sp", mul(cs(2), ts(1, 2))},
                 {"sm", mul(cs(-2), ts(1, 2))}};
  const Family y{{"zero", cs(0)},
                 {"inf", PointP1L::infinity()},
                 {"a", a},
                 {"b", b},
                 {"a2", ts(-4, 3)},
                 {"b2", ts(-2, 3)},
                 {"r0p", ia},
                 {"r0m", -ia},
                 {"ra1", a1},
                 {"ra2", a2},
                 {"rb1", b1},
                 {"rb2", b2},
                 {"cp", ts(-1, 2)},
                 {"cm", -ts(-1, 2)}};
  const Portrait p = portrait(y, z,
                              {{"zero", "inf"},
                               {"inf", "inf"},
                               {"a", "fa"},
                               {"b", "fb"},
                               {"a2", "fa"},
                               {"b2", "fb"},
                               {"r0p", "zero"},
                               {"r0m", "zero"},
                               {"ra1", "a"},
                               {"ra2", "a"},
                               {"rb1", "b"},
                               {"rb2", "b"},
                               {"cp", "sp"},
                               {"cm", "sm"}},
                              {{"zero", 1},
                               {"inf", 1},
                               {"a", 1},
                               {"b", 1},
                               {"a2", 1},
                               {"b2", 1},
                               {"r0p", 1},
                               {"r0m", 1},
                               {"ra1", 1},
                               {"ra2", 1},
                               {"rb1", 1},
                               {"rb2", 1},
                               {"cp", 2},
                               {"cm", 2}},
                              2);
  const TreeCover cover = limit_cover(map("t z^2 + 1", "z"), y, z, p, 40);
  return build_dynamics(cover, {"zero", "inf", "a", "b"}, 40);
}

int vertex_index(const TreeOfSpheres& t, const TypeIIPoint& x) { return t.find_vertex(x).value(); }

}  // namespace

TEST_CASE("orbit of the Gauss point under z^2/t drifts") {
  const OrbitRecord o = orbit_typeII(map("z^2", "t"), TypeIIPoint::gauss(), 6);
  CHECK(o.status == Status::kStoppedAtBudget);
  REQUIRE(o.points.size() == 7);
  Rational rv(0);
  for (const auto& x : o.points) {
    CHECK((x == ball(0)) == (rv == 0));
    CHECK(x.rv() == rv);
    rv = 2 * rv - 1;
  }
}

TEST_CASE("periodic orbits") {
  const OrbitRecord fixed = orbit_typeII(map("z^2", "t"), ball(1), 5);
  CHECK(fixed.status == Status::kPeriodic);
  CHECK(fixed.entry == 0);
  CHECK(fixed.period == 1);

  const RationalMapL f = map("t z^3 + 1", "z");
  const OrbitRecord two = orbit_typeII(f, ball(1, 3), 5);
  CHECK(two.status == Status::kPeriodic);
  CHECK(two.entry == 0);
  CHECK(two.period == 2);
  CHECK(two.points[1] == ball(-1, 3));
  CHECK(two.points[two.entry + two.period] == two.points[two.entry]);

  const OrbitRecord gauss = orbit_typeII(f, TypeIIPoint::gauss(), 5);
  CHECK(gauss.status == Status::kPeriodic);
  CHECK(gauss.period == 1);
}

TEST_CASE("periodic records reproduce under iteration") {
  Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const RationalMapL f = random_map_nonconstant_reduction(rng, 2);
    const TypeIIPoint x = canonicalize(random_series(rng, -1, 1, 2), random_exponent(rng, -1, 1));
    OrbitRecord o;
    try {
      o = orbit_typeII(f, x, 8, 40);
    } catch (const Error&) {
      continue;
    }
    if (o.status != Status::kPeriodic) continue;
    TypeIIPoint y = o.points[o.entry];
    for (int k = 0; k < o.period; ++k) {
      CHECK(y == o.points[o.entry + k]);
      y = image_typeII(f, y, 40);
    }
    CHECK(y == o.points[o.entry]);
  }
}

TEST_CASE("quadratic system with fixed points") {
  const DynamicalSystemTS sys = quadratic_system();
  REQUIRE(sys.tree_x.vertices.size() == 1);
  const int g = vertex_index(sys.cover.source, TypeIIPoint::gauss());
  const OrbitRecord o = iterate_vertex(sys, g, 5);
  CHECK(o.status == Status::kPeriodic);
  CHECK(o.period == 1);
  CHECK(verify_cover(sys.cover).ok());
}

TEST_CASE("iteration stops when the image leaves the X tree") {
  const TreeCover cover = escaping_cover();
  CHECK(verify_cover(cover).ok());
  const DynamicalSystemTS sys = build_dynamics(cover, {"o", "n", "p"});
  REQUIRE(sys.tree_x.vertices.size() == 1);
  CHECK(*sys.tree_x.vertices[0].point == ball(1, 2));
  const OrbitRecord o = iterate_vertex(sys, vertex_index(cover.source, ball(1, 2)), 5);
  CHECK(o.status == Status::kLeftTreeX);
  CHECK(o.points.size() == 2);
  CHECK(o.points[1] == TypeIIPoint::gauss());
}

TEST_CASE("a two-cycle of vertices") {
  const DynamicalSystemTS sys = two_cycle_system();
  CHECK(verify_cover(sys.cover).ok());
  CHECK(sys.tree_x.vertices.size() == 2);
  const OrbitRecord o = iterate_vertex(sys, vertex_index(sys.cover.source, ball(1, 3)), 6);
  CHECK(o.status == Status::kPeriodic);
  CHECK(o.entry == 0);
  CHECK(o.period == 2);
  CHECK(o.points[1] == ball(-1, 3));
}

TEST_CASE("build_dynamics errors") {
  const TreeCover cover = escaping_cover();
  auto code = [&](const TreeCover& c, std::vector<std::string> x) {
    try {
      build_dynamics(c, x);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInvalidArgument;
  };
  // w is not a Y label
  CHECK(code(cover, {"o", "n", "w"}) == ErrorCode::kNotCompatible);
  CHECK(code(cover, {"o", "n"}) == ErrorCode::kNotCompatible);
  TreeCover moved = cover;
  moved.target.leaf_points[*moved.target.leaf_node("p")] = ts(1, 3);
  CHECK(code(moved, {"o", "n", "p"}) == ErrorCode::kMarkingMismatch);
}

TEST_CASE("rescaling limits of z^2/t") {
  const Family fixed = family({{"f0", "0"}, {"f1", "t"}, {"finf", "inf"}});
  std::vector<TypeIIPoint> seeds{TypeIIPoint::gauss()};
  for (const auto& v : limit_tree(fixed).vertices) seeds.push_back(*v.point);
  const auto cycles = find_rescalings(map("z^2", "t"), seeds, 8, 4);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].cycle == std::vector<TypeIIPoint>{ball(1)});
  CHECK(cycles[0].limit == rm({0, 0, 1}, {1}));
  CHECK(cycles[0].classification == RescalingClass::kMonomial);
}

TEST_CASE("rescaling limits of t z^2 + 1/z") {
  const RationalMapL f = map("t z^3 + 1", "z");
  const auto cycles = find_rescalings(f, {TypeIIPoint::gauss(), ball(1, 3), ball(-1, 3)}, 16, 4);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].cycle == std::vector<TypeIIPoint>{TypeIIPoint::gauss()});
  CHECK(cycles[0].limit == rm({1}, {0, 1}));
  CHECK(cycles[0].classification == RescalingClass::kMonomial);
  const RescalingCycle& c = cycles[1];
  CHECK(c.cycle == std::vector<TypeIIPoint>{ball(1, 3), ball(-1, 3)});
  CHECK(c.tangent_maps == std::vector<ReducedMap>{rm({1}, {0, 1}), rm({1, 0, 0, 1}, {0, 1})});
  CHECK(c.limit == rm({1, 0, 0, 1}, {0, 0, 1}));
  CHECK(c.limit.degree() == 3);
  CHECK(c.classification == RescalingClass::kInteresting);
  CHECK(rescaling_at_basepoint(c, 0) == c.limit);
  CHECK(rescaling_at_basepoint(c, 1) == rm({0, 1}, {1, 0, 0, 1}));
}

TEST_CASE("a fixed vertex has the tangent map as its rescaling limit") {
  const RationalMapL f = map("z^2 + t");
  const auto cycles = find_rescalings(f, {TypeIIPoint::gauss()}, 4, 2);
  REQUIRE(cycles.size() == 1);
  CHECK(cycles[0].limit ==
        tangent_map(f, TypeIIPoint::gauss(), chart_inverse(TypeIIPoint::gauss()), chart_inverse(TypeIIPoint::gauss())));
  CHECK(to_string(cycles[0].limit) == "u^2");
}

TEST_CASE("classification") {
  CHECK(classify(rm({0, 1}, {1})) == RescalingClass::kMonomial);
  CHECK(classify(rm({1, 1}, {1})) == RescalingClass::kDegree1);
  CHECK(classify(rm({1}, {0, 1})) == RescalingClass::kMonomial);
  CHECK(classify(rm({0, 0, 1}, {1})) == RescalingClass::kMonomial);
  CHECK(classify(rm({1}, {0, 0, 1})) == RescalingClass::kMonomial);
  CHECK(classify(rm({1, 0, 1}, {0, 1})) == RescalingClass::kInteresting);
  CHECK(classify(rm({1, 0, 0, 1}, {0, 0, 1})) == RescalingClass::kInteresting);
  CHECK(classify(rm({1, 0, 1}, {1})) == RescalingClass::kInteresting);
}
