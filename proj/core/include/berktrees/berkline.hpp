#pragma once

// Type I and type II points of the Berkovich projective line over the Puiseux
// field. A type II point is a closed ball B(c, exp(-rv)) stored in canonical
// form: every term of c has exponent < rv, so two balls are equal iff their
// representations are equal. Irrational radii (type III) cannot arise from
// rational exponents and are not representable.

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "berktrees/puiseux.hpp"

namespace berktrees {

/// A point of P^1 over the Puiseux field: a series or infinity.
class PointP1L {
 public:
  PointP1L() = default;  // infinity
  PointP1L(PuiseuxSeries v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static PointP1L infinity() { return {}; }

  bool is_infinity() const { return !value_.has_value(); }
  const PuiseuxSeries& value() const;

 private:
  std::optional<PuiseuxSeries> value_;
};

std::string to_string(const PointP1L& p);

/// A point of the Riemann sphere P^1(C) with Q(i) coordinates.
class SpherePoint {
 public:
  SpherePoint() = default;  // infinity
  SpherePoint(ExactComplex v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  SpherePoint(int v) : value_(ExactComplex(v)) {}  // NOLINT(google-explicit-constructor)

  static SpherePoint infinity() { return {}; }

  bool is_infinity() const { return !value_.has_value(); }
  const ExactComplex& value() const;

  friend bool operator==(const SpherePoint&, const SpherePoint&) = default;

 private:
  std::optional<ExactComplex> value_;
};

/// Finite points first (ordered by re, im), infinity last.
std::strong_ordering compare(const SpherePoint& a, const SpherePoint& b);
std::string to_string(const SpherePoint& p);
std::ostream& operator<<(std::ostream& os, const SpherePoint& p);

enum class Chart { kStandard, kInverted };

class TypeIIPoint {
 public:
  /// The Gauss point, the closed unit ball B(0, 1).
  TypeIIPoint() = default;
  static TypeIIPoint gauss() { return {}; }

  const PuiseuxSeries& center() const { return center_; }
  const Rational& rv() const { return rv_; }
  Chart chart() const { return chart_; }

  friend bool operator==(const TypeIIPoint&, const TypeIIPoint&) = default;

 private:
  friend TypeIIPoint canonicalize(const PuiseuxSeries& center, const Rational& rv, Chart chart);
  PuiseuxSeries center_;
  Rational rv_{0};
  Chart chart_ = Chart::kStandard;
};

/// Orders by (chart, rv, center).
std::strong_ordering compare_points(const TypeIIPoint& a, const TypeIIPoint& b);
/// "<center; rv>", with an "inv" prefix in the inverted chart.
std::string to_string(const TypeIIPoint& x);
std::ostream& operator<<(std::ostream& os, const TypeIIPoint& x);

/// True iff v(s) >= r. Throws PRECISION_EXHAUSTED when s is not known up to r.
bool valuation_at_least(const PuiseuxSeries& s, const Rational& r);
bool valuation_at_least(const Valuation& v, const Rational& r);

/// Canonical ball <center; rv>: drops every term of exponent >= rv.
TypeIIPoint canonicalize(const PuiseuxSeries& center, const Rational& rv, Chart chart = Chart::kStandard);

/// Re-expresses x in the requested chart (the charts differ by z -> 1/z).
TypeIIPoint to_chart(const TypeIIPoint& x, Chart chart);

/// v(a - b) >= rv.
bool same_ball(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& rv);

/// The branch point of the tripod spanned by three distinct points.
TypeIIPoint separating_vertex(const PointP1L& a, const PointP1L& b, const PointP1L& c);

/// Residue map extended by infinity on negative valuation.
SpherePoint reduce(const PuiseuxSeries& s);

enum class BallOrder { kAncestor, kDescendant, kIncomparable, kEqual };

/// Ball containment order (ancestor = strictly larger ball).
BallOrder compare(const TypeIIPoint& x, const TypeIIPoint& y);

struct Triple {
  PointP1L p0;
  PointP1L p1;
  PointP1L pinf;
};

/// The three points c, c + t^rv, infinity; separated by <c; rv> and sent to
/// 0, 1, infinity by the affine chart z -> (z - c)/t^rv.
Triple canonical_triple(const TypeIIPoint& v);

/// Tangent direction at v of a point or ball, read through the normalization
/// sending `triple` (separated by v) to 0, 1, infinity.
SpherePoint direction_at(const TypeIIPoint& v, const PointP1L& p, const Triple& triple);
SpherePoint direction_at(const TypeIIPoint& v, const TypeIIPoint& p, const Triple& triple);
/// Same, through the canonical affine chart of v.
SpherePoint direction_at(const TypeIIPoint& v, const PointP1L& p);
SpherePoint direction_at(const TypeIIPoint& v, const TypeIIPoint& p);

/// A tangent direction at a vertex.
struct Direction {
  TypeIIPoint vertex;
  SpherePoint slot;
  friend bool operator==(const Direction&, const Direction&) = default;
};

}  // namespace berktrees
