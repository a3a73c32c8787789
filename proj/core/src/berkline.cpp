#include "berktrees/berkline.hpp"

#include <algorithm>
#include <array>

#include "berktrees/moebius.hpp"

namespace berktrees {

const PuiseuxSeries& PointP1L::value() const {
  if (!value_) fail(ErrorCode::kInvalidArgument, "value of the point at infinity");
  return *value_;
}

std::string to_string(const PointP1L& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }

const ExactComplex& SpherePoint::value() const {
  if (!value_) fail(ErrorCode::kInvalidArgument, "value of the point at infinity");
  return *value_;
}

std::strong_ordering compare(const SpherePoint& a, const SpherePoint& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() <=> b.is_infinity();
  return compare(a.value(), b.value());
}

std::string to_string(const SpherePoint& p) { return p.is_infinity() ? "inf" : to_string(p.value()); }
std::ostream& operator<<(std::ostream& os, const SpherePoint& p) { return os << to_string(p); }

std::strong_ordering compare_points(const TypeIIPoint& a, const TypeIIPoint& b) {
  if (a.chart() != b.chart()) return a.chart() == Chart::kStandard ? std::strong_ordering::less : std::strong_ordering::greater;
  if (auto c = compare(a.rv(), b.rv()); c != 0) return c;
  return compare(a.center(), b.center());
}

std::string to_string(const TypeIIPoint& x) {
  std::string s = "<" + to_string(x.center()) + "; " + to_string(x.rv()) + ">";
  return x.chart() == Chart::kInverted ? "inv" + s : s;
}

std::ostream& operator<<(std::ostream& os, const TypeIIPoint& x) { return os << to_string(x); }

bool valuation_at_least(const PuiseuxSeries& s, const Rational& r) {
  if (s.has_terms() && s.terms().front().exp < r) return false;
  if (s.has_terms()) return true;
  if (s.cutoff() < r) fail(ErrorCode::kPrecisionExhausted, "series not known up to exponent " + to_string(r));
  return true;
}

bool valuation_at_least(const Valuation& v, const Rational& r) {
  if (v.is_finite()) return v.value() >= r;
  if (v.zero_modulo_precision() && v.lower_bound() < ExpBound(r)) {
    fail(ErrorCode::kPrecisionExhausted, "series not known up to exponent " + to_string(r));
  }
  return true;
}

TypeIIPoint canonicalize(const PuiseuxSeries& center, const Rational& rv, Chart chart) {
  if (center.cutoff() < rv) {
    fail(ErrorCode::kPrecisionExhausted, "ball center not known up to exponent " + to_string(rv));
  }
  std::vector<PuiseuxSeries::Term> kept;
  for (const auto& t : center.terms()) {
    if (!(t.exp < rv)) break;
    kept.push_back(t);
  }
  TypeIIPoint x;
  x.center_ = PuiseuxSeries::from_terms(std::move(kept));
  x.rv_ = rv;
  x.chart_ = chart;
  return x;
}

TypeIIPoint to_chart(const TypeIIPoint& x, Chart chart) {
  if (x.chart() == chart) return x;
  const PuiseuxSeries& c = x.center();
  if (!c.has_terms()) return canonicalize({}, -x.rv(), chart);
  // c is canonical and nonzero, so |c| exceeds the radius and 0 is outside the ball.
  const Rational vc = c.terms().front().exp;
  const Rational rv = x.rv() - 2 * vc;
  const Rational rel = x.rv() - vc;
  mpz_class whole;
  mpz_cdiv_q(whole.get_mpz_t(), rel.get_num_mpz_t(), rel.get_den_mpz_t());
  const long window = whole.get_si() + 1;
  PuiseuxSeries inv = invert(c, std::max(window, 1L));
  return canonicalize(inv, rv, chart);
}

bool same_ball(const PuiseuxSeries& a, const PuiseuxSeries& b, const Rational& rv) {
  return valuation_at_least(difference_valuation(a, b), rv);
}

namespace {

Rational distance_valuation(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const Valuation v = difference_valuation(a, b);
  if (v.is_exact_zero()) fail(ErrorCode::kNotDistinct, "points coincide");
  if (v.zero_modulo_precision()) fail(ErrorCode::kPrecisionExhausted, "points agree to the known precision");
  return v.value();
}

}  // namespace

TypeIIPoint separating_vertex(const PointP1L& a, const PointP1L& b, const PointP1L& c) {
  std::array<const PointP1L*, 3> pts{&a, &b, &c};
  auto inf_count = std::count_if(pts.begin(), pts.end(), [](const PointP1L* p) { return p->is_infinity(); });
  if (inf_count > 1) fail(ErrorCode::kNotDistinct, "infinity given twice");
  if (inf_count == 1) {
    std::vector<const PuiseuxSeries*> fin;
    for (const auto* p : pts) {
      if (!p->is_infinity()) fin.push_back(&p->value());
    }
    return canonicalize(*fin[0], distance_valuation(*fin[0], *fin[1]));
  }
  const Rational w_ab = distance_valuation(a.value(), b.value());
  const Rational w_ac = distance_valuation(a.value(), c.value());
  const Rational w_bc = distance_valuation(b.value(), c.value());
  if (w_bc > w_ab && w_bc > w_ac) return canonicalize(b.value(), w_bc);
  return canonicalize(a.value(), std::max(w_ab, w_ac));
}

SpherePoint reduce(const PuiseuxSeries& s) {
  if (s.has_terms()) {
    const auto& lead = s.terms().front();
    int sign = sgn(lead.exp);
    if (sign < 0) return SpherePoint::infinity();
    if (sign > 0) return ExactComplex::zero();
    return lead.coef;
  }
  if (!(Rational(0) < s.cutoff())) fail(ErrorCode::kPrecisionExhausted, "constant term beyond series cutoff");
  return ExactComplex::zero();
}

BallOrder compare(const TypeIIPoint& x0, const TypeIIPoint& y0) {
  const TypeIIPoint x = to_chart(x0, Chart::kStandard);
  const TypeIIPoint y = to_chart(y0, Chart::kStandard);
  if (x.rv() == y.rv()) {
    return same_ball(x.center(), y.center(), x.rv()) ? BallOrder::kEqual : BallOrder::kIncomparable;
  }
  if (x.rv() < y.rv()) return same_ball(x.center(), y.center(), x.rv()) ? BallOrder::kAncestor : BallOrder::kIncomparable;
  return same_ball(x.center(), y.center(), y.rv()) ? BallOrder::kDescendant : BallOrder::kIncomparable;
}

Triple canonical_triple(const TypeIIPoint& v0) {
  const TypeIIPoint v = to_chart(v0, Chart::kStandard);
  return {v.center(), v.center() + series::t_pow(v.rv()), PointP1L::infinity()};
}

namespace {

// Direction at the Gauss point of a ball different from it.
SpherePoint direction_at_gauss(const TypeIIPoint& b0) {
  const TypeIIPoint b = to_chart(b0, Chart::kStandard);
  if (b == TypeIIPoint::gauss()) fail(ErrorCode::kSamePoint, "direction of a vertex at itself");
  // Balls containing the Gauss point, or disjoint from the unit ball, lie toward infinity.
  if (sgn(b.rv()) <= 0) return SpherePoint::infinity();
  return reduce(b.center());
}

void require_separated(const TypeIIPoint& v, const Triple& triple) {
  if (separating_vertex(triple.p0, triple.p1, triple.pinf) != to_chart(v, Chart::kStandard)) {
    fail(ErrorCode::kInvalidArgument, "normalization triple is not separated by " + to_string(v));
  }
}

}  // namespace

SpherePoint direction_at(const TypeIIPoint& v, const PointP1L& p, const Triple& triple) {
  require_separated(v, triple);
  PointP1L q = apply(from_triple(triple), p);
  return q.is_infinity() ? SpherePoint::infinity() : reduce(q.value());
}

SpherePoint direction_at(const TypeIIPoint& v, const TypeIIPoint& p, const Triple& triple) {
  require_separated(v, triple);
  return direction_at_gauss(apply_typeII(from_triple(triple), p));
}

SpherePoint direction_at(const TypeIIPoint& v, const PointP1L& p) {
  PointP1L q = apply(chart_of(v), p);
  return q.is_infinity() ? SpherePoint::infinity() : reduce(q.value());
}

SpherePoint direction_at(const TypeIIPoint& v, const TypeIIPoint& p) {
  return direction_at_gauss(apply_typeII(chart_of(v), p));
}

}  // namespace berktrees
