#include "berktrees/moebius.hpp"

namespace berktrees {

namespace {

PuiseuxSeries one() { return series::constant(ExactComplex::one()); }

// p - q for finite points, failing when they coincide at precision.
PuiseuxSeries distinct_difference(const PuiseuxSeries& p, const PuiseuxSeries& q) {
  PuiseuxSeries d = p - q;
  if (d.is_exact_zero()) fail(ErrorCode::kNotDistinct, "normalization points coincide");
  if (!d.has_terms()) fail(ErrorCode::kPrecisionExhausted, "normalization points agree to the known precision");
  return d;
}

}  // namespace

MoebiusL from_triple(const PointP1L& p0, const PointP1L& p1, const PointP1L& pinf) {
  if (pinf.is_infinity()) {
    if (p0.is_infinity() || p1.is_infinity()) fail(ErrorCode::kNotDistinct, "infinity given twice");
    return {one(), -p0.value(), {}, distinct_difference(p1.value(), p0.value())};
  }
  if (p0.is_infinity()) {
    if (p1.is_infinity()) fail(ErrorCode::kNotDistinct, "infinity given twice");
    return {{}, distinct_difference(p1.value(), pinf.value()), one(), -pinf.value()};
  }
  if (p1.is_infinity()) {
    distinct_difference(p0.value(), pinf.value());
    return {one(), -p0.value(), one(), -pinf.value()};
  }
  // (z - p0)(p1 - pinf) / ((z - pinf)(p1 - p0))
  PuiseuxSeries s = distinct_difference(p1.value(), pinf.value());
  PuiseuxSeries r = distinct_difference(p1.value(), p0.value());
  distinct_difference(p0.value(), pinf.value());
  return {s, -(p0.value() * s), r, -(pinf.value() * r)};
}

MoebiusL from_triple(const Triple& triple) { return from_triple(triple.p0, triple.p1, triple.pinf); }

MoebiusL chart_of(const TypeIIPoint& v0) {
  const TypeIIPoint v = to_chart(v0, Chart::kStandard);
  return {one(), -v.center(), {}, series::t_pow(v.rv())};
}

MoebiusL chart_inverse(const TypeIIPoint& v0) {
  const TypeIIPoint v = to_chart(v0, Chart::kStandard);
  return MoebiusL::affine(series::t_pow(v.rv()), v.center());
}

namespace {

PointP1L quotient(const PuiseuxSeries& num, const PuiseuxSeries& den, long window) {
  if (den.is_exact_zero()) {
    if (num.is_exact_zero()) fail(ErrorCode::kIndeterminate, "0/0 in Moebius evaluation");
    return PointP1L::infinity();
  }
  if (!den.has_terms()) fail(ErrorCode::kPrecisionExhausted, "denominator is zero modulo precision");
  return PuiseuxSeries::divide(num, den, window);
}

}  // namespace

PointP1L apply(const MoebiusL& m, const PointP1L& p, long window) {
  if (p.is_infinity()) return quotient(m.a(), m.c(), window);
  const PuiseuxSeries& z = p.value();
  return quotient(m.a() * z + m.b(), m.c() * z + m.d(), window);
}

TypeIIPoint apply_typeII(const MoebiusL& m, const TypeIIPoint& x, long window) {
  const Triple tr = canonical_triple(x);
  return separating_vertex(apply(m, tr.p0, window), apply(m, tr.p1, window), apply(m, tr.pinf, window));
}

MoebiusL compose(const MoebiusL& m, const MoebiusL& n) {
  return {m.a() * n.a() + m.b() * n.c(), m.a() * n.b() + m.b() * n.d(),
          m.c() * n.a() + m.d() * n.c(), m.c() * n.b() + m.d() * n.d()};
}

MoebiusL inverse(const MoebiusL& m) { return {m.d(), -m.b(), -m.c(), m.a()}; }

bool equal_at_precision(const PointP1L& a, const PointP1L& b) {
  if (a.is_infinity() || b.is_infinity()) return a.is_infinity() && b.is_infinity();
  return !(a.value() - b.value()).has_terms();
}

bool same_map(const MoebiusL& m, const MoebiusL& n, long window) {
  for (const PointP1L& p : {PointP1L(PuiseuxSeries()), PointP1L(one()), PointP1L::infinity()}) {
    if (!equal_at_precision(apply(m, p, window), apply(n, p, window))) return false;
  }
  return true;
}

SpherePoint MoebiusC::operator()(const SpherePoint& z) const {
  if (z.is_infinity()) return c.is_zero() ? SpherePoint::infinity() : SpherePoint(a / c);
  ExactComplex den = c * z.value() + d;
  if (den.is_zero()) return SpherePoint::infinity();
  return (a * z.value() + b) / den;
}

std::variant<MoebiusC, Degenerate> reduce_moebius(const MoebiusL& m) {
  const std::vector<PuiseuxSeries> coeffs{m.a(), m.b(), m.c(), m.d()};
  const Rational k = common_valuation(coeffs);
  std::vector<ExactComplex> r;
  for (const auto& s : coeffs) r.push_back(residue(s.shifted(-k)));
  const ExactComplex &a = r[0], &b = r[1], &c = r[2], &d = r[3];
  if (!(a * d - b * c).is_zero()) return MoebiusC{a, b, c, d};
  // Rows (a, b) and (c, d) are proportional, and not both zero.
  if (c.is_zero() && d.is_zero()) return Degenerate{SpherePoint::infinity()};
  if (a.is_zero() && b.is_zero()) return Degenerate{ExactComplex::zero()};
  return Degenerate{c.is_zero() ? b / d : a / c};
}

}  // namespace berktrees
