#pragma once

// Degree-one maps z -> (az + b)/(cz + d) with Puiseux coefficients.
// Coefficients are not projectively normalized; compare maps with same_map.

#include <variant>

#include "berktrees/berkline.hpp"

namespace berktrees {

class MoebiusL {
 public:
  MoebiusL() : MoebiusL(one(), {}, {}, one()) {}
  MoebiusL(PuiseuxSeries a, PuiseuxSeries b, PuiseuxSeries c, PuiseuxSeries d)
      : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {}

  static MoebiusL identity() { return {}; }
  /// z -> scale·z + shift.
  static MoebiusL affine(PuiseuxSeries scale, PuiseuxSeries shift) { return {std::move(scale), std::move(shift), {}, one()}; }
  /// z -> 1/z.
  static MoebiusL inversion() { return {{}, one(), one(), {}}; }

  const PuiseuxSeries& a() const { return a_; }
  const PuiseuxSeries& b() const { return b_; }
  const PuiseuxSeries& c() const { return c_; }
  const PuiseuxSeries& d() const { return d_; }

  PuiseuxSeries determinant() const { return a_ * d_ - b_ * c_; }

 private:
  static PuiseuxSeries one() { return PuiseuxSeries::constant(ExactComplex::one()); }
  PuiseuxSeries a_, b_, c_, d_;
};

/// The unique map sending p0, p1, pinf to 0, 1, infinity.
MoebiusL from_triple(const PointP1L& p0, const PointP1L& p1, const PointP1L& pinf);
MoebiusL from_triple(const Triple& triple);

/// The canonical chart of v: z -> (z - c)/t^rv, sending v to the Gauss point.
MoebiusL chart_of(const TypeIIPoint& v);
/// Its inverse z -> c + t^rv·z, sending the Gauss point to v.
MoebiusL chart_inverse(const TypeIIPoint& v);

PointP1L apply(const MoebiusL& m, const PointP1L& p, long window = kDefaultWindow);
/// Image ball, computed by transporting three points separated by x.
TypeIIPoint apply_typeII(const MoebiusL& m, const TypeIIPoint& x, long window = kDefaultWindow);

/// m ∘ n.
MoebiusL compose(const MoebiusL& m, const MoebiusL& n);
MoebiusL inverse(const MoebiusL& m);

/// Equality of points up to precision (difference with no known term).
bool equal_at_precision(const PointP1L& a, const PointP1L& b);
/// Equality of maps through the images of 0, 1 and infinity.
bool same_map(const MoebiusL& m, const MoebiusL& n, long window = kDefaultWindow);

/// A Moebius map over Q(i).
struct MoebiusC {
  ExactComplex a, b, c, d;
  SpherePoint operator()(const SpherePoint& z) const;
  friend bool operator==(const MoebiusC&, const MoebiusC&) = default;
};

/// Reduction that collapsed to a constant map.
struct Degenerate {
  SpherePoint value;
  friend bool operator==(const Degenerate&, const Degenerate&) = default;
};

std::variant<MoebiusC, Degenerate> reduce_moebius(const MoebiusL& m);

}  // namespace berktrees
