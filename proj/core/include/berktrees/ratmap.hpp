#pragma once

// Rational maps P/Q with Puiseux coefficients, their reductions over Q(i),
// and their action on type I and type II points.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "berktrees/moebius.hpp"
#include "berktrees/polynomial.hpp"

namespace berktrees {

/// Polynomial with series coefficients, lowest degree first.
using SeriesPoly = std::vector<PuiseuxSeries>;

/// Index of the last coefficient that is not exactly zero (-1 if none).
int degree_of(const SeriesPoly& p);

class RationalMapL {
 public:
  /// Certifies at precision that num and den share no factor (nonvanishing
  /// Sylvester determinant); throws INDETERMINATE otherwise.
  RationalMapL(SeriesPoly num, SeriesPoly den, long window = kDefaultWindow);
  /// Skips the coprimality certificate. For maps built from certified ones.
  static RationalMapL unchecked(SeriesPoly num, SeriesPoly den);

  const SeriesPoly& num() const { return num_; }
  const SeriesPoly& den() const { return den_; }
  /// max(deg num, deg den).
  int degree() const;

 private:
  RationalMapL() = default;
  SeriesPoly num_;
  SeriesPoly den_;
};

std::string to_string(const RationalMapL& f, const std::string& var = "z");

/// A map over Q(i): num/den coprime, scaled so den is monic (or num = 1 when
/// the map is the constant infinity). `cancelled` lists the square-free
/// factors removed when reducing, with multiplicities, and
/// `cancelled_at_infinity` the degree lost at infinity.
struct ReducedMap {
  ComplexPoly num;
  ComplexPoly den;
  std::vector<std::pair<ComplexPoly, int>> cancelled;
  int cancelled_at_infinity = 0;

  /// Cancels common factors of n/d; `nominal_degree` is the degree before
  /// reduction and fixes cancelled_at_infinity.
  static ReducedMap from_pair(const ComplexPoly& n, const ComplexPoly& d, int nominal_degree);
  static ReducedMap from_pair(const ComplexPoly& n, const ComplexPoly& d);

  int degree() const { return std::max({num.degree(), den.degree(), 0}); }
  bool is_constant() const { return degree() == 0; }
  SpherePoint operator()(const SpherePoint& z) const;

  /// Equality as maps; cancellation records are ignored.
  friend bool operator==(const ReducedMap& a, const ReducedMap& b) { return a.num == b.num && a.den == b.den; }
};

/// "u^2", "(u^3 + 1)/u^2", "inf" for the constant infinity.
std::string to_string(const ReducedMap& f, const std::string& var = "u");

/// f ∘ g.
ReducedMap compose(const ReducedMap& f, const ReducedMap& g);

/// Multiplicity of f at p. f must be nonconstant.
int local_degree(const ReducedMap& f, const SpherePoint& p);

/// Divides every coefficient by t^m, m the least coefficient valuation.
RationalMapL normalize(const RationalMapL& f);

/// Reduction of the normalized coefficients, with common factors cancelled.
ReducedMap reduce_map(const RationalMapL& f);

PointP1L apply_typeI(const RationalMapL& f, const PointP1L& p, long window = kDefaultWindow);

/// Image of a ball by generic evaluation: substitutes z = c + u·t^rv and
/// expands in t over Q(i)(u) up to the first u-dependent coefficient.
TypeIIPoint image_typeII(const RationalMapL& f, const TypeIIPoint& x, long window = kDefaultWindow);

/// m ∘ f and f ∘ m.
RationalMapL compose(const MoebiusL& m, const RationalMapL& f);
RationalMapL compose(const RationalMapL& f, const MoebiusL& m);
/// f ∘ g.
RationalMapL compose(const RationalMapL& f, const RationalMapL& g);

/// reduce_map(Mw^-1 ∘ f ∘ Mv), where Mv sends the Gauss point to v and Mw
/// sends it to the image of v. Throws CONSTANT_REDUCTION if the result is
/// constant.
ReducedMap tangent_map(const RationalMapL& f, const TypeIIPoint& v, const MoebiusL& mv, const MoebiusL& mw);

}  // namespace berktrees
