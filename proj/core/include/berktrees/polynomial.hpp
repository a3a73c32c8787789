#pragma once

// Univariate polynomials and rational functions over Q(i).

#include <string>
#include <utility>
#include <vector>

#include "berktrees/exact.hpp"

namespace berktrees {

class ComplexPoly {
 public:
  ComplexPoly() = default;
  /// Coefficients from degree 0 upward; trailing zeros are trimmed.
  explicit ComplexPoly(std::vector<ExactComplex> coeffs);

  static ComplexPoly constant(const ExactComplex& c);
  /// The polynomial x.
  static ComplexPoly x();
  /// x - root.
  static ComplexPoly linear_root(const ExactComplex& root);

  const std::vector<ExactComplex>& coeffs() const { return c_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  ExactComplex coefficient(int k) const;
  const ExactComplex& leading() const;

  ExactComplex operator()(const ExactComplex& x) const;
  ComplexPoly derivative() const;
  ComplexPoly monic() const;
  ComplexPoly pow(int k) const;

  ComplexPoly operator-() const;
  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b);
  friend ComplexPoly operator*(const ExactComplex& s, const ComplexPoly& p);
  friend bool operator==(const ComplexPoly&, const ComplexPoly&) = default;

  /// Euclidean division; divisor must be nonzero.
  static std::pair<ComplexPoly, ComplexPoly> divmod(const ComplexPoly& a, const ComplexPoly& b);
  /// Monic gcd; gcd(0, 0) = 0.
  static ComplexPoly gcd(const ComplexPoly& a, const ComplexPoly& b);

  /// Multiplicity of `root` as a zero (0 if not a root). p must be nonzero.
  int root_multiplicity(const ExactComplex& root) const;

  /// Yun's decomposition of a nonzero polynomial into monic, pairwise coprime,
  /// square-free factors with multiplicities.
  std::vector<std::pair<ComplexPoly, int>> square_free_decomposition() const;

  /// Descending powers, e.g. "u^3 + 1", "(1+1i)z - 2".
  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<ExactComplex> c_;
};

/// Degree bound for intermediate rational functions; exceeding it raises
/// PRECISION_EXHAUSTED instead of letting expressions blow up.
inline constexpr int kMaxRationalDegree = 160;

/// num/den in lowest terms with monic denominator.
class RationalFunction {
 public:
  RationalFunction() : den_(ComplexPoly::constant(ExactComplex::one())) {}
  RationalFunction(const ExactComplex& c)  // NOLINT(google-explicit-constructor)
      : num_(ComplexPoly::constant(c)), den_(ComplexPoly::constant(ExactComplex::one())) {}
  RationalFunction(ComplexPoly num, ComplexPoly den);

  static RationalFunction variable() { return {ComplexPoly::x(), ComplexPoly::constant(ExactComplex::one())}; }

  const ComplexPoly& num() const { return num_; }
  const ComplexPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// Requires is_constant().
  ExactComplex constant_value() const;
  int degree() const { return std::max(num_.degree(), den_.degree()); }

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& o);
  RationalFunction& operator-=(const RationalFunction& o);
  friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
  friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

  std::string to_string(const std::string& var = "u") const;

 private:
  ComplexPoly num_;
  ComplexPoly den_;
};

}  // namespace berktrees
