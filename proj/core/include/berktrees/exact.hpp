#pragma once

// Exact scalars: rationals (GMP) and complex rationals a + b·i.

#include <gmpxx.h>

#include <complex>
#include <compare>
#include <ostream>
#include <string>

namespace berktrees {

using Rational = mpq_class;

Rational make_rational(long num, long den = 1);
/// Parses "p", "-p/q" or a decimal such as "0.25".
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);
std::strong_ordering compare(const Rational& a, const Rational& b);

class ExactComplex {
 public:
  ExactComplex() = default;
  ExactComplex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}
  ExactComplex(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  ExactComplex(int re) : re_(re) {}   // NOLINT(google-explicit-constructor)

  static ExactComplex zero() { return {}; }
  static ExactComplex one() { return ExactComplex(1); }
  static ExactComplex i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  ExactComplex conj() const { return {re_, -im_}; }
  Rational norm2() const { return re_ * re_ + im_ * im_; }
  ExactComplex inverse() const;
  std::complex<double> to_complex() const { return {re_.get_d(), im_.get_d()}; }

  ExactComplex operator-() const { return {-re_, -im_}; }
  ExactComplex& operator+=(const ExactComplex& o);
  ExactComplex& operator-=(const ExactComplex& o);
  ExactComplex& operator*=(const ExactComplex& o);
  ExactComplex& operator/=(const ExactComplex& o);

  friend ExactComplex operator+(ExactComplex a, const ExactComplex& b) { return a += b; }
  friend ExactComplex operator-(ExactComplex a, const ExactComplex& b) { return a -= b; }
  friend ExactComplex operator*(ExactComplex a, const ExactComplex& b) { return a *= b; }
  friend ExactComplex operator/(ExactComplex a, const ExactComplex& b) { return a /= b; }
  friend bool operator==(const ExactComplex& a, const ExactComplex& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

/// Lexicographic on (re, im); used only for deterministic ordering.
std::strong_ordering compare(const ExactComplex& a, const ExactComplex& b);

/// Formats as "3", "-1/2" or "(1+1i)", "(0-1/2i)". Reparses via the series grammar.
std::string to_string(const ExactComplex& c);
std::ostream& operator<<(std::ostream& os, const ExactComplex& c);

}  // namespace berktrees
