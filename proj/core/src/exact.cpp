#include "berktrees/exact.hpp"

#include <sstream>

#include "berktrees/error.hpp"

namespace berktrees {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kPrecisionExhausted: return "PRECISION_EXHAUSTED";
    case ErrorCode::kDivisionByZero: return "DIVISION_BY_ZERO";
    case ErrorCode::kNotDistinct: return "NOT_DISTINCT";
    case ErrorCode::kSamePoint: return "SAME_POINT";
    case ErrorCode::kIndeterminate: return "INDETERMINATE";
    case ErrorCode::kConstantReduction: return "CONSTANT_REDUCTION";
    case ErrorCode::kPortraitInvalid: return "PORTRAIT_INVALID";
    case ErrorCode::kFamilyIncompatible: return "FAMILY_INCOMPATIBLE";
    case ErrorCode::kVertexImageMissing: return "VERTEX_IMAGE_MISSING";
    case ErrorCode::kProvenanceMissing: return "PROVENANCE_MISSING";
    case ErrorCode::kNotCompatible: return "NOT_COMPATIBLE";
    case ErrorCode::kMarkingMismatch: return "MARKING_MISMATCH";
    case ErrorCode::kSyntaxError: return "SYNTAX_ERROR";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
  }
  return "UNKNOWN";
}

Rational make_rational(long num, long den) {
  if (den == 0) fail(ErrorCode::kDivisionByZero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto bad = [&]() -> Rational { fail(ErrorCode::kSyntaxError, "malformed rational '" + s + "'"); };
  if (s.empty()) return bad();
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string whole = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    bool neg = !whole.empty() && whole[0] == '-';
    if (neg || (!whole.empty() && whole[0] == '+')) whole.erase(0, 1);
    if (whole.empty()) whole = "0";
    if (frac.empty() || frac.find_first_not_of("0123456789") != std::string::npos ||
        whole.find_first_not_of("0123456789") != std::string::npos)
      return bad();
    mpz_class num(whole + frac, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    Rational q(num, den);
    q.canonicalize();
    return neg ? Rational(-q) : q;
  }
  for (std::size_t k = 0; k < s.size(); ++k) {
    char c = s[k];
    bool ok = (c >= '0' && c <= '9') || c == '/' || ((c == '-' || c == '+') && k == 0);
    if (!ok) return bad();
  }
  if (s.front() == '+') s.erase(0, 1);
  if (s.empty() || s.back() == '/' || s.front() == '/') return bad();
  Rational q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) return bad();
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::strong_ordering compare(const Rational& a, const Rational& b) {
  int c = cmp(a, b);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ExactComplex ExactComplex::inverse() const {
  if (is_zero()) fail(ErrorCode::kDivisionByZero, "inverse of complex zero");
  Rational n = norm2();
  return {re_ / n, -im_ / n};
}

ExactComplex& ExactComplex::operator+=(const ExactComplex& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator-=(const ExactComplex& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

ExactComplex& ExactComplex::operator*=(const ExactComplex& o) {
  if (sgn(im_) == 0 && sgn(o.im_) == 0) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

ExactComplex& ExactComplex::operator/=(const ExactComplex& o) {
  if (o.is_zero()) fail(ErrorCode::kDivisionByZero, "division by complex zero");
  if (sgn(o.im_) == 0) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

std::strong_ordering compare(const ExactComplex& a, const ExactComplex& b) {
  if (auto c = compare(a.re(), b.re()); c != 0) return c;
  return compare(a.im(), b.im());
}

std::string to_string(const ExactComplex& c) {
  if (c.is_real()) return to_string(c.re());
  std::string im = to_string(abs(c.im()));
  return "(" + to_string(c.re()) + (sgn(c.im()) < 0 ? "-" : "+") + im + "i)";
}

std::ostream& operator<<(std::ostream& os, const ExactComplex& c) { return os << to_string(c); }

}  // namespace berktrees
