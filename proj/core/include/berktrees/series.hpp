#pragma once

// Truncated formal series in t with rational exponents over a coefficient
// field C. Instantiated with ExactComplex (elements of the Puiseux field) and
// with RationalFunction (coefficients depending on a generic parameter u).
//
// A series is known exactly for every exponent strictly below its cutoff;
// nothing is known at or above it. An infinite cutoff means the series is an
// exact finite sum.

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "berktrees/error.hpp"
#include "berktrees/exact.hpp"

namespace berktrees {

/// Relative precision given to expansions that would otherwise be infinite
/// (quotients by multi-term series).
inline constexpr long kDefaultWindow = 24;

/// A rational exponent or +infinity.
class ExpBound {
 public:
  ExpBound() = default;  // +infinity
  ExpBound(Rational v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)

  static ExpBound infinite() { return {}; }

  bool is_infinite() const { return !value_.has_value(); }
  const Rational& value() const { return *value_; }

  friend ExpBound operator+(const ExpBound& a, const Rational& b) {
    return a.is_infinite() ? a : ExpBound(a.value() + b);
  }
  friend ExpBound operator-(const ExpBound& a, const Rational& b) {
    return a.is_infinite() ? a : ExpBound(a.value() - b);
  }
  friend bool operator==(const ExpBound& a, const ExpBound& b) {
    if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
    return a.value() == b.value();
  }
  friend std::strong_ordering operator<=>(const ExpBound& a, const ExpBound& b) {
    if (a.is_infinite()) return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return compare(a.value(), b.value());
  }
  friend bool operator<(const ExpBound& a, const Rational& e) { return !a.is_infinite() && a.value() < e; }
  friend bool operator<(const Rational& e, const ExpBound& a) { return a.is_infinite() || e < a.value(); }
  friend bool operator<=(const Rational& e, const ExpBound& a) { return a.is_infinite() || e <= a.value(); }

 private:
  std::optional<Rational> value_;
};

inline ExpBound min(const ExpBound& a, const ExpBound& b) { return a <= b ? a : b; }

/// Least exponent of a series. Three states: a finite value, +infinity for the
/// exact zero, and "zero modulo precision" when no term is known below the
/// cutoff (then lower_bound() is the cutoff).
class Valuation {
 public:
  static Valuation finite(Rational v) { return Valuation(Kind::kFinite, std::move(v)); }
  static Valuation exact_zero() { return Valuation(Kind::kExactZero, Rational(0)); }
  static Valuation unresolved(Rational cutoff) { return Valuation(Kind::kUnresolved, std::move(cutoff)); }

  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_infinite() const { return kind_ != Kind::kFinite; }
  bool is_exact_zero() const { return kind_ == Kind::kExactZero; }
  bool zero_modulo_precision() const { return kind_ == Kind::kUnresolved; }

  /// Requires is_finite().
  const Rational& value() const;
  /// The value when finite, the cutoff when unresolved, +inf for exact zero.
  ExpBound lower_bound() const;

  friend bool operator==(const Valuation&, const Valuation&) = default;

 private:
  enum class Kind { kFinite, kExactZero, kUnresolved };
  Valuation(Kind k, Rational v) : kind_(k), value_(std::move(v)) {}
  Kind kind_;
  Rational value_;
};

namespace detail {
inline long lcm_long(long a, long b) { return std::lcm(a, b); }
}  // namespace detail

template <class C>
class BasicSeries {
 public:
  struct Term {
    Rational exp;
    C coef;
    friend bool operator==(const Term&, const Term&) = default;
  };

  /// Exact zero.
  BasicSeries() = default;

  /// Builds a canonical series: sorts, merges equal exponents, drops zero
  /// coefficients and every term at or beyond the cutoff.
  static BasicSeries from_terms(std::vector<Term> terms, ExpBound cutoff = ExpBound::infinite()) {
    std::map<Rational, C> acc;
    for (auto& t : terms) {
      if (!(t.exp < cutoff)) continue;
      auto [it, inserted] = acc.try_emplace(t.exp, t.coef);
      if (!inserted) it->second += t.coef;
    }
    return from_map(acc, std::move(cutoff));
  }

  static BasicSeries constant(C c, ExpBound cutoff = ExpBound::infinite()) {
    return monomial(std::move(c), Rational(0), std::move(cutoff));
  }
  static BasicSeries monomial(C c, Rational e, ExpBound cutoff = ExpBound::infinite()) {
    std::vector<Term> v;
    v.push_back({std::move(e), std::move(c)});
    return from_terms(std::move(v), std::move(cutoff));
  }
  /// Zero known only below `cutoff`.
  static BasicSeries zero_to(Rational cutoff) {
    BasicSeries s;
    s.cutoff_ = ExpBound(std::move(cutoff));
    return s;
  }

  const std::vector<Term>& terms() const { return terms_; }
  const ExpBound& cutoff() const { return cutoff_; }
  bool is_exact() const { return cutoff_.is_infinite(); }
  bool has_terms() const { return !terms_.empty(); }
  bool is_exact_zero() const { return terms_.empty() && cutoff_.is_infinite(); }

  Valuation valuation() const {
    if (!terms_.empty()) return Valuation::finite(terms_.front().exp);
    if (cutoff_.is_infinite()) return Valuation::exact_zero();
    return Valuation::unresolved(cutoff_.value());
  }

  /// Least common denominator of all exponents (1 for the zero series).
  long ramification() const {
    long r = 1;
    for (const auto& t : terms_) r = detail::lcm_long(r, t.exp.get_den().get_si());
    return r;
  }

  /// Coefficient of t^e. Throws PRECISION_EXHAUSTED if e is not below the cutoff.
  C coefficient(const Rational& e) const {
    if (!(e < cutoff_)) fail(ErrorCode::kPrecisionExhausted, "coefficient requested beyond series cutoff");
    for (const auto& t : terms_) {
      if (t.exp == e) return t.coef;
      if (e < t.exp) break;
    }
    return C{};
  }

  /// Keeps only the terms with exponent < bound; the cutoff becomes min(cutoff, bound).
  BasicSeries truncated(const ExpBound& bound) const {
    BasicSeries r;
    r.cutoff_ = min(cutoff_, bound);
    for (const auto& t : terms_) {
      if (!(t.exp < r.cutoff_)) break;
      r.terms_.push_back(t);
    }
    return r;
  }

  /// Multiplication by t^e.
  BasicSeries shifted(const Rational& e) const {
    BasicSeries r = *this;
    for (auto& t : r.terms_) t.exp += e;
    r.cutoff_ = cutoff_ + e;
    return r;
  }

  template <class F>
  auto map_coefficients(F&& f) const {
    using D = std::decay_t<decltype(f(std::declval<const C&>()))>;
    std::vector<typename BasicSeries<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.push_back({t.exp, f(t.coef)});
    return BasicSeries<D>::from_terms(std::move(out), cutoff_);
  }

  BasicSeries operator-() const {
    BasicSeries r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
    ExpBound cut = min(a.cutoff_, b.cutoff_);
    std::map<Rational, C> acc;
    for (const auto* s : {&a, &b}) {
      for (const auto& t : s->terms_) {
        if (!(t.exp < cut)) break;
        auto [it, inserted] = acc.try_emplace(t.exp, t.coef);
        if (!inserted) it->second += t.coef;
      }
    }
    return from_map(acc, std::move(cut));
  }
  friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) { return a + (-b); }

  /// Cauchy product, truncated at min(cutoff_a + v(b), cutoff_b + v(a)).
  friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
    if (a.is_exact_zero() || b.is_exact_zero()) return {};
    const ExpBound va = a.valuation().lower_bound();
    const ExpBound vb = b.valuation().lower_bound();
    ExpBound cut = ExpBound::infinite();
    if (!a.cutoff_.is_infinite()) cut = min(cut, a.cutoff_ + vb.value());
    if (!b.cutoff_.is_infinite()) cut = min(cut, b.cutoff_ + va.value());
    std::map<Rational, C> acc;
    for (const auto& x : a.terms_) {
      for (const auto& y : b.terms_) {
        Rational e = x.exp + y.exp;
        if (!(e < cut)) break;
        C c = x.coef * y.coef;
        auto [it, inserted] = acc.try_emplace(std::move(e), c);
        if (!inserted) it->second += c;
      }
    }
    return from_map(acc, std::move(cut));
  }

  friend BasicSeries operator*(const C& c, const BasicSeries& s) {
    if (c == C{}) return {};
    BasicSeries r = s;
    for (auto& t : r.terms_) t.coef = c * t.coef;
    return r;
  }

  friend bool operator==(const BasicSeries& a, const BasicSeries& b) {
    return a.cutoff_ == b.cutoff_ && a.terms_ == b.terms_;
  }

  /// Generates the quotient a/b term by term in increasing exponent order.
  /// `emit(exp, coef)` returns false to stop early. Returns the cutoff of the
  /// full quotient. Throws DIVISION_BY_ZERO when b has no known term.
  template <class Emit>
  static ExpBound long_division(const BasicSeries& a, const BasicSeries& b, long window, Emit&& emit) {
    if (!b.has_terms()) fail(ErrorCode::kDivisionByZero, "division by a series with no term before its cutoff");
    const Term& lead = b.terms_.front();
    const Rational& vb = lead.exp;
    if (a.is_exact_zero()) return ExpBound::infinite();
    const Rational va = a.has_terms() ? a.terms_.front().exp : a.cutoff_.value();
    ExpBound cut = ExpBound::infinite();
    if (!a.cutoff_.is_infinite()) cut = min(cut, a.cutoff_ - vb);
    if (!b.cutoff_.is_infinite()) cut = min(cut, b.cutoff_ + va - vb - vb);
    if (cut.is_infinite() && b.terms_.size() > 1 && a.has_terms()) cut = ExpBound(va - vb + window);

    // Remainder is tracked only below cut + vb, where it is exact.
    const ExpBound rbound = cut + vb;
    std::map<Rational, C> rem;
    for (const auto& t : a.terms_) {
      if (!(t.exp < rbound)) break;
      rem.emplace(t.exp, t.coef);
    }
    while (!rem.empty()) {
      auto it = rem.begin();
      Rational qexp = it->first - vb;
      C qcoef = it->second / lead.coef;
      rem.erase(it);
      if (!emit(qexp, qcoef)) return cut;
      for (std::size_t j = 1; j < b.terms_.size(); ++j) {
        Rational e = b.terms_[j].exp + qexp;
        if (!(e < rbound)) break;
        C c = -(qcoef * b.terms_[j].coef);
        auto [pos, inserted] = rem.try_emplace(std::move(e), c);
        if (!inserted) {
          pos->second += c;
          if (pos->second == C{}) rem.erase(pos);
        }
      }
    }
    return cut;
  }

  static BasicSeries divide(const BasicSeries& a, const BasicSeries& b, long window = kDefaultWindow) {
    std::vector<Term> out;
    ExpBound cut = long_division(a, b, window, [&](const Rational& e, const C& c) {
      out.push_back({e, c});
      return true;
    });
    return from_terms(std::move(out), std::move(cut));
  }

 private:
  static BasicSeries from_map(const std::map<Rational, C>& acc, ExpBound cutoff) {
    BasicSeries r;
    r.cutoff_ = std::move(cutoff);
    r.terms_.reserve(acc.size());
    for (const auto& [e, c] : acc) {
      if (!(e < r.cutoff_)) break;
      if (c == C{}) continue;
      r.terms_.push_back({e, c});
    }
    return r;
  }

  std::vector<Term> terms_;
  ExpBound cutoff_;
};

}  // namespace berktrees
