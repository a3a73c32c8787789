#include "berktrees/puiseux.hpp"

#include <cmath>
#include <optional>
#include <numbers>

namespace berktrees {

namespace series {

PuiseuxSeries monomial(const ExactComplex& c, const Rational& e) { return PuiseuxSeries::monomial(c, e); }
PuiseuxSeries constant(const ExactComplex& c) { return PuiseuxSeries::constant(c); }
PuiseuxSeries t_pow(const Rational& e) { return PuiseuxSeries::monomial(ExactComplex::one(), e); }

PuiseuxSeries with_default_cutoff(const PuiseuxSeries& s, long window) {
  Rational lead = s.has_terms() ? s.terms().front().exp : Rational(0);
  return PuiseuxSeries::from_terms(s.terms(), ExpBound(lead + window));
}

}  // namespace series

Valuation valuation(const PuiseuxSeries& s) { return s.valuation(); }
PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a + b; }
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b) { return a * b; }

PuiseuxSeries invert(const PuiseuxSeries& a, long window) {
  return PuiseuxSeries::divide(series::constant(ExactComplex::one()), a, window);
}

Valuation difference_valuation(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const ExpBound cut = min(a.cutoff(), b.cutoff());
  auto x = a.terms().begin(), y = b.terms().begin();
  const auto xe = a.terms().end(), ye = b.terms().end();
  for (;;) {
    const bool has_x = x != xe && x->exp < cut;
    const bool has_y = y != ye && y->exp < cut;
    if (!has_x && !has_y) break;
    if (has_x && (!has_y || x->exp < y->exp)) return Valuation::finite(x->exp);
    if (has_y && (!has_x || y->exp < x->exp)) return Valuation::finite(y->exp);
    if (!(x->coef == y->coef)) return Valuation::finite(x->exp);
    ++x;
    ++y;
  }
  if (cut.is_infinite()) return Valuation::exact_zero();
  return Valuation::unresolved(cut.value());
}

PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b, long window) {
  return PuiseuxSeries::divide(a, b, window);
}

std::complex<double> evaluate_at(const PuiseuxSeries& s, std::complex<double> t0, int branch) {
  const double log_abs = std::log(std::abs(t0));
  const double arg = std::arg(t0) + 2.0 * std::numbers::pi * branch;
  std::complex<double> sum = 0.0;
  for (const auto& term : s.terms()) {
    double e = term.exp.get_d();
    sum += term.coef.to_complex() * std::exp(std::complex<double>(e * log_abs, e * arg));
  }
  return sum;
}

namespace {

std::string format_term(const PuiseuxSeries::Term& t) {
  if (sgn(t.exp) == 0) return to_string(t.coef);
  std::string coef;
  if (t.coef.is_one()) {
    coef = "";
  } else if (t.coef == ExactComplex(-1)) {
    coef = "-";
  } else {
    coef = to_string(t.coef);
  }
  std::string mono = "t";
  if (t.exp != 1) mono += "^" + to_string(t.exp);
  return coef + mono;
}

}  // namespace

std::string to_string(const PuiseuxSeries& s) {
  std::string out;
  for (const auto& t : s.terms()) {
    std::string term = format_term(t);
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  if (!s.cutoff().is_infinite()) {
    std::string o = "O(t^" + to_string(s.cutoff().value()) + ")";
    out = out.empty() ? o : out + " + " + o;
  }
  return out.empty() ? "0" : out;
}

std::strong_ordering compare(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const auto& x = a.terms();
  const auto& y = b.terms();
  for (std::size_t k = 0; k < x.size() && k < y.size(); ++k) {
    if (auto c = compare(x[k].exp, y[k].exp); c != 0) return c;
    if (auto c = compare(x[k].coef, y[k].coef); c != 0) return c;
  }
  if (x.size() != y.size()) return x.size() < y.size() ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.cutoff() <=> b.cutoff();
}

Rational common_valuation(std::span<const PuiseuxSeries> list) {
  std::optional<Rational> m;
  bool all_exact_zero = true;
  for (const auto& s : list) {
    if (!s.is_exact_zero()) all_exact_zero = false;
    if (s.has_terms() && (!m || s.terms().front().exp < *m)) m = s.terms().front().exp;
  }
  if (all_exact_zero) fail(ErrorCode::kIndeterminate, "all coefficients are exactly zero");
  if (!m) fail(ErrorCode::kPrecisionExhausted, "no coefficient has a known term");
  for (const auto& s : list) {
    if (!s.has_terms() && s.cutoff() < *m) {
      fail(ErrorCode::kPrecisionExhausted, "a coefficient is not known up to the common valuation");
    }
  }
  return *m;
}

ExactComplex residue(const PuiseuxSeries& s) {
  if (s.has_terms() && sgn(s.terms().front().exp) < 0) {
    fail(ErrorCode::kInvalidArgument, "residue of a series with negative valuation");
  }
  return s.coefficient(Rational(0));
}

}  // namespace berktrees
