#pragma once

// Elements of the non-Archimedean field of Puiseux series over Q(i), with the
// t-adic valuation |a| = exp(-v(a)).

#include <complex>
#include <span>
#include <string>

#include "berktrees/exact.hpp"
#include "berktrees/series.hpp"

namespace berktrees {

using PuiseuxSeries = BasicSeries<ExactComplex>;

namespace series {

/// Exact monomial c·t^e.
PuiseuxSeries monomial(const ExactComplex& c, const Rational& e);
PuiseuxSeries constant(const ExactComplex& c);
/// Exact t^e.
PuiseuxSeries t_pow(const Rational& e);

/// Same terms; cutoff = leading exponent + window (window for the zero series).
PuiseuxSeries with_default_cutoff(const PuiseuxSeries& s, long window = kDefaultWindow);

}  // namespace series

Valuation valuation(const PuiseuxSeries& s);
/// valuation(a - b) without forming the difference.
Valuation difference_valuation(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries add(const PuiseuxSeries& a, const PuiseuxSeries& b);
PuiseuxSeries mul(const PuiseuxSeries& a, const PuiseuxSeries& b);
/// Multiplicative inverse. Exact for monomials, otherwise known up to the
/// relative precision of `a` (or `window` when `a` is exact).
PuiseuxSeries invert(const PuiseuxSeries& a, long window = kDefaultWindow);
PuiseuxSeries divide(const PuiseuxSeries& a, const PuiseuxSeries& b, long window = kDefaultWindow);

/// Numeric value at t = t0 with t^(1/q) taken on root branch `branch`
/// (0 = principal). Only for numeric cross-checks.
std::complex<double> evaluate_at(const PuiseuxSeries& s, std::complex<double> t0, int branch = 0);

/// Human-readable and reparsable: "2t^-1 + 3 + (1+1i)t^1/2 + O(t^5)".
std::string to_string(const PuiseuxSeries& s);

/// Least valuation over a list of series, certified at precision: series with
/// no known term must be known at least up to the result. Throws
/// INDETERMINATE when every entry is exactly zero.
Rational common_valuation(std::span<const PuiseuxSeries> list);

/// Constant term of a series with v(s) >= 0. Throws PRECISION_EXHAUSTED when
/// the constant term is not known, INVALID_ARGUMENT when v(s) < 0.
ExactComplex residue(const PuiseuxSeries& s);

/// Total order used for deterministic output (terms lexicographically, then cutoff).
std::strong_ordering compare(const PuiseuxSeries& a, const PuiseuxSeries& b);

}  // namespace berktrees
