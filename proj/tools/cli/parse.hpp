#pragma once

// Text syntax for series, points, polynomials in z and balls.
//
//   series  := ["+"|"-"] term {("+"|"-") term}
//   term    := coef ["*"] "t" ["^" exp] | coef | "t" ["^" exp] | "O(t^" exp ")"
//   coef    := decimal | p/q | "(" a ["+"|"-" b "i"] ")"
//   exp     := ["-"] integer ["/" integer]
//
// Without an O-term the text is an exact finite sum. Polynomials in z take terms
// `[series] z^k`, `coef t^e z^k` and plain series terms.

#include <set>
#include <string>
#include <string_view>

#include "berktrees/ratmap.hpp"

namespace berktrees::cli {

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected, const std::string& text);

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

PuiseuxSeries parse_series(std::string_view text);
/// A series or "inf".
PointP1L parse_point(std::string_view text);
/// Polynomial in z with series coefficients, lowest degree first.
SeriesPoly parse_polynomial(std::string_view text);

}  // namespace berktrees::cli
