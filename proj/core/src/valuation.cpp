#include "berktrees/series.hpp"

namespace berktrees {

const Rational& Valuation::value() const {
  if (kind_ != Kind::kFinite) fail(ErrorCode::kPrecisionExhausted, "valuation of a zero or unresolved series");
  return value_;
}

ExpBound Valuation::lower_bound() const {
  if (kind_ == Kind::kExactZero) return ExpBound::infinite();
  return ExpBound(value_);
}

}  // namespace berktrees
