#include "berktrees/polynomial.hpp"

#include "berktrees/error.hpp"

namespace berktrees {

ComplexPoly::ComplexPoly(std::vector<ExactComplex> coeffs) : c_(std::move(coeffs)) { trim(); }

void ComplexPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

ComplexPoly ComplexPoly::constant(const ExactComplex& c) { return ComplexPoly({c}); }
ComplexPoly ComplexPoly::x() { return ComplexPoly({ExactComplex::zero(), ExactComplex::one()}); }
ComplexPoly ComplexPoly::linear_root(const ExactComplex& root) { return ComplexPoly({-root, ExactComplex::one()}); }

ExactComplex ComplexPoly::coefficient(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return {};
  return c_[static_cast<std::size_t>(k)];
}

const ExactComplex& ComplexPoly::leading() const {
  if (c_.empty()) fail(ErrorCode::kInvalidArgument, "leading coefficient of the zero polynomial");
  return c_.back();
}

ExactComplex ComplexPoly::operator()(const ExactComplex& x) const {
  ExactComplex acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

ComplexPoly ComplexPoly::derivative() const {
  std::vector<ExactComplex> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(ExactComplex(Rational(static_cast<long>(k))) * c_[k]);
  return ComplexPoly(std::move(d));
}

ComplexPoly ComplexPoly::monic() const {
  if (c_.empty() || c_.back().is_one()) return *this;
  return leading().inverse() * *this;
}

ComplexPoly ComplexPoly::pow(int k) const {
  ComplexPoly r = constant(ExactComplex::one());
  for (int j = 0; j < k; ++j) r = r * *this;
  return r;
}

ComplexPoly ComplexPoly::operator-() const {
  ComplexPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
  std::vector<ExactComplex> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < a.c_.size(); ++k) r[k] += a.c_[k];
  for (std::size_t k = 0; k < b.c_.size(); ++k) r[k] += b.c_[k];
  return ComplexPoly(std::move(r));
}

ComplexPoly operator-(const ComplexPoly& a, const ComplexPoly& b) { return a + (-b); }

ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<ExactComplex> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return ComplexPoly(std::move(r));
}

ComplexPoly operator*(const ExactComplex& s, const ComplexPoly& p) {
  if (s.is_zero()) return {};
  ComplexPoly r = p;
  for (auto& c : r.c_) c = s * c;
  return r;
}

std::pair<ComplexPoly, ComplexPoly> ComplexPoly::divmod(const ComplexPoly& a, const ComplexPoly& b) {
  if (b.is_zero()) fail(ErrorCode::kDivisionByZero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {ComplexPoly(), a};
  std::vector<ExactComplex> rem = a.c_;
  std::vector<ExactComplex> quo(a.c_.size() - b.c_.size() + 1);
  const ExactComplex inv_lead = b.leading().inverse();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    auto top = static_cast<std::size_t>(k + b.degree());
    if (rem[top].is_zero()) continue;
    ExactComplex q = rem[top] * inv_lead;
    for (std::size_t j = 0; j < b.c_.size(); ++j) rem[static_cast<std::size_t>(k) + j] -= q * b.c_[j];
    quo[static_cast<std::size_t>(k)] = std::move(q);
  }
  return {ComplexPoly(std::move(quo)), ComplexPoly(std::move(rem))};
}

ComplexPoly ComplexPoly::gcd(const ComplexPoly& a, const ComplexPoly& b) {
  ComplexPoly x = a;
  ComplexPoly y = b;
  while (!y.is_zero()) {
    ComplexPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

int ComplexPoly::root_multiplicity(const ExactComplex& root) const {
  if (is_zero()) fail(ErrorCode::kInvalidArgument, "root multiplicity in the zero polynomial");
  int m = 0;
  ComplexPoly p = *this;
  const ComplexPoly lin = linear_root(root);
  while (p.degree() >= 1 && p(root).is_zero()) {
    p = divmod(p, lin).first;
    ++m;
  }
  return m;
}

std::vector<std::pair<ComplexPoly, int>> ComplexPoly::square_free_decomposition() const {
  if (is_zero()) fail(ErrorCode::kInvalidArgument, "square-free decomposition of zero");
  std::vector<std::pair<ComplexPoly, int>> out;
  ComplexPoly f = monic();
  if (f.degree() < 1) return out;
  ComplexPoly d = f.derivative();
  ComplexPoly a = gcd(f, d);
  ComplexPoly b = divmod(f, a).first;
  ComplexPoly c = divmod(d, a).first;
  ComplexPoly e = c - b.derivative();
  for (int k = 1; b.degree() >= 1; ++k) {
    ComplexPoly g = gcd(b, e);
    if (g.degree() >= 1) out.emplace_back(g, k);
    b = divmod(b, g).first;
    c = divmod(e, g).first;
    e = c - b.derivative();
  }
  return out;
}

namespace {

std::string join_terms(const std::vector<std::string>& terms) {
  std::string out;
  for (const auto& t : terms) {
    if (out.empty()) {
      out = t;
    } else if (t.front() == '-') {
      out += " - " + t.substr(1);
    } else {
      out += " + " + t;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace

std::string ComplexPoly::to_string(const std::string& var) const {
  std::vector<std::string> terms;
  for (int k = degree(); k >= 0; --k) {
    const ExactComplex& c = c_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    if (k == 0) {
      terms.push_back(berktrees::to_string(c));
      continue;
    }
    std::string coef;
    if (c.is_one()) {
      coef = "";
    } else if (c == ExactComplex(-1)) {
      coef = "-";
    } else {
      coef = berktrees::to_string(c);
    }
    terms.push_back(coef + var + (k > 1 ? "^" + std::to_string(k) : ""));
  }
  return join_terms(terms);
}

RationalFunction::RationalFunction(ComplexPoly num, ComplexPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) fail(ErrorCode::kDivisionByZero, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = ComplexPoly::constant(ExactComplex::one());
    return;
  }
  if (den_.degree() > 0) {
    ComplexPoly g = ComplexPoly::gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = ComplexPoly::divmod(num_, g).first;
      den_ = ComplexPoly::divmod(den_, g).first;
    }
  }
  if (!den_.leading().is_one()) {
    ExactComplex s = den_.leading().inverse();
    num_ = s * num_;
    den_ = s * den_;
  }
  if (degree() > kMaxRationalDegree) {
    fail(ErrorCode::kPrecisionExhausted, "rational function degree cap exceeded");
  }
}

ExactComplex RationalFunction::constant_value() const {
  if (!is_constant()) fail(ErrorCode::kInvalidArgument, "rational function is not constant");
  return num_.coefficient(0);
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (den_ == o.den_) {
    *this = RationalFunction(num_ + o.num_, den_);
  } else {
    *this = RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return {a.num_ * b.num_, a.den_ * b.den_};
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(ErrorCode::kDivisionByZero, "division by the zero rational function");
  return {a.num_ * b.den_, a.den_ * b.num_};
}

std::string RationalFunction::to_string(const std::string& var) const {
  std::string n = num_.to_string(var);
  if (den_.degree() == 0) return n;
  auto wrap = [](const ComplexPoly& p, const std::string& s) {
    int nonzero = 0;
    for (const auto& c : p.coeffs()) nonzero += c.is_zero() ? 0 : 1;
    return nonzero > 1 ? "(" + s + ")" : s;
  };
  return wrap(num_, n) + "/" + wrap(den_, den_.to_string(var));
}

}  // namespace berktrees
