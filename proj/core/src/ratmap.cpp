#include "berktrees/ratmap.hpp"

#include <optional>

namespace berktrees {

int degree_of(const SeriesPoly& p) {
  for (int k = static_cast<int>(p.size()) - 1; k >= 0; --k) {
    if (!p[k].is_exact_zero()) return k;
  }
  return -1;
}

namespace {

SeriesPoly trimmed(SeriesPoly p) {
  p.resize(static_cast<std::size_t>(degree_of(p) + 1));
  return p;
}

// Certifies that the Sylvester determinant of p and q has a known nonzero term.
void require_coprime(const SeriesPoly& p, const SeriesPoly& q, long window) {
  const int m = degree_of(p);
  const int n = degree_of(q);
  if (m < 0 && n < 0) fail(ErrorCode::kIndeterminate, "numerator and denominator are both zero");
  if (m < 0 || n < 0) {
    const SeriesPoly& other = m < 0 ? q : p;
    if (degree_of(other) > 0) fail(ErrorCode::kIndeterminate, "zero numerator or denominator over a nonconstant polynomial");
    if (!other[0].has_terms()) fail(ErrorCode::kIndeterminate, "constant map with unresolved coefficient");
    return;
  }
  const int size = m + n;
  if (size == 0) return;
  std::vector<std::vector<PuiseuxSeries>> mat(size, std::vector<PuiseuxSeries>(size));
  for (int r = 0; r < n; ++r) {
    for (int k = 0; k <= m; ++k) mat[r][r + m - k] = p[k];
  }
  for (int r = 0; r < m; ++r) {
    for (int k = 0; k <= n; ++k) mat[n + r][r + n - k] = q[k];
  }
  for (int col = 0; col < size; ++col) {
    std::optional<int> pivot;
    for (int r = col; r < size; ++r) {
      if (!mat[r][col].has_terms()) continue;
      if (!pivot || mat[r][col].terms().front().exp < mat[*pivot][col].terms().front().exp) pivot = r;
    }
    if (!pivot) fail(ErrorCode::kIndeterminate, "numerator and denominator share a factor at the available precision");
    std::swap(mat[col], mat[*pivot]);
    for (int r = col + 1; r < size; ++r) {
      if (mat[r][col].is_exact_zero()) continue;
      PuiseuxSeries f = PuiseuxSeries::divide(mat[r][col], mat[col][col], window);
      for (int j = col + 1; j < size; ++j) mat[r][j] = mat[r][j] - f * mat[col][j];
    }
  }
}

template <class C>
BasicSeries<C> horner(const std::vector<BasicSeries<C>>& coeffs, const BasicSeries<C>& z) {
  BasicSeries<C> acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

SeriesPoly add(const SeriesPoly& a, const SeriesPoly& b) {
  SeriesPoly r(std::max(a.size(), b.size()));
  for (std::size_t k = 0; k < r.size(); ++k) {
    if (k < a.size()) r[k] = r[k] + a[k];
    if (k < b.size()) r[k] = r[k] + b[k];
  }
  return r;
}

SeriesPoly mul(const SeriesPoly& a, const SeriesPoly& b) {
  if (a.empty() || b.empty()) return {};
  SeriesPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_exact_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = r[i + j] + a[i] * b[j];
  }
  return r;
}

SeriesPoly scale(const PuiseuxSeries& s, const SeriesPoly& p) {
  SeriesPoly r;
  for (const auto& c : p) r.push_back(s * c);
  return r;
}

SeriesPoly coefficient_at(const SeriesPoly& p, int degree) {
  SeriesPoly r = p;
  r.resize(static_cast<std::size_t>(degree + 1));
  return r;
}

// Homogeneous substitution: sum_i p_i g^i h^(d - i).
SeriesPoly substitute(const SeriesPoly& p, const SeriesPoly& g, const SeriesPoly& h, int d) {
  std::vector<SeriesPoly> gpow{SeriesPoly{series::constant(ExactComplex::one())}};
  std::vector<SeriesPoly> hpow{SeriesPoly{series::constant(ExactComplex::one())}};
  for (int k = 1; k <= d; ++k) {
    gpow.push_back(mul(gpow.back(), g));
    hpow.push_back(mul(hpow.back(), h));
  }
  SeriesPoly r;
  const SeriesPoly padded = coefficient_at(p, d);
  for (int i = 0; i <= d; ++i) {
    if (padded[i].is_exact_zero()) continue;
    r = add(r, scale(padded[i], mul(gpow[i], hpow[d - i])));
  }
  return r;
}

ComplexPoly substitute(const ComplexPoly& p, const ComplexPoly& g, const ComplexPoly& h, int d) {
  ComplexPoly r;
  for (int i = 0; i <= p.degree(); ++i) {
    if (p.coefficient(i).is_zero()) continue;
    r = r + p.coefficient(i) * (g.pow(i) * h.pow(d - i));
  }
  return r;
}

std::string poly_to_string(const SeriesPoly& p, const std::string& var) {
  std::string out;
  for (int k = degree_of(p); k >= 0; --k) {
    if (p[k].is_exact_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p[k]) + ")";
    if (k > 0) out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out.empty() ? "0" : out;
}

}  // namespace

RationalMapL::RationalMapL(SeriesPoly num, SeriesPoly den, long window)
    : num_(trimmed(std::move(num))), den_(trimmed(std::move(den))) {
  require_coprime(num_, den_, window);
}

RationalMapL RationalMapL::unchecked(SeriesPoly num, SeriesPoly den) {
  RationalMapL f;
  f.num_ = trimmed(std::move(num));
  f.den_ = trimmed(std::move(den));
  if (f.num_.empty() && f.den_.empty()) fail(ErrorCode::kIndeterminate, "numerator and denominator are both zero");
  return f;
}

int RationalMapL::degree() const { return std::max({degree_of(num_), degree_of(den_), 0}); }

std::string to_string(const RationalMapL& f, const std::string& var) {
  return "(" + poly_to_string(f.num(), var) + ")/(" + poly_to_string(f.den(), var) + ")";
}

ReducedMap ReducedMap::from_pair(const ComplexPoly& n, const ComplexPoly& d, int nominal_degree) {
  if (n.is_zero() && d.is_zero()) fail(ErrorCode::kIndeterminate, "reduced map is 0/0");
  ReducedMap r;
  r.cancelled_at_infinity = nominal_degree - std::max(n.degree(), d.degree());
  const ComplexPoly g = ComplexPoly::gcd(n, d);
  ComplexPoly nn = ComplexPoly::divmod(n, g).first;
  ComplexPoly dd = ComplexPoly::divmod(d, g).first;
  const ExactComplex s = (dd.is_zero() ? nn.leading() : dd.leading()).inverse();
  r.num = s * nn;
  r.den = s * dd;
  if (g.degree() > 0) r.cancelled = g.square_free_decomposition();
  return r;
}

ReducedMap ReducedMap::from_pair(const ComplexPoly& n, const ComplexPoly& d) {
  return from_pair(n, d, std::max(n.degree(), d.degree()));
}

SpherePoint ReducedMap::operator()(const SpherePoint& z) const {
  if (den.is_zero()) return SpherePoint::infinity();
  if (z.is_infinity()) {
    if (num.degree() > den.degree()) return SpherePoint::infinity();
    if (num.degree() < den.degree()) return ExactComplex::zero();
    return num.leading() / den.leading();
  }
  const ExactComplex q = den(z.value());
  if (q.is_zero()) return SpherePoint::infinity();
  return num(z.value()) / q;
}

std::string to_string(const ReducedMap& f, const std::string& var) {
  if (f.den.is_zero()) return "inf";
  if (f.num.is_zero()) return "0";
  const std::string n = f.num.to_string(var);
  if (f.den.degree() == 0) return n;
  const bool wrap_num = f.num.degree() > 0 && n.find_first_of("+-", 1) != std::string::npos;
  const std::string d = f.den.to_string(var);
  const bool wrap_den = d.find_first_of("+-", 1) != std::string::npos;
  return (wrap_num ? "(" + n + ")" : n) + "/" + (wrap_den ? "(" + d + ")" : d);
}

ReducedMap compose(const ReducedMap& f, const ReducedMap& g) {
  const int df = f.degree();
  return ReducedMap::from_pair(substitute(f.num, g.num, g.den, df), substitute(f.den, g.num, g.den, df),
                               df * g.degree());
}

int local_degree(const ReducedMap& f, const SpherePoint& p) {
  if (f.is_constant()) fail(ErrorCode::kInvalidArgument, "local degree of a constant map");
  const SpherePoint fp = f(p);
  if (p.is_infinity()) {
    const int dn = f.num.degree();
    const int dd = f.den.degree();
    if (dn != dd) return std::abs(dn - dd);
    const ComplexPoly diff = f.num - fp.value() * f.den;
    return dd - diff.degree();
  }
  if (fp.is_infinity()) return f.den.root_multiplicity(p.value());
  return (f.num - fp.value() * f.den).root_multiplicity(p.value());
}

RationalMapL normalize(const RationalMapL& f) {
  std::vector<PuiseuxSeries> all = f.num();
  all.insert(all.end(), f.den().begin(), f.den().end());
  const Rational m = common_valuation(all);
  SeriesPoly n;
  SeriesPoly d;
  for (const auto& c : f.num()) n.push_back(c.shifted(-m));
  for (const auto& c : f.den()) d.push_back(c.shifted(-m));
  return RationalMapL::unchecked(std::move(n), std::move(d));
}

ReducedMap reduce_map(const RationalMapL& f) {
  const RationalMapL g = normalize(f);
  std::vector<ExactComplex> n;
  std::vector<ExactComplex> d;
  for (const auto& c : g.num()) n.push_back(residue(c));
  for (const auto& c : g.den()) d.push_back(residue(c));
  return ReducedMap::from_pair(ComplexPoly(n), ComplexPoly(d), f.degree());
}

PointP1L apply_typeI(const RationalMapL& f, const PointP1L& p, long window) {
  PuiseuxSeries n;
  PuiseuxSeries d;
  if (p.is_infinity()) {
    const auto deg = static_cast<std::size_t>(f.degree());
    n = deg < f.num().size() ? f.num()[deg] : PuiseuxSeries();
    d = deg < f.den().size() ? f.den()[deg] : PuiseuxSeries();
  } else {
    n = horner(f.num(), p.value());
    d = horner(f.den(), p.value());
  }
  if (!n.has_terms() && !d.has_terms()) fail(ErrorCode::kIndeterminate, "numerator and denominator vanish at the known precision");
  if (d.is_exact_zero()) return PointP1L::infinity();
  if (!d.has_terms()) fail(ErrorCode::kPrecisionExhausted, "denominator is zero modulo precision");
  return PuiseuxSeries::divide(n, d, window);
}

TypeIIPoint image_typeII(const RationalMapL& f, const TypeIIPoint& x0, long window) {
  if (f.degree() == 0) fail(ErrorCode::kInvalidArgument, "image of a ball by a constant map");
  const TypeIIPoint x = to_chart(x0, Chart::kStandard);
  using GenericSeries = BasicSeries<RationalFunction>;
  auto lift = [](const PuiseuxSeries& s) {
    return s.map_coefficients([](const ExactComplex& c) { return RationalFunction(c); });
  };
  const GenericSeries z = lift(x.center()) + GenericSeries::monomial(RationalFunction::variable(), x.rv());
  std::vector<GenericSeries> num;
  std::vector<GenericSeries> den;
  for (const auto& c : f.num()) num.push_back(lift(c));
  for (const auto& c : f.den()) den.push_back(lift(c));
  const GenericSeries n = horner(num, z);
  const GenericSeries d = horner(den, z);
  if (!d.has_terms()) {
    if (d.is_exact_zero()) fail(ErrorCode::kIndeterminate, "denominator vanishes identically on the ball");
    fail(ErrorCode::kPrecisionExhausted, "denominator is zero modulo precision on the ball");
  }

  std::vector<PuiseuxSeries::Term> center;
  std::optional<Rational> radius;
  GenericSeries::long_division(n, d, window, [&](const Rational& e, const RationalFunction& c) {
    if (!c.is_constant()) {
      radius = e;
      return false;
    }
    center.push_back({e, c.constant_value()});
    return true;
  });
  if (!radius) fail(ErrorCode::kPrecisionExhausted, "no u-dependent coefficient before the cutoff");
  return canonicalize(PuiseuxSeries::from_terms(std::move(center)), *radius);
}

RationalMapL compose(const MoebiusL& m, const RationalMapL& f) {
  return RationalMapL::unchecked(add(scale(m.a(), f.num()), scale(m.b(), f.den())),
                                 add(scale(m.c(), f.num()), scale(m.d(), f.den())));
}

RationalMapL compose(const RationalMapL& f, const MoebiusL& m) {
  const SeriesPoly g{m.b(), m.a()};
  const SeriesPoly h{m.d(), m.c()};
  const int d = f.degree();
  return RationalMapL::unchecked(substitute(f.num(), g, h, d), substitute(f.den(), g, h, d));
}

RationalMapL compose(const RationalMapL& f, const RationalMapL& g) {
  const int d = f.degree();
  return RationalMapL::unchecked(substitute(f.num(), g.num(), g.den(), d), substitute(f.den(), g.num(), g.den(), d));
}

ReducedMap tangent_map(const RationalMapL& f, const TypeIIPoint& v, const MoebiusL& mv, const MoebiusL& mw) {
  ReducedMap r = reduce_map(compose(inverse(mw), compose(f, mv)));
  if (r.is_constant()) {
    fail(ErrorCode::kConstantReduction, "normalizations do not chart the image of " + to_string(v));
  }
  return r;
}

}  // namespace berktrees
