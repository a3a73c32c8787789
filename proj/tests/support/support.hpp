#pragma once

// Seeded generators and numeric helpers shared by the unit and acceptance suites.

#include <complex>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "berktrees/dynamics.hpp"

namespace berktrees::testing {

using Rng = std::mt19937_64;
using Num = std::optional<std::complex<double>>;  // nullopt is infinity

inline long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

inline ExactComplex random_coef(Rng& rng) {
  Rational re(uniform(rng, -5, 5), uniform(rng, 1, 3));
  Rational im = uniform(rng, 0, 2) == 0 ? Rational(uniform(rng, -3, 3), uniform(rng, 1, 2)) : Rational(0);
  re.canonicalize();
  im.canonicalize();
  if (re == 0 && im == 0) re = 1;
  return {re, im};
}

inline Rational random_exponent(Rng& rng, long lo, long hi) {
  const long q = uniform(rng, 1, 3);
  Rational e(uniform(rng, lo * q, hi * q), q);
  e.canonicalize();
  return e;
}

/// Exact series with up to `max_terms` terms, exponents in [lo, hi].
inline PuiseuxSeries random_series(Rng& rng, long lo = -3, long hi = 3, int max_terms = 4) {
  std::vector<PuiseuxSeries::Term> terms;
  const int n = static_cast<int>(uniform(rng, 0, max_terms));
  for (int i = 0; i < n; ++i) terms.push_back({random_exponent(rng, lo, hi), random_coef(rng)});
  return PuiseuxSeries::from_terms(std::move(terms));
}

inline PuiseuxSeries random_nonzero_series(Rng& rng, long lo = -3, long hi = 3, int max_terms = 4) {
  for (;;) {
    PuiseuxSeries s = random_series(rng, lo, hi, max_terms);
    if (s.has_terms()) return s;
  }
}

inline PuiseuxSeries ts(long num, long den = 1) { return series::t_pow(make_rational(num, den)); }
inline PuiseuxSeries cs(long c) { return series::constant(ExactComplex(c)); }

inline SeriesPoly poly(std::initializer_list<PuiseuxSeries> coeffs) { return SeriesPoly(coeffs); }

/// Random map of degree <= max_degree whose reduction is nonconstant.
inline RationalMapL random_map_nonconstant_reduction(Rng& rng, int max_degree) {
  for (;;) {
    const int dn = static_cast<int>(uniform(rng, 0, max_degree));
    const int dd = static_cast<int>(uniform(rng, 0, max_degree));
    if (std::max(dn, dd) == 0) continue;
    auto side = [&](int d) {
      SeriesPoly p;
      for (int k = 0; k <= d; ++k) p.push_back(random_series(rng, 0, 2, 2));
      p[d] = p[d] + series::constant(random_coef(rng));
      return p;
    };
    try {
      RationalMapL f(side(dn), side(dd), 32);
      if (!reduce_map(f).is_constant()) return f;
    } catch (const Error&) {
    }
  }
}

inline MoebiusL random_moebius(Rng& rng) {
  for (;;) {
    MoebiusL m(random_series(rng, -2, 2, 2), random_series(rng, -2, 2, 2), random_series(rng, -2, 2, 2),
               random_series(rng, -2, 2, 2));
    if (m.determinant().has_terms()) return m;
  }
}

inline double chordal(const Num& z, const Num& w) {
  if (!z && !w) return 0.0;
  if (!z || !w) return 1.0 / std::sqrt(1.0 + std::norm(z ? *z : *w));
  return std::abs(*z - *w) / (std::sqrt(1.0 + std::norm(*z)) * std::sqrt(1.0 + std::norm(*w)));
}

inline Num numeric(const PointP1L& p, std::complex<double> t0) {
  if (p.is_infinity()) return std::nullopt;
  return evaluate_at(p.value(), t0);
}

inline Num numeric(const SpherePoint& p) {
  if (p.is_infinity()) return std::nullopt;
  return p.value().to_complex();
}

inline Num apply_numeric(const MoebiusL& m, const Num& z, std::complex<double> t0) {
  const auto a = evaluate_at(m.a(), t0), b = evaluate_at(m.b(), t0);
  const auto c = evaluate_at(m.c(), t0), d = evaluate_at(m.d(), t0);
  if (!z) return c == 0.0 ? Num{} : Num{a / c};
  const auto den = c * *z + d;
  return den == 0.0 ? Num{} : Num{(a * *z + b) / den};
}

inline std::complex<double> eval_poly(const SeriesPoly& p, std::complex<double> z, std::complex<double> t0) {
  std::complex<double> acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * z + evaluate_at(*it, t0);
  return acc;
}

inline std::complex<double> eval_map(const RationalMapL& f, std::complex<double> z, std::complex<double> t0) {
  return eval_poly(f.num(), z, t0) / eval_poly(f.den(), z, t0);
}

inline std::complex<double> eval_reduced(const ReducedMap& f, std::complex<double> u) {
  auto ev = [&](const ComplexPoly& p) {
    std::complex<double> acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * u + it->to_complex();
    return acc;
  };
  return ev(f.num) / ev(f.den);
}

/// Leaf partition of the branches at a vertex: for each adjacent node, the
/// labels of leaves reached through it.
inline std::set<std::set<std::string>> branch_partition(const TreeOfSpheres& t, int vertex) {
  std::set<std::set<std::string>> out;
  const int node = t.vertex_node(vertex);
  for (int nb : t.neighbors(node)) {
    std::set<std::string> labels;
    for (std::size_t k = 0; k < t.leaves.size(); ++k) {
      if (t.toward(node, static_cast<int>(k)) == nb) labels.insert(t.leaves[k]);
    }
    out.insert(labels);
  }
  return out;
}

/// Matches internal vertices by leaf partitions; checks edges correspond and
/// markings agree label by label. Returns an empty string on success.
inline std::string compare_marked_trees(const TreeOfSpheres& a, const TreeOfSpheres& b) {
  if (a.leaves != b.leaves) return "leaf labels differ";
  if (a.vertices.size() != b.vertices.size()) return "vertex counts differ";
  if (a.edges.size() != b.edges.size()) return "edge counts differ";
  std::vector<int> match(a.vertices.size(), -1);
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    const auto pa = branch_partition(a, static_cast<int>(i));
    for (std::size_t j = 0; j < b.vertices.size(); ++j) {
      if (branch_partition(b, static_cast<int>(j)) == pa) match[i] = static_cast<int>(j);
    }
    if (match[i] < 0) return "no vertex with the branch partition of vertex " + std::to_string(i);
    if (a.vertices[i].marking != b.vertices[match[i]].marking) return "markings differ at vertex " + std::to_string(i);
  }
  auto image = [&](int node) { return a.is_leaf(node) ? node : b.vertex_node(match[a.vertex_of(node)]); };
  std::set<std::pair<int, int>> eb;
  for (auto [x, y] : b.edges) eb.insert({std::min(x, y), std::max(x, y)});
  for (auto [x, y] : a.edges) {
    const int u = image(x), v = image(y);
    if (!eb.count({std::min(u, v), std::max(u, v)})) return "edge has no counterpart";
  }
  return {};
}

/// Coefficients of p(c + x) as a polynomial in x, by repeated synthetic division.
inline SeriesPoly taylor_shift(SeriesPoly p, const PuiseuxSeries& c) {
  const std::size_t n = p.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k > i; --k) p[k - 1] = p[k - 1] + c * p[k];
  }
  return p;
}

}  // namespace berktrees::testing

namespace berktrees::testing {

/// S(x) = sum_{n>=1} C_{n-1} x^n with C the Catalan numbers, which solves
/// S = x + S^2. Returns t^g * S(t^f) or t^g * (1 - S(t^f)), cut at the first
/// omitted exponent. Roots of quadratics like t z^2 - w z + 1 have this shape.
inline PuiseuxSeries catalan_root(const Rational& g, const Rational& f, int terms, bool small) {
  std::vector<PuiseuxSeries::Term> out;
  if (!small) out.push_back({g, ExactComplex(1)});
  mpz_class c = 1;  // C_{n-1}
  for (int n = 1; n <= terms; ++n) {
    const ExactComplex coef(Rational(small ? c : mpz_class(-c)));
    out.push_back({g + f * n, coef});
    c = c * 2 * (2 * n - 1) / (n + 1);
  }
  return PuiseuxSeries::from_terms(std::move(out), ExpBound(g + f * (terms + 1)));
}

}  // namespace berktrees::testing
