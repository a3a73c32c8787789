#include "berktrees/dynamics.hpp"

#include <algorithm>
#include <set>

namespace berktrees {

std::string to_string(OrbitRecord::Status s) {
  switch (s) {
    case OrbitRecord::Status::kPeriodic: return "Periodic";
    case OrbitRecord::Status::kStoppedAtBudget: return "StoppedAtBudget";
    case OrbitRecord::Status::kLeftTreeX: return "LeftTreeX";
  }
  return "";
}

std::string to_string(RescalingClass c) {
  switch (c) {
    case RescalingClass::kMonomial: return "Monomial";
    case RescalingClass::kDegree1: return "Degree1";
    case RescalingClass::kInteresting: return "Interesting";
  }
  return "";
}

namespace {

std::optional<int> index_of(const std::vector<TypeIIPoint>& pts, const TypeIIPoint& x) {
  auto it = std::find(pts.begin(), pts.end(), x);
  if (it == pts.end()) return std::nullopt;
  return static_cast<int>(it - pts.begin());
}

}  // namespace

OrbitRecord orbit_typeII(const RationalMapL& f, const TypeIIPoint& x0, int budget, long window) {
  if (budget < 1) fail(ErrorCode::kInvalidArgument, "orbit budget must be at least 1");
  OrbitRecord rec;
  rec.points.push_back(to_chart(x0, Chart::kStandard));
  for (int step = 1; step <= budget; ++step) {
    TypeIIPoint next;
    try {
      next = image_typeII(f, rec.points.back(), window);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPrecisionExhausted) throw;
      fail(ErrorCode::kPrecisionExhausted, "orbit step " + std::to_string(step) + ": " + e.what());
    }
    if (auto k = index_of(rec.points, next)) {
      rec.status = OrbitRecord::Status::kPeriodic;
      rec.entry = *k;
      rec.period = static_cast<int>(rec.points.size()) - *k;
      rec.points.push_back(std::move(next));
      return rec;
    }
    rec.points.push_back(std::move(next));
  }
  rec.status = OrbitRecord::Status::kStoppedAtBudget;
  return rec;
}

DynamicalSystemTS build_dynamics(const TreeCover& cover, const std::vector<std::string>& X, long window) {
  if (X.size() < 3) fail(ErrorCode::kNotCompatible, "X needs at least 3 labels");
  const TreeOfSpheres& ty = cover.source;
  const TreeOfSpheres& tz = cover.target;
  for (const auto& x : X) {
    if (!ty.leaf_node(x)) fail(ErrorCode::kNotCompatible, "label " + x + " of X is not in Y");
    if (!tz.leaf_node(x)) fail(ErrorCode::kNotCompatible, "label " + x + " of X is not in Z");
  }
  if (ty.leaf_points.empty() || tz.leaf_points.empty()) fail(ErrorCode::kProvenanceMissing, "cover trees carry no family");
  Family family_x;
  for (const auto& x : X) {
    const PointP1L& py = ty.leaf_points[*ty.leaf_node(x)];
    const PointP1L& pz = tz.leaf_points[*tz.leaf_node(x)];
    if (!equal_at_precision(py, pz)) fail(ErrorCode::kMarkingMismatch, "label " + x + " has different points in Y and Z");
    family_x.emplace_back(x, py);
  }

  DynamicalSystemTS sys{cover, X, limit_tree(family_x, MarkingConvention::kCanonicalChart, window)};
  for (const auto& [report, set] : {std::pair{compatibility_report(sys.tree_x, ty), "Y"},
                                    std::pair{compatibility_report(sys.tree_x, tz), "Z"}}) {
    if (!report.ok()) {
      const Issue& i = report.issues.front();
      fail(ErrorCode::kNotCompatible, std::string("X-tree is not compatible with the ") + set + "-tree: " + i.message +
                                          " (" + i.witness + ")");
    }
  }
  return sys;
}

OrbitRecord iterate_vertex(const DynamicalSystemTS& sys, int vertex, int n) {
  const TreeOfSpheres& ty = sys.cover.source;
  const TreeOfSpheres& tz = sys.cover.target;
  if (vertex < 0 || vertex >= static_cast<int>(ty.vertices.size())) {
    fail(ErrorCode::kInvalidArgument, "no such source vertex");
  }
  if (!ty.vertices[vertex].point) fail(ErrorCode::kProvenanceMissing, "source vertex carries no Berkovich point");
  OrbitRecord rec;
  rec.points.push_back(*ty.vertices[vertex].point);
  int current = vertex;
  for (int step = 1; step <= n; ++step) {
    const auto& image = tz.vertices[sys.cover.vertex_map[current]].point;
    if (!image) fail(ErrorCode::kProvenanceMissing, "target vertex carries no Berkovich point");
    if (auto k = index_of(rec.points, *image)) {
      rec.status = OrbitRecord::Status::kPeriodic;
      rec.entry = *k;
      rec.period = static_cast<int>(rec.points.size()) - *k;
      rec.points.push_back(*image);
      return rec;
    }
    rec.points.push_back(*image);
    auto next = sys.tree_x.find_vertex(*image);
    auto in_y = ty.find_vertex(*image);
    if (!next || !in_y) {
      rec.status = OrbitRecord::Status::kLeftTreeX;
      return rec;
    }
    current = *in_y;
  }
  rec.status = OrbitRecord::Status::kStoppedAtBudget;
  return rec;
}

namespace {

// Roots of the critical locus when f has exactly two critical points of
// multiplicity d - 1: the monic polynomial vanishing at the finite ones and
// whether infinity is one of them.
struct CriticalPair {
  ComplexPoly finite;
  bool at_infinity;
};

std::optional<CriticalPair> totally_ramified_pair(const ReducedMap& f) {
  const int d = f.degree();
  const ComplexPoly w = f.num.derivative() * f.den - f.num * f.den.derivative();
  if (w.is_zero()) return std::nullopt;
  const int at_infinity = 2 * d - 2 - w.degree();
  const auto factors = w.square_free_decomposition();
  int finite_roots = 0;
  ComplexPoly roots = ComplexPoly::constant(ExactComplex::one());
  for (const auto& [g, k] : factors) {
    if (g.degree() <= 0) continue;
    if (k != d - 1) return std::nullopt;
    finite_roots += g.degree();
    roots = roots * g;
  }
  if (at_infinity != 0 && at_infinity != d - 1) return std::nullopt;
  if (finite_roots + (at_infinity ? 1 : 0) != 2) return std::nullopt;
  return CriticalPair{roots, at_infinity != 0};
}

}  // namespace

RescalingClass classify(const ReducedMap& f) {
  const int d = f.degree();
  if (d == 1) {
    const ExactComplex a = f.num.coefficient(1), b = f.num.coefficient(0);
    const ExactComplex c = f.den.coefficient(1), e = f.den.coefficient(0);
    const bool identity = b.is_zero() && c.is_zero() && a == e;
    const ExactComplex trace = a + e;
    const bool two_fixed_points = !(trace * trace - ExactComplex(4) * (a * e - b * c)).is_zero();
    return identity || two_fixed_points ? RescalingClass::kMonomial : RescalingClass::kDegree1;
  }
  if (d < 1) return RescalingClass::kInteresting;
  const auto pair = totally_ramified_pair(f);
  if (!pair) return RescalingClass::kInteresting;
  // The critical pair must be invariant: S(N, D) divisible by S, with S the
  // binary quadratic form vanishing on the pair.
  if (!pair->at_infinity) {
    const ComplexPoly& s = pair->finite;
    ComplexPoly image;
    for (int k = 0; k <= 2; ++k) image = image + s.coefficient(k) * (f.num.pow(k) * f.den.pow(2 - k));
    const bool invariant = ComplexPoly::divmod(image, s).second.is_zero();
    return invariant ? RescalingClass::kMonomial : RescalingClass::kInteresting;
  }
  // Pair {c, infinity}: S(X, Y) = (X - cY)·Y, and S(N, D) = (N - cD)·D as forms of degree 2d.
  const ExactComplex c = -pair->finite.coefficient(0);
  const ComplexPoly image = (f.num - c * f.den) * f.den;
  const bool vanishes_at_infinity = image.degree() < 2 * d;
  const bool vanishes_at_c = image.is_zero() || image(c).is_zero();
  return vanishes_at_infinity && vanishes_at_c ? RescalingClass::kMonomial : RescalingClass::kInteresting;
}

std::vector<RescalingCycle> find_rescalings(const RationalMapL& f, const std::vector<TypeIIPoint>& seeds, int budget,
                                            int max_period, long window) {
  if (max_period < 1) fail(ErrorCode::kInvalidArgument, "max period must be at least 1");
  std::vector<RescalingCycle> out;
  for (const auto& seed : seeds) {
    const OrbitRecord orbit = orbit_typeII(f, seed, budget, window);
    if (orbit.status != OrbitRecord::Status::kPeriodic || orbit.period > max_period) continue;
    const TypeIIPoint& base = orbit.points[orbit.entry];
    const bool known = std::any_of(out.begin(), out.end(), [&](const RescalingCycle& c) {
      return std::find(c.cycle.begin(), c.cycle.end(), base) != c.cycle.end();
    });
    if (known) continue;

    RescalingCycle rc;
    rc.cycle.assign(orbit.points.begin() + orbit.entry, orbit.points.begin() + orbit.entry + orbit.period);
    const int p = orbit.period;
    for (int i = 0; i < p; ++i) {
      const TypeIIPoint& v = rc.cycle[i];
      const TypeIIPoint& w = rc.cycle[(i + 1) % p];
      rc.tangent_maps.push_back(tangent_map(f, v, chart_inverse(v), chart_inverse(w)));
    }
    rc.limit = rescaling_at_basepoint(rc, 0);
    rc.classification = classify(rc.limit);
    out.push_back(std::move(rc));
  }
  return out;
}

ReducedMap rescaling_at_basepoint(const RescalingCycle& c, int index) {
  const int p = static_cast<int>(c.tangent_maps.size());
  if (index < 0 || index >= p) fail(ErrorCode::kInvalidArgument, "basepoint index out of range");
  ReducedMap acc = c.tangent_maps[index];
  for (int k = 1; k < p; ++k) acc = compose(c.tangent_maps[(index + k) % p], acc);
  return acc;
}

}  // namespace berktrees
