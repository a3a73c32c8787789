#include "berktrees/trees.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>
#include <tuple>

namespace berktrees {

bool ValidationReport::flags(std::string_view check) const {
  return std::any_of(issues.begin(), issues.end(), [&](const Issue& i) { return i.check == check; });
}

ValidationReport portrait_validate(const Portrait& p) {
  ValidationReport r;
  const int d = p.degree;
  if (d < 2) r.add("degree", std::to_string(d), "portrait degree must be at least 2");
  if (p.Y.size() < 3) r.add("size", "Y", "Y needs at least 3 labels");
  if (p.Z.size() < 3) r.add("size", "Z", "Z needs at least 3 labels");
  const std::set<std::string> ys(p.Y.begin(), p.Y.end());
  const std::set<std::string> zs(p.Z.begin(), p.Z.end());
  if (ys.size() != p.Y.size()) r.add("labels", "Y", "duplicate label in Y");
  if (zs.size() != p.Z.size()) r.add("labels", "Z", "duplicate label in Z");
  for (const auto& [a, b] : p.F) {
    if (!ys.count(a)) r.add("labels", a, "map defined on unknown label " + a);
    if (!zs.count(b)) r.add("labels", b, "map value " + b + " is not a label of Z");
  }
  for (const auto& [a, k] : p.deg) {
    if (!ys.count(a)) r.add("labels", a, "degree given for unknown label " + a);
    if (k < 1) r.add("degree", a, "local degree of " + a + " must be positive");
  }
  for (const auto& a : p.Y) {
    if (!p.F.count(a)) r.add("labels", a, "no image for " + a);
    if (!p.deg.count(a)) r.add("labels", a, "no local degree for " + a);
  }
  if (r.flags("labels")) return r;

  int ramification = 0;
  std::map<std::string, int> fiber;
  for (const auto& a : p.Y) {
    ramification += p.deg.at(a) - 1;
    fiber[p.F.at(a)] += p.deg.at(a);
  }
  if (ramification != 2 * d - 2) {
    r.add("riemann_hurwitz", std::to_string(ramification),
          "sum of (deg - 1) is " + std::to_string(ramification) + ", expected " + std::to_string(2 * d - 2));
  }
  for (const auto& b : p.Z) {
    if (fiber[b] != d) {
      r.add("fiber_sum", b, "local degrees over " + b + " sum to " + std::to_string(fiber[b]) + ", expected " +
                                std::to_string(d));
    }
  }
  return r;
}

std::optional<int> TreeOfSpheres::leaf_node(std::string_view label) const {
  for (std::size_t k = 0; k < leaves.size(); ++k) {
    if (leaves[k] == label) return static_cast<int>(k);
  }
  return std::nullopt;
}

std::optional<int> TreeOfSpheres::find_vertex(const TypeIIPoint& x) const {
  const TypeIIPoint s = to_chart(x, Chart::kStandard);
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (vertices[j].point && to_chart(*vertices[j].point, Chart::kStandard) == s) return static_cast<int>(j);
  }
  return std::nullopt;
}

std::vector<int> TreeOfSpheres::neighbors(int node) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges) {
    if (a == node) out.push_back(b);
    if (b == node) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int TreeOfSpheres::toward(int from, int to) const {
  std::vector<int> parent(node_count(), -1);
  std::deque<int> queue{to};
  parent[to] = to;
  while (!queue.empty()) {
    int n = queue.front();
    queue.pop_front();
    for (int m : neighbors(n)) {
      if (parent[m] != -1) continue;
      parent[m] = n;
      queue.push_back(m);
    }
  }
  if (from == to || parent[from] == -1) fail(ErrorCode::kInvalidArgument, "no path between tree nodes");
  return parent[from];
}

ValidationReport validate_tree(const TreeOfSpheres& t) {
  ValidationReport r;
  const int n = t.node_count();
  if (static_cast<int>(t.edges.size()) != n - 1) {
    r.add("shape", std::to_string(t.edges.size()), "edge count does not match a tree");
  }
  std::vector<bool> seen(n, false);
  std::deque<int> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    for (int b : t.neighbors(a)) {
      if (!seen[b]) {
        seen[b] = true;
        queue.push_back(b);
      }
    }
  }
  if (std::count(seen.begin(), seen.end(), false) > 0) r.add("shape", "", "tree is not connected");
  if (!r.ok()) return r;

  for (std::size_t k = 0; k < t.leaves.size(); ++k) {
    if (t.neighbors(static_cast<int>(k)).size() != 1) r.add("leaf_valence", t.leaves[k], "leaf is not a tree leaf");
  }
  for (std::size_t j = 0; j < t.vertices.size(); ++j) {
    const int node = t.vertex_node(static_cast<int>(j));
    const auto nbs = t.neighbors(node);
    const auto& v = t.vertices[j];
    const std::string name = v.point ? to_string(*v.point) : "#" + std::to_string(j);
    if (nbs.size() < 3) r.add("stability", name, "internal vertex has valence below 3");
    std::vector<SpherePoint> slots;
    for (int m : nbs) {
      auto it = v.attachment.find(m);
      if (it == v.attachment.end()) {
        r.add("attachment", name, "edge without attaching point");
        continue;
      }
      slots.push_back(it->second);
    }
    std::sort(slots.begin(), slots.end(), [](const SpherePoint& a, const SpherePoint& b) { return compare(a, b) < 0; });
    if (std::adjacent_find(slots.begin(), slots.end()) != slots.end()) {
      r.add("attachment_injective", name, "two edges share an attaching point");
    }
    for (std::size_t k = 0; k < t.leaves.size() && k < v.marking.size(); ++k) {
      auto it = v.attachment.find(t.toward(node, static_cast<int>(k)));
      if (it != v.attachment.end() && it->second != v.marking[k]) {
        r.add("marking_extension", t.leaves[k], "marking at " + name + " differs from the attaching point toward it");
      }
    }
  }
  return r;
}

namespace {

// A node as a ball; points have rv = +infinity.
struct Ball {
  bool infinity = false;
  PuiseuxSeries center;
  ExpBound rv;
};

// Leading term of a - b, with exp empty when a == b exactly.
struct Lead {
  std::optional<Rational> exp;
  ExactComplex coef;
};

Lead leading_difference(const PuiseuxSeries& a, const PuiseuxSeries& b) {
  const Valuation v = difference_valuation(a, b);
  if (v.is_exact_zero()) return {};
  if (v.zero_modulo_precision()) fail(ErrorCode::kPrecisionExhausted, "points agree to the known precision");
  return {v.value(), a.coefficient(v.value()) - b.coefficient(v.value())};
}

// reduce(from_triple(triple)(p)), read off the leading terms of the four
// differences in the cross-ratio.
SpherePoint reduced_cross_ratio(const PointP1L& p, const Triple& tr) {
  if (p.is_infinity() && tr.pinf.is_infinity()) return SpherePoint::infinity();
  if (p.is_infinity() && tr.p0.is_infinity()) return SpherePoint(ExactComplex::zero());
  if (p.is_infinity() && tr.p1.is_infinity()) return SpherePoint(ExactComplex::one());
  Rational e = 0;
  ExactComplex c = ExactComplex::one();
  bool zero = false, pole = false;
  auto factor = [&](const PointP1L& x, const PointP1L& y, bool numerator) {
    if (x.is_infinity() || y.is_infinity()) return;
    const Lead l = leading_difference(x.value(), y.value());
    if (!l.exp) {
      (numerator ? zero : pole) = true;
      return;
    }
    e += numerator ? *l.exp : -*l.exp;
    c = numerator ? c * l.coef : c / l.coef;
  };
  factor(p, tr.p0, true);
  factor(tr.p1, tr.pinf, true);
  factor(p, tr.pinf, false);
  factor(tr.p1, tr.p0, false);
  if (zero && pole) fail(ErrorCode::kIndeterminate, "0/0 in cross-ratio");
  if (zero) return SpherePoint(ExactComplex::zero());
  if (pole) return SpherePoint::infinity();
  if (e > 0) return SpherePoint(ExactComplex::zero());
  if (e < 0) return SpherePoint::infinity();
  return SpherePoint(c);
}

bool contains(const Ball& n, const Ball& a) {
  if (a.infinity) return false;
  if (!(n.rv <= a.rv)) return false;
  return valuation_at_least(difference_valuation(n.center, a.center), n.rv.value());
}

ExpBound join_rv(const Ball& a, const Ball& b) {
  const ExpBound m = min(a.rv, b.rv);
  const Valuation diff = difference_valuation(a.center, b.center);
  if (diff.is_finite()) return min(m, ExpBound(diff.value()));
  if (m <= diff.lower_bound()) return m;
  fail(ErrorCode::kPrecisionExhausted, "cannot separate tree nodes at the known precision");
}

// Whether ball n lies strictly inside the segment between nodes a and b.
bool on_segment(const Ball& n, const Ball& a, const Ball& b) {
  if (a.infinity) return contains(n, b);
  if (b.infinity) return contains(n, a);
  const bool in_a = contains(n, a);
  const bool in_b = contains(n, b);
  if (!in_a && !in_b) return false;
  const ExpBound j = join_rv(a, b);
  if (in_a && in_b) return n.rv == j;
  return j <= n.rv;
}

void require_distinct(const Family& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const PointP1L& p = family[i].second;
      const PointP1L& q = family[j].second;
      const std::string what = family[i].first + " and " + family[j].first;
      if (p.is_infinity() || q.is_infinity()) {
        if (p.is_infinity() && q.is_infinity()) fail(ErrorCode::kNotDistinct, what + " are both infinity");
        continue;
      }
      const Valuation d = difference_valuation(p.value(), q.value());
      if (d.is_exact_zero()) fail(ErrorCode::kNotDistinct, what + " coincide");
      if (d.zero_modulo_precision()) fail(ErrorCode::kPrecisionExhausted, what + " agree to the known precision");
    }
  }
}

}  // namespace

TreeOfSpheres limit_tree(const Family& family, MarkingConvention convention, long window) {
  const std::size_t n = family.size();
  if (n < 3) fail(ErrorCode::kInvalidArgument, "a marked family needs at least 3 labels");
  {
    std::set<std::string> labels;
    for (const auto& [label, p] : family) labels.insert(label);
    if (labels.size() != n) fail(ErrorCode::kInvalidArgument, "duplicate label in family");
  }
  require_distinct(family);

  struct Found {
    TypeIIPoint point;
    std::array<std::size_t, 3> triple;
  };
  std::vector<Found> found;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        TypeIIPoint v = separating_vertex(family[i].second, family[j].second, family[k].second);
        if (std::none_of(found.begin(), found.end(), [&](const Found& f) { return f.point == v; })) {
          found.push_back({std::move(v), {i, j, k}});
        }
      }
    }
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const Found& a, const Found& b) { return compare_points(a.point, b.point) < 0; });

  TreeOfSpheres t;
  for (const auto& [label, p] : family) {
    t.leaves.push_back(label);
    t.leaf_points.push_back(p);
  }
  std::vector<Ball> balls;
  for (const auto& [label, p] : family) {
    balls.push_back(p.is_infinity() ? Ball{true, {}, {}} : Ball{false, p.value(), ExpBound::infinite()});
  }
  for (const auto& f : found) balls.push_back({false, f.point.center(), ExpBound(f.point.rv())});

  const int nodes = static_cast<int>(balls.size());
  for (int a = 0; a < nodes; ++a) {
    for (int b = a + 1; b < nodes; ++b) {
      bool blocked = false;
      for (int m = static_cast<int>(n); m < nodes && !blocked; ++m) {
        if (m == a || m == b) continue;
        blocked = on_segment(balls[m], balls[a], balls[b]);
      }
      if (!blocked) t.edges.emplace_back(a, b);
    }
  }

  for (const auto& f : found) {
    SphereVertex v;
    v.point = f.point;
    if (convention == MarkingConvention::kCanonicalChart) {
      v.triple = canonical_triple(f.point);
    } else {
      v.triple = Triple{family[f.triple[0]].second, family[f.triple[1]].second, family[f.triple[2]].second};
    }
    auto slot = [&](const PointP1L& p) { return reduced_cross_ratio(p, *v.triple); };
    for (std::size_t k = 0; k < family.size(); ++k) {
      // the normalizing triple lands on 0, 1, inf by construction, even when
      // its points are only known to finite precision
      if (convention == MarkingConvention::kFirstTriple && k == f.triple[0]) {
        v.marking.emplace_back(0);
      } else if (convention == MarkingConvention::kFirstTriple && k == f.triple[1]) {
        v.marking.emplace_back(1);
      } else if (convention == MarkingConvention::kFirstTriple && k == f.triple[2]) {
        v.marking.push_back(SpherePoint::infinity());
      } else {
        v.marking.push_back(slot(family[k].second));
      }
    }
    t.vertices.push_back(std::move(v));
  }
  // The branch at v toward a neighbour holds at least one leaf, and every point
  // of that branch has the same direction at v.
  auto leaf_behind = [&](int from, int start) {
    std::vector<int> stack{start}, seen{from, start};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      if (t.is_leaf(x)) return x;
      for (int y : t.neighbors(x)) {
        if (std::find(seen.begin(), seen.end(), y) != seen.end()) continue;
        seen.push_back(y);
        stack.push_back(y);
      }
    }
    fail(ErrorCode::kInvalidArgument, "tree branch without a leaf");
  };
  for (std::size_t j = 0; j < t.vertices.size(); ++j) {
    SphereVertex& v = t.vertices[j];
    const int node = t.vertex_node(static_cast<int>(j));
    for (int m : t.neighbors(node)) v.attachment[m] = v.marking[leaf_behind(node, m)];
  }
  return t;
}

Family restrict_family(const Family& family, const std::vector<std::string>& labels) {
  Family out;
  for (const auto& label : labels) {
    auto it = std::find_if(family.begin(), family.end(), [&](const auto& e) { return e.first == label; });
    if (it == family.end()) fail(ErrorCode::kInvalidArgument, "label " + label + " is not in the family");
    out.push_back(*it);
  }
  return out;
}

namespace {

const PointP1L& point_of(const Family& family, const std::string& label) {
  for (const auto& [l, p] : family) {
    if (l == label) return p;
  }
  fail(ErrorCode::kPortraitInvalid, "label " + label + " has no point");
}

void require_labels(const Family& family, const std::vector<std::string>& labels, const std::string& set) {
  std::set<std::string> a;
  std::set<std::string> b(labels.begin(), labels.end());
  for (const auto& [l, p] : family) a.insert(l);
  if (a != b) fail(ErrorCode::kPortraitInvalid, "family labels do not match the portrait set " + set);
}

}  // namespace

TreeCover limit_cover(const RationalMapL& f, const Family& family_y, const Family& family_z, const Portrait& p,
                      long window) {
  const ValidationReport pr = portrait_validate(p);
  if (!pr.ok()) fail(ErrorCode::kPortraitInvalid, pr.issues.front().message);
  require_labels(family_y, p.Y, "Y");
  require_labels(family_z, p.Z, "Z");
  if (f.degree() != p.degree) fail(ErrorCode::kPortraitInvalid, "portrait degree differs from the map degree");

  for (const auto& [a, pa] : family_y) {
    const PointP1L image = apply_typeI(f, pa, window);
    if (!equal_at_precision(image, point_of(family_z, p.F.at(a)))) {
      fail(ErrorCode::kFamilyIncompatible, "F(" + a + ") is not the point of " + p.F.at(a));
    }
  }

  TreeCover c;
  c.portrait = p;
  c.source = limit_tree(family_y, MarkingConvention::kCanonicalChart, window);
  c.target = limit_tree(family_z, MarkingConvention::kCanonicalChart, window);
  for (const auto& v : c.source.vertices) {
    const TypeIIPoint w = image_typeII(f, *v.point, window);
    auto j = c.target.find_vertex(w);
    if (!j) {
      fail(ErrorCode::kVertexImageMissing, "image " + to_string(w) + " of " + to_string(*v.point) +
                                               " is not a vertex of the target tree");
    }
    c.vertex_map.push_back(*j);
    const MoebiusL mv = inverse(from_triple(*v.triple));
    const MoebiusL mw = inverse(from_triple(*c.target.vertices[*j].triple));
    c.sphere_maps.push_back(tangent_map(f, *v.point, mv, mw));
  }
  return c;
}

namespace {

std::string vertex_name(const TreeOfSpheres& t, int j) {
  const auto& v = t.vertices[j];
  return v.point ? to_string(*v.point) : "#" + std::to_string(j);
}

// Distinct values of a marking.
std::vector<SpherePoint> distinct_points(const std::vector<SpherePoint>& pts) {
  std::vector<SpherePoint> out;
  for (const auto& p : pts) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  }
  return out;
}

}  // namespace

ValidationReport verify_cover(const TreeCover& c) {
  ValidationReport r;
  const int d = c.portrait.degree;
  const TreeOfSpheres& src = c.source;
  const TreeOfSpheres& dst = c.target;
  if (c.vertex_map.size() != src.vertices.size() || c.sphere_maps.size() != src.vertices.size()) {
    r.add("shape", "", "vertex map or sphere maps do not cover the source vertices");
    return r;
  }

  auto target_node = [&](int node) -> std::optional<int> {
    if (!src.is_leaf(node)) return dst.vertex_node(c.vertex_map[src.vertex_of(node)]);
    auto it = c.portrait.F.find(src.leaves[node]);
    if (it == c.portrait.F.end()) return std::nullopt;
    return dst.leaf_node(it->second);
  };

  for (std::size_t j = 0; j < src.vertices.size(); ++j) {
    const int jj = static_cast<int>(j);
    const SphereVertex& v = src.vertices[j];
    const ReducedMap& f = c.sphere_maps[j];
    const int wi = c.vertex_map[j];
    const SphereVertex& w = dst.vertices[wi];
    const std::string name = vertex_name(src, jj);
    const int node = src.vertex_node(jj);
    const int fdeg = f.degree();
    if (f.is_constant()) {
      r.add("cover_condition_1", name, "sphere map is constant");
      continue;
    }

    // (1) f_v is a cover away from the marked points.
    const std::vector<SpherePoint> marked_src = distinct_points(v.marking);
    const std::vector<SpherePoint> marked_dst = distinct_points(w.marking);
    int ramification = 0;
    for (const auto& y : marked_src) {
      ramification += local_degree(f, y) - 1;
      if (std::find(marked_dst.begin(), marked_dst.end(), f(y)) == marked_dst.end()) {
        r.add("cover_condition_1", name, "marked point " + to_string(y) + " maps outside the target marking");
      }
    }
    if (ramification != 2 * fdeg - 2) r.add("cover_condition_1", name, "critical point outside the marked points");
    for (const auto& z : marked_dst) {
      int over = 0;
      for (const auto& y : marked_src) {
        if (f(y) == z) over += local_degree(f, y);
      }
      if (over != fdeg) {
        r.add("cover_condition_1", name, "preimage of " + to_string(z) + " leaves the marked points");
      }
    }

    // (2) attaching points map to attaching points; (3) local degrees match.
    int edge_ramification = 0;
    for (int m : src.neighbors(node)) {
      auto at = v.attachment.find(m);
      if (at == v.attachment.end()) {
        r.add("cover_condition_2", name, "edge without attaching point");
        continue;
      }
      const std::string edge = name + " -> " + (src.is_leaf(m) ? src.leaves[m] : vertex_name(src, src.vertex_of(m)));
      const int here = local_degree(f, at->second);
      std::optional<int> there;
      if (src.is_leaf(m)) {
        auto it = c.portrait.deg.find(src.leaves[m]);
        if (it != c.portrait.deg.end()) there = it->second;
      } else {
        const int k = src.vertex_of(m);
        auto back = src.vertices[k].attachment.find(node);
        if (back != src.vertices[k].attachment.end() && !c.sphere_maps[k].is_constant()) {
          there = local_degree(c.sphere_maps[k], back->second);
        }
      }
      if (!there || *there != here) r.add("cover_condition_3", edge, "local degrees differ across the edge");
      edge_ramification += (src.is_leaf(m) && there ? *there : here) - 1;

      const std::optional<int> image = target_node(m);
      const int wnode = dst.vertex_node(wi);
      if (!image || *image == wnode) {
        r.add("cover_condition_2", edge, "edge does not map to an edge at the image vertex");
        continue;
      }
      auto target_slot = w.attachment.find(dst.toward(wnode, *image));
      if (target_slot == w.attachment.end() || f(at->second) != target_slot->second) {
        r.add("cover_condition_2", edge, "attaching point does not map to the corresponding attaching point");
      }
    }
    if (edge_ramification != 2 * fdeg - 2) {
      r.add("riemann_hurwitz", name,
            "sum of (mult - 1) is " + std::to_string(edge_ramification) + ", expected " + std::to_string(2 * fdeg - 2));
    }
  }

  std::vector<int> total(dst.vertices.size(), 0);
  for (std::size_t j = 0; j < src.vertices.size(); ++j) total[c.vertex_map[j]] += c.sphere_maps[j].degree();
  for (std::size_t k = 0; k < dst.vertices.size(); ++k) {
    const std::string name = vertex_name(dst, static_cast<int>(k));
    if (total[k] == 0) {
      r.add("surjective", name, "target vertex has no preimage");
    } else if (total[k] != d) {
      r.add("global_degree", name, "degrees over the vertex sum to " + std::to_string(total[k]));
    }
  }
  return r;
}

ValidationReport compatibility_report(const TreeOfSpheres& tx, const TreeOfSpheres& ty) {
  ValidationReport r;
  for (const auto& l : tx.leaves) {
    if (!ty.leaf_node(l)) r.add("leaves", l, "label " + l + " is not a leaf of the larger tree");
  }
  auto has_points = [](const TreeOfSpheres& t) {
    return std::all_of(t.vertices.begin(), t.vertices.end(), [](const SphereVertex& v) { return v.point.has_value(); });
  };
  if (!has_points(tx) || !has_points(ty)) fail(ErrorCode::kProvenanceMissing, "tree vertices carry no Berkovich point");
  if (!r.ok()) return r;
  for (const auto& v : tx.vertices) {
    auto j = ty.find_vertex(*v.point);
    if (!j) {
      r.add("vertex_missing", to_string(*v.point), "vertex is not in the larger tree");
      continue;
    }
    const SphereVertex& u = ty.vertices[*j];
    for (std::size_t k = 0; k < tx.leaves.size(); ++k) {
      const int kk = *ty.leaf_node(tx.leaves[k]);
      if (v.marking[k] != u.marking[kk]) {
        r.add("marking", tx.leaves[k], "markings at " + to_string(*v.point) + " disagree");
      }
    }
  }
  return r;
}

bool check_compatible(const TreeOfSpheres& tx, const TreeOfSpheres& ty) { return compatibility_report(tx, ty).ok(); }

}  // namespace berktrees
