#pragma once

// Trees of spheres, portraits, limits of marked families and covers between
// limit trees.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "berktrees/ratmap.hpp"

namespace berktrees {

struct Issue {
  std::string check;
  std::string witness;
  std::string message;
};

struct ValidationReport {
  std::vector<Issue> issues;

  bool ok() const { return issues.empty(); }
  /// True if some issue was raised by `check`.
  bool flags(std::string_view check) const;
  void add(std::string check, std::string witness, std::string message) {
    issues.push_back({std::move(check), std::move(witness), std::move(message)});
  }
};

struct Portrait {
  std::vector<std::string> Y;
  std::vector<std::string> Z;
  std::map<std::string, std::string> F;
  std::map<std::string, int> deg;
  int degree = 0;
};

ValidationReport portrait_validate(const Portrait& p);

/// Labelled points, in input order.
using Family = std::vector<std::pair<std::string, PointP1L>>;

/// How the sphere at a vertex v is normalized.
/// kCanonicalChart: z -> (z - c)/t^rv for v = <c; rv>.
/// kFirstTriple: send the first label triple (in input order) separated by v
/// to 0, 1, infinity.
enum class MarkingConvention { kCanonicalChart, kFirstTriple };

struct SphereVertex {
  std::optional<TypeIIPoint> point;
  /// Three points separated by `point`, sent to 0, 1, infinity.
  std::optional<Triple> triple;
  /// a_v, indexed like the leaves.
  std::vector<SpherePoint> marking;
  /// i_v, keyed by neighbouring node id.
  std::map<int, SpherePoint> attachment;
};

/// Node ids: leaf k is node k, vertex j is node leaves.size() + j.
struct TreeOfSpheres {
  std::vector<std::string> leaves;
  /// Empty when the tree was built without a family.
  std::vector<PointP1L> leaf_points;
  std::vector<SphereVertex> vertices;
  std::vector<std::pair<int, int>> edges;

  int node_count() const { return static_cast<int>(leaves.size() + vertices.size()); }
  bool is_leaf(int node) const { return node < static_cast<int>(leaves.size()); }
  int vertex_node(int j) const { return static_cast<int>(leaves.size()) + j; }
  int vertex_of(int node) const { return node - static_cast<int>(leaves.size()); }
  std::optional<int> leaf_node(std::string_view label) const;
  std::optional<int> find_vertex(const TypeIIPoint& x) const;
  std::vector<int> neighbors(int node) const;
  /// The neighbour of `from` on the path to `to` (from != to).
  int toward(int from, int to) const;
};

/// Tree shape, stability, injective attachments and marking/attachment agreement.
ValidationReport validate_tree(const TreeOfSpheres& t);

/// Limit tree of a marked family. Vertices are the separating vertices of all
/// label triples, sorted by (rv, center).
TreeOfSpheres limit_tree(const Family& family, MarkingConvention convention = MarkingConvention::kCanonicalChart,
                         long window = kDefaultWindow);

/// The restriction of a family to the given labels, in the given order.
Family restrict_family(const Family& family, const std::vector<std::string>& labels);

struct TreeCover {
  TreeOfSpheres source;
  TreeOfSpheres target;
  /// Source vertex index -> target vertex index.
  std::vector<int> vertex_map;
  std::vector<ReducedMap> sphere_maps;
  Portrait portrait;
};

TreeCover limit_cover(const RationalMapL& f, const Family& family_y, const Family& family_z, const Portrait& p,
                      long window = kDefaultWindow);

ValidationReport verify_cover(const TreeCover& c);

/// Each internal vertex of tx is a vertex of ty with the same marking on the
/// leaves of tx. Throws PROVENANCE_MISSING for trees without vertex points.
ValidationReport compatibility_report(const TreeOfSpheres& tx, const TreeOfSpheres& ty);
bool check_compatible(const TreeOfSpheres& tx, const TreeOfSpheres& ty);

}  // namespace berktrees
