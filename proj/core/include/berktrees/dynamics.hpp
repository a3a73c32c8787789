#pragma once

// Orbits of type II points, dynamical systems of trees of spheres, and
// rescaling limits along periodic cycles.

#include <string>
#include <vector>

#include "berktrees/trees.hpp"

namespace berktrees {

struct OrbitRecord {
  enum class Status { kPeriodic, kStoppedAtBudget, kLeftTreeX };
  std::vector<TypeIIPoint> points;
  Status status = Status::kStoppedAtBudget;
  /// For kPeriodic: points[entry + period] == points[entry].
  int entry = 0;
  int period = 0;
};

std::string to_string(OrbitRecord::Status s);

/// Iterates image_typeII at most `budget` times, stopping at the first exact
/// repeat. A PRECISION_EXHAUSTED failure names the step where it happened.
OrbitRecord orbit_typeII(const RationalMapL& f, const TypeIIPoint& x0, int budget, long window = kDefaultWindow);

struct DynamicalSystemTS {
  TreeCover cover;
  std::vector<std::string> X;
  TreeOfSpheres tree_x;
};

/// Checks X ⊆ Y ∩ Z, equal points on X, and that the X-tree is compatible
/// with both trees of the cover. Throws NOT_COMPATIBLE or MARKING_MISMATCH.
DynamicalSystemTS build_dynamics(const TreeCover& cover, const std::vector<std::string>& X,
                                 long window = kDefaultWindow);

/// Follows the vertex map from source vertex `vertex` while the images stay
/// in the X-tree, for at most n steps.
OrbitRecord iterate_vertex(const DynamicalSystemTS& sys, int vertex, int n);

enum class RescalingClass { kMonomial, kDegree1, kInteresting };
std::string to_string(RescalingClass c);

/// Monomial: conjugate over C to u -> a·u^(±d) (for degree 1, any map with
/// two distinct fixed points). Degree1: parabolic degree-one maps.
RescalingClass classify(const ReducedMap& f);

struct RescalingCycle {
  std::vector<TypeIIPoint> cycle;
  /// tangent_maps[i] goes from cycle[i] to cycle[i + 1].
  std::vector<ReducedMap> tangent_maps;
  /// Return map at cycle[0].
  ReducedMap limit;
  RescalingClass classification = RescalingClass::kInteresting;
};

/// Runs an orbit from each seed and turns every new periodic cycle of period
/// at most max_period into a rescaling cycle based at its first point found.
std::vector<RescalingCycle> find_rescalings(const RationalMapL& f, const std::vector<TypeIIPoint>& seeds, int budget,
                                            int max_period, long window = kDefaultWindow);

/// Return map at cycle[index]: T_(index-1) ∘ ... ∘ T_0 ∘ T_(p-1) ∘ ... ∘ T_index.
ReducedMap rescaling_at_basepoint(const RescalingCycle& c, int index);

}  // namespace berktrees
