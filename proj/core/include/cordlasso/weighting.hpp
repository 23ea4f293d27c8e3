#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cordlasso/cords.hpp"
#include "cordlasso/rational.hpp"
#include "cordlasso/tree.hpp"

namespace cordlasso {

/// Equidistant proper weighting of a fixed tree, stored as heights of the
/// interior vertices above the leaves (leaves sit at height 0). An interior
/// edge {u,w} has weight h(u) - h(w) > 0; a pendant edge at x has weight
/// h(parent of x) >= 0. The map is only meaningful together with the tree it
/// was validated against.
class HeightMap {
 public:
  HeightMap() = default;

  /// `heights` has one entry per vertex of `t`. Leaf entries must be zero,
  /// interior entries nonnegative and strictly decreasing from parent to
  /// interior child. Throws WeightingError otherwise.
  HeightMap(const XTree& t, std::vector<Rational> heights);

  /// Convenience: heights for interior vertices only.
  static HeightMap from_interior(const XTree& t, const std::map<Vertex, Rational>& heights);

  const Rational& height(Vertex v) const { return heights_.at(v); }
  const std::vector<Rational>& heights() const noexcept { return heights_; }

  friend bool operator==(const HeightMap&, const HeightMap&) = default;

 private:
  std::vector<Rational> heights_;
};

/// Edge weights keyed by the lower endpoint of each edge.
struct EdgeWeighting {
  std::map<Vertex, Rational> weight;

  friend bool operator==(const EdgeWeighting&, const EdgeWeighting&) = default;
};

EdgeWeighting to_edge_weights(const XTree& t, const HeightMap& hm);

/// Inverse of to_edge_weights. Throws WeightingError with kind kNegative,
/// kNotProper, kNotEquidistant, or kIncomplete (an edge without weight).
HeightMap from_edge_weights(const XTree& t, const EdgeWeighting& w);

/// Path length between two leaves, which is 2 * h(lca(a, b)).
Rational leaf_distance(const XTree& t, const HeightMap& hm, const LeafLabel& a,
                       const LeafLabel& b);

/// The two weighted trees induce the same distance on every cord.
bool is_l_isometric(const XTree& t1, const HeightMap& hm1, const XTree& t2,
                    const HeightMap& hm2, const CordSet& cords);

/// Deterministic per seed. Heights are small-denominator rationals; the lowest
/// interior vertices may sit at height 0.
HeightMap random_proper_heights(const XTree& t, std::uint64_t seed);

}  // namespace cordlasso
