#include "cordlasso/weighting.hpp"

#include <algorithm>
#include <random>

#include "cordlasso/errors.hpp"

namespace cordlasso {

HeightMap::HeightMap(const XTree& t, std::vector<Rational> heights) : heights_(std::move(heights)) {
  using Kind = WeightingError::Kind;
  if (heights_.size() != t.vertex_count()) {
    throw WeightingError(Kind::kIncomplete, "height map size does not match the tree");
  }
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.is_leaf(v)) {
      if (heights_[v] != 0) throw WeightingError(Kind::kNotEquidistant, "leaf height must be 0");
      continue;
    }
    if (heights_[v] < 0) throw WeightingError(Kind::kNegative, "negative height");
    const Vertex p = t.parent(v);
    if (p != kNoVertex && !(heights_[v] < heights_[p])) {
      throw WeightingError(Kind::kNotProper, "interior edge with nonpositive weight");
    }
  }
}

HeightMap HeightMap::from_interior(const XTree& t, const std::map<Vertex, Rational>& heights) {
  std::vector<Rational> full(t.vertex_count(), Rational(0));
  for (Vertex v : t.interior_vertices()) {
    const auto it = heights.find(v);
    if (it == heights.end()) {
      throw WeightingError(WeightingError::Kind::kIncomplete, "missing interior height");
    }
    full[v] = it->second;
  }
  return HeightMap(t, std::move(full));
}

EdgeWeighting to_edge_weights(const XTree& t, const HeightMap& hm) {
  EdgeWeighting w;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    const Vertex p = t.parent(v);
    if (p != kNoVertex) w.weight.emplace(v, Rational(hm.height(p) - hm.height(v)));
  }
  return w;
}

HeightMap from_edge_weights(const XTree& t, const EdgeWeighting& w) {
  using Kind = WeightingError::Kind;
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (t.parent(v) == kNoVertex) continue;
    const auto it = w.weight.find(v);
    if (it == w.weight.end()) throw WeightingError(Kind::kIncomplete, "edge without weight");
    if (it->second < 0) throw WeightingError(Kind::kNegative, "negative edge weight");
    if (!t.is_leaf(v) && it->second <= 0) {
      throw WeightingError(Kind::kNotProper, "interior edge with nonpositive weight");
    }
  }

  // Postorder: the height of v is the common weighted distance down to every
  // leaf below it.
  std::vector<Rational> heights(t.vertex_count(), Rational(0));
  const auto& order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (t.is_leaf(v)) continue;
    bool first = true;
    for (Vertex c : t.children(v)) {
      const Rational via = heights[c] + w.weight.at(c);
      if (first) {
        heights[v] = via;
        first = false;
      } else if (via != heights[v]) {
        throw WeightingError(Kind::kNotEquidistant,
                             "leaves below one vertex at different distances from it");
      }
    }
  }
  return HeightMap(t, std::move(heights));
}

Rational leaf_distance(const XTree& t, const HeightMap& hm, const LeafLabel& a,
                       const LeafLabel& b) {
  return 2 * hm.height(lca(t, a, b));
}

bool is_l_isometric(const XTree& t1, const HeightMap& hm1, const XTree& t2,
                    const HeightMap& hm2, const CordSet& cords) {
  require_cords_in(t1, cords);
  require_cords_in(t2, cords);
  return std::all_of(cords.begin(), cords.end(), [&](const Cord& c) {
    return leaf_distance(t1, hm1, c.a, c.b) == leaf_distance(t2, hm2, c.a, c.b);
  });
}

HeightMap random_proper_heights(const XTree& t, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> denominator(1, 4);
  std::uniform_int_distribution<int> numerator(1, 6);
  std::uniform_int_distribution<int> base(0, 3);

  std::vector<Rational> heights(t.vertex_count(), Rational(0));
  const auto& order = t.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    if (t.is_leaf(v)) continue;
    bool has_interior_child = false;
    Rational floor(0);
    for (Vertex c : t.children(v)) {
      if (t.is_leaf(c)) continue;
      floor = has_interior_child ? std::max(floor, heights[c]) : heights[c];
      has_interior_child = true;
    }
    const int den = denominator(rng);
    Rational step(has_interior_child ? numerator(rng) : base(rng), den);
    step.canonicalize();
    heights[v] = floor + step;
  }
  return HeightMap(t, std::move(heights));
}

}  // namespace cordlasso
