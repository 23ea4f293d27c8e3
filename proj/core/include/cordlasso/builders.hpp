#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cordlasso/cords.hpp"
#include "cordlasso/tree.hpp"

namespace cordlasso {

/// Leaf order of a depth-first traversal of some planar embedding, read
/// cyclically.
struct CircularOrdering {
  std::vector<LeafLabel> order;
};

/// Two disjoint nonempty blocks whose union is X.
struct Bipartition {
  LeafSet a_side;
  LeafSet b_side;

  /// Throws InputError unless the blocks are nonempty, disjoint, and cover x_set.
  static Bipartition make(LeafSet a_side, LeafSet b_side, const LeafSet& x_set);
};

// Builders pick, under each child edge, the lexicographically smallest leaf
// as its representative.

/// One cord per interior vertex, joining the representatives of its two
/// smallest child edges. Size |interior vertices|.
CordSet min_equidistant_lasso(const XTree& t);

/// All representative pairs across distinct child edges of every interior
/// vertex. Size sum over v of C(children(v), 2).
CordSet min_topological_lasso(const XTree& t);

/// Clique on the subtree children plus every subtree x leaf pair at vertices
/// that do not parent a pseudo-cherry, and a path through the children of
/// each pseudo-cherry parent. Empty for the star tree.
CordSet min_weak_lasso(const XTree& t);

/// Canonical child order when `seed` is empty; otherwise children are shuffled
/// at every vertex by a generator seeded with it.
CircularOrdering circular_order(const XTree& t, std::optional<std::uint64_t> seed = std::nullopt);

/// Cords between cyclically consecutive leaves. Needs at least three leaves.
CordSet circular_lasso(const CircularOrdering& ord);

/// Every cord with one end in each block.
CordSet bipartition_lasso(const Bipartition& bp);

/// k distinct cords on x_set drawn uniformly without replacement. Throws
/// InputError when k exceeds C(|x_set|, 2).
CordSet random_cord_set(const std::vector<LeafLabel>& x_set, std::size_t k, std::uint64_t seed);

}  // namespace cordlasso
