#pragma once

#include <compare>
#include <set>
#include <vector>

#include "cordlasso/tree.hpp"

namespace cordlasso {

/// Unordered pair of distinct leaf labels, stored with a < b.
struct Cord {
  LeafLabel a;
  LeafLabel b;

  /// Throws InputError when x == y.
  static Cord make(LeafLabel x, LeafLabel y);

  bool contains(const LeafLabel& x) const { return a == x || b == x; }
  /// The end that is not `x`; `x` must be one of the ends.
  const LeafLabel& other(const LeafLabel& x) const { return a == x ? b : a; }

  auto operator<=>(const Cord&) const = default;
};

using CordSet = std::set<Cord>;

/// Throws InputError if some cord names a label outside X(t).
void require_cords_in(const XTree& t, const CordSet& cords);

/// Every cord on X, i.e. all 2-subsets of t's leaf set.
CordSet all_cords(const std::vector<LeafLabel>& x_set);

std::string to_string(const Cord& cord);

}  // namespace cordlasso
