#include "cordlasso/builders.hpp"

#include <algorithm>
#include <random>

#include "cordlasso/errors.hpp"

namespace cordlasso {

namespace {

void require_three_leaves(const XTree& t) {
  if (t.leaf_count() < 3) throw InputError("lasso builders need at least three leaves");
}

/// Children of v ordered by their representative leaf.
std::vector<Vertex> children_by_representative(const XTree& t, Vertex v) {
  std::vector<Vertex> kids(t.children(v).begin(), t.children(v).end());
  std::sort(kids.begin(), kids.end(), [&](Vertex x, Vertex y) {
    return t.min_label_below(x) < t.min_label_below(y);
  });
  return kids;
}

Cord representative_cord(const XTree& t, Vertex e, Vertex f) {
  return Cord::make(t.min_label_below(e), t.min_label_below(f));
}

}  // namespace

Bipartition Bipartition::make(LeafSet a_side, LeafSet b_side, const LeafSet& x_set) {
  if (a_side.empty() || b_side.empty()) throw InputError("bipartition blocks must be nonempty");
  LeafSet all = a_side;
  for (const auto& b : b_side) {
    if (!all.insert(b).second) throw InputError("label '" + b + "' is on both sides");
  }
  if (all != x_set) throw InputError("bipartition does not cover the leaf set");
  return Bipartition{std::move(a_side), std::move(b_side)};
}

CordSet min_equidistant_lasso(const XTree& t) {
  require_three_leaves(t);
  CordSet out;
  for (Vertex v : t.interior_vertices()) {
    const auto kids = children_by_representative(t, v);
    out.insert(representative_cord(t, kids[0], kids[1]));
  }
  return out;
}

CordSet min_topological_lasso(const XTree& t) {
  require_three_leaves(t);
  CordSet out;
  for (Vertex v : t.interior_vertices()) {
    const auto kids = children_by_representative(t, v);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      for (std::size_t j = i + 1; j < kids.size(); ++j) out.insert(representative_cord(t, kids[i], kids[j]));
    }
  }
  return out;
}

CordSet min_weak_lasso(const XTree& t) {
  require_three_leaves(t);
  CordSet out;
  if (is_star(t)) return out;
  for (Vertex v : t.interior_vertices()) {
    const auto kids = children_by_representative(t, v);
    if (is_pseudo_cherry_parent(t, v)) {
      for (std::size_t i = 0; i + 1 < kids.size(); ++i) out.insert(representative_cord(t, kids[i], kids[i + 1]));
      continue;
    }
    std::vector<Vertex> subtrees;
    std::vector<Vertex> leaves;
    for (Vertex c : kids) (t.is_leaf(c) ? leaves : subtrees).push_back(c);
    for (std::size_t i = 0; i < subtrees.size(); ++i) {
      for (std::size_t j = i + 1; j < subtrees.size(); ++j) {
        out.insert(representative_cord(t, subtrees[i], subtrees[j]));
      }
      for (Vertex l : leaves) out.insert(representative_cord(t, subtrees[i], l));
    }
  }
  return out;
}

CircularOrdering circular_order(const XTree& t, std::optional<std::uint64_t> seed) {
  std::optional<std::mt19937_64> rng;
  if (seed) rng.emplace(*seed);

  CircularOrdering ord;
  std::vector<Vertex> stack{t.root()};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (t.is_leaf(v)) {
      ord.order.push_back(t.label(v));
      continue;
    }
    std::vector<Vertex> kids(t.children(v).begin(), t.children(v).end());
    if (rng) {
      std::shuffle(kids.begin(), kids.end(), *rng);
    } else {
      // Canonical embedding: same child order as XTree::canonical().
      std::vector<std::pair<std::string, Vertex>> keyed;
      for (Vertex c : kids) keyed.emplace_back(t.canonical(c), c);
      std::sort(keyed.begin(), keyed.end());
      for (std::size_t i = 0; i < kids.size(); ++i) kids[i] = keyed[i].second;
    }
    for (auto it = kids.rbegin(); it != kids.rend(); ++it) stack.push_back(*it);
  }
  return ord;
}

CordSet circular_lasso(const CircularOrdering& ord) {
  const auto& x = ord.order;
  if (x.size() < 3) throw InputError("circular lasso needs at least three leaves");
  CordSet out;
  for (std::size_t i = 0; i < x.size(); ++i) out.insert(Cord::make(x[i], x[(i + 1) % x.size()]));
  return out;
}

CordSet bipartition_lasso(const Bipartition& bp) {
  CordSet out;
  for (const auto& a : bp.a_side) {
    for (const auto& b : bp.b_side) out.insert(Cord::make(a, b));
  }
  return out;
}

CordSet random_cord_set(const std::vector<LeafLabel>& x_set, std::size_t k, std::uint64_t seed) {
  const CordSet every = all_cords(x_set);
  if (k > every.size()) throw InputError("more cords requested than exist on the leaf set");
  std::vector<Cord> pool(every.begin(), every.end());
  std::mt19937_64 rng(seed);
  std::shuffle(pool.begin(), pool.end(), rng);
  return CordSet(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k));
}

}  // namespace cordlasso
