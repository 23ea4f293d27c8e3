#pragma once

#include <compare>
#include <cstddef>
#include <limits>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cordlasso {

using LeafLabel = std::string;
using LeafSet = std::set<LeafLabel>;

/// Vertices are dense indices into one tree. An edge is named by its lower
/// endpoint, so "child edge e of v" and "child w of v" share the index w.
using Vertex = std::size_t;
inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

/// True iff `label` can be a leaf name: nonempty, no whitespace, none of "(),:;".
bool is_valid_label(const LeafLabel& label);

/// Rooted tree whose childless vertices carry distinct labels and whose
/// interior vertices all have at least two children. Immutable once built.
class XTree {
 public:
  /// `parents[v]` is the parent of v, or kNoVertex for the (unique) root.
  /// `labels` must name exactly the childless vertices. Throws InputError when
  /// the result would not be an X-tree (cycles, several roots, unary vertices,
  /// duplicate or invalid labels).
  XTree(std::vector<Vertex> parents, const std::map<Vertex, LeafLabel>& labels);

  std::size_t vertex_count() const noexcept { return parent_.size(); }
  std::size_t leaf_count() const noexcept { return leaf_by_label_.size(); }
  Vertex root() const noexcept { return root_; }

  Vertex parent(Vertex v) const { return parent_.at(v); }
  std::span<const Vertex> children(Vertex v) const { return children_.at(v); }
  bool is_leaf(Vertex v) const { return children_.at(v).empty(); }
  std::size_t depth(Vertex v) const { return depth_.at(v); }

  /// Label of a leaf vertex; throws InputError for interior vertices.
  const LeafLabel& label(Vertex v) const;
  /// Leaf vertex carrying `label`; throws InputError if there is none.
  Vertex leaf(const LeafLabel& label) const;
  bool has_leaf(const LeafLabel& label) const { return leaf_by_label_.contains(label); }

  /// The leaf-label set X, sorted.
  const std::vector<LeafLabel>& labels() const noexcept { return labels_; }
  /// Interior vertices in preorder (root first).
  const std::vector<Vertex>& interior_vertices() const noexcept { return interior_; }
  /// All vertices in preorder.
  const std::vector<Vertex>& preorder() const noexcept { return preorder_; }

  /// Smallest leaf label below v (v itself for a leaf).
  const LeafLabel& min_label_below(Vertex v) const { return min_label_.at(v); }
  /// Number of leaves below v.
  std::size_t cluster_size(Vertex v) const { return cluster_size_.at(v); }

  /// u is an ancestor of w, or u == w.
  bool is_ancestor_or_self(Vertex u, Vertex w) const;
  Vertex lca_vertex(Vertex u, Vertex w) const;
  /// Child of `v` whose subtree holds `w`; `w` must be a proper descendant.
  Vertex child_toward(Vertex v, Vertex w) const;

  /// Parenthesized encoding with children sorted by their own encodings.
  /// Two trees are equivalent iff their canonical forms are equal.
  std::string canonical() const;
  /// Canonical form of the subtree below v.
  std::string canonical(Vertex v) const;

  friend bool operator==(const XTree& a, const XTree& b) { return a.canonical() == b.canonical(); }

 private:
  std::vector<Vertex> parent_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<std::size_t> depth_;
  std::vector<LeafLabel> label_of_;
  std::vector<LeafLabel> min_label_;
  std::vector<std::size_t> cluster_size_;
  std::map<LeafLabel, Vertex> leaf_by_label_;
  std::vector<LeafLabel> labels_;
  std::vector<Vertex> interior_;
  std::vector<Vertex> preorder_;
  Vertex root_ = kNoVertex;
};

/// Rooted triplet ab|c. The cherry pair is stored sorted.
struct Triplet {
  LeafLabel a;
  LeafLabel b;
  LeafLabel outlier;

  /// Normalizes the cherry order; throws InputError unless all three differ.
  static Triplet make(LeafLabel x, LeafLabel y, LeafLabel outlier);

  auto operator<=>(const Triplet&) const = default;
};

struct PseudoCherry {
  Vertex parent;
  LeafSet leaves;
};

Vertex lca(const XTree& t, const LeafLabel& a, const LeafLabel& b);
LeafSet leaves_below(const XTree& t, Vertex v);

/// T|_Y with unary vertices suppressed.
XTree restrict(const XTree& t, const LeafSet& y);

std::set<Triplet> triplets(const XTree& t);
bool is_equivalent(const XTree& t1, const XTree& t2);
/// `big` refines `small`: R(small) is contained in R(big).
bool refines(const XTree& big, const XTree& small);

std::vector<PseudoCherry> pseudo_cherries(const XTree& t);
bool is_pseudo_cherry_parent(const XTree& t, Vertex v);
/// Interior vertices that are not the parent of a pseudo-cherry.
std::set<Vertex> interior_minus(const XTree& t);

bool is_binary(const XTree& t);
bool is_star(const XTree& t);

}  // namespace cordlasso
