#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "cordlasso/cords.hpp"
#include "cordlasso/tree.hpp"

namespace cordlasso {

/// Graph on the child edges of one interior vertex v. Two child edges are
/// adjacent when some cord has its lca at v and one end below each of them.
/// Nodes are named by the child vertex the edge leads to.
class ChildEdgeGraph {
 public:
  /// Throws InputError if v is a leaf or a cord label is outside X(t).
  static ChildEdgeGraph build(const XTree& t, const CordSet& cords, Vertex v);

  Vertex owner() const noexcept { return owner_; }
  const std::vector<Vertex>& nodes() const noexcept { return nodes_; }
  /// Child edges ending in a leaf (E_l) and the remaining ones (E_s).
  const std::vector<Vertex>& leaf_edges() const noexcept { return leaf_edges_; }
  const std::vector<Vertex>& subtree_edges() const noexcept { return subtree_edges_; }

  bool adjacent(Vertex e, Vertex f) const;
  std::size_t edge_count() const noexcept;
  const std::map<Vertex, std::set<Vertex>>& adjacency() const noexcept { return adjacency_; }

  bool has_edge() const noexcept { return edge_count() > 0; }
  bool is_connected() const;
  bool is_clique() const;
  /// E_s induces a clique and every E_l node is adjacent to every E_s node.
  /// Throws InputError when E_s is empty (v parents a pseudo-cherry).
  bool is_rich() const;

 private:
  ChildEdgeGraph(Vertex owner, std::vector<Vertex> nodes) : owner_(owner), nodes_(std::move(nodes)) {}
  void connect(Vertex e, Vertex f);

  Vertex owner_;
  std::vector<Vertex> nodes_;
  std::vector<Vertex> leaf_edges_;
  std::vector<Vertex> subtree_edges_;
  std::map<Vertex, std::set<Vertex>> adjacency_;
};

/// One graph per interior vertex, from a single pass over the cords.
std::map<Vertex, ChildEdgeGraph> build_all_child_edge_graphs(const XTree& t, const CordSet& cords);

/// Graphviz text; leaf edges are drawn as boxes, subtree edges as circles,
/// each node labelled by the leaves below it.
std::string to_dot(const XTree& t, const ChildEdgeGraph& g);

}  // namespace cordlasso
