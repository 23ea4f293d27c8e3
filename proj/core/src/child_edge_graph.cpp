#include "cordlasso/child_edge_graph.hpp"

#include <algorithm>
#include <sstream>

#include "cordlasso/errors.hpp"

namespace cordlasso {

ChildEdgeGraph ChildEdgeGraph::build(const XTree& t, const CordSet& cords, Vertex v) {
  if (v >= t.vertex_count() || t.is_leaf(v)) throw InputError("child-edge graph needs an interior vertex");
  require_cords_in(t, cords);
  ChildEdgeGraph g(v, {t.children(v).begin(), t.children(v).end()});
  for (Vertex c : g.nodes_) (t.is_leaf(c) ? g.leaf_edges_ : g.subtree_edges_).push_back(c);
  for (const auto& cord : cords) {
    const Vertex a = t.leaf(cord.a);
    const Vertex b = t.leaf(cord.b);
    if (t.lca_vertex(a, b) != v) continue;
    g.connect(t.child_toward(v, a), t.child_toward(v, b));
  }
  return g;
}

void ChildEdgeGraph::connect(Vertex e, Vertex f) {
  adjacency_[e].insert(f);
  adjacency_[f].insert(e);
}

bool ChildEdgeGraph::adjacent(Vertex e, Vertex f) const {
  const auto it = adjacency_.find(e);
  return it != adjacency_.end() && it->second.contains(f);
}

std::size_t ChildEdgeGraph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& [node, nbrs] : adjacency_) twice += nbrs.size();
  return twice / 2;
}

bool ChildEdgeGraph::is_connected() const {
  if (nodes_.size() <= 1) return true;
  std::set<Vertex> seen{nodes_.front()};
  std::vector<Vertex> stack{nodes_.front()};
  while (!stack.empty()) {
    const Vertex e = stack.back();
    stack.pop_back();
    const auto it = adjacency_.find(e);
    if (it == adjacency_.end()) continue;
    for (Vertex f : it->second) {
      if (seen.insert(f).second) stack.push_back(f);
    }
  }
  return seen.size() == nodes_.size();
}

bool ChildEdgeGraph::is_clique() const {
  const std::size_t k = nodes_.size();
  return edge_count() == k * (k - 1) / 2;
}

bool ChildEdgeGraph::is_rich() const {
  if (subtree_edges_.empty()) {
    throw InputError("richness is undefined at the parent of a pseudo-cherry");
  }
  for (std::size_t i = 0; i < subtree_edges_.size(); ++i) {
    for (std::size_t j = i + 1; j < subtree_edges_.size(); ++j) {
      if (!adjacent(subtree_edges_[i], subtree_edges_[j])) return false;
    }
    for (Vertex l : leaf_edges_) {
      if (!adjacent(l, subtree_edges_[i])) return false;
    }
  }
  return true;
}

std::map<Vertex, ChildEdgeGraph> build_all_child_edge_graphs(const XTree& t, const CordSet& cords) {
  require_cords_in(t, cords);
  std::map<Vertex, ChildEdgeGraph> graphs;
  for (Vertex v : t.interior_vertices()) graphs.emplace(v, ChildEdgeGraph::build(t, {}, v));

  std::map<Vertex, CordSet> by_lca;
  for (const auto& cord : cords) by_lca[lca(t, cord.a, cord.b)].insert(cord);
  for (auto& [v, subset] : by_lca) graphs.insert_or_assign(v, ChildEdgeGraph::build(t, subset, v));
  return graphs;
}

std::string to_dot(const XTree& t, const ChildEdgeGraph& g) {
  auto name = [&](Vertex e) {
    const auto leaves = leaves_below(t, e);
    std::string out;
    for (const auto& l : leaves) out += (out.empty() ? "" : ",") + l;
    return out;
  };
  std::ostringstream os;
  os << "graph G_" << g.owner() << " {\n";
  for (Vertex e : g.nodes()) {
    os << "  e" << e << " [label=\"" << name(e) << "\", shape=" << (t.is_leaf(e) ? "box" : "circle")
       << "];\n";
  }
  for (const auto& [e, nbrs] : g.adjacency()) {
    for (Vertex f : nbrs) {
      if (e < f) os << "  e" << e << " -- e" << f << ";\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cordlasso
