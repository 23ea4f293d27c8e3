#include "cordlasso/tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "cordlasso/errors.hpp"

namespace cordlasso {

bool is_valid_label(const LeafLabel& label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
           c == ':' || c == ';';
  });
}

XTree::XTree(std::vector<Vertex> parents, const std::map<Vertex, LeafLabel>& labels)
    : parent_(std::move(parents)) {
  const std::size_t n = parent_.size();
  if (n == 0) throw InputError("a tree needs at least one vertex");

  children_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const Vertex p = parent_[v];
    if (p == kNoVertex) {
      if (root_ != kNoVertex) throw InputError("tree has more than one root");
      root_ = v;
    } else {
      if (p >= n || p == v) throw InputError("invalid parent index");
      children_[p].push_back(v);
    }
  }
  if (root_ == kNoVertex) throw InputError("tree has no root");

  // Preorder from the root; anything unreached sits on a cycle.
  depth_.assign(n, 0);
  std::vector<Vertex> stack{root_};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    preorder_.push_back(v);
    for (auto it = children_[v].rbegin(); it != children_[v].rend(); ++it) {
      depth_[*it] = depth_[v] + 1;
      stack.push_back(*it);
    }
  }
  if (preorder_.size() != n) throw InputError("parent map is not a tree");

  label_of_.resize(n);
  for (Vertex v = 0; v < n; ++v) {
    const auto it = labels.find(v);
    if (children_[v].empty()) {
      if (it == labels.end()) throw InputError("leaf vertex without label");
      if (!is_valid_label(it->second)) throw InputError("invalid leaf label '" + it->second + "'");
      if (!leaf_by_label_.emplace(it->second, v).second) {
        throw InputError("duplicate leaf label '" + it->second + "'");
      }
      label_of_[v] = it->second;
    } else {
      if (it != labels.end()) throw InputError("interior vertex carries a label");
      if (children_[v].size() < 2) throw InputError("unary vertex");
    }
  }
  for (Vertex v : preorder_) {
    if (!children_[v].empty()) interior_.push_back(v);
  }
  for (const auto& [label, v] : leaf_by_label_) labels_.push_back(label);

  min_label_.resize(n);
  cluster_size_.assign(n, 0);
  for (auto it = preorder_.rbegin(); it != preorder_.rend(); ++it) {
    const Vertex v = *it;
    if (children_[v].empty()) {
      min_label_[v] = label_of_[v];
      cluster_size_[v] = 1;
      continue;
    }
    min_label_[v] = min_label_[children_[v].front()];
    for (Vertex c : children_[v]) {
      min_label_[v] = std::min(min_label_[v], min_label_[c]);
      cluster_size_[v] += cluster_size_[c];
    }
  }
}

const LeafLabel& XTree::label(Vertex v) const {
  if (!is_leaf(v)) throw InputError("vertex " + std::to_string(v) + " is not a leaf");
  return label_of_[v];
}

Vertex XTree::leaf(const LeafLabel& label) const {
  const auto it = leaf_by_label_.find(label);
  if (it == leaf_by_label_.end()) throw InputError("unknown leaf label '" + label + "'");
  return it->second;
}

bool XTree::is_ancestor_or_self(Vertex u, Vertex w) const {
  while (depth_.at(w) > depth_.at(u)) w = parent_[w];
  return u == w;
}

Vertex XTree::lca_vertex(Vertex u, Vertex w) const {
  while (depth_.at(u) > depth_.at(w)) u = parent_[u];
  while (depth_.at(w) > depth_.at(u)) w = parent_[w];
  while (u != w) {
    u = parent_[u];
    w = parent_[w];
  }
  return u;
}

Vertex XTree::child_toward(Vertex v, Vertex w) const {
  if (depth_.at(w) <= depth_.at(v)) throw InputError("vertex is not a proper descendant");
  while (depth_[w] > depth_[v] + 1) w = parent_[w];
  if (parent_[w] != v) throw InputError("vertex is not a proper descendant");
  return w;
}

std::string XTree::canonical(Vertex v) const {
  if (is_leaf(v)) return label_of_[v];
  std::vector<std::string> parts;
  parts.reserve(children_[v].size());
  for (Vertex c : children_[v]) parts.push_back(canonical(c));
  std::sort(parts.begin(), parts.end());
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  out += ')';
  return out;
}

std::string XTree::canonical() const { return canonical(root_); }

Triplet Triplet::make(LeafLabel x, LeafLabel y, LeafLabel outlier) {
  if (x == y || x == outlier || y == outlier) {
    throw InputError("triplet labels must be pairwise distinct");
  }
  if (y < x) std::swap(x, y);
  return Triplet{std::move(x), std::move(y), std::move(outlier)};
}

Vertex lca(const XTree& t, const LeafLabel& a, const LeafLabel& b) {
  const Vertex va = t.leaf(a);
  const Vertex vb = t.leaf(b);
  if (va == vb) throw InputError("lca needs two distinct labels");
  return t.lca_vertex(va, vb);
}

LeafSet leaves_below(const XTree& t, Vertex v) {
  if (v >= t.vertex_count()) throw InputError("vertex out of range");
  LeafSet out;
  std::vector<Vertex> stack{v};
  while (!stack.empty()) {
    const Vertex w = stack.back();
    stack.pop_back();
    if (t.is_leaf(w)) {
      out.insert(t.label(w));
    } else {
      for (Vertex c : t.children(w)) stack.push_back(c);
    }
  }
  return out;
}

XTree restrict(const XTree& t, const LeafSet& y) {
  if (y.empty()) throw InputError("restriction to the empty set");
  for (const auto& label : y) t.leaf(label);

  std::vector<Vertex> parents;
  std::map<Vertex, LeafLabel> labels;

  // Returns the new id of the subtree below v, or nullopt when it holds no
  // leaf of Y. A vertex left with one child is replaced by that child.
  std::function<std::optional<Vertex>(Vertex)> build = [&](Vertex v) -> std::optional<Vertex> {
    if (t.is_leaf(v)) {
      if (!y.contains(t.label(v))) return std::nullopt;
      const Vertex id = parents.size();
      parents.push_back(kNoVertex);
      labels.emplace(id, t.label(v));
      return id;
    }
    std::vector<Vertex> kept;
    for (Vertex c : t.children(v)) {
      if (auto id = build(c)) kept.push_back(*id);
    }
    if (kept.empty()) return std::nullopt;
    if (kept.size() == 1) return kept.front();
    const Vertex id = parents.size();
    parents.push_back(kNoVertex);
    for (Vertex c : kept) parents[c] = id;
    return id;
  };
  build(t.root());
  return XTree(std::move(parents), labels);
}

std::set<Triplet> triplets(const XTree& t) {
  // ab|c is displayed iff lca(a,b) lies strictly below lca(a,c).
  std::set<Triplet> out;
  const auto& x = t.labels();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const Vertex ab = lca(t, x[i], x[j]);
      for (std::size_t k = 0; k < x.size(); ++k) {
        if (k == i || k == j) continue;
        const Vertex ac = lca(t, x[i], x[k]);
        if (ab != ac && t.is_ancestor_or_self(ac, ab)) out.insert(Triplet::make(x[i], x[j], x[k]));
      }
    }
  }
  return out;
}

namespace {

void require_same_leaves(const XTree& t1, const XTree& t2) {
  if (t1.labels() != t2.labels()) throw InputError("trees are on different leaf sets");
}

}  // namespace

bool is_equivalent(const XTree& t1, const XTree& t2) {
  require_same_leaves(t1, t2);
  return t1.canonical() == t2.canonical();
}

bool refines(const XTree& big, const XTree& small) {
  require_same_leaves(big, small);
  const auto fine = triplets(big);
  const auto coarse = triplets(small);
  return std::includes(fine.begin(), fine.end(), coarse.begin(), coarse.end());
}

bool is_pseudo_cherry_parent(const XTree& t, Vertex v) {
  if (t.is_leaf(v) || t.cluster_size(v) == t.leaf_count()) return false;
  const auto kids = t.children(v);
  return std::all_of(kids.begin(), kids.end(), [&](Vertex c) { return t.is_leaf(c); });
}

std::vector<PseudoCherry> pseudo_cherries(const XTree& t) {
  std::vector<PseudoCherry> out;
  for (Vertex v : t.interior_vertices()) {
    if (is_pseudo_cherry_parent(t, v)) out.push_back({v, leaves_below(t, v)});
  }
  return out;
}

std::set<Vertex> interior_minus(const XTree& t) {
  std::set<Vertex> out;
  for (Vertex v : t.interior_vertices()) {
    if (!is_pseudo_cherry_parent(t, v)) out.insert(v);
  }
  return out;
}

bool is_binary(const XTree& t) {
  const auto& inner = t.interior_vertices();
  return std::all_of(inner.begin(), inner.end(), [&](Vertex v) { return t.children(v).size() == 2; });
}

bool is_star(const XTree& t) { return t.interior_vertices().size() == 1; }

}  // namespace cordlasso
