#include "cordlasso/lasso.hpp"

#include <algorithm>
#include <map>

#include "cordlasso/child_edge_graph.hpp"
#include "cordlasso/errors.hpp"

namespace cordlasso {

std::string_view to_string(LassoKind kind) {
  switch (kind) {
    case LassoKind::kEquidistant: return "equidistant";
    case LassoKind::kWeak: return "weak";
    case LassoKind::kTopological: return "topological";
  }
  return "unknown";
}

LassoKind parse_lasso_kind(std::string_view text) {
  if (text == "equidistant") return LassoKind::kEquidistant;
  if (text == "weak") return LassoKind::kWeak;
  if (text == "topological") return LassoKind::kTopological;
  throw InputError("unknown lasso kind '" + std::string(text) + "'");
}

bool LassoReport::holds(LassoKind kind) const {
  switch (kind) {
    case LassoKind::kEquidistant: return equidistant;
    case LassoKind::kWeak: return weak;
    case LassoKind::kTopological: return topological;
  }
  return false;
}

namespace {

void require_three_leaves(const XTree& t) {
  if (t.leaf_count() < 3) throw InputError("lasso questions need at least three leaves");
}

bool weak_condition_at(const XTree& t, const ChildEdgeGraph& g) {
  return is_pseudo_cherry_parent(t, g.owner()) ? g.is_connected() : g.is_rich();
}

}  // namespace

LassoReport classify(const XTree& t, const CordSet& cords) {
  require_three_leaves(t);
  LassoReport report;
  const auto graphs = build_all_child_edge_graphs(t, cords);
  const bool star = is_star(t);

  for (Vertex v : t.interior_vertices()) {
    const auto& g = graphs.at(v);
    if (!g.has_edge()) report.failing_equidistant.push_back(v);
    if (!g.is_clique()) report.failing_topological.push_back(v);
    if (!star && !weak_condition_at(t, g)) report.failing_weak.push_back(v);
  }

  const bool nonempty = !cords.empty();
  report.equidistant = nonempty && report.failing_equidistant.empty();
  report.topological = nonempty && report.failing_topological.empty();
  report.weak = star || (nonempty && report.failing_weak.empty());
  report.strong = report.equidistant && report.topological;
  return report;
}

bool is_equidistant_lasso(const XTree& t, const CordSet& cords) {
  return classify(t, cords).equidistant;
}

bool is_weak_lasso(const XTree& t, const CordSet& cords) { return classify(t, cords).weak; }

bool is_topological_lasso(const XTree& t, const CordSet& cords) {
  return classify(t, cords).topological;
}

bool is_lasso(const XTree& t, const CordSet& cords, LassoKind kind) {
  return classify(t, cords).holds(kind);
}

CordSet reduce_l1(const CordSet& cords, const LeafLabel& x, const LeafLabel& y) {
  if (x == y) throw InputError("reduction needs two distinct leaves");
  CordSet out;
  for (const auto& cord : cords) {
    if (!cord.contains(x)) {
      out.insert(cord);
    } else if (const auto& a = cord.other(x); a != y) {
      out.insert(Cord::make(a, y));
    }
  }
  return out;
}

bool check_cherry_reduction(const XTree& t, const CordSet& cords, const LeafLabel& x,
                            const LeafLabel& y, LassoKind kind) {
  require_three_leaves(t);
  const Vertex vx = t.leaf(x);
  const Vertex vy = t.leaf(y);
  if (vx == vy || t.parent(vx) != t.parent(vy) || !is_pseudo_cherry_parent(t, t.parent(vx))) {
    throw InputError("'" + x + "' and '" + y + "' are not in a common pseudo-cherry");
  }
  if (kind == LassoKind::kWeak && cords.empty()) {
    throw InputError("the weak reduction is stated for nonempty cord sets");
  }
  const Cord xy = Cord::make(x, y);
  CordSet reduced = reduce_l1(cords, x, y);
  reduced.insert(xy);
  const bool lhs = is_lasso(t, cords, kind);
  const bool rhs = cords.contains(xy) && is_lasso(t, reduced, kind);
  return lhs == rhs;
}

bool is_covering(const CordSet& cords, const LeafSet& x_set) {
  LeafSet covered;
  for (const auto& cord : cords) {
    covered.insert(cord.a);
    covered.insert(cord.b);
  }
  return covered == x_set;
}

CordGraphSummary cord_graph(const CordSet& cords, const LeafSet& x_set) {
  std::map<LeafLabel, std::vector<LeafLabel>> adjacency;
  for (const auto& x : x_set) adjacency[x];
  for (const auto& cord : cords) {
    if (!x_set.contains(cord.a) || !x_set.contains(cord.b)) {
      throw InputError("cord '" + to_string(cord) + "' leaves the vertex set");
    }
    adjacency[cord.a].push_back(cord.b);
    adjacency[cord.b].push_back(cord.a);
  }

  // Two-colour each component; a colouring conflict means an odd cycle.
  std::map<LeafLabel, int> colour;
  std::size_t components = 0;
  bool every_component_odd = true;
  for (const auto& start : x_set) {
    if (colour.contains(start)) continue;
    ++components;
    bool bipartite = true;
    colour[start] = 0;
    std::vector<LeafLabel> stack{start};
    while (!stack.empty()) {
      const LeafLabel u = stack.back();
      stack.pop_back();
      for (const auto& w : adjacency[u]) {
        if (const auto it = colour.find(w); it == colour.end()) {
          colour[w] = 1 - colour[u];
          stack.push_back(w);
        } else if (it->second == colour[u]) {
          bipartite = false;
        }
      }
    }
    if (bipartite) every_component_odd = false;
  }
  return {components <= 1, every_component_odd};
}

}  // namespace cordlasso
