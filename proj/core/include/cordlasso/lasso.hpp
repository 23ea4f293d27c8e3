#pragma once

#include <string_view>
#include <vector>

#include "cordlasso/cords.hpp"
#include "cordlasso/tree.hpp"

namespace cordlasso {

enum class LassoKind { kEquidistant, kWeak, kTopological };

std::string_view to_string(LassoKind kind);
/// Accepts "equidistant", "weak", "topological"; throws InputError otherwise.
LassoKind parse_lasso_kind(std::string_view text);

/// Which uniqueness guarantees a cord set gives for a tree, decided from the
/// child-edge graphs. The failing lists hold every interior vertex whose
/// graph violates the condition for that kind.
struct LassoReport {
  bool equidistant = false;
  bool weak = false;
  bool topological = false;
  bool strong = false;

  std::vector<Vertex> failing_equidistant;
  std::vector<Vertex> failing_weak;
  std::vector<Vertex> failing_topological;

  bool holds(LassoKind kind) const;
};

// All lasso predicates require |X| >= 3 and throw InputError otherwise.

/// Every interior vertex has a child-edge graph with at least one edge.
bool is_equidistant_lasso(const XTree& t, const CordSet& cords);

/// Star tree: always. Otherwise the cord set is nonempty, the graph of every
/// vertex that does not parent a pseudo-cherry is rich, and the graph of
/// every pseudo-cherry parent is connected.
bool is_weak_lasso(const XTree& t, const CordSet& cords);

/// Nonempty, and every child-edge graph is a clique.
bool is_topological_lasso(const XTree& t, const CordSet& cords);

bool is_lasso(const XTree& t, const CordSet& cords, LassoKind kind);

LassoReport classify(const XTree& t, const CordSet& cords);

/// Replaces x by y in every cord through x and keeps the other cords:
/// {ab in L : x not in ab} + {ay : ax in L}. The pair yy coming from the cord
/// xy is dropped.
CordSet reduce_l1(const CordSet& cords, const LeafLabel& x, const LeafLabel& y);

/// Evaluates both sides of the pseudo-cherry reduction:
///   L is a `kind` lasso  <=>  xy in L and reduce_l1(L,x,y) + {xy} is one.
/// Returns whether the two sides agree. Throws InputError unless x and y are
/// distinct leaves of one pseudo-cherry, or when kind is weak and L is empty.
bool check_cherry_reduction(const XTree& t, const CordSet& cords, const LeafLabel& x,
                            const LeafLabel& y, LassoKind kind);

/// The union of the cords is exactly `x_set`.
bool is_covering(const CordSet& cords, const LeafSet& x_set);

/// Predicates of the graph on X whose edges are the cords.
struct CordGraphSummary {
  bool connected = false;
  /// No connected component is bipartite.
  bool strongly_non_bipartite = false;
};

CordGraphSummary cord_graph(const CordSet& cords, const LeafSet& x_set);

}  // namespace cordlasso
