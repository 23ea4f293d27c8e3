#include <doctest.h>

#include "cordlasso/child_edge_graph.hpp"
#include "cordlasso/errors.hpp"
#include "cordlasso/oracle.hpp"
#include "test_support.hpp"

using namespace cordlasso;
using cordlasso::testing::cords;
using cordlasso::testing::labels;
using cordlasso::testing::tree;
using cordlasso::testing::vertex_with_cluster;

TEST_CASE("graph at a pseudo-cherry parent") {
  const auto t = tree("((a,b,c),d);");
  const Vertex v = vertex_with_cluster(t, {"a", "b", "c"});
  const auto g = ChildEdgeGraph::build(t, cords({"ab", "bc"}), v);
  const Vertex ea = t.leaf("a"), eb = t.leaf("b"), ec = t.leaf("c");
  CHECK(g.owner() == v);
  CHECK(g.nodes().size() == 3);
  CHECK(g.adjacent(ea, eb));
  CHECK(g.adjacent(eb, ec));
  CHECK_FALSE(g.adjacent(ea, ec));
  CHECK(g.edge_count() == 2);
  CHECK(g.has_edge());
  CHECK(g.is_connected());
  CHECK_FALSE(g.is_clique());
  CHECK(g.subtree_edges().empty());
  CHECK(g.leaf_edges().size() == 3);
  CHECK_THROWS_AS(g.is_rich(), InputError);
}

TEST_CASE("cords only count at their lca") {
  const auto t = tree("((a,b,c),d);");
  const Vertex v = vertex_with_cluster(t, {"a", "b", "c"});
  const auto at_root = ChildEdgeGraph::build(t, cords({"ad"}), t.root());
  CHECK(at_root.edge_count() == 1);
  CHECK(at_root.adjacent(v, t.leaf("d")));
  CHECK(at_root.leaf_edges() == std::vector<Vertex>{t.leaf("d")});
  CHECK(at_root.subtree_edges() == std::vector<Vertex>{v});
  CHECK(at_root.is_rich());
  CHECK_FALSE(ChildEdgeGraph::build(t, cords({"ad"}), v).has_edge());
}

TEST_CASE("empty cord set and errors") {
  const auto t = tree("((a,b),(c,d));");
  const auto g = ChildEdgeGraph::build(t, {}, t.root());
  CHECK_FALSE(g.has_edge());
  CHECK_FALSE(g.is_connected());
  CHECK_FALSE(g.is_clique());
  CHECK_FALSE(g.is_rich());  // E_s = {both cherries}, not joined
  CHECK_THROWS_AS(ChildEdgeGraph::build(t, cords({"az"}), t.root()), InputError);
  CHECK_THROWS_AS(ChildEdgeGraph::build(t, {}, t.leaf("a")), InputError);
}

TEST_CASE("small graph predicates") {
  const auto star = tree("(a,b,c);");
  const auto path = ChildEdgeGraph::build(star, cords({"ab", "bc"}), star.root());
  CHECK(path.has_edge());
  CHECK(path.is_connected());
  CHECK_FALSE(path.is_clique());
  const auto triangle = ChildEdgeGraph::build(star, cords({"ab", "bc", "ac"}), star.root());
  CHECK(triangle.is_clique());
  CHECK(triangle.is_connected());
}

TEST_CASE("richness") {
  // One subtree child and no leaf children.
  const auto t = tree("((a,b),(c,d));");
  CHECK(ChildEdgeGraph::build(t, cords({"ac"}), t.root()).is_rich());
  const auto caterpillar = tree("((a,b),c);");
  CHECK(ChildEdgeGraph::build(caterpillar, cords({"bc"}), caterpillar.root()).is_rich());
  CHECK_FALSE(ChildEdgeGraph::build(caterpillar, cords({"ab"}), caterpillar.root()).is_rich());

  // A 9-leaf tree with leaf child d and subtree children {b,h,e,f}, {a,i,c,g}.
  const auto rich_tree = tree("(d,((b,h),(e,f)),((a,i),(c,g)));");
  const auto l = cords({"ac", "ae", "ag", "bd", "be", "bh", "ce", "cg", "eh", "cd", "ef", "gh", "ai"});
  const auto g = ChildEdgeGraph::build(rich_tree, l, rich_tree.root());
  CHECK(g.leaf_edges().size() == 1);
  CHECK(g.subtree_edges().size() == 2);
  CHECK(g.is_rich());
  CHECK(g.edge_count() == 3);
}

TEST_CASE("dot export mentions every node") {
  const auto t = tree("((a,b),c);");
  const auto g = ChildEdgeGraph::build(t, cords({"ac"}), t.root());
  const auto dot = to_dot(t, g);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("a,b") != std::string::npos);
  CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("adjacency matches path walking on every 4-leaf instance") {
  const auto trees = enumerate_xtrees(labels(4));
  const auto subsets = cordlasso::testing::all_cord_subsets(labels(4));
  for (const auto& t : trees) {
    for (const auto& l : subsets) {
      const auto graphs = build_all_child_edge_graphs(t, l);
      REQUIRE(graphs.size() == t.interior_vertices().size());
      for (const auto& [v, g] : graphs) {
        const auto single = ChildEdgeGraph::build(t, l, v);
        CHECK(single.adjacency() == g.adjacency());
        const auto kids = t.children(v);
        for (std::size_t i = 0; i < kids.size(); ++i) {
          for (std::size_t j = i + 1; j < kids.size(); ++j) {
            CHECK(g.adjacent(kids[i], kids[j]) == cordlasso::testing::path_walk_adjacent(t, l, kids[i], kids[j]));
          }
        }
        if (g.is_clique()) CHECK(g.is_connected());
        if (!g.subtree_edges().empty()) {
          if (g.is_clique()) CHECK(g.is_rich());
          if (g.is_rich()) CHECK(g.is_connected());
        }
        if (g.is_connected()) CHECK(g.has_edge());
      }
    }
  }
}

TEST_CASE("cords with another lca leave a graph unchanged") {
  const auto t = tree("(((a,b),c),(d,e));");
  const Vertex mid = vertex_with_cluster(t, {"a", "b", "c"});
  const auto base = ChildEdgeGraph::build(t, cords({"ac"}), mid);
  for (const auto& extra : {cords({"ab"}), cords({"ad"}), cords({"de"}), cords({"ab", "ce", "de"})}) {
    CordSet l = cords({"ac"});
    l.insert(extra.begin(), extra.end());
    CHECK(ChildEdgeGraph::build(t, l, mid).adjacency() == base.adjacency());
  }
}
