#include <doctest.h>

#include "cordlasso/errors.hpp"
#include "cordlasso/newick.hpp"
#include "cordlasso/oracle.hpp"
#include "cordlasso/rational.hpp"
#include "test_support.hpp"

using namespace cordlasso;
using cordlasso::testing::labels;
using cordlasso::testing::vertex_with_cluster;

namespace {

ParseError parse_error(std::string_view text) {
  try {
    parse_newick(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a ParseError for " << text);
  return ParseError("", 0, 0);
}

}  // namespace

TEST_CASE("plain trees") {
  const auto p = parse_newick("(((a,b),c),d);");
  CHECK(p.tree.leaf_count() == 4);
  CHECK(is_binary(p.tree));
  CHECK_FALSE(p.weights);
  CHECK(print_newick(parse_newick("(c,b,a);").tree) == "(a,b,c);");
  CHECK(parse_newick(" ( ( a , b ) ,\n c ) ; \n").tree == parse_newick("((a,b),c);").tree);
}

TEST_CASE("weighted trees") {
  const auto p = parse_newick("((a:1,b:1):2,c:3);");
  REQUIRE(p.weights);
  const auto hm = from_edge_weights(p.tree, *p.weights);
  CHECK(hm.height(vertex_with_cluster(p.tree, {"a", "b"})) == 1);
  CHECK(hm.height(p.tree.root()) == 3);
  const auto q = parse_newick("((a:1/3,b:0.3333):1/2,c:5/6):7;");
  REQUIRE(q.weights);
  CHECK(q.weights->weight.at(q.tree.leaf("a")) == Rational(1, 3));
  CHECK(q.weights->weight.at(q.tree.leaf("b")) == Rational(3333, 10000));
  CHECK(q.weights->weight.size() == 4);
}

TEST_CASE("syntax errors carry positions") {
  CHECK(std::string(parse_error("((a));").what()).find("unary") != std::string::npos);
  const auto e = parse_error("(a,b)\n(c");
  CHECK(e.line() == 2);
  CHECK(e.column() == 1);
  CHECK(parse_error("(a,a);").column() == 4);
  parse_error("(a,b)");
  parse_error("(a,b);x");
  parse_error("(a:1,b);");
  parse_error("(a,b)r;");
  parse_error("(a,b:x);");
  parse_error("(a,,b);");
  parse_error("");
}

TEST_CASE("round trips") {
  for (const auto& t : enumerate_xtrees(labels(5))) {
    const auto text = print_newick(t);
    CHECK(parse_newick(text).tree == t);
    CHECK(print_newick(parse_newick(text).tree) == text);
    const auto hm = random_proper_heights(t, 17);
    const auto weighted = parse_newick(print_newick(t, hm));
    REQUIRE(weighted.weights);
    CHECK(from_edge_weights(weighted.tree, *weighted.weights).heights().size() == t.vertex_count());
    CHECK(print_newick(weighted.tree, from_edge_weights(weighted.tree, *weighted.weights)) == print_newick(t, hm));
  }
}

TEST_CASE("rationals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational("+0.25") == Rational(1, 4));
  CHECK(parse_rational("1.") == 1);
  CHECK(parse_rational(".5") == Rational(1, 2));
  CHECK(to_string(Rational(6, 4)) == "3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  for (const char* bad : {"", "1/0", "a", "1/2/3", "1..2", "-", "1e3", "1/-2"}) {
    CHECK_THROWS_AS(parse_rational(bad), InputError);
  }
}
