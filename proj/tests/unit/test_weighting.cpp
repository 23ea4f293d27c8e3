#include <doctest.h>

#include <random>

#include "cordlasso/errors.hpp"
#include "cordlasso/oracle.hpp"
#include "cordlasso/weighting.hpp"
#include "test_support.hpp"

using namespace cordlasso;
using cordlasso::testing::cords;
using cordlasso::testing::labels;
using cordlasso::testing::tree;
using cordlasso::testing::vertex_with_cluster;

namespace {

HeightMap triplet_heights(const XTree& t) {
  return HeightMap::from_interior(t, {{vertex_with_cluster(t, {"a", "b"}), Rational(1)}, {t.root(), Rational(3)}});
}

}  // namespace

TEST_CASE("height map validation") {
  const auto t = tree("((a,b),c);");
  CHECK_NOTHROW(triplet_heights(t));
  const Vertex cherry = vertex_with_cluster(t, {"a", "b"});
  auto expect_kind = [&](std::map<Vertex, Rational> h, WeightingError::Kind kind) {
    try {
      HeightMap::from_interior(t, h);
      FAIL("expected a WeightingError");
    } catch (const WeightingError& e) {
      CHECK(e.kind() == kind);
    }
  };
  expect_kind({{cherry, Rational(2)}, {t.root(), Rational(2)}}, WeightingError::Kind::kNotProper);
  expect_kind({{cherry, Rational(-1)}, {t.root(), Rational(2)}}, WeightingError::Kind::kNegative);
  // Pendant weight zero is legal.
  CHECK_NOTHROW(HeightMap::from_interior(t, {{cherry, Rational(0)}, {t.root(), Rational(1)}}));
}

TEST_CASE("edge weights") {
  const auto star = tree("(a,b,c);");
  const auto sw = to_edge_weights(star, HeightMap::from_interior(star, {{star.root(), Rational(1)}}));
  CHECK(sw.weight.size() == 3);
  for (const auto& [v, w] : sw.weight) CHECK(w == 1);

  const auto t = tree("((a,b),c);");
  const Vertex cherry = vertex_with_cluster(t, {"a", "b"});
  const auto w = to_edge_weights(t, triplet_heights(t));
  CHECK(w.weight.at(t.leaf("a")) == 1);
  CHECK(w.weight.at(t.leaf("b")) == 1);
  CHECK(w.weight.at(cherry) == 2);
  CHECK(w.weight.at(t.leaf("c")) == 3);
  CHECK(from_edge_weights(t, w) == triplet_heights(t));

  auto kind_of = [&](EdgeWeighting bad) {
    try {
      from_edge_weights(t, bad);
    } catch (const WeightingError& e) {
      return e.kind();
    }
    FAIL("expected a WeightingError");
    return WeightingError::Kind::kIncomplete;
  };
  auto bad = w;
  bad.weight[t.leaf("b")] = 2;
  CHECK(kind_of(bad) == WeightingError::Kind::kNotEquidistant);
  bad = w;
  bad.weight[cherry] = 0;
  bad.weight[t.leaf("c")] = 1;
  CHECK(kind_of(bad) == WeightingError::Kind::kNotProper);
  bad = w;
  bad.weight[t.leaf("a")] = -1;
  CHECK(kind_of(bad) == WeightingError::Kind::kNegative);
  bad = w;
  bad.weight.erase(t.leaf("c"));
  CHECK(kind_of(bad) == WeightingError::Kind::kIncomplete);
}

TEST_CASE("leaf distances") {
  const auto star = tree("(a,b,c);");
  const auto hs = HeightMap::from_interior(star, {{star.root(), Rational(1)}});
  CHECK(leaf_distance(star, hs, "a", "b") == 2);
  CHECK(leaf_distance(star, hs, "b", "c") == 2);
  const auto t = tree("((a,b),c);");
  CHECK(leaf_distance(t, triplet_heights(t), "a", "b") == 2);
  CHECK(leaf_distance(t, triplet_heights(t), "a", "c") == 6);
  CHECK_THROWS_AS(leaf_distance(t, triplet_heights(t), "a", "z"), InputError);
}

TEST_CASE("L-isometry") {
  const auto star = tree("(a,b,c);");
  const auto h1 = HeightMap::from_interior(star, {{star.root(), Rational(1)}});
  const auto h2 = HeightMap::from_interior(star, {{star.root(), Rational(2)}});
  CHECK(is_l_isometric(star, h1, star, h1, cords({"ab", "bc"})));
  CHECK(is_l_isometric(star, h1, star, h2, {}));
  CHECK_FALSE(is_l_isometric(star, h1, star, h2, cords({"ab"})));
  CHECK_THROWS_AS(is_l_isometric(star, h1, star, h1, cords({"az"})), InputError);
}

TEST_CASE("random heights") {
  const auto trees4 = enumerate_xtrees(labels(4));
  for (const auto& t : trees4) {
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto hm = random_proper_heights(t, seed);
      CHECK(hm == random_proper_heights(t, seed));
      CHECK(from_edge_weights(t, to_edge_weights(t, hm)) == hm);
    }
  }
  const auto t5 = tree("(((a,b),(c,d)),e);");
  std::set<std::vector<Rational>> seen;
  for (std::uint64_t seed = 0; seed < 10; ++seed) seen.insert(random_proper_heights(t5, seed).heights());
  CHECK(seen.size() >= 2);
}

TEST_CASE("three-point condition and triplets") {
  const auto trees5 = enumerate_xtrees(labels(5));
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    const auto& t = trees5[rng() % trees5.size()];
    const auto hm = random_proper_heights(t, rng());
    const auto& x = t.labels();
    const LeafLabel &p = x[0], &q = x[2], &r = x[4];
    std::vector<Rational> d{leaf_distance(t, hm, p, q), leaf_distance(t, hm, p, r), leaf_distance(t, hm, q, r)};
    std::sort(d.begin(), d.end());
    CHECK(d[1] == d[2]);
  }
  for (const auto& t : enumerate_xtrees(labels(4))) {
    const auto r = triplets(t);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto hm = random_proper_heights(t, seed);
      for (const auto& a : t.labels()) {
        for (const auto& b : t.labels()) {
          for (const auto& c : t.labels()) {
            if (a >= b || a == c || b == c) continue;
            const bool by_distance = leaf_distance(t, hm, a, b) < leaf_distance(t, hm, a, c) &&
                                     leaf_distance(t, hm, a, c) == leaf_distance(t, hm, b, c);
            CHECK(by_distance == r.contains(Triplet::make(a, b, c)));
          }
        }
      }
    }
  }
}

TEST_CASE("distance transfer between L-isometric pairs") {
  // Random tree pairs whose heights agree on d(a,a') and d(a,b).
  std::vector<std::vector<XTree>> by_size;
  for (std::size_t n = 3; n <= 5; ++n) by_size.push_back(enumerate_xtrees(labels(n)));
  std::mt19937_64 rng(2024);
  int instances = 0;
  while (instances < 500) {
    const auto& pool = by_size[rng() % by_size.size()];
    const auto& t = pool[rng() % pool.size()];
    const auto& rival = pool[rng() % pool.size()];
    const auto hm = random_proper_heights(t, rng());
    auto x = t.labels();
    std::shuffle(x.begin(), x.end(), rng);
    const LeafLabel a = x[0], a2 = x[1], b = x[2];
    const bool pin_third = rng() % 2 == 0;
    std::map<Vertex, Rational> pins;
    bool clash = false;
    auto pin = [&](const LeafLabel& p, const LeafLabel& q) {
      const Rational want = hm.height(lca(t, p, q));
      const auto [it, fresh] = pins.emplace(lca(rival, p, q), want);
      if (!fresh && it->second != want) clash = true;
    };
    pin(a, a2);
    pin(a, b);
    if (pin_third) pin(a2, b);
    if (clash) continue;
    const auto hr = cordlasso::testing::heights_with_pins(rival, pins, rng);
    if (!hr) continue;
    ++instances;
    auto d = [](const XTree& tt, const HeightMap& h, const LeafLabel& p, const LeafLabel& q) {
      return leaf_distance(tt, h, p, q);
    };
    REQUIRE(d(t, hm, a, a2) == d(rival, *hr, a, a2));
    REQUIRE(d(t, hm, a, b) == d(rival, *hr, a, b));
    if (d(t, hm, a, a2) < d(t, hm, a, b) && d(t, hm, a, b) == d(t, hm, a2, b)) {
      CHECK(d(rival, *hr, a, a2) < d(rival, *hr, a, b));
      CHECK(d(rival, *hr, a, b) == d(rival, *hr, a2, b));
      CHECK(d(rival, *hr, a2, b) == d(t, hm, a2, b));
    }
    CHECK(triplets(t).contains(Triplet::make(a, a2, b)) == triplets(rival).contains(Triplet::make(a, a2, b)));
    if (d(t, hm, a2, b) == d(rival, *hr, a2, b)) {
      CHECK(is_star(restrict(t, {a, a2, b})) == is_star(restrict(rival, {a, a2, b})));
    }
  }
}
