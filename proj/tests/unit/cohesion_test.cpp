#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ego/cohesion.hpp"
#include "ego/cohesion_value.hpp"
#include "ego/errors.hpp"
#include "ego/generators.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace ego {
namespace {

NodeSet set(const Graph& g, std::initializer_list<const char*> labels) {
  std::vector<std::string> l(labels.begin(), labels.end());
  return resolveNodes(g, l);
}

NodeSet randomSubset(std::size_t n, std::mt19937_64& rng) {
  std::vector<NodeId> out;
  std::bernoulli_distribution take(0.4);
  for (NodeId v = 0; v < n; ++v)
    if (take(rng)) out.push_back(v);
  return out;
}

TEST(CohesionValue, ReducedAndExactlyOrdered) {
  const auto third = CohesionValue::fromRatio(2, 6);
  EXPECT_EQ(third.numerator(), 1u);
  EXPECT_EQ(third.denominator(), 3u);
  EXPECT_EQ(third.toString(), "1/3");
  EXPECT_LT(CohesionValue::fromRatio(1, 3), CohesionValue::fromRatio(1, 2));
  EXPECT_EQ(CohesionValue{}, CohesionValue::fromRatio(0, 17));
  EXPECT_THROW(CohesionValue::fromRatio(1, 0), std::invalid_argument);

  // values whose doubles coincide but rationals differ
  const uint128 big = uint128{1} << 100;
  const auto a = CohesionValue::fromRatio(big, big + 1);
  const auto b = CohesionValue::fromRatio(big + 1, big + 2);
  EXPECT_EQ(a.real(), b.real());
  EXPECT_LT(a, b);
  EXPECT_GT(b, a);
}

TEST(CohesionValue, FromCountsDegenerateCases) {
  EXPECT_TRUE(CohesionValue::fromCounts(0, 5, 10).isZero());
  EXPECT_TRUE(CohesionValue::fromCounts(1, 0, 2).isZero());
  EXPECT_EQ(CohesionValue::fromCounts(1, 0, 3), CohesionValue::fromRatio(1, 1));
  EXPECT_EQ(choose3(5), 10u);
  EXPECT_EQ(choose3(2), 0u);
}

TEST(Cohesion, SevenNodeSetValues) {
  Graph g = fixtures::sevenNodeExample();
  const NodeSet s = set(g, {"a", "b", "c", "d"});
  EXPECT_EQ(triIn(g, s), 2u);
  EXPECT_EQ(triOut(g, s), 1u);
  EXPECT_EQ(cohesion(g, s), CohesionValue::fromRatio(1, 3));
}

TEST(Cohesion, SmallSetsAndCliques) {
  Graph k5 = generateTwoCliques({5, 5, 5}).graph;
  EXPECT_EQ(triIn(k5, {0, 1}), 0u);
  EXPECT_TRUE(cohesion(k5, {0, 1}).isZero());
  EXPECT_EQ(triIn(k5, {0, 1, 2, 3, 4}), 10u);
  EXPECT_EQ(triOut(k5, {0, 1, 2, 3, 4}), 0u);
  EXPECT_EQ(cohesion(k5, {0, 1, 2, 3, 4}), CohesionValue::fromRatio(1, 1));
}

TEST(Cohesion, TwoCliqueOutboundMatchesEnumeration) {
  auto pair = generateTwoCliques({5, 5, 2});
  const auto brute = oracle::enumerateTriangles(pair.graph, pair.second);
  EXPECT_EQ(brute.out, 3u);  // (n1 - p) * C(p, 2)
  EXPECT_EQ(triOut(pair.graph, pair.second), 3u);
}

TEST(Cohesion, UnknownNode) {
  Graph g = fixtures::sevenNodeExample();
  EXPECT_THROW(cohesion(g, {0, 99}), UnknownNodeError);
}

TEST(Cohesion, MatchesTripleEnumeration) {
  std::mt19937_64 rng(5);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generateRandom(18, 0.2 + 0.02 * static_cast<double>(seed % 20), seed);
    for (int k = 0; k < 5; ++k) {
      const NodeSet s = randomSubset(g.numNodes(), rng);
      const auto brute = oracle::enumerateTriangles(g, s);
      const auto counts = countTriangles(g, s);
      ASSERT_EQ(counts.in, brute.in);
      ASSERT_EQ(counts.out, brute.out);
      const auto [num, den] = oracle::cohesionFraction(brute, s.size());
      const auto c = cohesion(g, s);
      EXPECT_EQ(c.numerator(), num);
      EXPECT_EQ(c.denominator(), den);
    }
  }
}

TEST(Cohesion, RangeAndUnitCharacterisation) {
  std::mt19937_64 rng(8);
  const auto one = CohesionValue::fromRatio(1, 1);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Graph g = generateRandom(14, 0.5, seed);
    for (int k = 0; k < 10; ++k) {
      const NodeSet s = randomSubset(g.numNodes(), rng);
      const auto c = cohesion(g, s);
      EXPECT_GE(c, CohesionValue{});
      EXPECT_LE(c, one);
      bool clique = s.size() >= 3;
      for (std::size_t i = 0; i < s.size() && clique; ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j) clique = clique && g.hasEdge(s[i], s[j]);
      EXPECT_EQ(c == one, clique && triOut(g, s) == 0);
    }
  }
}

TEST(Cohesion, UnchangedByEditsOutsideClosedNeighborhood) {
  std::mt19937_64 rng(21);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generateRandom(30, 0.12, seed);
    const NodeSet s = {0, 1, 2, 3, 4};
    std::vector<char> near(g.numNodes(), 0);
    for (NodeId v : s) near[v] = 1;
    for (NodeId v : neighborhoodOfSet(g, s)) near[v] = 1;
    Graph::Builder b(g);
    for (NodeId x = 0; x < g.numNodes(); ++x)
      for (NodeId y = x + 1; y < g.numNodes(); ++y)
        if (!near[x] && !near[y] && rng() % 3 == 0) {
          if (b.hasEdge(x, y)) {
            b.removeEdge(x, y);
          } else {
            b.addEdge(x, y);
          }
        }
    EXPECT_EQ(cohesion(g, s), cohesion(b.build(), s));
  }
}

TEST(WeightedMass, Examples) {
  Graph fig = fixtures::sevenNodeExample();
  const NodeSet s = set(fig, {"a", "b", "c", "d"});
  const auto m = weightedTriangleMass(fig, s);
  EXPECT_EQ(m.in, 2.0);
  EXPECT_EQ(m.out, 1.0);

  Graph half = fixtures::fromText("a b 0.5\nb c 0.5\na c 0.5\n");
  const auto hm = weightedTriangleMass(half, set(half, {"a", "b", "c"}));
  EXPECT_DOUBLE_EQ(hm.in, 0.125);
  EXPECT_DOUBLE_EQ(hm.out, 0.0);
  EXPECT_DOUBLE_EQ(weightedCohesion(half, set(half, {"a", "b", "c"})), 0.125 * 0.125 / 0.125);
}

TEST(WeightedMass, MatchesWeightedEnumeration) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> w(0.05, 1.0);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph base = generateRandom(16, 0.45, seed);
    Graph::Builder b(base);
    for (const Edge& e : base.edges()) b.addEdge(e.u, e.v, w(rng));
    Graph g = b.build();
    const NodeSet s = randomSubset(g.numNodes(), rng);
    const auto brute = oracle::enumerateTriangleMass(g, s);
    const auto m = weightedTriangleMass(g, s);
    EXPECT_NEAR(m.in, brute.in, 1e-12);
    EXPECT_NEAR(m.out, brute.out, 1e-12);
  }
}

TEST(WeightedCohesion, CliqueAndScaling) {
  Graph k5 = generateTwoCliques({5, 5, 5}).graph;
  EXPECT_EQ(weightedCohesion(k5, {0, 1, 2, 3, 4}), 1.0);
  Graph::Builder b(k5);
  for (const Edge& e : k5.edges()) b.addEdge(e.u, e.v, 0.5);
  EXPECT_NEAR(weightedCohesion(b.build(), {0, 1, 2, 3, 4}), 0.125, 1e-15);
  EXPECT_EQ(weightedCohesion(k5, {0, 1}), 0.0);
}

}  // namespace
}  // namespace ego
