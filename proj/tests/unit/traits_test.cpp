#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "ego/errors.hpp"
#include "ego/traits.hpp"
#include "fixtures.hpp"

namespace ego {
namespace {

// Center "u" with neighbors f0..f{n-1}; no neighbor edges are needed because
// egomunities are built by hand.
Graph starOf(std::size_t n) {
  Graph::Builder b;
  for (std::size_t i = 0; i < n; ++i) b.addEdge("u", "f" + std::to_string(i));
  return b.build();
}

Egomunity community(const EgoContext& ctx, std::initializer_list<int> friends) {
  Egomunity e;
  e.center = ctx.center();
  std::vector<NodeId> m{ctx.center()};
  for (int f : friends) m.push_back(ctx.graph().id("f" + std::to_string(f)));
  e.members = makeNodeSet(std::move(m));
  e.seed = e.members.back();
  return e;
}

AttributeTable parse(const std::string& csv, std::set<std::string> numeric = {"age"}) {
  std::istringstream in(csv);
  return loadAttributes(in, numeric);
}

TEST(LoadAttributes, RowsAndErrors) {
  auto t = parse("node,key,value\nf0,age,31\nf0,like,jazz\nf0,like,chess\nf1,age, 29.5\n");
  EXPECT_EQ(t.numeric["age"]["f0"], 31.0);
  EXPECT_EQ(t.numeric["age"]["f1"], 29.5);
  EXPECT_EQ(t.categorical["like"]["f0"].size(), 2u);
  try {
    parse("f0,age,old\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 1u);
  }
  EXPECT_THROW(parse("f0,age\n"), ParseError);
  EXPECT_THROW(parse("f0,age,inf\n"), ParseError);
}

TEST(LikeProfile, UniversalLabel) {
  Graph g = starOf(5);
  EgoContext ctx(g, "u");
  std::string csv;
  for (int i = 0; i < 5; ++i) csv += "f" + std::to_string(i) + ",like,tea\n";
  auto table = parse(csv);
  const auto prof = likeProfile(ctx, {community(ctx, {0, 1, 2}), community(ctx, {3, 4})}, table, "like");
  ASSERT_EQ(prof.size(), 1u);
  EXPECT_EQ(prof[0].globalProp, 1.0);
  EXPECT_EQ(prof[0].averageProp, 1.0);
  EXPECT_EQ(prof[0].maxProp, 1.0);
}

TEST(LikeProfile, MinCountThreshold) {
  Graph g = starOf(6);
  EgoContext ctx(g, "u");
  auto table = parse("f0,like,rare\nf1,like,rare\nf2,like,rare\n");
  EXPECT_TRUE(likeProfile(ctx, {}, table, "like", 4).empty());
  EXPECT_EQ(likeProfile(ctx, {}, table, "like", 3).size(), 1u);
  EXPECT_THROW(likeProfile(ctx, {}, table, "like", 0), ValidationError);
}

TEST(LikeProfile, ProportionsRecountedByHand) {
  Graph g = starOf(10);
  EgoContext ctx(g, "u");
  auto table = parse("f1,like,x\nf2,like,x\n");
  const std::vector<Egomunity> es{community(ctx, {1, 2, 3, 4}), community(ctx, {5, 6, 7})};
  const auto prof = likeProfile(ctx, es, table, "like", 1);
  ASSERT_EQ(prof.size(), 1u);
  // brute recount: 2 of 10 neighbors; 2 of 4 members in the first egomunity
  std::size_t holders = 0;
  for (NodeId v : ctx.neighbors()) holders += (ctx.label(v) == "f1" || ctx.label(v) == "f2");
  EXPECT_DOUBLE_EQ(prof[0].globalProp, static_cast<double>(holders) / 10.0);
  EXPECT_DOUBLE_EQ(prof[0].globalProp, 0.2);
  EXPECT_DOUBLE_EQ(prof[0].maxProp, 0.5);
  EXPECT_DOUBLE_EQ(prof[0].averageProp, 0.5);
}

TEST(LikeProfile, EmptyNeighborhoodIsAnError) {
  Graph::Builder b;
  b.addNode("u");
  Graph g = b.build();
  EgoContext ctx(g, "u");
  EXPECT_THROW(likeProfile(ctx, {}, AttributeTable{}, "like"), ValidationError);
}

TEST(LikeProfile, BoundsAndOrderInvariance) {
  std::mt19937_64 rng(4);
  Graph g = starOf(30);
  EgoContext ctx(g, "u");
  std::string csv;
  for (int i = 0; i < 30; ++i)
    for (const char* l : {"a", "b", "c", "d"})
      if (rng() % 3 == 0) csv += "f" + std::to_string(i) + ",like," + l + "\n";
  auto table = parse(csv);
  std::vector<Egomunity> es;
  for (int k = 0; k < 6; ++k) {
    std::initializer_list<int> dummy{};
    Egomunity e = community(ctx, dummy);
    std::vector<NodeId> m = e.members;
    for (int j = 0; j < 6; ++j) m.push_back(ctx.graph().id("f" + std::to_string(rng() % 30)));
    e.members = makeNodeSet(std::move(m));
    es.push_back(e);
  }
  const auto prof = likeProfile(ctx, es, table, "like", 1);
  for (const auto& p : prof) {
    EXPECT_GE(p.globalProp, 0.0);
    EXPECT_LE(p.globalProp, 1.0);
    EXPECT_LE(p.maxProp, 1.0);
    EXPECT_GE(p.maxProp, p.averageProp);
    EXPECT_GE(p.averageProp, 0.0);
  }
  auto shuffled = es;
  std::shuffle(shuffled.begin(), shuffled.end(), rng);
  const auto again = likeProfile(ctx, shuffled, table, "like", 1);
  ASSERT_EQ(again.size(), prof.size());
  for (std::size_t i = 0; i < prof.size(); ++i) {
    EXPECT_DOUBLE_EQ(again[i].averageProp, prof[i].averageProp);
    EXPECT_EQ(again[i].maxProp, prof[i].maxProp);
  }
}

TEST(GlobalNumericEstimate, Examples) {
  Graph g = starOf(3);
  EgoContext ctx(g, "u");
  EXPECT_EQ(globalNumericEstimate(ctx, parse("f0,age,30\nf1,age,30\nf2,age,30\n"), "age"), 30.0);
  EXPECT_EQ(globalNumericEstimate(ctx, parse("f0,age,20\nf1,age,40\n"), "age"), 30.0);
  EXPECT_EQ(globalNumericEstimate(ctx, parse("f0,age,20\nf2,age,40\nu,age,99\n"), "age"), 30.0);
  EXPECT_FALSE(globalNumericEstimate(ctx, parse(""), "age").has_value());
}

std::string ages(int from, int to, double value) {
  std::string csv;
  for (int i = from; i < to; ++i) csv += "f" + std::to_string(i) + ",age," + std::to_string(value) + "\n";
  return csv;
}

Egomunity range(const EgoContext& ctx, int from, int to) {
  Egomunity e = community(ctx, {});
  std::vector<NodeId> m = e.members;
  for (int i = from; i < to; ++i) m.push_back(ctx.graph().id("f" + std::to_string(i)));
  e.members = makeNodeSet(std::move(m));
  return e;
}

TEST(EgomunityNumericEstimate, Examples) {
  Graph g = starOf(40);
  EgoContext ctx(g, "u");
  auto flat = parse(ages(0, 40, 25));
  EXPECT_EQ(egomunityNumericEstimate(ctx, {range(ctx, 0, 11)}, flat, "age"), 25.0);
  // size must exceed 10 (center excluded)
  EXPECT_FALSE(egomunityNumericEstimate(ctx, {range(ctx, 0, 10)}, flat, "age").has_value());

  // first group: mean 30, std 2; second group: mean 20, std 1
  std::string csv;
  for (int i = 0; i < 12; ++i) csv += "f" + std::to_string(i) + ",age," + (i % 2 ? "32" : "28") + "\n";
  for (int i = 12; i < 24; ++i) csv += "f" + std::to_string(i) + ",age," + (i % 2 ? "21" : "19") + "\n";
  auto mixed = parse(csv);
  const std::vector<Egomunity> es{range(ctx, 0, 12), range(ctx, 12, 24)};
  EXPECT_EQ(egomunityNumericEstimate(ctx, es, mixed, "age"), 20.0);
  const std::vector<Egomunity> reversed{es[1], es[0]};
  EXPECT_EQ(egomunityNumericEstimate(ctx, reversed, mixed, "age"), 20.0);
  // a std limit below 1 rules both out
  EXPECT_FALSE(egomunityNumericEstimate(ctx, es, mixed, "age", 10, 1.0).has_value());
}

}  // namespace
}  // namespace ego
