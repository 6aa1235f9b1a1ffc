#include <doctest.h>

#include <random>

#include "bcl/bicoset.hpp"
#include "bcl/error.hpp"

using namespace bcl;

namespace
{

ErrorCode codeOf(std::function<void()> const &f)
{
  try {
    f();
  } catch (Error const &e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

OrderedPartition sides(BiCosetGraph const &gamma)
{
  OrderedPartition parts(2);
  std::size_t nl = gamma.left().size();
  for (std::size_t i = 0; i < nl + gamma.right().size(); ++i)
    parts[i < nl ? 0 : 1].push_back(i);
  return parts;
}

std::vector<Perm> conjugateAll(std::vector<Perm> const &gens, Perm const &a)
{
  std::vector<Perm> out;
  for (auto const &g : gens)
    out.push_back(g.conjugatedBy(a));
  return out;
}

} // namespace

TEST_CASE("K33 from Sym(3)")
{
  PermGroup s3 = PermGroup::symmetric(3);
  auto l = SubgroupSpec::fromGenerators({Perm::parse("(1,2)", 3)});
  auto gamma = BiCosetGraph::build(s3, l, l, {Perm(3), Perm::parse("(1,3)", 3)});
  CHECK(gamma.left().size() == 3);
  CHECK(gamma.right().size() == 3);
  CHECK(gamma.edgeCount() == 9);
  CHECK(analyzeSymmetry(gamma.toGraph()).autOrder.toDecimal() == "72");
  CHECK(sufficientVertexTransitive(gamma));
}

TEST_CASE("disjoint pairs graph of Sym(5)")
{
  PermGroup s5 = PermGroup::symmetric(5);
  auto pairs = SubgroupSpec::setStabilizer({0, 1});
  auto gamma = BiCosetGraph::build(s5, pairs, pairs, {Perm::parse("(1,3)(2,4)", 5)});
  Graph g = gamma.toGraph();
  CHECK(g.vertexCount() == 20);
  CHECK(g.edgeCount() == 30);
  CHECK(checkRegular(gamma).graph);
  CHECK(checkConnected(gamma).agrees());
  CHECK(checkEdgeTransitive(gamma).group);
  CHECK(analyzeSymmetry(g).autOrder.toDecimal() == "240");
  // left {a,b} is adjacent exactly to the right pairs disjoint from it
  for (std::size_t i = 0; i < gamma.left().size(); ++i)
    for (std::size_t j : gamma.leftAdjacency()[i]) {
      auto const &a = gamma.left().key(i);
      auto const &b = gamma.right().key(j);
      for (Point x : a)
        CHECK(std::find(b.begin(), b.end(), x) == b.end());
    }
}

TEST_CASE("points against pairs is biregular")
{
  PermGroup s5 = PermGroup::symmetric(5);
  auto gamma = BiCosetGraph::build(s5, SubgroupSpec::setStabilizer({0}), SubgroupSpec::setStabilizer({0, 1}),
                                   {Perm(5)});
  CHECK(gamma.left().size() == 5);
  CHECK(gamma.right().size() == 10);
  PropertyCheck reg = checkRegular(gamma);
  CHECK_FALSE(reg.graph);
  CHECK(reg.agrees());
  CHECK(checkEdgeTransitive(gamma).graph);
  Faithfulness f = faithfulnessCheck(gamma);
  CHECK(f.left);
  CHECK(f.right);
}

TEST_CASE("unfaithful action on a part")
{
  // Sym(4) on the three pairings {12|34}: the Klein four-group is the core.
  PermGroup s4 = PermGroup::symmetric(4);
  auto gamma = BiCosetGraph::build(s4, SubgroupSpec::partitionStabilizer(SetPartition::parse("{1,2}{3,4}", 4)),
                                   SubgroupSpec::setStabilizer({0}), {Perm(4)});
  CHECK(gamma.left().size() == 3);
  Faithfulness f = faithfulnessCheck(gamma);
  CHECK_FALSE(f.left);
  CHECK(f.right);
}

TEST_CASE("edge count identity and G acting by automorphisms")
{
  std::mt19937_64 rng(41);
  PermGroup s5 = PermGroup::symmetric(5);
  for (int t = 0; t < 30; ++t) {
    auto left = SubgroupSpec::fromGenerators({s5.randomElement(rng)});
    auto right = t % 2 ? SubgroupSpec::setStabilizer({0, 1}) : SubgroupSpec::setStabilizer({2});
    std::vector<Perm> d{s5.randomElement(rng), s5.randomElement(rng)};
    BiCosetGraph gamma = BiCosetGraph::build(s5, left, right, d);
    Graph g = gamma.toGraph();
    u64 lOrder = *gamma.left().subgroup().order().toU64();
    u64 rOrder = *gamma.right().subgroup().order().toU64();
    u64 dSize = gamma.baseNeighbors().size() * rOrder;
    CHECK(gamma.edgeCount() == gamma.left().size() * dSize / rOrder);
    CHECK(gamma.edgeCount() == gamma.right().size() * dSize / lOrder);
    CHECK(g.edgeCount() == gamma.edgeCount());
    for (auto const &s : s5.generators())
      CHECK(g.isAutomorphism(vertexAction(gamma, s)));
  }
}

TEST_CASE("conjugating L, R and D gives an isomorphic graph")
{
  std::mt19937_64 rng(42);
  PermGroup s5 = PermGroup::symmetric(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<Perm> lg{s5.randomElement(rng)}, rg{s5.randomElement(rng), s5.randomElement(rng)};
    std::vector<Perm> d{s5.randomElement(rng)};
    Perm a = s5.randomElement(rng), b = s5.randomElement(rng);
    std::optional<BiCosetGraph> g1;
    try {
      g1.emplace(BiCosetGraph::build(s5, SubgroupSpec::fromGenerators(lg), SubgroupSpec::fromGenerators(rg), d, 120));
    } catch (Error const &) {
      continue;
    }
    std::vector<Perm> d2;
    for (auto const &x : d)
      d2.push_back(b.inverse() * x * a);
    BiCosetGraph g2 = BiCosetGraph::build(s5, SubgroupSpec::fromGenerators(conjugateAll(lg, a)),
                                          SubgroupSpec::fromGenerators(conjugateAll(rg, b)), d2);
    auto iso = findIsomorphism(g1->toGraph(), sides(*g1), g2.toGraph(), sides(g2));
    CHECK(iso.has_value());
  }
}

TEST_CASE("generator subgroups must lie in G")
{
  PermGroup a4 = PermGroup::alternating(4);
  CHECK(codeOf([&] {
          BiCosetGraph::build(a4, SubgroupSpec::fromGenerators({Perm::parse("(1,2)", 4)}),
                              SubgroupSpec::fromGenerators({}), {Perm(4)});
        }) == ErrorCode::NotSubgroup);
  CHECK(codeOf([&] {
          BiCosetGraph::build(a4, SubgroupSpec::fromGenerators({}), SubgroupSpec::fromGenerators({}),
                              {Perm::parse("(1,2)", 4)});
        }) == ErrorCode::NotSubgroup);
  CHECK(codeOf([&] {
          BiCosetGraph::build(a4, SubgroupSpec::fromGenerators({}), SubgroupSpec::fromGenerators({}), {});
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("index bound")
{
  PermGroup s7 = PermGroup::symmetric(7);
  CHECK(codeOf([&] {
          BiCosetGraph::build(s7, SubgroupSpec::fromGenerators({}), SubgroupSpec::fromGenerators({}), {Perm(7)},
                              100);
        }) == ErrorCode::IndexBoundExceeded);
}

TEST_CASE("input parsing")
{
  std::string text = "# K_{3,3}\n3\nGROUP\n(1,2)\n(1,2,3)\nLEFT\n(1,2)\nRIGHT\n(1,2)\nDREPS\n()\n(1,3)\n";
  BiCosetInput in = parseBiCosetInput(text);
  CHECK(in.degree == 3);
  CHECK(in.group.size() == 2);
  CHECK(in.dReps.size() == 2);
  BiCosetInput stab = parseBiCosetInput("4\nGROUP\n(1,2)\n(1,2,3,4)\nLEFT\nstabilizer {1,2}{3,4}\nRIGHT\nsetstab "
                                        "{1}\nDREPS\n()\n");
  CHECK(stab.left.kind == SubgroupSpec::Kind::PartitionStabilizer);
  CHECK(stab.right.kind == SubgroupSpec::Kind::SetStabilizer);

  CHECK(codeOf([] { parseBiCosetInput(""); }) == ErrorCode::MalformedInput);
  CHECK(codeOf([] { parseBiCosetInput("x\nGROUP\n"); }) == ErrorCode::MalformedInput);
  CHECK(codeOf([] { parseBiCosetInput("3\nGROUP\n(1,2)\nLEFT\nRIGHT\n"); }) == ErrorCode::MalformedInput);
  CHECK(codeOf([] { parseBiCosetInput("3\nGROUP\nGROUP\nLEFT\nRIGHT\nDREPS\n()\n"); }) ==
        ErrorCode::MalformedInput);
  CHECK(codeOf([] { parseBiCosetInput("3\nGROUP\n(1,4)\nLEFT\nRIGHT\nDREPS\n()\n"); }) ==
        ErrorCode::PointOutOfRange);
  CHECK(codeOf([] { parseBiCosetInput("3\nGROUP\n(1,2)\nLEFT\nsetstab {1,1}\nRIGHT\nDREPS\n()\n"); }) ==
        ErrorCode::RepeatedPoint);
}
