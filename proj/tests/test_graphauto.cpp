#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bcl/error.hpp"
#include "bcl/graphauto.hpp"

using namespace bcl;

namespace
{

Graph randomGraph(std::size_t n, double p, std::mt19937_64 &rng)
{
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.push_back({u, v});
  return Graph::fromEdges(n, edges);
}

Graph relabel(Graph const &g, std::vector<std::size_t> const &map)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (auto [u, v] : g.edges())
    edges.push_back({map[u], map[v]});
  return Graph::fromEdges(g.vertexCount(), edges);
}

std::vector<std::size_t> imagesOf(Perm const &p)
{
  return {p.images().begin(), p.images().end()};
}

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

} // namespace

TEST_CASE("named graphs")
{
  struct Expect
  {
    Graph g;
    char const *order;
    bool vt, et, semi;
  };
  std::vector<std::pair<char const *, Expect>> cases = {
    {"K33", {graphs::completeBipartite(3, 3), "72", true, true, false}},
    {"K45", {graphs::completeBipartite(4, 5), "2880", false, true, false}},
    {"C5", {graphs::cycle(5), "10", true, true, false}},
    {"matching", {graphs::perfectMatching(4), "384", true, true, false}},
    {"star", {graphs::star(5), "120", false, true, false}},
    {"Heawood", {graphs::heawood(), "336", true, true, false}},
    {"Folkman", {graphs::folkman(), "3840", false, true, true}},
  };
  for (auto const &[name, e] : cases) {
    CAPTURE(name);
    SymmetryReport rep = analyzeSymmetry(e.g);
    CHECK(rep.autOrder.toDecimal() == e.order);
    CHECK(rep.vertexTransitive == e.vt);
    CHECK(rep.edgeTransitive == e.et);
    CHECK(rep.semisymmetric == e.semi);
    CHECK(isSemisymmetric(e.g) == e.semi);
  }
  CHECK(analyzeSymmetry(graphs::folkman()).vertexOrbitCount == 2);
}

TEST_CASE("automorphism groups agree with brute force on small graphs")
{
  std::mt19937_64 rng(31);
  for (int i = 0; i < 150; ++i) {
    std::size_t n = 1 + rng() % 8;
    Graph g = randomGraph(n, std::uniform_real_distribution<double>(0.1, 0.9)(rng), rng);
    AutomorphismResult res = automorphismGenerators(g);
    CHECK(res.order == FactoredNat::fromInteger(bruteForceAutomorphismCount(g)));
    for (auto const &gen : res.generators)
      CHECK(g.isAutomorphism(imagesOf(gen)));
    // each vertex orbit is mapped onto itself by every generator
    for (auto const &orbit : res.vertexOrbits)
      for (auto const &gen : res.generators)
        for (std::size_t v : orbit)
          CHECK(std::find(orbit.begin(), orbit.end(), gen[v]) != orbit.end());
  }
}

TEST_CASE("isomorphisms are found between relabelings")
{
  std::mt19937_64 rng(32);
  for (int i = 0; i < 100; ++i) {
    std::size_t n = 2 + rng() % 14;
    Graph g = randomGraph(n, 0.4, rng);
    std::vector<std::size_t> map(n);
    std::iota(map.begin(), map.end(), 0);
    std::shuffle(map.begin(), map.end(), rng);
    Graph h = relabel(g, map);
    auto iso = findIsomorphism(g, {}, h, {});
    REQUIRE(iso.has_value());
    CHECK(relabel(g, *iso).edges() == h.edges());
  }
}

TEST_CASE("non-isomorphic graphs are told apart")
{
  // Same degree sequence, different structure: C6 against two triangles.
  Graph c6 = graphs::cycle(6);
  Graph triangles = Graph::fromEdges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK_FALSE(findIsomorphism(c6, {}, triangles, {}).has_value());
  // K33 against the prism, both cubic on six vertices
  Graph prism = Graph::fromEdges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}});
  CHECK_FALSE(findIsomorphism(graphs::completeBipartite(3, 3), {}, prism, {}).has_value());
}

TEST_CASE("colorings restrict automorphisms")
{
  Graph k33 = graphs::completeBipartite(3, 3);
  OrderedPartition parts{{0, 1, 2}, {3, 4, 5}};
  CHECK(automorphismGenerators(k33, parts).order.toDecimal() == "36");
  auto swap = findIsomorphism(k33, parts, k33, {parts[1], parts[0]});
  REQUIRE(swap.has_value());
  CHECK(k33.isAutomorphism(*swap));
  CHECK((*swap)[0] >= 3);
  Graph star = graphs::star(3);
  OrderedPartition starParts{{0}, {1, 2, 3}};
  CHECK_FALSE(findIsomorphism(star, starParts, star, {starParts[1], starParts[0]}).has_value());
}

TEST_CASE("refinement yields an equitable partition")
{
  Graph star = graphs::star(4);
  auto p = refine(star, {{0, 1, 2, 3, 4}});
  REQUIRE(p.size() == 2);
  CHECK(p[0].size() + p[1].size() == 5);
  Graph c6 = graphs::cycle(6);
  CHECK(refine(c6, {{0, 1, 2, 3, 4, 5}}).size() == 1);
}

TEST_CASE("edge orbits")
{
  Graph k33 = graphs::completeBipartite(3, 3);
  CHECK(edgeOrbitCount(k33, automorphismGenerators(k33).generators) == 1);
  CHECK(edgeOrbitCount(k33, {}) == 9);
}

TEST_CASE("graph construction errors")
{
  CHECK(codeOf([] { Graph::fromEdges(3, {{0, 0}}); }) == ErrorCode::MalformedGraph);
  CHECK(codeOf([] { Graph::fromEdges(3, {{0, 1}, {1, 0}}); }) == ErrorCode::MalformedGraph);
  CHECK(codeOf([] { Graph::fromEdges(3, {{0, 3}}); }) == ErrorCode::MalformedGraph);
  CHECK(codeOf([] { bruteForceAutomorphismCount(graphs::cycle(10)); }) == ErrorCode::TooLarge);
}

TEST_CASE("graph file formats")
{
  auto one = parseGraphFile("# comment\n3 3 9\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
  REQUIRE(one.size() == 1);
  CHECK(one[0].leftSize == std::optional<std::size_t>(3));
  CHECK(one[0].graph.edgeCount() == 9);
  auto plain = parseEdgeList("4 2\n0 1\n2 3\n");
  CHECK_FALSE(plain.leftSize.has_value());
  auto many = parseGraphFile("3: 0-1 1-2\n4: 0-1 1-2 2-3 0-3\n2:\n");
  REQUIRE(many.size() == 3);
  CHECK(many[1].graph.isRegular());
  CHECK(many[2].graph.edgeCount() == 0);
  CHECK(codeOf([] { parseEdgeList("3 2\n0 1\n"); }) == ErrorCode::MalformedGraph);
  CHECK(codeOf([] { parseEdgeList("3 1\n0 x\n"); }) == ErrorCode::MalformedGraph);
  CHECK(codeOf([] { parseAdjacencyLines("3: 0-5\n"); }) == ErrorCode::MalformedGraph);
}

TEST_CASE("search budget is enforced")
{
  CHECK(codeOf([] { automorphismGenerators(graphs::completeBipartite(6, 6), {}, 3); }) ==
        ErrorCode::SearchBudgetExceeded);
}
