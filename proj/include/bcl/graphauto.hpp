#ifndef GUARD_BCL_GRAPHAUTO_H
#define GUARD_BCL_GRAPHAUTO_H

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bcl/factnum.hpp"
#include "bcl/perm.hpp"

namespace bcl
{

// A finite simple undirected graph on vertices 0..n-1.
class Graph
{
public:
  Graph() = default;

  // Loops and repeated edges raise MalformedGraph.
  static Graph fromEdges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const &edges);

  std::size_t vertexCount() const { return _adj.size(); }
  std::size_t edgeCount() const { return _edges.size(); }
  std::vector<std::size_t> const &neighbors(std::size_t v) const { return _adj[v]; }
  // Each edge once, as (u, v) with u < v, in increasing order.
  std::vector<std::pair<std::size_t, std::size_t>> const &edges() const { return _edges; }
  bool hasEdge(std::size_t u, std::size_t v) const;
  std::size_t degree(std::size_t v) const { return _adj[v].size(); }
  bool isRegular() const;
  bool isConnected() const;

  // True iff perm maps edges onto edges.
  bool isAutomorphism(std::vector<std::size_t> const &perm) const;

private:
  std::vector<std::vector<std::size_t>> _adj;
  std::vector<std::pair<std::size_t, std::size_t>> _edges;
};

// Edge-list text: a header "n_left n_right m" (or "n m"), then m lines
// "u v" with 0-based vertices. The optional bipartition is returned as
// the vertex count of the left part.
struct EdgeListGraph
{
  Graph graph;
  std::optional<std::size_t> leftSize;
};
EdgeListGraph parseEdgeList(std::string const &text);

// One graph per line: "n: u-v u-v ..." with 0-based vertices.
std::vector<Graph> parseAdjacencyLines(std::string const &text);

// Dispatches on the first nonblank line: a ':' selects the one-graph-per-line
// format, anything else the edge-list format.
std::vector<EdgeListGraph> parseGraphFile(std::string const &text);

using OrderedPartition = std::vector<std::vector<std::size_t>>;

// Coarsest equitable partition refining the input. Cells split in place,
// fragments ordered by increasing neighbor count; each cell stays sorted.
OrderedPartition refine(Graph const &g, OrderedPartition const &initial);

inline constexpr u64 defaultNodeBudget = 10000000;

struct AutomorphismResult
{
  std::vector<Perm> generators;
  FactoredNat order;
  std::vector<std::vector<std::size_t>> vertexOrbits;
  u64 nodes = 0;
};

// Generators of the automorphism group preserving the cells of the given
// ordered partition (all vertices in one cell when empty).
AutomorphismResult automorphismGenerators(Graph const &g, OrderedPartition const &coloring = {},
                                          u64 nodeBudget = defaultNodeBudget);

// An isomorphism from (g1, c1) to (g2, c2) mapping cell i of c1 onto cell i
// of c2, as a vertex map, or nullopt when none exists.
std::optional<std::vector<std::size_t>> findIsomorphism(Graph const &g1, OrderedPartition const &c1,
                                                        Graph const &g2, OrderedPartition const &c2,
                                                        u64 nodeBudget = defaultNodeBudget);

struct SymmetryReport
{
  std::size_t vertices = 0;
  std::size_t edges = 0;
  bool regular = false;
  FactoredNat autOrder;
  std::size_t vertexOrbitCount = 0;
  std::size_t edgeOrbitCount = 0;
  bool vertexTransitive = false;
  bool edgeTransitive = false;
  bool semisymmetric = false;
  std::vector<Perm> generators;
};

SymmetryReport analyzeSymmetry(Graph const &g, u64 nodeBudget = defaultNodeBudget);

bool isVertexTransitive(Graph const &g);
bool isEdgeTransitive(Graph const &g);
// Regular, edge-transitive, with edges, and not vertex-transitive.
bool isSemisymmetric(Graph const &g);

// Number of orbits of the generated group on undirected edges.
std::size_t edgeOrbitCount(Graph const &g, std::vector<Perm> const &generators);

// |Aut(g)| by testing all n! vertex maps; n <= 9.
u64 bruteForceAutomorphismCount(Graph const &g);

namespace graphs
{
Graph completeBipartite(std::size_t a, std::size_t b);
Graph cycle(std::size_t n);
Graph perfectMatching(std::size_t k);
Graph star(std::size_t leaves);
// Incidence graph of the Fano plane with lines {i, i+1, i+3} mod 7.
Graph heawood();
// Twenty vertices: two copies of each vertex of K_5 and one vertex per edge
// of K_5, each edge vertex adjacent to both copies of both its ends.
Graph folkman();
} // namespace graphs

} // namespace bcl

#endif // GUARD_BCL_GRAPHAUTO_H
