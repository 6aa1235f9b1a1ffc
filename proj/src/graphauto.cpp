#include "bcl/graphauto.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "bcl/error.hpp"

namespace bcl
{

namespace
{

u64 mix(u64 h, u64 x)
{
  h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

struct Part
{
  OrderedPartition cells;
  std::vector<std::size_t> cellOf;

  void reindexFrom(std::size_t first)
  {
    for (std::size_t c = first; c < cells.size(); ++c) {
      for (std::size_t v : cells[c])
        cellOf[v] = c;
    }
  }
  bool discrete() const { return cells.size() == cellOf.size(); }
};

Part makePart(std::size_t n, OrderedPartition const &coloring)
{
  Part p;
  p.cellOf.assign(n, n);
  if (coloring.empty()) {
    if (n > 0) {
      p.cells.emplace_back(n);
      std::iota(p.cells[0].begin(), p.cells[0].end(), std::size_t(0));
    }
  } else {
    for (auto const &cell : coloring) {
      if (cell.empty())
        throw Error(ErrorCode::MalformedPartition, "empty cell in vertex coloring");
      auto sorted = cell;
      std::sort(sorted.begin(), sorted.end());
      p.cells.push_back(std::move(sorted));
    }
  }
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    for (std::size_t v : p.cells[c]) {
      if (v >= n || p.cellOf[v] != n)
        throw Error(ErrorCode::MalformedPartition, "vertex coloring is not a partition");
      p.cellOf[v] = c;
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (p.cellOf[v] == n)
      throw Error(ErrorCode::MalformedPartition, "vertex coloring misses a vertex");
  }
  return p;
}

// Refines p until it is equitable. Returns a hash of the splitting history,
// which is invariant under isomorphisms of (graph, partition).
u64 refineInPlace(Graph const &g, Part &p, std::deque<std::vector<std::size_t>> queue)
{
  std::size_t n = g.vertexCount();
  std::vector<std::size_t> count(n, 0);
  std::vector<std::size_t> touched;
  u64 trace = 0;
  while (!queue.empty()) {
    std::vector<std::size_t> splitter = std::move(queue.front());
    queue.pop_front();
    touched.clear();
    for (std::size_t w : splitter) {
      for (std::size_t u : g.neighbors(w)) {
        if (count[u]++ == 0)
          touched.push_back(u);
      }
    }
    std::vector<std::size_t> affected;
    for (std::size_t u : touched)
      affected.push_back(p.cellOf[u]);
    std::sort(affected.begin(), affected.end());
    affected.erase(std::unique(affected.begin(), affected.end()), affected.end());

    // Highest index first, so splitting never shifts a pending index.
    std::size_t lowestSplit = p.cells.size();
    for (auto it = affected.rbegin(); it != affected.rend(); ++it) {
      std::size_t c = *it;
      auto const &cell = p.cells[c];
      if (cell.size() == 1)
        continue;
      std::map<std::size_t, std::vector<std::size_t>> byCount;
      for (std::size_t v : cell)
        byCount[count[v]].push_back(v);
      if (byCount.size() == 1)
        continue;
      trace = mix(trace, c);
      OrderedPartition fragments;
      for (auto &[k, verts] : byCount) {
        trace = mix(mix(trace, k), verts.size());
        fragments.push_back(std::move(verts));
      }
      for (auto const &f : fragments)
        queue.push_back(f);
      p.cells[c] = std::move(fragments[0]);
      p.cells.insert(p.cells.begin() + static_cast<long>(c) + 1,
                     std::make_move_iterator(fragments.begin() + 1),
                     std::make_move_iterator(fragments.end()));
      lowestSplit = c;
    }
    for (std::size_t u : touched)
      count[u] = 0;
    if (lowestSplit < p.cells.size())
      p.reindexFrom(lowestSplit);
    trace = mix(trace, p.cells.size());
  }
  return trace;
}

std::size_t targetCell(Part const &p)
{
  std::size_t best = p.cells.size();
  for (std::size_t c = 0; c < p.cells.size(); ++c) {
    if (p.cells[c].size() > 1 && (best == p.cells.size() || p.cells[c].size() < p.cells[best].size()))
      best = c;
  }
  return best;
}

struct Node
{
  Part part;
  u64 trace = 0;
};

class Searcher
{
public:
  Searcher(u64 budget) : _budget(budget) {}

  Node root(Graph const &g, OrderedPartition const &coloring)
  {
    count();
    Node node;
    node.part = makePart(g.vertexCount(), coloring);
    std::deque<std::vector<std::size_t>> queue(node.part.cells.begin(), node.part.cells.end());
    node.trace = mix(refineInPlace(g, node.part, std::move(queue)), node.part.cells.size());
    return node;
  }

  Node individualize(Graph const &g, Node const &parent, std::size_t cell, std::size_t v)
  {
    count();
    Node node;
    node.part = parent.part;
    auto &cells = node.part.cells;
    std::vector<std::size_t> rest;
    for (std::size_t u : cells[cell]) {
      if (u != v)
        rest.push_back(u);
    }
    cells[cell] = {v};
    cells.insert(cells.begin() + static_cast<long>(cell) + 1, std::move(rest));
    node.part.reindexFrom(cell);
    std::deque<std::vector<std::size_t>> queue{{v}};
    node.trace = mix(mix(parent.trace, cell), refineInPlace(g, node.part, std::move(queue)));
    return node;
  }

  u64 nodes() const { return _nodes; }

private:
  void count()
  {
    if (++_nodes > _budget)
      throw Error(ErrorCode::SearchBudgetExceeded,
                  "automorphism search exceeded its node budget of " + std::to_string(_budget));
  }

  u64 _budget;
  u64 _nodes = 0;
};

struct FirstPath
{
  std::vector<Node> nodes;           // nodes[d] at depth d; the last is discrete
  std::vector<std::size_t> targets;  // target cell at depth d
  std::vector<std::size_t> chosen;   // vertex individualized at depth d
};

FirstPath firstPath(Searcher &s, Graph const &g, Node root)
{
  FirstPath path;
  path.nodes.push_back(std::move(root));
  while (!path.nodes.back().part.discrete()) {
    Node const &cur = path.nodes.back();
    std::size_t t = targetCell(cur.part);
    std::size_t v = cur.part.cells[t].front();
    path.targets.push_back(t);
    path.chosen.push_back(v);
    Node next = s.individualize(g, cur, t, v);
    path.nodes.push_back(std::move(next));
  }
  return path;
}

std::vector<std::size_t> leafOrder(Part const &p)
{
  std::vector<std::size_t> order;
  order.reserve(p.cells.size());
  for (auto const &c : p.cells)
    order.push_back(c.front());
  return order;
}

bool mapsEdges(Graph const &from, Graph const &to, std::vector<std::size_t> const &map)
{
  if (from.edgeCount() != to.edgeCount())
    return false;
  for (auto const &[u, v] : from.edges()) {
    if (!to.hasEdge(map[u], map[v]))
      return false;
  }
  return true;
}

// Depth-first search below node (at the given depth) for a leaf lambda of
// `target` such that zeta[i] -> lambda[i] is an isomorphism from `source`.
// Nodes whose trace differs from the first path at the same depth cannot
// lead to such a leaf and are skipped.
bool searchEquivalentLeaf(Searcher &s, Graph const &source, Graph const &target, FirstPath const &path,
                          Node const &node, std::size_t depth, std::vector<std::size_t> &mapOut)
{
  if (node.trace != path.nodes[depth].trace || node.part.cells.size() != path.nodes[depth].part.cells.size())
    return false;
  if (node.part.discrete()) {
    auto zeta = leafOrder(path.nodes[depth].part);
    auto lambda = leafOrder(node.part);
    std::vector<std::size_t> map(zeta.size());
    for (std::size_t i = 0; i < zeta.size(); ++i)
      map[zeta[i]] = lambda[i];
    if (!mapsEdges(source, target, map))
      return false;
    mapOut = std::move(map);
    return true;
  }
  std::size_t t = targetCell(node.part);
  if (t != path.targets[depth])
    return false;
  auto const cell = node.part.cells[t];
  for (std::size_t v : cell) {
    Node child = s.individualize(target, node, t, v);
    if (searchEquivalentLeaf(s, source, target, path, child, depth + 1, mapOut))
      return true;
  }
  return false;
}

struct UnionFind
{
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), std::size_t(0)); }
  std::size_t find(std::size_t x)
  {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent[std::max(a, b)] = std::min(a, b);
  }
};

Perm toPerm(std::vector<std::size_t> const &map)
{
  std::vector<Point> images(map.begin(), map.end());
  return Perm(std::move(images));
}

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> contentLines(std::string const &text)
{
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos)
      line.erase(hash);
    line = trim(line);
    if (!line.empty())
      lines.push_back(line);
  }
  return lines;
}

std::vector<std::size_t> parseNumbers(std::string const &line)
{
  std::istringstream in(line);
  std::vector<std::size_t> values;
  std::string tok;
  while (in >> tok) {
    if (tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::MalformedGraph, "expected a number, got '" + tok + "'");
    values.push_back(std::stoull(tok));
  }
  return values;
}

EdgeListGraph parseEdgeListLines(std::vector<std::string> const &lines)
{
  if (lines.empty())
    throw Error(ErrorCode::MalformedGraph, "empty edge list");
  auto header = parseNumbers(lines[0]);
  EdgeListGraph out;
  std::size_t n = 0, m = 0;
  if (header.size() == 3) {
    n = header[0] + header[1];
    m = header[2];
    out.leftSize = header[0];
  } else if (header.size() == 2) {
    n = header[0];
    m = header[1];
  } else {
    throw Error(ErrorCode::MalformedGraph, "edge-list header must be 'n_left n_right m' or 'n m'");
  }
  if (lines.size() != m + 1)
    throw Error(ErrorCode::MalformedGraph, "header announces " + std::to_string(m) + " edges but " +
                                               std::to_string(lines.size() - 1) + " follow");
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto e = parseNumbers(lines[i]);
    if (e.size() != 2)
      throw Error(ErrorCode::MalformedGraph, "edge line must hold two vertices: '" + lines[i] + "'");
    edges.emplace_back(e[0], e[1]);
  }
  out.graph = Graph::fromEdges(n, edges);
  return out;
}

Graph parseAdjacencyLine(std::string const &line)
{
  auto colon = line.find(':');
  if (colon == std::string::npos)
    throw Error(ErrorCode::MalformedGraph, "adjacency line needs 'n:'");
  auto head = parseNumbers(line.substr(0, colon));
  if (head.size() != 1)
    throw Error(ErrorCode::MalformedGraph, "adjacency line needs a single vertex count");
  std::istringstream in(line.substr(colon + 1));
  std::string tok;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  while (in >> tok) {
    auto dash = tok.find('-');
    if (dash == std::string::npos)
      throw Error(ErrorCode::MalformedGraph, "edge token must be 'u-v': '" + tok + "'");
    auto u = parseNumbers(tok.substr(0, dash));
    auto v = parseNumbers(tok.substr(dash + 1));
    if (u.size() != 1 || v.size() != 1)
      throw Error(ErrorCode::MalformedGraph, "edge token must be 'u-v': '" + tok + "'");
    edges.emplace_back(u[0], v[0]);
  }
  return Graph::fromEdges(head[0], edges);
}

} // anonymous namespace

Graph Graph::fromEdges(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> const &edges)
{
  Graph g;
  g._adj.assign(n, {});
  for (auto [u, v] : edges) {
    if (u >= n || v >= n)
      throw Error(ErrorCode::MalformedGraph, "edge endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    if (u == v)
      throw Error(ErrorCode::MalformedGraph, "loop at vertex " + std::to_string(u));
    g._adj[u].push_back(v);
    g._adj[v].push_back(u);
    g._edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (auto &list : g._adj)
    std::sort(list.begin(), list.end());
  std::sort(g._edges.begin(), g._edges.end());
  if (std::adjacent_find(g._edges.begin(), g._edges.end()) != g._edges.end())
    throw Error(ErrorCode::MalformedGraph, "repeated edge");
  return g;
}

bool Graph::hasEdge(std::size_t u, std::size_t v) const
{ return std::binary_search(_adj[u].begin(), _adj[u].end(), v); }

bool Graph::isRegular() const
{
  return std::all_of(_adj.begin(), _adj.end(),
                     [this](auto const &l) { return l.size() == _adj.front().size(); });
}

bool Graph::isConnected() const
{
  if (_adj.empty())
    return true;
  std::vector<bool> seen(_adj.size(), false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u : _adj[v]) {
      if (!seen[u]) {
        seen[u] = true;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  return reached == _adj.size();
}

bool Graph::isAutomorphism(std::vector<std::size_t> const &perm) const
{
  if (perm.size() != _adj.size())
    return false;
  return mapsEdges(*this, *this, perm);
}

EdgeListGraph parseEdgeList(std::string const &text)
{ return parseEdgeListLines(contentLines(text)); }

std::vector<Graph> parseAdjacencyLines(std::string const &text)
{
  std::vector<Graph> out;
  for (auto const &line : contentLines(text))
    out.push_back(parseAdjacencyLine(line));
  return out;
}

std::vector<EdgeListGraph> parseGraphFile(std::string const &text)
{
  auto lines = contentLines(text);
  if (lines.empty())
    throw Error(ErrorCode::MalformedGraph, "no graph in input");
  if (lines[0].find(':') == std::string::npos)
    return {parseEdgeListLines(lines)};
  std::vector<EdgeListGraph> out;
  for (auto const &line : lines)
    out.push_back({parseAdjacencyLine(line), std::nullopt});
  return out;
}

OrderedPartition refine(Graph const &g, OrderedPartition const &initial)
{
  Part p = makePart(g.vertexCount(), initial);
  std::deque<std::vector<std::size_t>> queue(p.cells.begin(), p.cells.end());
  refineInPlace(g, p, std::move(queue));
  return p.cells;
}

AutomorphismResult automorphismGenerators(Graph const &g, OrderedPartition const &coloring, u64 nodeBudget)
{
  std::size_t n = g.vertexCount();
  AutomorphismResult result;
  Searcher s(nodeBudget);
  FirstPath path = firstPath(s, g, s.root(g, coloring));

  UnionFind orbits(n);
  std::vector<std::vector<std::size_t>> maps;
  auto rebuildOrbits = [&]() {
    orbits = UnionFind(n);
    for (auto const &m : maps) {
      for (std::size_t x = 0; x < n; ++x)
        orbits.unite(x, m[x]);
    }
  };

  // Bottom-up over the first path: at depth d every generator found so far
  // fixes chosen[0..d-1], so the orbit of chosen[d] under them is contained
  // in its orbit under the stabilizer of chosen[0..d-1].
  FactoredNat order;
  for (std::size_t d = path.chosen.size(); d > 0; --d) {
    std::size_t depth = d - 1;
    Node const &node = path.nodes[depth];
    std::size_t t = path.targets[depth];
    std::size_t v = path.chosen[depth];
    for (std::size_t w : node.part.cells[t]) {
      if (w == v || orbits.find(w) == orbits.find(v))
        continue;
      Node child = s.individualize(g, node, t, w);
      std::vector<std::size_t> map;
      if (searchEquivalentLeaf(s, g, g, path, child, depth + 1, map)) {
        maps.push_back(std::move(map));
        rebuildOrbits();
      }
    }
    std::size_t orbitSize = 0;
    for (std::size_t w : node.part.cells[t]) {
      if (orbits.find(w) == orbits.find(v))
        ++orbitSize;
    }
    order = mul(order, FactoredNat::fromInteger(orbitSize));
  }

  for (auto const &m : maps)
    result.generators.push_back(toPerm(m));
  result.order = order;
  std::map<std::size_t, std::vector<std::size_t>> byRoot;
  for (std::size_t x = 0; x < n; ++x)
    byRoot[orbits.find(x)].push_back(x);
  for (auto &[root, members] : byRoot)
    result.vertexOrbits.push_back(std::move(members));
  result.nodes = s.nodes();
  return result;
}

std::optional<std::vector<std::size_t>> findIsomorphism(Graph const &g1, OrderedPartition const &c1,
                                                        Graph const &g2, OrderedPartition const &c2,
                                                        u64 nodeBudget)
{
  if (g1.vertexCount() != g2.vertexCount() || g1.edgeCount() != g2.edgeCount() || c1.size() != c2.size())
    return std::nullopt;
  for (std::size_t i = 0; i < c1.size(); ++i) {
    if (c1[i].size() != c2[i].size())
      return std::nullopt;
  }
  Searcher s(nodeBudget);
  FirstPath path = firstPath(s, g1, s.root(g1, c1));
  Node root2 = s.root(g2, c2);
  std::vector<std::size_t> map;
  if (searchEquivalentLeaf(s, g1, g2, path, root2, 0, map))
    return map;
  return std::nullopt;
}

std::size_t edgeOrbitCount(Graph const &g, std::vector<Perm> const &generators)
{
  auto const &edges = g.edges();
  UnionFind uf(edges.size());
  for (auto const &p : generators) {
    for (std::size_t e = 0; e < edges.size(); ++e) {
      std::size_t a = p[edges[e].first], b = p[edges[e].second];
      std::pair<std::size_t, std::size_t> img(std::min(a, b), std::max(a, b));
      auto it = std::lower_bound(edges.begin(), edges.end(), img);
      uf.unite(e, static_cast<std::size_t>(it - edges.begin()));
    }
  }
  std::size_t count = 0;
  for (std::size_t e = 0; e < edges.size(); ++e)
    count += uf.find(e) == e ? 1 : 0;
  return count;
}

SymmetryReport analyzeSymmetry(Graph const &g, u64 nodeBudget)
{
  auto aut = automorphismGenerators(g, {}, nodeBudget);
  SymmetryReport r;
  r.vertices = g.vertexCount();
  r.edges = g.edgeCount();
  r.regular = g.isRegular();
  r.autOrder = aut.order;
  r.vertexOrbitCount = aut.vertexOrbits.size();
  r.edgeOrbitCount = edgeOrbitCount(g, aut.generators);
  r.vertexTransitive = r.vertexOrbitCount <= 1;
  r.edgeTransitive = r.edgeOrbitCount <= 1;
  r.semisymmetric = r.regular && r.edges > 0 && r.edgeTransitive && !r.vertexTransitive;
  r.generators = aut.generators;
  return r;
}

bool isVertexTransitive(Graph const &g)
{ return analyzeSymmetry(g).vertexTransitive; }

bool isEdgeTransitive(Graph const &g)
{ return analyzeSymmetry(g).edgeTransitive; }

bool isSemisymmetric(Graph const &g)
{ return analyzeSymmetry(g).semisymmetric; }

u64 bruteForceAutomorphismCount(Graph const &g)
{
  std::size_t n = g.vertexCount();
  if (n > 9)
    throw Error(ErrorCode::TooLarge, "brute-force automorphism count limited to 9 vertices");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t(0));
  u64 count = 0;
  do {
    if (g.isAutomorphism(perm))
      ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

namespace graphs
{

Graph completeBipartite(std::size_t a, std::size_t b)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j)
      edges.emplace_back(i, a + j);
  }
  return Graph::fromEdges(a + b, edges);
}

Graph cycle(std::size_t n)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(i, (i + 1) % n);
  return Graph::fromEdges(n, edges);
}

Graph perfectMatching(std::size_t k)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < k; ++i)
    edges.emplace_back(2 * i, 2 * i + 1);
  return Graph::fromEdges(2 * k, edges);
}

Graph star(std::size_t leaves)
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= leaves; ++i)
    edges.emplace_back(0, i);
  return Graph::fromEdges(leaves + 1, edges);
}

Graph heawood()
{
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t line = 0; line < 7; ++line) {
    for (std::size_t offset : {0u, 1u, 3u})
      edges.emplace_back((line + offset) % 7, 7 + line);
  }
  return Graph::fromEdges(14, edges);
}

Graph folkman()
{
  // vertices 0..4 and 5..9 are the two copies of the K_5 vertices,
  // 10..19 the K_5 edges
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t e = 10;
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j, ++e) {
      for (std::size_t x : {i, i + 5, j, j + 5})
        edges.emplace_back(x, e);
    }
  }
  return Graph::fromEdges(20, edges);
}

} // namespace graphs

} // namespace bcl
