#include "bcl/bicoset.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

#include "bcl/error.hpp"

namespace bcl
{

namespace
{

std::string pointSetString(std::vector<Point> const &points)
{
  std::string out = "{";
  for (std::size_t i = 0; i < points.size(); ++i)
    out += (i ? "," : "") + std::to_string(points[i] + 1);
  return out + "}";
}

std::vector<Point> sortedImage(std::vector<Point> const &subset, Perm const &x)
{
  std::vector<Point> out;
  out.reserve(subset.size());
  for (Point p : subset)
    out.push_back(x[p]);
  std::sort(out.begin(), out.end());
  return out;
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

// Orbit of coset index `start` under right multiplication by the generators
// of a subgroup, on the given coset space.
std::vector<std::size_t> cosetOrbit(CosetSpace const &space, std::size_t start, std::vector<Perm> const &gens)
{
  std::vector<bool> seen(space.size(), false);
  std::vector<std::size_t> orbit{start};
  seen[start] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    for (auto const &s : gens) {
      std::size_t j = space.indexOf(space.representative(orbit[i]) * s);
      if (!seen[j]) {
        seen[j] = true;
        orbit.push_back(j);
      }
    }
  }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

std::string trim(std::string const &s)
{
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos)
    return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<Point> parseSubset(std::string const &text, std::size_t degree)
{
  std::string body = trim(text);
  if (body.size() < 2 || body.front() != '{' || body.back() != '}')
    throw Error(ErrorCode::MalformedInput, "subset must be written {a,b,...}: '" + text + "'");
  body = body.substr(1, body.size() - 2);
  std::vector<Point> out;
  std::istringstream in(body);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    tok = trim(tok);
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::MalformedInput, "bad point '" + tok + "' in subset");
    auto v = std::stoull(tok);
    if (v < 1 || v > degree)
      throw Error(ErrorCode::PointOutOfRange, "point " + tok + " outside 1.." + std::to_string(degree));
    out.push_back(static_cast<Point>(v - 1));
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw Error(ErrorCode::RepeatedPoint, "repeated point in subset");
  return out;
}

SubgroupSpec parseSubgroupSection(std::vector<std::string> const &lines, std::size_t degree,
                                  std::string const &name)
{
  if (lines.size() == 1) {
    auto const &line = lines[0];
    if (line.rfind("setstab", 0) == 0)
      return SubgroupSpec::setStabilizer(parseSubset(line.substr(7), degree));
    if (line.rfind("stabilizer", 0) == 0)
      return SubgroupSpec::partitionStabilizer(SetPartition::parse(trim(line.substr(10)), degree));
  }
  std::vector<Perm> gens;
  for (auto const &line : lines) {
    if (line.rfind("setstab", 0) == 0 || line.rfind("stabilizer", 0) == 0)
      throw Error(ErrorCode::MalformedInput, "section " + name + " mixes a stabilizer line with other lines");
    gens.push_back(Perm::parse(line, degree));
  }
  return SubgroupSpec::fromGenerators(std::move(gens));
}

} // anonymous namespace

SubgroupSpec SubgroupSpec::fromGenerators(std::vector<Perm> gens)
{
  SubgroupSpec s;
  s.kind = Kind::Generators;
  s.generators = std::move(gens);
  return s;
}

SubgroupSpec SubgroupSpec::setStabilizer(std::vector<Point> subset)
{
  SubgroupSpec s;
  s.kind = Kind::SetStabilizer;
  std::sort(subset.begin(), subset.end());
  s.subset = std::move(subset);
  return s;
}

SubgroupSpec SubgroupSpec::partitionStabilizer(SetPartition v)
{
  SubgroupSpec s;
  s.kind = Kind::PartitionStabilizer;
  s.partition = std::move(v);
  return s;
}

std::string SubgroupSpec::describe() const
{
  switch (kind) {
  case Kind::SetStabilizer:
    return "setstab " + pointSetString(subset);
  case Kind::PartitionStabilizer:
    return "stabilizer " + partition.toString();
  case Kind::Generators:
    break;
  }
  std::string out = "<";
  for (std::size_t i = 0; i < generators.size(); ++i)
    out += (i ? ", " : "") + generators[i].toCycleString();
  return out + ">";
}

std::vector<Point> CosetSpace::keyOf(Perm const &x) const
{
  switch (_kind) {
  case SubgroupSpec::Kind::SetStabilizer:
    return sortedImage(_subset, x);
  case SubgroupSpec::Kind::PartitionStabilizer:
    return _partition.image(x).canonicalKey();
  case SubgroupSpec::Kind::Generators:
    break;
  }
  return _subgroup.minimalCosetElement(x).images();
}

CosetSpace CosetSpace::build(PermGroup const &g, SubgroupSpec const &spec, u64 indexBound)
{
  std::size_t n = g.degree();
  CosetSpace space;
  space._kind = spec.kind;
  bool objectKeyed = spec.kind != SubgroupSpec::Kind::Generators;
  if (spec.kind == SubgroupSpec::Kind::Generators) {
    for (auto const &p : spec.generators) {
      if (p.degree() != n)
        throw Error(ErrorCode::DegreeMismatch, "subgroup generator has the wrong degree");
      if (!g.contains(p))
        throw Error(ErrorCode::NotSubgroup, "generator " + p.toCycleString() + " is not in the group");
    }
    space._subgroup = PermGroup::build(n, spec.generators).withNaturalBase();
  } else if (spec.kind == SubgroupSpec::Kind::SetStabilizer) {
    for (Point p : spec.subset) {
      if (p >= n)
        throw Error(ErrorCode::PointOutOfRange, "subset point outside the group degree");
    }
    space._subset = spec.subset;
    space._subgroup = PermGroup::trivial(n);
  } else {
    if (spec.partition.degree() != n)
      throw Error(ErrorCode::DegreeMismatch, "partition degree differs from the group degree");
    space._partition = spec.partition;
    space._subgroup = PermGroup::trivial(n);
  }

  // Breadth-first search over cosets. For stabilizer subgroups the same pass
  // collects Schreier generators t s u^-1 of the stabilizer in G, where t
  // and u are the stored representatives of O^t and O^(ts).
  std::vector<Perm> reps{Perm(n)};
  std::map<std::vector<Point>, std::size_t> found{{space.keyOf(Perm(n)), 0}};
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (auto const &s : g.generators()) {
      Perm ts = reps[i] * s;
      auto key = space.keyOf(ts);
      auto it = found.find(key);
      if (it == found.end()) {
        if (reps.size() >= indexBound)
          throw Error(ErrorCode::IndexBoundExceeded,
                      "coset count exceeds the bound " + std::to_string(indexBound));
        found.emplace(std::move(key), reps.size());
        reps.push_back(std::move(ts));
      } else if (objectKeyed) {
        Perm schreier = ts * reps[it->second].inverse();
        if (!space._subgroup.contains(schreier))
          space._subgroup = space._subgroup.adjoin(schreier);
      }
    }
  }

  std::vector<std::size_t> order(reps.size());
  std::vector<std::vector<Point>> keys(reps.size());
  for (auto &[key, idx] : found)
    keys[idx] = key;
  std::iota(order.begin(), order.end(), std::size_t(0));
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  for (std::size_t i = 0; i < order.size(); ++i) {
    space._reps.push_back(reps[order[i]]);
    space._keys.push_back(keys[order[i]]);
    space._index.emplace(space._keys.back(), i);
  }
  return space;
}

std::size_t CosetSpace::indexOf(Perm const &x) const
{
  auto it = _index.find(keyOf(x));
  if (it == _index.end())
    throw Error(ErrorCode::InvalidArgument, "element " + x.toCycleString() + " lies outside the group");
  return it->second;
}

std::vector<std::size_t> CosetSpace::action(Perm const &s) const
{
  std::vector<std::size_t> out(_reps.size());
  for (std::size_t i = 0; i < _reps.size(); ++i)
    out[i] = indexOf(_reps[i] * s);
  return out;
}

BiCosetGraph BiCosetGraph::build(PermGroup const &g, SubgroupSpec const &left, SubgroupSpec const &right,
                                 std::vector<Perm> const &dReps, u64 indexBound)
{
  if (dReps.empty())
    throw Error(ErrorCode::InvalidArgument, "D needs at least one double coset representative");
  for (auto const &d : dReps) {
    if (d.degree() != g.degree())
      throw Error(ErrorCode::DegreeMismatch, "double coset representative has the wrong degree");
    if (!g.contains(d))
      throw Error(ErrorCode::NotSubgroup, "representative " + d.toCycleString() + " is not in the group");
  }
  BiCosetGraph gamma;
  gamma._g = g;
  gamma._left = CosetSpace::build(g, left, indexBound);
  gamma._right = CosetSpace::build(g, right, indexBound);
  gamma._dReps = dReps;

  // R d l over l in L: the L-orbit of each R d on right cosets.
  std::vector<std::size_t> base;
  for (auto const &d : dReps) {
    auto orbit = cosetOrbit(gamma._right, gamma._right.indexOf(d), gamma._left.subgroup().generators());
    base.insert(base.end(), orbit.begin(), orbit.end());
  }
  std::sort(base.begin(), base.end());
  base.erase(std::unique(base.begin(), base.end()), base.end());
  gamma._baseNeighbors = base;

  std::size_t nl = gamma._left.size(), nr = gamma._right.size();
  gamma._leftAdj.assign(nl, {});
  gamma._rightAdj.assign(nr, {});
  for (std::size_t i = 0; i < nl; ++i) {
    auto const &x = gamma._left.representative(i);
    for (std::size_t j : base)
      gamma._leftAdj[i].push_back(gamma._right.indexOf(gamma._right.representative(j) * x));
    std::sort(gamma._leftAdj[i].begin(), gamma._leftAdj[i].end());
    for (std::size_t j : gamma._leftAdj[i])
      gamma._rightAdj[j].push_back(i);
  }
  return gamma;
}

std::size_t BiCosetGraph::edgeCount() const
{ return _left.size() * _baseNeighbors.size(); }

Graph BiCosetGraph::toGraph() const
{
  std::size_t nl = _left.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  edges.reserve(edgeCount());
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j : _leftAdj[i])
      edges.emplace_back(i, nl + j);
  }
  return Graph::fromEdges(nl + _right.size(), edges);
}

std::string BiCosetGraph::toEdgeList() const
{
  std::ostringstream out;
  std::size_t nl = _left.size();
  out << nl << ' ' << _right.size() << ' ' << edgeCount() << '\n';
  for (std::size_t i = 0; i < nl; ++i) {
    for (std::size_t j : _leftAdj[i])
      out << i << ' ' << nl + j << '\n';
  }
  return out.str();
}

PropertyCheck checkRegular(BiCosetGraph const &gamma)
{
  PropertyCheck c;
  c.graph = gamma.toGraph().isRegular();
  c.group = gamma.left().subgroup().order() == gamma.right().subgroup().order();
  return c;
}

PermGroup dInverseDGroup(BiCosetGraph const &gamma)
{
  auto const &g = gamma.group();
  std::vector<Perm> gens = gamma.left().subgroup().generators();
  std::vector<Perm> rs = gamma.right().subgroup().generators();
  rs.push_back(Perm(g.degree()));
  for (auto const &di : gamma.dReps()) {
    Perm diInv = di.inverse();
    for (auto const &dj : gamma.dReps()) {
      for (auto const &r : rs)
        gens.push_back(diInv * r * dj);
    }
  }
  return PermGroup::build(g.degree(), gens);
}

PropertyCheck checkConnected(BiCosetGraph const &gamma)
{
  PropertyCheck c;
  c.graph = gamma.toGraph().isConnected();
  c.group = dInverseDGroup(gamma).order() == gamma.group().order();
  return c;
}

std::vector<std::size_t> vertexAction(BiCosetGraph const &gamma, Perm const &s)
{
  auto out = gamma.left().action(s);
  std::size_t nl = out.size();
  for (std::size_t j : gamma.right().action(s))
    out.push_back(nl + j);
  return out;
}

PropertyCheck checkEdgeTransitive(BiCosetGraph const &gamma)
{
  PropertyCheck c;
  Graph graph = gamma.toGraph();
  std::vector<Perm> gens;
  for (auto const &s : gamma.group().generators()) {
    auto images = vertexAction(gamma, s);
    gens.emplace_back(std::vector<Point>(images.begin(), images.end()));
  }
  c.graph = edgeOrbitCount(graph, gens) == 1;

  auto const &right = gamma.right();
  auto first = cosetOrbit(right, right.indexOf(gamma.dReps().front()), gamma.left().subgroup().generators());
  c.group = std::all_of(gamma.dReps().begin(), gamma.dReps().end(), [&](Perm const &d) {
    return std::binary_search(first.begin(), first.end(), right.indexOf(d));
  });
  return c;
}

bool sufficientVertexTransitive(BiCosetGraph const &gamma)
{
  if (!gamma.left().subgroup().sameGroupAs(gamma.right().subgroup()))
    return false;
  auto const &base = gamma.baseNeighbors();
  return std::all_of(gamma.dReps().begin(), gamma.dReps().end(), [&](Perm const &d) {
    return std::binary_search(base.begin(), base.end(), gamma.right().indexOf(d.inverse()));
  });
}

Faithfulness faithfulnessCheck(BiCosetGraph const &gamma)
{
  auto actionOrder = [&](CosetSpace const &space) {
    if (space.size() > faithfulnessIndexBound)
      throw Error(ErrorCode::IndexBoundExceeded, "faithfulness check limited to " +
                                                     std::to_string(faithfulnessIndexBound) + " cosets");
    std::vector<Perm> gens;
    for (auto const &s : gamma.group().generators()) {
      auto images = space.action(s);
      gens.emplace_back(std::vector<Point>(images.begin(), images.end()));
    }
    return PermGroup::build(space.size(), gens).order();
  };
  Faithfulness f;
  f.left = actionOrder(gamma.left()) == gamma.group().order();
  f.right = actionOrder(gamma.right()) == gamma.group().order();
  return f;
}

BiCosetInput parseBiCosetInput(std::string const &text)
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
  if (lines.empty())
    throw Error(ErrorCode::MalformedInput, "empty bi-coset input");
  if (lines[0].find_first_not_of("0123456789") != std::string::npos)
    throw Error(ErrorCode::MalformedInput, "first line must be the degree, got '" + lines[0] + "'");
  BiCosetInput input;
  input.degree = std::stoull(lines[0]);
  if (input.degree == 0)
    throw Error(ErrorCode::MalformedInput, "degree must be positive");

  std::map<std::string, std::vector<std::string>> sections;
  std::string current;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    auto const &l = lines[i];
    if (l == "GROUP" || l == "LEFT" || l == "RIGHT" || l == "DREPS") {
      if (sections.count(l))
        throw Error(ErrorCode::MalformedInput, "section " + l + " appears twice");
      current = l;
      sections[l];
      continue;
    }
    if (current.empty())
      throw Error(ErrorCode::MalformedInput, "line '" + l + "' precedes every section header");
    sections[current].push_back(l);
  }
  for (char const *name : {"GROUP", "LEFT", "RIGHT", "DREPS"}) {
    if (!sections.count(name))
      throw Error(ErrorCode::MalformedInput, std::string("missing section ") + name);
  }
  for (auto const &l : sections["GROUP"])
    input.group.push_back(Perm::parse(l, input.degree));
  for (auto const &l : sections["DREPS"])
    input.dReps.push_back(Perm::parse(l, input.degree));
  input.left = parseSubgroupSection(sections["LEFT"], input.degree, "LEFT");
  input.right = parseSubgroupSection(sections["RIGHT"], input.degree, "RIGHT");
  return input;
}

} // namespace bcl
