#include "bcl/stabilizers.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "bcl/error.hpp"

namespace bcl
{

namespace
{

// Transposition and full cycle on a point set; together they generate its
// symmetric group.
void appendSymmetricGens(std::size_t n, std::vector<Point> const &pts, std::vector<Perm> &out)
{
  if (pts.size() < 2)
    return;
  out.push_back(Perm::transposition(n, pts[0], pts[1]));
  if (pts.size() > 2)
    out.push_back(Perm::cycle(n, pts));
}

// Maps block b of v onto block blockImage[b] order-preserving. Blocks must
// have the sizes required by the map.
Perm blockMap(SetPartition const &v, std::vector<std::size_t> const &blockImage)
{
  std::vector<Point> images(v.degree());
  for (std::size_t b = 0; b < v.blockCount(); ++b) {
    auto const &from = v.block(b);
    auto const &to = v.block(blockImage[b]);
    for (std::size_t t = 0; t < from.size(); ++t)
      images[from[t]] = to[t];
  }
  return Perm(std::move(images));
}

void checkCompatible(SetPartition const &v, SetPartition const &w)
{
  if (v.degree() != w.degree())
    throw Error(ErrorCode::DegreeMismatch, "partitions of different degrees");
  if (v.blockCount() != w.blockCount())
    throw Error(ErrorCode::BlockCountMismatch, "partitions with different block counts");
}

} // anonymous namespace

PermGroup setStabilizerGroup(std::size_t n, std::vector<Point> const &subset, bool evenOnly)
{
  SetPartition parts = SetPartition::fromSubset(n, subset);
  std::vector<Perm> gens;
  appendSymmetricGens(n, parts.block(0), gens);
  appendSymmetricGens(n, parts.block(1), gens);
  PermGroup g = PermGroup::build(n, gens);
  return evenOnly ? g.evenPart() : g;
}

PermGroup partitionStabilizerGroup(SetPartition const &v, bool evenOnly)
{
  if (v.blockCount() < 2 || !v.isUniform())
    throw Error(ErrorCode::NonUniformPartition,
                "partition stabilizer needs at least two blocks of equal size");
  std::size_t n = v.degree();
  std::size_t k = v.blockCount();
  std::vector<Perm> gens;
  appendSymmetricGens(n, v.block(0), gens);
  std::vector<std::size_t> swap(k), shift(k);
  for (std::size_t b = 0; b < k; ++b) {
    swap[b] = b;
    shift[b] = (b + 1) % k;
  }
  std::swap(swap[0], swap[1]);
  gens.push_back(blockMap(v, swap));
  if (k > 2)
    gens.push_back(blockMap(v, shift));
  PermGroup g = PermGroup::build(n, gens);
  return evenOnly ? g.evenPart() : g;
}

StabilizerDescriptor StabilizerDescriptor::setStab(std::size_t n, std::vector<Point> subset, bool evenOnly)
{
  StabilizerDescriptor d;
  d.kind = Kind::Set;
  d.object = SetPartition::fromSubset(n, std::move(subset));
  d.evenOnly = evenOnly;
  return d;
}

StabilizerDescriptor StabilizerDescriptor::partitionStab(SetPartition v, bool evenOnly)
{
  if (v.blockCount() < 2 || !v.isUniform())
    throw Error(ErrorCode::NonUniformPartition,
                "partition stabilizer needs at least two blocks of equal size");
  StabilizerDescriptor d;
  d.kind = Kind::Partition;
  d.object = std::move(v);
  d.evenOnly = evenOnly;
  return d;
}

PermGroup StabilizerDescriptor::group() const
{
  if (kind == Kind::Set)
    return setStabilizerGroup(object.degree(), object.block(0), evenOnly);
  return partitionStabilizerGroup(object, evenOnly);
}

NormalizerResult normalizerInSym(StabilizerDescriptor const &descriptor)
{
  SetPartition const &v = descriptor.object;
  std::size_t n = v.degree();
  if (n < 5)
    throw Error(ErrorCode::UnsupportedDescriptor,
                "closed-form normalizers are used only for degree at least 5");

  // In both cases N is the stabilizer of the unordered partition, which for
  // a set stabilizer with unequal part sizes is the set stabilizer itself.
  PermGroup normalizer;
  if (descriptor.kind == StabilizerDescriptor::Kind::Set && !v.isUniform())
    normalizer = setStabilizerGroup(n, v.block(0), false);
  else
    normalizer = partitionStabilizerGroup(v, false);

  PermGroup h = descriptor.group();
  NormalizerResult result;
  result.normalizer = normalizer;
  result.equalsH = normalizer.order() == h.order();
  if (!result.equalsH) {
    if (descriptor.evenOnly) {
      auto big = std::find_if(v.blocks().begin(), v.blocks().end(),
                              [](std::vector<Point> const &b) { return b.size() >= 2; });
      result.iota = big != v.blocks().end() ? Perm::transposition(n, (*big)[0], (*big)[1])
                                            : Perm::transposition(n, 0, 1);
    } else {
      // Full set stabilizer with two equal halves: N = S_m wr S_2.
      std::vector<std::size_t> swap{1, 0};
      result.iota = blockMap(v, swap);
    }
  }
  return result;
}

PermGroup normalizerBruteForce(PermGroup const &h)
{
  std::size_t n = h.degree();
  if (n > 7)
    throw Error(ErrorCode::TooLarge, "brute-force normalizer limited to degree 7");
  PermGroup n0 = h;
  for (auto const &x : PermGroup::symmetric(n).elements()) {
    if (n0.contains(x))
      continue;
    bool normalizes = std::all_of(h.generators().begin(), h.generators().end(),
                                  [&](Perm const &g) { return h.contains(g.conjugatedBy(x)); });
    if (normalizes)
      n0 = n0.adjoin(x);
  }
  return n0;
}

IntersectionMatrix intersectionMatrix(SetPartition const &v, SetPartition const &w)
{
  checkCompatible(v, w);
  IntersectionMatrix p(v.blockCount());
  for (Point x = 0; x < v.degree(); ++x)
    ++p.at(v.blockOf(x), w.blockOf(x));
  return p;
}

std::vector<std::vector<std::vector<Point>>> cellPoints(SetPartition const &v, SetPartition const &w)
{
  checkCompatible(v, w);
  std::size_t k = v.blockCount();
  std::vector<std::vector<std::vector<Point>>> cells(k, std::vector<std::vector<Point>>(k));
  for (Point x = 0; x < v.degree(); ++x)
    cells[v.blockOf(x)][w.blockOf(x)].push_back(x);
  return cells;
}

Perm liftBlockPair(SetPartition const &v, SetPartition const &w,
                   std::vector<std::size_t> const &sigma, std::vector<std::size_t> const &tau)
{
  checkCompatible(v, w);
  auto cells = cellPoints(v, w);
  std::vector<Point> images(v.degree());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    for (std::size_t j = 0; j < cells[i].size(); ++j) {
      auto const &from = cells[i][j];
      auto const &to = cells[sigma[i]][tau[j]];
      if (from.size() != to.size())
        throw Error(ErrorCode::InvalidArgument, "block pair does not preserve cell sizes");
      for (std::size_t t = 0; t < from.size(); ++t)
        images[from[t]] = to[t];
    }
  }
  return Perm(std::move(images));
}

PairStabilizerReport pairStabilizer(SetPartition const &v, SetPartition const &w)
{
  checkCompatible(v, w);
  std::size_t n = v.degree();
  std::size_t k = v.blockCount();
  IntersectionMatrix p = intersectionMatrix(v, w);
  auto cells = cellPoints(v, w);

  // Row permutations sigma admitting some tau with P(sigma i, tau j) = P(i, j).
  // Partial assignments are pruned by comparing the multisets of column
  // prefixes.
  std::vector<std::vector<std::size_t>> sigmas;
  std::vector<std::size_t> sigma(k);
  std::vector<bool> used(k, false);
  std::function<bool(std::size_t)> prefixMatches = [&](std::size_t depth) {
    std::vector<std::vector<std::uint64_t>> lhs(k), rhs(k);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t i = 0; i <= depth; ++i) {
        lhs[j].push_back(p.at(i, j));
        rhs[j].push_back(p.at(sigma[i], j));
      }
    }
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
  };
  std::function<void(std::size_t)> dfs = [&](std::size_t depth) {
    if (depth == k) {
      if (sigmas.size() >= pairStabilizerSigmaCap)
        throw Error(ErrorCode::TooLarge, "too many block permutations preserve the cell sizes");
      sigmas.push_back(sigma);
      return;
    }
    for (std::size_t c = 0; c < k; ++c) {
      if (used[c])
        continue;
      sigma[depth] = c;
      if (!prefixMatches(depth))
        continue;
      used[c] = true;
      dfs(depth + 1);
      used[c] = false;
    }
  };
  dfs(0);

  // Classes of identical columns; tau is determined by sigma up to permuting
  // within these classes.
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> columnClasses;
  for (std::size_t j = 0; j < k; ++j)
    columnClasses[p.column(j)].push_back(j);

  PairStabilizerReport report;
  report.cellSizes = p;
  FactoredNat pairs = FactoredNat::fromInteger(sigmas.size());
  for (auto const &[col, members] : columnClasses)
    pairs = mul(pairs, factorialFactored(members.size()));
  report.blockPairCount = pairs;
  FactoredNat order = pairs;
  for (auto const &row : cells) {
    for (auto const &cell : row)
      order = mul(order, factorialFactored(cell.size()));
  }
  report.orderFactored = order;

  std::vector<Perm> gens;
  bool bigCell = false;
  for (auto const &row : cells) {
    for (auto const &cell : row) {
      bigCell = bigCell || cell.size() >= 2;
      appendSymmetricGens(n, cell, gens);
    }
  }
  std::vector<std::size_t> identity(k);
  for (std::size_t i = 0; i < k; ++i)
    identity[i] = i;
  for (auto const &[col, members] : columnClasses) {
    for (std::size_t t = 0; t + 1 < members.size(); ++t) {
      std::vector<std::size_t> tau = identity;
      std::swap(tau[members[t]], tau[members[t + 1]]);
      gens.push_back(liftBlockPair(v, w, identity, tau));
    }
  }

  PermGroup group = PermGroup::build(n, gens);
  for (auto const &s : sigmas) {
    if (group.order() == order)
      break;
    std::vector<std::size_t> tau(k);
    std::vector<bool> taken(k, false);
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t c = 0; c < k; ++c) {
        if (taken[c])
          continue;
        bool match = true;
        for (std::size_t i = 0; i < k && match; ++i)
          match = p.at(s[i], c) == p.at(i, j);
        if (match) {
          tau[j] = c;
          taken[c] = true;
          break;
        }
      }
    }
    Perm lift = liftBlockPair(v, w, s, tau);
    if (!group.contains(lift)) {
      gens.push_back(lift);
      group = group.adjoin(lift);
    }
  }
  if (group.order() != order)
    throw Error(ErrorCode::InvalidArgument, "pair stabilizer generators do not reach the expected order");

  report.generators = group.generators();
  report.containsOddElement = bigCell || group.containsOddElement();
  return report;
}

} // namespace bcl
