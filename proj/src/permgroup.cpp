#include "bcl/permgroup.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "bcl/error.hpp"

namespace bcl
{

PermGroup PermGroup::build(std::size_t degree, std::vector<Perm> const &gens,
                           std::vector<Point> const &baseHint)
{
  PermGroup group;
  group._degree = degree;
  for (auto const &g : gens) {
    if (g.degree() != degree)
      throw Error(ErrorCode::DegreeMismatch, "generator degree differs from group degree");
    if (!g.isIdentity() && std::find(group._gens.begin(), group._gens.end(), g) == group._gens.end())
      group._gens.push_back(g);
  }
  for (Point b : baseHint) {
    if (b >= degree)
      throw Error(ErrorCode::PointOutOfRange, "base point outside the domain");
  }
  group.schreierSims(baseHint);
  group.computeOrder();

  group._naturalBase = group._levels.size() == degree;
  for (std::size_t i = 0; group._naturalBase && i < degree; ++i)
    group._naturalBase = group._levels[i].basePoint == i;
  return group;
}

PermGroup PermGroup::trivial(std::size_t degree)
{ return build(degree, {}); }

PermGroup PermGroup::symmetric(std::size_t n)
{
  if (n < 2)
    return trivial(n);
  std::vector<Point> all(n);
  std::iota(all.begin(), all.end(), Point(0));
  return build(n, {Perm::transposition(n, 0, 1), Perm::cycle(n, all)});
}

PermGroup PermGroup::alternating(std::size_t n)
{
  if (n < 3)
    return trivial(n);
  std::vector<Perm> gens{Perm::cycle(n, {0, 1, 2})};
  if (n > 3) {
    std::vector<Point> pts;
    for (Point x = (n % 2 == 1) ? 0 : 1; x < n; ++x)
      pts.push_back(x);
    gens.push_back(Perm::cycle(n, pts));
  }
  return build(n, gens);
}

std::vector<Point> PermGroup::base() const
{
  std::vector<Point> b;
  b.reserve(_levels.size());
  for (auto const &level : _levels)
    b.push_back(level.basePoint);
  return b;
}

void PermGroup::computeOrbit(Level &level) const
{
  level.orbit.assign(1, level.basePoint);
  level.orbitIndex.assign(_degree, -1);
  level.orbitIndex[level.basePoint] = 0;
  level.transversal.assign(1, Perm(_degree));
  level.transversalInv.assign(1, Perm(_degree));
  for (std::size_t i = 0; i < level.orbit.size(); ++i) {
    Point beta = level.orbit[i];
    for (auto const &s : level.strongGens) {
      Point image = s[beta];
      if (level.orbitIndex[image] >= 0)
        continue;
      level.orbitIndex[image] = static_cast<int>(level.orbit.size());
      level.orbit.push_back(image);
      Perm u = level.transversal[i] * s;
      level.transversalInv.push_back(u.inverse());
      level.transversal.push_back(std::move(u));
    }
  }
}

std::size_t PermGroup::sift(Perm &p, std::size_t from) const
{
  for (std::size_t i = from; i < _levels.size(); ++i) {
    auto const &level = _levels[i];
    int idx = level.orbitIndex[p[level.basePoint]];
    if (idx < 0)
      return i;
    p = p * level.transversalInv[static_cast<std::size_t>(idx)];
  }
  return _levels.size();
}

void PermGroup::schreierSims(std::vector<Point> const &baseHint)
{
  _levels.clear();
  auto fixesBase = [this](Perm const &p, std::size_t upTo) {
    for (std::size_t i = 0; i < upTo; ++i) {
      if (p[_levels[i].basePoint] != _levels[i].basePoint)
        return false;
    }
    return true;
  };
  auto appendLevel = [this](Point b) {
    Level level;
    level.basePoint = b;
    _levels.push_back(std::move(level));
  };

  for (Point b : baseHint) {
    if (std::none_of(_levels.begin(), _levels.end(),
                     [b](Level const &l) { return l.basePoint == b; }))
      appendLevel(b);
  }
  for (auto const &g : _gens) {
    if (fixesBase(g, _levels.size()))
      appendLevel(g.firstMovedPoint());
  }
  for (std::size_t i = 0; i < _levels.size(); ++i) {
    for (auto const &g : _gens) {
      if (fixesBase(g, i))
        _levels[i].strongGens.push_back(g);
    }
    computeOrbit(_levels[i]);
  }

  // Holt's incremental variant: level i is complete once every Schreier
  // generator of level i sifts through the levels below it.
  std::size_t i = _levels.size();
  while (i > 0) {
    std::size_t cur = i - 1;
    bool extended = false;
    Level const &level = _levels[cur];
    for (std::size_t a = 0; a < level.orbit.size() && !extended; ++a) {
      for (std::size_t s = 0; s < level.strongGens.size() && !extended; ++s) {
        Perm const &gen = level.strongGens[s];
        Point image = gen[level.orbit[a]];
        Perm residue = level.transversal[a] * gen *
                       level.transversalInv[static_cast<std::size_t>(level.orbitIndex[image])];
        std::size_t stop = sift(residue, cur + 1);
        if (stop == _levels.size() && residue.isIdentity())
          continue;
        if (stop == _levels.size())
          appendLevel(residue.firstMovedPoint());
        for (std::size_t l = cur + 1; l <= stop; ++l) {
          _levels[l].strongGens.push_back(residue);
          computeOrbit(_levels[l]);
        }
        i = stop + 1;
        extended = true;
      }
    }
    if (!extended)
      i = cur;
  }
}

void PermGroup::computeOrder()
{
  FactoredNat order;
  for (auto const &level : _levels) {
    if (level.orbit.size() > 1)
      order = mul(order, FactoredNat::fromInteger(level.orbit.size()));
  }
  _order = order;
}

bool PermGroup::contains(Perm const &p) const
{
  if (p.degree() != _degree)
    throw Error(ErrorCode::DegreeMismatch, "membership test with a permutation of another degree");
  Perm residue = p;
  return sift(residue, 0) == _levels.size() && residue.isIdentity();
}

bool PermGroup::containsOddElement() const
{
  return std::any_of(_gens.begin(), _gens.end(), [](Perm const &g) { return !g.isEven(); });
}

bool PermGroup::isSubgroupOf(PermGroup const &other) const
{
  if (other._degree != _degree)
    return false;
  return std::all_of(_gens.begin(), _gens.end(),
                     [&other](Perm const &g) { return other.contains(g); });
}

bool PermGroup::sameGroupAs(PermGroup const &other) const
{ return _order == other._order && isSubgroupOf(other); }

std::vector<Perm> PermGroup::elements(u64 bound) const
{
  auto size = _order.toU64();
  if (!size || *size > bound)
    throw Error(ErrorCode::OrderExceedsBound,
                "group order " + _order.toDecimal() + " exceeds enumeration bound " +
                    std::to_string(bound));
  std::vector<Perm> out;
  out.reserve(*size);
  // g = v_last * ... * v_1 * v_0 with v_i from the transversal of level i.
  std::function<void(std::size_t, Perm const &)> rec = [&](std::size_t level, Perm const &acc) {
    if (level == 0) {
      out.push_back(acc);
      return;
    }
    for (auto const &u : _levels[level - 1].transversal)
      rec(level - 1, acc * u);
  };
  rec(_levels.size(), Perm(_degree));
  return out;
}

Perm PermGroup::randomElement(std::mt19937_64 &rng) const
{
  Perm acc(_degree);
  for (std::size_t i = _levels.size(); i > 0; --i) {
    auto const &t = _levels[i - 1].transversal;
    acc = acc * t[rng() % t.size()];
  }
  return acc;
}

std::vector<std::vector<Point>> PermGroup::orbits() const
{
  std::vector<Point> parent(_degree);
  std::iota(parent.begin(), parent.end(), Point(0));
  std::function<Point(Point)> find = [&](Point x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (auto const &g : _gens) {
    for (Point x = 0; x < _degree; ++x) {
      Point a = find(x), b = find(g[x]);
      if (a != b)
        parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::vector<Point>> result;
  std::vector<int> slot(_degree, -1);
  for (Point x = 0; x < _degree; ++x) {
    Point r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(result.size());
      result.emplace_back();
    }
    result[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return result;
}

PermGroup PermGroup::withNaturalBase() const
{
  if (_naturalBase)
    return *this;
  std::vector<Point> natural(_degree);
  std::iota(natural.begin(), natural.end(), Point(0));
  return build(_degree, _gens, natural);
}

Perm PermGroup::minimalCosetElement(Perm const &x) const
{
  if (!_naturalBase)
    throw Error(ErrorCode::InvalidArgument, "minimal coset element needs a natural base");
  if (x.degree() != _degree)
    throw Error(ErrorCode::DegreeMismatch, "coset representative of another degree");
  Perm t = x;
  for (auto const &level : _levels) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < level.orbit.size(); ++i) {
      if (t[level.orbit[i]] < t[level.orbit[best]])
        best = i;
    }
    if (best != 0)
      t = level.transversal[best] * t;
  }
  return t;
}

PermGroup PermGroup::evenPart() const
{
  auto odd = std::find_if(_gens.begin(), _gens.end(), [](Perm const &g) { return !g.isEven(); });
  if (odd == _gens.end())
    return *this;
  Perm t = *odd;
  Perm tInv = t.inverse();
  std::vector<Perm> gens;
  for (auto const &s : _gens) {
    if (s.isEven()) {
      gens.push_back(s);
      gens.push_back(t * s * tInv);
    } else {
      gens.push_back(s * tInv);
      gens.push_back(t * s);
    }
  }
  PermGroup even = build(_degree, gens, base());
  if (_naturalBase && !even._naturalBase)
    return even.withNaturalBase();
  return even;
}

PermGroup PermGroup::adjoin(Perm const &p) const
{
  std::vector<Perm> gens = _gens;
  gens.push_back(p);
  return build(_degree, gens, base());
}

} // namespace bcl
