#ifndef GUARD_BCL_PERMGROUP_H
#define GUARD_BCL_PERMGROUP_H

#include <cstddef>
#include <random>
#include <vector>

#include "bcl/factnum.hpp"
#include "bcl/perm.hpp"

namespace bcl
{

inline constexpr u64 defaultEnumerationBound = 100000;

// A finitely generated permutation group with a stabilizer chain built by
// the deterministic Schreier-Sims algorithm. Transversals are stored
// explicitly, which suits the small and medium degrees used here.
class PermGroup
{
public:
  PermGroup() = default;

  // Base points are taken from baseHint first (in order, every listed point
  // becomes a level even if its orbit is trivial), then extended as needed.
  static PermGroup build(std::size_t degree, std::vector<Perm> const &gens,
                         std::vector<Point> const &baseHint = {});

  static PermGroup trivial(std::size_t degree);
  static PermGroup symmetric(std::size_t n);
  static PermGroup alternating(std::size_t n);

  std::size_t degree() const { return _degree; }
  std::vector<Perm> const &generators() const { return _gens; }
  FactoredNat const &order() const { return _order; }
  std::vector<Point> base() const;

  bool contains(Perm const &p) const;
  bool containsOddElement() const;
  bool isSubgroupOf(PermGroup const &other) const;
  bool sameGroupAs(PermGroup const &other) const;

  // Every element exactly once, via transversal products.
  std::vector<Perm> elements(u64 bound = defaultEnumerationBound) const;

  // Uniformly distributed element.
  Perm randomElement(std::mt19937_64 &rng) const;

  // Orbits on points, each sorted, listed by smallest element.
  std::vector<std::vector<Point>> orbits() const;

  // The group rebuilt with the natural base 0, 1, ..., n-1.
  PermGroup withNaturalBase() const;

  // Lexicographically least element (by image list) of the right coset
  // (this group) * x. Requires a natural base.
  Perm minimalCosetElement(Perm const &x) const;

  // This group intersected with the alternating group.
  PermGroup evenPart() const;

  // The group generated by this group and one more element.
  PermGroup adjoin(Perm const &p) const;

private:
  struct Level
  {
    Point basePoint = 0;
    std::vector<Perm> strongGens;
    std::vector<Point> orbit;
    std::vector<int> orbitIndex;      // point -> position in orbit, or -1
    std::vector<Perm> transversal;    // basePoint^t = orbit[i]
    std::vector<Perm> transversalInv;
  };

  void computeOrbit(Level &level) const;
  // Sifts p through levels [from, end). Returns the index of the level at
  // which sifting stopped (levels.size() if it passed all of them) and
  // leaves the residue in p.
  std::size_t sift(Perm &p, std::size_t from) const;
  void schreierSims(std::vector<Point> const &baseHint);
  void computeOrder();

  std::size_t _degree = 0;
  std::vector<Perm> _gens;
  std::vector<Level> _levels;
  FactoredNat _order;
  bool _naturalBase = false;
};

} // namespace bcl

#endif // GUARD_BCL_PERMGROUP_H
