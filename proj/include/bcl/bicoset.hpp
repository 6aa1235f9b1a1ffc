#ifndef GUARD_BCL_BICOSET_H
#define GUARD_BCL_BICOSET_H

#include <map>
#include <string>
#include <vector>

#include "bcl/graphauto.hpp"
#include "bcl/permgroup.hpp"

namespace bcl
{

inline constexpr u64 defaultIndexBound = 100000;

// How a subgroup of G is given: by generators, or as the stabilizer in G of
// a subset or of an unordered partition.
struct SubgroupSpec
{
  enum class Kind
  {
    Generators,
    SetStabilizer,
    PartitionStabilizer
  };

  Kind kind = Kind::Generators;
  std::vector<Perm> generators;
  std::vector<Point> subset;  // SetStabilizer
  SetPartition partition;     // PartitionStabilizer

  static SubgroupSpec fromGenerators(std::vector<Perm> gens);
  static SubgroupSpec setStabilizer(std::vector<Point> subset);
  static SubgroupSpec partitionStabilizer(SetPartition v);

  std::string describe() const;
};

// The right cosets Lx of a subgroup L of G, in canonical (lexicographic)
// order of their keys. Stabilizer subgroups use the image O^x of the
// stabilized object as key; generator subgroups use the least element of
// the coset.
class CosetSpace
{
public:
  static CosetSpace build(PermGroup const &g, SubgroupSpec const &spec, u64 indexBound = defaultIndexBound);

  std::size_t size() const { return _reps.size(); }
  PermGroup const &subgroup() const { return _subgroup; }
  Perm const &representative(std::size_t i) const { return _reps[i]; }
  std::vector<Point> const &key(std::size_t i) const { return _keys[i]; }

  // Index of the coset L x.
  std::size_t indexOf(Perm const &x) const;

  // The permutation induced on cosets by right multiplication.
  std::vector<std::size_t> action(Perm const &s) const;

private:
  std::vector<Point> keyOf(Perm const &x) const;

  SubgroupSpec::Kind _kind = SubgroupSpec::Kind::Generators;
  std::vector<Point> _subset;
  SetPartition _partition;
  PermGroup _subgroup;
  std::vector<Perm> _reps;
  std::vector<std::vector<Point>> _keys;
  std::map<std::vector<Point>, std::size_t> _index;
};

// B(G, L, R, D) with D the union of the double cosets R d L over dReps.
// Left vertices are the cosets of L, right vertices the cosets of R; Lx is
// adjacent to Ry iff y x^-1 lies in D.
class BiCosetGraph
{
public:
  static BiCosetGraph build(PermGroup const &g, SubgroupSpec const &left, SubgroupSpec const &right,
                            std::vector<Perm> const &dReps, u64 indexBound = defaultIndexBound);

  PermGroup const &group() const { return _g; }
  CosetSpace const &left() const { return _left; }
  CosetSpace const &right() const { return _right; }
  std::vector<Perm> const &dReps() const { return _dReps; }

  // Right cosets R d contained in D, as indices into right().
  std::vector<std::size_t> const &baseNeighbors() const { return _baseNeighbors; }

  std::size_t edgeCount() const;
  std::vector<std::vector<std::size_t>> const &leftAdjacency() const { return _leftAdj; }
  std::vector<std::vector<std::size_t>> const &rightAdjacency() const { return _rightAdj; }

  // Vertices 0..|G:L|-1 are left cosets, the rest right cosets.
  Graph toGraph() const;

  // "n_left n_right m" followed by one "u v" line per edge, v offset by
  // n_left.
  std::string toEdgeList() const;

private:
  PermGroup _g;
  CosetSpace _left;
  CosetSpace _right;
  std::vector<Perm> _dReps;
  std::vector<std::size_t> _baseNeighbors;
  std::vector<std::vector<std::size_t>> _leftAdj;
  std::vector<std::vector<std::size_t>> _rightAdj;
};

// Each check reports the verdict read off the explicit graph and the
// verdict predicted by the group data.
struct PropertyCheck
{
  bool graph = false;
  bool group = false;
  bool agrees() const { return graph == group; }
};

// Degree uniformity against |L| = |R|.
PropertyCheck checkRegular(BiCosetGraph const &gamma);

// BFS connectivity against <D^-1 D> = G.
PropertyCheck checkConnected(BiCosetGraph const &gamma);

// A single G-orbit on edges against D being a single double coset R d L.
PropertyCheck checkEdgeTransitive(BiCosetGraph const &gamma);

// L = R and D = D^-1; sufficient for vertex-transitivity.
bool sufficientVertexTransitive(BiCosetGraph const &gamma);

// The subgroup <D^-1 D>, generated by L and all d_i^-1 r d_j.
PermGroup dInverseDGroup(BiCosetGraph const &gamma);

struct Faithfulness
{
  bool left = false;
  bool right = false;
};

inline constexpr u64 faithfulnessIndexBound = 2000;

// G acts faithfully on a part iff the core of the subgroup is trivial,
// decided by comparing the order of the coset action with |G|.
Faithfulness faithfulnessCheck(BiCosetGraph const &gamma);

// Right multiplication by s, as a permutation of all vertices.
std::vector<std::size_t> vertexAction(BiCosetGraph const &gamma, Perm const &s);

// Text input: the degree on the first nonblank line, then sections GROUP,
// LEFT, RIGHT and DREPS. GROUP and DREPS list cycle-notation elements, one
// per line. LEFT and RIGHT list generators, or a single line
// "setstab {1,2,3}" or "stabilizer {1,2}{3,4}{5,6}". Text after '#' is
// ignored.
struct BiCosetInput
{
  std::size_t degree = 0;
  std::vector<Perm> group;
  SubgroupSpec left;
  SubgroupSpec right;
  std::vector<Perm> dReps;
};

BiCosetInput parseBiCosetInput(std::string const &text);

} // namespace bcl

#endif // GUARD_BCL_BICOSET_H
