#ifndef GUARD_BCL_STABILIZERS_H
#define GUARD_BCL_STABILIZERS_H

#include <optional>
#include <vector>

#include "bcl/matrix.hpp"
#include "bcl/permgroup.hpp"

namespace bcl
{

// S_subset x S_complement, intersected with A_n when evenOnly is set.
PermGroup setStabilizerGroup(std::size_t n, std::vector<Point> const &subset, bool evenOnly);

// S_m wr S_k in its imprimitive action on the uniform partition v,
// intersected with A_n when evenOnly is set.
PermGroup partitionStabilizerGroup(SetPartition const &v, bool evenOnly);

// A subgroup given by the object it stabilizes rather than by generators.
struct StabilizerDescriptor
{
  enum class Kind
  {
    Set,
    Partition
  };

  Kind kind = Kind::Partition;
  // For Kind::Set the partition is {subset, complement}.
  SetPartition object;
  bool evenOnly = false;

  static StabilizerDescriptor setStab(std::size_t n, std::vector<Point> subset, bool evenOnly);
  static StabilizerDescriptor partitionStab(SetPartition v, bool evenOnly);

  PermGroup group() const;
};

struct NormalizerResult
{
  PermGroup normalizer;
  bool equalsH = true;
  // An element of N \ H, present exactly when N > H.
  std::optional<Perm> iota;
};

// N_{S_n}(H) for a set or partition stabilizer H, from the classical closed
// forms. Requires n >= 5, where the closed forms are valid without
// small-degree exceptions.
NormalizerResult normalizerInSym(StabilizerDescriptor const &descriptor);

// N_{S_n}(H) by enumerating S_n; only for n <= 7.
PermGroup normalizerBruteForce(PermGroup const &h);

// Entry (i, j) = |V_i cap W_j|.
IntersectionMatrix intersectionMatrix(SetPartition const &v, SetPartition const &w);

// cells[i][j] lists the points of V_i cap W_j in increasing order.
std::vector<std::vector<std::vector<Point>>> cellPoints(SetPartition const &v, SetPartition const &w);

struct PairStabilizerReport
{
  std::vector<Perm> generators;
  FactoredNat orderFactored;
  bool containsOddElement = false;
  IntersectionMatrix cellSizes;
  // Number of block-permutation pairs (sigma, tau) preserving the cell sizes.
  FactoredNat blockPairCount;
};

inline constexpr u64 pairStabilizerSigmaCap = 1000000;

// The group of permutations mapping every block of v onto a block of v and
// every block of w onto a block of w.
PairStabilizerReport pairStabilizer(SetPartition const &v, SetPartition const &w);

// The lift of a block-permutation pair: cell (i, j) is mapped onto cell
// (sigma(i), tau(j)) by the order-preserving bijection.
Perm liftBlockPair(SetPartition const &v, SetPartition const &w,
                   std::vector<std::size_t> const &sigma, std::vector<std::size_t> const &tau);

} // namespace bcl

#endif // GUARD_BCL_STABILIZERS_H
