#ifndef GUARD_BCL_COSETCERT_H
#define GUARD_BCL_COSETCERT_H

#include <optional>
#include <string>
#include <vector>

#include "bcl/matrix.hpp"
#include "bcl/stabilizers.hpp"

namespace bcl
{

// Entry (i, j) = #{x in block j : a(x) in block i}, where the blocks are
// consecutive runs of the given sizes. For a basis permutation this is the
// rank of block (i, j) of its permutation matrix.
IntersectionMatrix rankMatrixBasisPerm(std::vector<std::size_t> const &blockSizes, Perm const &a);

// Row and column permutations with Q(i, j) = P(rowPerm[i], colPerm[j]).
// As matrices, X has X(i, rowPerm[i]) = 1 and Y has Y(colPerm[j], j) = 1,
// so that XPY = Q.
struct PermPair
{
  std::vector<std::size_t> rowPerm;
  std::vector<std::size_t> colPerm;
};

// Exact decision by backtracking over row assignments.
std::optional<PermPair> permEquivalent(IntersectionMatrix const &p, IntersectionMatrix const &q);

enum class Verdict
{
  Distinct,
  Equal,
  Inconclusive
};

char const *verdictName(Verdict v);

// An external hypothesis a conclusion depends on. It is recorded, never
// verified.
struct Assumption
{
  std::string id;
  std::string statement;
  std::string citation;
};

// The default overgroup hypothesis for a primitive action of A_n or S_n.
Assumption defaultOvergroupAssumption();

// The maximality of the stabilizer H in G is taken from the classification
// of maximal subgroups of alternating and symmetric groups.
Assumption maximalityAssumption();

struct DoubleCosetCertificate
{
  std::string claim;
  Verdict verdict = Verdict::Inconclusive;
  std::optional<IntersectionMatrix> p;
  std::optional<IntersectionMatrix> q;
  std::optional<PermPair> matrixWitness;
  // k1 * g * k2 = h with k1, k2 in the relevant stabilizer.
  std::optional<Perm> k1;
  std::optional<Perm> k2;
  // True when Distinct was decided by an exhaustive non-equivalence search.
  bool exhaustiveNonEquivalence = false;
  std::vector<std::string> notes;
  std::vector<Assumption> assumptions;
};

// Decides h in KgK for K the stabilizer in S_n of the unordered partition v.
DoubleCosetCertificate symDoubleCosetEqual(SetPartition const &v, Perm const &g, Perm const &h);

// Decides h in HgH for H = K cap A_n; g and h must be even.
DoubleCosetCertificate altDoubleCosetEqual(SetPartition const &v, Perm const &g, Perm const &h);

inline constexpr u64 bruteForceElementBound = 1000000;

// h in HgH by enumerating H: true iff some y in H has h y^-1 g^-1 in H.
bool bruteForceDoubleCoset(PermGroup const &h, Perm const &g, Perm const &x);

struct CriterionCondition
{
  std::string name;
  bool holds = false;
  std::string detail;
};

struct CriterionCertificate
{
  std::string claim;
  bool semisymmetric = false;
  std::string conclusion;
  std::size_t degree = 0;
  SetPartition v;
  Perm g;
  std::vector<CriterionCondition> conditions;
  std::vector<DoubleCosetCertificate> certificates;
  std::optional<PairStabilizerReport> pairStabilizer;
  std::optional<Perm> iota;
  std::vector<Assumption> assumptions;
};

// Biprimitive semisymmetry criterion for G = A_n acting on the cosets of
// H = (stabilizer of v) cap A_n, H maximal:
//   (a) HgH != Hg^-1 H,
//   (b) the recorded overgroup assumption,
//   (c) S_n = A_n (K cap K^g) for K the stabilizer of v in S_n, i.e.
//       K cap K^g contains an odd permutation.
// v is a uniform partition with at least two blocks, or a two-block
// partition {subset, complement} with parts of different sizes.
CriterionCertificate checkBiprimitiveCriterion(SetPartition const &v, Perm const &g,
                                               Assumption const &overgroupAssumption);

// Normalizer criterion for G = A_n, n > 6, H = (stabilizer of v) cap A_n
// with HgH != Hg^-1 H and the recorded overgroup assumption: the graph is
// semisymmetric iff N_{S_n}(H) = H, or Hg^-1 H != H g^iota H for some (and
// then every) iota in N_{S_n}(H) \ H. With iota absent the normalizer
// computation supplies one; a supplied iota inside H raises
// NormalizerEqualsH.
CriterionCertificate checkNormalizerCriterion(SetPartition const &v, Perm const &g,
                                              Assumption const &overgroupAssumption,
                                              std::optional<Perm> const &iota = std::nullopt);

} // namespace bcl

#endif // GUARD_BCL_COSETCERT_H
