#ifndef GUARD_BCL_CATALOG_H
#define GUARD_BCL_CATALOG_H

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bcl/factnum.hpp"

namespace bcl
{

enum class Family
{
  Alt,
  Sym,
  PSL,
  PSU,
  PSp,
  POmega,      // odd dimension 2m+1
  POmegaPlus,  // dimension 2m, plus type
  POmegaMinus, // dimension 2m, minus type
  Sz,
  G2,
  Ree,
  D43, // 3D4(q)
  F4,
  F42, // 2F4(q)
  E6,
  E62, // 2E6(q)
  E7,
  E8,
  Sporadic
};

// A simple group, or Sym(n), optionally extended by a subgroup of its outer
// automorphism group of order extensionMultiplier. Classical groups store
// the dimension of the natural module in `dim`; Alt and Sym store the
// degree there. Exceptional families only use q.
struct GroupSpec
{
  Family family = Family::Alt;
  u64 dim = 0;
  u64 q = 0;
  std::string sporadic;
  u64 extensionMultiplier = 1;
  // Name of a named extension such as "PGSp(4,3)"; empty otherwise.
  std::string label;

  static GroupSpec alt(u64 n);
  static GroupSpec sym(u64 n);
  static GroupSpec classical(Family family, u64 dim, u64 q);
  static GroupSpec exceptional(Family family, u64 q);
  static GroupSpec sporadicGroup(std::string name);

  // "PSL(3,4)", "Alt(9)", "PSp(6,3)", "M11", "E8(2)", and named extensions
  // "PGL(2,7)", "PGammaL(2,49)", "PGSp(4,3)", "PGU(3,8).3", "PSU(4,3).D8",
  // "PSL(2,8).3". Raises InvalidParameters or UnknownGroup.
  static GroupSpec parse(std::string const &text);

  // Name of the socle (or Sym(n)) in parse syntax.
  std::string socleName() const;
  // label when set, else the socle name with a ".k" suffix for k > 1.
  std::string name() const;

  bool operator==(GroupSpec const &rhs) const;
};

// Raises InvalidParameters unless the socle parameters give a simple group
// (Alt(n) with n >= 5, PSL(2,q) with q >= 4, ...) in its standard
// non-redundant range, and extensionMultiplier divides |Out|.
void validate(GroupSpec const &spec);

// |Out(T)| of the socle; 2 for Sym(n) is not an extension (Sym(n) counts as
// a group in its own right and takes multiplier 1).
FactoredNat outerAutomorphismOrder(GroupSpec const &spec);

// |T| = q^h prod_m Phi_m(q)^gamma_m / d for groups of Lie type.
struct CyclotomicForm
{
  u64 p = 0;
  u64 f = 0;
  u64 qExponent = 0; // exponent of q, so v_p = f * qExponent
  std::map<u64, u64> phiExponents;
  u64 d = 1;
};

std::optional<CyclotomicForm> cyclotomicForm(GroupSpec const &spec);

// Exact order. Lie-type orders are assembled from the factorizations of the
// individual Phi_m(q).
FactoredNat orderOf(GroupSpec const &spec);

// The same value without factoring, for scans.
BigInt orderValue(GroupSpec const &spec);

struct ArtinInvariants
{
  u64 r = 0;
  u64 ell = 0;
  u64 omega = 0;
  u64 psi = 0;
  ExactRational f1;
  ExactRational f2;
};

// Raises NoCofactorPrimes when the order is a prime power, OmegaEqualsPsi
// when F2 is undefined.
ArtinInvariants artin(FactoredNat const &order);

// Printed reference values for small alternating and symmetric groups.
struct ArtinReferenceRow
{
  std::string group;
  ArtinInvariants printed;
  // False when the printed F1, F2 differ from ell/omega and the formula
  // for F2 applied to the printed (ell, omega, psi).
  bool printedRationalsConsistent = true;
};

std::vector<ArtinReferenceRow> const &artinReferenceRows();

// Sets of names of the same simple group; the scan treats each set as one
// group.
std::vector<std::vector<std::string>> const &exceptionalIsomorphisms();

struct OrderCollision
{
  BigInt order;
  // Pairwise non-isomorphic classes; each class lists all names the scan
  // met for that group.
  std::vector<std::vector<std::string>> classes;
};

struct SameOrderReport
{
  BigInt bound;
  u64 groupsEnumerated = 0;
  std::vector<OrderCollision> collisions;
  std::vector<std::string> mergedIsomorphisms;
};

// All orders <= bound shared by non-isomorphic simple groups: alternating,
// Lie type in the non-redundant parameter ranges of validate(), sporadic and
// the Tits group.
SameOrderReport sameOrderScan(BigInt const &bound);

// Parses "1e10", "10^10" or a decimal integer.
BigInt parseBound(std::string const &text);

enum class Ambient
{
  Alt,
  Sym
};

char const *ambientName(Ambient a);

enum class MaxType
{
  Intransitive,
  Imprimitive,
  Affine,
  Diagonal,
  PrimitiveWreath,
  AlmostSimple
};

char const *maxTypeName(MaxType t);

struct MaxSubgroupEntry
{
  MaxType type = MaxType::Intransitive;
  Ambient ambient = Ambient::Sym;
  u64 n = 0;
  // (m, k) for intransitive, imprimitive and primitive wreath; (p, k) for
  // affine; (|T|, k) for diagonal; unused for almost simple.
  u64 a = 0;
  u64 b = 0;
  std::string label;
  FactoredNat order;
  // Source of an embedded almost simple entry.
  std::string provenance;
};

inline constexpr u64 maxSubgroupDegreeLimit = 200;
inline constexpr u64 almostSimpleEmbeddedLimit = 12;

// Orders of the subgroups (X cap G) of each type, for every parameter
// choice of the intransitive, imprimitive, affine, diagonal and primitive
// wreath families, plus embedded almost simple primitive subgroups for
// n <= 12. Maximality is not checked. Raises NOutOfRange outside 5..200.
std::vector<MaxSubgroupEntry> maxSubgroupOrders(u64 n, Ambient ambient);

struct Coincidence
{
  u64 n = 0;
  Ambient ambient = Ambient::Sym;
  MaxSubgroupEntry first;
  MaxSubgroupEntry second;
  bool crossType = false;
  // "degree 6 exception" or "unexpected".
  std::string classification;
};

struct CoincidenceReport
{
  u64 nMax = 0;
  std::vector<Coincidence> coincidences;
  // Degrees above the embedded limit, where almost simple subgroups are not
  // enumerated.
  std::vector<u64> almostSimpleNotEnumerated;
  // Imprimitive orders |S_a wr S_b| with ab <= nMax, a, b >= 2, collide only
  // for equal (a, b).
  bool imprimitiveOrdersDistinct = true;
};

// Raises NOutOfRange unless 5 <= nMax <= 60.
CoincidenceReport coincidenceScan(u64 nMax);

} // namespace bcl

#endif // GUARD_BCL_CATALOG_H
