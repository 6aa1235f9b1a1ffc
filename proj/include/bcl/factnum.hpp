#ifndef GUARD_BCL_FACTNUM_H
#define GUARD_BCL_FACTNUM_H

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace bcl
{

using u64 = std::uint64_t;
using i64 = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;

// Trial division bound used when factoring. Defaults to 10^7 and can be
// overridden through the BCL_FACTOR_BOUND environment variable.
u64 trialDivisionBound();

// Increasing table containing at least every prime up to n. Tables are
// sieved once and cached for the lifetime of the process.
std::vector<u64> const &primeTable(u64 n);

bool isPrime(u64 n);

// A positive integer stored as its prime factorization.
class FactoredNat
{
public:
  using Factor = std::pair<u64, u64>; // (prime, exponent)

  FactoredNat() = default;

  // Tag for internal constructions whose factor list is canonical by
  // construction (sorted primes, positive exponents); skips revalidation.
  struct Canonical {};
  FactoredNat(Canonical, std::vector<Factor> factors)
  : _factors(std::move(factors))
  {}

  static FactoredNat fromInteger(u64 n);
  static FactoredNat fromBig(BigInt const &n);
  static FactoredNat fromFactors(std::vector<Factor> factors);
  static FactoredNat primePower(u64 p, u64 e);

  std::vector<Factor> const &factors() const { return _factors; }

  bool isOne() const { return _factors.empty(); }
  u64 exponent(u64 p) const;

  // Exact value, or nullopt when it does not fit into 64 bits.
  std::optional<u64> toU64() const;
  BigInt toBig() const;
  std::string toDecimal() const;

  // Natural logarithm of the value.
  double log() const;

  // Factorization as text, e.g. "2^3*3*5"; "1" for the empty list.
  std::string toFactorString() const;

  bool operator==(FactoredNat const &rhs) const
  { return _factors == rhs._factors; }
  bool operator!=(FactoredNat const &rhs) const
  { return !(*this == rhs); }

  // Orders by numeric value.
  bool operator<(FactoredNat const &rhs) const;

private:
  std::vector<Factor> _factors;
};

FactoredNat mul(FactoredNat const &a, FactoredNat const &b);
FactoredNat divExact(FactoredNat const &a, FactoredNat const &b);
FactoredNat pow(FactoredNat const &a, u64 e);
bool divides(FactoredNat const &a, FactoredNat const &b);
u64 valuation(FactoredNat const &n, u64 p);
FactoredNat pPart(FactoredNat const &n, u64 p);

// Factors an arbitrary positive integer by trial division up to the bound.
// A cofactor left over after trial division is accepted only if it is
// provably prime; otherwise FactorBoundExceeded is thrown.
FactoredNat factorBig(BigInt const &n, u64 bound = trialDivisionBound());

class ExactRational
{
public:
  ExactRational(i64 numerator = 0, i64 denominator = 1);

  i64 numerator() const { return _num; }
  i64 denominator() const { return _den; }

  ExactRational operator+(ExactRational const &rhs) const;
  ExactRational operator-(ExactRational const &rhs) const;
  ExactRational operator*(ExactRational const &rhs) const;
  ExactRational operator/(ExactRational const &rhs) const;

  bool operator==(ExactRational const &rhs) const
  { return _num == rhs._num && _den == rhs._den; }
  bool operator!=(ExactRational const &rhs) const
  { return !(*this == rhs); }

  // "7/4", "2", "-2/15".
  std::string toString() const;
  static ExactRational parse(std::string const &text);

private:
  i64 _num;
  i64 _den;
};

struct DominantPrime
{
  u64 prime;
  FactoredNat part;
};

DominantPrime dominantPrime(FactoredNat const &n);

// log Q(n) / log n.
double logProportion(FactoredNat const &n);

// v_p(n!).
u64 legendre(u64 n, u64 p);

inline constexpr u64 defaultFactorialBound = 1000000;

FactoredNat factorialFactored(u64 n, u64 bound = defaultFactorialBound);
FactoredNat binomialFactored(u64 n, u64 k);

// Checks C(n, floor(n/2)) <= 2^n / sqrt(n) numerically in log space.
bool centralBinomialBoundHolds(u64 n);

u64 multiplicativeOrder(i64 q, u64 s);

// Exact integer value of the m-th cyclotomic polynomial at q.
BigInt cyclotomicInteger(u64 m, i64 q);

// Factorization of |Phi_m(q)|.
FactoredNat cyclotomicValue(u64 m, i64 q);

// True iff q^m - 1 has a prime divisor not dividing q^i - 1 for 0 < i < m.
bool hasPrimitivePrimeDivisor(u64 q, u64 m);

// Smallest primitive prime divisor of q^m - 1, or nullopt when none exists.
std::optional<u64> zsigmondy(u64 q, u64 m);

// True iff C(n+k, k) = 2 C(n, k), decided on exact factorizations.
bool binomialDoublingHolds(u64 n, u64 k);

// All (n, k) with k <= kMax solving C(n+k, k) = 2 C(n, k). For k >= 2 only
// the window k^2 < n < 2k^2 is searched; for k <= 10 the search additionally
// covers 1 <= n <= 4k^2 as a cross-check of the window.
std::vector<std::pair<u64, u64>> diophantineScan(u64 kMax);

FactoredNat wreathOrder(u64 a, u64 b);

// pi(n) < 1.25506 n / ln n for all 2 <= n <= nMax.
bool primeCountBoundCheck(u64 nMax);

// Some prime p with n/2 < p < n exists for all 3 <= n <= nMax.
bool bertrandCheck(u64 nMax);

} // namespace bcl

#endif // GUARD_BCL_FACTNUM_H
