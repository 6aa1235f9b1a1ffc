#include "bcl/factnum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

#include "bcl/error.hpp"

namespace bcl
{

namespace
{

using u128 = unsigned __int128;
using i128 = __int128;

constexpr u64 builtinTrialBound = 10000000;

u64 mulmod(u64 a, u64 b, u64 m)
{ return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 powmod(u64 base, u64 e, u64 m)
{
  u64 result = 1 % m;
  base %= m;
  while (e > 0) {
    if (e & 1u)
      result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return result;
}

std::vector<u64> sieve(u64 n)
{
  std::vector<bool> composite(n + 1, false);
  std::vector<u64> primes;
  for (u64 i = 2; i <= n; ++i) {
    if (composite[i])
      continue;
    primes.push_back(i);
    for (u64 j = i * i; j <= n; j += i)
      composite[j] = true;
  }
  return primes;
}

bool fitsU64(BigInt const &n)
{ return n >= 0 && n <= BigInt(std::numeric_limits<u64>::max()); }

void appendFactor(std::vector<FactoredNat::Factor> &out, u64 p, u64 e)
{
  if (e > 0)
    out.emplace_back(p, e);
}

std::vector<u64> divisorsOf(u64 m)
{
  std::vector<u64> result;
  for (u64 d = 1; d * d <= m; ++d) {
    if (m % d == 0) {
      result.push_back(d);
      if (d * d != m)
        result.push_back(m / d);
    }
  }
  std::sort(result.begin(), result.end());
  return result;
}

int moebius(u64 n)
{
  int result = 1;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0)
        return 0;
      result = -result;
    }
  }
  if (n > 1)
    result = -result;
  return result;
}

std::vector<u64> distinctPrimeFactors(u64 n)
{
  std::vector<u64> result;
  for (u64 p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      result.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    result.push_back(n);
  return result;
}

// |Phi_m(q)| with every prime factor of m divided out.
BigInt primitivePart(u64 q, u64 m)
{
  BigInt value = abs(cyclotomicInteger(m, static_cast<i64>(q)));
  for (u64 p : distinctPrimeFactors(m)) {
    while (value % p == 0)
      value /= p;
  }
  return value;
}

} // anonymous namespace

u64 trialDivisionBound()
{
  static u64 const bound = [] {
    char const *env = std::getenv("BCL_FACTOR_BOUND");
    if (env == nullptr || *env == '\0')
      return builtinTrialBound;
    char *end = nullptr;
    double value = std::strtod(env, &end);
    if (end == env || value < 2.0 || value > 4e9)
      return builtinTrialBound;
    return static_cast<u64>(value);
  }();
  return bound;
}

std::vector<u64> const &primeTable(u64 n)
{
  struct Table
  {
    u64 limit;
    std::vector<u64> primes;
  };
  static std::mutex mutex;
  static std::vector<std::unique_ptr<Table>> tables;

  std::lock_guard<std::mutex> lock(mutex);
  if (tables.empty() || tables.back()->limit < n) {
    u64 limit = std::max<u64>(n, 1000);
    if (!tables.empty())
      limit = std::max(limit, 2 * tables.back()->limit);
    tables.push_back(std::make_unique<Table>(Table{limit, sieve(limit)}));
  }
  return tables.back()->primes;
}

bool isPrime(u64 n)
{
  if (n < 2)
    return false;
  for (u64 p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (n % p == 0)
      return n == p;
  }
  u64 d = n - 1;
  unsigned s = 0;
  while ((d & 1u) == 0) {
    d >>= 1;
    ++s;
  }
  // These witnesses are deterministic for every 64-bit n.
  for (u64 a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite)
      return false;
  }
  return true;
}

FactoredNat factorBig(BigInt const &n, u64 bound)
{
  if (n < 1)
    throw Error(ErrorCode::InvalidArgument, "only positive integers can be factored");

  std::vector<FactoredNat::Factor> factors;
  auto const &primes = primeTable(bound);

  bool small = n <= BigInt(std::numeric_limits<u64>::max()) * std::numeric_limits<u64>::max();
  BigInt remBig = n;
  u128 rem = 0;
  if (small) {
    rem = static_cast<u128>(static_cast<u64>(n >> 64)) << 64 |
          static_cast<u64>(n & BigInt(std::numeric_limits<u64>::max()));
  }

  bool sqrtReached = false;
  for (u64 p : primes) {
    if (p > bound)
      break;
    if (small) {
      if (static_cast<u128>(p) * p > rem) {
        sqrtReached = true;
        break;
      }
      u64 e = 0;
      while (rem % p == 0) {
        rem /= p;
        ++e;
      }
      appendFactor(factors, p, e);
    } else {
      if (BigInt(p) * p > remBig) {
        sqrtReached = true;
        break;
      }
      u64 e = 0;
      while (remBig % p == 0) {
        remBig /= p;
        ++e;
      }
      appendFactor(factors, p, e);
      if (remBig <= BigInt(std::numeric_limits<u64>::max()) * std::numeric_limits<u64>::max()) {
        small = true;
        rem = static_cast<u128>(static_cast<u64>(remBig >> 64)) << 64 |
              static_cast<u64>(remBig & BigInt(std::numeric_limits<u64>::max()));
      }
    }
  }

  if (small)
    remBig = (BigInt(static_cast<u64>(rem >> 64)) << 64) + static_cast<u64>(rem);

  if (remBig > 1) {
    bool provenPrime = sqrtReached;
    if (!provenPrime) {
      BigInt next = BigInt(bound) + 1;
      if (remBig < next * next)
        provenPrime = true;
      else if (fitsU64(remBig) && isPrime(static_cast<u64>(remBig)))
        provenPrime = true;
    }
    if (!provenPrime || !fitsU64(remBig)) {
      std::ostringstream msg;
      msg << "cofactor " << remBig << " has no prime factor below " << bound;
      throw Error(ErrorCode::FactorBoundExceeded, msg.str());
    }
    factors.emplace_back(static_cast<u64>(remBig), 1);
  }
  return FactoredNat(FactoredNat::Canonical{}, std::move(factors));
}

FactoredNat FactoredNat::fromInteger(u64 n)
{
  if (n == 0)
    throw Error(ErrorCode::InvalidArgument, "zero has no factorization");
  return factorBig(BigInt(n));
}

FactoredNat FactoredNat::fromBig(BigInt const &n)
{ return factorBig(n); }

FactoredNat FactoredNat::fromFactors(std::vector<Factor> factors)
{
  FactoredNat result;
  u64 last = 0;
  for (auto const &[p, e] : factors) {
    if (p <= last || e == 0 || !isPrime(p))
      throw Error(ErrorCode::InvalidArgument, "factor list is not canonical");
    last = p;
  }
  result._factors = std::move(factors);
  return result;
}

FactoredNat FactoredNat::primePower(u64 p, u64 e)
{
  if (e == 0)
    return FactoredNat();
  return fromFactors({{p, e}});
}

u64 FactoredNat::exponent(u64 p) const
{
  auto it = std::lower_bound(_factors.begin(), _factors.end(), Factor(p, 0));
  if (it != _factors.end() && it->first == p)
    return it->second;
  return 0;
}

std::optional<u64> FactoredNat::toU64() const
{
  u128 value = 1;
  u128 const limit = std::numeric_limits<u64>::max();
  for (auto const &[p, e] : _factors) {
    for (u64 i = 0; i < e; ++i) {
      value *= p;
      if (value > limit)
        return std::nullopt;
    }
  }
  return static_cast<u64>(value);
}

BigInt FactoredNat::toBig() const
{
  BigInt value = 1;
  for (auto const &[p, e] : _factors)
    value *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(e));
  return value;
}

std::string FactoredNat::toDecimal() const
{ return toBig().str(); }

double FactoredNat::log() const
{
  double sum = 0.0;
  for (auto const &[p, e] : _factors)
    sum += static_cast<double>(e) * std::log(static_cast<double>(p));
  return sum;
}

std::string FactoredNat::toFactorString() const
{
  if (_factors.empty())
    return "1";
  std::ostringstream out;
  bool first = true;
  for (auto const &[p, e] : _factors) {
    if (!first)
      out << '*';
    first = false;
    out << p;
    if (e > 1)
      out << '^' << e;
  }
  return out.str();
}

bool FactoredNat::operator<(FactoredNat const &rhs) const
{ return toBig() < rhs.toBig(); }

FactoredNat mul(FactoredNat const &a, FactoredNat const &b)
{
  std::vector<FactoredNat::Factor> out;
  auto const &x = a.factors();
  auto const &y = b.factors();
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.push_back(x[i++]);
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.push_back(y[j++]);
    } else {
      out.emplace_back(x[i].first, x[i].second + y[j].second);
      ++i;
      ++j;
    }
  }
  return FactoredNat(FactoredNat::Canonical{}, std::move(out));
}

FactoredNat divExact(FactoredNat const &a, FactoredNat const &b)
{
  std::vector<FactoredNat::Factor> out;
  for (auto const &[p, e] : b.factors()) {
    if (a.exponent(p) < e)
      throw Error(ErrorCode::NonDivisible,
                  b.toFactorString() + " does not divide " + a.toFactorString());
  }
  for (auto const &[p, e] : a.factors())
    appendFactor(out, p, e - b.exponent(p));
  return FactoredNat(FactoredNat::Canonical{}, std::move(out));
}

FactoredNat pow(FactoredNat const &a, u64 e)
{
  std::vector<FactoredNat::Factor> out;
  if (e > 0) {
    for (auto const &[p, x] : a.factors())
      out.emplace_back(p, x * e);
  }
  return FactoredNat(FactoredNat::Canonical{}, std::move(out));
}

bool divides(FactoredNat const &a, FactoredNat const &b)
{
  for (auto const &[p, e] : a.factors()) {
    if (b.exponent(p) < e)
      return false;
  }
  return true;
}

u64 valuation(FactoredNat const &n, u64 p)
{ return n.exponent(p); }

FactoredNat pPart(FactoredNat const &n, u64 p)
{ return FactoredNat::primePower(p, n.exponent(p)); }

ExactRational::ExactRational(i64 numerator, i64 denominator)
{
  if (denominator == 0)
    throw Error(ErrorCode::InvalidArgument, "zero denominator");
  if (denominator < 0) {
    numerator = -numerator;
    denominator = -denominator;
  }
  i64 g = std::gcd(numerator, denominator);
  if (g == 0)
    g = 1;
  _num = numerator / g;
  _den = denominator / g;
}

namespace
{

ExactRational makeRational(i128 num, i128 den)
{
  if (den == 0)
    throw Error(ErrorCode::InvalidArgument, "division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  i128 a = num < 0 ? -num : num;
  i128 b = den;
  while (b != 0) {
    i128 t = a % b;
    a = b;
    b = t;
  }
  if (a == 0)
    a = 1;
  num /= a;
  den /= a;
  i128 const limit = std::numeric_limits<i64>::max();
  if (num > limit || num < -limit || den > limit)
    throw Error(ErrorCode::BoundExceeded, "rational overflow");
  return ExactRational(static_cast<i64>(num), static_cast<i64>(den));
}

} // anonymous namespace

ExactRational ExactRational::operator+(ExactRational const &rhs) const
{
  return makeRational(static_cast<i128>(_num) * rhs._den + static_cast<i128>(rhs._num) * _den,
                      static_cast<i128>(_den) * rhs._den);
}

ExactRational ExactRational::operator-(ExactRational const &rhs) const
{
  return makeRational(static_cast<i128>(_num) * rhs._den - static_cast<i128>(rhs._num) * _den,
                      static_cast<i128>(_den) * rhs._den);
}

ExactRational ExactRational::operator*(ExactRational const &rhs) const
{
  return makeRational(static_cast<i128>(_num) * rhs._num,
                      static_cast<i128>(_den) * rhs._den);
}

ExactRational ExactRational::operator/(ExactRational const &rhs) const
{
  return makeRational(static_cast<i128>(_num) * rhs._den,
                      static_cast<i128>(_den) * rhs._num);
}

std::string ExactRational::toString() const
{
  std::ostringstream out;
  out << _num;
  if (_den != 1)
    out << '/' << _den;
  return out.str();
}

ExactRational ExactRational::parse(std::string const &text)
{
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return ExactRational(std::stoll(text), 1);
    return ExactRational(std::stoll(text.substr(0, slash)),
                         std::stoll(text.substr(slash + 1)));
  } catch (std::logic_error const &) {
    throw Error(ErrorCode::InvalidArgument, "malformed rational '" + text + "'");
  }
}

DominantPrime dominantPrime(FactoredNat const &n)
{
  if (n.isOne())
    throw Error(ErrorCode::NIsOne, "1 has no dominant prime");

  std::size_t best = 0;
  bool tie = false;
  auto const &f = n.factors();
  for (std::size_t i = 1; i < f.size(); ++i) {
    // compare p^e against the current best q^x exactly
    BigInt cand = boost::multiprecision::pow(BigInt(f[i].first), static_cast<unsigned>(f[i].second));
    BigInt cur = boost::multiprecision::pow(BigInt(f[best].first), static_cast<unsigned>(f[best].second));
    if (cand > cur) {
      best = i;
      tie = false;
    } else if (cand == cur) {
      tie = true;
    }
  }
  if (tie)
    throw Error(ErrorCode::NoDominant, "two largest prime-power parts of " + n.toFactorString() + " coincide");
  return {f[best].first, FactoredNat::primePower(f[best].first, f[best].second)};
}

double logProportion(FactoredNat const &n)
{
  auto dom = dominantPrime(n);
  return dom.part.log() / n.log();
}

u64 legendre(u64 n, u64 p)
{
  if (p < 2)
    throw Error(ErrorCode::InvalidArgument, "legendre needs a prime");
  u64 sum = 0;
  u64 q = n;
  while (q > 0) {
    q /= p;
    sum += q;
  }
  return sum;
}

FactoredNat factorialFactored(u64 n, u64 bound)
{
  if (n > bound)
    throw Error(ErrorCode::BoundExceeded, "factorial argument above bound");
  std::vector<FactoredNat::Factor> out;
  for (u64 p : primeTable(n)) {
    if (p > n)
      break;
    out.emplace_back(p, legendre(n, p));
  }
  return FactoredNat(FactoredNat::Canonical{}, std::move(out));
}

FactoredNat binomialFactored(u64 n, u64 k)
{
  if (k > n)
    throw Error(ErrorCode::KExceedsN, "binomial with k > n");
  if (n > defaultFactorialBound)
    throw Error(ErrorCode::BoundExceeded, "binomial argument above bound");
  std::vector<FactoredNat::Factor> out;
  for (u64 p : primeTable(n)) {
    if (p > n)
      break;
    appendFactor(out, p, legendre(n, p) - legendre(k, p) - legendre(n - k, p));
  }
  return FactoredNat(FactoredNat::Canonical{}, std::move(out));
}

bool centralBinomialBoundHolds(u64 n)
{
  if (n == 0)
    return true;
  double lhs = binomialFactored(n, n / 2).log();
  double rhs = static_cast<double>(n) * std::log(2.0) - 0.5 * std::log(static_cast<double>(n));
  return lhs <= rhs + 1e-12 * std::max(1.0, rhs);
}

u64 multiplicativeOrder(i64 q, u64 s)
{
  if (s < 2 || !isPrime(s))
    throw Error(ErrorCode::InvalidArgument, "modulus must be prime");
  i64 sm = static_cast<i64>(s);
  u64 base = static_cast<u64>(((q % sm) + sm) % sm);
  if (base == 0)
    throw Error(ErrorCode::NotCoprime, "base divisible by modulus");
  u64 order = s - 1;
  for (u64 p : distinctPrimeFactors(s - 1)) {
    while (order % p == 0 && powmod(base, order / p, s) == 1)
      order /= p;
  }
  return order;
}

BigInt cyclotomicInteger(u64 m, i64 q)
{
  if (m == 0)
    throw Error(ErrorCode::InvalidArgument, "cyclotomic index must be positive");
  if (q > -2 && q < 2)
    throw Error(ErrorCode::InvalidArgument, "|q| must be at least 2");
  BigInt num = 1, den = 1;
  for (u64 d : divisorsOf(m)) {
    int mu = moebius(m / d);
    if (mu == 0)
      continue;
    BigInt term = boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(d)) - 1;
    if (mu > 0)
      num *= term;
    else
      den *= term;
  }
  return num / den;
}

FactoredNat cyclotomicValue(u64 m, i64 q)
{ return factorBig(abs(cyclotomicInteger(m, q))); }

bool hasPrimitivePrimeDivisor(u64 q, u64 m)
{
  if (q < 2 || m < 1)
    throw Error(ErrorCode::InvalidArgument, "need q >= 2 and m >= 1");
  return primitivePart(q, m) > 1;
}

std::optional<u64> zsigmondy(u64 q, u64 m)
{
  if (q < 2 || m < 2)
    throw Error(ErrorCode::InvalidArgument, "need q >= 2 and m >= 2");
  BigInt part = primitivePart(q, m);
  if (part == 1)
    return std::nullopt;

  // every prime factor of the primitive part is congruent to 1 mod m
  u64 const bound = trialDivisionBound();
  for (u64 r : primeTable(bound)) {
    if (r > bound)
      break;
    if (r % m != 1)
      continue;
    if (BigInt(r) * r > part)
      return static_cast<u64>(part);
    if (part % r == 0)
      return r;
  }
  if (fitsU64(part) && isPrime(static_cast<u64>(part)))
    return static_cast<u64>(part);
  throw Error(ErrorCode::FactorBoundExceeded, "primitive part of Phi_m(q) has no prime factor below the bound");
}

bool binomialDoublingHolds(u64 n, u64 k)
{
  if (k > n)
    return false;
  return binomialFactored(n + k, k) == mul(FactoredNat::fromInteger(2), binomialFactored(n, k));
}

std::vector<std::pair<u64, u64>> diophantineScan(u64 kMax)
{
  std::set<std::pair<u64, u64>> found;
  if (kMax >= 1)
    found.emplace(1, 1); // C(n+1,1) = 2n forces n = 1
  for (u64 k = 2; k <= kMax; ++k) {
    for (u64 n = k * k + 1; n < 2 * k * k; ++n) {
      if (binomialDoublingHolds(n, k))
        found.emplace(n, k);
    }
    if (k <= 10) {
      for (u64 n = 1; n <= 4 * k * k; ++n) {
        if (binomialDoublingHolds(n, k))
          found.emplace(n, k);
      }
    }
  }
  return {found.begin(), found.end()};
}

FactoredNat wreathOrder(u64 a, u64 b)
{
  if (a < 1 || b < 1)
    throw Error(ErrorCode::InvalidArgument, "wreath parameters must be positive");
  return mul(pow(factorialFactored(a), b), factorialFactored(b));
}

bool primeCountBoundCheck(u64 nMax)
{
  if (nMax < 2)
    throw Error(ErrorCode::InvalidArgument, "nMax must be at least 2");
  auto const &primes = primeTable(nMax);
  std::size_t idx = 0;
  u64 pi = 0;
  for (u64 n = 2; n <= nMax; ++n) {
    while (idx < primes.size() && primes[idx] <= n) {
      ++pi;
      ++idx;
    }
    double bound = 1.25506 * static_cast<double>(n) / std::log(static_cast<double>(n));
    if (!(static_cast<double>(pi) < bound))
      return false;
  }
  return true;
}

bool bertrandCheck(u64 nMax)
{
  auto const &primes = primeTable(nMax);
  std::size_t idx = 0;
  u64 largestBelow = 0; // largest prime strictly below n
  for (u64 n = 3; n <= nMax; ++n) {
    while (idx < primes.size() && primes[idx] < n)
      largestBelow = primes[idx++];
    if (!(2 * largestBelow > n))
      return false;
  }
  return true;
}

} // namespace bcl
