#include <doctest.h>

#include <cmath>
#include <random>

#include "bcl/error.hpp"
#include "bcl/factnum.hpp"

using namespace bcl;

namespace
{

u64 bruteValuation(u64 n, u64 p)
{
  u64 e = 0;
  for (; n % p == 0; n /= p)
    ++e;
  return e;
}

} // namespace

TEST_CASE("fromInteger round-trips sampled values")
{
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<u64> dist(1, 1000000000);
  for (int i = 0; i < 2000; ++i) {
    u64 x = dist(rng);
    FactoredNat f = FactoredNat::fromInteger(x);
    REQUIRE(f.toU64().has_value());
    CHECK(*f.toU64() == x);
    CHECK(f.toDecimal() == std::to_string(x));
  }
  CHECK(FactoredNat::fromInteger(1).isOne());
  CHECK(FactoredNat::fromInteger(1).toFactorString() == "1");
  CHECK(FactoredNat::fromInteger(360).toFactorString() == "2^3*3^2*5");
}

TEST_CASE("fromInteger rejects zero")
{
  CHECK_THROWS_AS(FactoredNat::fromInteger(0), Error);
}

TEST_CASE("valuation is additive under multiplication")
{
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<u64> dist(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    FactoredNat a = FactoredNat::fromInteger(dist(rng));
    FactoredNat b = FactoredNat::fromInteger(dist(rng));
    FactoredNat ab = mul(a, b);
    for (u64 p : {2, 3, 5, 7, 11, 13, 101})
      CHECK(valuation(ab, p) == valuation(a, p) + valuation(b, p));
    CHECK(divExact(ab, b) == a);
    CHECK(divides(a, ab));
  }
}

TEST_CASE("divExact raises NonDivisible")
{
  try {
    divExact(FactoredNat::fromInteger(6), FactoredNat::fromInteger(4));
    FAIL("expected an error");
  } catch (Error const &e) {
    CHECK(e.code() == ErrorCode::NonDivisible);
  }
}

TEST_CASE("factorBig handles large values exactly")
{
  BigInt n = BigInt(1) << 100;
  n -= 1;
  FactoredNat f = factorBig(n);
  CHECK(f.toBig() == n);
  CHECK(f.toFactorString() == "3*5^3*11*31*41*101*251*601*1801*4051*8101*268501");
}

TEST_CASE("legendre matches repeated division")
{
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
    u64 running = 0;
    for (u64 n = 1; n <= 2000; ++n) {
      running += bruteValuation(n, p);
      REQUIRE(legendre(n, p) == running);
      CHECK((p - 1) * running <= n - 1);
    }
  }
  CHECK(legendre(32, 2) == 31);
}

TEST_CASE("v_p((2n)!/n!) is at most n with equality exactly at p = 2")
{
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47})
    for (u64 n = 1; n <= 500; ++n) {
      u64 v = legendre(2 * n, p) - legendre(n, p);
      CHECK(v <= n);
      CHECK((v == n) == (p == 2));
    }
}

TEST_CASE("factorialFactored and binomialFactored")
{
  CHECK(factorialFactored(10).toDecimal() == "3628800");
  CHECK(binomialFactored(10, 3).toDecimal() == "120");
  CHECK(binomialFactored(50, 25).toDecimal() == "126410606437752");
  CHECK_THROWS_AS(binomialFactored(3, 4), Error);
}

TEST_CASE("central binomial bound")
{
  for (u64 n = 1; n <= 300; ++n)
    CHECK(centralBinomialBoundHolds(n));
}

TEST_CASE("dominant prime maximizes the prime part")
{
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> dist(2, 100000000);
  for (int i = 0; i < 500; ++i) {
    FactoredNat n = FactoredNat::fromInteger(dist(rng));
    DominantPrime d = dominantPrime(n);
    for (auto const &[p, e] : n.factors()) {
      if (p == d.prime)
        continue;
      CHECK(pPart(n, p) < d.part);
    }
    CHECK(d.part == pPart(n, d.prime));
  }
  CHECK(dominantPrime(FactoredNat::fromInteger(181440)).prime == 3);
  CHECK_THROWS_AS(dominantPrime(FactoredNat::fromInteger(1)), Error);
}

TEST_CASE("logProportion")
{
  double expected = std::log(81.0) / std::log(181440.0);
  CHECK(std::abs(logProportion(FactoredNat::fromInteger(181440)) - expected) < 1e-12);
  CHECK(logProportion(FactoredNat::fromInteger(1024)) == doctest::Approx(1.0));
}

TEST_CASE("ExactRational normalizes and parses")
{
  CHECK(ExactRational(6, -8).toString() == "-3/4");
  CHECK(ExactRational(4, 2).toString() == "2");
  CHECK(ExactRational(1, 3) + ExactRational(1, 6) == ExactRational(1, 2));
  CHECK(ExactRational::parse("7/4") == ExactRational(7, 4));
  CHECK(ExactRational::parse("-2/15") == ExactRational(-2, 15));
  CHECK_THROWS_AS(ExactRational(1, 0), Error);
}

TEST_CASE("multiplicative order and cyclotomic values")
{
  CHECK(multiplicativeOrder(2, 7) == 3);
  CHECK(multiplicativeOrder(10, 7) == 6);
  CHECK_THROWS_AS(multiplicativeOrder(6, 9), Error);
  CHECK(cyclotomicInteger(6, 2) == 3);
  CHECK(cyclotomicInteger(12, 3) == 73);
  for (u64 m = 1; m <= 12; ++m)
    for (i64 q = 2; q <= 9; ++q)
      CHECK(cyclotomicValue(m, q).toBig() == cyclotomicInteger(m, q));
}

TEST_CASE("Zsigmondy exceptions for q <= 30, m <= 20")
{
  for (u64 q = 2; q <= 30; ++q)
    for (u64 m = 2; m <= 20; ++m) {
      bool exception = (q == 2 && m == 6) || (m == 2 && ((q + 1) & q) == 0);
      CHECK(hasPrimitivePrimeDivisor(q, m) == !exception);
    }
  CHECK(zsigmondy(2, 6) == std::nullopt);
  CHECK(zsigmondy(2, 5) == std::optional<u64>(31));
  CHECK(zsigmondy(3, 4) == std::optional<u64>(5));
  CHECK_THROWS_AS(zsigmondy(2, 1), Error);
}

TEST_CASE("primitive prime divisors are congruent to 1 mod m")
{
  for (u64 q = 2; q <= 10; ++q)
    for (u64 m = 2; m <= 12; ++m) {
      auto r = zsigmondy(q, m);
      if (!r)
        continue;
      CHECK(*r % m == 1);
      CHECK(multiplicativeOrder(static_cast<i64>(q), *r) == m);
    }
}

TEST_CASE("binomial doubling equation")
{
  CHECK(binomialDoublingHolds(1, 1));
  CHECK_FALSE(binomialDoublingHolds(2, 1));
  auto sols = diophantineScan(30);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0] == std::pair<u64, u64>{1, 1});
}

TEST_CASE("wreath orders")
{
  CHECK(wreathOrder(2, 3).toDecimal() == "48");
  CHECK(wreathOrder(3, 2).toDecimal() == "72");
  CHECK(wreathOrder(2, 5) < wreathOrder(5, 2));
  for (u64 prod = 4; prod <= 60; ++prod)
    for (u64 a = 2; a <= prod; ++a)
      for (u64 x = a + 1; x <= prod; ++x)
        if (prod % a == 0 && prod % x == 0 && prod / a >= 2 && prod / x >= 2)
          CHECK(wreathOrder(a, prod / a) != wreathOrder(x, prod / x));
}

TEST_CASE("prime counting and Bertrand checks")
{
  CHECK(bertrandCheck(20000));
  CHECK(primeCountBoundCheck(20000));
  CHECK(isPrime(1000003));
  CHECK_FALSE(isPrime(1000001));
}
