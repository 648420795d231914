#include <doctest.h>

#include <random>

#include "digitwit/padic.hpp"
#include "oracles.hpp"

using namespace digitwit;

namespace {

const std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13};

Integer random_integer(std::mt19937_64& rng, std::uint64_t bound) {
  return Integer(static_cast<unsigned long>(rng() % bound));
}

}  // namespace

TEST_CASE("is_prime") {
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(97));
  CHECK_FALSE(is_prime(91));
  CHECK(is_prime(4294967291ull));
  CHECK_FALSE(is_prime(4294967297ull));
}

TEST_CASE("valuation") {
  CHECK(valuation(12, 2) == 2);
  CHECK(valuation(12, 3) == 1);
  CHECK(valuation(-48, 2) == 4);
  CHECK(valuation(0, 5) == kInfiniteValuation);
  CHECK_THROWS_AS(valuation(12, 4), std::invalid_argument);
}

TEST_CASE("valuation is additive on products") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = kPrimes[rng() % 6];
    const Integer a = random_integer(rng, 100000) + 1;
    const Integer b = random_integer(rng, 100000) + 1;
    CHECK(valuation(a * b, p) == valuation(a, p) + valuation(b, p));
    CHECK(valuation(a, p) == oracle::vp(a, p));
  }
}

TEST_CASE("factorize") {
  CHECK(factorize(10) == BaseFactorization{{2, 1}, {5, 1}});
  CHECK(factorize(8) == BaseFactorization{{2, 3}});
  CHECK(factorize(360) == BaseFactorization{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(2) == BaseFactorization{{2, 1}});
  CHECK_THROWS_AS(factorize(1), std::invalid_argument);
  for (std::uint64_t q = 2; q < 2000; ++q) {
    std::uint64_t product = 1;
    std::uint64_t previous = 0;
    for (const auto& [p, e] : factorize(q)) {
      CHECK(is_prime(p));
      CHECK(p > previous);
      previous = p;
      for (std::size_t i = 0; i < e; ++i) product *= p;
    }
    CHECK(product == q);
  }
}

TEST_CASE("crt") {
  const std::vector<Congruence> pair{{1, 2}, {2, 5}};
  const auto x = crt(pair);
  CHECK(x.residue == 7);
  CHECK(x.modulus == 10);
  const std::vector<Congruence> single{{4, 9}};
  CHECK(crt(single).residue == 4);
  const std::vector<Congruence> bad{{1, 4}, {1, 6}};
  CHECK_THROWS_AS(crt(bad), std::invalid_argument);

  std::mt19937_64 rng(31);
  const Integer moduli[][3] = {{8, 27, 25}, {power(2, 40), power(3, 30), power(5, 20)}, {7, 11, 13}};
  for (const auto& m : moduli) {
    for (int trial = 0; trial < 30; ++trial) {
      std::vector<Congruence> system;
      for (const auto& mod : m) system.push_back({mod_floor(Integer(static_cast<long>(rng() >> 2)) - 1000, mod), mod});
      const auto solution = crt(system);
      CHECK(solution.residue >= 0);
      CHECK(solution.residue < solution.modulus);
      for (const auto& [r, mod] : system) CHECK(mod_floor(solution.residue - r, mod) == 0);
    }
  }
}

TEST_CASE("PadicApprox keeps the smaller precision") {
  const PadicApprox x(3, 5, 100);
  const PadicApprox y(3, 3, -1);
  CHECK(x.residue() == 100);
  CHECK(y.residue() == 26);
  CHECK((x + y).precision() == 3);
  CHECK((x + y).residue() == (100 + 26) % 27);
  CHECK((x * y).residue() == (100 * 26) % 27);
  CHECK((x - y).residue() == mod_floor(100 - 26, 27));
  CHECK(x.truncated(2).residue() == 1);
  CHECK_THROWS_AS(y.truncated(4), std::invalid_argument);
  CHECK_THROWS_AS(x + PadicApprox(5, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(PadicApprox(6, 3, 1), std::invalid_argument);
}

TEST_CASE("pow_g examples") {
  CHECK(pow_g(1, 1, 3, Integer(0), 5) == 1);
  CHECK(pow_g(1, 1, 3, Integer(3), 3) == oracle::slow_powmod(4, 3, 27));
  CHECK(pow_g(1, 1, 3, Integer(3), 3) == 10);
  // (1 + a p^e)^(p^k) = 1 + a p^(k+e) mod p^(k+e+1)
  for (std::uint64_t p : {3, 5, 7}) {
    for (std::size_t k = 0; k <= 4; ++k) {
      const std::size_t K = k + 2;
      const Integer expected = mod_floor(1 + 2 * power(p, k + 1), power(p, K));
      CHECK(pow_g(2, 1, p, power(p, k), K) == expected);
    }
  }
  CHECK_THROWS_AS(pow_g(3, 1, 3, Integer(1), 4), std::invalid_argument);
  CHECK_THROWS_AS(pow_g(1, 0, 3, Integer(1), 4), std::invalid_argument);
}

TEST_CASE("pow_g agrees with unreduced modular exponentiation") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t p = kPrimes[rng() % 6];
    const std::size_t e = 1 + rng() % 3;
    Integer a = random_integer(rng, 50) + 1;
    if (a % static_cast<unsigned long>(p) == 0) a += 1;
    const std::size_t K = 1 + rng() % 12;
    const Integer u = random_integer(rng, 1u << 20);
    const Integer modulus = power(p, K);
    Integer expected;
    const Integer base = 1 + a * power(p, e);
    mpz_powm(expected.get_mpz_t(), base.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    CHECK(pow_g(a, e, p, u, K) == expected);
    const std::size_t needed = exponent_precision(a, e, p, K);
    CHECK(pow_g(a, e, p, PadicApprox(p, needed, u), K) == expected);
    if (needed > 0) CHECK_THROWS_AS(pow_g(a, e, p, PadicApprox(p, needed - 1, u), K), std::invalid_argument);
  }
}

TEST_CASE("pow_g reads negative exponents in Z_p") {
  // 4^(-1) in Z_3: 4 * 4^(-1) = 1 mod 3^6.
  const Integer inv = pow_g(1, 1, 3, Integer(-1), 6);
  CHECK(mod_floor(inv * 4, power(3, 6)) == 1);
}

TEST_CASE("power shift: (1 + a p^e)^(h p^k) = 1 + a h p^(k+e) mod p^(k+e+1)") {
  std::mt19937_64 rng(41);
  int checked = 0;
  while (checked < 300) {
    const std::uint64_t p = kPrimes[rng() % 6];
    const std::size_t e = 1 + rng() % 3;
    if (p == 2 && e == 1) continue;
    Integer a = random_integer(rng, 1000) + 1;
    if (a % static_cast<unsigned long>(p) == 0) continue;
    const Integer h = random_integer(rng, p * p * p);
    const std::size_t k = rng() % 7;
    const Integer modulus = power(p, k + e + 1);
    const Integer exponent = h * power(p, k);
    const Integer base = 1 + a * power(p, e);
    Integer lhs;
    mpz_powm(lhs.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
    CHECK(lhs == mod_floor(1 + a * h * power(p, k + e), modulus));
    ++checked;
  }
}

TEST_CASE("close exponents give close powers") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t p = kPrimes[rng() % 6];
    const std::size_t e = 1 + rng() % 2;
    Integer a = random_integer(rng, 1000) + 1;
    if (a % static_cast<unsigned long>(p) == 0) a += 1;
    const std::size_t N = rng() % 8;
    const Integer u = random_integer(rng, 1u << 24);
    const Integer u2 = u + power(p, N) * (random_integer(rng, 1000) + 1);
    const Integer modulus = power(p, N + 1);
    const Integer base = 1 + a * power(p, e);
    Integer gu, gu2;
    mpz_powm(gu.get_mpz_t(), base.get_mpz_t(), u.get_mpz_t(), modulus.get_mpz_t());
    mpz_powm(gu2.get_mpz_t(), base.get_mpz_t(), u2.get_mpz_t(), modulus.get_mpz_t());
    CHECK(gu == gu2);
  }
}

TEST_CASE("squaring regime") {
  const auto r = squaring_regime(1);
  CHECK(r.a_prime == 1);
  CHECK(r.t == 3);
  for (long a = 1; a < 200; a += 2) {
    const auto reg = squaring_regime(a);
    CHECK(reg.t >= 3);
    CHECK(reg.a_prime % 2 != 0);
    CHECK((1 + 2 * a) * (1 + 2 * a) == 1 + reg.a_prime * power(2, reg.t));
  }
  CHECK_THROWS_AS(squaring_regime(2), std::invalid_argument);
}
