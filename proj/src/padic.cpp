#include "digitwit/padic.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace digitwit {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

std::size_t valuation_unchecked(const Integer& n, std::uint64_t p) {
  if (n == 0) return kInfiniteValuation;
  Integer rest;
  return mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t());
}

void check_g_parameters(const Integer& a, std::size_t e, std::uint64_t p) {
  require_prime(p);
  if (e < 1) throw std::invalid_argument("exponent e must be at least 1");
  if (mpz_divisible_ui_p(a.get_mpz_t(), p)) throw std::invalid_argument("p divides a");
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::uint64_t d = 5; d <= n / d; d += 6) {
    if (n % d == 0 || n % (d + 2) == 0) return false;
  }
  return true;
}

std::size_t valuation(const Integer& n, std::uint64_t p) {
  require_prime(p);
  return valuation_unchecked(n, p);
}

BaseFactorization factorize(std::uint64_t q) {
  if (q < 2) throw std::invalid_argument("base must be at least 2");
  BaseFactorization factors;
  for (std::uint64_t d = 2; d <= q / d; ++d) {
    if (q % d != 0) continue;
    PrimePower pp{d, 0};
    while (q % d == 0) {
      q /= d;
      ++pp.exponent;
    }
    factors.push_back(pp);
  }
  if (q > 1) factors.push_back({q, 1});
  return factors;
}

Congruence crt(std::span<const Congruence> system) {
  Congruence acc{0, 1};
  for (const auto& [residue, modulus] : system) {
    if (modulus <= 0) throw std::invalid_argument("CRT modulus must be positive");
    if (gcd(acc.modulus, modulus) != 1) throw std::invalid_argument("CRT moduli are not pairwise coprime");
    // x = acc.residue + acc.modulus * k with k = (r - acc.residue) / acc.modulus mod M.
    Integer inverse;
    mpz_invert(inverse.get_mpz_t(), acc.modulus.get_mpz_t(), modulus.get_mpz_t());
    if (modulus == 1) inverse = 0;
    const Integer k = mod_floor((residue - acc.residue) * inverse, modulus);
    acc.residue += acc.modulus * k;
    acc.modulus *= modulus;
    acc.residue = mod_floor(acc.residue, acc.modulus);
  }
  return acc;
}

PadicApprox::PadicApprox(std::uint64_t prime, std::size_t precision, const Integer& representative)
    : prime_(prime), precision_(precision) {
  require_prime(prime);
  residue_ = mod_floor(representative, power(prime, precision));
}

PadicApprox PadicApprox::truncated(std::size_t precision) const {
  if (precision > precision_) throw std::invalid_argument("cannot raise the precision of a p-adic approximation");
  return PadicApprox(prime_, precision, residue_);
}

namespace {

std::size_t common_precision(const PadicApprox& x, const PadicApprox& y) {
  if (x.prime() != y.prime()) throw std::invalid_argument("p-adic operands over different primes");
  return std::min(x.precision(), y.precision());
}

}  // namespace

PadicApprox operator+(const PadicApprox& x, const PadicApprox& y) {
  return PadicApprox(x.prime_, common_precision(x, y), x.residue_ + y.residue_);
}

PadicApprox operator-(const PadicApprox& x, const PadicApprox& y) {
  return PadicApprox(x.prime_, common_precision(x, y), x.residue_ - y.residue_);
}

PadicApprox operator*(const PadicApprox& x, const PadicApprox& y) {
  return PadicApprox(x.prime_, common_precision(x, y), x.residue_ * y.residue_);
}

SquaringRegime squaring_regime(const Integer& a) {
  if (mpz_even_p(a.get_mpz_t())) throw std::invalid_argument("squaring regime needs odd a");
  const Integer square = (1 + 2 * a) * (1 + 2 * a) - 1;
  if (square == 0) throw std::invalid_argument("(1 + 2a)^2 = 1");
  SquaringRegime regime{0, valuation_unchecked(square, 2)};
  mpz_tdiv_q_2exp(regime.a_prime.get_mpz_t(), square.get_mpz_t(), regime.t);
  return regime;
}

std::size_t exponent_precision(const Integer& a, std::size_t e, std::uint64_t p, std::size_t target_precision) {
  check_g_parameters(a, e, p);
  if (e >= 2 || p >= 3) return target_precision > e ? target_precision - e : 0;
  // p = 2, e = 1: g(u + 2^k h) = g(u) (1 + a' 2^t)^(h 2^(k-1)) needs k >= 1.
  if (target_precision <= 1) return 0;
  const std::size_t t = squaring_regime(a).t;
  return target_precision + 1 > t ? std::max<std::size_t>(target_precision + 1 - t, 1) : 1;
}

Integer pow_g(const Integer& a, std::size_t e, std::uint64_t p, const Integer& u, std::size_t target_precision) {
  const std::size_t needed = exponent_precision(a, e, p, target_precision);
  const Integer modulus = power(p, target_precision);
  const Integer base = mod_floor(1 + a * power(p, e), modulus);
  const Integer exponent = mod_floor(u, power(p, needed));
  Integer result;
  mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), modulus.get_mpz_t());
  return result;
}

Integer pow_g(const Integer& a, std::size_t e, std::uint64_t p, const PadicApprox& u, std::size_t target_precision) {
  if (u.prime() != p) throw std::invalid_argument("exponent lives over a different prime");
  const std::size_t needed = exponent_precision(a, e, p, target_precision);
  if (u.precision() < needed) {
    throw std::invalid_argument("exponent known to " + std::to_string(u.precision()) + " digits, " +
                                std::to_string(needed) + " needed");
  }
  return pow_g(a, e, p, u.residue(), target_precision);
}

}  // namespace digitwit
