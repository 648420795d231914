#pragma once

// Truncated p-adic integers and the small amount of p-adic machinery the
// witness constructions need: valuations, factoring the digit base, CRT,
// and powers of 1 + a p^e at prescribed precision.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "digitwit/bigint.hpp"

namespace digitwit {

/// Returned by valuation() for 0.
inline constexpr std::size_t kInfiniteValuation = std::numeric_limits<std::size_t>::max();

/// Deterministic primality test by trial division.
bool is_prime(std::uint64_t n);

/// v_p(n); kInfiniteValuation for n = 0. Throws std::invalid_argument if p
/// is not prime.
std::size_t valuation(const Integer& n, std::uint64_t p);

struct PrimePower {
  std::uint64_t prime;
  std::size_t exponent;
  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with strictly increasing primes.
using BaseFactorization = std::vector<PrimePower>;

BaseFactorization factorize(std::uint64_t q);

struct Congruence {
  Integer residue;
  Integer modulus;
};

/// The unique x in [0, prod M_i) with x = r_i (mod M_i). Moduli must be
/// positive and pairwise coprime (std::invalid_argument otherwise).
Congruence crt(std::span<const Congruence> system);

/// An element of Z_p known modulo p^precision.
class PadicApprox {
 public:
  PadicApprox(std::uint64_t prime, std::size_t precision, const Integer& representative);

  std::uint64_t prime() const { return prime_; }
  std::size_t precision() const { return precision_; }
  /// Least nonnegative residue modulo p^precision.
  const Integer& residue() const { return residue_; }
  Integer modulus() const { return power(prime_, precision_); }

  PadicApprox truncated(std::size_t precision) const;

  friend PadicApprox operator+(const PadicApprox& x, const PadicApprox& y);
  friend PadicApprox operator-(const PadicApprox& x, const PadicApprox& y);
  friend PadicApprox operator*(const PadicApprox& x, const PadicApprox& y);
  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;

 private:
  std::uint64_t prime_;
  std::size_t precision_;
  Integer residue_;
};

/// For odd a, writes (1 + 2a)^2 = 1 + a' 2^t with a' odd; t >= 3.
struct SquaringRegime {
  Integer a_prime;
  std::size_t t;
};

SquaringRegime squaring_regime(const Integer& a);

/// Number of p-adic digits of the exponent u that determine
/// (1 + a p^e)^u modulo p^K.
std::size_t exponent_precision(const Integer& a, std::size_t e, std::uint64_t p, std::size_t target_precision);

/// (1 + a p^e)^u mod p^K for an integer exponent (any sign; read in Z_p).
Integer pow_g(const Integer& a, std::size_t e, std::uint64_t p, const Integer& u, std::size_t target_precision);

/// Same, for a truncated exponent. Throws std::invalid_argument when u is
/// not known to exponent_precision(a, e, p, K) digits.
Integer pow_g(const Integer& a, std::size_t e, std::uint64_t p, const PadicApprox& u, std::size_t target_precision);

}  // namespace digitwit
