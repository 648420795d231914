#pragma once

// Witnesses n for which the base-p expansion of m^n ends in w^L 0^c 1:
// the exponent is found by lifting a root of u -> m^((p-1)u) - b in Z_p.

#include <cstddef>
#include <cstdint>

#include "digitwit/bigint.hpp"
#include "digitwit/report.hpp"
#include "digitwit/words.hpp"

namespace digitwit {

inline constexpr std::uint64_t kDefaultDigitBudget = 10'000'000;

struct PFreePart {
  Integer m_prime;
  std::size_t s;  // m = m' p^s
};

/// Throws std::domain_error when m is a power of p.
PFreePart strip_p_part(const Integer& m, std::uint64_t p);

struct ExpTarget {
  Integer b;                  // value of w^L 0^c 1 in base p
  std::size_t window_length;  // L' = l L + c + 1
};

ExpTarget exp_target(const Word& w, std::size_t L, std::size_t c, std::uint64_t p);

struct ExpWitnessOptions {
  std::uint64_t digit_budget = kDefaultDigitBudget;
  unsigned threads = 0;  // 0: hardware concurrency
};

/// N = smallest integer >= p^L' congruent to the lifted root, N' = (p-1) N.
/// The congruence m'^N' = b (mod p^L') is rechecked by modular
/// exponentiation; the full expansion of m'^N' is scanned when it fits the
/// digit budget.
WitnessReport construct_exp_witness(const Integer& m, std::uint64_t p, const Word& w, std::size_t L,
                                    const ExpWitnessOptions& options = {});

}  // namespace digitwit
