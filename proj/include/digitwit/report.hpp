#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "digitwit/bigint.hpp"
#include "digitwit/int_poly.hpp"
#include "digitwit/lifting.hpp"
#include "digitwit/words.hpp"

namespace digitwit {

inline constexpr const char* kReportFormat = "digit-witness/1";

/// A polynomial took a negative value at a point the construction evaluated.
class ContractError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class WitnessKind { Poly, Exp, ZeroBlock };

std::string to_string(WitnessKind kind);

struct PrimeLift {
  std::uint64_t prime;
  std::size_t precision;
  Integer root;
  LiftTrace trace;
};

/// Extra data carried by exponential witnesses.
struct ExpDetails {
  Integer m;
  Integer m_prime;  // p-free part of m; all counting happens on powers of m'
  std::size_t s = 0;
  DiffData diff;
  Integer xi;  // root of (1 + a p^e)^u = b modulo p^L'
  std::uint64_t digit_budget = 0;
  bool materialized = false;
  double log_witness = 0;     // ln N'
  double log_size_bound = 0;  // ln(2(p-1)) + (c+1) ln p + l L ln p
};

struct WitnessReport {
  WitnessKind kind = WitnessKind::Poly;

  // inputs
  std::uint64_t base = 0;  // q, or p for exponential witnesses
  Word word{2, {}};
  std::size_t scale = 0;   // L
  std::optional<IntPoly> poly;

  // parameters
  std::optional<Integer> base_point;   // a0, or the shift a for zero blocks
  std::size_t padding = 0;             // c
  std::size_t window_length = 0;       // L'
  Integer target;                      // b
  std::ptrdiff_t size_exponent_excess = 0;  // L' - l L
  std::size_t zero_block_constant = 0;      // C_f

  // witness
  Integer witness;                  // N
  std::optional<Integer> witness_prime;  // N' = (p-1) N
  std::vector<PrimeLift> lifts;

  // verification
  std::optional<bool> verified_congruence;
  Word expansion_tail{2, {}};
  std::uint64_t window_count = 0;
  std::optional<std::uint64_t> occurrence_count;
  std::uint64_t claimed_bound = 0;
  std::optional<double> ratio;
  double theorem_target = 0;
  std::optional<double> zero_block_ceiling;  // d / ln q
  bool verified = false;
  std::vector<std::string> warnings;

  std::optional<ExpDetails> exp;
};

/// JSON document; integers are decimal strings, key order is fixed.
std::string to_json(const WitnessReport& report);

}  // namespace digitwit
