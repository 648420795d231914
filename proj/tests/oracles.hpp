#pragma once

// Reference implementations used only by tests. They are deliberately naive
// and share no code with the library routines they check.

#include <cstdint>
#include <random>
#include <vector>

#include "digitwit/bigint.hpp"
#include "digitwit/words.hpp"

namespace oracle {

using digitwit::Digit;
using digitwit::Integer;

/// Base-q digits of n >= 0 by repeated division, most significant first.
inline std::vector<Digit> digits_of(Integer n, std::uint64_t q) {
  if (n == 0) return {0};
  std::vector<Digit> out;
  const Integer qq(static_cast<unsigned long>(q));
  while (n > 0) {
    const Integer r = n % qq;
    out.push_back(static_cast<Digit>(r.get_ui()));
    n /= qq;
  }
  return {out.rbegin(), out.rend()};
}

/// Position-by-position overlapping match count.
inline std::uint64_t scan_count(const std::vector<Digit>& needle, const std::vector<Digit>& hay) {
  std::uint64_t count = 0;
  if (needle.empty() || hay.size() < needle.size()) return 0;
  for (std::size_t i = 0; i + needle.size() <= hay.size(); ++i) {
    bool match = true;
    for (std::size_t k = 0; k < needle.size() && match; ++k) match = hay[i + k] == needle[k];
    count += match;
  }
  return count;
}

/// Horner evaluation of a digit string.
inline Integer horner(const std::vector<Digit>& digits, std::uint64_t q) {
  Integer value = 0;
  for (Digit d : digits) value = value * static_cast<unsigned long>(q) + static_cast<unsigned long>(d);
  return value;
}

/// x^k mod m by repeated multiplication (k small).
inline Integer slow_powmod(const Integer& x, std::uint64_t k, const Integer& m) {
  Integer acc = 1 % m;
  for (std::uint64_t i = 0; i < k; ++i) acc = (acc * x) % m;
  return acc;
}

inline std::size_t vp(Integer n, std::uint64_t p) {
  if (n == 0) return SIZE_MAX;
  std::size_t k = 0;
  const Integer pp(static_cast<unsigned long>(p));
  while (n % pp == 0) {
    n /= pp;
    ++k;
  }
  return k;
}

inline std::vector<Digit> random_digits(std::mt19937_64& rng, std::uint64_t q, std::size_t len) {
  std::vector<Digit> out(len);
  for (auto& d : out) d = static_cast<Digit>(rng() % q);
  return out;
}

inline std::vector<Digit> repeat(const std::vector<Digit>& w, std::size_t k) {
  std::vector<Digit> out;
  for (std::size_t i = 0; i < k; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace oracle
