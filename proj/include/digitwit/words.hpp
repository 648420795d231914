#pragma once

// Digit strings over {0, ..., q-1}: canonical expansions, overlapping
// occurrence counting, concatenation powers and self-overlap counts.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "digitwit/bigint.hpp"

namespace digitwit {

using Digit = std::uint32_t;

/// A finite word over the alphabet {0, ..., base-1}, most significant digit
/// first. Leading zeros are part of the word. The empty word exists only as
/// the result of concat_power(w, 0).
class Word {
 public:
  Word(std::uint64_t base, std::vector<Digit> digits);

  std::uint64_t base() const { return base_; }
  std::size_t length() const { return digits_.size(); }
  bool empty() const { return digits_.empty(); }
  std::span<const Digit> digits() const { return digits_; }
  Digit operator[](std::size_t i) const { return digits_[i]; }

  bool all_zero() const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  std::uint64_t base_;
  std::vector<Digit> digits_;
};

/// Canonical base-q expansion of a nonnegative integer: no leading zero,
/// except that 0 expands to the single digit 0.
class Expansion {
 public:
  std::uint64_t base() const { return word_.base(); }
  std::size_t length() const { return word_.length(); }
  std::span<const Digit> digits() const { return word_.digits(); }
  const Word& word() const { return word_; }
  /// Position of the most significant digit, floor(log_q n); 0 for n = 0.
  std::size_t msd_position() const { return word_.length() - 1; }

 private:
  friend Expansion expansion(const Integer& n, std::uint64_t base);
  explicit Expansion(Word word) : word_(std::move(word)) {}
  Word word_;
};

Expansion expansion(const Integer& n, std::uint64_t base);

/// Low `width` digits of n in base q, zero padded on the left (n mod q^width).
Word low_digits(const Integer& n, std::uint64_t base, std::size_t width);

/// Number of base-q digits of n (1 for n = 0).
std::size_t digit_length(const Integer& n, std::uint64_t base);

/// Overlapping occurrences of `needle` in `haystack` (linear time).
std::uint64_t count_matches(std::span<const Digit> needle, std::span<const Digit> haystack);

/// Same count, with the haystack split into chunks overlapping by
/// needle.size()-1 digits and scanned on `threads` worker threads.
std::uint64_t count_matches_parallel(std::span<const Digit> needle, std::span<const Digit> haystack,
                                     unsigned threads);

std::uint64_t occurrences(const Word& w, const Word& v);
std::uint64_t occurrences(const Word& w, const Expansion& v);

/// e_q(w; n): occurrences of w in the canonical base-q expansion of n.
std::uint64_t count_in_integer(const Word& w, const Integer& n, std::uint64_t base);

Word concat_power(const Word& w, std::size_t k);
/// Concatenation; both words must share a base.
Word operator+(const Word& lhs, const Word& rhs);

/// Occurrences of w in ww.
std::uint64_t gamma_prime(const Word& w);
/// gamma'(w) - 1; always in [1, length(w)].
std::uint64_t gamma(const Word& w);

struct LeadingZeroSplit {
  std::size_t zeros;
  Word tail;
};

/// Splits w = 0^k tail with tail starting in a nonzero digit. Throws
/// std::domain_error when w consists of zeros only.
LeadingZeroSplit split_leading_zeros(const Word& w);

/// Integer whose (possibly non-canonical) base-q digit string is v.
Integer word_value(const Word& v, std::uint64_t base);

/// Text form: plain digits when q <= 10 ("20210"), comma-separated decimal
/// letters otherwise ("19,3,0").
Word parse_word(std::string_view text, std::uint64_t base);
std::string format_word(const Word& w);

}  // namespace digitwit
