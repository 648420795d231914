#include "digitwit/words.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <map>
#include <stdexcept>

namespace digitwit {

namespace {

void check_base(std::uint64_t base) {
  if (base < 2) throw std::invalid_argument("base must be at least 2");
}

void check_same_base(const Word& a, const Word& b) {
  if (a.base() != b.base()) throw std::invalid_argument("words over different bases");
}

void check_nonempty(const Word& w) {
  if (w.empty()) throw std::invalid_argument("empty word is not a valid pattern");
}

Digit gmp_char_value(char ch, std::uint64_t base) {
  if (ch >= '0' && ch <= '9') return static_cast<Digit>(ch - '0');
  if (base <= 36) return static_cast<Digit>(ch - 'a' + 10);
  if (ch >= 'A' && ch <= 'Z') return static_cast<Digit>(ch - 'A' + 10);
  return static_cast<Digit>(ch - 'a' + 36);
}

// Writes exactly `width` digits of n (0 <= n < q^width) into out, most
// significant first.
class DigitWriter {
 public:
  explicit DigitWriter(std::uint64_t base) : base_(base) {}

  void write(const Integer& n, std::size_t width, Digit* out) {
    if (width <= 48) {
      Integer rest = n;
      for (std::size_t i = width; i-- > 0;) {
        out[i] = static_cast<Digit>(mpz_fdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), base_));
      }
      return;
    }
    const std::size_t low = width / 2;
    Integer high, rest;
    mpz_fdiv_qr(high.get_mpz_t(), rest.get_mpz_t(), n.get_mpz_t(), pow(low).get_mpz_t());
    write(high, width - low, out);
    write(rest, low, out + (width - low));
  }

 private:
  const Integer& pow(std::size_t k) {
    auto it = powers_.find(k);
    if (it == powers_.end()) it = powers_.emplace(k, power(base_, k)).first;
    return it->second;
  }

  std::uint64_t base_;
  std::map<std::size_t, Integer> powers_;
};

std::vector<Digit> canonical_digits(const Integer& n, std::uint64_t base) {
  if (n == 0) return {0};
  if (base <= 62) {
    const std::string text = n.get_str(static_cast<int>(base));
    std::vector<Digit> digits(text.size());
    std::transform(text.begin(), text.end(), digits.begin(), [base](char ch) { return gmp_char_value(ch, base); });
    return digits;
  }
  std::vector<Digit> digits(digit_length(n, base));
  DigitWriter(base).write(n, digits.size(), digits.data());
  return digits;
}

std::vector<std::size_t> failure_table(std::span<const Digit> needle) {
  std::vector<std::size_t> fail(needle.size(), 0);
  for (std::size_t i = 1, k = 0; i < needle.size(); ++i) {
    while (k > 0 && needle[i] != needle[k]) k = fail[k - 1];
    if (needle[i] == needle[k]) ++k;
    fail[i] = k;
  }
  return fail;
}

std::uint64_t kmp_count(std::span<const Digit> needle, const std::vector<std::size_t>& fail,
                        std::span<const Digit> haystack) {
  std::uint64_t count = 0;
  std::size_t k = 0;
  for (Digit d : haystack) {
    while (k > 0 && d != needle[k]) k = fail[k - 1];
    if (d == needle[k]) ++k;
    if (k == needle.size()) {
      ++count;
      k = fail[k - 1];
    }
  }
  return count;
}

}  // namespace

Word::Word(std::uint64_t base, std::vector<Digit> digits) : base_(base), digits_(std::move(digits)) {
  check_base(base);
  for (Digit d : digits_) {
    if (d >= base_) throw std::invalid_argument("digit " + std::to_string(d) + " out of range for base " + std::to_string(base_));
  }
}

bool Word::all_zero() const {
  return std::all_of(digits_.begin(), digits_.end(), [](Digit d) { return d == 0; });
}

std::size_t digit_length(const Integer& n, std::uint64_t base) {
  check_base(base);
  if (n < 0) throw std::domain_error("expansion of a negative integer");
  if (n == 0) return 1;
  // mpz_sizeinbase is exact for powers of two and may overshoot by one otherwise.
  std::size_t len;
  if (base <= 62) {
    len = mpz_sizeinbase(n.get_mpz_t(), static_cast<int>(base));
  } else {
    const double estimate = natural_log(n) / std::log(static_cast<double>(base));
    len = static_cast<std::size_t>(estimate) + 2;
  }
  while (len > 1 && power(base, len - 1) > n) --len;
  while (power(base, len) <= n) ++len;
  return len;
}

Expansion expansion(const Integer& n, std::uint64_t base) {
  check_base(base);
  if (n < 0) throw std::domain_error("expansion of a negative integer");
  return Expansion(Word(base, canonical_digits(n, base)));
}

Word low_digits(const Integer& n, std::uint64_t base, std::size_t width) {
  check_base(base);
  const Integer residue = mod_floor(n, power(base, width));
  std::vector<Digit> digits(width, 0);
  if (width > 0) DigitWriter(base).write(residue, width, digits.data());
  return Word(base, std::move(digits));
}

std::uint64_t count_matches(std::span<const Digit> needle, std::span<const Digit> haystack) {
  if (needle.empty()) throw std::invalid_argument("empty word is not a valid pattern");
  if (haystack.size() < needle.size()) return 0;
  return kmp_count(needle, failure_table(needle), haystack);
}

std::uint64_t count_matches_parallel(std::span<const Digit> needle, std::span<const Digit> haystack,
                                     unsigned threads) {
  if (needle.empty()) throw std::invalid_argument("empty word is not a valid pattern");
  const std::size_t min_chunk = 1 << 16;
  if (threads <= 1 || haystack.size() < 2 * min_chunk) return count_matches(needle, haystack);
  const auto fail = failure_table(needle);
  const std::size_t chunks = std::min<std::size_t>(threads, haystack.size() / min_chunk);
  const std::size_t step = haystack.size() / chunks;
  const std::size_t overlap = needle.size() - 1;
  std::vector<std::future<std::uint64_t>> parts;
  for (std::size_t c = 0; c < chunks; ++c) {
    // Chunk c owns match start positions [begin, end); it reads overlap extra digits.
    const std::size_t begin = c * step;
    const std::size_t end = (c + 1 == chunks) ? haystack.size() : begin + step;
    const std::size_t read_end = std::min(haystack.size(), end + overlap);
    parts.push_back(std::async(std::launch::async, [&, begin, read_end] {
      return kmp_count(needle, fail, haystack.subspan(begin, read_end - begin));
    }));
  }
  std::uint64_t total = 0;
  for (auto& part : parts) total += part.get();
  return total;
}

std::uint64_t occurrences(const Word& w, const Word& v) {
  check_nonempty(w);
  check_same_base(w, v);
  return count_matches(w.digits(), v.digits());
}

std::uint64_t occurrences(const Word& w, const Expansion& v) { return occurrences(w, v.word()); }

std::uint64_t count_in_integer(const Word& w, const Integer& n, std::uint64_t base) {
  check_nonempty(w);
  if (w.base() != base) throw std::invalid_argument("word base differs from expansion base");
  return occurrences(w, expansion(n, base));
}

Word concat_power(const Word& w, std::size_t k) {
  std::vector<Digit> digits;
  digits.reserve(w.length() * k);
  for (std::size_t i = 0; i < k; ++i) digits.insert(digits.end(), w.digits().begin(), w.digits().end());
  return Word(w.base(), std::move(digits));
}

Word operator+(const Word& lhs, const Word& rhs) {
  check_same_base(lhs, rhs);
  std::vector<Digit> digits(lhs.digits().begin(), lhs.digits().end());
  digits.insert(digits.end(), rhs.digits().begin(), rhs.digits().end());
  return Word(lhs.base(), std::move(digits));
}

std::uint64_t gamma_prime(const Word& w) {
  check_nonempty(w);
  return occurrences(w, concat_power(w, 2));
}

std::uint64_t gamma(const Word& w) { return gamma_prime(w) - 1; }

LeadingZeroSplit split_leading_zeros(const Word& w) {
  check_nonempty(w);
  const auto digits = w.digits();
  const auto first = std::find_if(digits.begin(), digits.end(), [](Digit d) { return d != 0; });
  if (first == digits.end()) throw std::domain_error("word consists of zeros only");
  return {static_cast<std::size_t>(first - digits.begin()), Word(w.base(), std::vector<Digit>(first, digits.end()))};
}

Integer word_value(const Word& v, std::uint64_t base) {
  if (v.base() != base) throw std::invalid_argument("word base differs from requested base");
  if (v.empty()) return 0;
  if (base <= 62) {
    std::string text(v.length(), '0');
    for (std::size_t i = 0; i < v.length(); ++i) {
      const Digit d = v[i];
      text[i] = d < 10 ? char('0' + d) : (base <= 36 ? char('a' + d - 10) : (d < 36 ? char('A' + d - 10) : char('a' + d - 36)));
    }
    return Integer(text, static_cast<int>(base));
  }
  Integer value = 0;
  for (Digit d : v.digits()) {
    value *= static_cast<unsigned long>(base);
    value += static_cast<unsigned long>(d);
  }
  return value;
}

Word parse_word(std::string_view text, std::uint64_t base) {
  check_base(base);
  if (text.empty()) throw std::invalid_argument("empty word");
  std::vector<Digit> digits;
  if (base <= 10) {
    for (char ch : text) {
      if (ch < '0' || ch > '9') throw std::invalid_argument("malformed word: " + std::string(text));
      digits.push_back(static_cast<Digit>(ch - '0'));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = std::min(text.find(',', pos), text.size());
      const auto field = text.substr(pos, comma - pos);
      if (field.empty() || field.size() > 10 || field.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("malformed word: " + std::string(text));
      digits.push_back(static_cast<Digit>(std::stoull(std::string(field))));
      pos = comma + 1;
    }
  }
  return Word(base, std::move(digits));
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.length(); ++i) {
    if (w.base() <= 10) {
      out.push_back(static_cast<char>('0' + w[i]));
    } else {
      if (i > 0) out.push_back(',');
      out += std::to_string(w[i]);
    }
  }
  return out;
}

}  // namespace digitwit
