#include <doctest.h>

#include <random>

#include "digitwit/words.hpp"
#include "oracles.hpp"

using namespace digitwit;

namespace {

Word W(const char* text, std::uint64_t q = 10) { return parse_word(text, q); }

std::vector<Digit> to_vec(const Word& w) { return {w.digits().begin(), w.digits().end()}; }

}  // namespace

TEST_CASE("expansion of worked examples") {
  CHECK(format_word(expansion(20202, 10).word()) == "20202");
  CHECK(format_word(expansion(0, 7).word()) == "0");
  for (std::uint64_t q : {2, 3, 10, 16, 100}) {
    const Expansion e = expansion(power(q, 5), q);
    REQUIRE(e.length() == 6);
    CHECK(e.digits()[0] == 1);
    for (std::size_t i = 1; i < 6; ++i) CHECK(e.digits()[i] == 0);
    CHECK(e.msd_position() == 5);
  }
}

TEST_CASE("expansion agrees with repeated division in small and large bases") {
  std::mt19937_64 rng(7);
  for (std::uint64_t q : {2ull, 3ull, 7ull, 10ull, 36ull, 37ull, 62ull, 63ull, 1000ull, 4294967291ull}) {
    for (int trial = 0; trial < 40; ++trial) {
      Integer n = 0;
      const int limbs = 1 + static_cast<int>(rng() % 40);
      for (int i = 0; i < limbs; ++i) n = (n << 64) + Integer(static_cast<unsigned long>(rng()));
      const Expansion e = expansion(n, q);
      CHECK(to_vec(e.word()) == oracle::digits_of(n, q));
      CHECK(word_value(e.word(), q) == n);
      CHECK(digit_length(n, q) == e.length());
      CHECK(e.digits()[0] != 0);
    }
  }
}

TEST_CASE("expansion rejects invalid input") {
  CHECK_THROWS_AS(expansion(5, 1), std::invalid_argument);
  CHECK_THROWS_AS(expansion(-5, 10), std::domain_error);
}

TEST_CASE("low_digits pads on the left") {
  CHECK(format_word(low_digits(2, 10, 4)) == "0002");
  CHECK(format_word(low_digits(123456, 10, 3)) == "456");
  CHECK(format_word(low_digits(0, 10, 0)).empty());
}

TEST_CASE("occurrences of worked examples") {
  CHECK(occurrences(W("202"), W("20202")) == 2);
  CHECK(occurrences(W("4711"), W("4711")) == 1);
  const auto hay = std::vector<Digit>(6, 1);
  CHECK(occurrences(W("11"), W("111111")) == oracle::scan_count({1, 1}, hay));
  CHECK(occurrences(W("11"), W("111111")) == 5);
  CHECK(occurrences(W("202"), expansion(20202, 10)) == 2);
}

TEST_CASE("occurrences agree with the position scan on random words") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::uint64_t q = 2 + rng() % 4;
    const auto needle = oracle::random_digits(rng, q, 1 + rng() % 6);
    const auto hay = oracle::random_digits(rng, q, rng() % 1001);
    CHECK(occurrences(Word(q, needle), Word(q, hay)) == oracle::scan_count(needle, hay));
  }
}

TEST_CASE("parallel counting matches the serial count across chunk seams") {
  std::mt19937_64 rng(13);
  for (std::size_t len : {1, 3, 5}) {
    auto hay = oracle::random_digits(rng, 2, 1 << 19);
    const auto needle = std::vector<Digit>(len, 1);
    const auto serial = count_matches(needle, hay);
    for (unsigned threads : {1u, 2u, 3u, 7u, 16u}) CHECK(count_matches_parallel(needle, hay, threads) == serial);
  }
  // A run of ones crossing every seam.
  std::vector<Digit> ones(1 << 19, 1);
  CHECK(count_matches_parallel(std::vector<Digit>(4, 1), ones, 8) == ones.size() - 3);
}

TEST_CASE("counting entry points reject empty patterns and base mismatches") {
  const Word empty = concat_power(W("12"), 0);
  CHECK(empty.empty());
  CHECK_THROWS_AS(occurrences(empty, W("12")), std::invalid_argument);
  CHECK_THROWS_AS(occurrences(W("1", 2), W("1", 3)), std::invalid_argument);
  CHECK_THROWS_AS(count_in_integer(W("1", 2), 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(gamma(empty), std::invalid_argument);
}

TEST_CASE("count_in_integer") {
  CHECK(count_in_integer(W("202"), 20202, 10) == 2);
  CHECK(count_in_integer(W("5"), 0, 10) == 0);
  const Integer n = power(3, 7);
  CHECK(count_in_integer(W("12", 3), n, 3) == oracle::scan_count({1, 2}, oracle::digits_of(n, 3)));
  const Integer big = power(2, 100);
  CHECK(count_in_integer(W("12", 3), big, 3) == oracle::scan_count({1, 2}, oracle::digits_of(big, 3)));
}

TEST_CASE("concat_power") {
  CHECK(format_word(concat_power(W("20"), 3)) == "202020");
  CHECK(concat_power(W("31"), 1) == W("31"));
  CHECK(concat_power(W("31"), 0).length() == 0);
  CHECK(concat_power(W("123"), 4).length() == 12);
}

TEST_CASE("gamma of worked examples") {
  CHECK(gamma(W("2020")) == 2);
  CHECK(gamma_prime(W("2020")) == 3);
  for (std::uint64_t q : {2, 3, 10}) {
    for (std::size_t l = 1; l <= 8; ++l) {
      CHECK(gamma(Word(q, std::vector<Digit>(l, 0))) == l);
      CHECK(gamma(Word(q, std::vector<Digit>(l, static_cast<Digit>(q - 1)))) == l);
    }
  }
  CHECK(gamma(W("12", 3)) == oracle::scan_count({1, 2}, {1, 2, 1, 2}) - 1);
  CHECK(gamma(W("12", 3)) == 1);
}

TEST_CASE("gamma bounds and the shift-count identity") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t q = 2 + rng() % 3;
    const auto digits = oracle::random_digits(rng, q, 1 + rng() % 8);
    const Word w(q, digits);
    const auto g = gamma(w);
    CHECK(g >= 1);
    CHECK(g <= w.length());
    for (std::size_t k = 0; k <= 8; ++k) {
      CHECK(oracle::scan_count(digits, oracle::repeat(digits, k + 1)) == 1 + k * g);
    }
  }
  for (Digit d = 0; d < 10; ++d) CHECK(gamma(Word(10, {d})) == 1);
}

TEST_CASE("appending zeros never loses occurrences") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint64_t q = 2 + rng() % 9;
    const Word w(q, oracle::random_digits(rng, q, 1 + rng() % 3));
    const Integer n(static_cast<unsigned long>(rng() % 1000000));
    for (std::size_t s = 0; s < 4; ++s) {
      CHECK(count_in_integer(w, n * power(q, s), q) >= count_in_integer(w, n, q));
    }
  }
}

TEST_CASE("split_leading_zeros") {
  const auto a = split_leading_zeros(W("0012"));
  CHECK(a.zeros == 2);
  CHECK(format_word(a.tail) == "12");
  const auto b = split_leading_zeros(W("500"));
  CHECK(b.zeros == 0);
  CHECK(format_word(b.tail) == "500");
  CHECK_THROWS_AS(split_leading_zeros(W("000")), std::domain_error);
}

TEST_CASE("word_value") {
  CHECK(word_value(W("12", 3), 3) == 5);
  for (std::uint64_t p : {2, 3, 5, 11, 97}) CHECK(word_value(Word(p, {0, 0, 0, 1}), p) == 1);
  const Word w = W("12", 3);
  const Word built = concat_power(w, 4) + Word(3, {0, 0}) + Word(3, {1});
  CHECK(word_value(built, 3) == oracle::horner(to_vec(built), 3));
  CHECK_THROWS_AS(word_value(w, 5), std::invalid_argument);
  std::mt19937_64 rng(23);
  for (std::uint64_t q : {40ull, 70ull, 1000ull}) {
    const auto digits = oracle::random_digits(rng, q, 30);
    CHECK(word_value(Word(q, digits), q) == oracle::horner(digits, q));
  }
}

TEST_CASE("word text format") {
  CHECK(format_word(parse_word("20210", 10)) == "20210");
  const Word w = parse_word("19,3,0", 20);
  CHECK(w.length() == 3);
  CHECK(w[0] == 19);
  CHECK(format_word(w) == "19,3,0");
  CHECK_THROWS_AS(parse_word("", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("12a", 10), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("3", 3), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("19,,3", 20), std::invalid_argument);
  CHECK_THROWS_AS(parse_word("20", 20), std::invalid_argument);
  CHECK_THROWS_AS(Word(1, {}), std::invalid_argument);
}
