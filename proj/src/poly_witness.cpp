#include "digitwit/poly_witness.hpp"

#include <algorithm>
#include <cmath>

#include "digitwit/lifting.hpp"
#include "digitwit/padic.hpp"

namespace digitwit {

namespace {

Integer checked_value(const IntPoly& f, const Integer& x) {
  Integer value = f(x);
  if (value < 0) throw ContractError("f(" + to_decimal(x) + ") is negative; f must map naturals to naturals");
  return value;
}

Word suffix(const Expansion& e, std::size_t width) {
  const auto digits = e.digits();
  const std::size_t take = std::min(width, digits.size());
  return Word(e.base(), std::vector<Digit>(digits.end() - static_cast<std::ptrdiff_t>(take), digits.end()));
}

}  // namespace

Integer choose_base_point(const IntPoly& f) {
  for (Integer a0 = 0;; ++a0) {
    if (f.derivative_at(a0) != 0 && f(a0) >= 0) return a0;
    if (a0 > 1000000 + f.degree()) throw ContractError("f is negative on a long initial segment of the naturals");
  }
}

std::size_t padding_c(std::uint64_t q, const IntPoly& f, const Integer& a0) {
  const Integer slope = f.derivative_at(a0);
  if (slope == 0) throw std::invalid_argument("f'(a0) must be nonzero");
  const std::size_t len = digit_length(checked_value(f, a0), q);
  std::size_t c = 0;
  for (const auto& [p, e] : factorize(q)) {
    const std::size_t need = 2 * valuation(slope, p);
    // smallest c with e (c + len) > need
    const std::size_t digits_needed = need / e + 1;
    if (digits_needed > len) c = std::max(c, digits_needed - len);
  }
  return c;
}

TargetValue target_value(const Word& w, std::size_t L, std::size_t c, const IntPoly& f, const Integer& a0,
                         std::uint64_t q) {
  if (w.base() != q) throw std::invalid_argument("word base differs from q");
  if (L < 1) throw std::invalid_argument("scale L must be at least 1");
  const auto split = split_leading_zeros(w);
  const Word low = expansion(checked_value(f, a0), q).word();
  const Word digits = split.tail + concat_power(w, L - 1) + Word(q, std::vector<Digit>(c, 0)) + low;
  return {word_value(digits, q), w.length() * L + c + low.length()};
}

WitnessReport construct_poly_witness(const IntPoly& f, std::uint64_t q, const Word& w, std::size_t L) {
  if (q < 2) throw std::invalid_argument("base must be at least 2");
  if (w.base() != q) throw std::invalid_argument("word base differs from q");
  if (w.empty()) throw std::invalid_argument("empty word");
  if (w.all_zero()) throw std::domain_error("all-zero word: use zero_block_witness");
  if (L < 1) throw std::invalid_argument("scale L must be at least 1");

  WitnessReport r;
  r.kind = WitnessKind::Poly;
  r.base = q;
  r.word = w;
  r.scale = L;
  r.poly = f;
  if (L < 3) r.warnings.push_back("L < 3: the occurrence bound gamma(w)(L-2) is not positive");

  const Integer a0 = choose_base_point(f);
  const Integer fa0 = checked_value(f, a0);
  r.base_point = a0;
  r.padding = padding_c(q, f, a0);
  const auto [b, window] = target_value(w, L, r.padding, f, a0, q);
  r.target = b;
  r.window_length = window;
  r.size_exponent_excess = static_cast<std::ptrdiff_t>(window) - static_cast<std::ptrdiff_t>(w.length() * L);

  std::vector<Integer> shifted = f.coefficients();
  shifted[0] -= b;
  const IntPoly g(std::move(shifted));
  std::vector<Congruence> system;
  for (const auto& [p, e] : factorize(q)) {
    const std::size_t precision = window * e;
    PolyLift lift = hensel_lift_poly(g, p, a0, precision);
    system.push_back({lift.root, power(p, precision)});
    r.lifts.push_back({p, precision, lift.root, std::move(lift.trace)});
  }
  r.witness = crt(system).residue;

  // Verification below uses only exact evaluation of f at the witness.
  const Integer modulus = power(q, window);
  const Integer value = checked_value(f, r.witness);
  const Expansion digits = expansion(value, q);
  const std::size_t low_len = r.padding + digit_length(fa0, q);
  const Word expected_low = Word(q, std::vector<Digit>(r.padding, 0)) + expansion(fa0, q).word();

  r.verified_congruence = r.witness >= 0 && r.witness < modulus && mod_floor(value, modulus) == b;
  r.expansion_tail = suffix(digits, window);
  r.window_count = occurrences(w, r.expansion_tail);
  r.occurrence_count = occurrences(w, digits);
  r.claimed_bound = L >= 2 ? gamma(w) * (L - 2) : 0;
  if (r.witness > 1) r.ratio = static_cast<double>(*r.occurrence_count) / natural_log(r.witness);
  r.theorem_target = static_cast<double>(gamma(w)) / (static_cast<double>(w.length()) * std::log(static_cast<double>(q)));
  const bool tail_ok = low_digits(value, q, low_len) == expected_low;
  if (!tail_ok) r.warnings.push_back("low digits of f(N) differ from 0^c (f(a0))_q");
  r.verified = *r.verified_congruence && tail_ok && *r.occurrence_count >= r.claimed_bound;
  return r;
}

Integer zero_block_shift(const IntPoly& f) {
  if (f.coefficients().back() < 0) throw ContractError("leading coefficient is negative");
  for (Integer a = 1;; ++a) {
    const auto shifted = f.shifted_coefficients(a);
    if (std::all_of(shifted.begin(), shifted.end(), [](const Integer& c) { return c > 0; })) return a;
  }
}

WitnessReport zero_block_witness(const IntPoly& f, std::uint64_t q, std::size_t block_length, std::size_t L) {
  if (q < 2) throw std::invalid_argument("base must be at least 2");
  if (block_length < 1) throw std::invalid_argument("block length must be at least 1");
  if (L < 1) throw std::invalid_argument("scale L must be at least 1");

  WitnessReport r;
  r.kind = WitnessKind::ZeroBlock;
  r.base = q;
  r.word = Word(q, std::vector<Digit>(block_length, 0));
  r.scale = L;
  r.poly = f;

  const Integer a = zero_block_shift(f);
  r.base_point = a;
  std::size_t block_constant = 0;
  for (const auto& coefficient : f.shifted_coefficients(a))
    block_constant = std::max(block_constant, 1 + digit_length(coefficient, q));
  r.zero_block_constant = block_constant;

  r.witness = power(q, L) + a;
  const Integer value = checked_value(f, r.witness);
  const Expansion digits = expansion(value, q);
  r.expansion_tail = digits.word();
  r.occurrence_count = occurrences(r.word, digits);
  r.window_count = *r.occurrence_count;
  const std::size_t d = f.degree();
  const std::size_t per_gap = L > block_length + block_constant ? L - block_length - block_constant : 0;
  r.claimed_bound = d * per_gap;
  r.ratio = static_cast<double>(*r.occurrence_count) / natural_log(r.witness);
  const double log_q = std::log(static_cast<double>(q));
  r.theorem_target = 1.0 / log_q;
  r.zero_block_ceiling = static_cast<double>(d) / log_q;
  r.verified = *r.occurrence_count >= r.claimed_bound;
  return r;
}

}  // namespace digitwit
