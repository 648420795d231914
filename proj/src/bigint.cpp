#include "digitwit/bigint.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace digitwit {

std::string to_decimal(const Integer& n) { return n.get_str(10); }

namespace {

Integer parse_decimal(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("empty integer literal");
  for (char ch : digits) {
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed integer literal: " + std::string(text));
  }
  Integer value;
  std::string owned(text.front() == '+' ? text.substr(1) : text);
  if (value.set_str(owned, 10) != 0) throw std::invalid_argument("malformed integer literal: " + owned);
  return value;
}

}  // namespace

Integer parse_integer(std::string_view text) {
  const auto caret = text.find('^');
  if (caret == std::string_view::npos) return parse_decimal(text);
  const Integer base = parse_decimal(text.substr(0, caret));
  const Integer exponent = parse_decimal(text.substr(caret + 1));
  if (exponent < 0) throw std::invalid_argument("negative exponent in " + std::string(text));
  return power(base, to_u64(exponent));
}

Integer power(const Integer& base, std::uint64_t exponent) {
  if (exponent > std::numeric_limits<unsigned long>::max()) throw std::overflow_error("exponent too large");
  Integer result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

Integer power(std::uint64_t base, std::uint64_t exponent) { return power(Integer(static_cast<unsigned long>(base)), exponent); }

Integer mod_floor(const Integer& n, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), n.get_mpz_t(), m.get_mpz_t());
  return r;
}

double natural_log(const Integer& n) {
  if (n <= 0) throw std::domain_error("logarithm of a non-positive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

std::uint64_t to_u64(const Integer& n) {
  if (n < 0 || mpz_sizeinbase(n.get_mpz_t(), 2) > 64) throw std::overflow_error("integer does not fit in 64 bits");
  if (!n.fits_ulong_p()) throw std::overflow_error("integer does not fit in unsigned long");
  return n.get_ui();
}

}  // namespace digitwit
