#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "digitwit/bigint.hpp"

namespace digitwit {

/// Integer polynomial c_0 + c_1 X + ... + c_d X^d with d >= 1 and c_d != 0.
class IntPoly {
 public:
  /// Coefficients in increasing degree. Trailing zeros are dropped; throws
  /// std::invalid_argument if the result has degree < 1.
  explicit IntPoly(std::vector<Integer> coefficients);

  /// "c0,c1,...,cd" in decimal.
  static IntPoly parse(std::string_view text);

  std::size_t degree() const { return coefficients_.size() - 1; }
  const std::vector<Integer>& coefficients() const { return coefficients_; }
  const Integer& coefficient(std::size_t i) const { return coefficients_[i]; }

  Integer operator()(const Integer& x) const;
  /// f(x) mod m, least nonnegative residue.
  Integer eval_mod(const Integer& x, const Integer& m) const;
  /// f'(x); defined for every degree, including the constant derivative of a line.
  Integer derivative_at(const Integer& x) const;
  /// Coefficients of f(X + a).
  std::vector<Integer> shifted_coefficients(const Integer& a) const;

  std::string to_string() const;

 private:
  std::vector<Integer> coefficients_;
};

}  // namespace digitwit
