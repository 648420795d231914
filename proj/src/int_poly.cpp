#include "digitwit/int_poly.hpp"

#include <stdexcept>

namespace digitwit {

IntPoly::IntPoly(std::vector<Integer> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.size() < 2) throw std::invalid_argument("polynomial must have degree at least 1");
}

IntPoly IntPoly::parse(std::string_view text) {
  std::vector<Integer> coefficients;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string_view field = text.substr(pos, comma - pos);
    while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
    while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
    if (field.find('^') != std::string_view::npos) throw std::invalid_argument("malformed coefficient: " + std::string(field));
    coefficients.push_back(parse_integer(field));
    pos = comma + 1;
  }
  return IntPoly(std::move(coefficients));
}

Integer IntPoly::operator()(const Integer& x) const {
  Integer value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = value * x + *it;
  return value;
}

Integer IntPoly::eval_mod(const Integer& x, const Integer& m) const {
  const Integer xr = mod_floor(x, m);
  Integer value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) value = mod_floor(value * xr + *it, m);
  return value;
}

Integer IntPoly::derivative_at(const Integer& x) const {
  Integer value = 0;
  for (std::size_t i = coefficients_.size() - 1; i >= 1; --i) value = value * x + coefficients_[i] * static_cast<unsigned long>(i);
  return value;
}

std::vector<Integer> IntPoly::shifted_coefficients(const Integer& a) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<Integer> c = coefficients_;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t k = n - 1; k-- > i;) c[k] += a * c[k + 1];
  }
  return c;
}

std::string IntPoly::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i > 0) out.push_back(',');
    out += to_decimal(coefficients_[i]);
  }
  return out;
}

}  // namespace digitwit
