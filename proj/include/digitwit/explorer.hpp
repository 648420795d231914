#pragma once

// Empirical scans of e_q(w; h(n)) / ln n along polynomial and exponential
// sequences, with running maxima.

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "digitwit/bigint.hpp"
#include "digitwit/int_poly.hpp"
#include "digitwit/words.hpp"

namespace digitwit {

/// h(n) = f(n) ("poly:c0,c1,...") or h(n) = m^n ("exp:m").
class SequenceSpec {
 public:
  static SequenceSpec parse(std::string_view text);
  static SequenceSpec polynomial(IntPoly f) { return SequenceSpec(std::move(f)); }
  static SequenceSpec exponential(Integer m);

  bool is_exponential() const { return std::holds_alternative<Integer>(spec_); }
  Integer operator()(std::uint64_t n) const;
  std::string to_string() const;

 private:
  explicit SequenceSpec(std::variant<IntPoly, Integer> spec) : spec_(std::move(spec)) {}
  std::variant<IntPoly, Integer> spec_;
};

/// gamma(w) / (l ln q).
double ratio_target(const Word& w, std::uint64_t q);

struct ScanRow {
  std::uint64_t n = 0;
  std::uint64_t count = 0;
  double ratio = 0;  // count / ln n; 0 for n <= 1
  double running_max = 0;
};

struct ScanOptions {
  std::uint64_t first = 1;
  std::uint64_t last = 1;
  std::uint64_t stride = 1;
  std::uint64_t digit_budget = 10'000'000;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct ScanResult {
  std::string spec;
  std::uint64_t base = 0;
  std::string word;
  std::uint64_t gamma = 0;
  double target = 0;
  std::optional<std::uint64_t> n_cap;  // largest n with m^n inside the digit budget (exponential scans)
  std::vector<ScanRow> rows;
};

double scan_ratio(std::uint64_t count, std::uint64_t n);

/// Rows for n = first, first + stride, ... <= last, ordered by n. Exponential
/// scans stop at the largest n whose power fits the digit budget; if even the
/// first n does not fit, std::length_error is thrown.
ScanResult scan(const SequenceSpec& h, std::uint64_t q, const Word& w, const ScanOptions& options);

enum class EmitFormat { Csv, Json };

void emit(const ScanResult& result, EmitFormat format, std::ostream& out);

/// Reads back the CSV form written by emit.
ScanResult parse_scan_csv(std::istream& in);

}  // namespace digitwit
