#include "digitwit/explorer.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "digitwit/report.hpp"

namespace digitwit {

namespace {

std::string full_precision(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

std::vector<ScanRow> scan_block(const SequenceSpec& h, std::uint64_t q, const Word& w, std::uint64_t first,
                                std::uint64_t stride, std::uint64_t count, const Integer* m) {
  std::vector<ScanRow> rows;
  rows.reserve(count);
  Integer value;
  Integer step;
  if (m) {
    value = power(*m, first);
    step = power(*m, stride);
  }
  for (std::uint64_t i = 0; i < count; ++i) {
    const std::uint64_t n = first + i * stride;
    if (m) {
      if (i > 0) value *= step;
    } else {
      value = h(n);
      if (value < 0) throw ContractError("h(" + std::to_string(n) + ") is negative");
    }
    const std::uint64_t c = count_in_integer(w, value, q);
    rows.push_back({n, c, scan_ratio(c, n), 0});
  }
  return rows;
}

}  // namespace

SequenceSpec SequenceSpec::exponential(Integer m) {
  if (m < 2) throw std::invalid_argument("exponential base must be at least 2");
  return SequenceSpec(std::move(m));
}

SequenceSpec SequenceSpec::parse(std::string_view text) {
  if (text.starts_with("poly:")) return polynomial(IntPoly::parse(text.substr(5)));
  if (text.starts_with("exp:")) return exponential(parse_integer(text.substr(4)));
  throw std::invalid_argument("sequence spec must be poly:c0,c1,... or exp:m");
}

Integer SequenceSpec::operator()(std::uint64_t n) const {
  if (const auto* m = std::get_if<Integer>(&spec_)) return power(*m, n);
  return std::get<IntPoly>(spec_)(Integer(static_cast<unsigned long>(n)));
}

std::string SequenceSpec::to_string() const {
  if (const auto* m = std::get_if<Integer>(&spec_)) return "exp:" + to_decimal(*m);
  return "poly:" + std::get<IntPoly>(spec_).to_string();
}

double ratio_target(const Word& w, std::uint64_t q) {
  if (w.base() != q) throw std::invalid_argument("word base differs from q");
  return static_cast<double>(gamma(w)) / (static_cast<double>(w.length()) * std::log(static_cast<double>(q)));
}

double scan_ratio(std::uint64_t count, std::uint64_t n) {
  if (n <= 1) return 0.0;
  return static_cast<double>(count) / std::log(static_cast<double>(n));
}

ScanResult scan(const SequenceSpec& h, std::uint64_t q, const Word& w, const ScanOptions& options) {
  if (options.stride == 0) throw std::invalid_argument("stride must be positive");
  ScanResult result;
  result.spec = h.to_string();
  result.base = q;
  result.word = format_word(w);
  result.gamma = gamma(w);
  result.target = ratio_target(w, q);

  std::uint64_t last = options.last;
  std::optional<Integer> m;
  if (h.is_exponential()) {
    m = h(1);
    const double per_n = natural_log(*m) / std::log(static_cast<double>(q));
    const double budget = static_cast<double>(options.digit_budget > 0 ? options.digit_budget - 1 : 0);
    const auto cap = static_cast<std::uint64_t>(std::floor(budget / per_n));
    if (options.first <= options.last && options.first > cap)
      throw std::length_error("m^n exceeds the digit budget for every n in the range");
    result.n_cap = cap;
    last = std::min(last, cap);
  }
  if (options.first > last) return result;

  const std::uint64_t total = (last - options.first) / options.stride + 1;
  const unsigned hw = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t blocks = std::min<std::uint64_t>(hw, std::max<std::uint64_t>(1, total / 64));
  const std::uint64_t per_block = (total + blocks - 1) / blocks;

  std::vector<std::future<std::vector<ScanRow>>> parts;
  for (std::uint64_t b = 0; b < blocks; ++b) {
    const std::uint64_t begin = b * per_block;
    if (begin >= total) break;
    const std::uint64_t count = std::min(per_block, total - begin);
    parts.push_back(std::async(std::launch::async, [&, begin, count] {
      return scan_block(h, q, w, options.first + begin * options.stride, options.stride, count, m ? &*m : nullptr);
    }));
  }
  for (auto& part : parts) {
    auto rows = part.get();
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  std::sort(result.rows.begin(), result.rows.end(), [](const ScanRow& a, const ScanRow& b) { return a.n < b.n; });
  double best = 0;
  for (auto& row : result.rows) {
    best = std::max(best, row.ratio);
    row.running_max = best;
  }
  return result;
}

void emit(const ScanResult& result, EmitFormat format, std::ostream& out) {
  if (format == EmitFormat::Csv) {
    out << "# spec: " << result.spec << '\n';
    out << "# base: " << result.base << '\n';
    out << "# word: " << result.word << '\n';
    out << "# gamma: " << result.gamma << '\n';
    out << "# target_ratio: " << full_precision(result.target) << '\n';
    if (result.n_cap) out << "# n_cap: " << *result.n_cap << '\n';
    out << "n,count,ratio,running_max\n";
    for (const auto& row : result.rows) {
      out << row.n << ',' << row.count << ',' << full_precision(row.ratio) << ',' << full_precision(row.running_max)
          << '\n';
    }
  } else {
    nlohmann::ordered_json doc;
    doc["format"] = kReportFormat;
    doc["kind"] = "scan";
    doc["spec"] = result.spec;
    doc["q"] = std::to_string(result.base);
    doc["w"] = result.word;
    doc["gamma"] = std::to_string(result.gamma);
    doc["target_ratio"] = result.target;
    doc["n_cap"] = result.n_cap ? nlohmann::ordered_json(std::to_string(*result.n_cap)) : nlohmann::ordered_json(nullptr);
    auto rows = nlohmann::ordered_json::array();
    for (const auto& row : result.rows) {
      rows.push_back({{"n", std::to_string(row.n)}, {"count", std::to_string(row.count)}, {"ratio", row.ratio},
                      {"running_max", row.running_max}});
    }
    doc["rows"] = rows;
    out << doc.dump(2) << '\n';
  }
  if (!out) throw std::runtime_error("failed to write scan output");
}

ScanResult parse_scan_csv(std::istream& in) {
  ScanResult result;
  std::string line;
  bool header_seen = false;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line.starts_with("# ")) {
      const auto colon = line.find(": ");
      if (colon == std::string::npos) continue;
      const std::string key = line.substr(2, colon - 2);
      const std::string value = line.substr(colon + 2);
      if (key == "spec") result.spec = value;
      else if (key == "base") result.base = std::stoull(value);
      else if (key == "word") result.word = value;
      else if (key == "gamma") result.gamma = std::stoull(value);
      else if (key == "target_ratio") result.target = std::strtod(value.c_str(), nullptr);
      else if (key == "n_cap") result.n_cap = std::stoull(value);
      continue;
    }
    if (!header_seen) {
      if (line != "n,count,ratio,running_max") throw std::invalid_argument("unexpected CSV header: " + line);
      header_seen = true;
      continue;
    }
    std::istringstream fields(line);
    std::string n, count, ratio, running_max;
    if (!std::getline(fields, n, ',') || !std::getline(fields, count, ',') || !std::getline(fields, ratio, ',') ||
        !std::getline(fields, running_max))
      throw std::invalid_argument("malformed CSV row: " + line);
    result.rows.push_back({std::stoull(n), std::stoull(count), std::strtod(ratio.c_str(), nullptr),
                           std::strtod(running_max.c_str(), nullptr)});
  }
  if (!header_seen) throw std::invalid_argument("CSV header missing");
  return result;
}

}  // namespace digitwit
