#include "digitwit/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include <CLI11.hpp>

#include "digitwit/exp_witness.hpp"
#include "digitwit/explorer.hpp"
#include "digitwit/poly_witness.hpp"
#include "digitwit/words.hpp"

namespace digitwit {

namespace {

std::string full_precision(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << text)) throw std::runtime_error("cannot write " + path);
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like a..b");
  return {to_u64(parse_integer(text.substr(0, dots))), to_u64(parse_integer(text.substr(dots + 2)))};
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Explicit witnesses for subword counts in base-q expansions", "digitwit"};
  app.require_subcommand(1);

  std::uint64_t base = 0;
  std::uint64_t prime = 0;
  std::string word_text;
  std::string value_text;
  std::string poly_text;
  std::string m_text;
  std::size_t scale = 0;
  std::uint64_t digit_budget = kDefaultDigitBudget;
  unsigned threads = 0;
  std::string out_path;
  std::string spec_text;
  std::string range_text;
  std::uint64_t stride = 1;
  std::string format = "csv";

  auto* gamma_cmd = app.add_subcommand("gamma", "Self-overlap count of a word");
  gamma_cmd->add_option("--base", base, "Digit base q")->required();
  gamma_cmd->add_option("--word", word_text, "Word over {0..q-1}")->required();

  auto* count_cmd = app.add_subcommand("count", "Occurrences of a word in the expansion of an integer");
  count_cmd->add_option("--base", base, "Digit base q")->required();
  count_cmd->add_option("--word", word_text, "Word over {0..q-1}")->required();
  count_cmd->add_option("--value", value_text, "Decimal integer or m^k")->required();

  auto* poly_cmd = app.add_subcommand("witness-poly", "Witness N with many copies of w in f(N)");
  poly_cmd->add_option("--base", base, "Digit base q")->required();
  poly_cmd->add_option("--word", word_text, "Word over {0..q-1}")->required();
  poly_cmd->add_option("--poly", poly_text, "Coefficients c0,c1,...,cd")->required();
  poly_cmd->add_option("--scale", scale, "Number of copies L")->required();
  poly_cmd->add_option("--out", out_path, "Report file (default: stdout)");

  auto* exp_cmd = app.add_subcommand("witness-exp", "Witness N' with many copies of w in m^N' base p");
  exp_cmd->add_option("--prime", prime, "Prime base p")->required();
  exp_cmd->add_option("--word", word_text, "Word over {0..p-1}")->required();
  exp_cmd->add_option("--m", m_text, "Base of the exponential sequence")->required();
  exp_cmd->add_option("--scale", scale, "Number of copies L")->required();
  exp_cmd->add_option("--digit-budget", digit_budget, "Largest expansion scanned directly");
  exp_cmd->add_option("--threads", threads, "Scan threads (0: all cores)");
  exp_cmd->add_option("--out", out_path, "Report file (default: stdout)");

  auto* explore_cmd = app.add_subcommand("explore", "Scan e_q(w; h(n)) / ln n over a range");
  explore_cmd->add_option("--spec", spec_text, "poly:c0,c1,... or exp:m")->required();
  explore_cmd->add_option("--base", base, "Digit base q")->required();
  explore_cmd->add_option("--word", word_text, "Word over {0..q-1}")->required();
  explore_cmd->add_option("--range", range_text, "a..b")->required();
  explore_cmd->add_option("--stride", stride, "Step between scanned n");
  explore_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  explore_cmd->add_option("--digit-budget", digit_budget, "Digit cap for exponential sequences");
  explore_cmd->add_option("--threads", threads, "Scan threads (0: all cores)");
  explore_cmd->add_option("--out", out_path, "Output file (default: stdout)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 2;
  }

  try {
    if (*gamma_cmd) {
      const Word w = parse_word(word_text, base);
      out << "length: " << w.length() << '\n';
      out << "gamma_prime: " << gamma_prime(w) << '\n';
      out << "gamma: " << gamma(w) << '\n';
      out << "target_ratio: " << full_precision(ratio_target(w, base)) << '\n';
      return 0;
    }
    if (*count_cmd) {
      const Word w = parse_word(word_text, base);
      const Integer n = parse_integer(value_text);
      const Expansion e = expansion(n, base);
      out << "expansion: " << format_word(e.word()) << '\n';
      out << "count: " << occurrences(w, e) << '\n';
      return 0;
    }
    if (*poly_cmd) {
      const Word w = parse_word(word_text, base);
      const IntPoly f = IntPoly::parse(poly_text);
      const WitnessReport report =
          w.all_zero() ? zero_block_witness(f, base, w.length(), scale) : construct_poly_witness(f, base, w, scale);
      write_output(out_path, to_json(report), out);
      if (!report.verified) err << "verification failed\n";
      return report.verified ? 0 : 1;
    }
    if (*exp_cmd) {
      const Word w = parse_word(word_text, prime);
      const WitnessReport report = construct_exp_witness(parse_integer(m_text), prime, w, scale, {digit_budget, threads});
      write_output(out_path, to_json(report), out);
      if (!report.verified) err << "verification failed\n";
      return report.verified ? 0 : 1;
    }
    if (*explore_cmd) {
      const Word w = parse_word(word_text, base);
      const auto [first, last] = parse_range(range_text);
      const ScanResult result = scan(SequenceSpec::parse(spec_text), base, w, {first, last, stride, digit_budget, threads});
      std::ostringstream text;
      emit(result, format == "json" ? EmitFormat::Json : EmitFormat::Csv, text);
      write_output(out_path, text.str(), out);
      return 0;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace digitwit
