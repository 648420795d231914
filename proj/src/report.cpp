#include "digitwit/report.hpp"

#include <json.hpp>

namespace digitwit {

namespace {

using nlohmann::ordered_json;

std::string dec(std::uint64_t v) { return std::to_string(v); }

ordered_json optional_number(const std::optional<double>& value) {
  return value ? ordered_json(*value) : ordered_json(nullptr);
}

ordered_json lift_json(const PrimeLift& lift) {
  ordered_json steps = ordered_json::array();
  for (const auto& step : lift.trace.steps) {
    steps.push_back(dec(step.level) + " " + dec(step.digit) + " " + dec(step.residual_valuation));
  }
  return {{"prime", dec(lift.prime)}, {"precision", dec(lift.precision)}, {"root", to_decimal(lift.root)},
          {"trace", steps}};
}

ordered_json diff_json(const DiffData& dd) {
  ordered_json out{{"a", to_decimal(dd.a)}, {"e", dec(dd.e)}};
  if (dd.squaring) {
    out["a_prime"] = to_decimal(dd.squaring->a_prime);
    out["t"] = dec(dd.squaring->t);
  }
  out["j"] = dec(dd.j);
  out["s"] = dec(dd.s);
  out["n"] = dec(dd.n);
  out["c"] = dec(dd.c);
  out["order"] = dec(dd.order);
  out["derivative"] = to_decimal(dd.derivative());
  return out;
}

}  // namespace

std::string to_string(WitnessKind kind) {
  switch (kind) {
    case WitnessKind::Poly: return "poly";
    case WitnessKind::Exp: return "exp";
    case WitnessKind::ZeroBlock: return "zero-block";
  }
  return "unknown";
}

std::string to_json(const WitnessReport& r) {
  ordered_json doc;
  doc["format"] = kReportFormat;
  doc["kind"] = to_string(r.kind);

  ordered_json inputs;
  inputs[r.kind == WitnessKind::Exp ? "p" : "q"] = dec(r.base);
  if (r.kind == WitnessKind::ZeroBlock) {
    inputs["block_length"] = dec(r.word.length());
  } else {
    inputs["w"] = format_word(r.word);
  }
  inputs["L"] = dec(r.scale);
  if (r.poly) inputs["f"] = r.poly->to_string();
  if (r.exp) inputs["m"] = to_decimal(r.exp->m);
  doc["inputs"] = inputs;

  ordered_json params;
  if (r.kind == WitnessKind::ZeroBlock) {
    params["shift_a"] = r.base_point ? to_decimal(*r.base_point) : "";
    params["block_constant"] = dec(r.zero_block_constant);
  } else {
    if (r.base_point) params["a0"] = to_decimal(*r.base_point);
    params["c"] = dec(r.padding);
    params["L_prime"] = dec(r.window_length);
    params["b"] = to_decimal(r.target);
    params["size_exponent_excess"] = std::to_string(r.size_exponent_excess);
  }
  if (r.exp) {
    params["m_prime"] = to_decimal(r.exp->m_prime);
    params["s"] = dec(r.exp->s);
    params["diff_data"] = diff_json(r.exp->diff);
    params["xi"] = to_decimal(r.exp->xi);
  }
  doc["parameters"] = params;

  ordered_json witness{{"N", to_decimal(r.witness)}};
  if (r.witness_prime) witness["N_prime"] = to_decimal(*r.witness_prime);
  doc["witness"] = witness;

  if (!r.lifts.empty()) {
    ordered_json lifts = ordered_json::array();
    for (const auto& lift : r.lifts) lifts.push_back(lift_json(lift));
    doc["lifts"] = lifts;
  }

  doc["verified_congruence"] = r.verified_congruence ? ordered_json(*r.verified_congruence) : ordered_json(nullptr);
  doc["expansion_tail"] = format_word(r.expansion_tail);
  doc["window_count"] = dec(r.window_count);
  doc["occurrence_count"] = r.occurrence_count ? ordered_json(dec(*r.occurrence_count)) : ordered_json(nullptr);
  doc["claimed_bound"] = dec(r.claimed_bound);
  doc["ratio"] = optional_number(r.ratio);
  doc["theorem_target"] = r.theorem_target;
  if (r.zero_block_ceiling) doc["zero_block_ceiling"] = *r.zero_block_ceiling;
  if (r.exp) {
    doc["digit_budget"] = dec(r.exp->digit_budget);
    doc["materialized"] = r.exp->materialized;
    doc["log_witness"] = r.exp->log_witness;
    doc["log_size_bound"] = r.exp->log_size_bound;
  }
  doc["verified"] = r.verified;
  doc["warnings"] = r.warnings;
  return doc.dump(2) + "\n";
}

}  // namespace digitwit
