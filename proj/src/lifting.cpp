#include "digitwit/lifting.hpp"

#include <algorithm>
#include <sstream>

namespace digitwit {

namespace {

std::size_t capped_valuation(const Integer& residue, std::uint64_t p, std::size_t cap) {
  return std::min(valuation(residue, p), cap);
}

void check_params(const LiftParams& params) {
  if (!is_prime(params.prime)) throw std::invalid_argument("lift modulus base is not prime");
  if (params.derivative_valuation + params.order >= params.start_level)
    throw std::invalid_argument("lift needs j + N < n");
  if (params.derivative_valuation >= params.s) throw std::invalid_argument("lift needs j < s");
}

}  // namespace

std::string LiftTrace::to_text() const {
  std::ostringstream out;
  for (const auto& step : steps) out << step.level << ' ' << step.digit << ' ' << step.residual_valuation << '\n';
  return out.str();
}

bool LiftTrace::strictly_increasing() const {
  for (std::size_t i = 0; i < steps.size(); ++i) {
    if (steps[i].residual_valuation <= steps[i].level) return false;
    if (i > 0 && steps[i].residual_valuation <= steps[i - 1].residual_valuation) return false;
  }
  return true;
}

LiftResult newton_lift(const Evaluator& F, const LiftParams& params, const PadicApprox& u0, std::size_t target) {
  check_params(params);
  const std::uint64_t p = params.prime;
  const std::size_t j = params.derivative_valuation;
  if (u0.prime() != p) throw std::invalid_argument("starting point lives over a different prime");
  if (u0.precision() < params.start_level - j)
    throw std::invalid_argument("starting point must be known modulo p^(n-j)");

  const std::size_t goal = target + j;
  const std::size_t working = std::max(goal, params.start_level);
  Integer u = u0.residue();
  std::size_t level = capped_valuation(F(u, working), p, working);
  if (level < params.start_level) throw std::invalid_argument("starting point does not satisfy v_p(F(u0)) >= n");

  LiftTrace trace;
  while (level < goal) {
    const Integer step = power(p, level - j);
    bool advanced = false;
    for (std::uint64_t i = 0; i < p; ++i) {
      Integer candidate = u + step * static_cast<unsigned long>(i);
      const std::size_t v = capped_valuation(F(candidate, working), p, working);
      if (v > level) {
        trace.steps.push_back({level, i, v});
        u = std::move(candidate);
        level = v;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw LiftError("no digit advances the residual at level " + std::to_string(level) +
                      "; the function is not differentiable as declared");
    }
  }
  return {PadicApprox(p, target, u), std::move(trace), level};
}

bool spot_check_differentiability(const Evaluator& F, const LiftParams& params, const PadicApprox& u0,
                                  std::size_t samples) {
  check_params(params);
  const std::uint64_t p = params.prime;
  const std::size_t j = params.derivative_valuation;
  const Integer class_step = power(p, params.start_level - j);
  for (std::size_t idx = 0; idx < samples; ++idx) {
    const Integer x = u0.residue() + class_step * static_cast<unsigned long>(idx * 7919 + idx / 3);
    const std::size_t k = params.order + 1 + idx % 3;
    const std::size_t precision = k + params.s;
    const Integer pk = power(p, k);
    const Integer ps = power(p, params.s);
    const Integer base_value = F(x, precision);
    const auto quotient = [&](unsigned long h) -> std::optional<Integer> {
      const Integer diff = mod_floor(F(x + pk * h, precision) - base_value, power(p, precision));
      if (!mpz_divisible_p(diff.get_mpz_t(), pk.get_mpz_t())) return std::nullopt;
      return Integer(diff / pk);
    };
    const auto d1 = quotient(1);
    if (!d1 || valuation(mod_floor(*d1, ps), p) != j) return false;
    for (unsigned long h : {2ul, 3ul, static_cast<unsigned long>(p + 1 + idx)}) {
      const auto dh = quotient(h);
      if (!dh || mod_floor(*dh - *d1 * h, ps) != 0) return false;
    }
  }
  return true;
}

PolyLift hensel_lift_poly(const IntPoly& g, std::uint64_t p, const Integer& a0, std::size_t precision) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (a0 < 0) throw std::invalid_argument("base point must be nonnegative");
  const Integer slope = g.derivative_at(a0);
  if (slope == 0) throw std::invalid_argument("Hensel precondition violated: g'(a0) = 0");
  const std::size_t v = valuation(slope, p);
  const std::size_t value_valuation = valuation(g(a0), p);
  if (value_valuation != kInfiniteValuation && value_valuation <= 2 * v)
    throw std::invalid_argument("Hensel precondition violated: v_p(g(a0)) <= 2 v_p(g'(a0))");

  // g(x + p^k h) = g(x) + p^k h g'(x) (mod p^(2k)): differentiable modulo
  // p^(v+1) with order v, and v_p(g'(x)) = v on a0 + p^(v+1) Z_p.
  const LiftParams params{p, v, v + 1, 2 * v + 1, v};
  std::size_t start_precision = std::max<std::size_t>(v + 1, 1);
  while (power(p, start_precision) <= a0) ++start_precision;
  const Evaluator evaluate = [&g, p](const Integer& x, std::size_t k) { return g.eval_mod(x, power(p, k)); };
  LiftResult lifted = newton_lift(evaluate, params, PadicApprox(p, start_precision, a0), precision);
  if (g.eval_mod(lifted.root.residue(), power(p, precision)) != 0)
    throw LiftError("lifted value is not a root modulo p^" + std::to_string(precision));
  return {lifted.root.residue(), std::move(lifted.trace)};
}

Integer DiffData::derivative() const {
  if (squaring) return squaring->a_prime * power(2, squaring->t - 1);
  return a * power(prime, e);
}

LiftParams DiffData::lift_params() const { return {prime, j, s, n, order}; }

DiffData diff_data_for(const Integer& m, std::uint64_t p) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (mpz_divisible_ui_p(m.get_mpz_t(), p)) throw std::invalid_argument("m is not coprime to p");
  DiffData dd;
  dd.prime = p;
  const Integer excess = power(m, p - 1) - 1;
  dd.e = valuation(excess, p);
  mpz_divexact(dd.a.get_mpz_t(), excess.get_mpz_t(), power(p, dd.e).get_mpz_t());
  if (p == 2 && dd.e == 1) {
    dd.squaring = squaring_regime(dd.a);
    dd.j = dd.squaring->t - 1;
  } else {
    dd.j = dd.e;
  }
  dd.s = dd.j + 1;
  dd.n = dd.j + 1;
  dd.c = dd.n - 1;
  dd.order = 0;
  return dd;
}

}  // namespace digitwit
