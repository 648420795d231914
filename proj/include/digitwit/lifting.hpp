#pragma once

// Digit-by-digit root lifting in Z_p.
//
// A function F: Z_p -> Z_p is differentiable modulo p^s at u with order N
// when, for every k > N and h,
//     F(u + p^k h) = F(u) + p^k h D   (mod p^(k+s))
// for a fixed D. If v_p(F(u0)) >= n and v_p(D) = j on the class
// u0 + p^(n-j) Z_p, with j + N < n and j < s, then exactly one digit i in
// [0, p) gives v_p(F(u0 + p^(n-j) i)) >= n + 1, and repeating the step
// converges to a root. Both the polynomial Hensel lift and the lift of
// u -> (1 + a p^e)^u - b run on this one engine.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "digitwit/bigint.hpp"
#include "digitwit/int_poly.hpp"
#include "digitwit/padic.hpp"

namespace digitwit {

class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// F(u) mod p^K. Must be a pure function of (u, K).
using Evaluator = std::function<Integer(const Integer& u, std::size_t precision)>;

struct LiftParams {
  std::uint64_t prime;
  std::size_t derivative_valuation;  // j
  std::size_t s;
  std::size_t start_level;           // n: v_p(F(u0)) >= n
  std::size_t order;                 // N
};

struct LiftStep {
  std::size_t level;               // n_k before the step
  std::uint64_t digit;             // i, added at position n_k - j
  std::size_t residual_valuation;  // v_p(F(u_{k+1})), capped at the working precision
  friend bool operator==(const LiftStep&, const LiftStep&) = default;
};

struct LiftTrace {
  std::vector<LiftStep> steps;

  /// One line per step: "level digit valuation".
  std::string to_text() const;
  bool strictly_increasing() const;
};

struct LiftResult {
  PadicApprox root;
  LiftTrace trace;
  /// Lower bound on v_p(F(root.residue())) established during the lift.
  std::size_t certified_valuation;
};

/// Lifts u0 to a root xi of F known modulo p^target, with
/// v_p(F(xi)) >= target + j and xi = u0 (mod p^(n-j)). Digits are tried in
/// increasing order. Throws std::invalid_argument if the parameters are
/// inconsistent or v_p(F(u0)) < n, and LiftError if no digit advances the
/// residual (the evaluator broke the differentiability contract).
LiftResult newton_lift(const Evaluator& F, const LiftParams& params, const PadicApprox& u0, std::size_t target);

/// Samples the differentiability contract of F around u0 on a fixed grid of
/// points x = u0 (mod p^(n-j)), steps k in (N, N+3] and multipliers h: checks
/// that the difference quotient is linear in h modulo p^s and has valuation j.
bool spot_check_differentiability(const Evaluator& F, const LiftParams& params, const PadicApprox& u0,
                                  std::size_t samples);

struct PolyLift {
  Integer root;  // 0 <= root < p^K, g(root) = 0 (mod p^K)
  LiftTrace trace;
};

/// Hensel lift of a root of g from a0, assuming v_p(g(a0)) > 2 v_p(g'(a0)).
/// Result is congruent to a0 modulo p^(v+1), v = v_p(g'(a0)).
PolyLift hensel_lift_poly(const IntPoly& g, std::uint64_t p, const Integer& a0, std::size_t precision);

/// Parameters describing g(u) = m^((p-1)u) = (1 + a p^e)^u as a function on Z_p.
struct DiffData {
  std::uint64_t prime = 0;
  Integer a;
  std::size_t e = 0;
  /// Set when p = 2 and e = 1: (1 + 2a)^2 = 1 + a' 2^t.
  std::optional<SquaringRegime> squaring;
  std::size_t j = 0;
  std::size_t s = 0;
  std::size_t n = 0;
  std::size_t c = 0;
  std::size_t order = 0;

  /// The constant D in g(u + p^k h) = g(u) + p^k h D (mod p^(k+s)).
  Integer derivative() const;
  LiftParams lift_params() const;
};

/// Throws std::invalid_argument when gcd(m, p) > 1 or m < 2.
DiffData diff_data_for(const Integer& m, std::uint64_t p);

}  // namespace digitwit
