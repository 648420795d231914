#pragma once

// Witnesses n for which the base-q expansion of f(n) ends in a long run of
// copies of w: the target tail is lifted to a root of f(X) - b modulo each
// prime power of q and the roots are glued by CRT.

#include <cstddef>
#include <cstdint>

#include "digitwit/bigint.hpp"
#include "digitwit/int_poly.hpp"
#include "digitwit/report.hpp"
#include "digitwit/words.hpp"

namespace digitwit {

/// Smallest a0 >= 0 with f'(a0) != 0 and f(a0) >= 0.
Integer choose_base_point(const IntPoly& f);

/// Smallest c >= 0 with e_i (c + len_q(f(a0))) > 2 v_{p_i}(f'(a0)) for every
/// prime power p_i^e_i of q.
std::size_t padding_c(std::uint64_t q, const IntPoly& f, const Integer& a0);

struct TargetValue {
  Integer b;
  std::size_t window_length;  // L'
};

/// b has base-q digits  w_{k+1}..w_l  w^(L-1)  0^c  (f(a0))_q, where
/// w = 0^k w_{k+1}..w_l; L' = l L + c + len_q(f(a0)).
TargetValue target_value(const Word& w, std::size_t L, std::size_t c, const IntPoly& f, const Integer& a0,
                         std::uint64_t q);

/// Builds N < q^L' with f(N) = b (mod q^L') and checks the result by
/// independent evaluation. Throws std::domain_error for w = 0^l and
/// ContractError if f is negative at an evaluated point.
WitnessReport construct_poly_witness(const IntPoly& f, std::uint64_t q, const Word& w, std::size_t L);

/// Smallest a >= 1 with every coefficient of f(X + a) positive.
Integer zero_block_shift(const IntPoly& f);

/// N = q^L + a: f(N) has d zero runs of length about L.
WitnessReport zero_block_witness(const IntPoly& f, std::uint64_t q, std::size_t block_length, std::size_t L);

}  // namespace digitwit
