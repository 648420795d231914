#include "digitwit/exp_witness.hpp"

#include <cmath>
#include <thread>

#include "digitwit/lifting.hpp"
#include "digitwit/padic.hpp"

namespace digitwit {

PFreePart strip_p_part(const Integer& m, std::uint64_t p) {
  if (m < 2) throw std::invalid_argument("m must be at least 2");
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  PFreePart part{0, 0};
  part.s = mpz_remove(part.m_prime.get_mpz_t(), m.get_mpz_t(), Integer(static_cast<unsigned long>(p)).get_mpz_t());
  if (part.m_prime == 1) {
    throw std::domain_error("m = " + to_decimal(m) + " is a power of p = " + std::to_string(p) +
                            "; m must not be a power of p");
  }
  return part;
}

ExpTarget exp_target(const Word& w, std::size_t L, std::size_t c, std::uint64_t p) {
  if (w.base() != p) throw std::invalid_argument("word alphabet is not {0, ..., p-1}");
  if (w.empty()) throw std::invalid_argument("empty word");
  if (L < 1) throw std::invalid_argument("scale L must be at least 1");
  std::vector<Digit> tail(c + 1, 0);
  tail.back() = 1;
  const Word digits = concat_power(w, L) + Word(p, std::move(tail));
  return {word_value(digits, p), digits.length()};
}

WitnessReport construct_exp_witness(const Integer& m, std::uint64_t p, const Word& w, std::size_t L,
                                    const ExpWitnessOptions& options) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (w.base() != p) throw std::invalid_argument("word alphabet is not {0, ..., p-1}");
  if (w.empty()) throw std::invalid_argument("empty word");
  if (L < 1) throw std::invalid_argument("scale L must be at least 1");

  WitnessReport r;
  r.kind = WitnessKind::Exp;
  r.base = p;
  r.word = w;
  r.scale = L;
  if (L < 2) r.warnings.push_back("L < 2: the occurrence bound gamma(w)(L-1) is not positive");

  ExpDetails details;
  details.m = m;
  const PFreePart part = strip_p_part(m, p);
  details.m_prime = part.m_prime;
  details.s = part.s;
  details.diff = diff_data_for(part.m_prime, p);
  details.digit_budget = options.digit_budget;
  const DiffData& dd = details.diff;

  const auto [b, window] = exp_target(w, L, dd.c, p);
  r.padding = dd.c;
  r.target = b;
  r.window_length = window;
  r.size_exponent_excess = static_cast<std::ptrdiff_t>(window) - static_cast<std::ptrdiff_t>(w.length() * L);

  const Evaluator F = [&dd, p, b = b](const Integer& u, std::size_t precision) {
    return mod_floor(pow_g(dd.a, dd.e, p, u, precision) - b, power(p, precision));
  };
  LiftResult lifted = newton_lift(F, dd.lift_params(), PadicApprox(p, dd.n - dd.j, 0), window);
  details.xi = lifted.root.residue();
  r.lifts.push_back({p, window, details.xi, std::move(lifted.trace)});

  const Integer modulus = power(p, window);
  r.witness = modulus + details.xi;
  r.witness_prime = Integer(r.witness * static_cast<unsigned long>(p - 1));
  const Integer& n_prime = *r.witness_prime;

  // Independent route: m'^N' mod p^L' straight from the witness.
  Integer residue;
  mpz_powm(residue.get_mpz_t(), part.m_prime.get_mpz_t(), n_prime.get_mpz_t(), modulus.get_mpz_t());
  r.verified_congruence = residue == b;
  r.expansion_tail = low_digits(residue, p, window);
  r.window_count = occurrences(w, r.expansion_tail);
  r.claimed_bound = L >= 1 ? gamma(w) * (L - 1) : 0;

  const double log_p = std::log(static_cast<double>(p));
  details.log_witness = natural_log(n_prime);
  details.log_size_bound = std::log(2.0 * static_cast<double>(p - 1)) + static_cast<double>(dd.c + 1) * log_p +
                           static_cast<double>(w.length() * L) * log_p;
  const bool size_ok = details.log_witness <= details.log_size_bound;

  r.theorem_target = static_cast<double>(gamma(w)) / (static_cast<double>(w.length()) * log_p);

  const double log_digits = details.log_witness + std::log(natural_log(part.m_prime) / log_p);
  const bool fits = log_digits < std::log(static_cast<double>(options.digit_budget) + 0.5) && n_prime.fits_ulong_p();
  if (fits) {
    const Integer value = power(part.m_prime, to_u64(n_prime));
    const Expansion digits = expansion(value, p);
    if (digits.length() <= options.digit_budget) {
      const unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
      r.occurrence_count = count_matches_parallel(w.digits(), digits.digits(), threads);
      r.ratio = static_cast<double>(*r.occurrence_count) / details.log_witness;
      details.materialized = true;
    }
  }
  if (!details.materialized) {
    r.warnings.push_back("direct count not materialized: m'^N' exceeds the digit budget of " +
                         std::to_string(options.digit_budget) + " base-p digits");
  }

  r.verified = *r.verified_congruence && size_ok && r.window_count >= r.claimed_bound &&
               (!details.materialized || *r.occurrence_count >= r.claimed_bound);
  r.exp = std::move(details);
  return r;
}

}  // namespace digitwit
