// policy.hpp
//
// Precision policy shared by every evaluator. working_digits is what the
// caller gets; guard_digits is slack between the certified bound and the
// working target, so target_error = 10^(guard - working). Internal MPFR
// precision carries extra headroom beyond working_digits so that roundoff
// stays far below the truncation-error targets.

#ifndef LERCH_POLICY_HPP
#define LERCH_POLICY_HPP

#include "lerch/hpreal.hpp"

namespace lerch {

struct PrecisionPolicy {
  int working_digits = 30;
  int guard_digits = 6;

  // caps; hitting one raises PrecisionError / CapExceeded
  int max_em_terms = 512;        // Euler-Maclaurin correction terms
  long max_series_terms = 4000000;  // direct-series terms
  int bernoulli_cap = 512;       // bernoulli_numbers(n_max) accepts n_max <= cap

  PrecisionPolicy() = default;
  explicit PrecisionPolicy(int digits) : working_digits(digits) {}

  void validate() const {
    if (working_digits < 15) throw DomainError("PrecisionPolicy: working_digits must be >= 15");
    if (guard_digits < 5) throw DomainError("PrecisionPolicy: guard_digits must be >= 5");
    if (working_digits <= guard_digits)
      throw DomainError("PrecisionPolicy: working_digits must exceed guard_digits");
  }

  mpfr_prec_t bits() const { return digits_to_bits(working_digits) + 40; }

  HPReal target_error() const {
    return pow10(guard_digits - working_digits, bits());
  }

  PrecisionPolicy with_digits(int d) const {
    PrecisionPolicy p = *this;
    p.working_digits = d;
    return p;
  }
};

}  // namespace lerch

#endif  // LERCH_POLICY_HPP
