// fast_eval.hpp
//
// Double-precision companion of the MPFR evaluator, used by the zero engine
// for boundary winding scans where ~1e-12 absolute accuracy is plenty (the
// engine nudges any boundary whose |L| minimum falls below 1e-8, three
// orders of magnitude above this evaluator's noise floor). Same
// Euler-Maclaurin scheme as the high-precision kernel; ~100x faster.

#ifndef LERCH_FAST_EVAL_HPP
#define LERCH_FAST_EVAL_HPP

#include <complex>
#include <optional>
#include <vector>

#include "lerch/rational.hpp"

namespace lerch {

// zeta(s,a) in doubles; nullopt when the correction series cannot certify
// ~1e-13 relative accuracy (callers fall back to the MPFR path).
std::optional<std::complex<double>> hurwitz_zeta_fast(std::complex<double> s, double a);

class FastLerchEvaluator {
 public:
  explicit FastLerchEvaluator(const LerchParams& params);
  std::optional<std::complex<double>> value(std::complex<double> s) const;
  long common_denominator() const { return d_; }

 private:
  long d_;
  std::vector<std::complex<double>> phase_;
  std::vector<double> a_;
  double log_d_;
};

}  // namespace lerch

#endif  // LERCH_FAST_EVAL_HPP
