// lerch.hpp
//
// Evaluation of the Lerch zeta-function L(lambda, alpha, s):
//   - direct series for sigma > 1 (any parameters), with a certified tail
//     bound (integral bound, sharpened by Abel summation when the phase
//     actually oscillates);
//   - whole-plane evaluation for rational parameters through the Hurwitz
//     decomposition  L = d^{-s} sum_{k<d} e(lambda k) zeta(s, (k+alpha)/d);
//   - the functional-equation split G(s), P(s) for equal parameters and the
//     general functional-equation right-hand side;
//   - the piecewise growth exponent mu(sigma) used for scan densities.

#ifndef LERCH_LERCH_HPP
#define LERCH_LERCH_HPP

#include <utility>
#include <vector>

#include "lerch/hurwitz.hpp"
#include "lerch/policy.hpp"
#include "lerch/rational.hpp"

namespace lerch {

// Caches the root-of-unity table and Hurwitz shifts for one parameter pair;
// cheap to construct, immutable, safe to share across threads.
class LerchEvaluator {
 public:
  LerchEvaluator(LerchParams params, const PrecisionPolicy& policy);

  const LerchParams& params() const { return params_; }
  const PrecisionPolicy& policy() const { return policy_; }
  long common_denominator() const { return d_; }

  // whole-plane value (rational parameters); PoleError at s=1 for lambda=1
  HPComplex value(const HPComplex& s) const;
  std::pair<HPComplex, HPComplex> value_and_deriv(const HPComplex& s) const;

 private:
  LerchParams params_;
  PrecisionPolicy policy_;
  long d_;                        // common denominator
  std::vector<HPComplex> phase_;  // e^(2 pi i lambda k), k < d
  std::vector<HPReal> a_;         // (k + alpha)/d
  HPReal log_d_;
};

struct SeriesResult {
  HPComplex value;
  HPReal tail_bound;  // certified bound on the truncation error
  long terms = 0;
};

// Direct series, sigma > 1 + margin. Returns the partial sum and its
// certified tail bound; throws PrecisionError if the bound cannot reach
// policy.target_error within the term cap *and* the caller did not ask for
// the bound (passing want_bound keeps whatever accuracy was achieved).
SeriesResult lerch_series_bounded(const LerchParams& params, const HPComplex& s,
                                  const PrecisionPolicy& policy, double margin = 0.1,
                                  bool cap_is_error = true);
HPComplex lerch_series(const LerchParams& params, const HPComplex& s,
                       const PrecisionPolicy& policy, double margin = 0.1);

// Hurwitz-decomposition value, rational parameters, whole plane minus the
// lambda = 1 pole at s = 1.
HPComplex lerch_rational(const LerchParams& params, const HPComplex& s,
                         const PrecisionPolicy& policy);

// Single authoritative entry point: rational -> decomposition, irrational ->
// series (sigma > 1.1 only).
HPComplex lerch(const LerchParams& params, const HPComplex& s, const PrecisionPolicy& policy);

// d/ds L(lambda, alpha, s), rational parameters.
HPComplex lerch_deriv(const LerchParams& params, const HPComplex& s,
                      const PrecisionPolicy& policy);

struct FunctionalSplit {
  HPComplex G;
  HPComplex P;
};

// Equal-parameter split: conj(L(l,l,1-conj s)) = G(s) L(l,l,s) + P(s) with
//   G(s) = (2pi)^{-s} Gamma(s) e^{-pi i s/2 + 2 pi i l^2},
//   P(s) = (2pi)^{-s} Gamma(s) e^{+pi i s/2 - 2 pi i (1-l) l} L(1-l, 1-{l}, s).
FunctionalSplit functional_split(const RationalParam& lambda, const HPComplex& s,
                                 const PrecisionPolicy& policy);

// Right-hand side of the functional equation; equals L(lambda, alpha, 1-s).
HPComplex functional_equation_rhs(const LerchParams& params, const HPComplex& s,
                                  const PrecisionPolicy& policy);

// Piecewise-linear upper bound for the growth exponent of
// L(lambda, alpha, sigma + it) in t; breakpoints at sigma = 0, 1/2, 1.
double growth_bound_mu(const LerchParams& params, double sigma, double sigma0 = -2.0);

}  // namespace lerch

#endif  // LERCH_LERCH_HPP
