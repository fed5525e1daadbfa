// hurwitz.hpp
//
// Hurwitz zeta zeta(s,a) and its s-derivative on the whole plane (s != 1,
// a > 0), by Euler-Maclaurin summation with a rigorous first-omitted-term
// remainder bound.

#ifndef LERCH_HURWITZ_HPP
#define LERCH_HURWITZ_HPP

#include <utility>

#include "lerch/hpcomplex.hpp"
#include "lerch/policy.hpp"

namespace lerch {

// absolute error <= target_error * max(1, |result|)
HPComplex hurwitz_zeta(const HPComplex& s, const HPReal& a, const PrecisionPolicy& policy);

// d/ds zeta(s,a), same error contract
HPComplex hurwitz_zeta_deriv(const HPComplex& s, const HPReal& a, const PrecisionPolicy& policy);

// {zeta, d/ds zeta} in one pass (shares the expensive direct sum)
std::pair<HPComplex, HPComplex> hurwitz_zeta_pair(const HPComplex& s, const HPReal& a,
                                                  const PrecisionPolicy& policy);

// exact-value lift to a target precision
inline HPReal at_prec(const HPReal& x, mpfr_prec_t prec) {
  HPReal r(prec);
  mpfr_set(r.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline HPComplex at_prec(const HPComplex& z, mpfr_prec_t prec) {
  return {at_prec(z.re, prec), at_prec(z.im, prec)};
}

}  // namespace lerch

#endif  // LERCH_HURWITZ_HPP
