// gamma.hpp
//
// Complex gamma function at arbitrary precision: Stirling series after
// recurrence-shifting Re s above a precision-dependent threshold.

#ifndef LERCH_GAMMA_HPP
#define LERCH_GAMMA_HPP

#include "lerch/hpcomplex.hpp"
#include "lerch/policy.hpp"

namespace lerch {

// Gamma(s). PoleError at non-positive integers; relative error within
// policy.target_error().
HPComplex gamma_hp(const HPComplex& s, const PrecisionPolicy& policy);

// log Gamma(s) (a branch consistent with exp(log_gamma) = Gamma; not
// necessarily the principal log of Gamma).
HPComplex log_gamma_hp(const HPComplex& s, const PrecisionPolicy& policy);

}  // namespace lerch

#endif  // LERCH_GAMMA_HPP
