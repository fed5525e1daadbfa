// gamma.cpp
//
// log Gamma(z) for Re z >= threshold via the Stirling series
//
//   (z - 1/2) log z - z + log(2pi)/2 + sum_{k>=1} B_{2k} / ((2k)(2k-1) z^{2k-1}),
//
// remainder after the K-th term bounded by |T_{K+1}| * sec(arg(z)/2)^{2K+4}.
// Smaller Re z is lifted by Gamma(z) = Gamma(z+m) / prod_{j<m} (z+j). The
// threshold 0.7 * working_digits keeps the attainable Stirling floor
// (~ e^{-2pi|z|}) below the target error with a wide margin.

#include "lerch/gamma.hpp"

#include "lerch/bernoulli.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace {

HPComplex log_gamma_stirling(const HPComplex& z, const PrecisionPolicy& policy) {
  const mpfr_prec_t prec = policy.bits();
  const HPReal target = policy.target_error();

  HPComplex lz = log(z);
  HPComplex acc = (z - HPComplex(HPReal::from_ratio(1, 2, prec))) * lz - z;
  HPReal log2pi = log(const_pi(prec) * 2L);
  acc += HPComplex(log2pi / 2L);

  // sec(arg(z)/2)^2 multiplies the remainder bound per term pair
  HPReal half_arg = arg(z) / 2L;
  HPReal sec2 = 1L / (cos(half_arg) * cos(half_arg));
  HPReal bound_factor = sec2 * sec2;

  HPComplex zinv = HPComplex(HPReal(1.0, prec)) / z;
  HPComplex zinv2 = zinv * zinv;
  HPComplex p = zinv;  // z^{1-2k} at k=1
  HPReal prev_mag(prec);
  mpfr_set_inf(prev_mag.raw(), 1);

  for (int k = 1; k <= policy.max_em_terms; ++k) {
    mpq_class cq = bernoulli_even(k) / mpq_class((2 * k) * (2L * k - 1));
    HPReal c(prec);
    mpfr_set_q(c.raw(), cq.get_mpq_t(), MPFR_RNDN);
    HPComplex term = p * c;
    HPReal mag = abs(term);
    if (mag * bound_factor <= target) return acc;  // remainder certified small
    if (mag >= prev_mag)
      throw PrecisionError("gamma: Stirling series stalled before target accuracy");
    acc += term;
    prev_mag = mag;
    p *= zinv2;
    bound_factor *= sec2;
  }
  throw PrecisionError("gamma: Stirling term cap exceeded");
}

}  // namespace

HPComplex log_gamma_hp(const HPComplex& s, const PrecisionPolicy& policy) {
  policy.validate();
  const mpfr_prec_t prec = policy.bits();
  if (s.im.is_zero() && s.re.is_integer() && s.re.sign() <= 0)
    throw PoleError("gamma: pole at non-positive integer " + s.re.to_string(5));
  if (!s.is_finite()) throw DomainError("gamma: non-finite argument");

  const double threshold = 0.7 * policy.working_digits;
  long shift = 0;
  double re = s.re.to_double();
  if (re < threshold) shift = static_cast<long>(threshold - re) + 1;

  HPComplex z(s.re, s.im);
  if (z.prec() < prec) z = HPComplex(HPReal(0.0, prec) + s.re, HPReal(0.0, prec) + s.im);

  HPComplex lg = log_gamma_stirling(z + shift, policy);
  for (long j = 0; j < shift; ++j) lg -= log(z + j);
  if (!lg.is_finite()) throw PrecisionError("gamma: non-finite result");
  return lg;
}

HPComplex gamma_hp(const HPComplex& s, const PrecisionPolicy& policy) {
  HPComplex g = exp(log_gamma_hp(s, policy));
  if (!g.is_finite()) throw PrecisionError("gamma: overflow in exp(log_gamma)");
  return g;
}

}  // namespace lerch
