// hurwitz.cpp
//
// Euler-Maclaurin evaluation of zeta(s,a), valid on the whole plane minus
// s = 1. With w = N + a:
//
//   zeta(s,a) = sum_{n=0}^{N-1} (n+a)^{-s}
//             + w^{1-s}/(s-1) + w^{-s}/2
//             + sum_{k=1}^{M} B_{2k}/(2k)! * (s)_{2k-1} * w^{-s-2k+1} + R_M,
//
//   |R_M| <= |T_{M+1}| * |s + 2M + 1| / (sigma + 2M + 1)   (sigma + 2M+1 > 0),
//
// where (s)_j is the rising factorial and T_{M+1} the first omitted term.
// N ~ max(|s|/pi, working_digits) makes consecutive correction terms decay
// roughly like 4^{-k} until the target is reached, and keeps the remainder
// ratio below ~4 everywhere this library evaluates.
//
// The derivative is the termwise d/ds of the same formula:
//   d T_k = T_k * (H_k - log w),   H_k = sum_{j=0}^{2k-2} 1/(s+j).

#include "lerch/hurwitz.hpp"

#include "lerch/bernoulli.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace {

// sum_{n=0}^{N-1} (n+a)^{-s} added into acc (and its s-derivative into dacc
// when non-null). Raw mpfr loop: this is the hot path of every evaluation.
void direct_sum(HPComplex& acc, HPComplex* dacc, const HPComplex& s, const HPReal& a,
                long N, mpfr_prec_t prec) {
  mpfr_t x, lx, mag, ph, sn, cs, tre, tim, tmp;
  mpfr_inits2(prec, x, lx, mag, ph, sn, cs, tre, tim, tmp, (mpfr_ptr)0);
  for (long n = 0; n < N; ++n) {
    mpfr_add_si(x, a.raw(), n, MPFR_RNDN);
    mpfr_log(lx, x, MPFR_RNDN);
    mpfr_mul(mag, s.re.raw(), lx, MPFR_RNDN);
    mpfr_neg(mag, mag, MPFR_RNDN);
    mpfr_exp(mag, mag, MPFR_RNDN);          // (n+a)^(-sigma)
    mpfr_mul(ph, s.im.raw(), lx, MPFR_RNDN);
    mpfr_sin_cos(sn, cs, ph, MPFR_RNDN);    // e^(-it log) = cos - i sin
    mpfr_mul(tre, mag, cs, MPFR_RNDN);
    mpfr_mul(tim, mag, sn, MPFR_RNDN);
    mpfr_neg(tim, tim, MPFR_RNDN);
    mpfr_add(acc.re.raw(), acc.re.raw(), tre, MPFR_RNDN);
    mpfr_add(acc.im.raw(), acc.im.raw(), tim, MPFR_RNDN);
    if (dacc) {
      mpfr_mul(tmp, lx, tre, MPFR_RNDN);
      mpfr_sub(dacc->re.raw(), dacc->re.raw(), tmp, MPFR_RNDN);
      mpfr_mul(tmp, lx, tim, MPFR_RNDN);
      mpfr_sub(dacc->im.raw(), dacc->im.raw(), tmp, MPFR_RNDN);
    }
  }
  mpfr_clears(x, lx, mag, ph, sn, cs, tre, tim, tmp, (mpfr_ptr)0);
}

std::pair<HPComplex, HPComplex> hurwitz_impl(const HPComplex& s_in, const HPReal& a_in,
                                             const PrecisionPolicy& policy, bool want_deriv) {
  policy.validate();
  const mpfr_prec_t prec = policy.bits();
  if (!(a_in > 0.0)) throw DomainError("hurwitz_zeta: a must be positive");
  if (s_in.im.is_zero() && s_in.re == 1.0) throw PoleError("hurwitz_zeta: pole at s = 1");
  if (!s_in.is_finite()) throw DomainError("hurwitz_zeta: non-finite s");

  const HPComplex s = at_prec(s_in, prec);
  const HPReal a = at_prec(a_in, prec);

  const double mod_s = std::hypot(s.re.to_double(), s.im.to_double());
  const long N = std::max({static_cast<long>(mod_s / 3.141592653589793) + 1,
                           static_cast<long>(policy.working_digits), 2L});

  HPComplex acc(prec), dacc(prec);
  direct_sum(acc, want_deriv ? &dacc : nullptr, s, a, N, prec);

  const HPReal w = a + N;
  const HPReal lw = log(w);
  const HPComplex wpow = exp(-(s * HPComplex(lw)));  // w^{-s}
  const HPComplex sm1 = s - 1L;
  const HPComplex tail_int = HPComplex(w) * wpow / sm1;  // w^{1-s}/(s-1)
  acc += tail_int;
  acc += wpow / 2L;
  if (want_deriv) {
    dacc += -(HPComplex(lw) * tail_int) - tail_int / sm1;
    dacc += -(HPComplex(lw) * wpow) / 2L;
  }

  // scale for the mixed absolute/relative stopping target
  HPReal scale = max(HPReal(1.0, prec), abs(acc));
  const HPReal target = policy.target_error() * scale * HPReal(0.25, prec);

  HPComplex poch = s;                            // (s)_{2k-1}, k = 1
  HPComplex dpoch(HPReal(1.0, prec));            // d/ds (s)_{2k-1}
  const HPComplex invw2 = HPComplex(1L / (w * w));
  HPComplex wfac = wpow * (HPComplex(HPReal(1.0, prec)) / HPComplex(w));  // w^{-s-1}

  auto coeffs = em_coefficients(policy.max_em_terms, prec);
  const double sigma = s.re.to_double();
  HPReal prev_mag(prec);
  mpfr_set_inf(prev_mag.raw(), 1);
  bool certified = false;

  for (int k = 1; k <= policy.max_em_terms; ++k) {
    HPComplex term = poch * wfac * (*coeffs)[k - 1];
    HPReal mag = abs(term);
    const double denom = sigma + 2.0 * k + 1.0;
    if (denom > 0.0) {
      // remainder bound with this term omitted
      HPReal ratio = abs(s + (2L * k + 1L)) / HPReal(denom, prec);
      if (mag * ratio <= target) {
        certified = true;
        break;
      }
    }
    if (mag > prev_mag && mag > target * 4L)
      throw PrecisionError("hurwitz_zeta: Euler-Maclaurin terms diverge before target");
    prev_mag = mag;
    acc += term;
    // d T_k = c_k (poch' - poch log w) w^{-s-2k+1}
    if (want_deriv) dacc += (dpoch - poch * HPComplex(lw)) * wfac * (*coeffs)[k - 1];
    // advance (s)_{2k-1} -> (s)_{2k+1} and its derivative, w^{-s-2k+1} -> ...
    const HPComplex f1 = s + (2L * k - 1L);
    const HPComplex f2 = s + (2L * k);
    if (want_deriv) dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
    poch *= f1 * f2;
    wfac *= invw2;
  }
  if (!certified) throw PrecisionError("hurwitz_zeta: correction-term cap reached");
  if (!acc.is_finite() || (want_deriv && !dacc.is_finite()))
    throw PrecisionError("hurwitz_zeta: non-finite result");
  return {std::move(acc), std::move(dacc)};
}

}  // namespace

HPComplex hurwitz_zeta(const HPComplex& s, const HPReal& a, const PrecisionPolicy& policy) {
  return hurwitz_impl(s, a, policy, false).first;
}

HPComplex hurwitz_zeta_deriv(const HPComplex& s, const HPReal& a, const PrecisionPolicy& policy) {
  return hurwitz_impl(s, a, policy, true).second;
}

std::pair<HPComplex, HPComplex> hurwitz_zeta_pair(const HPComplex& s, const HPReal& a,
                                                  const PrecisionPolicy& policy) {
  return hurwitz_impl(s, a, policy, true);
}

}  // namespace lerch
