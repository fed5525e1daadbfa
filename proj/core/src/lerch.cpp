// lerch.cpp

#include "lerch/lerch.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "lerch/errors.hpp"
#include "lerch/gamma.hpp"

namespace lerch {

namespace {

// e^(2 pi i * num/den) with the fraction reduced mod 1 exactly first
HPComplex root_of_unity(long num, long den, mpfr_prec_t prec) {
  num %= den;
  if (num < 0) num += den;
  HPReal theta = const_pi(prec) * 2L * HPReal::from_ratio(num, den, prec);
  return unit_phase(theta);
}

}  // namespace

LerchEvaluator::LerchEvaluator(LerchParams params, const PrecisionPolicy& policy)
    : params_(std::move(params)), policy_(policy), d_(1), log_d_(policy.bits()) {
  policy_.validate();
  if (!params_.both_rational())
    throw DomainError("LerchEvaluator: whole-plane evaluation needs rational parameters");
  const mpfr_prec_t prec = policy_.bits();
  const RationalParam lq = *params_.lambda.rational;
  const RationalParam aq = *params_.alpha.rational;
  d_ = std::lcm(lq.den, aq.den);
  const long m1 = lq.num * (d_ / lq.den);  // lambda = m1/d
  const long m2 = aq.num * (d_ / aq.den);  // alpha  = m2/d
  phase_.reserve(d_);
  a_.reserve(d_);
  for (long k = 0; k < d_; ++k) {
    phase_.push_back(root_of_unity(m1 * k, d_, prec));
    a_.push_back(HPReal::from_ratio(k * d_ + m2, d_ * d_, prec));  // (k + alpha)/d
  }
  mpfr_set_si(log_d_.raw(), d_, MPFR_RNDN);
  mpfr_log(log_d_.raw(), log_d_.raw(), MPFR_RNDN);
}

HPComplex LerchEvaluator::value(const HPComplex& s_in) const {
  const mpfr_prec_t prec = policy_.bits();
  if (params_.lambda.rational->is_one() && s_in.im.is_zero() && s_in.re == 1.0)
    throw PoleError("lerch: pole at s = 1 for lambda = 1");
  const HPComplex s = at_prec(s_in, prec);
  HPComplex acc(prec);
  for (long k = 0; k < d_; ++k) acc += phase_[k] * hurwitz_zeta(s, a_[k], policy_);
  if (d_ == 1) return acc;
  return exp(-(s * HPComplex(log_d_))) * acc;  // d^{-s} * sum
}

std::pair<HPComplex, HPComplex> LerchEvaluator::value_and_deriv(const HPComplex& s_in) const {
  const mpfr_prec_t prec = policy_.bits();
  if (params_.lambda.rational->is_one() && s_in.im.is_zero() && s_in.re == 1.0)
    throw PoleError("lerch: pole at s = 1 for lambda = 1");
  const HPComplex s = at_prec(s_in, prec);
  HPComplex sum(prec), dsum(prec);
  for (long k = 0; k < d_; ++k) {
    auto [z, dz] = hurwitz_zeta_pair(s, a_[k], policy_);
    sum += phase_[k] * z;
    dsum += phase_[k] * dz;
  }
  if (d_ == 1) return {sum, dsum};
  const HPComplex pref = exp(-(s * HPComplex(log_d_)));
  HPComplex val = pref * sum;
  // d/ds [d^{-s} S(s)] = d^{-s} S'(s) - log(d) d^{-s} S(s)
  HPComplex dval = pref * dsum - HPComplex(log_d_) * val;
  return {std::move(val), std::move(dval)};
}

// ---------------------------------------------------------------------------
// direct series

SeriesResult lerch_series_bounded(const LerchParams& params, const HPComplex& s_in,
                                  const PrecisionPolicy& policy, double margin,
                                  bool cap_is_error) {
  policy.validate();
  const mpfr_prec_t prec = policy.bits();
  const double sigma = s_in.re.to_double();
  if (!(sigma > 1.0 + margin))
    throw DomainError("lerch_series: needs sigma > 1 + margin");
  const HPComplex s = at_prec(s_in, prec);
  const HPReal alpha = params.alpha.value(prec);
  const double alpha_d = alpha.to_double();
  const double mod_s = std::hypot(s.re.to_double(), s.im.to_double());

  const bool lambda_rational = params.lambda.is_rational();
  long m1 = 0, d = 1;
  if (lambda_rational) {
    m1 = params.lambda.rational->num;
    d = params.lambda.rational->den;
  }
  const HPReal lambda_val = params.lambda.value(prec);
  const bool oscillates = !(lambda_rational && params.lambda.rational->is_one());
  // |sum of phases| <= 1/|sin(pi lambda)| for lambda != 1 (Abel summation)
  const double osc_cap =
      oscillates ? 1.0 / std::abs(std::sin(3.141592653589793 * params.lambda.to_double())) : 0.0;

  const HPReal target = policy.target_error();
  const double log_target = (policy.guard_digits - policy.working_digits) * std::log(10.0);

  HPComplex acc(prec);
  HPReal theta(prec), x(prec), lx(prec);
  const HPReal two_pi = const_pi(prec) * 2L;

  auto tail_log_bound = [&](double M) {
    // integral bound:  (M+a)^{-sigma} + (M+a)^{1-sigma}/(sigma-1)
    double lmaj = -sigma * std::log(M + alpha_d);
    double l_int = lmaj + std::log1p((M + alpha_d) / (sigma - 1.0));
    if (!oscillates) return l_int;
    // Abel bound: S * [(M+a)^{-sigma} (1 + |s|/sigma) + |s| (M+a)^{-sigma-1}]
    double l_abel = std::log(osc_cap) + lmaj +
                    std::log1p(mod_s / sigma + mod_s / (M + alpha_d));
    return std::min(l_int, l_abel);
  };

  long m = 0;
  double log_scale = 0.0;
  for (; m < policy.max_series_terms; ++m) {
    // phase angle 2 pi {lambda m}
    if (lambda_rational) {
      theta = two_pi * HPReal::from_ratio((m % d) * m1 % d, d, prec);
    } else {
      theta = lambda_val * m;
      mpfr_frac(theta.raw(), theta.raw(), MPFR_RNDN);
      theta *= two_pi;
    }
    x = alpha + m;
    lx = log(x);
    acc += unit_phase(theta) * exp(-(s * HPComplex(lx)));
    if ((m & 63) == 63 || m + 1 == policy.max_series_terms) {
      log_scale = std::max(0.0, std::log(std::max(1e-300, abs(acc).to_double())));
      if (tail_log_bound(static_cast<double>(m + 1)) <= log_target + log_scale) {
        ++m;
        break;
      }
    }
  }
  const double lb = tail_log_bound(static_cast<double>(m));
  HPReal bound = exp(HPReal(lb, prec));
  if (lb > log_target + log_scale && cap_is_error)
    throw PrecisionError("lerch_series: tail bound cannot reach target within term cap");
  return {std::move(acc), std::move(bound), m};
}

HPComplex lerch_series(const LerchParams& params, const HPComplex& s,
                       const PrecisionPolicy& policy, double margin) {
  return lerch_series_bounded(params, s, policy, margin, true).value;
}

HPComplex lerch_rational(const LerchParams& params, const HPComplex& s,
                         const PrecisionPolicy& policy) {
  return LerchEvaluator(params, policy).value(s);
}

HPComplex lerch(const LerchParams& params, const HPComplex& s, const PrecisionPolicy& policy) {
  if (params.both_rational()) return lerch_rational(params, s, policy);
  return lerch_series(params, s, policy, 0.1);
}

HPComplex lerch_deriv(const LerchParams& params, const HPComplex& s,
                      const PrecisionPolicy& policy) {
  return LerchEvaluator(params, policy).value_and_deriv(s).second;
}

// ---------------------------------------------------------------------------
// functional equation

namespace {

// e^(i c s) for real rational-free coefficient c, as exp(-c t + i c sigma)
HPComplex exp_i_scaled(const HPReal& c, const HPComplex& s) {
  return exp(HPComplex(-(c * s.im), c * s.re));
}

}  // namespace

FunctionalSplit functional_split(const RationalParam& lambda, const HPComplex& s_in,
                                 const PrecisionPolicy& policy) {
  policy.validate();
  const mpfr_prec_t prec = policy.bits();
  const HPComplex s = at_prec(s_in, prec);
  const HPReal pi = const_pi(prec);
  const HPComplex pref = pow(pi * 2L, -s) * gamma_hp(s, policy);

  const long b = lambda.num, d = lambda.den;
  // lambda^2 and (1-lambda) lambda mod 1, exactly
  const HPComplex e_l2 = root_of_unity(b * b, d * d, prec);
  const HPComplex e_l1ml = root_of_unity((d - b) * b, d * d, prec);

  HPComplex G = pref * exp_i_scaled(-(pi / 2L), s) * e_l2;
  const LerchParams q(lambda.one_minus(), lambda.one_minus_frac());
  HPComplex P = pref * exp_i_scaled(pi / 2L, s) * conj(e_l1ml) *
                lerch_rational(q, s, policy);
  return {std::move(G), std::move(P)};
}

HPComplex functional_equation_rhs(const LerchParams& params, const HPComplex& s_in,
                                  const PrecisionPolicy& policy) {
  policy.validate();
  if (!params.both_rational())
    throw DomainError("functional_equation_rhs: rational parameters required");
  const mpfr_prec_t prec = policy.bits();
  const HPComplex s = at_prec(s_in, prec);
  const HPReal pi = const_pi(prec);
  const HPComplex pref = pow(pi * 2L, -s) * gamma_hp(s, policy);

  const RationalParam lam = *params.lambda.rational;
  const RationalParam alp = *params.alpha.rational;

  // constant phases: alpha*lambda and alpha*(1 - {lambda}), mod 1
  const HPComplex e_al = root_of_unity(alp.num * lam.num, alp.den * lam.den, prec);
  HPComplex e_a1ml;
  if (lam.is_one())
    e_a1ml = root_of_unity(alp.num, alp.den, prec);  // {1} = 0
  else
    e_a1ml = root_of_unity(alp.num * (lam.den - lam.num), alp.den * lam.den, prec);

  const LerchParams first(alp.one_minus(), lam);
  const LerchParams second(alp, lam.one_minus_frac());
  HPComplex t1 = exp_i_scaled(pi / 2L, s) * conj(e_al) * lerch_rational(first, s, policy);
  HPComplex t2 = exp_i_scaled(-(pi / 2L), s) * e_a1ml * lerch_rational(second, s, policy);
  return pref * (t1 + t2);
}

double growth_bound_mu(const LerchParams& params, double sigma, double sigma0) {
  (void)params;  // Lemma's bound does not depend on the parameters
  if (sigma < sigma0) throw DomainError("growth_bound_mu: sigma below sigma0");
  constexpr double kappa = 64.0 / 205.0;
  if (sigma <= 0.0) return 0.5 - sigma;
  if (sigma <= 0.5) return 0.5 + (kappa - 1.0) * sigma;
  if (sigma <= 1.0) return kappa * (1.0 - sigma);
  return 0.0;
}

}  // namespace lerch
