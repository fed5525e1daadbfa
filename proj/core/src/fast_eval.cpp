// fast_eval.cpp

#include "lerch/fast_eval.hpp"

#include <cmath>
#include <numeric>

#include "lerch/bernoulli.hpp"
#include "lerch/errors.hpp"

namespace lerch {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;
}

std::optional<std::complex<double>> hurwitz_zeta_fast(std::complex<double> s, double a) {
  const double sigma = s.real();
  const long N = std::max({static_cast<long>(std::abs(s) / kPi) + 1, 18L, 2L});

  std::complex<double> acc = 0.0;
  for (long n = 0; n < N; ++n) {
    const double lx = std::log(a + static_cast<double>(n));
    acc += std::exp(-sigma * lx) *
           std::complex<double>(std::cos(s.imag() * lx), -std::sin(s.imag() * lx));
  }
  const double w = a + static_cast<double>(N);
  const double lw = std::log(w);
  const std::complex<double> wpow =
      std::exp(-sigma * lw) * std::complex<double>(std::cos(s.imag() * lw), -std::sin(s.imag() * lw));
  acc += w * wpow / (s - 1.0) + 0.5 * wpow;

  const double target = 2e-15 * std::max(1.0, std::abs(acc));

  // ratio iteration keeps the rising factorial from overflowing
  const auto& coeffs = em_coefficients_double(140);
  std::complex<double> term = coeffs[0] * s * wpow / w;  // k = 1
  const std::complex<double> invw2 = 1.0 / std::complex<double>(w * w);
  double prev_mag = 1e300;
  for (int k = 1; k <= 140; ++k) {
    const double mag = std::abs(term);
    const double denom = sigma + 2.0 * k + 1.0;
    if (denom > 0.0 && mag * std::abs(s + (2.0 * k + 1.0)) / denom <= target)
      return acc;
    if (mag > prev_mag && mag > 4.0 * target) return std::nullopt;
    prev_mag = mag;
    acc += term;
    if (k < 140)
      term *= (coeffs[k] / coeffs[k - 1]) * (s + (2.0 * k - 1.0)) * (s + 2.0 * k) * invw2;
  }
  return std::nullopt;
}

FastLerchEvaluator::FastLerchEvaluator(const LerchParams& params) : d_(1), log_d_(0.0) {
  if (!params.both_rational())
    throw DomainError("FastLerchEvaluator: rational parameters required");
  const RationalParam lq = *params.lambda.rational;
  const RationalParam aq = *params.alpha.rational;
  d_ = std::lcm(lq.den, aq.den);
  const long m1 = lq.num * (d_ / lq.den);
  const long m2 = aq.num * (d_ / aq.den);
  for (long k = 0; k < d_; ++k) {
    const double frac = static_cast<double>(m1 * k % d_) / static_cast<double>(d_);
    phase_.emplace_back(std::cos(2.0 * kPi * frac), std::sin(2.0 * kPi * frac));
    a_.push_back(static_cast<double>(k * d_ + m2) / static_cast<double>(d_ * d_));
  }
  log_d_ = std::log(static_cast<double>(d_));
}

std::optional<std::complex<double>> FastLerchEvaluator::value(std::complex<double> s) const {
  std::complex<double> acc = 0.0;
  for (long k = 0; k < d_; ++k) {
    auto z = hurwitz_zeta_fast(s, a_[k]);
    if (!z) return std::nullopt;
    acc += phase_[k] * *z;
  }
  if (d_ == 1) return acc;
  return std::exp(-s * log_d_) * acc;
}

}  // namespace lerch
