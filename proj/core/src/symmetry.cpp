// symmetry.cpp

#include "lerch/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace lerch {

std::string SymmetryReport::row() const {
  char buf[128];
  std::snprintf(buf, sizeof buf, "%s, %lld, %lld, %.2f", lambda.str().c_str(), n1, n2, pct);
  return buf;
}

ClassifyResult classify_zeros(const std::vector<ZeroRecord>& zeros, const RationalParam& lambda,
                              double t_max, double online_tol, double pair_tol) {
  ClassifyResult res;
  res.classes.resize(zeros.size());
  std::vector<std::size_t> off;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    res.classes[i].zero_index = i;
    const double dev = std::abs(zeros[i].beta_d() - 0.5);
    res.classes[i].klass = dev > online_tol ? ZeroClass::off_line : ZeroClass::on_line;
    if (res.classes[i].klass == ZeroClass::off_line) off.push_back(i);
  }

  // greedy nearest matching by pair residual |(b1+b2)-1| + |g1-g2|
  auto residual = [&](std::size_t i, std::size_t j) {
    return std::abs(zeros[i].beta_d() + zeros[j].beta_d() - 1.0) +
           std::abs(zeros[i].gamma_d() - zeros[j].gamma_d());
  };
  std::vector<bool> used(zeros.size(), false);
  long long unmatched = 0;
  for (std::size_t i : off) {
    if (used[i]) continue;
    double best = 1e300;
    std::size_t best_j = i;
    for (std::size_t j : off) {
      if (j == i || used[j]) continue;
      const double r = residual(i, j);
      if (r < best) {
        best = r;
        best_j = j;
      }
    }
    if (best_j != i && best < pair_tol) {
      used[i] = used[best_j] = true;
      res.classes[i].partner_index = best_j;
      res.classes[best_j].partner_index = i;
      res.classes[i].pair_residual = res.classes[best_j].pair_residual = best;
    } else {
      ++unmatched;  // recorded, not fatal
    }
  }

  res.report.lambda = lambda;
  res.report.t_max = t_max;
  res.report.n1 = static_cast<long long>(zeros.size());
  res.report.n2 = static_cast<long long>(off.size());
  res.report.pct = res.report.n1 ? 100.0 * res.report.n2 / res.report.n1 : 0.0;
  res.report.unmatched = unmatched;
  return res;
}

CounterpartResult counterpart_test(const RationalParam& lambda, const ZeroRecord& zero,
                                   const PrecisionPolicy& policy) {
  policy.validate();
  const mpfr_prec_t prec = policy.bits();
  const RationalParam l1 = lambda.one_minus();
  const LerchParams counterpart(l1, l1);
  const HPComplex rho(at_prec(zero.beta, prec), at_prec(zero.gamma_t, prec));
  const HPReal v = abs(lerch_rational(counterpart, rho, policy));
  const HPReal cap = pow10(-policy.working_digits / 2, prec);
  return {v, v < cap};
}

SumCheck theorem1_sum(const LerchParams& params, const std::vector<ZeroRecord>& zeros, double T) {
  SumCheck sc;
  // accumulate at extended precision: individual (beta - 1/2) can be 1e-30
  HPReal acc(0.0, 256);
  for (const auto& z : zeros) {
    if (z.gamma_d() <= 0.0 || z.gamma_d() > T) continue;
    acc += at_prec(z.beta, 256) - 0.5;
  }
  sc.computed_sum = acc.to_double();
  sc.main_term =
      T / (4.0 * 3.141592653589793) * std::log(params.alpha.to_double() / params.lambda.to_double());
  sc.deviation = sc.computed_sum - sc.main_term;
  return sc;
}

CountResult counting_check(const LerchParams& params, double T, const PrecisionPolicy& policy) {
  const double sigma_hi = 1.0 + params.alpha.to_double();
  return count_zeros_rectangle(params, -1.0, sigma_hi, 0.0, T, policy);
}

std::vector<TwinDiscEntry> twin_disc_report(const LerchParams& params,
                                            const std::vector<ZeroRecord>& zeros,
                                            const ClassifyResult& classification, double r0,
                                            int k_max, const PrecisionPolicy& policy) {
  std::vector<TwinDiscEntry> out;
  for (const auto& cl : classification.classes) {
    if (cl.klass != ZeroClass::off_line) continue;
    TwinDiscEntry e;
    e.zero_index = cl.zero_index;
    try {
      e.annulus = find_zero_free_annulus(params, zeros[cl.zero_index], r0, k_max, zeros, policy);
    } catch (const NoAnnulusFound& ex) {
      e.note = ex.what();
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace lerch
