// zeros.hpp
//
// Locating, counting, refining and certifying nontrivial zeros of
// L(lambda, alpha, s) in the strip -1 <= sigma < 1 + alpha.
//
// The counting primitive tracks the continuous argument of L around a
// rectangle with adaptive step halving (winding number = zero count); a
// Gauss-Legendre L'/L quadrature is kept as an independent cross-check.
// Refinement is Muller's method at full working precision; the second,
// independent localization route integrates s L'(s)/L(s) around a rectangle
// certified to contain exactly one zero.

#ifndef LERCH_ZEROS_HPP
#define LERCH_ZEROS_HPP

#include <optional>
#include <vector>

#include "lerch/lerch.hpp"

namespace lerch {

struct Box {
  double sigma_lo, sigma_hi, t_lo, t_hi;
  double width() const { return sigma_hi - sigma_lo; }
  double height() const { return t_hi - t_lo; }
  bool contains(double sigma, double t) const {
    return sigma >= sigma_lo && sigma <= sigma_hi && t >= t_lo && t <= t_hi;
  }
};

enum class ZeroMethod { muller, contour };

struct ZeroRecord {
  HPReal beta;      // Re rho
  HPReal gamma_t;   // Im rho > 0
  HPReal residual;  // |L(rho)| at final precision
  double radius_bound = 0.0;  // disc of this radius around rho holds exactly 1 zero
  ZeroMethod method = ZeroMethod::muller;

  double beta_d() const { return beta.to_double(); }
  double gamma_d() const { return gamma_t.to_double(); }
};

struct ScanConfig {
  double t_min = 0.0;
  double t_max = 0.0;
  double sigma_lo = -1.0;
  std::optional<double> sigma_hi;  // default: 1 + alpha
  double step_density = 4.0;       // boundary samples per expected zero spacing
  PrecisionPolicy policy{60};
  double online_tol = 1e-9;
  double nudge = 1e-3;
  double boundary_min = 1e-8;  // |L| floor on counting boundaries
  int max_density_doublings = 3;
  bool parallel = true;
  double chunk_height = 16.0;  // concurrent sub-window height
};

struct CountResult {
  long long count = 0;
  double main_term = 0.0;  // (T/2pi) log(T/(2 pi e alpha lambda)), differenced over [t_lo, t_hi]
  double deviation = 0.0;  // count - main_term
  double winding_residual = 0.0;  // |raw winding - count|, < 0.25 by contract
  Box effective{0, 0, 0, 0};      // rectangle actually counted (after nudges)
};

struct AnnulusResult {
  ZeroRecord center;
  int ring_index = 0;  // smallest l with no zeros in (l r0, (l+1) r0]
  double r_inner = 0.0, r_outer = 0.0, r_mid = 0.0;
  long long count_right = 0;  // zeros in |s - rho| < r_mid
  long long count_left = 0;   // zeros in |s - (1 - conj rho)| < r_mid
  bool counts_equal() const { return count_right == count_left; }
};

// Argument-principle count of zeros (with multiplicity) in the rectangle.
// Boundary zeros are detected via the |L| minimum and handled by nudging the
// t bounds; for lambda = 1 a rectangle containing s = 1 gets the pole's -1
// winding contribution added back.
CountResult count_zeros_rectangle(const LerchParams& params, double sigma_lo, double sigma_hi,
                                  double t_lo, double t_hi, const PrecisionPolicy& policy,
                                  double nudge = 1e-3, double boundary_min = 1e-8,
                                  double step_density = 4.0);

// Independent cross-check: round((1/2pi i) contour integral of L'/L) by
// Gauss-Legendre panels. Not used by the scanning pipeline.
long long count_zeros_quadrature(const LerchParams& params, const Box& box,
                                 const PrecisionPolicy& policy);

// All zeros with t in (t_min, t_max], each refined and certified isolated;
// completeness enforced against the full-window count. Sorted by gamma.
// On CompletenessError, whatever was refined before the failure is left in
// *partial_out (when given) so callers can persist partial results.
std::vector<ZeroRecord> scan_zeros(const LerchParams& params, const ScanConfig& config,
                                   std::vector<ZeroRecord>* partial_out = nullptr);

// Muller iteration from a guess assumed within `search_radius` of a true
// zero; result carries residual and a certified one-zero radius.
ZeroRecord refine_zero(const LerchParams& params, const HPComplex& guess,
                       const PrecisionPolicy& policy, double search_radius = 0.5);

// rho = (1/2pi i) oint s L'(s)/L(s) ds over a box certified to hold exactly
// one zero. The independent second method.
HPComplex locate_zero_contour(const LerchParams& params, const Box& box,
                              const PrecisionPolicy& policy);

// Smallest ring (l r0, (l+1) r0] around `center` free of zeros, and
// argument-principle counts of the mid-radius disc and its reflection
// through the critical line. zero_list must be complete for the window.
AnnulusResult find_zero_free_annulus(const LerchParams& params, const ZeroRecord& center,
                                     double r0, int k_max,
                                     const std::vector<ZeroRecord>& zero_list,
                                     const PrecisionPolicy& policy);

// eq.-(4)-style main term, differenced over [t_lo, t_hi]
double counting_main_term(const LerchParams& params, double t_lo, double t_hi);

}  // namespace lerch

#endif  // LERCH_ZEROS_HPP
