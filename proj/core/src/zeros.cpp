// zeros.cpp
//
// Zero engine internals.
//
// Counting: continuous-argument (winding) tracking around rectangle
// boundaries. Boundary samples come from the double-precision evaluator
// (absolute error ~1e-12, three orders below the 1e-8 |L| floor enforced on
// boundaries; near-floor samples are re-verified at working precision) and
// are cached per edge line, so bisection reuses parent-edge work. A pass
// with maximum per-interval argument step pi/2 must agree with a pi/3
// refinement pass and land within 0.25 of an integer.
//
// Scanning: the strip window is cut into height-limited chunks along
// validated horizontal lines, chunks run concurrently, and inside a chunk
// boxes are bisected in t (in sigma when a near-symmetric pair shares one
// height; by second-moment contour extraction when even that stalls) until
// each holds a single zero. Zeros are refined by Muller at full precision
// and certified isolated by a one-zero box count. Counts must be conserved
// at every split, and the final list must match an independent full-window
// count.

#include "lerch/zeros.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "lerch/errors.hpp"
#include "lerch/fast_eval.hpp"

namespace lerch {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kTwoPi = 2.0 * kPi;

// BoundaryZeroError with the offending edge attached, so the scanner can
// move the right line instead of guessing.
struct BoundaryHitError : BoundaryZeroError {
  int axis;      // 0: horizontal line (fixed t), 1: vertical line (fixed sigma)
  double fixed;  // the line's fixed coordinate
  double pos;    // position along the line
  BoundaryHitError(const std::string& msg, int ax, double fx, double p)
      : BoundaryZeroError(msg), axis(ax), fixed(fx), pos(p) {}
};

// ---------------------------------------------------------------------------
// boundary winding tracker

class BoundaryTracker {
 public:
  BoundaryTracker(const LerchParams& params, const PrecisionPolicy& policy, double boundary_min,
                  double step_density)
      : params_(params),
        policy_(policy),
        fast_(params),
        boundary_min_(boundary_min),
        step_density_(step_density),
        lambda_alpha_(params.lambda.to_double() * params.alpha.to_double()),
        lambda_is_one_(params.lambda.is_rational() && params.lambda.rational->is_one()) {}

  long long count(const Box& box, double* residual_out = nullptr) {
    const double w1 = winding(box, kPi / 2);
    const double w2 = winding(box, kPi / 3);
    long long c1 = std::llround(w1);
    long long c2 = std::llround(w2);
    double resid = std::abs(w2 - static_cast<double>(c2));
    if (c1 != c2 || resid > 0.25) {
      const double w3 = winding(box, kPi / 4);
      const long long c3 = std::llround(w3);
      resid = std::abs(w3 - static_cast<double>(c3));
      if (c3 != c2 || resid > 0.25)
        throw NonConvergence("count_zeros_rectangle: winding did not stabilize");
      c2 = c3;
    }
    if (lambda_is_one_ && box.sigma_lo < 1.0 && box.sigma_hi > 1.0 && box.t_lo < 0.0 &&
        box.t_hi > 0.0)
      c2 += 1;  // simple pole of zeta at s=1 contributes -1 to the winding
    if (c2 < 0) throw NonConvergence("count_zeros_rectangle: negative winding");
    if (residual_out) *residual_out = resid;
    return c2;
  }

  // min |L| over a sampled cut line (samples stay in the shared cache)
  double min_abs_on_cut(int axis, double fixed, double lo, double hi, int samples = 32) {
    auto& m = cache_[{axis, fixed}];
    double best = 1e300;
    for (int i = 0; i <= samples; ++i) {
      const double p = lo + (hi - lo) * i / samples;
      auto it = m.find(p);
      std::complex<double> v = it != m.end() ? it->second : (m[p] = eval_at(axis, fixed, p));
      best = std::min(best, std::abs(v));
    }
    return best;
  }

 private:
  using SampleMap = std::map<double, std::complex<double>>;

  std::complex<double> eval_at(int axis, double fixed, double pos) {
    const double sigma = axis == 0 ? pos : fixed;
    const double t = axis == 0 ? fixed : pos;
    auto v = fast_.value({sigma, t});
    if (v && std::isfinite(v->real()) && std::isfinite(v->imag()) &&
        std::abs(*v) > 12.0 * boundary_min_)
      return *v;
    // near the floor (or fast path bailed): re-verify at working precision
    HPComplex z = hp().value(HPComplex(sigma, t, policy_.bits()));
    return z.to_complex_double();
  }

  std::complex<double> sample(SampleMap& m, int axis, double fixed, double pos) {
    auto it = m.find(pos);
    if (it != m.end()) return it->second;
    std::complex<double> v = eval_at(axis, fixed, pos);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw BoundaryHitError("boundary sample not finite (pole on boundary?)", axis, fixed, pos);
    if (std::abs(v) < boundary_min_)
      throw BoundaryHitError("boundary passes too close to a zero", axis, fixed, pos);
    m.emplace(pos, v);
    return v;
  }

  double seed_step(double t) const {
    // 2pi / log(t / (2 pi alpha lambda)) estimates the local zero spacing
    const double x = std::max(t, 2.0) / (kTwoPi * std::max(lambda_alpha_, 1e-6));
    const double spacing = kTwoPi / std::max(0.7, std::log(x));
    return std::min(1.0, spacing / step_density_);
  }

  double pair_arg(SampleMap& m, int axis, double fixed, double p1, std::complex<double> v1,
                  double p2, std::complex<double> v2, double theta_max, int depth) {
    const double d = std::arg(v2 * std::conj(v1));
    if (std::abs(d) <= theta_max) return d;
    if (depth <= 0 || p2 - p1 < 1e-9)
      throw BoundaryHitError("argument step will not subdivide (zero on boundary?)", axis, fixed,
                             0.5 * (p1 + p2));
    const double pm = 0.5 * (p1 + p2);
    const std::complex<double> vm = sample(m, axis, fixed, pm);
    return pair_arg(m, axis, fixed, p1, v1, pm, vm, theta_max, depth - 1) +
           pair_arg(m, axis, fixed, pm, vm, p2, v2, theta_max, depth - 1);
  }

  // continuous-argument change along the undirected edge, lo -> hi
  double edge_arg(int axis, double fixed, double lo, double hi, double theta_max) {
    auto& m = cache_[{axis, fixed}];
    sample(m, axis, fixed, lo);
    sample(m, axis, fixed, hi);
    if (axis == 1) {
      for (double p = lo + seed_step(lo); p < hi; p += seed_step(p)) sample(m, axis, fixed, p);
    } else {
      const double step = std::min(0.5, 1.0 / step_density_);
      for (double p = lo + step; p < hi; p += step) sample(m, axis, fixed, p);
    }
    double sum = 0.0;
    auto it = m.lower_bound(lo);
    auto prev = it++;
    for (; it != m.end() && prev->first < hi; prev = it++) {
      if (it->first > hi) break;
      sum += pair_arg(m, axis, fixed, prev->first, prev->second, it->first, it->second, theta_max,
                      48);
    }
    return sum;
  }

  double winding(const Box& b, double theta_max) {
    const double bottom = edge_arg(0, b.t_lo, b.sigma_lo, b.sigma_hi, theta_max);
    const double right = edge_arg(1, b.sigma_hi, b.t_lo, b.t_hi, theta_max);
    const double top = edge_arg(0, b.t_hi, b.sigma_lo, b.sigma_hi, theta_max);
    const double left = edge_arg(1, b.sigma_lo, b.t_lo, b.t_hi, theta_max);
    return (bottom + right - top - left) / kTwoPi;
  }

  LerchEvaluator& hp() {
    if (!hp_) hp_ = std::make_unique<LerchEvaluator>(params_, policy_);
    return *hp_;
  }

  LerchParams params_;
  PrecisionPolicy policy_;
  FastLerchEvaluator fast_;
  std::unique_ptr<LerchEvaluator> hp_;
  double boundary_min_;
  double step_density_;
  double lambda_alpha_;
  bool lambda_is_one_;
  std::map<std::pair<int, double>, SampleMap> cache_;
};

// ---------------------------------------------------------------------------
// Gauss-Legendre rules at working precision (cached per (n, prec))

struct GLRule {
  std::vector<HPReal> nodes, weights;
};

std::shared_ptr<const GLRule> gl_rule(int n, mpfr_prec_t prec) {
  static std::mutex mtx;
  static std::map<std::pair<int, long>, std::shared_ptr<const GLRule>> cache;
  std::lock_guard<std::mutex> lock(mtx);
  auto key = std::make_pair(n, static_cast<long>(prec));
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;

  auto rule = std::make_shared<GLRule>();
  rule->nodes.assign(n, HPReal(prec));
  rule->weights.assign(n, HPReal(prec));
  for (int i = 0; i < (n + 1) / 2; ++i) {
    HPReal x(std::cos(kPi * (i + 0.75) / (n + 0.5)), prec);
    HPReal pn(prec), pnm1(prec), dp(prec);
    for (int iter = 0; iter < 12; ++iter) {  // Newton, quadratic from the cosine seed
      HPReal p0(1.0, prec), p1 = x;
      for (int j = 2; j <= n; ++j) {
        HPReal p = (x * p1 * (2L * j - 1L) - p0 * (j - 1L)) / static_cast<long>(j);
        p0 = p1;
        p1 = p;
      }
      pn = p1;
      pnm1 = p0;
      dp = (x * pn - pnm1) * static_cast<long>(n) / (x * x - 1L);
      x -= pn / dp;
    }
    rule->nodes[i] = x;
    rule->nodes[n - 1 - i] = -x;
    HPReal w = HPReal(2.0, prec) / ((1L - x * x) * dp * dp);
    rule->weights[i] = w;
    rule->weights[n - 1 - i] = w;
  }
  cache[key] = rule;
  return rule;
}

// (1/2pi i) oint s^j L'/L ds for j = 0..n_moments-1, composite Gauss-Legendre
// with `panels` panels per rectangle edge.
std::vector<HPComplex> contour_moments(const LerchEvaluator& ev, const Box& box, int n_moments,
                                       int panels) {
  const mpfr_prec_t prec = ev.policy().bits();
  auto rule = gl_rule(32, prec);
  const HPComplex corners[5] = {
      HPComplex(box.sigma_lo, box.t_lo, prec), HPComplex(box.sigma_hi, box.t_lo, prec),
      HPComplex(box.sigma_hi, box.t_hi, prec), HPComplex(box.sigma_lo, box.t_hi, prec),
      HPComplex(box.sigma_lo, box.t_lo, prec)};
  std::vector<HPComplex> acc(n_moments, HPComplex(prec));
  for (int e = 0; e < 4; ++e) {
    const HPComplex seg = (corners[e + 1] - corners[e]) / static_cast<long>(panels);
    for (int p = 0; p < panels; ++p) {
      const HPComplex a = corners[e] + seg * static_cast<long>(p);
      const HPComplex mid = a + seg / 2L;
      const HPComplex half = seg / 2L;
      for (size_t i = 0; i < rule->nodes.size(); ++i) {
        const HPComplex s = mid + half * rule->nodes[i];
        auto [v, dv] = ev.value_and_deriv(s);
        if (abs(v).is_zero()) throw QuadratureError("contour node hit a zero");
        const HPComplex g = dv / v * rule->weights[i];
        HPComplex spow(HPReal(1.0, prec), HPReal(0.0, prec));
        for (int jm = 0; jm < n_moments; ++jm) {
          acc[jm] += g * spow * half;
          spow *= s;
        }
      }
    }
  }
  const HPReal two_pi = const_pi(prec) * 2L;
  for (auto& z : acc) z = HPComplex(z.im / two_pi, -(z.re / two_pi));  // / (2 pi i)
  return acc;
}

}  // namespace

// ---------------------------------------------------------------------------
// public counting

double counting_main_term(const LerchParams& params, double t_lo, double t_hi) {
  const double al = params.lambda.to_double() * params.alpha.to_double();
  auto m = [&](double T) {
    if (T <= 0.0) return 0.0;
    return T / kTwoPi * std::log(T / (kTwoPi * std::exp(1.0) * al));
  };
  return m(t_hi) - m(t_lo);
}

CountResult count_zeros_rectangle(const LerchParams& params, double sigma_lo, double sigma_hi,
                                  double t_lo, double t_hi, const PrecisionPolicy& policy,
                                  double nudge, double boundary_min, double step_density) {
  policy.validate();
  if (!(sigma_lo < sigma_hi) || !(t_lo < t_hi))
    throw DomainError("count_zeros_rectangle: empty rectangle");
  if (!params.both_rational())
    throw DomainError("count_zeros_rectangle: rational parameters required");

  BoundaryTracker tracker(params, policy, boundary_min, step_density);
  const double n1 = nudge;
  const std::pair<double, double> offs[] = {
      {0, 0},     {n1, 0},        {-n1, 0},         {0, n1},          {0, -n1},
      {n1, n1},   {-n1, -n1},     {2 * n1, 2 * n1}, {-2 * n1, -2 * n1}, {3 * n1, -3 * n1}};
  std::string last_err;
  for (auto [dlo, dhi] : offs) {
    Box box{sigma_lo, sigma_hi, t_lo + dlo, t_hi + dhi};
    if (!(box.t_lo < box.t_hi)) continue;
    try {
      double resid = 0.0;
      const long long c = tracker.count(box, &resid);
      CountResult r;
      r.count = c;
      r.main_term = counting_main_term(params, box.t_lo, box.t_hi);
      r.deviation = static_cast<double>(c) - r.main_term;
      r.winding_residual = resid;
      r.effective = box;
      return r;
    } catch (const BoundaryZeroError& e) {
      last_err = e.what();
    }
  }
  throw BoundaryZeroError("count_zeros_rectangle: nudging failed: " + last_err);
}

long long count_zeros_quadrature(const LerchParams& params, const Box& box,
                                 const PrecisionPolicy& policy) {
  LerchEvaluator ev(params, policy);
  long long prev = -1;
  for (int panels = 2; panels <= 32; panels *= 2) {
    auto mom = contour_moments(ev, box, 1, panels);
    const double i0 = mom[0].re.to_double();
    const long long c = std::llround(i0);
    if (std::abs(i0 - static_cast<double>(c)) < 0.05 && std::abs(mom[0].im.to_double()) < 0.05) {
      if (c == prev) return c;
      prev = c;
    }
  }
  throw QuadratureError("count_zeros_quadrature: contour integral did not settle");
}

// ---------------------------------------------------------------------------
// Muller refinement

namespace {

ZeroRecord certify_record(const LerchParams& params, const PrecisionPolicy& policy,
                          const HPComplex& z, const HPReal& residual, ZeroMethod method) {
  const HPReal res_cap = pow10(-policy.working_digits / 2, policy.bits());
  if (!(residual < res_cap))
    throw NonConvergence("refine_zero: residual " + residual.to_string(3) +
                         " too large for a zero at working precision");
  if (!(z.im > 0.0)) throw DomainError("refine_zero: zero has gamma <= 0");
  BoundaryTracker tracker(params, policy, 1e-8, 4.0);
  const double sb = z.re.to_double(), tb = z.im.to_double();
  double rc = 1e-3;
  for (int attempt = 0; attempt < 8; ++attempt) {
    try {
      const long long c = tracker.count({sb - rc, sb + rc, tb - rc, tb + rc});
      if (c == 1) return ZeroRecord{z.re, z.im, residual, rc, method};
      if (c == 0)
        throw CountNotOne("refine_zero: certification box holds no zero (spurious residual?)");
      rc *= 0.35;  // neighbor inside; shrink
    } catch (const BoundaryZeroError&) {
      rc *= 1.171;
    }
  }
  throw CountNotOne("refine_zero: could not certify a one-zero box (multiple zero?)");
}

}  // namespace

ZeroRecord refine_zero(const LerchParams& params, const HPComplex& guess,
                       const PrecisionPolicy& policy, double search_radius) {
  policy.validate();
  const mpfr_prec_t prec = policy.bits();
  LerchEvaluator ev(params, policy);
  const HPReal step_tol = policy.target_error();
  const HPReal residual_floor = step_tol * HPReal(1e-3, prec);

  HPComplex z0 = at_prec(guess, prec) - HPComplex(1e-3, 0.0, prec);
  HPComplex z1 = at_prec(guess, prec) + HPComplex(1e-3, 0.0, prec);
  HPComplex z2 = at_prec(guess, prec);
  HPComplex f0 = ev.value(z0), f1 = ev.value(z1), f2 = ev.value(z2);

  for (int iter = 0; iter < 200; ++iter) {
    if (abs(f2) < residual_floor) break;  // already at a zero
    const HPComplex q = (z2 - z1) / (z1 - z0);
    const HPComplex q1 = q + 1L;
    const HPComplex A = q * f2 - q * q1 * f1 + q * q * f0;
    const HPComplex B = (q * 2L + 1L) * f2 - q1 * q1 * f1 + q * q * f0;
    const HPComplex C = q1 * f2;
    const HPComplex D = sqrt(B * B - A * C * 4L);
    const HPComplex den = abs(B + D) >= abs(B - D) ? B + D : B - D;
    if (abs(den).is_zero()) throw NonConvergence("muller: degenerate denominator");
    const HPComplex z3 = z2 - (z2 - z1) * (C * 2L) / den;
    if (!z3.is_finite()) throw NonConvergence("muller: non-finite iterate");
    const double drift = std::hypot(z3.re.to_double() - guess.re.to_double(),
                                    z3.im.to_double() - guess.im.to_double());
    if (drift > search_radius)
      throw DriftError("muller: iterate left the search box around the guess");
    const HPReal step = abs(z3 - z2);
    z0 = z1; f0 = f1;
    z1 = z2; f1 = f2;
    z2 = z3; f2 = ev.value(z3);
    if (step < step_tol) return certify_record(params, policy, z2, abs(f2), ZeroMethod::muller);
  }
  if (abs(f2) < residual_floor)
    return certify_record(params, policy, z2, abs(f2), ZeroMethod::muller);
  throw NonConvergence("muller: no convergence within iteration cap");
}

// ---------------------------------------------------------------------------
// single-zero contour localization

HPComplex locate_zero_contour(const LerchParams& params, const Box& box,
                              const PrecisionPolicy& policy) {
  policy.validate();
  {
    BoundaryTracker tracker(params, policy, 1e-8, 4.0);
    if (tracker.count(box) != 1)
      throw CountNotOne("locate_zero_contour: box does not hold exactly one zero");
  }
  LerchEvaluator ev(params, policy);
  const mpfr_prec_t prec = policy.bits();
  const HPReal qtol = policy.target_error() * HPReal(100.0, prec);
  bool have_prev = false;
  HPComplex prev(prec);
  for (int panels = 2; panels <= 64; panels *= 2) {
    auto mom = contour_moments(ev, box, 2, panels);
    const double i0 = mom[0].re.to_double();
    if (std::abs(i0 - 1.0) > 0.1 || std::abs(mom[0].im.to_double()) > 0.1) continue;
    const HPComplex rho = mom[1];
    if (have_prev && abs(rho - prev) < qtol) {
      if (!box.contains(rho.re.to_double(), rho.im.to_double()))
        throw QuadratureError("locate_zero_contour: estimate left the box");
      return rho;
    }
    prev = rho;
    have_prev = true;
  }
  throw QuadratureError("locate_zero_contour: quadrature did not converge");
}

// ---------------------------------------------------------------------------
// strip scan

namespace {

struct ScanContext {
  LerchParams params;
  ScanConfig cfg;
  double sigma_lo, sigma_hi;
  double cut_min;  // min sampled |L| required on a cut line before use
};

// find a horizontal cut with clear boundary near t, within [lo_cap, hi_cap]
double validate_t_cut(BoundaryTracker& tracker, const ScanContext& ctx, double t, double lo_cap,
                      double hi_cap) {
  const double deltas[] = {0.0,  1.0, -1.0, 2.0,  -2.0,  3.5,  -3.5, 5.0,
                           -5.0, 7.0, -7.0, 10.0, -10.0, 14.0, -14.0};
  for (double k : deltas) {
    const double c = t + k * ctx.cfg.nudge;
    if (c < lo_cap || c > hi_cap) continue;
    if (tracker.min_abs_on_cut(0, c, ctx.sigma_lo, ctx.sigma_hi) > ctx.cut_min) return c;
  }
  throw BoundaryZeroError("scan: no clear horizontal cut near t = " + std::to_string(t));
}

// moment extraction for a stalled two-zero box (near-symmetric pair at the
// same height)
std::pair<HPComplex, HPComplex> locate_pair_contour(const ScanContext& ctx, const Box& box) {
  LerchEvaluator ev(ctx.params, ctx.cfg.policy);
  const mpfr_prec_t prec = ctx.cfg.policy.bits();
  const HPReal qtol(1e-12, prec);
  bool have_prev = false;
  HPComplex prev1(prec), prev2(prec);
  for (int panels = 2; panels <= 64; panels *= 2) {
    auto mom = contour_moments(ev, box, 3, panels);
    if (std::abs(mom[0].re.to_double() - 2.0) > 0.1) continue;
    const HPComplex& s1 = mom[1];  // rho1 + rho2
    const HPComplex& s2 = mom[2];  // rho1^2 + rho2^2
    const HPComplex disc = sqrt(s2 * 2L - s1 * s1);
    const HPComplex r1 = (s1 + disc) / 2L;
    const HPComplex r2 = (s1 - disc) / 2L;
    if (have_prev && abs(r1 - prev1) < qtol && abs(r2 - prev2) < qtol) return {r1, r2};
    prev1 = r1;
    prev2 = r2;
    have_prev = true;
  }
  throw QuadratureError("scan: pair moment extraction did not converge");
}

ZeroRecord refine_in_box(const ScanContext& ctx, const Box& box) {
  const mpfr_prec_t prec = ctx.cfg.policy.bits();
  const HPComplex guess(0.5 * (box.sigma_lo + box.sigma_hi), 0.5 * (box.t_lo + box.t_hi), prec);
  const double radius = 1.2 * std::hypot(box.width(), box.height()) + 0.25;
  try {
    ZeroRecord rec = refine_zero(ctx.params, guess, ctx.cfg.policy, radius);
    if (box.contains(rec.beta_d(), rec.gamma_d())) return rec;
  } catch (const DriftError&) {
  } catch (const NonConvergence&) {
  }
  // Muller missed or left the box: localize by contour, then polish
  const HPComplex rho = locate_zero_contour(ctx.params, box, ctx.cfg.policy);
  ZeroRecord rec = refine_zero(ctx.params, rho, ctx.cfg.policy, 0.05);
  rec.method = ZeroMethod::contour;
  if (!box.contains(rec.beta_d(), rec.gamma_d()))
    throw CompletenessError("scan: refined zero escaped its isolation box");
  return rec;
}

void bisect_box(const ScanContext& ctx, BoundaryTracker& tracker, const Box& box, long long count,
                int depth, std::vector<ZeroRecord>& out) {
  if (count == 0) return;
  if (depth > 64) throw CompletenessError("scan: bisection depth exhausted");

  if (count == 1 && box.height() <= 1.0) {
    out.push_back(refine_in_box(ctx, box));
    return;
  }

  // t split: candidate cuts around the midpoint, each validated by sampling
  // and then by the children's own adaptive counts
  if (box.height() > 0.02) {
    const double mid = 0.5 * (box.t_lo + box.t_hi);
    const double span = 0.22 * box.height();
    const double cands[] = {0.0, 0.13, -0.13, 0.29, -0.29, 0.47, -0.47, 0.71, -0.71, 1.0, -1.0};
    for (double k : cands) {
      const double c = mid + k * span;
      try {
        if (tracker.min_abs_on_cut(0, c, box.sigma_lo, box.sigma_hi) <= ctx.cut_min) continue;
        const Box lo{box.sigma_lo, box.sigma_hi, box.t_lo, c};
        const Box hi{box.sigma_lo, box.sigma_hi, c, box.t_hi};
        const long long c_lo = tracker.count(lo);
        const long long c_hi = tracker.count(hi);
        if (c_lo + c_hi != count)
          throw CompletenessError("scan: split counts " + std::to_string(c_lo) + "+" +
                                  std::to_string(c_hi) + " != " + std::to_string(count));
        bisect_box(ctx, tracker, lo, c_lo, depth + 1, out);
        bisect_box(ctx, tracker, hi, c_hi, depth + 1, out);
        return;
      } catch (const BoundaryZeroError&) {
        continue;  // cut line grazes a zero; try the next candidate
      }
    }
  }

  // sigma split (near-symmetric pair at one height, or no clean t cut)
  {
    const double cands[] = {0.5, 0.45, 0.55, 0.4,  0.6,  0.35, 0.65,
                            0.3, 0.7,  0.25, 0.75, 0.2,  0.8};
    for (double c : cands) {
      if (c <= box.sigma_lo + 0.05 || c >= box.sigma_hi - 0.05) continue;
      try {
        if (tracker.min_abs_on_cut(1, c, box.t_lo, box.t_hi) <= ctx.cut_min) continue;
        const Box left{box.sigma_lo, c, box.t_lo, box.t_hi};
        const Box right{c, box.sigma_hi, box.t_lo, box.t_hi};
        const long long c_l = tracker.count(left);
        const long long c_r = tracker.count(right);
        if (c_l + c_r != count) throw CompletenessError("scan: sigma split lost a zero");
        if (c_l == 0 || c_r == 0) continue;  // did not separate; try another line
        bisect_box(ctx, tracker, left, c_l, depth + 1, out);
        bisect_box(ctx, tracker, right, c_r, depth + 1, out);
        return;
      } catch (const BoundaryZeroError&) {
        continue;
      }
    }
  }

  if (count == 2) {
    auto [r1, r2] = locate_pair_contour(ctx, box);
    for (const HPComplex& r : {r1, r2}) {
      ZeroRecord rec = refine_zero(ctx.params, r, ctx.cfg.policy, 0.05);
      rec.method = ZeroMethod::contour;
      if (!box.contains(rec.beta_d(), rec.gamma_d()))
        throw CompletenessError("scan: pair member escaped its box");
      out.push_back(std::move(rec));
    }
    return;
  }
  if (count == 1) {
    out.push_back(refine_in_box(ctx, box));
    return;
  }
  throw CompletenessError("scan: cannot separate a cluster of " + std::to_string(count) +
                          " zeros");
}

}  // namespace

std::vector<ZeroRecord> scan_zeros(const LerchParams& params, const ScanConfig& config,
                                   std::vector<ZeroRecord>* partial_out) {
  config.policy.validate();
  if (!params.both_rational()) throw DomainError("scan_zeros: rational parameters required");
  if (!(config.t_min < config.t_max)) throw DomainError("scan_zeros: empty t window");

  ScanConfig cfg = config;
  double sigma_pad = 0.0;
  double cut_phase = 0.0;
  int density_doublings = 0;
  for (int attempt = 0; attempt < 10; ++attempt) {
    try {
      ScanContext ctx{params, cfg, cfg.sigma_lo - sigma_pad,
                      cfg.sigma_hi.value_or(1.0 + params.alpha.to_double()) + sigma_pad,
                      100.0 * cfg.boundary_min};

      BoundaryTracker main_tracker(params, cfg.policy, cfg.boundary_min, cfg.step_density);
      // bottom cut at or below t_min, top cut at or above t_max; the final
      // list is filtered back to (t_min, t_max], so neither direction can
      // drop an in-window zero
      const double t_bottom =
          validate_t_cut(main_tracker, ctx, cfg.t_min, cfg.t_min - 0.4, cfg.t_min);
      const double t_top = validate_t_cut(main_tracker, ctx, cfg.t_max, cfg.t_max,
                                          cfg.t_max + 0.4);

      std::vector<double> cuts{t_bottom};
      const int n_chunks = std::max(1, static_cast<int>((t_top - t_bottom) / cfg.chunk_height));
      for (int i = 1; i < n_chunks; ++i) {
        const double c = t_bottom + (t_top - t_bottom) * i / n_chunks + cut_phase;
        cuts.push_back(validate_t_cut(main_tracker, ctx, c, c - 0.5, c + 0.5));
      }
      cuts.push_back(t_top);

      struct ChunkOut {
        long long count = 0;
        std::vector<ZeroRecord> zeros;
      };
      std::vector<ChunkOut> results(cuts.size() - 1);
      std::atomic<size_t> next{0};
      std::exception_ptr first_error;
      std::mutex err_mtx;

      auto worker = [&]() {
        for (;;) {
          const size_t i = next.fetch_add(1);
          if (i >= results.size()) return;
          try {
            BoundaryTracker tracker(params, cfg.policy, cfg.boundary_min, cfg.step_density);
            const Box chunk{ctx.sigma_lo, ctx.sigma_hi, cuts[i], cuts[i + 1]};
            const long long c = tracker.count(chunk);
            results[i].count = c;
            bisect_box(ctx, tracker, chunk, c, 0, results[i].zeros);
          } catch (...) {
            std::lock_guard<std::mutex> lk(err_mtx);
            if (!first_error) first_error = std::current_exception();
            return;
          }
        }
      };

      unsigned n_threads = cfg.parallel ? std::max(1u, std::thread::hardware_concurrency()) : 1u;
      n_threads = std::min<unsigned>(n_threads, results.size());
      std::vector<std::thread> pool;
      for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
      for (auto& th : pool) th.join();

      long long total = 0;
      std::vector<ZeroRecord> zeros;
      for (auto& r : results) {
        total += r.count;
        for (auto& z : r.zeros) zeros.push_back(std::move(z));
      }
      if (partial_out) {
        *partial_out = zeros;
        std::sort(partial_out->begin(), partial_out->end(),
                  [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma_t < b.gamma_t; });
      }
      if (first_error) std::rethrow_exception(first_error);
      if (static_cast<long long>(zeros.size()) != total)
        throw CompletenessError("scan: refined zero list does not match chunk counts");

      // independent full-window certification count
      const long long full = main_tracker.count({ctx.sigma_lo, ctx.sigma_hi, t_bottom, t_top});
      if (full != total)
        throw CompletenessError("scan: window count " + std::to_string(full) +
                                " != sum of chunk counts " + std::to_string(total));

      std::sort(zeros.begin(), zeros.end(),
                [](const ZeroRecord& a, const ZeroRecord& b) { return a.gamma_t < b.gamma_t; });
      for (size_t i = 1; i < zeros.size(); ++i) {
        const double dg = zeros[i].gamma_d() - zeros[i - 1].gamma_d();
        const double db = zeros[i].beta_d() - zeros[i - 1].beta_d();
        if (std::hypot(dg, db) < 1e-8)
          throw CompletenessError("scan: two refined zeros coincide (multiple zero?)");
      }
      // clip back to the requested window
      std::vector<ZeroRecord> out;
      for (auto& z : zeros)
        if (z.gamma_d() > cfg.t_min && z.gamma_d() <= cfg.t_max) out.push_back(std::move(z));
      return out;
    } catch (const BoundaryHitError& e) {
      // a zero sits essentially on a scan line; shift the geometry and retry
      if (e.axis == 1)
        sigma_pad += 0.0037;
      else
        cut_phase += 0.31 * cfg.chunk_height / 7.0;
    } catch (const CompletenessError&) {
      if (density_doublings >= cfg.max_density_doublings) throw;
      ++density_doublings;
      cfg.step_density *= 2.0;
      cfg.boundary_min *= 0.25;
    }
  }
  throw CompletenessError("scan_zeros: retries exhausted");
}

// ---------------------------------------------------------------------------
// zero-free annulus and twin-disc counts

namespace {

long long certified_disc_count(BoundaryTracker& tracker, double cs, double ct, double r,
                               const std::vector<ZeroRecord>& zeros) {
  // circumscribing square, then subtract list zeros in the corner regions;
  // each subtracted zero is re-certified by its own one-zero box count
  double h = r;
  for (int attempt = 0;; ++attempt) {
    try {
      const Box square{cs - h, cs + h, ct - h, ct + h};
      long long c = tracker.count(square);
      for (const auto& z : zeros) {
        const double ds = z.beta_d() - cs, dt = z.gamma_d() - ct;
        if (std::max(std::abs(ds), std::abs(dt)) >= h) continue;  // outside the square
        const double dist = std::hypot(ds, dt);
        if (std::abs(dist - r) <= std::max(z.radius_bound * 0.5, 1e-6))
          throw Error("disc count: zero too close to the disc boundary");
        if (dist > r) {
          const double rc = std::min(z.radius_bound, 1e-3);
          const Box cert{z.beta_d() - rc, z.beta_d() + rc, z.gamma_d() - rc, z.gamma_d() + rc};
          if (tracker.count(cert) != 1)
            throw CompletenessError("disc count: corner zero failed re-certification");
          --c;
        }
      }
      if (c < 0) throw CompletenessError("disc count: more corner zeros than square count");
      return c;
    } catch (const BoundaryZeroError&) {
      if (attempt >= 6) throw;
      h *= 1.00371;  // zero on the square edge; growing the square keeps the disc covered
    }
  }
}

}  // namespace

AnnulusResult find_zero_free_annulus(const LerchParams& params, const ZeroRecord& center,
                                     double r0, int k_max,
                                     const std::vector<ZeroRecord>& zero_list,
                                     const PrecisionPolicy& policy) {
  if (!(r0 > 0.0) || k_max < 1) throw DomainError("find_zero_free_annulus: bad r0/k_max");
  const double cb = center.beta_d(), cg = center.gamma_d();

  std::vector<double> dists;
  for (const auto& z : zero_list) {
    const double d = std::hypot(z.beta_d() - cb, z.gamma_d() - cg);
    if (d > 1e-9) dists.push_back(d);  // exclude the center itself
  }
  std::sort(dists.begin(), dists.end());

  int ring = 0;
  for (int l = 1; l <= k_max; ++l) {
    const double lo = l * r0, hi = (l + 1) * r0;
    bool occupied = false;
    for (double d : dists) {
      if (d > lo && d <= hi) {
        occupied = true;
        break;
      }
      if (d > hi) break;
    }
    if (!occupied) {
      ring = l;
      break;
    }
  }
  if (ring == 0)
    throw NoAnnulusFound("find_zero_free_annulus: all " + std::to_string(k_max) +
                         " rings are occupied");

  AnnulusResult res;
  res.center = center;
  res.ring_index = ring;
  res.r_inner = ring * r0;
  res.r_outer = (ring + 1) * r0;
  res.r_mid = 0.5 * (res.r_inner + res.r_outer);

  BoundaryTracker tracker(params, policy, 1e-8, 4.0);
  res.count_right = certified_disc_count(tracker, cb, cg, res.r_mid, zero_list);
  res.count_left = certified_disc_count(tracker, 1.0 - cb, cg, res.r_mid, zero_list);
  return res;
}

}  // namespace lerch
