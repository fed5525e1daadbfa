// lerchz.cpp
//
// Command line driver: evaluate L(lambda,alpha,s), hunt zeros, reproduce the
// distribution table, run identity verification suites, and compare the two
// deep-deviation methods.
//
// Exit codes: 0 success, 2 domain/parse error, 3 numerical non-convergence,
// 4 verification failure.

#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "lerch/database.hpp"
#include "lerch/gamma.hpp"
#include "lerch/version.hpp"
#include "cli_util.hpp"

using namespace lerch;

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;

const std::vector<std::string> kPaperLambdas = {"1/2", "5/9", "4/7", "3/5", "5/8", "2/3",
                                                "7/10", "5/7", "3/4", "7/9", "4/5", "5/6",
                                                "6/7", "7/8", "8/9", "9/10"};

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

RationalParam rat(const std::string& s) { return RationalParam::parse(s); }

struct ScanOutcome {
  std::vector<ZeroRecord> zeros;
  ClassifyResult cls;
};

ScanOutcome scan_and_classify(const RationalParam& lam, const RationalParam& alp, double t_max,
                              int digits, bool serial) {
  LerchParams params(lam, alp);
  ScanConfig cfg;
  cfg.t_min = 0.0;
  cfg.t_max = t_max;
  cfg.policy = PrecisionPolicy(digits);
  cfg.parallel = !serial;
  ScanOutcome out;
  out.zeros = scan_zeros(params, cfg);
  out.cls = classify_zeros(out.zeros, lam, t_max, cfg.online_tol);
  return out;
}

// ---- verify suites -------------------------------------------------------

struct SuiteResult {
  bool pass = true;
  double max_residual = 0.0;
  std::string note;
};

RationalParam random_rational(std::mt19937_64& rng, long d_max = 10) {
  std::uniform_int_distribution<long> dd(2, d_max);
  for (;;) {
    const long d = dd(rng);
    std::uniform_int_distribution<long> bb(1, d);
    const long b = bb(rng);
    if (std::gcd(b, d) == 1) return {b, d};
  }
}

SuiteResult suite_funceq(int samples, uint64_t seed, int digits) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> us(-1.5, 2.0), ut(2.0, 40.0);
  const PrecisionPolicy pol(digits);
  const mpfr_prec_t prec = pol.bits();
  SuiteResult res;
  const double tol = std::pow(10.0, -digits + 10);
  const int pairs = std::max(1, samples / 10);
  for (int p = 0; p < pairs; ++p) {
    const LerchParams params(random_rational(rng), random_rational(rng));
    for (int i = 0; i < 10; ++i) {
      const HPComplex s(us(rng), ut(rng), prec);
      const HPComplex lhs = lerch::lerch(params, HPComplex(1.0, 0.0, prec) - s, pol);
      const HPComplex rhs = functional_equation_rhs(params, s, pol);
      res.max_residual = std::max(res.max_residual, abs(lhs - rhs).to_double());
    }
  }
  res.pass = res.max_residual < tol;
  return res;
}

SuiteResult suite_conjugation(int samples, uint64_t seed, int digits) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> us(-1.0, 2.0), ut(1.0, 40.0);
  const PrecisionPolicy pol(digits);
  const mpfr_prec_t prec = pol.bits();
  SuiteResult res;
  for (int i = 0; i < samples; ++i) {
    const RationalParam l = random_rational(rng), a = random_rational(rng);
    const HPComplex s(us(rng), ut(rng), prec);
    const HPComplex lhs = conj(lerch::lerch(LerchParams(l, a), s, pol));
    const HPComplex rhs = lerch::lerch(LerchParams(l.is_one() ? l : l.one_minus(), a), conj(s), pol);
    res.max_residual = std::max(res.max_residual, abs(lhs - rhs).to_double());
  }
  res.pass = res.max_residual < std::pow(10.0, -digits + 10);
  return res;
}

SuiteResult suite_special_cases(int samples, uint64_t seed, int digits) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> us(-2.0, 3.0), ut(0.5, 30.0);
  const PrecisionPolicy pol(digits);
  const mpfr_prec_t prec = pol.bits();
  SuiteResult res;
  const HPReal one(1.0, prec);
  for (int i = 0; i < samples; ++i) {
    const HPComplex s(us(rng), ut(rng), prec);
    const HPComplex zeta_s = hurwitz_zeta(s, one, pol);
    const HPComplex two_pow = pow(HPReal(2.0, prec), s);

    // L(1,1,s) = zeta(s)
    double r = abs(lerch::lerch(LerchParams(rat("1"), rat("1")), s, pol) - zeta_s).to_double();
    // L(1/2,1,s) = (1 - 2^{1-s}) zeta(s)
    const HPComplex eta_f = HPComplex(one) - pow(HPReal(2.0, prec), HPComplex(one) - s);
    r = std::max(r,
                 abs(lerch::lerch(LerchParams(rat("1/2"), rat("1")), s, pol) - eta_f * zeta_s).to_double());
    // L(1,1/2,s) = (2^s - 1) zeta(s)
    r = std::max(r, abs(lerch::lerch(LerchParams(rat("1"), rat("1/2")), s, pol) -
                        (two_pow - HPComplex(one)) * zeta_s)
                        .to_double());
    // L(1/2,1/2,s) = 2^s L(s,chi_4),  L(s,chi_4) = 4^{-s}(zeta(s,1/4)-zeta(s,3/4))
    const HPComplex chi = pow(HPReal(4.0, prec), -s) *
                          (hurwitz_zeta(s, HPReal::from_ratio(1, 4, prec), pol) -
                           hurwitz_zeta(s, HPReal::from_ratio(3, 4, prec), pol));
    r = std::max(
        r, abs(lerch::lerch(LerchParams(rat("1/2"), rat("1/2")), s, pol) - two_pow * chi).to_double());
    res.max_residual = std::max(res.max_residual, r);
  }
  res.pass = res.max_residual < std::pow(10.0, -digits + 10);
  return res;
}

SuiteResult suite_stirling(int samples, uint64_t seed, int digits) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> us(-1.0, 1.0), ut(20.0, 60.0);
  const PrecisionPolicy pol(digits);
  const mpfr_prec_t prec = pol.bits();
  SuiteResult res;
  for (int i = 0; i < samples; ++i) {
    const double sig = us(rng), t = ut(rng);
    const HPComplex s(sig, t, prec);
    const HPReal g = abs(gamma_hp(HPComplex(HPReal(1.0, prec)) - s, pol));
    const HPReal pi = const_pi(prec);
    const HPReal asym = sqrt(pi * 2L) * exp(HPReal(0.5 - sig, prec) * log(HPReal(t, prec))) *
                        exp(-(pi * HPReal(t, prec) / 2L));
    const double ratio_err = std::abs((g / asym).to_double() - 1.0) * t;
    res.max_residual = std::max(res.max_residual, ratio_err);
  }
  res.pass = res.max_residual < 2.0;  // |ratio - 1| = O(1/t), artifact constant 2
  res.note = "max |ratio-1|*t";
  return res;
}

SuiteResult suite_counting(const RationalParam& lam, const RationalParam& alp, double t_max,
                           int digits) {
  const CountResult c = counting_check(LerchParams(lam, alp), t_max, PrecisionPolicy(digits));
  SuiteResult res;
  res.max_residual = std::abs(c.deviation);
  res.pass = res.max_residual <= 8.0 * std::log(t_max);
  res.note = "count " + std::to_string(c.count) + ", |count - main_term|";
  return res;
}

SuiteResult suite_theorem1(const RationalParam& lam, const RationalParam& alp, double t_max,
                           int digits, bool serial) {
  LerchParams params(lam, alp);
  ScanConfig cfg;
  cfg.t_max = t_max;
  cfg.policy = PrecisionPolicy(digits);
  cfg.parallel = !serial;
  const auto zeros = scan_zeros(params, cfg);
  const SumCheck sc = theorem1_sum(params, zeros, t_max);
  SuiteResult res;
  res.max_residual = std::abs(sc.deviation);
  res.pass = res.max_residual <= 8.0 * std::log(t_max);
  char buf[160];
  std::snprintf(buf, sizeof buf, "sum %.6f, main %.6f, |deviation|", sc.computed_sum,
                sc.main_term);
  res.note = buf;
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lerchz: Lerch zeta-function evaluation and zero statistics"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  // ---- eval ----
  auto* eval_cmd = app.add_subcommand("eval", "evaluate L(lambda, alpha, s)");
  std::string ev_lambda = "1/1", ev_alpha = "1/1", ev_s = "2";
  int ev_digits = lerchz::default_digits(30);
  eval_cmd->add_option("--lambda", ev_lambda, "lambda as b/d");
  eval_cmd->add_option("--alpha", ev_alpha, "alpha as b/d");
  eval_cmd->add_option("--s", ev_s, "point, e.g. \"0.5+9.69i\"");
  eval_cmd->add_option("--digits", ev_digits, "working digits");

  // ---- zeros ----
  auto* zeros_cmd = app.add_subcommand("zeros", "scan, classify and store zeros up to tmax");
  std::string zr_lambda = "1/2", zr_alpha, zr_out, zr_format = "csv";
  double zr_tmax = 50.0;
  int zr_digits = lerchz::default_digits(30);
  bool zr_serial = false;
  zeros_cmd->add_option("--lambda", zr_lambda, "lambda as b/d");
  zeros_cmd->add_option("--alpha", zr_alpha, "alpha as b/d (default: lambda)");
  zeros_cmd->add_option("--tmax", zr_tmax, "height bound");
  zeros_cmd->add_option("--digits", zr_digits, "working digits");
  zeros_cmd->add_option("--out", zr_out, "output database path");
  zeros_cmd->add_option("--format", zr_format, "csv or json");
  zeros_cmd->add_flag("--serial", zr_serial, "disable windowed parallel scan");

  // ---- table ----
  auto* table_cmd = app.add_subcommand("table", "zero distribution rows for a list of lambdas");
  std::string tb_lambdas = "paper";
  double tb_tmax = 300.0;
  int tb_digits = lerchz::default_digits(30);
  bool tb_serial = false;
  table_cmd->add_option("--lambdas", tb_lambdas,
                        "comma list of b/d values, 'paper' for the 16 built-ins, 'none' for none");
  table_cmd->add_option("--tmax", tb_tmax, "height bound");
  table_cmd->add_option("--digits", tb_digits, "working digits");
  table_cmd->add_flag("--serial", tb_serial, "disable windowed parallel scan");

  // ---- verify ----
  auto* verify_cmd = app.add_subcommand("verify", "identity and statistics verification suites");
  std::string vf_suite = "funceq", vf_lambda = "1/2", vf_alpha;
  int vf_samples = 100, vf_digits = lerchz::default_digits(40);
  uint64_t vf_seed = 1;
  double vf_tmax = 100.0;
  bool vf_serial = false;
  verify_cmd->add_option("--suite", vf_suite,
                         "funceq | conjugation | special-cases | stirling | counting | theorem1");
  verify_cmd->add_option("--samples", vf_samples, "sample count");
  verify_cmd->add_option("--seed", vf_seed, "RNG seed");
  verify_cmd->add_option("--digits", vf_digits, "working digits");
  verify_cmd->add_option("--lambda", vf_lambda, "lambda (counting/theorem1)");
  verify_cmd->add_option("--alpha", vf_alpha, "alpha (counting/theorem1; default lambda)");
  verify_cmd->add_option("--tmax", vf_tmax, "height bound (counting/theorem1)");
  verify_cmd->add_flag("--serial", vf_serial, "disable windowed parallel scan");

  // ---- deep ----
  auto* deep_cmd = app.add_subcommand("deep", "two-method real-part deviation of one zero");
  std::string dp_lambda = "3/4";
  int dp_index = 1, dp_digits = lerchz::default_digits(60);
  deep_cmd->add_option("--lambda", dp_lambda, "lambda as b/d (alpha = lambda)");
  deep_cmd->add_option("--index", dp_index, "1-based zero index ordered by height");
  deep_cmd->add_option("--digits", dp_digits, "working digits");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval_cmd) {
      const PrecisionPolicy pol(ev_digits);
      const HPComplex s = lerchz::parse_complex(ev_s, pol.bits());
      const LerchParams params(rat(ev_lambda), rat(ev_alpha));
      const HPComplex v = lerch::lerch(params, s, pol);
      std::printf("L(%s, %s, %s) = %s\n", ev_lambda.c_str(), ev_alpha.c_str(), ev_s.c_str(),
                  v.to_string(ev_digits).c_str());
      std::printf("error bound: %s (mixed abs/rel, d * kernel target)\n",
                  (pol.target_error() *
                   HPReal(static_cast<double>(LerchEvaluator(params, pol).common_denominator()),
                          pol.bits()) *
                   max(HPReal(1.0, pol.bits()), abs(v)))
                      .to_string(3)
                      .c_str());
      return 0;
    }

    if (*zeros_cmd) {
      const RationalParam lam = rat(zr_lambda);
      const RationalParam alp = zr_alpha.empty() ? lam : rat(zr_alpha);
      LerchParams params(lam, alp);
      ScanConfig cfg;
      cfg.t_max = zr_tmax;
      cfg.policy = PrecisionPolicy(zr_digits);
      cfg.parallel = !zr_serial;
      std::vector<ZeroRecord> partial;
      std::vector<ZeroRecord> zeros;
      try {
        zeros = scan_zeros(params, cfg, &partial);
      } catch (const CompletenessError& e) {
        if (!zr_out.empty()) {
          const auto cls = classify_zeros(partial, lam, zr_tmax, cfg.online_tol);
          make_database(params, zr_digits, 0.0, zr_tmax, partial, cls)
              .save(zr_out + ".partial", zr_format);
          std::fprintf(stderr, "completeness failure; partial results in %s.partial\n",
                       zr_out.c_str());
        }
        throw;
      }
      const auto cls = classify_zeros(zeros, lam, zr_tmax, cfg.online_tol);
      std::vector<HPReal> counterparts;
      counterparts.reserve(zeros.size());
      for (const auto& z : zeros)
        counterparts.push_back(counterpart_test(lam, z, cfg.policy).counterpart_abs);
      if (!zr_out.empty()) {
        make_database(params, zr_digits, 0.0, zr_tmax, zeros, cls, &counterparts)
            .save(zr_out, zr_format);
      }
      std::printf("%s\n", cls.report.row().c_str());
      return 0;
    }

    if (*table_cmd) {
      std::vector<std::string> lams;
      if (tb_lambdas == "paper") lams = kPaperLambdas;
      else if (tb_lambdas != "none") lams = split_list(tb_lambdas);
      std::printf("lambda, N1, N2, pct\n");
      for (const auto& ls : lams) {
        const RationalParam lam = rat(ls);
        const auto out = scan_and_classify(lam, lam, tb_tmax, tb_digits, tb_serial);
        std::printf("%s\n", out.cls.report.row().c_str());
        std::fflush(stdout);
      }
      return 0;
    }

    if (*verify_cmd) {
      SuiteResult r;
      const RationalParam lam = rat(vf_lambda);
      const RationalParam alp = vf_alpha.empty() ? lam : rat(vf_alpha);
      if (vf_suite == "funceq") r = suite_funceq(vf_samples, vf_seed, vf_digits);
      else if (vf_suite == "conjugation") r = suite_conjugation(vf_samples, vf_seed, vf_digits);
      else if (vf_suite == "special-cases") r = suite_special_cases(vf_samples, vf_seed, vf_digits);
      else if (vf_suite == "stirling") r = suite_stirling(vf_samples, vf_seed, vf_digits);
      else if (vf_suite == "counting") r = suite_counting(lam, alp, vf_tmax, vf_digits);
      else if (vf_suite == "theorem1") r = suite_theorem1(lam, alp, vf_tmax, vf_digits, vf_serial);
      else throw DomainError("verify: unknown suite '" + vf_suite + "'");
      std::printf("suite %s: %s (max residual %.3e%s%s)\n", vf_suite.c_str(),
                  r.pass ? "PASS" : "FAIL", r.max_residual, r.note.empty() ? "" : "; ",
                  r.note.c_str());
      return r.pass ? 0 : 4;
    }

    if (*deep_cmd) {
      const RationalParam lam = rat(dp_lambda);
      if (dp_index < 1) throw DomainError("deep: index is 1-based");
      LerchParams params(lam, lam);
      ScanConfig cfg;
      cfg.policy = PrecisionPolicy(dp_digits);
      cfg.t_max = 12.0;
      std::vector<ZeroRecord> zeros;
      while (true) {
        zeros = scan_zeros(params, cfg);
        if (static_cast<int>(zeros.size()) >= dp_index || cfg.t_max > 200.0) break;
        cfg.t_max += 8.0;
      }
      if (static_cast<int>(zeros.size()) < dp_index)
        throw DomainError("deep: fewer zeros than requested index below t = 200");
      const ZeroRecord& z = zeros[dp_index - 1];

      // method 1: Muller from the certified zero
      const mpfr_prec_t prec = cfg.policy.bits();
      const ZeroRecord zm =
          refine_zero(params, HPComplex(at_prec(z.beta, prec), at_prec(z.gamma_t, prec)),
                      cfg.policy, 0.05);
      // method 2: contour integral over an isolation box
      double half = 0.3;
      for (int i = dp_index - 2; i <= dp_index; ++i) {
        if (i < 0 || i >= static_cast<int>(zeros.size()) || i == dp_index - 1) continue;
        half = std::min(half, 0.45 * std::abs(zeros[i].gamma_d() - z.gamma_d()));
      }
      const Box box{z.beta_d() - half, z.beta_d() + half, z.gamma_d() - half,
                    z.gamma_d() + half};
      const HPComplex zc = locate_zero_contour(params, box, cfg.policy);

      const HPReal dev_m = at_prec(zm.beta, prec) - HPReal::from_ratio(1, 2, prec);
      const HPReal dev_c = zc.re - HPReal::from_ratio(1, 2, prec);
      const HPReal agree =
          abs(HPComplex(at_prec(zm.beta, prec), at_prec(zm.gamma_t, prec)) - zc);

      std::printf("zero %d of L(%s, %s, s): gamma = %s\n", dp_index, dp_lambda.c_str(),
                  dp_lambda.c_str(), zm.gamma_t.to_string(20).c_str());
      std::printf("Re rho - 1/2 (muller)  = %s\n", dev_m.to_string(3).c_str());
      std::printf("Re rho - 1/2 (contour) = %s\n", dev_c.to_string(3).c_str());
      std::printf("|rho_muller - rho_contour| = %s\n", agree.to_string(3).c_str());

      const HPReal tol = pow10(-std::min(30, dp_digits / 2), prec);
      if (!(agree < tol)) {
        std::fprintf(stderr, "method disagreement exceeds tolerance %s\n",
                     tol.to_string(2).c_str());
        return 3;
      }
      return 0;
    }
  } catch (const DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
  return 0;
}
