// test_precision_kernel.cpp
//
// Kernel oracles: classical identities, brute-force series with explicit
// tail bounds, and the algebraic properties (recurrence, shift, precision
// monotonicity) that certify gamma and the Hurwitz zeta.

#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "lerch/bernoulli.hpp"
#include "lerch/gamma.hpp"
#include "lerch/hurwitz.hpp"

using namespace lerch;

namespace {

double tol10(int k) { return std::pow(10.0, k); }

// brute-force sum_{n<N} (n+a)^{-s} with integral tail bound, double precision
std::pair<std::complex<double>, double> hurwitz_series_oracle(std::complex<double> s, double a,
                                                              long N) {
  std::complex<double> acc = 0.0;
  for (long n = 0; n < N; ++n) acc += std::exp(-s * std::log(a + static_cast<double>(n)));
  const double sigma = s.real();
  const double M = a + static_cast<double>(N);
  const double tail = std::pow(M, -sigma) + std::pow(M, 1.0 - sigma) / (sigma - 1.0);
  return {acc, tail};
}

}  // namespace

TEST_CASE("HPReal carries the minimum operand precision") {
  HPReal a(1.5, 256), b(2.5, 128);
  CHECK((a + b).prec() == 128);
  CHECK((a * b).prec() == 128);
  CHECK((a / b).prec() == 128);
  HPComplex z(HPReal(1.0, 200), HPReal(2.0, 200));
  HPComplex w(HPReal(0.5, 100), HPReal(0.25, 100));
  CHECK((z * w).prec() == 100);
}

TEST_CASE("HPReal string round trip and formatting") {
  HPReal x = HPReal::from_string("3.14159265358979323846264338327950288", 200);
  CHECK(x.to_string(30).substr(0, 10) == "3.14159265");
  CHECK_THROWS_AS(HPReal::from_string("not-a-number", 64), DomainError);
}

TEST_CASE("PrecisionPolicy validation") {
  CHECK_THROWS_AS(PrecisionPolicy(10).validate(), DomainError);
  PrecisionPolicy bad(30);
  bad.guard_digits = 3;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  PrecisionPolicy ok(30);
  ok.validate();
  CHECK(ok.target_error().to_double() == doctest::Approx(1e-24));
}

TEST_CASE("Bernoulli numbers: values and defining recurrence") {
  auto b = bernoulli_numbers(8);
  REQUIRE(b->size() == 17);
  CHECK(mpq_class((*b)[0]) == 1);
  CHECK(mpq_class((*b)[1]) == mpq_class(-1, 2));
  CHECK(mpq_class((*b)[2]) == mpq_class(1, 6));
  CHECK(mpq_class((*b)[4]) == mpq_class(-1, 30));
  CHECK(mpq_class((*b)[3]) == 0);
  CHECK(mpq_class((*b)[7]) == 0);

  // sum_{k<=n} C(n+1,k) B_k = 0 for n >= 1
  auto big = bernoulli_numbers(20);
  for (int n = 1; n <= 40; ++n) {
    mpq_class acc(0);
    mpz_class binom;
    for (int k = 0; k <= n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), n + 1, k);
      acc += mpq_class(binom) * (*big)[k];
    }
    CHECK(acc == 0);
  }
  CHECK_THROWS_AS(bernoulli_numbers(600), CapExceeded);
}

TEST_CASE("gamma: classical values") {
  PrecisionPolicy pol(40);
  const mpfr_prec_t prec = pol.bits();
  const HPComplex g_half = gamma_hp(HPComplex(0.5, 0.0, prec), pol);
  CHECK(abs(g_half.re - sqrt(const_pi(prec))).to_double() < tol10(-34));
  CHECK(std::abs(g_half.im.to_double()) < tol10(-34));

  const HPComplex g5 = gamma_hp(HPComplex(5.0, 0.0, prec), pol);
  CHECK(abs(g5.re - HPReal(24.0, prec)).to_double() < tol10(-32));
}

TEST_CASE("gamma: poles at non-positive integers") {
  PrecisionPolicy pol(30);
  CHECK_THROWS_AS(gamma_hp(HPComplex(0.0, 0.0, pol.bits()), pol), PoleError);
  CHECK_THROWS_AS(gamma_hp(HPComplex(-3.0, 0.0, pol.bits()), pol), PoleError);
}

TEST_CASE("gamma: Stirling modulus asymptotic at t = 50") {
  // |Gamma(1-s)| ~ sqrt(2pi) t^{1/2-sigma} e^{-pi t/2} with s = 0.25 + 50i
  PrecisionPolicy pol(40);
  const mpfr_prec_t prec = pol.bits();
  const HPComplex s(0.25, 50.0, prec);
  const HPReal g = abs(gamma_hp(HPComplex(HPReal(1.0, prec)) - s, pol));
  const HPReal pi = const_pi(prec);
  const HPReal asym =
      sqrt(pi * 2L) * exp(HPReal(0.25, prec) * log(HPReal(50.0, prec))) * exp(-(pi * 25L));
  CHECK(std::abs((g / asym).to_double() - 1.0) < 2.0 / 50.0);
}

TEST_CASE("gamma: recurrence property on random samples") {
  PrecisionPolicy pol(30);
  const mpfr_prec_t prec = pol.bits();
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ur(-3.0, 5.0), ut(0.25, 40.0);
  for (int i = 0; i < 25; ++i) {
    const HPComplex s(ur(rng), ut(rng), prec);
    const HPComplex lhs = gamma_hp(s + 1L, pol);
    const HPComplex rhs = s * gamma_hp(s, pol);
    const double scale = std::max(1.0, abs(rhs).to_double());
    CHECK(abs(lhs - rhs).to_double() < 2.0 * pol.target_error().to_double() * scale);
  }
}

TEST_CASE("hurwitz: classical values") {
  PrecisionPolicy pol(40);
  const mpfr_prec_t prec = pol.bits();
  const HPReal pi = const_pi(prec);
  const HPComplex z2 = hurwitz_zeta(HPComplex(2.0, 0.0, prec), HPReal(1.0, prec), pol);
  CHECK(abs(z2.re - pi * pi / 6L).to_double() < tol10(-33));

  // zeta(2, 1/2) = pi^2/2
  const HPComplex zh = hurwitz_zeta(HPComplex(2.0, 0.0, prec), HPReal(0.5, prec), pol);
  CHECK(abs(zh.re - pi * pi / 2L).to_double() < tol10(-33));
}

TEST_CASE("hurwitz: domain and pole errors") {
  PrecisionPolicy pol(30);
  CHECK_THROWS_AS(hurwitz_zeta(HPComplex(1.0, 0.0, pol.bits()), HPReal(1.0, pol.bits()), pol),
                  PoleError);
  CHECK_THROWS_AS(hurwitz_zeta(HPComplex(2.0, 0.0, pol.bits()), HPReal(-0.5, pol.bits()), pol),
                  DomainError);
}

TEST_CASE("hurwitz: frozen direct-series oracle at s = 3+4i, a = 0.7") {
  // oracle: sum_{n<2e5} (n+0.7)^{-s}, tail bound ~1.3e-11 (checked below);
  // frozen reference 0.29816593605026753345997162572 + 2.75912267571399035765622668817 i
  PrecisionPolicy pol(40);
  const mpfr_prec_t prec = pol.bits();
  const HPComplex v = hurwitz_zeta(HPComplex(3.0, 4.0, prec), HPReal(0.7, prec), pol);

  const HPComplex frozen(HPReal::from_string("0.29816593605026753345997162572", prec),
                         HPReal::from_string("2.75912267571399035765622668817", prec));
  CHECK(abs(v - frozen).to_double() < tol10(-28));

  auto [oracle, tail] = hurwitz_series_oracle({3.0, 4.0}, 0.7, 200000);
  CHECK(tail < 2e-11);
  const std::complex<double> vd = v.to_complex_double();
  CHECK(std::abs(vd - oracle) < tail + 1e-10);
}

TEST_CASE("hurwitz: agrees with the direct series for sigma > 1.5") {
  PrecisionPolicy pol(30);
  const mpfr_prec_t prec = pol.bits();
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> us(1.6, 5.0), ut(-30.0, 30.0), ua(0.05, 1.0);
  for (int i = 0; i < 12; ++i) {
    const double sig = us(rng), t = ut(rng), a = ua(rng);
    const HPComplex v = hurwitz_zeta(HPComplex(sig, t, prec), HPReal(a, prec), pol);
    auto [oracle, tail] = hurwitz_series_oracle({sig, t}, a, 60000);
    CHECK(std::abs(v.to_complex_double() - oracle) < tail + 1e-9);
  }
}

TEST_CASE("hurwitz shift identity zeta(s,a) = a^-s + zeta(s,a+1)") {
  PrecisionPolicy pol(30);
  const mpfr_prec_t prec = pol.bits();
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> us(-5.0, 5.0), ut(0.0, 100.0), ua(0.02, 1.0);
  for (int i = 0; i < 20; ++i) {
    const HPComplex s(us(rng), ut(rng), prec);
    if (s.im.is_zero() && s.re == 1.0) continue;
    const HPReal a(ua(rng), prec);
    const HPComplex lhs = hurwitz_zeta(s, a, pol);
    const HPComplex rhs = exp(-(s * HPComplex(log(a)))) + hurwitz_zeta(s, a + 1L, pol);
    const double scale = std::max(1.0, abs(lhs).to_double());
    CHECK(abs(lhs - rhs).to_double() < 2.0 * pol.target_error().to_double() * scale);
  }
}

TEST_CASE("hurwitz: precision monotonicity") {
  const HPComplex s30(0.5, 37.25, PrecisionPolicy(30).bits());
  const HPReal a30(0.3, PrecisionPolicy(30).bits());
  const HPComplex v30 = hurwitz_zeta(s30, a30, PrecisionPolicy(30));
  const HPComplex v40 = hurwitz_zeta(s30, a30, PrecisionPolicy(40));
  const double scale = std::max(1.0, abs(v40).to_double());
  CHECK(abs(at_prec(v30, v40.prec()) - v40).to_double() <
        PrecisionPolicy(30).target_error().to_double() * scale);
}

TEST_CASE("hurwitz derivative: zeta'(2) against the termwise oracle") {
  // termwise series -sum log(n)/n^2 for n < 2e5; integral tail bound
  // (log N + 1)/N ~ 6.6e-5; classical value -0.93754825431584375370257...
  PrecisionPolicy pol(40);
  const mpfr_prec_t prec = pol.bits();
  const HPComplex d = hurwitz_zeta_deriv(HPComplex(2.0, 0.0, prec), HPReal(1.0, prec), pol);

  double oracle = 0.0;
  const long N = 200000;
  for (long n = 2; n < N; ++n) oracle -= std::log(static_cast<double>(n)) / (static_cast<double>(n) * n);
  const double tail = (std::log(static_cast<double>(N)) + 1.0) / N;
  CHECK(std::abs(d.re.to_double() - oracle) < tail + 1e-9);

  const HPReal frozen = HPReal::from_string("-0.93754825431584375370257409456786498", prec);
  CHECK(abs(d.re - frozen).to_double() < tol10(-30));
  CHECK(std::abs(d.im.to_double()) < tol10(-30));
}

TEST_CASE("hurwitz derivative: zeta'(0) = -log(2 pi)/2") {
  PrecisionPolicy pol(30);
  const mpfr_prec_t prec = pol.bits();
  const HPComplex d = hurwitz_zeta_deriv(HPComplex(0.0, 0.0, prec), HPReal(1.0, prec), pol);
  const HPReal expected = -(log(const_pi(prec) * 2L) / 2L);
  CHECK(abs(d.re - expected).to_double() < tol10(-22));
}

TEST_CASE("hurwitz derivative: central finite difference converges at h^2") {
  PrecisionPolicy pol(30);
  const mpfr_prec_t prec = pol.bits();
  const HPComplex s(2.0, 0.0, prec);
  const HPReal a(1.0, prec);
  const HPComplex d = hurwitz_zeta_deriv(s, a, pol);
  const double h0 = std::pow(10.0, -pol.working_digits / 3.0);
  for (double h : {h0, h0 / 2}) {
    const HPComplex hp(h, 0.0, prec);
    const HPComplex fd =
        (hurwitz_zeta(s + hp, a, pol) - hurwitz_zeta(s - hp, a, pol)) / (hp * 2L);
    CHECK(abs(d - fd).to_double() < 10.0 * h * h);
  }
}

TEST_CASE("hurwitz pair returns the same values as the single entry points") {
  PrecisionPolicy pol(30);
  const mpfr_prec_t prec = pol.bits();
  const HPComplex s(-0.5, 21.0, prec);
  const HPReal a(0.4, prec);
  auto [z, dz] = hurwitz_zeta_pair(s, a, pol);
  CHECK(abs(z - hurwitz_zeta(s, a, pol)).to_double() < tol10(-25));
  CHECK(abs(dz - hurwitz_zeta_deriv(s, a, pol)).to_double() < tol10(-25));
}
