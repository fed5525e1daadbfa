// rational.hpp
//
// Exact rational parameters b/d in (0,1] and the (lambda, alpha) parameter
// pair of L(lambda, alpha, s). Rationality is load-bearing: the whole-plane
// evaluation path decomposes L into d Hurwitz zeta values, which only works
// when lambda*d and alpha*d are integers.

#ifndef LERCH_RATIONAL_HPP
#define LERCH_RATIONAL_HPP

#include <numeric>
#include <optional>
#include <string>

#include "lerch/hpcomplex.hpp"

namespace lerch {

struct RationalParam {
  long num = 1;  // b
  long den = 1;  // d

  RationalParam() = default;
  RationalParam(long b, long d) : num(b), den(d) {
    if (d <= 0 || b <= 0) throw DomainError("RationalParam: need 1 <= b <= d");
    long g = std::gcd(b, d);
    num = b / g;
    den = d / g;
    if (num > den) throw DomainError("RationalParam: value must lie in (0,1]");
  }

  // "b/d", also accepts "1" for lambda = 1
  static RationalParam parse(const std::string& s) {
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return {std::stol(s), 1};
      return {std::stol(s.substr(0, slash)), std::stol(s.substr(slash + 1))};
    } catch (const std::exception&) {
      throw DomainError("RationalParam: cannot parse '" + s + "'");
    }
  }

  bool is_one() const { return num == den; }
  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  HPReal value(mpfr_prec_t prec) const { return HPReal::from_ratio(num, den, prec); }
  std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

  // 1 - b/d, mapped back into (0,1] (so 1 - 1 becomes 1, using the
  // periodicity of the lambda slot).
  RationalParam one_minus() const {
    return num == den ? RationalParam(1, 1) : RationalParam(den - num, den);
  }
  // 1 - {b/d}: equals 1 - b/d for b < d and 1 for b = d ({1} = 0).
  RationalParam one_minus_frac() const {
    return num == den ? RationalParam(1, 1) : RationalParam(den - num, den);
  }

  friend bool operator==(const RationalParam& a, const RationalParam& b) {
    return a.num == b.num && a.den == b.den;
  }
};

// One parameter slot: exact rational, or a high-precision real (irrational
// parameters are legal only on the direct-series path, sigma > 1).
struct Param {
  std::optional<RationalParam> rational;
  HPReal real_value;  // used when !rational

  Param(RationalParam q) : rational(q), real_value(q.to_double(), 64) {}
  explicit Param(HPReal x) : real_value(std::move(x)) {
    if (real_value <= 0.0 || real_value > 1.0)
      throw DomainError("Param: value must lie in (0,1]");
  }

  bool is_rational() const { return rational.has_value(); }
  double to_double() const {
    return rational ? rational->to_double() : real_value.to_double();
  }
  HPReal value(mpfr_prec_t prec) const {
    if (rational) return rational->value(prec);
    HPReal r(prec);
    mpfr_set(r.raw(), real_value.raw(), MPFR_RNDN);
    return r;
  }
};

struct LerchParams {
  Param lambda;
  Param alpha;

  LerchParams(Param l, Param a) : lambda(std::move(l)), alpha(std::move(a)) {}
  LerchParams(RationalParam l, RationalParam a) : lambda(l), alpha(a) {}
  static LerchParams equal(RationalParam l) { return {l, l}; }

  bool both_rational() const { return lambda.is_rational() && alpha.is_rational(); }
  bool equal_params() const {
    if (both_rational()) return *lambda.rational == *alpha.rational;
    if (!lambda.is_rational() && !alpha.is_rational())
      return lambda.real_value == alpha.real_value;
    return false;
  }
  std::string str() const {
    auto one = [](const Param& p) {
      return p.is_rational() ? p.rational->str() : p.real_value.to_string(17);
    };
    return "(" + one(lambda) + ", " + one(alpha) + ")";
  }
};

}  // namespace lerch

#endif  // LERCH_RATIONAL_HPP
