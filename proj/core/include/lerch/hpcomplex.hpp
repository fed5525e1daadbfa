// hpcomplex.hpp
//
// Complex numbers over HPReal. MPFR has no complex layer in 4.x, and mpc is
// not a dependency we carry; the handful of complex elementary functions the
// library needs (exp, log, pow, sqrt) are written out against HPReal.
// Precision follows the same min-of-operands rule as HPReal.

#ifndef LERCH_HPCOMPLEX_HPP
#define LERCH_HPCOMPLEX_HPP

#include <complex>
#include <string>

#include "lerch/hpreal.hpp"

namespace lerch {

class HPComplex {
 public:
  HPReal re, im;

  HPComplex() = default;
  explicit HPComplex(mpfr_prec_t prec) : re(0.0, prec), im(0.0, prec) {}
  HPComplex(HPReal r, HPReal i) : re(std::move(r)), im(std::move(i)) {}
  HPComplex(double r, double i, mpfr_prec_t prec) : re(r, prec), im(i, prec) {}
  explicit HPComplex(const HPReal& r) : re(r), im(0.0, r.prec()) {}

  mpfr_prec_t prec() const { return re.prec() < im.prec() ? re.prec() : im.prec(); }
  int precision_digits() const { return bits_to_digits(prec()); }
  bool is_finite() const { return re.is_finite() && im.is_finite(); }
  std::complex<double> to_complex_double() const { return {re.to_double(), im.to_double()}; }

  std::string to_string(int digits10) const {
    return re.to_string(digits10) + (im.sign() < 0 ? " - " : " + ") +
           lerch::abs(im).to_string(digits10) + "i";
  }

  friend HPComplex operator+(const HPComplex& a, const HPComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend HPComplex operator-(const HPComplex& a, const HPComplex& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend HPComplex operator-(const HPComplex& a) { return {-a.re, -a.im}; }
  friend HPComplex operator*(const HPComplex& a, const HPComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend HPComplex operator*(const HPComplex& a, const HPReal& b) {
    return {a.re * b, a.im * b};
  }
  friend HPComplex operator*(const HPReal& b, const HPComplex& a) { return a * b; }
  friend HPComplex operator/(const HPComplex& a, const HPReal& b) {
    return {a.re / b, a.im / b};
  }
  friend HPComplex operator/(const HPComplex& a, const HPComplex& b) {
    HPReal n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) throw DomainError("HPComplex: division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  HPComplex& operator+=(const HPComplex& b) { re += b.re; im += b.im; return *this; }
  HPComplex& operator-=(const HPComplex& b) { re -= b.re; im -= b.im; return *this; }
  HPComplex& operator*=(const HPComplex& b) { *this = *this * b; return *this; }

  friend HPComplex operator+(const HPComplex& a, long b) { return {a.re + b, a.im}; }
  friend HPComplex operator-(const HPComplex& a, long b) { return {a.re - b, a.im}; }
  friend HPComplex operator-(long b, const HPComplex& a) { return {HPReal(b, a.prec()) - a.re, -a.im}; }
  friend HPComplex operator*(const HPComplex& a, long b) { return {a.re * b, a.im * b}; }
  friend HPComplex operator/(const HPComplex& a, long b) { return {a.re / b, a.im / b}; }
};

inline HPComplex conj(const HPComplex& z) { return {z.re, -z.im}; }
inline HPReal abs(const HPComplex& z) { return hypot(z.re, z.im); }
inline HPReal arg(const HPComplex& z) { return atan2(z.im, z.re); }
inline HPReal norm_sq(const HPComplex& z) { return z.re * z.re + z.im * z.im; }

inline HPComplex exp(const HPComplex& z) {
  HPReal m = exp(z.re);
  HPReal s(z.prec()), c(z.prec());
  sin_cos(s, c, z.im);
  return {m * c, m * s};
}

// principal branch
inline HPComplex log(const HPComplex& z) {
  if (z.re.is_zero() && z.im.is_zero()) throw DomainError("HPComplex: log(0)");
  return {log(abs(z)), atan2(z.im, z.re)};
}

inline HPComplex sqrt(const HPComplex& z) {
  HPReal m = sqrt(abs(z));
  HPReal half_arg = atan2(z.im, z.re) / 2L;
  HPReal s(z.prec()), c(z.prec());
  sin_cos(s, c, half_arg);
  return {m * c, m * s};
}

// z^w, principal branch
inline HPComplex pow(const HPComplex& z, const HPComplex& w) {
  return exp(w * log(z));
}

// b^w for real b > 0 (no branch issues; the common d^(-s) case)
inline HPComplex pow(const HPReal& b, const HPComplex& w) {
  if (b.sign() <= 0) throw DomainError("pow: real base must be positive");
  return exp(w * HPComplex(log(b)));
}

// e^(i*theta)
inline HPComplex unit_phase(const HPReal& theta) {
  HPReal s(theta.prec()), c(theta.prec());
  sin_cos(s, c, theta);
  return {c, s};
}

}  // namespace lerch

#endif  // LERCH_HPCOMPLEX_HPP
