// hpreal.hpp
//
// RAII wrapper around mpfr_t with value semantics. Every value carries its
// own working precision (in bits); binary operations allocate the result at
// the minimum of the operand precisions, so precision never silently
// inflates. Rounding is always to nearest.

#ifndef LERCH_HPREAL_HPP
#define LERCH_HPREAL_HPP

#include <mpfr.h>

#include <cmath>
#include <cstdio>
#include <string>
#include <utility>

#include "lerch/errors.hpp"

namespace lerch {

inline mpfr_prec_t digits_to_bits(int digits10) {
  // 1 digit ~ log2(10) bits, plus headroom for rounding noise.
  return static_cast<mpfr_prec_t>(digits10 * 3.3219280948873623 + 8) + 8;
}

inline int bits_to_digits(mpfr_prec_t bits) {
  return static_cast<int>(static_cast<double>(bits) / 3.3219280948873623);
}

class HPReal {
 public:
  HPReal() { mpfr_init2(v_, 64); mpfr_set_nan(v_); }
  explicit HPReal(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_nan(v_); }
  HPReal(double x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  HPReal(long x, mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  HPReal(const HPReal& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  HPReal(HPReal&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  HPReal& operator=(const HPReal& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  HPReal& operator=(HPReal&& o) noexcept {
    if (this != &o) mpfr_swap(v_, o.v_);
    return *this;
  }
  ~HPReal() { mpfr_clear(v_); }

  static HPReal from_string(const std::string& s, mpfr_prec_t prec) {
    HPReal r(prec);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw DomainError("HPReal: cannot parse '" + s + "'");
    return r;
  }

  // exact rational num/den at the given precision
  static HPReal from_ratio(long num, long den, mpfr_prec_t prec) {
    HPReal r(prec);
    mpfr_set_si(r.v_, num, MPFR_RNDN);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
  }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  // Scientific-notation string with the given number of significant digits.
  std::string to_string(int digits10) const {
    char* cstr = nullptr;
    if (mpfr_asprintf(&cstr, "%.*Re", digits10 - 1, v_) < 0)
      throw Error("HPReal: formatting failed");
    std::string out(cstr);
    mpfr_free_str(cstr);
    return out;
  }

  friend HPReal operator+(const HPReal& a, const HPReal& b) {
    HPReal r(minprec(a, b)); mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend HPReal operator-(const HPReal& a, const HPReal& b) {
    HPReal r(minprec(a, b)); mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend HPReal operator*(const HPReal& a, const HPReal& b) {
    HPReal r(minprec(a, b)); mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend HPReal operator/(const HPReal& a, const HPReal& b) {
    HPReal r(minprec(a, b)); mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN); return r;
  }
  friend HPReal operator-(const HPReal& a) {
    HPReal r(a.prec()); mpfr_neg(r.v_, a.v_, MPFR_RNDN); return r;
  }

  friend HPReal operator+(const HPReal& a, long b) {
    HPReal r(a.prec()); mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend HPReal operator-(const HPReal& a, long b) {
    HPReal r(a.prec()); mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend HPReal operator*(const HPReal& a, long b) {
    HPReal r(a.prec()); mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend HPReal operator/(const HPReal& a, long b) {
    HPReal r(a.prec()); mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN); return r;
  }
  friend HPReal operator*(const HPReal& a, double b) { return a * HPReal(b, a.prec()); }
  friend HPReal operator*(double b, const HPReal& a) { return a * HPReal(b, a.prec()); }
  friend HPReal operator+(const HPReal& a, double b) { return a + HPReal(b, a.prec()); }
  friend HPReal operator-(const HPReal& a, double b) { return a - HPReal(b, a.prec()); }
  friend HPReal operator-(double b, const HPReal& a) { return HPReal(b, a.prec()) - a; }
  friend HPReal operator/(long b, const HPReal& a) {
    HPReal r(a.prec()); mpfr_si_div(r.v_, b, a.v_, MPFR_RNDN); return r;
  }

  HPReal& operator+=(const HPReal& b) { mpfr_add(v_, v_, b.v_, MPFR_RNDN); return *this; }
  HPReal& operator-=(const HPReal& b) { mpfr_sub(v_, v_, b.v_, MPFR_RNDN); return *this; }
  HPReal& operator*=(const HPReal& b) { mpfr_mul(v_, v_, b.v_, MPFR_RNDN); return *this; }
  HPReal& operator/=(const HPReal& b) { mpfr_div(v_, v_, b.v_, MPFR_RNDN); return *this; }

  friend bool operator<(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) < 0; }
  friend bool operator>(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) > 0; }
  friend bool operator<=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) <= 0; }
  friend bool operator>=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) >= 0; }
  friend bool operator==(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const HPReal& a, const HPReal& b) { return mpfr_cmp(a.v_, b.v_) != 0; }
  friend bool operator<(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) < 0; }
  friend bool operator>(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) > 0; }
  friend bool operator<=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) <= 0; }
  friend bool operator>=(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) >= 0; }
  friend bool operator==(const HPReal& a, double b) { return mpfr_cmp_d(a.v_, b) == 0; }

 private:
  static mpfr_prec_t minprec(const HPReal& a, const HPReal& b) {
    return a.prec() < b.prec() ? a.prec() : b.prec();
  }
  mpfr_t v_;
};

// ---- elementary functions ----

inline HPReal abs(const HPReal& a) {
  HPReal r(a.prec()); mpfr_abs(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline HPReal sqrt(const HPReal& a) {
  HPReal r(a.prec()); mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline HPReal exp(const HPReal& a) {
  HPReal r(a.prec()); mpfr_exp(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline HPReal log(const HPReal& a) {
  HPReal r(a.prec()); mpfr_log(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline HPReal sin(const HPReal& a) {
  HPReal r(a.prec()); mpfr_sin(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline HPReal cos(const HPReal& a) {
  HPReal r(a.prec()); mpfr_cos(r.raw(), a.raw(), MPFR_RNDN); return r;
}
inline void sin_cos(HPReal& s, HPReal& c, const HPReal& a) {
  mpfr_sin_cos(s.raw(), c.raw(), a.raw(), MPFR_RNDN);
}
inline HPReal atan2(const HPReal& y, const HPReal& x) {
  HPReal r(y.prec() < x.prec() ? y.prec() : x.prec());
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}
inline HPReal hypot(const HPReal& x, const HPReal& y) {
  HPReal r(y.prec() < x.prec() ? y.prec() : x.prec());
  mpfr_hypot(r.raw(), x.raw(), y.raw(), MPFR_RNDN);
  return r;
}
inline HPReal pow(const HPReal& b, const HPReal& e) {
  HPReal r(b.prec() < e.prec() ? b.prec() : e.prec());
  mpfr_pow(r.raw(), b.raw(), e.raw(), MPFR_RNDN);
  return r;
}
inline HPReal pow_si(const HPReal& b, long e) {
  HPReal r(b.prec()); mpfr_pow_si(r.raw(), b.raw(), e, MPFR_RNDN); return r;
}
inline HPReal floor(const HPReal& a) {
  HPReal r(a.prec()); mpfr_floor(r.raw(), a.raw()); return r;
}
inline HPReal min(const HPReal& a, const HPReal& b) { return a < b ? a : b; }
inline HPReal max(const HPReal& a, const HPReal& b) { return a > b ? a : b; }

inline HPReal const_pi(mpfr_prec_t prec) {
  HPReal r(prec); mpfr_const_pi(r.raw(), MPFR_RNDN); return r;
}
inline HPReal const_catalan(mpfr_prec_t prec) {
  HPReal r(prec); mpfr_const_catalan(r.raw(), MPFR_RNDN); return r;
}
// 10^k as an HPReal, handy for tolerance values like 10^(-digits).
inline HPReal pow10(long k, mpfr_prec_t prec) {
  HPReal r(prec);
  mpfr_set_si(r.raw(), 10, MPFR_RNDN);
  mpfr_pow_si(r.raw(), r.raw(), k, MPFR_RNDN);
  return r;
}

}  // namespace lerch

#endif  // LERCH_HPREAL_HPP
