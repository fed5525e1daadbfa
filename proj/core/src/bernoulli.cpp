// bernoulli.cpp
//
// Recurrence over even indices only: for n >= 1,
//   sum_{k=0}^{n} C(2n+1, 2k) B_{2k} = (2n+1)/2,
// which follows from sum_{j<m} C(m,j) B_j = 0 at m = 2n+1 with B_1 = -1/2.
// Odd Bernoulli numbers beyond B_1 vanish.

#include "lerch/bernoulli.hpp"

#include <mutex>

#include "lerch/errors.hpp"

namespace lerch {

namespace {

std::mutex g_mutex;
// even-index list: g_even[k] = B_{2k}
std::vector<mpq_class> g_even = {mpq_class(1)};

void grow_even_locked(int upto_k) {
  for (int n = static_cast<int>(g_even.size()); n <= upto_k; ++n) {
    mpq_class acc(2 * n + 1, 2);
    mpz_class binom;
    for (int k = 0; k < n; ++k) {
      mpz_bin_uiui(binom.get_mpz_t(), 2 * n + 1, 2 * k);
      acc -= mpq_class(binom) * g_even[k];
    }
    acc /= 2 * n + 1;  // C(2n+1, 2n) = 2n+1
    acc.canonicalize();
    g_even.push_back(acc);
  }
}

}  // namespace

std::shared_ptr<const std::vector<mpq_class>> bernoulli_numbers(int n_max, int cap) {
  if (n_max < 0) throw DomainError("bernoulli_numbers: n_max must be >= 0");
  if (n_max > cap) throw CapExceeded("bernoulli_numbers: n_max exceeds cap");
  std::lock_guard<std::mutex> lock(g_mutex);
  grow_even_locked(n_max);
  auto out = std::make_shared<std::vector<mpq_class>>(2 * n_max + 1, mpq_class(0));
  (*out)[0] = 1;
  if (n_max >= 1) {
    (*out)[1] = mpq_class(-1, 2);
    for (int k = 1; k <= n_max; ++k) (*out)[2 * k] = g_even[k];
  }
  return out;
}

mpq_class bernoulli_even(int k) {
  if (k < 0) throw DomainError("bernoulli_even: negative index");
  std::lock_guard<std::mutex> lock(g_mutex);
  grow_even_locked(k);
  return g_even[k];
}

std::shared_ptr<const std::vector<HPReal>> em_coefficients(int count, mpfr_prec_t prec) {
  std::lock_guard<std::mutex> lock(g_mutex);
  grow_even_locked(count);
  auto out = std::make_shared<std::vector<HPReal>>();
  out->reserve(count);
  mpq_class c;
  mpz_class fact;
  for (int k = 1; k <= count; ++k) {
    mpz_fac_ui(fact.get_mpz_t(), 2 * k);
    c = g_even[k] / mpq_class(fact);
    HPReal x(prec);
    mpfr_set_q(x.raw(), c.get_mpq_t(), MPFR_RNDN);
    out->push_back(std::move(x));
  }
  return out;
}

const std::vector<double>& em_coefficients_double(int count) {
  // |B_{2k}/(2k)!| ~ 2/(2pi)^{2k} underflows double near k = 190
  static const std::vector<double> table = [] {
    std::vector<double> t;
    std::lock_guard<std::mutex> lock(g_mutex);
    grow_even_locked(180);
    mpq_class c;
    mpz_class fact;
    for (int k = 1; k <= 180; ++k) {
      mpz_fac_ui(fact.get_mpz_t(), 2 * k);
      c = g_even[k] / mpq_class(fact);
      t.push_back(c.get_d());
    }
    return t;
  }();
  if (count > static_cast<int>(table.size()))
    throw CapExceeded("em_coefficients_double: beyond double range");
  return table;
}

}  // namespace lerch
