// bernoulli.hpp
//
// Exact Bernoulli numbers (convention B_1 = -1/2) and the Euler-Maclaurin
// coefficients B_{2k}/(2k)! derived from them. Values are cached process-wide
// and safe to request from multiple threads.

#ifndef LERCH_BERNOULLI_HPP
#define LERCH_BERNOULLI_HPP

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "lerch/hpreal.hpp"

namespace lerch {

// B_0 .. B_{2*n_max} as exact rationals. n_max is capped (CapExceeded) to
// keep accidental runaway requests from allocating forever.
std::shared_ptr<const std::vector<mpq_class>> bernoulli_numbers(int n_max, int cap = 512);

// B_{2k} for k = 0..n (even-index view of the same cache).
mpq_class bernoulli_even(int k);

// (B_{2k}/(2k)!) for k = 1..count, rounded to `prec` bits. Snapshot is
// immutable; callers hold the shared_ptr while iterating.
std::shared_ptr<const std::vector<HPReal>> em_coefficients(int count, mpfr_prec_t prec);

// Same coefficients in double, for the fast scanning evaluator. k = 1..count;
// count is clamped to the range representable in double (~190).
const std::vector<double>& em_coefficients_double(int count);

}  // namespace lerch

#endif  // LERCH_BERNOULLI_HPP
