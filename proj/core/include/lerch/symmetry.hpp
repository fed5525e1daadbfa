// symmetry.hpp
//
// Turning certified zero lists into the symmetry statistics: on-line /
// off-line classification with near-symmetric pair matching, the strict
// symmetry counterpart test |L(1-l, 1-l, rho)|, the average-symmetry sum
// over (beta - 1/2), the zero-counting check, and twin-disc reports.

#ifndef LERCH_SYMMETRY_HPP
#define LERCH_SYMMETRY_HPP

#include <optional>
#include <string>
#include <vector>

#include "lerch/zeros.hpp"

namespace lerch {

enum class ZeroClass { on_line, off_line };

struct ZeroClassification {
  std::size_t zero_index = 0;
  ZeroClass klass = ZeroClass::on_line;
  std::optional<std::size_t> partner_index;  // off_line only
  double pair_residual = 0.0;                // |(b1+b2)-1| + |g1-g2| for the matched pair
};

struct SymmetryReport {
  RationalParam lambda;
  double t_max = 0.0;
  long long n1 = 0;  // total zeros
  long long n2 = 0;  // zeros with |beta - 1/2| > online_tol
  double pct = 0.0;  // 100 n2 / n1
  long long unmatched = 0;

  // Table-style row "b/d, N1, N2, pct"
  std::string row() const;
};

struct ClassifyResult {
  std::vector<ZeroClassification> classes;
  SymmetryReport report;
};

// online_tol separates on-line from off-line; off-line zeros are greedily
// matched to the partner minimizing the pair residual, accepted under
// pair_tol. Unmatched off-line zeros are counted in the report (a warning,
// not an error).
ClassifyResult classify_zeros(const std::vector<ZeroRecord>& zeros, const RationalParam& lambda,
                              double t_max, double online_tol = 1e-9, double pair_tol = 1e-4);

struct CounterpartResult {
  HPReal counterpart_abs;  // |L(1-lambda, 1-lambda, rho)|
  bool strict_symmetric;   // value below 10^(-working/2)
};

// Strict-symmetry test: a zero of L(l,l,s) is strictly symmetric iff the
// counterpart function vanishes at it.
CounterpartResult counterpart_test(const RationalParam& lambda, const ZeroRecord& zero,
                                   const PrecisionPolicy& policy);

struct SumCheck {
  double computed_sum = 0.0;  // sum over 0 < gamma <= T of (beta - 1/2)
  double main_term = 0.0;     // (T/4pi) log(alpha/lambda)
  double deviation = 0.0;
};

SumCheck theorem1_sum(const LerchParams& params, const std::vector<ZeroRecord>& zeros, double T);

// count over the full strip window (0, T] with the eq.-(4)-style main term
CountResult counting_check(const LerchParams& params, double T, const PrecisionPolicy& policy);

struct TwinDiscEntry {
  std::size_t zero_index = 0;
  std::optional<AnnulusResult> annulus;  // empty when no zero-free ring was found
  std::string note;
};

// find_zero_free_annulus for every off-line zero in the classification
std::vector<TwinDiscEntry> twin_disc_report(const LerchParams& params,
                                            const std::vector<ZeroRecord>& zeros,
                                            const ClassifyResult& classification, double r0,
                                            int k_max, const PrecisionPolicy& policy);

}  // namespace lerch

#endif  // LERCH_SYMMETRY_HPP
