// database.hpp
//
// Flat-file zero databases (CSV and JSON). Values are stored as decimal
// strings at full working precision and kept as strings on load, so a
// write -> read -> write round trip is byte-identical.

#ifndef LERCH_DATABASE_HPP
#define LERCH_DATABASE_HPP

#include <string>
#include <vector>

#include "lerch/symmetry.hpp"

namespace lerch {

struct ZeroDatabaseHeader {
  RationalParam lambda;
  RationalParam alpha;
  int digits = 30;
  double t_min = 0.0;
  double t_max = 0.0;
  std::string tool_version;
  double online_tol = 1e-9;
  double pair_tol = 1e-4;
};

struct ZeroDatabaseRow {
  std::string beta, gamma, residual;  // decimal strings
  std::string klass;                  // "on_line" | "off_line"
  std::string partner_gamma;          // empty when unpaired / on line
  std::string counterpart_abs;        // empty when not computed
};

struct ZeroDatabase {
  ZeroDatabaseHeader header;
  std::vector<ZeroDatabaseRow> rows;

  std::string to_csv() const;
  std::string to_json() const;
  static ZeroDatabase from_csv(const std::string& text);
  static ZeroDatabase from_json(const std::string& text);

  void save(const std::string& path, const std::string& format) const;  // "csv" | "json"
  static ZeroDatabase load(const std::string& path);  // format sniffed from content

  // decoded numeric view (positions at the stated digits)
  std::vector<ZeroRecord> records(mpfr_prec_t prec) const;
};

// Assemble a database from scan + classification (+ optional counterpart
// values, one per zero).
ZeroDatabase make_database(const LerchParams& params, int digits, double t_min, double t_max,
                           const std::vector<ZeroRecord>& zeros, const ClassifyResult& cls,
                           const std::vector<HPReal>* counterpart_abs = nullptr,
                           double online_tol = 1e-9, double pair_tol = 1e-4);

}  // namespace lerch

#endif  // LERCH_DATABASE_HPP
