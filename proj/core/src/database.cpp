// database.cpp

#include "lerch/database.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "lerch/errors.hpp"
#include "lerch/version.hpp"

namespace lerch {

namespace {

std::string fmt_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

constexpr const char* kColumns =
    "lambda_num,lambda_den,alpha_num,alpha_den,beta,gamma,residual,class,partner_gamma,"
    "counterpart_abs";

}  // namespace

std::string ZeroDatabase::to_csv() const {
  std::ostringstream os;
  os << "# lerchz zero database\n";
  os << "# version: " << header.tool_version << "\n";
  os << "# lambda: " << header.lambda.str() << "\n";
  os << "# alpha: " << header.alpha.str() << "\n";
  os << "# digits: " << header.digits << "\n";
  os << "# t_min: " << fmt_double(header.t_min) << "\n";
  os << "# t_max: " << fmt_double(header.t_max) << "\n";
  os << "# online_tol: " << fmt_double(header.online_tol) << "\n";
  os << "# pair_tol: " << fmt_double(header.pair_tol) << "\n";
  os << kColumns << "\n";
  for (const auto& r : rows) {
    os << header.lambda.num << ',' << header.lambda.den << ',' << header.alpha.num << ','
       << header.alpha.den << ',' << r.beta << ',' << r.gamma << ',' << r.residual << ','
       << r.klass << ',' << r.partner_gamma << ',' << r.counterpart_abs << "\n";
  }
  return os.str();
}

ZeroDatabase ZeroDatabase::from_csv(const std::string& text) {
  ZeroDatabase db;
  db.header.tool_version = kVersion;
  std::istringstream is(text);
  std::string line;
  bool saw_columns = false;
  long ln = 1, ld = 1, an = 1, ad = 1;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      auto colon = line.find(':');
      if (colon == std::string::npos) continue;
      const std::string key = line.substr(2, colon - 2);
      const std::string val = line.substr(colon + 2);
      if (key == "version") db.header.tool_version = val;
      else if (key == "lambda") db.header.lambda = RationalParam::parse(val);
      else if (key == "alpha") db.header.alpha = RationalParam::parse(val);
      else if (key == "digits") db.header.digits = std::stoi(val);
      else if (key == "t_min") db.header.t_min = std::stod(val);
      else if (key == "t_max") db.header.t_max = std::stod(val);
      else if (key == "online_tol") db.header.online_tol = std::stod(val);
      else if (key == "pair_tol") db.header.pair_tol = std::stod(val);
      continue;
    }
    if (!saw_columns) {
      if (line != kColumns) throw DomainError("zero database: unexpected CSV column header");
      saw_columns = true;
      continue;
    }
    auto f = split(line, ',');
    if (f.size() != 10) throw DomainError("zero database: malformed CSV row");
    ln = std::stol(f[0]); ld = std::stol(f[1]); an = std::stol(f[2]); ad = std::stol(f[3]);
    db.rows.push_back({f[4], f[5], f[6], f[7], f[8], f[9]});
  }
  if (!db.rows.empty()) {
    if (RationalParam(ln, ld) != db.header.lambda || RationalParam(an, ad) != db.header.alpha)
      throw DomainError("zero database: row parameters disagree with the header");
  }
  return db;
}

std::string ZeroDatabase::to_json() const {
  nlohmann::ordered_json j;
  j["format"] = "lerchz-zeros";
  j["version"] = header.tool_version;
  j["lambda"] = header.lambda.str();
  j["alpha"] = header.alpha.str();
  j["digits"] = header.digits;
  j["t_min"] = fmt_double(header.t_min);
  j["t_max"] = fmt_double(header.t_max);
  j["online_tol"] = fmt_double(header.online_tol);
  j["pair_tol"] = fmt_double(header.pair_tol);
  j["zeros"] = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json row;
    row["beta"] = r.beta;
    row["gamma"] = r.gamma;
    row["residual"] = r.residual;
    row["class"] = r.klass;
    row["partner_gamma"] = r.partner_gamma;
    row["counterpart_abs"] = r.counterpart_abs;
    j["zeros"].push_back(std::move(row));
  }
  return j.dump(2) + "\n";
}

ZeroDatabase ZeroDatabase::from_json(const std::string& text) {
  const auto j = nlohmann::ordered_json::parse(text);
  if (j.value("format", "") != "lerchz-zeros")
    throw DomainError("zero database: not a lerchz-zeros JSON file");
  ZeroDatabase db;
  db.header.tool_version = j.value("version", kVersion);
  db.header.lambda = RationalParam::parse(j.at("lambda").get<std::string>());
  db.header.alpha = RationalParam::parse(j.at("alpha").get<std::string>());
  db.header.digits = j.at("digits").get<int>();
  db.header.t_min = std::stod(j.at("t_min").get<std::string>());
  db.header.t_max = std::stod(j.at("t_max").get<std::string>());
  db.header.online_tol = std::stod(j.at("online_tol").get<std::string>());
  db.header.pair_tol = std::stod(j.at("pair_tol").get<std::string>());
  for (const auto& row : j.at("zeros")) {
    db.rows.push_back({row.at("beta").get<std::string>(), row.at("gamma").get<std::string>(),
                       row.at("residual").get<std::string>(), row.at("class").get<std::string>(),
                       row.at("partner_gamma").get<std::string>(),
                       row.at("counterpart_abs").get<std::string>()});
  }
  return db;
}

void ZeroDatabase::save(const std::string& path, const std::string& format) const {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error("zero database: cannot open " + path + " for writing");
  if (format == "csv") os << to_csv();
  else if (format == "json") os << to_json();
  else throw DomainError("zero database: unknown format '" + format + "'");
}

ZeroDatabase ZeroDatabase::load(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error("zero database: cannot open " + path);
  std::stringstream ss;
  ss << is.rdbuf();
  const std::string text = ss.str();
  for (char c : text) {
    if (c == '{') return from_json(text);
    if (!isspace(static_cast<unsigned char>(c))) break;
  }
  return from_csv(text);
}

std::vector<ZeroRecord> ZeroDatabase::records(mpfr_prec_t prec) const {
  std::vector<ZeroRecord> out;
  for (const auto& r : rows) {
    ZeroRecord z;
    z.beta = HPReal::from_string(r.beta, prec);
    z.gamma_t = HPReal::from_string(r.gamma, prec);
    z.residual = HPReal::from_string(r.residual, prec);
    z.radius_bound = 1e-3;  // conservative; certificates are not persisted
    out.push_back(std::move(z));
  }
  return out;
}

ZeroDatabase make_database(const LerchParams& params, int digits, double t_min, double t_max,
                           const std::vector<ZeroRecord>& zeros, const ClassifyResult& cls,
                           const std::vector<HPReal>* counterpart_abs, double online_tol,
                           double pair_tol) {
  if (!params.both_rational()) throw DomainError("make_database: rational parameters required");
  ZeroDatabase db;
  db.header.lambda = *params.lambda.rational;
  db.header.alpha = *params.alpha.rational;
  db.header.digits = digits;
  db.header.t_min = t_min;
  db.header.t_max = t_max;
  db.header.tool_version = kVersion;
  db.header.online_tol = online_tol;
  db.header.pair_tol = pair_tol;
  for (std::size_t i = 0; i < zeros.size(); ++i) {
    ZeroDatabaseRow row;
    row.beta = zeros[i].beta.to_string(digits);
    row.gamma = zeros[i].gamma_t.to_string(digits);
    row.residual = zeros[i].residual.to_string(6);
    row.klass = cls.classes[i].klass == ZeroClass::off_line ? "off_line" : "on_line";
    if (cls.classes[i].partner_index)
      row.partner_gamma = zeros[*cls.classes[i].partner_index].gamma_t.to_string(digits);
    if (counterpart_abs && i < counterpart_abs->size())
      row.counterpart_abs = (*counterpart_abs)[i].to_string(10);
    db.rows.push_back(std::move(row));
  }
  return db;
}

}  // namespace lerch
