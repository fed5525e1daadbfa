// cli_util.hpp
//
// Small parsing helpers for the lerchz command line.

#ifndef LERCHZ_CLI_UTIL_HPP
#define LERCHZ_CLI_UTIL_HPP

#include <cstdlib>
#include <string>

#include "lerch/hpcomplex.hpp"

namespace lerchz {

// "2", "-1.5", "2+3i", "0.5+9.69i", "-1-3e-2i", "3i", "-i"
inline lerch::HPComplex parse_complex(const std::string& in, mpfr_prec_t prec) {
  std::string s;
  for (char c : in)
    if (!isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw lerch::DomainError("parse_complex: empty input");

  if (s.back() != 'i' && s.back() != 'I')
    return lerch::HPComplex(lerch::HPReal::from_string(s, prec), lerch::HPReal(0.0, prec));

  s.pop_back();  // drop the trailing i
  // split at the last top-level +/- (not an exponent sign, not leading)
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  std::string re_part, im_part;
  if (split == std::string::npos) {
    re_part = "0";
    im_part = s;
  } else {
    re_part = s.substr(0, split);
    im_part = s.substr(split);
  }
  if (im_part.empty() || im_part == "+") im_part = "1";
  if (im_part == "-") im_part = "-1";
  return lerch::HPComplex(lerch::HPReal::from_string(re_part, prec),
                          lerch::HPReal::from_string(im_part, prec));
}

// default working digits: env override, then per-command fallback
inline int default_digits(int fallback) {
  if (const char* env = std::getenv("LERCHZ_DIGITS")) {
    const int d = std::atoi(env);
    if (d >= 15) return d;
  }
  return fallback;
}

}  // namespace lerchz

#endif  // LERCHZ_CLI_UTIL_HPP
