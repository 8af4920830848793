#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace relkit {

using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

// Accepts "p", "p/q", optional leading '-'. Rejects q == 0.
inline Rat parse_rat(const std::string& text) {
  auto bad = [&] { return std::invalid_argument("bad rational: '" + text + "'"); };
  auto digits = [&](const std::string& s) {
    if (s.empty()) throw bad();
    for (char ch : s)
      if (ch < '0' || ch > '9') throw bad();
  };
  std::string body = text;
  bool neg = false;
  if (!body.empty() && (body[0] == '-' || body[0] == '+')) {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  auto slash = body.find('/');
  Int num, den = 1;
  if (slash == std::string::npos) {
    digits(body);
    num = Int(body);
  } else {
    std::string p = body.substr(0, slash), q = body.substr(slash + 1);
    digits(p);
    digits(q);
    num = Int(p);
    den = Int(q);
    if (den == 0) throw bad();
  }
  Rat r(num, den);
  return neg ? Rat(-r) : r;
}

inline std::string format_rat(const Rat& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace relkit
