#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "farey/errors.hpp"

namespace farey {

// Matrix entries grow without bound during word operations and level
// computations, so everything arithmetic runs on arbitrary-precision
// integers.
using Int = boost::multiprecision::cpp_int;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

inline Int imod(const Int& x, const Int& n) {
  Int r = x % n;
  if (r < 0) r += n;
  return r;
}

inline int sign(const Int& x) { return x < 0 ? -1 : (x > 0 ? 1 : 0); }

inline Int parse_int(const std::string& tok) {
  if (tok.empty()) throw ParseError("empty integer token");
  std::size_t i = (tok[0] == '-' || tok[0] == '+') ? 1 : 0;
  if (i == tok.size()) throw ParseError("bare sign is not an integer: '" + tok + "'");
  for (; i < tok.size(); ++i)
    if (tok[i] < '0' || tok[i] > '9')
      throw ParseError("bad integer token: '" + tok + "'");
  return Int(tok);
}

}  // namespace farey
