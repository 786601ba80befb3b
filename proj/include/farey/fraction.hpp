#pragma once

#include <string>

#include "farey/numeric.hpp"

namespace farey {

// A reduced rational p/q with q >= 0, or one of the two formal infinities
// -1/0 and 1/0.  The infinities bound the extended order from below and
// above; as points of the boundary circle they are the single cusp oo
// (see same_cusp).
struct ExtFraction {
  Int p{0};
  Int q{1};

  ExtFraction() = default;

  ExtFraction(Int num, Int den) {
    if (num == 0 && den == 0) throw ValidationError("0/0 is not a fraction");
    if (den < 0) {
      num = -num;
      den = -den;
    }
    Int g = gcd(abs(num), den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    if (den == 0 && num != 1 && num != -1)
      throw InternalError("infinite fraction not reduced");
    p = std::move(num);
    q = std::move(den);
  }

  static ExtFraction neg_infinity() { return ExtFraction(-1, 0); }
  static ExtFraction pos_infinity() { return ExtFraction(1, 0); }

  // For numerator/denominator pairs that are already coprime (columns of
  // a unimodular matrix); skips the gcd.
  static ExtFraction coprime(Int num, Int den) {
    ExtFraction f;
    if (den < 0) {
      num = -num;
      den = -den;
    }
    f.p = std::move(num);
    f.q = std::move(den);
    return f;
  }

  bool infinite() const { return q == 0; }

  friend bool operator==(const ExtFraction& x, const ExtFraction& y) {
    return x.p == y.p && x.q == y.q;
  }
  friend bool operator!=(const ExtFraction& x, const ExtFraction& y) {
    return !(x == y);
  }

  // Total order: -1/0 < every finite fraction < 1/0.
  friend bool operator<(const ExtFraction& x, const ExtFraction& y) {
    if (x.infinite() || y.infinite()) {
      if (x == y) return false;
      if (x.infinite()) return x.p < 0;
      return y.p > 0;
    }
    return x.p * y.q < y.p * x.q;
  }
  friend bool operator<=(const ExtFraction& x, const ExtFraction& y) {
    return !(y < x);
  }
  friend bool operator>(const ExtFraction& x, const ExtFraction& y) { return y < x; }
  friend bool operator>=(const ExtFraction& x, const ExtFraction& y) {
    return !(x < y);
  }
};

// -1/0 and 1/0 are distinct sequence positions but the same cusp.
inline bool same_cusp(const ExtFraction& x, const ExtFraction& y) {
  if (x.infinite() && y.infinite()) return true;
  return x == y;
}

// p_y*q_x - p_x*q_y; equals 1 on consecutive entries of a generalized
// Farey sequence and is invariant under the Moebius action.
inline Int det_pairing(const ExtFraction& x, const ExtFraction& y) {
  return y.p * x.q - x.p * y.q;
}

inline ExtFraction mediant(const ExtFraction& x, const ExtFraction& y) {
  if (det_pairing(x, y) != 1)
    throw ValidationError("mediant requires unimodular neighbours");
  return ExtFraction(x.p + y.p, x.q + y.q);
}

inline std::string format_fraction(const ExtFraction& x) {
  if (x.infinite()) return x.p > 0 ? "oo" : "-oo";
  if (x.q == 1) return x.p.str();
  return x.p.str() + "/" + x.q.str();
}

inline ExtFraction parse_fraction(const std::string& tok) {
  if (tok == "oo") return ExtFraction::pos_infinity();
  if (tok == "-oo") return ExtFraction::neg_infinity();
  auto slash = tok.find('/');
  if (slash == std::string::npos) return ExtFraction(parse_int(tok), 1);
  Int p = parse_int(tok.substr(0, slash));
  Int q = parse_int(tok.substr(slash + 1));
  if (q == 0) throw ParseError("zero denominator in '" + tok + "'");
  return ExtFraction(p, q);
}

}  // namespace farey
