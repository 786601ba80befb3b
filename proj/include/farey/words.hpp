#pragma once

#include <cstdlib>
#include <string>
#include <vector>

#include "farey/matrix.hpp"

namespace farey {

enum class LRLetter { L, R };

struct LRTerm {
  LRLetter letter;
  Int exponent;  // nonzero
};

// Word in L and R with integer exponents; adjacent terms carry distinct
// letters and the empty word is the identity.
using LRWord = std::vector<LRTerm>;

namespace detail {
inline void push_lr(LRWord& w, LRLetter letter, Int exp) {
  if (exp == 0) return;
  if (!w.empty() && w.back().letter == letter) {
    w.back().exponent += exp;
    if (w.back().exponent == 0) w.pop_back();
    return;
  }
  w.push_back({letter, std::move(exp)});
}
}  // namespace detail

// Decompose A into a word in L and R by the Euclidean algorithm on the
// first column.  Reducing the top row by the bottom strips an L power,
// reducing the bottom by the top strips an R power; the residue is
// +-L^m or +-E L^m, and E itself rewrites as L R^-1 L.
inline LRWord lr_word(const ProjectiveMatrix& m) {
  LRWord w;
  Int a = m.a, b = m.b, c = m.c, d = m.d;
  while (a != 0 && c != 0) {
    if (abs(a) >= abs(c)) {
      Int q = a / c;  // truncated: |a - q c| < |c|
      detail::push_lr(w, LRLetter::L, q);
      a -= q * c;
      b -= q * d;
    } else {
      Int q = c / a;
      detail::push_lr(w, LRLetter::R, q);
      c -= q * a;
      d -= q * b;
    }
  }
  if (c == 0) {
    // +-(1, b; 0, 1) = L^(a*b)
    detail::push_lr(w, LRLetter::L, a * b);
  } else {
    // +-(0, -1; 1, m) = E L^m = L R^-1 L^(1+m)
    Int mexp = c > 0 ? d : -d;
    detail::push_lr(w, LRLetter::L, 1);
    detail::push_lr(w, LRLetter::R, -1);
    detail::push_lr(w, LRLetter::L, mexp + 1);
  }
  return w;
}

inline ProjectiveMatrix lr_eval(const LRWord& w) {
  ProjectiveMatrix m;
  for (const auto& t : w) {
    ProjectiveMatrix f = t.letter == LRLetter::L ? mat_L_pow(t.exponent)
                                                 : mat_R_pow(t.exponent);
    m = multiply(m, f);
  }
  return m;
}

inline std::string format_lr_word(const LRWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += " ";
    out += t.letter == LRLetter::L ? "L" : "R";
    if (t.exponent != 1) out += "^" + t.exponent.str();
  }
  return out;
}

enum class EVLetter { E, V };

struct EVTerm {
  EVLetter letter;
  int exponent;  // E: 1, V: 1 or 2 after reduction
};

using EVWord = std::vector<EVTerm>;

namespace detail {
inline void push_ev(EVWord& w, EVLetter letter, int exp) {
  int mod = letter == EVLetter::E ? 2 : 3;
  if (!w.empty() && w.back().letter == letter) {
    exp += w.back().exponent;
    w.pop_back();
  }
  exp %= mod;
  if (exp < 0) exp += mod;
  if (exp != 0) w.push_back({letter, exp});
}
}  // namespace detail

// Rewrite letter-wise through L = EV^-1, R = EV^-2 and reduce in the free
// product C2 * C3.  The output length is linear in the L/R exponents, so
// this is only suitable for words with moderate exponents.
inline EVWord ev_word(const ProjectiveMatrix& m) {
  EVWord w;
  auto push = [&w](EVLetter l, int e) { detail::push_ev(w, l, e); };
  for (const auto& t : lr_word(m)) {
    long long n = t.exponent.convert_to<long long>();
    bool isL = t.letter == LRLetter::L;
    if (n > 0) {
      for (long long i = 0; i < n; ++i) {
        push(EVLetter::E, 1);
        push(EVLetter::V, isL ? -1 : -2);
      }
    } else {
      for (long long i = 0; i < -n; ++i) {
        push(EVLetter::V, isL ? 1 : 2);
        push(EVLetter::E, 1);
      }
    }
  }
  return w;
}

inline ProjectiveMatrix ev_eval(const EVWord& w) {
  ProjectiveMatrix m;
  for (const auto& t : w)
    for (int i = 0; i < t.exponent; ++i)
      m = multiply(m, t.letter == EVLetter::E ? mat_E() : mat_V());
  return m;
}

inline std::string format_ev_word(const EVWord& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const auto& t : w) {
    if (!out.empty()) out += " ";
    out += t.letter == EVLetter::E ? "E" : "V";
    if (t.exponent != 1) out += "^" + std::to_string(t.exponent);
  }
  return out;
}

}  // namespace farey
