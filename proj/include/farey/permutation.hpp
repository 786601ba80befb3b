#pragma once

#include <algorithm>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "farey/numeric.hpp"

namespace farey {

// Permutation of {1..mu}, stored as 0-based images.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::size_t n) : img_(n) {
    std::iota(img_.begin(), img_.end(), std::size_t{0});
  }
  explicit Permutation(std::vector<std::size_t> images) : img_(std::move(images)) {
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t v : img_) {
      if (v >= img_.size() || seen[v])
        throw ValidationError("not a permutation");
      seen[v] = true;
    }
  }

  std::size_t size() const { return img_.size(); }
  std::size_t operator()(std::size_t i) const { return img_[i]; }
  const std::vector<std::size_t>& images() const { return img_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] != i) return false;
    return true;
  }

  std::size_t fixed_points() const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < img_.size(); ++i)
      if (img_[i] == i) ++k;
    return k;
  }

  Permutation inverse() const {
    std::vector<std::size_t> inv(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
  }

  // (s*t)(i) = s(t(i)), so that a coset homomorphism phi satisfies
  // phi(g h) = phi(g) * phi(h).
  friend Permutation operator*(const Permutation& s, const Permutation& t) {
    std::vector<std::size_t> out(t.img_.size());
    for (std::size_t i = 0; i < t.img_.size(); ++i) out[i] = s.img_[t.img_[i]];
    return Permutation(std::move(out));
  }

  friend bool operator==(const Permutation& x, const Permutation& y) {
    return x.img_ == y.img_;
  }
  friend bool operator!=(const Permutation& x, const Permutation& y) {
    return !(x == y);
  }

  std::vector<std::vector<std::size_t>> cycles() const {
    std::vector<std::vector<std::size_t>> out;
    std::vector<bool> seen(img_.size(), false);
    for (std::size_t i = 0; i < img_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<std::size_t> cyc;
      for (std::size_t j = i; !seen[j]; j = img_[j]) {
        seen[j] = true;
        cyc.push_back(j);
      }
      out.push_back(std::move(cyc));
    }
    return out;
  }

  std::vector<unsigned long long> cycle_lengths() const {
    std::vector<unsigned long long> out;
    for (const auto& c : cycles()) out.push_back(c.size());
    std::sort(out.begin(), out.end());
    return out;
  }

  unsigned long long order() const {
    unsigned long long ord = 1;
    for (const auto& c : cycles()) ord = std::lcm<unsigned long long>(ord, c.size());
    return ord;
  }

  // Image of one point under this permutation raised to `exp` (possibly
  // huge); walks the cycle of the point.
  std::size_t power_image(std::size_t point, const Int& exp) const {
    std::vector<std::size_t> cyc;
    std::size_t j = point;
    do {
      cyc.push_back(j);
      j = img_[j];
    } while (j != point);
    Int k = imod(exp, Int(cyc.size()));
    return cyc[k.convert_to<std::size_t>()];
  }

  Permutation power(long long exp) const {
    std::vector<std::size_t> out(img_.size());
    for (std::size_t i = 0; i < img_.size(); ++i) out[i] = power_image(i, Int(exp));
    return Permutation(std::move(out));
  }

 private:
  std::vector<std::size_t> img_;
};

// Cycle notation, 1-based, fixed points omitted, identity printed "()".
inline std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() < 2) continue;
    out += "(";
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += " ";
      out += std::to_string(cyc[k] + 1);
    }
    out += ")";
  }
  return out.empty() ? "()" : out;
}

// Parses cycle notation over {1..mu}; points beyond mu extend the domain.
// An empty string or "()" is the identity.
inline Permutation parse_cycles(const std::string& text, std::size_t mu) {
  std::vector<std::vector<std::size_t>> cycles;
  std::size_t maxpt = mu;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation");
    ++i;
    std::vector<std::size_t> cyc;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      std::size_t start = i;
      while (i < text.size() && text[i] >= '0' && text[i] <= '9') ++i;
      if (start == i) throw ParseError("expected point in cycle notation");
      unsigned long long pt = std::stoull(text.substr(start, i - start));
      if (pt == 0) throw ParseError("points are 1-based");
      cyc.push_back(static_cast<std::size_t>(pt - 1));
      maxpt = std::max(maxpt, static_cast<std::size_t>(pt));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        skip_ws();
      }
    }
    if (i >= text.size()) throw ParseError("unterminated cycle");
    ++i;  // ')'
    skip_ws();
    if (!cyc.empty()) cycles.push_back(std::move(cyc));
  }
  std::vector<std::size_t> img(maxpt);
  std::iota(img.begin(), img.end(), std::size_t{0});
  std::vector<bool> moved(maxpt, false);
  for (const auto& cyc : cycles)
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      std::size_t from = cyc[k], to = cyc[(k + 1) % cyc.size()];
      if (moved[from]) throw ParseError("point repeated in cycle notation");
      moved[from] = true;
      img[from] = to;
    }
  return Permutation(std::move(img));
}

// Coset action pair (e, v) on {1..mu} with e^2 = v^3 = 1 generating a
// transitive group; l = e v^-1 and r = e v^-2 are the parabolic images.
struct PermutationPair {
  std::size_t mu = 1;
  Permutation e, v;

  PermutationPair() : e(1), v(1) {}
  PermutationPair(Permutation e_, Permutation v_)
      : mu(e_.size()), e(std::move(e_)), v(std::move(v_)) {
    validate();
  }

  Permutation l() const { return e * v.inverse(); }
  Permutation r() const { return e * v.inverse() * v.inverse(); }

  void validate() const {
    if (e.size() != v.size() || e.size() == 0)
      throw ValidationError("permutation pair needs a common domain");
    if (!(e * e).is_identity())
      throw ValidationError("e must satisfy e^2 = 1");
    if (!(v * v * v).is_identity())
      throw ValidationError("v must satisfy v^3 = 1");
    // transitivity of <e, v>
    std::vector<bool> seen(mu, false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (std::size_t y : {e(x), v(x)})
        if (!seen[y]) {
          seen[y] = true;
          ++count;
          stack.push_back(y);
        }
    }
    if (count != mu)
      throw ValidationError("<e, v> must act transitively");
  }
};

}  // namespace farey
