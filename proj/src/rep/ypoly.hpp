#pragma once

#include <array>
#include <map>

#include "rep/rep.hpp"

namespace cs {

// Sparse polynomial in Y_{-3} .. Y_{+3}; exponent index m + 3.
class YPoly {
 public:
  using Mono = std::array<int, 7>;

  YPoly() = default;
  static YPoly constant(const Complex& c);
  static YPoly var(int m);

  YPoly operator+(const YPoly& o) const;
  YPoly operator-(const YPoly& o) const;
  YPoly operator*(const YPoly& o) const;
  YPoly scaled(const Complex& c) const;
  // d/dY_m
  YPoly partial(int m) const;

  Complex eval(const YSeptet& y) const;
  Real max_abs() const;
  const std::map<Mono, Complex>& terms() const { return terms_; }

 private:
  void add(const Mono& m, const Complex& c);
  std::map<Mono, Complex> terms_;
};

// Derivation sending Y_m to images[m + 3], extended by the Leibniz rule.
YPoly apply_derivation(const YPoly& f, const std::array<YPoly, 7>& images);

// Images of Y_m under the ladder operator on functions (l = 3).
std::array<YPoly, 7> ladder_images(Ladder op);

struct DerivedWeights {
  YPoly g_up;    // weight l + 1
  YPoly g_same;  // weight l
  YPoly g_down;  // weight l - 1
};

// dhat[0], dhat[1], dhat[2] give the images of every Y_m under the +, 0, -
// derivatives. For l == 0 only g_up is meaningful.
DerivedWeights derived_highest_weights(const YPoly& f, int l, const std::array<std::array<YPoly, 7>, 3>& dhat);

}  // namespace cs
