#include "rep/ypoly.hpp"

#include <algorithm>

namespace cs {

void YPoly::add(const Mono& m, const Complex& c) {
  if (c == Complex(0)) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
    return;
  }
  it->second += c;
  if (it->second == Complex(0)) terms_.erase(it);
}

YPoly YPoly::constant(const Complex& c) {
  YPoly p;
  p.add(Mono{}, c);
  return p;
}

YPoly YPoly::var(int m) {
  YPoly p;
  Mono e{};
  e[m + 3] = 1;
  p.add(e, Complex(1));
  return p;
}

YPoly YPoly::operator+(const YPoly& o) const {
  YPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

YPoly YPoly::operator-(const YPoly& o) const {
  YPoly r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, -c);
  return r;
}

YPoly YPoly::operator*(const YPoly& o) const {
  YPoly r;
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono e;
      for (int i = 0; i < 7; ++i) e[i] = ma[i] + mb[i];
      r.add(e, ca * cb);
    }
  return r;
}

YPoly YPoly::scaled(const Complex& c) const {
  YPoly r;
  for (const auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

YPoly YPoly::partial(int m) const {
  YPoly r;
  const int i = m + 3;
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Mono d = e;
    --d[i];
    r.add(d, c * Complex(e[i]));
  }
  return r;
}

Complex YPoly::eval(const YSeptet& y) const {
  Complex acc(0);
  for (const auto& [e, c] : terms_) {
    Complex t = c;
    for (int i = 0; i < 7; ++i)
      if (e[i]) t *= pow(y[i], e[i]);
    acc += t;
  }
  return acc;
}

Real YPoly::max_abs() const {
  Real m(0);
  for (const auto& [e, c] : terms_) m = std::max(m, Real(abs(c)));
  return m;
}

YPoly apply_derivation(const YPoly& f, const std::array<YPoly, 7>& images) {
  YPoly r;
  for (int m = -3; m <= 3; ++m) {
    YPoly d = f.partial(m);
    if (d.terms().empty()) continue;
    r = r + d * images[m + 3];
  }
  return r;
}

std::array<YPoly, 7> ladder_images(Ladder op) {
  auto M = ladder_matrix(op, 3);
  std::array<YPoly, 7> img;
  for (int col = 0; col < 7; ++col)
    for (int row = 0; row < 7; ++row)
      if (M[row][col] != Complex(0)) img[col] = img[col] + YPoly::var(row - 3).scaled(M[row][col]);
  return img;
}

DerivedWeights derived_highest_weights(const YPoly& f, int l, const std::array<std::array<YPoly, 7>, 3>& dhat) {
  DerivedWeights g;
  g.g_up = apply_derivation(f, dhat[0]);
  if (l == 0) return g;
  if (l < 2) throw DomainError("derived_highest_weights needs l = 0 or l > 1");
  const auto jm = ladder_images(Ladder::Minus);
  YPoly f1 = apply_derivation(f, jm);
  YPoly f2 = apply_derivation(f1, jm);
  const Complex L(l);
  g.g_same = apply_derivation(f, dhat[1]) + apply_derivation(f1, dhat[0]).scaled(Complex(1) / (Complex(2) * L));
  g.g_down = apply_derivation(f, dhat[2]) + apply_derivation(f1, dhat[1]).scaled(Complex(1) / L) +
             apply_derivation(f2, dhat[0]).scaled(Complex(1) / (Complex(2) * L * (Complex(2) * L - Complex(1))));
  return g;
}

}  // namespace cs
