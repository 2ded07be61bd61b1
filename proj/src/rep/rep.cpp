#include "rep/rep.hpp"

#include <algorithm>

namespace cs {

Var var_S(int i) {
  if (i < 1 || i > 3) throw DomainError("S index out of range");
  return static_cast<Var>(S1 + i - 1);
}

Var var_R(int i, int j, int k) {
  if (i > j) std::swap(i, j);
  if (k != i && k != j) throw DomainError("R lower index must repeat a raised index");
  if (i == 1 && j == 2) return k == 1 ? R12_1 : R12_2;
  if (i == 1 && j == 3) return k == 1 ? R13_1 : R13_3;
  if (i == 2 && j == 3) return k == 2 ? R23_2 : R23_3;
  throw DomainError("bad R label");
}

const char* var_name(Var v) {
  static const char* names[] = {"S1", "S2", "S3", "R12_1", "R12_2", "R13_1", "R13_3", "R23_2", "R23_3", "Q123"};
  return names[v];
}

StructurePoint permute(const StructurePoint& sp, const Perm& s) {
  auto sg = [&](int i) { return s[i - 1]; };
  StructurePoint out;
  for (int i = 1; i <= 3; ++i) out[var_S(sg(i))] = sp.S(i);
  const int pairs[3][2] = {{1, 2}, {1, 3}, {2, 3}};
  for (const auto& p : pairs)
    for (int k : {p[0], p[1]}) out[var_R(sg(p[0]), sg(p[1]), sg(k))] = sp.R(p[0], p[1], k);
  out[Q123] = sp.Q();
  return out;
}

Perm perm_inverse(const Perm& s) {
  Perm inv{};
  for (int i = 0; i < 3; ++i) inv[s[i] - 1] = i + 1;
  return inv;
}

const Complex& ACoefficients::at(int i, int j, int k) const {
  if (i > j) std::swap(i, j);
  auto it = a.find({i, j});
  if (it == a.end()) throw DomainError("A coefficient not stored");
  return it->second.at(k - 1);
}

Real ACoefficients::relation_residual() const {
  Complex r[5] = {
      at(2, 2, 1) - at(1, 2, 2) - (at(3, 3, 1) - at(1, 3, 3)),
      at(2, 3, 3) - at(1, 2, 1) - at(3, 3, 2),
      at(2, 3, 2) - at(1, 3, 1) - at(2, 2, 3),
      at(1, 2, 3) - at(1, 3, 2),
      at(1, 2, 3) - at(2, 3, 1),
  };
  Real m(0);
  for (const auto& x : r) m = std::max(m, Real(abs(x)));
  return m;
}

Complex ACoefficients::traceless(int i, int j, int k) const {
  if (i > j) std::swap(i, j);
  const Complex third = Complex(rat(1, 3));
  if (i != j) return at(i, j, k);
  const Complex a22 = at(2, 2, k), a33 = at(3, 3, k);
  if (i == 1) return -(a22 + a33) * third;
  if (i == 2) return (Complex(2) * a22 - a33) * third;
  return (Complex(2) * a33 - a22) * third;
}

ACoefficients a_from_qrs(const StructurePoint& p) {
  const Complex six(6), three(3), two(2);
  ACoefficients A;
  A.a[{2, 2}] = {six * p[S1] + two * p[R12_2] + p[R13_3], -six * p[S2] - two * p[R12_1] - p[R23_3],
                 p[R23_2] - p[R13_1]};
  A.a[{3, 3}] = {six * p[S1] + p[R12_2] + two * p[R13_3], -p[R12_1] + p[R23_3],
                 -six * p[S3] - p[R23_2] - two * p[R13_1]};
  A.a[{1, 2}] = {p[R12_1] - three * p[S2], p[R12_2] - three * p[S1], p[Q123]};
  A.a[{1, 3}] = {p[R13_1] - three * p[S3], p[Q123], p[R13_3] - three * p[S1]};
  A.a[{2, 3}] = {p[Q123], p[R23_2] - three * p[S3], p[R23_3] - three * p[S2]};
  return A;
}

XTriple x_from_s(const StructurePoint& p) {
  const Complex i = imag_unit();
  return {i * p[S2] - p[S1], -Complex(sqrt_rat(2)) * p[S3], i * p[S2] + p[S1]};
}

YSeptet y_from_qr(const StructurePoint& p) {
  const Complex i = imag_unit();
  const Complex q4(rat(1, 4));
  const Complex s6(sqrt_rat(6)), s15(sqrt_rat(15)), s5(sqrt_rat(5));
  YSeptet y;
  ym(y, 3) = p[R12_1] + q4 * p[R23_3] + i * (p[R12_2] + q4 * p[R13_3]);
  ym(y, 2) = q4 * s6 * (i * (p[R13_1] - p[R23_2]) - Complex(2) * p[Q123]);
  ym(y, 1) = q4 * s15 * (p[R23_3] - i * p[R13_3]);
  ym(y, 0) = -Complex(rat(1, 2)) * i * s5 * (p[R13_1] + p[R23_2]);
  ym(y, -1) = q4 * s15 * (p[R23_3] + i * p[R13_3]);
  ym(y, -2) = q4 * s6 * (i * (p[R13_1] - p[R23_2]) + Complex(2) * p[Q123]);
  ym(y, -3) = p[R12_1] + q4 * p[R23_3] - i * (p[R12_2] + q4 * p[R13_3]);
  return y;
}

StructurePoint qrs_from_xy(const XTriple& x, const YSeptet& y) {
  const Complex i = imag_unit();
  const Complex half(rat(1, 2)), q4(rat(1, 4));
  const Complex s6(sqrt_rat(6)), s15(sqrt_rat(15)), s5(sqrt_rat(5)), s2(sqrt_rat(2));
  StructurePoint p;
  p[S1] = (x[2] - x[0]) * half;
  p[S2] = (x[2] + x[0]) / (Complex(2) * i);
  p[S3] = -x[1] / s2;

  p[R23_3] = Complex(2) * (ym(y, 1) + ym(y, -1)) / s15;
  p[R13_3] = Complex(2) * i * (ym(y, 1) - ym(y, -1)) / s15;
  p[Q123] = (ym(y, -2) - ym(y, 2)) / s6;
  Complex diff = -Complex(2) * i * (ym(y, 2) + ym(y, -2)) / s6;  // R13_1 - R23_2
  Complex sum = Complex(2) * i * ym(y, 0) / s5;                  // R13_1 + R23_2
  p[R13_1] = (sum + diff) * half;
  p[R23_2] = (sum - diff) * half;
  p[R12_1] = (ym(y, 3) + ym(y, -3)) * half - q4 * p[R23_3];
  p[R12_2] = (ym(y, 3) - ym(y, -3)) / (Complex(2) * i) - q4 * p[R13_3];
  return p;
}

namespace {
long binom6(int j) {
  static const long b[7] = {1, 6, 15, 20, 15, 6, 1};
  return b[j];
}
}  // namespace

Sextic sextic_from_y(const YSeptet& y) {
  Sextic p;
  for (int j = 0; j <= 6; ++j) {
    Complex c = Complex(sqrt_rat(binom6(j))) * y[j];
    p.coeffs[j] = (j % 2) ? -c : c;
  }
  return p;
}

YSeptet y_from_sextic(const Sextic& p) {
  YSeptet y;
  for (int j = 0; j <= 6; ++j) {
    Complex c = p.coeffs[j] / Complex(sqrt_rat(binom6(j)));
    y[j] = (j % 2) ? -c : c;
  }
  return y;
}

Real y_norm(const YSeptet& y) {
  Real m(0);
  for (const auto& c : y) m = std::max(m, Real(abs(c)));
  return m;
}

std::vector<std::vector<Complex>> ladder_matrix(Ladder op, int l) {
  const int n = 2 * l + 1;
  std::vector<std::vector<Complex>> M(n, std::vector<Complex>(n, Complex(0)));
  for (int m = -l; m <= l; ++m) {
    int col = m + l;
    switch (op) {
      case Ladder::Plus:
        if (m < l) M[col + 1][col] = Complex(sqrt(Real((l - m) * (l + m + 1))));
        break;
      case Ladder::Zero:
        M[col][col] = Complex(m);
        break;
      case Ladder::Minus:
        if (m > -l) M[col - 1][col] = Complex(sqrt(Real((l + m) * (l - m + 1))));
        break;
    }
  }
  return M;
}

std::vector<Complex> ladder(Ladder op, int l, const std::vector<Complex>& v) {
  if (static_cast<int>(v.size()) != 2 * l + 1) throw DomainError("ladder: vector length does not match weight");
  auto M = ladder_matrix(op, l);
  std::vector<Complex> out(v.size(), Complex(0));
  for (size_t r = 0; r < v.size(); ++r)
    for (size_t c = 0; c < v.size(); ++c)
      if (M[r][c] != Complex(0)) out[r] += M[r][c] * v[c];
  return out;
}

}  // namespace cs
