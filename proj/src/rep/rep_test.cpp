#include <doctest.h>

#include <algorithm>

#include "rep/ypoly.hpp"

using namespace cs;

namespace {
struct Init {
  Init() {
    set_precision(64);
    set_tolerance(Real("1e-30"));
  }
} init_;

StructurePoint random_point(std::mt19937_64& rng) {
  StructurePoint sp;
  for (auto& c : sp.v) c = random_complex(rng);
  return sp;
}

YSeptet random_y(std::mt19937_64& rng) {
  YSeptet y;
  for (auto& c : y) c = random_complex(rng);
  return y;
}

Real diff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  Real m(0);
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, Real(abs(a[i] - b[i])));
  return m;
}

const Real tiny("1e-55");

std::vector<std::vector<Complex>> matmul(const std::vector<std::vector<Complex>>& a,
                                         const std::vector<std::vector<Complex>>& b) {
  size_t n = a.size();
  std::vector<std::vector<Complex>> r(n, std::vector<Complex>(n, Complex(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k)
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
  return r;
}

Real commutator_residual(Ladder x, Ladder y, Ladder z, const Complex& c, int l) {
  auto X = ladder_matrix(x, l), Y = ladder_matrix(y, l), Z = ladder_matrix(z, l);
  auto XY = matmul(X, Y), YX = matmul(Y, X);
  Real m(0);
  for (size_t i = 0; i < X.size(); ++i)
    for (size_t j = 0; j < X.size(); ++j) m = std::max(m, Real(abs(XY[i][j] - YX[i][j] - c * Z[i][j])));
  return m;
}
}  // namespace

TEST_CASE("A coefficients") {
  ACoefficients zero = a_from_qrs(StructurePoint());
  for (const auto& [k, v] : zero.a)
    for (const auto& c : v) CHECK(c == Complex(0));

  StructurePoint s1;
  s1[S1] = Complex(1);
  ACoefficients a = a_from_qrs(s1);
  CHECK(a.at(2, 2, 1) == Complex(6));
  CHECK(a.at(3, 3, 1) == Complex(6));
  CHECK(a.at(1, 2, 2) == Complex(-3));
  CHECK(a.at(1, 3, 3) == Complex(-3));

  std::mt19937_64 rng(1);
  for (int t = 0; t < 20; ++t) CHECK(a_from_qrs(random_point(rng)).relation_residual() < tiny);
}

TEST_CASE("X and Y examples") {
  StructurePoint s3;
  s3[S3] = Complex(1);
  XTriple x = x_from_s(s3);
  CHECK(abs(x[0]) == 0);
  CHECK(abs(x[1] + Complex(sqrt_rat(2))) < tiny);
  CHECK(abs(x[2]) == 0);
  CHECK(y_norm(y_from_qr(s3)) == 0);

  StructurePoint q;
  q[Q123] = Complex(1);
  YSeptet y = y_from_qr(q);
  CHECK(abs(ym(y, 2) + Complex(sqrt_rat(6) / 2)) < tiny);
  CHECK(abs(ym(y, -2) - Complex(sqrt_rat(6) / 2)) < tiny);
  for (int m : {-3, -1, 0, 1, 3}) CHECK(abs(ym(y, m)) == 0);
}

TEST_CASE("round trips") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    StructurePoint sp = random_point(rng);
    StructurePoint back = qrs_from_xy(x_from_s(sp), y_from_qr(sp));
    for (int i = 0; i < 10; ++i) CHECK(abs(back.v[i] - sp.v[i]) < Real("1e-25"));
    YSeptet y = random_y(rng);
    YSeptet yb = y_from_sextic(sextic_from_y(y));
    for (int i = 0; i < 7; ++i) CHECK(abs(yb[i] - y[i]) < Real("1e-25"));
  }
}

TEST_CASE("sextic from Y") {
  YSeptet y;
  y.fill(Complex(0));
  ym(y, 3) = imag_unit();
  Sextic p = sextic_from_y(y);
  CHECK(p.coeffs[6] == imag_unit());
  for (int j = 0; j < 6; ++j) CHECK(p.coeffs[j] == Complex(0));

  y.fill(Complex(0));
  Complex t = cx(0.3, -1.1);
  ym(y, 0) = t;
  p = sextic_from_y(y);
  CHECK(abs(p.coeffs[3] + Complex(sqrt_rat(20)) * t) < tiny);

  y.fill(Complex(0));
  CHECK(sextic_from_y(y).is_zero());
}

TEST_CASE("ladder examples and commutators") {
  std::vector<Complex> e3(7, Complex(0));
  e3[6] = Complex(1);
  CHECK(diff(ladder(Ladder::Plus, 3, e3), std::vector<Complex>(7, Complex(0))) == 0);
  auto lowered = ladder(Ladder::Minus, 3, e3);
  CHECK(abs(lowered[5] - Complex(sqrt_rat(6))) < tiny);
  std::vector<Complex> e0(7, Complex(0));
  e0[3] = Complex(1);
  CHECK(diff(ladder(Ladder::Zero, 3, e0), std::vector<Complex>(7, Complex(0))) == 0);

  for (int l : {1, 3}) {
    CHECK(commutator_residual(Ladder::Zero, Ladder::Plus, Ladder::Plus, Complex(1), l) < tiny);
    CHECK(commutator_residual(Ladder::Plus, Ladder::Minus, Ladder::Zero, Complex(2), l) < tiny);
    CHECK(commutator_residual(Ladder::Zero, Ladder::Minus, Ladder::Minus, Complex(-1), l) < tiny);
  }
}

TEST_CASE("ladder operators act on the sextic as sl2 vector fields") {
  std::mt19937_64 rng(3);
  YSeptet y = random_y(rng);
  std::vector<Complex> v(y.begin(), y.end());
  auto to_y = [](const std::vector<Complex>& w) {
    YSeptet r;
    std::copy(w.begin(), w.end(), r.begin());
    return r;
  };
  Poly p = sextic_from_y(y).poly();
  Poly dp = poly_deriv(p);
  Poly z{Complex(0), Complex(1)}, z2{Complex(0), Complex(0), Complex(1)};

  Poly plus = poly_sub(poly_mul(z2, dp), poly_scale(Complex(6), poly_mul(z, p)));
  Poly zero = poly_sub(poly_mul(z, dp), poly_scale(Complex(3), p));
  Poly minus = poly_scale(Complex(-1), dp);
  auto close = [&](Ladder op, const Poly& expect) {
    Poly got = sextic_from_y(to_y(ladder(op, 3, v))).poly();
    return poly_max_abs(poly_sub(got, poly_resize(expect, 6))) < Real("1e-50");
  };
  CHECK(close(Ladder::Plus, plus));
  CHECK(close(Ladder::Zero, zero));
  CHECK(close(Ladder::Minus, minus));
}

TEST_CASE("coordinate permutations") {
  std::mt19937_64 rng(4);
  std::array<Perm, 6> perms = {Perm{1, 2, 3}, Perm{2, 1, 3}, Perm{3, 2, 1}, Perm{1, 3, 2}, Perm{2, 3, 1}, Perm{3, 1, 2}};
  for (int t = 0; t < 10; ++t) {
    StructurePoint sp = random_point(rng);
    for (const Perm& s : perms) {
      StructurePoint back = permute(permute(sp, s), perm_inverse(s));
      for (int i = 0; i < 10; ++i) CHECK(back.v[i] == sp.v[i]);

      ACoefficients before = a_from_qrs(sp), after = a_from_qrs(permute(sp, s));
      for (int i = 1; i <= 3; ++i)
        for (int j = i; j <= 3; ++j)
          for (int k = 1; k <= 3; ++k)
            CHECK(abs(after.traceless(s[i - 1], s[j - 1], s[k - 1]) - before.traceless(i, j, k)) < tiny);
    }
    // swapping 2 and 3 fixes index 1, so the stored labels map directly
    Perm s23{1, 3, 2};
    ACoefficients before = a_from_qrs(sp), after = a_from_qrs(permute(sp, s23));
    for (const auto& [key, vals] : before.a)
      for (int k = 1; k <= 3; ++k)
        CHECK(abs(after.at(s23[key.first - 1], s23[key.second - 1], s23[k - 1]) - vals[k - 1]) < tiny);
  }
}

TEST_CASE("YPoly derivations") {
  YPoly a = YPoly::var(3), b = YPoly::var(1);
  YPoly f = a * a * b;  // Y3^2 Y1
  auto jp = ladder_images(Ladder::Plus);
  YPoly g = apply_derivation(f, jp);  // 2 Y3 J+(Y3) Y1 + Y3^2 J+(Y1), J+(Y3) = 0
  YPoly expect = (a * a * YPoly::var(2)).scaled(Complex(sqrt(Real(10))));
  CHECK((g - expect).max_abs() < tiny);

  std::mt19937_64 rng(5);
  YSeptet y = random_y(rng);
  CHECK(abs(f.eval(y) - ym(y, 3) * ym(y, 3) * ym(y, 1)) < tiny);
}
