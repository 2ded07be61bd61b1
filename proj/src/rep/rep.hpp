#pragma once

#include <array>
#include <map>
#include <string>

#include "sextic/sextic.hpp"

namespace cs {

// The ten structure functions, in the canonical order
// (S1, S2, S3, R12_1, R12_2, R13_1, R13_3, R23_2, R23_3, Q123).
enum Var { S1, S2, S3, R12_1, R12_2, R13_1, R13_3, R23_2, R23_3, Q123 };

Var var_S(int i);
// R^{ij}_k with raised indices in either order; k must be i or j.
Var var_R(int i, int j, int k);
const char* var_name(Var v);

struct StructurePoint {
  std::array<Complex, 10> v;

  StructurePoint() { v.fill(Complex(0)); }
  Complex& operator[](Var x) { return v[x]; }
  const Complex& operator[](Var x) const { return v[x]; }
  const Complex& S(int i) const { return v[var_S(i)]; }
  const Complex& R(int i, int j, int k) const { return v[var_R(i, j, k)]; }
  const Complex& Q() const { return v[Q123]; }
};

// Coordinate permutation, sigma[i-1] = image of index i. Labels move:
// S^i -> S^sigma(i), R^{ij}_k -> R^{sigma(i) sigma(j)}_sigma(k), Q fixed.
using Perm = std::array<int, 3>;
StructurePoint permute(const StructurePoint& sp, const Perm& sigma);
Perm perm_inverse(const Perm& sigma);

// A^{ij}_k for ij in {22, 33, 12, 13, 23} and k in {1, 2, 3}.
struct ACoefficients {
  std::map<std::pair<int, int>, std::array<Complex, 3>> a;  // key (i, j), i <= j

  const Complex& at(int i, int j, int k) const;
  // Max residual of the five linear relations.
  Real relation_residual() const;
  // Trace-free symmetric tensor T^{ij}_k (A^{11}_k taken as zero before
  // removing the trace); transforms by relabelling under permutations.
  Complex traceless(int i, int j, int k) const;
};

ACoefficients a_from_qrs(const StructurePoint& sp);

using XTriple = std::array<Complex, 3>;  // index m + 1
using YSeptet = std::array<Complex, 7>;  // index m + 3

inline Complex& ym(YSeptet& y, int m) { return y[m + 3]; }
inline const Complex& ym(const YSeptet& y, int m) { return y[m + 3]; }

XTriple x_from_s(const StructurePoint& sp);
YSeptet y_from_qr(const StructurePoint& sp);
// Writes S (from X) and (R, Q) (from Y) into a fresh point.
StructurePoint qrs_from_xy(const XTriple& x, const YSeptet& y);

Sextic sextic_from_y(const YSeptet& y);
YSeptet y_from_sextic(const Sextic& p);
Real y_norm(const YSeptet& y);  // max-norm

enum class Ladder { Plus, Zero, Minus };

// Action on coordinates with respect to the basis f_m of highest weight l:
// J+ f_m = sqrt((l-m)(l+m+1)) f_{m+1}, J0 f_m = m f_m,
// J- f_m = sqrt((l+m)(l-m+1)) f_{m-1}.
std::vector<Complex> ladder(Ladder op, int l, const std::vector<Complex>& v);
// Matrix of the same map, row = output m + l, column = input m + l.
std::vector<std::vector<Complex>> ladder_matrix(Ladder op, int l);

}  // namespace cs
