#pragma once

#include <array>
#include <string>
#include <vector>

#include "rep/rep.hpp"

namespace cs {

using CMatrix = std::vector<std::vector<Complex>>;
CMatrix expm(const CMatrix& a);

using CVec3 = std::array<Complex, 3>;

// Throws DomainError("null center") when u.u = 0.
MobiusMap inversion_matrix(const CVec3& u);

CVec3 s_under_inversion(const CVec3& s, const CVec3& u);
// (R, Q) part of the inversion; S entries of the result are left at zero.
StructurePoint qr_under_inversion(const StructurePoint& sp, const CVec3& u);
StructurePoint invert(const StructurePoint& sp, const CVec3& u);

StructurePoint dilate(const StructurePoint& sp, const Complex& delta);
// x_axis -> -x_axis
StructurePoint reflect(const StructurePoint& sp, int axis);
// exp(w1 J1 + w2 J2 + w3 J3) on X and Y.
StructurePoint rotate(const StructurePoint& sp, const CVec3& omega);
// The 3x3 complex orthogonal matrix the rotation induces on S.
CMatrix rotation_matrix3(const CVec3& omega);
CMatrix rotation_on_y(const CVec3& omega);

// Y(move(sp)) = scalar * Y(p . m), p the sextic of Y(sp).
struct InducedMap {
  MobiusMap m = MobiusMap::identity();
  Complex scalar = Complex(1);
};
YSeptet apply_induced(const YSeptet& y, const InducedMap& im);
// Both maps applied in order: first a, then b.
InducedMap then(const InducedMap& a, const InducedMap& b);

InducedMap rotation_induced(const CVec3& omega);
InducedMap reflection_induced(int axis);
InducedMap permutation_induced(const Perm& s);

struct ConformalMove {
  enum class Kind { Inversion, Dilation, Rotation, Reflection, Permutation };
  Kind kind;
  CVec3 u{};  // inversion centre, or rotation angles
  Complex delta = Complex(1);
  int axis = 3;
  Perm perm{1, 2, 3};

  static ConformalMove inversion(const CVec3& u);
  static ConformalMove dilation(const Complex& d);
  static ConformalMove rotation(const CVec3& omega);
  static ConformalMove reflection(int axis);
  static ConformalMove permutation(const Perm& s);

  StructurePoint apply(const StructurePoint& sp) const;
  InducedMap induced() const;
  std::string describe() const;
};

StructurePoint replay(const StructurePoint& sp, const std::vector<ConformalMove>& moves);
InducedMap replay_induced(const std::vector<ConformalMove>& moves);

struct Normalized {
  std::vector<ConformalMove> moves;
  StructurePoint point;
};

// Sends S to zero axis by axis (3, then 1, then 2): permute the axis to
// x3, invert at (0,0,S3/2), dilate by u3^2, reflect x3, permute back.
// Leaves Q and R unchanged.
Normalized normalize_S(const StructurePoint& sp);

struct InversionFit {
  Complex scalar;    // least-squares ratio of direct Y to matrix-action Y
  Complex expected;  // (u.u)^-8
  Real residual;     // relative misfit of the direct Y against scalar * action
  Real deviation;    // |scalar/expected - 1|
};

// Compares the printed inversion formulas with the matrix action on Y.
InversionFit fit_inversion_scalar(const StructurePoint& sp, const CVec3& u);

}  // namespace cs
