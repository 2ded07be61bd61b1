#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "scalar/scalar.hpp"

namespace cs {

// Dense polynomial in z, coefficient of z^0 first.
using Poly = std::vector<Complex>;

Poly poly_add(const Poly& a, const Poly& b);
Poly poly_sub(const Poly& a, const Poly& b);
Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_scale(const Complex& c, const Poly& a);
Poly poly_deriv(const Poly& a, int times = 1);
Complex poly_eval(const Poly& a, const Complex& z);
Real poly_max_abs(const Poly& a);
// Pads with zeros (or drops trailing terms) to exactly order + 1 entries.
Poly poly_resize(Poly a, int order);

struct Sextic {
  std::array<Complex, 7> coeffs;

  Sextic();
  explicit Sextic(const std::array<Complex, 7>& c) : coeffs(c) {}
  static Sextic from_poly(const Poly& p);
  Poly poly() const;
  bool is_zero() const;
  Real max_abs() const;
  int degree() const;  // -1 for the zero polynomial
};

struct MobiusMap {
  Complex a, b, c, d;

  MobiusMap(Complex a_, Complex b_, Complex c_, Complex d_);
  static MobiusMap identity();
  Complex det() const;
  // Matrix product (a b; c d) * other.
  MobiusMap operator*(const MobiusMap& other) const;
  MobiusMap scaled(const Complex& s) const;
};

// Binary form of the given formal order under z -> (az+b)/(cz+d):
// q(z) -> (cz+d)^order q((az+b)/(cz+d)).
Poly apply_form(const Poly& q, int order, const MobiusMap& m);
Sextic mobius_apply(const Sextic& p, const MobiusMap& m);

// A point of the projective line.
struct ProjPoint {
  Complex z;
  bool infinite = false;

  static ProjPoint at(const Complex& z) { return {z, false}; }
  static ProjPoint inf() { return {Complex(0), true}; }
};

// Image of a root under the action above: roots move by the inverse map.
ProjPoint root_image(const ProjPoint& eta, const MobiusMap& m);

struct RootStructure {
  struct Root {
    ProjPoint where;
    int multiplicity;
  };
  bool zero = false;
  std::vector<int> partition;  // descending
  std::vector<Root> roots;     // same order as partition

  std::string label() const;  // e.g. "[411]" or "[0]"
};

RootStructure roots_with_multiplicity(const Sextic& p);

// (e1-e2)(e3-e4) / ((e2-e3)(e4-e1)), with factors containing infinity
// cancelled in pairs.
Complex multiratio(const ProjPoint& e1, const ProjPoint& e2, const ProjPoint& e3, const ProjPoint& e4);

// (e1-e2)(e5-e3)(e4-e6) / ((e2-e5)(e3-e4)(e6-e1)) for the given order.
Complex m6_value(const std::array<ProjPoint, 6>& r);
bool m6_test(const std::array<ProjPoint, 6>& r);

std::vector<int> parse_partition(const std::string& s);
std::string partition_label(const std::vector<int>& parts);

}  // namespace cs
