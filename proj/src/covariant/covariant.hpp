#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "sextic/sextic.hpp"

namespace cs {

// (Q,R)^(r) for binary forms of formal orders m and n.
//   r! sum_k (-1)^k C(m-r+k, k) C(n-k, r-k) Q^(r-k) R^(k)
// Result has formal order m + n - 2r.
Poly transvectant(const Poly& q, int m, const Poly& r_poly, int n, int r);

// Brute-force reference: Cayley Omega process on the homogenised forms,
// dehomogenised at y = 1.
Poly transvectant_omega(const Poly& q, int m, const Poly& r_poly, int n, int r);

struct CovariantInfo {
  std::string_view name;
  int degree;  // in the sextic's coefficients
  int order;   // formal order in z
  int weight() const { return (6 * degree - order) / 2; }
};

// The 26 basis covariants in evaluation order.
const std::vector<CovariantInfo>& basis_table();
int basis_index(std::string_view name);  // throws DomainError if unknown

struct Covariant {
  std::string name;
  int degree;
  int order;
  int weight;
  Poly poly;  // exactly order + 1 coefficients
};

class HilbertBasis {
 public:
  explicit HilbertBasis(std::vector<Covariant> items) : items_(std::move(items)) {}
  const Covariant& operator[](std::string_view name) const;
  const Poly& poly(std::string_view name) const { return (*this)[name].poly; }
  // Value of an order-0 covariant.
  const Complex& value(std::string_view name) const;
  const std::vector<Covariant>& items() const { return items_; }

 private:
  std::vector<Covariant> items_;
};

HilbertBasis hilbert_basis(const Sextic& p);

struct CovarianceResidual {
  Real abs;    // max coefficient difference
  Real scale;  // max coefficient of the compared polynomials
  Real rel() const { return scale > 0 ? Real(abs / scale) : abs; }
};

// q(p . M) against det(M)^m (q . M), with q . M the order-k action.
CovarianceResidual covariance_check(const Sextic& p, const MobiusMap& m, std::string_view name);

}  // namespace cs
