#include <doctest.h>

#include "covariant/covariant.hpp"

using namespace cs;

namespace {
struct Init {
  Init() {
    set_precision(64);
    set_tolerance(Real("1e-30"));
  }
} init_;

Poly random_poly(std::mt19937_64& rng, int order) {
  Poly p(order + 1);
  for (auto& c : p) c = random_complex(rng);
  return p;
}

Real rel(const Poly& a, const Poly& b) {
  return poly_max_abs(poly_sub(a, b)) / std::max(Real(1), std::max(poly_max_abs(a), poly_max_abs(b)));
}
}  // namespace

TEST_CASE("transvectant examples") {
  std::mt19937_64 rng(1);
  Poly q = random_poly(rng, 4), r = random_poly(rng, 3);
  CHECK(rel(transvectant(q, 4, r, 3, 0), poly_mul(q, r)) == 0);

  Poly z6(7, Complex(0));
  z6[6] = Complex(1);
  CHECK(poly_max_abs(transvectant(z6, 6, z6, 6, 2)) == 0);

  Poly z6p1 = z6;
  z6p1[0] = Complex(1);
  Poly t = transvectant(z6p1, 6, z6p1, 6, 6);
  REQUIRE(t.size() == 1);
  CHECK(abs(t[0] - cx(1036800.0)) == 0);
}

TEST_CASE("transvectant matches the Omega-process oracle") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> ord(0, 15);
  for (int t = 0; t < 60; ++t) {
    int m = ord(rng), n = ord(rng);
    int r = std::uniform_int_distribution<int>(0, std::min(m, n))(rng);
    Poly q = random_poly(rng, m), s = random_poly(rng, n);
    CHECK(rel(transvectant(q, m, s, n, r), transvectant_omega(q, m, s, n, r)) < Real("1e-25"));
  }
  CHECK_THROWS_AS(transvectant(Poly{Complex(1)}, 0, Poly{Complex(1)}, 0, 1), DomainError);
}

TEST_CASE("transvectant symmetry and bilinearity") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 30; ++t) {
    int m = 2 + t % 7, n = 1 + (t * 5) % 9;
    for (int r = 0; r <= std::min({m, n, 6}); ++r) {
      Poly q = random_poly(rng, m), s = random_poly(rng, n), q2 = random_poly(rng, m);
      Poly a = transvectant(q, m, s, n, r);
      Poly b = transvectant(s, n, q, m, r);
      CHECK(rel(a, poly_scale(Complex(r % 2 ? -1 : 1), b)) < Real("1e-40"));
      Complex al = random_complex(rng), be = random_complex(rng);
      Poly lin = transvectant(poly_add(poly_scale(al, q), poly_scale(be, q2)), m, s, n, r);
      Poly sep = poly_add(poly_scale(al, a), poly_scale(be, transvectant(q2, m, s, n, r)));
      CHECK(rel(lin, sep) < Real("1e-40"));
    }
  }
}

TEST_CASE("basis metadata") {
  const auto& t = basis_table();
  CHECK(t.size() == 26);
  for (const auto& c : t) {
    CHECK(6 * c.degree == c.order + 2 * c.weight());
    CHECK(c.weight() >= 0);
  }
  CHECK(t[basis_index("A3")].weight() == 0);
  CHECK(t[basis_index("B4")].weight() == 2);
  CHECK(t[basis_index("B2")].weight() == 4);
  CHECK(t[basis_index("B0")].weight() == 6);
  CHECK(t[basis_index("O0")].weight() == 45);
  CHECK_THROWS_AS(basis_index("Z9"), DomainError);
}

TEST_CASE("basis of i z^6 and of zero") {
  Sextic p;
  p.coeffs[6] = cx(0.0, 1.0);
  HilbertBasis h = hilbert_basis(p);
  CHECK(rel(h.poly("A3"), p.poly()) == 0);
  for (const auto& c : h.items()) {
    CHECK(static_cast<int>(c.poly.size()) == c.order + 1);
    if (c.name != "A3") CHECK(poly_max_abs(c.poly) == 0);
  }
  HilbertBasis z = hilbert_basis(Sextic());
  for (const auto& c : z.items()) CHECK(poly_max_abs(c.poly) == 0);
}

TEST_CASE("B4 leading coefficient for Y+3 = Y+1 = 1") {
  // sextic coefficients: z^6 from Y+3, sqrt(15) z^4 from Y+1
  Sextic p;
  p.coeffs[6] = Complex(1);
  p.coeffs[4] = Complex(sqrt_rat(15));
  HilbertBasis h = hilbert_basis(p);
  CHECK(abs(h.poly("B4")[8] - Complex(120 * sqrt_rat(15))) < Real("1e-58"));
}

TEST_CASE("covariance law") {
  std::mt19937_64 rng(4);
  Sextic p;
  for (auto& c : p.coeffs) c = random_complex(rng);
  MobiusMap id = MobiusMap::identity();
  for (const auto& c : basis_table()) CHECK(covariance_check(p, id, c.name).abs == 0);
  for (int t = 0; t < 3; ++t) {
    MobiusMap m{random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
    CHECK(covariance_check(p, m, "A3").abs == 0);
    for (const auto& c : basis_table()) {
      CovarianceResidual r = covariance_check(p, m, c.name);
      CHECK_MESSAGE(r.rel() < Real("1e-25"), c.name);
    }
  }
}
