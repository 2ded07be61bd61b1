#include <doctest.h>

#include <algorithm>

#include "sextic/sextic.hpp"

using namespace cs;

namespace {
struct Init {
  Init() {
    set_precision(64);
    set_tolerance(Real("1e-30"));
  }
} init_;

Sextic z6() {
  Sextic p;
  p.coeffs[6] = Complex(1);
  return p;
}

Sextic random_sextic(std::mt19937_64& rng) {
  Sextic p;
  for (auto& c : p.coeffs) c = random_complex(rng);
  return p;
}

MobiusMap random_map(std::mt19937_64& rng) {
  return {random_complex(rng), random_complex(rng), random_complex(rng), random_complex(rng)};
}

Real rel_diff(const Sextic& a, const Sextic& b) {
  Real m(0);
  for (int i = 0; i < 7; ++i) m = std::max(m, Real(abs(a.coeffs[i] - b.coeffs[i])));
  return m / std::max(Real(1), a.max_abs());
}

Sextic from_roots(const std::vector<Complex>& roots, const Complex& lead) {
  Poly p{lead};
  for (const auto& r : roots) p = poly_mul(p, {-r, Complex(1)});
  return Sextic::from_poly(p);
}
}  // namespace

TEST_CASE("mobius_apply examples") {
  CHECK(rel_diff(mobius_apply(z6(), MobiusMap::identity()), z6()) == 0);

  Sextic inv = mobius_apply(z6(), {Complex(0), Complex(1), Complex(1), Complex(0)});
  Sextic one;
  one.coeffs[0] = Complex(1);
  CHECK(rel_diff(inv, one) == 0);

  Complex delta = cx(1.5, -0.5);
  Sextic dil = mobius_apply(z6(), {delta, Complex(0), Complex(0), delta});
  CHECK(abs(dil.coeffs[6] - pow(delta, 6)) < Real("1e-60"));
  CHECK_THROWS_AS(MobiusMap(Complex(1), Complex(2), Complex(2), Complex(4)), DomainError);
}

TEST_CASE("mobius_apply is a right action") {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    Sextic p = random_sextic(rng);
    MobiusMap m1 = random_map(rng), m2 = random_map(rng);
    Sextic lhs = mobius_apply(mobius_apply(p, m1), m2);
    Sextic rhs = mobius_apply(p, m1 * m2);
    CHECK(rel_diff(lhs, rhs) < Real("1e-25"));
  }
}

TEST_CASE("root structures of small examples") {
  CHECK(roots_with_multiplicity(z6()).label() == "[6]");

  Sextic p;  // z^3 (z^3 - 1)
  p.coeffs[3] = Complex(-1);
  p.coeffs[6] = Complex(1);
  CHECK(roots_with_multiplicity(p).label() == "[3111]");

  Sextic v;  // 9i z^2 + 3i z
  v.coeffs[2] = cx(0.0, 9.0);
  v.coeffs[1] = cx(0.0, 3.0);
  RootStructure rs = roots_with_multiplicity(v);
  CHECK(rs.label() == "[411]");
  REQUIRE(rs.roots.size() == 3);
  CHECK(rs.roots[0].where.infinite);
  CHECK(rs.roots[0].multiplicity == 4);

  CHECK(roots_with_multiplicity(Sextic()).label() == "[0]");
}

TEST_CASE("every partition is recovered, including high multiplicities") {
  std::mt19937_64 rng(9);
  const std::vector<std::string> parts = {"6",    "51",   "42",    "411",    "33",    "321",
                                          "3111", "222",  "2211",  "21111",  "111111"};
  for (const auto& lab : parts) {
    for (int t = 0; t < 10; ++t) {
      std::vector<int> mult = parse_partition(lab);
      std::vector<Complex> centres;
      while (centres.size() < mult.size()) {
        Complex c = random_complex(rng, 2.0);
        bool ok = std::all_of(centres.begin(), centres.end(),
                              [&](const Complex& o) { return abs(o - c) > Real("0.3"); });
        if (ok) centres.push_back(c);
      }
      std::vector<Complex> roots;
      for (size_t i = 0; i < mult.size(); ++i)
        for (int k = 0; k < mult[i]; ++k) roots.push_back(centres[i]);
      Sextic p = from_roots(roots, random_complex(rng) + cx(2.0));
      CHECK(roots_with_multiplicity(p).label() == "[" + lab + "]");
      // push one root to infinity
      Sextic q = mobius_apply(p, {Complex(1), centres.back(), Complex(0), Complex(1)});
      q = mobius_apply(q, {Complex(0), Complex(1), Complex(1), Complex(0)});
      CHECK(roots_with_multiplicity(q).label() == "[" + lab + "]");
    }
  }
}

TEST_CASE("roots re-expand to the polynomial") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 20; ++t) {
    std::vector<Complex> roots;
    while (roots.size() < 5) {
      Complex c = random_complex(rng, 2.0);
      bool ok = std::all_of(roots.begin(), roots.end(), [&](const Complex& o) { return abs(o - c) > Real("0.3"); });
      if (ok) roots.push_back(c);
    }
    Sextic p = from_roots(roots, cx(1.0, 1.0));  // degree 5: one root at infinity
    RootStructure rs = roots_with_multiplicity(p);
    Poly back{p.coeffs[5]};
    int inf = 0;
    for (const auto& r : rs.roots) {
      if (r.where.infinite) {
        inf += r.multiplicity;
        continue;
      }
      for (int k = 0; k < r.multiplicity; ++k) back = poly_mul(back, {-r.where.z, Complex(1)});
    }
    CHECK(inf == 1);
    CHECK(rel_diff(Sextic::from_poly(back), p) < Real("1e-20"));
  }
}

TEST_CASE("multiratio examples") {
  auto P = [](double x) { return ProjPoint::at(cx(x)); };
  CHECK(abs(multiratio(P(-1), P(0), P(1), P(3)) - cx(-0.5)) < Real("1e-60"));
  CHECK(abs(multiratio(P(-1), P(0), P(2), P(2))) == 0);
  std::mt19937_64 rng(2);
  for (int t = 0; t < 20; ++t) {
    Complex lam = random_complex(rng);
    ProjPoint e4 = ProjPoint::at((Complex(1) - lam) / (Complex(1) + lam));
    CHECK(abs(multiratio(P(-1), P(0), P(1), e4) - lam) < Real("1e-55"));
  }
  CHECK_THROWS_AS(multiratio(P(1), P(1), P(1), P(2)), DomainError);
  // infinity is handled as a limit
  Complex lim = multiratio(P(-1), P(0), P(1), ProjPoint::inf());
  CHECK(abs(lim - cx(-1.0)) < Real("1e-60"));
}

TEST_CASE("multiratio is Mobius invariant") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    std::array<ProjPoint, 4> e;
    for (auto& x : e) x = ProjPoint::at(random_complex(rng, 2.0));
    MobiusMap m = random_map(rng);
    Complex a = multiratio(e[0], e[1], e[2], e[3]);
    Complex b = multiratio(root_image(e[0], m), root_image(e[1], m), root_image(e[2], m), root_image(e[3], m));
    CHECK(abs(a - b) < Real("1e-20") * (1 + abs(a)));
  }
}

TEST_CASE("M6 condition") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 20; ++t) {
    Complex l5 = random_complex(rng), l6 = random_complex(rng);
    auto mob = [](const Complex& l) { return ProjPoint::at((Complex(1) - l) / (Complex(1) + l)); };
    std::array<ProjPoint, 6> r = {ProjPoint::at(cx(-1.0)), ProjPoint::at(Complex(0)), ProjPoint::at(cx(1.0)),
                                  mob(l5 * l6), mob(l5), mob(l6)};
    CHECK(m6_test(r));
  }
  std::array<ProjPoint, 6> rep = {ProjPoint::at(Complex(0)), ProjPoint::at(Complex(0)), ProjPoint::at(Complex(0)),
                                  ProjPoint::at(cx(1.0)),    ProjPoint::at(cx(-0.5, 0.8)),
                                  ProjPoint::at(cx(-0.5, -0.8))};
  CHECK_THROWS_AS(m6_test(rep), DomainError);

  // random roots: no ordering satisfies the condition
  std::array<ProjPoint, 6> g;
  for (auto& x : g) x = ProjPoint::at(random_complex(rng, 2.0));
  std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};
  bool any = false;
  do {
    std::array<ProjPoint, 6> q;
    for (int i = 0; i < 6; ++i) q[i] = g[perm[i]];
    any = any || m6_test(q);
  } while (std::next_permutation(perm.begin(), perm.end()));
  CHECK_FALSE(any);
}

TEST_CASE("partition parsing") {
  CHECK(partition_label(parse_partition("[4,1,1]")) == "[411]");
  CHECK(parse_partition("0").empty());
  CHECK_THROWS_AS(parse_partition("33 1"), DomainError);
}
