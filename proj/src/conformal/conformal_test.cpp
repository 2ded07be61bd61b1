#include <doctest.h>

#include <functional>

#include "conformal/conformal.hpp"
#include "flow/flow.hpp"

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

CVec3 random_vec(std::mt19937_64& rng) { return {random_complex(rng), random_complex(rng), random_complex(rng)}; }

Real ydiff(const YSeptet& a, const YSeptet& b) {
  Real m(0), s(0);
  for (int i = 0; i < 7; ++i) {
    m = std::max(m, Real(abs(a[i] - b[i])));
    s = std::max(s, Real(abs(a[i])));
  }
  return m / s;
}

Real spdiff(const StructurePoint& a, const StructurePoint& b) {
  Real m(0);
  for (int i = 0; i < 10; ++i) m = std::max(m, Real(abs(a.v[i] - b.v[i])));
  return m;
}

// field(move(sp)) column j equals move applied to sum_k O_jk column_k
void check_field_covariance(const StructurePoint& sp, const CMatrix& O,
                            const std::function<StructurePoint(const StructurePoint&)>& move) {
  QrsField F = qrs_derivatives(sp), G = qrs_derivatives(move(sp));
  for (int j = 0; j < 3; ++j) {
    StructurePoint mix, got;
    for (int v = 0; v < 10; ++v) {
      for (int k = 0; k < 3; ++k) mix.v[v] += O[j][k] * F[v][k];
      got.v[v] = G[v][j];
    }
    CHECK(spdiff(got, move(mix)) < Real("1e-45"));
  }
}

const Real tiny("1e-45");
}  // namespace

TEST_CASE("inversion matrix") {
  MobiusMap m = inversion_matrix({Complex(0), Complex(0), Complex(1)});
  CHECK(m.a == Complex(1));
  CHECK(m.b == Complex(0));
  CHECK(m.c == Complex(0));
  CHECK(m.d == Complex(-1));
  CHECK_THROWS_AS(inversion_matrix({Complex(1), imag_unit(), Complex(0)}), DomainError);

  // centre on the x3 axis: z -> -z up to scale
  CVec3 u{Complex(0), Complex(0), cx(0.7, 0.2)};
  MobiusMap n = inversion_matrix(u);
  CHECK(n.b == Complex(0));
  CHECK(n.c == Complex(0));
  CHECK(abs(n.a + n.d) < tiny);
}

TEST_CASE("S under inversion") {
  CVec3 s{cx(0.3, 0.1), cx(-0.5, 0.2), cx(1.1, -0.4)};
  Complex u3 = cx(0.8, 0.3);
  CVec3 out = s_under_inversion(s, {Complex(0), Complex(0), u3});
  CHECK(abs(out[0] - s[0] / (u3 * u3)) < tiny);
  CHECK(abs(out[1] - s[1] / (u3 * u3)) < tiny);
  CHECK(abs(out[2] - (-s[2] / (u3 * u3) + Complex(2) / u3)) < tiny);

  CVec3 zero{};
  out = s_under_inversion(zero, {Complex(0), Complex(0), Complex(1)});
  CHECK(abs(out[2] - Complex(2)) < tiny);

  std::mt19937_64 rng(21);
  for (int t = 0; t < 10; ++t) {
    CVec3 S = random_vec(rng), u = random_vec(rng);
    CVec3 base = s_under_inversion(S, u);
    for (Perm p : {Perm{2, 1, 3}, Perm{3, 1, 2}, Perm{1, 3, 2}}) {
      CVec3 Sp, up;
      for (int i = 0; i < 3; ++i) {
        Sp[p[i] - 1] = S[i];
        up[p[i] - 1] = u[i];
      }
      CVec3 got = s_under_inversion(Sp, up);
      for (int i = 0; i < 3; ++i) CHECK(abs(got[p[i] - 1] - base[i]) < tiny);
    }
  }
}

TEST_CASE("inversion formulas against the matrix action") {
  std::mt19937_64 rng(22);
  for (int t = 0; t < 20; ++t) {
    InversionFit f = fit_inversion_scalar(random_point(rng), random_vec(rng));
    CHECK(f.residual < Real("1e-40"));
    CHECK(f.deviation < Real("1e-40"));
  }
}

TEST_CASE("reflections, dilations and permutations induce Möbius maps") {
  std::mt19937_64 rng(23);
  const std::array<Perm, 5> perms = {Perm{2, 1, 3}, Perm{3, 2, 1}, Perm{1, 3, 2}, Perm{2, 3, 1}, Perm{3, 1, 2}};
  for (int t = 0; t < 5; ++t) {
    StructurePoint sp = random_point(rng);
    YSeptet y = y_from_qr(sp);
    for (int axis = 1; axis <= 3; ++axis)
      CHECK(ydiff(y_from_qr(reflect(sp, axis)), apply_induced(y, reflection_induced(axis))) < tiny);
    Complex d = random_complex(rng);
    ConformalMove dil = ConformalMove::dilation(d);
    CHECK(ydiff(y_from_qr(dil.apply(sp)), apply_induced(y, dil.induced())) < tiny);
    for (const Perm& p : perms)
      CHECK(ydiff(y_from_qr(permute(sp, p)), apply_induced(y, permutation_induced(p))) < tiny);
  }
}

TEST_CASE("rotations") {
  std::mt19937_64 rng(24);
  for (int t = 0; t < 5; ++t) {
    StructurePoint sp = random_point(rng);
    CVec3 w = random_vec(rng);
    CMatrix O = rotation_matrix3(w);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        Complex g(0);
        for (int k = 0; k < 3; ++k) g += O[k][i] * O[k][j];
        CHECK(abs(g - Complex(i == j ? 1 : 0)) < tiny);
      }
    CHECK(ydiff(y_from_qr(rotate(sp, w)), apply_induced(y_from_qr(sp), rotation_induced(w))) < tiny);
    check_field_covariance(sp, O, [&](const StructurePoint& p) { return rotate(p, w); });
  }
  // a quarter turn about x3 maps S = e1 to +-e2
  StructurePoint e1;
  e1[S1] = Complex(1);
  StructurePoint r = rotate(e1, {Complex(0), Complex(0), Complex(Real(boost::math::constants::pi<Real>() / 2))});
  CHECK(abs(r.S(1)) < tiny);
  CHECK(abs(abs(r.S(2)) - Real(1)) < tiny);
}

TEST_CASE("reflections commute with the flow") {
  std::mt19937_64 rng(25);
  StructurePoint sp = random_point(rng);
  for (int axis = 1; axis <= 3; ++axis) {
    CMatrix O(3, std::vector<Complex>(3, Complex(0)));
    for (int i = 0; i < 3; ++i) O[i][i] = Complex(i + 1 == axis ? -1 : 1);
    check_field_covariance(sp, O, [&](const StructurePoint& p) { return reflect(p, axis); });
  }
}

TEST_CASE("induced maps compose in move order") {
  std::mt19937_64 rng(26);
  for (int t = 0; t < 5; ++t) {
    StructurePoint sp = random_point(rng);
    std::vector<ConformalMove> moves = {ConformalMove::inversion(random_vec(rng)), ConformalMove::rotation(random_vec(rng)),
                                        ConformalMove::reflection(2), ConformalMove::dilation(random_complex(rng)),
                                        ConformalMove::permutation({2, 3, 1})};
    YSeptet direct = y_from_qr(replay(sp, moves));
    YSeptet via = apply_induced(y_from_qr(sp), replay_induced(moves));
    CHECK(ydiff(direct, via) < Real("1e-40"));
  }
}

TEST_CASE("normalize_S") {
  StructurePoint sp;
  sp[S3] = Complex(2);
  Normalized n = normalize_S(sp);
  REQUIRE(n.moves.size() == 3);
  CHECK(n.moves[0].kind == ConformalMove::Kind::Inversion);
  CHECK(n.moves[0].u[2] == Complex(1));
  CHECK(n.moves[1].kind == ConformalMove::Kind::Dilation);
  CHECK(n.moves[1].delta == Complex(1));
  for (const auto& c : n.point.v) CHECK(abs(c) < tiny);

  CHECK(normalize_S(StructurePoint()).moves.empty());

  std::mt19937_64 rng(27);
  for (int t = 0; t < 20; ++t) {
    StructurePoint p = random_point(rng);
    Normalized r = normalize_S(p);
    for (int i = 1; i <= 3; ++i) CHECK(abs(r.point.S(i)) < Real("1e-40"));
    for (int v = R12_1; v <= Q123; ++v) CHECK(abs(r.point.v[v] - p.v[v]) < Real("1e-40"));
    CHECK(spdiff(replay(p, r.moves), r.point) == 0);
    YSeptet y = y_from_qr(p);
    CHECK(ydiff(apply_induced(y, replay_induced(r.moves)), y) < Real("1e-40"));
  }
}
