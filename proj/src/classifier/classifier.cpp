#include "classifier/classifier.hpp"

#include <algorithm>
#include <complex>
#include <functional>
#include <map>
#include <mutex>

namespace cs {

namespace {

CovExpr cov(const HilbertBasis& hb, std::string_view name) {
  const Covariant& c = hb[name];
  return {c.poly, c.degree, c.order};
}

CovExpr operator*(const CovExpr& a, const CovExpr& b) {
  return {poly_resize(poly_mul(a.poly, b.poly), a.order + b.order), a.degree + b.degree, a.order + b.order};
}

CovExpr operator*(const Complex& s, const CovExpr& a) { return {poly_scale(s, a.poly), a.degree, a.order}; }
CovExpr operator*(long s, const CovExpr& a) { return Complex(s) * a; }

CovExpr operator+(const CovExpr& a, const CovExpr& b) {
  if (a.degree != b.degree || a.order != b.order)
    throw DomainError("covariant sum mixes degree/order (" + std::to_string(a.degree) + "," + std::to_string(a.order) +
                      ") and (" + std::to_string(b.degree) + "," + std::to_string(b.order) + ")");
  return {poly_add(a.poly, b.poly), a.degree, a.order};
}

CovExpr operator-(const CovExpr& a, const CovExpr& b) { return a + (-1) * b; }

using GenFn = std::function<std::vector<CovExpr>(const HilbertBasis&)>;

struct IdealDef {
  IdealSpec spec;
  GenFn fn;
};

std::vector<IdealDef> build_defs() {
  std::vector<IdealDef> d;
  auto add = [&](std::string name, std::string display, bool persistent, std::vector<std::string> gen_names, GenFn fn) {
    IdealSpec s{std::move(name), std::move(display), persistent, {}};
    for (auto& g : gen_names) s.generators.push_back({std::move(g), 0, 0});
    d.push_back({std::move(s), std::move(fn)});
  };

  add("I0", "I[0]", true, {"A3"}, [](const HilbertBasis& h) { return std::vector<CovExpr>{cov(h, "A3")}; });
  add("I6", "I[6]", true, {"B4", "B2", "B0"},
      [](const HilbertBasis& h) { return std::vector<CovExpr>{cov(h, "B4"), cov(h, "B2"), cov(h, "B0")}; });
  add("I51", "I[51]", true, {"B2", "B0"},
      [](const HilbertBasis& h) { return std::vector<CovExpr>{cov(h, "B2"), cov(h, "B0")}; });
  add("I42", "I[42]", false, {"B0", "C1", "27B4^2-50B2A3^2", "20C3A3+B4B2", "D0"}, [](const HilbertBasis& h) {
    auto A3 = cov(h, "A3"), B4 = cov(h, "B4"), B2 = cov(h, "B2");
    return std::vector<CovExpr>{cov(h, "B0"), cov(h, "C1"), 27 * (B4 * B4) - 50 * (B2 * (A3 * A3)),
                                20 * (cov(h, "C3") * A3) + B4 * B2, cov(h, "D0")};
  });
  add("I33", "I[33]", true, {"C6", "C4", "33B0A3-5C3"}, [](const HilbertBasis& h) {
    return std::vector<CovExpr>{cov(h, "C6"), cov(h, "C4"), 33 * (cov(h, "B0") * cov(h, "A3")) - 5 * cov(h, "C3")};
  });
  add("I411", "I[411]", true, {"B0", "C1", "D0"},
      [](const HilbertBasis& h) { return std::vector<CovExpr>{cov(h, "B0"), cov(h, "C1"), cov(h, "D0")}; });
  add("I321", "I[321]", false, {"11B0^2-25D0", "3B0C1-5E1", "G8", "F6", "41B0^3-75D0B0-125F0"},
      [](const HilbertBasis& h) {
        auto A3 = cov(h, "A3"), B4 = cov(h, "B4"), B2 = cov(h, "B2"), B0 = cov(h, "B0"), C1 = cov(h, "C1"),
             C3 = cov(h, "C3"), C4 = cov(h, "C4"), D0 = cov(h, "D0"), D2 = cov(h, "D2"), F0 = cov(h, "F0");
        auto A32 = A3 * A3;
        CovExpr g8 = 75 * ((2610 * D2 + 827 * (B0 * B2)) * A32) - 100 * ((125 * (C3 * B2) + 144 * (C1 * B4)) * A3) +
                     (3125 * (C4 * C4) + 5184 * (B0 * (B4 * B4)));
        CovExpr f6 = 300 * ((61 * (B0 * B0) - 115 * D0) * A32) - 20 * ((5 * (C1 * B2) + 22 * (B0 * C3)) * A3) -
                     B4 * (7 * (B0 * B2) - 270 * D2);
        return std::vector<CovExpr>{11 * (B0 * B0) - 25 * D0, 3 * (B0 * C1) - 5 * cov(h, "E1"), g8, f6,
                                    41 * (B0 * (B0 * B0)) - 75 * (D0 * B0) - 125 * F0};
      });
  add("I222", "I[222]", false, {"50B2A3^2-27B4^2", "160B0A3^2-B4B2-20C3A3", "25C1A3-3B0B4", "B0B2+90D2", "43B0^2-75D0"}, [](const HilbertBasis& h) {
    auto A3 = cov(h, "A3"), B4 = cov(h, "B4"), B2 = cov(h, "B2"), B0 = cov(h, "B0"), C1 = cov(h, "C1"),
         C3 = cov(h, "C3"), D0 = cov(h, "D0"), D2 = cov(h, "D2");
    auto A32 = A3 * A3;
    return std::vector<CovExpr>{50 * (B2 * A32) - 27 * (B4 * B4),
                                160 * (B0 * A32) - B4 * B2 - 20 * (C3 * A3),
                                (-3) * (B0 * B4) + 25 * (C1 * A3),
                                B0 * B2 + 90 * D2,
                                43 * (B0 * B0) - 75 * D0};
  });
  auto i3111 = [](const HilbertBasis& h) {
    auto B0 = cov(h, "B0"), D0 = cov(h, "D0");
    return std::vector<CovExpr>{11 * (B0 * B0) - 25 * D0, 3 * (B0 * cov(h, "C1")) - 5 * cov(h, "E1"),
                                8 * (B0 * (B0 * B0)) - 125 * cov(h, "F0")};
  };
  add("I3111", "I[3111]", true, {"11B0^2-25D0", "3C1B0-5E1", "8B0^3-125F0"}, i3111);
  add("I3111CR", "I[3111]+CR", true, {"3600C1A3+288B4B0-125B2^2", "B2B0-10D2", "11B0^2-25D0"},
      [](const HilbertBasis& h) {
        auto A3 = cov(h, "A3"), B4 = cov(h, "B4"), B2 = cov(h, "B2"), B0 = cov(h, "B0");
        return std::vector<CovExpr>{3600 * (cov(h, "C1") * A3) + 288 * (B0 * B4) - 125 * (B2 * B2),
                                    B0 * B2 - 10 * cov(h, "D2"), 11 * (B0 * B0) - 25 * cov(h, "D0")};
      });
  add("I2211", "I[2211]", false, {"G6"}, [](const HilbertBasis& h) {
    auto B0 = cov(h, "B0");
    CovExpr g6 = 50 * ((10 * cov(h, "F3_2") + 2 * (B0 * cov(h, "D3")) + 55 * cov(h, "F3_1")) * cov(h, "A3")) -
                 4 * ((43 * (B0 * B0) - 75 * cov(h, "D0")) * cov(h, "C6")) + 75 * (cov(h, "E2") * cov(h, "B4"));
    return std::vector<CovExpr>{g6};
  });
  add("I21111", "I[21111]", false, {"discriminant"}, [](const HilbertBasis& h) {
    auto b = cov(h, "B0"), d = cov(h, "D0"), f = cov(h, "F0");
    auto b2 = b * b, b3 = b2 * b;
    CovExpr disc = 5393 * (b3 * b2) - 20125 * (d * b3) + 18750 * (d * d * b) - 31875 * (f * b2) + 56250 * (f * d) +
                   28125 * cov(h, "J0");
    return std::vector<CovExpr>{disc};
  });
  add("IM6CR", "I[M6]+CR", true, {"F4", "97B0^3-275D0B0+375F0"}, [](const HilbertBasis& h) {
    auto A3 = cov(h, "A3"), B4 = cov(h, "B4"), B2 = cov(h, "B2"), B0 = cov(h, "B0"), C1 = cov(h, "C1"),
         D0 = cov(h, "D0");
    CovExpr f4 = 360 * ((49 * (B0 * C1) - 48 * cov(h, "E1")) * A3) - 193 * (B0 * (B2 * B2)) -
                 1896 * (cov(h, "C3") * C1) + 288 * (D0 * B4) + 3276 * (cov(h, "D2") * B2);
    return std::vector<CovExpr>{f4, 97 * (B0 * B0 * B0) - 275 * (D0 * B0) + 375 * cov(h, "F0")};
  });
  auto jac = [](const HilbertBasis& h) {
    auto b = cov(h, "B0"), d = cov(h, "D0"), f = cov(h, "F0");
    auto b2 = b * b, b3 = b2 * b;
    return 2521 * (b3 * b2) - 9625 * (d * b3) + 6250 * (d * d * b) - 7500 * (f * b2) + 65625 * (f * d) -
           84375 * cov(h, "J0");
  };
  add("IJac", "I[Jac]", true, {"J0Jac"}, [jac](const HilbertBasis& h) { return std::vector<CovExpr>{jac(h)}; });
  add("IRank1", "I[Rank1]", false, {"N1Rank1", "J0Jac"}, [jac](const HilbertBasis& h) {
    auto b = cov(h, "B0"), d = cov(h, "D0"), f = cov(h, "F0");
    CovExpr n1 = (125 * f + 49 * (b * b * b) - 125 * (d * b)) * cov(h, "H1") -
                 20 * ((-25 * d + 14 * (b * b)) * cov(h, "J1")) + 150 * (b * cov(h, "L1"));
    return std::vector<CovExpr>{n1, jac(h)};
  });
  add("O0", "O0", false, {"O0"}, [](const HilbertBasis& h) { return std::vector<CovExpr>{cov(h, "O0")}; });
  return d;
}

YSeptet kappa_sample(int k) {
  std::mt19937_64 rng(20240611 + k);
  YSeptet y;
  for (auto& c : y) c = random_complex(rng);
  Real n = y_norm(y);
  for (auto& c : y) c /= n;
  return y;
}

struct Registry {
  std::vector<IdealDef> defs;
  std::vector<IdealSpec> specs;
  std::map<std::string, size_t> index;
  // kappa[ideal][generator], rebuilt when the precision changes
  unsigned prec = 0;
  std::vector<std::vector<Real>> kappa;
  std::mutex mu;

  Registry() : defs(build_defs()) {
    // fill in degree and order from one evaluation
    HilbertBasis hb = hilbert_basis(sextic_from_y(kappa_sample(0)));
    for (size_t i = 0; i < defs.size(); ++i) {
      auto gens = defs[i].fn(hb);
      for (size_t g = 0; g < gens.size(); ++g) {
        defs[i].spec.generators[g].degree = gens[g].degree;
        defs[i].spec.generators[g].order = gens[g].order;
      }
      specs.push_back(defs[i].spec);
      index[defs[i].spec.name] = i;
    }
  }

  const std::vector<Real>& kappas(size_t i) {
    std::lock_guard lock(mu);
    if (prec != precision()) {
      prec = precision();
      kappa.assign(defs.size(), {});
    }
    if (kappa[i].empty()) {
      kappa[i].assign(defs[i].spec.generators.size(), Real(0));
      for (int k = 0; k < 8; ++k) {
        HilbertBasis hb = hilbert_basis(sextic_from_y(kappa_sample(k)));
        auto gens = defs[i].fn(hb);
        for (size_t g = 0; g < gens.size(); ++g) kappa[i][g] = std::max(kappa[i][g], poly_max_abs(gens[g].poly));
      }
    }
    return kappa[i];
  }
};

Registry& registry() {
  static Registry r;
  return r;
}

size_t def_index(const std::string& name) {
  auto& r = registry();
  auto it = r.index.find(name);
  if (it == r.index.end()) throw DomainError("unknown ideal: " + name);
  return it->second;
}

}  // namespace

const std::vector<IdealSpec>& ideal_specs() { return registry().specs; }

const IdealSpec& ideal_spec(const std::string& name) { return registry().specs[def_index(name)]; }

const std::array<std::string, 9>& persistent_ideals() {
  static const std::array<std::string, 9> names = {"I0", "I6", "I51", "I411", "I33", "I3111", "I3111CR", "IM6CR", "IJac"};
  return names;
}

std::vector<CovExpr> ideal_generators(const std::string& name, const HilbertBasis& hb) {
  return registry().defs[def_index(name)].fn(hb);
}

Real generator_kappa(const std::string& ideal, size_t index) { return registry().kappas(def_index(ideal)).at(index); }

IdealEval ideal_eval(const std::string& name, const HilbertBasis& hb, const Real& yn) {
  const size_t i = def_index(name);
  const auto& kap = registry().kappas(i);
  auto gens = registry().defs[i].fn(hb);
  IdealEval e{name, {}, Real(0), true};
  for (size_t g = 0; g < gens.size(); ++g) {
    Real r = poly_max_abs(gens[g].poly) / kap[g];
    e.residuals.push_back(r);
    e.residual = std::max(e.residual, r);
    if (!zero_test(Complex(r), gens[g].degree, yn)) e.vanishes = false;
  }
  return e;
}

IdealEval ideal_eval(const std::string& name, const YSeptet& y) {
  return ideal_eval(name, hilbert_basis(sextic_from_y(y)), y_norm(y));
}

const std::array<ClassLabel, 10>& all_classes() {
  static const std::array<ClassLabel, 10> c = {ClassLabel::S, ClassLabel::I,  ClassLabel::II, ClassLabel::IV,
                                               ClassLabel::V, ClassLabel::VI, ClassLabel::VII, ClassLabel::O,
                                               ClassLabel::OO, ClassLabel::A};
  return c;
}

std::string class_name(ClassLabel c) {
  static const char* names[] = {"S", "I", "II", "IV", "V", "VI", "VII", "O", "OO", "A"};
  return names[static_cast<int>(c)];
}

ClassLabel parse_class(const std::string& s) {
  for (ClassLabel c : all_classes())
    if (class_name(c) == s) return c;
  throw DomainError("unknown class label: " + s);
}

Pattern table3_row(ClassLabel c) {
  // columns: I0 I6 I51 I411 I33 I3111 I3111CR IM6CR IJac
  switch (c) {
    case ClassLabel::S: return {0, 0, 0, 0, 0, 0, 0, 0, 0};
    case ClassLabel::I: return {0, 0, 0, 0, 0, 0, 0, 0, 1};
    case ClassLabel::II: return {0, 0, 0, 0, 0, 1, 0, 0, 1};
    case ClassLabel::IV: return {0, 0, 0, 0, 0, 0, 0, 1, 1};
    case ClassLabel::V: return {0, 0, 0, 1, 0, 1, 0, 1, 1};
    case ClassLabel::VI: return {0, 0, 0, 0, 0, 1, 1, 1, 1};
    case ClassLabel::VII: return {0, 0, 1, 1, 0, 1, 1, 1, 1};
    case ClassLabel::O: return {1, 1, 1, 1, 1, 1, 1, 1, 1};
    case ClassLabel::OO: return {0, 0, 0, 0, 1, 1, 1, 1, 1};
    case ClassLabel::A: return {0, 1, 1, 1, 1, 1, 1, 1, 1};
  }
  return {};
}

namespace {

using CD = std::complex<double>;
using M2 = std::array<CD, 4>;  // row-major

M2 mul(const M2& a, const M2& b) {
  return {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3], a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]};
}

// Point of the unit sphere for z (north pole = infinity).
std::array<double, 3> to_sphere(CD z, bool inf) {
  if (inf || std::abs(z) > 1e150) return {0, 0, 1};
  double n = std::norm(z);
  return {2 * z.real() / (1 + n), 2 * z.imag() / (1 + n), (n - 1) / (n + 1)};
}

struct SpherePt {
  CD z;
  bool inf;
};

SpherePt move(const M2& m, const SpherePt& p) {
  CD num = p.inf ? m[0] : m[0] * p.z + m[1];
  CD den = p.inf ? m[2] : m[2] * p.z + m[3];
  if (std::abs(den) < 1e-300 * std::max(1.0, std::abs(num))) return {0, true};
  return {num / den, false};
}

std::array<double, 3> centroid(const std::vector<SpherePt>& pts, const M2& m) {
  std::array<double, 3> c{0, 0, 0};
  for (const auto& p : pts) {
    SpherePt q = move(m, p);
    auto s = to_sphere(q.z, q.inf);
    for (int k = 0; k < 3; ++k) c[k] += s[k] / pts.size();
  }
  return c;
}

double len(const std::array<double, 3>& c) { return std::sqrt(c[0] * c[0] + c[1] * c[1] + c[2] * c[2]); }

// Map of the sphere spreading the distinct roots: a lone root is rotated to
// infinity, otherwise the spherical centroid of the distinct roots is pushed
// to the centre by boosts. Double precision suffices since the map is only a
// preconditioner; it is applied exactly afterwards.
M2 balancing_map(const RootStructure& rs) {
  const M2 id{1, 0, 0, 1};
  std::vector<SpherePt> pts;
  for (const auto& r : rs.roots)
    pts.push_back({CD(static_cast<double>(re(r.where.z)), static_cast<double>(im(r.where.z))), r.where.infinite});
  if (pts.empty()) return id;
  // a single root goes to infinity by a rotation
  if (pts.size() == 1) return pts[0].inf ? id : M2{std::conj(pts[0].z), 1, -1, pts[0].z};
  M2 phi = id;
  auto c = centroid(pts, phi);
  for (int it = 0; it < 400 && len(c) > 1e-9; ++it) {
    // rotate the centroid direction to the south pole (z = 0), push points
    // away from it with z -> lambda z, rotate back
    const double l = len(c);
    M2 rot, rot_inv;
    if (c[2] / l > 1 - 1e-12) {
      rot = {0, 1, 1, 0};
      rot_inv = rot;
    } else {
      CD w = CD(c[0], c[1]) / l / (1 - c[2] / l);
      rot = {1, -w, std::conj(w), 1};
      rot_inv = {1, w, -std::conj(w), 1};
    }
    double step = 2 * std::atanh(std::min(l, 0.999));
    bool moved = false;
    for (int tries = 0; tries < 40 && !moved; ++tries, step /= 2) {
      M2 trial = mul(rot_inv, mul(M2{std::exp(step), 0, 0, 1}, mul(rot, phi)));
      CD det = trial[0] * trial[3] - trial[1] * trial[2];
      CD s = std::sqrt(det);
      for (auto& e : trial) e /= s;
      auto c2 = centroid(pts, trial);
      if (len(c2) < l) {
        phi = trial;
        c = c2;
        moved = true;
      }
    }
    if (!moved) break;
  }
  return phi;
}

}  // namespace

ClassVerdict classify(const YSeptet& y) {
  const Sextic p = sextic_from_y(y);
  ClassVerdict v;
  v.roots = roots_with_multiplicity(p);

  // Evaluate the ideals on a Mobius image with well-spread roots. Membership
  // is unchanged; the scale-aware zero test is far better conditioned there.
  Sextic q = p;
  if (!v.roots.zero) {
    const M2 phi = balancing_map(v.roots);
    auto c = [](const CD& z) { return Complex(Real(z.real()), Real(z.imag())); };
    // roots move by the inverse of the matrix handed to mobius_apply
    q = mobius_apply(p, MobiusMap(c(phi[3]), -c(phi[1]), -c(phi[2]), c(phi[0])));
  }
  const HilbertBasis hb = hilbert_basis(q);
  const Real yn = y_norm(y_from_sextic(q));
  std::array<Real, 9> res;
  for (size_t k = 0; k < 9; ++k) {
    v.ideals[k] = ideal_eval(persistent_ideals()[k], hb, yn);
    v.pattern[k] = v.ideals[k].vanishes;
    res[k] = v.ideals[k].residual;
  }
  IdealEval o0 = ideal_eval("O0", hb, yn);
  v.o0_residual = o0.residual;
  v.o0_vanishes = o0.vanishes;

  const size_t distinct = v.roots.roots.size();
  if (!v.roots.zero && distinct == 4) {
    const auto& r = v.roots.roots;
    v.multiratio = multiratio(r[0].where, r[1].where, r[2].where, r[3].where);
  }
  if (!v.roots.zero && distinct == 6) {
    std::array<int, 6> perm = {0, 1, 2, 3, 4, 5};
    bool any = false;
    do {
      std::array<ProjPoint, 6> q;
      for (int i = 0; i < 6; ++i) q[i] = v.roots.roots[perm[i]].where;
      if (m6_test(q)) {
        any = true;
        break;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    v.m6 = any;
  }

  v.label = match_pattern(v.pattern, res);
  return v;
}

ClassLabel match_pattern(const Pattern& p, const std::array<Real, 9>& residuals) {
  for (ClassLabel c : all_classes())
    if (table3_row(c) == p) return c;
  std::string bits;
  for (bool b : p) bits += b ? '1' : '0';
  throw InconsistentPattern("inconsistent pattern " + bits + ": matches no row of the class table", p, residuals);
}

MobiusMap random_mobius(std::mt19937_64& rng) {
  while (true) {
    Complex a = random_complex(rng), b = random_complex(rng), c = random_complex(rng), d = random_complex(rng);
    if (abs(a * d - b * c) > Real("0.2")) return MobiusMap(a, b, c, d);
  }
}

namespace {
std::vector<Complex> separated_roots(size_t n, std::mt19937_64& rng) {
  std::vector<Complex> r;
  while (r.size() < n) {
    Complex z = random_complex(rng, 1.5);
    bool ok = true;
    for (const auto& w : r)
      if (abs(z - w) < Real("0.3")) ok = false;
    if (ok) r.push_back(z);
  }
  return r;
}

Poly power_of_linear(const Complex& root, int k) {
  Poly p{Complex(1)};
  for (int i = 0; i < k; ++i) p = poly_mul(p, Poly{-root, Complex(1)});
  return p;
}

Sextic moved(const Poly& p, std::mt19937_64& rng) {
  Sextic s = mobius_apply(Sextic::from_poly(poly_resize(p, 6)), random_mobius(rng));
  Complex lead = random_complex(rng);
  for (auto& c : s.coeffs) c *= lead;
  return s;
}
}  // namespace

Sextic sample_root_locus(const std::string& locus, std::mt19937_64& rng) {
  if (locus == "3111+CR") {
    // z^3 (z^3 - 1)
    return moved(Poly{Complex(0), Complex(0), Complex(0), Complex(-1), Complex(0), Complex(0), Complex(1)}, rng);
  }
  if (locus == "M6+CR") {
    // (z^2 + 1)^3 + t z^3
    Poly p = power_of_linear(imag_unit(), 3);
    p = poly_mul(p, power_of_linear(-imag_unit(), 3));
    p[3] += random_complex(rng, 2.0);
    return moved(p, rng);
  }
  if (locus == "Jac") {
    // a z^3 + b (1 + z^2)^3 + c (1 - z^2)^3
    Poly plus = poly_mul(power_of_linear(imag_unit(), 3), power_of_linear(-imag_unit(), 3));
    Poly minus = poly_scale(Complex(-1), poly_mul(power_of_linear(Complex(1), 3), power_of_linear(Complex(-1), 3)));
    Poly p = poly_add(poly_scale(random_complex(rng), plus), poly_scale(random_complex(rng), minus));
    p[3] += random_complex(rng);
    return moved(p, rng);
  }
  std::vector<int> parts = parse_partition(locus);
  if (parts.empty()) return Sextic();
  auto roots = separated_roots(parts.size(), rng);
  Poly p{random_complex(rng)};
  while (abs(p[0]) < Real("0.3")) p[0] = random_complex(rng);
  for (size_t i = 0; i < parts.size(); ++i) p = poly_mul(p, power_of_linear(roots[i], parts[i]));
  return Sextic::from_poly(p);
}

std::string partition_ideal(const std::vector<int>& parts) {
  if (parts.empty()) return "I0";
  std::string key;
  for (int p : parts) key += std::to_string(p);
  if (key == "111111") return "";
  return "I" + key;
}

std::vector<std::vector<int>> immediate_refinements(const std::vector<int>& parts) {
  if (parts.empty()) return {{6}};
  std::vector<std::vector<int>> out;
  for (size_t i = 0; i < parts.size(); ++i)
    for (int a = 1; a <= parts[i] / 2; ++a) {
      std::vector<int> q = parts;
      q.erase(q.begin() + i);
      q.push_back(a);
      q.push_back(parts[i] - a);
      std::sort(q.rbegin(), q.rend());
      if (std::find(out.begin(), out.end(), q) == out.end()) out.push_back(q);
    }
  return out;
}

const std::vector<std::vector<int>>& all_partitions() {
  static const std::vector<std::vector<int>> p = {{6},          {5, 1},       {4, 2},       {3, 3},
                                                  {4, 1, 1},    {3, 2, 1},    {2, 2, 2},    {3, 1, 1, 1},
                                                  {2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
  return p;
}

}  // namespace cs
