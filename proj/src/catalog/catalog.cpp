#include "catalog/catalog.hpp"

#include <sstream>

namespace cs {

namespace {

Point3 pt(const char* a, const char* b, const char* c) {
  return {Complex(parse_real(a)), Complex(parse_real(b)), Complex(parse_real(c))};
}

std::vector<Point3> generic_points() {
  return {pt("0.7", "-1.3", "2.1"), pt("-1.1", "0.4", "0.9"), pt("1.7", "2.3", "-0.6")};
}

bool near_zero(const Complex& v, const Point3& x) {
  Real scale(1);
  for (const auto& c : x) scale = std::max(scale, Real(abs(c)));
  return abs(v) <= policy().tol_rel * scale;
}

void pole(ClassLabel c, const std::string& what) {
  throw DomainError("pole: " + what + " = 0 for system " + class_name(c));
}

Poly cube_of_quadratic(const Complex& sign) {
  // (1 + sign z^2)^3
  Poly q{Complex(1), Complex(0), sign};
  return poly_mul(q, poly_mul(q, q));
}

}  // namespace

const YSeptet& s_fixture_y() {
  static const char* parts[7][2] = {{"0.898602", "0.508771"},   {"0.783826", "-0.765171"}, {"-0.889814", "-0.717457"},
                                    {"0.801421", "0.665046"},   {"0.435811", "-0.485684"}, {"0.192378", "0.51149"},
                                    {"-0.382943", "-0.205109"}};
  static unsigned prec = 0;
  static YSeptet y;
  if (prec != precision()) {
    for (int m = 0; m < 7; ++m) y[m] = Complex(parse_real(parts[m][0]), parse_real(parts[m][1]));
    prec = precision();
  }
  return y;
}

const std::vector<CatalogEntry>& catalog() {
  using C = ClassLabel;
  static unsigned prec = 0;
  static std::vector<CatalogEntry> entries;
  if (prec == precision()) return entries;
  prec = precision();
  const auto samples = generic_points();
  entries = {
      {C::O, "a(x1^2+x2^2+x3^2) + b x1 + c x2 + d x3 + e", "0", "none", "[0]", samples},
      {C::A, "a((x1-ix2)^3 + 6(x1^2+x2^2+x3^2)) + b((x1-ix2)^2 + 2(x1+ix2)) + c(x1-ix2) + d x3 + e", "i z^6", "none",
       "[6]", samples},
      {C::VII,
       "a(x1+ix2) + b(3(x1+ix2)^2 + x3) + c(16(x1+ix2)^3 + (x1-ix2) + 12 x3(x1+ix2)) + "
       "d(5(x1+ix2)^4 + (x1^2+x2^2+x3^2) + 6(x1+ix2)^2 x3) + e",
       "24i((x1+ix2) z - 3/2) z^5", "none", "[51]", samples},
      {C::OO, "a(4x1^2+4x2^2+x3^2) + b x1 + c x2 + d/x3^2 + e", "(6i/x3) z^3", "x3 = 0", "[33]", samples},
      {C::V, "a(4x3^2+x1^2+x2^2) + b x3 + c/(x1+ix2)^2 + d(x1-ix2)/(x1+ix2)^3 + e",
       "(9i/(x1+ix2)) z^2 + 3i(x1-ix2)/(x1+ix2)^2 z", "x1+ix2 = 0", "[411]", samples},
      {C::VI, "a(x3^2 - 2(x1-ix2)^3 + 4(x1^2+x2^2)) + b(2x1 + 2ix2 - 3(x1-ix2)^2) + c(x1-ix2) + d/x3^2 + e",
       "3i(z^3 + 2/x3) z^3", "x3 = 0", "[3111]+CR", samples},
      {C::II, "a(x1^2+x2^2+x3^2) + b(x1-ix2)/(x1+ix2)^3 + c/(x1+ix2)^2 + d/x3^2 + e",
       "(6i/x3) z^3 + (9i/(x1+ix2)) z^2 - 3i(-x1+ix2)/(x1+ix2)^2", "x3 = 0, x1+ix2 = 0", "[3111]", samples},
      {C::IV, "a(4x1^2+x2^2+x3^2) + b x1 + c/x2^2 + d/x3^2 + e", "(3/(4x2))(z^2+1)^3 + (6i/x3) z^3",
       "x2 = 0, x3 = 0", "M6=-1", samples},
      {C::I, "a(x1^2+x2^2+x3^2) + b/x1^2 + c/x2^2 + d/x3^2 + e",
       "(6i/x3) z^3 + (3/(4x2))(1+z^2)^3 - (3i/(4x1))(1-z^2)^3", "x1 = 0, x2 = 0, x3 = 0", "J0Jac=0", samples},
      {C::S, "a/(1+r^2)^2 + b/x1^2 + c/x2^2 + d/x3^2 + e/(-1+r^2)^2", "seeded generic sextic (fixture)", "none",
       "[111111]", samples},
  };
  return entries;
}

const CatalogEntry& catalog_entry(ClassLabel c) {
  for (const auto& e : catalog())
    if (e.label == c) return e;
  throw DomainError("no catalog entry for " + class_name(c));
}

Sextic catalog_sextic(ClassLabel c, const Point3& x) {
  const Complex i = imag_unit();
  const Complex w = x[0] + i * x[1], wb = x[0] - i * x[1];
  auto need = [&](const Complex& v, const std::string& what) {
    if (near_zero(v, x)) pole(c, what);
  };
  Poly p(7, Complex(0));
  switch (c) {
    case ClassLabel::O: break;
    case ClassLabel::A: p[6] = i; break;
    case ClassLabel::VII:
      p[6] = Complex(24) * i * w;
      p[5] = Complex(-36) * i;
      break;
    case ClassLabel::OO:
      need(x[2], "x3");
      p[3] = Complex(6) * i / x[2];
      break;
    case ClassLabel::V:
      need(w, "x1+ix2");
      p[2] = Complex(9) * i / w;
      p[1] = Complex(3) * i * wb / (w * w);
      break;
    case ClassLabel::VI:
      need(x[2], "x3");
      p[6] = Complex(3) * i;
      p[3] = Complex(6) * i / x[2];
      break;
    case ClassLabel::II:
      need(x[2], "x3");
      need(w, "x1+ix2");
      p[3] = Complex(6) * i / x[2];
      p[2] = Complex(9) * i / w;
      p[0] = Complex(-3) * i * (-x[0] + i * x[1]) / (w * w);
      break;
    case ClassLabel::IV:
      need(x[1], "x2");
      need(x[2], "x3");
      p = poly_scale(Complex(3) / (Complex(4) * x[1]), cube_of_quadratic(Complex(1)));
      p[3] += Complex(6) * i / x[2];
      break;
    case ClassLabel::I:
      need(x[0], "x1");
      need(x[1], "x2");
      need(x[2], "x3");
      p = poly_add(poly_scale(Complex(3) / (Complex(4) * x[1]), cube_of_quadratic(Complex(1))),
                   poly_scale(Complex(-3) * i / (Complex(4) * x[0]), cube_of_quadratic(Complex(-1))));
      p[3] += Complex(6) * i / x[2];
      break;
    case ClassLabel::S: return sextic_from_y(s_fixture_y());
  }
  return Sextic::from_poly(poly_resize(p, 6));
}

Table3Report reproduce_table3() {
  Table3Report rep;
  for (const auto& e : catalog())
    for (const auto& x : e.samples) {
      Table3Cell cell{e.label, x, {}, {}, false};
      const YSeptet y = y_from_sextic(catalog_sextic(e.label, x));
      const HilbertBasis hb = hilbert_basis(sextic_from_y(y));
      for (size_t k = 0; k < 9; ++k) {
        IdealEval ev = ideal_eval(persistent_ideals()[k], hb, y_norm(y));
        cell.pattern[k] = ev.vanishes;
        cell.residuals[k] = ev.residual;
      }
      const Pattern want = table3_row(e.label);
      cell.matches = cell.pattern == want;
      if (!cell.matches) {
        rep.ok = false;
        for (size_t k = 0; k < 9; ++k) {
          if (cell.pattern[k] == want[k]) continue;
          std::ostringstream os;
          os << class_name(e.label) << " at (" << to_string(re(x[0]), 6) << "," << to_string(re(x[1]), 6) << ","
             << to_string(re(x[2]), 6) << "): " << persistent_ideals()[k] << " expected "
             << (want[k] ? "vanishing" : "nonvanishing") << ", residual " << to_string(cell.residuals[k], 6);
          rep.mismatches.push_back(os.str());
        }
      }
      rep.cells.push_back(std::move(cell));
    }
  return rep;
}

}  // namespace cs
