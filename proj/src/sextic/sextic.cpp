#include "sextic/sextic.hpp"

#include <algorithm>

namespace cs {

Poly poly_add(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Complex(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Complex(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Complex(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == Complex(0)) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

Poly poly_scale(const Complex& c, const Poly& a) {
  Poly r(a);
  for (auto& x : r) x *= c;
  return r;
}

Poly poly_deriv(const Poly& a, int times) {
  Poly r(a);
  for (int t = 0; t < times; ++t) {
    if (r.size() <= 1) return {Complex(0)};
    Poly d(r.size() - 1);
    for (size_t i = 1; i < r.size(); ++i) d[i - 1] = r[i] * Complex(static_cast<long>(i));
    r = std::move(d);
  }
  return r;
}

Complex poly_eval(const Poly& a, const Complex& z) {
  Complex acc(0);
  for (size_t i = a.size(); i-- > 0;) acc = acc * z + a[i];
  return acc;
}

Real poly_max_abs(const Poly& a) {
  Real m(0);
  for (const auto& x : a) m = std::max(m, Real(abs(x)));
  return m;
}

Poly poly_resize(Poly a, int order) {
  a.resize(order + 1, Complex(0));
  return a;
}

Sextic::Sextic() { coeffs.fill(Complex(0)); }

Sextic Sextic::from_poly(const Poly& p) {
  Sextic s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i < 7) {
      s.coeffs[i] = p[i];
    } else if (p[i] != Complex(0)) {
      throw DomainError("polynomial degree exceeds 6");
    }
  }
  return s;
}

Poly Sextic::poly() const { return Poly(coeffs.begin(), coeffs.end()); }

bool Sextic::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const Complex& c) { return c == Complex(0); });
}

Real Sextic::max_abs() const { return poly_max_abs(poly()); }

int Sextic::degree() const {
  for (int i = 6; i >= 0; --i)
    if (coeffs[i] != Complex(0)) return i;
  return -1;
}

MobiusMap::MobiusMap(Complex a_, Complex b_, Complex c_, Complex d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (a * d - b * c == Complex(0)) throw DomainError("singular Mobius map");
}

MobiusMap MobiusMap::identity() { return {Complex(1), Complex(0), Complex(0), Complex(1)}; }

Complex MobiusMap::det() const { return a * d - b * c; }

MobiusMap MobiusMap::operator*(const MobiusMap& o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

MobiusMap MobiusMap::scaled(const Complex& s) const { return {a * s, b * s, c * s, d * s}; }

Poly apply_form(const Poly& q, int order, const MobiusMap& m) {
  Poly qq = poly_resize(q, order);
  // powers of (az+b) and (cz+d)
  std::vector<Poly> num(order + 1), den(order + 1);
  num[0] = den[0] = {Complex(1)};
  for (int j = 1; j <= order; ++j) {
    num[j] = poly_mul(num[j - 1], {m.b, m.a});
    den[j] = poly_mul(den[j - 1], {m.d, m.c});
  }
  Poly out(order + 1, Complex(0));
  for (int j = 0; j <= order; ++j) {
    if (qq[j] == Complex(0)) continue;
    Poly term = poly_mul(num[j], den[order - j]);
    for (int i = 0; i <= order; ++i) out[i] += qq[j] * term[i];
  }
  return out;
}

Sextic mobius_apply(const Sextic& p, const MobiusMap& m) { return Sextic::from_poly(apply_form(p.poly(), 6, m)); }

ProjPoint root_image(const ProjPoint& eta, const MobiusMap& m) {
  // Roots w of the image satisfy (aw+b)/(cw+d) = eta, i.e. w = (d eta - b)/(a - c eta).
  if (eta.infinite) {
    if (m.c == Complex(0)) return ProjPoint::inf();
    return ProjPoint::at(-m.d / m.c);
  }
  Complex den = m.a - m.c * eta.z;
  if (den == Complex(0)) return ProjPoint::inf();
  return ProjPoint::at((m.d * eta.z - m.b) / den);
}

namespace {

// A factor (x - y) with possibly infinite ends, tracked as value * t^power
// where t is the common "size" of infinity.
struct Factor {
  Complex value;
  int power;
};

Factor diff(const ProjPoint& x, const ProjPoint& y) {
  if (x.infinite && y.infinite) throw DomainError("degenerate configuration: repeated point at infinity");
  if (x.infinite) return {Complex(1), 1};
  if (y.infinite) return {Complex(-1), 1};
  return {x.z - y.z, 0};
}

Complex ratio(const std::vector<Factor>& num, const std::vector<Factor>& den) {
  Complex n(1), d(1);
  int pn = 0, pd = 0;
  for (const auto& f : num) n *= f.value, pn += f.power;
  for (const auto& f : den) d *= f.value, pd += f.power;
  if (d == Complex(0)) throw DomainError("degenerate configuration");
  if (pn != pd) throw DomainError("degenerate configuration: unbalanced point at infinity");
  return n / d;
}

}  // namespace

Complex multiratio(const ProjPoint& e1, const ProjPoint& e2, const ProjPoint& e3, const ProjPoint& e4) {
  return ratio({diff(e1, e2), diff(e3, e4)}, {diff(e2, e3), diff(e4, e1)});
}

Complex m6_value(const std::array<ProjPoint, 6>& r) {
  return ratio({diff(r[0], r[1]), diff(r[4], r[2]), diff(r[3], r[5])},
               {diff(r[1], r[4]), diff(r[2], r[3]), diff(r[5], r[0])});
}

bool m6_test(const std::array<ProjPoint, 6>& r) {
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      bool same = r[i].infinite && r[j].infinite;
      if (!r[i].infinite && !r[j].infinite)
        same = zero_test(r[i].z - r[j].z, 1, Real(1) + abs(r[i].z) + abs(r[j].z));
      if (same) throw DomainError("m6_test needs six distinct roots");
    }
  return zero_test(m6_value(r) + Complex(1), 0, Real(1));
}

std::vector<int> parse_partition(const std::string& s) {
  std::vector<int> parts;
  for (char ch : s) {
    if (ch == '[' || ch == ']' || ch == ',' || ch == ' ') continue;
    if (ch < '0' || ch > '9') throw DomainError("bad partition: " + s);
    parts.push_back(ch - '0');
  }
  if (parts.size() == 1 && parts[0] == 0) return {};
  int sum = 0;
  for (int p : parts) {
    if (p <= 0) throw DomainError("bad partition: " + s);
    sum += p;
  }
  if (sum != 6) throw DomainError("partition must sum to 6: " + s);
  std::sort(parts.rbegin(), parts.rend());
  return parts;
}

std::string partition_label(const std::vector<int>& parts) {
  if (parts.empty()) return "[0]";
  std::string s = "[";
  for (int p : parts) s += std::to_string(p);
  return s + "]";
}

std::string RootStructure::label() const { return zero ? "[0]" : partition_label(partition); }

}  // namespace cs
