#include "covariant/covariant.hpp"

#include <algorithm>

namespace cs {

namespace {

long binom(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

long factorial(int n) {
  long r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

void check_orders(int m, int n, int r) {
  if (m < 0 || n < 0) throw DomainError("transvectant: negative order");
  if (r < 0 || r > std::min(m, n)) throw DomainError("transvectant: r out of range");
}

// Homogeneous form of order m stored as coefficients of x^i y^(m-i).
struct Form {
  int order;
  Poly c;
};

Form dx(const Form& f) {
  if (f.order == 0) return {0, {Complex(0)}};
  Form g{f.order - 1, Poly(f.order, Complex(0))};
  for (int i = 1; i <= f.order; ++i) g.c[i - 1] = f.c[i] * Complex(static_cast<long>(i));
  return g;
}

Form dy(const Form& f) {
  if (f.order == 0) return {0, {Complex(0)}};
  Form g{f.order - 1, Poly(f.order, Complex(0))};
  for (int i = 0; i < f.order; ++i) g.c[i] = f.c[i] * Complex(static_cast<long>(f.order - i));
  return g;
}

}  // namespace

Poly transvectant(const Poly& q, int m, const Poly& rp, int n, int r) {
  check_orders(m, n, r);
  Poly qq = poly_resize(q, m), rr = poly_resize(rp, n);
  Poly out(m + n - 2 * r + 1, Complex(0));
  const long rf = factorial(r);
  for (int k = 0; k <= r; ++k) {
    long c = rf * binom(m - r + k, k) * binom(n - k, r - k);
    if (k % 2) c = -c;
    if (c == 0) continue;
    Poly t = poly_mul(poly_deriv(qq, r - k), poly_deriv(rr, k));
    for (size_t i = 0; i < t.size() && i < out.size(); ++i) out[i] += Complex(c) * t[i];
  }
  return out;
}

Poly transvectant_omega(const Poly& q, int m, const Poly& rp, int n, int r) {
  check_orders(m, n, r);
  Form f{m, poly_resize(q, m)}, g{n, poly_resize(rp, n)};
  Poly out(m + n - 2 * r + 1, Complex(0));
  for (int k = 0; k <= r; ++k) {
    Form a = f, b = g;
    for (int i = 0; i < r - k; ++i) a = dx(a);
    for (int i = 0; i < k; ++i) a = dy(a);
    for (int i = 0; i < k; ++i) b = dx(b);
    for (int i = 0; i < r - k; ++i) b = dy(b);
    Poly t = poly_mul(a.c, b.c);
    Complex c(binom(r, k) * (k % 2 ? -1 : 1));
    for (size_t i = 0; i < t.size() && i < out.size(); ++i) out[i] += c * t[i];
  }
  return out;
}

const std::vector<CovariantInfo>& basis_table() {
  static const std::vector<CovariantInfo> table = {
      {"A3", 1, 6},    {"B4", 2, 8},    {"B2", 2, 4},  {"B0", 2, 0},   {"C6", 3, 12}, {"C4", 3, 8},  {"C3", 3, 6},
      {"C1", 3, 2},    {"D5", 4, 10},   {"D3", 4, 6},  {"D2", 4, 4},   {"D0", 4, 0},  {"E4", 5, 8},  {"E2", 5, 4},
      {"E1", 5, 2},    {"F3_1", 6, 6},  {"F0", 6, 0},  {"F3_2", 6, 6}, {"G2", 7, 4},  {"G1", 7, 2},  {"H1", 8, 2},
      {"I2", 9, 4},    {"J1", 10, 2},   {"J0", 10, 0}, {"L1", 12, 2},  {"O0", 15, 0},
  };
  return table;
}

int basis_index(std::string_view name) {
  const auto& t = basis_table();
  for (size_t i = 0; i < t.size(); ++i)
    if (t[i].name == name) return static_cast<int>(i);
  throw DomainError("unknown covariant: " + std::string(name));
}

const Covariant& HilbertBasis::operator[](std::string_view name) const { return items_.at(basis_index(name)); }

const Complex& HilbertBasis::value(std::string_view name) const {
  const Covariant& c = (*this)[name];
  if (c.order != 0) throw DomainError("covariant " + c.name + " is not an invariant");
  return c.poly[0];
}

HilbertBasis hilbert_basis(const Sextic& p) {
  std::vector<Poly> v(basis_table().size());
  auto ord = [](std::string_view n) { return basis_table()[basis_index(n)].order; };
  auto set = [&](std::string_view n, Poly x) { v[basis_index(n)] = poly_resize(std::move(x), ord(n)); };
  auto get = [&](std::string_view n) -> const Poly& { return v[basis_index(n)]; };
  auto tv = [&](std::string_view a, std::string_view b, int r) { return transvectant(get(a), ord(a), get(b), ord(b), r); };
  auto q = [](long a, long b) { return Complex(rat(a, b)); };

  set("A3", p.poly());
  set("B4", tv("A3", "A3", 2));
  set("B2", tv("A3", "A3", 4));
  set("B0", tv("A3", "A3", 6));
  const Complex b0 = get("B0")[0];
  set("C6", poly_scale(q(1, 2), tv("A3", "B4", 1)));
  set("C4", poly_scale(q(1, 2), tv("A3", "B2", 1)));
  set("C3", poly_add(poly_scale(q(1, 6), tv("A3", "B2", 2)), poly_scale(Complex(5) * b0, get("A3"))));
  set("C1", poly_scale(q(1, 6), tv("A3", "B2", 4)));
  set("D5", poly_scale(q(2, 3), tv("A3", "C3", 1)));
  set("D3", tv("A3", "C1", 1));
  set("D2", tv("A3", "C1", 2));
  set("D0", poly_scale(q(1, 15), tv("A3", "C3", 6)));
  set("E4", tv("A3", "D2", 1));
  set("E2", tv("A3", "D2", 3));
  set("E1", tv("A3", "D2", 4));
  set("F3_1", tv("A3", "E1", 1));
  set("F0", tv("C1", "C1", 2));
  set("F3_2", poly_add(poly_scale(q(-5, 2), get("F3_1")), poly_scale(q(1, 2), tv("A3", "E2", 2))));
  set("G2", poly_scale(q(1, 2), tv("B2", "E1", 1)));
  set("G1", tv("C1", "D2", 2));
  set("H1", poly_scale(q(-1, 12), tv("A3", "G2", 4)));
  set("I2", tv("A3", "H1", 2));
  set("J1", tv("A3", "I2", 4));
  set("J0", tv("C1", "G1", 2));
  set("L1", poly_add(poly_scale(q(1, 6), tv("B2", "J1", 2)), poly_scale(b0 * q(1, 3), get("J1"))));
  set("O0", tv("L1", "C1", 2));

  std::vector<Covariant> items;
  const auto& t = basis_table();
  for (size_t i = 0; i < t.size(); ++i)
    items.push_back({std::string(t[i].name), t[i].degree, t[i].order, t[i].weight(), std::move(v[i])});
  return HilbertBasis(std::move(items));
}

CovarianceResidual covariance_check(const Sextic& p, const MobiusMap& m, std::string_view name) {
  const CovariantInfo& info = basis_table()[basis_index(name)];
  Poly lhs = hilbert_basis(mobius_apply(p, m)).poly(name);
  Poly rhs = apply_form(hilbert_basis(p).poly(name), info.order, m);
  rhs = poly_scale(pow(m.det(), info.weight()), rhs);
  return {poly_max_abs(poly_sub(lhs, rhs)), std::max(poly_max_abs(lhs), poly_max_abs(rhs))};
}

}  // namespace cs
