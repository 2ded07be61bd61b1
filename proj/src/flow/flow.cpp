#include "flow/flow.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "covariant/covariant.hpp"

namespace cs {

namespace {

// Symbolic variable inside a prototype, before relabelling.
struct Sym {
  char kind;  // 'S', 'R', 'Q'
  int i = 0, j = 0, k = 0;
};
Sym sS(int i) { return {'S', i}; }
Sym sR(int i, int j, int k) { return {'R', i, j, k}; }
const Sym sQ{'Q'};

struct ProtoTerm {
  long num, den;
  Sym a, b;
};
using Proto = std::vector<ProtoTerm>;

const Proto P_R11 = {{-2, 3, sR(1, 2, 2), sR(2, 3, 3)}, {2, 3, sR(1, 3, 3), sR(2, 3, 3)}, {4, 3, sQ, sR(2, 3, 2)},
                     {5, 3, sQ, sR(1, 3, 1)},          {-1, 1, sR(1, 2, 1), sR(1, 3, 3)}, {-1, 1, sR(1, 2, 1), sS(1)},
                     {1, 1, sR(1, 3, 3), sS(2)},       {3, 1, sR(1, 2, 2), sS(2)},       {2, 1, sQ, sS(3)}};
const Proto P_R12 = {{3, 5, sR(1, 2, 2), sR(1, 3, 3)},   {-1, 15, sR(1, 3, 1), sR(2, 3, 2)},
                     {-11, 15, sR(1, 2, 1), sR(2, 3, 3)}, {8, 15, sR(1, 3, 1), sR(1, 3, 1)},
                     {1, 5, sR(1, 2, 1), sR(1, 2, 1)},    {-4, 5, sR(2, 3, 2), sR(2, 3, 2)},
                     {8, 15, sR(1, 3, 3), sR(1, 3, 3)},   {1, 5, sR(1, 2, 2), sR(1, 2, 2)},
                     {-4, 5, sR(2, 3, 3), sR(2, 3, 3)},   {2, 15, sQ, sQ},
                     {-1, 1, sR(1, 3, 3), sS(1)},         {-3, 1, sR(1, 2, 2), sS(1)},
                     {-1, 1, sR(1, 2, 1), sS(2)},         {1, 1, sR(1, 3, 1), sS(3)}};
const Proto P_R13 = {{-1, 3, sQ, sR(1, 2, 2)},          {-1, 3, sQ, sR(1, 3, 3)},
                     {1, 3, sR(2, 3, 2), sR(1, 2, 1)},  {1, 3, sR(2, 3, 3), sR(1, 3, 1)},
                     {-2, 1, sQ, sS(1)},                {-1, 1, sR(1, 3, 1), sS(2)},
                     {-1, 1, sR(1, 2, 1), sS(3)}};
const Proto P_S11 = {{-17, 90, sR(1, 2, 2), sR(1, 3, 3)}, {1, 30, sR(1, 3, 1), sR(2, 3, 2)},
                     {1, 30, sR(1, 2, 1), sR(2, 3, 3)},   {-7, 45, sR(1, 3, 3), sR(1, 3, 3)},
                     {1, 15, sR(2, 3, 3), sR(2, 3, 3)},   {-7, 45, sR(1, 2, 1), sR(1, 2, 1)},
                     {-11, 90, sQ, sQ},                   {-7, 45, sR(1, 3, 1), sR(1, 3, 1)},
                     {-7, 45, sR(1, 2, 2), sR(1, 2, 2)},  {1, 15, sR(2, 3, 2), sR(2, 3, 2)},
                     {1, 2, sS(2), sS(2)},                {1, 2, sS(3), sS(3)},
                     {-1, 2, sS(1), sS(1)}};
const Proto P_S12 = {{-1, 9, sR(1, 3, 3), sR(2, 3, 3)}, {-2, 9, sQ, sR(2, 3, 2)}, {1, 9, sR(1, 2, 1), sR(1, 3, 3)},
                     {1, 9, sR(1, 2, 2), sR(2, 3, 3)},  {-2, 9, sQ, sR(1, 3, 1)}, {-1, 1, sS(1), sS(2)}};
const Proto P_Q1 = {{2, 3, sR(1, 3, 1), sR(1, 2, 1)}, {-1, 3, sR(2, 3, 3), sR(1, 3, 1)}, {1, 1, sQ, sR(1, 3, 3)},
                    {-1, 3, sR(2, 3, 2), sR(1, 2, 1)}, {1, 1, sQ, sR(1, 2, 2)},        {-1, 1, sQ, sS(1)},
                    {1, 1, sR(2, 3, 2), sS(2)},        {-1, 1, sR(1, 3, 1), sS(2)},     {1, 1, sR(2, 3, 3), sS(3)},
                    {-1, 1, sR(1, 2, 1), sS(3)}};

constexpr long kDen = 90;  // common denominator of every prototype coefficient

Var relabel(const Sym& s, const std::array<int, 4>& t) {
  switch (s.kind) {
    case 'S': return var_S(t[s.i]);
    case 'R': return var_R(t[s.i], t[s.j], t[s.k]);
    default: return Q123;
  }
}

struct QuadTerm {
  long c;  // numerator over kDen
  int a, b;
};
using QuadTable = std::array<std::array<std::vector<QuadTerm>, 3>, 10>;

void push(std::vector<QuadTerm>& out, const Proto& p, const std::array<int, 4>& t) {
  for (const auto& term : p) {
    int a = relabel(term.a, t), b = relabel(term.b, t);
    if (a > b) std::swap(a, b);
    long c = term.num * (kDen / term.den);
    auto it = std::find_if(out.begin(), out.end(), [&](const QuadTerm& q) { return q.a == a && q.b == b; });
    if (it == out.end())
      out.push_back({c, a, b});
    else
      it->c += c;
  }
}

const QuadTable& table() {
  static const QuadTable tab = [] {
    QuadTable T;
    for (int a = 1; a <= 3; ++a)
      for (int b = 1; b <= 3; ++b) {
        if (a == b) continue;
        const int c = 6 - a - b;
        std::array<int, 4> t{0, a, b, c};
        const Var v = var_R(a, b, a);
        push(T[v][a - 1], P_R11, t);
        push(T[v][b - 1], P_R12, t);
        push(T[v][c - 1], P_R13, t);
      }
    for (int a = 1; a <= 3; ++a) {
      int b = a == 1 ? 2 : 1, c = a == 3 ? 2 : 3;
      std::array<int, 4> t{0, a, b, c}, t2{0, a, c, b};
      push(T[var_S(a)][a - 1], P_S11, t);
      push(T[var_S(a)][b - 1], P_S12, t);
      push(T[var_S(a)][c - 1], P_S12, t2);
      push(T[Q123][a - 1], P_Q1, t2);
    }
    return T;
  }();
  return tab;
}

const Complex& den_inv() {
  static std::mutex mu;
  static unsigned prec = 0;
  static Complex v;
  std::lock_guard lock(mu);
  if (prec != precision()) {
    prec = precision();
    v = Complex(1) / Complex(kDen);
  }
  return v;
}

Complex sq(const Complex& x) { return x * x; }

}  // namespace

QrsField qrs_derivatives(const StructurePoint& sp) {
  const auto& T = table();
  std::array<std::array<Complex, 10>, 10> prod;
  for (int a = 0; a < 10; ++a)
    for (int b = a; b < 10; ++b) prod[a][b] = sp.v[a] * sp.v[b];
  const Complex inv = den_inv();
  QrsField F;
  for (int v = 0; v < 10; ++v)
    for (int j = 0; j < 3; ++j) {
      Complex acc(0);
      for (const auto& t : T[v][j]) acc += prod[t.a][t.b] * t.c;
      F[v][j] = acc * inv;
    }
  return F;
}

namespace {
YField y_of_field(const QrsField& F) {
  YField out;
  for (int j = 0; j < 3; ++j) {
    StructurePoint d;
    for (int v = 0; v < 10; ++v) d.v[v] = F[v][j];
    out[j] = y_from_qr(d);
  }
  return out;
}
}  // namespace

YField y_derivatives(const StructurePoint& sp) { return y_of_field(qrs_derivatives(sp)); }

YField hatted_y_derivatives(const StructurePoint& sp) {
  StructurePoint h = sp;
  for (int i = 1; i <= 3; ++i) h[var_S(i)] = Complex(0);
  return y_derivatives(h);
}

std::array<Complex, 3> plus_zero_minus(const std::array<Complex, 3>& d) {
  const Complex i = imag_unit();
  return {i * d[1] + d[0], d[2], i * d[1] - d[0]};
}

std::array<Complex, 3> hatted_derivatives_Yp3(const YSeptet& y, Coeffs which) {
  const Complex i = imag_unit();
  const Real s15 = sqrt_rat(15), s5 = sqrt_rat(5), s10 = sqrt_rat(10), s30 = sqrt_rat(30);
  const Complex c13 = which == Coeffs::Corrected ? Complex(-Real(4) * s15 / 45) * i
                                                 : Complex(-Real(4) / (Real(45) * s15)) * i;
  Complex up = Complex(rat(2, 9)) * i * sq(ym(y, 2)) + c13 * ym(y, 1) * ym(y, 3);
  Complex zero = Complex(s5 / 15) * i * ym(y, 3) * ym(y, 0) - Complex(s10 / 45) * i * ym(y, 1) * ym(y, 2);
  Complex down = -Complex(Real(2) * s15 / 5) * i * ym(y, -1) * ym(y, 3) +
                 Complex(Real(17) * s30 / 45) * i * ym(y, 2) * ym(y, 0) - Complex(rat(10, 9)) * i * sq(ym(y, 1));
  return {up, zero, down};
}

const std::array<std::array<YPoly, 7>, 3>& hatted_y_polys() {
  static std::mutex mu;
  static unsigned prec = 0;
  static std::array<std::array<YPoly, 7>, 3> cache;
  std::lock_guard lock(mu);
  if (prec == precision()) return cache;
  prec = precision();

  // The hatted derivatives are quadratic forms in Y; recover them by
  // polarisation on basis vectors.
  auto eval = [](const YSeptet& y) {
    XTriple x0{Complex(0), Complex(0), Complex(0)};
    YField d = y_derivatives(qrs_from_xy(x0, y));
    std::array<YSeptet, 3> out;
    for (int m = 0; m < 7; ++m) {
      auto pzm = plus_zero_minus({d[0][m], d[1][m], d[2][m]});
      for (int k = 0; k < 3; ++k) out[k][m] = pzm[k];
    }
    return out;
  };
  auto basis = [](int a, int b) {
    YSeptet y;
    y.fill(Complex(0));
    y[a] += Complex(1);
    if (b >= 0) y[b] += Complex(1);
    return y;
  };
  std::array<std::array<YSeptet, 3>, 7> diag;
  for (int a = 0; a < 7; ++a) diag[a] = eval(basis(a, -1));
  std::array<std::array<YPoly, 7>, 3> polys;
  const Real cut = pow(Real(10), -static_cast<int>(precision()) + 8);
  for (int a = 0; a < 7; ++a)
    for (int b = a; b < 7; ++b) {
      auto v = a == b ? diag[a] : eval(basis(a, b));
      for (int k = 0; k < 3; ++k)
        for (int m = 0; m < 7; ++m) {
          Complex c = a == b ? v[k][m] : v[k][m] - diag[a][k][m] - diag[b][k][m];
          if (abs(c) < cut) continue;
          polys[k][m] = polys[k][m] + (YPoly::var(a - 3) * YPoly::var(b - 3)).scaled(c);
        }
    }
  cache = polys;
  return cache;
}

std::array<Complex, 9> b4_components(const YSeptet& y) {
  Poly p = sextic_from_y(y).poly();
  Poly b = poly_resize(transvectant(p, 6, p, 6, 2), 8);
  static const long c8[9] = {1, 8, 28, 56, 70, 56, 28, 8, 1};
  std::array<Complex, 9> out;
  for (int j = 0; j <= 8; ++j) {
    Complex c = b[j] / Complex(sqrt_rat(c8[j]));
    out[j] = (j % 2) ? -c : c;
  }
  return out;
}

Complex lowering_tail(const YSeptet& y) {
  return (sq(ym(y, 1)) - Complex(sqrt_rat(10, 3)) * ym(y, 0) * ym(y, 2) +
          Complex(sqrt_rat(5, 3)) * ym(y, -1) * ym(y, 3)) *
         ym(y, 1);
}

Complex lowering_tail_coefficient(Coeffs which) {
  const Real s15 = sqrt_rat(15);
  if (which == Coeffs::Printed) return imag_unit() * Complex(Real(176) / (Real(105) * s15));
  return imag_unit() * Complex(-Real(52800) / (Real(7) * s15));
}

HessianResidual hessian_closure_check(const StructurePoint& sp) {
  const Complex i = imag_unit();
  auto s = [](long n) { return Complex(sqrt_rat(n)); };
  const YSeptet y = y_from_qr(sp);
  const XTriple x = x_from_s(sp);
  const YField dY = y_derivatives(sp);
  const auto B4 = b4_components(y);
  auto B = [&](int m) { return B4[m + 4]; };
  auto Y = [&](int m) { return ym(y, m); };
  auto X = [&](int m) { return x[m + 1]; };

  std::array<Complex, 3> dB;
  for (int j = 0; j < 3; ++j) {
    const auto& d = dY[j];
    dB[j] = Complex(300) * (Complex(6) / s(15) * (ym(d, 3) * Y(1) + Y(3) * ym(d, 1)) - Complex(2) * Y(2) * ym(d, 2));
  }
  auto lhs = plus_zero_minus(dB);

  Complex ep = (-Complex(6) * X(1) - Complex(28) / (Complex(9) * s(15)) * i * Y(1)) * B(4) +
               Complex(14) / (Complex(9) * s(3)) * i * Y(2) * B(3) - Complex(2) * s(7) / Complex(9) * i * Y(3) * B(2);
  Complex e0 = (s(2) * X(0) + Complex(56) * i / (Complex(9) * s(5)) * Y(0)) * B(4) +
               (s(2) * X(1) - Complex(77) * i * s(2) / (Complex(9) * s(15)) * Y(1)) * B(3) +
               Complex(10) * i * s(14) / (Complex(9) * s(3)) * Y(2) * B(2) - i * s(14) / Complex(3) * B(1) * Y(3);
  Complex em_b = (Complex(2) * X(-1) + Complex(16) * i * s(3) / s(5) * Y(-1)) * B(4) -
                 (Complex(2) * X(0) + Complex(8) * i * s(2) / (Complex(3) * s(5)) * Y(0)) * B(3) -
                 Complex(194) * i / (Complex(3) * s(105)) * Y(1) * B(2) +
                 Complex(14) * i * s(7) / (Complex(3) * s(3)) * Y(2) * B(1) -
                 Complex(2) * i * s(14) / s(5) * Y(3) * B(0);
  const Complex tail = lowering_tail(y);

  HessianResidual r;
  r.plus = abs(lhs[0] - ep);
  r.zero = abs(lhs[1] - e0);
  r.minus = abs(lhs[2] - em_b - lowering_tail_coefficient(Coeffs::Corrected) * tail);
  r.minus_printed = abs(lhs[2] - em_b - lowering_tail_coefficient(Coeffs::Printed) * tail);
  r.scale = std::max({Real(abs(lhs[0])), Real(abs(lhs[1])), Real(abs(lhs[2]))});
  return r;
}

namespace {
Real sp_norm(const StructurePoint& sp) {
  Real m(0);
  for (const auto& c : sp.v) m = std::max(m, Real(abs(c)));
  return m;
}

StructurePoint axpy(const StructurePoint& a, const Complex& h, const std::array<Complex, 10>& k) {
  StructurePoint r;
  for (int v = 0; v < 10; ++v) r.v[v] = a.v[v] + h * k[v];
  return r;
}

std::array<Complex, 10> rhs(const StructurePoint& sp, const std::array<Complex, 3>& dx) {
  QrsField F = qrs_derivatives(sp);
  std::array<Complex, 10> out;
  for (int v = 0; v < 10; ++v) out[v] = F[v][0] * dx[0] + F[v][1] * dx[1] + F[v][2] * dx[2];
  return out;
}
}  // namespace

StructurePoint rk4_segment(const StructurePoint& sp0, const std::array<Real, 3>& dx, int steps) {
  if (steps < 1) throw DomainError("rk4_segment needs at least one step");
  const std::array<Complex, 3> d{Complex(dx[0]), Complex(dx[1]), Complex(dx[2])};
  const Complex h = Complex(1) / Complex(steps);
  const Complex half = h / Complex(2), sixth = h / Complex(6);
  const Real start = sp_norm(sp0) + 1;
  StructurePoint y = sp0;
  for (int n = 0; n < steps; ++n) {
    auto k1 = rhs(y, d);
    auto k2 = rhs(axpy(y, half, k1), d);
    auto k3 = rhs(axpy(y, half, k2), d);
    auto k4 = rhs(axpy(y, h, k3), d);
    for (int v = 0; v < 10; ++v) y.v[v] += sixth * (k1[v] + Complex(2) * (k2[v] + k3[v]) + k4[v]);
    const Real nrm = sp_norm(y);
    if (!(nrm < start * Real("1e12"))) {
      Real len = sqrt(dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2]);
      Real s = len * Real(n + 1) / Real(steps);
      throw FlowBlowUp("flow left the domain (blow-up) at arclength " + to_string(s, 12), s);
    }
  }
  return y;
}

Real checkpoint_tolerance(const Real& err) { return std::max(policy().tol_rel, Real(1000) * err); }

Path random_short_path(std::mt19937_64& rng, int segments, double step, int steps_per_segment) {
  std::normal_distribution<double> g;
  Path path{{{Real(0), Real(0), Real(0)}}, steps_per_segment};
  for (int s = 0; s < segments; ++s) {
    double d[3] = {g(rng), g(rng), g(rng)};
    double n = std::sqrt(d[0] * d[0] + d[1] * d[1] + d[2] * d[2]);
    auto next = path.waypoints.back();
    for (int j = 0; j < 3; ++j) next[j] += Real(step * d[j] / n);
    path.waypoints.push_back(next);
  }
  return path;
}

FlowResult integrate(const StructurePoint& sp0, const Path& path, const Real& target, int max_steps) {
  if (path.waypoints.size() < 2) throw DomainError("path needs at least two waypoints");
  FlowResult res;
  res.checkpoints.push_back(sp0);
  res.error_estimate = 0;
  res.steps_used = path.steps;
  StructurePoint cur = sp0;
  Real arclength(0);
  for (size_t s = 1; s < path.waypoints.size(); ++s) {
    std::array<Real, 3> dx;
    for (int j = 0; j < 3; ++j) dx[j] = path.waypoints[s][j] - path.waypoints[s - 1][j];
    int n = std::max(1, path.steps);
    StructurePoint coarse, fine;
    Real est;
    try {
      coarse = rk4_segment(cur, dx, n);
      while (true) {
        fine = rk4_segment(cur, dx, 2 * n);
        Real diff(0);
        for (int v = 0; v < 10; ++v) diff = std::max(diff, Real(abs(fine.v[v] - coarse.v[v])));
        est = diff / Real(15) / (sp_norm(fine) + Real("1e-300"));
        if (est < target || 2 * n >= max_steps) break;
        coarse = fine;
        n *= 2;
      }
    } catch (const FlowBlowUp& e) {
      Real s = arclength + e.arclength;
      throw FlowBlowUp("flow left the domain (blow-up) at arclength " + to_string(s, 12), s);
    }
    arclength += sqrt(dx[0] * dx[0] + dx[1] * dx[1] + dx[2] * dx[2]);
    res.error_estimate = std::max(res.error_estimate, est);
    res.steps_used = std::max(res.steps_used, 2 * n);
    cur = fine;
    res.checkpoints.push_back(cur);
  }
  return res;
}

}  // namespace cs
