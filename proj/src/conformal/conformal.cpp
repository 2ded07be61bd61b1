#include "conformal/conformal.hpp"

#include <algorithm>
#include <sstream>

namespace cs {

namespace {

Real mat_norm(const CMatrix& a) {
  Real m(0);
  for (const auto& row : a) {
    Real s(0);
    for (const auto& x : row) s += abs(x);
    m = std::max(m, s);
  }
  return m;
}

CMatrix matmul(const CMatrix& a, const CMatrix& b) {
  const size_t n = a.size();
  CMatrix r(n, std::vector<Complex>(n, Complex(0)));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      if (a[i][k] == Complex(0)) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] += a[i][k] * b[k][j];
    }
  return r;
}

CMatrix identity(size_t n) {
  CMatrix r(n, std::vector<Complex>(n, Complex(0)));
  for (size_t i = 0; i < n; ++i) r[i][i] = Complex(1);
  return r;
}

std::vector<Complex> matvec(const CMatrix& a, const std::vector<Complex>& v) {
  std::vector<Complex> r(a.size(), Complex(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) r[i] += a[i][j] * v[j];
  return r;
}

Complex dot(const CVec3& u) { return u[0] * u[0] + u[1] * u[1] + u[2] * u[2]; }

void require_nonnull(const CVec3& u) {
  Real scale = std::max({Real(abs(u[0])), Real(abs(u[1])), Real(abs(u[2]))});
  if (scale == 0 || abs(dot(u)) <= policy().tol_rel * scale * scale)
    throw DomainError("null center: u.u = 0, inversion undefined");
}

// Printed inversion formula for R12_1, with u and r already relabelled.
template <class RF>
Complex FR(const Complex& u1, const Complex& u2, const Complex& u3, RF r, const Complex& q) {
  const Complex a2 = u1 * u1, b2 = u2 * u2, c2 = u3 * u3;
  const Complex a4 = a2 * a2, b4 = b2 * b2, c4 = c2 * c2;
  const Complex n = pow(a2 + b2 + c2, 4);
  Complex s = Complex(2) * u2 * u1 * (Complex(6) * c2 * b2 - Complex(2) * b2 * a2 + b4 + a4 - Complex(10) * c2 * a2 + Complex(5) * c4) * r(1, 3, 3);
  s += Complex(2) * u2 * u1 * (Complex(2) * c2 * b2 - c4 - Complex(2) * c2 * a2 - Complex(10) * b2 * a2 + Complex(3) * a4 + Complex(3) * b4) * r(1, 2, 2);
  s += Complex(8) * u3 * a2 * u2 * (Complex(2) * c2 - Complex(2) * b2 + a2) * r(2, 3, 2);
  s += (-b4 * b2 - Complex(15) * a4 * b2 + Complex(15) * a2 * b4 + a4 * a2 + c4 * c2 - b4 * c2 + b2 * c4 - a2 * c4 +
        Complex(6) * a2 * c2 * b2 - a4 * c2) *
       r(1, 2, 1);
  s -= Complex(2) * u3 * u2 * (c4 - Complex(10) * c2 * a2 + Complex(2) * c2 * b2 - Complex(6) * b2 * a2 + Complex(5) * a4 + b4) * r(1, 3, 1);
  s -= Complex(4) * a2 * (Complex(6) * c2 * b2 - c2 * a2 - b4 - c4 + b2 * a2) * r(2, 3, 3);
  s += Complex(4) * u3 * u1 * (Complex(3) * b4 + Complex(2) * c2 * b2 - Complex(8) * b2 * a2 + a4 - c4) * q;
  return s / n;
}

Complex FQ(const Complex& u1, const Complex& u2, const Complex& u3, const StructurePoint& p) {
  const Complex a2 = u1 * u1, b2 = u2 * u2, c2 = u3 * u3;
  const Complex a4 = a2 * a2, b4 = b2 * b2, c4 = c2 * c2;
  const Complex n = pow(a2 + b2 + c2, 4);
  const Complex two(2), five(5), ten(10);
  Complex s = two * u3 * u1 * (five * b4 - c4 - ten * a2 * b2 + a4) * p[R12_1];
  s += two * u3 * u2 * (five * a4 - c4 - ten * b2 * a2 + b4) * p[R12_2];
  s += two * u1 * u2 * (five * c4 - a4 - ten * b2 * c2 + b4) * p[R23_2];
  s += two * u1 * u3 * (five * b4 - a4 - ten * c2 * b2 + c4) * p[R23_3];
  s += two * u2 * u3 * (five * a4 - b4 - ten * c2 * a2 + c4) * p[R13_3];
  s += two * u2 * u1 * (five * c4 - b4 - ten * a2 * c2 + a4) * p[R13_1];
  s -= (-five * b2 * c4 - five * a2 * b4 + Complex(30) * a2 * c2 * b2 - five * b4 * c2 - five * a2 * c4 - five * a4 * b2 -
        five * a4 * c2 + a4 * a2 + b4 * b2 + c4 * c2) *
       p[Q123];
  return s / n;
}

int count_axis(Var v, int axis) {
  static const int idx[10][3] = {{1, 0, 0}, {2, 0, 0}, {3, 0, 0}, {1, 2, 1}, {1, 2, 2},
                                 {1, 3, 1}, {1, 3, 3}, {2, 3, 2}, {2, 3, 3}, {1, 2, 3}};
  return static_cast<int>(std::count(idx[v], idx[v] + 3, axis));
}

// Projective vector of a point: (z, 1) or (1, 0).
std::array<Complex, 2> proj(const ProjPoint& p) {
  return p.infinite ? std::array<Complex, 2>{Complex(1), Complex(0)} : std::array<Complex, 2>{p.z, Complex(1)};
}

// Sole root of a sextic of the form lambda (z - beta)^6.
ProjPoint sixfold_root(const Sextic& p) {
  Real scale = p.max_abs();
  if (abs(p.coeffs[6]) <= Real("1e-20") * scale) return ProjPoint::inf();
  return ProjPoint::at(-p.coeffs[5] / (Complex(6) * p.coeffs[6]));
}

Sextic sixfold(const ProjPoint& a) {
  if (a.infinite) {
    Sextic s;
    s.coeffs[0] = Complex(1);
    return s;
  }
  Poly p{Complex(1)};
  for (int k = 0; k < 6; ++k) p = poly_mul(p, Poly{-a.z, Complex(1)});
  return Sextic::from_poly(p);
}

// Möbius map for a linear map on Y that is known to come from one: the map
// on roots is fitted from three sixfold sextics, then the scale from a
// generic sextic.
template <class F>
InducedMap fit_induced(F ymap) {
  std::array<ProjPoint, 3> src = {ProjPoint::at(Complex(0)), ProjPoint::at(Complex(1)), ProjPoint::inf()};
  std::array<std::array<Complex, 2>, 3> img;
  for (int k = 0; k < 3; ++k) img[k] = proj(sixfold_root(sextic_from_y(ymap(y_from_sextic(sixfold(src[k]))))));
  // N sends 0 -> img0, 1 -> img1, inf -> img2: N = [k2 v2 | k0 v0], k2 v2 + k0 v0 = v1
  const auto& v0 = img[0];
  const auto& v1 = img[1];
  const auto& v2 = img[2];
  Complex det = v2[0] * v0[1] - v0[0] * v2[1];
  Complex k2 = (v1[0] * v0[1] - v0[0] * v1[1]) / det;
  Complex k0 = (v2[0] * v1[1] - v1[0] * v2[1]) / det;
  MobiusMap N(k2 * v2[0], k0 * v0[0], k2 * v2[1], k0 * v0[1]);
  // roots move by the inverse of the acting matrix
  MobiusMap M(N.d, -N.b, -N.c, N.a);

  YSeptet probe;
  for (int m = 0; m < 7; ++m) probe[m] = cx(0.3 + 0.17 * m, 0.41 - 0.23 * m * m);
  YSeptet want = ymap(probe);
  YSeptet got = y_from_sextic(mobius_apply(sextic_from_y(probe), M));
  Complex num(0), den(0);
  for (int m = 0; m < 7; ++m) {
    num += conj(got[m]) * want[m];
    den += conj(got[m]) * got[m];
  }
  return {M.scaled(cpow_rat(num / den, 1, 6)), Complex(1)};
}

YSeptet to_y(const std::vector<Complex>& v) {
  YSeptet y;
  std::copy(v.begin(), v.end(), y.begin());
  return y;
}

CMatrix generator(const CVec3& w, int l) {
  const Complex i = imag_unit();
  const Complex cp = -i * w[0] / Complex(2) - w[1] / Complex(2);
  const Complex cm = -i * w[0] / Complex(2) + w[1] / Complex(2);
  const Complex c0 = -i * w[2];
  auto P = ladder_matrix(Ladder::Plus, l), Z = ladder_matrix(Ladder::Zero, l), M = ladder_matrix(Ladder::Minus, l);
  CMatrix G = P;
  for (size_t r = 0; r < G.size(); ++r)
    for (size_t c = 0; c < G.size(); ++c) G[r][c] = cp * P[r][c] + c0 * Z[r][c] + cm * M[r][c];
  return G;
}

}  // namespace

CMatrix expm(const CMatrix& a) {
  const size_t n = a.size();
  int squarings = 0;
  Real nrm = mat_norm(a);
  CMatrix s = a;
  while (nrm > Real("0.5")) {
    nrm /= 2;
    ++squarings;
  }
  const Complex scale = Complex(pow(Real(2), -squarings));
  for (auto& row : s)
    for (auto& x : row) x *= scale;
  const Real eps = pow(Real(10), -static_cast<int>(precision()) - 5);
  CMatrix result = identity(n), term = identity(n);
  for (int k = 1; k < 400; ++k) {
    term = matmul(term, s);
    const Complex inv = Complex(1) / Complex(k);
    for (auto& row : term)
      for (auto& x : row) x *= inv;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) result[i][j] += term[i][j];
    if (mat_norm(term) < eps) break;
  }
  for (int k = 0; k < squarings; ++k) result = matmul(result, result);
  return result;
}

MobiusMap inversion_matrix(const CVec3& u) {
  require_nonnull(u);
  const Complex i = imag_unit();
  const Complex k = cpow_rat(dot(u), 2, 3);
  return MobiusMap(k * u[2], k * (-u[0] + i * u[1]), k * (-u[0] - i * u[1]), -k * u[2]);
}

CVec3 s_under_inversion(const CVec3& s, const CVec3& u) {
  require_nonnull(u);
  const Complex uu = dot(u), uu2 = uu * uu;
  CVec3 out;
  for (int a = 0; a < 3; ++a) {
    const int b = (a + 1) % 3, c = (a + 2) % 3;
    out[a] = -(u[a] * u[a] - u[b] * u[b] - u[c] * u[c]) / uu2 * s[a] - Complex(2) * u[a] * u[b] / uu2 * s[b] -
             Complex(2) * u[c] * u[a] / uu2 * s[c] + Complex(2) * u[a] / uu;
  }
  return out;
}

StructurePoint qr_under_inversion(const StructurePoint& sp, const CVec3& u) {
  require_nonnull(u);
  StructurePoint out;
  for (int a = 1; a <= 3; ++a)
    for (int b = 1; b <= 3; ++b) {
      if (a == b) continue;
      const int c = 6 - a - b;
      const int t[4] = {0, a, b, c};
      auto r = [&](int i, int j, int k) { return sp.R(t[i], t[j], t[k]); };
      out[var_R(a, b, a)] = FR(u[a - 1], u[b - 1], u[c - 1], r, sp.Q());
    }
  out[Q123] = FQ(u[0], u[1], u[2], sp);
  return out;
}

StructurePoint invert(const StructurePoint& sp, const CVec3& u) {
  StructurePoint out = qr_under_inversion(sp, u);
  CVec3 s = s_under_inversion({sp.S(1), sp.S(2), sp.S(3)}, u);
  for (int i = 1; i <= 3; ++i) out[var_S(i)] = s[i - 1];
  return out;
}

StructurePoint dilate(const StructurePoint& sp, const Complex& delta) {
  if (delta == Complex(0)) throw DomainError("dilation factor must be nonzero");
  StructurePoint out;
  for (int v = 0; v < 10; ++v) out.v[v] = delta * sp.v[v];
  return out;
}

StructurePoint reflect(const StructurePoint& sp, int axis) {
  if (axis < 1 || axis > 3) throw DomainError("reflection axis must be 1, 2 or 3");
  StructurePoint out;
  for (int v = 0; v < 10; ++v) out.v[v] = count_axis(static_cast<Var>(v), axis) % 2 ? -sp.v[v] : sp.v[v];
  return out;
}

CMatrix rotation_on_y(const CVec3& omega) { return expm(generator(omega, 3)); }

StructurePoint rotate(const StructurePoint& sp, const CVec3& omega) {
  XTriple x = x_from_s(sp);
  YSeptet y = y_from_qr(sp);
  auto xr = matvec(expm(generator(omega, 1)), std::vector<Complex>(x.begin(), x.end()));
  auto yr = matvec(rotation_on_y(omega), std::vector<Complex>(y.begin(), y.end()));
  return qrs_from_xy({xr[0], xr[1], xr[2]}, to_y(yr));
}

CMatrix rotation_matrix3(const CVec3& omega) {
  CMatrix O(3, std::vector<Complex>(3, Complex(0)));
  for (int j = 1; j <= 3; ++j) {
    StructurePoint e;
    e[var_S(j)] = Complex(1);
    StructurePoint r = rotate(e, omega);
    for (int i = 1; i <= 3; ++i) O[i - 1][j - 1] = r.S(i);
  }
  return O;
}

YSeptet apply_induced(const YSeptet& y, const InducedMap& im) {
  YSeptet out = y_from_sextic(mobius_apply(sextic_from_y(y), im.m));
  for (auto& c : out) c *= im.scalar;
  return out;
}

InducedMap then(const InducedMap& a, const InducedMap& b) { return {a.m * b.m, a.scalar * b.scalar}; }

InducedMap rotation_induced(const CVec3& w) {
  const Complex i = imag_unit();
  const Complex cp = -i * w[0] / Complex(2) - w[1] / Complex(2);
  const Complex cm = -i * w[0] / Complex(2) + w[1] / Complex(2);
  const Complex c0 = -i * w[2];
  // generators on (a b; c d) matching J+, J0, J- on the sextic
  CMatrix A = {{c0 / Complex(2), -cm}, {-cp, -c0 / Complex(2)}};
  CMatrix E = expm(A);
  return {MobiusMap(E[0][0], E[0][1], E[1][0], E[1][1]), Complex(1)};
}

InducedMap reflection_induced(int axis) {
  switch (axis) {
    case 1: return {MobiusMap(Complex(0), Complex(1), Complex(1), Complex(0)), Complex(1)};
    case 2: {
      const Complex w = cpow_rat(Complex(-1), 1, 6);
      return {MobiusMap(Complex(0), -w, w, Complex(0)), Complex(1)};
    }
    case 3: return {MobiusMap(Complex(1), Complex(0), Complex(0), Complex(-1)), Complex(1)};
  }
  throw DomainError("reflection axis must be 1, 2 or 3");
}

InducedMap permutation_induced(const Perm& s) {
  return fit_induced([&](const YSeptet& y) {
    XTriple x0{Complex(0), Complex(0), Complex(0)};
    return y_from_qr(permute(qrs_from_xy(x0, y), s));
  });
}

ConformalMove ConformalMove::inversion(const CVec3& u) {
  require_nonnull(u);
  ConformalMove m{Kind::Inversion};
  m.u = u;
  return m;
}

ConformalMove ConformalMove::dilation(const Complex& d) {
  if (d == Complex(0)) throw DomainError("dilation factor must be nonzero");
  ConformalMove m{Kind::Dilation};
  m.delta = d;
  return m;
}

ConformalMove ConformalMove::rotation(const CVec3& omega) {
  ConformalMove m{Kind::Rotation};
  m.u = omega;
  return m;
}

ConformalMove ConformalMove::reflection(int axis) {
  if (axis < 1 || axis > 3) throw DomainError("reflection axis must be 1, 2 or 3");
  ConformalMove m{Kind::Reflection};
  m.axis = axis;
  return m;
}

ConformalMove ConformalMove::permutation(const Perm& s) {
  ConformalMove m{Kind::Permutation};
  m.perm = s;
  return m;
}

StructurePoint ConformalMove::apply(const StructurePoint& sp) const {
  switch (kind) {
    case Kind::Inversion: return invert(sp, u);
    case Kind::Dilation: return dilate(sp, delta);
    case Kind::Rotation: return rotate(sp, u);
    case Kind::Reflection: return reflect(sp, axis);
    case Kind::Permutation: return permute(sp, perm);
  }
  return sp;
}

InducedMap ConformalMove::induced() const {
  switch (kind) {
    case Kind::Inversion: return {inversion_matrix(u), pow(dot(u), -8)};
    case Kind::Dilation: return {MobiusMap(delta, Complex(0), Complex(0), delta), pow(delta, -5)};
    case Kind::Rotation: return rotation_induced(u);
    case Kind::Reflection: return reflection_induced(axis);
    case Kind::Permutation: return permutation_induced(perm);
  }
  return {};
}

std::string ConformalMove::describe() const {
  std::ostringstream os;
  auto c = [](const Complex& z) {
    std::string s = to_string(re(z), 20);
    if (im(z) != 0) s += (im(z) > 0 ? "+" : "") + to_string(im(z), 20) + "i";
    return s;
  };
  switch (kind) {
    case Kind::Inversion: os << "invert(" << c(u[0]) << "," << c(u[1]) << "," << c(u[2]) << ")"; break;
    case Kind::Dilation: os << "dilate(" << c(delta) << ")"; break;
    case Kind::Rotation: os << "rotate(" << c(u[0]) << "," << c(u[1]) << "," << c(u[2]) << ")"; break;
    case Kind::Reflection: os << "reflect(x" << axis << ")"; break;
    case Kind::Permutation: os << "permute(" << perm[0] << perm[1] << perm[2] << ")"; break;
  }
  return os.str();
}

StructurePoint replay(const StructurePoint& sp, const std::vector<ConformalMove>& moves) {
  StructurePoint cur = sp;
  for (const auto& m : moves) cur = m.apply(cur);
  return cur;
}

InducedMap replay_induced(const std::vector<ConformalMove>& moves) {
  InducedMap acc;
  for (const auto& m : moves) acc = then(acc, m.induced());
  return acc;
}

Normalized normalize_S(const StructurePoint& sp) {
  Normalized out{{}, sp};
  Real scale(1);
  for (const auto& c : sp.v) scale = std::max(scale, Real(abs(c)));
  for (int axis : {3, 1, 2}) {
    const Complex s = out.point.S(axis);
    if (abs(s) <= policy().tol_rel * scale) continue;
    const Perm swap = axis == 3 ? Perm{1, 2, 3} : axis == 1 ? Perm{3, 2, 1} : Perm{1, 3, 2};
    const Complex u3 = s / Complex(2);
    std::vector<ConformalMove> seq;
    if (axis != 3) seq.push_back(ConformalMove::permutation(swap));
    seq.push_back(ConformalMove::inversion({Complex(0), Complex(0), u3}));
    seq.push_back(ConformalMove::dilation(u3 * u3));
    seq.push_back(ConformalMove::reflection(3));
    if (axis != 3) seq.push_back(ConformalMove::permutation(swap));
    out.point = replay(out.point, seq);
    out.moves.insert(out.moves.end(), seq.begin(), seq.end());
  }
  return out;
}

InversionFit fit_inversion_scalar(const StructurePoint& sp, const CVec3& u) {
  YSeptet direct = y_from_qr(qr_under_inversion(sp, u));
  YSeptet action = y_from_sextic(mobius_apply(sextic_from_y(y_from_qr(sp)), inversion_matrix(u)));
  Complex num(0), den(0);
  for (int m = 0; m < 7; ++m) {
    num += conj(action[m]) * direct[m];
    den += conj(action[m]) * action[m];
  }
  InversionFit f;
  f.scalar = num / den;
  f.expected = pow(dot(u), -8);
  Real mis(0), ref(0);
  for (int m = 0; m < 7; ++m) {
    mis = std::max(mis, Real(abs(direct[m] - f.scalar * action[m])));
    ref = std::max(ref, Real(abs(direct[m])));
  }
  f.residual = ref > 0 ? Real(mis / ref) : mis;
  f.deviation = abs(f.scalar / f.expected - Complex(1));
  return f;
}

}  // namespace cs
