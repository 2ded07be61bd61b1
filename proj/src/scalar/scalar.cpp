#include "scalar/scalar.hpp"

#include <cstdlib>
#include <sstream>

namespace cs {

namespace {

unsigned g_digits = 64;

TolerancePolicy& mutable_policy() {
  static TolerancePolicy p{[] {
    Real::default_precision(g_digits);
    return Real("1e-30");
  }()};
  return p;
}

}  // namespace

void set_precision(unsigned digits10) {
  if (digits10 < 20) throw DomainError("precision below 20 digits is not supported");
  g_digits = digits10;
  Real::default_precision(digits10);
  // Rebuild the tolerance at the new precision without changing its value.
  auto& p = mutable_policy();
  p.tol_rel = Real(p.tol_rel);
}

unsigned precision() { return g_digits; }

const TolerancePolicy& policy() { return mutable_policy(); }

void set_tolerance(const Real& tol) {
  if (tol < 0) throw DomainError("tolerance must be nonnegative");
  mutable_policy().tol_rel = tol;
}

void apply_env_overrides() {
  if (const char* p = std::getenv("CONFCLASS_PRECISION")) set_precision(static_cast<unsigned>(std::stoul(p)));
  if (const char* t = std::getenv("CONFCLASS_TOL")) set_tolerance(parse_real(t));
}

bool zero_test(const Complex& x, int degree, const Real& y_norm) {
  return zero_test(x, degree, y_norm, policy().tol_rel);
}

bool zero_test(const Complex& x, int degree, const Real& y_norm, const Real& tol) {
  if (degree < 0) throw DomainError("negative degree in zero_test");
  if (y_norm < 0) throw DomainError("negative scale in zero_test");
  Real ax = abs(x);
  if (y_norm == 0 && degree > 0) return ax == 0;
  return ax <= tol * pow(y_norm, degree);
}

Complex cx(double re, double im) { return Complex(Real(re), Real(im)); }

Complex imag_unit() { return Complex(Real(0), Real(1)); }

Real rat(long num, long den) { return Real(num) / Real(den); }

Real sqrt_rat(long num, long den) {
  if (num < 0 || den <= 0) throw DomainError("sqrt_rat expects a nonnegative rational");
  return sqrt(rat(num, den));
}

Real re(const Complex& z) { return real(z); }
Real im(const Complex& z) { return imag(z); }

Real parse_real(const std::string& s) {
  try {
    return Real(s);
  } catch (const std::exception&) {
    throw DomainError("cannot parse number: " + s);
  }
}

std::string to_string(const Real& x, int digits) {
  std::ostringstream os;
  os.precision(digits > 0 ? digits : static_cast<int>(g_digits));
  os << std::scientific << x;
  return os.str();
}

Complex random_complex(std::mt19937_64& rng, double r) {
  std::uniform_real_distribution<double> u(-r, r);
  double a = u(rng);
  double b = u(rng);
  return cx(a, b);
}

Real random_real(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> u(lo, hi);
  return Real(u(rng));
}

Complex cpow_rat(const Complex& z, long num, long den) {
  if (z == Complex(0)) return Complex(0);
  return exp(log(z) * Complex(rat(num, den)));
}

}  // namespace cs
