#pragma once

#include <boost/multiprecision/complex_adaptor.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <random>
#include <stdexcept>
#include <string>

namespace cs {

namespace bmp = boost::multiprecision;

using Real = bmp::number<bmp::mpfr_float_backend<0>, bmp::et_off>;
using Complex = bmp::number<bmp::complex_adaptor<bmp::mpfr_float_backend<0>>, bmp::et_off>;

// Raised for poles, null centres, degenerate configurations and similar
// input-dependent failures.
struct DomainError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Working precision in decimal digits. Values created before a change keep
// their old precision, so set this once before building any numbers.
void set_precision(unsigned digits10);
unsigned precision();

struct TolerancePolicy {
  Real tol_rel;
};

// Process-wide policy. Defaults to 1e-30; reset by set_tolerance.
const TolerancePolicy& policy();
void set_tolerance(const Real& tol);

// Swaps the tolerance for the lifetime of the object.
class ScopedTolerance {
 public:
  explicit ScopedTolerance(const Real& tol) : saved_(policy().tol_rel) { set_tolerance(tol); }
  ~ScopedTolerance() { set_tolerance(saved_); }
  ScopedTolerance(const ScopedTolerance&) = delete;
  ScopedTolerance& operator=(const ScopedTolerance&) = delete;

 private:
  Real saved_;
};

// Reads CONFCLASS_PRECISION / CONFCLASS_TOL if present.
void apply_env_overrides();

// |x| <= tol * y_norm^degree. With y_norm == 0 and degree > 0 only exact
// zero passes.
bool zero_test(const Complex& x, int degree, const Real& y_norm);
bool zero_test(const Complex& x, int degree, const Real& y_norm, const Real& tol);

inline Complex cx(const Real& re, const Real& im = Real(0)) { return Complex(re, im); }
Complex cx(double re, double im = 0.0);
Complex imag_unit();

Real rat(long num, long den = 1);
Real sqrt_rat(long num, long den = 1);

Real re(const Complex& z);
Real im(const Complex& z);

Real parse_real(const std::string& s);
std::string to_string(const Real& x, int digits = 0);

// Uniform in the square [-r, r] x [-r, r].
Complex random_complex(std::mt19937_64& rng, double r = 1.0);
Real random_real(std::mt19937_64& rng, double lo, double hi);

// Principal power z^(num/den).
Complex cpow_rat(const Complex& z, long num, long den);

}  // namespace cs
