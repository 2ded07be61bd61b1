#pragma once

#include <array>
#include <random>
#include <vector>

#include "rep/ypoly.hpp"

namespace cs {

// field[v][j-1] = d(variable v)/dx_j
using QrsField = std::array<std::array<Complex, 3>, 10>;
// dy[j-1][m+3] = dY_m/dx_j
using YField = std::array<YSeptet, 3>;

QrsField qrs_derivatives(const StructurePoint& sp);
YField y_derivatives(const StructurePoint& sp);
// Same with S set to zero.
YField hatted_y_derivatives(const StructurePoint& sp);

// Rotation-adapted combinations: + = i d2 + d1, 0 = d3, - = i d2 - d1.
std::array<Complex, 3> plus_zero_minus(const std::array<Complex, 3>& d);

// Hatted derivatives of Y_{+3} as closed forms in Y.
// Printed: coefficient of Y+1 Y+3 in the raising line is -4i/(45 sqrt 15).
// Corrected: -4i sqrt(15)/45, the value the chain rule gives.
enum class Coeffs { Printed, Corrected };
std::array<Complex, 3> hatted_derivatives_Yp3(const YSeptet& y, Coeffs which = Coeffs::Corrected);

// Hatted derivatives of every Y_m as quadratic polynomials in Y; index
// [0..2] = (+, 0, -), then m + 3.
const std::array<std::array<YPoly, 7>, 3>& hatted_y_polys();

// Components B_{-4..4} of B4 = (A3, A3)^(2) for the sextic of y, index m + 4.
std::array<Complex, 9> b4_components(const YSeptet& y);

// The cubic (Y1^2 - sqrt(10/3) Y0 Y2 + sqrt(5/3) Y-1 Y3) Y1 appearing in the
// lowering derivative of B_{+4}.
Complex lowering_tail(const YSeptet& y);
Complex lowering_tail_coefficient(Coeffs which);

struct HessianResidual {
  Real plus, zero, minus;  // closed form (corrected tail) vs chain rule
  Real minus_printed;      // same, with the printed tail coefficient
  Real scale;              // max |chain-rule value|
};

HessianResidual hessian_closure_check(const StructurePoint& sp);

struct FlowBlowUp : DomainError {
  Real arclength;
  FlowBlowUp(const std::string& msg, Real s) : DomainError(msg), arclength(std::move(s)) {}
};

struct Path {
  std::vector<std::array<Real, 3>> waypoints;  // at least 2
  int steps = 100;                              // RK4 steps per segment
};

struct FlowResult {
  std::vector<StructurePoint> checkpoints;  // one per waypoint, first = start
  Real error_estimate;                      // max relative Richardson estimate
  int steps_used;                           // per segment, after refinement
};

// Fixed-step RK4 along a piecewise-linear path. Every segment is run with n
// and 2n steps; the step count doubles (up to max_steps) until the relative
// Richardson estimate falls below target.
FlowResult integrate(const StructurePoint& sp0, const Path& path, const Real& target = Real("1e-16"),
                     int max_steps = 1600);

// Tolerance for classifying flowed points: the integration error, inflated
// by a safety factor, or the policy tolerance if larger.
Real checkpoint_tolerance(const Real& error_estimate);

// Random walk from the origin: segments steps of length `step` in uniformly
// random directions.
Path random_short_path(std::mt19937_64& rng, int segments, double step, int steps_per_segment = 20);

StructurePoint rk4_segment(const StructurePoint& sp0, const std::array<Real, 3>& dx, int steps);

}  // namespace cs
