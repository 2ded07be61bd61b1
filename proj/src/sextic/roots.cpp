#include <algorithm>
#include <numeric>

#include "sextic/sextic.hpp"

namespace cs {

namespace {

std::vector<Complex> aberth(const Poly& monic) {
  const int n = static_cast<int>(monic.size()) - 1;
  Poly dp = poly_deriv(monic);

  // Initial guesses on a circle sized by the Fujiwara bound.
  Real rad(0);
  for (int i = 0; i < n; ++i) {
    Real v = pow(Real(abs(monic[i])), Real(1) / Real(n - i));
    rad = std::max(rad, v);
  }
  rad = 2 * rad + Real(1) / 8;
  std::vector<Complex> z(n);
  const Real two_pi = 2 * boost::math::constants::pi<Real>();
  for (int k = 0; k < n; ++k) {
    Real ang = two_pi * k / n + Real("0.4");
    z[k] = Complex(rad * cos(ang), rad * sin(ang));
  }

  const Real eps = pow(Real(10), -static_cast<int>(precision()) + 4);
  Real best = -1;
  int stalled = 0;
  for (int iter = 0; iter < 4000; ++iter) {
    Real step(0);
    for (int k = 0; k < n; ++k) {
      Complex pv = poly_eval(monic, z[k]);
      if (pv == Complex(0)) continue;
      Complex ratio = pv / poly_eval(dp, z[k]);
      Complex s(0);
      for (int j = 0; j < n; ++j)
        if (j != k) s += Complex(1) / (z[k] - z[j]);
      Complex w = ratio / (Complex(1) - ratio * s);
      z[k] -= w;
      step = std::max(step, Real(abs(w) / (1 + abs(z[k]))));
    }
    if (step <= eps) break;
    // Clusters of multiple roots converge linearly and then stall at the
    // noise floor; stop once progress has stopped for a while.
    if (best < 0 || step < best / 2) {
      best = step;
      stalled = 0;
    } else if (++stalled > 60) {
      break;
    }
  }
  return z;
}

// Largest chordal distance within the cluster.
Real diameter(const std::vector<Complex>& z, const std::vector<int>& idx) {
  Real d(0);
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j) {
      const Complex &u = z[idx[i]], &v = z[idx[j]];
      d = std::max(d, Real(abs(u - v) / sqrt((1 + norm(u)) * (1 + norm(v)))));
    }
  return d;
}

template <class F>
void for_each_subset(int n, int k, F&& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    f(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

RootStructure roots_with_multiplicity(const Sextic& p) {
  RootStructure rs;
  Real scale = p.max_abs();
  if (scale == 0) {
    rs.zero = true;
    return rs;
  }

  const Real& tol = policy().tol_rel;
  int n = 6;
  while (n > 0 && abs(p.coeffs[n]) <= tol * scale) --n;

  std::vector<Complex> z;
  if (n > 0) {
    Poly monic(n + 1);
    for (int i = 0; i <= n; ++i) monic[i] = p.coeffs[i] / p.coeffs[n];
    z = aberth(monic);
  }

  // A k-fold root is only resolved to about eps^(1/k) in the chordal metric,
  // so the merge radius depends on the cluster size. A relative perturbation
  // at the tolerance splits it by about tol^(1/k).
  const Real eps = pow(Real(10), -static_cast<int>(precision()) + 12);
  std::vector<bool> used(z.size(), false);
  std::vector<RootStructure::Root> found;
  for (int k = std::min<int>(6, static_cast<int>(z.size())); k >= 2; --k) {
    bool progress = true;
    while (progress) {
      progress = false;
      std::vector<int> free;
      for (size_t i = 0; i < z.size(); ++i)
        if (!used[i]) free.push_back(static_cast<int>(i));
      if (static_cast<int>(free.size()) < k) break;
      Real best_d = -1;
      std::vector<int> best;
      for_each_subset(static_cast<int>(free.size()), k, [&](const std::vector<int>& sub) {
        std::vector<int> idx;
        for (int s : sub) idx.push_back(free[s]);
        Real radius = std::max(Real(100 * pow(eps, Real(1) / Real(k))), Real(pow(tol, Real(1) / Real(k))));
        Real d = diameter(z, idx);
        if (d <= radius && (best_d < 0 || d < best_d)) {
          best_d = d;
          best = idx;
        }
      });
      if (!best.empty()) {
        Complex mean(0);
        for (int i : best) {
          mean += z[i];
          used[i] = true;
        }
        found.push_back({ProjPoint::at(mean / Complex(k)), k});
        progress = true;
      }
    }
  }
  for (size_t i = 0; i < z.size(); ++i)
    if (!used[i]) found.push_back({ProjPoint::at(z[i]), 1});
  if (n < 6) found.push_back({ProjPoint::inf(), 6 - n});

  std::stable_sort(found.begin(), found.end(),
                   [](const auto& a, const auto& b) { return a.multiplicity > b.multiplicity; });
  rs.roots = found;
  for (const auto& r : found) rs.partition.push_back(r.multiplicity);
  return rs;
}

}  // namespace cs
