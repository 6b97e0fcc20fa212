#pragma once

// Test-only oracles, kept independent of the library code paths they check.

#include "irqed/four_vector.hpp"
#include "irqed/sphere.hpp"

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

//! Classical RK4 with fixed substeps for a 2nd-order linear ODE
//!   f'' = c(psi) f' + k(psi) f,
//! used to re-integrate radial modes independently of the production solver.
struct Rk4SecondOrder {
  std::function<double(double)> c, k;

  std::array<double, 2> step(double psi, std::array<double, 2> y, double h,
                             int substeps) const {
    const double hh = h / substeps;
    for (int s = 0; s < substeps; ++s) {
      auto rhs = [&](double t, std::array<double, 2> v) {
        return std::array<double, 2>{v[1], c(t) * v[1] + k(t) * v[0]};
      };
      const auto k1 = rhs(psi, y);
      const auto k2 = rhs(psi + hh / 2, {y[0] + hh / 2 * k1[0], y[1] + hh / 2 * k1[1]});
      const auto k3 = rhs(psi + hh / 2, {y[0] + hh / 2 * k2[0], y[1] + hh / 2 * k2[1]});
      const auto k4 = rhs(psi + hh, {y[0] + hh * k3[0], y[1] + hh * k3[1]});
      y = {y[0] + hh / 6 * (k1[0] + 2 * k2[0] + 2 * k3[0] + k4[0]),
           y[1] + hh / 6 * (k1[1] + 2 * k2[1] + 2 * k3[1] + k4[1])};
      psi += hh;
    }
    return y;
  }
};

//! Random SL(2,C)-free Lorentz boost with rapidity <= max_rapidity.
inline irqed::Matrix4 random_boost(std::mt19937 &rng, double max_rapidity) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  double nx = 0, ny = 0, nz = 0, nn = 0;
  do {
    nx = u(rng);
    ny = u(rng);
    nz = u(rng);
    nn = std::sqrt(nx * nx + ny * ny + nz * nz);
  } while (nn < 1e-3 || nn > 1.0);
  std::uniform_real_distribution<double> a(-max_rapidity, max_rapidity);
  return irqed::boost_matrix(a(rng), nx / nn, ny / nn, nz / nn);
}

//! Random SL(2,C) element of the form R1 * B_z(alpha) * R2 with
//! |alpha| <= max_rapidity: arbitrary boost axis, bounded total rapidity.
template <typename Boost, typename Rot, typename Mul>
auto random_bounded_boost(std::mt19937 &rng, double max_rapidity, Boost boost,
                          Rot rot, Mul mul) {
  std::uniform_real_distribution<double> angle(0.0, 6.28318530717958648);
  std::uniform_real_distribution<double> rap(-max_rapidity, max_rapidity);
  auto r1 = mul(rot(2, angle(rng)), rot(1, angle(rng)));
  auto r2 = mul(rot(1, angle(rng)), rot(2, angle(rng)));
  return mul(r1, mul(boost(2, rap(rng)), r2));
}

//! Brute-force LP oracle for the sector distance: maximize f(hi) - f(lo)
//! under per-step constraints |df_k| <= bound_k by enumerating the sign
//! pattern of the increments (each increment saturates at +-bound or 0).
inline double lattice_distance_bruteforce(const std::vector<double> &bounds) {
  const int k = int(bounds.size());
  double best = 0.0;
  for (long mask = 0; mask < (1L << (2 * k)); ++mask) {
    double total = 0.0;
    long m = mask;
    for (int i = 0; i < k; ++i) {
      const int choice = int(m % 4); // 0: +bound, 1: -bound, 2: 0, 3: +bound/2
      m /= 4;
      switch (choice) {
      case 0: total += bounds[i]; break;
      case 1: total -= bounds[i]; break;
      case 2: break;
      case 3: total += bounds[i] / 2; break;
      }
    }
    best = std::max(best, total);
  }
  return best;
}

} // namespace oracle
