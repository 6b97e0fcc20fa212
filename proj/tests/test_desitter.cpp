#include "irqed/desitter.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace irqed;
using namespace irqed::desitter;

TEST_SUITE_BEGIN("desitter");

TEST_CASE("embedding hits the hyperboloid") {
  SUBCASE("equator point") {
    const FourVector x = embed({0.0, std::numbers::pi / 2, 0.0});
    CHECK(x.t == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(x.x == doctest::Approx(1.0));
    CHECK(std::abs(x.y) < 1e-15);
    CHECK(std::abs(x.z) < 1e-15);
  }
  SUBCASE("sinh(arcsinh 1) = 1") {
    const FourVector x = embed({std::log(1.0 + std::numbers::sqrt2), 0.3, 1.0});
    CHECK(x.t == doctest::Approx(1.0).epsilon(1e-14));
  }
  SUBCASE("x.x = -1 for 10^4 random points") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> upsi(-3.0, 3.0), uth(0.0, std::numbers::pi),
        uph(0.0, 2 * std::numbers::pi);
    double worst = 0;
    for (int i = 0; i < 10000; ++i) {
      const FourVector x = embed({upsi(rng), uth(rng), uph(rng)});
      worst = std::max(worst, std::abs(mdot(x, x) + 1.0));
    }
    CHECK(worst < 1e-12);
  }
}

namespace {

Field3D sample_field(const PsiGrid &pg, int nt, int nf,
                     const std::function<cplx(double, double, double)> &f) {
  Field3D field;
  field.psi = pg;
  field.n_theta = nt;
  field.n_phi = nf;
  field.v.resize(size_t(pg.n) * nt * nf);
  for (int i = 0; i < pg.n; ++i)
    for (int j = 0; j < nt; ++j)
      for (int k = 0; k < nf; ++k)
        field.at(i, j, k) = f(pg.node(i), field.theta(j), field.phi(k));
  return field;
}

double max_interior_residual(const Field3D &r) {
  double worst = 0;
  for (int i = 1; i + 1 < r.psi.n; ++i)
    for (int j = 0; j < r.n_theta; ++j)
      for (int k = 0; k < r.n_phi; ++k)
        worst = std::max(worst, std::abs(r.at(i, j, k)));
  return worst;
}

} // namespace

TEST_CASE("finite-difference wave operator") {
  SUBCASE("constants are annihilated exactly") {
    const PsiGrid pg{-2.0, 2.0, 41};
    auto field = sample_field(pg, 8, 16, [](double, double, double) { return 1.0; });
    CHECK(max_interior_residual(dalembert_ds3(field)) < 1e-13);
  }

  SUBCASE("tanh psi is a solution; O(h^2) convergence") {
    double prev = 0;
    std::vector<double> residuals;
    for (int n : {51, 101, 201}) {
      const PsiGrid pg{-2.0, 2.0, n};
      auto field =
          sample_field(pg, 8, 16, [](double p, double, double) { return std::tanh(p); });
      residuals.push_back(max_interior_residual(dalembert_ds3(field)));
      prev = residuals.back();
    }
    (void)prev;
    const double order1 = std::log2(residuals[0] / residuals[1]);
    const double order2 = std::log2(residuals[1] / residuals[2]);
    CHECK(order1 == doctest::Approx(2.0).epsilon(0.15));
    CHECK(order2 == doctest::Approx(2.0).epsilon(0.15));
  }

  SUBCASE("cos(theta)/cosh^2(psi) solves the l = 1 equation at O(h^2)") {
    std::vector<double> residuals;
    for (int k : {1, 2, 4}) {
      const PsiGrid pg{-2.0, 2.0, 40 * k + 1};
      auto field = sample_field(pg, 16 * k, 32 * k, [](double p, double th, double) {
        return std::cos(th) / (std::cosh(p) * std::cosh(p));
      });
      residuals.push_back(max_interior_residual(dalembert_ds3(field)));
    }
    const double order1 = std::log2(residuals[0] / residuals[1]);
    const double order2 = std::log2(residuals[1] / residuals[2]);
    CHECK(order1 == doctest::Approx(2.0).epsilon(0.2));
    CHECK(order2 == doctest::Approx(2.0).epsilon(0.2));
  }

  SUBCASE("grid too coarse") {
    const PsiGrid pg{-1.0, 1.0, 2};
    Field3D f;
    f.psi = pg;
    f.n_theta = 4;
    f.n_phi = 8;
    f.v.assign(size_t(pg.n) * 4 * 8, 0.0);
    CHECK_THROWS_AS(dalembert_ds3(f), std::invalid_argument);
  }
}

TEST_CASE("radial modes") {
  const PsiGrid pg; // |psi| <= 3, 601 nodes

  SUBCASE("l = 0 is rejected") {
    CHECK_THROWS_AS(radial_mode(0, pg), std::invalid_argument);
  }

  SUBCASE("l = 1 real span contains 1/cosh^2") {
    const RadialMode m = radial_mode(1, pg);
    // real part of f is the even fundamental solution scaled by 1/sqrt(2)
    double worst = 0;
    for (int i = 0; i < pg.n; ++i) {
      const double sech2 = 1.0 / (std::cosh(pg.node(i)) * std::cosh(pg.node(i)));
      worst = std::max(worst,
                       std::abs(std::numbers::sqrt2 * m.f[i].real() - sech2));
    }
    CHECK(worst < 1e-8);
  }

  SUBCASE("KG norm is +1 and f(0) is real positive") {
    for (int l = 1; l <= 4; ++l) {
      const RadialMode m = radial_mode(l, pg);
      CHECK(m.kg_norm == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(m.eval(0.0).real() > 0.0);
      CHECK(std::abs(m.eval(0.0).imag()) < 1e-12);
    }
  }

  SUBCASE("ODE defect against an independent RK4 integration") {
    // re-integrate across each grid cell from the stored state and compare
    for (int l : {1, 2, 3, 5}) {
      const RadialMode m = radial_mode(l, pg);
      const oracle::Rk4SecondOrder ode{
          [](double p) { return -2.0 * std::tanh(p); },
          [l](double p) { return -double(l) * (l + 1) / (std::cosh(p) * std::cosh(p)); }};
      double worst = 0;
      for (int i = 0; i + 1 < pg.n; i += 7) {
        for (int part = 0; part < 2; ++part) {
          auto pick = [&](cplx z) { return part == 0 ? z.real() : z.imag(); };
          std::array<double, 2> y = {pick(m.f[i]), pick(m.fp[i])};
          y = ode.step(pg.node(i), y, pg.h(), 20);
          worst = std::max(worst, std::abs(y[0] - pick(m.f[i + 1])) / pg.h());
          worst = std::max(worst, std::abs(y[1] - pick(m.fp[i + 1])) / pg.h());
        }
      }
      CHECK(worst < 1e-8);
    }
  }
}

TEST_CASE("Klein-Gordon inner product") {
  const PsiGrid pg;
  const ModeSet modes(2, pg);

  SUBCASE("normalization and conjugate sign") {
    const ModeFunction f = modes.mode(1, 0);
    const cplx n = kg_inner(f, f, 0.0);
    CHECK(n.real() == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(std::abs(n.imag()) < 1e-10);

    // conjugate mode has KG norm -1: (fbar, fbar) = -(f, f) by the sesquilinear
    // structure; realize fbar by negating the odd part
    RadialMode conj_rad = f.radial;
    for (auto &z : conj_rad.f)
      z = std::conj(z);
    for (auto &z : conj_rad.fp)
      z = std::conj(z);
    const ModeFunction fb{conj_rad, 0};
    CHECK(kg_inner(fb, fb, 0.0).real() == doctest::Approx(-1.0).epsilon(1e-8));
  }

  SUBCASE("orthonormality across (l, m)") {
    for (int l1 = 1; l1 <= 2; ++l1)
      for (int m1 = -l1; m1 <= l1; ++m1)
        for (int l2 = 1; l2 <= 2; ++l2)
          for (int m2 = -l2; m2 <= l2; ++m2) {
            const cplx v = kg_inner(modes.mode(l1, m1), modes.mode(l2, m2), 0.4);
            const double want = (l1 == l2 && m1 == m2) ? 1.0 : 0.0;
            CHECK(std::abs(v - want) < 1e-6);
          }
  }

  SUBCASE("conservation across slices") {
    const ModeFunction f = modes.mode(2, 1);
    const ModeFunction g = modes.mode(2, 1);
    const cplx a = kg_inner(f, g, 0.0);
    const cplx b = kg_inner(f, g, 0.7);
    CHECK(std::abs(a - b) < 1e-6);
  }

  SUBCASE("mismatched grids throw") {
    const PsiGrid other{-3.0, 3.0, 301};
    const ModeSet m2(1, other);
    CHECK_THROWS_AS(kg_inner(modes.mode(1, 0), m2.mode(1, 0), 0.0),
                    std::invalid_argument);
  }
}

TEST_CASE("mode_function") {
  const PsiGrid pg;
  const ModeSet modes(2, pg);

  SUBCASE("Y_10 node at the equator") {
    CHECK(std::abs(modes.value(1, 0, {0.5, std::numbers::pi / 2, 1.0})) < 1e-14);
  }

  SUBCASE("angular normalization by quadrature") {
    const SphereGrid grid(8, 16);
    for (int l = 1; l <= 2; ++l)
      for (int m = -l; m <= l; ++m) {
        double acc = 0;
        for (int j = 0; j < grid.n_theta(); ++j)
          for (int k = 0; k < grid.n_phi(); ++k)
            acc += grid.weight(j, k) *
                   std::norm(sph_harmonic(l, m, grid.theta(j), grid.phi(k)));
        CHECK(acc == doctest::Approx(1.0).epsilon(1e-10));
      }
  }

  SUBCASE("invalid (l, m)") {
    CHECK_THROWS_AS(modes.mode(1, 2), std::invalid_argument);
    CHECK_THROWS_AS(modes.mode(3, 0), std::invalid_argument);
  }

  SUBCASE("wave residual of mode (2,1) converges at O(h^2)") {
    std::vector<double> residuals;
    for (int n : {151, 301, 601}) {
      const PsiGrid fine{-3.0, 3.0, n};
      const ModeSet ms(2, fine);
      const SphereGrid grid(8, 16);
      SphereField field;
      field.psi = fine;
      field.grid = &grid;
      field.v.resize(size_t(fine.n) * grid.size());
      const auto mode = ms.mode(2, 1);
      for (int i = 0; i < fine.n; ++i)
        for (int j = 0; j < grid.n_theta(); ++j)
          for (int k = 0; k < grid.n_phi(); ++k)
            field.v[field.index(i, grid.index(j, k))] =
                mode.value({fine.node(i), grid.theta(j), grid.phi(k)});
      const SphereField res = dalembert_ds3_spectral(field, 4);
      double worst = 0;
      for (int i = 1; i + 1 < fine.n; ++i)
        for (int s = 0; s < grid.size(); ++s)
          worst = std::max(worst, std::abs(res.v[res.index(i, s)]));
      residuals.push_back(worst);
    }
    CHECK(std::log2(residuals[0] / residuals[1]) == doctest::Approx(2.0).epsilon(0.15));
    CHECK(std::log2(residuals[1] / residuals[2]) == doctest::Approx(2.0).epsilon(0.15));
  }
}

TEST_SUITE_END();
