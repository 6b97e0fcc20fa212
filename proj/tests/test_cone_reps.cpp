#include "irqed/cone_reps.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <numbers>
#include <random>

using namespace irqed;
using namespace irqed::cone;

TEST_SUITE_BEGIN("cone-reps");

namespace {

GroupElement random_sl2(std::mt19937 &rng, double scale) {
  std::uniform_real_distribution<double> u(-scale, scale);
  GroupElement g = sl2_identity();
  for (int ax = 0; ax < 3; ++ax) {
    g = sl2_multiply(g, sl2_rotation(ax, u(rng)));
    g = sl2_multiply(g, sl2_boost(ax, u(rng)));
  }
  return g;
}

} // namespace

TEST_CASE("covering map SL(2,C) -> Lorentz") {
  SUBCASE("identity") {
    const Matrix4 L = sl2_to_lorentz(sl2_identity());
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(L.m[i][j] == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(1e-14));
  }

  SUBCASE("diag(e^{a/2}, e^{-a/2}) is the z-boost") {
    const double a = 0.8;
    GroupElement A;
    A.a << std::exp(a / 2), 0, 0, std::exp(-a / 2);
    const Matrix4 L = sl2_to_lorentz(A);
    const Matrix4 want = boost_z(a);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        CHECK(L.m[i][j] == doctest::Approx(want.m[i][j]).epsilon(1e-12));
  }

  SUBCASE("exp(i theta sigma3 / 2) rotates the xy plane") {
    // oracle: A sigma1 A^+ = cos(t) sigma1 - sin(t) sigma2,
    //         A sigma2 A^+ = sin(t) sigma1 + cos(t) sigma2
    const double t = 0.6;
    GroupElement A;
    A.a << std::exp(cplx(0, t / 2)), 0, 0, std::exp(cplx(0, -t / 2));
    const Matrix4 L = sl2_to_lorentz(A);
    CHECK(L.m[0][0] == doctest::Approx(1.0));
    CHECK(L.m[3][3] == doctest::Approx(1.0));
    CHECK(L.m[1][1] == doctest::Approx(std::cos(t)));
    CHECK(L.m[1][2] == doctest::Approx(std::sin(t)));
    CHECK(L.m[2][1] == doctest::Approx(-std::sin(t)));
    CHECK(L.m[2][2] == doctest::Approx(std::cos(t)));
  }

  SUBCASE("preserves the Minkowski form; Lambda(-A) = Lambda(A)") {
    std::mt19937 rng(4);
    for (int i = 0; i < 50; ++i) {
      GroupElement A = random_sl2(rng, 0.7);
      const Matrix4 L = sl2_to_lorentz(A);
      CHECK(lorentz_defect(L) < 1e-12);
      GroupElement minus;
      minus.a = -A.a;
      const Matrix4 Lm = sl2_to_lorentz(minus);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          CHECK(Lm.m[r][c] == doctest::Approx(L.m[r][c]).epsilon(1e-13));
    }
  }

  SUBCASE("homomorphism Lambda(A) Lambda(B) = Lambda(AB)") {
    std::mt19937 rng(6);
    for (int i = 0; i < 30; ++i) {
      const GroupElement A = random_sl2(rng, 0.6);
      const GroupElement B = random_sl2(rng, 0.6);
      const Matrix4 lhs = sl2_to_lorentz(A) * sl2_to_lorentz(B);
      const Matrix4 rhs = sl2_to_lorentz(sl2_multiply(A, B));
      double worst = 0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          worst = std::max(worst, std::abs(lhs.m[r][c] - rhs.m[r][c]));
      CHECK(worst < 1e-10);
    }
  }

  SUBCASE("non-unimodular input throws") {
    GroupElement bad;
    bad.a << 2.0, 0, 0, 1.0;
    CHECK_THROWS_AS(sl2_to_lorentz(bad), std::invalid_argument);
  }
}

TEST_CASE("action on homogeneous cone functions") {
  const SphereGrid grid(24, 48);

  SUBCASE("identity leaves functions unchanged") {
    const ConeFunction f = make_cone_function(
        cplx(-1, 1), grid, [](double th, double ph) { return sph_harmonic(2, 1, th, ph); });
    const ConeFunction g = act_homogeneous(sl2_identity(), f);
    double worst = 0;
    for (int j = 0; j < grid.n_theta(); ++j)
      for (int k = 0; k < grid.n_phi(); ++k)
        worst = std::max(worst, std::abs(f.at(j, k) - g.at(j, k)));
    CHECK(worst < 1e-13);
  }

  SUBCASE("rotations preserve the L2 norm exactly") {
    const ConeFunction f = make_cone_function(
        cplx(-1, 0.5), grid,
        [](double th, double ph) { return sph_harmonic(3, -2, th, ph) + 0.4; });
    const double n0 = l2_inner(f, f).real();
    const ConeFunction g = act_homogeneous(sl2_rotation(1, 0.9), f);
    const double n1 = l2_inner(g, g).real();
    CHECK(std::abs(n1 - n0) < 1e-10);
  }

  SUBCASE("z-boost on the constant function, closed form") {
    const double a = 1.0;
    const ConeFunction one =
        make_cone_function(cplx(-1, 0), grid, [](double, double) { return 1.0; });
    const ConeFunction g = act_homogeneous(sl2_boost(2, a), one);
    for (int j = 0; j < grid.n_theta(); ++j) {
      const double omega = std::cosh(a) - std::sinh(a) * std::cos(grid.theta(j));
      CHECK(std::abs(g.at(j, 0) - 1.0 / omega) < 1e-12);
    }
  }

  SUBCASE("principal line is unitary, real homogeneity is not") {
    const SphereGrid quad(32, 64);
    std::mt19937 rng(13);
    auto f_fn = [](double th, double ph) {
      return sph_harmonic(1, 0, th, ph) + 0.5 * sph_harmonic(2, 2, th, ph) + 0.3;
    };
    auto rand_boost = [&rng] {
      return oracle::random_bounded_boost(rng, 1.0, sl2_boost, sl2_rotation,
                                          sl2_multiply);
    };
    for (double nu : {0.0, 1.0, 2.0}) {
      const ConeFunction f = make_cone_function(cplx(-1, nu), quad, f_fn);
      const double n0 = l2_inner(f, f).real();
      for (int i = 0; i < 5; ++i) {
        const ConeFunction g = act_homogeneous(rand_boost(), f);
        CHECK(std::abs(l2_inner(g, g).real() - n0) < 1e-6 * n0);
      }
    }
    const ConeFunction h = make_cone_function(cplx(-0.5, 0), quad, f_fn);
    const double n0 = l2_inner(h, h).real();
    const ConeFunction g = act_homogeneous(sl2_boost(2, 1.0), h);
    CHECK(std::abs(l2_inner(g, g).real() / n0 - 1.0) > 1e-2);
  }

  SUBCASE("group law through the grid interpolation path") {
    // band-limited function, no analytic evaluator retained
    const SphereGrid fine(96, 192);
    ConeFunction f = make_cone_function(cplx(-1, 0), fine, [](double th, double ph) {
      return sph_harmonic(2, 1, th, ph) + 0.7 * sph_harmonic(3, -1, th, ph);
    });
    f.evaluator = nullptr;
    const GroupElement A = sl2_boost(0, 0.25);
    const GroupElement B = sl2_rotation(2, 0.35);
    const ConeFunction lhs = act_homogeneous(A, act_homogeneous(B, f));
    const ConeFunction rhs = act_homogeneous(sl2_multiply(A, B), f);
    double worst = 0;
    for (int j = 0; j < fine.n_theta(); ++j)
      for (int k = 0; k < fine.n_phi(); ++k)
        worst = std::max(worst, std::abs(lhs.at(j, k) - rhs.at(j, k)));
    CHECK(worst < 1e-5);
  }
}

TEST_CASE("L2 inner product on restrictions") {
  const SphereGrid grid(16, 32);
  const ConeFunction y10 = make_cone_function(
      cplx(-1, 0), grid, [](double th, double ph) { return sph_harmonic(1, 0, th, ph); });
  const ConeFunction y20 = make_cone_function(
      cplx(-1, 0), grid, [](double th, double ph) { return sph_harmonic(2, 0, th, ph); });
  CHECK(l2_inner(y10, y10).real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(l2_inner(y10, y20)) < 1e-12);
  CHECK(l2_inner(y20, y20).real() >= 0.0);

  const SphereGrid other(12, 24);
  const ConeFunction g = make_cone_function(cplx(-1, 0), other,
                                            [](double, double) { return 1.0; });
  CHECK_THROWS_AS(l2_inner(y10, g), std::invalid_argument);
}

TEST_CASE("Casimir labels") {
  SUBCASE("scalar point chi = -1 gives (0, 0)") {
    const RepLabels lab = casimir_labels(cplx(-1, 0), 3);
    CHECK(std::abs(lab.l0) < 1e-3);
    CHECK(std::abs(lab.l1) < 1e-3);
    CHECK(std::abs(lab.casimir2) < 1e-6);
  }

  SUBCASE("principal series chi = -1 + 2i gives (0, 2i)") {
    const RepLabels lab = casimir_labels(cplx(-1, 2), 3);
    CHECK(std::abs(lab.l0) < 1e-3);
    CHECK(std::abs(lab.l1 - cplx(0, 2)) < 1e-3);
    CHECK(std::abs(lab.casimir2) < 1e-5);
  }

  SUBCASE("real homogeneity chi = -0.5 gives (0, 1/2)") {
    const RepLabels lab = casimir_labels(cplx(-0.5, 0), 3);
    CHECK(std::abs(lab.l0) < 1e-3);
    CHECK(std::abs(lab.l1 - cplx(0.5, 0)) < 1e-3);
  }

  SUBCASE("labels stable under finite-difference refinement") {
    const RepLabels a = casimir_labels(cplx(-1, 1), 2, 2e-3);
    const RepLabels b = casimir_labels(cplx(-1, 1), 2, 1e-3);
    CHECK(std::abs(a.l1 - cplx(0, 1)) < 1e-3);
    CHECK(std::abs(b.l1 - cplx(0, 1)) < 1e-3);
    CHECK(std::abs(b.l1 - cplx(0, 1)) <= std::abs(a.l1 - cplx(0, 1)) + 1e-9);
  }
}

TEST_CASE("generalized massive states") {
  SUBCASE("rest frame against a unit null ray") {
    const double m = 2.5;
    const cplx v = massive_state_eval({m, 0, 0, 0}, {1, 0, 0, 1}, 0.0);
    CHECK(v.real() == doctest::Approx(1.0 / m));
    CHECK(v.imag() == doctest::Approx(0.0));
  }

  SUBCASE("homogeneity in k with unimodular phase") {
    const double nu = 1.3, lam = 3.7;
    const FourVector p{2.0, 0.3, 0.1, 0.5};
    const FourVector k{1.0, 0.6, 0.0, 0.8};
    const cplx a = massive_state_eval(p, k, nu);
    const cplx b = massive_state_eval(p, lam * k, nu);
    const cplx scale = std::exp(cplx(-1.0, nu) * std::log(lam));
    CHECK(std::abs(b - scale * a) < 1e-14);
    CHECK(std::abs(scale) == doctest::Approx(1.0 / lam));
  }

  SUBCASE("simultaneous boosts leave the value unchanged") {
    std::mt19937 rng(17);
    const FourVector p{2.0, 0.3, 0.1, 0.5};
    const FourVector k{1.0, 0.6, 0.0, 0.8};
    const cplx v0 = massive_state_eval(p, k, 0.8);
    for (int i = 0; i < 40; ++i) {
      const Matrix4 L = oracle::random_boost(rng, 1.2);
      const cplx v = massive_state_eval(L * p, L * k, 0.8);
      CHECK(std::abs(v - v0) < 1e-10);
    }
  }

  SUBCASE("domain errors") {
    CHECK_THROWS_AS(massive_state_eval({1, 0, 0, 0}, {1, 0, 0, 0.5}, 0.0),
                    std::invalid_argument); // k not null
    CHECK_THROWS_AS(massive_state_eval({1, 0, 0, 2}, {1, 0, 0, 1}, 0.0),
                    std::invalid_argument); // p spacelike
    CHECK_THROWS_AS(massive_state_eval({1, 0, 0, 0}, {-1, 0, 0, -1}, 0.0),
                    std::domain_error); // p.k < 0
  }
}

TEST_SUITE_END();
