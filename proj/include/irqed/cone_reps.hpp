#pragma once

#include "irqed/four_vector.hpp"
#include "irqed/sphere.hpp"

#include <Eigen/Dense>

#include <functional>

namespace irqed::cone {

//! Element of SL(2, C): 2x2 complex matrix with unit determinant.
struct GroupElement {
  Eigen::Matrix2cd a;
};

GroupElement sl2_identity();
//! Boost of rapidity alpha along coordinate axis (0 = x, 1 = y, 2 = z).
GroupElement sl2_boost(int axis, double alpha);
//! Rotation by angle about coordinate axis: exp(-i angle sigma_axis / 2).
GroupElement sl2_rotation(int axis, double angle);
GroupElement sl2_multiply(const GroupElement &A, const GroupElement &B);
GroupElement sl2_inverse(const GroupElement &A);

//! Covering map via X = x^mu sigma_mu -> A X A^dagger; Lambda(-A) = Lambda(A),
//! and sl2_boost maps to boost_matrix with the same rapidity and axis.
Matrix4 sl2_to_lorentz(const GroupElement &A);

//! Function of homogeneity chi on the forward light cone, stored by its
//! restriction to the unit-ray sphere: value at k = omega (1, n) equals
//! omega^chi * value(n). Carries an optional analytic evaluator; when
//! present, transforms compose evaluators exactly and the grid only serves
//! quadrature (spec'd tolerances assume this path for unitarity checks).
struct ConeFunction {
  cplx chi{-1.0, 0.0};
  const SphereGrid *grid = nullptr;
  std::vector<cplx> values;
  std::function<cplx(double theta, double phi)> evaluator;

  cplx at(int j, int k) const { return values[grid->index(j, k)]; }
};

ConeFunction make_cone_function(cplx chi, const SphereGrid &grid,
                                const std::function<cplx(double, double)> &f);

//! Natural action on homogeneity-chi cone functions:
//!   (T_A f)(n) = omega'^chi f(n'),  Lambda(A)^{-1} (1, n) = omega' (1, n').
//! Grid-only inputs are interpolated bicubically in (theta, phi) with
//! across-pole reflection; n_phi must be even for the pole chart.
ConeFunction act_homogeneous(const GroupElement &A, const ConeFunction &f);

//! L2(S^2) pairing of the unit-sphere restrictions by grid quadrature.
cplx l2_inner(const ConeFunction &f, const ConeFunction &g);

//! (l0, l1) labels solved from the Casimirs C1 = J^2 - K^2 = l0^2 + l1^2 - 1
//! and C2 = J.K = -i l0 l1 (sign conventions fixed so that the principal
//! line chi = -1 + i nu yields (0, i nu)).
struct RepLabels {
  double l0 = 0.0;
  cplx l1{0.0, 0.0};
  cplx casimir1{0.0, 0.0};
  cplx casimir2{0.0, 0.0};
};

//! Generators built by central finite differences of one-parameter subgroups
//! acting through act_homogeneous on the Y_lm basis truncated at l_max.
RepLabels casimir_labels(cplx chi, int l_max, double fd_step = 1e-3);

//! Generalized massive single-particle state in momentum space,
//!   (p.k)^(-1 + i nu), principal branch; p on the positive mass shell,
//!   k forward null.
cplx massive_state_eval(const FourVector &p, const FourVector &k, double nu);

} // namespace irqed::cone
