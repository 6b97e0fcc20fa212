#pragma once

#include "irqed/four_vector.hpp"
#include "irqed/sphere.hpp"

#include <map>
#include <vector>

namespace irqed::desitter {

//! Point on the unit de Sitter 3-hyperboloid x.x = -1 in coordinates
//! (psi, theta, phi); the induced metric is dpsi^2 - cosh^2(psi) dOmega^2.
struct HyperboloidPoint {
  double psi = 0.0;
  double theta = 0.0;
  double phi = 0.0;
};

//! Embedding x0 = sinh(psi), xvec = cosh(psi) n(theta, phi).
FourVector embed(const HyperboloidPoint &p);

//! Uniform psi grid on [psi_min, psi_max].
struct PsiGrid {
  double psi_min = -3.0;
  double psi_max = 3.0;
  int n = 601;

  double h() const { return (psi_max - psi_min) / (n - 1); }
  double node(int i) const { return psi_min + i * h(); }
  std::vector<double> nodes() const;
  bool operator==(const PsiGrid &o) const {
    return psi_min == o.psi_min && psi_max == o.psi_max && n == o.n;
  }
};

//! Radial factor f_l(psi) of a wave-equation mode f_l(psi) Y_lm, solving
//!   f'' + 2 tanh(psi) f' + l(l+1) f / cosh^2(psi) = 0,
//! in the positive-frequency normalization: Klein-Gordon norm +1 and
//! f(0) real and positive. Samples of f and f' are stored on the grid.
struct RadialMode {
  int l = 0;
  PsiGrid grid;
  std::vector<cplx> f;
  std::vector<cplx> fp;
  double kg_norm = 0.0;

  //! Cubic-Hermite evaluation anywhere inside the grid range.
  cplx eval(double psi) const;
  cplx eval_deriv(double psi) const;
};

//! Integrates the radial ODE for l >= 1. The l = 0 sector (span{1, tanh psi})
//! belongs to the charge/phase decomposition and is rejected here.
RadialMode radial_mode(int l, const PsiGrid &grid);

//! Full mode with angular factor attached.
struct ModeFunction {
  RadialMode radial;
  int m = 0;

  int l() const { return radial.l; }
  cplx value(const HyperboloidPoint &p) const;
};

//! All modes with 1 <= l <= l_max, |m| <= l, sharing one radial solve per l.
class ModeSet {
public:
  ModeSet(int l_max, const PsiGrid &grid);

  int l_max() const { return l_max_; }
  const PsiGrid &grid() const { return grid_; }
  const RadialMode &radial(int l) const;
  ModeFunction mode(int l, int m) const;
  cplx value(int l, int m, const HyperboloidPoint &p) const;

private:
  int l_max_;
  PsiGrid grid_;
  std::vector<RadialMode> radial_; // index l-1
};

//! Klein-Gordon inner product of two modes over the Cauchy slice psi = const:
//!   (f, g) = i * Int cosh^2(psi) dOmega ( conj(f) d_psi g - g d_psi conj(f) ).
//! Conserved in psi for wave-equation solutions.
cplx kg_inner(const ModeFunction &f, const ModeFunction &g, double psi);

//! Field tabulated on a psi grid x uniform angular grid. Theta nodes are
//! cell-centered, theta_j = (j + 1/2) pi / n_theta, so no node sits on a pole.
struct Field3D {
  PsiGrid psi;
  int n_theta = 0;
  int n_phi = 0;
  std::vector<cplx> v; // psi-major, then theta, then phi

  double theta(int j) const;
  double phi(int k) const;
  int index(int i, int j, int k) const { return (i * n_theta + j) * n_phi + k; }
  cplx &at(int i, int j, int k) { return v[index(i, j, k)]; }
  const cplx &at(int i, int j, int k) const { return v[index(i, j, k)]; }
};

//! Second-order finite-difference d'Alembert operator on the hyperboloid,
//!   (1/cosh^2) d_psi(cosh^2 d_psi f) - (1/cosh^2) Lap_S2 f,
//! with conservative stencils in all directions and zero-flux pole closure.
//! Rows at the two psi boundaries are left zero; only interior rows are
//! meaningful. Throws if any axis has fewer than 3 nodes.
Field3D dalembert_ds3(const Field3D &field);

//! Field tabulated on psi grid x quadrature sphere grid.
struct SphereField {
  PsiGrid psi;
  const SphereGrid *grid = nullptr;
  std::vector<cplx> v; // psi-major

  int index(int i, int node) const { return i * grid->size() + node; }
};

//! Same wave operator with the angular Laplacian applied spectrally
//! (spherical-harmonic transform, exact on band-limited data up to l_max);
//! the psi part remains the second-order finite difference. Used to certify
//! wave-equation residuals of individual modes without angular grid error.
SphereField dalembert_ds3_spectral(const SphereField &field, int l_max);

} // namespace irqed::desitter
