#include "irqed/cone_reps.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irqed::cone {

namespace {

using Eigen::Matrix2cd;

Matrix2cd pauli(int axis) {
  Matrix2cd s;
  switch (axis) {
  case 0: s << 0, 1, 1, 0; break;
  case 1: s << 0, cplx(0, -1), cplx(0, 1), 0; break;
  case 2: s << 1, 0, 0, -1; break;
  default: throw std::invalid_argument("pauli: axis must be 0, 1 or 2");
  }
  return s;
}

void check_unimodular(const GroupElement &A) {
  if (std::abs(A.a.determinant() - cplx(1.0)) > 1e-12)
    throw std::invalid_argument("GroupElement: determinant differs from 1");
}

} // namespace

GroupElement sl2_identity() { return {Matrix2cd::Identity()}; }

GroupElement sl2_boost(int axis, double alpha) {
  const Matrix2cd s = pauli(axis);
  return {std::cosh(alpha / 2) * Matrix2cd::Identity() + std::sinh(alpha / 2) * s};
}

GroupElement sl2_rotation(int axis, double angle) {
  const Matrix2cd s = pauli(axis);
  return {std::cos(angle / 2) * Matrix2cd::Identity() -
          cplx(0, 1) * std::sin(angle / 2) * s};
}

GroupElement sl2_multiply(const GroupElement &A, const GroupElement &B) {
  return {A.a * B.a};
}

GroupElement sl2_inverse(const GroupElement &A) {
  Matrix2cd inv;
  inv << A.a(1, 1), -A.a(0, 1), -A.a(1, 0), A.a(0, 0);
  return {inv};
}

Matrix4 sl2_to_lorentz(const GroupElement &A) {
  check_unimodular(A);
  Matrix2cd sigma[4] = {Matrix2cd::Identity(), pauli(0), pauli(1), pauli(2)};
  Matrix4 L;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) {
      const cplx tr = (sigma[mu] * A.a * sigma[nu] * A.a.adjoint()).trace();
      L.m[mu][nu] = 0.5 * tr.real();
    }
  return L;
}

ConeFunction make_cone_function(cplx chi, const SphereGrid &grid,
                                const std::function<cplx(double, double)> &f) {
  ConeFunction out;
  out.chi = chi;
  out.grid = &grid;
  out.evaluator = f;
  out.values.resize(grid.size());
  for (int j = 0; j < grid.n_theta(); ++j)
    for (int k = 0; k < grid.n_phi(); ++k)
      out.values[grid.index(j, k)] = f(grid.theta(j), grid.phi(k));
  return out;
}

namespace {

// Tensor-product cubic Lagrange interpolation on the quadrature grid with
// across-pole reflection (theta, phi) -> (-theta, phi + pi).
class GridInterpolator {
public:
  explicit GridInterpolator(const ConeFunction &f) : f_(f) {
    if (f.grid->n_phi() % 2 != 0)
      throw std::invalid_argument("act_homogeneous: n_phi must be even for pole chart");
  }

  cplx operator()(double theta, double phi) const {
    const auto &g = *f_.grid;
    const int nt = g.n_theta(), nf = g.n_phi();

    // bracket theta among the nodes; stencil may extend past the poles
    int j0 = 0;
    while (j0 < nt && g.theta(j0) < theta)
      ++j0;
    j0 -= 2; // first of 4 stencil rows

    double tnodes[4];
    cplx fvals[4][4];

    const double dphi = 2.0 * std::numbers::pi / nf;
    int k0 = int(std::floor(phi / dphi)) - 1;

    for (int a = 0; a < 4; ++a) {
      const int j = j0 + a;
      int jr = j;
      int kshift = 0;
      double tcoord;
      if (j < 0) {
        jr = -1 - j;
        kshift = nf / 2;
        tcoord = -g.theta(jr);
      } else if (j >= nt) {
        jr = 2 * nt - 1 - j;
        kshift = nf / 2;
        tcoord = 2.0 * std::numbers::pi - g.theta(jr);
      } else {
        tcoord = g.theta(jr);
      }
      tnodes[a] = tcoord;
      for (int b = 0; b < 4; ++b) {
        const int k = ((k0 + b + kshift) % nf + nf) % nf;
        fvals[a][b] = f_.at(jr, k);
      }
    }

    // Lagrange weights in phi (uniform nodes k0..k0+3)
    double lw[4];
    {
      const double s = phi / dphi - k0;
      lw[0] = -(s - 1) * (s - 2) * (s - 3) / 6.0;
      lw[1] = s * (s - 2) * (s - 3) / 2.0;
      lw[2] = -s * (s - 1) * (s - 3) / 2.0;
      lw[3] = s * (s - 1) * (s - 2) / 6.0;
    }
    cplx col[4];
    for (int a = 0; a < 4; ++a)
      col[a] = lw[0] * fvals[a][0] + lw[1] * fvals[a][1] + lw[2] * fvals[a][2] +
               lw[3] * fvals[a][3];

    // Lagrange in theta over non-uniform nodes
    cplx acc = 0;
    for (int a = 0; a < 4; ++a) {
      double w = 1.0;
      for (int b = 0; b < 4; ++b)
        if (b != a)
          w *= (theta - tnodes[b]) / (tnodes[a] - tnodes[b]);
      acc += w * col[a];
    }
    return acc;
  }

private:
  const ConeFunction &f_;
};

} // namespace

ConeFunction act_homogeneous(const GroupElement &A, const ConeFunction &f) {
  check_unimodular(A);
  if (!f.grid)
    throw std::invalid_argument("act_homogeneous: missing grid");

  const Matrix4 Linv = sl2_to_lorentz(sl2_inverse(A));
  const cplx chi = f.chi;

  std::function<cplx(double, double)> source;
  if (f.evaluator)
    source = f.evaluator;
  else
    source = GridInterpolator(f);

  auto transformed = [Linv, chi, source](double theta, double phi) {
    const double st = std::sin(theta);
    const FourVector k{1.0, st * std::cos(phi), st * std::sin(phi), std::cos(theta)};
    const FourVector kp = Linv * k;
    const double omega = kp.t; // forward cone is preserved, omega > 0
    const double thp = std::acos(std::clamp(kp.z / omega, -1.0, 1.0));
    double php = std::atan2(kp.y, kp.x);
    if (php < 0)
      php += 2.0 * std::numbers::pi;
    const cplx scale = std::exp(chi * std::log(omega));
    return scale * source(thp, php);
  };

  ConeFunction out = make_cone_function(chi, *f.grid, transformed);
  if (!f.evaluator)
    out.evaluator = nullptr; // keep grid-only inputs grid-only
  return out;
}

cplx l2_inner(const ConeFunction &f, const ConeFunction &g) {
  if (!f.grid || f.grid != g.grid)
    throw std::invalid_argument("l2_inner: grid mismatch");
  cplx acc = 0;
  for (int j = 0; j < f.grid->n_theta(); ++j)
    for (int k = 0; k < f.grid->n_phi(); ++k)
      acc += f.grid->weight(j, k) * std::conj(f.at(j, k)) * g.at(j, k);
  return acc;
}

namespace {

using Eigen::MatrixXcd;

// Matrix of T(A) on the Y_lm basis truncated at band L.
MatrixXcd rep_matrix(const GroupElement &A, cplx chi, int L, const SphereGrid &grid) {
  const int n = flat_lm_count(L);
  MatrixXcd T(n, n);
  for (int l = 0; l <= L; ++l)
    for (int m = -l; m <= l; ++m) {
      auto basis_fn = [l, m](double th, double ph) { return sph_harmonic(l, m, th, ph); };
      ConeFunction base = make_cone_function(chi, grid, basis_fn);
      ConeFunction moved = act_homogeneous(A, base);
      auto coeff = grid.sh_forward(moved.values, L);
      for (int i = 0; i < n; ++i)
        T(i, flat_lm(l, m)) = coeff[i];
    }
  return T;
}

} // namespace

RepLabels casimir_labels(cplx chi, int l_max, double fd_step) {
  if (std::abs(chi.imag()) > 5.0)
    throw std::invalid_argument("casimir_labels: |Im chi| too large for stable action");
  if (l_max < 2)
    throw std::invalid_argument("casimir_labels: l_max >= 2 required");
  const int L = l_max;
  const SphereGrid grid(2 * L + 8, 4 * L + 16);

  auto casimirs_at = [&](double h) {
    std::vector<MatrixXcd> J(3), K(3);
    for (int ax = 0; ax < 3; ++ax) {
      const MatrixXcd rp = rep_matrix(sl2_rotation(ax, h), chi, L, grid);
      const MatrixXcd rm = rep_matrix(sl2_rotation(ax, -h), chi, L, grid);
      J[ax] = (rp - rm) / (2.0 * h);
      const MatrixXcd bp = rep_matrix(sl2_boost(ax, h), chi, L, grid);
      const MatrixXcd bm = rep_matrix(sl2_boost(ax, -h), chi, L, grid);
      K[ax] = (bp - bm) / (2.0 * h);
    }
    // The finite differences produce anti-Hermitian generators on unitary
    // representations; the conventional Casimirs use the Hermitian ones
    // (-i J, -i K), hence the overall sign flips below.
    MatrixXcd C1 = MatrixXcd::Zero(J[0].rows(), J[0].cols());
    MatrixXcd C2 = C1;
    for (int ax = 0; ax < 3; ++ax) {
      C1 += K[ax] * K[ax] - J[ax] * J[ax];
      C2 -= J[ax] * K[ax];
    }
    // scalar Casimir read on the l = 0 state (truncation-exact for L >= 2)
    return std::make_pair(C1(0, 0), C2(0, 0));
  };

  const auto [c1_h, c2_h] = casimirs_at(fd_step);
  const auto [c1_h2, c2_h2] = casimirs_at(fd_step / 2);
  if (std::abs(c1_h - c1_h2) > 0.05 * (1.0 + std::abs(c1_h2)) ||
      std::abs(c2_h - c2_h2) > 0.05 * (1.0 + std::abs(c2_h2)))
    throw std::runtime_error("casimir_labels: finite differences did not converge");

  RepLabels out;
  // Richardson O(h^4) combination of the O(h^2) central differences
  out.casimir1 = (4.0 * c1_h2 - c1_h) / 3.0;
  out.casimir2 = (4.0 * c2_h2 - c2_h) / 3.0;

  // l0^2 and l1^2 are the roots of t^2 - P t - C2^2 = 0 with P = C1 + 1
  const cplx P = out.casimir1 + 1.0;
  const cplx disc = std::sqrt(P * P + 4.0 * out.casimir2 * out.casimir2);
  cplx r1 = 0.5 * (P + disc);
  cplx r2 = 0.5 * (P - disc);
  // assign the root nearer to the non-negative real axis to l0^2
  auto realness = [](cplx r) { return std::abs(r.imag()) + std::max(0.0, -r.real()); };
  cplx l0sq = (realness(r1) <= realness(r2)) ? r1 : r2;
  cplx l1sq = (l0sq == r1) ? r2 : r1;
  if (std::abs(l0sq) > std::abs(l1sq) && std::abs(l1sq) < 1e-6) {
    // degenerate pair: prefer the spherical assignment l0 = 0
    std::swap(l0sq, l1sq);
  }
  out.l0 = std::sqrt(std::max(0.0, l0sq.real()));
  cplx l1 = std::sqrt(l1sq);
  if (l1.real() < -1e-12 || (std::abs(l1.real()) <= 1e-12 && l1.imag() < 0.0))
    l1 = -l1;
  out.l1 = l1;
  return out;
}

cplx massive_state_eval(const FourVector &p, const FourVector &k, double nu) {
  const double pp = mdot(p, p);
  if (pp <= 0.0 || p.t <= 0.0)
    throw std::invalid_argument("massive_state_eval: p not on a positive mass shell");
  const double kscale = max_abs_component(k);
  if (kscale == 0.0 || std::abs(mdot(k, k)) > 1e-10 * kscale * kscale)
    throw std::invalid_argument("massive_state_eval: k not null");
  const double pk = mdot(p, k);
  if (pk <= 0.0)
    throw std::domain_error("massive_state_eval: p.k must be positive");
  return std::exp(cplx(-1.0, nu) * std::log(pk));
}

} // namespace irqed::cone
