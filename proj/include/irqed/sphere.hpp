#pragma once

#include <complex>
#include <vector>

namespace irqed {

using cplx = std::complex<double>;

//! Gauss-Legendre nodes and weights on [-1, 1].
void gauss_legendre(int n, std::vector<double> &nodes, std::vector<double> &weights);

//! Orthonormal spherical harmonic Y_lm(theta, phi), Condon-Shortley phase.
cplx sph_harmonic(int l, int m, double theta, double phi);

//! Product quadrature on S^2: Gauss-Legendre in cos(theta), uniform in phi.
//! Integrates spherical polynomials of degree <= 2*n_theta - 1 exactly in
//! theta and azimuthal orders |m| < n_phi exactly in phi.
class SphereGrid {
public:
  SphereGrid(int n_theta, int n_phi);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  int size() const { return n_theta_ * n_phi_; }

  double theta(int j) const { return theta_[j]; }
  double phi(int k) const { return phi_[k]; }
  //! Quadrature weight of node (j, k); sums to 4*pi.
  double weight(int j, int /*k*/) const { return w_theta_[j] * w_phi_; }

  int index(int j, int k) const { return j * n_phi_ + k; }

  //! Quadrature of a tabulated integrand (size n_theta*n_phi, theta-major).
  cplx integrate(const std::vector<cplx> &values) const;
  double integrate(const std::vector<double> &values) const;

  template <typename F> cplx integrate_fn(F &&f) const {
    cplx acc = 0.0;
    for (int j = 0; j < n_theta_; ++j)
      for (int k = 0; k < n_phi_; ++k)
        acc += w_theta_[j] * w_phi_ * cplx(f(theta_[j], phi_[k]));
    return acc;
  }

  //! Forward spherical-harmonic transform up to band l_max (inclusive).
  //! Exact for band-limited tables when l_max is within quadrature capacity.
  std::vector<cplx> sh_forward(const std::vector<cplx> &values, int l_max) const;

  //! Inverse transform of coefficients (packed as flat_lm) onto this grid.
  std::vector<cplx> sh_inverse(const std::vector<cplx> &coeff, int l_max) const;

private:
  int n_theta_;
  int n_phi_;
  std::vector<double> theta_;
  std::vector<double> w_theta_;
  std::vector<double> phi_;
  double w_phi_;
};

//! Packed index of (l, m) in a flat array ordered l-major: l*l + (l + m).
inline int flat_lm(int l, int m) { return l * l + l + m; }
inline int flat_lm_count(int l_max) { return (l_max + 1) * (l_max + 1); }

//! Evaluate a packed coefficient vector at an arbitrary direction.
cplx sh_eval(const std::vector<cplx> &coeff, int l_max, double theta, double phi);

} // namespace irqed
