#pragma once

#include "irqed/four_vector.hpp"

#include <functional>
#include <string>
#include <vector>

namespace irqed::testspaces {

//! Radial window exp(-a^2/|p|^2) exp(-|p|^2/a^2): smooth, strictly positive
//! away from the origin, infinitely flat at it (all derivatives vanish).
double s0_window(double p_norm, double a);
double s0_window(const std::vector<double> &p, double a);

//! Explicit test function over R^n with its declared class and the radius
//! beyond which it falls below 1e-12 (quadrature truncation).
struct TestFunction {
  enum class Class { schwartz, s00 };

  Class cls = Class::schwartz;
  int dim = 1;
  //! Largest moment order guaranteed to vanish for s00-class elements;
  //! -1 when the construction carries no moment guarantee.
  int declared_moment_order = -1;
  double support_radius = 10.0;
  std::function<double(const std::vector<double> &)> eval;
};

//! True s00 element in one dimension: the inverse Fourier transform of
//! s0_window, evaluated by direct cosine-transform quadrature. All its
//! moments vanish (derivatives of the window at zero momentum).
TestFunction spectral_s00_probe_1d(double a, int declared_order = 8);

TestFunction gaussian_probe(int dim, double sigma);

//! Max |Int x^alpha phi(x) dx| over all multi-indices |alpha| <= N,
//! by adaptive quadrature (dim 1) or tensor Gauss-Legendre (dim 3).
double moments_vanish_check(const TestFunction &phi, int N);

//! Conic probe w_a(rho) * bump(xi) in R^4 with rho the Euclidean 4-norm and
//! xi = t/rho; the bump confines the support to an open cone around timelike
//! (inside) or spacelike (outside) directions. Built from s0_window factors,
//! so the radial profile is infinitely flat at the apex.
struct ConicProbe {
  enum class Region { inside_cone, outside_cone };

  double a = 1.0;          // radial s0 scale
  double xi_center = 0.0;  // bump center in xi
  double xi_width = 0.2;   // bump half-width
  Region region = Region::outside_cone;

  ConicProbe(double a_, double xi_center_, double xi_width_, Region region_);

  double radial(double rho) const { return s0_window(rho, a); }
  double angular(double xi) const;
  double eval(const FourVector &x) const;
  double truncation_radius() const;

  TestFunction to_test_function() const;
};

using ScalarField4 = std::function<double(const FourVector &)>;

//! Pairing <field, probe> = Int field probe d^4x, reduced to an adaptive
//! (rho, xi) quadrature times a fixed-degree S^2 rule (the probes carry no
//! azimuthal structure). Absolute tolerance ~1e-8.
double pair_with_probe(const ScalarField4 &field, const ConicProbe &probe);

//! |<field, inside>| / |<field, outside>|. A small ratio certifies support
//! outside the light cone at probe resolution. Throws when the denominator
//! pairing vanishes (e.g. a zero field).
double cone_support_check(const ScalarField4 &field, const ConicProbe &inside,
                          const ConicProbe &outside);

} // namespace irqed::testspaces
