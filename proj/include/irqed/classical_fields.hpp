#pragma once

#include "irqed/desitter.hpp"
#include "irqed/four_vector.hpp"
#include "irqed/sphere.hpp"

#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace irqed::fields {

using desitter::HyperboloidPoint;
using desitter::PsiGrid;

enum class UnitSystem { gaussian, heaviside };

//! Point charge on an inertial worldline through the origin.
struct PointCharge {
  double q = 1.0;
  FourVector u{1, 0, 0, 0}; // four-velocity, u.u = 1, u0 > 0
};

//! Lienard-Wiechert potential of a uniformly moving charge,
//!   A^mu(x) = q u^mu / sqrt((u.x)^2 - x.x)   (Gaussian units: A0 = q/r at rest).
FourVector boosted_coulomb(const PointCharge &charge, const FourVector &x);

//! Momentum-space radiation field of a velocity kink u -> v:
//!   (q / 2 pi) ( u^mu / (u.p) - v^mu / (v.p) ),  homogeneous of degree -1 in p.
FourVector bremsstrahlung_momentum(double q, const FourVector &u, const FourVector &v,
                                   const FourVector &p);

//! Smooth compactly supported charge blob profiles (normalized to unit total
//! charge when integrated with 4 pi r^2 dr against the given radius).
enum class BlobProfile {
  linear_hat, // (1 - r/R): C0 kink at the edge, honest O(h^2) quadrature
  smooth_bump // exp(-r^2 / (R^2 - r^2)): C-infinity, compact support
};

double blob_density(BlobProfile profile, double radius, double r);

//! Classical current j^mu sampled on a uniform spatial box times uniform time
//! samples. Static grids hold a single time slice.
class CurrentGrid {
public:
  struct Box {
    double x0 = 0, y0 = 0, z0 = 0; // corner
    double h = 0.1;                // spacing
    int nx = 0, ny = 0, nz = 0;
  };

  using Sampler = std::function<FourVector(double t, double x, double y, double z)>;

  CurrentGrid(const Box &box, double t0, double dt, int nt, const Sampler &j,
              double support_radius, double total_charge);

  //! Charge blob at rest centered at the origin.
  static CurrentGrid static_blob(double q, double radius, BlobProfile profile, double h,
                                 double margin = 0.2);

  //! The same blob boosted to rapidity `alpha` along z; worldline through the
  //! origin, sampled over [t0, t0 + (nt-1) dt] on the given box.
  static CurrentGrid moving_blob(double q, double radius, BlobProfile profile,
                                 double alpha, const Box &box, double t0, double dt,
                                 int nt);

  const Box &box() const { return box_; }
  bool is_static() const { return nt_ == 1; }
  double t0() const { return t0_; }
  double dt() const { return dt_; }
  int nt() const { return nt_; }
  double support_radius() const { return support_radius_; }
  double total_charge() const { return total_charge_; }

  FourVector at(int it, int ix, int iy, int iz) const;
  //! Cubic interpolation in time at fixed spatial node (samples clamped ends).
  FourVector at_time(double t, int ix, int iy, int iz) const;
  //! True when the cell carries current at any stored time.
  bool cell_occupied(int ix, int iy, int iz) const;

  //! Max |d_mu j^mu| over interior nodes, by centered differences; the
  //! discrete continuity diagnostic.
  double continuity_residual() const;

private:
  Box box_;
  double t0_, dt_;
  int nt_;
  double support_radius_, total_charge_;
  std::vector<double> data_; // (it, ix, iy, iz, mu)
  std::vector<char> occupied_;
  size_t idx(int it, int ix, int iy, int iz) const;
};

//! Retarded integral  A^mu(x) = pref * Int d3x1 j^mu(t - |x1-x|, x1) / |x1-x|
//! with pref = 1 (gaussian, default) or 1/4pi (heaviside).
//! Throws when retarded times fall outside the grid's covered window (with a
//! 3-cell guard band) or when x sits inside unresolved support.
FourVector retarded_potential(const CurrentGrid &j, const FourVector &x,
                              UnitSystem units = UnitSystem::gaussian);

using FieldSampler = std::function<FourVector(const FourVector &)>;

struct ScaleSample {
  double scale = 0;
  FourVector rescaled_value; // lambda^-chi * F(lambda x)
};

struct ExtractionResult {
  FourVector value;        // homogeneous part at embed(direction)
  bool converged = false;
  double fit_residual = 0; // Cauchy defect of the Richardson sequence
  double measured_chi = 0; // log-log slope of |F| along the ray
  std::vector<ScaleSample> trace;
};

//! Scaling-limit extraction of the degree-chi homogeneous part along the ray
//! through embed(direction): rescale F(lambda x) by lambda^-chi over the
//! schedule, log-log slope check plus one Richardson step in 1/lambda.
ExtractionResult extract_homogeneous(const FieldSampler &field, double chi,
                                     const HyperboloidPoint &direction,
                                     const std::vector<double> &schedule);

//! Classical phase sample S = -e x.A(x) on the hyperboloid.
struct PhaseSample {
  HyperboloidPoint point;
  double value = 0;
  bool ok = true; // false when the sampler was singular / non-finite
};

std::vector<PhaseSample> phase_on_hyperboloid(const FieldSampler &field,
                                              const std::vector<HyperboloidPoint> &points,
                                              double e);

//! Real scalar field tabulated on psi grid x sphere quadrature grid.
struct PhaseField {
  PsiGrid psi;
  const SphereGrid *grid = nullptr;
  std::vector<double> v; // psi-major

  int index(int i, int node) const { return i * grid->size() + node; }
};

PhaseField sample_phase_field(const FieldSampler &field, const PsiGrid &psi,
                              const SphereGrid &grid, double e);

struct DecompositionResult {
  double Q = 0;        // charge coefficient of the -e tanh(psi) term
  double S0 = 0;       // constant term
  std::map<std::pair<int, int>, cplx> c; // (l, m) -> c_lm
  double residual = 0; // max |S - S_fit| over the grid
};

//! Reads Q from the angularly averaged odd asymptotics (exact for wave-
//! equation solutions), S0 from the even constant part, and fits c_lm by
//! least squares against the mode functions.
DecompositionResult mode_decompose(const PhaseField &S, const desitter::ModeSet &modes,
                                   double e);

//! All pairs (chi1, chi2) from the two candidate sets with
//! n1*chi1 + n2*chi2 = chi within tol; empty means the homogeneous part of the
//! Wick monomial vanishes.
std::vector<std::pair<cplx, cplx>> wick_homogeneity_partitions(
    cplx chi, int n1, int n2, const std::vector<cplx> &set1,
    const std::vector<cplx> &set2, double tol = 1e-9);

//! Allowed homogeneities of the massive scalar: -1 < chi < 0 on the real
//! axis, or the principal line Re chi = -1.
bool validate_scalar_homogeneity(cplx chi);

} // namespace irqed::fields
