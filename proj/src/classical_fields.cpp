#include "irqed/classical_fields.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irqed::fields {

FourVector boosted_coulomb(const PointCharge &charge, const FourVector &x) {
  const double uu = mdot(charge.u, charge.u);
  if (std::abs(uu - 1.0) > 1e-10 || charge.u.t <= 0.0)
    throw std::invalid_argument("boosted_coulomb: four-velocity not normalized");
  const double ux = mdot(charge.u, x);
  const double r2 = ux * ux - mdot(x, x);
  if (r2 <= 1e-24)
    throw std::domain_error("boosted_coulomb: point on the worldline");
  return (charge.q / std::sqrt(r2)) * charge.u;
}

FourVector bremsstrahlung_momentum(double q, const FourVector &u, const FourVector &v,
                                   const FourVector &p) {
  if (std::abs(mdot(u, u) - 1.0) > 1e-10 || std::abs(mdot(v, v) - 1.0) > 1e-10)
    throw std::invalid_argument("bremsstrahlung_momentum: velocities not normalized");
  const double up = mdot(u, p);
  const double vp = mdot(v, p);
  if (std::abs(up) < 1e-14 || std::abs(vp) < 1e-14)
    throw std::domain_error("bremsstrahlung_momentum: degenerate denominator");
  const double pref = q / (2.0 * std::numbers::pi);
  return pref * (u / up - v / vp);
}

double blob_density(BlobProfile profile, double radius, double r) {
  if (r >= radius)
    return 0.0;
  switch (profile) {
  case BlobProfile::linear_hat: {
    // Int 4 pi r^2 (1 - r/R) dr = pi R^3 / 3
    const double norm = std::numbers::pi * radius * radius * radius / 3.0;
    return (1.0 - r / radius) / norm;
  }
  case BlobProfile::smooth_bump: {
    // normalization computed once per radius by quadrature
    static thread_local double cached_radius = -1.0;
    static thread_local double cached_norm = 0.0;
    if (cached_radius != radius) {
      const int n = 4000;
      double acc = 0.0;
      for (int i = 0; i < n; ++i) {
        const double rr = (i + 0.5) * radius / n;
        const double u = rr * rr / (radius * radius - rr * rr);
        acc += 4.0 * std::numbers::pi * rr * rr * std::exp(-u) * (radius / n);
      }
      cached_radius = radius;
      cached_norm = acc;
    }
    const double u = r * r / (radius * radius - r * r);
    return std::exp(-u) / cached_norm;
  }
  }
  return 0.0;
}

size_t CurrentGrid::idx(int it, int ix, int iy, int iz) const {
  return (((size_t(it) * box_.nx + ix) * box_.ny + iy) * box_.nz + iz) * 4;
}

CurrentGrid::CurrentGrid(const Box &box, double t0, double dt, int nt, const Sampler &j,
                         double support_radius, double total_charge)
    : box_(box), t0_(t0), dt_(dt), nt_(nt), support_radius_(support_radius),
      total_charge_(total_charge) {
  if (box.nx < 2 || box.ny < 2 || box.nz < 2 || nt < 1)
    throw std::invalid_argument("CurrentGrid: degenerate grid");
  data_.assign(size_t(nt) * box.nx * box.ny * box.nz * 4, 0.0);
  occupied_.assign(size_t(box.nx) * box.ny * box.nz, 0);
  for (int it = 0; it < nt; ++it) {
    const double t = t0 + it * dt;
    for (int ix = 0; ix < box.nx; ++ix)
      for (int iy = 0; iy < box.ny; ++iy)
        for (int iz = 0; iz < box.nz; ++iz) {
          const FourVector val = j(t, box.x0 + ix * box.h, box.y0 + iy * box.h,
                                   box.z0 + iz * box.h);
          const size_t b = idx(it, ix, iy, iz);
          data_[b] = val.t;
          data_[b + 1] = val.x;
          data_[b + 2] = val.y;
          data_[b + 3] = val.z;
          if (max_abs_component(val) > 0.0)
            occupied_[(size_t(ix) * box.ny + iy) * box.nz + iz] = 1;
        }
  }
}

bool CurrentGrid::cell_occupied(int ix, int iy, int iz) const {
  return occupied_[(size_t(ix) * box_.ny + iy) * box_.nz + iz] != 0;
}

CurrentGrid CurrentGrid::static_blob(double q, double radius, BlobProfile profile,
                                     double h, double margin) {
  const double half = radius + margin;
  const int n = int(std::ceil(2.0 * half / h)) + 1;
  Box box{-half, -half, -half, h, n, n, n};
  auto j = [=](double, double x, double y, double z) {
    const double r = std::sqrt(x * x + y * y + z * z);
    return FourVector{q * blob_density(profile, radius, r), 0, 0, 0};
  };
  return CurrentGrid(box, 0.0, 1.0, 1, j, radius, q);
}

CurrentGrid CurrentGrid::moving_blob(double q, double radius, BlobProfile profile,
                                     double alpha, const Box &box, double t0, double dt,
                                     int nt) {
  const double gamma = std::cosh(alpha);
  const double beta = std::tanh(alpha);
  auto j = [=](double t, double x, double y, double z) {
    // Lorentz transform of the rest-frame density: worldline z = beta t.
    const double zr = gamma * (z - beta * t);
    const double r = std::sqrt(x * x + y * y + zr * zr);
    const double rho0 = q * blob_density(profile, radius, r);
    return FourVector{gamma * rho0, 0.0, 0.0, gamma * beta * rho0};
  };
  return CurrentGrid(box, t0, dt, nt, j, radius, q);
}

FourVector CurrentGrid::at(int it, int ix, int iy, int iz) const {
  const size_t b = idx(it, ix, iy, iz);
  return {data_[b], data_[b + 1], data_[b + 2], data_[b + 3]};
}

FourVector CurrentGrid::at_time(double t, int ix, int iy, int iz) const {
  if (is_static())
    return at(0, ix, iy, iz);
  const double s = (t - t0_) / dt_;
  int i1 = int(std::floor(s));
  i1 = std::max(1, std::min(nt_ - 3, i1));
  const double u = s - i1;
  // Catmull-Rom through the four surrounding time samples.
  const double u2 = u * u, u3 = u2 * u;
  const double w0 = 0.5 * (-u + 2 * u2 - u3);
  const double w1 = 0.5 * (2 - 5 * u2 + 3 * u3);
  const double w2 = 0.5 * (u + 4 * u2 - 3 * u3);
  const double w3 = 0.5 * (-u2 + u3);
  FourVector out;
  const FourVector f0 = at(i1 - 1, ix, iy, iz), f1 = at(i1, ix, iy, iz),
                   f2 = at(i1 + 1, ix, iy, iz), f3 = at(i1 + 2, ix, iy, iz);
  for (int mu = 0; mu < 4; ++mu)
    out[mu] = w0 * f0[mu] + w1 * f1[mu] + w2 * f2[mu] + w3 * f3[mu];
  return out;
}

double CurrentGrid::continuity_residual() const {
  double worst = 0.0;
  const double h = box_.h;
  for (int it = 0; it < nt_; ++it)
    for (int ix = 1; ix + 1 < box_.nx; ++ix)
      for (int iy = 1; iy + 1 < box_.ny; ++iy)
        for (int iz = 1; iz + 1 < box_.nz; ++iz) {
          double div = 0.0;
          if (nt_ > 1) {
            if (it == 0 || it == nt_ - 1)
              continue;
            div += (at(it + 1, ix, iy, iz).t - at(it - 1, ix, iy, iz).t) / (2 * dt_);
          }
          div += (at(it, ix + 1, iy, iz).x - at(it, ix - 1, iy, iz).x) / (2 * h);
          div += (at(it, ix, iy + 1, iz).y - at(it, ix, iy - 1, iz).y) / (2 * h);
          div += (at(it, ix, iy, iz + 1).z - at(it, ix, iy, iz - 1).z) / (2 * h);
          worst = std::max(worst, std::abs(div));
        }
  return worst;
}

FourVector retarded_potential(const CurrentGrid &j, const FourVector &x,
                              UnitSystem units) {
  const auto &box = j.box();
  const double h = box.h;
  const double cell = h * h * h;
  const double guard = 3.0 * h;

  FourVector acc;
  for (int ix = 0; ix < box.nx; ++ix) {
    const double xs = box.x0 + ix * h;
    for (int iy = 0; iy < box.ny; ++iy) {
      const double ys = box.y0 + iy * h;
      for (int iz = 0; iz < box.nz; ++iz) {
        const double zs = box.z0 + iz * h;
        const double dx = x.x - xs, dy = x.y - ys, dz = x.z - zs;
        const double r = std::sqrt(dx * dx + dy * dy + dz * dz);
        const double t_ret = x.t - r;
        FourVector val;
        if (j.is_static()) {
          val = j.at(0, ix, iy, iz);
        } else {
          // 3-cell guard band against the coverage edges of the time grid.
          if (t_ret < j.t0() + 3.0 * j.dt() || t_ret > j.t0() + (j.nt() - 4) * j.dt()) {
            if (j.cell_occupied(ix, iy, iz))
              throw std::domain_error(
                  "retarded_potential: retarded time outside grid coverage");
            continue;
          }
          val = j.at_time(t_ret, ix, iy, iz);
        }
        if (max_abs_component(val) > 0.0 && r < guard)
          throw std::domain_error("retarded_potential: x inside unresolved support");
        if (r < 0.5 * h)
          continue; // empty cell coincident with x
        acc = acc + val / r;
      }
    }
  }
  const double pref =
      units == UnitSystem::gaussian ? 1.0 : 1.0 / (4.0 * std::numbers::pi);
  return pref * cell * acc;
}

ExtractionResult extract_homogeneous(const FieldSampler &field, double chi,
                                     const HyperboloidPoint &direction,
                                     const std::vector<double> &schedule) {
  if (chi > 0.0)
    throw std::invalid_argument("extract_homogeneous: chi must be <= 0");
  if (schedule.size() < 4)
    throw std::invalid_argument("extract_homogeneous: need at least 4 scales");
  for (size_t k = 1; k < schedule.size(); ++k)
    if (schedule[k] <= schedule[k - 1])
      throw std::invalid_argument("extract_homogeneous: schedule must increase");

  const FourVector x0 = desitter::embed(direction);
  ExtractionResult res;
  std::vector<FourVector> raw(schedule.size());
  for (size_t k = 0; k < schedule.size(); ++k) {
    const double lam = schedule[k];
    raw[k] = field(lam * x0);
    res.trace.push_back({lam, std::pow(lam, -chi) * raw[k]});
  }

  // asymptotic log-log slope of |F| along the ray, over the outer half of the
  // schedule where subleading decay has died off (zero fields skip the check)
  double sxx = 0, sxy = 0, sx = 0, sy = 0;
  int n_ok = 0;
  for (size_t k = schedule.size() / 2; k < schedule.size(); ++k) {
    const double mag = std::sqrt(raw[k].t * raw[k].t + raw[k].x * raw[k].x +
                                 raw[k].y * raw[k].y + raw[k].z * raw[k].z);
    if (mag < 1e-300)
      continue;
    const double lx = std::log(schedule[k]), ly = std::log(mag);
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n_ok;
  }
  const bool field_zero = (n_ok < 2);
  res.measured_chi =
      field_zero ? chi : (n_ok * sxy - sx * sy) / (n_ok * sxx - sx * sx);

  // one Richardson step assuming the next correction decays like 1/lambda
  const size_t K = schedule.size();
  auto richardson = [&](size_t k) {
    const double l1 = schedule[k - 1], l2 = schedule[k];
    FourVector out;
    for (int mu = 0; mu < 4; ++mu)
      out[mu] = (l2 * res.trace[k].rescaled_value[mu] -
                 l1 * res.trace[k - 1].rescaled_value[mu]) /
                (l2 - l1);
    return out;
  };
  const FourVector r_last = richardson(K - 1);
  const FourVector r_prev = richardson(K - 2);
  res.value = r_last;
  res.fit_residual = max_abs_component(r_last - r_prev);

  const double scale = std::max(1e-12, max_abs_component(r_last));
  const bool cauchy_ok = res.fit_residual <= 1e-9 + 1e-3 * scale;
  const bool slope_ok = field_zero || std::abs(res.measured_chi - chi) <= 0.05;
  res.converged = cauchy_ok && slope_ok;
  return res;
}

std::vector<PhaseSample> phase_on_hyperboloid(const FieldSampler &field,
                                              const std::vector<HyperboloidPoint> &points,
                                              double e) {
  std::vector<PhaseSample> out;
  out.reserve(points.size());
  for (const auto &p : points) {
    PhaseSample s;
    s.point = p;
    try {
      const FourVector x = desitter::embed(p);
      s.value = -e * mdot(x, field(x));
      s.ok = std::isfinite(s.value);
    } catch (const std::exception &) {
      s.value = 0.0;
      s.ok = false;
    }
    out.push_back(s);
  }
  return out;
}

PhaseField sample_phase_field(const FieldSampler &field, const PsiGrid &psi,
                              const SphereGrid &grid, double e) {
  PhaseField S;
  S.psi = psi;
  S.grid = &grid;
  S.v.assign(size_t(psi.n) * grid.size(), 0.0);
  for (int i = 0; i < psi.n; ++i)
    for (int j = 0; j < grid.n_theta(); ++j)
      for (int k = 0; k < grid.n_phi(); ++k) {
        const FourVector x =
            desitter::embed({psi.node(i), grid.theta(j), grid.phi(k)});
        S.v[S.index(i, grid.index(j, k))] = -e * mdot(x, field(x));
      }
  return S;
}

DecompositionResult mode_decompose(const PhaseField &S, const desitter::ModeSet &modes,
                                   double e) {
  if (!S.grid)
    throw std::invalid_argument("mode_decompose: missing sphere grid");
  if (e <= 0.0)
    throw std::invalid_argument("mode_decompose: e must be positive");
  if (!(modes.grid() == S.psi))
    throw std::invalid_argument("mode_decompose: mode set and field psi grids differ");
  const PsiGrid &pg = S.psi;
  if (pg.psi_max < 2.5 || pg.psi_min > -2.5)
    throw std::invalid_argument("mode_decompose: insufficient psi coverage (need 2.5)");
  if (std::abs(pg.psi_max + pg.psi_min) > 1e-12)
    throw std::invalid_argument("mode_decompose: psi grid must be symmetric");
  const int ns = S.grid->size();
  const int np = pg.n;
  const double area = 4.0 * std::numbers::pi;

  // angular averages per slice
  std::vector<double> avg(np, 0.0);
  for (int i = 0; i < np; ++i) {
    std::vector<double> slice(S.v.begin() + size_t(i) * ns,
                              S.v.begin() + size_t(i + 1) * ns);
    avg[i] = S.grid->integrate(slice) / area;
  }

  DecompositionResult out;

  // Q from the odd part of the angular average at the two outermost slice
  // pairs; division by tanh removes the finite-psi defect exactly for
  // solutions, the pairwise fit extrapolates any e^{-2 psi} remainder.
  auto q_at = [&](int i_out) {
    const double psi = pg.node(np - 1 - i_out);
    const double odd = 0.5 * (avg[np - 1 - i_out] - avg[i_out]);
    return std::make_pair(psi, -odd / (e * std::tanh(psi)));
  };
  const auto [psi_a, q_a] = q_at(0);
  const auto [psi_b, q_b] = q_at(std::max(1, np / 20));
  const double wa = std::exp(-2.0 * psi_a), wb = std::exp(-2.0 * psi_b);
  // q(psi) = Q + a e^{-2 psi}  =>  eliminate a
  out.Q = (q_a * wb - q_b * wa) / (wb - wa);

  // S0 from the even constant part (modes average to zero on the sphere)
  out.S0 = 0.5 * (avg[np - 1] + avg[0]);

  // residual field projected onto Y_lm slice by slice
  const int l_max = modes.l_max();
  std::vector<std::vector<cplx>> proj(np);
  for (int i = 0; i < np; ++i) {
    std::vector<cplx> slice(ns);
    for (int s = 0; s < ns; ++s)
      slice[s] = S.v[S.index(i, s)] - out.S0 + e * out.Q * std::tanh(pg.node(i));
    proj[i] = S.grid->sh_forward(slice, l_max);
  }

  // c_lm by least squares in psi: P_lm = c_lm f + (-1)^m conj(c_{l,-m}) conj(f)
  for (int l = 1; l <= l_max; ++l) {
    const auto &rad = modes.radial(l);
    for (int m = 0; m <= l; ++m) {
      const double sgn = (m % 2 == 0) ? 1.0 : -1.0;
      const int unknowns = (m == 0) ? 2 : 4;
      const int rows = (m == 0) ? np : 4 * np;
      Eigen::MatrixXd A(rows, unknowns);
      Eigen::VectorXd b(rows);
      for (int i = 0; i < np; ++i) {
        const cplx f = rad.f[i];
        if (m == 0) {
          // P_l0 = 2 Re(c) Re(f) - 2 Im(c) Im(f)
          A(i, 0) = 2.0 * f.real();
          A(i, 1) = -2.0 * f.imag();
          b(i) = proj[i][flat_lm(l, 0)].real();
        } else {
          const cplx p1 = proj[i][flat_lm(l, m)];
          const cplx p2 = proj[i][flat_lm(l, -m)];
          // rows: Re/Im of P_lm and of P_{l,-m}; unknowns
          // [Re c_lm, Im c_lm, Re c_{l,-m}, Im c_{l,-m}]
          const int r = 4 * i;
          A(r, 0) = f.real();
          A(r, 1) = -f.imag();
          A(r, 2) = sgn * f.real();
          A(r, 3) = sgn * f.imag();
          b(r) = p1.real();
          A(r + 1, 0) = f.imag();
          A(r + 1, 1) = f.real();
          A(r + 1, 2) = -sgn * f.imag();
          A(r + 1, 3) = sgn * f.real();
          b(r + 1) = p1.imag();
          A(r + 2, 0) = sgn * f.real();
          A(r + 2, 1) = sgn * f.imag();
          A(r + 2, 2) = f.real();
          A(r + 2, 3) = -f.imag();
          b(r + 2) = p2.real();
          A(r + 3, 0) = -sgn * f.imag();
          A(r + 3, 1) = sgn * f.real();
          A(r + 3, 2) = f.imag();
          A(r + 3, 3) = f.real();
          b(r + 3) = p2.imag();
        }
      }
      Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
      if (svd.singularValues()(svd.singularValues().size() - 1) <
          1e-8 * svd.singularValues()(0))
        throw std::runtime_error("mode_decompose: ill-conditioned least squares");
      Eigen::VectorXd sol = svd.solve(b);
      if (m == 0) {
        out.c[{l, 0}] = cplx(sol(0), sol(1));
      } else {
        out.c[{l, m}] = cplx(sol(0), sol(1));
        out.c[{l, -m}] = cplx(sol(2), sol(3));
      }
    }
  }

  // reconstruction residual
  double worst = 0.0;
  for (int i = 0; i < np; ++i) {
    const double tanh_term = -e * out.Q * std::tanh(pg.node(i));
    for (int j = 0; j < S.grid->n_theta(); ++j)
      for (int k = 0; k < S.grid->n_phi(); ++k) {
        cplx fit = out.S0 + tanh_term;
        for (const auto &[lm, coef] : out.c) {
          const cplx mode_val = modes.radial(lm.first).f[i] *
                                sph_harmonic(lm.first, lm.second, S.grid->theta(j),
                                             S.grid->phi(k));
          fit += coef * mode_val + std::conj(coef * mode_val);
        }
        worst = std::max(worst,
                         std::abs(fit.real() - S.v[S.index(i, S.grid->index(j, k))]));
      }
  }
  out.residual = worst;
  return out;
}

std::vector<std::pair<cplx, cplx>> wick_homogeneity_partitions(
    cplx chi, int n1, int n2, const std::vector<cplx> &set1,
    const std::vector<cplx> &set2, double tol) {
  std::vector<std::pair<cplx, cplx>> out;
  for (const cplx &c1 : set1)
    for (const cplx &c2 : set2)
      if (std::abs(double(n1) * c1 + double(n2) * c2 - chi) < tol)
        out.emplace_back(c1, c2);
  return out;
}

bool validate_scalar_homogeneity(cplx chi) {
  constexpr double tol = 1e-12;
  if (std::abs(chi.real() + 1.0) <= tol)
    return true; // principal line chi = -1 + i nu
  if (std::abs(chi.imag()) <= tol)
    return chi.real() > -1.0 && chi.real() < 0.0;
  return false;
}

} // namespace irqed::fields
