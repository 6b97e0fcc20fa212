#include "irqed/desitter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace irqed::desitter {

FourVector embed(const HyperboloidPoint &p) {
  const double ch = std::cosh(p.psi);
  const double st = std::sin(p.theta);
  return {std::sinh(p.psi), ch * st * std::cos(p.phi), ch * st * std::sin(p.phi),
          ch * std::cos(p.theta)};
}

std::vector<double> PsiGrid::nodes() const {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i)
    out[i] = node(i);
  return out;
}

namespace {

// State (u, u', w, w') of the two real fundamental solutions.
using RadialState = std::array<double, 4>;

struct RadialRhs {
  double ll1;
  void operator()(const RadialState &y, RadialState &dydt, double psi) const {
    const double c = -2.0 * std::tanh(psi);
    const double k = -ll1 / (std::cosh(psi) * std::cosh(psi));
    dydt[0] = y[1];
    dydt[1] = c * y[1] + k * y[0];
    dydt[2] = y[3];
    dydt[3] = c * y[3] + k * y[2];
  }
};

// Integrate from psi = 0 through the given monotone node list (which may run
// in either direction), recording the state at each node.
void integrate_through(const RadialRhs &rhs, const std::vector<double> &nodes,
                       std::vector<RadialState> &states) {
  namespace ode = boost::numeric::odeint;
  states.clear();
  if (nodes.empty())
    return;
  auto stepper = ode::make_dense_output(1e-12, 1e-12, ode::runge_kutta_dopri5<RadialState>());
  RadialState y = {1.0, 0.0, 0.0, 1.0}; // u(0)=1, u'(0)=0, w(0)=0, w'(0)=1
  const double dir = nodes.back() >= 0.0 ? 1.0 : -1.0;
  stepper.initialize(y, 0.0, dir * 1e-4);
  bool stepped = false;
  for (double target : nodes) {
    if (!stepped && std::abs(target) < 1e-300) {
      states.push_back(y);
      continue;
    }
    while (dir * (stepper.current_time() - target) < 0.0) {
      stepper.do_step(rhs);
      stepped = true;
    }
    RadialState out;
    stepper.calc_state(target, out);
    states.push_back(out);
  }
}

} // namespace

RadialMode radial_mode(int l, const PsiGrid &grid) {
  if (l < 1)
    throw std::invalid_argument(
        "radial_mode: l = 0 is owned by the charge/phase sector (span{1, tanh psi})");
  if (grid.n < 3)
    throw std::invalid_argument("radial_mode: grid too coarse");

  const RadialRhs rhs{double(l) * (l + 1)};

  std::vector<double> up_nodes, down_nodes;
  std::vector<int> up_idx, down_idx;
  for (int i = 0; i < grid.n; ++i) {
    const double psi = grid.node(i);
    if (psi >= 0.0) {
      up_nodes.push_back(psi);
      up_idx.push_back(i);
    } else {
      down_nodes.push_back(psi);
      down_idx.push_back(i);
    }
  }
  std::reverse(down_nodes.begin(), down_nodes.end());
  std::reverse(down_idx.begin(), down_idx.end());

  std::vector<RadialState> up_states, down_states;
  integrate_through(rhs, up_nodes, up_states);
  integrate_through(rhs, down_nodes, down_states);

  RadialMode mode;
  mode.l = l;
  mode.grid = grid;
  mode.f.assign(grid.n, 0.0);
  mode.fp.assign(grid.n, 0.0);

  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  auto store = [&](int i, const RadialState &y) {
    // f = (u - i w)/sqrt(2): KG norm +1 from the unit Wronskian at psi = 0,
    // f(0) = 1/sqrt(2) real and positive.
    mode.f[i] = inv_sqrt2 * cplx(y[0], -y[2]);
    mode.fp[i] = inv_sqrt2 * cplx(y[1], -y[3]);
  };
  for (size_t k = 0; k < up_idx.size(); ++k)
    store(up_idx[k], up_states[k]);
  for (size_t k = 0; k < down_idx.size(); ++k)
    store(down_idx[k], down_states[k]);

  // KG norm from the slice nearest psi = 0 (conserved elsewhere; checked in tests).
  int i0 = 0;
  for (int i = 1; i < grid.n; ++i)
    if (std::abs(grid.node(i)) < std::abs(grid.node(i0)))
      i0 = i;
  const double ch2 = std::cosh(grid.node(i0)) * std::cosh(grid.node(i0));
  mode.kg_norm = -2.0 * ch2 * std::imag(std::conj(mode.f[i0]) * mode.fp[i0]);
  return mode;
}

namespace {

int bracket_index(const PsiGrid &g, double psi) {
  if (psi < g.psi_min - 1e-12 || psi > g.psi_max + 1e-12)
    throw std::out_of_range("RadialMode: psi outside grid range");
  int i = int(std::floor((psi - g.psi_min) / g.h()));
  return std::clamp(i, 0, g.n - 2);
}

} // namespace

cplx RadialMode::eval(double psi) const {
  const int i = bracket_index(grid, psi);
  const double h = grid.h();
  const double s = (psi - grid.node(i)) / h;
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  return h00 * f[i] + h10 * h * fp[i] + h01 * f[i + 1] + h11 * h * fp[i + 1];
}

cplx RadialMode::eval_deriv(double psi) const {
  const int i = bracket_index(grid, psi);
  const double h = grid.h();
  const double s = (psi - grid.node(i)) / h;
  auto fpp = [&](int k) {
    const double p = grid.node(k);
    return -2.0 * std::tanh(p) * fp[k] -
           double(l) * (l + 1) / (std::cosh(p) * std::cosh(p)) * f[k];
  };
  const double s2 = s * s, s3 = s2 * s;
  const double h00 = 2 * s3 - 3 * s2 + 1, h10 = s3 - 2 * s2 + s;
  const double h01 = -2 * s3 + 3 * s2, h11 = s3 - s2;
  return h00 * fp[i] + h10 * h * fpp(i) + h01 * fp[i + 1] + h11 * h * fpp(i + 1);
}

cplx ModeFunction::value(const HyperboloidPoint &p) const {
  return radial.eval(p.psi) * sph_harmonic(radial.l, m, p.theta, p.phi);
}

ModeSet::ModeSet(int l_max, const PsiGrid &grid) : l_max_(l_max), grid_(grid) {
  if (l_max < 1)
    throw std::invalid_argument("ModeSet: l_max >= 1 required");
  radial_.reserve(l_max);
  for (int l = 1; l <= l_max; ++l)
    radial_.push_back(radial_mode(l, grid));
}

const RadialMode &ModeSet::radial(int l) const {
  if (l < 1 || l > l_max_)
    throw std::invalid_argument("ModeSet::radial: l out of range");
  return radial_[l - 1];
}

ModeFunction ModeSet::mode(int l, int m) const {
  if (l < 1 || l > l_max_ || std::abs(m) > l)
    throw std::invalid_argument("ModeSet::mode: invalid (l, m)");
  return ModeFunction{radial(l), m};
}

cplx ModeSet::value(int l, int m, const HyperboloidPoint &p) const {
  return mode(l, m).value(p);
}

cplx kg_inner(const ModeFunction &f, const ModeFunction &g, double psi) {
  if (!(f.radial.grid == g.radial.grid))
    throw std::invalid_argument("kg_inner: mismatched psi grids");
  const int band = std::max(f.l(), g.l());
  const SphereGrid sph(band + 2, 2 * band + 3);

  const cplx fv = f.radial.eval(psi), fpv = f.radial.eval_deriv(psi);
  const cplx gv = g.radial.eval(psi), gpv = g.radial.eval_deriv(psi);
  const double ch2 = std::cosh(psi) * std::cosh(psi);

  cplx ang = 0.0;
  for (int j = 0; j < sph.n_theta(); ++j)
    for (int k = 0; k < sph.n_phi(); ++k)
      ang += sph.weight(j, k) *
             std::conj(sph_harmonic(f.l(), f.m, sph.theta(j), sph.phi(k))) *
             sph_harmonic(g.l(), g.m, sph.theta(j), sph.phi(k));

  return cplx(0.0, 1.0) * ch2 * (std::conj(fv) * gpv - gv * std::conj(fpv)) * ang;
}

double Field3D::theta(int j) const { return (j + 0.5) * std::numbers::pi / n_theta; }
double Field3D::phi(int k) const { return 2.0 * std::numbers::pi * k / n_phi; }

Field3D dalembert_ds3(const Field3D &field) {
  if (field.psi.n < 3 || field.n_theta < 3 || field.n_phi < 3)
    throw std::invalid_argument("dalembert_ds3: grid too coarse (< 3 nodes per axis)");
  if (int(field.v.size()) != field.psi.n * field.n_theta * field.n_phi)
    throw std::invalid_argument("dalembert_ds3: value count mismatch");

  Field3D out;
  out.psi = field.psi;
  out.n_theta = field.n_theta;
  out.n_phi = field.n_phi;
  out.v.assign(field.v.size(), 0.0);

  const double hp = field.psi.h();
  const double ht = std::numbers::pi / field.n_theta;
  const double hf = 2.0 * std::numbers::pi / field.n_phi;
  const int nt = field.n_theta, nf = field.n_phi;

  // Across-pole neighbor: (theta, phi) -> (-theta, phi + pi).
  auto pole_wrap = [&](int i, int j, int k) -> cplx {
    const int kk = (k + nf / 2) % nf;
    if (j < 0)
      return field.at(i, -1 - j, kk);
    return field.at(i, 2 * nt - 1 - j, kk);
  };
  auto val = [&](int i, int j, int k) -> cplx {
    if (j < 0 || j >= nt)
      return pole_wrap(i, j, k);
    return field.at(i, j, (k + nf) % nf);
  };

  for (int i = 1; i + 1 < field.psi.n; ++i) {
    const double psi = field.psi.node(i);
    const double ch2 = std::cosh(psi) * std::cosh(psi);
    const double chp = std::cosh(psi + hp / 2) * std::cosh(psi + hp / 2);
    const double chm = std::cosh(psi - hp / 2) * std::cosh(psi - hp / 2);
    for (int j = 0; j < nt; ++j) {
      const double th = field.theta(j);
      const double s = std::sin(th);
      const double sp = std::sin(th + ht / 2);
      const double sm = std::sin(th - ht / 2);
      for (int k = 0; k < nf; ++k) {
        const cplx c = field.at(i, j, k);
        const cplx dpsi =
            (chp * (field.at(i + 1, j, k) - c) - chm * (c - field.at(i - 1, j, k))) /
            (hp * hp);
        const cplx dth =
            (sp * (val(i, j + 1, k) - c) - sm * (c - val(i, j - 1, k))) / (ht * ht * s);
        const cplx dph =
            (val(i, j, k + 1) - 2.0 * c + val(i, j, k - 1)) / (hf * hf * s * s);
        out.at(i, j, k) = (dpsi - dth - dph) / ch2;
      }
    }
  }
  return out;
}

SphereField dalembert_ds3_spectral(const SphereField &field, int l_max) {
  if (field.psi.n < 3)
    throw std::invalid_argument("dalembert_ds3_spectral: grid too coarse");
  if (!field.grid)
    throw std::invalid_argument("dalembert_ds3_spectral: missing sphere grid");
  const int ns = field.grid->size();
  if (int(field.v.size()) != field.psi.n * ns)
    throw std::invalid_argument("dalembert_ds3_spectral: value count mismatch");

  SphereField out;
  out.psi = field.psi;
  out.grid = field.grid;
  out.v.assign(field.v.size(), 0.0);

  // Angular Laplacian slice by slice: a_lm -> -l(l+1) a_lm.
  std::vector<cplx> lap(field.v.size(), 0.0);
  std::vector<cplx> slice(ns);
  for (int i = 0; i < field.psi.n; ++i) {
    std::copy(field.v.begin() + i * ns, field.v.begin() + (i + 1) * ns, slice.begin());
    auto coeff = field.grid->sh_forward(slice, l_max);
    for (int l = 0; l <= l_max; ++l)
      for (int m = -l; m <= l; ++m)
        coeff[flat_lm(l, m)] *= -double(l) * (l + 1);
    auto back = field.grid->sh_inverse(coeff, l_max);
    std::copy(back.begin(), back.end(), lap.begin() + i * ns);
  }

  const double hp = field.psi.h();
  for (int i = 1; i + 1 < field.psi.n; ++i) {
    const double psi = field.psi.node(i);
    const double ch2 = std::cosh(psi) * std::cosh(psi);
    const double chp = std::cosh(psi + hp / 2) * std::cosh(psi + hp / 2);
    const double chm = std::cosh(psi - hp / 2) * std::cosh(psi - hp / 2);
    for (int s = 0; s < ns; ++s) {
      const cplx c = field.v[field.index(i, s)];
      const cplx dpsi = (chp * (field.v[field.index(i + 1, s)] - c) -
                         chm * (c - field.v[field.index(i - 1, s)])) /
                        (hp * hp);
      out.v[field.index(i, s)] = (dpsi - lap[field.index(i, s)]) / ch2;
    }
  }
  return out;
}

} // namespace irqed::desitter
