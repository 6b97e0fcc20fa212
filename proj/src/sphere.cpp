#include "irqed/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace irqed {

namespace {

// Associated Legendre P_l^m(x) with orthonormal spherical-harmonic
// normalization folded in:  Nbar_lm(x) = sqrt((2l+1)/(4pi) (l-m)!/(l+m)!) P_l^m(x),
// m >= 0, Condon-Shortley phase included. Stable l-upward recurrence.
void normalized_plm_column(int l_max, int m, double x, double *out) {
  const double somx2 = std::sqrt(std::max(0.0, 1.0 - x * x));
  // seed: Nbar_mm
  double pmm = 1.0 / std::sqrt(4.0 * std::numbers::pi);
  for (int k = 1; k <= m; ++k)
    pmm *= -somx2 * std::sqrt((2.0 * k + 1.0) / (2.0 * k));
  out[0] = pmm;
  if (l_max == m)
    return;
  double pm1 = pmm;
  double pm2 = 0.0;
  for (int l = m + 1; l <= l_max; ++l) {
    const double a = std::sqrt((4.0 * l * l - 1.0) / (double(l * l) - double(m) * m));
    const double b = std::sqrt((double((l - 1) * (l - 1)) - double(m) * m) /
                               (4.0 * double((l - 1) * (l - 1)) - 1.0));
    const double p = a * (x * pm1 - b * pm2);
    out[l - m] = p;
    pm2 = pm1;
    pm1 = p;
  }
}

double normalized_plm(int l, int m, double x) {
  std::vector<double> col(l - m + 1);
  normalized_plm_column(l, m, x, col.data());
  return col[l - m];
}

} // namespace

void gauss_legendre(int n, std::vector<double> &nodes, std::vector<double> &weights) {
  if (n < 1)
    throw std::invalid_argument("gauss_legendre: n < 1");
  nodes.assign(n, 0.0);
  weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    // Tricomi-style initial guess, then Newton on P_n.
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15)
        break;
    }
    nodes[i] = -x;
    nodes[n - 1 - i] = x;
    const double w = 2.0 / ((1.0 - x * x) * pp * pp);
    weights[i] = w;
    weights[n - 1 - i] = w;
  }
}

cplx sph_harmonic(int l, int m, double theta, double phi) {
  if (l < 0 || std::abs(m) > l)
    throw std::invalid_argument("sph_harmonic: require l >= 0, |m| <= l");
  const int am = std::abs(m);
  const double p = normalized_plm(l, am, std::cos(theta));
  cplx val = p * std::exp(cplx(0.0, am * phi));
  if (m < 0)
    val = (am % 2 == 0 ? 1.0 : -1.0) * std::conj(val);
  return val;
}

SphereGrid::SphereGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 3 || n_phi < 3)
    throw std::invalid_argument("SphereGrid: too few nodes");
  std::vector<double> x;
  gauss_legendre(n_theta, x, w_theta_);
  theta_.resize(n_theta);
  for (int j = 0; j < n_theta; ++j)
    theta_[j] = std::acos(x[n_theta - 1 - j]); // increasing theta
  std::reverse(w_theta_.begin(), w_theta_.end());
  phi_.resize(n_phi);
  for (int k = 0; k < n_phi; ++k)
    phi_[k] = 2.0 * std::numbers::pi * k / n_phi;
  w_phi_ = 2.0 * std::numbers::pi / n_phi;
}

cplx SphereGrid::integrate(const std::vector<cplx> &values) const {
  if (int(values.size()) != size())
    throw std::invalid_argument("SphereGrid::integrate: size mismatch");
  cplx acc = 0.0;
  for (int j = 0; j < n_theta_; ++j) {
    cplx row = 0.0;
    for (int k = 0; k < n_phi_; ++k)
      row += values[index(j, k)];
    acc += w_theta_[j] * row;
  }
  return acc * w_phi_;
}

double SphereGrid::integrate(const std::vector<double> &values) const {
  if (int(values.size()) != size())
    throw std::invalid_argument("SphereGrid::integrate: size mismatch");
  double acc = 0.0;
  for (int j = 0; j < n_theta_; ++j) {
    double row = 0.0;
    for (int k = 0; k < n_phi_; ++k)
      row += values[index(j, k)];
    acc += w_theta_[j] * row;
  }
  return acc * w_phi_;
}

std::vector<cplx> SphereGrid::sh_forward(const std::vector<cplx> &values, int l_max) const {
  if (int(values.size()) != size())
    throw std::invalid_argument("sh_forward: size mismatch");
  std::vector<cplx> coeff(flat_lm_count(l_max), 0.0);
  // phi transform first: F_m(theta_j) = sum_k f e^{-i m phi_k} * w_phi
  std::vector<std::vector<cplx>> fm(2 * l_max + 1, std::vector<cplx>(n_theta_, 0.0));
  for (int m = -l_max; m <= l_max; ++m) {
    for (int j = 0; j < n_theta_; ++j) {
      cplx acc = 0.0;
      for (int k = 0; k < n_phi_; ++k)
        acc += values[index(j, k)] * std::exp(cplx(0.0, -m * phi_[k]));
      fm[m + l_max][j] = acc * w_phi_;
    }
  }
  std::vector<double> col(l_max + 1);
  for (int m = -l_max; m <= l_max; ++m) {
    const int am = std::abs(m);
    for (int j = 0; j < n_theta_; ++j) {
      normalized_plm_column(l_max, am, std::cos(theta_[j]), col.data());
      for (int l = am; l <= l_max; ++l) {
        double p = col[l - am];
        if (m < 0 && am % 2 != 0)
          p = -p;
        coeff[flat_lm(l, m)] += w_theta_[j] * p * fm[m + l_max][j];
      }
    }
  }
  return coeff;
}

std::vector<cplx> SphereGrid::sh_inverse(const std::vector<cplx> &coeff, int l_max) const {
  if (int(coeff.size()) != flat_lm_count(l_max))
    throw std::invalid_argument("sh_inverse: coefficient count mismatch");
  std::vector<cplx> out(size(), 0.0);
  for (int j = 0; j < n_theta_; ++j)
    for (int k = 0; k < n_phi_; ++k)
      out[index(j, k)] = sh_eval(coeff, l_max, theta_[j], phi_[k]);
  return out;
}

cplx sh_eval(const std::vector<cplx> &coeff, int l_max, double theta, double phi) {
  cplx acc = 0.0;
  std::vector<double> col(l_max + 1);
  const double x = std::cos(theta);
  for (int m = -l_max; m <= l_max; ++m) {
    const int am = std::abs(m);
    normalized_plm_column(l_max, am, x, col.data());
    const cplx e = std::exp(cplx(0.0, m * phi));
    for (int l = am; l <= l_max; ++l) {
      double p = col[l - am];
      if (m < 0 && am % 2 != 0)
        p = -p;
      acc += coeff[flat_lm(l, m)] * p * e;
    }
  }
  return acc;
}

} // namespace irqed
