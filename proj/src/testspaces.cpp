#include "irqed/testspaces.hpp"

#include "irqed/sphere.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <cmath>
#include <memory>
#include <numbers>
#include <stdexcept>

namespace irqed::testspaces {

namespace {
using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
}

double s0_window(double p_norm, double a) {
  if (a <= 0.0)
    throw std::invalid_argument("s0_window: scale must be positive");
  if (p_norm <= 0.0)
    return 0.0;
  const double r2 = p_norm * p_norm;
  const double ex = -a * a / r2 - r2 / (a * a);
  return ex < -700.0 ? 0.0 : std::exp(ex);
}

double s0_window(const std::vector<double> &p, double a) {
  double r2 = 0;
  for (double c : p)
    r2 += c * c;
  return s0_window(std::sqrt(r2), a);
}

namespace {

// Dimensionless transform phi1(z) = (1/pi) Int_0^P w_1(p) cos(p z) dp on a
// fixed table; phi_a(x) = a phi1(a x). The window vanishes with all
// derivatives at both ends, so the composite trapezoid rule converges
// superpolynomially. Tail entries below the roundoff floor of the sum are
// zeroed: they carry no signal and would otherwise poison high moments.
constexpr double kProbeTableZMax = 400.0;
constexpr double kProbeTableDz = 0.025;

const std::vector<double> &probe_transform_table() {
  static const std::vector<double> table = [] {
    const double P = std::sqrt(-std::log(1e-18));
    const int n_p = 16384;
    std::vector<double> wp(n_p + 1), pg(n_p + 1);
    for (int i = 0; i <= n_p; ++i) {
      pg[i] = P * i / n_p;
      wp[i] = s0_window(pg[i], 1.0) * (i == 0 || i == n_p ? 0.5 : 1.0);
    }
    const int n_z = int(kProbeTableZMax / kProbeTableDz) + 1;
    std::vector<double> t(n_z);
    for (int j = 0; j < n_z; ++j) {
      const double z = j * kProbeTableDz;
      double acc = 0;
      for (int i = 0; i <= n_p; ++i)
        acc += wp[i] * std::cos(pg[i] * z);
      t[j] = acc * (P / n_p) / std::numbers::pi;
    }
    int cut = n_z;
    while (cut > 0 && std::abs(t[cut - 1]) < 1e-16)
      --cut;
    std::fill(t.begin() + cut, t.end(), 0.0);
    return t;
  }();
  return table;
}

} // namespace

TestFunction spectral_s00_probe_1d(double a, int declared_order) {
  if (a <= 0.0)
    throw std::invalid_argument("spectral_s00_probe_1d: scale must be positive");
  const std::vector<double> &table = probe_transform_table();
  const double dz = kProbeTableDz;
  const double z_max = kProbeTableZMax;

  TestFunction f;
  f.cls = TestFunction::Class::s00;
  f.dim = 1;
  f.declared_moment_order = declared_order;
  f.support_radius = z_max / a;
  f.eval = [&table, dz, z_max, a](const std::vector<double> &xv) {
    const double z = std::abs(a * xv.at(0));
    if (z >= z_max - 2 * dz)
      return 0.0;
    const int n = int(table.size());
    int i = std::max(1, std::min(n - 3, int(z / dz)));
    const double s = z / dz - i;
    // 4-point Lagrange through nodes i-1 .. i+2 (the table is even in z)
    const double w0 = -s * (s - 1) * (s - 2) / 6.0;
    const double w1 = (s + 1) * (s - 1) * (s - 2) / 2.0;
    const double w2 = -(s + 1) * s * (s - 2) / 2.0;
    const double w3 = (s + 1) * s * (s - 1) / 6.0;
    return a * (w0 * table[i - 1] + w1 * table[i] + w2 * table[i + 1] +
                w3 * table[i + 2]);
  };
  return f;
}

TestFunction gaussian_probe(int dim, double sigma) {
  TestFunction f;
  f.cls = TestFunction::Class::schwartz;
  f.dim = dim;
  f.support_radius = sigma * std::sqrt(-2.0 * std::log(1e-14));
  f.eval = [sigma](const std::vector<double> &x) {
    double r2 = 0;
    for (double c : x)
      r2 += c * c;
    return std::exp(-r2 / (2.0 * sigma * sigma));
  };
  return f;
}

double moments_vanish_check(const TestFunction &phi, int N) {
  if (N < 0)
    throw std::invalid_argument("moments_vanish_check: N >= 0 required");
  const double R = phi.support_radius;
  double worst = 0.0;

  if (phi.dim == 1) {
    for (int k = 0; k <= N; ++k) {
      auto integrand = [&](double x) { return std::pow(x, k) * phi.eval({x}); };
      const double m = GK::integrate(integrand, -R, R, 12, 1e-12);
      worst = std::max(worst, std::abs(m));
    }
    return worst;
  }

  if (phi.dim == 3) {
    // tensor Gauss-Legendre on the truncation box
    const int n = 64;
    std::vector<double> t, w;
    gauss_legendre(n, t, w);
    std::vector<double> xs(n), ws(n);
    for (int i = 0; i < n; ++i) {
      xs[i] = R * t[i];
      ws[i] = R * w[i];
    }
    for (int ax = 0; ax <= N; ++ax)
      for (int ay = 0; ay + ax <= N; ++ay)
        for (int az = 0; az + ay + ax <= N; ++az) {
          double acc = 0;
          for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
              for (int k = 0; k < n; ++k)
                acc += ws[i] * ws[j] * ws[k] * std::pow(xs[i], ax) *
                       std::pow(xs[j], ay) * std::pow(xs[k], az) *
                       phi.eval({xs[i], xs[j], xs[k]});
          worst = std::max(worst, std::abs(acc));
        }
    return worst;
  }

  throw std::invalid_argument("moments_vanish_check: dim must be 1 or 3");
}

namespace {

// C-infinity bump on (-1, 1), normalized to bump(0) = 1.
double unit_bump(double u) {
  if (std::abs(u) >= 1.0)
    return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - u * u));
}

} // namespace

ConicProbe::ConicProbe(double a_, double xi_center_, double xi_width_, Region region_)
    : a(a_), xi_center(xi_center_), xi_width(xi_width_), region(region_) {
  if (a <= 0.0 || xi_width <= 0.0)
    throw std::invalid_argument("ConicProbe: bad scales");
  const double lo = xi_center - xi_width, hi = xi_center + xi_width;
  const double c = 1.0 / std::numbers::sqrt2; // cone boundary |xi| = 1/sqrt(2)
  const bool inside_ok = (lo > c && hi <= 1.0) || (hi < -c && lo >= -1.0);
  const bool outside_ok = lo > -c && hi < c;
  if (region == Region::inside_cone && !inside_ok)
    throw std::invalid_argument("ConicProbe: bump not confined inside the cone");
  if (region == Region::outside_cone && !outside_ok)
    throw std::invalid_argument("ConicProbe: bump not confined outside the cone");
}

double ConicProbe::angular(double xi) const {
  return unit_bump((xi - xi_center) / xi_width);
}

double ConicProbe::eval(const FourVector &x) const {
  const double rho =
      std::sqrt(x.t * x.t + x.x * x.x + x.y * x.y + x.z * x.z);
  if (rho == 0.0)
    return 0.0;
  return radial(rho) * angular(x.t / rho);
}

double ConicProbe::truncation_radius() const {
  return a * std::sqrt(-std::log(1e-14));
}

TestFunction ConicProbe::to_test_function() const {
  TestFunction f;
  f.cls = TestFunction::Class::s00;
  f.dim = 4;
  f.declared_moment_order = -1; // conic family: no moment guarantee declared
  f.support_radius = truncation_radius();
  ConicProbe copy = *this;
  f.eval = [copy](const std::vector<double> &x) {
    return copy.eval({x.at(0), x.at(1), x.at(2), x.at(3)});
  };
  return f;
}

double pair_with_probe(const ScalarField4 &field, const ConicProbe &probe) {
  // d^4x = rho^3 drho dOmega_3, dOmega_3 = sqrt(1 - xi^2) dxi dOmega_2
  const SphereGrid s2(16, 32);
  const double rho_max = probe.truncation_radius();
  const double rho_min = probe.a * probe.a / rho_max; // window symmetric in rho<->a^2/rho

  auto over_xi = [&](double rho) {
    auto xi_integrand = [&](double xi) {
      const double st = std::sqrt(std::max(0.0, 1.0 - xi * xi));
      double mean = 0.0;
      for (int j = 0; j < s2.n_theta(); ++j)
        for (int k = 0; k < s2.n_phi(); ++k) {
          const double sth = std::sin(s2.theta(j));
          const FourVector x{rho * xi, rho * st * sth * std::cos(s2.phi(k)),
                             rho * st * sth * std::sin(s2.phi(k)),
                             rho * st * std::cos(s2.theta(j))};
          mean += s2.weight(j, k) * field(x);
        }
      return probe.angular(xi) * st * mean;
    };
    const double lo = std::max(-1.0, probe.xi_center - probe.xi_width);
    const double hi = std::min(1.0, probe.xi_center + probe.xi_width);
    return GK::integrate(xi_integrand, lo, hi, 10, 1e-9);
  };

  auto rho_integrand = [&](double rho) {
    return rho * rho * rho * probe.radial(rho) * over_xi(rho);
  };
  return GK::integrate(rho_integrand, rho_min, rho_max, 10, 1e-9);
}

double cone_support_check(const ScalarField4 &field, const ConicProbe &inside,
                          const ConicProbe &outside) {
  if (inside.region != ConicProbe::Region::inside_cone)
    throw std::invalid_argument("cone_support_check: inside probe hint mismatch");
  if (outside.region != ConicProbe::Region::outside_cone)
    throw std::invalid_argument("cone_support_check: outside probe hint mismatch");
  const double num = std::abs(pair_with_probe(field, inside));
  const double den = std::abs(pair_with_probe(field, outside));
  if (den < 1e-250)
    throw std::domain_error("cone_support_check: vanishing denominator pairing");
  return num / den;
}

} // namespace irqed::testspaces
