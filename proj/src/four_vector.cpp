#include "irqed/four_vector.hpp"

namespace irqed {

Matrix4 boost_matrix(double alpha, double nx, double ny, double nz) {
  const double nn = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (nn < 1e-14)
    throw std::invalid_argument("boost_matrix: zero direction");
  nx /= nn;
  ny /= nn;
  nz /= nn;

  const double ch = std::cosh(alpha);
  const double sh = std::sinh(alpha);
  const double n[3] = {nx, ny, nz};

  // Active convention: boost_matrix(a, n) * (1,0,0,0) = (cosh a, sinh a * n).
  Matrix4 L = Matrix4::identity();
  L.m[0][0] = ch;
  for (int i = 0; i < 3; ++i) {
    L.m[0][i + 1] = sh * n[i];
    L.m[i + 1][0] = sh * n[i];
    for (int j = 0; j < 3; ++j)
      L.m[i + 1][j + 1] = (i == j ? 1.0 : 0.0) + (ch - 1.0) * n[i] * n[j];
  }
  return L;
}

double lorentz_defect(const Matrix4 &L) {
  const double eta[4] = {1.0, -1.0, -1.0, -1.0};
  double worst = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      double s = 0.0;
      for (int m = 0; m < 4; ++m)
        s += L.m[m][a] * eta[m] * L.m[m][b];
      const double target = (a == b) ? eta[a] : 0.0;
      worst = std::max(worst, std::abs(s - target));
    }
  return worst;
}

} // namespace irqed
