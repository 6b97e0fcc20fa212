#include "irqed/fock.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace irqed::fock {

namespace {
constexpr long kDimCap = 1000000;
}

long FockBasis::stride(int mode_index) const {
  long s = 1;
  for (int j = n_modes() - 1; j > mode_index; --j)
    s *= (n_max + 1);
  return s;
}

long FockBasis::index(int charge, const std::vector<int> &occ) const {
  if (charge < -M || charge > M || int(occ.size()) != n_modes())
    throw std::invalid_argument("FockBasis::index: bad state");
  long b = 0;
  for (int j = 0; j < n_modes(); ++j) {
    if (occ[j] < 0 || occ[j] > n_max)
      throw std::invalid_argument("FockBasis::index: occupation out of range");
    b = b * (n_max + 1) + occ[j];
  }
  return (long(charge) + M) * boson_dim + b;
}

int FockBasis::occupation_of(long idx, int mode_index) const {
  return int((idx % boson_dim) / stride(mode_index)) % (n_max + 1);
}

int FockBasis::mode_index(int l, int m) const {
  for (int j = 0; j < n_modes(); ++j)
    if (modes[j].first == l && modes[j].second == m)
      return j;
  return -1;
}

FockBasis build_basis(int M, int l_max, int n_max, double charge_step) {
  if (M < 1 || l_max < 1 || n_max < 1)
    throw std::invalid_argument("build_basis: require M, l_max, n_max >= 1");
  if (charge_step <= 0.0)
    throw std::invalid_argument("build_basis: charge_step must be positive");
  FockBasis b;
  b.M = M;
  b.l_max = l_max;
  b.n_max = n_max;
  b.charge_step = charge_step;
  for (int l = 1; l <= l_max; ++l)
    for (int m = -l; m <= l; ++m)
      b.modes.emplace_back(l, m);
  long bd = 1;
  for (int j = 0; j < b.n_modes(); ++j) {
    bd *= (n_max + 1);
    if (bd > kDimCap)
      throw std::invalid_argument("build_basis: dimension overflow");
  }
  b.boson_dim = bd;
  b.dim = (2L * M + 1) * bd;
  if (b.dim > kDimCap)
    throw std::invalid_argument("build_basis: dimension overflow");
  return b;
}

FockBasis charge_window_basis(int M, double charge_step) {
  if (M < 1)
    throw std::invalid_argument("charge_window_basis: M >= 1 required");
  if (charge_step <= 0.0)
    throw std::invalid_argument("charge_window_basis: charge_step must be positive");
  FockBasis b;
  b.M = M;
  b.l_max = 0;
  b.n_max = 0;
  b.charge_step = charge_step;
  b.boson_dim = 1;
  b.dim = 2L * M + 1;
  return b;
}

OperatorMatrix charge_operator(const FockBasis &basis, double e) {
  if (e <= 0.0)
    throw std::invalid_argument("charge_operator: e must be positive");
  SparseOp m(basis.dim, basis.dim);
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(basis.dim);
  for (long i = 0; i < basis.dim; ++i)
    trip.emplace_back(i, i, cplx(basis.charge_of(i) * basis.charge_step, 0.0));
  m.setFromTriplets(trip.begin(), trip.end());
  return {basis, std::move(m), true};
}

OperatorMatrix phase_shift_operator(const FockBasis &basis) {
  SparseOp m(basis.dim, basis.dim);
  std::vector<Eigen::Triplet<cplx>> trip;
  trip.reserve(basis.dim);
  for (long i = 0; i < basis.dim; ++i)
    if (basis.charge_of(i) < basis.M)
      trip.emplace_back(i + basis.boson_dim, i, cplx(1.0, 0.0));
  m.setFromTriplets(trip.begin(), trip.end());
  return {basis, std::move(m), false};
}

std::pair<OperatorMatrix, OperatorMatrix> ladder_operators(const FockBasis &basis,
                                                           double z, int l, int m) {
  if (z <= 0.0)
    throw std::invalid_argument("ladder_operators: z must be positive");
  const int j = basis.mode_index(l, m);
  if (j < 0)
    throw std::invalid_argument("ladder_operators: unknown mode");
  const long st = basis.stride(j);

  SparseOp c(basis.dim, basis.dim), cd(basis.dim, basis.dim);
  std::vector<Eigen::Triplet<cplx>> tc, td;
  for (long i = 0; i < basis.dim; ++i) {
    const int n = basis.occupation_of(i, j);
    if (n >= 1)
      tc.emplace_back(i - st, i, cplx(std::sqrt(z * n), 0.0));
    if (n < basis.n_max)
      td.emplace_back(i + st, i, cplx(std::sqrt(z * (n + 1)), 0.0));
  }
  c.setFromTriplets(tc.begin(), tc.end());
  cd.setFromTriplets(td.begin(), td.end());
  return {OperatorMatrix{basis, std::move(c), false},
          OperatorMatrix{basis, std::move(cd), false}};
}

OperatorMatrix phase_operator_at(const desitter::HyperboloidPoint &u,
                                 const FockBasis &basis,
                                 const desitter::ModeSet &modes, double e, double z) {
  if (modes.l_max() < basis.l_max)
    throw std::invalid_argument("phase_operator_at: mode data misses required l");
  const double th = std::tanh(u.psi);

  SparseOp acc = charge_operator(basis, e).mat * cplx(-e * th, 0.0);
  for (const auto &[l, m] : basis.modes) {
    const cplx f = modes.value(l, m, u);
    auto [c, cd] = ladder_operators(basis, z, l, m);
    acc += f * c.mat + std::conj(f) * cd.mat;
  }
  return {basis, std::move(acc), true};
}

OperatorMatrix commutator(const OperatorMatrix &A, const OperatorMatrix &B) {
  if (!(A.basis == B.basis) || A.mat.rows() != B.mat.rows())
    throw std::invalid_argument("commutator: mismatched bases");
  SparseOp m = (A.mat * B.mat - B.mat * A.mat).pruned();
  return {A.basis, std::move(m), false};
}

OperatorMatrix charge_interior_projector(const FockBasis &basis) {
  SparseOp m(basis.dim, basis.dim);
  std::vector<Eigen::Triplet<cplx>> trip;
  for (long i = 0; i < basis.dim; ++i)
    if (std::abs(basis.charge_of(i)) <= basis.M - 1)
      trip.emplace_back(i, i, cplx(1.0, 0.0));
  m.setFromTriplets(trip.begin(), trip.end());
  return {basis, std::move(m), true};
}

OperatorMatrix boson_interior_projector(const FockBasis &basis) {
  SparseOp m(basis.dim, basis.dim);
  std::vector<Eigen::Triplet<cplx>> trip;
  for (long i = 0; i < basis.dim; ++i) {
    bool interior = true;
    for (int j = 0; j < basis.n_modes() && interior; ++j)
      if (basis.occupation_of(i, j) >= basis.n_max)
        interior = false;
    if (interior)
      trip.emplace_back(i, i, cplx(1.0, 0.0));
  }
  m.setFromTriplets(trip.begin(), trip.end());
  return {basis, std::move(m), true};
}

double max_abs(const SparseOp &m) {
  double worst = 0.0;
  for (int k = 0; k < m.outerSize(); ++k)
    for (SparseOp::InnerIterator it(m, k); it; ++it)
      worst = std::max(worst, std::abs(it.value()));
  return worst;
}

bool factorization_check(const FockBasis &basis, const OperatorMatrix &A, double tol) {
  if (!(A.basis == basis))
    throw std::invalid_argument("factorization_check: basis mismatch");
  const long B = basis.boson_dim;
  const long C = 2L * basis.M + 1;

  // candidate charge factor: A1 = (1/B) Tr_boson A  (small dense)
  Eigen::MatrixXcd A1 = Eigen::MatrixXcd::Zero(C, C);
  // candidate boson factor: A2 = (1/C) Tr_charge A  (sparse map)
  std::unordered_map<long, cplx> A2;
  for (int k = 0; k < A.mat.outerSize(); ++k)
    for (SparseOp::InnerIterator it(A.mat, k); it; ++it) {
      const long r = it.row(), c = it.col();
      if (r % B == c % B)
        A1(r / B, c / B) += it.value() / double(B);
      if (r / B == c / B)
        A2[(r % B) * B + (c % B)] += it.value() / double(C);
    }

  const double scale = std::max(1.0, max_abs(A.mat));
  const double cut = tol * scale;
  double worst1 = 0.0, worst2 = 0.0;

  // defect on the sparsity pattern of A
  for (int k = 0; k < A.mat.outerSize(); ++k)
    for (SparseOp::InnerIterator it(A.mat, k); it; ++it) {
      const long r = it.row(), c = it.col();
      const cplx t1 = (r % B == c % B) ? A1(r / B, c / B) : cplx(0.0);
      cplx t2 = 0.0;
      if (r / B == c / B) {
        auto f = A2.find((r % B) * B + (c % B));
        if (f != A2.end())
          t2 = f->second;
      }
      worst1 = std::max(worst1, std::abs(it.value() - t1));
      worst2 = std::max(worst2, std::abs(it.value() - t2));
    }
  // entries of the reconstructions that A might be missing
  for (long rc = 0; rc < C && worst1 <= cut; ++rc)
    for (long cc = 0; cc < C && worst1 <= cut; ++cc) {
      if (std::abs(A1(rc, cc)) <= cut)
        continue;
      for (long bIdx = 0; bIdx < B; ++bIdx) {
        const cplx got = A.mat.coeff(rc * B + bIdx, cc * B + bIdx);
        worst1 = std::max(worst1, std::abs(got - A1(rc, cc)));
        if (worst1 > cut)
          break;
      }
    }
  for (auto it2 = A2.begin(); it2 != A2.end() && worst2 <= cut; ++it2) {
    if (std::abs(it2->second) <= cut)
      continue;
    const long rb = it2->first / B, cb = it2->first % B;
    for (long cIdx = 0; cIdx < C; ++cIdx) {
      const cplx got = A.mat.coeff(cIdx * B + rb, cIdx * B + cb);
      worst2 = std::max(worst2, std::abs(got - it2->second));
      if (worst2 > cut)
        break;
    }
  }

  return worst1 <= cut || worst2 <= cut;
}

} // namespace irqed::fock
