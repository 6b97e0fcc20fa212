#pragma once

#include "irqed/desitter.hpp"
#include "irqed/sphere.hpp"

#include <Eigen/SparseCore>

#include <utility>
#include <vector>

namespace irqed::fock {

using SparseOp = Eigen::SparseMatrix<cplx>;

//! Truncated basis |m; n_11, n_1-1, ...> of charge sectors m in [-M, M]
//! tensored with boson occupations n <= n_max for every mode (l, m'),
//! 1 <= l <= l_max. Enumeration is charge-major, then lexicographic in the
//! occupation list (first mode most significant), so rebuilding a basis
//! always reproduces the same index map.
struct FockBasis {
  int M = 1;
  int l_max = 1;
  int n_max = 1;
  double charge_step = 1.0; // lattice spacing s: e standard, c*e nonstandard

  std::vector<std::pair<int, int>> modes; // (l, m), l-major
  long boson_dim = 0;                     // (n_max+1)^modes
  long dim = 0;                           // (2M+1) * boson_dim

  int n_modes() const { return int(modes.size()); }
  long stride(int mode_index) const;
  long index(int charge, const std::vector<int> &occ) const;
  int charge_of(long idx) const { return int(idx / boson_dim) - M; }
  long boson_index_of(long idx) const { return idx % boson_dim; }
  int occupation_of(long idx, int mode_index) const;
  int mode_index(int l, int m) const; // -1 when absent

  bool operator==(const FockBasis &o) const {
    return M == o.M && l_max == o.l_max && n_max == o.n_max &&
           charge_step == o.charge_step;
  }
};

FockBasis build_basis(int M, int l_max, int n_max, double charge_step = 1.0);

//! Charge window with no boson modes attached: the finite shadow of the
//! factor spanned by the charge-lattice shift orbit e^{i m S0} |0>.
FockBasis charge_window_basis(int M, double charge_step = 1.0);

struct OperatorMatrix {
  FockBasis basis;
  SparseOp mat;
  bool hermitian = false;
};

//! Q |m; n> = m s |m; n>; spectrum lies in s Z.
OperatorMatrix charge_operator(const FockBasis &basis, double e);

//! Partial-isometry charge shift V |m; n> = |m+1; n>, V |M; n> = 0.
OperatorMatrix phase_shift_operator(const FockBasis &basis);

//! Boson ladder pair for one mode, scaled so [c, c+] = z on occupations
//! below the cap; c annihilates the mode vacuum.
std::pair<OperatorMatrix, OperatorMatrix> ladder_operators(const FockBasis &basis,
                                                           double z, int l, int m);

//! Field part of the phase operator at a hyperboloid point,
//!   S(u) - S0 = -e tanh(psi_u) Q + sum_lm ( f_lm(u) c_lm + h.c. ).
OperatorMatrix phase_operator_at(const desitter::HyperboloidPoint &u,
                                 const FockBasis &basis,
                                 const desitter::ModeSet &modes, double e, double z);

OperatorMatrix commutator(const OperatorMatrix &A, const OperatorMatrix &B);

//! Projector onto charge sectors |m| <= M - 1 (the shift-interior subspace).
OperatorMatrix charge_interior_projector(const FockBasis &basis);

//! Projector onto states with every occupation <= n_max - 1.
OperatorMatrix boson_interior_projector(const FockBasis &basis);

//! True when A acts on a single tensor factor: A = A1 (x) 1 or 1 (x) A2 with
//! respect to the charge (x) boson split, within tol. Tested by partial-trace
//! reconstruction of the candidate factors.
bool factorization_check(const FockBasis &basis, const OperatorMatrix &A,
                         double tol = 1e-10);

//! Largest |entry| of a sparse matrix.
double max_abs(const SparseOp &m);

} // namespace irqed::fock
