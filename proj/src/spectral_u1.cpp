#include "irqed/spectral_u1.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace irqed::spectral {

namespace {

std::vector<double> distinct_sorted(std::vector<double> vals, double tol) {
  std::sort(vals.begin(), vals.end());
  std::vector<double> out;
  for (double v : vals)
    if (out.empty() || v - out.back() > tol)
      out.push_back(v);
  return out;
}

struct LatticeInfo {
  bool is_lattice = false;
  double spacing = 0;
  double gap_a = 0, gap_b = 0; // first unequal pair when not a lattice
};

LatticeInfo lattice_of(const std::vector<double> &distinct, double tol) {
  LatticeInfo info;
  if (distinct.size() < 2) {
    info.is_lattice = true;
    return info;
  }
  const double g0 = distinct[1] - distinct[0];
  double acc = 0;
  for (size_t k = 0; k + 1 < distinct.size(); ++k) {
    const double g = distinct[k + 1] - distinct[k];
    if (std::abs(g - g0) > tol) {
      info.gap_a = g0;
      info.gap_b = g;
      return info;
    }
    acc += g;
  }
  info.is_lattice = true;
  info.spacing = acc / double(distinct.size() - 1);
  return info;
}

} // namespace

SpectralReport spectral_triple_check(const fock::OperatorMatrix &V,
                                     const fock::OperatorMatrix &D, double tol) {
  if (!(V.basis == D.basis) || V.mat.rows() != D.mat.rows())
    throw std::invalid_argument("spectral_triple_check: mismatched bases");

  // D must be hermitian (here: diagonal real within tol)
  double offdiag = 0, imagdiag = 0;
  std::vector<double> diag(D.mat.rows(), 0.0);
  for (int k = 0; k < D.mat.outerSize(); ++k)
    for (fock::SparseOp::InnerIterator it(D.mat, k); it; ++it) {
      if (it.row() == it.col()) {
        imagdiag = std::max(imagdiag, std::abs(it.value().imag()));
        diag[it.row()] = it.value().real();
      } else {
        offdiag = std::max(offdiag, std::abs(it.value()));
      }
    }
  if (offdiag > tol || imagdiag > tol)
    throw std::invalid_argument("spectral_triple_check: D not hermitian-diagonal");

  SpectralReport rep;
  rep.spectrum = distinct_sorted(diag, tol);

  const LatticeInfo lat = lattice_of(rep.spectrum, tol);
  rep.lattice_ok = lat.is_lattice;
  rep.spacing = lat.spacing;

  rep.integer_ok = true;
  for (double v : rep.spectrum)
    if (std::abs(v - std::round(v)) > tol) {
      rep.integer_ok = false;
      if (!rep.witness)
        rep.witness = Witness{"spectrum", v, std::round(v), -1};
      break;
    }

  // V isometric on charge sectors m <= M - 1
  {
    fock::SparseOp W = (V.mat.adjoint() * V.mat).pruned();
    double worst = 0;
    for (int k = 0; k < W.outerSize(); ++k)
      for (fock::SparseOp::InnerIterator it(W, k); it; ++it) {
        const bool inside = V.basis.charge_of(it.row()) <= V.basis.M - 1 ||
                            V.basis.charge_of(it.col()) <= V.basis.M - 1;
        if (!inside)
          continue;
        const cplx want = (it.row() == it.col() &&
                           V.basis.charge_of(it.row()) <= V.basis.M - 1)
                              ? cplx(1.0)
                              : cplx(0.0);
        worst = std::max(worst, std::abs(it.value() - want));
      }
    // diagonal entries W may have dropped (exact zeros) are fine; missing
    // interior ones are not
    for (long i = 0; i < V.mat.rows(); ++i)
      if (V.basis.charge_of(i) <= V.basis.M - 1)
        worst = std::max(worst, std::abs(W.coeff(i, i) - cplx(1.0)));
    rep.unitary_ok = worst <= tol;
  }

  // [D, V] = kappa V entrywise
  {
    std::optional<double> kappa;
    double worst = 0;
    bool proportional = true;
    for (int k = 0; k < V.mat.outerSize(); ++k)
      for (fock::SparseOp::InnerIterator it(V.mat, k); it; ++it) {
        const double ratio = diag[it.row()] - diag[it.col()];
        if (!kappa)
          kappa = ratio;
        else if (std::abs(ratio - *kappa) > tol) {
          proportional = false;
          if (!rep.witness)
            rep.witness = Witness{"commutant", ratio, *kappa, -1};
        }
        worst = std::max(worst, std::abs(ratio - (kappa ? *kappa : 0.0)));
      }
    (void)worst;
    if (proportional && kappa) {
      rep.kappa = *kappa;
      rep.shift_ok = std::abs(*kappa - 1.0) <= tol;
      if (!rep.shift_ok && !rep.witness)
        rep.witness = Witness{"commutant", *kappa, 1.0, -1};
    }
  }

  rep.standard_ok = rep.shift_ok && rep.integer_ok;
  return rep;
}

double connes_distance(const fock::OperatorMatrix &D, int m1, int m2) {
  const auto &basis = D.basis;
  if (m1 < -basis.M || m1 > basis.M || m2 < -basis.M || m2 > basis.M)
    throw std::invalid_argument("connes_distance: sector out of window");
  if (m1 == m2)
    return 0.0;

  // per-sector eigenvalue (first basis state of the sector)
  auto sector_value = [&](int m) {
    const long i = (long(m) + basis.M) * basis.boson_dim;
    return D.mat.coeff(i, i).real();
  };

  const int lo = std::min(m1, m2), hi = std::max(m1, m2);
  double dist = 0.0;
  for (int m = lo; m < hi; ++m) {
    const double gap = std::abs(sector_value(m + 1) - sector_value(m));
    if (gap < 1e-14)
      return std::numeric_limits<double>::infinity();
    dist += 1.0 / gap;
  }
  return dist;
}

SpeciesLattice::SpeciesLattice(const std::vector<double> &charges, int M)
    : charges_(charges), M_(M) {
  if (charges.empty())
    throw std::invalid_argument("SpeciesLattice: empty species list");
  for (double e : charges)
    if (e == 0.0)
      throw std::invalid_argument("SpeciesLattice: zero charge");
  if (M < 1)
    throw std::invalid_argument("SpeciesLattice: M >= 1 required");
  dim_ = 1;
  for (size_t i = 0; i < charges.size(); ++i) {
    dim_ *= (2L * M + 1);
    if (dim_ > 1000000)
      throw std::invalid_argument("SpeciesLattice: dimension overflow");
  }
}

int SpeciesLattice::sector(long idx, int species) const {
  long rest = idx;
  for (int s = n_species() - 1; s > species; --s)
    rest /= (2L * M_ + 1);
  return int(rest % (2L * M_ + 1)) - M_;
}

double SpeciesLattice::q_total(long idx) const {
  double q = 0;
  for (int s = 0; s < n_species(); ++s)
    q += sector(idx, s) * charges_[s];
  return q;
}

long SpeciesLattice::shifted(long idx, int species) const {
  if (sector(idx, species) >= M_)
    return -1;
  long stride = 1;
  for (int s = n_species() - 1; s > species; --s)
    stride *= (2L * M_ + 1);
  return idx + stride;
}

SpectralReport universality_check(const std::vector<double> &species_charges, int M,
                                  double tol, bool lenient_lattice) {
  const SpeciesLattice lat(species_charges, M);
  const int S = lat.n_species();
  const double e_ref = std::abs(species_charges[0]);

  SpectralReport rep;

  // spectrum of Q_total / e_ref
  std::vector<double> vals(lat.dim());
  for (long i = 0; i < lat.dim(); ++i)
    vals[i] = lat.q_total(i) / e_ref;
  rep.spectrum = distinct_sorted(vals, tol);
  const LatticeInfo li = lattice_of(rep.spectrum, tol);
  rep.lattice_ok = li.is_lattice;
  rep.spacing = li.spacing;
  rep.integer_ok = true;
  for (double v : rep.spectrum)
    if (std::abs(v - std::round(v)) > tol) {
      rep.integer_ok = false;
      break;
    }

  // species shifts: D = Q_total / e_ref, entrywise commutant ratios
  rep.unitary_ok = true;
  rep.shift_ok = true;
  std::optional<double> common_kappa;
  bool kappa_common = true;
  for (int s = 0; s < S; ++s) {
    double kappa_s = 0;
    bool seen = false;
    for (long i = 0; i < lat.dim(); ++i) {
      const long tgt = lat.shifted(i, s);
      if (tgt < 0)
        continue;
      const double ratio = (lat.q_total(tgt) - lat.q_total(i)) / e_ref;
      if (!seen) {
        kappa_s = ratio;
        seen = true;
      } else if (std::abs(ratio - kappa_s) > tol) {
        rep.shift_ok = false; // shift not proportional at all
      }
    }
    if (!seen)
      continue;
    if (std::abs(kappa_s - 1.0) > tol) {
      rep.shift_ok = false;
      if (!rep.witness)
        rep.witness = Witness{"commutant", kappa_s, 1.0, s};
    }
    if (!common_kappa)
      common_kappa = kappa_s;
    else if (std::abs(*common_kappa - kappa_s) > tol)
      kappa_common = false;
  }
  if (kappa_common)
    rep.kappa = common_kappa;

  if (!rep.lattice_ok)
    rep.witness = Witness{"lattice", li.gap_a, li.gap_b, -1};

  rep.standard_ok = rep.shift_ok && rep.integer_ok;

  // strict: common magnitude e for every species; lenient: arithmetic lattice
  double mag_min = std::abs(species_charges[0]), mag_max = mag_min;
  for (double e : species_charges) {
    mag_min = std::min(mag_min, std::abs(e));
    mag_max = std::max(mag_max, std::abs(e));
  }
  const bool charges_equal = (mag_max - mag_min) <= tol * mag_max;
  rep.universality_ok =
      lenient_lattice ? rep.lattice_ok : (charges_equal && rep.shift_ok);
  return rep;
}

} // namespace irqed::spectral
