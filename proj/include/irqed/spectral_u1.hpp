#pragma once

#include "irqed/fock.hpp"

#include <optional>
#include <string>
#include <vector>

namespace irqed::spectral {

//! Witness of a failed check: an offending eigenvalue/ratio pair, plus the
//! species index when one is involved.
struct Witness {
  std::string kind; // "commutant" | "lattice" | "spectrum"
  double a = 0;
  double b = 0;
  int species = -1;
};

struct SpectralReport {
  std::vector<double> spectrum;      // distinct eigenvalues of D, sorted
  double spacing = 0;                // lattice spacing (0 when not a lattice)
  std::optional<double> kappa;       // constant in [D, V] = kappa V, when proportional
  bool unitary_ok = false;           // V isometric on the shift interior
  bool shift_ok = false;             // [D, V] = V exactly (kappa == 1)
  bool lattice_ok = false;           // spectrum is an arithmetic lattice
  bool integer_ok = false;           // spectrum contained in Z
  bool standard_ok = false;          // shift_ok && integer_ok
  std::optional<bool> universality_ok;
  std::optional<Witness> witness;
};

//! Verifies the finite-dimensional shadow of the circle spectral triple:
//! (i) V unitary on the interior charge sectors, (ii) spectrum(D) an
//! arithmetic lattice, (iii) [D, V] = kappa V with kappa the lattice ratio.
//! The standard representation corresponds to kappa = 1 and spectrum in Z.
SpectralReport spectral_triple_check(const fock::OperatorMatrix &V,
                                     const fock::OperatorMatrix &D, double tol = 1e-10);

//! Connes-style distance between charge sectors m1 and m2 for a sector-
//! diagonal D: the supremum of |f(m1) - f(m2)| over sector functions f with
//! ||[D, [V, f]]|| <= 1, i.e. per-step constraints |df_k| |dD_k| <= 1 along
//! the shift direction. Infinite (returns +inf) when D has a repeated
//! neighboring eigenvalue.
double connes_distance(const fock::OperatorMatrix &D, int m1, int m2);

//! Multi-species charge lattice: states indexed by (m_1, ..., m_S) with
//! m_i in [-M, M]; Q_total = sum_i m_i e_i, and per-species shifts V_i.
class SpeciesLattice {
public:
  SpeciesLattice(const std::vector<double> &charges, int M);

  int n_species() const { return int(charges_.size()); }
  int M() const { return M_; }
  long dim() const { return dim_; }
  double charge(int species) const { return charges_[species]; }
  //! Eigenvalue of Q_total on basis state idx.
  double q_total(long idx) const;
  int sector(long idx, int species) const;
  long shifted(long idx, int species) const; // -1 when at the window edge

private:
  std::vector<double> charges_;
  int M_;
  long dim_;
};

//! Universality of the charge unit: strict mode passes only when every
//! species charge has the common magnitude e (common spectrum e Z), and each
//! species shift obeys [D, V_i] = V_i for D = Q_total / e. The lenient
//! lattice mode accepts integer multiples of a common quantum instead.
SpectralReport universality_check(const std::vector<double> &species_charges, int M,
                                  double tol = 1e-10, bool lenient_lattice = false);

} // namespace irqed::spectral
