#include "irqed/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace irqed::io {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_text(const std::string &path, const std::string &content) {
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw std::runtime_error("write_text: cannot open " + path);
  out << content;
}

std::string phase_field_csv(const fields::PhaseField &S) {
  std::ostringstream os;
  os << "psi,theta,phi,re,im\n";
  for (int i = 0; i < S.psi.n; ++i)
    for (int j = 0; j < S.grid->n_theta(); ++j)
      for (int k = 0; k < S.grid->n_phi(); ++k)
        os << fmt(S.psi.node(i)) << "," << fmt(S.grid->theta(j)) << ","
           << fmt(S.grid->phi(k)) << "," << fmt(S.v[S.index(i, S.grid->index(j, k))])
           << ",0\n";
  return os.str();
}

std::string radial_modes_csv(const desitter::ModeSet &modes) {
  std::ostringstream os;
  os << "l,psi,re_f,im_f,re_fp,im_fp\n";
  for (int l = 1; l <= modes.l_max(); ++l) {
    const auto &r = modes.radial(l);
    for (int i = 0; i < r.grid.n; ++i)
      os << l << "," << fmt(r.grid.node(i)) << "," << fmt(r.f[i].real()) << ","
         << fmt(r.f[i].imag()) << "," << fmt(r.fp[i].real()) << ","
         << fmt(r.fp[i].imag()) << "\n";
  }
  return os.str();
}

std::string decomposition_csv(const fields::DecompositionResult &dec) {
  std::ostringstream os;
  os << "Q," << fmt(dec.Q) << "\n";
  os << "S0," << fmt(dec.S0) << "\n";
  os << "residual," << fmt(dec.residual) << "\n";
  os << "l,m,re_c,im_c\n";
  for (const auto &[lm, c] : dec.c)
    os << lm.first << "," << lm.second << "," << fmt(c.real()) << "," << fmt(c.imag())
       << "\n";
  return os.str();
}

nlohmann::json extraction_json(const fields::ExtractionResult &res) {
  nlohmann::json fits = nlohmann::json::array();
  for (const auto &s : res.trace)
    fits.push_back({{"scale", s.scale},
                    {"value",
                     {s.rescaled_value.t, s.rescaled_value.x, s.rescaled_value.y,
                      s.rescaled_value.z}},
                    {"fit_residual", res.fit_residual}});
  return {{"value", {res.value.t, res.value.x, res.value.y, res.value.z}},
          {"converged", res.converged},
          {"fit_residual", res.fit_residual},
          {"measured_chi", res.measured_chi},
          {"fits", fits}};
}

std::string operator_csv(const fock::OperatorMatrix &op) {
  std::ostringstream os;
  os << "row,col,re,im\n";
  for (int k = 0; k < op.mat.outerSize(); ++k)
    for (fock::SparseOp::InnerIterator it(op.mat, k); it; ++it)
      os << it.row() << "," << it.col() << "," << fmt(it.value().real()) << ","
         << fmt(it.value().imag()) << "\n";
  return os.str();
}

nlohmann::json basis_manifest(const fock::FockBasis &basis) {
  nlohmann::json modes = nlohmann::json::array();
  for (const auto &[l, m] : basis.modes)
    modes.push_back({l, m});
  return {{"M", basis.M},
          {"l_max", basis.l_max},
          {"n_max", basis.n_max},
          {"charge_step", basis.charge_step},
          {"modes", modes},
          {"boson_dim", basis.boson_dim},
          {"dim", basis.dim},
          {"ordering", "charge-major, lexicographic occupations"}};
}

nlohmann::json spectral_report_json(const spectral::SpectralReport &rep) {
  nlohmann::json j;
  j["spectrum"] = rep.spectrum;
  j["spacing"] = rep.spacing;
  if (rep.kappa)
    j["kappa"] = *rep.kappa;
  j["checks"] = {{"unitary_ok", rep.unitary_ok},
                 {"shift_ok", rep.shift_ok},
                 {"lattice_ok", rep.lattice_ok},
                 {"integer_ok", rep.integer_ok},
                 {"standard_ok", rep.standard_ok}};
  if (rep.universality_ok)
    j["checks"]["universality_ok"] = *rep.universality_ok;
  if (rep.witness)
    j["witness"] = {{"kind", rep.witness->kind},
                    {"a", rep.witness->a},
                    {"b", rep.witness->b},
                    {"species", rep.witness->species}};
  return j;
}

std::string cone_function_csv(const cone::ConeFunction &f) {
  std::ostringstream os;
  os << "theta,phi,re,im\n";
  for (int j = 0; j < f.grid->n_theta(); ++j)
    for (int k = 0; k < f.grid->n_phi(); ++k)
      os << fmt(f.grid->theta(j)) << "," << fmt(f.grid->phi(k)) << ","
         << fmt(f.at(j, k).real()) << "," << fmt(f.at(j, k).imag()) << "\n";
  return os.str();
}

nlohmann::json cone_function_header(const cone::ConeFunction &f) {
  return {{"chi_re", f.chi.real()},
          {"chi_im", f.chi.imag()},
          {"grid", {{"n_theta", f.grid->n_theta()}, {"n_phi", f.grid->n_phi()}}}};
}

nlohmann::json probe_json(const testspaces::ConicProbe &p) {
  return {{"type", "conic_s0"},
          {"params",
           {{"a", p.a},
            {"xi_center", p.xi_center},
            {"xi_width", p.xi_width},
            {"region",
             p.region == testspaces::ConicProbe::Region::inside_cone ? "inside_cone"
                                                                     : "outside_cone"}}}};
}

} // namespace irqed::io
