#pragma once

#include "irqed/classical_fields.hpp"
#include "irqed/cone_reps.hpp"
#include "irqed/fock.hpp"
#include "irqed/spectral_u1.hpp"
#include "irqed/testspaces.hpp"

#include <json.hpp>

#include <string>

namespace irqed::io {

//! Fixed 17-significant-digit formatting so reruns are byte-identical.
std::string fmt(double v);

void write_text(const std::string &path, const std::string &content);

//! columns: psi, theta, phi, re, im
std::string phase_field_csv(const fields::PhaseField &S);

//! columns: l, psi, re_f, im_f, re_fp, im_fp for every radial mode
std::string radial_modes_csv(const desitter::ModeSet &modes);

//! header rows Q, S0, residual; then l, m, re_c, im_c
std::string decomposition_csv(const fields::DecompositionResult &dec);

//! rows: scale, value components, fit residual of an extraction
nlohmann::json extraction_json(const fields::ExtractionResult &res);

//! coordinate-list export: row, col, re, im
std::string operator_csv(const fock::OperatorMatrix &op);

nlohmann::json basis_manifest(const fock::FockBasis &basis);

nlohmann::json spectral_report_json(const spectral::SpectralReport &rep);

//! columns: theta, phi, re, im
std::string cone_function_csv(const cone::ConeFunction &f);
nlohmann::json cone_function_header(const cone::ConeFunction &f);

nlohmann::json probe_json(const testspaces::ConicProbe &p);

} // namespace irqed::io
