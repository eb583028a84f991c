// export.hpp — CSV and JSON serialization of trajectories and solvable exports
//
// CSV columns for two-level systems:
//   lambda, vs_0, vs_x, vs_y, vs_z, escript_re, escript_im, s_re, s_im,
//   n_overlap, phi_norm, infidelity_proj_vs_int
// Other system dimensions drop the vs_* columns; full V_S matrices go to JSON.
// Numbers are written with 17 significant digits.

#pragma once

#include "chronogen/readout.hpp"
#include "chronogen/scenarios.hpp"

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace chronogen {

std::string format_double(double value);

std::vector<std::string> trajectory_csv_header(Eigen::Index d_system);

void write_trajectory_csv(std::ostream& out, const PipelineResult& result);

void write_readout_csv(std::ostream& out, const ReadoutCurve& curve);

nlohmann::json complex_to_json(Complex z);
nlohmann::json vector_to_json(const CVector& v);
nlohmann::json matrix_to_json(const CMatrix& m);

// Per-point V_S matrices, ℰ, S, N and φ.
nlohmann::json potentials_to_json(const PipelineResult& result);

nlohmann::json solvable_to_json(const SolvableExport& exported);

nlohmann::json report_to_json(const ComparisonReport& report);

}  // namespace chronogen
