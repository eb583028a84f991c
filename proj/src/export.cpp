// export.cpp — CSV / JSON writers

#include "chronogen/export.hpp"

#include "chronogen/errors.hpp"

#include <cstdio>

namespace chronogen {

using json = nlohmann::json;

std::string format_double(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::vector<std::string> trajectory_csv_header(Eigen::Index d_system) {
    std::vector<std::string> header{"lambda"};
    if (d_system == 2) header.insert(header.end(), {"vs_0", "vs_x", "vs_y", "vs_z"});
    header.insert(header.end(), {"escript_re", "escript_im", "s_re", "s_im", "n_overlap", "phi_norm",
                                 "infidelity_proj_vs_int"});
    return header;
}

void write_trajectory_csv(std::ostream& out, const PipelineResult& result) {
    const auto& clock = result.clock;
    const std::size_t n = clock.lambda_grid.size();
    if (result.samples.size() != n || result.projected.states.size() != n ||
        result.integrated.states.size() != n || clock.s_phase.size() != n) {
        throw GridMismatchError("write_trajectory_csv: inconsistent pipeline result");
    }
    const Eigen::Index d_system = n == 0 ? 0 : result.projected.states.front().size();
    const auto header = trajectory_csv_header(d_system);
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (std::size_t k = 0; k < n; ++k) {
        const auto& sample = result.samples[k];
        std::vector<double> row{clock.lambda_grid[k]};
        if (d_system == 2) {
            const PauliComponents c = pauli_components(sample.v_s);
            row.insert(row.end(), {c.v0, c.vx, c.vy, c.vz});
        }
        row.insert(row.end(), {sample.e_script.real(), sample.e_script.imag(), clock.s_phase[k].real(),
                               clock.s_phase[k].imag(), sample.overlap_n,
                               result.projected.states[k].norm(),
                               infidelity(result.projected.states[k], result.integrated.states[k])});
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_double(row[i]);
        out << '\n';
    }
}

void write_readout_csv(std::ostream& out, const ReadoutCurve& curve) {
    out << "lambda,value\n";
    for (std::size_t k = 0; k < curve.values.size(); ++k) {
        out << format_double(curve.lambda_grid[k]) << ',' << format_double(curve.values[k]) << '\n';
    }
}

json complex_to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json vector_to_json(const CVector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(complex_to_json(v(i)));
    return out;
}

json matrix_to_json(const CMatrix& m) {
    json out = json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
        out.push_back(std::move(row));
    }
    return out;
}

json potentials_to_json(const PipelineResult& result) {
    json records = json::array();
    for (std::size_t k = 0; k < result.samples.size(); ++k) {
        const auto& sample = result.samples[k];
        records.push_back({{"lambda", sample.lambda},
                           {"v_s", matrix_to_json(sample.v_s)},
                           {"escript", complex_to_json(sample.e_script)},
                           {"s", complex_to_json(result.clock.s_phase.at(k))},
                           {"n_overlap", sample.overlap_n},
                           {"phi", vector_to_json(result.projected.states.at(k))}});
    }
    return {{"energy", result.state.energy},
            {"psi", vector_to_json(result.state.psi)},
            {"chi0", vector_to_json(result.chi0)},
            {"records", std::move(records)}};
}

json report_to_json(const ComparisonReport& report) {
    return {{"max_infidelity", report.max_infidelity},
            {"max_tdse_residual", report.max_tdse_residual},
            {"max_norm_drift", report.max_norm_drift}};
}

json solvable_to_json(const SolvableExport& exported) {
    const auto& meta = exported.metadata;
    json records = json::array();
    for (const auto& r : exported.records) {
        records.push_back({{"lambda", r.lambda},
                           {"v_s", matrix_to_json(r.v_s)},
                           {"escript", complex_to_json(r.e_script)},
                           {"s", complex_to_json(r.s_phase)},
                           {"n_overlap", r.overlap_n},
                           {"phi", vector_to_json(r.phi)},
                           {"infidelity_proj_vs_int", r.infidelity}});
    }
    json metadata = {
        {"spec",
         {{"h_system", matrix_to_json(meta.spec.h_system())},
          {"h_clock", matrix_to_json(meta.spec.h_clock())},
          {"v_interaction", matrix_to_json(meta.spec.v_interaction())}}},
        {"psi", vector_to_json(meta.psi)},
        {"chi0", vector_to_json(meta.chi0)},
        {"energy", meta.energy},
        {"eigen_residual", meta.eigen_residual},
        {"grid", {{"start", meta.grid_start}, {"stop", meta.grid_stop}, {"points", meta.grid_points}}},
        {"verification",
         {{"verified", meta.verified},
          {"report", report_to_json(meta.report)},
          {"generator_norm", meta.generator_norm},
          {"thresholds",
           {{"tdse_relative", meta.thresholds.tdse_relative},
            {"infidelity", meta.thresholds.infidelity},
            {"norm_drift", meta.thresholds.norm_drift}}}}}};
    return {{"metadata", std::move(metadata)}, {"records", std::move(records)}};
}

}  // namespace chronogen
