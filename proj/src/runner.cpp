// runner.cpp — mode dispatch, checks, file output and exit-code mapping

#include "chronogen/runner.hpp"

#include "chronogen/errors.hpp"
#include "chronogen/export.hpp"
#include "chronogen/readout.hpp"
#include "chronogen/scenarios.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace chronogen {

using json = nlohmann::json;

namespace {

struct Check {
    std::string name;
    double value;
    double threshold;
    bool pass() const { return std::isfinite(value) && value <= threshold; }
};

json checks_to_json(const std::vector<Check>& checks) {
    json out = json::array();
    for (const auto& c : checks) {
        out.push_back({{"name", c.name}, {"value", c.value}, {"threshold", c.threshold}, {"pass", c.pass()}});
    }
    return out;
}

bool all_pass(const std::vector<Check>& checks) {
    for (const auto& c : checks) {
        if (!c.pass()) return false;
    }
    return true;
}

std::vector<Check> pipeline_checks(const PipelineResult& result, const Tolerances& tol) {
    return {{"max_infidelity", result.report.max_infidelity, tol.infidelity},
            {"max_tdse_residual", result.report.max_tdse_residual,
             tol.tdse_residual * result.generator_norm},
            {"max_norm_drift", result.report.max_norm_drift, tol.norm_drift},
            {"eigen_residual", result.state.residual, tol.eigen_residual}};
}

PipelineOptions pipeline_options(const RunConfig& config) {
    PipelineOptions options;
    options.threads = config.threads;
    return options;
}

std::vector<double> grid_of(const RunConfig& config) {
    return uniform_grid(config.grid.start, config.grid.stop, config.grid.points);
}

// Opens <dir>/<name> for writing; empty dir means "no files".
template <typename Writer>
void write_file(const OutputConfig& output, const std::string& name, Writer&& writer) {
    if (output.dir.empty()) return;
    const std::filesystem::path dir(output.dir);
    std::filesystem::create_directories(dir);
    std::ofstream file(dir / name, std::ios::binary);
    if (!file) throw Error("cannot open " + (dir / name).string() + " for writing");
    writer(file);
    if (!file) throw Error("failed writing " + (dir / name).string());
}

void write_json(const OutputConfig& output, const std::string& name, const json& doc) {
    write_file(output, name, [&](std::ostream& out) { out << doc.dump(2) << '\n'; });
}

std::string summary_line(std::string_view mode, bool ok, const ComparisonReport& report) {
    std::ostringstream line;
    line << mode << ": " << (ok ? "PASS" : "FAIL") << " max_infidelity=" << format_double(report.max_infidelity)
         << " max_tdse_residual=" << format_double(report.max_tdse_residual)
         << " max_norm_drift=" << format_double(report.max_norm_drift);
    return line.str();
}

json pipeline_json(const PipelineResult& result) {
    return {{"energy", result.state.energy},
            {"eigen_residual", result.state.residual},
            {"comparison", report_to_json(result.report)},
            {"generator_norm", result.generator_norm},
            {"max_decomposition_residual", result.max_decomposition_residual},
            {"max_hermiticity_defect", result.max_hermiticity_defect},
            {"grid_points", result.clock.lambda_grid.size()}};
}

RunOutcome run_example(const RunConfig& config) {
    const CoupledQubitsRun run = run_coupled_qubits_example(grid_of(config), pipeline_options(config));
    auto checks = pipeline_checks(run.pipeline, config.tolerances);
    checks.push_back({"closed_form_max_infidelity", run.projected_vs_closed_form.max_infidelity,
                      config.tolerances.infidelity});
    const bool ok = all_pass(checks);

    write_file(config.output, config.output.csv,
               [&](std::ostream& out) { write_trajectory_csv(out, run.pipeline); });

    RunOutcome outcome;
    outcome.exit_code = ok ? exit_code::ok : exit_code::verification;
    outcome.summary = summary_line("example", ok, run.pipeline.report);
    outcome.report = pipeline_json(run.pipeline);
    outcome.report["checks"] = checks_to_json(checks);
    outcome.report["closed_form"] = {
        {"max_infidelity", run.projected_vs_closed_form.max_infidelity},
        {"max_vs_xz_deviation", run.max_vs_xz_deviation},
        {"max_vs_y_deviation", run.max_vs_y_deviation},
        {"max_vs_y_decomposition_deviation", run.max_vs_y_decomposition_deviation},
        {"psi_fit_residual", run.psi_fit_residual}};
    return outcome;
}

RunOutcome run_verify(const RunConfig& config) {
    const HamiltonianSpec spec = build_spec(config);
    const GlobalEigenstate state = resolve_state(config, spec);
    const PipelineResult result =
        run_pipeline(spec, state, resolve_chi0(config, spec), grid_of(config), pipeline_options(config));
    const auto checks = pipeline_checks(result, config.tolerances);
    const bool ok = all_pass(checks);

    write_file(config.output, config.output.csv,
               [&](std::ostream& out) { write_trajectory_csv(out, result); });
    if (spec.d_system() != 2) write_json(config.output, config.output.json, potentials_to_json(result));

    RunOutcome outcome;
    outcome.exit_code = ok ? exit_code::ok : exit_code::verification;
    outcome.summary = summary_line("verify", ok, result.report);
    outcome.report = pipeline_json(result);
    outcome.report["checks"] = checks_to_json(checks);
    return outcome;
}

RunOutcome run_generate(const RunConfig& config) {
    const HamiltonianSpec spec = build_spec(config);
    const GlobalEigenstate state = resolve_state(config, spec);
    if (!(state.residual <= config.tolerances.eigen_residual)) {
        throw VerificationError("generate: state is not an eigenstate (residual " +
                                format_double(state.residual) + ")");
    }
    const PipelineResult result =
        run_pipeline(spec, state, resolve_chi0(config, spec), grid_of(config), pipeline_options(config));
    const auto& tol = config.tolerances;
    const SolvableExport exported =
        package_solvable(spec, result, VerificationThresholds{tol.tdse_residual, tol.infidelity, tol.norm_drift});

    write_file(config.output, config.output.csv,
               [&](std::ostream& out) { write_trajectory_csv(out, result); });
    write_json(config.output, config.output.json, solvable_to_json(exported));

    RunOutcome outcome;
    outcome.summary = summary_line("generate", true, result.report);
    outcome.report = pipeline_json(result);
    outcome.report["checks"] = checks_to_json(pipeline_checks(result, tol));
    outcome.report["verified"] = exported.metadata.verified;
    return outcome;
}

RunOutcome run_readout(const RunConfig& config) {
    const HamiltonianSpec spec = build_spec(config);
    CMatrix observable;
    if (config.readout.observable) {
        observable = *config.readout.observable;
    } else if (spec.d_clock() == 2) {
        observable = pauli(Axis::x);
    } else {
        throw ConfigValidationError("readout.observable is required when d_C != 2");
    }
    const GlobalEigenstate state = resolve_state(config, spec);
    const CVector chi0 = resolve_chi0(config, spec);
    const ClockTrajectory clock =
        evolve_clock_on_grid(chi0, spec.h_clock(), state.energy, grid_of(config), config.threads);
    const ReadoutCurve curve = expectation_curve(observable, clock);
    const ResolutionSpectrum spectrum = resolution_spectrum(chi0, spec.h_clock());
    const bool monotone = is_strictly_monotone(curve);

    write_file(config.output, config.output.csv, [&](std::ostream& out) { write_readout_csv(out, curve); });

    RunOutcome outcome;
    outcome.report = {{"monotone", monotone},
                      {"participation_ratio", spectrum.participation_ratio},
                      {"coefficients", vector_to_json(spectrum.coefficients)},
                      {"grid_points", curve.values.size()}};
    std::ostringstream line;
    line << "readout: PASS participation_ratio=" << format_double(spectrum.participation_ratio)
         << " monotone=" << (monotone ? "true" : "false");
    if (config.readout.observed_value) {
        const double lambda = invert_readout(curve, *config.readout.observed_value);
        outcome.report["inverted_lambda"] = lambda;
        line << " lambda=" << format_double(lambda);
    }
    outcome.summary = line.str();
    return outcome;
}

RunOutcome failure(int code, std::string_view mode, const std::string& message) {
    RunOutcome outcome;
    outcome.exit_code = code;
    outcome.summary = std::string(mode) + ": FAIL " + message;
    outcome.report = {{"error", message}};
    return outcome;
}

}  // namespace

GlobalEigenstate resolve_state(const RunConfig& config, const HamiltonianSpec& spec) {
    const CMatrix h = assemble_global(spec);
    const auto& selector = config.state;
    if (selector.psi) {
        const CVector& psi = *selector.psi;
        const double norm2 = psi.squaredNorm();
        if (norm2 == 0.0) throw ConfigValidationError("state.psi must be nonzero");
        const double energy = psi.dot(h * psi).real() / norm2;
        return make_eigenstate(h, psi, energy);
    }
    const bool defaulted = selector.energy_index == 0 && selector.coefficients.empty();
    if (defaulted && config.spec.builtin == "coupled_qubits") return coupled_qubits_state();

    const auto spaces = eigenspaces(h, config.tolerances.degeneracy * max_abs(h));
    if (selector.energy_index >= spaces.size()) {
        throw ConfigValidationError("state.energy_index " + std::to_string(selector.energy_index) +
                                    " out of range (" + std::to_string(spaces.size()) + " eigenspaces)");
    }
    const Eigenspace& space = spaces[selector.energy_index];
    std::vector<Complex> coefficients = selector.coefficients;
    if (coefficients.empty()) {
        coefficients.assign(static_cast<std::size_t>(space.multiplicity), Complex(0.0));
        coefficients.front() = 1.0;
    }
    if (static_cast<Eigen::Index>(coefficients.size()) != space.multiplicity) {
        throw ConfigValidationError("state.coefficients: eigenspace " + std::to_string(selector.energy_index) +
                                    " has multiplicity " + std::to_string(space.multiplicity));
    }
    try {
        return select_state(h, space, coefficients);
    } catch (const ValidationError& e) {
        throw ConfigValidationError(std::string("state: ") + e.what());
    }
}

CVector resolve_chi0(const RunConfig& config, const HamiltonianSpec& spec) {
    if (config.chi0) return *config.chi0;
    const auto& builtin = config.spec.builtin;
    if (builtin == "coupled_qubits") return CoupledQubitsReference::chi0();
    if (builtin == "random") return random_state(spec.d_clock(), config.seed + 1);
    return CVector::Constant(spec.d_clock(), 1.0 / std::sqrt(static_cast<double>(spec.d_clock())));
}

RunOutcome execute(const RunConfig& config) {
    const std::string_view mode = to_string(config.mode);
    RunOutcome outcome;
    try {
        validate_config(config);
        switch (config.mode) {
            case Mode::example: outcome = run_example(config); break;
            case Mode::verify: outcome = run_verify(config); break;
            case Mode::generate: outcome = run_generate(config); break;
            case Mode::readout: outcome = run_readout(config); break;
        }
    } catch (const SingularOverlapError& e) {
        outcome = failure(exit_code::singular_overlap, mode, e.what());
        outcome.report["lambda"] = e.lambda();
    } catch (const VerificationError& e) {
        outcome = failure(exit_code::verification, mode, e.what());
    } catch (const ReadoutUnusableError& e) {
        outcome = failure(exit_code::verification, mode, e.what());
    } catch (const RangeError& e) {
        outcome = failure(exit_code::verification, mode, e.what());
    } catch (const ConfigParseError& e) {
        outcome = failure(exit_code::usage, mode, e.what());
    } catch (const ConfigValidationError& e) {
        outcome = failure(exit_code::validation, mode, e.what());
    } catch (const std::exception& e) {
        outcome = failure(exit_code::internal, mode, e.what());
    }
    outcome.report["mode"] = std::string(mode);
    outcome.report["exit_code"] = outcome.exit_code;
    outcome.report["status"] = outcome.exit_code == exit_code::ok ? "pass" : "fail";
    outcome.report["summary"] = outcome.summary;
    if (outcome.exit_code == exit_code::ok || outcome.exit_code == exit_code::verification) {
        try {
            write_json(config.output, config.output.report, outcome.report);
        } catch (const std::exception& e) {
            return failure(exit_code::internal, mode, e.what());
        }
    }
    return outcome;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    const RunOutcome outcome = execute(config);
    if (config.report == ReportFormat::json) {
        out << outcome.report.dump(2) << '\n';
    } else {
        out << outcome.summary << '\n';
    }
    if (outcome.exit_code != exit_code::ok && outcome.report.contains("error")) {
        err << "error: " << outcome.report["error"].get<std::string>() << '\n';
    }
    return outcome.exit_code;
}

}  // namespace chronogen
