// config.cpp — strict JSON run configuration

#include "chronogen/config.hpp"

#include "chronogen/errors.hpp"
#include "chronogen/export.hpp"
#include "chronogen/scenarios.hpp"

#include <json.hpp>

#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <initializer_list>
#include <limits>
#include <string>

namespace chronogen {

using json = nlohmann::json;

namespace {

bool same_matrix(const CMatrix& a, const CMatrix& b) {
    return a.rows() == b.rows() && a.cols() == b.cols() && (a.size() == 0 || a == b);
}

bool same_vector(const std::optional<CVector>& a, const std::optional<CVector>& b) {
    if (a.has_value() != b.has_value()) return false;
    if (!a) return true;
    return a->size() == b->size() && (a->size() == 0 || *a == *b);
}

void check_keys(const json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
    if (!obj.is_object()) throw ConfigParseError(where + ": expected an object");
    for (const auto& item : obj.items()) {
        bool known = false;
        for (const char* key : allowed) known = known || item.key() == key;
        if (!known) throw ConfigValidationError(where + ": unknown key '" + item.key() + "'");
    }
}

double get_number(const json& value, const std::string& where) {
    if (!value.is_number()) throw ConfigParseError(where + ": expected a number");
    return value.get<double>();
}

std::uint64_t get_unsigned(const json& value, const std::string& where) {
    if (value.is_number_unsigned()) return value.get<std::uint64_t>();
    if (value.is_number_integer()) {
        throw ConfigValidationError(where + ": must be non-negative");
    }
    throw ConfigParseError(where + ": expected an integer");
}

std::int64_t get_integer(const json& value, const std::string& where) {
    if (!value.is_number_integer()) throw ConfigParseError(where + ": expected an integer");
    return value.get<std::int64_t>();
}

std::string get_string(const json& value, const std::string& where) {
    if (!value.is_string()) throw ConfigParseError(where + ": expected a string");
    return value.get<std::string>();
}

Complex get_complex(const json& value, const std::string& where) {
    if (value.is_number()) return {value.get<double>(), 0.0};
    if (value.is_array() && value.size() == 2 && value[0].is_number() && value[1].is_number()) {
        return {value[0].get<double>(), value[1].get<double>()};
    }
    throw ConfigParseError(where + ": expected a complex number [re, im]");
}

CVector get_vector(const json& value, const std::string& where) {
    if (!value.is_array()) throw ConfigParseError(where + ": expected an array of complex numbers");
    CVector out(static_cast<Eigen::Index>(value.size()));
    for (std::size_t i = 0; i < value.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = get_complex(value[i], where + "[" + std::to_string(i) + "]");
    }
    return out;
}

CMatrix get_matrix(const json& value, const std::string& where) {
    if (!value.is_array() || value.empty() || !value[0].is_array()) {
        throw ConfigParseError(where + ": expected a non-empty row-major nested array");
    }
    const auto rows = static_cast<Eigen::Index>(value.size());
    const auto cols = static_cast<Eigen::Index>(value[0].size());
    CMatrix out(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i) {
        const json& row = value[static_cast<std::size_t>(i)];
        if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
            throw ConfigParseError(where + ": ragged matrix rows");
        }
        for (Eigen::Index j = 0; j < cols; ++j) {
            out(i, j) = get_complex(row[static_cast<std::size_t>(j)],
                                    where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
        }
    }
    return out;
}

void parse_spec(const json& node, SpecSource& spec) {
    check_keys(node, {"builtin", "d_system", "d_clock", "coupling", "h_system", "h_clock", "v_interaction"},
               "spec");
    const bool has_inline = node.contains("h_system") || node.contains("h_clock") ||
                            node.contains("v_interaction");
    if (has_inline) {
        if (node.contains("builtin") || node.contains("d_system") || node.contains("d_clock") ||
            node.contains("coupling")) {
            throw ConfigValidationError("spec: inline matrices cannot be combined with builtin keys");
        }
        if (!node.contains("h_system") || !node.contains("h_clock")) {
            throw ConfigValidationError("spec: inline spec needs h_system and h_clock");
        }
        spec.builtin = "inline";
        spec.h_system = get_matrix(node["h_system"], "spec.h_system");
        spec.h_clock = get_matrix(node["h_clock"], "spec.h_clock");
        if (node.contains("v_interaction")) {
            spec.v_interaction = get_matrix(node["v_interaction"], "spec.v_interaction");
        }
        return;
    }
    if (node.contains("builtin")) spec.builtin = get_string(node["builtin"], "spec.builtin");
    if (node.contains("d_system")) spec.d_system = get_integer(node["d_system"], "spec.d_system");
    if (node.contains("d_clock")) spec.d_clock = get_integer(node["d_clock"], "spec.d_clock");
    if (node.contains("coupling")) spec.coupling = get_number(node["coupling"], "spec.coupling");
}

void parse_state(const json& node, StateSelector& state) {
    check_keys(node, {"energy_index", "coefficients", "psi"}, "state");
    if (node.contains("psi")) {
        if (node.contains("energy_index") || node.contains("coefficients")) {
            throw ConfigValidationError("state: psi cannot be combined with energy_index/coefficients");
        }
        state.psi = get_vector(node["psi"], "state.psi");
        return;
    }
    if (node.contains("energy_index")) {
        state.energy_index = get_unsigned(node["energy_index"], "state.energy_index");
    }
    if (node.contains("coefficients")) {
        const CVector c = get_vector(node["coefficients"], "state.coefficients");
        state.coefficients.assign(c.data(), c.data() + c.size());
    }
}

}  // namespace

bool operator==(const RunConfig& a, const RunConfig& b) {
    const auto& sa = a.spec;
    const auto& sb = b.spec;
    const bool spec_equal = sa.builtin == sb.builtin && sa.d_system == sb.d_system &&
                            sa.d_clock == sb.d_clock && sa.coupling == sb.coupling &&
                            same_matrix(sa.h_system, sb.h_system) &&
                            same_matrix(sa.h_clock, sb.h_clock) &&
                            same_matrix(sa.v_interaction, sb.v_interaction);
    const bool state_equal = a.state.energy_index == b.state.energy_index &&
                             a.state.coefficients == b.state.coefficients &&
                             same_vector(a.state.psi, b.state.psi);
    const bool grid_equal = a.grid.start == b.grid.start && a.grid.stop == b.grid.stop &&
                            a.grid.points == b.grid.points;
    const auto& ta = a.tolerances;
    const auto& tb = b.tolerances;
    const bool tol_equal = ta.infidelity == tb.infidelity && ta.tdse_residual == tb.tdse_residual &&
                           ta.norm_drift == tb.norm_drift && ta.eigen_residual == tb.eigen_residual &&
                           ta.degeneracy == tb.degeneracy;
    const bool out_equal = a.output.dir == b.output.dir && a.output.csv == b.output.csv &&
                           a.output.json == b.output.json && a.output.report == b.output.report;
    const bool readout_equal =
        a.readout.observable.has_value() == b.readout.observable.has_value() &&
        (!a.readout.observable || same_matrix(*a.readout.observable, *b.readout.observable)) &&
        a.readout.observed_value == b.readout.observed_value;
    return a.mode == b.mode && spec_equal && state_equal && same_vector(a.chi0, b.chi0) &&
           grid_equal && tol_equal && out_equal && a.seed == b.seed && a.threads == b.threads &&
           a.report == b.report && readout_equal;
}

std::string_view to_string(Mode mode) {
    switch (mode) {
        case Mode::example: return "example";
        case Mode::verify: return "verify";
        case Mode::generate: return "generate";
        case Mode::readout: return "readout";
    }
    return "example";
}

Mode mode_from_string(std::string_view name) {
    if (name == "example") return Mode::example;
    if (name == "verify") return Mode::verify;
    if (name == "generate") return Mode::generate;
    if (name == "readout") return Mode::readout;
    throw ConfigValidationError("unknown mode '" + std::string(name) + "'");
}

RunConfig parse_config(std::string_view text, std::optional<Mode> mode_override) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ConfigParseError(std::string("malformed configuration: ") + e.what());
    }
    check_keys(doc, {"mode", "spec", "state", "chi0", "grid", "tolerances", "output", "seed",
                     "threads", "report", "readout"},
               "config");

    RunConfig config;
    if (doc.contains("mode")) config.mode = mode_from_string(get_string(doc["mode"], "mode"));
    if (doc.contains("spec")) parse_spec(doc["spec"], config.spec);
    if (doc.contains("state")) parse_state(doc["state"], config.state);
    if (doc.contains("chi0")) config.chi0 = get_vector(doc["chi0"], "chi0");
    if (doc.contains("grid")) {
        const json& g = doc["grid"];
        check_keys(g, {"start", "stop", "points"}, "grid");
        if (g.contains("start")) config.grid.start = get_number(g["start"], "grid.start");
        if (g.contains("stop")) config.grid.stop = get_number(g["stop"], "grid.stop");
        if (g.contains("points")) config.grid.points = get_unsigned(g["points"], "grid.points");
    }
    if (doc.contains("tolerances")) {
        const json& t = doc["tolerances"];
        check_keys(t, {"infidelity", "tdse_residual", "norm_drift", "eigen_residual", "degeneracy"},
                   "tolerances");
        auto& tol = config.tolerances;
        if (t.contains("infidelity")) tol.infidelity = get_number(t["infidelity"], "tolerances.infidelity");
        if (t.contains("tdse_residual")) {
            tol.tdse_residual = get_number(t["tdse_residual"], "tolerances.tdse_residual");
        }
        if (t.contains("norm_drift")) tol.norm_drift = get_number(t["norm_drift"], "tolerances.norm_drift");
        if (t.contains("eigen_residual")) {
            tol.eigen_residual = get_number(t["eigen_residual"], "tolerances.eigen_residual");
        }
        if (t.contains("degeneracy")) tol.degeneracy = get_number(t["degeneracy"], "tolerances.degeneracy");
    }
    if (doc.contains("output")) {
        const json& o = doc["output"];
        check_keys(o, {"dir", "csv", "json", "report"}, "output");
        if (o.contains("dir")) config.output.dir = get_string(o["dir"], "output.dir");
        if (o.contains("csv")) config.output.csv = get_string(o["csv"], "output.csv");
        if (o.contains("json")) config.output.json = get_string(o["json"], "output.json");
        if (o.contains("report")) config.output.report = get_string(o["report"], "output.report");
    }
    if (doc.contains("seed")) config.seed = get_unsigned(doc["seed"], "seed");
    if (doc.contains("threads")) config.threads = static_cast<int>(get_integer(doc["threads"], "threads"));
    if (doc.contains("report")) {
        const std::string format = get_string(doc["report"], "report");
        if (format == "text") {
            config.report = ReportFormat::text;
        } else if (format == "json") {
            config.report = ReportFormat::json;
        } else {
            throw ConfigValidationError("report: expected 'text' or 'json'");
        }
    }
    if (doc.contains("readout")) {
        const json& r = doc["readout"];
        check_keys(r, {"observable", "observed_value"}, "readout");
        if (r.contains("observable")) config.readout.observable = get_matrix(r["observable"], "readout.observable");
        if (r.contains("observed_value")) {
            config.readout.observed_value = get_number(r["observed_value"], "readout.observed_value");
        }
    }
    if (mode_override) config.mode = *mode_override;
    validate_config(config);
    return config;
}

void validate_config(const RunConfig& config) {
    if (config.grid.points < 2) throw ConfigValidationError("grid.points must be >= 2");
    if (!(std::isfinite(config.grid.start) && std::isfinite(config.grid.stop)) ||
        !(config.grid.stop > config.grid.start)) {
        throw ConfigValidationError("grid.stop must be greater than grid.start");
    }
    const auto& tol = config.tolerances;
    for (double t : {tol.infidelity, tol.tdse_residual, tol.norm_drift, tol.eigen_residual, tol.degeneracy}) {
        if (!(t > 0.0)) throw ConfigValidationError("tolerances must be > 0");
    }
    if (config.threads < 1) throw ConfigValidationError("threads must be >= 1");

    const auto& spec = config.spec;
    if (spec.builtin == "random") {
        if (spec.d_system < 1 || spec.d_clock < 1 || spec.d_system * spec.d_clock > kMaxDimension) {
            throw ConfigValidationError("spec: random dimensions must satisfy 1 <= d_S*d_C <= " +
                                        std::to_string(kMaxDimension));
        }
        if (!(spec.coupling >= 0.0)) throw ConfigValidationError("spec.coupling must be >= 0");
    } else if (spec.builtin != "coupled_qubits" && spec.builtin != "degenerate_free" &&
               spec.builtin != "inline") {
        throw ConfigValidationError("spec.builtin: unknown spec '" + spec.builtin + "'");
    }
    if (config.mode == Mode::example && spec.builtin != "coupled_qubits") {
        throw ConfigValidationError("example mode runs the built-in coupled_qubits spec only");
    }

    HamiltonianSpec built = [&] {
        try {
            return build_spec(config);
        } catch (const ValidationError& e) {
            throw ConfigValidationError(std::string("spec: ") + e.what());
        } catch (const CapacityError& e) {
            throw ConfigValidationError(std::string("spec: ") + e.what());
        }
    }();
    if (config.chi0 && config.chi0->size() != built.d_clock()) {
        throw ConfigValidationError("chi0 must have the clock dimension " + std::to_string(built.d_clock()));
    }
    if (config.chi0 && config.chi0->norm() == 0.0) throw ConfigValidationError("chi0 must be nonzero");
    if (config.state.psi && config.state.psi->size() != built.d_global()) {
        throw ConfigValidationError("state.psi must have the global dimension " +
                                    std::to_string(built.d_global()));
    }
    if (config.readout.observable &&
        (config.readout.observable->rows() != built.d_clock() ||
         !is_hermitian(*config.readout.observable))) {
        throw ConfigValidationError("readout.observable must be a Hermitian d_C x d_C matrix");
    }
}

HamiltonianSpec build_spec(const RunConfig& config) {
    const auto& spec = config.spec;
    if (spec.builtin == "coupled_qubits") return coupled_qubits_spec();
    if (spec.builtin == "degenerate_free") return degenerate_free_spec();
    if (spec.builtin == "random") {
        return random_spec(spec.d_system, spec.d_clock, spec.coupling, config.seed);
    }
    if (spec.builtin == "inline") {
        if (spec.v_interaction.size() == 0) return HamiltonianSpec(spec.h_system, spec.h_clock);
        return HamiltonianSpec(spec.h_system, spec.h_clock, spec.v_interaction);
    }
    throw ConfigValidationError("spec.builtin: unknown spec '" + spec.builtin + "'");
}

std::string serialize_config(const RunConfig& config) {
    json doc;
    doc["mode"] = std::string(to_string(config.mode));
    json spec;
    if (config.spec.builtin == "inline") {
        spec["h_system"] = matrix_to_json(config.spec.h_system);
        spec["h_clock"] = matrix_to_json(config.spec.h_clock);
        if (config.spec.v_interaction.size() != 0) {
            spec["v_interaction"] = matrix_to_json(config.spec.v_interaction);
        }
    } else {
        spec["builtin"] = config.spec.builtin;
        spec["d_system"] = config.spec.d_system;
        spec["d_clock"] = config.spec.d_clock;
        spec["coupling"] = config.spec.coupling;
    }
    doc["spec"] = std::move(spec);

    json state;
    if (config.state.psi) {
        state["psi"] = vector_to_json(*config.state.psi);
    } else {
        state["energy_index"] = config.state.energy_index;
        if (!config.state.coefficients.empty()) {
            const CVector c = Eigen::Map<const CVector>(config.state.coefficients.data(),
                                                        static_cast<Eigen::Index>(config.state.coefficients.size()));
            state["coefficients"] = vector_to_json(c);
        }
    }
    doc["state"] = std::move(state);
    if (config.chi0) doc["chi0"] = vector_to_json(*config.chi0);
    doc["grid"] = {{"start", config.grid.start}, {"stop", config.grid.stop}, {"points", config.grid.points}};
    const auto& tol = config.tolerances;
    doc["tolerances"] = {{"infidelity", tol.infidelity},
                         {"tdse_residual", tol.tdse_residual},
                         {"norm_drift", tol.norm_drift},
                         {"eigen_residual", tol.eigen_residual},
                         {"degeneracy", tol.degeneracy}};
    doc["output"] = {{"dir", config.output.dir},
                     {"csv", config.output.csv},
                     {"json", config.output.json},
                     {"report", config.output.report}};
    doc["seed"] = config.seed;
    doc["threads"] = config.threads;
    doc["report"] = config.report == ReportFormat::json ? "json" : "text";
    json readout = json::object();
    if (config.readout.observable) readout["observable"] = matrix_to_json(*config.readout.observable);
    if (config.readout.observed_value) readout["observed_value"] = *config.readout.observed_value;
    doc["readout"] = std::move(readout);
    return doc.dump(2) + "\n";
}

void apply_environment(RunConfig& config) {
    const char* value = std::getenv("CHRONOGEN_SEED");
    if (value == nullptr || *value == '\0') return;
    char* end = nullptr;
    errno = 0;
    const unsigned long long seed = std::strtoull(value, &end, 10);
    if (errno != 0 || end == value || *end != '\0' || value[0] == '-') {
        throw ConfigValidationError("CHRONOGEN_SEED must be a non-negative integer");
    }
    config.seed = seed;
}

}  // namespace chronogen
