#include "chronogen/config.hpp"
#include "chronogen/errors.hpp"
#include "chronogen/runner.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

using namespace chronogen;

TEST_SUITE("config") {

TEST_CASE("minimal config fills defaults") {
    const RunConfig c = parse_config(R"({"mode": "example"})");
    CHECK(c.mode == Mode::example);
    CHECK(c.grid.start == 0.0);
    CHECK(c.grid.stop == doctest::Approx(2.0 * std::numbers::pi));
    CHECK(c.grid.points == 2001);
    CHECK(c.spec.builtin == "coupled_qubits");
    CHECK(c.tolerances.infidelity == 1e-7);
}

TEST_CASE("rejections") {
    CHECK_THROWS_AS(parse_config(R"({"grid": {"points": 1}})"), ConfigValidationError);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"start": 1, "stop": 0}})"), ConfigValidationError);
    CHECK_THROWS_AS(parse_config(R"({"tolerances": {"infidelity": 0}})"), ConfigValidationError);
    CHECK_THROWS_AS(parse_config(R"({"unknown": 1})"), ConfigValidationError);
    CHECK_THROWS_AS(parse_config(R"({"mode": "example", )"), ConfigParseError);
    CHECK_THROWS_AS(parse_config(R"({"grid": {"points": "many"}})"), ConfigParseError);
    CHECK_THROWS_AS(parse_config(R"({"mode": "verify", "spec": {"builtin": "nope"}})"), ConfigValidationError);
    CHECK_THROWS_AS(parse_config(R"({"mode": "example", "spec": {"builtin": "random"}})"), ConfigValidationError);
    CHECK_THROWS_AS(parse_config(R"({"mode": "verify", "spec": {"h_system": [[1, 2], [0, 1]], "h_clock": [[1]]}})"),
                    ConfigValidationError);
    CHECK_THROWS_AS(parse_config(R"({"mode": "verify", "chi0": [1, 0, 0]})"), ConfigValidationError);
}

TEST_CASE("inline coupled-qubit spec round-trips") {
    const char* text = R"({
      "mode": "verify",
      "spec": {
        "h_system": [[0, 0], [0, 0]],
        "h_clock": [[1, 0], [0, -1]],
        "v_interaction": [[1, 1, 0, 1], [1, -1, 1, 0], [0, 1, -1, -1], [1, 0, -1, 1]]
      },
      "state": {"energy_index": 0, "coefficients": [[1, 0], [0, 0.5]]},
      "chi0": [[0.5, 0], [0.5, 0]],
      "grid": {"start": 0, "stop": 3.0, "points": 301},
      "tolerances": {"infidelity": 1e-6},
      "seed": 12,
      "threads": 2,
      "readout": {"observed_value": 0.25}
    })";
    const RunConfig a = parse_config(text);
    CHECK(a.spec.builtin == "inline");
    CHECK(a.state.coefficients.size() == 2);
    CHECK(a.state.coefficients[1] == Complex(0.0, 0.5));
    const RunConfig b = parse_config(serialize_config(a));
    CHECK(a == b);
    CHECK(serialize_config(a) == serialize_config(b));
}

TEST_CASE("builtin round-trip and environment seed") {
    RunConfig a;
    a.mode = Mode::generate;
    a.spec.builtin = "random";
    a.spec.d_system = 3;
    a.spec.d_clock = 5;
    a.spec.coupling = 0.25;
    a.seed = 99;
    a.readout.observable = CMatrix::Identity(5, 5);
    CHECK(parse_config(serialize_config(a)) == a);

    setenv("CHRONOGEN_SEED", "1234", 1);
    apply_environment(a);
    CHECK(a.seed == 1234);
    setenv("CHRONOGEN_SEED", "-4", 1);
    CHECK_THROWS_AS(apply_environment(a), ConfigValidationError);
    unsetenv("CHRONOGEN_SEED");
}

TEST_CASE("execute maps outcomes to exit codes") {
    RunConfig c;
    c.mode = Mode::verify;
    CHECK(execute(c).exit_code == exit_code::ok);

    c.tolerances.infidelity = 1e-15;
    c.grid.points = 51;
    const RunOutcome strict = execute(c);
    CHECK(strict.exit_code == exit_code::verification);
    CHECK(strict.report["status"] == "fail");

    RunConfig singular;
    singular.mode = Mode::generate;
    singular.spec.builtin = "degenerate_free";
    singular.state.psi = CVector::Unit(4, 0);
    singular.chi0 = CVector::Unit(2, 1);
    const RunOutcome s = execute(singular);
    CHECK(s.exit_code == exit_code::singular_overlap);
    CHECK(s.report["lambda"] == 0.0);

    RunConfig bad;
    bad.grid.points = 1;
    CHECK(execute(bad).exit_code == exit_code::validation);
}

TEST_CASE("state resolution") {
    RunConfig c;
    c.mode = Mode::verify;
    c.spec.builtin = "degenerate_free";
    c.state.energy_index = 1;
    const double r = 1.0 / std::sqrt(2.0);
    c.state.coefficients = {r, r};
    const HamiltonianSpec spec = build_spec(c);
    const GlobalEigenstate s = resolve_state(c, spec);
    CHECK(s.energy == doctest::Approx(0.0));
    CHECK(s.residual <= 1e-14);

    c.state.energy_index = 7;
    CHECK_THROWS_AS(resolve_state(c, spec), ConfigValidationError);
    c.state.energy_index = 1;
    c.state.coefficients = {1.0};
    CHECK_THROWS_AS(resolve_state(c, spec), ConfigValidationError);
}

TEST_CASE("readout mode") {
    RunConfig c;
    c.mode = Mode::readout;
    c.grid = {0.0, std::numbers::pi / 2, 101};
    c.readout.observed_value = 0.0;
    const RunOutcome ok = execute(c);
    CHECK(ok.exit_code == exit_code::ok);
    CHECK(ok.report["inverted_lambda"].get<double>() == doctest::Approx(std::numbers::pi / 4).epsilon(1e-3));

    c.grid = {0.0, std::numbers::pi, 101};
    CHECK(execute(c).exit_code == exit_code::verification);
}

TEST_CASE("run prints a summary line or a json report") {
    RunConfig c;
    c.grid.points = 1001;
    std::ostringstream out, err;
    CHECK(run(c, out, err) == 0);
    CHECK(out.str().rfind("example: PASS", 0) == 0);
    c.report = ReportFormat::json;
    std::ostringstream jout;
    CHECK(run(c, jout, err) == 0);
    CHECK(nlohmann::json::parse(jout.str())["status"] == "pass");
}

}  // TEST_SUITE
