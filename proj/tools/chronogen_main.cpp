// chronogen — command-line driver
//
//   chronogen example  [--grid START STOP POINTS] [--out DIR] [--report json]
//   chronogen verify   --config run.json [--threads N]
//   chronogen generate --config run.json --out DIR
//   chronogen readout  --config run.json

#include "chronogen/config.hpp"
#include "chronogen/errors.hpp"
#include "chronogen/runner.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

struct CliOptions {
    std::string config_path;
    std::string out_dir;
    std::vector<double> grid;
    int threads = 0;
    std::string report;
};

void add_common(CLI::App* sub, CliOptions& opts) {
    sub->add_option("--config", opts.config_path, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--out", opts.out_dir, "output directory (files are written only when set)");
    sub->add_option("--grid", opts.grid, "START STOP POINTS")->expected(3);
    sub->add_option("--threads", opts.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--report", opts.report, "report format")->check(CLI::IsMember({"text", "json"}));
}

chronogen::RunConfig load(const CliOptions& opts, chronogen::Mode mode) {
    chronogen::RunConfig config;
    if (!opts.config_path.empty()) {
        std::ifstream file(opts.config_path);
        if (!file) throw chronogen::ConfigParseError("cannot read " + opts.config_path);
        std::stringstream buffer;
        buffer << file.rdbuf();
        config = chronogen::parse_config(buffer.str(), mode);
    }
    config.mode = mode;
    if (!opts.out_dir.empty()) config.output.dir = opts.out_dir;
    if (!opts.grid.empty()) {
        const double points = opts.grid[2];
        if (!(points >= 0.0) || points != static_cast<double>(static_cast<std::size_t>(points))) {
            throw chronogen::ConfigParseError("--grid POINTS must be a non-negative integer");
        }
        config.grid = {opts.grid[0], opts.grid[1], static_cast<std::size_t>(points)};
    }
    if (opts.threads > 0) config.threads = opts.threads;
    if (opts.report == "json") config.report = chronogen::ReportFormat::json;
    if (opts.report == "text") config.report = chronogen::ReportFormat::text;
    chronogen::apply_environment(config);
    chronogen::validate_config(config);
    return config;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Relational clock dynamics: effective potentials from global eigenstates"};
    app.require_subcommand(1);
    CliOptions opts;
    std::vector<std::pair<CLI::App*, chronogen::Mode>> subs;
    for (auto mode : {chronogen::Mode::example, chronogen::Mode::verify, chronogen::Mode::generate,
                      chronogen::Mode::readout}) {
        auto* sub = app.add_subcommand(std::string(chronogen::to_string(mode)));
        add_common(sub, opts);
        subs.emplace_back(sub, mode);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : chronogen::exit_code::usage;
    }

    chronogen::Mode mode = chronogen::Mode::example;
    for (const auto& [sub, m] : subs) {
        if (sub->parsed()) mode = m;
    }

    chronogen::RunConfig config;
    try {
        config = load(opts, mode);
    } catch (const chronogen::ConfigParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return chronogen::exit_code::usage;
    } catch (const chronogen::ConfigValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return chronogen::exit_code::validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return chronogen::exit_code::internal;
    }
    return chronogen::run(config, std::cout, std::cerr);
}
