// pipeclimb command line: run scenarios, compare drive modes, list the
// elbow catalog.

#include "pipeclimb/analysis.hpp"
#include "pipeclimb/scenario.hpp"
#include "pipeclimb/trace_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

namespace {

using namespace pipeclimb;

std::filesystem::path trace_path(const std::filesystem::path& dir, const std::string& name,
                                 DriveMode mode, TraceFormat format) {
    const std::string ext = format == TraceFormat::Csv ? ".csv" : ".jsonl";
    return dir / (name + "_" + drive_mode_name(mode) + ext);
}

struct RunResult {
    Trace trace;
    SummaryReport summary;
};

RunResult execute(const Scenario& scenario, DriveMode mode) {
    RunResult result;
    result.trace = run_scenario(scenario.network, scenario.robot, mode, scenario.run.dt,
                                scenario.run.sample_every, scenario.run.roll_angle,
                                scenario.run.time_cap);
    result.summary = summarize(result.trace, scenario.network);
    return result;
}

int cmd_run(const Scenario& scenario, DriveMode mode, const std::filesystem::path& out_dir,
            TraceFormat format) {
    const RunResult result = execute(scenario, mode);

    std::filesystem::create_directories(out_dir);
    const auto tpath = trace_path(out_dir, scenario.name, mode, format);
    export_trace(result.trace, format, tpath);

    const std::string summary_text =
        format_summary(result.summary, scenario.name, drive_mode_name(mode));
    const auto spath = out_dir / (scenario.name + "_" + drive_mode_name(mode) + "_summary.txt");
    std::ofstream summary_file(spath);
    if (!summary_file) {
        throw std::runtime_error("cannot write summary: " + spath.string());
    }
    summary_file << summary_text;

    std::cout << summary_text;
    std::cout << "trace: " << tpath.string() << "\n";
    if (!result.trace.complete) {
        std::cerr << "warning: run hit the time cap before completing\n";
        return 1;
    }
    return 0;
}

int cmd_compare(const Scenario& scenario, const std::optional<std::filesystem::path>& out_dir,
                TraceFormat format) {
    const RunResult diff = execute(scenario, DriveMode::Differential);
    const RunResult rigid = execute(scenario, DriveMode::RigidDrive);

    std::cout << "scenario: " << scenario.name << "\n";
    std::cout << "per-track slip distance (mm):\n";
    std::cout << "track   differential    rigid\n";
    static const char* kTrack[3] = {"A", "B", "C"};
    for (std::size_t i = 0; i < 3; ++i) {
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%-7s %-15.6g %-15.6g\n", kTrack[i],
                      diff.summary.slip_distance[i], rigid.summary.slip_distance[i]);
        std::cout << buf;
    }
    char buf[128];
    std::snprintf(buf, sizeof(buf), "APE%% (worst track): differential %.3e, rigid %.3e\n",
                  std::max({diff.summary.track_ape[0], diff.summary.track_ape[1],
                            diff.summary.track_ape[2]}),
                  std::max({rigid.summary.track_ape[0], rigid.summary.track_ape[1],
                            rigid.summary.track_ape[2]}));
    std::cout << buf;

    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        export_trace(diff.trace, format,
                     trace_path(*out_dir, scenario.name, DriveMode::Differential, format));
        export_trace(rigid.trace, format,
                     trace_path(*out_dir, scenario.name, DriveMode::RigidDrive, format));
    }
    return diff.trace.complete && rigid.trace.complete ? 0 : 1;
}

int cmd_catalog() {
    std::cout << "size    inner_radius_mm  elbow_bend_radius_mm\n";
    for (const auto& key : elbow_catalog_keys()) {
        const ElbowSpec spec = elbow_catalog(key);
        char buf[96];
        std::snprintf(buf, sizeof(buf), "%-7s %-16.6g %-16.6g\n", key.c_str(),
                      spec.inner_radius, spec.bend_radius);
        std::cout << buf;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quasi-static in-pipe climbing robot simulator"};
    app.require_subcommand(1);

    std::string scenario_file;
    std::string mode_name;
    std::string format_name;
    std::string out_dir;
    double dt_override = 0.0;

    CLI::App* run = app.add_subcommand("run", "Run one scenario and write trace + summary");
    run->add_option("--scenario", scenario_file, "Scenario file")->required();
    run->add_option("--mode", mode_name, "differential|rigid (default: scenario)");
    CLI::Option* run_dt = run->add_option("--dt", dt_override, "Override time step, seconds")
                              ->check(CLI::PositiveNumber);
    run->add_option("--out", out_dir, "Output directory (default: scenario)");
    run->add_option("--format", format_name, "csv|jsonl (default: scenario)");

    CLI::App* compare =
        app.add_subcommand("compare", "Run both drive modes and report slip side by side");
    compare->add_option("--scenario", scenario_file, "Scenario file")->required();
    CLI::Option* compare_dt = compare->add_option("--dt", dt_override,
                                                  "Override time step, seconds")
                                  ->check(CLI::PositiveNumber);
    compare->add_option("--out", out_dir, "Also write both traces to this directory");

    CLI::App* catalog = app.add_subcommand("catalog", "List the shipped pipe sizes");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help() << "\n";
        return 2;
    }

    try {
        if (catalog->parsed()) {
            return cmd_catalog();
        }
        Scenario scenario = load_scenario(scenario_file);
        if ((run->parsed() && run_dt->count() > 0) ||
            (compare->parsed() && compare_dt->count() > 0)) {
            scenario.run.dt = dt_override;
        }
        TraceFormat format = scenario.run.format;
        if (!format_name.empty()) {
            if (format_name == "csv") {
                format = TraceFormat::Csv;
            } else if (format_name == "jsonl") {
                format = TraceFormat::JsonLines;
            } else {
                std::cerr << "error: unknown format '" << format_name << "'\n";
                return 2;
            }
        }
        if (run->parsed()) {
            DriveMode mode = scenario.run.mode;
            if (!mode_name.empty()) {
                if (mode_name == "differential") {
                    mode = DriveMode::Differential;
                } else if (mode_name == "rigid") {
                    mode = DriveMode::RigidDrive;
                } else {
                    std::cerr << "error: unknown mode '" << mode_name << "'\n";
                    return 2;
                }
            }
            const std::filesystem::path dir =
                out_dir.empty() ? std::filesystem::path(scenario.run.out_dir)
                                : std::filesystem::path(out_dir);
            return cmd_run(scenario, mode, dir, format);
        }
        std::optional<std::filesystem::path> dir;
        if (!out_dir.empty()) dir = out_dir;
        return cmd_compare(scenario, dir, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
