#pragma once

#include "pipeclimb/trace_io.hpp"
#include "pipeclimb/traversal.hpp"

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>

// Scenario files are plain text with three named sections:
//
//   name = reference
//   [network]
//   inner_radius = 127.254            # or: catalog = NPS10
//   segment = straight length=350
//   segment = bend radius=371.372 angle=90 deg roll=0 clearance_delta=1.5
//   [robot]
//   contact_radius = 127.254
//   ...
//   [run]
//   mode = differential
//   roll_angle = 60 deg
//   ...
//
// '#' starts a comment. Angles are radians unless suffixed with `deg`.
// The full grammar is documented in the README and locked by round-trip
// tests.

namespace pipeclimb {

struct RunConfig {
    DriveMode mode = DriveMode::Differential;
    double roll_angle = 0.0;      // rad
    double dt = 0.01;             // s
    std::size_t sample_every = 1;
    double time_cap = 600.0;      // s
    std::string out_dir = "out";
    TraceFormat format = TraceFormat::Csv;

    bool operator==(const RunConfig&) const = default;
};

struct Scenario {
    std::string name;
    PipeNetwork network;
    RobotConfig robot;
    RunConfig run;

    bool operator==(const Scenario&) const = default;
};

/// Parse failure with the offending line and field named.
class ScenarioParseError : public std::runtime_error {
  public:
    ScenarioParseError(int line, std::string field, const std::string& what);

    int line() const { return line_; }
    const std::string& field() const { return field_; }

  private:
    int line_;
    std::string field_;
};

/// Parses and validates a scenario. Every invariant of the referenced types
/// is checked here, with diagnostics carrying the line and field.
Scenario parse_scenario(const std::string& text);

Scenario load_scenario(const std::filesystem::path& path);

/// Inverse of parse_scenario up to formatting: parse(serialize(s)) == s.
std::string serialize_scenario(const Scenario& scenario);

const char* drive_mode_name(DriveMode mode);

}  // namespace pipeclimb
