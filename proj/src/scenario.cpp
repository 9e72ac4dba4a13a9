#include "pipeclimb/scenario.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <vector>

namespace pipeclimb {

namespace {

std::string fmt(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

[[noreturn]] void fail(int line, const std::string& field, const std::string& what) {
    throw ScenarioParseError(line, field, what);
}

double parse_number(const std::string& text, int line, const std::string& field) {
    const std::string t = trim(text);
    if (t.empty()) fail(line, field, "missing numeric value");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size()) {
        fail(line, field, "invalid number '" + t + "'");
    }
    if (!std::isfinite(v)) fail(line, field, "value must be finite");
    return v;
}

// Angles: radians unless the value carries a `deg` (or explicit `rad`) suffix.
double parse_angle(const std::string& text, int line, const std::string& field) {
    std::string t = trim(text);
    double scale = 1.0;
    const std::string lt = lower(t);
    if (lt.size() >= 3 && lt.compare(lt.size() - 3, 3, "deg") == 0) {
        scale = std::numbers::pi / 180.0;
        t = trim(t.substr(0, t.size() - 3));
    } else if (lt.size() >= 3 && lt.compare(lt.size() - 3, 3, "rad") == 0) {
        t = trim(t.substr(0, t.size() - 3));
    }
    return scale * parse_number(t, line, field);
}

std::size_t parse_count(const std::string& text, int line, const std::string& field) {
    const double v = parse_number(text, line, field);
    if (v < 1.0 || v != std::floor(v)) {
        fail(line, field, "expected a positive integer");
    }
    return static_cast<std::size_t>(v);
}

struct KeyValue {
    std::string key;
    std::string value;
    int line = 0;
};

// Splits "kind k1=v1 k2=v2 ..." segment payloads. Values may not contain
// spaces; angle suffixes are written without a space here (e.g. angle=90deg).
std::vector<std::pair<std::string, std::string>> split_fields(const std::string& text, int line) {
    std::vector<std::pair<std::string, std::string>> fields;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        const auto eq = token.find('=');
        if (eq == std::string::npos || eq == 0 || eq == token.size() - 1) {
            fail(line, "segment", "expected key=value, got '" + token + "'");
        }
        fields.emplace_back(lower(token.substr(0, eq)), token.substr(eq + 1));
    }
    return fields;
}

struct SegmentLine {
    Segment segment;
    int line = 0;
};

Segment parse_segment(const std::string& payload, int line) {
    std::istringstream in(payload);
    std::string kind;
    in >> kind;
    std::string rest;
    std::getline(in, rest);
    const auto fields = split_fields(rest, line);
    kind = lower(kind);

    if (kind == "straight") {
        StraightSegment seg;
        bool have_length = false;
        for (const auto& [key, value] : fields) {
            if (key == "length") {
                seg.length = parse_number(value, line, "length");
                have_length = true;
            } else {
                fail(line, key, "unknown straight-segment field");
            }
        }
        if (!have_length) fail(line, "length", "straight segment needs length");
        if (!(seg.length > 0.0)) fail(line, "length", "straight length must be > 0");
        return seg;
    }
    if (kind == "bend") {
        BendSegment seg;
        bool have_radius = false;
        bool have_angle = false;
        for (const auto& [key, value] : fields) {
            if (key == "radius") {
                seg.bend_radius = parse_number(value, line, "radius");
                have_radius = true;
            } else if (key == "catalog") {
                try {
                    seg.bend_radius = elbow_catalog(value).bend_radius;
                } catch (const std::out_of_range& e) {
                    fail(line, "catalog", e.what());
                }
                have_radius = true;
            } else if (key == "angle") {
                seg.bend_angle = parse_angle(value, line, "angle");
                have_angle = true;
            } else if (key == "roll") {
                seg.plane_roll = parse_angle(value, line, "roll");
            } else if (key == "clearance_delta") {
                seg.clearance_delta = parse_number(value, line, "clearance_delta");
            } else {
                fail(line, key, "unknown bend-segment field");
            }
        }
        if (!have_radius) fail(line, "radius", "bend segment needs radius or catalog");
        if (!have_angle) fail(line, "angle", "bend segment needs angle");
        if (!(seg.bend_angle > 0.0) || seg.bend_angle > std::numbers::pi) {
            fail(line, "angle", "bend angle must be in (0, 180] degrees");
        }
        if (!(seg.bend_radius > 0.0)) fail(line, "radius", "bend radius must be > 0");
        if (seg.clearance_delta < 0.0) {
            fail(line, "clearance_delta", "clearance delta must be >= 0");
        }
        return seg;
    }
    fail(line, "segment", "unknown segment kind '" + kind + "' (straight|bend)");
}

}  // namespace

ScenarioParseError::ScenarioParseError(int line, std::string field, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) +
                                        (field.empty() ? "" : " (" + field + ")") + ": " + what
                                  : what),
      line_(line),
      field_(std::move(field)) {}

const char* drive_mode_name(DriveMode mode) {
    return mode == DriveMode::Differential ? "differential" : "rigid";
}

Scenario parse_scenario(const std::string& text) {
    if (trim(text).empty()) {
        fail(0, "", "empty scenario file");
    }

    std::string name;
    std::optional<double> inner_radius;
    int inner_radius_line = 0;
    std::vector<SegmentLine> segments;
    RobotConfig robot;
    RunConfig run;
    bool robot_seen = false;

    // Fields already assigned, for duplicate detection (section-qualified).
    std::map<std::string, int> seen;
    auto mark = [&](const std::string& qualified, int line) {
        if (seen.count(qualified)) {
            fail(line, qualified, "duplicate field (first set on line " +
                                      std::to_string(seen[qualified]) + ")");
        }
        seen[qualified] = line;
    };

    std::istringstream in(text);
    std::string raw;
    std::string section;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        const std::string line = trim(raw);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') fail(line_no, "", "unterminated section header");
            section = lower(trim(line.substr(1, line.size() - 2)));
            if (section != "network" && section != "robot" && section != "run") {
                fail(line_no, section, "unknown section (network|robot|run)");
            }
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            fail(line_no, "", "expected key = value, got '" + line + "'");
        }
        const std::string key = lower(trim(line.substr(0, eq)));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(line_no, "", "missing key before '='");

        if (section.empty()) {
            if (key == "name") {
                mark("name", line_no);
                name = value;
            } else {
                fail(line_no, key, "unknown top-level field (only 'name')");
            }
        } else if (section == "network") {
            if (key == "inner_radius") {
                mark("network.inner_radius", line_no);
                inner_radius = parse_number(value, line_no, key);
                inner_radius_line = line_no;
            } else if (key == "catalog") {
                mark("network.inner_radius", line_no);
                try {
                    inner_radius = elbow_catalog(value).inner_radius;
                } catch (const std::out_of_range& e) {
                    fail(line_no, "catalog", e.what());
                }
                inner_radius_line = line_no;
            } else if (key == "segment") {
                segments.push_back({parse_segment(value, line_no), line_no});
            } else {
                fail(line_no, key, "unknown network field");
            }
        } else if (section == "robot") {
            robot_seen = true;
            if (key == "contact_radius") {
                mark("robot.contact_radius", line_no);
                robot.contact_radius = parse_number(value, line_no, key);
                if (!(robot.contact_radius > 0.0)) {
                    fail(line_no, key, "contact radius must be > 0");
                }
            } else if (key == "mass") {
                mark("robot.mass", line_no);
                robot.mass = parse_number(value, line_no, key);
                if (robot.mass < 0.0) fail(line_no, key, "mass must be >= 0");
            } else if (key == "friction_mu") {
                mark("robot.friction_mu", line_no);
                robot.friction_mu = parse_number(value, line_no, key);
                if (robot.friction_mu < 0.0) fail(line_no, key, "friction must be >= 0");
            } else if (key == "nominal_speed") {
                mark("robot.nominal_speed", line_no);
                robot.nominal_speed = parse_number(value, line_no, key);
            } else if (key == "spring_stiffness") {
                mark("robot.spring_stiffness", line_no);
                robot.spring.stiffness = parse_number(value, line_no, key);
                if (!(robot.spring.stiffness > 0.0)) {
                    fail(line_no, key, "spring stiffness must be > 0");
                }
            } else if (key == "spring_preload") {
                mark("robot.spring_preload", line_no);
                robot.spring.preload_compression = parse_number(value, line_no, key);
            } else if (key == "spring_max_travel") {
                mark("robot.spring_max_travel", line_no);
                robot.spring.max_travel = parse_number(value, line_no, key);
                if (!(robot.spring.max_travel > 0.0)) {
                    fail(line_no, key, "spring max travel must be > 0");
                }
            } else if (key == "overall_ratio") {
                mark("robot.overall_ratio", line_no);
                robot.transmission.overall_ratio = parse_number(value, line_no, key);
                if (!(robot.transmission.overall_ratio > 0.0)) {
                    fail(line_no, key, "overall ratio must be > 0");
                }
            } else if (key == "loss_factor") {
                mark("robot.loss_factor", line_no);
                robot.transmission.loss_factor = parse_number(value, line_no, key);
                if (robot.transmission.loss_factor < 0.0 ||
                    robot.transmission.loss_factor >= 1.0) {
                    fail(line_no, key, "loss factor must be in [0, 1)");
                }
            } else {
                fail(line_no, key, "unknown robot field");
            }
        } else {  // run
            if (key == "mode") {
                mark("run.mode", line_no);
                const std::string m = lower(value);
                if (m == "differential") {
                    run.mode = DriveMode::Differential;
                } else if (m == "rigid") {
                    run.mode = DriveMode::RigidDrive;
                } else {
                    fail(line_no, key, "unknown mode '" + value + "' (differential|rigid)");
                }
            } else if (key == "roll_angle") {
                mark("run.roll_angle", line_no);
                run.roll_angle = parse_angle(value, line_no, key);
            } else if (key == "dt") {
                mark("run.dt", line_no);
                run.dt = parse_number(value, line_no, key);
                if (!(run.dt > 0.0)) fail(line_no, key, "dt must be > 0");
            } else if (key == "sample_every") {
                mark("run.sample_every", line_no);
                run.sample_every = parse_count(value, line_no, key);
            } else if (key == "time_cap") {
                mark("run.time_cap", line_no);
                run.time_cap = parse_number(value, line_no, key);
                if (!(run.time_cap > 0.0)) fail(line_no, key, "time cap must be > 0");
            } else if (key == "out") {
                mark("run.out", line_no);
                run.out_dir = value;
            } else if (key == "format") {
                mark("run.format", line_no);
                const std::string f = lower(value);
                if (f == "csv") {
                    run.format = TraceFormat::Csv;
                } else if (f == "jsonl" || f == "json-lines") {
                    run.format = TraceFormat::JsonLines;
                } else {
                    fail(line_no, key, "unknown format '" + value + "' (csv|jsonl)");
                }
            } else {
                fail(line_no, key, "unknown run field");
            }
        }
    }

    if (!inner_radius) {
        fail(0, "inner_radius", "[network] needs inner_radius or catalog");
    }
    if (segments.empty()) {
        fail(0, "segment", "[network] needs at least one segment");
    }
    if (!robot_seen || !(robot.contact_radius > 0.0)) {
        fail(0, "contact_radius", "[robot] needs contact_radius");
    }
    if (!(robot.nominal_speed > 0.0)) {
        fail(0, "nominal_speed", "[robot] needs a positive nominal_speed");
    }
    if (!(*inner_radius > 0.0)) {
        fail(inner_radius_line, "inner_radius", "inner radius must be > 0");
    }
    for (const auto& [segment, line] : segments) {
        if (const auto* bend = std::get_if<BendSegment>(&segment)) {
            if (!(bend->bend_radius > *inner_radius)) {
                fail(line, "radius", "bend radius must exceed the pipe inner radius");
            }
        }
    }
    if (robot.contact_radius > *inner_radius) {
        fail(0, "contact_radius", "contact radius exceeds the pipe inner radius");
    }
    if (robot.spring.preload_compression < 0.0 ||
        robot.spring.preload_compression > robot.spring.max_travel) {
        fail(0, "spring_preload", "preload must be within [0, spring_max_travel]");
    }

    std::vector<Segment> segs;
    segs.reserve(segments.size());
    for (auto& [segment, line] : segments) {
        (void)line;
        segs.push_back(segment);
    }
    try {
        robot.validate();
        return Scenario{name, PipeNetwork(*inner_radius, std::move(segs)), robot, run};
    } catch (const std::invalid_argument& e) {
        fail(0, "", e.what());
    }
}

Scenario load_scenario(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open scenario file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    Scenario scenario = parse_scenario(buffer.str());
    if (scenario.name.empty()) {
        scenario.name = path.stem().string();
    }
    return scenario;
}

std::string serialize_scenario(const Scenario& scenario) {
    std::ostringstream out;
    if (!scenario.name.empty()) {
        out << "name = " << scenario.name << "\n\n";
    }
    out << "[network]\n";
    out << "inner_radius = " << fmt(scenario.network.inner_radius()) << "\n";
    for (const auto& segment : scenario.network.segments()) {
        if (const auto* s = std::get_if<StraightSegment>(&segment)) {
            out << "segment = straight length=" << fmt(s->length) << "\n";
        } else {
            const auto& b = std::get<BendSegment>(segment);
            out << "segment = bend radius=" << fmt(b.bend_radius)
                << " angle=" << fmt(b.bend_angle) << " roll=" << fmt(b.plane_roll)
                << " clearance_delta=" << fmt(b.clearance_delta) << "\n";
        }
    }
    const RobotConfig& r = scenario.robot;
    out << "\n[robot]\n";
    out << "contact_radius = " << fmt(r.contact_radius) << "\n";
    out << "mass = " << fmt(r.mass) << "\n";
    out << "friction_mu = " << fmt(r.friction_mu) << "\n";
    out << "nominal_speed = " << fmt(r.nominal_speed) << "\n";
    out << "spring_stiffness = " << fmt(r.spring.stiffness) << "\n";
    out << "spring_preload = " << fmt(r.spring.preload_compression) << "\n";
    out << "spring_max_travel = " << fmt(r.spring.max_travel) << "\n";
    out << "overall_ratio = " << fmt(r.transmission.overall_ratio) << "\n";
    out << "loss_factor = " << fmt(r.transmission.loss_factor) << "\n";
    const RunConfig& run = scenario.run;
    out << "\n[run]\n";
    out << "mode = " << drive_mode_name(run.mode) << "\n";
    out << "roll_angle = " << fmt(run.roll_angle) << "\n";
    out << "dt = " << fmt(run.dt) << "\n";
    out << "sample_every = " << run.sample_every << "\n";
    out << "time_cap = " << fmt(run.time_cap) << "\n";
    out << "out = " << run.out_dir << "\n";
    out << "format = " << (run.format == TraceFormat::Csv ? "csv" : "jsonl") << "\n";
    return out.str();
}

}  // namespace pipeclimb
