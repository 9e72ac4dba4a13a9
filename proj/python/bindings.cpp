#include "pipeclimb/analysis.hpp"
#include "pipeclimb/contact.hpp"
#include "pipeclimb/differential.hpp"
#include "pipeclimb/pipe_geometry.hpp"
#include "pipeclimb/scenario.hpp"
#include "pipeclimb/trace_io.hpp"
#include "pipeclimb/traversal.hpp"

#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

namespace py = pybind11;
using namespace pipeclimb;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quasi-static in-pipe climbing robot simulator";

    py::register_exception<TravelLimitError>(m, "TravelLimitError", PyExc_ValueError);
    py::register_exception<ScenarioParseError>(m, "ScenarioParseError", PyExc_ValueError);

    // pipe geometry
    py::class_<StraightSegment>(m, "StraightSegment")
        .def(py::init<double>(), py::arg("length"))
        .def_readwrite("length", &StraightSegment::length);

    py::class_<BendSegment>(m, "BendSegment")
        .def(py::init([](double radius, double angle, double roll, double clearance_delta) {
                 return BendSegment{radius, angle, roll, clearance_delta};
             }),
             py::arg("bend_radius"), py::arg("bend_angle"), py::arg("plane_roll") = 0.0,
             py::arg("clearance_delta") = 1.5)
        .def_readwrite("bend_radius", &BendSegment::bend_radius)
        .def_readwrite("bend_angle", &BendSegment::bend_angle)
        .def_readwrite("plane_roll", &BendSegment::plane_roll)
        .def_readwrite("clearance_delta", &BendSegment::clearance_delta);

    py::class_<CenterlinePose>(m, "CenterlinePose")
        .def_readonly("position", &CenterlinePose::position)
        .def_readonly("tangent", &CenterlinePose::tangent)
        .def_readonly("normal", &CenterlinePose::normal)
        .def_readonly("binormal", &CenterlinePose::binormal);

    py::class_<PipeNetwork>(m, "PipeNetwork")
        .def(py::init<double, std::vector<Segment>>(), py::arg("inner_radius"),
             py::arg("segments"))
        .def_property_readonly("inner_radius", &PipeNetwork::inner_radius)
        .def_property_readonly("segments", &PipeNetwork::segments)
        .def("total_length", &PipeNetwork::total_length)
        .def("segment_at", &PipeNetwork::segment_at, py::arg("s"))
        .def("centerline_pose", &PipeNetwork::centerline_pose, py::arg("s"));

    m.def("segment_arc_length", &segment_arc_length, py::arg("segment"));
    m.def("effective_radius", &effective_radius, py::arg("bend"), py::arg("psi"),
          py::arg("contact_radius"));

    py::class_<ElbowSpec>(m, "ElbowSpec")
        .def_readonly("inner_radius", &ElbowSpec::inner_radius)
        .def_readonly("bend_radius", &ElbowSpec::bend_radius);
    m.def("elbow_catalog", &elbow_catalog, py::arg("nominal_size"));
    m.def("elbow_catalog_keys", &elbow_catalog_keys);

    // differential transmission
    py::class_<TransmissionConfig>(m, "TransmissionConfig")
        .def(py::init([](double ratio, double loss) {
                 return TransmissionConfig{ratio, loss};
             }),
             py::arg("overall_ratio") = 1.0, py::arg("loss_factor") = 0.0)
        .def_readwrite("overall_ratio", &TransmissionConfig::overall_ratio)
        .def_readwrite("loss_factor", &TransmissionConfig::loss_factor);

    py::class_<DifferentialSolution>(m, "DifferentialSolution")
        .def_readonly("input_speed", &DifferentialSolution::input_speed)
        .def_readonly("output_speeds", &DifferentialSolution::output_speeds)
        .def_readonly("input_torque", &DifferentialSolution::input_torque)
        .def_readonly("output_torques", &DifferentialSolution::output_torques)
        .def_readonly("residual", &DifferentialSolution::residual);

    m.def("solve_unloaded", &solve_unloaded, py::arg("cfg"), py::arg("input_speed"),
          py::arg("input_torque") = 0.0);
    m.def("solve_with_ratios", &solve_with_ratios, py::arg("cfg"), py::arg("input_speed"),
          py::arg("ratios"), py::arg("input_torque") = 0.0);
    m.def("solve_fixed_outputs", &solve_fixed_outputs, py::arg("cfg"), py::arg("input_speed"),
          py::arg("fixed"), py::arg("input_torque") = 0.0);
    m.def("torque_split", &torque_split, py::arg("cfg"), py::arg("input_torque"));
    m.def("power_balance", &power_balance, py::arg("solution"));

    // contact mechanics
    py::class_<SpringConfig>(m, "SpringConfig")
        .def(py::init([](double stiffness, double preload, double max_travel) {
                 return SpringConfig{stiffness, preload, max_travel};
             }),
             py::arg("stiffness") = 1.0, py::arg("preload_compression") = 0.0,
             py::arg("max_travel") = 16.0)
        .def_readwrite("stiffness", &SpringConfig::stiffness)
        .def_readwrite("preload_compression", &SpringConfig::preload_compression)
        .def_readwrite("max_travel", &SpringConfig::max_travel);

    py::class_<ContactState>(m, "ContactState")
        .def(py::init([](double n, double mu, double angle) {
                 return ContactState{n, mu, angle};
             }),
             py::arg("normal_force"), py::arg("friction_mu"), py::arg("contact_angle") = 0.0)
        .def_readwrite("normal_force", &ContactState::normal_force)
        .def_readwrite("friction_mu", &ContactState::friction_mu)
        .def_readwrite("contact_angle", &ContactState::contact_angle);

    m.def("contact_angle", &contact_angle, py::arg("AO"), py::arg("OC"));
    m.def("holding_force", &holding_force, py::arg("N"), py::arg("mu"), py::arg("angle"));
    m.def("spring_stiffness_rule", &spring_stiffness_rule, py::arg("mu"), py::arg("N"));
    m.def("normal_force", &normal_force, py::arg("spring"), py::arg("compression"));
    m.def(
        "no_slip_margin",
        [](double mass, double axial, const std::vector<ContactState>& contacts) {
            return no_slip_margin(mass, axial, contacts);
        },
        py::arg("mass_kg"), py::arg("gravity_axis_component"), py::arg("contacts"));

    // traversal engine
    py::enum_<DriveMode>(m, "DriveMode")
        .value("Differential", DriveMode::Differential)
        .value("RigidDrive", DriveMode::RigidDrive);

    py::class_<RobotConfig>(m, "RobotConfig")
        .def(py::init<>())
        .def_readwrite("module_angles", &RobotConfig::module_angles)
        .def_readwrite("contact_radius", &RobotConfig::contact_radius)
        .def_readwrite("mass", &RobotConfig::mass)
        .def_readwrite("spring", &RobotConfig::spring)
        .def_readwrite("friction_mu", &RobotConfig::friction_mu)
        .def_readwrite("nominal_speed", &RobotConfig::nominal_speed)
        .def_readwrite("transmission", &RobotConfig::transmission)
        .def("input_speed", &RobotConfig::input_speed);

    py::class_<TraversalState>(m, "TraversalState")
        .def_readonly("time", &TraversalState::time)
        .def_readonly("arc_position", &TraversalState::arc_position)
        .def_readonly("roll_angle", &TraversalState::roll_angle)
        .def_readonly("commanded_speeds", &TraversalState::commanded_speeds)
        .def_readonly("required_speeds", &TraversalState::required_speeds)
        .def_readonly("spring_compressions", &TraversalState::spring_compressions);

    py::class_<TraceSample>(m, "TraceSample")
        .def_readonly("time", &TraceSample::time)
        .def_readonly("arc_position", &TraceSample::arc_position)
        .def_readonly("segment", &TraceSample::segment)
        .def_readonly("commanded", &TraceSample::commanded)
        .def_readonly("required", &TraceSample::required)
        .def_readonly("slip", &TraceSample::slip)
        .def_readonly("spring", &TraceSample::spring);

    py::class_<Trace>(m, "Trace")
        .def_readonly("samples", &Trace::samples)
        .def_readonly("complete", &Trace::complete);

    m.def("required_speeds", &required_speeds, py::arg("network"), py::arg("robot"),
          py::arg("state"));
    m.def("allocate_speeds", &allocate_speeds, py::arg("mode"), py::arg("transmission"),
          py::arg("input_speed"), py::arg("required"));
    m.def("initial_state", &initial_state, py::arg("network"), py::arg("robot"),
          py::arg("roll_angle"), py::arg("mode"));
    m.def("step", &step, py::arg("network"), py::arg("robot"), py::arg("state"), py::arg("dt"),
          py::arg("mode"));
    m.def("run_scenario", &run_scenario, py::arg("network"), py::arg("robot"), py::arg("mode"),
          py::arg("dt"), py::arg("sample_every") = 1, py::arg("roll_angle") = 0.0,
          py::arg("time_cap") = 600.0);
    m.def("slip_distance", &slip_distance, py::arg("trace"));

    // scenarios and analysis
    py::enum_<TraceFormat>(m, "TraceFormat")
        .value("Csv", TraceFormat::Csv)
        .value("JsonLines", TraceFormat::JsonLines);

    py::class_<RunConfig>(m, "RunConfig")
        .def_readwrite("mode", &RunConfig::mode)
        .def_readwrite("roll_angle", &RunConfig::roll_angle)
        .def_readwrite("dt", &RunConfig::dt)
        .def_readwrite("sample_every", &RunConfig::sample_every)
        .def_readwrite("time_cap", &RunConfig::time_cap)
        .def_readwrite("out_dir", &RunConfig::out_dir)
        .def_readwrite("format", &RunConfig::format);

    py::class_<Scenario>(m, "Scenario")
        .def_readwrite("name", &Scenario::name)
        .def_readonly("network", &Scenario::network)
        .def_readwrite("robot", &Scenario::robot)
        .def_readwrite("run", &Scenario::run);

    m.def("parse_scenario", &parse_scenario, py::arg("text"));
    m.def("load_scenario", &load_scenario, py::arg("path"));
    m.def("serialize_scenario", &serialize_scenario, py::arg("scenario"));

    m.def("ape",
          [](const std::vector<double>& sim, const std::vector<double>& theory) {
              return ape(sim, theory);
          },
          py::arg("simulated"), py::arg("theoretical"));

    py::class_<PhaseEntry>(m, "PhaseEntry")
        .def_readonly("segment", &PhaseEntry::segment)
        .def_readonly("entry_time", &PhaseEntry::entry_time)
        .def_readonly("exit_time", &PhaseEntry::exit_time);
    py::class_<PhaseReport>(m, "PhaseReport")
        .def_readonly("phases", &PhaseReport::phases)
        .def_readonly("complete", &PhaseReport::complete);
    m.def("phase_report", &phase_report, py::arg("trace"), py::arg("network"));

    py::class_<SummaryReport>(m, "SummaryReport")
        .def_readonly("phases", &SummaryReport::phases)
        .def_readonly("speed_envelope", &SummaryReport::speed_envelope)
        .def_readonly("track_ape", &SummaryReport::track_ape)
        .def_readonly("slip_distance", &SummaryReport::slip_distance)
        .def_readonly("spring_min", &SummaryReport::spring_min)
        .def_readonly("spring_max", &SummaryReport::spring_max)
        .def_readonly("complete", &SummaryReport::complete);
    m.def("summarize", &summarize, py::arg("trace"), py::arg("network"));
    m.def("format_summary", &format_summary, py::arg("report"), py::arg("scenario_name"),
          py::arg("mode_name"));

    m.def("trace_to_csv", &trace_to_csv, py::arg("trace"));
    m.def("trace_to_jsonl", &trace_to_jsonl, py::arg("trace"));
    m.def("export_trace", &export_trace, py::arg("trace"), py::arg("format"), py::arg("path"));
    m.def("import_trace_csv", &import_trace_csv, py::arg("text"));
    m.def("drive_mode_name", &drive_mode_name, py::arg("mode"));
}
