"""Quasi-static simulator for a differential-drive in-pipe climbing robot."""

from ._core import (
    BendSegment,
    CenterlinePose,
    ContactState,
    DifferentialSolution,
    DriveMode,
    ElbowSpec,
    PhaseEntry,
    PhaseReport,
    PipeNetwork,
    RobotConfig,
    RunConfig,
    Scenario,
    ScenarioParseError,
    SpringConfig,
    StraightSegment,
    SummaryReport,
    Trace,
    TraceFormat,
    TraceSample,
    TransmissionConfig,
    TravelLimitError,
    TraversalState,
    allocate_speeds,
    ape,
    contact_angle,
    drive_mode_name,
    effective_radius,
    elbow_catalog,
    elbow_catalog_keys,
    export_trace,
    format_summary,
    holding_force,
    import_trace_csv,
    initial_state,
    load_scenario,
    no_slip_margin,
    normal_force,
    parse_scenario,
    phase_report,
    power_balance,
    required_speeds,
    run_scenario,
    segment_arc_length,
    serialize_scenario,
    slip_distance,
    solve_fixed_outputs,
    solve_unloaded,
    solve_with_ratios,
    spring_stiffness_rule,
    step,
    summarize,
    torque_split,
    trace_to_csv,
    trace_to_jsonl,
)

__version__ = "0.1.0"


def run(scenario, mode=None):
    """Run a parsed scenario, optionally overriding its drive mode."""
    effective = scenario.run.mode if mode is None else mode
    return run_scenario(
        scenario.network,
        scenario.robot,
        effective,
        scenario.run.dt,
        scenario.run.sample_every,
        scenario.run.roll_angle,
        scenario.run.time_cap,
    )
