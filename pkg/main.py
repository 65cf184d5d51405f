"""
CableQSim - Main Entry Point

Command-line front end for the cable-coupled transmon toolkit. Each command
loads a parameter file, runs one scan or optimization and writes CSV/JSON
tables plus a manifest into the output directory.

Usage:
    python main.py zz-free --params configs/paper_defaults.json
    python main.py zz-map --f1 4.45:4.80:0.005 --f2 4.45:4.80:0.005 --out out/zzmap
    python main.py calibrate --gate iswap --kind square

Exit codes:
    0 success, 1 computation error, 2 configuration or usage error
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

import gatemetrics
import perturbation
import spectrum
from circuit import CircuitParams, ModeSet, adjacent_modes, select_modes
from config import APP_NAME, DEFAULT_DT_NS, PADDING_NS, THREADS_ENV, VERSION
from dynamics import computational_gate, occupancy_trajectory, propagate, virtual_z_correct
from errors import CableSimError, ConfigError, DomainError
from gatemetrics import GateKind, SearchSpec
from hilbert import CouplingModel, TruncationSpec, build_hamiltonian, hamiltonian_entries, parse_label
from output_manager import OutputManager
from params_manager import get_params_manager
from pool_manager import get_pool_manager, resolve_threads
from pulses import ScheduleConfig, ScheduleKind, build_schedule, sample_schedule

log = logging.getLogger(APP_NAME)


def parse_grid(text: str, name: str) -> list[float]:
    """'lo:hi:step' (inclusive) or a single value, in GHz."""
    try:
        parts = [float(p) for p in text.split(":")]
    except ValueError:
        raise ConfigError(f"--{name}: cannot parse grid {text!r}, expected lo:hi:step")
    if len(parts) == 1:
        return parts
    if len(parts) != 3:
        raise ConfigError(f"--{name}: expected lo:hi:step, got {text!r}")
    lo, hi, step = parts
    if not step > 0 or hi < lo:
        raise ConfigError(f"--{name}: empty grid {text!r}")
    n = int(round((hi - lo) / step)) + 1
    return [float(x) for x in np.round(lo + step * np.arange(n), 12)]


def parse_pair(text: str, name: str) -> tuple[float, float]:
    try:
        a, b = (float(p) for p in text.split(","))
    except ValueError:
        raise ConfigError(f"--{name}: expected two comma-separated values, got {text!r}")
    return a, b


def parse_counts(text: str) -> list[int]:
    try:
        counts = [int(p) for p in text.split(",")]
    except ValueError:
        raise ConfigError(f"--counts: expected comma-separated integers, got {text!r}")
    if not counts or min(counts) < 1:
        raise ConfigError("--counts: mode counts must be positive")
    return counts


@dataclass
class RunConfig:
    command: str
    params_file: str | None = None
    out: str = "out"
    threads: int = 0
    modes: str | None = None
    levels_qubit: int = 4
    levels_mode: int = 3
    coupling: str = "full"
    track_coupling: bool = True
    cable_length_ratio: float = 1.0
    verbose: bool = False
    options: dict = field(default_factory=dict)

    def resolved(self, params: CircuitParams, mode_set: ModeSet) -> dict:
        data = asdict(self)
        data["params"] = params.to_dict()
        data["mode_indices"] = list(mode_set.indices)
        return data


@dataclass
class RunContext:
    config: RunConfig
    params: CircuitParams
    mode_set: ModeSet
    trunc: TruncationSpec
    output: OutputManager

    @property
    def options(self) -> dict:
        return self.config.options


def _mode_set(config: RunConfig, params: CircuitParams) -> ModeSet:
    if not config.modes:
        return adjacent_modes(params)
    if ":" in config.modes:
        return select_modes(params, window=parse_pair(config.modes.replace(":", ","), "modes"))
    try:
        indices = [int(m) for m in config.modes.split(",")]
    except ValueError:
        raise ConfigError(f"--modes: expected mode numbers like 10,11 or a window lo:hi, got {config.modes!r}")
    return select_modes(params, indices=indices)


def _schedule_config(ctx: RunContext) -> tuple[ScheduleKind, ScheduleConfig]:
    opts = ctx.options
    kind = ScheduleKind(opts["kind"])
    gate = GateKind(opts["gate"])
    idle_default, int_default = gatemetrics.default_frequencies(gate)
    idle = parse_pair(opts["idle"], "idle") if opts.get("idle") else idle_default
    interaction = parse_pair(opts["int"], "int") if opts.get("int") else int_default
    j = opts.get("j")
    if kind is not ScheduleKind.SQUARE_SQUARE:
        if j is None:
            j = gatemetrics.pair_coupling_for(ctx.params, ctx.mode_set, ctx.trunc, gate, interaction)
        j = gatemetrics.shaping_coupling(gate, kind, j)
    tau = opts.get("tau")
    kwargs = dict(hold=opts.get("hold"), slepian_qubit=opts.get("slepian_qubit", 1),
                  padding=opts.get("padding", PADDING_NS), sample_dt=opts.get("dt", DEFAULT_DT_NS))
    if kind is ScheduleKind.HYBRID:
        if tau is not None:
            kwargs["tau"] = tau
        return kind, ScheduleConfig.hybrid(*idle, *interaction, j, **kwargs)
    if tau is not None:
        kwargs["tau"] = tau
    return kind, ScheduleConfig(*idle, *interaction, j_coupling=j, **kwargs)


def cmd_spectrum(ctx: RunContext):
    opts = ctx.options
    f1_grid = parse_grid(opts["f1"], "f1")
    f2 = opts["f2"]
    scan = spectrum.energy_spectrum_scan(ctx.params, ctx.mode_set, ctx.trunc, f1_grid, f2)
    ctx.output.write_csv(
        "spectrum.csv", ["f1_ghz", "level_index", "energy_ghz", "label", "overlap2", "manifold", "flag"],
        ((lv.f1, lv.level_index, lv.energy, lv.label, lv.overlap2, lv.manifold, lv.flag) for lv in scan.levels),
    )
    ctx.output.write_csv(
        "crossings.csv", ["label_a", "label_b", "f1_ghz", "gap_ghz"],
        ((c.label_a, c.label_b, c.f1, c.gap) for c in scan.crossings),
    )
    if ctx.trunc.levels_qubit >= 3:
        ctx.output.write_csv(
            "repulsions.csv", ["f1_ghz", "label", "detuning_from_11_ghz"],
            ((f1, label, value) for f1 in f1_grid
             for label, value in spectrum.second_excited_repulsions(ctx.params, ctx.mode_set, ctx.trunc, f1, f2).items()),
        )
    if opts.get("dump_hamiltonian"):
        h = build_hamiltonian(ctx.params, ctx.mode_set, ctx.trunc, f1_grid[0], f2)
        ctx.output.write_csv("hamiltonian.csv", ["row", "col", "real", "imag"], hamiltonian_entries(h))
    print(f"Spectrum: {len(f1_grid)} samples, {len(scan.levels)} levels, {len(scan.crossings)} avoided crossings")
    for c in scan.crossings:
        print(f"  |{c.label_a}>/|{c.label_b}> at f1 = {c.f1:.6f} GHz, gap {c.gap * 1e3:.3f} MHz")


def cmd_zz_map(ctx: RunContext):
    opts = ctx.options
    zz = spectrum.zz_map(ctx.params, ctx.mode_set, ctx.trunc, parse_grid(opts["f1"], "f1"), parse_grid(opts["f2"], "f2"))
    ctx.output.write_csv("zz_map.csv", ["f1_ghz", "f2_ghz", "zz_ghz", "flag"], zz.rows())
    crossings = zz.zero_crossings()
    ctx.output.write_csv("zz_off_contour.csv", ["f1_ghz", "f2_ghz"], crossings.tolist())
    off = int(np.sum(zz.zz_off_mask()))
    flagged = int(np.sum(zz.flags != "ok"))
    print(f"ZZ map: {zz.zz.size} cells, {off} below 10 kHz, {flagged} flagged, {len(crossings)} contour points")


def cmd_zz_free(ctx: RunContext):
    opts = ctx.options
    bracket = parse_pair(opts["bracket"], "bracket") if opts.get("bracket") else None
    root = spectrum.zz_free_point(ctx.params, ctx.mode_set, ctx.trunc, opts["detuning"], bracket)
    ctx.output.write_json("zz_free.json", {"detuning_ghz": opts["detuning"], "zz_free_ghz": root})
    print(f"ZZ-free point: {root:.6f} GHz")


def cmd_zz_analytic(ctx: RunContext):
    opts = ctx.options
    d = opts["detuning"]
    rows = []
    for f in parse_grid(opts["f"], "f"):
        row = [f, np.nan, np.nan, np.nan, "ok"]
        try:
            row[1] = perturbation.g_eff(ctx.params, ctx.mode_set, f + 0.5 * d, f - 0.5 * d)
            row[2] = perturbation.zz_fourth_order(ctx.params, ctx.mode_set, f + 0.5 * d, f - 0.5 * d)
            row[3] = perturbation.zz_resonant_approx(ctx.params, ctx.mode_set, f, ctx.params.alpha1)
        except CableSimError as e:
            row[4] = "singular"
            log.debug("closed forms at %.6f: %s", f, e)
        rows.append(row)
    ctx.output.write_csv("zz_analytic.csv", ["f_ghz", "g_eff_ghz", "zz_fourth_order_ghz", "zz_resonant_ghz", "flag"], rows)
    try:
        print(f"Closed-form ZZ-free point: {perturbation.resonant_root(ctx.params, ctx.mode_set):.6f} GHz")
    except CableSimError as e:
        print(f"No closed-form ZZ-free point: {e}")


def cmd_waveform(ctx: RunContext):
    kind, config = _schedule_config(ctx)
    schedule = build_schedule(kind, config)
    t, f1, f2 = sample_schedule(schedule)
    ctx.output.write_csv("waveform.csv", ["t_ns", "f_q1_ghz", "f_q2_ghz"], zip(t, f1, f2))
    print(f"Waveform: {kind.value}, {schedule.total_time:.3f} ns")


def cmd_simulate(ctx: RunContext):
    opts = ctx.options
    kind, config = _schedule_config(ctx)
    if kind is ScheduleKind.SQUARE_SQUARE and config.hold is None:
        raise ConfigError("simulate with square pulses needs --hold")
    schedule = build_schedule(kind, config)
    idle_spec = spectrum.diagonalize(ctx.params, ctx.mode_set, ctx.trunc, *schedule.idle_frequencies())
    label = parse_label(opts["initial"], len(ctx.mode_set))
    trace = occupancy_trajectory(ctx.params, ctx.mode_set, ctx.trunc, schedule, label, idle_spectrum=idle_spec)
    ctx.output.write_csv("occupancy.csv", trace.columns(), trace.rows())

    propagator = propagate(ctx.params, ctx.mode_set, ctx.trunc, schedule, check_convergence=opts.get("check_dt", False))
    gate = computational_gate(propagator, idle_spec)
    target = gatemetrics.target_unitary(GateKind(opts["gate"]))
    corrected, phi1, phi2 = virtual_z_correct(gate, target)
    ctx.output.write_json("gate.json", {
        "u4": {"real": gate.u4.real.tolist(), "imag": gate.u4.imag.tolist()},
        "leakage_per_state": gate.leakage_per_state.tolist(),
        "fidelity": gatemetrics.unitary_fidelity(gate.u4, target),
        "corrected_fidelity": gatemetrics.unitary_fidelity(corrected, target),
        "virtual_z_rad": [phi1, phi2],
        "dt_ns": propagator.dt_used,
        "converged": propagator.converged,
    })
    print(f"Simulated {kind.value} schedule ({schedule.total_time:.3f} ns): "
          f"corrected fidelity {gatemetrics.unitary_fidelity(corrected, target):.6f}")


def _print_report(report: gatemetrics.GateReport):
    coherent = report.coherent_error
    print(f"{report.gate_kind.value} ({report.schedule_kind.value}): {report.duration:.2f} ns")
    print(f"  coherent error   {coherent.total:.3e} (leakage {coherent.leakage:.2e}, "
          f"angle {coherent.angle_error:.2e}, cond. phase {coherent.cond_phase_error:.2e})")
    if report.incoherent_error is not None:
        inc = report.incoherent_error
        print(f"  incoherent error {inc.total:.3e} (qubit {inc.qubit_loss:.2e}, cable {inc.cable_loss:.2e})")


def cmd_calibrate(ctx: RunContext):
    opts = ctx.options
    gate = GateKind(opts["gate"])
    idle_default, int_default = gatemetrics.default_frequencies(gate)
    report = gatemetrics.calibrate_gate(
        ctx.params, ctx.mode_set, ctx.trunc, gate, ScheduleKind(opts["kind"]),
        parse_pair(opts["idle"], "idle") if opts.get("idle") else idle_default,
        parse_pair(opts["int"], "int") if opts.get("int") else int_default,
        loss=gatemetrics.LossModel.from_params(ctx.params).scaled(opts.get("loss_scale", 1.0)),
        tau=opts.get("tau"), j_coupling=opts.get("j"), slepian_qubit=opts.get("slepian_qubit", 1),
        dt=opts.get("dt", DEFAULT_DT_NS), tune_interaction=not opts.get("fixed_interaction", False),
    )
    ctx.output.write_json("gate_report.json", report.to_dict())
    _print_report(report)


def cmd_gate_opt(ctx: RunContext):
    opts = ctx.options
    gate = GateKind(opts["gate"])
    search = SearchSpec(
        idle_q2_grid=tuple(parse_grid(opts["idle_q2"], "idle-q2")) if opts.get("idle_q2") else (),
        int_grid=tuple(parse_grid(opts["int_grid"], "int-grid")) if opts.get("int_grid") else (),
        schedule_kind=ScheduleKind(opts["kind"]),
        idle_freqs=parse_pair(opts["idle"], "idle") if opts.get("idle") else None,
        int_freqs=parse_pair(opts["int"], "int") if opts.get("int") else None,
    )
    report, rows = gatemetrics.optimize_operating_point(ctx.params, ctx.mode_set, ctx.trunc, gate, search)
    ctx.output.write_csv(
        "gate_opt_scan.csv",
        ["f_idle1_ghz", "f_idle2_ghz", "f_int1_ghz", "f_int2_ghz", "duration_ns", "fidelity", "coherent_error", "flag"],
        ((r.f_idle1, r.f_idle2, r.f_int1, r.f_int2, r.duration, r.fidelity, r.coherent_error, r.flag) for r in rows),
    )
    ctx.output.write_json("gate_report.json", report.to_dict())
    _print_report(report)


def cmd_duration_scan(ctx: RunContext):
    opts = ctx.options
    gate = GateKind(opts["gate"])
    idle = parse_pair(opts["idle"], "idle") if opts.get("idle") else None
    rows = gatemetrics.duration_scan(ctx.params, ctx.mode_set, ctx.trunc, gate, parse_grid(opts["int_grid"], "int-grid"), idle)
    ctx.output.write_csv(
        "duration_scan.csv", ["f_int_ghz", "f_int1_ghz", "f_int2_ghz", "duration_ns", "fidelity", "flag"],
        ((r.f_int, r.f_int1, r.f_int2, r.duration, r.fidelity, r.flag) for r in rows),
    )
    found = sum(1 for r in rows if r.flag == "ok")
    print(f"Duration scan: {found}/{len(rows)} gates found")


def cmd_profile(ctx: RunContext):
    opts = ctx.options
    rows = spectrum.interaction_profile(ctx.params, ctx.mode_set, ctx.trunc, parse_grid(opts["f"], "f"), opts["detuning"])
    ctx.output.write_csv(
        "profile.csv", ["f_ghz", "zz_numeric_ghz", "zz_analytic_ghz", "g_eff_analytic_ghz", "g_eff_numeric_ghz", "flag"],
        ((r.f, r.zz_numeric, r.zz_analytic, r.g_eff_analytic, r.g_eff_numeric, r.flag) for r in rows),
    )
    print(f"Interaction profile: {len(rows)} points")


def cmd_mode_convergence(ctx: RunContext):
    opts = ctx.options
    rows = spectrum.mode_convergence(ctx.params, ctx.trunc, parse_counts(opts["counts"]), opts["detuning"])
    ctx.output.write_csv(
        "mode_convergence.csv", ["n_modes", "modes", "zz_free_ghz", "closed_form_ghz", "flag"],
        ((r.n_modes, " ".join(str(m) for m in r.mode_indices), r.root, r.closed_form_root, r.flag) for r in rows),
    )
    for r in rows:
        print(f"  {r.n_modes} modes {r.mode_indices}: {r.root:.6f} GHz, closed form {r.closed_form_root:.6f} GHz ({r.flag})")


def cmd_zz_cc_scan(ctx: RunContext):
    opts = ctx.options
    scan = spectrum.zz_coupling_scan(ctx.params, ctx.mode_set, ctx.trunc, parse_grid(opts["cc"], "cc"),
                                     parse_grid(opts["detuning_grid"], "detuning-grid"), opts["f2"])
    ctx.output.write_csv("zz_cc_scan.csv", ["c_c_ff", "delta12_ghz", "zz_ghz", "flag"], scan.rows())
    print(f"Coupling scan: {scan.zz.size} cells at f2 = {scan.f2} GHz")


HANDLERS = {
    "spectrum": cmd_spectrum,
    "zz-map": cmd_zz_map,
    "zz-free": cmd_zz_free,
    "zz-analytic": cmd_zz_analytic,
    "waveform": cmd_waveform,
    "simulate": cmd_simulate,
    "gate-opt": cmd_gate_opt,
    "duration-scan": cmd_duration_scan,
    "calibrate": cmd_calibrate,
    "profile": cmd_profile,
    "mode-convergence": cmd_mode_convergence,
    "zz-cc-scan": cmd_zz_cc_scan,
}


def _validate(config: RunConfig):
    """Parse every grid and enum option up front so bad input never starts a computation."""
    opts = config.options
    for key in ("f1", "f", "cc", "detuning_grid", "int_grid", "idle_q2"):
        if isinstance(opts.get(key), str):
            parse_grid(opts[key], key.replace("_", "-"))
    if config.command == "zz-map":
        parse_grid(opts["f2"], "f2")
    for key in ("idle", "int", "bracket"):
        if opts.get(key):
            parse_pair(opts[key], key)
    if "counts" in opts:
        parse_counts(opts["counts"])
    if config.threads < 0:
        raise ConfigError(f"--threads must be non-negative, got {config.threads}")
    resolve_threads(config.threads)
    if not config.cable_length_ratio > 0:
        raise ConfigError(f"--cable-length-ratio must be positive, got {config.cable_length_ratio}")
    if opts.get("loss_scale", 1.0) < 0:
        raise ConfigError(f"--loss-scale must be non-negative, got {opts['loss_scale']}")
    try:
        if "gate" in opts:
            GateKind(opts["gate"])
        if "kind" in opts:
            ScheduleKind(opts["kind"])
        CouplingModel(config.coupling)
    except ValueError as e:
        raise ConfigError(str(e)) from e
    if config.command == "gate-opt" and not (opts.get("idle_q2") or opts.get("int_grid")):
        raise ConfigError("gate-opt needs --idle-q2 or --int-grid")


def run(config: RunConfig) -> int:
    """Execute one command. Returns the process exit code."""
    try:
        if config.command not in HANDLERS:
            raise ConfigError(f"unknown command {config.command!r}")
        _validate(config)
        manager = get_params_manager()
        manager.load(config.params_file)
        if config.cable_length_ratio != 1.0:
            manager.apply_cable_length(config.cable_length_ratio)
        params = manager.params
        try:
            trunc = TruncationSpec(config.levels_qubit, config.levels_mode,
                                   CouplingModel(config.coupling), config.track_coupling)
        except CableSimError as e:
            raise ConfigError(str(e)) from e
        try:
            mode_set = _mode_set(config, params)
        except DomainError as e:
            raise ConfigError(str(e)) from e
        get_pool_manager().set_threads(config.threads)
        output = OutputManager(config.out, config.command, config.resolved(params, mode_set))
        ctx = RunContext(config, params, mode_set, trunc, output)
        manager.save(output.artifact_path("params.json"))
        log.info("%s: modes %s, dim %d", config.command, mode_set.indices, trunc.dimension(len(mode_set)))
        HANDLERS[config.command](ctx)
        output.write_manifest()
        return 0
    except ConfigError as e:
        print(f"error: {e.kind}: {e}", file=sys.stderr)
        return 2
    except CableSimError as e:
        print(f"error: {e.kind}: {e}", file=sys.stderr)
        return 1
    finally:
        get_pool_manager().shutdown()


def _add_schedule_options(p: argparse.ArgumentParser):
    p.add_argument("--gate", choices=[g.value for g in GateKind], default="cz")
    p.add_argument("--kind", choices=[k.value for k in ScheduleKind], default="square")
    p.add_argument("--idle", help="idle frequencies f1,f2 (GHz)")
    p.add_argument("--int", help="interaction frequencies f1,f2 (GHz)")
    p.add_argument("--hold", type=float, help="square-pulse hold time (ns)")
    p.add_argument("--tau", type=float, help="Slepian window (ns)")
    p.add_argument("--j", type=float, help="coupling the Slepian pulse is shaped for (GHz)")
    p.add_argument("--slepian-qubit", type=int, choices=(1, 2), default=1)
    p.add_argument("--padding", type=float, default=PADDING_NS)
    p.add_argument("--dt", type=float, default=DEFAULT_DT_NS)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--params", dest="params_file", help="circuit parameter JSON")
    common.add_argument("--out", default="out", help="output directory")
    common.add_argument("--threads", type=int, default=0, help=f"worker threads (0 = ${THREADS_ENV} or CPU count)")
    common.add_argument("--modes", help="cable modes, e.g. 10,11, or a window lo:hi in GHz")
    common.add_argument("--levels-qubit", type=int, default=4)
    common.add_argument("--levels-mode", type=int, default=3)
    common.add_argument("--coupling", choices=[c.value for c in CouplingModel], default="full")
    common.add_argument("--freeze-coupling", action="store_true", help="keep g at the idle frequencies during pulses")
    common.add_argument("--cable-length-ratio", type=float, default=1.0,
                        help="rescale the cable length of the parameter set (FSR ~ 1/L, C_cable ~ L)")
    common.add_argument("--verbose", "-v", action="store_true")

    parser = argparse.ArgumentParser(prog=APP_NAME, description="Cable-coupled transmon simulation toolkit")
    parser.add_argument("--version", action="version", version=f"{APP_NAME} {VERSION}")
    sub = parser.add_subparsers(dest="command", required=True, metavar="command")

    p = sub.add_parser("spectrum", parents=[common], help="labeled energy levels versus f1")
    p.add_argument("--f1", default="4.30:5.00:0.005")
    p.add_argument("--f2", type=float, default=4.70)
    p.add_argument("--dump-hamiltonian", action="store_true")

    p = sub.add_parser("zz-map", parents=[common], help="ZZ strength over an (f1, f2) grid")
    p.add_argument("--f1", default="4.45:4.80:0.01")
    p.add_argument("--f2", default="4.45:4.80:0.01")

    p = sub.add_parser("zz-free", parents=[common], help="ZZ-free centre frequency at fixed detuning")
    p.add_argument("--detuning", type=float, default=0.0)
    p.add_argument("--bracket", help="search interval lo,hi (GHz)")

    p = sub.add_parser("zz-analytic", parents=[common], help="closed-form XX and ZZ estimates")
    p.add_argument("--f", default="4.45:4.80:0.005")
    p.add_argument("--detuning", type=float, default=1e-4)

    p = sub.add_parser("waveform", parents=[common], help="sampled qubit frequency waveforms")
    _add_schedule_options(p)

    p = sub.add_parser("simulate", parents=[common], help="occupancy trace and gate matrix of one schedule")
    _add_schedule_options(p)
    p.add_argument("--initial", default="10", help="initial computational state, e.g. 10 or 11,00")
    p.add_argument("--check-dt", action="store_true", help="repeat with dt/2 and report convergence")

    p = sub.add_parser("gate-opt", parents=[common], help="operating-point search")
    _add_schedule_options(p)
    p.add_argument("--idle-q2", help="Q2 idle frequency grid lo:hi:step (GHz)")
    p.add_argument("--int-grid", help="interaction frequency grid lo:hi:step (GHz)")

    p = sub.add_parser("duration-scan", parents=[common], help="square-gate duration versus interaction frequency")
    p.add_argument("--gate", choices=[g.value for g in GateKind], default="iswap")
    p.add_argument("--idle", help="idle frequencies f1,f2 (GHz)")
    p.add_argument("--int-grid", default="4.60:4.80:0.01")

    p = sub.add_parser("calibrate", parents=[common], help="calibrate one gate")
    _add_schedule_options(p)
    p.add_argument("--loss-scale", type=float, default=1.0, help="multiply both T1 decay rates")
    p.add_argument("--fixed-interaction", action="store_true", help="keep the CZ interaction point as given")

    p = sub.add_parser("profile", parents=[common], help="XX/ZZ versus mean frequency, numeric and closed form")
    p.add_argument("--f", default="4.45:4.80:0.01")
    p.add_argument("--detuning", type=float, default=1e-4)

    p = sub.add_parser("mode-convergence", parents=[common], help="ZZ-free root versus number of modes")
    p.add_argument("--counts", default="2,3,4")
    p.add_argument("--detuning", type=float, default=0.0)

    p = sub.add_parser("zz-cc-scan", parents=[common], help="ZZ versus coupling capacitance and detuning")
    p.add_argument("--cc", default="1:10:0.5")
    p.add_argument("--detuning-grid", default="-0.10:0.10:0.005")
    p.add_argument("--f2", type=float, default=4.752)

    return parser


GLOBAL_KEYS = ("command", "params_file", "out", "threads", "modes", "levels_qubit", "levels_mode",
               "coupling", "freeze_coupling", "cable_length_ratio", "verbose")


def parse_args(argv=None) -> RunConfig:
    args = vars(build_parser().parse_args(argv))
    options = {k: v for k, v in args.items() if k not in GLOBAL_KEYS}
    return RunConfig(
        command=args["command"],
        params_file=args["params_file"],
        out=args["out"],
        threads=args["threads"],
        modes=args["modes"],
        levels_qubit=args["levels_qubit"],
        levels_mode=args["levels_mode"],
        coupling=args["coupling"],
        track_coupling=not args["freeze_coupling"],
        cable_length_ratio=args["cable_length_ratio"],
        verbose=args["verbose"],
        options=options,
    )


def main(argv=None) -> int:
    config = parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if config.verbose else logging.WARNING,
        format="%(asctime)s %(name)s %(levelname)s: %(message)s",
    )
    return run(config)


if __name__ == "__main__":
    sys.exit(main())
