"""Command-line front end: config ingestion, scenario dispatch, persistence.

Configs are single JSON objects; every scenario is deterministic given
its config and seed, and emitted files are byte-identical across reruns
(metadata holds a config hash and the tool version, no wall-clock
timestamp, precisely so that outputs can be diffed).
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import __version__
from . import gedanken, ging, gie, newtoncartan, nogo, precursors
from .quantumcore import chsh_max, negativity

SCENARIOS = ("gie-state", "gie-sweep", "nogo-verify", "gedanken-scan",
             "cow", "cavendish", "ging-evolve", "nc-check")
RANDOMIZED = ("cavendish", "nogo-verify")


class ConfigError(ValueError):
    """Invalid or incomplete scenario configuration."""


@dataclass
class ScenarioConfig:
    scenario: str
    params: dict = field(default_factory=dict)
    seed: int | None = None
    sweep: dict | None = None
    out: str | None = None

    def canonical_json(self) -> str:
        payload = {"scenario": self.scenario, "params": self.params,
                   "seed": self.seed, "sweep": self.sweep}
        return json.dumps(payload, sort_keys=True, separators=(",", ":"))

    def config_hash(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()[:16]


@dataclass
class ResultTable:
    columns: list[str]
    rows: list[list]
    meta: dict

    def __post_init__(self):
        for row in self.rows:
            if len(row) != len(self.columns):
                raise ValueError("ragged row in result table")


def load_config(path: str) -> ScenarioConfig:
    """Parse and validate a JSON scenario config; defaults are filled later."""
    with open(path) as fh:
        try:
            raw = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ConfigError(f"{path}: parse error at line {exc.lineno}, "
                              f"column {exc.colno}: {exc.msg}") from exc
    return validate_config(raw)


def validate_config(raw: dict) -> ScenarioConfig:
    if not isinstance(raw, dict):
        raise ConfigError("config must be a JSON object")
    scenario = raw.get("scenario")
    if scenario not in SCENARIOS:
        raise ConfigError(f"field 'scenario' must be one of {SCENARIOS}, "
                          f"got {scenario!r}")
    params = raw.get("params", {})
    if not isinstance(params, dict):
        raise ConfigError("field 'params' must be an object")
    seed = raw.get("seed")
    if seed is not None and not isinstance(seed, int):
        raise ConfigError("field 'seed' must be an integer")
    if scenario in RANDOMIZED and seed is None:
        raise ConfigError(f"field 'seed' is required for scenario '{scenario}'")
    sweep = raw.get("sweep")
    if sweep is not None:
        for key in ("axis", "start", "stop", "steps"):
            if key not in sweep:
                raise ConfigError(f"sweep spec missing field '{key}'")
        if sweep.get("scale", "linear") not in ("linear", "log"):
            raise ConfigError("sweep field 'scale' must be 'linear' or 'log'")
    return ScenarioConfig(scenario=scenario, params=params, seed=seed,
                          sweep=sweep, out=raw.get("out"))


def _sweep_values(sweep: dict) -> np.ndarray:
    if sweep.get("scale", "linear") == "log":
        return np.logspace(np.log10(sweep["start"]), np.log10(sweep["stop"]),
                           int(sweep["steps"]))
    return np.linspace(sweep["start"], sweep["stop"], int(sweep["steps"]))


def _gravcat_config(params: dict, t: float | None = None) -> gie.GravcatConfig:
    try:
        return gie.GravcatConfig(
            mass=params["m"],
            half_separation=params["D"],
            packet_offset=params["Delta"],
            duration=params["t"] if t is None else t,
            G=params.get("G", gie.G_NEWTON),
            hbar=params.get("hbar", gie.HBAR),
            c=params.get("c", gie.C_LIGHT),
        )
    except KeyError as exc:
        raise ConfigError(f"gie params missing field {exc.args[0]!r}") from exc


def _run_gie_state(cfg: ScenarioConfig) -> ResultTable:
    gc = _gravcat_config(cfg.params)
    theta = gie.relative_phase(gc)
    neg = gie.negativity_at_theta(theta)
    chsh = chsh_max(gie.spin_protocol_state(gc), restarts=8)
    ns_neg = negativity(gie.newton_schrodinger_state(gc))
    return ResultTable(
        columns=["m", "D", "Delta", "t", "theta", "negativity", "chsh",
                 "ns_negativity"],
        rows=[[gc.mass, gc.half_separation, gc.packet_offset, gc.duration,
               theta, neg, chsh, ns_neg]],
        meta={})


def _run_gie_sweep(cfg: ScenarioConfig, threads: int = 1) -> ResultTable:
    sweep = cfg.sweep or {"axis": "t", "start": 0.0,
                          "stop": cfg.params.get("t", 1.0), "steps": 100}
    if sweep["axis"] != "t":
        raise ConfigError("gie-sweep supports only the 't' axis")
    values = _sweep_values(sweep)

    def point(t):
        gc = _gravcat_config(cfg.params, t=float(t))
        theta = gie.relative_phase(gc)
        return [float(t), theta, gie.negativity_at_theta(theta),
                chsh_max(gie.spin_protocol_state(gc), restarts=4)]

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(point, values))
    else:
        rows = [point(t) for t in values]
    return ResultTable(columns=["t", "theta", "negativity", "chsh"],
                       rows=rows, meta={})


def _run_nogo(cfg: ScenarioConfig) -> ResultTable:
    n_trials = int(cfg.params.get("n_trials", 1000))
    report = nogo.verify_classical_separability(n_trials, seed=cfg.seed)
    cex = nogo.quantum_counterexample(
        g=cfg.params.get("counterexample_g", 1.0),
        t=cfg.params.get("counterexample_t", np.pi / 2))
    return ResultTable(
        columns=["n_trials", "separability_violations", "bit_drift_violations",
                 "worst_pt_eigenvalue", "max_bit_drift", "max_commutator_norm",
                 "counterexample_negativity"],
        rows=[[report.n_trials, report.separability_violations,
               report.bit_drift_violations, report.worst_pt_eigenvalue,
               report.max_bit_drift, report.max_commutator_norm, cex]],
        meta={"separable": report.separable})


def _run_gedanken(cfg: ScenarioConfig) -> ResultTable:
    p = cfg.params
    lo, hi = p.get("lo", 1e-2), p.get("hi", 1e4)
    n = int(p.get("points_per_axis", 32))
    axis = gedanken.log_grid(lo, hi, n)
    cert = gedanken.no_paradox_scan(axis, axis, axis, axis,
                                    require_spacelike=p.get("require_spacelike", True))
    rows = []
    max_rows = int(p.get("max_rows", 4096))
    if n ** 4 <= max_rows:
        margin = p.get("crr_margin", gedanken.DEFAULT_CRR_MARGIN)
        for qa in axis:
            for ta in axis:
                for tb in axis:
                    for d in axis:
                        r = gedanken.evaluate(
                            gedanken.GedankenParams(qa, ta, tb, d), margin)
                        rows.append([qa, ta, tb, d, r.mlr, r.qrr, r.crr,
                                     r.n_quanta, r.displacement, r.spacelike,
                                     r.case_label.value])
    else:
        for pt in cert.violating_points:
            r = gedanken.evaluate(gedanken.GedankenParams(*pt))
            rows.append([*pt, r.mlr, r.qrr, r.crr, r.n_quanta, r.displacement,
                         r.spacelike, r.case_label.value])
    return ResultTable(
        columns=["Q_A", "T_A", "T_B", "D", "mlr", "qrr", "crr", "n_quanta",
                 "displacement", "spacelike", "case_label"],
        rows=rows,
        meta={"points_scanned": cert.points_scanned,
              "violations": cert.violations})


def _run_cow(cfg: ScenarioConfig) -> ResultTable:
    p = cfg.params
    cc = precursors.CowConfig(
        mass=p.get("m", precursors.NEUTRON_MASS), g=p.get("g", 9.81),
        arm_length=p.get("h", 0.02), speed=p.get("u", 2200.0),
        hbar=p.get("hbar", precursors.HBAR))
    rep = precursors.mannheim_analysis(cc)
    return ResultTable(
        columns=["m", "g", "h", "u", "delta", "phi_AB1", "phi_AC", "phi_CD1",
                 "phi_B1D2", "loop_phase", "offset_phase", "total", "ow_phase",
                 "emission_residual"],
        rows=[[cc.mass, cc.g, cc.arm_length, cc.speed, rep.delta, rep.phi_AB1,
               rep.phi_AC, rep.phi_CD1, rep.phi_B1D2, rep.loop_phase,
               rep.offset_phase, rep.total, precursors.ow_phase(cc),
               precursors.emission_time_identity(cc)]],
        meta={})


def _run_cavendish(cfg: ScenarioConfig) -> ResultTable:
    n_runs = int(cfg.params.get("n_runs", 10000))
    summary = precursors.pg_simulate(n_runs, seed=cfg.seed)
    rows = [[i, r.decay_bit, r.deflection]
            for i, r in enumerate(summary.runs)]
    return ResultTable(columns=["run", "decay_bit", "deflection"], rows=rows,
                       meta={"mean_deflection": summary.mean_deflection,
                             "scg_prediction": precursors.pg_scg_prediction()})


def _run_ging(cfg: ScenarioConfig) -> ResultTable:
    p = cfg.params
    alpha = complex(p.get("alpha", 2.0))
    lam = p.get("lambda", 1.0)
    cutoff = int(p.get("cutoff", max(40, ging.adequate_cutoff(alpha))))
    which = p.get("hamiltonian", "QG")
    steps = int(p.get("steps", 50))
    t_max = p.get("t_max", 2 * np.pi / abs(lam) if lam else 1.0)
    rows = []
    for t in np.linspace(0.0, t_max, steps):
        bc = ging.BecConfig(alpha=alpha, coupling=lam, duration=float(t),
                            cutoff=cutoff)
        state = ging.evolve_bec(bc, which)
        rep = ging.non_gaussianity(state)
        rows.append([float(t), lam * float(t), rep.delta_g, rep.nu,
                     state.leakage])
    return ResultTable(columns=["t", "lambda_t", "delta_G", "nu", "leakage"],
                       rows=rows, meta={"hamiltonian": which, "cutoff": cutoff})


def _run_nc_check(cfg: ScenarioConfig) -> ResultTable:
    p = cfg.params
    try:
        m, delta, T = p["m"], p["delta"], p["T"]
    except KeyError as exc:
        raise ConfigError(f"nc-check params missing field {exc.args[0]!r}") from exc
    newt, red, geo = newtoncartan.three_way_comparison(
        m, delta, T, G=p.get("G"), hbar=p.get("hbar", gie.HBAR))
    spread = max(abs(red - newt), abs(geo - newt)) / abs(newt) if newt else 0.0
    return ResultTable(
        columns=["m", "delta", "T", "newtonian_phase", "redshift_phase",
                 "newton_cartan_phase", "max_relative_spread"],
        rows=[[m, delta, T, newt, red, geo, spread]],
        meta={})


_RUNNERS = {
    "gie-state": lambda c, th: _run_gie_state(c),
    "gie-sweep": _run_gie_sweep,
    "nogo-verify": lambda c, th: _run_nogo(c),
    "gedanken-scan": lambda c, th: _run_gedanken(c),
    "cow": lambda c, th: _run_cow(c),
    "cavendish": lambda c, th: _run_cavendish(c),
    "ging-evolve": lambda c, th: _run_ging(c),
    "nc-check": lambda c, th: _run_nc_check(c),
}


def run(cfg: ScenarioConfig, threads: int = 1) -> ResultTable:
    """Dispatch a validated config to its scenario; deterministic given seed."""
    table = _RUNNERS[cfg.scenario](cfg, threads)
    table.meta = {"config_hash": cfg.config_hash(),
                  "tool_version": __version__,
                  "scenario": cfg.scenario, **table.meta}
    return table


def format_value(x) -> str:
    """Render one CSV cell: '.' decimal, scientific outside [1e-4, 1e6)."""
    if isinstance(x, bool):
        return "true" if x else "false"
    if isinstance(x, (int, np.integer)):
        return str(int(x))
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if x != 0.0 and (abs(x) >= 1e6 or abs(x) < 1e-4):
            return format(x, ".17e")
        return format(x, ".17g")
    return str(x)


def emit(table: ResultTable, fmt: str, path: str | None = None) -> str:
    """Serialize a table to CSV or JSON; returns the text, writes if path given."""
    if fmt == "csv":
        import csv
        import io
        buf = io.StringIO()
        buf.write(f"# {json.dumps(table.meta, sort_keys=True)}\n")
        writer = csv.writer(buf, quoting=csv.QUOTE_MINIMAL, lineterminator="\n")
        writer.writerow(table.columns)
        for row in table.rows:
            writer.writerow([format_value(x) for x in row])
        text = buf.getvalue()
    elif fmt == "json":
        def clean(x):
            if isinstance(x, (np.integer,)):
                return int(x)
            if isinstance(x, (np.floating,)):
                return float(x)
            if isinstance(x, (np.bool_,)):
                return bool(x)
            return x
        payload = {"meta": table.meta, "columns": table.columns,
                   "rows": [[clean(x) for x in row] for row in table.rows]}
        text = json.dumps(payload, indent=2, sort_keys=True) + "\n"
    else:
        raise ConfigError(f"unknown output format {fmt!r}")
    if path:
        with open(path, "w") as fh:
            fh.write(text)
    return text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabletopqg",
        description="Numerical laboratory for tabletop quantum-gravity "
                    "experiments.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)
    help_text = {
        "gie-state": "evaluate one gravcat configuration under all models",
        "gie-sweep": "sweep the gravcat interaction time",
        "nogo-verify": "verify the classical-mediator separability theorem",
        "gedanken-scan": "scan the quadrupole thought-experiment inequalities",
        "cow": "neutron-interferometry phase analysis",
        "cavendish": "simulate the quantum Cavendish runs",
        "ging-evolve": "evolve the condensate mode and track non-Gaussianity",
        "nc-check": "three-way phase comparison for the gravcat branch",
    }
    for name in SCENARIOS:
        sp = sub.add_parser(name, help=help_text[name])
        sp.add_argument("--config", help="path to a JSON scenario config")
        sp.add_argument("--out", help="output file path (default stdout)")
        sp.add_argument("--format", choices=["csv", "json"], default="csv")
        sp.add_argument("--seed", type=int, help="RNG seed (overrides config)")
        sp.add_argument("--threads", type=int, default=1)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.config:
            cfg = load_config(args.config)
            if cfg.scenario != args.command:
                raise ConfigError(
                    f"config scenario {cfg.scenario!r} does not match "
                    f"subcommand {args.command!r}")
        else:
            cfg = validate_config({"scenario": args.command,
                                   "seed": args.seed})
        if args.seed is not None:
            cfg.seed = args.seed
        if cfg.seed is None and args.command in RANDOMIZED:
            raise ConfigError(f"scenario '{args.command}' requires --seed")
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        table = run(cfg, threads=args.threads)
        text = emit(table, args.format, args.out or cfg.out)
        if not (args.out or cfg.out):
            sys.stdout.write(text)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except Exception as exc:  # runtime failure contract: exit code 2
        print(f"runtime error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
