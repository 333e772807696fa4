"""
Command-line front end: ``giantnode {scatter,sweep,teleport,compile}``.

All commands read one JSON document with optional sections ``node``,
``hardware``, ``sweep`` and ``teleport``. Rates are in units of the
single-point decay rate, phases in units of pi (keys ending in ``_pi``).

Exit codes: 0 success, 1 usage or configuration error, 2 domain error
(resonance singularity, infeasible routing condition, unsupported hardware
regime).
"""

from __future__ import annotations

import argparse
import copy
import csv
import hashlib
import io
import json
import math
import os
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import fields

import numpy as np

from . import __version__
from .core import NodeParams, ParameterError
from .gates import PhaseMatchingError, gate_attempt, gate_fidelity, gate_from_node
from .hardware import (ConfigError, HardwareConfig, HardwareDomainError, compile_node,
                       mutual_inductances, qubit_spec)
from .nonrecip import UndefinedNonreciprocity, circulator_fidelity, circulator_params, nonreciprocity
from .routing import (InfeasibleCondition, UndefinedFidelity, routing_fidelities,
                      trans_waveguide_alpha, trans_waveguide_params, unidirectional_coefficient,
                      unidirectional_params)
from .solver import ClosedFormSingular, ResonanceSingularity, scattering_matrix
from .teleport import GateConfig, NotNormalized, entangle_nodes, run_teleport

PI = math.pi

EXIT_OK, EXIT_CONFIG, EXIT_DOMAIN = 0, 1, 2
DOMAIN_ERRORS = (ResonanceSingularity, ClosedFormSingular, InfeasibleCondition, HardwareDomainError)

# ---------------------------------------------------------------------------
# configuration


PERTURBATIONS = ("d_omega", "d_alpha_pi", "d_phi_pi")
COMMON_KEYS = ("regime", "delta", "gamma_e") + PERTURBATIONS
REGIME_KEYS = {
    "explicit": ("g", "theta_pi", "omega", "alpha_pi", "phi_pi", "tau", "level_shift"),
    "symmetric": ("theta_pi", "omega", "alpha_pi", "g0", "theta1_pi"),
    "trans_waveguide": ("alpha_pi", "omega", "theta2_pi", "theta3_pi", "g0"),
    "unidirectional": ("alpha_pi", "omega", "theta1_pi", "theta3_pi", "k", "phi_a_pi", "g0"),
    "circulator": ("alpha_pi", "omega", "theta1_pi", "theta3_pi", "g0"),
    "hardware": (),
}
HW_PI_KEYS = {"mod_phase_pi": "mod_phase", "mod_phase_g_pi": "mod_phase_g", "prop_phase_pi": "prop_phase"}
HW_KEYS = tuple(sorted({f.name for f in fields(HardwareConfig)} - set(HW_PI_KEYS.values())
                       | set(HW_PI_KEYS)))
TELEPORT_KEYS = ("omega_on", "omega_off", "gamma_e", "alpha_pi", "theta1_pi", "theta3_pi",
                 "input", "shots", "seed", "mode")


def _num(d: dict, key: str, path: str, default=None):
    v = d.get(key, default)
    if isinstance(v, bool) or not isinstance(v, (int, float)):
        raise ConfigError(f"{path}.{key}: expected a number, got {v!r}")
    return float(v)


def _numvec(d: dict, key: str, path: str, n: int, default):
    v = d.get(key, default)
    vals = v if isinstance(v, list) else [v]
    if len(vals) == 1 and n > 1:
        vals = vals * n
    if len(vals) != n:
        raise ConfigError(f"{path}.{key}: expected {n} values, got {len(vals)}")
    out = []
    for i, x in enumerate(vals):
        if isinstance(x, bool) or not isinstance(x, (int, float)):
            raise ConfigError(f"{path}.{key}[{i}]: expected a number, got {x!r}")
        out.append(float(x))
    return tuple(out)


def _section(cfg: dict, name: str) -> dict:
    sec = cfg.get(name, {})
    if not isinstance(sec, dict):
        raise ConfigError(f"{name}: expected an object")
    return sec


def _check_keys(sec: dict, allowed, path: str):
    unknown = sorted(set(sec) - set(allowed))
    if unknown:
        raise ConfigError(f"{path}.{unknown[0]}: unknown key (valid: {', '.join(sorted(allowed))})")


def hardware_config(cfg: dict) -> HardwareConfig:
    sec = _section(cfg, "hardware")
    _check_keys(sec, HW_KEYS, "hardware")
    d = {}
    for k, v in sec.items():
        if k in HW_PI_KEYS:
            v = [PI * x for x in v] if isinstance(v, list) else PI * v
            k = HW_PI_KEYS[k]
        d[k] = v
    try:
        return HardwareConfig.from_dict(d)
    except ConfigError as exc:
        raise ConfigError(f"hardware: {exc}") from None


def _regime(sec: dict) -> str:
    regime = sec.get("regime", "explicit")
    if regime not in REGIME_KEYS:
        raise ConfigError(f"node.regime: unknown regime {regime!r} (valid: {', '.join(REGIME_KEYS)})")
    return regime


def build_node(cfg: dict, nominal: bool = False) -> NodeParams:
    """Node parameters described by the ``node`` section.

    Perturbations (``d_omega``, ``d_alpha_pi``, ``d_phi_pi``) are applied on top
    of the regime's design point unless ``nominal`` is set. A perturbation
    that drives Omega negative is folded into ``alpha + pi``.
    """
    sec = _section(cfg, "node")
    regime = _regime(sec)
    _check_keys(sec, COMMON_KEYS + REGIME_KEYS[regime], "node")
    path = "node"
    delta = _num(sec, "delta", path, 0.0)
    gamma_e = _numvec(sec, "gamma_e", path, 2, 0.0)
    ph = lambda key, default=0.0: PI * _num(sec, key, path, default)  # noqa: E731
    try:
        if regime == "explicit":
            p = NodeParams(g=_numvec(sec, "g", path, 4, 1.0),
                           theta=tuple(PI * t for t in _numvec(sec, "theta_pi", path, 4, 0.0)),
                           omega=_num(sec, "omega", path, 0.0), alpha=ph("alpha_pi"),
                           gamma_e=gamma_e, phi=tuple(PI * t for t in _numvec(sec, "phi_pi", path, 2, 0.0)),
                           delta=delta, tau=_numvec(sec, "tau", path, 2, 0.0),
                           level_shift=_numvec(sec, "level_shift", path, 2, 0.0))
        elif regime == "symmetric":
            p = NodeParams.symmetric(ph("theta_pi", 1.0), _num(sec, "omega", path, 0.0), ph("alpha_pi"),
                                     delta, gamma_e, _num(sec, "g0", path, 1.0), ph("theta1_pi"))
        elif regime == "trans_waveguide":
            g0 = _num(sec, "g0", path, 1.0)
            theta2 = ph("theta2_pi", 1.0)
            if "omega" in sec:
                if "alpha_pi" in sec:
                    raise ConfigError("node: trans_waveguide takes either omega or alpha_pi, not both")
                alpha = trans_waveguide_alpha(_num(sec, "omega", path), theta2, g0 * g0)
            else:
                alpha = ph("alpha_pi", 1.0)
            theta3 = ph("theta3_pi") if "theta3_pi" in sec else None
            p = trans_waveguide_params(alpha, theta2, theta3=theta3, g0=g0, delta=delta, gamma_e=gamma_e)
        elif regime == "unidirectional":
            p = unidirectional_params(ph("alpha_pi"), ph("theta1_pi"), ph("theta3_pi"),
                                      int(_num(sec, "k", path, 1)), omega=_num(sec, "omega", path, 0.0),
                                      phi_a=ph("phi_a_pi", 0.5), g0=_num(sec, "g0", path, 1.0),
                                      delta=delta, gamma_e=gamma_e)
        elif regime == "circulator":
            p = circulator_params(ph("alpha_pi", 0.5), ph("theta1_pi"), ph("theta3_pi"),
                                  omega=_num(sec, "omega", path, 5.0), delta=delta,
                                  g0=_num(sec, "g0", path, 1.0), gamma_e=gamma_e)
        else:
            p = compile_node(hardware_config(cfg), delta=delta)
            if "gamma_e" in sec:
                p = p.with_(gamma_e=gamma_e)
    except ParameterError as exc:
        raise ConfigError(f"node: {exc}") from None
    if nominal:
        return p
    omega = p.omega + _num(sec, "d_omega", path, 0.0)
    alpha = p.alpha + ph("d_alpha_pi")
    if omega < 0:
        omega, alpha = -omega, alpha + PI
    d_phi = ph("d_phi_pi")
    return p.with_(omega=omega, alpha=alpha, phi=(p.phi[0] + d_phi, p.phi[1] + d_phi))


def sweepable_params(cfg: dict) -> list[str]:
    regime = _regime(_section(cfg, "node"))
    names = [f"node.{k}" for k in COMMON_KEYS + REGIME_KEYS[regime] if k != "regime"]
    if regime == "hardware":
        names += [f"hardware.{k}" for k in HW_KEYS]
    return names


def set_param(cfg: dict, name: str, value: float) -> dict:
    """Copy of ``cfg`` with the dotted parameter ``name`` set to ``value``.

    ``name`` may omit the ``node.`` prefix and may end in a list index, as in
    ``node.theta_pi.1``.
    """
    parts = name.split(".")
    if parts[0] not in ("node", "hardware"):
        parts.insert(0, "node")
    index = None
    if len(parts) == 3 and parts[2].isdigit():
        index = int(parts[2])
        parts = parts[:2]
    valid = sweepable_params(cfg)
    if len(parts) != 2 or ".".join(parts) not in valid:
        raise ConfigError(f"unknown parameter {name!r} (valid: {', '.join(valid)})")
    out = copy.deepcopy(cfg)
    sec = out.setdefault(parts[0], {})
    if index is None:
        sec[parts[1]] = value
    else:
        cur = sec.get(parts[1])
        if not isinstance(cur, list) or index >= len(cur):
            raise ConfigError(f"{parts[0]}.{parts[1]}: parameter {name!r} needs an explicit list "
                              f"with more than {index} entries")
        cur[index] = value
    return out


# ---------------------------------------------------------------------------
# metrics


def metric_names() -> list[str]:
    names = [f"S{n}{m}" for n in range(1, 5) for m in range(1, 5)]
    names += ["Ub"]
    names += [f"N_{i}_{j}" for i in range(1, 5) for j in range(1, 5) if i != j]
    names += ["F_dire", "F_trans", "F_cir", "F_cir_ccw", "F_gate"]
    return names


def _metric(name: str, p: NodeParams, S, cfg: dict) -> float:
    if name[0] == "S" and len(name) == 3:
        return S.p(int(name[1]), int(name[2]))
    if name == "Ub":
        return unidirectional_coefficient(S)
    if name.startswith("N_"):
        _, i, j = name.split("_")
        try:
            return nonreciprocity(S, int(i), int(j))
        except UndefinedNonreciprocity:
            return math.nan
    if name in ("F_dire", "F_trans"):
        try:
            return routing_fidelities(S)[name == "F_trans"]
        except UndefinedFidelity:
            return math.nan
    if name == "F_cir":
        return circulator_fidelity(S, "cw")
    if name == "F_cir_ccw":
        return circulator_fidelity(S, "ccw")
    if name == "F_gate":
        nominal = build_node(cfg, nominal=True)
        try:
            ideal = gate_from_node(nominal)
        except PhaseMatchingError:
            ideal = gate_attempt(nominal)
        return gate_fidelity(gate_attempt(p), ideal)
    raise ConfigError(f"unknown metric {name!r} (valid: {', '.join(metric_names())})")


def evaluate(cfg: dict, metrics: list[str]) -> list[float]:
    p = build_node(cfg)
    S = scattering_matrix(p)
    return [float(_metric(m, p, S, cfg)) for m in metrics]


def parse_axis(axis: str) -> tuple[str, np.ndarray]:
    try:
        name, lo, hi, n = axis.rsplit(":", 3)
        lo, hi, n = float(lo), float(hi), int(n)
    except ValueError:
        raise ConfigError(f"bad axis {axis!r}; expected param:lo:hi:n") from None
    if n < 1:
        raise ConfigError(f"axis {name}: need at least one point")
    return name, np.linspace(lo, hi, n)


def worker_count() -> int:
    env = os.environ.get("GIANTNODE_THREADS")
    if env is None:
        return os.cpu_count() or 1
    try:
        n = int(env)
    except ValueError:
        raise ConfigError(f"GIANTNODE_THREADS must be an integer, got {env!r}") from None
    return max(1, n)


def sweep_grid(cfg: dict, x: tuple[str, np.ndarray], y: tuple[str, np.ndarray], metrics: list[str],
               workers: int | None = None) -> list[tuple[float, float, list[float]]]:
    """Evaluate ``metrics`` on the grid, row-major (``y`` outer, ``x`` inner)."""
    bad = [m for m in metrics if m not in metric_names()]
    if bad:
        raise ConfigError(f"unknown metric {bad[0]!r} (valid: {', '.join(metric_names())})")
    (xn, xs), (yn, ys) = x, y
    points = []
    for yv in ys:
        for xv in xs:
            points.append((float(xv), float(yv), set_param(set_param(cfg, xn, float(xv)), yn, float(yv))))
    build_node(points[0][2])  # surface config errors before fanning out
    workers = worker_count() if workers is None else workers
    if workers == 1:
        values = [evaluate(c, metrics) for _, _, c in points]
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            values = list(pool.map(lambda pt: evaluate(pt[2], metrics), points))
    return [(xv, yv, v) for (xv, yv, _), v in zip(points, values)]


def _fmt(v: float) -> str:
    return format(v, ".17g")


def grid_csv(rows, metrics: list[str]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["x", "y"] + metrics)
    for xv, yv, vals in rows:
        w.writerow([_fmt(xv), _fmt(yv)] + [_fmt(v) for v in vals])
    return buf.getvalue()


VIRIDIS = ("#440154", "#472d7b", "#3b528b", "#2c728e", "#21918c",
           "#28ae80", "#5ec962", "#addc30", "#fde725")


def _color(t: float) -> str:
    if not math.isfinite(t):
        return "#ffffff"
    t = min(1.0, max(0.0, t)) * (len(VIRIDIS) - 1)
    k = min(int(t), len(VIRIDIS) - 2)
    f = t - k
    a, b = VIRIDIS[k], VIRIDIS[k + 1]
    rgb = [round(int(a[i:i + 2], 16) * (1 - f) + int(b[i:i + 2], 16) * f) for i in (1, 3, 5)]
    return "#{:02x}{:02x}{:02x}".format(*rgb)


def heatmap_svg(rows, nx: int, ny: int, metric_index: int, title: str, config_hash: str,
                cell: int = 8) -> str:
    vals = np.array([r[2][metric_index] for r in rows], dtype=float)
    finite = vals[np.isfinite(vals)]
    lo, hi = (float(finite.min()), float(finite.max())) if finite.size else (0.0, 1.0)
    span = hi - lo if hi > lo else 1.0
    width, height = nx * cell, ny * cell
    out = [f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height + 20}" '
           f'viewBox="0 0 {width} {height + 20}">',
           f"<metadata>config-sha256:{config_hash}; metric:{title}; "
           f"min:{_fmt(lo)}; max:{_fmt(hi)}</metadata>",
           f"<title>{title}</title>"]
    for k, v in enumerate(vals):
        i, j = k % nx, k // nx
        # y grows upward in the plot
        out.append(f'<rect x="{i * cell}" y="{(ny - 1 - j) * cell}" width="{cell}" height="{cell}" '
                   f'fill="{_color((v - lo) / span)}"/>')
    out.append(f'<text x="2" y="{height + 15}" font-size="12" font-family="monospace">'
               f"{title} [{lo:.4g}, {hi:.4g}]</text>")
    out.append("</svg>")
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# commands


def _load(path: str) -> tuple[dict, bytes]:
    try:
        with open(path, "rb") as fh:
            raw = fh.read()
    except OSError as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    try:
        cfg = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"config is not valid JSON: {exc}") from None
    if not isinstance(cfg, dict):
        raise ConfigError("config must be a JSON object")
    _check_keys(cfg, ("node", "hardware", "sweep", "teleport"), "config")
    return cfg, raw


def _dump(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=True) + "\n"


def _c(z) -> list[float]:
    return [float(z.real), float(z.imag)]


def _node_dict(p: NodeParams) -> dict:
    d = {}
    for k, v in p.as_dict().items():
        d[k] = list(v) if isinstance(v, tuple) else v
    return d


def cmd_scatter(args, out) -> int:
    cfg, _ = _load(args.config)
    p = build_node(cfg)
    S = scattering_matrix(p)
    ports = [args.port] if args.port else [1, 2, 3, 4]
    if args.format == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(["input", "output", "re", "im", "prob"])
        for n in ports:
            for m in range(1, 5):
                a = S.amp(n, m)
                w.writerow([n, m, _fmt(a.real), _fmt(a.imag), _fmt(S.p(n, m))])
        return EXIT_OK
    report = {
        "params": _node_dict(p),
        "rows": [{"input": n,
                  "amplitudes": [_c(S.amp(n, m)) for m in range(1, 5)],
                  "probabilities": [S.p(n, m) for m in range(1, 5)]} for n in ports],
        "unitarity_error": S.unitarity_error(),
    }
    out.write(_dump(report))
    return EXIT_OK


def cmd_sweep(args, out) -> int:
    cfg, raw = _load(args.config)
    sec = _section(cfg, "sweep")
    _check_keys(sec, ("x", "y", "metric"), "sweep")
    xs, ys = args.x or sec.get("x"), args.y or sec.get("y")
    metric = args.metric or sec.get("metric")
    if not (xs and ys and metric):
        raise ConfigError("sweep needs --x, --y and --metric (or a sweep section providing them)")
    metrics = metric.split(",") if isinstance(metric, str) else list(metric)
    x, y = parse_axis(xs), parse_axis(ys)
    rows = sweep_grid(cfg, x, y, metrics)
    text = grid_csv(rows, metrics)
    if args.output:
        with open(args.output, "w", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    if args.svg:
        digest = hashlib.sha256(raw).hexdigest()
        with open(args.svg, "w") as fh:
            fh.write(heatmap_svg(rows, len(x[1]), len(y[1]), 0, metrics[0], digest))
    return EXIT_OK


def _parse_state(text) -> np.ndarray:
    try:
        if isinstance(text, str):
            vals = [complex(s.strip().replace(" ", "")) for s in text.split(",")]
        else:
            vals = [complex(v[0], v[1]) if isinstance(v, list) else complex(v) for v in text]
    except (ValueError, TypeError, IndexError):
        raise ConfigError(f"input: cannot parse state {text!r}") from None
    if len(vals) != 2:
        raise ConfigError(f"input: need two amplitudes, got {len(vals)}")
    return np.array(vals, dtype=complex)


def gate_config(cfg: dict) -> GateConfig:
    sec = _section(cfg, "teleport")
    _check_keys(sec, TELEPORT_KEYS, "teleport")
    on = sec.get("omega_on")
    if on is None or on == "inf":
        omega_on = math.inf
    else:
        omega_on = _num(sec, "omega_on", "teleport")
    path = "teleport"
    g = GateConfig(omega_on=omega_on, omega_off=_num(sec, "omega_off", path, 0.0),
                   gamma_e=_num(sec, "gamma_e", path, 0.0), alpha=PI * _num(sec, "alpha_pi", path, 0.0),
                   theta1=PI * _num(sec, "theta1_pi", path, 0.0), theta3=PI * _num(sec, "theta3_pi", path, 0.0))
    if g.omega_on < 0 or g.omega_off < 0 or g.gamma_e < 0:
        raise ConfigError("teleport: strengths and rates must be non-negative")
    return g


def cmd_teleport(args, out) -> int:
    cfg, _ = _load(args.config)
    gates = gate_config(cfg)
    sec = cfg.get("teleport", {})
    state = _parse_state(args.input if args.input is not None else sec.get("input", "1,0"))
    mode = args.mode or sec.get("mode", "enumerated")
    if mode not in ("enumerated", "sampled"):
        raise ConfigError(f"teleport.mode: unknown mode {mode!r}")
    seed = args.seed if args.seed is not None else int(_num(sec, "seed", "teleport", 0))
    shots = args.shots if args.shots is not None else int(_num(sec, "shots", "teleport", 10000))
    if shots < 1:
        raise ConfigError("shots must be >= 1")
    try:
        res = run_teleport(state, gates, seed=seed, mode=mode, shots=shots)
    except NotNormalized as exc:
        raise ConfigError(f"input: {exc}") from None
    report = {"input": [_c(z) for z in state], "gates": gates.to_dict(), "seed": seed}
    report.update(res.to_dict())
    report["bell"] = entangle_nodes(gates, seed=seed, mode=mode, shots=shots).to_dict()
    out.write(_dump(report))
    return EXIT_OK


def cmd_compile(args, out) -> int:
    cfg, _ = _load(args.config)
    hw = hardware_config(cfg)
    delta = _num(_section(cfg, "node"), "delta", "node", 0.0)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        p = compile_node(hw, delta=delta)
        mi = mutual_inductances(hw)
        q = qubit_spec(hw, mi)
    msgs = sorted({str(w.message) for w in caught})
    for m in msgs:
        print(f"warning: {m}", file=sys.stderr)
    report = {
        "params": _node_dict(p),
        "params_pi": {"theta_pi": [t / PI for t in p.theta], "alpha_pi": p.alpha / PI,
                      "phi_pi": [t / PI for t in p.phi]},
        "mutual_inductance": {"M0": list(mi.M0), "M1": list(mi.M1), "M0_g": mi.M0_g, "M1_g": mi.M1_g},
        "qubits": {"L_Q": list(q.L_Q), "omega_q": list(q.omega_q), "E_C": list(q.E_C), "I_q": list(q.I_q)},
        "warnings": msgs,
    }
    out.write(_dump(report))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_CONFIG, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="giantnode", description="Giant-atom node scattering, routing, gates and teleportation.")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("scatter", help="dump the scattering matrix of a node")
    s.add_argument("config")
    s.add_argument("--port", type=int, choices=[1, 2, 3, 4])
    s.add_argument("--format", choices=["json", "csv"], default="json")
    s.set_defaults(func=cmd_scatter)

    s = sub.add_parser("sweep", help="evaluate metrics on a 2D parameter grid (CSV)")
    s.add_argument("config")
    s.add_argument("--x", help="param:lo:hi:n")
    s.add_argument("--y", help="param:lo:hi:m")
    s.add_argument("--metric", help="metric name, or a comma-separated list")
    s.add_argument("-o", "--output", help="CSV file (default stdout)")
    s.add_argument("--svg", help="also write a heatmap of the first metric")
    s.set_defaults(func=cmd_sweep)

    s = sub.add_parser("teleport", help="run the node-to-node teleportation protocol")
    s.add_argument("config")
    s.add_argument("--input", help="amplitudes a0,a1 (Python complex syntax, e.g. 0.6,0.8j)")
    s.add_argument("--shots", type=int)
    s.add_argument("--seed", type=int)
    s.add_argument("--mode", choices=["sampled", "enumerated"])
    s.set_defaults(func=cmd_teleport)

    s = sub.add_parser("compile", help="compile a hardware section into node parameters")
    s.add_argument("config")
    s.set_defaults(func=cmd_compile)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except DOMAIN_ERRORS as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
