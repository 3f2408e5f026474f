"""Command-line front end: Wigner matrices, concurrence sweeps and the Bell curve.

All quantities are in natural units (c = hbar = 1); the mass sets the energy
scale, momenta share its unit, rapidity and angles are dimensionless
(angles in radians).

Configuration may come from an INI file with a ``[scenario]`` section,
for example::

    [scenario]
    # energy units
    mass = 1
    momentum = 1e4
    # dimensionless
    rapidity = 20
    # radians, start:stop:count
    phi_range = 0:pi/2:13
    format = csv
    seed = 0

Command-line flags override file values.
"""

from __future__ import annotations

import argparse
import ast
import configparser
import io
import itertools
import json
import math
import operator
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np

from . import entanglement, states, wigner
from .kinematics import DomainError, SphericalMomentum

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_IO = 3

CSV_COLUMNS = ("m", "p", "xi", "phi", "concurrence", "bell_max_oracle", "bell_max_opt")
CURVE_COLUMNS = ("phi", "concurrence", "bell_max_oracle", "bell_max_opt")
MONOTONE_TOL = 1e-9

ASYMPTOTIC_MOMENTUM = 1e4
ASYMPTOTIC_RAPIDITY = 20.0


class ConfigError(ValueError):
    pass


# --- parsing -----------------------------------------------------------------

_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}
_UNARY = {ast.UAdd: operator.pos, ast.USub: operator.neg}


def parse_number(text: str) -> float:
    """Parse a real number; arithmetic with ``pi`` is allowed (e.g. ``pi/12``)."""

    def ev(node):
        if isinstance(node, ast.Expression):
            return ev(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return float(node.value)
        if isinstance(node, ast.Name) and node.id == "pi":
            return math.pi
        if isinstance(node, ast.BinOp) and type(node.op) in _BINOPS:
            return _BINOPS[type(node.op)](ev(node.left), ev(node.right))
        if isinstance(node, ast.UnaryOp) and type(node.op) in _UNARY:
            return _UNARY[type(node.op)](ev(node.operand))
        raise ConfigError(f"cannot parse number {text!r}")

    try:
        value = ev(ast.parse(str(text).strip(), mode="eval"))
    except (SyntaxError, ZeroDivisionError, OverflowError) as exc:
        raise ConfigError(f"cannot parse number {text!r}") from exc
    if not math.isfinite(value):
        raise ConfigError(f"value {text!r} is not finite")
    return value


@dataclass(frozen=True)
class Range:
    start: float
    stop: float
    count: int

    def values(self) -> list[float]:
        if self.count == 1:
            return [self.start]
        return [float(v) for v in np.linspace(self.start, self.stop, self.count)]


def parse_range(text: str) -> Range:
    """``start:stop:count`` with both ends inclusive."""
    parts = str(text).split(":")
    if len(parts) != 3:
        raise ConfigError(f"range must be start:stop:count, got {text!r}")
    try:
        count = int(parts[2])
    except ValueError as exc:
        raise ConfigError(f"range count must be an integer, got {parts[2]!r}") from exc
    if count < 1:
        raise ConfigError("range count must be at least 1")
    return Range(parse_number(parts[0]), parse_number(parts[1]), count)


@dataclass
class ScenarioConfig:
    mass: Range = field(default_factory=lambda: Range(1.0, 1.0, 1))
    momentum: Range = field(default_factory=lambda: Range(ASYMPTOTIC_MOMENTUM, ASYMPTOTIC_MOMENTUM, 1))
    rapidity: Range = field(default_factory=lambda: Range(ASYMPTOTIC_RAPIDITY, ASYMPTOTIC_RAPIDITY, 1))
    phi: Range = field(default_factory=lambda: Range(0.0, 0.0, 1))
    format: str = "csv"
    out: str | None = None
    seed: int = 0
    starts: int = 32
    jobs: int = 1

    def grid(self):
        """Grid points (m, p, xi, phi) in row-major order, phi varying fastest."""
        return itertools.product(
            self.mass.values(), self.momentum.values(), self.rapidity.values(), self.phi.values()
        )

    def validate(self) -> "ScenarioConfig":
        if self.format not in ("csv", "json"):
            raise ConfigError(f"format must be csv or json, got {self.format!r}")
        if self.starts < 1:
            raise ConfigError("starts must be at least 1")
        if self.jobs < 1:
            raise ConfigError("jobs must be at least 1")
        for m, p, xi, phi in self.grid():
            if not m > 0:
                raise ConfigError(f"mass must be positive, got {m!r}")
            if not p > 0:
                raise ConfigError(f"momentum must be positive, got {p!r}")
            if abs(xi) > 300:
                raise ConfigError(f"|rapidity| must not exceed 300, got {xi!r}")
            if not 0 <= phi < 2 * math.pi:
                raise ConfigError(f"phi must lie in [0, 2 pi), got {phi!r}")
        return self

    def as_dict(self) -> dict:
        d = asdict(self)
        d.pop("out")
        d.pop("jobs")
        return d


_RANGE_KEYS = {"mass": "mass", "momentum": "momentum", "rapidity": "rapidity", "phi": "phi"}


def _point_or_range(single, ranged):
    if ranged is not None:
        return parse_range(ranged)
    if single is not None:
        v = parse_number(single)
        return Range(v, v, 1)
    return None


def load_config(path: str | None, args: argparse.Namespace | None = None) -> ScenarioConfig:
    """Read a ``[scenario]`` INI file (optional) and apply command-line overrides."""
    cfg = ScenarioConfig()
    if path is not None:
        parser = configparser.ConfigParser(inline_comment_prefixes=("#", ";"))
        with open(path) as fh:
            parser.read_file(fh)
        if "scenario" not in parser:
            raise ConfigError(f"{path}: missing [scenario] section")
        sec = parser["scenario"]
        known = set(_RANGE_KEYS) | {f"{k}_range" for k in _RANGE_KEYS} | {"format", "out", "seed", "starts", "jobs"}
        unknown = set(sec) - known
        if unknown:
            raise ConfigError(f"{path}: unknown keys {sorted(unknown)}")
        for key, attr in _RANGE_KEYS.items():
            r = _point_or_range(sec.get(key), sec.get(f"{key}_range"))
            if r is not None:
                setattr(cfg, attr, r)
        cfg.format = sec.get("format", cfg.format)
        cfg.out = sec.get("out", cfg.out)
        cfg.seed = sec.getint("seed", cfg.seed)
        cfg.starts = sec.getint("starts", cfg.starts)
        cfg.jobs = sec.getint("jobs", cfg.jobs)

    if args is not None:
        for key, attr in _RANGE_KEYS.items():
            single = getattr(args, key, None)
            ranged = getattr(args, f"{key}_range", None)
            r = _point_or_range(single, ranged)
            if r is not None:
                setattr(cfg, attr, r)
        for attr in ("format", "out", "seed", "starts", "jobs"):
            value = getattr(args, attr, None)
            if value is not None:
                setattr(cfg, attr, value)
    return cfg.validate()


# --- computations ------------------------------------------------------------

@dataclass(frozen=True)
class SweepRow:
    m: float
    p: float
    xi: float
    phi: float
    concurrence: float
    bell_max_oracle: float
    bell_max_opt: float
    reference: str
    trace_distance: float


def boosted_spin_state(m: float, p: float, xi: float, phi: float) -> np.ndarray:
    """Reduced spin state of the Bell pair state after an x3 boost."""
    state = states.boost_state(states.bell_momentum_state(m, p, phi), xi)
    return states.reduce_over_momentum(state)


def evaluate_point(point, seed: int = 0, starts: int = 32) -> SweepRow:
    m, p, xi, phi = point
    rho = boosted_spin_state(m, p, xi, phi)
    opt, _ = entanglement.bell_max_optimize(rho, n_starts=starts, seed=seed)
    ref, dist = entanglement.nearest_reference(rho)
    return SweepRow(
        m, p, xi, phi,
        entanglement.concurrence(rho),
        entanglement.bell_max_oracle(rho),
        opt,
        ref,
        dist,
    )


def _evaluate_star(args):
    return evaluate_point(*args)


def cmd_concurrence_sweep(cfg: ScenarioConfig) -> list[SweepRow]:
    """One row per grid point, in grid order regardless of the worker count."""
    tasks = [(pt, cfg.seed, cfg.starts) for pt in cfg.grid()]
    if cfg.jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            return list(pool.map(_evaluate_star, tasks))
    return [_evaluate_star(t) for t in tasks]


def is_monotone(rows, key: str = "bell_max_oracle", tol: float = MONOTONE_TOL) -> bool:
    values = [getattr(r, key) for r in rows]
    return all(b >= a - tol for a, b in zip(values, values[1:]))


def cmd_bell_curve(cfg: ScenarioConfig) -> tuple[list[SweepRow], dict]:
    """(concurrence, B_max) pairs sorted by concurrence, plus a monotonicity report."""
    rows = sorted(cmd_concurrence_sweep(cfg), key=lambda r: (r.concurrence, r.phi))
    meta = {
        "monotone_oracle": is_monotone(rows, "bell_max_oracle"),
        "monotone_opt": is_monotone(rows, "bell_max_opt"),
        "points": len(rows),
    }
    return rows, meta


def cmd_wigner(m: float, p: float, theta: float, phi: float, xi: float) -> dict:
    sp = SphericalMomentum(p, theta, phi % (2 * math.pi))
    closed = wigner.transform_closed_form(m, sp, xi)
    product = wigner.transform_operator_product(m, sp, xi)
    block = wigner.positive_block(m, sp, xi)
    co = wigner.coefficients(m, sp, xi)
    return {
        "coefficients": asdict(co),
        "a2_plus_b2": co.A**2 + co.B**2,
        "closed_form": closed,
        "operator_product": product,
        "positive_block": block,
        "positive_block_deviation": float(np.max(np.abs(closed[:2, :2] - product[:2, :2]))),
        "negative_column_deviation": float(np.max(np.abs(closed[:, 2:] - product[:, 2:]))),
    }


# --- output ------------------------------------------------------------------

def fmt(x: float) -> str:
    return f"{x:.17g}"


def rows_to_csv(rows, columns=CSV_COLUMNS, comments=()) -> str:
    buf = io.StringIO()
    for line in comments:
        buf.write(f"# {line}\n")
    buf.write(",".join(columns) + "\n")
    for r in rows:
        buf.write(",".join(fmt(getattr(r, c)) for c in columns) + "\n")
    return buf.getvalue()


def rows_to_json(rows, meta: dict) -> str:
    payload = {"metadata": meta, "rows": [asdict(r) for r in rows]}
    return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def _complex_rows(mat) -> list:
    return [[[float(z.real), float(z.imag)] for z in row] for row in np.asarray(mat)]


def format_matrix(mat) -> str:
    lines = []
    for row in np.asarray(mat):
        lines.append("  ".join(f"{z.real:+.10e}{z.imag:+.10e}j" for z in row))
    return "\n".join(lines)


def wigner_report(result: dict, as_json: bool) -> str:
    if as_json:
        payload = {
            k: (_complex_rows(v) if isinstance(v, np.ndarray) else v) for k, v in result.items()
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    co = result["coefficients"]
    out = [
        "coefficients: " + ", ".join(f"{k}={fmt(v)}" for k, v in co.items()),
        f"A^2 + B^2 = {fmt(result['a2_plus_b2'])}",
        "",
        "closed form T (4x4):",
        format_matrix(result["closed_form"]),
        "",
        "operator product U_FW(Lp) S U_FW(p)^dagger (4x4):",
        format_matrix(result["operator_product"]),
        "",
        "positive-energy Wigner block (2x2, prefactor stripped):",
        format_matrix(result["positive_block"]),
        "",
        f"max deviation on positive block: {result['positive_block_deviation']:.3e}",
        f"max deviation on negative-energy columns (not asserted): {result['negative_column_deviation']:.3e}",
    ]
    return "\n".join(out) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
        return
    with open(out, "w", newline="\n") as fh:
        fh.write(text)


# --- argparse ----------------------------------------------------------------

def _add_scenario_args(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--config", help="INI file with a [scenario] section")
    sp.add_argument("--mass", help="particle mass (energy units)")
    sp.add_argument("--momentum", help="momentum magnitude p (energy units)")
    sp.add_argument("--rapidity", help="boost rapidity along x3")
    sp.add_argument("--phi", help="angle between the two pair momenta (radians)")
    sp.add_argument("--mass-range", dest="mass_range", metavar="START:STOP:COUNT")
    sp.add_argument("--momentum-range", dest="momentum_range", metavar="START:STOP:COUNT")
    sp.add_argument("--rapidity-range", dest="rapidity_range", metavar="START:STOP:COUNT")
    sp.add_argument("--phi-range", dest="phi_range", metavar="START:STOP:COUNT")
    sp.add_argument("--out", help="output path (default stdout)")
    sp.add_argument("--format", choices=("csv", "json"))
    sp.add_argument("--seed", type=int, help="optimizer seed (default 0)")
    sp.add_argument("--starts", type=int, help="optimizer random starts (default 32)")
    sp.add_argument("--jobs", type=int, help="worker processes (default 1)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="meanspin",
        description="Mean-spin entanglement of two Dirac particles under x3 boosts.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    w = sub.add_parser("wigner", help="print the transformation matrices for one momentum")
    w.add_argument("--mass", default="1")
    w.add_argument("--momentum", default="1")
    w.add_argument("--theta", default="pi/2", help="polar angle from +x3 (radians)")
    w.add_argument("--phi", default="0", help="azimuth from +x1 (radians)")
    w.add_argument("--rapidity", default="1")
    w.add_argument("--format", choices=("text", "json"), default="text")
    w.add_argument("--out")

    s = sub.add_parser("sweep", help="concurrence and B_max over a parameter grid")
    _add_scenario_args(s)

    b = sub.add_parser("bell-curve", help="B_max versus concurrence over a phi sweep")
    _add_scenario_args(b)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "wigner":
            m, p, theta, phi, xi = (
                parse_number(v) for v in (args.mass, args.momentum, args.theta, args.phi, args.rapidity)
            )
            text = wigner_report(cmd_wigner(m, p, theta, phi, xi), args.format == "json")
            _emit(text, args.out)
            return EXIT_OK

        if args.command == "bell-curve" and args.phi_range is None and args.phi is None:
            args.phi_range = "0:pi/2:50"
        try:
            cfg = load_config(args.config, args)
        except OSError as exc:
            print(f"meanspin: cannot read config: {exc}", file=sys.stderr)
            return EXIT_IO

        if args.command == "sweep":
            rows = cmd_concurrence_sweep(cfg)
            meta = {"config": cfg.as_dict()}
            text = rows_to_csv(rows) if cfg.format == "csv" else rows_to_json(rows, meta)
        else:
            rows, report = cmd_bell_curve(cfg)
            meta = {"config": cfg.as_dict(), **report}
            if not report["monotone_oracle"]:
                print("meanspin: warning: B_max is not monotone in concurrence", file=sys.stderr)
            if cfg.format == "csv":
                comments = [f"{k}={str(v).lower()}" for k, v in report.items()]
                text = rows_to_csv(rows, CURVE_COLUMNS, comments)
            else:
                text = rows_to_json(rows, meta)
        _emit(text, cfg.out)
    except (ConfigError, DomainError, configparser.Error) as exc:
        print(f"meanspin: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"meanspin: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
