"""Command-line interface: spectra, wavefunction tables, verification and sweeps.

Exit codes: 0 on success, 1 for a physics or verification failure, 2 for a
usage error.  Output is byte-for-byte deterministic: floats use the shortest
round-trip representation, rows come in a fixed key order and no timestamps
are written.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import math
import os
import re
import sys
import warnings
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import __version__
from .errors import ComplexIndexError, DiracError, NoRealSolution, PreconditionError
from .model import PhysicalParams, QuantumNumbers, SymmetryMode, effective_index, reduced_coefficients
from .oracle import ShootingConfig, verify_state
from .spectrum import (
    duality_spectra,
    energy_A0_spin,
    energy_constant_mass,
    nonrelativistic_energy,
    s_wave_energy,
    solve_energy,
)
from .wavefunctions import (
    companion_component,
    default_grid,
    dominant_component,
    nonrelativistic_wavefunction,
)
from .grids import hybrid_grid

SPECTRUM_COLUMNS = [
    "mode", "n", "kappa", "l", "ltilde", "q", "b", "A", "E_particle", "E_antiparticle",
    "epsilon", "index", "valid", "residual", "reason",
]
VERIFY_COLUMNS = [
    "mode", "n", "kappa", "q", "b", "A", "E_analytic", "E_numeric", "abs_dev", "rel_dev",
    "residual", "E_full", "approximation_gap", "status",
]
LIMIT_COLUMNS = ["case", "mode", "n", "kappa", "q", "b", "A", "E_particle", "E_antiparticle"]

# default verification grid; pseudospin states are bound only for q < 0
DEFAULT_Q = {SymmetryMode.SPIN: "0.5,1.0", SymmetryMode.PSEUDOSPIN: "-0.5,-1.0"}
DEFAULT_VERIFY = {"n": "0..3", "kappa": "-2,-1,1,2", "b": "0,0.1,0.3", "A": "0,0.2"}

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    """Raised for invalid ranges, configuration files or output paths."""


# ---------------------------------------------------------------------------
# range parsing and formatting

def parse_float_range(text: str) -> list[float]:
    """``a,b,c`` lists or ``start:stop:num`` (inclusive, num points)."""
    text = str(text).strip()
    if not text:
        raise UsageError("empty range")
    values: list[float] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        if ":" in part:
            pieces = part.split(":")
            if len(pieces) != 3:
                raise UsageError(f"float range must be start:stop:num, got {part!r}")
            try:
                start, stop, num = float(pieces[0]), float(pieces[1]), int(pieces[2])
            except ValueError as exc:
                raise UsageError(f"bad float range {part!r}") from exc
            if num < 1:
                raise UsageError(f"range {part!r} has no points")
            # 15 significant digits drop linspace rounding noise such as 0.19999999999999998
            values.extend(float(f"{v:.15g}") for v in np.linspace(start, stop, num))
        else:
            try:
                values.append(float(part))
            except ValueError as exc:
                raise UsageError(f"not a number: {part!r}") from exc
    if not values:
        raise UsageError("empty range")
    if not all(math.isfinite(v) for v in values):
        raise UsageError("range values must be finite")
    return values


def parse_int_range(text: str) -> list[int]:
    """``a,b,c`` lists or ``lo..hi`` (inclusive)."""
    text = str(text).strip()
    values: list[int] = []
    for part in text.split(","):
        part = part.strip()
        if not part:
            continue
        try:
            if ".." in part:
                lo, hi = part.split("..")
                values.extend(range(int(lo), int(hi) + 1))
            else:
                values.append(int(part))
        except ValueError as exc:
            raise UsageError(f"bad integer range {part!r}") from exc
    return values


def parse_modes(text: str) -> list[SymmetryMode]:
    text = str(text).strip().lower()
    if text in ("both", "all"):
        return [SymmetryMode.SPIN, SymmetryMode.PSEUDOSPIN]
    try:
        return [SymmetryMode(part.strip()) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise UsageError(f"unknown mode in {text!r}") from exc


def fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if math.isnan(value):
            return ""
        return repr(value)
    if isinstance(value, SymmetryMode):
        return value.value
    return str(value)


def render(rows: list[dict], columns: list[str], fmt_name: str, meta: list[tuple[str, object]]) -> str:
    if fmt_name == "json":
        payload = [{c: _json_value(row.get(c)) for c in columns} for row in rows]
        return json.dumps(payload, indent=1, ensure_ascii=False, allow_nan=False) + "\n"
    buf = io.StringIO()
    for key, value in meta:
        buf.write(f"# {key} = {fmt(value)}\n")
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for row in rows:
        writer.writerow([fmt(row.get(c)) for c in columns])
    return buf.getvalue()


def _json_value(value):
    if isinstance(value, SymmetryMode):
        return value.value
    if isinstance(value, (np.floating, float)):
        value = float(value)
        return None if math.isnan(value) else value
    if isinstance(value, np.integer):
        return int(value)
    return value


def emit(text: str, out: str | None) -> None:
    if out is None:
        try:
            sys.stdout.write(text)
            sys.stdout.flush()
        except BrokenPipeError:
            # reader closed early (e.g. piped into head); stay quiet on exit
            os.dup2(os.open(os.devnull, os.O_WRONLY), sys.stdout.fileno())
        return
    try:
        with open(out, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {out}: {exc.strerror}") from exc


# ---------------------------------------------------------------------------
# parameters

@dataclass(frozen=True)
class Units:
    name: str
    m0: float
    hbar_c: float

    def params(self, q: float, b: float, A: float) -> PhysicalParams:
        return PhysicalParams(m0=self.m0, b=b, q=q, A=A, hbar_c=self.hbar_c)

    def meta(self) -> list[tuple[str, object]]:
        if self.name == "natural":
            return [("units", "natural (hbar = c = 1, energies in m0 c^2)")]
        return [("units", "physical (energies in MeV, lengths in fm)"), ("m0", self.m0), ("hbar_c", self.hbar_c)]


def units_from(args) -> Units:
    if args.units == "natural":
        return Units("natural", 1.0, 1.0)
    if not (args.m0 > 0 and args.hbarc > 0):
        raise UsageError("--m0 and --hbarc must be positive")
    return Units("physical", float(args.m0), float(args.hbarc))


def kappa_values(text: str) -> list[int]:
    kappas = [k for k in parse_int_range(text) if k != 0]
    if not kappas:
        raise UsageError("kappa range is empty once kappa = 0 is removed")
    return kappas


def n_values(text: str) -> list[int]:
    ns = parse_int_range(text)
    if not ns or any(n < 0 for n in ns):
        raise UsageError("n range must be nonempty and non-negative")
    return ns


def grid_of(args, mode: SymmetryMode, q_default: str | None = None):
    q_text = args.q if args.q is not None else (q_default or "1.0")
    return itertools.product(
        n_values(args.n), kappa_values(args.kappa), parse_float_range(q_text),
        parse_float_range(args.b), parse_float_range(args.A),
    )


# ---------------------------------------------------------------------------
# commands

def spectrum_row(mode: SymmetryMode, n: int, kappa: int, q: float, b: float, A: float, units: Units) -> dict:
    qn = QuantumNumbers(n=n, kappa=kappa)
    params = units.params(q, b, A)
    row = {"mode": mode, "n": n, "kappa": kappa, "l": qn.l, "ltilde": qn.l_tilde, "q": q, "b": b, "A": A}
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            sol = solve_energy(params, qn, mode)
    except ComplexIndexError:
        return {**row, "valid": False, "reason": "complex_index"}
    except NoRealSolution:
        return {**row, "index": effective_index(params.natural(), kappa, mode), "valid": False,
                "reason": "no_real_solution"}
    reasons = []
    for label, info in zip(("particle", "antiparticle"), sol.validity):
        if sol.degenerate and label == "antiparticle":
            break
        if not info.bound:
            reasons.append(f"{label}:{info.reason}")
    if sol.degenerate:
        reasons.append("degenerate")
    bound = sol.bound_energy
    eps = reduced_coefficients(params, qn, mode, bound).epsilon if bound is not None else None
    return {
        **row,
        "E_particle": sol.E_particle,
        "E_antiparticle": sol.E_antiparticle,
        "epsilon": eps,
        "index": sol.validity[0].index,
        "valid": bound is not None,
        "residual": max(abs(r) for r in sol.residuals),
        "reason": ";".join(reasons),
    }


def _spectrum_tasks(args, units):
    tasks = []
    for mode in parse_modes(args.mode):
        for n, kappa, q, b, A in grid_of(args, mode):
            tasks.append((mode, n, kappa, q, b, A))
    return tasks


def run_spectrum(args, parallel: bool = False) -> int:
    units = units_from(args)
    tasks = _spectrum_tasks(args, units)
    if parallel and len(tasks) > 1:
        with ThreadPoolExecutor(max_workers=args.workers) as pool:
            rows = list(pool.map(lambda t: spectrum_row(*t, units), tasks))
    else:
        rows = [spectrum_row(*t, units) for t in tasks]
    meta = [("command", "sweep" if parallel else "spectrum"), *units.meta(), ("rows", len(rows))]
    emit(render(rows, SPECTRUM_COLUMNS, args.format, meta), args.out)
    return EXIT_OK


def verify_rows(task, units: Units, cfg: ShootingConfig, audit: bool) -> list[dict]:
    mode, n, kappa, q, b, A = task
    base = {"mode": mode, "n": n, "kappa": kappa, "q": q, "b": b, "A": A}
    try:
        reports = verify_state(units.params(q, b, A), QuantumNumbers(n, kappa), mode, cfg, audit=audit)
    except ComplexIndexError:
        return [{**base, "status": "skipped:complex_index"}]
    except NoRealSolution:
        return [{**base, "status": "skipped:no_real_solution"}]
    except DiracError as exc:
        if "no bound analytic state" in str(exc):
            return [{**base, "status": "skipped:not_bound"}]
        return [{**base, "status": f"error:{type(exc).__name__}"}]
    rows = []
    for rep in reports:
        rows.append({
            **base,
            "E_analytic": rep.E_analytic, "E_numeric": rep.E_numeric,
            "abs_dev": rep.abs_dev, "rel_dev": rep.rel_dev, "residual": rep.residual,
            "E_full": rep.E_full, "approximation_gap": rep.approximation_gap, "status": rep.status,
        })
    return rows


def run_verify(args) -> int:
    units = units_from(args)
    try:
        cfg = ShootingConfig(r_max=args.rmax, steps=args.steps)
    except PreconditionError as exc:
        raise UsageError(str(exc)) from exc
    if not args.tol > 0:
        raise UsageError("--tol must be positive")
    tasks = []
    for mode in parse_modes(args.mode):
        for n, kappa, q, b, A in grid_of(args, mode, DEFAULT_Q[mode]):
            tasks.append((mode, n, kappa, q, b, A))
    audit = not args.no_audit
    with ThreadPoolExecutor(max_workers=args.workers) as pool:
        chunks = list(pool.map(lambda t: verify_rows(t, units, cfg, audit), tasks))
    rows = [row for chunk in chunks for row in chunk]
    tol = args.tol * units.m0
    violators = []
    for row in rows:
        status = row["status"]
        if status.startswith("skipped"):
            continue
        if status == "ok" and not row["abs_dev"] < tol:
            row["status"] = status = "fail"
        if status != "ok":
            violators.append(row)
    checked = sum(1 for r in rows if not r["status"].startswith("skipped"))
    meta = [("command", "verify"), *units.meta(), ("tolerance", args.tol), ("steps", args.steps),
            ("r_max_per_eps", args.rmax), ("checked", checked), ("violations", len(violators))]
    emit(render(rows, VERIFY_COLUMNS, args.format, meta), args.out)
    if violators:
        for row in violators:
            print(
                f"violation: mode={fmt(row['mode'])} n={row['n']} kappa={row['kappa']} q={fmt(row['q'])} "
                f"b={fmt(row['b'])} A={fmt(row['A'])} abs_dev={fmt(row.get('abs_dev'))} status={row['status']}",
                file=sys.stderr,
            )
        return EXIT_FAIL
    return EXIT_OK


def _single(text: str, parse, name: str):
    values = parse(text)
    if len(values) != 1:
        raise UsageError(f"--{name} takes a single value for this command")
    return values[0]


def _wave_grid(args, eps: float, index: float, n: int):
    if args.rmax is None and args.steps is None:
        return None
    if args.rmax is None:
        return default_grid(eps, index, n, num=args.steps)
    num = args.steps or 2000
    if not args.rmax > 1e-4:
        raise UsageError("--rmax must exceed the inner radius 1e-4 (units of 1/eps)")
    return hybrid_grid(1e-4, args.rmax, num) / eps


def _wave_table(f, companion, units: Units, extra_meta) -> tuple[list[dict], list[str], list]:
    name = f.component.value
    columns = ["r", name]
    rows = [{"r": float(r), name: float(v)} for r, v in zip(f.grid, f.values)]
    if companion is not None:
        other = companion.component.value
        columns.append(other)
        for row, v in zip(rows, companion.values):
            row[other] = float(v)
    meta = [
        *extra_meta,
        *units.meta(),
        ("normalizer", f.normalizer),
        ("epsilon", f.eps),
        ("index", f.index),
        ("norm_check", f.norm),
        ("points", len(rows)),
    ]
    if companion is not None:
        meta.append(("companion_norm", companion.norm))
    return rows, columns, meta


def run_wavefunction(args) -> int:
    units = units_from(args)
    mode = _single(args.mode, parse_modes, "mode")
    n = _single(args.n, n_values, "n")
    kappa = _single(args.kappa, kappa_values, "kappa")
    q = _single(args.q if args.q is not None else "1.0", parse_float_range, "q")
    b = _single(args.b, parse_float_range, "b")
    A = _single(args.A, parse_float_range, "A")
    params = units.params(q, b, A)
    qn = QuantumNumbers(n, kappa)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("ignore", RuntimeWarning)
            sol = solve_energy(params, qn, mode)
            if args.root == "bound":
                E = sol.bound_energy
            else:
                idx = 0 if args.root == "particle" else -1
                info = sol.validity[idx]
                E = info.energy if info.bound else None
            if E is None:
                reasons = ",".join(i.reason for i in sol.validity)
                raise DiracError(f"requested {args.root} root is not a bound state ({reasons})")
            f = dominant_component(params, qn, E, mode)
            grid = _wave_grid(args, f.eps, f.index, n)
            if grid is not None:
                f = dominant_component(params, qn, E, mode, grid=grid)
            comp = companion_component(f, params, E) if args.companion else None
    except DiracError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL
    meta = [("command", "wavefunction"), ("mode", mode), ("n", n), ("kappa", kappa),
            ("q", q), ("b", b), ("A", A), ("E", E)]
    rows, columns, meta = _wave_table(f, comp, units, meta)
    emit(render(rows, columns, args.format, meta), args.out)
    return EXIT_OK


def run_limits(args) -> int:
    units = units_from(args)
    if args.nonrel:
        n = _single(args.n, n_values, "n")
        l = _single(args.l, n_values, "l")
        q = _single(args.q if args.q is not None else "1.0", parse_float_range, "q")
        b = _single(args.b, parse_float_range, "b")
        params = units.params(q, b, 0.0)
        try:
            E = nonrelativistic_energy(params, n, l)
            f = nonrelativistic_wavefunction(params, n, l)
            grid = _wave_grid(args, f.eps, f.index, n)
            if grid is not None:
                f = nonrelativistic_wavefunction(params, n, l, grid=grid)
        except DiracError as exc:
            print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
            return EXIT_FAIL
        meta = [("command", "limits --nonrel"), ("n", n), ("l", l), ("q", q), ("b", b), ("E", E)]
        rows, columns, meta = _wave_table(f, None, units, meta)
        emit(render(rows, columns, args.format, meta), args.out)
        return EXIT_OK
    if args.case is None:
        raise UsageError("limits needs --nonrel or --case")
    rows = []
    failures = 0
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", RuntimeWarning)
        for mode in parse_modes(args.mode):
            q_text = args.q if args.q is not None else "1.0"
            # the duality case defaults to its own line q = b/2
            q_values = [None] if args.case == "duality" and args.q is None else parse_float_range(q_text)
            for n, kappa, q, b, A in itertools.product(
                n_values(args.n), kappa_values(args.kappa), q_values,
                parse_float_range(args.b), parse_float_range(args.A),
            ):
                q = 0.5 * b if q is None else q
                params = units.params(q, b, A)
                qn = QuantumNumbers(n, kappa)
                base = {"mode": mode, "n": n, "kappa": kappa, "q": q, "b": b, "A": A}
                try:
                    for case, sol in _limit_case(args.case, params, qn, mode):
                        rows.append({**base, "case": case, "E_particle": sol.E_particle,
                                     "E_antiparticle": sol.E_antiparticle})
                except DiracError as exc:
                    failures += 1
                    print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
    meta = [("command", f"limits --case {args.case}"), *units.meta(), ("rows", len(rows))]
    emit(render(rows, LIMIT_COLUMNS, args.format, meta), args.out)
    return EXIT_FAIL if failures else EXIT_OK


def _limit_case(case, params, qn, mode):
    if case == "constant-mass":
        return [(case, energy_constant_mass(params, qn, mode))]
    if case == "a0":
        return [(case, energy_A0_spin(params, qn))]
    if case == "duality":
        first, second = duality_spectra(params, qn)
        return [("duality-variable-mass", first), ("duality-constant-mass", second)]
    if case == "s-wave":
        branch = -1 if mode is SymmetryMode.SPIN else 1
        return [(case, s_wave_energy(params, qn.n, branch))]
    raise UsageError(f"unknown case {case!r}")


# ---------------------------------------------------------------------------
# argument parsing

def _common(p: argparse.ArgumentParser, verify: bool = False) -> None:
    p.add_argument("--config", help="key=value file mirroring the flags; flags override it")
    p.add_argument("--mode", default="spin", help="spin, pseudospin, both, or a comma list")
    p.add_argument("--q", default=None, help="Coulomb coupling: list a,b or start:stop:num")
    p.add_argument("--b", default="0", help="mass perturbation strength")
    p.add_argument("--A", default="0", help="constant potential, in m0 c^2 (natural) or MeV (physical)")
    p.add_argument("--n", default="0", help="radial quantum number: list or lo..hi")
    p.add_argument("--kappa", default="1", help="spin-orbit number: list or lo..hi; 0 is dropped")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", default=None, help="output path (default: stdout)")
    p.add_argument("--units", choices=("natural", "physical"), default="natural")
    p.add_argument("--m0", type=float, default=939.0, help="rest energy in MeV (physical units)")
    p.add_argument("--hbarc", type=float, default=197.3269804, help="hbar c in MeV fm (physical units)")
    p.add_argument("--workers", type=int, default=min(4, os.cpu_count() or 1))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pdm-dirac",
        description="Spin and pseudospin Dirac bound states with a Coulomb-like field and a 1/r mass.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="closed-form energies on a parameter grid")
    _common(p)
    p = sub.add_parser("sweep", help="as spectrum, evaluated on a worker pool")
    _common(p)

    p = sub.add_parser("wavefunction", help="sampled normalized radial component")
    _common(p)
    p.add_argument("--root", choices=("bound", "particle", "antiparticle"), default="bound")
    p.add_argument("--companion", action="store_true", help="add the partner component column")
    p.add_argument("--rmax", type=float, default=None, help="outer radius in units of 1/eps")
    p.add_argument("--steps", type=int, default=None, help="number of grid points")

    p = sub.add_parser("verify", help="shooting-method verification of the spectra")
    _common(p)
    p.set_defaults(mode="both", **DEFAULT_VERIFY)
    p.add_argument("--tol", type=float, default=1e-6, help="allowed |E_numeric - E_analytic| in m0 c^2")
    p.add_argument("--rmax", type=float, default=35.0, help="outer radius in units of 1/eps")
    p.add_argument("--steps", type=int, default=2000, help="RK4 steps across the window")
    p.add_argument("--no-audit", action="store_true", help="skip the full-equation comparison")

    p = sub.add_parser("limits", help="special cases and the Schroedinger limit")
    _common(p)
    group = p.add_mutually_exclusive_group()
    group.add_argument("--nonrel", action="store_true", help="Schroedinger-limit wavefunction table")
    group.add_argument("--case", choices=("constant-mass", "a0", "duality", "s-wave"))
    p.add_argument("--l", default="0", help="orbital quantum number for --nonrel")
    p.add_argument("--rmax", type=float, default=None, help="outer radius in units of 1/eps")
    p.add_argument("--steps", type=int, default=None, help="number of grid points")
    return parser


def read_config(path: str) -> dict[str, str]:
    try:
        with open(path, encoding="utf-8") as handle:
            lines = handle.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config {path}: {exc.strerror}") from exc
    values = {}
    for number, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{number}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        values[key.lstrip("-").replace("-", "_")] = value
    return values


def _apply_config(parser: argparse.ArgumentParser, argv: list[str], args) -> argparse.Namespace:
    config = read_config(args.config)
    sub = parser._subparsers._group_actions[0].choices[args.command]
    known = {a.dest: a for a in sub._actions}
    defaults = {}
    for key, raw in config.items():
        if key not in known or key in ("help", "config"):
            raise UsageError(f"unknown config key {key!r}")
        action = known[key]
        if isinstance(action, (argparse._StoreTrueAction,)):
            defaults[key] = raw.lower() in ("1", "true", "yes", "on")
        elif action.type is not None:
            try:
                defaults[key] = action.type(raw)
            except ValueError as exc:
                raise UsageError(f"bad value for {key}: {raw!r}") from exc
        else:
            defaults[key] = raw
    sub.set_defaults(**defaults)
    return parser.parse_args(argv)


_NEGATIVE_VALUE = re.compile(r"^-[\d.]")


def _join_negative_values(argv: list[str]) -> list[str]:
    """Attach values such as ``-1,2`` or ``-2..2`` to the preceding flag.

    argparse only recognises plain negative numbers as values, so lists and
    ranges starting with a minus sign would otherwise be read as flags.
    """
    out = []
    i = 0
    while i < len(argv):
        token = argv[i]
        if token.startswith("--") and "=" not in token and i + 1 < len(argv) \
                and _NEGATIVE_VALUE.match(argv[i + 1]):
            out.append(f"{token}={argv[i + 1]}")
            i += 2
            continue
        out.append(token)
        i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "spectrum": lambda a: run_spectrum(a),
        "sweep": lambda a: run_spectrum(a, parallel=True),
        "wavefunction": run_wavefunction,
        "verify": run_verify,
        "limits": run_limits,
    }
    try:
        if args.config:
            args = _apply_config(parser, argv, args)
        if args.workers < 1:
            raise UsageError("--workers must be positive")
        return handlers[args.command](args)
    except UsageError as exc:
        print(f"pdm-dirac: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except DiracError as exc:
        print(f"pdm-dirac: error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    raise SystemExit(main())
