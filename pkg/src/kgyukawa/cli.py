"""Command-line front end.

Every subcommand produces a table (header plus rows) that is written as CSV
or JSON. Parameters are resolved in the order

    built-in defaults < preset < config file < explicit flags

Exit status: 0 success, 1 verification failure, 2 usage error,
3 request for a state that cannot be normalised.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import sys
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from .model import (
    PhysicalConfig,
    QuantumNumbers,
    coulomb,
    mass_profile,
    yukawa_exact,
    yukawa_hulthen,
)
from .oracle import BracketError, shoot_branch
from .spectrum import (
    Branch,
    NoBoundStateError,
    NotFoundError,
    energy_closed_form,
    energy_exact,
    radicand,
    schrodinger_energy,
    critical_parameter,
)
from .wavefunction import (
    FORMS,
    MEASURES,
    NonNormalizableError,
    StateClass,
    build_state,
    classify_state,
    coordinate_map,
    density_profile,
    phi,
)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_USAGE = 2
EXIT_NON_NORMALIZABLE = 3

IMAGINARY = "imaginary"
NO_BOUND_STATE = "none"
ERROR = "error"

CONFIG_KEYS = ("m0", "m1", "alpha", "eta", "beta", "hbar", "c")
SCAN_PARAMS = ("alpha", "eta", "m1")


class UsageError(Exception):
    pass


# --------------------------------------------------------------------------
# tables and serialisation


@dataclass
class Table:
    header: list
    rows: list = field(default_factory=list)
    meta: dict = field(default_factory=dict)


def format_cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, np.integer)):
        return str(int(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        if not math.isfinite(value):
            # never leak NaN/inf into the output
            return ERROR
        return format(value, ".17g")
    return str(value)


def to_csv(table: Table) -> str:
    lines = [",".join(table.header)]
    for row in table.rows:
        lines.append(",".join(_csv_quote(format_cell(v)) for v in row))
    return "\n".join(lines) + "\n"


def _csv_quote(text: str) -> str:
    if any(ch in text for ch in ',"\n'):
        return '"' + text.replace('"', '""') + '"'
    return text


def _json_value(value):
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return float(format(value, ".17g")) if math.isfinite(value) else ERROR
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, dict):
        return {k: _json_value(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_json_value(v) for v in value]
    return value


def to_json(table: Table) -> str:
    doc = dict(_json_value(table.meta))
    doc["rows"] = [dict(zip(table.header, _json_value(list(r)))) for r in table.rows]
    return json.dumps(doc, indent=2, sort_keys=False) + "\n"


def _level_cell(level) -> object:
    return level.value if level.is_real else IMAGINARY


# --------------------------------------------------------------------------
# presets

PRESETS = {
    "fig1": {
        "command": "potential",
        "config": {"alpha": 0.3, "eta": 0.25, "m1": 0.1},
        "args": {"r_min": 0.1, "r_max": 10.0, "samples": 200},
    },
    "fig2": {
        "command": "wavefunction",
        "config": {"alpha": 0.01, "eta": 0.1, "m1": 0.0},
        "args": {"n": [0, 1, 2, 3], "branch": ["plus"], "energy": "closed_form"},
    },
    "fig3": {
        "command": "wavefunction",
        "config": {"alpha": 0.01, "eta": 0.1, "m1": 0.1},
        "args": {"n": [1], "branch": ["plus"], "energy": "closed_form"},
    },
    "fig4": {
        "command": "wavefunction",
        "config": {"alpha": 0.01, "eta": 0.1, "m1": 0.1},
        "args": {"n": [1], "branch": ["minus"], "energy": "closed_form"},
    },
    "fig5": {
        "command": "wavefunction",
        "config": {"alpha": 0.01, "eta": 0.1, "m1": 0.1},
        "args": {"n": [3], "branch": ["plus", "minus"], "energy": "closed_form"},
    },
    "fig6": {
        "command": "spectrum",
        "config": {"alpha": 0.01},
        "args": {"vary": [["m1", 0.0, 0.1, 21], ["eta", 0.0, 0.5, 51]], "qn": ["1,0"]},
    },
    "fig7": {
        "command": "spectrum",
        "config": {"m1": 0.1},
        "args": {"vary": [["eta", 0.0, 0.5, 51], ["alpha", 0.001, 0.03, 30]], "qn": ["1,0"]},
    },
    "fig8": {
        "command": "spectrum",
        "config": {"alpha": 0.01, "m1": 0.1},
        "args": {"vary": [["eta", 0.0, 1.0, 201]], "qn": ["1,0", "1,1", "2,0", "2,2"]},
    },
    "fig9": {
        "command": "spectrum",
        "config": {"eta": 0.01, "m1": 0.0},
        "args": {"vary": [["alpha", 0.0001, 0.3, 300]], "qn": ["1,0", "1,1", "2,0", "2,2"]},
    },
    # the caption leaves the first series' eta unstated; 0.01 is assumed
    "fig10": {
        "command": "spectrum",
        "config": {"eta": 0.01, "m1": 0.0},
        "args": {"vary": [["alpha", 0.0001, 0.3, 300]], "qn": ["1,0", "1,1"]},
    },
    "fig11": {
        "command": "schrodinger",
        "config": {"eta": 0.01},
        "args": {"vary": [["alpha", 0.0001, 1.0, 200]], "qn": ["1,0", "1,1", "2,0", "2,2"]},
    },
}


# --------------------------------------------------------------------------
# configuration


def read_config_file(path: str) -> dict:
    """Parse a flat ``key = value`` file. ``#`` starts a comment."""
    out = {}
    try:
        with open(path, encoding="utf-8") as fh:
            lines = fh.read().splitlines()
    except OSError as exc:
        raise UsageError(f"cannot read config file {path!r}: {exc.strerror}") from None
    for lineno, raw in enumerate(lines, 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise UsageError(f"{path}:{lineno}: expected key=value")
        key, value = (part.strip() for part in line.split("=", 1))
        if key not in CONFIG_KEYS:
            raise UsageError(f"{path}:{lineno}: unknown key {key!r}")
        try:
            out[key] = float(value)
        except ValueError:
            raise UsageError(f"{path}:{lineno}: {key} is not a number: {value!r}") from None
    return out


def resolve_config(args) -> PhysicalConfig:
    values = {}
    preset = getattr(args, "preset", None)
    if preset:
        values.update(PRESETS[preset]["config"])
    config_path = getattr(args, "config", None)
    if config_path:
        values.update(read_config_file(config_path))
    for key in CONFIG_KEYS:
        flag = getattr(args, key, None)
        if flag is not None:
            values[key] = flag
    try:
        return PhysicalConfig(**values)
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from None


def _opt(args, name, default=None):
    """Explicit flag, else preset argument, else ``default``."""
    value = getattr(args, name, None)
    if value is not None:
        return value
    preset = getattr(args, "preset", None)
    if preset and name in PRESETS[preset]["args"]:
        return PRESETS[preset]["args"][name]
    return default


def parse_qn(text: str) -> QuantumNumbers:
    try:
        n, l = (int(p) for p in text.split(","))
        return QuantumNumbers(n, l)
    except (ValueError, TypeError):
        raise UsageError(f"quantum numbers must look like 'n,l' with n, l >= 0: {text!r}") from None


def parse_axis(spec) -> tuple:
    if len(spec) != 4:
        raise UsageError("--vary takes NAME LO HI COUNT")
    name = spec[0]
    if name not in SCAN_PARAMS:
        raise UsageError(f"can only vary one of {SCAN_PARAMS}, got {name!r}")
    try:
        lo, hi, count = float(spec[1]), float(spec[2]), int(spec[3])
    except ValueError:
        raise UsageError(f"bad --vary bounds {spec[1:]!r}") from None
    if not lo < hi:
        raise UsageError(f"--vary {name}: need lo < hi")
    if count < 2:
        raise UsageError(f"--vary {name}: need count >= 2")
    return name, np.linspace(lo, hi, count)


# --------------------------------------------------------------------------
# commands


def cmd_potential(cfg: PhysicalConfig, r_min: float, r_max: float, samples: int) -> Table:
    if not (0 < r_min < r_max) or samples < 2:
        raise UsageError("need 0 < r-min < r-max and samples >= 2")
    r = np.linspace(r_min, r_max, samples)
    cols = (r, yukawa_exact(r, cfg), yukawa_hulthen(r, cfg), coulomb(r, cfg), mass_profile(r, cfg))
    return Table(["r", "V_yukawa", "V_hulthen", "V_coulomb", "m_profile"], [list(row) for row in zip(*cols)])


def _exact_cell(qn, cfg, branch):
    try:
        return _level_cell(energy_exact(qn, cfg, branch))
    except NoBoundStateError:
        return NO_BOUND_STATE
    except (ValueError, ArithmeticError):
        return ERROR


def cmd_spectrum(cfg: PhysicalConfig, axes: Sequence[tuple], qns: Sequence[QuantumNumbers],
                 outputs: Sequence[str]) -> Table:
    """Energies on a one- or two-axis grid; ``outputs`` picks the columns."""
    header = [name for name, _ in axes] + ["n", "l"]
    if "closed_form" in outputs:
        header += ["E_plus", "E_minus"]
    if "exact" in outputs:
        header += ["E_plus_exact", "E_minus_exact"]
    if "schrodinger" in outputs:
        header += ["E_schrodinger"]
    rows = []
    grids = [values for _, values in axes]
    names = [name for name, _ in axes]
    for qn in qns:
        for point in itertools.product(*grids):
            row = list(point) + [qn.n, qn.l]
            try:
                c = cfg.with_(**dict(zip(names, point)))
            except ValueError:
                # e.g. alpha = 0 on an axis: outside the domain
                width = len(header) - len(row)
                rows.append(row + [ERROR] * width)
                continue
            if "closed_form" in outputs:
                pair = energy_closed_form(qn, c)
                row += [_level_cell(pair.e_plus), _level_cell(pair.e_minus)]
            if "exact" in outputs:
                row += [_exact_cell(qn, c, Branch.PLUS), _exact_cell(qn, c, Branch.MINUS)]
            if "schrodinger" in outputs:
                row.append(schrodinger_energy(qn, c))
            rows.append(row)
    return Table(header, rows)


def norm_table(cfg: PhysicalConfig, n_max: int, measure: str = "dr", energy: str = "closed_form",
               form: str = "published", m1_values=(0.0, 0.1)) -> Table:
    """Normalisation constants of the ``l = 0`` states for both branches."""
    header = ["n"]
    for branch in ("plus", "minus"):
        for m1 in m1_values:
            header.append(f"N_{branch}_m1_{m1:g}")
    rows = []
    for n in range(n_max + 1):
        row = [n]
        for branch in ("plus", "minus"):
            for m1 in m1_values:
                try:
                    sol = build_state(QuantumNumbers(n, 0), cfg.with_(m1=m1), branch, energy,
                                      form=form, measure=measure)
                except NoBoundStateError:
                    row.append(NO_BOUND_STATE)
                    continue
                if classify_state(sol) is StateClass.NORMALIZABLE:
                    row.append(sol.norm)
                else:
                    row.append(IMAGINARY)
        rows.append(row)
    return Table(header, rows, {"measure": measure, "energy": energy, "form": form})


def cmd_table_norms(cfg: PhysicalConfig, n_max: int, measure: str = "dr",
                    energy: str = "closed_form", form: str = "published") -> Table:
    if not 0 <= n_max <= 12:
        raise UsageError("n-max must lie in 0..12")
    return norm_table(cfg, n_max, measure, energy, form)


def cmd_wavefunction(cfg: PhysicalConfig, ns: Sequence[int], l: int, branches: Sequence[str],
                     r: np.ndarray, energy: str = "exact", form: str = "published") -> Table:
    """Normalised radial function on ``r``.

    Raises :class:`NonNormalizableError` when any requested state has no
    real normalisation.
    """
    many = len(ns) > 1 or len(branches) > 1
    header = (["n", "branch"] if many else []) + ["r", "z", "phi", "density"]
    rows = []
    for n, branch in itertools.product(ns, branches):
        qn = QuantumNumbers(n, l)
        try:
            sol = build_state(qn, cfg, branch, energy, form=form)
        except NoBoundStateError as exc:
            raise NonNormalizableError(str(exc)) from None
        dens = density_profile(sol, r)
        z = coordinate_map(r, cfg.alpha)
        values = phi(r, sol)
        prefix = [n, branch] if many else []
        for ri, zi, fi, di in zip(r, z, values, dens[:, 1]):
            rows.append(prefix + [ri, zi, fi, di])
    return Table(header, rows)


def cmd_critical(cfg: PhysicalConfig, qns: Sequence[QuantumNumbers], vary: str,
                 lo: float, hi: float) -> Table:
    rows = []
    for qn in qns:
        try:
            value = critical_parameter(qn, cfg, vary, (lo, hi))
        except NotFoundError:
            rows.append([qn.n, qn.l, vary, NO_BOUND_STATE, NO_BOUND_STATE, NO_BOUND_STATE])
            continue
        at = cfg.with_(**{vary: value})
        pair = energy_closed_form(qn, at)
        rows.append([qn.n, qn.l, vary, value, _level_cell(pair.e_plus), radicand(qn, at)])
    return Table(["n", "l", "parameter", "critical_value", "E_gap_closure", "radicand"], rows)


def _rel(a, b):
    return abs(a - b) / abs(b)


def cmd_verify(cfg: PhysicalConfig, ns, ls, m1s, branches=("plus", "minus"),
               tol_oracle: float = 1e-4, tol_closed: float = 1e-2) -> tuple:
    """Compare closed form, exact root and shooting on a grid of states.

    A case passes when exact root and shooting agree on whether the level
    exists and, if it does, to ``tol_oracle`` relative. The closed form is
    checked against the exact root to ``tol_closed`` wherever both are real.
    """
    cases = []
    for m1, n, l, branch in itertools.product(m1s, ns, ls, branches):
        c = cfg.with_(m1=m1)
        qn = QuantumNumbers(n, l)
        case = {"m1": m1, "n": n, "l": l, "branch": branch}
        cf = energy_closed_form(qn, c)[branch]
        case["closed_form"] = cf.value if cf.is_real else IMAGINARY
        try:
            ex = energy_exact(qn, c, branch)
            case["exact"] = ex.value if ex.is_real else IMAGINARY
        except NoBoundStateError:
            case["exact"] = NO_BOUND_STATE
        try:
            case["shooting"] = shoot_branch(qn, c, branch).energy
        except BracketError:
            case["shooting"] = NO_BOUND_STATE
        except (ValueError, ArithmeticError) as exc:
            case["shooting"] = ERROR
            case["error"] = str(exc)
        both = isinstance(case["exact"], float) and isinstance(case["shooting"], float)
        case["rel_diff"] = _rel(case["shooting"], case["exact"]) if both else None
        if isinstance(case["exact"], float) and isinstance(case["closed_form"], float):
            case["rel_diff_closed_form"] = _rel(case["closed_form"], case["exact"])
            case["closed_form_ok"] = case["rel_diff_closed_form"] <= tol_closed
        else:
            case["rel_diff_closed_form"] = None
            case["closed_form_ok"] = None
        if both:
            oracle_ok = case["rel_diff"] <= tol_oracle
        else:
            oracle_ok = case["exact"] == case["shooting"] == NO_BOUND_STATE
        case["passed"] = bool(oracle_ok and case["closed_form_ok"] is not False)
        cases.append(case)
    passed = all(c["passed"] for c in cases)
    meta = {
        "parameters": cfg.as_dict(),
        "tolerances": {"oracle": tol_oracle, "closed_form": tol_closed},
        "passed": passed,
        "failures": sum(not c["passed"] for c in cases),
    }
    header = ["m1", "n", "l", "branch", "closed_form", "exact", "shooting", "rel_diff",
              "rel_diff_closed_form", "closed_form_ok", "passed"]
    rows = [[c[h] if c[h] is not None else "" for h in header] for c in cases]
    return Table(header, rows, meta), passed


# --------------------------------------------------------------------------
# argument parsing


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _global_options() -> argparse.ArgumentParser:
    # defaults are suppressed so that the options may appear before or after
    # the subcommand without the later parser clobbering the earlier value
    g = argparse.ArgumentParser(add_help=False)
    for key in CONFIG_KEYS:
        g.add_argument(f"--{key}", type=float, default=argparse.SUPPRESS, help=f"set {key}")
    g.add_argument("--config", default=argparse.SUPPRESS, help="flat key=value parameter file")
    g.add_argument("--preset", choices=sorted(PRESETS, key=lambda k: int(k[3:])),
                   default=argparse.SUPPRESS, help="figure parameter bundle")
    g.add_argument("--out", default=argparse.SUPPRESS, help="output path (default stdout)")
    g.add_argument("--format", choices=("csv", "json"), default=argparse.SUPPRESS)
    return g


def build_parser() -> argparse.ArgumentParser:
    common = _global_options()
    p = _Parser(prog="kgyukawa", parents=[common],
                description="Klein-Gordon bound states in a screened Coulomb potential "
                            "with position-dependent mass.")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    s = sub.add_parser("potential", parents=[common], help="potentials and mass profile versus r")
    s.add_argument("--r-min", type=float)
    s.add_argument("--r-max", type=float)
    s.add_argument("--samples", type=int)

    def scan_args(s, outputs_default):
        s.add_argument("--vary", nargs=4, action="append", metavar=("NAME", "LO", "HI", "COUNT"),
                       help="scan axis; give once or twice")
        s.add_argument("--qn", action="append", metavar="N,L", help="quantum numbers (repeatable)")
        if outputs_default is not None:
            s.add_argument("--outputs", help="comma list of closed_form, exact, schrodinger "
                                             f"(default {outputs_default})")

    s = sub.add_parser("spectrum", parents=[common], help="energy levels on a parameter grid")
    scan_args(s, "closed_form")

    s = sub.add_parser("schrodinger", parents=[common], help="non-relativistic energies on a grid")
    scan_args(s, None)

    s = sub.add_parser("table-norms", parents=[common], help="normalisation constants of s states")
    s.add_argument("--n-max", type=int)
    s.add_argument("--measure", choices=MEASURES)
    s.add_argument("--energy", choices=("closed_form", "exact"))
    s.add_argument("--form", choices=FORMS)

    s = sub.add_parser("wavefunction", parents=[common], help="normalised eigenfunction samples")
    s.add_argument("--n", type=int, nargs="+")
    s.add_argument("--l", type=int)
    s.add_argument("--branch", nargs="+", choices=("plus", "minus"))
    s.add_argument("--energy", choices=("closed_form", "exact"))
    s.add_argument("--form", choices=FORMS)
    s.add_argument("--r-min", type=float)
    s.add_argument("--r-max", type=float)
    s.add_argument("--samples", type=int)

    s = sub.add_parser("critical", parents=[common], help="parameter where the levels turn imaginary")
    s.add_argument("--vary", choices=("eta", "alpha"))
    s.add_argument("--lo", type=float)
    s.add_argument("--hi", type=float)
    s.add_argument("--qn", action="append", metavar="N,L")

    s = sub.add_parser("verify", parents=[common], help="closed form vs exact vs shooting report")
    s.add_argument("--n-list", help="comma list (default 0,1,2)")
    s.add_argument("--l-list", help="comma list (default 0,1)")
    s.add_argument("--m1-list", help="comma list (default 0,0.1)")
    return p


def _int_list(text, default):
    if text is None:
        return default
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad integer list {text!r}") from None


def _float_list(text, default):
    if text is None:
        return default
    try:
        return [float(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"bad number list {text!r}") from None


def _scan_inputs(args):
    axes = [parse_axis(v) for v in _opt(args, "vary", [])]
    if not 1 <= len(axes) <= 2:
        raise UsageError("give --vary once or twice")
    if len(axes) == 2 and axes[0][0] == axes[1][0]:
        raise UsageError("the two scan axes must differ")
    qns = [parse_qn(q) for q in _opt(args, "qn", ["1,0"])]
    return axes, qns


def run(args) -> tuple:
    """Dispatch a parsed namespace. Returns ``(table, exit_code)``."""
    preset = getattr(args, "preset", None)
    command = args.command or (PRESETS[preset]["command"] if preset else None)
    if command is None:
        raise UsageError("no subcommand given")
    if preset and args.command and PRESETS[preset]["command"] != args.command:
        raise UsageError(f"preset {preset} belongs to the {PRESETS[preset]['command']} command")
    cfg = resolve_config(args)

    if command == "potential":
        return cmd_potential(cfg, _opt(args, "r_min", 0.1), _opt(args, "r_max", 10.0),
                             _opt(args, "samples", 100)), EXIT_OK
    if command == "spectrum":
        axes, qns = _scan_inputs(args)
        outputs = [o.strip() for o in _opt(args, "outputs", "closed_form").split(",")]
        bad = set(outputs) - {"closed_form", "exact", "schrodinger"}
        if bad:
            raise UsageError(f"unknown outputs {sorted(bad)}")
        return cmd_spectrum(cfg, axes, qns, outputs), EXIT_OK
    if command == "schrodinger":
        axes, qns = _scan_inputs(args)
        return cmd_spectrum(cfg, axes, qns, ["schrodinger"]), EXIT_OK
    if command == "table-norms":
        return cmd_table_norms(cfg, _opt(args, "n_max", 10), _opt(args, "measure", "dr"),
                               _opt(args, "energy", "closed_form"),
                               _opt(args, "form", "published")), EXIT_OK
    if command == "wavefunction":
        r_min, r_max = _opt(args, "r_min", None), _opt(args, "r_max", None)
        r_min = r_min if r_min is not None else 0.01 / cfg.alpha
        r_max = r_max if r_max is not None else 20.0 / cfg.alpha
        samples = _opt(args, "samples", 400)
        if not (0 < r_min < r_max) or samples < 2:
            raise UsageError("need 0 < r-min < r-max and samples >= 2")
        r = np.linspace(r_min, r_max, samples)
        return cmd_wavefunction(cfg, _opt(args, "n", [0]), _opt(args, "l", 0),
                                _opt(args, "branch", ["plus"]), r,
                                _opt(args, "energy", "exact"),
                                _opt(args, "form", "published")), EXIT_OK
    if command == "critical":
        vary = _opt(args, "vary", "eta")
        if vary not in ("eta", "alpha"):
            raise UsageError("critical --vary takes eta or alpha")
        lo = _opt(args, "lo", 1e-6)
        hi = _opt(args, "hi", 1.0)
        if not 0 < lo < hi:
            raise UsageError("need 0 < lo < hi")
        qns = [parse_qn(q) for q in _opt(args, "qn", ["1,0"])]
        return cmd_critical(cfg, qns, vary, lo, hi), EXIT_OK
    if command == "verify":
        table, passed = cmd_verify(cfg, _int_list(args.n_list, [0, 1, 2]),
                                   _int_list(args.l_list, [0, 1]),
                                   _float_list(args.m1_list, [0.0, 0.1]))
        return table, EXIT_OK if passed else EXIT_VERIFY_FAILED
    raise UsageError(f"unknown command {command!r}")


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        table, code = run(args)
    except UsageError as exc:
        print(f"kgyukawa: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except NonNormalizableError as exc:
        print(f"kgyukawa: state is not normalizable: {exc}", file=sys.stderr)
        return EXIT_NON_NORMALIZABLE
    command = args.command or PRESETS[args.preset]["command"]
    fmt = getattr(args, "format", None) or ("json" if command == "verify" else "csv")
    text = to_json(table) if fmt == "json" else to_csv(table)
    out = getattr(args, "out", None)
    if out:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
