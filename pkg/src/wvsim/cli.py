"""Command-line front end.

Subcommands: `weak-value` for ad-hoc two-state-vector computations, `compare`
for the eigenvalue / weak-value / expectation-value distance sweep, and
`amplify` for the spin amplification table. Output is deterministic CSV
(`#` comment lines only before the header and after the data) or a plain
pretty table.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

import numpy as np

from . import scenarios
from .errors import (
    OrthogonalSelection,
    PostSelectionImpossible,
    SimulationError,
)
from .measurement import CouplingConfig, weak_value
from .qstate import Observable, SystemState, make_state

DEFAULT_GRID_SPEC = "1e-3:1e-2:8:log"
COMPARE_COLUMNS = ("epsilon", "d_eigen", "d_weak_vs_eigen", "d_expect_vs_eigen",
                   "p_postselect", "weakness")
AMPLIFY_COLUMNS = ("tan_half_alpha", "mean_shift_over_g_eps", "p_postselect", "weak_flag")


class UsageError(Exception):
    """Bad flags, specs or config file contents; maps to exit code 2."""


def fmt(x: float) -> str:
    """Locale-independent number formatting at 12 significant digits."""
    return f"{float(x):.12g}"


def format_complex(z: complex) -> str:
    sign = "+" if z.imag >= 0 else "-"
    return f"{z.real:.12f} {sign} {abs(z.imag):.12f}i"


def parse_amplitude(text: str) -> complex:
    """Amplitude grammar: `a`, `a+bi` or `a-bi` with real a, b."""
    s = text.strip().replace("−", "-")
    if not s:
        raise UsageError("empty amplitude")
    try:
        if s.endswith("i"):
            return complex(s[:-1] + "j")
        return complex(float(s))
    except ValueError:
        raise UsageError(f"bad amplitude {text!r}; use a, a+bi or a-bi") from None


def parse_state_spec(spec: str) -> SystemState:
    """State grammar: comma-separated `label:amplitude` terms."""
    pairs = []
    for chunk in spec.split(","):
        chunk = chunk.strip().replace("−", "-")
        label_s, sep, amp_s = chunk.partition(":")
        if not sep:
            raise UsageError(f"missing ':' in state term {chunk!r}")
        try:
            label = int(label_s)
        except ValueError:
            raise UsageError(f"bad basis label {label_s!r}") from None
        pairs.append((label, parse_amplitude(amp_s)))
    if not pairs:
        raise UsageError("empty state spec")
    try:
        return make_state(pairs)
    except SimulationError as exc:
        raise UsageError(str(exc)) from None


def parse_observable_spec(spec: str, labels: tuple[int, ...]) -> Observable:
    """Observable grammar: `diag` (A = sum_j j|j><j|), `proj:<j>`, `sigmaz`."""
    s = spec.strip()
    if s == "diag":
        return Observable.diagonal(labels)
    if s == "sigmaz":
        if labels != (-1, 1):
            raise UsageError(f"sigmaz needs basis labels -1,+1, got {labels}")
        return Observable.diagonal(labels)
    if s.startswith("proj:"):
        try:
            j = int(s[len("proj:"):])
        except ValueError:
            raise UsageError(f"bad projector label in {spec!r}") from None
        if j not in labels:
            raise UsageError(f"projector label {j} not in basis {labels}")
        return Observable.diagonal(labels, [1.0 if lab == j else 0.0 for lab in labels])
    raise UsageError(f"unknown observable spec {spec!r}; use diag, proj:<j> or sigmaz")


def parse_grid_spec(text: str) -> tuple[tuple[float, ...], str]:
    """Grid grammar `lo:hi:n:log|lin`; returns the grid and a canonical echo."""
    parts = str(text).strip().split(":")
    if len(parts) != 4:
        raise UsageError(f"epsilon grid spec must be lo:hi:n:log|lin, got {text!r}")
    try:
        lo, hi, n = float(parts[0]), float(parts[1]), int(parts[2])
    except ValueError:
        raise UsageError(f"bad epsilon grid spec {text!r}") from None
    kind = parts[3]
    if kind not in ("log", "lin"):
        raise UsageError(f"grid kind must be log or lin, got {kind!r}")
    if lo <= 0 or hi <= lo or n < 2:
        raise UsageError("epsilon grid needs 0 < lo < hi and n >= 2")
    grid = np.geomspace(lo, hi, n) if kind == "log" else np.linspace(lo, hi, n)
    return tuple(float(e) for e in grid), f"{fmt(lo)}:{fmt(hi)}:{n}:{kind}"


def load_config(path: str) -> dict:
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read config file {path}: {exc}") from None
    if not isinstance(data, dict):
        raise UsageError("config file must hold a flat JSON object")
    return data


def pick(cli_value, config: dict, key: str, default=None):
    """Flag value if given, else config-file value, else the default."""
    if cli_value is not None:
        return cli_value
    if key in config:
        return config[key]
    return default


def positive(value, name: str) -> float:
    try:
        x = float(value)
    except (TypeError, ValueError):
        raise UsageError(f"{name} must be a number, got {value!r}") from None
    if x <= 0:
        raise UsageError(f"{name} must be positive, got {x}")
    return x


def emit(out: str, text: str) -> None:
    if out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)


def render_table(comment: str, columns: tuple[str, ...], rows: list[tuple[str, ...]],
                 trailers: list[str], pretty: bool) -> str:
    if pretty:
        widths = [max(len(c), *(len(r[i]) for r in rows)) if rows else len(c)
                  for i, c in enumerate(columns)]
        lines = [comment.lstrip("# ")]
        lines.append("  ".join(c.ljust(w) for c, w in zip(columns, widths)))
        for r in rows:
            lines.append("  ".join(v.ljust(w) for v, w in zip(r, widths)))
        lines.extend(t.lstrip("# ") for t in trailers)
    else:
        lines = [comment, ",".join(columns)]
        lines.extend(",".join(r) for r in rows)
        lines.extend(trailers)
    return "\n".join(lines) + "\n"


def cmd_weak_value(args: argparse.Namespace, config: dict) -> int:
    pre_spec = pick(args.pre, config, "pre")
    post_spec = pick(args.post, config, "post")
    obs_spec = pick(args.obs, config, "obs")
    if not pre_spec or not post_spec or not obs_spec:
        raise UsageError("weak-value needs --pre, --post and --obs")
    pre = parse_state_spec(str(pre_spec))
    post = parse_state_spec(str(post_spec))
    if pre.labels != post.labels:
        raise UsageError(f"pre and post bases differ: {pre.labels} vs {post.labels}")
    value = weak_value(pre, post, parse_observable_spec(str(obs_spec), pre.labels))
    emit(args.out, format_complex(value) + "\n")
    return 0


def cmd_compare(args: argparse.Namespace, config: dict) -> int:
    g = positive(pick(args.g, config, "g", 1.0), "g")
    delta = positive(pick(args.delta, config, "delta", 1.0), "delta")
    if args.eps is not None and args.eps_grid is not None:
        raise UsageError("--eps and --eps-grid are mutually exclusive")
    if args.eps is not None or args.eps_grid is not None:
        eps, grid_spec = args.eps, args.eps_grid
    else:
        eps, grid_spec = config.get("eps"), config.get("eps-grid")
        if eps is not None and grid_spec is not None:
            raise UsageError("config file sets both eps and eps-grid")
    if eps is not None:
        grid = (positive(eps, "eps"),)
        echo = f"eps={fmt(grid[0])}"
    else:
        grid, canonical = parse_grid_spec(grid_spec if grid_spec is not None
                                          else DEFAULT_GRID_SPEC)
        echo = f"eps-grid={canonical}"
    cfg = CouplingConfig(g=g, epsilon=grid[0], delta=delta)
    rows = scenarios.run_comparison(
        [scenarios.weak_value_one_scenario(cfg), scenarios.expectation_scenario(cfg)],
        grid)
    cells = [tuple(fmt(v) for v in (r.epsilon, r.d_eigen, r.d_weak_vs_eigen,
                                    r.d_expect_vs_eigen, r.postselect_probability,
                                    r.weakness))
             for r in rows]
    trailers = []
    if len(rows) >= 4:
        for name in ("d_eigen", "d_weak_vs_eigen", "d_expect_vs_eigen"):
            fit = scenarios.fit_power_law([(r.epsilon, getattr(r, name)) for r in rows])
            trailers.append(f"# fit {name}: exponent={fmt(fit.exponent)} "
                            f"coefficient={fmt(fit.coefficient)} residual={fmt(fit.residual)}")
    comment = f"# wvsim compare g={fmt(g)} delta={fmt(delta)} {echo}"
    emit(args.out, render_table(comment, COMPARE_COLUMNS, cells, trailers,
                                args.format == "pretty"))
    return 0


def cmd_amplify(args: argparse.Namespace, config: dict) -> int:
    g = positive(pick(args.g, config, "g", 1.0), "g")
    delta = positive(pick(args.delta, config, "delta", 1.0), "delta")
    eps = positive(pick(args.eps, config, "eps", 1e-4), "eps")
    tan_spec = pick(args.alpha_tan, config, "alpha-tan")
    if tan_spec is None or not str(tan_spec).strip():
        raise UsageError("amplify needs --alpha-tan with comma-separated tan(alpha/2) values")
    tans = []
    for part in str(tan_spec).split(","):
        if not part.strip():
            continue
        tans.append(positive(part, "alpha-tan value"))
    if not tans:
        raise UsageError("amplify needs at least one tan(alpha/2) value")
    cfg = CouplingConfig(g=g, epsilon=eps, delta=delta)
    rows = scenarios.amplification_sweep([2.0 * math.atan(t) for t in tans], cfg)
    cells = [(fmt(r.tan_half_alpha), fmt(r.mean_shift_over_g_eps),
              fmt(r.postselect_probability), "true" if r.weak else "false")
             for r in rows]
    comment = (f"# wvsim amplify g={fmt(g)} delta={fmt(delta)} eps={fmt(eps)} "
               f"alpha-tan={','.join(fmt(t) for t in tans)}")
    emit(args.out, render_table(comment, AMPLIFY_COLUMNS, cells, [],
                                args.format == "pretty"))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wvsim",
        description="Von Neumann weak-measurement simulator: weak values, "
                    "pointer-distance scaling sweeps, amplification tables.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--out", default="-", metavar="PATH",
                       help="output file, or - for stdout (default)")
        p.add_argument("--format", choices=("csv", "pretty"), default="csv")
        p.add_argument("--config", metavar="PATH",
                       help="flat JSON file with the same keys as the flags; "
                            "flags take precedence")

    wv = sub.add_parser("weak-value", help="print <post|A|pre>/<post|pre>")
    wv.add_argument("--pre", metavar="SPEC", help="state spec, e.g. -1:1,0:1")
    wv.add_argument("--post", metavar="SPEC", help="state spec, e.g. -1:1,0:-2")
    wv.add_argument("--obs", metavar="SPEC", help="diag, proj:<j> or sigmaz")
    common(wv)

    cp = sub.add_parser("compare",
                        help="eigenvalue vs weak-value vs expectation-value "
                             "pointer distances over an epsilon sweep")
    cp.add_argument("--g", type=float, help="coupling strength (default 1)")
    cp.add_argument("--delta", type=float, help="pointer width (default 1)")
    cp.add_argument("--eps", type=float, help="single interaction duration")
    cp.add_argument("--eps-grid", metavar="LO:HI:N:log|lin",
                    help=f"epsilon sweep grid (default {DEFAULT_GRID_SPEC})")
    common(cp)

    am = sub.add_parser("amplify", help="pointer shift amplification table")
    am.add_argument("--g", type=float, help="coupling strength (default 1)")
    am.add_argument("--delta", type=float, help="pointer width (default 1)")
    am.add_argument("--eps", type=float, help="interaction duration (default 1e-4)")
    am.add_argument("--alpha-tan", metavar="T1,T2,...",
                    help="tan(alpha/2) values to sweep")
    common(am)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = load_config(args.config) if args.config else {}
        if args.command == "weak-value":
            return cmd_weak_value(args, config)
        if args.command == "compare":
            return cmd_compare(args, config)
        return cmd_amplify(args, config)
    except UsageError as exc:
        print(f"wvsim: error: {exc}", file=sys.stderr)
        return 2
    except (OrthogonalSelection, PostSelectionImpossible) as exc:
        print(f"wvsim: {exc}", file=sys.stderr)
        return 3
    except (SimulationError, ValueError) as exc:
        print(f"wvsim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
