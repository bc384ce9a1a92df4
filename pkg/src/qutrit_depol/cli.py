"""Command-line front end.

Exit codes: 0 success, 1 a ``validate`` check failed, 2 bad usage or parameters.
"""

from __future__ import annotations

import argparse
import os
import sys
import tempfile
from dataclasses import dataclass, field

import numpy as np

from . import __version__, validation
from .channels import ACTIVE_PARAMETERS, NoiseConfig, Topology, evolve
from .criteria import classify
from .errors import QutritError
from .states import horodecki_state
from .sweeps import (
    DEFAULT_ALPHAS,
    DEFAULT_GRID_POINTS,
    bound_window,
    find_crossing,
    global_spectrum_trace,
    sweep,
    uniform_grid,
)

FIGURES = ("fig1", "fig2", "fig3", "fig4", "fig5")
# parameters each figure holds fixed, with their defaults
FIGURE_DEFAULTS = {
    "fig1": {},
    "fig2": {"p1": 0.1},
    "fig3": {"p1": 0.05, "alpha": 5.0},
    "fig4": {},
    "fig5": {"p1": 0.5, "p2": 0.5, "alpha": 4.3},
}
TOPOLOGY_CHOICES = ["none"] + [t.value for t in Topology]


class UsageError(QutritError):
    pass


def fmt(x) -> str:
    if isinstance(x, str):
        return x
    return format(float(x), ".17g")


def _alpha_tag(a: float) -> str:
    return format(float(a), "g")


@dataclass
class RunManifest:
    command: str
    parameters: list[tuple[str, object]] = field(default_factory=list)
    output_path: str = "-"
    tool_version: str = __version__

    def header_lines(self) -> list[str]:
        lines = [
            f"# command: {self.command}",
            f"# tool_version: {self.tool_version}",
            f"# output_path: {self.output_path}",
        ]
        lines += [f"# param {k}={fmt(v) if not isinstance(v, (list, tuple)) else ';'.join(map(fmt, v))}"
                  for k, v in self.parameters]
        return lines


def write_csv(path: str, manifest: RunManifest, columns: list[str], rows) -> None:
    """Write atomically: a failure leaves no partial file behind."""
    manifest.output_path = path
    text = "\n".join(manifest.header_lines() + [",".join(columns)] +
                     [",".join(fmt(v) for v in row) for row in rows]) + "\n"
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp-", suffix=".csv")
    try:
        with os.fdopen(fd, "w", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def figure_table(fig: str, alphas=None, p1=None, p2=None, grid_points: int = DEFAULT_GRID_POINTS):
    """Build ``(parameters, columns, rows)`` for one figure."""
    if fig not in FIGURES:
        raise UsageError(f"unknown figure {fig!r}")
    defaults = FIGURE_DEFAULTS[fig]
    if p1 is not None and "p1" not in defaults:
        raise UsageError(f"{fig} does not take --p1")
    if p2 is not None and "p2" not in defaults:
        raise UsageError(f"{fig} does not take --p2")
    p1 = defaults.get("p1") if p1 is None else p1
    p2 = defaults.get("p2") if p2 is None else p2
    if alphas is None:
        alphas = [defaults["alpha"]] if "alpha" in defaults else list(DEFAULT_ALPHAS)
    alphas = [float(a) for a in alphas]
    grid = uniform_grid(grid_points)
    params = [("alpha", alphas), ("grid_points", grid_points)]
    neg_cols = [f"negativity_alpha{_alpha_tag(a)}" for a in alphas]

    def negativity_table(topology, axis, fixed):
        recs = sweep(topology, alphas, axis, grid, fixed)
        n = len(grid)
        return np.array([r.negativity for r in recs]).reshape(len(alphas), n).T

    if fig == "fig1":
        neg = negativity_table(Topology.LOCAL_A, "p1", None)
        excess = [r.realignment_excess for r in sweep(Topology.LOCAL_A, [5.0], "p1", grid)]
        columns = ["p1"] + neg_cols + ["realignment_excess_alpha5"]
        rows = [[x, *neg[i], excess[i]] for i, x in enumerate(grid)]
    elif fig in ("fig2", "fig3"):
        fixed = {"p1": p1}
        params.append(("p1", p1))
        neg = negativity_table(Topology.MULTILOCAL, "p2", fixed)
        ref_alpha = max(alphas)
        params.append(("realignment_alpha", ref_alpha))
        excess = [r.realignment_excess for r in sweep(Topology.MULTILOCAL, [ref_alpha], "p2", grid, fixed)]
        columns = ["p2"] + neg_cols + ["realignment_excess"]
        rows = [[x, *neg[i], excess[i]] for i, x in enumerate(grid)]
    elif fig == "fig4":
        neg = negativity_table(Topology.COLLECTIVE, "p", None)
        columns = ["p"] + neg_cols
        rows = [[x, *neg[i]] for i, x in enumerate(grid)]
    else:
        if len(alphas) != 1:
            raise UsageError("fig5 takes a single --alpha")
        a = alphas[0]
        params += [("p1", p1), ("p2", p2)]
        eigs = global_spectrum_trace(a, p1, p2, grid)
        fixed = {"p1": p1, "p2": p2}
        excess = [r.realignment_excess for r in sweep(Topology.GLOBAL, [a], "p", grid, fixed)]
        columns = ["p"] + [f"eig{i}" for i in range(1, 10)] + ["realignment_excess"]
        rows = [[x, *eigs[i], excess[i]] for i, x in enumerate(grid)]
    return params, columns, rows


def config_from_args(topology: str, p1, p2, p) -> NoiseConfig:
    """``none`` means no noise at all (global with every parameter zero)."""
    if topology == "none":
        if any(v not in (None, 0.0) for v in (p1, p2, p)):
            raise UsageError("topology 'none' takes no noise parameters")
        return NoiseConfig(Topology.GLOBAL)
    return NoiseConfig(Topology.parse(topology), p1=p1 or 0.0, p2=p2 or 0.0, p=p or 0.0)


def _fixed_from_args(topology: Topology, axis: str, args) -> dict:
    fixed = {}
    for name in ACTIVE_PARAMETERS[topology]:
        value = getattr(args, name)
        if name == axis:
            if value is not None:
                raise UsageError(f"--{name} is the sweep axis and cannot also be fixed")
            continue
        fixed[name] = 0.0 if value is None else value
    for name in ("p1", "p2", "p"):
        if name not in ACTIVE_PARAMETERS[topology] and getattr(args, name) not in (None, 0.0):
            raise UsageError(f"{topology.value} noise does not use --{name}")
    return fixed


def cmd_figure(args) -> int:
    params, columns, rows = figure_table(args.id, args.alpha, args.p1, args.p2, args.grid_points)
    out = args.out or f"{args.id}.csv"
    write_csv(out, RunManifest(f"figure {args.id}", params), columns, rows)
    print(f"wrote {out} ({len(rows)} rows)")
    return 0


def cmd_classify(args) -> int:
    if args.alpha is None or len(args.alpha) != 1:
        raise UsageError("classify takes exactly one --alpha")
    cfg = config_from_args(args.topology, args.p1, args.p2, args.p)
    c = classify(evolve(horodecki_state(args.alpha[0]), cfg))
    print(
        f"label={c.label.value} negativity={fmt(c.negativity)} "
        f"realignment_excess={fmt(c.realignment_excess)} min_pt_eigenvalue={fmt(c.min_pt_eigenvalue)}"
    )
    return 0


def cmd_sweep(args) -> int:
    topo = Topology.parse(args.topology)
    fixed = _fixed_from_args(topo, args.axis, args)
    alphas = args.alpha or list(DEFAULT_ALPHAS)
    records = sweep(topo, alphas, args.axis, uniform_grid(args.grid_points), fixed)
    columns = ["alpha", "p1", "p2", "p", "topology", "negativity",
               "realignment_excess", "min_pt_eigenvalue", "label"]
    rows = [[getattr(r, c) for c in columns] for r in records]
    params = [("topology", topo.value), ("axis", args.axis), ("alpha", alphas),
              ("grid_points", args.grid_points)] + sorted(fixed.items())
    out = args.out or f"sweep-{topo.value}-{args.axis}.csv"
    write_csv(out, RunManifest("sweep", params), columns, rows)
    print(f"wrote {out} ({len(rows)} rows)")
    return 0


def cmd_crossing(args) -> int:
    topo = Topology.parse(args.topology)
    if args.alpha is None or len(args.alpha) != 1:
        raise UsageError("crossing takes exactly one --alpha")
    alpha = args.alpha[0]
    fixed = _fixed_from_args(topo, args.axis, args)
    res = find_crossing(topo, alpha, args.axis, fixed, scan_points=args.grid_points)
    if res is None:
        print(f"crossing {args.axis} none")
    else:
        print(f"crossing {args.axis} {fmt(res.crossing_value)} bracket_width={res.bracket_width:.3e}")
    win = bound_window(topo, alpha, args.axis, fixed, grid_points=args.grid_points)
    if win is None:
        print(f"bound_window {args.axis} empty")
    else:
        print(f"bound_window {args.axis} {fmt(win.lower)} {fmt(win.upper)}")
    return 0


def cmd_validate(args) -> int:
    results = validation.run_all()
    for r in results:
        print(r.line())
    return 0 if all(r.passed for r in results) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qutrit-depol",
        description="Two-qutrit entanglement under depolarizing noise.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def noise_flags(p, with_topology=True):
        p.add_argument("--alpha", type=float, nargs="+", help="family parameter(s) in [2, 5]")
        p.add_argument("--p1", type=float, help="local noise strength on qutrit A")
        p.add_argument("--p2", type=float, help="local noise strength on qutrit B")
        p.add_argument("--p", type=float, help="collective noise strength")
        if with_topology:
            p.add_argument("--topology", choices=TOPOLOGY_CHOICES, required=True)

    fig = sub.add_parser("figure", help="write the data behind one figure as CSV")
    fig.add_argument("id", choices=FIGURES)
    noise_flags(fig, with_topology=False)
    fig.add_argument("--grid-points", type=int, default=DEFAULT_GRID_POINTS)
    fig.add_argument("--out")
    fig.set_defaults(func=cmd_figure)

    cls = sub.add_parser("classify", help="classify one evolved state")
    noise_flags(cls)
    cls.set_defaults(func=cmd_classify)

    for name, func, help_text in (
        ("sweep", cmd_sweep, "sweep one noise parameter and write records as CSV"),
        ("crossing", cmd_crossing, "locate the NPT->PPT crossing and the realignment-only window"),
    ):
        p = sub.add_parser(name, help=help_text)
        noise_flags(p)
        p.add_argument("--axis", choices=["p1", "p2", "p"], required=True)
        p.add_argument("--grid-points", type=int, default=DEFAULT_GRID_POINTS)
        if name == "sweep":
            p.add_argument("--out")
        p.set_defaults(func=func)

    val = sub.add_parser("validate", help="run the numerical self-checks")
    val.set_defaults(func=cmd_validate)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "topology", None) == "none" and args.command != "classify":
        print("error: topology 'none' is only valid for classify", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (QutritError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
