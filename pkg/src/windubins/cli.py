"""Command-line front end.

Subcommands:

  plan      solve one scenario given on the command line
  batch     solve one scenario per line of a file (wx wy X Y theta_f_deg rho)
  selftest  run built-in reference checks and exit 0/1

Exit codes: 0 success, 1 invalid input, 2 no feasible candidate.  Angles are
taken in degrees on the command line and converted once at this boundary; all
internal math is in radians.  Output is deterministic: identical invocations
produce byte-identical bytes.
"""

from __future__ import annotations

import argparse
import math
import random
import sys
from dataclasses import dataclass, replace

from .families import MIRROR_VARIANT, Variant
from .geometry import Scenario, ToleranceSet, WindVector
from .planner import PlanResult, plan, sample

CSV_HEADER = "t,x_rel,y_rel,theta,u,x_inertial,y_inertial"


class _CliError(Exception):
    """Input error carrying the one-line diagnostic to print."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # exit 1, not argparse's default 2
        raise _CliError(message)


def _pair(flag: str):
    def parse(text: str) -> tuple[float, float]:
        parts = text.split(",")
        if len(parts) != 2:
            raise argparse.ArgumentTypeError(f"expected two comma-separated numbers, got {text!r}")
        try:
            return (float(parts[0]), float(parts[1]))
        except ValueError:
            raise argparse.ArgumentTypeError(f"non-numeric value in {text!r}") from None

    parse.__name__ = flag
    return parse


def _triple(flag: str):
    def parse(text: str) -> tuple[float, float, float]:
        parts = text.split(",")
        if len(parts) != 3:
            raise argparse.ArgumentTypeError(f"expected X,Y,THETA_DEG, got {text!r}")
        try:
            return (float(parts[0]), float(parts[1]), float(parts[2]))
        except ValueError:
            raise argparse.ArgumentTypeError(f"non-numeric value in {text!r}") from None

    parse.__name__ = flag
    return parse


def _positive(flag: str):
    def parse(text: str) -> float:
        try:
            value = float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"non-numeric value {text!r}") from None
        if not value > 0.0:
            raise argparse.ArgumentTypeError(f"must be > 0, got {text!r}")
        return value

    parse.__name__ = flag
    return parse


def _add_common(p: argparse.ArgumentParser) -> None:
    p.add_argument("--feas-tol", type=_positive("feas-tol"), default=None)
    p.add_argument("--residual-tol", type=_positive("residual-tol"), default=None)
    p.add_argument("--sample-dt", type=_positive("sample-dt"), default=0.1)
    p.add_argument("--output", choices=("table", "csv", "both"), default="table")
    p.add_argument("--out", default=None, metavar="PATH")


def _build_parser() -> _Parser:
    parser = _Parser(prog="windubins", description=__doc__)
    sub = parser.add_subparsers(dest="mode", required=True)

    p_plan = sub.add_parser("plan", help="solve one scenario")
    p_plan.add_argument("--wind", type=_pair("wind"), required=True, metavar="WX,WY")
    p_plan.add_argument("--target", type=_pair("target"), required=True, metavar="X,Y")
    p_plan.add_argument("--theta-f-deg", type=float, required=True, metavar="D")
    p_plan.add_argument("--rho", type=_positive("rho"), required=True, metavar="R")
    p_plan.add_argument("--start", type=_triple("start"), default=None, metavar="X,Y,THETA_DEG")
    _add_common(p_plan)

    p_batch = sub.add_parser("batch", help="solve scenarios from a file")
    p_batch.add_argument("path", metavar="FILE")
    _add_common(p_batch)

    sub.add_parser("selftest", help="run built-in reference checks")
    return parser


def _tolerances(args: argparse.Namespace) -> ToleranceSet:
    kw = {}
    if args.feas_tol is not None:
        kw["feas_tol"] = args.feas_tol
    if args.residual_tol is not None:
        kw["residual_tol"] = args.residual_tol
    return replace(ToleranceSet(), **kw) if kw else ToleranceSet()


def _scenario_from_args(args: argparse.Namespace) -> Scenario:
    wx, wy = args.wind
    try:
        wind = WindVector(wx, wy)
    except ValueError as exc:
        raise _CliError(f"argument --wind: {exc}") from None
    start = (0.0, 0.0, math.pi / 2)
    if args.start is not None:
        sx, sy, sth_deg = args.start
        start = (sx, sy, math.radians(sth_deg))
    try:
        return Scenario(
            wind=wind,
            target_x=args.target[0],
            target_y=args.target[1],
            theta_f=math.radians(args.theta_f_deg),
            rho=args.rho,
            start=start,
            tol=_tolerances(args),
        )
    except ValueError as exc:
        raise _CliError(f"argument --rho: {exc}") from None


def _format_table(result: PlanResult) -> str:
    lines = [f"t_f={result.t_f:.6f} best={result.best.variant.label}"]
    lines.append(
        f"{'variant':<8} {'alpha':>9} {'beta':>9} {'gamma':>9} {'d':>9} {'time':>10} {'residual':>9}"
    )
    for cand in result.all_candidates:
        mark = "*" if cand is result.best else " "
        p = cand.params
        lines.append(
            f"{mark}{cand.variant.label:<7} {p.alpha:9.6f} {p.beta:9.6f} {p.gamma:9.6f}"
            f" {p.d:9.6f} {cand.total_time:10.6f} {cand.residual:9.1e}"
        )
    return "\n".join(lines) + "\n"


def _format_csv(result: PlanResult, scenario: Scenario, dt: float) -> str:
    rows = sample(result.best, dt, scenario)
    lines = [CSV_HEADER]
    for r in rows:
        lines.append(
            f"{r.t:.17g},{r.x_rel:.17g},{r.y_rel:.17g},{r.theta:.17g},"
            f"{r.u:d},{r.x_inertial:.17g},{r.y_inertial:.17g}"
        )
    return "\n".join(lines) + "\n"


def _emit(result: PlanResult, scenario: Scenario, args: argparse.Namespace) -> str:
    parts = []
    if args.output in ("table", "both"):
        parts.append(_format_table(result))
    if args.output in ("csv", "both"):
        parts.append(_format_csv(result, scenario, args.sample_dt))
    return "".join(parts)


def _run_plan(args: argparse.Namespace) -> int:
    scenario = _scenario_from_args(args)
    result = plan(scenario)
    if not result.feasible:
        print("no feasible candidate", file=sys.stderr)
        return 2
    _write(args, _emit(result, scenario, args))
    return 0


@dataclass
class _BatchLine:
    number: int
    scenario: Scenario


def _parse_batch(path: str) -> list[_BatchLine]:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            raw = fh.readlines()
    except OSError as exc:
        raise _CliError(f"argument FILE: cannot read {path!r}: {exc}") from None
    out = []
    for i, line in enumerate(raw, start=1):
        text = line.split("#", 1)[0].strip()
        if not text:
            continue
        fields = text.split()
        if len(fields) != 6:
            raise _CliError(f"argument FILE: line {i}: expected 6 fields, got {len(fields)}")
        try:
            wx, wy, tx, ty, th_deg, rho = (float(f) for f in fields)
        except ValueError:
            raise _CliError(f"argument FILE: line {i}: non-numeric field") from None
        try:
            scenario = Scenario(
                wind=WindVector(wx, wy),
                target_x=tx,
                target_y=ty,
                theta_f=math.radians(th_deg),
                rho=rho,
            )
        except ValueError as exc:
            raise _CliError(f"argument FILE: line {i}: {exc}") from None
        out.append(_BatchLine(i, scenario))
    return out


def _run_batch(args: argparse.Namespace) -> int:
    lines = _parse_batch(args.path)
    chunks = []
    any_infeasible = False
    for item in lines:
        s = item.scenario
        if args.feas_tol is not None or args.residual_tol is not None:
            s = replace(s, tol=_tolerances(args))
        header = (
            f"# scenario {item.number}: wind={s.wind.wx:g},{s.wind.wy:g}"
            f" target={s.target_x:g},{s.target_y:g}"
            f" theta_f_deg={math.degrees(s.theta_f):g} rho={s.rho:g}\n"
        )
        result = plan(s)
        if not result.feasible:
            any_infeasible = True
            chunks.append(header + "# no feasible candidate\n")
            continue
        chunks.append(header + _emit(result, s, args))
    _write(args, "\n".join(chunks))
    return 2 if any_infeasible else 0


def _write(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


# ---------------------------------------------------------------------------
# selftest


def _reference_cases() -> list[tuple[str, Scenario, Variant, float]]:
    # Reference wind has speed exactly 0.5 at bearing -18 deg; the reference
    # times below require the exact value, not its 3-decimal rounding.
    wind1 = WindVector(0.5 * math.cos(math.radians(-18.0)), 0.5 * math.sin(math.radians(-18.0)))
    case1 = Scenario(wind=wind1, target_x=5.0, target_y=-2.0, theta_f=math.radians(72.0), rho=1.0)
    wind2 = WindVector(0.0, -(4.0 + 2.0 * math.sqrt(2.0)) / (9.0 * math.pi))
    case2 = Scenario(
        wind=wind2,
        target_x=1.0 - 1.0 / math.sqrt(2.0),
        target_y=-1.0,
        theta_f=math.pi / 4.0,
        rho=1.0,
    )
    return [
        ("case1", case1, Variant.LSL, 7.5294),
        ("case2", case2, Variant.RL2PI, 9.0 * math.pi / 4.0),
    ]


def _run_selftest() -> int:
    ok = True

    def check(name: str, passed: bool, detail: str = "") -> None:
        nonlocal ok
        ok = ok and passed
        print(("ok" if passed else "FAIL") + f": {name}" + (f" ({detail})" if detail else ""))

    for name, scenario, variant, t_ref in _reference_cases():
        result = plan(scenario)
        good = (
            result.feasible
            and result.best.variant is variant
            and abs(result.t_f - t_ref) <= 1e-3
        )
        check(
            f"{name} best={variant.label} t_f~{t_ref:.4f}",
            good,
            f"got {result.best.variant.label if result.feasible else 'none'} {result.t_f:.4f}",
        )

    rng = random.Random(20240821)
    worst = 0.0
    mirror_ok = True
    for _ in range(25):
        w = rng.uniform(0.0, 0.8)
        ang = rng.uniform(0.0, 2.0 * math.pi)
        scenario = Scenario(
            wind=WindVector(w * math.cos(ang), w * math.sin(ang)),
            target_x=rng.uniform(-8.0, 8.0),
            target_y=rng.uniform(-8.0, 8.0),
            theta_f=rng.uniform(0.0, 2.0 * math.pi),
            rho=1.0,
        )
        result = plan(scenario)
        if not result.feasible:
            continue
        for cand in result.all_candidates:
            worst = max(worst, cand.residual / (1.0 + cand.total_time))
        mirrored = Scenario(
            wind=WindVector(-scenario.wind.wx, scenario.wind.wy),
            target_x=-scenario.target_x,
            target_y=scenario.target_y,
            theta_f=(math.pi - scenario.theta_f) % (2.0 * math.pi),
            rho=1.0,
        )
        mres = plan(mirrored)
        if not (
            mres.feasible
            and abs(mres.t_f - result.t_f) <= 1e-9
            and mres.best.variant is MIRROR_VARIANT[result.best.variant]
        ):
            mirror_ok = False
    check("random-scenario residuals within tolerance", worst <= 1e-6, f"worst {worst:.2e}")
    check("mirror symmetry on random scenarios", mirror_ok)
    return 0 if ok else 1


def run(argv: list[str] | None = None) -> int:
    """Parse argv and execute; returns the process exit status."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        if args.mode == "plan":
            return _run_plan(args)
        if args.mode == "batch":
            return _run_batch(args)
        return _run_selftest()
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
