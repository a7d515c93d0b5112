"""Global minimum-time planning: run all four family solvers, validate every
candidate, take the global minimum, and map results back to the caller's frame.

The minimum over the four family times is the global optimum; absence of any
feasible candidate is reported as such rather than papered over.  Ties within
1e-12 of each other resolve deterministically by family/variant enum order.
"""

from __future__ import annotations

import math
import time
from dataclasses import dataclass, replace
from typing import NamedTuple

from .families import Family, PathCandidate, solve_all
from .geometry import (
    RelativeState,
    RigidTransform,
    Scenario,
    ang_dist,
    integrate,
    normalize,
    state_at,
    target_relative,
)

_TIE_EPS = 1e-12
_START = RelativeState(0.0, 0.0, math.pi / 2)


@dataclass(frozen=True)
class ValidationReport:
    """Residuals of one candidate against its scenario's terminal conditions."""

    position_error: float
    heading_error: float
    interception_error: float
    feasible: bool


@dataclass(frozen=True)
class PlanResult:
    """Outcome of one planning call.

    ``best`` is None (and ``t_f`` infinite) when no feasible candidate exists.
    ``per_family_times`` maps every family to its fastest candidate time, with
    +inf marking families that produced nothing.  ``denormalizing_transform``
    maps normalized-frame data back to the caller's frame.
    """

    best: PathCandidate | None
    all_candidates: tuple[PathCandidate, ...]
    t_f: float
    per_family_times: dict[Family, float]
    denormalizing_transform: RigidTransform
    wall_time: float
    feas_tol_widened: bool
    normalized_scenario: Scenario

    @property
    def feasible(self) -> bool:
        return self.best is not None


class TrajectoryPoint(NamedTuple):
    t: float
    x_rel: float
    y_rel: float
    theta: float
    u: int
    x_inertial: float
    y_inertial: float


def validate(candidate: PathCandidate, scenario: Scenario) -> ValidationReport:
    """Forward-integrate a candidate exactly and report its terminal residuals.

    Position is compared against the moving target at the candidate's total
    time; the interception identity (travel time equals the target's arrival
    time at the endpoint) is reported separately, degenerating to the position
    residual for zero wind.
    """
    norm, _ = normalize(scenario)
    tol = norm.tol
    total = candidate.total_time
    end = integrate(_START, candidate.schedule, norm.rho)
    tx, ty = target_relative(norm, total)
    pos_err = math.hypot(end.x - tx, end.y - ty)
    head_err = ang_dist(end.theta, norm.theta_f)
    w = norm.wind.speed()
    if w > 0.0:
        dist = math.hypot(end.x - norm.target_x, end.y - norm.target_y)
        icpt_err = abs(dist - total * w)
    else:
        icpt_err = pos_err
    feasible = (
        pos_err <= tol.residual_tol * (1.0 + total)
        and head_err <= tol.feas_tol
        and icpt_err <= tol.residual_tol * (1.0 + total)
    )
    return ValidationReport(pos_err, head_err, icpt_err, feasible)


def plan(scenario: Scenario, retry_widened: bool = True) -> PlanResult:
    """Compute the globally minimum-time path for a scenario.

    Invalid inputs (wind at or above vehicle speed, non-positive radius) raise
    ValueError at Scenario construction.  If no family yields a candidate, the
    feasibility slack is widened once (x100) and the solve retried; the result
    records whether that happened.
    """
    t0 = time.perf_counter()
    norm, transform = normalize(scenario)
    candidates = solve_all(norm)
    widened = False
    if not candidates and retry_widened:
        widened = True
        norm = replace(norm, tol=norm.tol.widened())
        candidates = solve_all(norm)

    ordered = tuple(
        sorted(candidates, key=lambda c: (c.total_time, c.variant.order))
    )
    best = None
    for cand in ordered:
        if best is None:
            best = cand
        elif cand.total_time < best.total_time - _TIE_EPS:
            best = cand
        elif abs(cand.total_time - best.total_time) <= _TIE_EPS and cand.variant.order < best.variant.order:
            best = cand
    per_family = {family: math.inf for family in Family}
    for cand in ordered:
        fam = cand.tag.family
        per_family[fam] = min(per_family[fam], cand.total_time)

    return PlanResult(
        best=best,
        all_candidates=ordered,
        t_f=best.total_time if best is not None else math.inf,
        per_family_times=per_family,
        denormalizing_transform=transform,
        wall_time=time.perf_counter() - t0,
        feas_tol_widened=widened,
        normalized_scenario=norm,
    )


def sample(candidate: PathCandidate, dt: float, scenario: Scenario) -> list[TrajectoryPoint]:
    """Tabulate a candidate path at t = 0, dt, 2*dt, ... plus every control
    switch time, ending exactly at the total time.

    Rows carry the air-relative pose (in the caller's frame) and the inertial
    position; the control column holds the control active on [t_k, t_{k+1}),
    so re-integrating it row by row reproduces the pose columns exactly.
    """
    if not dt > 0.0:
        raise ValueError(f"dt must be positive, got {dt}")
    norm, transform = normalize(scenario)
    total = candidate.total_time
    times = [k * dt for k in range(int(total / dt) + 1)]
    times.extend(candidate.schedule.switch_times())
    times.append(total)
    times.sort()
    merged: list[float] = []
    for t in times:
        if not merged or t - merged[-1] > 1e-12 * max(1.0, total):
            merged.append(min(t, total))
    if merged[-1] != total:
        if total - merged[-1] <= 1e-12 * max(1.0, total):
            merged[-1] = total
        else:
            merged.append(total)

    wind = scenario.wind
    rows = []
    for t in merged:
        x, y, th, _ = state_at(_START, candidate.schedule, norm.rho, t)
        u = candidate.schedule.control_at(t)
        wx_, wy_ = transform.to_world(x, y)
        th_w = transform.angle_to_world(th)
        ix = wx_ + t * wind.wx
        iy = wy_ + t * wind.wy
        rows.append(TrajectoryPoint(t, wx_, wy_, th_w, u, ix, iy))
    return rows
