"""Frames, kinematic state, and exact propagation for a unit-speed Dubins vehicle.

All planning happens in the air-relative frame: an inertial frame that drifts
with the wind.  In it the vehicle obeys wind-free Dubins kinematics

    x' = cos(theta),  y' = sin(theta),  theta' = u / rho,   u in {-1, 0, +1}

and the goal becomes a virtual target that starts at the goal's inertial
position and moves with velocity -wind.  Interception at time t therefore
means ending at ``target - t * wind`` with the requested heading.

Everything here is a pure function of its inputs; states and scenarios are
immutable once constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace

TWO_PI = 2.0 * math.pi
HALF_PI = 0.5 * math.pi

#: Wind speeds below this are treated as exactly zero (stationary target).
ZERO_WIND_EPS = 1e-12


def mod2pi(angle: float) -> float:
    """Wrap an angle into [0, 2*pi).  Guards against the float-mod artifact
    where a tiny negative input wraps to exactly 2*pi."""
    r = angle % TWO_PI
    return 0.0 if r >= TWO_PI else r


def ang_dist(a: float, b: float) -> float:
    """Smallest absolute difference between two angles, in [0, pi]."""
    d = mod2pi(a - b)
    return min(d, TWO_PI - d)


@dataclass(frozen=True)
class RelativeState:
    """Planar pose in the air-relative frame; heading normalized to [0, 2*pi)."""

    x: float
    y: float
    theta: float

    def __post_init__(self) -> None:
        object.__setattr__(self, "theta", mod2pi(self.theta))


@dataclass(frozen=True)
class WindVector:
    """Steady wind, normalized by vehicle airspeed.  Must satisfy |w| < 1."""

    wx: float
    wy: float

    def __post_init__(self) -> None:
        if not (self.wx * self.wx + self.wy * self.wy < 1.0):
            raise ValueError(
                f"wind speed must be < 1 vehicle speed, got |w|={self.speed():.6g}"
            )

    def speed(self) -> float:
        return math.hypot(self.wx, self.wy)

    def is_zero(self) -> bool:
        return self.speed() < ZERO_WIND_EPS


@dataclass(frozen=True)
class ToleranceSet:
    """Numerical tolerances used throughout the planner.

    feas_tol        slack on the measure-zero feasibility equalities of the
                    SC/CC families (they almost never hold exactly in floats)
    residual_tol    terminal position residual scale for accepting a candidate
    root_tol        maximum bracket width reported for an isolated root
    zero_angle_eps  arc radians below this are treated as degenerate
    """

    feas_tol: float = 1e-6
    residual_tol: float = 1e-6
    root_tol: float = 1e-10
    zero_angle_eps: float = 1e-8

    def __post_init__(self) -> None:
        for name in ("feas_tol", "residual_tol", "root_tol", "zero_angle_eps"):
            if not getattr(self, name) > 0.0:
                raise ValueError(f"{name} must be strictly positive")

    def widened(self, factor: float = 100.0) -> "ToleranceSet":
        return replace(self, feas_tol=self.feas_tol * factor)


@dataclass(frozen=True)
class ControlSchedule:
    """Piecewise-constant control: ordered (u, duration) pieces, u in {-1, 0, +1}."""

    pieces: tuple[tuple[int, float], ...]

    def __post_init__(self) -> None:
        clean = []
        for u, dur in self.pieces:
            if u not in (-1, 0, 1):
                raise ValueError(f"control value must be -1, 0 or +1, got {u}")
            if not (dur >= 0.0 and math.isfinite(dur)):
                raise ValueError(f"piece duration must be finite and >= 0, got {dur}")
            clean.append((int(u), float(dur)))
        object.__setattr__(self, "pieces", tuple(clean))

    @property
    def total_duration(self) -> float:
        return math.fsum(dur for _, dur in self.pieces)

    def control_at(self, t: float) -> int:
        """Control active at time t (right-continuous; last piece at the end)."""
        acc = 0.0
        for u, dur in self.pieces:
            acc += dur
            if t < acc:
                return u
        return self.pieces[-1][0] if self.pieces else 0

    def switch_times(self) -> list[float]:
        """Interior piece boundaries, strictly between 0 and the total duration."""
        out, acc = [], 0.0
        for _, dur in self.pieces[:-1]:
            acc += dur
            if 0.0 < acc < self.total_duration:
                out.append(acc)
        return out


DEFAULT_START = (0.0, 0.0, HALF_PI)


@dataclass(frozen=True)
class Scenario:
    """One planning problem: wind, inertial goal pose, turn radius, tolerances.

    ``start`` is the inertial start pose; the default matches the canonical
    frame where planning formulas apply directly.  ``normalize`` reduces any
    other start to it.
    """

    wind: WindVector
    target_x: float
    target_y: float
    theta_f: float
    rho: float
    start: tuple[float, float, float] = DEFAULT_START
    tol: ToleranceSet = field(default_factory=ToleranceSet)

    def __post_init__(self) -> None:
        if not (self.rho > 0.0 and math.isfinite(self.rho)):
            raise ValueError(f"rho must be a positive finite length, got {self.rho}")
        object.__setattr__(self, "theta_f", mod2pi(self.theta_f))
        sx, sy, sth = self.start
        object.__setattr__(self, "start", (float(sx), float(sy), mod2pi(sth)))

    @property
    def target(self) -> tuple[float, float]:
        return (self.target_x, self.target_y)

    def is_normalized(self) -> bool:
        sx, sy, sth = self.start
        return sx == 0.0 and sy == 0.0 and sth == HALF_PI


@dataclass(frozen=True)
class RigidTransform:
    """Rotation by ``angle`` about the origin after translating ``origin`` to it.

    Maps original-frame data to the normalized frame via ``to_local``:
    points translate and rotate, free vectors (wind) only rotate.
    """

    angle: float
    origin: tuple[float, float]

    @property
    def is_identity(self) -> bool:
        return self.angle == 0.0 and self.origin == (0.0, 0.0)

    def to_local(self, x: float, y: float) -> tuple[float, float]:
        dx, dy = x - self.origin[0], y - self.origin[1]
        c, s = math.cos(self.angle), math.sin(self.angle)
        return (c * dx - s * dy, s * dx + c * dy)

    def to_world(self, x: float, y: float) -> tuple[float, float]:
        c, s = math.cos(self.angle), math.sin(self.angle)
        return (c * x + s * y + self.origin[0], -s * x + c * y + self.origin[1])

    def vec_to_local(self, x: float, y: float) -> tuple[float, float]:
        c, s = math.cos(self.angle), math.sin(self.angle)
        return (c * x - s * y, s * x + c * y)

    def vec_to_world(self, x: float, y: float) -> tuple[float, float]:
        c, s = math.cos(self.angle), math.sin(self.angle)
        return (c * x + s * y, -s * x + c * y)

    def angle_to_local(self, theta: float) -> float:
        return mod2pi(theta + self.angle)

    def angle_to_world(self, theta: float) -> float:
        return mod2pi(theta - self.angle)


IDENTITY_TRANSFORM = RigidTransform(0.0, (0.0, 0.0))


def normalize(scenario: Scenario) -> tuple[Scenario, RigidTransform]:
    """Re-express a scenario so the start pose is exactly (0, 0, pi/2).

    Returns the normalized scenario and the rigid transform that maps
    original-frame data into the normalized frame.  Wind rotates with the
    frame; the target translates and rotates.  Applying ``to_world`` to a
    planned path reproduces a solution of the original scenario.
    """
    sx, sy, sth = scenario.start
    if scenario.is_normalized():
        return scenario, IDENTITY_TRANSFORM
    tf = RigidTransform(HALF_PI - sth, (sx, sy))
    wx, wy = tf.vec_to_local(scenario.wind.wx, scenario.wind.wy)
    tx, ty = tf.to_local(scenario.target_x, scenario.target_y)
    norm = Scenario(
        wind=WindVector(wx, wy),
        target_x=tx,
        target_y=ty,
        theta_f=tf.angle_to_local(scenario.theta_f),
        rho=scenario.rho,
        start=DEFAULT_START,
        tol=scenario.tol,
    )
    return norm, tf


def propagate(
    x: float, y: float, theta: float, u: int, duration: float, rho: float
) -> tuple[float, float, float]:
    """Exact endpoint of one constant-control piece (arc or line).  The heading
    is returned unwrapped so that successive pieces compose exactly."""
    if duration == 0.0:
        return (x, y, theta)
    if u == 0:
        return (x + duration * math.cos(theta), y + duration * math.sin(theta), theta)
    cx = x - u * rho * math.sin(theta)
    cy = y + u * rho * math.cos(theta)
    theta2 = theta + u * duration / rho
    return (cx + u * rho * math.sin(theta2), cy - u * rho * math.cos(theta2), theta2)


def integrate(start: RelativeState, schedule: ControlSchedule, rho: float) -> RelativeState:
    """Closed-form endpoint of a piecewise arc/line path.  No ODE stepping:
    each piece is propagated exactly, so composition is exact as well."""
    x, y, th = start.x, start.y, start.theta
    for u, dur in schedule.pieces:
        x, y, th = propagate(x, y, th, u, dur, rho)
    return RelativeState(x, y, th)


def state_at(
    start: RelativeState, schedule: ControlSchedule, rho: float, t: float
) -> tuple[float, float, float, int]:
    """Pose at an arbitrary time along a schedule, plus the active control."""
    x, y, th = start.x, start.y, start.theta
    remaining = t
    last_u = schedule.pieces[-1][0] if schedule.pieces else 0
    for u, dur in schedule.pieces:
        if remaining <= dur:
            x, y, th = propagate(x, y, th, u, remaining, rho)
            return (x, y, mod2pi(th), u)
        x, y, th = propagate(x, y, th, u, dur, rho)
        remaining -= dur
    return (x, y, mod2pi(th), last_u)


def to_inertial(rel: RelativeState, t: float, wind: WindVector) -> tuple[float, float]:
    """Inertial position of an air-relative position at time t: the relative
    frame has drifted by t * wind."""
    return (rel.x + t * wind.wx, rel.y + t * wind.wy)


def target_relative(scenario: Scenario, t: float) -> tuple[float, float]:
    """Virtual target position in the air-relative frame at time t."""
    return (
        scenario.target_x - t * scenario.wind.wx,
        scenario.target_y - t * scenario.wind.wy,
    )
