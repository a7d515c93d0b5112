"""Complete real-root isolation on [0, 2*pi) for the three equation shapes the
path families produce.

* quadratic-plus-cosine   c1*b^2 + c2*b + c3*cos(b) + c4 = 0
* constant-plus-sinusoid  e1 + e2*sin(b) + e3*cos(b) = 0
* linear-envelope         f1 + f2*sin(b) + f3*cos(b) + b*(f4*sin(b) + f5*cos(b)) = 0

The quadcos shape is solved by stationary-point subdivision: G'' has at most
two closed-form roots, so G' is piecewise monotone and its roots bracket the
monotone pieces of G, each holding at most one root.  The sinusoid is solved
analytically.  The envelope shape has no closed-form derivative chain, so it
is isolated exhaustively with a Lipschitz guard: a cell can be discarded once
both endpoint magnitudes exceed what a root inside could allow, with a
second-order certificate handling the neighbourhood of grazing roots.

All returned roots are polished with safeguarded Newton to machine precision;
brackets certify enclosure.  Roots where the function touches zero without a
sign change are reported separately as tangential.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .geometry import TWO_PI, ToleranceSet

_MERGE_EPS = 1e-11


@dataclass(frozen=True)
class QuadCosCoeffs:
    c1: float
    c2: float
    c3: float
    c4: float

    def __post_init__(self) -> None:
        _check_finite((self.c1, self.c2, self.c3, self.c4))

    @property
    def scale(self) -> float:
        return 1.0 + abs(self.c1) + abs(self.c2) + abs(self.c3) + abs(self.c4)


@dataclass(frozen=True)
class SinusoidCoeffs:
    e1: float
    e2: float
    e3: float

    def __post_init__(self) -> None:
        _check_finite((self.e1, self.e2, self.e3))

    @property
    def scale(self) -> float:
        return 1.0 + abs(self.e1) + abs(self.e2) + abs(self.e3)


@dataclass(frozen=True)
class EnvelopeCoeffs:
    f1: float
    f2: float
    f3: float
    f4: float
    f5: float

    def __post_init__(self) -> None:
        _check_finite((self.f1, self.f2, self.f3, self.f4, self.f5))

    @property
    def scale(self) -> float:
        return 1.0 + abs(self.f1) + abs(self.f2) + abs(self.f3) + abs(self.f4) + abs(self.f5)


@dataclass(frozen=True)
class RootSet:
    """Isolated roots on [0, 2*pi), sorted ascending, with enclosing brackets
    and residuals.  ``tangential[i]`` marks roots detected by the
    minimum-magnitude test rather than a sign change (grazing contact)."""

    roots: tuple[float, ...]
    brackets: tuple[tuple[float, float], ...]
    residuals: tuple[float, ...]
    tangential: tuple[bool, ...]

    def __len__(self) -> int:
        return len(self.roots)

    def __iter__(self):
        return iter(self.roots)

    @property
    def simple_roots(self) -> tuple[float, ...]:
        return tuple(r for r, t in zip(self.roots, self.tangential) if not t)


def _check_finite(values) -> None:
    for v in values:
        if not math.isfinite(v):
            raise ValueError(f"coefficients must be finite, got {v}")


def _zero_is_grazing(g, x: float, lo: float, hi: float) -> bool:
    """Classify an exact float zero: grazing when the function keeps one sign
    on both sides (probing clear of the rounding plateau of a double root).
    Zeros at the domain edge count as plain crossings."""
    probe = 1e-6
    if x - probe < lo or x + probe > hi:
        return False
    left, right = g(x - probe), g(x + probe)
    if left == 0.0 or right == 0.0:
        return True
    return (left < 0.0) == (right < 0.0)


def _refine(fused, lo: float, hi: float, flo: float) -> tuple[float, float, float]:
    """Safeguarded Newton inside a sign-change bracket.

    ``fused(x)`` returns (value, derivative).  Newton steps that leave the
    current bracket fall back to bisection, so convergence is guaranteed; the
    returned bracket encloses the root at machine width."""
    x = 0.5 * (lo + hi)
    neg = flo < 0.0
    for _ in range(120):
        fx, dx = fused(x)
        if fx == 0.0:
            return x, x, x
        if neg != (fx < 0.0):
            hi = x
        else:
            lo = x
        if hi - lo <= 1e-14 + 4.0e-16 * hi:
            break
        if dx != 0.0:
            xn = x - fx / dx
            if lo < xn < hi:
                x = xn
                continue
        x = 0.5 * (lo + hi)
    return 0.5 * (lo + hi), lo, hi


class _Collector:
    """Accumulates roots while deduplicating near-coincident detections.

    Sign-change roots merge within a machine-scale window.  Tangential
    detections are double roots: located only to the width of the float
    plateau where the function rounds to zero (up to ~1e-7), so they merge
    over a wider window and always yield to a nearby sign-change root.
    """

    _TANGENT_MERGE = 1e-6

    def __init__(self, f) -> None:
        self._f = f
        self.items: list[tuple[float, float, float, float, bool]] = []

    def add(self, root: float, lo: float, hi: float, tangential: bool) -> None:
        if not (0.0 <= root < TWO_PI):
            return
        for i, (r, _lo, _hi, _res, was_tangential) in enumerate(self.items):
            window = self._TANGENT_MERGE if (tangential or was_tangential) else _MERGE_EPS
            if abs(r - root) <= window:
                if was_tangential and not tangential:
                    self.items[i] = (root, lo, hi, abs(self._f(root)), False)
                return
        self.items.append((root, lo, hi, abs(self._f(root)), tangential))

    def build(self) -> RootSet:
        self.items.sort(key=lambda it: it[0])
        return RootSet(
            roots=tuple(it[0] for it in self.items),
            brackets=tuple((it[1], it[2]) for it in self.items),
            residuals=tuple(it[3] for it in self.items),
            tangential=tuple(it[4] for it in self.items),
        )


def solve_quadcos(
    coeffs: QuadCosCoeffs,
    tol: ToleranceSet | None = None,
    domain: tuple[float, float] | None = None,
) -> RootSet:
    """All real roots of c1*b^2 + c2*b + c3*cos(b) + c4 on [0, 2*pi), or on a
    half-open subinterval of it when ``domain`` narrows the search.

    Subdivision order: the at-most-two closed-form roots of G'' split the
    domain into pieces where G' is monotone; bracketed solves give every root
    of G'; those stationary points in turn split the domain into pieces where
    G itself is monotone.  Left endpoints that are exact zeros count once.
    """
    tol = tol or _DEFAULT_TOL
    lo, hi = domain if domain is not None else (0.0, TWO_PI)
    c1, c2, c3, c4 = coeffs.c1, coeffs.c2, coeffs.c3, coeffs.c4
    cos, sin = math.cos, math.sin
    two_c1 = 2.0 * c1

    def g(b: float) -> float:
        return (c1 * b + c2) * b + c3 * cos(b) + c4

    def gp(b: float) -> float:
        return two_c1 * b + c2 - c3 * sin(b)

    def g_fused(b: float) -> tuple[float, float]:
        return (c1 * b + c2) * b + c3 * cos(b) + c4, two_c1 * b + c2 - c3 * sin(b)

    def gp_fused(b: float) -> tuple[float, float]:
        return two_c1 * b + c2 - c3 * sin(b), two_c1 - c3 * cos(b)

    if not hi > lo:
        return _Collector(g).build()

    # Roots of G'' in closed form.
    inflections: list[float] = []
    if c3 != 0.0:
        ratio = two_c1 / c3
        if -1.0 <= ratio <= 1.0:
            b = math.acos(ratio)
            if lo < b < hi:
                inflections.append(b)
            b2 = TWO_PI - b
            if lo < b2 < hi and b2 != b:
                inflections.append(b2)
    elif c1 == 0.0:
        # G' constant: G is linear; handle directly.
        collector = _Collector(g)
        if c2 != 0.0:
            r = -c4 / c2
            if lo <= r < hi:
                collector.add(r, r, r, False)
        return collector.build()

    knots = sorted({lo, hi, *inflections})

    # Roots of G' on the monotone pieces.
    stationary: list[float] = []
    vals = [gp(k) for k in knots]
    for i in range(len(knots) - 1):
        fa, fb = vals[i], vals[i + 1]
        if fa == 0.0:
            stationary.append(knots[i])
        elif fa * fb < 0.0:
            r, _, _ = _refine(gp_fused, knots[i], knots[i + 1], fa)
            stationary.append(r)

    # Roots of G between consecutive stationary points.
    collector = _Collector(g)
    pts = sorted({lo, hi, *stationary})
    gvals = [g(p) for p in pts]
    for i in range(len(pts) - 1):
        fa, fb = gvals[i], gvals[i + 1]
        if fa == 0.0:
            collector.add(pts[i], pts[i], pts[i], _zero_is_grazing(g, pts[i], lo, hi))
        elif fa * fb < 0.0:
            r, rlo, rhi = _refine(g_fused, pts[i], pts[i + 1], fa)
            collector.add(r, rlo, rhi, False)

    # Grazing contact at a stationary point of G: zero touch without sign change.
    graze = tol.feas_tol * (1.0 + abs(c1) + abs(c2) + abs(c3) + abs(c4))
    for p, gv in zip(pts, gvals):
        if p in (lo, hi) and p not in stationary:
            continue
        if abs(gv) <= graze:
            collector.add(p, p, p, True)
    return collector.build()


def solve_sinusoid(coeffs: SinusoidCoeffs, tol: ToleranceSet | None = None) -> RootSet:
    """Roots of e1 + e2*sin(b) + e3*cos(b) = 0, analytically.

    Writes the oscillating part as R*sin(b + phi) with R = hypot(e2, e3):
    no roots when |e1| > R, a single grazing root at |e1| = R (within the
    feasibility slack), and two arcsine branches otherwise.  Brackets are
    degenerate because the roots are exact.
    """
    tol = tol or _DEFAULT_TOL
    e1, e2, e3 = coeffs.e1, coeffs.e2, coeffs.e3

    def g(b: float) -> float:
        return e1 + e2 * math.sin(b) + e3 * math.cos(b)

    collector = _Collector(g)
    amp = math.hypot(e2, e3)
    if amp == 0.0:
        return collector.build()
    phi = math.atan2(e3, e2)
    s = -e1 / amp
    band = tol.feas_tol * (1.0 + abs(e1) + abs(e2) + abs(e3)) / amp
    if abs(s) > 1.0 + band:
        return collector.build()
    if abs(s) >= 1.0 - band:
        # Grazing: R*sin(b + phi) = -e1 with |e1| ~ R.
        b = _wrap(math.copysign(math.pi / 2.0, s) - phi)
        collector.add(b, b, b, True)
        return collector.build()
    psi = math.asin(s)
    for cand in (psi - phi, math.pi - psi - phi):
        b = _wrap(cand)
        collector.add(b, b, b, False)
    return collector.build()


def solve_envelope(
    coeffs: EnvelopeCoeffs,
    tol: ToleranceSet | None = None,
    domain: tuple[float, float] | None = None,
) -> RootSet:
    """All roots of f1 + f2*sin(b) + f3*cos(b) + b*(f4*sin(b) + f5*cos(b)) on
    [0, 2*pi) (or a subinterval) by Lipschitz-guarded exhaustive isolation.

    With L >= sup|G'| a cell [a, b] cannot contain a root once both |G(a)| and
    |G(b)| exceed L*(b-a)/2, so such cells are discarded.  Sign-change cells
    shrink until G is provably monotone there (via a bound on G''), then a
    bracketed solve finishes.  Same-sign cells that survive a second-order
    midpoint certificate split recursively down to root_tol; a refined cell
    whose magnitude stays below the feasibility slack is reported as a
    tangential (grazing) root.
    """
    tol = tol or _DEFAULT_TOL
    lo, hi = domain if domain is not None else (0.0, TWO_PI)
    f1, f2, f3, f4, f5 = coeffs.f1, coeffs.f2, coeffs.f3, coeffs.f4, coeffs.f5
    cos, sin = math.cos, math.sin

    def g(b: float) -> float:
        s, c = sin(b), cos(b)
        return f1 + f2 * s + f3 * c + b * (f4 * s + f5 * c)

    def g_fused(b: float) -> tuple[float, float]:
        s, c = sin(b), cos(b)
        return (
            f1 + f2 * s + f3 * c + b * (f4 * s + f5 * c),
            f2 * c - f3 * s + f4 * s + f5 * c + b * (f4 * c - f5 * s),
        )

    collector = _Collector(g)
    if not hi > lo:
        return collector.build()

    env = abs(f4) + abs(f5)
    lip1 = abs(f2) + abs(f3) + env * (1.0 + TWO_PI)          # sup|G'|
    lip2 = abs(f2) + abs(f3) + env * (2.0 + TWO_PI)          # sup|G''|
    graze = tol.feas_tol * (1.0 + abs(f1) + abs(f2) + abs(f3) + env)
    root_tol = tol.root_tol

    n0 = max(4, int(64 * (hi - lo) / TWO_PI))
    h0 = (hi - lo) / n0
    grid = [lo + i * h0 for i in range(n0)] + [hi]
    vals = [g(x) for x in grid]
    stack = [(grid[i], grid[i + 1], vals[i], vals[i + 1]) for i in range(n0 - 1, -1, -1)]

    while stack:
        a, b, fa, fb = stack.pop()
        if fa == 0.0:
            collector.add(a, a, a, _zero_is_grazing(g, a, lo, hi))
            # Keep scanning the cell interior past the exact zero.
            a2 = a + max(root_tol, (b - a) * 1e-9)
            if a2 >= b:
                continue
            a, fa = a2, g(a2)
            if fa == 0.0:
                continue
        width = b - a
        if fa * fb < 0.0:
            # Provably monotone => unique root; otherwise keep splitting.
            m = 0.5 * (a + b)
            fm, dm = g_fused(m)
            if abs(dm) - 0.5 * lip2 * width > 0.0 or width <= root_tol:
                r, rlo, rhi = _refine(g_fused, a, b, fa)
                collector.add(r, rlo, rhi, False)
                continue
        else:
            if min(abs(fa), abs(fb)) > 0.5 * lip1 * width:
                continue
            # Second-order certificate: around a grazing (double) root the
            # first-order guard never fires, but a Taylor bound from the
            # midpoint still proves most nearby cells root-free.
            m = 0.5 * (a + b)
            fm, dm = g_fused(m)
            if abs(fm) - 0.5 * width * abs(dm) - 0.125 * lip2 * width * width > 0.0:
                continue
            if width <= root_tol:
                vals3 = ((abs(fa), a), (abs(fm), m), (abs(fb), b))
                low, arg = min(vals3)
                if low <= graze:
                    collector.add(arg, a, b, True)
                continue
        stack.append((m, b, fm, fb))
        stack.append((a, m, fa, fm))
    return collector.build()


def _wrap(a: float) -> float:
    r = a % TWO_PI
    return 0.0 if r >= TWO_PI else r


_DEFAULT_TOL = ToleranceSet()
