"""Equal-angle visibility of three adjacent collinear segments.

Four ordered axis points admit a witness P (a point off their common
line seeing the three segments under equal angles) exactly when a
cross-ratio of the configuration is below 3: in the flat plane the
cross-ratio of the heights themselves, in the half-plane model the same
expression applied to the squared heights. The squared form drops out of
the boundary-center reduction: the four geodesic arc centers through any
off-axis P have abscissas affine in the squared heights, so their
cross-ratio is independent of P.

Witness search is constructive. Euclidean witnesses come from
intersecting the two circle loci analytically. Hyperbolic witnesses are
found on the sampled locus of the upper triple (a, b, c) by locating a
sign change of the second angle residual along the curve and bisecting.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .halfplane import (
    AxisPoint,
    GeometryError,
    HPoint,
    OrderingError,
    axis_angle,
    equal_angle_residual,
)
from .locus import (
    HorizontalLine,
    TripleConfig,
    _solve_arrays,
    coefficients,
    euclidean_equal_angle_residual,
    euclidean_locus,
    solve_r2,
    theta_grid,
)

__all__ = [
    "Geometry",
    "FourConfig",
    "Witness",
    "WitnessSearchError",
    "cross_ratio_euclid",
    "exists_euclid",
    "cross_ratio_hyper",
    "exists_hyper",
    "find_witness_euclid",
    "find_witness_hyper",
    "fourpoint_report",
]

EXISTENCE_THRESHOLD = 3.0

# residual ceilings from the witness contracts
EUCLID_WITNESS_TOL = 1e-10
HYPER_WITNESS_TOL = 1e-8

_BISECT_G_TOL = 1e-10
_BISECT_THETA_TOL = 1e-13


class Geometry(enum.Enum):
    EUCLIDEAN = "euclid"
    HYPERBOLIC = "hyper"


class WitnessSearchError(RuntimeError):
    """A witness should exist but the curve search failed to locate it."""


@dataclass(frozen=True)
class FourConfig:
    """Ordered heights a > b > c > d with a geometry tag.

    Hyperbolic configs need all heights positive; Euclidean ones only
    the strict ordering (d, even c, may be nonpositive).
    """

    a: float
    b: float
    c: float
    d: float
    geometry: Geometry

    def __post_init__(self):
        for name in ("a", "b", "c", "d"):
            object.__setattr__(self, name, float(getattr(self, name)))
        values = (self.a, self.b, self.c, self.d)
        if not all(math.isfinite(v) for v in values):
            raise GeometryError(f"heights must be finite, got {values}")
        if not (self.a > self.b > self.c > self.d):
            raise OrderingError(f"heights must satisfy a > b > c > d, got {values}")
        if self.geometry is Geometry.HYPERBOLIC and self.d <= 0:
            raise GeometryError(f"hyperbolic heights must be positive, got d={self.d!r}")

    def scaled(self, factor: float) -> "FourConfig":
        return FourConfig(
            self.a * factor, self.b * factor, self.c * factor, self.d * factor, self.geometry
        )

    def shifted(self, offset: float) -> "FourConfig":
        if self.geometry is not Geometry.EUCLIDEAN:
            raise GeometryError("only Euclidean configs translate freely")
        return FourConfig(
            self.a + offset, self.b + offset, self.c + offset, self.d + offset, self.geometry
        )


@dataclass(frozen=True)
class Witness:
    """An equal-angle witness point with its two angle residuals."""

    x: float
    y: float
    residuals: tuple[float, float]

    def __post_init__(self):
        worst = max(abs(self.residuals[0]), abs(self.residuals[1]))
        if worst > HYPER_WITNESS_TOL:
            raise GeometryError(f"witness residual {worst:.3e} exceeds {HYPER_WITNESS_TOL}")


def _require(cfg: FourConfig, geometry: Geometry) -> None:
    if cfg.geometry is not geometry:
        raise GeometryError(f"operation expects a {geometry.value}-tagged config")


def cross_ratio_euclid(cfg: FourConfig) -> float:
    """((b-c)/(a-b)) / ((c-d)/(a-d)); always positive for ordered heights."""
    _require(cfg, Geometry.EUCLIDEAN)
    return ((cfg.b - cfg.c) / (cfg.a - cfg.b)) / ((cfg.c - cfg.d) / (cfg.a - cfg.d))


def cross_ratio_hyper(cfg: FourConfig) -> float:
    """(b^2-c^2)(a^2-d^2) / ((a^2-b^2)(c^2-d^2)).

    Computed as the Euclidean cross-ratio of the squared heights, which
    is the same expression and keeps the reduction exact in floats.
    """
    _require(cfg, Geometry.HYPERBOLIC)
    squares = FourConfig(
        cfg.a * cfg.a, cfg.b * cfg.b, cfg.c * cfg.c, cfg.d * cfg.d, Geometry.EUCLIDEAN
    )
    return cross_ratio_euclid(squares)


def exists_euclid(cfg: FourConfig) -> bool:
    """Whether a Euclidean witness exists (strict cross-ratio bound)."""
    return cross_ratio_euclid(cfg) < EXISTENCE_THRESHOLD


def exists_hyper(cfg: FourConfig) -> bool:
    """Whether a hyperbolic witness exists (strict cross-ratio bound)."""
    return cross_ratio_hyper(cfg) < EXISTENCE_THRESHOLD


def find_witness_euclid(cfg: FourConfig) -> Witness | None:
    """Intersect the two Euclidean loci analytically.

    Both loci are centered on the y-axis, so circle-circle intersection
    reduces to one linear equation for y. Parallel line loci and
    tangency (which lands on the axis) yield no witness, consistent with
    the strict inequality at cross-ratio 3. A short Newton polish on the
    two angle residuals absorbs the precision the locus parameters lose
    when the middle heights nearly coincide (tiny circles computed from
    large products).
    """
    _require(cfg, Geometry.EUCLIDEAN)
    if not exists_euclid(cfg):
        return None
    upper = euclidean_locus(cfg.a, cfg.b, cfg.c)
    lower = euclidean_locus(cfg.b, cfg.c, cfg.d)
    xy = _intersect_axis_loci(upper, lower)
    if xy is None:
        return None
    x, y = _polish_euclid(cfg, *xy)
    res1 = euclidean_equal_angle_residual((x, y), cfg.a, cfg.b, cfg.c)
    res2 = euclidean_equal_angle_residual((x, y), cfg.b, cfg.c, cfg.d)
    return Witness(x, y, (res1, res2))


def _intersect_axis_loci(upper, lower) -> tuple[float, float] | None:
    if isinstance(upper, HorizontalLine) and isinstance(lower, HorizontalLine):
        return None  # parallel lines: the equally-spaced degenerate case
    if isinstance(upper, HorizontalLine):
        y = upper.height
        circle = lower
    elif isinstance(lower, HorizontalLine):
        y = lower.height
        circle = upper
    else:
        k1, r1 = upper.center_y, upper.radius
        k2, r2 = lower.center_y, lower.radius
        if k1 == k2:
            return None  # concentric circles cannot meet
        # factored form: differencing the squares directly loses the whole
        # answer when both circles are small and nearly coincident
        y = 0.5 * (k1 + k2) + (r1 - r2) * (r1 + r2) / (2.0 * (k2 - k1))
        circle = upper
    dy = y - circle.center_y
    x2 = (circle.radius - dy) * (circle.radius + dy)
    if x2 <= 0.0:
        return None  # tangency sits on the axis, hence is not a witness
    return math.sqrt(x2), y


def _polish_euclid(cfg: FourConfig, x: float, y: float) -> tuple[float, float]:
    """Newton-polish the intersection against the exact angle residuals."""

    def residuals(px, py):
        return (
            euclidean_equal_angle_residual((px, py), cfg.a, cfg.b, cfg.c),
            euclidean_equal_angle_residual((px, py), cfg.b, cfg.c, cfg.d),
        )

    for _ in range(3):
        f1, f2 = residuals(x, y)
        if max(abs(f1), abs(f2)) <= 1e-13:
            break
        h = 1e-7 * max(abs(x), abs(y), 1e-6)
        d1x = (euclidean_equal_angle_residual((x + h, y), cfg.a, cfg.b, cfg.c) - f1) / h
        d2x = (euclidean_equal_angle_residual((x + h, y), cfg.b, cfg.c, cfg.d) - f2) / h
        d1y = (euclidean_equal_angle_residual((x, y + h), cfg.a, cfg.b, cfg.c) - f1) / h
        d2y = (euclidean_equal_angle_residual((x, y + h), cfg.b, cfg.c, cfg.d) - f2) / h
        det = d1x * d2y - d1y * d2x
        if det == 0.0 or not math.isfinite(det):
            break
        step_x = (f1 * d2y - f2 * d1y) / det
        step_y = (f2 * d1x - f1 * d2x) / det
        nx, ny = x - step_x, y - step_y
        if nx == 0.0:
            break  # polishing must not land on the axis
        g1, g2 = residuals(nx, ny)
        if max(abs(g1), abs(g2)) >= max(abs(f1), abs(f2)):
            break
        x, y = nx, ny
    return x, y


def find_witness_hyper(cfg: FourConfig, initial_grid: int = 4096) -> Witness | None:
    """Search the (a, b, c) locus for a point also equalizing the lower pair.

    Points sampled from the upper-triple locus already satisfy the first
    angle equality; the residual g = angle(b p c) - angle(c p d) is
    scanned along each root branch for a sign change and bisected in
    theta. The grid is escalated and widened geometrically toward the
    boundary before giving up; failure with a true existence predicate
    is raised, never swallowed. The returned witness has x > 0 (its
    mirror image is a witness too).
    """
    _require(cfg, Geometry.HYPERBOLIC)
    if not exists_hyper(cfg):
        return None
    abc = TripleConfig(cfg.a, cfg.b, cfg.c)
    n = initial_grid
    widen = False
    for _ in range(4):
        found = _scan_locus(abc, cfg, n, widen)
        if found is not None:
            witness = _refine_and_verify(abc, cfg, found)
            if witness is not None:
                return witness
        n *= 4
        widen = True
    raise WitnessSearchError(
        f"existence holds (cross-ratio {cross_ratio_hyper(cfg):.6g} < 3) but no "
        f"sign change was found up to grid resolution {n // 4}"
    )


def _g_values(cfg: FourConfig, x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return axis_angle(x, y, cfg.b, cfg.c) - axis_angle(x, y, cfg.c, cfg.d)


def _scan_thetas(abc: TripleConfig, n: int, widen: bool) -> np.ndarray:
    thetas = theta_grid(n)
    if not widen:
        return thetas
    margin = thetas[0]
    tail = margin * 0.5 ** np.arange(1, 61)
    return np.sort(np.concatenate([tail, thetas, math.pi - tail]))


def _scan_locus(abc, cfg, n, widen):
    """One sweep: locate a bracketing sign change of g along a branch.

    Returns (theta_lo, s_lo, theta_hi, s_hi, column) or a fold bracket
    (theta, s_lo, theta, s_hi, -1), or None.
    """
    thetas = _scan_thetas(abc, n, widen)
    roots, _ = _solve_arrays(abc, thetas)
    radius_cap = 1e6 * cfg.a
    fold_bracket = None
    for col in (0, 1):
        s = roots[:, col]
        valid = ~np.isnan(s) & (s < radius_cap * radius_cap)
        if not valid.any():
            continue
        idx = np.nonzero(valid)[0]
        th = thetas[idx]
        sv = s[idx]
        r = np.sqrt(sv)
        g = _g_values(cfg, r * np.cos(th), r * np.sin(th))
        contiguous = np.diff(idx) == 1
        change = (g[:-1] * g[1:] < 0.0) & contiguous
        hits = np.nonzero(change)[0]
        if hits.size:
            j = hits[0]
            return (th[j], sv[j], th[j + 1], sv[j + 1], col)
        exact = np.nonzero(g == 0.0)[0]
        if exact.size:
            j = exact[0]
            return (th[j], sv[j], th[j], sv[j], col)
    # check the oval folds: both roots exist at the extreme grid angles and
    # the branch connects across them
    both = ~np.isnan(roots[:, 0]) & ~np.isnan(roots[:, 1])
    if both.any():
        ends = [np.nonzero(both)[0][0], np.nonzero(both)[0][-1]]
        for i in ends:
            th_i = thetas[i]
            pair = roots[i]
            r_pair = np.sqrt(pair)
            g_pair = _g_values(cfg, r_pair * math.cos(th_i), r_pair * math.sin(th_i))
            if g_pair[0] * g_pair[1] < 0.0:
                fold_bracket = (th_i, pair[0], th_i, pair[1], -1)
    return fold_bracket


def _root_near(abc: TripleConfig, theta: float, s_hint: float) -> float | None:
    candidates = solve_r2(abc, theta)
    if not candidates:
        return None
    return min(candidates, key=lambda s: abs(s - s_hint))


def _g_at(cfg: FourConfig, theta: float, s: float) -> float:
    r = math.sqrt(s)
    return float(_g_values(cfg, r * math.cos(theta), r * math.sin(theta)))


def _refine_and_verify(abc, cfg, bracket) -> Witness | None:
    th_lo, s_lo, th_hi, s_hi, col = bracket
    if col == -1:
        theta, s = _bisect_fold(abc, cfg, th_lo, s_lo, s_hi)
    elif th_lo == th_hi:
        theta, s = th_lo, s_lo
    else:
        theta, s = _bisect_theta(abc, cfg, th_lo, s_lo, th_hi, s_hi)
    if theta is None:
        return None
    r = math.sqrt(s)
    x, y = abs(r * math.cos(theta)), r * math.sin(theta)
    p = HPoint(x, y)
    res1 = equal_angle_residual(p, AxisPoint(cfg.a), AxisPoint(cfg.b), AxisPoint(cfg.c)).value
    res2 = equal_angle_residual(p, AxisPoint(cfg.b), AxisPoint(cfg.c), AxisPoint(cfg.d)).value
    if max(abs(res1), abs(res2)) > HYPER_WITNESS_TOL:
        return None  # caller escalates the grid
    return Witness(x, y, (res1, res2))


def _bisect_theta(abc, cfg, th_lo, s_lo, th_hi, s_hi):
    g_lo = _g_at(cfg, th_lo, s_lo)
    g_hi = _g_at(cfg, th_hi, s_hi)
    for _ in range(200):
        if abs(g_lo) <= _BISECT_G_TOL:
            return th_lo, s_lo
        if abs(g_hi) <= _BISECT_G_TOL:
            return th_hi, s_hi
        if th_hi - th_lo <= _BISECT_THETA_TOL:
            return (th_lo, s_lo) if abs(g_lo) < abs(g_hi) else (th_hi, s_hi)
        th_mid = 0.5 * (th_lo + th_hi)
        s_mid = _root_near(abc, th_mid, 0.5 * (s_lo + s_hi))
        if s_mid is None:
            return None, None  # branch vanished mid-interval: fold artifact
        g_mid = _g_at(cfg, th_mid, s_mid)
        if g_lo * g_mid <= 0.0:
            th_hi, s_hi, g_hi = th_mid, s_mid, g_mid
        else:
            th_lo, s_lo, g_lo = th_mid, s_mid, g_mid
    return (th_lo, s_lo) if abs(g_lo) < abs(g_hi) else (th_hi, s_hi)


def _bisect_fold(abc, cfg, theta0, s_lo, s_hi):
    """Bisect across an oval fold, parameterized by s between the two roots.

    On the curve, cos(2 theta) = (alpha s^2 - gamma)/(2 beta s), which is
    well defined near a fold; the theta branch (left or right of pi/2) is
    fixed by the fold's side.
    """
    q = coefficients(abc)
    left = theta0 < math.pi / 2

    def theta_of(s: float) -> float:
        v = (q.alpha * s * s - q.gamma) / (2.0 * q.beta * s)
        v = max(-1.0, min(1.0, v))
        t = 0.5 * math.acos(v)
        return t if left else math.pi - t

    g_lo = _g_at(cfg, theta_of(s_lo), s_lo)
    g_hi = _g_at(cfg, theta_of(s_hi), s_hi)
    if g_lo * g_hi > 0.0:
        return None, None
    for _ in range(200):
        if abs(g_lo) <= _BISECT_G_TOL:
            return theta_of(s_lo), s_lo
        if abs(g_hi) <= _BISECT_G_TOL:
            return theta_of(s_hi), s_hi
        if abs(s_hi - s_lo) <= 1e-15 * max(abs(s_lo), abs(s_hi)):
            break
        s_mid = 0.5 * (s_lo + s_hi)
        g_mid = _g_at(cfg, theta_of(s_mid), s_mid)
        if g_lo * g_mid <= 0.0:
            s_hi, g_hi = s_mid, g_mid
        else:
            s_lo, g_lo = s_mid, g_mid
    s = s_lo if abs(g_lo) < abs(g_hi) else s_hi
    return theta_of(s), s


def fourpoint_report(cfg: FourConfig, witness: Witness | None, exists: bool, cross_ratio: float) -> dict:
    """JSON-ready record of an existence test and optional witness."""
    return {
        "geometry": "hyperbolic" if cfg.geometry is Geometry.HYPERBOLIC else "euclidean",
        "a": cfg.a,
        "b": cfg.b,
        "c": cfg.c,
        "d": cfg.d,
        "cross_ratio": cross_ratio,
        "exists": exists,
        "witness": None if witness is None else {"x": witness.x, "y": witness.y},
    }
