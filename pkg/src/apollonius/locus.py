"""The equal-angle locus of three axis points, in both geometries.

For heights a > b > c > 0 on the y-axis, the set of half-plane points
seeing the two segments under equal hyperbolic angles is the polar
quartic

    r^4 alpha = 2 r^2 beta cos(2 theta) + gamma,

with alpha = 2b^2 - a^2 - c^2, beta = a^2 c^2 - b^4 and
gamma = b^2 (2 a^2 c^2 - a^2 b^2 - c^2 b^2). Read as a quadratic in
s = r^2 this is solved per angle, which is the only sampler used here.

The shape is governed by where b sits relative to three means of (a, c):
the quadratic mean Q, the geometric mean G and the harmonic-quadratic
mean H = (2 a^2 c^2 / (a^2 + c^2))^(1/2), with H < G < Q. The boundary
cases degenerate to half of a hyperbola, a semicircle and half of a
lemniscate; the four open intervals give ovals (outside [H, Q] the
angle-domain is disc-limited and every angle carries two radii) or
boundary-to-boundary arcs. Whether the ovals enclose the point (0, b)
is left undetermined here: the sampler discovers each regime's
theta-domain empirically from root existence rather than asserting it.

The Euclidean counterpart (same equal-angle condition in the flat plane)
is a horizontal line when b = (a + c)/2 and otherwise the circle with
diameter from (0, b) to (0, y_d), y_d = (2ac - bc - ab)/(a + c - 2b).
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from .halfplane import (
    GeometryError,
    HPoint,
    OnAxisError,
    OrderingError,
)
from .serialize import fmt17

__all__ = [
    "TripleConfig",
    "QuarticCoeffs",
    "LocusClass",
    "CurveSample",
    "HorizontalLine",
    "AxisCircle",
    "EuclideanLocus",
    "coefficients",
    "eval_quartic",
    "classify",
    "solve_r2",
    "theta_grid",
    "sample_curve",
    "euclidean_locus",
    "euclidean_equal_angle_residual",
    "samples_to_csv",
    "classification_report",
]

# relative |alpha| threshold below which the quadratic in s degenerates
# to the linear (hyperbola-boundary) equation
ALPHA_EPS = 1e-14

# roots at or below this are the lemniscate's node at the origin, which
# lies on the boundary axis, not in the half-plane
ORIGIN_EPS = 1e-300


@dataclass(frozen=True)
class TripleConfig:
    """Ordered heights a > b > c > 0 on the y-axis."""

    a: float
    b: float
    c: float

    def __post_init__(self):
        for name in ("a", "b", "c"):
            object.__setattr__(self, name, float(getattr(self, name)))
            if not math.isfinite(getattr(self, name)):
                raise GeometryError(f"{name} must be finite, got {getattr(self, name)!r}")
        if not (self.a > self.b > self.c > 0):
            raise OrderingError(
                f"heights must satisfy a > b > c > 0, got ({self.a}, {self.b}, {self.c})"
            )

    def scaled(self, factor: float) -> "TripleConfig":
        return TripleConfig(self.a * factor, self.b * factor, self.c * factor)


@dataclass(frozen=True)
class QuarticCoeffs:
    """Coefficients (alpha, beta, gamma) of the polar quartic."""

    alpha: float
    beta: float
    gamma: float


class LocusClass(enum.Enum):
    """The seven shape regimes, by the position of b among the means."""

    ABOVE_QUADRATIC = "AboveQuadratic"
    QUADRATIC_HYPERBOLA = "QuadraticHyperbola"
    BETWEEN_GEOMETRIC_AND_QUADRATIC = "BetweenGeometricAndQuadratic"
    GEOMETRIC_CIRCLE = "GeometricCircle"
    BETWEEN_HARMONIC_AND_GEOMETRIC = "BetweenHarmonicAndGeometric"
    HARMONIC_LEMNISCATE = "HarmonicLemniscate"
    BELOW_HARMONIC = "BelowHarmonic"


@dataclass(frozen=True)
class CurveSample:
    """One locus point in polar and Cartesian form."""

    theta: float
    r: float
    point: HPoint


@dataclass(frozen=True)
class HorizontalLine:
    """Euclidean locus {y = height} (the b = (a + c)/2 case)."""

    height: float


@dataclass(frozen=True)
class AxisCircle:
    """Euclidean locus circle centered at (0, center_y)."""

    center_y: float
    radius: float

    def __post_init__(self):
        if not self.radius > 0:
            raise GeometryError(f"circle radius must be positive, got {self.radius!r}")


EuclideanLocus = Union[HorizontalLine, AxisCircle]


def coefficients(cfg: TripleConfig) -> QuarticCoeffs:
    """Quartic coefficients, in the documented evaluation order.

    alpha = 2*b2 - a2 - c2, beta = a2*c2 - b2*b2,
    gamma = b2*(2*a2*c2 - a2*b2 - c2*b2), where x2 = x*x. The same
    ordering is used everywhere so recomputation is bit-identical.
    """
    a2, b2, c2 = cfg.a * cfg.a, cfg.b * cfg.b, cfg.c * cfg.c
    alpha = 2.0 * b2 - a2 - c2
    beta = a2 * c2 - b2 * b2
    gamma = b2 * (2.0 * a2 * c2 - a2 * b2 - c2 * b2)
    return QuarticCoeffs(alpha, beta, gamma)


def eval_quartic(cfg: TripleConfig, r: float, theta: float) -> float:
    """Residual r^4 alpha - 2 r^2 beta cos(2 theta) - gamma; zero on the locus."""
    q = coefficients(cfg)
    s = r * r
    return s * s * q.alpha - 2.0 * s * q.beta * math.cos(2.0 * theta) - q.gamma


def classify(cfg: TripleConfig, eps: float = 1e-12, exact: bool | None = None) -> LocusClass:
    """Locus regime of the triple.

    Compares b^2 against Q^2 = (a^2 + c^2)/2, G^2 = ac and
    H^2 = 2 a^2 c^2 / (a^2 + c^2) with relative tolerance eps; a boundary
    class wins only when |b^2 - M^2| <= eps * M^2, checked from the
    quadratic mean downward.

    With exact=True (or exact=None and all heights integral) the boundary
    tests use exact integer comparisons, so integer triples like
    (35, 25, 5) classify exactly regardless of eps.
    """
    if eps < 0:
        raise GeometryError(f"eps must be nonnegative, got {eps!r}")
    if exact is None:
        exact = all(float(v).is_integer() for v in (cfg.a, cfg.b, cfg.c))
    if exact:
        return _classify_exact(int(cfg.a), int(cfg.b), int(cfg.c))

    a2, b2, c2 = cfg.a * cfg.a, cfg.b * cfg.b, cfg.c * cfg.c
    q2 = 0.5 * (a2 + c2)
    g2 = cfg.a * cfg.c
    h2 = 2.0 * a2 * c2 / (a2 + c2)
    if abs(b2 - q2) <= eps * q2:
        return LocusClass.QUADRATIC_HYPERBOLA
    if abs(b2 - g2) <= eps * g2:
        return LocusClass.GEOMETRIC_CIRCLE
    if abs(b2 - h2) <= eps * h2:
        return LocusClass.HARMONIC_LEMNISCATE
    if b2 > q2:
        return LocusClass.ABOVE_QUADRATIC
    if b2 > g2:
        return LocusClass.BETWEEN_GEOMETRIC_AND_QUADRATIC
    if b2 > h2:
        return LocusClass.BETWEEN_HARMONIC_AND_GEOMETRIC
    return LocusClass.BELOW_HARMONIC


def _classify_exact(a: int, b: int, c: int) -> LocusClass:
    a2, b2, c2 = a * a, b * b, c * c
    if 2 * b2 == a2 + c2:
        return LocusClass.QUADRATIC_HYPERBOLA
    if b2 == a * c:
        return LocusClass.GEOMETRIC_CIRCLE
    if b2 * (a2 + c2) == 2 * a2 * c2:
        return LocusClass.HARMONIC_LEMNISCATE
    if 2 * b2 > a2 + c2:
        return LocusClass.ABOVE_QUADRATIC
    if b2 > a * c:
        return LocusClass.BETWEEN_GEOMETRIC_AND_QUADRATIC
    if b2 * (a2 + c2) > 2 * a2 * c2:
        return LocusClass.BETWEEN_HARMONIC_AND_GEOMETRIC
    return LocusClass.BELOW_HARMONIC


def _alpha_is_degenerate(cfg: TripleConfig, alpha: float) -> bool:
    return abs(alpha) <= ALPHA_EPS * (cfg.a * cfg.a + cfg.c * cfg.c)


def solve_r2(cfg: TripleConfig, theta: float) -> list[float]:
    """Positive roots s = r^2 of the quartic at the given angle, ascending.

    Solves alpha s^2 - 2 beta cos(2 theta) s - gamma = 0 with the
    sign-stable quadratic form (larger root via the -sign trick, the
    other via the Vieta product), falling back to the linear equation
    when alpha degenerates. Roots at the origin node are dropped.
    """
    if not (0.0 < theta < math.pi):
        raise GeometryError(f"theta must lie in (0, pi), got {theta!r}")
    roots, _ = _solve_arrays(cfg, np.array([theta]))
    return [float(s) for s in roots[0] if not np.isnan(s)]


def _solve_arrays(cfg: TripleConfig, thetas: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized solve_r2 over a theta grid.

    Returns an (n, 2) array of roots ascending along axis 1, NaN where a
    root does not exist, plus the cos(2 theta) array (reused by callers).
    Matches the scalar path bit for bit: same formulas, same order.
    """
    q = coefficients(cfg)
    cos2t = np.cos(2.0 * thetas)
    n = thetas.shape[0]
    roots = np.full((n, 2), np.nan)
    if _alpha_is_degenerate(cfg, q.alpha):
        denom = -2.0 * q.beta * cos2t
        with np.errstate(divide="ignore", invalid="ignore"):
            s = np.where(denom != 0.0, q.gamma / denom, np.nan)
        roots[:, 0] = np.where(s > ORIGIN_EPS, s, np.nan)
        return roots, cos2t
    A = q.alpha
    B = -2.0 * q.beta * cos2t
    C = -q.gamma
    disc = B * B - 4.0 * A * C
    ok = disc >= 0.0
    sq = np.sqrt(np.where(ok, disc, 0.0))
    qq = np.where(B != 0.0, -0.5 * (B + np.copysign(sq, B)), -0.5 * sq)
    with np.errstate(divide="ignore", invalid="ignore"):
        r1 = np.where(ok & (qq != 0.0), qq / A, np.nan)
        r2 = np.where(ok & (qq != 0.0), C / qq, np.nan)
    r1 = np.where(r1 > ORIGIN_EPS, r1, np.nan)
    r2 = np.where(r2 > ORIGIN_EPS, r2, np.nan)
    # fmin/fmax ignore NaN, so a lone root lands in column 0; an exact
    # double root is reported once
    lo = np.fmin(r1, r2)
    hi = np.fmax(r1, r2)
    roots[:, 0] = lo
    roots[:, 1] = np.where(hi == lo, np.nan, hi)
    return roots, cos2t


def theta_grid(n: int) -> np.ndarray:
    """Uniform n-point angle grid on (0, pi) with a pi/(4n) endpoint margin."""
    if n < 2:
        raise GeometryError(f"need n >= 2 grid points, got {n!r}")
    margin = math.pi / (4 * n)
    return np.linspace(margin, math.pi - margin, n)


def sample_curve(cfg: TripleConfig, n: int) -> list[CurveSample]:
    """Locus points from an n-angle sweep, sorted by (theta, r).

    Angles where the curve does not exist contribute nothing, so the
    result discovers the theta-domain empirically; it may be empty only
    in degenerate limits (the seven regimes all have nonempty loci).
    """
    thetas = theta_grid(n)
    roots, _ = _solve_arrays(cfg, thetas)
    samples: list[CurveSample] = []
    for i, theta in enumerate(thetas):
        for k in range(2):
            s = roots[i, k]
            if not np.isnan(s):
                r = math.sqrt(s)
                point = HPoint(r * math.cos(theta), r * math.sin(theta))
                samples.append(CurveSample(float(theta), r, point))
    return samples


def euclidean_locus(a: float, b: float, c: float) -> EuclideanLocus:
    """Euclidean equal-angle locus of axis heights a > b > c.

    Heights may be nonpositive here (the flat-plane statement needs only
    the ordering), which the four-point intersection relies on.
    """
    _check_descending(a, b, c)
    scale = max(1.0, abs(a), abs(c))
    if abs(b - 0.5 * (a + c)) <= 1e-12 * scale:
        return HorizontalLine(height=0.5 * (a + c))
    y_d = (2.0 * a * c - b * c - a * b) / (a + c - 2.0 * b)
    return AxisCircle(center_y=0.5 * (b + y_d), radius=0.5 * abs(b - y_d))


def _check_descending(a: float, b: float, c: float) -> None:
    if not (a > b > c):
        raise OrderingError(f"heights must satisfy a > b > c, got ({a}, {b}, {c})")


def euclidean_equal_angle_residual(p: tuple[float, float], a: float, b: float, c: float) -> float:
    """Euclidean angle(a p b) - angle(b p c) at a point off the y-axis."""
    _check_descending(a, b, c)
    x, y = p
    if x == 0.0:
        raise OnAxisError("the Euclidean locus predicate excludes the y-axis")
    return _euclid_angle(x, y, a, b) - _euclid_angle(x, y, b, c)


def _euclid_angle(x: float, y: float, h1: float, h2: float) -> float:
    v1 = (-x, h1 - y)
    v2 = (-x, h2 - y)
    cross = v1[0] * v2[1] - v1[1] * v2[0]
    dot = v1[0] * v2[0] + v1[1] * v2[1]
    return math.atan2(abs(cross), dot)


def samples_to_csv(samples: list[CurveSample]) -> str:
    """CSV serialization with header theta,r,x,y at 17 significant digits."""
    lines = ["theta,r,x,y"]
    for s in samples:
        lines.append(
            f"{fmt17(s.theta)},{fmt17(s.r)},{fmt17(s.point.x)},{fmt17(s.point.y)}"
        )
    return "\n".join(lines) + "\n"


def classification_report(cfg: TripleConfig, eps: float = 1e-12) -> dict:
    """JSON-ready classification record for the triple."""
    q = coefficients(cfg)
    return {
        "a": cfg.a,
        "b": cfg.b,
        "c": cfg.c,
        "alpha": q.alpha,
        "beta": q.beta,
        "gamma": q.gamma,
        "class": classify(cfg, eps).value,
    }
