"""Probability that three random adjacent segments admit an equal-angle witness.

Euclidean setting: fix the outer points at heights 1 and 0 and drop two
independent uniform points between them; call the larger b and the
smaller c. A witness exists iff the cross-ratio is below 3, i.e.

    (b - c) / (c (1 - b)) < 3
    b - c < 3c - 3bc
    b (1 + 3c) < 4c,

so the success region is b < 4c/(1 + 3c), and since the ordered pair
(b, c) has density 2 on the triangle 0 < c < b < 1 and c < 4c/(1+3c) < 1
throughout,

    P = 2 * integral_0^1 (4c/(1 + 3c) - c) dc = (15 - 16 ln 2) / 9.

Hyperbolic setting: the natural invariant measure on a vertical line is
dy/y, so drop two points log-uniformly between heights 1 and R. The
value depends on the endpoint ratio R (it is NOT invariant under the
choice of R, only under joint scaling), so R is an explicit parameter
everywhere. Writing S = R^2, L = ln R and C = c^2 = e^(2Lv), the squared
existence condition (squared-heights cross-ratio below 3) solves in
closed form for the upper point: success iff b^2 < B*(C) with

    B*(C) = ((4S - 1) C - 3S) / (S + 3C - 4),

and C < B*(C) < S always holds, giving the smooth one-dimensional
reduction

    P(R) = 2 * integral_0^1 (ln B*(e^(2Lv)) / (2L) - v) dv.

P(R) decreases from the Euclidean value (15 - 16 ln 2)/9 as R -> 1+ to 0
as R -> infinity, so any target below the Euclidean value is reproduced
by exactly one ratio; calibrate_ratio finds it.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from scipy.integrate import quad
from scipy.optimize import brentq

from .fourpoint import FourConfig, Geometry
from .halfplane import GeometryError
from .rng import SampleStream, uniform_block

__all__ = [
    "ProbEstimate",
    "HyperProbSetup",
    "pe_closed_form",
    "ph_reference_constant",
    "sample_config_euclid",
    "sample_config_hyper",
    "estimate_pe",
    "estimate_ph",
    "euclid_indicator_stream",
    "hyper_indicator_stream",
    "pe_quadrature",
    "ph_quadrature",
    "calibrate_ratio",
]

_CHUNK = 1 << 19


@dataclass(frozen=True)
class ProbEstimate:
    """Monte Carlo success fraction with its binomial standard error."""

    mean: float
    stderr: float
    n: int
    seed: int


@dataclass(frozen=True)
class HyperProbSetup:
    """Endpoint ratio a/d of the hyperbolic sampling interval."""

    ratio: float

    def __post_init__(self):
        if not (math.isfinite(self.ratio) and self.ratio > 1.0):
            raise GeometryError(f"ratio must be finite and > 1, got {self.ratio!r}")


def pe_closed_form() -> float:
    """(15 - 16 ln 2) / 9, about 0.434405."""
    return (15.0 - 16.0 * math.log(2.0)) / 9.0


def ph_reference_constant() -> float:
    """(2 sqrt5 ln(2 + sqrt5) - 5) / (5 ln 2), about 0.42015149316.

    Reported without the endpoint ratio it presumes; see calibrate_ratio
    for the ratio that reproduces it under the log-uniform model.
    """
    s5 = math.sqrt(5.0)
    return (2.0 * s5 * math.log(2.0 + s5) - 5.0) / (5.0 * math.log(2.0))


def _draw_ordered_pair(stream: SampleStream) -> tuple[float, float]:
    # ties and zero draws are measure-zero boundary hits; redraw keeps the
    # ordered-pair density exactly 2 on the open triangle
    while True:
        u = stream.next_float()
        v = stream.next_float()
        if u != v and u != 0.0 and v != 0.0:
            return (u, v) if u > v else (v, u)


def sample_config_euclid(stream: SampleStream) -> FourConfig:
    """Random config on the unit segment: a=1, d=0, b > c uniform order stats.

    "The point closer to the top is called b" is interpreted as plain
    order statistics of two i.i.d. draws, nothing more: the pair is
    unordered until sorted, so the ordered density is exactly 2 on the
    open triangle.
    """
    b, c = _draw_ordered_pair(stream)
    return FourConfig(1.0, b, c, 0.0, Geometry.EUCLIDEAN)


def sample_config_hyper(stream: SampleStream, setup: HyperProbSetup) -> FourConfig:
    """Random config with d=1, a=ratio and two log-uniform interior heights."""
    length = math.log(setup.ratio)
    while True:
        u = stream.next_float()
        v = stream.next_float()
        if u == v or u == 0.0 or v == 0.0:
            continue
        hi, lo = (u, v) if u > v else (v, u)
        b = math.exp(hi * length)
        c = math.exp(lo * length)
        # exp can collapse distinct draws onto each other or an endpoint
        if b != c and c != 1.0 and b != setup.ratio:
            return FourConfig(setup.ratio, b, c, 1.0, Geometry.HYPERBOLIC)


def estimate_pe(n: int, seed: int, threads: int = 1) -> ProbEstimate:
    """Fraction of Euclidean configs admitting a witness.

    Bit-identical for fixed (n, seed) regardless of threads: each
    sample's variates are keyed by its index alone.
    """
    successes = _count_sharded(_euclid_success_count, n, seed, threads, ())
    return _estimate(successes, n, seed)


def estimate_ph(n: int, seed: int, setup: HyperProbSetup, threads: int = 1) -> ProbEstimate:
    """Fraction of hyperbolic configs admitting a witness, at the given ratio."""
    successes = _count_sharded(_hyper_success_count, n, seed, threads, (setup.ratio,))
    return _estimate(successes, n, seed)


def _estimate(successes: int, n: int, seed: int) -> ProbEstimate:
    if n < 1:
        raise GeometryError(f"need at least one sample, got n={n!r}")
    mean = successes / n
    return ProbEstimate(mean=mean, stderr=math.sqrt(mean * (1.0 - mean) / n), n=n, seed=seed)


def _count_sharded(block_fn, n, seed, threads, extra) -> int:
    if n < 1:
        raise GeometryError(f"need at least one sample, got n={n!r}")
    if threads <= 1:
        return sum(block_fn(seed, lo, min(lo + _CHUNK, n), *extra) for lo in range(0, n, _CHUNK))
    bounds = np.linspace(0, n, threads + 1, dtype=int)

    def shard(k):
        return sum(
            block_fn(seed, lo, min(lo + _CHUNK, bounds[k + 1]), *extra)
            for lo in range(bounds[k], bounds[k + 1], _CHUNK)
        )

    with ThreadPoolExecutor(max_workers=threads) as pool:
        return sum(pool.map(shard, range(threads)))


def _ordered_uniforms(seed: int, lo: int, hi: int):
    u = uniform_block(seed, lo, hi, 0)
    v = uniform_block(seed, lo, hi, 1)
    bad = (u == v) | (u == 0.0) | (v == 0.0)
    for i in np.nonzero(bad)[0]:
        stream = SampleStream(seed, lo + int(i))
        stream.next_float()
        stream.next_float()
        while True:
            a = stream.next_float()
            b = stream.next_float()
            if a != b and a != 0.0 and b != 0.0:
                u[i], v[i] = a, b
                break
    return np.maximum(u, v), np.minimum(u, v)


def _euclid_indicators(seed: int, lo: int, hi: int, offset: float) -> np.ndarray:
    b, c = _ordered_uniforms(seed, lo, hi)
    a = 1.0 + offset
    d = 0.0 + offset
    if offset != 0.0:
        b = b + offset
        c = c + offset
    # mirror cross_ratio_euclid's float expression exactly
    cr = ((b - c) / (a - b)) / ((c - d) / (a - d))
    return cr < 3.0


def _euclid_success_count(seed, lo, hi, offset=0.0) -> int:
    return int(np.count_nonzero(_euclid_indicators(seed, lo, hi, offset)))


def _hyper_indicators(seed: int, lo: int, hi: int, ratio: float, scale: float) -> np.ndarray:
    length = math.log(ratio)
    hi_u, lo_u = _ordered_uniforms(seed, lo, hi)
    b = np.exp(hi_u * length)
    c = np.exp(lo_u * length)
    collapsed = (b == c) | (c == 1.0) | (b == ratio)
    for i in np.nonzero(collapsed)[0]:
        cfg = sample_config_hyper(SampleStream(seed, lo + int(i)), HyperProbSetup(ratio))
        b[i], c[i] = cfg.b, cfg.c
    a = ratio * scale
    d = 1.0 * scale
    if scale != 1.0:
        b = b * scale
        c = c * scale
    a2, b2, c2, d2 = a * a, b * b, c * c, d * d
    cr = ((b2 - c2) / (a2 - b2)) / ((c2 - d2) / (a2 - d2))
    return cr < 3.0


def _hyper_success_count(seed, lo, hi, ratio, scale=1.0) -> int:
    return int(np.count_nonzero(_hyper_indicators(seed, lo, hi, ratio, scale)))


def euclid_indicator_stream(n: int, seed: int, offset: float = 0.0) -> np.ndarray:
    """Per-sample success booleans; offset translates all four heights.

    The stream with any offset equals the offset-0 stream except for
    float rounding at the existence boundary, which is what the affine
    invariance property asserts.
    """
    return np.concatenate(
        [_euclid_indicators(seed, lo, min(lo + _CHUNK, n), offset) for lo in range(0, n, _CHUNK)]
    )


def hyper_indicator_stream(n: int, seed: int, ratio: float, scale: float = 1.0) -> np.ndarray:
    """Per-sample success booleans; scale multiplies all four heights."""
    HyperProbSetup(ratio)  # validate
    return np.concatenate(
        [
            _hyper_indicators(seed, lo, min(lo + _CHUNK, n), ratio, scale)
            for lo in range(0, n, _CHUNK)
        ]
    )


def pe_quadrature(tol: float) -> float:
    """Euclidean probability by adaptive quadrature of the success band."""
    if tol <= 0:
        raise GeometryError(f"tol must be positive, got {tol!r}")

    def band(c: float) -> float:
        return 2.0 * max(0.0, 4.0 * c / (1.0 + 3.0 * c) - c)

    value, _ = quad(band, 0.0, 1.0, epsabs=0.5 * tol, epsrel=1e-13, limit=200)
    return value


def ph_quadrature(setup: HyperProbSetup, tol: float) -> float:
    """Hyperbolic probability at the given ratio, by the 1-D reduction.

    The success boundary is solved in closed form for the upper point
    (see the module docstring), leaving a smooth integrand that vanishes
    at both endpoints; no indicator discontinuity survives. The band
    width is computed as

        u*(v) - v = log1p(3 (C-1)(S-C) / (C (S + 3C - 4))) / (2L)

    with C - 1 = expm1(2Lv), which stays fully conditioned as the ratio
    approaches 1 (where B* - C underflows against C itself).
    """
    if tol <= 0:
        raise GeometryError(f"tol must be positive, got {tol!r}")
    S = setup.ratio * setup.ratio
    L = math.log(setup.ratio)
    S1 = S - 1.0

    def band(v: float) -> float:
        em = math.expm1(2.0 * L * v)  # C - 1
        C = 1.0 + em
        t = 3.0 * em * (S - C) / (C * (S1 + 3.0 * em))  # (B* - C)/C
        return math.log1p(t) / L  # 2 (u*(v) - v), the -v already folded in

    value, _ = quad(band, 0.0, 1.0, epsabs=0.5 * tol, epsrel=1e-13, limit=200)
    return value


def calibrate_ratio(
    target: float, bracket: tuple[float, float], tol: float = 1e-9
) -> float | None:
    """Endpoint ratio at which ph_quadrature hits the target, or None.

    Returns None when the bracket endpoints do not straddle the target
    (the probability is monotone decreasing in the ratio, so a straddle
    is also necessary for a root to exist inside).
    """
    lo, hi = bracket
    HyperProbSetup(lo)
    HyperProbSetup(hi)
    qtol = min(1e-10, tol / 10.0)

    def f(ratio: float) -> float:
        return ph_quadrature(HyperProbSetup(ratio), qtol) - target

    f_lo, f_hi = f(lo), f(hi)
    if f_lo == 0.0:
        return lo
    if f_hi == 0.0:
        return hi
    if (f_lo > 0.0) == (f_hi > 0.0):
        return None
    root = brentq(f, lo, hi, xtol=1e-12, rtol=8.9e-16)
    return float(root)
