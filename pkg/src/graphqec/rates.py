"""Rate regions, capacity lower bounds, error exponents, and figure data.

All rates are in bits (base-2 logarithms).  The error exponent is the
one place natural logs appear; curve samples therefore carry the value
in nats per channel use alongside the bits-per-use conversion.  The
random-coding existence bound's unqualified "log" is read as log2, the
same base as the binary entropy it is paired with.

Two singleton-type checks ship side by side: the weaker form
1 - mu >= d*eps with a dimension-weighted error term, and the textbook
quantum singleton bound 1 - mu >= 4*eps for comparison.
"""

from __future__ import annotations

import io
import math
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .errors import (
    CompositeModulus,
    DeltaTooLarge,
    ParamOutOfRange,
    UnsupportedDimension,
)
from .modular import is_prime
from .noise import binary_entropy

__all__ = [
    "RatePoint",
    "ideal_capacity",
    "achievable_pair",
    "hamming_allows",
    "singleton_allows",
    "singleton_standard_allows",
    "gv_allows",
    "capacity_lower_bound_small_noise",
    "capacity_from_finite_coding",
    "error_exponent_curve",
    "region_boundaries",
    "bisect_increasing",
    "emit_curves",
]

LOG2_3 = math.log2(3.0)


@dataclass(frozen=True)
class RatePoint:
    """One sample of a rate/exponent curve (unused fields stay None)."""

    mu: Optional[float] = None
    eps: Optional[float] = None
    c: Optional[float] = None
    lambda_nats: Optional[float] = None
    lambda_bits: Optional[float] = None
    d: Optional[int] = None
    p: Optional[int] = None
    k: Optional[int] = None
    delta: Optional[float] = None
    vacuous: bool = False


def _check_rates(d: int, mu: float, eps: float) -> None:
    if d < 2:
        raise ParamOutOfRange(f"site dimension must be >= 2, got {d}")
    if not 0.0 <= mu <= 1.0 or not 0.0 <= eps <= 1.0:
        raise ParamOutOfRange(f"rates must lie in [0, 1], got mu={mu}, eps={eps}")


def ideal_capacity(d: int) -> float:
    """Quantum capacity of the noiseless channel on a d-level system."""
    if d < 2:
        raise ParamOutOfRange(f"site dimension must be >= 2, got {d}")
    return math.log2(d)


def achievable_pair(d: int, mu: float, eps: float) -> bool:
    """Random-graph coding region: (1 - mu - 4 eps) log2 d > H2(2 eps)."""
    _check_rates(d, mu, eps)
    if eps > 0.5:
        return False  # left side is negative while the entropy is >= 0
    return (1.0 - mu - 4.0 * eps) * math.log2(d) > binary_entropy(2.0 * eps)


def hamming_allows(d: int, mu: float, eps: float) -> bool:
    """mu log2 d + H2(eps) + eps log2(d^2 - 1) <= log2 d."""
    _check_rates(d, mu, eps)
    lhs = mu * math.log2(d) + binary_entropy(eps) + eps * math.log2(d**2 - 1)
    return lhs <= math.log2(d)


def singleton_allows(d: int, mu: float, eps: float) -> bool:
    """Weaker singleton form with a dimension-weighted error term: 1 - mu >= d eps."""
    _check_rates(d, mu, eps)
    return 1.0 - mu >= d * eps


def singleton_standard_allows(mu: float, eps: float) -> bool:
    """Textbook quantum singleton bound n - m >= 4f, i.e. 1 - mu >= 4 eps."""
    if not 0.0 <= mu <= 1.0 or not 0.0 <= eps <= 1.0:
        raise ParamOutOfRange(f"rates must lie in [0, 1], got mu={mu}, eps={eps}")
    return 1.0 - mu >= 4.0 * eps


def gv_allows(mu: float, eps: float, d: int = 2) -> bool:
    """Qubit Gilbert-Varshamov region: 1 - mu - 2 eps log2 3 > H2(2 eps)."""
    if d != 2:
        raise UnsupportedDimension("the GV bound is stated for qubits only")
    _check_rates(d, mu, eps)
    if eps > 0.5:
        return False
    return 1.0 - mu - 2.0 * eps * LOG2_3 > binary_entropy(2.0 * eps)


def capacity_lower_bound_small_noise(d: int, eps: float) -> tuple[float, float]:
    """(threshold, q_lower): channels with cb-distance from the identity
    below the threshold have capacity at least q_lower.

    threshold = 2^{-H2(eps)/eps}; q_lower = (1 - 4 eps) log2 d - H2(2 eps).
    q_lower can be non-positive for large eps; it is returned as-is.
    """
    if not is_prime(d):
        raise CompositeModulus(f"the random-coding bound needs prime d, got {d}")
    if not 0.0 < eps < 0.5:
        raise ParamOutOfRange(f"need 0 < eps < 1/2, got {eps}")
    threshold = 2.0 ** (-binary_entropy(eps) / eps)
    q_lower = (1.0 - 4.0 * eps) * math.log2(d) - binary_entropy(2.0 * eps)
    return threshold, q_lower


def capacity_from_finite_coding(p: int, k: int, delta: float) -> float:
    """Certified capacity lower bound from one concrete coding scheme.

    Given channels E, D coding a p-level system through k parallel uses
    with residual error delta < 1/(2e), the capacity is at least
    (log2 p / k)(1 - 4 e delta) - H2(2 e delta) / k.
    """
    if not is_prime(p):
        raise CompositeModulus(f"code dimension must be prime, got {p}")
    if k < 1:
        raise ParamOutOfRange(f"block length must be >= 1, got {k}")
    if delta < 0 or delta >= 1.0 / (2.0 * math.e):
        raise DeltaTooLarge(f"need delta < 1/(2e) ~ {1/(2*math.e):.6f}, got {delta}")
    scaled = math.e * delta
    return (math.log2(p) / k) * (1.0 - 4.0 * scaled) - binary_entropy(2.0 * scaled) / k


def error_exponent_curve(
    p: int, k: int, delta: float, eps_grid: Sequence[float]
) -> list[RatePoint]:
    """Parametric lower-bound curve (c, lambda) for the error exponent.

    For each error rate eps in [e delta, 1/2]:
        c      = (log2 p / k) (1 - 4 eps - H2(2 eps) / log2 p)
        lambda = -(eps / k) (ln delta + ln 2 * H2(eps) / eps)   [nats]
    Samples with non-positive lambda are emitted flagged vacuous.
    """
    if not is_prime(p):
        raise CompositeModulus(f"code dimension must be prime, got {p}")
    if k < 1:
        raise ParamOutOfRange(f"block length must be >= 1, got {k}")
    if delta <= 0:
        raise ParamOutOfRange(f"coding error must be positive, got {delta}")
    log2p = math.log2(p)
    points = []
    for eps in eps_grid:
        if not math.e * delta <= eps <= 0.5:
            raise ParamOutOfRange(
                f"grid point eps={eps} outside [e*delta, 1/2] = "
                f"[{math.e * delta}, 0.5]"
            )
        c = (log2p / k) * (1.0 - 4.0 * eps - binary_entropy(2.0 * eps) / log2p)
        lam = -(eps / k) * (math.log(delta) + math.log(2.0) * binary_entropy(eps) / eps)
        points.append(
            RatePoint(
                eps=eps,
                c=c,
                lambda_nats=lam,
                lambda_bits=lam / math.log(2.0),
                p=p,
                k=k,
                delta=delta,
                vacuous=lam <= 0.0,
            )
        )
    return points


def region_boundaries(
    d: int, eps: float
) -> tuple[Optional[float], Optional[float], Optional[float]]:
    """Boundary coding rates (mu_singleton, mu_hamming, mu_random_graph)
    at a given error rate; None where the boundary leaves [0, 1]."""
    if not 0.0 <= eps <= 1.0:
        raise ParamOutOfRange(f"need eps in [0, 1], got {eps}")
    log2d = math.log2(d)
    singleton = 1.0 - d * eps
    hamming = 1.0 - (binary_entropy(eps) + eps * math.log2(d**2 - 1)) / log2d
    if eps <= 0.5:
        random_graph = 1.0 - 4.0 * eps - binary_entropy(2.0 * eps) / log2d
    else:
        random_graph = None

    def clip(x):
        return x if x is not None and 0.0 <= x <= 1.0 else None

    return clip(singleton), clip(hamming), clip(random_graph)


def bisect_increasing(func, lo: float, hi: float, tol: float = 1e-9) -> float:
    """Root of an increasing function on [lo, hi] by plain bisection."""
    flo, fhi = func(lo), func(hi)
    if flo > 0 or fhi < 0:
        raise ValueError("function must change sign from - to + on [lo, hi]")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if func(mid) < 0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


# ---------------------------------------------------------------------------
# CSV emission (12 significant digits, '.' decimal separator, '\n' endings)


def _fmt(x: Optional[float]) -> str:
    return "" if x is None else f"{x:.12g}"


def _default_threshold_grid() -> list[float]:
    return [k / 1000.0 for k in range(1, 501)]


def _default_region_grid() -> list[float]:
    return [k * 0.005 for k in range(0, 101)]


def _default_exponent_grid(delta: float, points: int = 200) -> list[float]:
    lo = math.e * delta
    step = (0.5 - lo) / (points - 1)
    return [lo + j * step for j in range(points)]


def emit_curves(
    kind: str,
    *,
    d: int = 2,
    p: int = 2,
    k: int = 1,
    deltas: Sequence[float] = (1e-3, 1e-4, 1e-5, 1e-6),
    grid: Optional[Iterable[float]] = None,
) -> str:
    """Deterministic CSV data for the three bound figures.

    kind is one of "threshold-fig" (columns eps,strict_threshold,
    simple_bound), "rate-region-fig" (eps,mu_singleton,mu_hamming,
    mu_random_graph with empty cells where undefined) or "exponent-fig"
    (long format c,lambda_nats,lambda_bits,delta, one block per delta).
    """
    from .noise import error_threshold

    out = io.StringIO()
    if kind == "threshold-fig":
        eps_grid = list(grid) if grid is not None else _default_threshold_grid()
        out.write("eps,strict_threshold,simple_bound\n")
        for eps in eps_grid:
            strict, simple = error_threshold(eps)
            out.write(f"{_fmt(eps)},{_fmt(strict)},{_fmt(simple)}\n")
    elif kind == "rate-region-fig":
        eps_grid = list(grid) if grid is not None else _default_region_grid()
        out.write("eps,mu_singleton,mu_hamming,mu_random_graph\n")
        for eps in eps_grid:
            s, h, r = region_boundaries(d, eps)
            out.write(f"{_fmt(eps)},{_fmt(s)},{_fmt(h)},{_fmt(r)}\n")
    elif kind == "exponent-fig":
        out.write("c,lambda_nats,lambda_bits,delta\n")
        for delta in deltas:
            eps_grid = list(grid) if grid is not None else _default_exponent_grid(delta)
            for point in error_exponent_curve(p, k, delta, eps_grid):
                out.write(
                    f"{_fmt(point.c)},{_fmt(point.lambda_nats)},"
                    f"{_fmt(point.lambda_bits)},{_fmt(point.delta)}\n"
                )
    else:
        raise ParamOutOfRange(f"unknown figure kind {kind!r}")
    return out.getvalue()
