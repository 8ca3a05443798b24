"""Bezier-Bezout segments and verification of the approximation bound.

For a center (p, q) and tolerance epsilon, every coprime pair (r, s)
within distance epsilon - 1 contributes the segment joining the Bezout
coefficients of (r, s) and (s, r).  At its contact parameter that
segment passes within epsilon of the quadratic Bezier curve for
(p, q), (0, 0), (q, p); this module measures the actual deviations and
aggregates them into a report.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from ._backend import kernels
from .errors import HypothesisError
from .geometry import Point2, Segment
from .numtheory import BezoutCoeffs, Center, CoprimePair

THREADS_ENV_VAR = "BEZOUT_BEZIER_THREADS"
_DEFAULT_WORKERS = 4


@dataclass(frozen=True, slots=True)
class EnvelopeParams:
    """A center and tolerance satisfying the approximation hypotheses.

    Requires p > 3, 0 <= q < p and 1 < epsilon <= ||(p, q)|| / 2.
    """

    center: Center
    epsilon: float

    def __post_init__(self):
        p, q = self.center.p, self.center.q
        if p <= 3:
            raise HypothesisError(f"requires p > 3 (got p = {p})")
        if q >= p:
            raise HypothesisError(f"requires 0 <= q < p (got p = {p} and q = {q})")
        eps = self.epsilon
        if not isinstance(eps, (int, float)) or not math.isfinite(eps):
            raise HypothesisError(f"requires a finite epsilon (got {eps!r})")
        if eps <= 1:
            raise HypothesisError(f"requires epsilon > 1 (got epsilon = {eps})")
        half_norm = 0.5 * math.hypot(p, q)
        if eps > half_norm:
            raise HypothesisError(
                f"requires epsilon <= ||(p,q)||/2 = {half_norm} "
                f"(got epsilon = {eps})"
            )

    @property
    def radius(self) -> float:
        """Enumeration radius for the deviation bound: epsilon - 1."""
        return self.epsilon - 1.0


@dataclass(frozen=True, slots=True)
class EnvelopeRecord:
    """One coprime neighbor with its segment and measured deviations."""

    pair: CoprimePair
    coeffs: BezoutCoeffs  # B(r, s): segment start
    flipped: BezoutCoeffs  # B(s, r): segment end
    segment: Segment
    t_contact: float
    gap_alpha: float
    gap_beta: float
    deviation: float
    bound_ok: bool
    degenerate: bool  # only (1, 1): the segment collapses to a point


@dataclass(frozen=True, slots=True)
class VerificationReport:
    """Aggregate outcome of one (center, epsilon) run."""

    params: EnvelopeParams
    records: list[EnvelopeRecord]
    neighbor_count: int
    all_bounds_hold: bool
    max_deviation: float
    max_endpoint_gap: float


@dataclass(frozen=True, slots=True)
class SweepResult:
    """One (center, epsilon) combination: a report, or why it was skipped."""

    center: Center
    epsilon: float
    report: VerificationReport | None
    skip_reason: str | None


def bezout_segment(pair: CoprimePair) -> Segment:
    """The segment from B(r, s) to B(s, r), as real points."""
    a, b = kernels.bezout_normalized(pair.r, pair.s)
    return Segment(
        Point2(float(a), float(b)),
        Point2(float(pair.s - b), float(pair.r - a)),
    )


def contact_parameter(pair: CoprimePair) -> float:
    """Parameter at which the pair's segment meets the chord family.

    t = 1 - (a*r + b*s) / (r^2 + s^2) for (a, b) = B(r, s); always
    strictly inside (0, 1).  Note the complement: the projection of
    B(r, s) onto the (r, s) ray sits at 1 - t, not t.
    """
    a, b = kernels.bezout_normalized(pair.r, pair.s)
    r, s = pair.r, pair.s
    return 1.0 - float(a * r + b * s) / float(r * r + s * s)


def endpoint_gaps(pair: CoprimePair, params: EnvelopeParams) -> tuple[float, float]:
    """Distances from the segment endpoints to the chord endpoints.

    gap_alpha = ||B(r,s) - alpha(t0)|| and gap_beta = ||B(s,r) - beta(t0)||
    at t0 = contact_parameter(pair).  Requires the pair to lie within
    distance epsilon of the center; both gaps are then below epsilon + 1.
    """
    p, q = params.center.p, params.center.q
    r, s = pair.r, pair.s
    dr = r - p
    ds = s - q
    if float(dr * dr + ds * ds) > params.epsilon * params.epsilon:
        raise HypothesisError(
            f"requires ||(r,s)-(p,q)|| <= epsilon (pair ({r}, {s}) lies "
            f"{math.hypot(dr, ds)} from ({p}, {q}) with epsilon = "
            f"{params.epsilon})"
        )
    a, b = kernels.bezout_normalized(r, s)
    t = 1.0 - float(a * r + b * s) / float(r * r + s * s)
    u = 1.0 - t
    gax = a - u * p
    gay = b - u * q
    gbx = (s - b) - t * q
    gby = (r - a) - t * p
    return math.sqrt(gax * gax + gay * gay), math.sqrt(gbx * gbx + gby * gby)


def build_envelope(params: EnvelopeParams) -> VerificationReport:
    """Measure every coprime neighbor within radius epsilon - 1.

    Records are sorted lexicographically by (r, s); an empty
    enumeration yields a vacuously passing report.
    """
    p, q = params.center.p, params.center.q
    eps = params.epsilon
    rows = kernels.envelope_scan(p, q, eps - 1.0)
    records = []
    max_dev = 0.0
    max_gap = 0.0
    all_ok = True
    for r, s, a, b, af, bf, t, gap_a, gap_b, dev in rows:
        pair = CoprimePair(r, s)
        ok = dev < eps
        records.append(
            EnvelopeRecord(
                pair=pair,
                coeffs=BezoutCoeffs(a, b, pair),
                flipped=BezoutCoeffs(af, bf, CoprimePair(s, r)),
                segment=Segment(
                    Point2(float(a), float(b)), Point2(float(af), float(bf))
                ),
                t_contact=t,
                gap_alpha=gap_a,
                gap_beta=gap_b,
                deviation=dev,
                bound_ok=ok,
                degenerate=r == s,
            )
        )
        if dev > max_dev:
            max_dev = dev
        if gap_a > max_gap:
            max_gap = gap_a
        if gap_b > max_gap:
            max_gap = gap_b
        all_ok = all_ok and ok
    return VerificationReport(
        params=params,
        records=records,
        neighbor_count=len(records),
        all_bounds_hold=all_ok,
        max_deviation=max_dev,
        max_endpoint_gap=max_gap,
    )


def sweep_one(center: Center, epsilon: float) -> SweepResult:
    """Run one combination, capturing hypothesis violations as skips."""
    try:
        params = EnvelopeParams(center, epsilon)
    except HypothesisError as exc:
        return SweepResult(center, epsilon, None, str(exc))
    return SweepResult(center, epsilon, build_envelope(params), None)


def audit_sweep(
    centers: list[Center], epsilons: list[float]
) -> list[SweepResult]:
    """Run every (center, epsilon) combination.

    Invalid combinations come back as skips naming the violated
    hypothesis.  Results are ordered by the input lists (centers
    outermost) regardless of how many worker threads execute them.
    """
    combos = [(center, eps) for center in centers for eps in epsilons]
    workers = _worker_count(len(combos))
    if workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda combo: sweep_one(*combo), combos))
    return [sweep_one(center, eps) for center, eps in combos]


def _worker_count(n_jobs: int) -> int:
    """Worker threads for a sweep; BEZOUT_BEZIER_THREADS caps the default."""
    limit = min(_DEFAULT_WORKERS, os.cpu_count() or 1)
    cap_text = os.environ.get(THREADS_ENV_VAR)
    if cap_text:
        try:
            limit = min(limit, max(1, int(cap_text)))
        except ValueError:
            pass  # unparseable cap: keep the default
    return max(1, min(limit, n_jobs))
