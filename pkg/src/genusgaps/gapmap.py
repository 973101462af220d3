"""Certification of genus gaps and non-gaps on very general surfaces in P^3.

For a very general degree-d surface (d >= 4), every curve is cut out by
another hypersurface, and the degree-n cuts realize exactly the genus
window ``realizable_interval(d, n)`` = [p_a - l, p_a] where p_a is the
arithmetic genus and l the dimension of the cut system: each genus there
is reached by a nodal curve in a reduced family.  The certification
machinery below combines these windows with two proved gap ranges:

* the initial range [0, d(d-3)/2 - 3] (no curve of such genus exists at
  all for d >= 5), tagged ``Xu-initial``;
* the next separated range [(d^2-3d+4)/2, d^2-2d-9] for d >= 6, tagged
  ``MainTheorem-Gaps1``.

Everything above a computable horizon is certified non-gap because
consecutive windows overlap from there on.  Whatever is neither inside a
window nor inside a proved range below the horizon is reported Unknown:
candidate ranges between non-touching windows are *not* asserted to be
gaps (for larger cutting degrees they are known to sometimes contain
non-gaps this tool cannot certify).
"""

from __future__ import annotations

from dataclasses import dataclass

from .formulas import arithmetic_genus, contiguity_holds, linsys_dim
from .intervals import Interval, IntervalSet

PROVED_GAP = "ProvedGap"
CERTIFIED_NONGAP = "CertifiedNonGap"
UNKNOWN = "Unknown"

SOURCE_XU = "Xu-initial"
SOURCE_GAPS1 = "MainTheorem-Gaps1"
SOURCE_LOW_DEGREE = "LowDegree"
SOURCE_SEVERI = "SeveriInterval"


@dataclass(frozen=True)
class Certificate:
    """Witness for a non-gap: a nodal degree-n cut with delta nodes."""

    n: int
    delta: int


@dataclass(frozen=True)
class GapStatus:
    verdict: str
    source: str | None = None
    certificate: Certificate | None = None


@dataclass(frozen=True)
class GapDecomposition:
    """Partition of [0, horizon] into proved gaps, unknowns, and certified non-gaps.

    Every genus above ``horizon`` is a certified non-gap.  ``proved_sources``
    tags each proved part with the theorem layer that proves it.
    """

    d: int
    horizon: int
    proved_gaps: IntervalSet
    unknown_candidates: IntervalSet
    nongap_certified: IntervalSet
    proved_sources: tuple[tuple[Interval, str], ...]


def _check_d(d: int, minimum: int) -> None:
    if d < minimum:
        raise ValueError(f"surface degree must be >= {minimum}, got {d}")


def realizable_interval(d: int, n: int) -> Interval:
    """Genus window certified realizable by degree-n cuts of a degree-d surface."""
    _check_d(d, 4)
    if n < 1:
        raise ValueError(f"cutting degree must be >= 1, got {n}")
    g, l = arithmetic_genus(d, n), linsys_dim(d, n)
    return Interval(g - l, g)


def candidate_gap_interval(d: int, n: int) -> Interval | None:
    """Genus range strictly between the windows at n and n+1, if they do not join."""
    _check_d(d, 4)
    if n < 1:
        raise ValueError(f"cutting degree must be >= 1, got {n}")
    lo = arithmetic_genus(d, n) + 1
    hi = arithmetic_genus(d, n + 1) - linsys_dim(d, n + 1) - 1
    if lo > hi:
        return None
    return Interval(lo, hi)


def initial_gap_interval(d: int) -> Interval | None:
    """Proved gap range [0, d(d-3)/2 - 3]; empty below degree 5."""
    _check_d(d, 4)
    hi = d * (d - 3) // 2 - 3
    if hi < 0:
        return None
    return Interval(0, hi)


def second_gap_interval(d: int) -> Interval:
    """Proved gap range [(d^2-3d+4)/2, d^2-2d-9], valid for d >= 6."""
    _check_d(d, 6)
    return Interval((d * d - 3 * d + 4) // 2, d * d - 2 * d - 9)


def coarse_horizon(d: int) -> int:
    """Horizon d(d-1)(5d-19)/6 - 1 valid for every d >= 5; -1 at d = 4 (no gaps)."""
    _check_d(d, 4)
    if d == 4:
        return -1
    return d * (d - 1) * (5 * d - 19) // 6 - 1


def refined_horizon(d: int) -> int:
    """Tightest window-chaining horizon: gaps can only live in [0, this value].

    Finds the least n* such that consecutive windows join at every n in
    [n*, d] (beyond d they always join), and returns the last genus below
    the window chain that starts at n* - 1.
    """
    _check_d(d, 5)
    n_star = d + 1
    for m in range(d, 0, -1):
        if not contiguity_holds(d, m):
            break
        n_star = m
    n0 = n_star - 1
    return arithmetic_genus(d, n0) - linsys_dim(d, n0) - 1


def _first_n_reaching(d: int, g: int) -> int:
    """Least n >= 1 with arithmetic_genus(d, n) >= g (genus is increasing for d >= 4)."""
    lo, hi = 1, 1
    while arithmetic_genus(d, hi) < g:
        lo, hi = hi + 1, hi * 2
    while lo < hi:
        mid = (lo + hi) // 2
        if arithmetic_genus(d, mid) >= g:
            hi = mid
        else:
            lo = mid + 1
    return lo


def certify_nongap(d: int, g: int) -> Certificate | None:
    """Smallest-n witness with g inside the degree-n window, or None.

    The scan starts at the least n whose window top reaches g and stops
    once n >= d with the window bottom above g: from degree d on the
    bottoms only increase, so no later window can contain g.
    """
    _check_d(d, 4)
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    n = _first_n_reaching(d, g)
    while True:
        lo = arithmetic_genus(d, n) - linsys_dim(d, n)
        if lo <= g:
            return Certificate(n=n, delta=arithmetic_genus(d, n) - g)
        if n >= d and lo > g:
            return None
        n += 1


def status(d: int, g: int) -> GapStatus:
    """Three-valued verdict for genus g on a very general degree-d surface."""
    _check_d(d, 1)
    if g < 0:
        raise ValueError(f"genus must be >= 0, got {g}")
    if d <= 3:
        return GapStatus(CERTIFIED_NONGAP, SOURCE_LOW_DEGREE)
    if d >= 5:
        gaps0 = initial_gap_interval(d)
        if gaps0 is not None and g in gaps0:
            return GapStatus(PROVED_GAP, SOURCE_XU)
        if d >= 6 and g in second_gap_interval(d):
            return GapStatus(PROVED_GAP, SOURCE_GAPS1)
    cert = certify_nongap(d, g)
    if cert is not None:
        return GapStatus(CERTIFIED_NONGAP, SOURCE_SEVERI, cert)
    return GapStatus(UNKNOWN)


def _window_union_within(d: int, horizon: int) -> IntervalSet:
    """Union of all realizable windows clipped to [0, horizon]."""
    bound = Interval(0, horizon)
    parts = []
    n = 1
    while True:
        w = realizable_interval(d, n)
        if n >= d and w.lo > horizon:
            break
        if w.lo <= horizon:
            parts.append(Interval(w.lo, min(w.hi, horizon)))
        n += 1
    return IntervalSet(parts).clip(bound)


def decompose(d: int) -> GapDecomposition:
    """Full certified decomposition of [0, horizon] for degree d."""
    _check_d(d, 4)
    if d == 4:
        # every window starts at genus 0, so there is nothing left to chart
        return GapDecomposition(
            d=4,
            horizon=-1,
            proved_gaps=IntervalSet.empty(),
            unknown_candidates=IntervalSet.empty(),
            nongap_certified=IntervalSet.empty(),
            proved_sources=(),
        )
    horizon = refined_horizon(d)
    bound = Interval(0, horizon)
    sources: list[tuple[Interval, str]] = []
    proved = IntervalSet.empty()
    gaps0 = initial_gap_interval(d)
    if gaps0 is not None:
        proved = proved.union(IntervalSet([gaps0]))
        sources.append((gaps0, SOURCE_XU))
    if d >= 6:
        gaps1 = second_gap_interval(d)
        proved = proved.union(IntervalSet([gaps1]))
        sources.append((gaps1, SOURCE_GAPS1))
    proved = proved.clip(bound)
    certified = _window_union_within(d, horizon)
    if proved.union(certified).count != proved.count + certified.count:
        raise ArithmeticError(f"d={d}: proved gaps overlap certified non-gaps")
    unknown = proved.union(certified).complement_within(bound)
    return GapDecomposition(
        d=d,
        horizon=horizon,
        proved_gaps=proved,
        unknown_candidates=unknown,
        nongap_certified=certified,
        proved_sources=tuple(sources),
    )
