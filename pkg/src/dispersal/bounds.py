"""Cheap upper and lower bounds on ``DL(G)``.

Upper bounds come from eccentricities (the radius, and the radius minus
one when enough central vertices are uniquely eccentric).  Lower bounds
come from Dirac's theorem applied to ``H_k``: ``kappa(x)`` is the largest
radius whose ball around ``x`` holds at most half the vertices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import InputError
from .graph import DistanceMatrix, EccentricityReport, Graph, distance_matrix, eccentricity_report

_FLOAT_MARGIN = 1e-9


def radius_upper_bound(er: EccentricityReport) -> int:
    return er.radius


def uniquely_eccentric_upper_bound(er: EccentricityReport) -> int | None:
    """``r - 1`` when at least three central vertices are uniquely eccentric."""
    if len(er.uniquely_eccentric_central) >= 3:
        return er.radius - 1
    return None


def circular_ue_constraint(er: EccentricityReport) -> int | None:
    """Upper bound on ``DL°``: ``r - 1`` once any central vertex is uniquely eccentric."""
    if er.uniquely_eccentric_central:
        return er.radius - 1
    return None


def kappa(dm: DistanceMatrix, x: int) -> int:
    """Largest ``j`` whose closed ball of radius ``j`` around ``x`` has ``<= n/2`` vertices.

    Returns ``-1`` if even ``{x}`` alone is more than half (``n = 1``).
    """
    n = dm.n
    if not 0 <= x < n:
        raise InputError(f"vertex {x} out of range for n={n}")
    eta = np.bincount(dm.row(x))
    best = -1
    total = 0
    for j, count in enumerate(eta):
        total += int(count)
        if 2 * total > n:
            break
        best = j
    return best


def dirac_lower_bound(dm: DistanceMatrix) -> int | None:
    """``min(1 + kappa(x))`` over all vertices; ``None`` below three vertices."""
    if dm.n < 3:
        return None
    return min(1 + kappa(dm, x) for x in range(dm.n))


@dataclass(frozen=True)
class DegreeBound:
    """The max-degree lower bound.

    ``raw`` is the real-valued closed form and ``closed_form`` its ceiling.
    ``value`` is the integer bound the ball-counting argument actually
    proves, ``1 + floor(log_{D-1}(...))``; only ``value`` is safe to use.
    """

    raw: float
    value: int
    closed_form: int


def degree_closed_form(n: int, max_degree: int) -> float:
    """``1 + log_{D-1}(1 + (n-2)(D-2) / 2D)`` for maximum degree ``D > 2``."""
    d = max_degree
    return 1 + math.log(1 + (n - 2) * (d - 2) / (2 * d), d - 1)


def moore_radius(n: int, max_degree: int) -> int:
    """Largest ``j`` such that a degree-``D`` ball of radius ``j`` can hold at most ``n/2`` vertices."""
    d = max_degree
    j, ball, shell = 0, 1, d
    while 2 * (ball + shell) <= n:
        ball += shell
        shell *= d - 1
        j += 1
    return j


def degree_lower_bound(g: Graph) -> DegreeBound | None:
    """Lower bound on ``DL`` from the vertex count and maximum degree alone.

    Every ball of radius ``j`` has at most ``1 + D + D(D-1) + ... + D(D-1)^(j-1)``
    vertices, so ``kappa(x) >= moore_radius`` everywhere and Dirac gives
    ``DL >= 1 + moore_radius``.  The ceiling of the real closed form is
    reported too but is not a bound in general: ``K_4`` has ``raw``
    about 1.415 yet ``DL(K_4) = 1``.
    """
    delta = g.max_degree
    if delta <= 2:
        return None
    raw = degree_closed_form(g.n, delta)
    closed = math.ceil(raw)
    if not raw > closed - 1 + _FLOAT_MARGIN:
        # raw sits on an integer up to rounding; do not round it up
        closed -= 1
    return DegreeBound(raw, 1 + moore_radius(g.n, delta), closed)


@dataclass(frozen=True)
class BoundsReport:
    radius_upper: int
    ue_upper: int | None
    circular_upper: int | None
    dirac_lower: int | None
    degree_lower: DegreeBound | None
    best_upper: int
    best_lower: int

    def to_dict(self) -> dict:
        deg = self.degree_lower
        return {
            "radius_upper": self.radius_upper,
            "ue_upper": self.ue_upper,
            "circular_upper": self.circular_upper,
            "dirac_lower": self.dirac_lower,
            "degree_lower": None if deg is None else deg.value,
            "degree_closed_form": None if deg is None else deg.closed_form,
            "degree_raw": None if deg is None else round(deg.raw, 9),
            "best_upper": self.best_upper,
            "best_lower": self.best_lower,
        }

    def rows(self) -> list[tuple[str, str, str]]:
        """``(bound, kind, value)`` rows for a text table."""
        out = [("radius", "upper", str(self.radius_upper))]

        def fmt(x):
            return "-" if x is None else str(x)

        out.append(("uniquely eccentric", "upper", fmt(self.ue_upper)))
        out.append(("circular (DL°)", "upper", fmt(self.circular_upper)))
        out.append(("dirac / kappa", "lower", fmt(self.dirac_lower)))
        if self.degree_lower is None:
            out.append(("max degree", "lower", "-"))
        else:
            out.append(("max degree", "lower", f"{self.degree_lower.value} (raw {self.degree_lower.raw:.9f})"))
        out.append(("best", "upper", str(self.best_upper)))
        out.append(("best", "lower", str(self.best_lower)))
        return out


def bounds_report(g: Graph, dm: DistanceMatrix | None = None) -> BoundsReport:
    if g.n < 2:
        raise InputError("bounds need at least two vertices")
    if dm is None:
        dm = distance_matrix(g)
    er = eccentricity_report(dm)
    radius = radius_upper_bound(er)
    ue = uniquely_eccentric_upper_bound(er)
    circ = circular_ue_constraint(er)
    dirac = dirac_lower_bound(dm)
    deg = degree_lower_bound(g)
    upper = min(x for x in (radius, ue) if x is not None)
    lower = max([1] + [x for x in (dirac, deg.value if deg else None) if x is not None])
    return BoundsReport(radius, ue, circ, dirac, deg, upper, lower)
