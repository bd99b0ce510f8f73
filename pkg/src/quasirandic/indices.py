"""Degree-based indices: zeroth-order general Randic and general (edge) Randic."""

from __future__ import annotations

import math
import os
from fractions import Fraction
from numbers import Real

from .graph import DegreeMultiset, Graph, degree_multiset

DEFAULT_TOLERANCE = float(os.environ.get("QUASIRANDIC_TOLERANCE", "1e-9"))


class ExponentError(ValueError):
    pass


def check_alpha(alpha: Real) -> float:
    a = float(alpha)
    if a == 0 or not math.isfinite(a):
        raise ExponentError(f"alpha must be a nonzero finite real, got {alpha!r}")
    return a


def _power(d: int, alpha: float) -> float:
    if d == 0:
        if alpha < 0:
            raise ZeroDivisionError("degree 0 raised to a negative exponent")
        return 0.0
    return float(d) ** alpha


def zeroth_order_general_randic(D: DegreeMultiset | Graph, alpha: Real) -> float:
    """Sum of ``d(v) ** alpha`` over all vertices.

    Each distinct degree is powered once and weighted by its multiplicity.
    ``alpha = 2`` is the first Zagreb index, ``alpha = -1/2`` the zeroth-order
    Randic index.
    """
    a = check_alpha(alpha)
    if isinstance(D, Graph):
        D = degree_multiset(D)
    return math.fsum(c * _power(d, a) for d, c in D.counts.items())


def exact_zeroth_order(D: DegreeMultiset | Graph, alpha: Real) -> Fraction:
    """Exact value for integral ``alpha`` (rational arithmetic)."""
    a = check_alpha(alpha)
    if a != int(a):
        raise ExponentError("exact evaluation needs an integral exponent")
    if isinstance(D, Graph):
        D = degree_multiset(D)
    e = int(a)
    total = Fraction(0)
    for d, c in D.counts.items():
        if d == 0 and e < 0:
            raise ZeroDivisionError("degree 0 raised to a negative exponent")
        total += c * Fraction(d) ** e
    return total


def general_randic_edge(G: Graph, alpha: Real) -> float:
    """Sum of ``(d(u) d(v)) ** alpha`` over edges; ``alpha = -1/2`` is the Randic index."""
    a = check_alpha(alpha)
    deg = G.degrees()
    return math.fsum(float(deg[u] * deg[v]) ** a for u, v in G.edges())


def first_zagreb(G: Graph | DegreeMultiset) -> int:
    D = degree_multiset(G) if isinstance(G, Graph) else G
    return sum(d * d for d in D.degrees)


def close(x: float, y: float, rel_tol: float = DEFAULT_TOLERANCE) -> bool:
    """Relative comparison used for every index equality decision."""
    return math.isclose(x, y, rel_tol=rel_tol, abs_tol=rel_tol)
