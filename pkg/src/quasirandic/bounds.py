"""Closed-form bounds on T_k(n), the difference function, partition optima and tree classes."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Callable, Iterator

from .graph import DegreeMultiset
from .indices import check_alpha

CASE_IDS = (
    "T1_min_neg", "T2_max_neg", "T3_min_lin", "T3_max_lin",
    "T4_min_sup", "T4_max_sup", "T5_max_mid", "T6_min_mid",
)

FAMILIES = (
    "join_path", "bullet_star", "bullet_bistar", "join_star",
    "degree23", "join_tree_any", "quasi_degree_two",
)


class RegimeError(ValueError):
    """The exponent or (n, k) lies outside the hypotheses of the requested case."""


def regime_of(alpha: float) -> str:
    a = check_alpha(alpha)
    if a < 0:
        return "neg"
    if a < 1:
        return "mid"
    if a == 1:
        return "lin"
    return "sup"


@dataclass(frozen=True)
class TheoremCase:
    id: str
    n: int
    k: int
    alpha: float = 1.0

    def __post_init__(self) -> None:
        if self.id not in CASE_IDS:
            raise RegimeError(f"unknown case {self.id!r}; expected one of {', '.join(CASE_IDS)}")
        object.__setattr__(self, "alpha", check_alpha(self.alpha))
        want = self.id.rsplit("_", 1)[1]
        have = regime_of(self.alpha)
        if want != have:
            raise RegimeError(f"{self.id} requires the {want!r} exponent regime, alpha={self.alpha} is {have!r}")
        if self.k < 1 or self.n < 3:
            raise RegimeError(f"{self.id} needs k >= 1 and n >= 3 (got n={self.n}, k={self.k})")
        if self.n < self.k + 2:
            raise RegimeError(f"T_k(n) is empty below n = k + 2 (got n={self.n}, k={self.k})")
        if self.id in ("T2_max_neg", "T6_min_mid") and self.k >= 2 and self.n < 4:
            raise RegimeError(f"{self.id} with k >= 2 needs n >= 4")

    @property
    def direction(self) -> str:
        """``'lower'`` if the bound is a lower bound (the case is about minima)."""
        return "lower" if "_min_" in self.id else "upper"

    @property
    def sense(self) -> str:
        return "min" if self.direction == "lower" else "max"

    def to_dict(self) -> dict:
        return {"id": self.id, "n": self.n, "k": self.k, "alpha": self.alpha}


@dataclass(frozen=True)
class Bound:
    value: float
    family: str
    direction: str
    iff: bool


def _join_path_value(n: int, k: int, pw: Callable) -> object:
    return k * pw(n - 1) + 2 * pw(k + 1) + (n - k - 2) * pw(k + 2)


def _bullet_value(n: int, k: int, pw: Callable) -> object:
    if k == 1:
        return pw(n - 1) + 2 * pw(2) + (n - 3)
    return pw(n - 2) + k * pw(2) + pw(k + 2) + (n - k - 2)


def _join_star_value(n: int, k: int, pw: Callable) -> object:
    return (k + 1) * pw(n - 1) + (n - k - 1) * pw(k + 1)


def _degree23_value(n: int, k: int, pw: Callable) -> object:
    return (n - 2 * k + 2) * pw(2) + (2 * k - 2) * pw(3)


def evaluate_bound(case: TheoremCase, pw: Callable) -> tuple[object, str]:
    n, k = case.n, case.k
    if case.id in ("T1_min_neg", "T5_max_mid"):
        return _join_path_value(n, k, pw), "join_path"
    if case.id in ("T2_max_neg", "T6_min_mid"):
        return _bullet_value(n, k, pw), ("bullet_star" if k == 1 else "bullet_bistar")
    if case.id == "T3_min_lin":
        return 2 * (n + k - 1), "quasi_degree_two"
    if case.id == "T3_max_lin":
        return 2 * n * (k + 1) - k * (k + 3) - 2, "join_tree_any"
    if case.id == "T4_max_sup":
        return _join_star_value(n, k, pw), "join_star"
    return _degree23_value(n, k, pw), "degree23"


def bound_value(case: TheoremCase) -> Bound:
    """Closed-form bound for ``case`` with its predicted extremal family."""
    a = case.alpha
    value, family = evaluate_bound(case, lambda d: float(d) ** a)
    # every case except the T4 lower bound claims its family is the unique extremal one
    return Bound(float(value), family, case.direction, iff=case.id != "T4_min_sup" or case.k == 1)


def exact_bound_value(case: TheoremCase) -> Fraction:
    """Bound in rational arithmetic; integral exponents only."""
    if case.alpha != int(case.alpha):
        raise RegimeError("exact bound needs an integral exponent")
    e = int(case.alpha)
    value, _ = evaluate_bound(case, lambda d: Fraction(d) ** e)
    return Fraction(value)


def f_delta(x: float, alpha: float) -> float:
    """``x**alpha - (x+1)**alpha`` for ``x > 0``."""
    a = check_alpha(alpha)
    if not x > 0:
        raise ValueError(f"f_delta needs x > 0, got {x!r}")
    return x ** a - (x + 1) ** a


@dataclass(frozen=True)
class PartitionProblem:
    n: int
    p: int
    alpha: float
    m: int | None = None

    def __post_init__(self) -> None:
        a = check_alpha(self.alpha)
        if a == 1:
            raise RegimeError("the partition optimum is trivial (constant) for alpha = 1")
        if self.n < 1 or self.p < self.n:
            raise ValueError(f"need n >= 1 and p >= n (got n={self.n}, p={self.p})")
        if self.m is not None:
            if self.m < 1 or self.n < 2:
                raise ValueError("constrained mode needs m >= 1 and n >= 2")
            if self.p < 2 * self.m + self.n - 2:
                raise ValueError(
                    f"x1 >= x2 >= m is infeasible: need p >= 2m + n - 2 = {2 * self.m + self.n - 2}"
                )

    @property
    def convex(self) -> bool:
        return self.alpha < 0 or self.alpha > 1


@dataclass(frozen=True)
class PartitionOptimum:
    sense: str
    optimum: tuple[int, ...]
    value: float
    second: tuple[int, ...] | None = None
    second_value: float | None = None


def power_sum(xs: tuple[int, ...], alpha: float) -> float:
    return math.fsum(float(x) ** alpha for x in xs)


def almost_equal_parts(n: int, p: int) -> tuple[int, ...]:
    q, r = divmod(p, n)
    return (q + 1,) * r + (q,) * (n - r)


def lemma7_extremal(prob: PartitionProblem) -> PartitionOptimum:
    """Optimum of ``sum x_i**alpha`` over positive integer vectors summing to ``p``.

    Free mode: the almost-equal vector, a minimum when ``alpha < 0`` or
    ``alpha > 1`` and a maximum when ``0 < alpha < 1``.  Constrained mode
    (``x_1 >= x_2 >= m``): the opposite sense, attained at
    ``(p-m-n+2, m, 1, ..., 1)``; the runner-up is ``(p-m-n+1, m+1, 1, ..., 1)``
    when that vector still satisfies ``x_1 >= x_2`` (``p >= 2m + n``).
    """
    n, p, a = prob.n, prob.p, prob.alpha
    if prob.m is None:
        opt = almost_equal_parts(n, p)
        return PartitionOptimum("min" if prob.convex else "max", opt, power_sum(opt, a))
    m = prob.m
    ones = (1,) * (n - 2)
    opt = (p - m - n + 2, m) + ones
    second = None
    if p - m - n + 1 >= m + 1:
        second = (p - m - n + 1, m + 1) + ones
    return PartitionOptimum(
        "max" if prob.convex else "min",
        opt,
        power_sum(opt, a),
        second,
        None if second is None else power_sum(second, a),
    )


def compositions(p: int, n: int) -> Iterator[tuple[int, ...]]:
    """All vectors of ``n`` positive integers summing to ``p`` (stars and bars)."""
    for cuts in combinations(range(1, p), n - 1):
        prev = 0
        parts = []
        for c in cuts:
            parts.append(c - prev)
            prev = c
        parts.append(p - prev)
        yield tuple(parts)


TREE_RANKS = ("min1", "min2", "min3", "max1", "max2", "max3")

_LOW_TABLE = {
    "min1": "path", "min2": "one_branch", "min3": "two_branch",
    "max1": "star", "max2": "bistar2", "max3": "bistar3",
}
_MID_TABLE = {
    "min1": "star", "min2": "bistar2", "min3": "bistar3",
    "max1": "path", "max2": "one_branch", "max3": "two_branch",
}


def _tree_class(name: str, n: int) -> DegreeMultiset:
    if name == "path":
        return DegreeMultiset.from_counts({2: n - 2, 1: 2}) if n >= 2 else DegreeMultiset((0,))
    if name == "star":
        return DegreeMultiset.from_counts({n - 1: 1, 1: n - 1}) if n >= 2 else DegreeMultiset((0,))
    if name == "one_branch":
        if n < 4:
            raise ValueError("class [3,2^(n-4),1^3] needs n >= 4")
        return DegreeMultiset.from_counts({3: 1, 2: n - 4, 1: 3})
    if name == "two_branch":
        if n < 6:
            raise ValueError("class [3^2,2^(n-6),1^4] needs n >= 6")
        return DegreeMultiset.from_counts({3: 2, 2: n - 6, 1: 4})
    if name == "bistar2":
        if n < 4:
            raise ValueError("double star S_{n-2,2} needs n >= 4")
        return DegreeMultiset.from_counts({n - 2: 1, 2: 1, 1: n - 2})
    if name == "bistar3":
        if n < 6:
            raise ValueError("double star S_{n-3,3} needs n >= 6")
        return DegreeMultiset((n - 3, 3) + (1,) * (n - 2))
    raise ValueError(name)


def tree_extremal_classes(n: int, rank: str, regime: str) -> DegreeMultiset:
    """Degree multiset of the predicted ``rank``-th extremal tree class.

    ``regime`` is ``'low'`` (``alpha < 0`` or ``alpha > 1``) or ``'mid'``
    (``0 < alpha < 1``).
    """
    if rank not in TREE_RANKS:
        raise ValueError(f"rank must be one of {TREE_RANKS}")
    if regime == "low":
        table = _LOW_TABLE
    elif regime == "mid":
        table = _MID_TABLE
    else:
        raise ValueError("regime must be 'low' or 'mid'")
    return _tree_class(table[rank], n)


def tree_regime(alpha: float) -> str:
    r = regime_of(alpha)
    if r == "lin":
        raise RegimeError("alpha = 1 gives the same value 2(n-1) on every tree")
    return "mid" if r == "mid" else "low"
