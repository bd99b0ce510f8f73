"""Exhaustive checks of the bounds on T_k(n) and of the extremal-tree table."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

import mpmath

from ..bounds import (
    TheoremCase,
    bound_value,
    evaluate_bound,
    tree_extremal_classes,
    tree_regime,
)
from ..constructions import FamilyError, bullet_family, cycle, join_family, join_tree
from ..graph import DegreeMultiset, Graph
from ..indices import DEFAULT_TOLERANCE, check_alpha, exact_zeroth_order, zeroth_order_general_randic
from ..quasitree import tree_deletion_number
from .canonical import canonical_form
from .enumeration import enumerate_labeled_trees, prufer_decode, tree_degree_table
from .population import Population
from .report import VerificationReport

PRECISE_DPS = 60


@dataclass
class Quantity:
    """A float value plus a lazily computed high-precision twin."""

    value: float
    precise: Callable[[], object]


class Comparator:
    """Tolerance-aware ordering of index values.

    Values further apart than ``10 * tol`` (relative) are ordered by their
    floats.  Closer pairs are equal within ``tol`` in lenient mode; in strict
    mode they are re-evaluated exactly (rational arithmetic for integral
    exponents, 60-digit floats otherwise).
    """

    def __init__(self, alpha: float, tol: float = DEFAULT_TOLERANCE, strict: bool = True) -> None:
        self.alpha = check_alpha(alpha)
        self.tol = tol
        self.strict = strict
        self.integral = self.alpha == int(self.alpha)

    def _pw_precise(self, d: int):
        if self.integral:
            return Fraction(d) ** int(self.alpha)
        with mpmath.workdps(PRECISE_DPS):
            return mpmath.mpf(d) ** mpmath.mpf(self.alpha)

    def of_multiset(self, ms: DegreeMultiset) -> Quantity:
        def precise():
            if self.integral:
                return exact_zeroth_order(ms, self.alpha)
            with mpmath.workdps(PRECISE_DPS):
                return mpmath.fsum(c * self._pw_precise(d) for d, c in ms.counts.items())

        return Quantity(zeroth_order_general_randic(ms, self.alpha), precise)

    def of_bound(self, case: TheoremCase) -> Quantity:
        def precise():
            if self.integral:
                return Fraction(evaluate_bound(case, lambda d: Fraction(d) ** int(self.alpha))[0])
            with mpmath.workdps(PRECISE_DPS):
                return evaluate_bound(case, self._pw_precise)[0]

        return Quantity(bound_value(case).value, precise)

    def cmp(self, x: Quantity, y: Quantity) -> int:
        scale = max(1.0, abs(x.value), abs(y.value))
        diff = x.value - y.value
        if abs(diff) > 10 * self.tol * scale:
            return -1 if diff < 0 else 1
        if not self.strict:
            if abs(diff) <= self.tol * scale:
                return 0
            return -1 if diff < 0 else 1
        with mpmath.workdps(PRECISE_DPS):
            d = x.precise() - y.precise()
            if not self.integral and abs(d) <= mpmath.mpf(10) ** (20 - PRECISE_DPS) * scale:
                return 0
        return (d > 0) - (d < 0)


def _sorted_extremal(qs: dict[DegreeMultiset, Quantity], sense: str, cmp: Comparator) -> list[DegreeMultiset]:
    sign = 1 if sense == "min" else -1
    ordered = sorted(qs, key=lambda ms: (sign * qs[ms].value, ms.degrees))
    best = ordered[0]
    for ms in ordered[1:]:
        if abs(qs[ms].value - qs[best].value) > 10 * cmp.tol * max(1.0, abs(qs[best].value)):
            break
        if sign * cmp.cmp(qs[ms], qs[best]) < 0:
            best = ms
    return [ms for ms in ordered if cmp.cmp(qs[ms], qs[best]) == 0]


def _witness_structure(G: Graph) -> tuple[bool, bool]:
    """(some minimum witness is independent with all degrees 2, every witness vertex has degree 2)."""
    cls = tree_deletion_number(G)
    deg = G.degrees()
    some = any(
        all(deg[s] == 2 for s in S) and not any(G.has_edge(a, b) for a in S for b in S if a < b)
        for S in cls.witnesses
    )
    every = all(deg[s] == 2 for S in cls.witnesses for s in S)
    return some, every


def _predicted_classes(case: TheoremCase, family: str, pop: Population) -> tuple[set[bytes] | None, str | None]:
    n, k = case.n, case.k
    if family == "join_path":
        return {canonical_form(join_family(n, k, "path"))}, None
    if family == "join_star":
        return {canonical_form(join_family(n, k, "star"))}, None
    if family in ("bullet_star", "bullet_bistar"):
        try:
            return {canonical_form(bullet_family(n, k))}, None
        except FamilyError as exc:
            return None, f"no predicted extremal graph: {exc}"
    if family == "join_tree_any":
        return {canonical_form(join_tree(k, T)) for T in enumerate_labeled_trees(n - k)}, None
    if family == "quasi_degree_two":
        target = 2 * (n + k - 1)
        out = set()
        for ms in pop.multisets:
            if ms.total() != target:
                continue
            for G in pop.graphs(ms):
                if _witness_structure(G)[0]:
                    out.add(canonical_form(G))
        return out, None
    if family == "degree23":
        if k == 1:
            return {canonical_form(cycle(n))}, None
        return None, None
    raise ValueError(family)


def degree23_multiset(n: int, k: int) -> DegreeMultiset | None:
    if n - 2 * k + 2 < 0:
        return None
    return DegreeMultiset.from_counts({3: 2 * k - 2, 2: n - 2 * k + 2})


def _collect_classes(pop: Population, multisets: Iterable[DegreeMultiset], cap: int,
                     exclude: set[bytes] = frozenset()) -> list[bytes]:
    out: list[bytes] = []
    seen: set[bytes] = set(exclude)
    for ms in multisets:
        for G in pop.graphs(ms):
            c = canonical_form(G)
            if c not in seen:
                seen.add(c)
                out.append(c)
                if len(out) >= cap:
                    return out
    return out


def verify_theorem(
    case: TheoremCase,
    tolerance: float = DEFAULT_TOLERANCE,
    *,
    graphs: Iterable[Graph] | None = None,
    jobs: int = 1,
    strict: bool = True,
    max_counterexamples: int = 25,
) -> VerificationReport:
    """Check one bound against every member of T_k(n).

    The population is the internal labelled enumeration (``n <= 7``) unless
    ``graphs`` is given.  Values are compared at the degree-multiset level;
    only extremal and violating multisets are refined to isomorphism classes.
    """
    b = bound_value(case)
    cmp = Comparator(case.alpha, tolerance, strict)
    pop = Population.enumerate(case.n, case.k, jobs) if graphs is None else Population.from_graphs(graphs, case.n, case.k)
    rep = VerificationReport(
        case=case.to_dict(), population_size=pop.size, bound=b.value, observed_extremum=None, gap=None,
        details={"family": b.family, "direction": b.direction, "iff": b.iff, "tolerance": tolerance, "strict": strict},
    )
    if pop.size == 0:
        rep.passed = True
        rep.notes.append(f"T_{case.k}({case.n}) has no members in the examined population")
        return rep

    qb = cmp.of_bound(case)
    qs = {ms: cmp.of_multiset(ms) for ms in pop.multisets}
    extremal = _sorted_extremal(qs, case.sense, cmp)
    best = qs[extremal[0]]
    rep.observed_extremum = best.value
    rep.gap = best.value - b.value
    attained = cmp.cmp(best, qb) == 0
    if attained:
        rep.gap = 0.0 if cmp.integral and strict else rep.gap
    bad_sign = -1 if b.direction == "lower" else 1
    violators = [ms for ms in pop.multisets if cmp.cmp(qs[ms], qb) == bad_sign]
    violators.sort(key=lambda ms: (-bad_sign * qs[ms].value, ms.degrees))

    rep.extremal_multisets = [list(ms.degrees) for ms in extremal]
    ext_classes: set[bytes] = set()
    for ms in extremal:
        ext_classes.update(pop.classes(ms))
    rep.extremal_canonical_graphs = sorted(c.decode() for c in ext_classes)
    rep.details["extremal_member_count"] = sum(pop.count(ms) for ms in extremal)
    rep.details["violating_multisets"] = [[list(ms.degrees), qs[ms].value] for ms in violators[:max_counterexamples]]
    rep.details["violating_member_count"] = sum(pop.count(ms) for ms in violators)

    predicted, note = _predicted_classes(case, b.family, pop)
    if note:
        rep.notes.append(note)
    unexpected: list[bytes] = []
    if b.family == "degree23" and case.k >= 2:
        target = degree23_multiset(case.n, case.k)
        exists = target is not None and target in pop
        rep.details["degree23_member_exists"] = exists
        if exists:
            rep.predicted_family_matched = target in extremal
            rep.uniqueness_confirmed = extremal == [target]
            if not rep.uniqueness_confirmed:
                others = [ms for ms in extremal if ms != target]
                unexpected = _collect_classes(pop, others, max_counterexamples)
            rep.passed = not violators and attained and rep.uniqueness_confirmed
        else:
            rep.notes.append(
                "no member has the degree-(2,3) multiset; equality is not asserted, only the bound direction"
            )
            rep.passed = not violators
    else:
        if predicted is not None:
            rep.details["predicted_canonical_graphs"] = sorted(c.decode() for c in predicted)
            rep.predicted_family_matched = bool(predicted) and predicted <= ext_classes
            rep.uniqueness_confirmed = ext_classes == predicted
            unexpected = sorted(ext_classes - predicted)[:max_counterexamples]
        rep.passed = (
            not violators and attained and rep.predicted_family_matched
            and (rep.uniqueness_confirmed or not b.iff)
        )
        if b.family == "quasi_degree_two" and attained:
            every = all(_witness_structure(G)[1] for ms in extremal for G in pop.graphs(ms))
            rep.details["equality_members_witness_degree_two"] = every
            rep.passed = rep.passed and every

    if violators:
        rep.notes.append(
            f"{rep.details['violating_member_count']} members in {len(violators)} degree classes lie beyond the bound"
        )
    if not attained:
        rep.notes.append("bound not attained by any member")
    if not rep.passed:
        counter = _collect_classes(pop, violators, max_counterexamples)
        room = max_counterexamples - len(counter)
        counter += [c for c in unexpected if c not in counter][:room]
        rep.counterexamples = [c.decode() for c in counter]
    return rep


def tree_with_degrees(ms: DegreeMultiset) -> Graph:
    """A tree realising the multiset (vertex ``v`` appears ``d_v - 1`` times in a Pruefer code)."""
    code = [v for v, d in enumerate(ms.degrees) for _ in range(d - 1)]
    if len(code) != ms.n - 2 or any(d < 1 for d in ms.degrees):
        raise ValueError(f"{ms} is not a tree degree multiset")
    return prufer_decode(code, ms.n)


def verify_lemma1(n: int, alpha: float, tolerance: float = DEFAULT_TOLERANCE, *, strict: bool = True) -> VerificationReport:
    """Rank the degree classes of all labelled trees on ``n`` vertices against the extremal table."""
    if not 4 <= n <= 9:
        raise ValueError("verify_lemma1 covers 4 <= n <= 9")
    regime = tree_regime(alpha)
    cmp = Comparator(alpha, tolerance, strict)
    rows, counts = tree_degree_table(n)
    multisets = [DegreeMultiset(tuple(int(d) for d in r)) for r in rows]
    qs = {ms: cmp.of_multiset(ms) for ms in multisets}
    ordered = sorted(multisets, key=lambda ms: (qs[ms].value, ms.degrees))
    levels: list[list[DegreeMultiset]] = []
    for ms in ordered:
        if levels and cmp.cmp(qs[ms], qs[levels[-1][0]]) == 0:
            levels[-1].append(ms)
        else:
            levels.append([ms])

    rep = VerificationReport(
        case={"id": "L1", "n": n, "alpha": float(alpha)},
        population_size=int(counts.sum()),
        bound=None, observed_extremum=qs[levels[0][0]].value, gap=None,
        details={"regime": regime, "distinct_values": len(levels), "ranks": {}},
    )
    predicted_by_rank: dict[str, DegreeMultiset] = {}
    all_ok = True
    bad: list[DegreeMultiset] = []
    for r in (1, 2, 3):
        for side, level in (("min", r - 1), ("max", len(levels) - r)):
            rank = f"{side}{r}"
            try:
                pred = tree_extremal_classes(n, rank, regime)
            except ValueError as exc:
                rep.notes.append(f"{rank}: {exc}")
                continue
            predicted_by_rank[rank] = pred
            observed = levels[level] if 0 <= level < len(levels) else []
            ok = observed == [pred]
            all_ok &= ok
            if not ok:
                bad.extend(ms for ms in observed if ms != pred)
            rep.details["ranks"][rank] = {
                "predicted": list(pred.degrees),
                "observed": [list(ms.degrees) for ms in observed],
                "value": qs[observed[0]].value if observed else None,
                "match": ok,
            }
    by_class: dict[DegreeMultiset, list[str]] = {}
    for rank, ms in predicted_by_rank.items():
        by_class.setdefault(ms, []).append(rank)
    for ms, ranks in by_class.items():
        if len(ranks) > 1:
            rep.notes.append(f"coincidence: ranks {', '.join(ranks)} share the degree class {ms}")
    if len(levels) < 6:
        rep.notes.append(f"only {len(levels)} distinct values, so minimum and maximum ranks overlap")
    if "min1" in predicted_by_rank:
        pred = predicted_by_rank["min1"]
        rep.bound = qs[pred].value if pred in qs else None
        if rep.bound is not None:
            rep.gap = rep.observed_extremum - rep.bound
    rep.extremal_multisets = [list(ms.degrees) for ms in levels[0]]
    rep.extremal_canonical_graphs = [canonical_form(tree_with_degrees(ms)).decode() for ms in levels[0]]
    rep.predicted_family_matched = all_ok
    rep.uniqueness_confirmed = all_ok
    rep.passed = all_ok
    rep.counterexamples = sorted({canonical_form(tree_with_degrees(ms)).decode() for ms in bad})
    return rep
