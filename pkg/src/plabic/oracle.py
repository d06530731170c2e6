"""Independent brute-force verifiers and exhaustive enumerators.

These deliberately avoid the constructions they are used to check:
maximality is certified by scanning every k-subset, the cluster census by
breadth-first mutation closure cross-checked against maximal-clique
enumeration, and the Gr(2,n) pipeline against triangle counts of every
polygon triangulation.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Optional

from .cluster import (
    Cluster,
    all_intervals,
    expected_size,
    validate_cluster,
)
from .combinat import KSubset, weakly_separated
from .errors import (
    AmbiguousMutationError,
    EnumerationGuardError,
    InvalidInputError,
)
from .frieze import Frieze, build_sl2_from_quiddity, sl2_from_table
from .geometry import cc_quiddity_from_triangulation, quadrilateral_cluster
from .pluecker import solve_from_cluster


def all_ksubsets(k: int, n: int) -> list[KSubset]:
    return [KSubset(n, elems) for elems in combinations(range(1, n + 1), k)]


def brute_force_is_maximal(k: int, n: int, members: Iterable[KSubset]) -> bool:
    """Definition-level maximality: no outside k-subset is non-crossing
    with every member. Independent of the member-count criterion."""
    ms = sorted(set(members))
    for a, b in combinations(ms, 2):
        if not weakly_separated(a, b):
            raise InvalidInputError(
                f"{a.label()} and {b.label()} cross; need a non-crossing collection"
            )
    inside = set(ms)
    for cand in all_ksubsets(k, n):
        if cand in inside:
            continue
        if all(weakly_separated(cand, m) for m in ms):
            return False
    return True


# --- mutation closure, mask backed -----------------------------------------


def _mask(elems: Iterable[int]) -> int:
    out = 0
    for x in elems:
        out |= 1 << (x - 1)
    return out


def _interval_mask(n: int, mask: int) -> bool:
    ring = mask | (mask << n)
    runs = 0
    for i in range(n):
        if ring >> i & 1 and not ring >> (i + 1) & 1:
            runs += 1
    return runs == 1


def _ws_sets(subsets: list[KSubset]) -> dict:
    """mask -> set of masks it is weakly separated from (pairwise table)."""
    masks = [_mask(s.elems) for s in subsets]
    table = {m: set() for m in masks}
    for i, a in enumerate(subsets):
        for j in range(i + 1, len(subsets)):
            if weakly_separated(a, subsets[j]):
                table[masks[i]].add(masks[j])
                table[masks[j]].add(masks[i])
    return table


def fan_cluster(n: int) -> Cluster:
    """Boundary pairs plus all diagonals at vertex 1 (a (2,n) cluster)."""
    members = [KSubset.of(n, (i, i % n + 1)) for i in range(1, n + 1)]
    members += [KSubset.of(n, (1, j)) for j in range(3, n)]
    return validate_cluster(2, n, members)


def _default_seed(k: int, n: int) -> Cluster:
    if k == 2:
        return fan_cluster(n)
    if k == n - 2:
        fan = fan_cluster(n)
        return validate_cluster(k, n, [s.complement() for s in fan.members])
    if k == 3 and n >= 6:
        return quadrilateral_cluster(n)
    raise InvalidInputError(f"no seed construction for (k, n) = ({k}, {n})")


@dataclass(frozen=True)
class EnumerationReport:
    k: int
    n: int
    cluster_count: int
    rectangular_count: int
    clusters: tuple


def enumerate_clusters(k: int, n: int, seed: Optional[Cluster] = None) -> EnumerationReport:
    """Breadth-first closure of the mutation graph from a seed cluster.

    Every discovered collection is re-validated against the pairwise
    non-crossing table and the member count; the report lists clusters in
    canonical (lexicographic) order regardless of traversal order.
    """
    if k * (n - k) > 20:
        raise EnumerationGuardError(f"(k, n) = ({k}, {n}) exceeds the desk-scale guard")
    if seed is None:
        seed = _default_seed(k, n)
    if (seed.k, seed.n) != (k, n):
        raise InvalidInputError("seed does not match the requested (k, n)")

    subsets = all_ksubsets(k, n)
    by_mask = {_mask(s.elems): s for s in subsets}
    ws = _ws_sets(subsets)
    interval = {m: _interval_mask(n, m) for m in by_mask}
    bit_elems = {m: by_mask[m].elems for m in by_mask}
    want = expected_size(k, n)

    def validated(state: frozenset) -> None:
        assert len(state) == want
        for m in state:
            assert ws[m] >= (state - {m}), "crossing pair in discovered collection"

    def neighbours(state: frozenset) -> list:
        out = []
        for m in state:
            if interval[m]:
                continue
            elems = bit_elems[m]
            replacements = set()
            for i_combo in combinations(elems, k - 2):
                a, c = (x for x in elems if x not in i_combo)
                base = _mask(i_combo)
                span = (c - a - 1) % n
                arc_ac = [(a + t) % n + 1 for t in range(span)]
                arc_ca = [(c + t) % n + 1 for t in range((a - c - 1) % n)]
                for b in arc_ac:
                    if 1 << (b - 1) & m:
                        continue
                    for d in arc_ca:
                        if 1 << (d - 1) & m:
                            continue
                        bits = [
                            base | _mask((a, b)),
                            base | _mask((c, d)),
                            base | _mask((a, d)),
                            base | _mask((b, c)),
                        ]
                        if all(w in state for w in bits):
                            replacements.add(base | _mask((b, d)))
            if len(replacements) > 1:
                raise AmbiguousMutationError(
                    f"distinct replacements at {by_mask[m].label()}"
                )
            for new in replacements:
                out.append(state - {m} | {new})
        return out

    start = frozenset(_mask(s.elems) for s in seed.members)
    seen = {start}
    frontier = [start]
    while frontier:
        nxt = []
        for state in frontier:
            for other in neighbours(state):
                if other not in seen:
                    validated(other)
                    seen.add(other)
                    nxt.append(other)
        frontier = nxt

    clusters = []
    for state in seen:
        members = frozenset(by_mask[m] for m in state)
        clusters.append(Cluster(k, n, members))
    clusters.sort(key=lambda c: tuple(s.elems for s in c.sorted_members))
    rect = sum(
        1
        for c in clusters
        if all(len(s.runs()) <= 2 for s in c.members)
    )
    return EnumerationReport(k, n, len(clusters), rect, tuple(clusters))


def enumerate_maximal_brute(k: int, n: int) -> set:
    """All maximal pairwise non-crossing collections, found as maximal
    cliques of the non-crossing graph (Bron–Kerbosch with pivoting)."""
    subsets = all_ksubsets(k, n)
    masks = [_mask(s.elems) for s in subsets]
    by_mask = dict(zip(masks, subsets))
    ws = _ws_sets(subsets)
    out = []

    def expand(r: set, p: set, x: set) -> None:
        if not p and not x:
            out.append(frozenset(r))
            return
        pivot = max(p | x, key=lambda v: len(ws[v] & p))
        for v in sorted(p - ws[pivot]):
            expand(r | {v}, p & ws[v], x & ws[v])
            p.remove(v)
            x.add(v)

    expand(set(), set(masks), set())
    return {frozenset(by_mask[m] for m in state) for state in out}


# --- triangulations and the Gr(2, n) cross-check ----------------------------


def polygon_triangulations(n: int) -> list[frozenset]:
    """All triangulations of the n-gon as sets of diagonals."""

    def rec(poly: tuple) -> list:
        if len(poly) < 3:
            return [frozenset()]
        if len(poly) == 3:
            return [frozenset()]
        a, b = poly[0], poly[-1]
        out = []
        for idx in range(1, len(poly) - 1):
            apex = poly[idx]
            left = rec(poly[: idx + 1])
            right = rec(poly[idx:])
            extra = []
            if idx > 1:
                extra.append(tuple(sorted((a, apex))))
            if idx < len(poly) - 2:
                extra.append(tuple(sorted((apex, b))))
            for lft in left:
                for rgt in right:
                    out.append(lft | rgt | frozenset(extra))
        return out

    return sorted(rec(tuple(range(1, n + 1))), key=sorted)


def cluster_from_triangulation(n: int, arcs: Iterable) -> Cluster:
    """Boundary pairs plus the diagonals, as a (2,n) cluster."""
    members = [KSubset.of(n, (i, i % n + 1)) for i in range(1, n + 1)]
    members += [KSubset.of(n, pair) for pair in arcs]
    return validate_cluster(2, n, members)


@dataclass(frozen=True)
class Gr2Report:
    n: int
    case_count: int
    mismatches: tuple

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_validate_gr2(n: int) -> Gr2Report:
    """For every triangulation, the frieze grown from its triangle counts
    must equal the frieze read off the solved cluster table, entry by
    entry."""
    if not 5 <= n <= 9:
        raise InvalidInputError(f"cross-validation supported for 5 <= n <= 9, got {n}")
    mismatches = []
    cases = polygon_triangulations(n)
    for arcs in cases:
        built = build_sl2_from_quiddity(cc_quiddity_from_triangulation(arcs, n))
        solved = sl2_from_table(solve_from_cluster(cluster_from_triangulation(n, arcs)))
        if built != solved:
            mismatches.append((tuple(sorted(arcs)), built, solved))
    return Gr2Report(n, len(cases), tuple(mismatches))


def report_to_json(report: EnumerationReport) -> str:
    return json.dumps(
        {
            "k": report.k,
            "n": report.n,
            "cluster_count": report.cluster_count,
            "rectangular_count": report.rectangular_count,
            "clusters": [
                [list(s.elems) for s in c.sorted_members] for c in report.clusters
            ],
        }
    )
