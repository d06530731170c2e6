"""Exact evaluation of all Plücker coordinates from a cluster.

Members of the cluster are specialized to 1 and the three-term relations
p_Iac p_Ibd = p_Iab p_Icd + p_Iad p_Ibc are scanned to a fixpoint; each
pass solves every instance with exactly one unknown factor. Arithmetic is
rational throughout with a final integrality assertion.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable

from .cluster import Cluster
from .combinat import KSubset, normalize_index
from .errors import InvalidInputError, SaturationStallError, SolveValueError


@dataclass(frozen=True, eq=True)
class PlueckerTable:
    """Complete map from every k-subset of 1..n to a positive integer."""

    k: int
    n: int
    values: dict

    def get(self, elems) -> int:
        if isinstance(elems, KSubset):
            key = elems.elems
        else:
            key = tuple(sorted(elems))
        return self.values[key]

    def signed(self, tup: Iterable[int]) -> int:
        """Value of a possibly unsorted index tuple, with sign; 0 on repeats."""
        sign, canonical = normalize_index(tup, self.n)
        if sign == 0:
            return 0
        return sign * self.values[canonical.elems]


def short_relation_instances(k: int, n: int):
    """All (I, (a,b,c,d)) with I a (k-2)-subset and a<b<c<d disjoint from it."""
    ground = range(1, n + 1)
    for i_elems in combinations(ground, k - 2):
        rest = [x for x in ground if x not in i_elems]
        for quad in combinations(rest, 4):
            yield i_elems, quad


def _factor_keys(i_elems, quad):
    a, b, c, d = quad
    key = lambda extras: tuple(sorted(i_elems + extras))
    # v0*v1 = v2*v3 + v4*v5
    return (key((a, c)), key((b, d)), key((a, b)), key((c, d)), key((a, d)), key((b, c)))


def solve_from_cluster(c: Cluster, reverse: bool = False) -> PlueckerTable:
    """Saturate the short relations from the members-to-1 specialization.

    `reverse` flips the relation scan order; the fixpoint must not depend
    on it. Raises on a stall, and on any solved value that is not a
    positive integer.
    """
    if c.k not in (2, 3):
        raise InvalidInputError(f"solver supports k in (2, 3), got k={c.k}")
    values = {s.elems: Fraction(1) for s in c.members}
    instances = [
        _factor_keys(i_elems, quad)
        for i_elems, quad in short_relation_instances(c.k, c.n)
    ]
    if reverse:
        instances.reverse()
    total = _binomial(c.n, c.k)
    progress = True
    while progress and len(values) < total:
        progress = False
        for keys in instances:
            known = [values.get(key) for key in keys]
            missing = [idx for idx, v in enumerate(known) if v is None]
            if len(missing) != 1:
                continue
            idx = missing[0]
            v = known
            if idx == 0 and v[1] != 0:
                out = (v[2] * v[3] + v[4] * v[5]) / v[1]
            elif idx == 1 and v[0] != 0:
                out = (v[2] * v[3] + v[4] * v[5]) / v[0]
            elif idx == 2 and v[3] != 0:
                out = (v[0] * v[1] - v[4] * v[5]) / v[3]
            elif idx == 3 and v[2] != 0:
                out = (v[0] * v[1] - v[4] * v[5]) / v[2]
            elif idx == 4 and v[5] != 0:
                out = (v[0] * v[1] - v[2] * v[3]) / v[5]
            elif idx == 5 and v[4] != 0:
                out = (v[0] * v[1] - v[2] * v[3]) / v[4]
            else:
                continue
            values[keys[idx]] = out
            progress = True
    if len(values) < total:
        known_keys = set(values)
        unknown = [
            key
            for key in combinations(range(1, c.n + 1), c.k)
            if key not in known_keys
        ]
        raise SaturationStallError(unknown)
    final = {}
    for key in combinations(range(1, c.n + 1), c.k):
        v = values[key]
        if v <= 0 or v.denominator != 1:
            raise SolveValueError(f"p_{key} = {v} is not a positive integer")
        final[key] = int(v)
    return PlueckerTable(c.k, c.n, final)


def _binomial(n: int, k: int) -> int:
    out = 1
    for i in range(k):
        out = out * (n - i) // (i + 1)
    return out


@dataclass(frozen=True)
class RelationReport:
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def check_short_relations(t: PlueckerTable) -> RelationReport:
    """Evaluate every three-term relation instance on a complete table."""
    violations = []
    checked = 0
    for i_elems, quad in short_relation_instances(t.k, t.n):
        keys = _factor_keys(i_elems, quad)
        v = [t.values[key] for key in keys]
        checked += 1
        if v[0] * v[1] != v[2] * v[3] + v[4] * v[5]:
            violations.append((i_elems, quad, v[0] * v[1], v[2] * v[3] + v[4] * v[5]))
    return RelationReport(checked, tuple(violations))


def check_long_relations(t: PlueckerTable, exponent: str = "r") -> RelationReport:
    """Evaluate the alternating-sum relations for k = 3.

    With exponent="r" each term carries (-1)^r and every sum must vanish;
    exponent="n" substitutes the constant (-1)^n, a deliberately wrong
    variant kept as a negative control.
    """
    if t.k != 3:
        raise InvalidInputError("long relations implemented for k = 3 only")
    if exponent not in ("r", "n"):
        raise InvalidInputError(f"exponent must be 'r' or 'n', got {exponent!r}")
    ground = range(1, t.n + 1)
    violations = []
    checked = 0
    for i1, i2 in combinations(ground, 2):
        for js in combinations(ground, 4):
            total = 0
            for r in range(4):
                sign = (-1) ** r if exponent == "r" else (-1) ** t.n
                rest = js[:r] + js[r + 1 :]
                total += sign * t.signed((i1, i2, js[r])) * t.values[rest]
            checked += 1
            if total != 0:
                violations.append(((i1, i2), js, total))
    return RelationReport(checked, tuple(violations))


def table_to_json(t: PlueckerTable) -> str:
    values = {",".join(str(x) for x in key): t.values[key] for key in sorted(t.values)}
    return json.dumps({"k": t.k, "n": t.n, "values": values})


def table_from_json(text: str) -> PlueckerTable:
    try:
        doc = json.loads(text)
        k, n = int(doc["k"]), int(doc["n"])
        values = {
            tuple(int(x) for x in key.split(",")): int(v)
            for key, v in doc["values"].items()
        }
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed table document: {exc}") from None
    if len(values) != _binomial(n, k):
        raise InvalidInputError("table is not complete")
    return PlueckerTable(k, n, values)
