"""SL2 and SL3 frieze patterns: building, validating, rendering.

Entries are indexed F(r, i) with i cyclic mod n and r running from a zero
border row at the top to a zero border row at the bottom. For a table of
Plücker values the anchors are F(r, i) = p_{i-1, i+r} (SL2) and
F(r, i) = p_{i, i+1, i+r+2} (SL3); border rows of zeros and ones then fall
out of the index rules for repeated and consecutive entries.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterable, Sequence

from .cluster import Cluster
from .combinat import residue
from .errors import FriezeBuildError, InvalidInputError
from .pluecker import PlueckerTable, solve_from_cluster

SL2 = "SL2"
SL3 = "SL3"


@dataclass(frozen=True)
class Frieze:
    """Integer array with n-periodic rows; stores borders explicitly."""

    variant: str
    n: int
    rows: dict  # r -> tuple of n entries

    @property
    def width(self) -> int:
        return self.n - 3 if self.variant == SL2 else self.n - 4

    @property
    def row_range(self) -> range:
        # zero border rows sit at both ends
        top, bottom = -1, self.n - 1 if self.variant == SL2 else self.n - 2
        return range(top, bottom + 1)

    def entry(self, r: int, i: int) -> int:
        return self.rows[r][(i - 1) % self.n]

    def interior_rows(self) -> list:
        return [self.rows[r] for r in range(1, self.width + 1)]


def _wrap_rows(variant: str, n: int, interior: Sequence[Sequence[int]]) -> Frieze:
    rows = {r: tuple(vals) for r, vals in enumerate(interior, start=1)}
    zeros, ones = (0,) * n, (1,) * n
    last = n - 1 if variant == SL2 else n - 2
    rows[-1] = rows[last] = zeros
    rows[0] = rows[last - 1] = ones
    f = Frieze(variant, n, rows)
    assert len(rows) == len(f.row_range)
    return f


def build_sl2_from_quiddity(q: Sequence[int]) -> Frieze:
    """Grow a frieze downward from row 1 = q by the diamond rule.

    Every produced entry must be a positive integer and the penultimate
    row must come out all ones; otherwise q is not a triangle-count
    sequence and the build fails.
    """
    n = len(q)
    if n < 4:
        raise InvalidInputError(f"need n >= 4, got {n}")
    if any(not isinstance(x, int) or x < 1 for x in q):
        raise FriezeBuildError(f"quiddity entries must be positive integers: {q}")
    rows = [(1,) * n, tuple(q)]
    for r in range(2, n - 1):
        prev, above = rows[r - 1], rows[r - 2]
        new = []
        for i in range(n):
            num = prev[i] * prev[(i + 1) % n] - 1
            den = above[(i + 1) % n]
            if num % den != 0:
                raise FriezeBuildError(f"non-integral entry at row {r}")
            val = num // den
            if val < 1 and r <= n - 3:
                raise FriezeBuildError(f"non-positive entry {val} at row {r}")
            new.append(val)
        rows.append(tuple(new))
    if rows[n - 2] != (1,) * n:
        raise FriezeBuildError(f"bottom border is not all ones: {rows[n - 2]}")
    return _wrap_rows(SL2, n, rows[1 : n - 2])


def sl2_from_table(t: PlueckerTable) -> Frieze:
    """Frieze of a Gr(2,n) value table, entry (r, i) = p_{i-1, i+r}."""
    if t.k != 2:
        raise InvalidInputError(f"need a k=2 table, got k={t.k}")
    n = t.n
    interior = [
        tuple(
            t.get((residue(i - 1, n), residue(i + r, n))) for i in range(1, n + 1)
        )
        for r in range(1, n - 2)
    ]
    return _wrap_rows(SL2, n, interior)


def sl3_from_table(t: PlueckerTable) -> Frieze:
    """Frieze of a Gr(3,n) value table, entry (r, i) = p_{i, i+1, i+r+2}."""
    if t.k != 3:
        raise InvalidInputError(f"need a k=3 table, got k={t.k}")
    n = t.n
    interior = []
    for r in range(1, n - 3):
        row = []
        for i in range(1, n + 1):
            triple = (i, residue(i + 1, n), residue(i + r + 2, n))
            row.append(0 if len(set(triple)) < 3 else t.get(triple))
        interior.append(tuple(row))
    return _wrap_rows(SL3, n, interior)


def build_sl3_from_cluster(c: Cluster) -> Frieze:
    """Solve the cluster to a value table and lay it out as a frieze."""
    if c.k != 3:
        raise InvalidInputError(f"need a k=3 cluster, got k={c.k}")
    f = sl3_from_table(solve_from_cluster(c))
    report = validate_sl3(f)
    if not report.ok:
        raise FriezeBuildError(f"built frieze fails validation: {report.violations[:3]}")
    return f


@dataclass(frozen=True)
class FriezeReport:
    checked: int
    violations: tuple

    @property
    def ok(self) -> bool:
        return not self.violations


def _border_violations(f: Frieze) -> list:
    out = []
    top, bottom = f.row_range.start, f.row_range.stop - 1
    zeros, ones = (0,) * f.n, (1,) * f.n
    for r, want in ((top, zeros), (bottom, zeros), (top + 1, ones), (bottom - 1, ones)):
        if f.rows[r] != want:
            out.append(("border", r, f.rows[r]))
    for r in range(1, f.width + 1):
        for i in range(1, f.n + 1):
            if f.entry(r, i) < 1:
                out.append(("positivity", r, i))
    return out


def validate_sl2(f: Frieze) -> FriezeReport:
    """Border, positivity, and the unimodular diamond rule everywhere."""
    if f.variant != SL2:
        raise InvalidInputError("not an SL2 frieze")
    violations = _border_violations(f)
    checked = 0
    for r in range(0, f.n - 1):
        for i in range(1, f.n + 1):
            checked += 1
            lhs = f.entry(r, i) * f.entry(r, i + 1)
            rhs = f.entry(r - 1, i + 1) * f.entry(r + 1, i)
            if lhs - rhs != 1:
                violations.append(("diamond", r, i, lhs - rhs))
    return FriezeReport(checked, tuple(violations))


def validate_sl3(f: Frieze) -> FriezeReport:
    """Border, positivity, and unit determinants of all 3x3 windows.

    The window anchored at (r, i) is M[s][t] = F(r+s-t, i+t): its main
    diagonal runs along row r, its columns drop down the frieze.
    """
    if f.variant != SL3:
        raise InvalidInputError("not an SL3 frieze")
    violations = _border_violations(f)
    checked = 0
    for r in range(1, f.n - 3):
        for i in range(1, f.n + 1):
            m = [[f.entry(r + s - t, i + t) for t in range(3)] for s in range(3)]
            det = (
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            )
            checked += 1
            if det != 1:
                violations.append(("window", r, i, det))
    return FriezeReport(checked, tuple(violations))


FORWARDS = "forwards"
REVERSE = "reverse"


def extract_quiddity(f: Frieze, kind: str) -> tuple:
    """Quiddity rows of an SL3 frieze built from a cluster table.

    The reverse sequence reads the final interior row, the forwards
    sequence the first, with the offsets that line both up with the
    per-vertex arc counts of a quadrilateral-type cluster.
    """
    if f.variant != SL3:
        raise InvalidInputError("quiddity extraction needs an SL3 frieze")
    if f.width < 1:
        raise InvalidInputError("frieze has no interior row")
    if kind == REVERSE:
        return tuple(f.entry(f.n - 4, i + 1) for i in range(1, f.n + 1))
    if kind == FORWARDS:
        return tuple(f.entry(1, i - 2) for i in range(1, f.n + 1))
    raise InvalidInputError(f"kind must be forwards or reverse, got {kind!r}")


def render(f: Frieze) -> str:
    """Fixed-width text, zero rows omitted, each row half-shifted from the
    one above so diamonds and windows align."""
    shown = range(0, f.row_range.stop - 1)  # drop the zero rows only
    cell = max(len(str(f.entry(r, i))) for r in shown for i in range(1, f.n + 1)) + 1
    half = cell
    cell *= 2
    lines = []
    for r in shown:
        pad = " " * (half * r)
        entries = (str(f.entry(r, i)).rjust(cell) for i in range(1, f.n + 1))
        lines.append((pad + "".join(entries)).rstrip())
    return "\n".join(lines) + "\n"


def frieze_to_json(f: Frieze) -> str:
    return json.dumps(
        {"variant": f.variant, "n": f.n, "rows": [list(row) for row in f.interior_rows()]}
    )


def frieze_from_json(text: str) -> Frieze:
    try:
        doc = json.loads(text)
        variant, n = doc["variant"], int(doc["n"])
        interior = [tuple(int(x) for x in row) for row in doc["rows"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed frieze document: {exc}") from None
    if variant not in (SL2, SL3):
        raise InvalidInputError(f"unknown variant {variant!r}")
    width = n - 3 if variant == SL2 else n - 4
    if len(interior) != width or any(len(row) != n for row in interior):
        raise InvalidInputError("frieze rows have the wrong shape")
    return _wrap_rows(variant, n, interior)
