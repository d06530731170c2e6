"""Arcs, polygon tilings, snake triangulations and quiddity counts.

A double-interval subset projects to two diagonals of the n-gon: the
lower arc joins its block starts, the upper arc its block ends. Rows of a
rectangular cluster project to tilings with exactly two non-triangle
tiles, and the rows together stack into a superimposed triangulation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Optional

from .cluster import Cluster, is_rectangular, lattice_rows, validate_cluster
from .combinat import KSubset, adjacent, block_decomposition, pred, residue, succ
from .errors import InvalidInputError, TilingError

LOWER = "lower"
UPPER = "upper"

Arc = tuple  # (a, b) with a < b, a true diagonal of the n-gon


def arc(a: int, b: int, n: int) -> Arc:
    lo, hi = min(a, b), max(a, b)
    if lo == hi or adjacent(lo, hi, n):
        raise InvalidInputError(f"({a},{b}) is not a diagonal of the {n}-gon")
    return (lo, hi)


def arcs_cross(x: Arc, y: Arc) -> bool:
    """Strict interior crossing; shared endpoints do not cross."""
    a, b = x
    c, d = y
    if len({a, b, c, d}) < 4:
        return False
    return (a < c < b < d) or (c < a < d < b)


def lower_arc(s: KSubset) -> Arc:
    """Diagonal joining the two block starts of a double-interval subset."""
    blocks = block_decomposition(s)
    if blocks is None:
        raise InvalidInputError(f"{s.label()} is not a double interval")
    b1, b2 = blocks
    return arc(b1[0], b2[0], s.n)


def upper_arc(s: KSubset) -> Arc:
    """Diagonal joining the two block ends of a double-interval subset."""
    blocks = block_decomposition(s)
    if blocks is None:
        raise InvalidInputError(f"{s.label()} is not a double interval")
    b1, b2 = blocks
    return arc(b1[-1], b2[-1], s.n)


def member_arc(s: KSubset, side: str) -> Arc:
    if side == LOWER:
        return lower_arc(s)
    if side == UPPER:
        return upper_arc(s)
    raise InvalidInputError(f"side must be lower or upper, got {side!r}")


def dissection_faces(n: int, arcs: Iterable[Arc]) -> list[tuple]:
    """Faces of the n-gon cut along pairwise non-crossing diagonals."""
    arcs = sorted(set(arcs))
    for i, x in enumerate(arcs):
        for y in arcs[i + 1 :]:
            if arcs_cross(x, y):
                raise TilingError(f"arcs {x} and {y} cross")

    def split(poly: tuple, diags: list) -> list:
        if not diags:
            return [poly]
        a, b = diags[0]
        ia, ib = poly.index(a), poly.index(b)
        if ia > ib:
            ia, ib = ib, ia
        first, second = poly[ia : ib + 1], poly[ib:] + poly[: ia + 1]
        rest = diags[1:]
        in_first = [d for d in rest if d[0] in first and d[1] in first]
        in_second = [d for d in rest if d not in in_first]
        return split(first, in_first) + split(second, in_second)

    return split(tuple(range(1, n + 1)), arcs)


@dataclass(frozen=True)
class Tiling:
    """A dissection with one (b+2)-gon, one (r+2)-gon and triangles else."""

    n: int
    b: int
    r: int
    arcs: frozenset


def validate_tiling(n: int, b: int, r: int, arcs: Iterable[Arc]) -> Tiling:
    arcs = frozenset(arcs)
    sizes = sorted(len(f) for f in dissection_faces(n, arcs))
    for gon in sorted((b + 2, r + 2), reverse=True):
        if gon not in sizes:
            raise TilingError(f"no {gon}-gon tile: face sizes {sizes}")
        sizes.remove(gon)
    if any(sz != 3 for sz in sizes):
        raise TilingError(f"non-triangular leftover tiles: {sizes}")
    return Tiling(n, b, r, arcs)


def row_tiling(c: Cluster, l: int) -> Tiling:
    """The (l, k-l)-tiling carried by row l of the lattice interior."""
    if not 1 <= l <= c.k - 1:
        raise InvalidInputError(f"row index {l} outside 1..{c.k - 1}")
    row = lattice_rows(c)[l - 1]
    arcs = [lower_arc(s) for s in row]
    if len(set(arcs)) != len(arcs):
        raise TilingError(f"duplicate lower arcs in row {l}")
    return validate_tiling(c.n, l, c.k - l, arcs)


def tilings_noncrossing(t1: Tiling, t2: Tiling) -> bool:
    """Crossings are tolerated only between arcs with adjacent endpoints."""
    if t1.n != t2.n:
        raise InvalidInputError("tilings of different polygons")
    n = t1.n
    for x in t1.arcs:
        for y in t2.arcs:
            if arcs_cross(x, y) and not any(
                adjacent(p, q, n) for p in x for q in y
            ):
                return False
    return True


@dataclass(frozen=True)
class SuperimposedTriangulation:
    n: int
    k: int
    side: str
    layers: tuple  # layer j is a (j, k-j)-tiling


def superimposed_from_cluster(c: Cluster, side: str = LOWER) -> SuperimposedTriangulation:
    """Stack the per-row tilings of a rectangular cluster and check that
    consecutive layers only cross with adjacent endpoints."""
    if not is_rectangular(c):
        raise InvalidInputError("cluster is not rectangular")
    layers = []
    for l, row in enumerate(lattice_rows(c), start=1):
        arcs = [member_arc(s, side) for s in row]
        if len(set(arcs)) != len(arcs):
            raise TilingError(f"duplicate {side} arcs in row {l}")
        layers.append(validate_tiling(c.n, l, c.k - l, arcs))
    for a, b in zip(layers, layers[1:]):
        if not tilings_noncrossing(a, b):
            raise TilingError("consecutive layers cross without adjacent endpoints")
    return SuperimposedTriangulation(c.n, c.k, side, tuple(layers))


def snake_triangulation(n: int, rotation: int = 0) -> frozenset:
    """Zig-zag triangulation of the n-gon under the default labeling; a
    cyclic relabeling can be applied via `rotation`."""
    if n < 4:
        raise InvalidInputError(f"need n >= 4, got {n}")
    arcs = []
    p, q = 1, n - 1
    arcs.append((p, q))
    while len(arcs) < n - 3:
        p += 1
        arcs.append((p, q))
        if len(arcs) < n - 3:
            q -= 1
            arcs.append((p, q))
    rot = lambda x: residue(x + rotation, n)
    return frozenset(arc(rot(a), rot(b), n) for a, b in arcs)


def quadrilateral_cluster(n: int, rotation: int = 0) -> Cluster:
    """The rectangular (3,n) cluster generated by the snake triangulation:
    intervals plus every non-interval double-interval 3-subset whose lower
    arc is a snake diagonal."""
    if n < 6:
        raise InvalidInputError(f"need n >= 6, got {n}")
    members = set()
    for s in range(1, n + 1):
        members.add(KSubset.of(n, (s, succ(s, n), succ(succ(s, n), n))))
    for a, b in snake_triangulation(n, rotation):
        for cand in ((a, succ(a, n), b), (a, b, succ(b, n))):
            if len(set(cand)) != 3:
                continue
            sub = KSubset.of(n, cand)
            if sub.is_interval():
                continue
            if block_decomposition(sub) and lower_arc(sub) == (a, b):
                members.add(sub)
    c = validate_cluster(3, n, members)
    assert is_rectangular(c)
    return c


def arc_quiddity(c: Cluster, side: str = LOWER) -> tuple:
    """Per-vertex arc counts, plus one: value[i] = 1 + #(member arcs at i),
    counted with multiplicity over non-interval members."""
    if not is_rectangular(c):
        raise InvalidInputError("cluster is not rectangular")
    counts = [0] * (c.n + 1)
    for s in c.non_intervals():
        for v in member_arc(s, side):
            counts[v] += 1
    return tuple(1 + counts[i] for i in range(1, c.n + 1))


def cc_quiddity_from_triangulation(arcs: Iterable[Arc], n: int) -> tuple:
    """Triangle counts at each vertex of a full triangulation."""
    arcs = frozenset(arcs)
    faces = dissection_faces(n, arcs)
    if len(arcs) != n - 3 or any(len(f) != 3 for f in faces):
        raise TilingError(f"{sorted(arcs)} is not a triangulation of the {n}-gon")
    counts = [0] * (n + 1)
    for f in faces:
        for v in f:
            counts[v] += 1
    return tuple(counts[i] for i in range(1, n + 1))


# --- SVG export ------------------------------------------------------------

_SVG_SIZE = 640
_RADIUS = 240


def _vertex_xy(i: int, n: int, radius: float = _RADIUS):
    # vertex 1 at 12 o'clock, labels increasing clockwise
    t = (i - 1) * 2.0 * math.pi / n
    cx = cy = _SVG_SIZE / 2
    return cx + radius * math.sin(t), cy - radius * math.cos(t)


def _fmt(x: float) -> str:
    return f"{x:.2f}"


def superimposed_svg(
    c: Cluster, side: str = LOWER, digest: Optional[str] = None
) -> str:
    """Polygon figure of all member arcs on one side, with multiplicity
    drawn as parallel segments and the quiddity written outside each
    vertex."""
    quiddity = arc_quiddity(c, side)
    per_arc = {}
    for s in c.non_intervals():
        per_arc.setdefault(member_arc(s, side), []).append(s)
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
    ]
    if digest is not None:
        lines.append(f"<!-- input sha256: {digest} -->")
    lines.append(
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_SIZE}" '
        f'height="{_SVG_SIZE}" viewBox="0 0 {_SVG_SIZE} {_SVG_SIZE}">'
    )
    boundary = " ".join(
        f"{_fmt(x)},{_fmt(y)}"
        for x, y in (_vertex_xy(i, c.n) for i in range(1, c.n + 1))
    )
    lines.append(
        f'  <polygon points="{boundary}" fill="none" stroke="black" stroke-width="1.5"/>'
    )
    for (a, b), owners in sorted(per_arc.items()):
        x1, y1 = _vertex_xy(a, c.n)
        x2, y2 = _vertex_xy(b, c.n)
        length = math.hypot(x2 - x1, y2 - y1)
        ux, uy = (y2 - y1) / length, -(x2 - x1) / length
        m = len(owners)
        for idx in range(m):
            off = 3.0 * (idx - (m - 1) / 2.0)
            lines.append(
                f'  <line x1="{_fmt(x1 + off * ux)}" y1="{_fmt(y1 + off * uy)}" '
                f'x2="{_fmt(x2 + off * ux)}" y2="{_fmt(y2 + off * uy)}" '
                f'stroke="black" stroke-width="1.2"/>'
            )
    for i in range(1, c.n + 1):
        x, y = _vertex_xy(i, c.n)
        lines.append(f'  <circle cx="{_fmt(x)}" cy="{_fmt(y)}" r="3" fill="black"/>')
        lx, ly = _vertex_xy(i, c.n, _RADIUS + 18)
        lines.append(
            f'  <text x="{_fmt(lx)}" y="{_fmt(ly)}" font-size="14" '
            f'text-anchor="middle" dominant-baseline="middle">{i}</text>'
        )
        qx, qy = _vertex_xy(i, c.n, _RADIUS + 42)
        lines.append(
            f'  <text x="{_fmt(qx)}" y="{_fmt(qy)}" font-size="16" font-weight="bold" '
            f'text-anchor="middle" dominant-baseline="middle">{quiddity[i - 1]}</text>'
        )
    lines.append("</svg>")
    return "\n".join(lines) + "\n"
