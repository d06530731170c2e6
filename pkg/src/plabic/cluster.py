"""Clusters of pairwise non-crossing k-subsets, their cliques and quivers.

A cluster is a maximal pairwise non-crossing collection; maximality is
certified by the member count (k-1)(n-k-1)+n. White cliques collect
members sharing a common (k-1)-subset, black cliques members inside a
common (k+1)-subset; together they orient the arrows of the dimer quiver.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Optional

from .combinat import (
    KSubset,
    block_decomposition,
    crossing_witness,
    cyclic_gap,
    is_double_interval,
    pred,
    succ,
)
from .errors import (
    AmbiguousMutationError,
    ClusterSizeError,
    CrossingPairError,
    DegenerateInputError,
    FrozenSubsetError,
    InvalidInputError,
    NotMutableError,
    NotQuadrivalentError,
    OrientationConflictError,
)

WHITE = "white"
BLACK = "black"

HORIZONTAL = "horizontal"
VERTICAL = "vertical"
CORNER = "corner"
INTERNAL = "internal"
INTERVAL = "interval"


def expected_size(k: int, n: int) -> int:
    return (k - 1) * (n - k - 1) + n


def all_intervals(k: int, n: int) -> list[KSubset]:
    """The n cyclic intervals of size k."""
    out = []
    for s in range(1, n + 1):
        run = [s]
        while len(run) < k:
            run.append(succ(run[-1], n))
        out.append(KSubset.of(n, run))
    return out


@dataclass(frozen=True)
class Cluster:
    """A validated maximal non-crossing collection; build via validate_cluster."""

    k: int
    n: int
    members: frozenset

    @property
    def sorted_members(self) -> tuple:
        return tuple(sorted(self.members))

    def __contains__(self, s: KSubset) -> bool:
        return s in self.members

    def non_intervals(self) -> list[KSubset]:
        return [s for s in self.sorted_members if not s.is_interval()]


def validate_cluster(k: int, n: int, members: Iterable[KSubset]) -> Cluster:
    """Check pairwise non-crossing and the maximality count, then wrap.

    Raises CrossingPairError with the witness 4-tuple on the first crossing
    pair, ClusterSizeError on a wrong member count.
    """
    ms = sorted(set(members))
    for s in ms:
        if s.n != n or s.k != k:
            raise InvalidInputError(f"{s} is not a {k}-subset of 1..{n}")
    for a, b in combinations(ms, 2):
        w = crossing_witness(a, b)
        if w is not None:
            raise CrossingPairError(a, b, w)
    want = expected_size(k, n)
    if len(ms) != want:
        raise ClusterSizeError(
            f"{len(ms)} members, a maximal ({k},{n}) collection has {want}"
        )
    missing = [s for s in all_intervals(k, n) if s not in set(ms)]
    if missing:
        raise InvalidInputError(f"intervals missing from collection: {missing}")
    return Cluster(k, n, frozenset(ms))


def complement_cluster(c: Cluster) -> Cluster:
    """The (n-k, n) cluster of member complements."""
    return validate_cluster(c.n - c.k, c.n, [s.complement() for s in c.members])


@dataclass(frozen=True)
class Clique:
    color: str
    defining: KSubset
    members: tuple  # cyclic order, ascending by extra/removed element

    def is_boundary(self) -> bool:
        return any(m.is_interval() for m in self.members)


def cliques(c: Cluster) -> list[Clique]:
    """All white and black cliques, by exhaustive scan over defining subsets."""
    out = []
    member_set = c.members
    for kk in combinations(range(1, c.n + 1), c.k - 1):
        ksub = set(kk)
        hits = [m for m in c.sorted_members if ksub <= set(m.elems)]
        if len(hits) >= 3:
            hits.sort(key=lambda m: (set(m.elems) - ksub).pop())
            out.append(Clique(WHITE, KSubset.of(c.n, kk), tuple(hits)))
    for ll in combinations(range(1, c.n + 1), c.k + 1):
        lsub = set(ll)
        hits = [m for m in c.sorted_members if set(m.elems) <= lsub]
        if len(hits) >= 3:
            hits.sort(key=lambda m: (lsub - set(m.elems)).pop())
            out.append(Clique(BLACK, KSubset.of(c.n, ll), tuple(hits)))
    assert all(h in member_set for cl in out for h in cl.members)
    return out


@dataclass(frozen=True)
class Quiver:
    k: int
    n: int
    vertices: tuple
    frozen_vertices: frozenset
    arrows: frozenset  # ordered (source, target) pairs

    def is_frozen(self, v: KSubset) -> bool:
        return v in self.frozen_vertices

    def in_arrows(self, v: KSubset) -> list:
        return sorted(a for a in self.arrows if a[1] == v)

    def out_arrows(self, v: KSubset) -> list:
        return sorted(a for a in self.arrows if a[0] == v)

    def degree(self, v: KSubset) -> int:
        return sum(1 for a in self.arrows if v in a)


def quiver_from_cluster(c: Cluster) -> Quiver:
    """Vertices are members (intervals frozen); cliques orient the arrows.

    White cliques run ascending through their extra elements, black cliques
    descending through their removed elements; the two prescriptions must
    agree wherever they overlap.
    """
    arrows = set()
    for cl in cliques(c):
        m = len(cl.members)
        for t in range(m):
            if cl.color == WHITE:
                arc = (cl.members[t], cl.members[(t + 1) % m])
            else:
                arc = (cl.members[(t + 1) % m], cl.members[t])
            if (arc[1], arc[0]) in arrows:
                raise OrientationConflictError(
                    f"opposite orientations induced on {arc[0].label()} -- {arc[1].label()}"
                )
            arrows.add(arc)
    frozen = frozenset(s for s in c.members if s.is_interval())
    return Quiver(c.k, c.n, c.sorted_members, frozen, frozenset(arrows))


def strip_frozen_frozen(q: Quiver) -> Quiver:
    """Drop arrows joining two frozen vertices (ice-quiver normalization)."""
    keep = frozenset(
        a for a in q.arrows if not (q.is_frozen(a[0]) and q.is_frozen(a[1]))
    )
    return Quiver(q.k, q.n, q.vertices, q.frozen_vertices, keep)


def rename_vertex(q: Quiver, old: KSubset, new: KSubset) -> Quiver:
    swap = lambda v: new if v == old else v
    return Quiver(
        q.k,
        q.n,
        tuple(sorted(swap(v) for v in q.vertices)),
        frozenset(swap(v) for v in q.frozen_vertices),
        frozenset((swap(a), swap(b)) for a, b in q.arrows),
    )


def fz_mutate_quiver(q: Quiver, j: KSubset) -> Quiver:
    """Three-step quiver mutation at a quadrivalent mutable vertex j.

    1. add a composite arrow for every path through j, 2. reverse the
    arrows at j, 3. cancel two-cycles. Composites that would anti-parallel
    an existing arrow cancel immediately with it.
    """
    if j not in q.vertices:
        raise InvalidInputError(f"{j} is not a vertex")
    if q.is_frozen(j):
        raise FrozenSubsetError(f"{j.label()} is frozen")
    ins = [a for a, b in q.arrows if b == j]
    outs = [b for a, b in q.arrows if a == j]
    if len(ins) != 2 or len(outs) != 2:
        raise NotQuadrivalentError(
            f"{j.label()} has {len(ins)} in- and {len(outs)} out-arrows"
        )
    arrows = set(q.arrows)
    for i in ins:
        for t in outs:
            assert i != t, "two-cycle through the mutation vertex"
            if (t, i) in arrows:
                arrows.remove((t, i))
            else:
                assert (i, t) not in arrows, "composite would double an arrow"
                arrows.add((i, t))
    flipped = set()
    for a, b in arrows:
        flipped.add((b, a) if j in (a, b) else (a, b))
    assert not any((b, a) in flipped for a, b in flipped), "two-cycle survived"
    return Quiver(q.k, q.n, q.vertices, q.frozen_vertices, frozenset(flipped))


def mutation_quadruples(c: Cluster, j: KSubset):
    """Exchange data (I, a, b, c, d, replacement) available at j."""
    n = c.n
    found = []
    for i_elems in combinations(j.elems, c.k - 2):
        rest = [x for x in j.elems if x not in i_elems]
        a, cc = rest
        in_arc = lambda lo, hi: [
            ((lo + t) % n) + 1
            for t in range(cyclic_gap(lo, hi, n))
        ]
        for b in in_arc(a, cc):
            if b in j:
                continue
            for d in in_arc(cc, a):
                if d in j:
                    continue
                witnesses = [
                    KSubset.of(n, i_elems + (a, b)),
                    KSubset.of(n, i_elems + (cc, d)),
                    KSubset.of(n, i_elems + (a, d)),
                    KSubset.of(n, i_elems + (b, cc)),
                ]
                if all(w in c.members for w in witnesses):
                    found.append(
                        (i_elems, a, b, cc, d, KSubset.of(n, i_elems + (b, d)))
                    )
    return found


def mutate_subset(c: Cluster, j: KSubset) -> Cluster:
    """Replace j by the opposite corner of its exchange quadruple.

    Requires j in the cluster and non-interval; fails loudly when no
    quadruple exists or when distinct quadruples disagree on the
    replacement. The result is re-validated.
    """
    if j not in c.members:
        raise InvalidInputError(f"{j.label()} is not a member")
    if j.is_interval():
        raise FrozenSubsetError(f"{j.label()} is an interval, frozen")
    quads = mutation_quadruples(c, j)
    if not quads:
        raise NotMutableError(f"no exchange quadruple at {j.label()}")
    replacements = {q[-1] for q in quads}
    if len(replacements) > 1:
        raise AmbiguousMutationError(
            f"{j.label()} admits replacements {sorted(r.label() for r in replacements)}"
        )
    new = replacements.pop()
    return validate_cluster(c.k, c.n, (c.members - {j}) | {new})


def mutable_positions(c: Cluster) -> list[KSubset]:
    return [s for s in c.non_intervals() if mutation_quadruples(c, s)]


def is_rectangular(c: Cluster) -> bool:
    """True iff every member is a union of at most two cyclic runs."""
    return all(is_double_interval(s) for s in c.members)


def classify_edge_subset(c: Cluster, s: KSubset) -> str:
    """Horizontal/vertical/corner/internal position of a member of a
    rectangular cluster, interval members classify as "interval"."""
    if s not in c.members:
        raise InvalidInputError(f"{s.label()} is not a member")
    if s.is_interval():
        return INTERVAL
    blocks = block_decomposition(s)
    if blocks is None:
        raise InvalidInputError(f"{s.label()} is not a double interval")
    b1, b2 = blocks
    horizontal = max(len(b1), len(b2)) == c.k - 1
    g1 = cyclic_gap(b1[-1], b2[0], c.n)
    g2 = cyclic_gap(b2[-1], b1[0], c.n)
    vertical = 1 in (g1, g2)
    if horizontal and vertical:
        return CORNER
    if horizontal:
        return HORIZONTAL
    if vertical:
        return VERTICAL
    return INTERNAL


def row_sort_key(s: KSubset):
    b1, b2 = block_decomposition(s)
    return ((b1[0] - b2[0]) % s.n, s.elems)


def lattice_rows(c: Cluster) -> list[list]:
    """Rows of the lattice interior of a rectangular cluster.

    Row l collects the non-interval members whose min-free block has size
    l; within a row members run left to right by increasing cyclic offset
    between their two block starts.
    """
    if not is_rectangular(c):
        raise InvalidInputError("cluster is not rectangular")
    rows = [[] for _ in range(c.k - 1)]
    for s in c.non_intervals():
        b1, b2 = block_decomposition(s)
        rows[len(b2) - 1].append(s)
    for row in rows:
        row.sort(key=row_sort_key)
    return rows


def square_of_clique(clique: Clique) -> tuple:
    """The four double-interval candidates of an internal clique, in cyclic
    order; opposite corners sit two apart."""
    if clique.is_boundary():
        raise InvalidInputError("boundary cliques have no associated square")
    d = clique.defining
    n = d.n
    blocks = block_decomposition(d)
    assert blocks is not None, "internal clique with >2 blocks"
    b1, b2 = blocks
    if clique.color == WHITE:
        distinguished = (succ(b1[-1], n), pred(b2[0], n), succ(b2[-1], n), pred(b1[0], n))
        corners = tuple(KSubset.of(n, d.elems + (x,)) for x in distinguished)
    else:
        distinguished = (b1[-1], b2[0], b2[-1], b1[0])
        corners = tuple(
            KSubset.of(n, tuple(x for x in d.elems if x != y)) for y in distinguished
        )
    assert len(set(corners)) == 4
    return corners


def opposite_in_square(c: Cluster, s: KSubset, clique: Clique) -> KSubset:
    """Diagonally opposite subset of s in the clique's square; the result
    need not belong to the cluster."""
    corners = square_of_clique(clique)
    if s not in corners:
        raise InvalidInputError(f"{s.label()} is not in the square of {clique.defining.label()}")
    return corners[(corners.index(s) + 2) % 4]


@dataclass(frozen=True)
class PairingCheck:
    subject: KSubset
    option_a: KSubset
    option_b: KSubset
    in_a: bool
    in_b: bool

    @property
    def ok(self) -> bool:
        return self.in_a != self.in_b


@dataclass(frozen=True)
class PairingReport:
    subject: KSubset
    checks: tuple

    @property
    def ok(self) -> bool:
        return all(ch.ok for ch in self.checks)


def check_prop_pairing(c: Cluster, s: KSubset) -> PairingReport:
    """For each block of size >= 2, exactly one of the two shifted
    neighbours of s must be a member; reports which."""
    if s.is_interval():
        raise InvalidInputError(f"{s.label()} is an interval")
    blocks = block_decomposition(s)
    if blocks is None:
        raise InvalidInputError(f"{s.label()} is not a double interval")
    n = c.n
    checks = []
    for x, y in (blocks, blocks[::-1]):
        if len(x) < 2:
            continue
        shrink_last = x[:-1]
        shrink_first = x[1:]
        opt_a = KSubset.of(n, shrink_last + (pred(y[0], n),) + y)
        opt_b = KSubset.of(n, shrink_first + y + (succ(y[-1], n),))
        checks.append(
            PairingCheck(s, opt_a, opt_b, opt_a in c.members, opt_b in c.members)
        )
    return PairingReport(s, tuple(checks))


# --- serialization ---------------------------------------------------------


def cluster_to_json(c: Cluster) -> str:
    subsets = [list(s.elems) for s in c.sorted_members]
    return json.dumps({"k": c.k, "n": c.n, "subsets": subsets})


def cluster_from_json(text: str) -> Cluster:
    try:
        doc = json.loads(text)
        k, n = int(doc["k"]), int(doc["n"])
        subsets = [KSubset.of(n, elems) for elems in doc["subsets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInputError(f"malformed cluster document: {exc}") from None
    return validate_cluster(k, n, subsets)


def input_digest(text: str) -> str:
    return hashlib.sha256(text.encode("utf-8")).hexdigest()


def quiver_dot(q: Quiver, digest: Optional[str] = None) -> str:
    """Deterministic DOT rendering: boxes for frozen vertices, ellipses for
    mutable ones, edges sorted by label."""
    lines = ["digraph quiver {"]
    if digest is not None:
        lines.insert(0, f"// input sha256: {digest}")
    for v in q.vertices:
        shape = "box" if q.is_frozen(v) else "ellipse"
        lines.append(f'  "{v.label()}" [shape={shape}];')
    for a, b in sorted(q.arrows, key=lambda e: (e[0].elems, e[1].elems)):
        lines.append(f'  "{a.label()}" -> "{b.label()}";')
    lines.append("}")
    return "\n".join(lines) + "\n"
