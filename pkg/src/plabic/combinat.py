"""Residues on a cyclically ordered ground set 1..n and k-subsets thereof.

Everything downstream (clusters, tilings, friezes) is built from the
operations here: cyclic interval tests, block decompositions, weak
separation, complements, and the sign normalization of index tuples.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, NamedTuple, Optional

from .errors import DegenerateInputError, InvalidInputError


def residue(x: int, n: int) -> int:
    """Reduce an integer to 1..n; the successor of n is 1."""
    return (x - 1) % n + 1


def succ(x: int, n: int) -> int:
    return x % n + 1


def pred(x: int, n: int) -> int:
    return (x - 2) % n + 1


def cyclic_gap(a: int, b: int, n: int) -> int:
    """Number of residues strictly between a and b walking forward from a."""
    return (b - a - 1) % n


def adjacent(a: int, b: int, n: int) -> bool:
    return succ(a, n) == b or succ(b, n) == a


class SignedIndex(NamedTuple):
    sign: int
    canonical: Optional["KSubset"]


@dataclass(frozen=True, order=True, slots=True)
class KSubset:
    """A k-subset of {1..n}, stored as a strictly increasing tuple."""

    n: int
    elems: tuple

    def __post_init__(self):
        e = self.elems
        if not 0 < len(e) < self.n:
            raise InvalidInputError(f"need 0 < k < n, got k={len(e)}, n={self.n}")
        if any(not 1 <= x <= self.n for x in e):
            raise InvalidInputError(f"entries out of 1..{self.n}: {e}")
        if any(e[i] >= e[i + 1] for i in range(len(e) - 1)):
            raise InvalidInputError(f"entries must be strictly increasing: {e}")

    @classmethod
    def of(cls, n: int, elems: Iterable[int]) -> "KSubset":
        return cls(n, tuple(sorted(elems)))

    @property
    def k(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __len__(self):
        return len(self.elems)

    def __contains__(self, x):
        return x in self.elems

    def runs(self) -> list[tuple]:
        """Maximal cyclic runs, each in walk order, sorted by run start."""
        members = set(self.elems)
        starts = sorted(x for x in self.elems if pred(x, self.n) not in members)
        out = []
        for s in starts:
            run = [s]
            while succ(run[-1], self.n) in members:
                run.append(succ(run[-1], self.n))
            out.append(tuple(run))
        return out

    def is_interval(self) -> bool:
        return len(self.runs()) == 1

    def complement(self) -> "KSubset":
        inside = set(self.elems)
        return KSubset(self.n, tuple(x for x in range(1, self.n + 1) if x not in inside))

    def label(self) -> str:
        """Display label: blocks in walk order, separated by a comma.

        Single-digit residues concatenate bare ("912,7"); larger ground sets
        separate elements with dots to stay unambiguous.
        """
        sep = "" if self.n <= 9 else "."
        if self.is_interval():
            return sep.join(str(x) for x in self.runs()[0])
        b1, b2 = block_decomposition(self) or (None, None)
        if b1 is None:
            return ",".join(sep.join(str(x) for x in run) for run in self.runs())
        return sep.join(str(x) for x in b1) + "," + sep.join(str(x) for x in b2)


def is_interval(s: KSubset) -> bool:
    """True iff the elements form one cyclically consecutive run mod n."""
    return s.is_interval()


def block_decomposition(s: KSubset):
    """Split a non-interval subset into its two maximal cyclic runs.

    Returns (B1, B2) with B1 the run containing the smallest element, or
    None when the subset has more than two runs. Raises on intervals:
    callers must branch on is_interval first.
    """
    runs = s.runs()
    if len(runs) == 1:
        raise DegenerateInputError(f"{s.elems} is an interval, no block split")
    if len(runs) > 2:
        return None
    first, second = runs
    if min(s.elems) in first:
        return first, second
    return second, first


def is_double_interval(s: KSubset) -> bool:
    return len(s.runs()) <= 2


def complement(s: KSubset) -> KSubset:
    return s.complement()


def crossing_witness(a: KSubset, b: KSubset):
    """Sorted 4-tuple s<t<u<v alternating between a\\b and b\\a, or None."""
    if a.n != b.n:
        raise InvalidInputError(f"ambient sizes differ: {a.n} vs {b.n}")
    if a.k != b.k:
        raise InvalidInputError(f"subset sizes differ: {a.k} vs {b.k}")
    only_a = set(a.elems) - set(b.elems)
    only_b = set(b.elems) - set(a.elems)
    for quad in combinations(sorted(only_a | only_b), 4):
        w, x, y, z = quad
        if (w in only_a and y in only_a and x in only_b and z in only_b) or (
            w in only_b and y in only_b and x in only_a and z in only_a
        ):
            return quad
    return None


def weakly_separated(a: KSubset, b: KSubset) -> bool:
    """True iff no cyclic s<t<u<v alternates between a\\b and b\\a."""
    return crossing_witness(a, b) is None


def normalize_index(entries: Iterable[int], n: int) -> SignedIndex:
    """Sort an index tuple, tracking the permutation sign.

    Returns (0, None) when an entry repeats; otherwise (+1 or -1, sorted
    subset) with the sign the parity of the sort.
    """
    tup = tuple(entries)
    if not tup:
        raise InvalidInputError("empty index tuple")
    if any(not 1 <= x <= n for x in tup):
        raise InvalidInputError(f"entries out of 1..{n}: {tup}")
    if len(set(tup)) != len(tup):
        return SignedIndex(0, None)
    inversions = sum(
        1
        for i in range(len(tup))
        for j in range(i + 1, len(tup))
        if tup[i] > tup[j]
    )
    sign = -1 if inversions % 2 else 1
    return SignedIndex(sign, KSubset.of(n, tup))
