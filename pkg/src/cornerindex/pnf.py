"""Prefix normal forms recovered from the corner index.

``pnf_a(s)`` is the unique binary string whose length-m prefix contains, for
every m, as many a's as the richest length-m substring of s; ``pnf_b`` is the
mirror for b's. Both are determined by the corner lists alone: consecutive
l_min entries give the run lengths of pnf_a directly (the stored a-counts are
its a-run prefix sums, the stored b-counts its b-run prefix sums shifted by
one), and l_max gives pnf_b the same way after swapping the roles of the two
letters.

Run counting convention: with runs in padded form (a leading zero a-run or a
trailing zero b-run kept so runs pair up), pnf_a of a non-empty string always
has exactly as many run pairs as l_min has entries. The empty string is the
one degenerate exception: its l_min holds the mandatory (0, 0) entry while
the empty string has no runs at all.
"""

from __future__ import annotations

from dataclasses import dataclass

from .corner import CornerIndex
from .rle import RunLengthEncoding, decode

__all__ = ["PnfPair", "rank", "select", "pnf_from_index", "verify_pnf_relations"]

_COMPLEMENT = str.maketrans("ab", "ba")


def rank(s: str, c: str, i: int) -> int:
    """Occurrences of character c in s[0:i]; i may run from 0 to len(s)."""
    if not 0 <= i <= len(s):
        raise ValueError(f"rank position {i} out of range 0..{len(s)}")
    return s.count(c, 0, i)


def select(s: str, c: str, i: int) -> int:
    """1-based position of the i-th occurrence of c (1 <= i <= count)."""
    if i < 1:
        raise ValueError(f"select ordinal must be positive, got {i}")
    pos = -1
    for _ in range(i):
        pos = s.find(c, pos + 1)
        if pos < 0:
            raise ValueError(
                f"select ordinal {i} exceeds the {s.count(c)} occurrences of {c!r}"
            )
    return pos + 1


@dataclass(frozen=True)
class PnfPair:
    """Both prefix normal forms of one string."""

    pnf_a: str
    pnf_b: str


def _runs_from_corners(points, total_second: int) -> RunLengthEncoding:
    """Invert corner pairs into padded run lengths.

    The stored first coordinates are prefix sums of the first-letter runs;
    the stored second coordinates, shifted one slot, prefix sums of the
    second-letter runs, closed off by the total.
    """
    firsts: list[int] = []
    seconds: list[int] = []
    prev_x = 0
    pts = list(points)
    for m, (x, y) in enumerate(pts):
        firsts.append(x - prev_x)
        prev_x = x
        nxt = pts[m + 1][1] if m + 1 < len(pts) else total_second
        seconds.append(nxt - y)
    return RunLengthEncoding(tuple(firsts), tuple(seconds))


def pnf_from_index(index: CornerIndex) -> PnfPair:
    """Materialize both prefix normal forms from the corner lists."""
    if index.n == 0:
        return PnfPair("", "")
    pnf_a = decode(_runs_from_corners(index.l_min, index.total_b))
    swapped = [(y, x) for (x, y) in index.l_max]
    mirror = decode(_runs_from_corners(swapped, index.total_a))
    return PnfPair(pnf_a, mirror.translate(_COMPLEMENT))


def verify_pnf_relations(index: CornerIndex, pnfs: PnfPair) -> bool:
    """Check the identities tying the normal forms back to the index.

    For every length m the a-count of pnf_a's m-prefix must equal the
    richest a-count over length-m substrings; the position of the i-th a in
    pnf_a locates the minimal-b staircase, and the position of the i+1-th a
    in pnf_b the maximal-b staircase (whose final value is the b total).
    """
    pnf_a, pnf_b = pnfs.pnf_a, pnfs.pnf_b
    if len(pnf_a) != index.n or len(pnf_b) != index.n:
        return False
    max_a = index.length_tables().max_a
    for m in range(index.n + 1):
        if rank(pnf_a, "a", m) != max_a[m]:
            return False
    if index.bmin(0) != 0:
        return False
    for i in range(1, index.total_a + 1):
        if index.bmin(i) != select(pnf_a, "a", i) - i:
            return False
    for i in range(index.total_a):
        if index.bmax(i) != select(pnf_b, "a", i + 1) - (i + 1):
            return False
    if index.bmax(index.total_a) != index.total_b:
        return False
    return True
