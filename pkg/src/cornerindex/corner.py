"""Corner index: jumbled-occurrence queries on a binary string.

A query pair (x, y) "occurs" in s when some substring of s contains exactly
x a's and y b's. For each a-count x the achievable b-counts form a contiguous
interval [bmin(x), bmax(x)], and both endpoint functions are monotone
staircases. The index stores only the corners of those staircases:

* ``l_min`` holds (x, bmin(x)) at every x where bmin is about to step up,
  plus the final entry at x = total_a;
* ``l_max`` holds (x, bmax(x)) at every x where bmax has just stepped up,
  plus the mandatory entry at x = 0.

Both lists are strictly increasing in both coordinates, so a single binary
search recovers bmin (successor rule) or bmax (predecessor rule) for any x,
and a query is two such lookups.

Construction works on the run-length encoding alone. Every substring that
starts and ends with a full a-run realizes a candidate Parikh pair, and
l_min is exactly the set of candidates that survive a dominance filter
(keep pairs with the most a's for the fewest b's); l_max is built the same
way from spans of full b-runs with the dominance order mirrored. Candidates
are formed in constant time from prefix sums; the working list is a sorted
array probed with bisect, so each candidate costs one successor search and
the deletions it triggers are adjacent to the insertion point.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass, field
from itertools import accumulate
from typing import Iterable, Iterator, Sequence, Union

from .rle import RunLengthEncoding, encode

__all__ = [
    "ParikhVector",
    "dominates_min",
    "dominates_max",
    "CornerList",
    "CornerIndex",
    "BuildTrace",
    "LengthTables",
    "build_lmin",
    "build_lmax",
    "build_index",
    "index_from_rle",
    "lmin_candidates",
    "lmax_candidates",
    "assemble_lmin",
    "assemble_lmax",
    "length_tables",
]

# A Parikh vector of a binary string: (number of a's, number of b's).
ParikhVector = tuple[int, int]


def dominates_min(p: Sequence[int], q: Sequence[int]) -> bool:
    """True when p beats q for the lower staircase: at least as many a's
    with at most as many b's, and the pairs differ."""
    return (p[0], p[1]) != (q[0], q[1]) and p[0] >= q[0] and p[1] <= q[1]


def dominates_max(p: Sequence[int], q: Sequence[int]) -> bool:
    """True when p beats q for the upper staircase: at most as many a's
    with at least as many b's, and the pairs differ."""
    return (p[0], p[1]) != (q[0], q[1]) and p[0] <= q[0] and p[1] >= q[1]


class CornerList(Sequence):
    """Immutable list of (a_count, b_count) pairs, strictly increasing in
    both coordinates. Lookups are binary searches on the a-counts."""

    __slots__ = ("_xs", "_ys")

    def __init__(self, points: Iterable[Sequence[int]]):
        xs: list[int] = []
        ys: list[int] = []
        for p in points:
            xs.append(int(p[0]))
            ys.append(int(p[1]))
        if xs and (xs[0] < 0 or ys[0] < 0):
            raise ValueError("corner entries must be non-negative")
        for i in range(1, len(xs)):
            if xs[i] <= xs[i - 1] or ys[i] <= ys[i - 1]:
                raise ValueError(
                    "corner list must be strictly increasing in both coordinates"
                )
        self._xs = tuple(xs)
        self._ys = tuple(ys)

    # -- sequence protocol ------------------------------------------------

    def __len__(self) -> int:
        return len(self._xs)

    def __getitem__(self, i: Union[int, slice]):
        if isinstance(i, slice):
            return tuple(zip(self._xs[i], self._ys[i]))
        return (self._xs[i], self._ys[i])

    def __iter__(self) -> Iterator[ParikhVector]:
        return iter(zip(self._xs, self._ys))

    def __eq__(self, other) -> bool:
        if isinstance(other, CornerList):
            return self._xs == other._xs and self._ys == other._ys
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._xs, self._ys))

    def __repr__(self) -> str:
        return f"CornerList({list(self)!r})"

    # -- staircase lookups -------------------------------------------------

    @property
    def xs(self) -> tuple[int, ...]:
        return self._xs

    @property
    def ys(self) -> tuple[int, ...]:
        return self._ys

    def successor_y(self, x: int) -> int | None:
        """b-count stored at the smallest a-count >= x, if any."""
        i = bisect_left(self._xs, x)
        return self._ys[i] if i < len(self._xs) else None

    def predecessor_y(self, x: int) -> int | None:
        """b-count stored at the largest a-count <= x, if any."""
        i = bisect_right(self._xs, x) - 1
        return self._ys[i] if i >= 0 else None


@dataclass
class BuildTrace:
    """Optional record of one list construction.

    ``candidates`` is every inspected pair in generation order (including
    pairs skipped because they carry no run content), ``inserted`` and
    ``deleted`` are the mutation events in order. Coordinates are in the
    list's natural (a_count, b_count) orientation.
    """

    candidates: list[ParikhVector] = field(default_factory=list)
    inserted: list[ParikhVector] = field(default_factory=list)
    deleted: list[ParikhVector] = field(default_factory=list)

    def _swap_all(self) -> None:
        for lst in (self.candidates, self.inserted, self.deleted):
            lst[:] = [(b, a) for (a, b) in lst]


def _finish_insert(
    xs: list[int], ys: list[int], idx: int, x: int, y: int, trace: BuildTrace | None
) -> int:
    """Insert (x, y) at position idx and prune everything it dominates.

    The caller has already established that no stored pair dominates (x, y).
    Returns the list size immediately after the insertion (the peak moment,
    before the retroactive deletions shrink the list again).
    """
    if idx < len(xs) and xs[idx] == x:
        # Same a-count stored with more b's: the newcomer supersedes it.
        if trace is not None:
            trace.deleted.append((x, ys[idx]))
        del xs[idx]
        del ys[idx]
    xs.insert(idx, x)
    ys.insert(idx, y)
    if trace is not None:
        trace.inserted.append((x, y))
    size_after = len(xs)
    # Pairs dominated by (x, y) have smaller a-counts and b-counts >= y;
    # since stored b-counts increase with position they sit immediately to
    # the left of the insertion point.
    i = idx - 1
    while i >= 0 and ys[i] >= y:
        if trace is not None:
            trace.deleted.append((xs[i], ys[i]))
        del xs[i]
        del ys[i]
        i -= 1
    return size_after


def _inspect(
    xs: list[int], ys: list[int], x: int, y: int, trace: BuildTrace | None
) -> int:
    """Process one candidate pair; returns post-insert size, or 0 if skipped.

    Candidates with x == 0 carry no run content on the first coordinate
    (they arise only from the zero-length padding run) and are skipped; the
    mandatory boundary entry for letterless strings is added by the caller.
    """
    if trace is not None:
        trace.candidates.append((x, y))
    if x == 0:
        return 0
    idx = bisect_left(xs, x)
    if idx < len(xs) and ys[idx] <= y:
        # The successor has at least as many a's for at most as many b's:
        # the candidate is dominated (or already present).
        return 0
    return _finish_insert(xs, ys, idx, x, y, trace)


def _construct(
    p1: list[int],
    p2: list[int],
    r: int,
    inner_drop_last: bool,
    trace: BuildTrace | None,
) -> tuple[list[ParikhVector], int, int]:
    """Dominance sweep over all r(r+1)/2 run spans.

    ``p1``/``p2`` are prefix sums of the run lengths feeding the first and
    second coordinate. A span covers k consecutive first-coordinate runs
    starting at i; the second coordinate sums the runs strictly inside the
    span, which drops the last second-run for l_min (b-runs between the
    spanned a-runs) or the first for l_max (a-runs between the spanned
    b-runs, in swapped orientation).

    Returns (final points, peak size, candidates inspected).
    """
    xs: list[int] = []
    ys: list[int] = []
    peak = 0
    inspected = 0
    if inner_drop_last:
        d, e = 1, 0
    else:
        d, e = 0, 1
    for k in range(1, r + 1):
        for i in range(0, r - k + 1):
            inspected += 1
            x = p1[i + k] - p1[i]
            y = p2[i + k - d] - p2[i + e]
            if trace is None:
                # Hot path: dominance test inline, mutation in the shared helper.
                if x == 0:
                    continue
                idx = bisect_left(xs, x)
                if idx < len(xs) and ys[idx] <= y:
                    continue
                size = _finish_insert(xs, ys, idx, x, y, None)
            else:
                size = _inspect(xs, ys, x, y, trace)
            if size > peak:
                peak = size
    points = list(zip(xs, ys))
    if not points:
        points = [(0, 0)]  # no content on the first coordinate at all
    if len(points) > peak:
        peak = len(points)
    return points, peak, inspected


def _prefix(runs: tuple[int, ...]) -> list[int]:
    return list(accumulate(runs, initial=0))


def _lmin_stats(
    rle: RunLengthEncoding, trace: BuildTrace | None = None
) -> tuple[CornerList, int, int]:
    points, peak, inspected = _construct(
        _prefix(rle.a_runs), _prefix(rle.b_runs), rle.pairs, True, trace
    )
    return CornerList(points), peak, inspected


def _lmax_stats(
    rle: RunLengthEncoding, trace: BuildTrace | None = None
) -> tuple[CornerList, int, int]:
    # Swapping coordinates turns the mirrored dominance order into the
    # l_min one, so the same sweep serves both lists.
    points, peak, inspected = _construct(
        _prefix(rle.b_runs), _prefix(rle.a_runs), rle.pairs, False, trace
    )
    if trace is not None:
        trace._swap_all()
    return CornerList([(x, y) for (y, x) in points]), peak, inspected


def build_lmin(rle: RunLengthEncoding, trace: BuildTrace | None = None) -> CornerList:
    """Corners of the minimal-b staircase: for every stored (x, y), y is the
    fewest b's any substring with exactly x a's contains, and the stored
    a-counts are exactly those where that minimum is about to increase, plus
    the total a-count. Strings without a's yield the single entry (0, 0)."""
    return _lmin_stats(rle, trace)[0]


def build_lmax(rle: RunLengthEncoding, trace: BuildTrace | None = None) -> CornerList:
    """Corners of the maximal-b staircase, mirror of :func:`build_lmin`;
    always contains an entry at x = 0 whose b-count is the longest b-run.
    Strings without b's yield the single entry (0, 0)."""
    return _lmax_stats(rle, trace)[0]


def lmin_candidates(rle: RunLengthEncoding) -> list[ParikhVector]:
    """All r(r+1)/2 candidate pairs for l_min in generation order: the span
    of k consecutive a-runs starting at run i contributes (sum of those
    a-runs, sum of the b-runs strictly between them)."""
    pa, pb = _prefix(rle.a_runs), _prefix(rle.b_runs)
    r = rle.pairs
    return [
        (pa[i + k] - pa[i], pb[i + k - 1] - pb[i])
        for k in range(1, r + 1)
        for i in range(0, r - k + 1)
    ]


def lmax_candidates(rle: RunLengthEncoding) -> list[ParikhVector]:
    """All r(r+1)/2 candidate pairs for l_max in generation order: the span
    of k consecutive b-runs starting at run i contributes (sum of the a-runs
    strictly between them, sum of those b-runs)."""
    pa, pb = _prefix(rle.a_runs), _prefix(rle.b_runs)
    r = rle.pairs
    return [
        (pa[i + k] - pa[i + 1], pb[i + k] - pb[i])
        for k in range(1, r + 1)
        for i in range(0, r - k + 1)
    ]


def assemble_lmin(candidates: Iterable[Sequence[int]]) -> CornerList:
    """Run the dominance filter over candidate pairs in the given order.

    The final list does not depend on the order; feeding a shuffled
    :func:`lmin_candidates` output reproduces :func:`build_lmin` exactly.
    """
    xs: list[int] = []
    ys: list[int] = []
    for p in candidates:
        _inspect(xs, ys, int(p[0]), int(p[1]), None)
    return CornerList(list(zip(xs, ys)) or [(0, 0)])


def assemble_lmax(candidates: Iterable[Sequence[int]]) -> CornerList:
    """Order-independent dominance filter for the mirrored list."""
    xs: list[int] = []
    ys: list[int] = []
    for p in candidates:
        _inspect(xs, ys, int(p[1]), int(p[0]), None)
    points = [(x, y) for (y, x) in zip(xs, ys)] or [(0, 0)]
    return CornerList(points)


class LengthTables:
    """Per-length a-count envelope: for every substring length m,
    ``min_a[m]`` and ``max_a[m]`` bound the a-counts over all length-m
    substrings, and every value between them is achieved."""

    __slots__ = ("min_a", "max_a")

    def __init__(self, min_a: tuple[int, ...], max_a: tuple[int, ...]):
        self.min_a = min_a
        self.max_a = max_a

    def __iter__(self):  # allows f, F = index.length_tables()
        return iter((self.min_a, self.max_a))

    def __eq__(self, other) -> bool:
        if isinstance(other, LengthTables):
            return self.min_a == other.min_a and self.max_a == other.max_a
        return NotImplemented

    def __repr__(self) -> str:
        return f"LengthTables(min_a={self.min_a!r}, max_a={self.max_a!r})"


@dataclass(frozen=True)
class CornerIndex:
    """Frozen query structure for one binary string.

    Carries both corner lists plus the string's length and letter totals.
    The peak_* and inspected_* fields are construction instrumentation
    (largest working-list size reached, candidates examined); they ride
    along for reporting and are excluded from equality.
    """

    l_min: CornerList
    l_max: CornerList
    n: int
    total_a: int
    total_b: int
    peak_min: int = field(default=1, compare=False)
    peak_max: int = field(default=1, compare=False)
    inspected_min: int = field(default=0, compare=False)
    inspected_max: int = field(default=0, compare=False)

    def bmin(self, x: int) -> int:
        """Fewest b's over substrings with exactly x a's (0 <= x <= total_a)."""
        if x < 0 or x > self.total_a:
            raise ValueError(f"a-count {x} out of range 0..{self.total_a}")
        y = self.l_min.successor_y(x)
        assert y is not None  # the list always ends at x = total_a
        return y

    def bmax(self, x: int) -> int:
        """Most b's over substrings with exactly x a's (0 <= x <= total_a)."""
        if x < 0 or x > self.total_a:
            raise ValueError(f"a-count {x} out of range 0..{self.total_a}")
        y = self.l_max.predecessor_y(x)
        assert y is not None  # the list always starts at x = 0
        return y

    def query(self, x: int, y: int) -> bool:
        """Does some substring contain exactly x a's and y b's?

        Out-of-range pairs are simply absent (returns False, never raises).
        """
        if x < 0 or y < 0 or x > self.total_a:
            return False
        return self.bmin(x) <= y <= self.bmax(x)

    def length_tables(self) -> LengthTables:
        """Expand the corner lists into per-length a-count bounds.

        Runs in O(n): a substring with x a's needs at least x + bmin(x)
        characters, so max_a[m] is the largest x with x + bmin(x) <= m;
        dually min_a[m] is the smallest x with x + bmax(x) >= m. Both
        defining expressions are strictly increasing in x, so one pointer
        walks each staircase.
        """
        ta, n = self.total_a, self.n
        dense_min = [0] * (ta + 1)
        prev = 0
        for x, y in self.l_min:
            for i in range(prev, x + 1):
                dense_min[i] = y
            prev = x + 1
        dense_max = [0] * (ta + 1)
        xs, ys = self.l_max.xs, self.l_max.ys
        for j in range(len(xs)):
            hi = xs[j + 1] if j + 1 < len(xs) else ta + 1
            for i in range(xs[j], hi):
                dense_max[i] = ys[j]
        max_a = [0] * (n + 1)
        x = 0
        for m in range(n + 1):
            while x < ta and (x + 1) + dense_min[x + 1] <= m:
                x += 1
            max_a[m] = x
        min_a = [0] * (n + 1)
        x = 0
        for m in range(n + 1):
            while x + dense_max[x] < m:
                x += 1
            min_a[m] = x
        return LengthTables(tuple(min_a), tuple(max_a))


def index_from_rle(rle: RunLengthEncoding) -> CornerIndex:
    """Build the full index from run lengths already in hand."""
    l_min, peak_min, seen_min = _lmin_stats(rle)
    l_max, peak_max, seen_max = _lmax_stats(rle)
    total_a, total_b = rle.total_a, rle.total_b
    return CornerIndex(
        l_min=l_min,
        l_max=l_max,
        n=total_a + total_b,
        total_a=total_a,
        total_b=total_b,
        peak_min=peak_min,
        peak_max=peak_max,
        inspected_min=seen_min,
        inspected_max=seen_max,
    )


def build_index(s: str) -> CornerIndex:
    """Encode the string and build its corner index."""
    return index_from_rle(encode(s))


def length_tables(index: CornerIndex) -> LengthTables:
    """Module-level alias for :meth:`CornerIndex.length_tables`."""
    return index.length_tables()
