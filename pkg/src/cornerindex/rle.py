"""Run-length view of binary strings over the alphabet {a, b}.

The encoding is kept in padded form: a string is read as
``a^{u_1} b^{v_1} a^{u_2} b^{v_2} ... a^{u_r} b^{v_r}`` where every run length
is positive except that ``u_1`` may be zero (string starts with b) and ``v_r``
may be zero (string ends with a). The padding keeps a-runs and b-runs aligned
in pairs, which is what the index construction iterates over.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

__all__ = [
    "InputFormatError",
    "MalformedEncodingError",
    "RunLengthEncoding",
    "encode",
    "decode",
    "rho",
]

# Run lengths are persisted as 64-bit unsigned words; reject anything that
# could not round-trip through that representation.
MAX_TEXT_LENGTH = (1 << 64) - 1

_INVALID_CHAR = re.compile(r"[^ab]")
_RUN = re.compile(r"a+|b+")


class InputFormatError(ValueError):
    """Raised when input text is not a binary string over the alphabet."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class MalformedEncodingError(ValueError):
    """Raised when run lengths violate the padded-encoding invariants."""


@dataclass(frozen=True)
class RunLengthEncoding:
    """Padded run lengths of a binary string.

    ``a_runs`` and ``b_runs`` have equal length r; entry i of each gives the
    i-th a-run and b-run. All entries are positive except possibly
    ``a_runs[0]`` and ``b_runs[-1]``.
    """

    a_runs: tuple[int, ...]
    b_runs: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a_runs", tuple(int(u) for u in self.a_runs))
        object.__setattr__(self, "b_runs", tuple(int(v) for v in self.b_runs))
        a, b = self.a_runs, self.b_runs
        if len(a) != len(b):
            raise MalformedEncodingError(
                f"a_runs and b_runs must pair up ({len(a)} vs {len(b)} entries)"
            )
        if any(u < 0 for u in a) or any(v < 0 for v in b):
            raise MalformedEncodingError("run lengths must be non-negative")
        if any(u == 0 for u in a[1:]):
            raise MalformedEncodingError("interior a-run of length zero")
        if any(v == 0 for v in b[:-1]):
            raise MalformedEncodingError("interior b-run of length zero")

    @property
    def pairs(self) -> int:
        """Number of (a-run, b-run) pairs, r."""
        return len(self.a_runs)

    @property
    def total_a(self) -> int:
        return sum(self.a_runs)

    @property
    def total_b(self) -> int:
        return sum(self.b_runs)


def encode(s: str) -> RunLengthEncoding:
    """Encode a binary string into padded run lengths.

    Raises InputFormatError for any character outside {a, b}, naming the
    first offending position.
    """
    if len(s) > MAX_TEXT_LENGTH:
        raise InputFormatError("input exceeds the 64-bit length limit")
    bad = _INVALID_CHAR.search(s)
    if bad is not None:
        raise InputFormatError(
            f"invalid character {bad.group()!r} at index {bad.start()}; "
            "expected 'a' or 'b'",
            position=bad.start(),
        )
    a_runs: list[int] = []
    b_runs: list[int] = []
    for m in _RUN.finditer(s):
        length = m.end() - m.start()
        if s[m.start()] == "a":
            a_runs.append(length)
        else:
            if len(a_runs) == len(b_runs):
                a_runs.append(0)  # string starts with b, or impossible mid-text
            b_runs.append(length)
    if len(a_runs) > len(b_runs):
        b_runs.append(0)  # string ends with a
    return RunLengthEncoding(tuple(a_runs), tuple(b_runs))


def decode(rle: RunLengthEncoding) -> str:
    """Expand run lengths back into the string they encode."""
    parts: list[str] = []
    for u, v in zip(rle.a_runs, rle.b_runs):
        if u:
            parts.append("a" * u)
        if v:
            parts.append("b" * v)
    return "".join(parts)


def rho(rle: RunLengthEncoding) -> int:
    """Number of non-zero run entries (the compressed size of the string)."""
    count = sum(1 for u in rle.a_runs if u)
    count += sum(1 for v in rle.b_runs if v)
    return count
