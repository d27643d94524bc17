"""Binary on-disk format for corner indexes.

Layout, all integers little-endian:

    offset  size  field
    0       8     magic b"CORNERIX"
    8       4     format version (u32), currently 1
    12      8     n            total text length
    20      8     total_a
    28      8     total_b
    36      8     l_min entry count
    44      8     l_max entry count
    52      8     peak working size while building l_min
    60      8     peak working size while building l_max
    68      16*k  l_min entries, each (a_count u64, b_count u64)
    ...     16*k  l_max entries, same shape

A bad magic or unknown version raises IndexFormatError. Everything else a
reader can notice wrong about the payload raises CorruptIndexError with the
failing check named in the message.
"""

from __future__ import annotations

import struct
from typing import BinaryIO

from .corner import CornerIndex, CornerList

__all__ = [
    "MAGIC",
    "FORMAT_VERSION",
    "IndexFormatError",
    "CorruptIndexError",
    "serialize",
    "deserialize",
    "save_index",
    "load_index",
    "file_size",
]

MAGIC = b"CORNERIX"
FORMAT_VERSION = 1

_HEADER = struct.Struct("<8sI7Q")


class IndexFormatError(ValueError):
    """Not a corner-index file, or a version this reader does not speak."""


class CorruptIndexError(ValueError):
    """Structurally a corner-index file, but its content is inconsistent."""


def file_size(index: CornerIndex) -> int:
    """Exact byte size serialize() will produce for this index."""
    return _HEADER.size + 16 * (len(index.l_min) + len(index.l_max))


def serialize(index: CornerIndex, sink: BinaryIO) -> None:
    """Write the index to a binary stream in the documented layout."""
    sink.write(
        _HEADER.pack(
            MAGIC,
            FORMAT_VERSION,
            index.n,
            index.total_a,
            index.total_b,
            len(index.l_min),
            len(index.l_max),
            index.peak_min,
            index.peak_max,
        )
    )
    for lst in (index.l_min, index.l_max):
        flat: list[int] = []
        for x, y in lst:
            flat.append(x)
            flat.append(y)
        sink.write(struct.pack(f"<{len(flat)}Q", *flat))


def _read_pairs(source: BinaryIO, count: int, name: str) -> list[tuple[int, int]]:
    raw = source.read(16 * count)
    if len(raw) != 16 * count:
        raise CorruptIndexError(f"truncated {name} payload")
    flat = struct.unpack(f"<{2 * count}Q", raw)
    return list(zip(flat[0::2], flat[1::2]))


def _validated_list(pairs, name: str) -> CornerList:
    if not pairs:
        raise CorruptIndexError(f"{name} is empty")
    for i in range(1, len(pairs)):
        if pairs[i][0] <= pairs[i - 1][0] or pairs[i][1] <= pairs[i - 1][1]:
            raise CorruptIndexError(
                f"{name} is not strictly increasing in both coordinates"
            )
    return CornerList(pairs)


def deserialize(source: BinaryIO) -> CornerIndex:
    """Read an index back, validating every structural invariant."""
    magic = source.read(8)
    if magic != MAGIC:
        raise IndexFormatError("bad magic; not a corner-index file")
    rest = source.read(_HEADER.size - 8)
    if len(rest) != _HEADER.size - 8:
        raise CorruptIndexError("truncated header")
    version, n, total_a, total_b, k_min, k_max, peak_min, peak_max = struct.unpack(
        "<I7Q", rest
    )
    if version != FORMAT_VERSION:
        raise IndexFormatError(f"unsupported format version {version}")
    if n != total_a + total_b:
        raise CorruptIndexError("letter totals do not sum to the text length")
    pairs_min = _read_pairs(source, k_min, "l_min")
    pairs_max = _read_pairs(source, k_max, "l_max")
    l_min = _validated_list(pairs_min, "l_min")
    l_max = _validated_list(pairs_max, "l_max")
    if pairs_min[-1][0] != total_a:
        raise CorruptIndexError("l_min does not end at the total a-count")
    if pairs_min[0][1] != 0:
        raise CorruptIndexError("l_min does not start at b-count zero")
    if pairs_min[-1][1] > total_b:
        raise CorruptIndexError("l_min b-count exceeds the total")
    if pairs_max[0][0] != 0:
        raise CorruptIndexError("l_max does not start at a-count zero")
    if pairs_max[-1][1] != total_b:
        raise CorruptIndexError("l_max does not end at the total b-count")
    if pairs_max[-1][0] > total_a:
        raise CorruptIndexError("l_max a-count exceeds the total")
    return CornerIndex(
        l_min=l_min,
        l_max=l_max,
        n=n,
        total_a=total_a,
        total_b=total_b,
        peak_min=peak_min,
        peak_max=peak_max,
    )


def save_index(index: CornerIndex, path: str) -> None:
    with open(path, "wb") as fh:
        serialize(index, fh)


def load_index(path: str) -> CornerIndex:
    with open(path, "rb") as fh:
        return deserialize(fh)
