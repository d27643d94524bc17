"""Seeded random binary strings for experiments and tests."""

from __future__ import annotations

import math
import random

__all__ = ["coin_string", "geometric_run_string"]


def coin_string(rng: random.Random, length: int) -> str:
    """Independent fair coin per character."""
    return "".join(rng.choices("ab", k=length))


def geometric_run_string(rng: random.Random, length: int, p: float) -> str:
    """Alternating runs with geometrically distributed lengths (mean 1/p).

    Smaller p gives longer runs, i.e. more compressible strings. The final
    run is truncated to hit the requested length exactly.
    """
    if not 0.0 < p <= 1.0:
        raise ValueError(f"run parameter must be in (0, 1], got {p}")
    parts: list[str] = []
    remaining = length
    ch = rng.choice("ab")
    log_q = math.log1p(-p) if p < 1.0 else None
    while remaining > 0:
        if log_q is None:
            run = 1
        else:
            run = 1 + int(math.log(1.0 - rng.random()) / log_q)
        run = min(run, remaining)
        parts.append(ch * run)
        remaining -= run
        ch = "b" if ch == "a" else "a"
    return "".join(parts)
