"""Small shared helpers: float formatting, deterministic block scheduling."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

# Fixed work-block size. Results are merged in block order, so the outcome is
# identical whether blocks run on 1 thread or 8.
BLOCK = 1 << 18


def fmt15(v: float) -> str:
    """Format a float with 15 significant digits."""
    return f"{float(v):.15g}"


def round15(v: float) -> float:
    """Round a float to 15 significant digits (stable across print/parse)."""
    return float(fmt15(v))


def block_ranges(lo: int, hi: int, block: int = BLOCK):
    """Split [lo, hi) into consecutive half-open ranges of at most `block`."""
    out = []
    a = lo
    while a < hi:
        b = min(a + block, hi)
        out.append((a, b))
        a = b
    return out


def run_blocks(fn, blocks, threads: int = 1):
    """Apply fn to each block, in order. Threads only change wall time, never
    the result list order."""
    if threads <= 1 or len(blocks) <= 1:
        return [fn(b) for b in blocks]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, blocks))


def env_int(name: str, default: int) -> int:
    raw = os.environ.get(name)
    if raw is None or raw.strip() == "":
        return default
    return int(raw)
