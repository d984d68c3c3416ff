"""Deterministic chunked execution for range scanners.

Chunks are processed independently and merged in input order, so output is
byte-identical regardless of worker count or chunk size.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from typing import Callable, TypeVar

T = TypeVar("T")

DEFAULT_CHUNK = 2048


def split_range(lo: int, hi: int, chunk: int) -> list[tuple[int, int]]:
    """Split the inclusive range [lo, hi] into inclusive spans of width chunk."""
    if hi < lo:
        return []
    if chunk < 1:
        chunk = 1
    spans = []
    a = lo
    while a <= hi:
        b = min(a + chunk - 1, hi)
        spans.append((a, b))
        a = b + 1
    return spans


def run_chunked(
    fn: Callable[[int, int], list[T]],
    lo: int,
    hi: int,
    jobs: int = 1,
    chunk: int = DEFAULT_CHUNK,
) -> list[T]:
    """Apply fn to each span of [lo, hi] and concatenate results in span order."""
    spans = split_range(lo, hi, chunk)
    if jobs <= 1 or len(spans) <= 1:
        parts = [fn(a, b) for a, b in spans]
    else:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(lambda span: fn(*span), spans))
    out: list[T] = []
    for part in parts:
        out.extend(part)
    return out
