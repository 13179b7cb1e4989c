from __future__ import annotations

from functools import lru_cache
from itertools import product
from typing import Iterable, Iterator, Sequence


@lru_cache(maxsize=None)
def subsets(n: int) -> tuple[frozenset[int], ...]:
    """All subsets of ``range(n)``; position ``k`` holds the subset with bitmask ``k``."""
    return tuple(frozenset(i for i in range(n) if mask >> i & 1) for mask in range(1 << n))


def mask_of(indices: Iterable[int]) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def all_tables(n_rows: int, n_cols: int, values: Sequence) -> Iterator[tuple[tuple, ...]]:
    for flat in product(values, repeat=n_rows * n_cols):
        yield tuple(flat[r * n_cols:(r + 1) * n_cols] for r in range(n_rows))


def all_maps(n: int, m: int) -> Iterator[tuple[int, ...]]:
    return product(range(m), repeat=n)
