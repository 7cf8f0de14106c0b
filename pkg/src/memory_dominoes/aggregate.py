"""Aggregate matching polynomials of vertex-deleted 2 x k grid graphs.

``calT(k, v, h)`` is the sum of matching polynomials over every graph obtained
by deleting ``v`` vertical and ``h`` horizontal disjoint vertex pairs from the
2 x k grid.  Two routes are provided: the rational closed form in
``(x, y, w, z)`` (the power of ``y`` is ``k - v - h``) and direct enumeration.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import FrozenSet, Iterator, Tuple

from .algebra import IntPoly, MultiSeries, series_reciprocal
from .boards import SizeLimitError, grid_graph, matching_polynomial

MAX_ORACLE_K = 7


@dataclass(frozen=True)
class Placement:
    """Non-overlapping dominoes on the 2 x k array.

    ``vertical`` holds columns; ``horizontal`` holds ``(row, col)`` for the
    domino covering ``(row, col)`` and ``(row, col + 1)``.
    """

    k: int
    vertical: FrozenSet[int]
    horizontal: FrozenSet[Tuple[int, int]]

    def covered(self) -> FrozenSet[Tuple[int, int]]:
        cells = set()
        for c in self.vertical:
            cells |= {(1, c), (2, c)}
        for r, c in self.horizontal:
            cells |= {(r, c), (r, c + 1)}
        return frozenset(cells)


def placements(k: int, v: int, h: int) -> Iterator[Placement]:
    """Every placement of exactly v vertical and h horizontal dominoes."""
    horizontals = [(r, c) for r in (1, 2) for c in range(1, k)]
    for hs in combinations(horizontals, h):
        used = set()
        clash = False
        for r, c in hs:
            if (r, c) in used or (r, c + 1) in used:
                clash = True
                break
            used |= {(r, c), (r, c + 1)}
        if clash:
            continue
        free_cols = [c for c in range(1, k + 1) if (1, c) not in used and (2, c) not in used]
        for vs in combinations(free_cols, v):
            yield Placement(k, frozenset(vs), frozenset(hs))


def aggregate_oracle(k: int, v: int, h: int, max_k: int = MAX_ORACLE_K) -> IntPoly:
    """Sum of matching polynomials over all deletions, by enumeration."""
    if k > max_k:
        raise SizeLimitError(f"k={k} exceeds the aggregate oracle limit {max_k}")
    total = IntPoly()
    for p in placements(k, v, h):
        total = total + matching_polynomial(grid_graph(k, p.covered()))
    return total


@lru_cache(maxsize=16)
def calT_series(max_k: int) -> MultiSeries:
    """Closed form for the aggregate generating function, every cap set to ``max_k``.

    Coefficients with ``k = (y-degree) + (w-degree) + (z-degree) <= max_k``
    are all available.
    """
    x, y, w, z = MultiSeries.gens("xywz", (max_k,) * 4)
    num = 1 - x * y - z
    den = (
        1
        - (1 + 2 * x) * y
        - z
        - w * (1 - x * y - z)
        + (x * y + z) * (x**2 * y**2 - (1 - z) * z - y * (1 - 2 * x * z))
    )
    return num * series_reciprocal(den)


def calT(k: int, v: int, h: int) -> IntPoly:
    """Aggregate matching polynomial from the closed form."""
    if min(k, v, h) < 0:
        raise ValueError("negative index")
    n = k - v - h
    if n < 0:
        return IntPoly()
    return calT_series(k).poly("x", y=n, w=v, z=h)


def rho(k: int, v: int, h: int, j: int, allow_out_of_range: bool = False) -> int:
    """[x^j] calT(k, v, h): total number of j-edge matchings over the deleted graphs.

    Indices outside ``0 <= j <= k - v - h`` raise ``IndexError`` unless
    ``allow_out_of_range`` is set, in which case 0 is returned.
    """
    if min(k, v, h, j) < 0 or j > k - v - h:
        if allow_out_of_range:
            return 0
        raise IndexError(f"rho index out of range: k={k}, v={v}, h={h}, j={j}")
    return calT(k, v, h)[j]
