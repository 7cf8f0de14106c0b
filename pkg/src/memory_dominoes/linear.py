"""Linear chord diagrams on the 1 x 2k path and their link to horizontal dominoes.

``L[k][h]`` counts pairings of 2k points on a line with exactly ``h`` pairs
joining neighbours.  Folding the path back onto the 2 x k grid (position j ->
cell (1, j), position 2k+1-j -> cell (2, j)) turns every neighbour pair except
the central one into a horizontal domino; the central one is a vertical
domino in the last column.  That gives

    D[k, h] = D[k-1, h] + L[k, h] - D[k-1, h-1]

for the horizontal-domino counts D[k, h] (summed over vertical dominoes).
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Dict, List, Sequence, Tuple

from .algebra import MultiSeries, series_exp, series_inv_sqrt, series_sqrt
from .boards import SizeLimitError
from .counts import DominoTable, MAX_PAIRING_K, pairings
from .report import IdentityReport


def L_oracle(k: int, max_k: int = MAX_PAIRING_K) -> List[int]:
    """[L[k][0], ..., L[k][k]] by enumerating pairings of positions 1..2k."""
    if k > max_k:
        raise SizeLimitError(f"k={k} exceeds the pairing oracle limit {max_k}")
    row = [0] * (k + 1)
    for p in pairings(list(range(1, 2 * k + 1))):
        row[sum(1 for a, b in p if abs(a - b) == 1)] += 1
    return row


def unfold(k: int, cell: Tuple[int, int]) -> int:
    """Path position of a grid cell."""
    r, c = cell
    if r not in (1, 2) or not 1 <= c <= k:
        raise ValueError(f"{cell} not in the 2 x {k} grid")
    return c if r == 1 else 2 * k + 1 - c


def fold(k: int, position: int) -> Tuple[int, int]:
    """Grid cell at a path position; inverse of :func:`unfold`."""
    if not 1 <= position <= 2 * k:
        raise ValueError(f"position {position} not on the 1 x {2 * k} path")
    return (1, position) if position <= k else (2, 2 * k + 1 - position)


def horizontal_counts_by_unfolding(k: int, max_k: int = MAX_PAIRING_K) -> List[int]:
    """Histogram of neighbour pairs other than the central one, over path pairings."""
    if k > max_k:
        raise SizeLimitError(f"k={k} exceeds the pairing oracle limit {max_k}")
    row = [0] * (k + 1)
    for p in pairings(list(range(1, 2 * k + 1))):
        h = sum(1 for a, b in p if abs(a - b) == 1 and {a, b} != {k, k + 1})
        row[h] += 1
    return row


def L_egf(K: int) -> MultiSeries:
    """exp((sqrt(1-2y) - 1)(1-z)) / sqrt(1-2y) in (y, z), caps (K, K)."""
    y, z = MultiSeries.gens("yz", (K, K), ring=Fraction)
    base = 1 - 2 * y
    root = series_sqrt(base)
    return series_exp((root - 1) * (1 - z)) * series_inv_sqrt(base)


def egf_row(series: MultiSeries, k: int) -> List[int]:
    """k! times the y^k slice, as integers (raises if any entry is fractional)."""
    scale = math.factorial(k)
    out = []
    for c in series.coeff_list(series.variables[1], **{series.variables[0]: k}):
        n = c * scale
        if n.denominator != 1:
            raise ValueError(f"non-integral EGF coefficient {n} at y^{k}")
        out.append(int(n))
    return out


def L_from_egf(K: int) -> Dict[int, List[int]]:
    s = L_egf(K)
    return {k: egf_row(s, k)[: k + 1] for k in range(K + 1)}


def recursion_check(table: DominoTable, L_rows: Dict[int, Sequence[int]]) -> IdentityReport:
    """D[k,h] == D[k-1,h] + L[k,h] - D[k-1,h-1] for 1 <= k <= K, 0 <= h <= k."""
    report = IdentityReport("horizontal recursion")
    K = max(L_rows)
    if K > table.K:
        raise ValueError("table does not reach the requested k")

    def D(k, h):
        return table.by_horizontal(k)[h] if 0 <= h <= k else 0

    for k in range(1, K + 1):
        for h in range(k + 1):
            lhs = D(k, h)
            rhs = D(k - 1, h) + L_rows[k][h] - D(k - 1, h - 1)
            report.record((k, h), lhs == rhs, f"{lhs} != {rhs}")
    return report


def E_horizontal(K: int, L: MultiSeries | None = None) -> MultiSeries:
    """Formal solution of dE/dy - (1-z) E = dL/dy with E(0, z) = 1.

    Coefficient-wise: (k+1) e_{k+1}(z) = (1-z) e_k(z) + (k+1) l_{k+1}(z).
    """
    L = L_egf(K) if L is None else L
    zcap = L.caps[1]
    e: Dict[Tuple[int, int], Fraction] = {(0, 0): Fraction(1)}
    for k in range(K):
        for h in range(zcap + 1):
            val = e.get((k, h), 0) - e.get((k, h - 1), 0) if h else e.get((k, h), 0)
            val += (k + 1) * L.coeff((k + 1, h))
            if val:
                e[k + 1, h] = Fraction(val) / (k + 1)
    return MultiSeries("yz", (K, zcap), e, Fraction)


def ode_residual(E: MultiSeries, L: MultiSeries) -> MultiSeries:
    """dE/dy - (1-z) E - dL/dy, truncated to the common caps."""
    (_, z) = MultiSeries.gens("yz", E.caps, ring=Fraction)
    dE = E.derivative("y")
    rest = ((1 - z) * E).truncate(dE.caps)
    return dE - rest - L.derivative("y")


def E_vertical(K: int) -> MultiSeries:
    """exp(y(w-1)) / sqrt(1-2y) in (y, w), caps (K, K)."""
    y, w = MultiSeries.gens("yw", (K, K), ring=Fraction)
    return series_exp(y * (w - 1)) * series_inv_sqrt(1 - 2 * y)


def E_vertical_check(table: DominoTable, K: int | None = None) -> IdentityReport:
    K = table.K if K is None else K
    s = E_vertical(K)
    report = IdentityReport("vertical EGF")
    for k in range(K + 1):
        got = egf_row(s, k)
        want = table.by_vertical(k) + [0] * (K - k)
        report.record(k, got == want, f"{got} != {want}")
    return report


def E_horizontal_check(table: DominoTable, K: int | None = None) -> IdentityReport:
    K = table.K if K is None else K
    s = E_horizontal(K)
    report = IdentityReport("horizontal EGF (ODE solution)")
    for k in range(K + 1):
        got = egf_row(s, k)
        want = table.by_horizontal(k) + [0] * (K - k)
        report.record(k, got == want, f"{got} != {want}")
    return report
