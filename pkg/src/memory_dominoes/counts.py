"""The counts D[k, v, h] of 2 x k memory configurations with v vertical and
h horizontal dominoes, pairs treated as indistinguishable.

Three routes:

* :func:`placement_oracle` enumerates all (2k-1)!! pairings of the cells;
* :func:`count_via_inclusion_exclusion` alternates over aggregate matching
  numbers;
* :func:`D_series` expands the formal domino generating function.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, Iterator, List, Tuple

from .aggregate import calT
from .algebra import MultiSeries, double_factorial, fibonacci, series_reciprocal
from .boards import SizeLimitError

MAX_PAIRING_K = 8

Key = Tuple[int, int, int]


# --------------------------------------------------------------------------
# Route 1: brute-force pairings
# --------------------------------------------------------------------------


def pairings(items: List) -> Iterator[List[Tuple]]:
    """All perfect matchings of ``items``; the first item is paired with each other one in turn."""
    if not items:
        yield []
        return
    first, rest = items[0], items[1:]
    for i, other in enumerate(rest):
        for tail in pairings(rest[:i] + rest[i + 1 :]):
            yield [(first, other)] + tail


def classify(pair: Tuple[Tuple[int, int], Tuple[int, int]]) -> str:
    """'v', 'h' or '' for a pair of (row, col) cells."""
    (r1, c1), (r2, c2) = pair
    if c1 == c2:
        return "v"
    if r1 == r2 and abs(c1 - c2) == 1:
        return "h"
    return ""


def placement_oracle(k: int, max_k: int = MAX_PAIRING_K) -> Dict[Tuple[int, int], int]:
    """Histogram {(v, h): count} over every pairing of the 2k cells."""
    if k > max_k:
        raise SizeLimitError(f"k={k} exceeds the pairing oracle limit {max_k}")
    cells = [(r, c) for c in range(1, k + 1) for r in (1, 2)]
    hist: Dict[Tuple[int, int], int] = {}
    for p in pairings(cells):
        v = h = 0
        for pair in p:
            kind = classify(pair)
            if kind == "v":
                v += 1
            elif kind == "h":
                h += 1
        hist[v, h] = hist.get((v, h), 0) + 1
    return hist


def transfer_counts(K: int) -> Dict[Key, int]:
    """D[k, v, h] for k <= K by sweeping pairings column by column.

    Cells are visited in column-major order; each one either opens an arc or
    closes one already open.  Only the cells of the previous column (and the
    top cell of the current one) are tracked individually, since those are
    the only possible domino partners; all other open cells are a pool.
    Every pairing corresponds to exactly one sequence of choices.
    """
    out: Dict[Key, int] = {(0, 0, 0): 1}
    # state: (pool, top_prev_open, bottom_prev_open) -> {(v, h): count}
    states: Dict[Tuple[int, bool, bool], Dict[Tuple[int, int], int]] = {(0, False, False): {(0, 0): 1}}

    def add(bucket, key, vh, n):
        d = bucket.setdefault(key, {})
        d[vh] = d.get(vh, 0) + n

    for k in range(1, K + 1):
        nxt: Dict[Tuple[int, bool, bool], Dict[Tuple[int, int], int]] = {}
        for (pool, t, b), hist in states.items():
            for (v, h), n in hist.items():
                # top cell (1, k): partners (1, k-1) horizontal, (2, k-1) plain, pool plain, or open
                tops = []
                if t:
                    tops.append((pool, False, b, False, 0, 1, 1))
                if b:
                    tops.append((pool, t, False, False, 0, 0, 1))
                if pool:
                    tops.append((pool - 1, t, b, False, 0, 0, pool))
                tops.append((pool, t, b, True, 0, 0, 1))
                for pool1, t1, b1, top_open, dv, dh, mult in tops:
                    m = n * mult
                    vv, hh = v + dv, h + dh
                    carry = pool1 + t1  # (1, k-1) no longer adjacent to anything ahead
                    # bottom cell (2, k): (1, k) vertical, (2, k-1) horizontal, (1, k-1)/pool plain
                    if top_open:
                        add(nxt, (carry + b1, False, False), (vv + 1, hh), m)
                    if b1:
                        add(nxt, (carry, top_open, False), (vv, hh + 1), m)
                    if carry:
                        add(nxt, (carry - 1 + b1, top_open, False), (vv, hh), m * carry)
                    add(nxt, (carry + b1, top_open, True), (vv, hh), m)
        states = nxt
        for (v, h), n in states.get((0, False, False), {}).items():
            out[k, v, h] = out.get((k, v, h), 0) + n
    return out


# --------------------------------------------------------------------------
# Route 2: inclusion-exclusion over aggregate matching numbers
# --------------------------------------------------------------------------


def count_via_inclusion_exclusion(k: int, v: int, h: int) -> int:
    """sum_j (-1)^j (2n-2j-1)!! rho_j(k, v, h) with n = k - v - h."""
    n = k - v - h
    if n < 0:
        return 0
    agg = calT(k, v, h)
    return sum((-1) ** j * double_factorial(2 * n - 2 * j - 1) * agg[j] for j in range(n + 1))


# --------------------------------------------------------------------------
# Route 3: the formal generating function
# --------------------------------------------------------------------------


@lru_cache(maxsize=8)
def _D_shifted(K: int) -> MultiSeries:
    """The domino series in (y, a, b) with a = 1 - w, b = 1 - z.

    In these variables every term of A = 1 - b y, B = 1 + b y and
    C = 1 + a y - b^2 y^2 has (a, b)-degree equal to its y-degree, so
    G = A / (B C) has homogeneous y-slices and its powers stay small.
    """
    y, a, b = MultiSeries.gens("yab", (K, K, K))
    C_inv = series_reciprocal(1 + a * y - b**2 * y**2)
    G = (1 - b * y) * series_reciprocal(1 + b * y) * C_inv
    total = MultiSeries("yab", (K, K, K))
    H = C_inv  # G^j / C, truncated to y-degree K - j
    for j in range(K + 1):
        cap = K - j
        term = {(n + j, al, be): double_factorial(2 * j - 1) * c for (n, al, be), c in H.items()}
        total = total + MultiSeries("yab", (K, K, K), term)
        if j < K:
            H = H.truncate((cap - 1, K, K)) * G.truncate((cap - 1, K, K))
    return total


@lru_cache(maxsize=8)
def D_series(K: int) -> MultiSeries:
    """Expansion of sum_j (2j-1)!! y^j A^j / (B^j C^(j+1)) in (y, w, z), caps (K, K, K),
    with A = 1-(1-z)y, B = 1+(1-z)y, C = 1+(1-w)y-(1-z)^2 y^2."""
    s = _D_shifted(K)
    return s.substitute_affine("a", "w", 1, -1).substitute_affine("b", "z", 1, -1)


def D_series_literal(K: int) -> MultiSeries:
    """Same series expanded term by term directly in (y, w, z); only for small K."""
    y, w, z = MultiSeries.gens("ywz", (K, K, K))
    A = 1 - (1 - z) * y
    B_inv = series_reciprocal(1 + (1 - z) * y)
    C_inv = series_reciprocal(1 + (1 - w) * y - (1 - z) ** 2 * y**2)
    total = MultiSeries("ywz", (K, K, K))
    for j in range(K + 1):
        total = total + double_factorial(2 * j - 1) * y**j * A**j * B_inv**j * C_inv ** (j + 1)
    return total


# --------------------------------------------------------------------------
# Specialisations and the F_ell generating functions
# --------------------------------------------------------------------------

SPECIALIZATIONS = ("vertical-only", "horizontal-only", "combined")


def specialize(series: MultiSeries, which: str) -> MultiSeries:
    """vertical-only: z -> 1, horizontal-only: w -> 1, combined: w -> z."""
    if which == "vertical-only":
        return series.evaluate_at_one("z")
    if which == "horizontal-only":
        return series.evaluate_at_one("w")
    if which == "combined":
        K = series.caps[series.index("y")]
        return series.identify("w", "z", cap=K)
    raise ValueError(f"unknown specialization {which!r}; expected one of {SPECIALIZATIONS}")


def vertical_only_closed_form(K: int) -> MultiSeries:
    """sum_j (2j-1)!! y^j / (1+(1-w)y)^(j+1)."""
    y, w = MultiSeries.gens("yw", (K, K))
    inv = series_reciprocal(1 + (1 - w) * y)
    return sum(
        (double_factorial(2 * j - 1) * y**j * inv ** (j + 1) for j in range(K + 1)),
        MultiSeries("yw", (K, K)),
    )


def horizontal_only_closed_form(K: int) -> MultiSeries:
    """(1/(1-(1-z)y)) sum_j (2j-1)!! y^j / (1+(1-z)y)^(2j+1)."""
    y, z = MultiSeries.gens("yz", (K, K))
    inv = series_reciprocal(1 + (1 - z) * y)
    acc = sum(
        (double_factorial(2 * j - 1) * y**j * inv ** (2 * j + 1) for j in range(K + 1)),
        MultiSeries("yz", (K, K)),
    )
    return series_reciprocal(1 - (1 - z) * y) * acc


def combined_closed_form(K: int) -> MultiSeries:
    """The domino series with w = z."""
    y, z = MultiSeries.gens("yz", (K, K))
    A = 1 - (1 - z) * y
    B_inv = series_reciprocal(1 + (1 - z) * y)
    C_inv = series_reciprocal(1 + (1 - z) * y - (1 - z) ** 2 * y**2)
    total = MultiSeries("yz", (K, K))
    for j in range(K + 1):
        total = total + double_factorial(2 * j - 1) * y**j * A**j * B_inv**j * C_inv ** (j + 1)
    return total


def F_closed_form(ell: int, K: int) -> List[int]:
    """Coefficients y^0..y^K of the known rational forms for ell = 0, 1, 2."""
    (y,) = MultiSeries.gens("y", (K,))
    fib = series_reciprocal(1 - y - y**2)
    if ell == 0:
        f = fib
    elif ell == 1:
        f = 2 * y**3 * series_reciprocal(1 - y) * fib**2
    elif ell == 2:
        num = y**2 * (1 + 3 * y + 6 * y**2 + y**3 + 3 * y**4)
        f = num * series_reciprocal((1 - y) ** 2) * fib**3
    else:
        raise ValueError("closed forms are known only for ell in {0, 1, 2}")
    return f.coeff_list("y")


# --------------------------------------------------------------------------
# The table
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class DominoTable:
    """D[k, v, h] for all v + h <= k <= K; entries below the anti-diagonal are zero."""

    K: int
    entries: Dict[Key, int] = field(repr=False)

    @classmethod
    def from_series(cls, K: int) -> "DominoTable":
        s = D_series(K)
        return cls(K, {(k, v, h): s.coeff((k, v, h)) for k, v, h in _keys(K)})

    @classmethod
    def from_oracle(cls, K: int, max_k: int = MAX_PAIRING_K) -> "DominoTable":
        entries = {key: 0 for key in _keys(K)}
        for k in range(K + 1):
            for (v, h), n in placement_oracle(k, max_k).items():
                entries[k, v, h] = n
        return cls(K, entries)

    @classmethod
    def from_inclusion_exclusion(cls, K: int) -> "DominoTable":
        return cls(K, {key: count_via_inclusion_exclusion(*key) for key in _keys(K)})

    def __getitem__(self, key: Key) -> int:
        k, v, h = key
        if not 0 <= k <= self.K:
            raise KeyError(f"k={k} outside table range 0..{self.K}")
        if v < 0 or h < 0 or v + h > k:
            return 0
        return self.entries[key]

    def matrix(self, k: int) -> List[List[int]]:
        """Rows indexed by v, columns by h, full (k+1) x (k+1) with explicit zeros."""
        return [[self[k, v, h] for h in range(k + 1)] for v in range(k + 1)]

    def total(self, k: int) -> int:
        return sum(self[k, v, h] for v in range(k + 1) for h in range(k + 1 - v))

    def by_vertical(self, k: int) -> List[int]:
        return [sum(self[k, v, h] for h in range(k + 1)) for v in range(k + 1)]

    def by_horizontal(self, k: int) -> List[int]:
        return [sum(self[k, v, h] for v in range(k + 1)) for h in range(k + 1)]

    def by_total(self, k: int) -> List[int]:
        return [sum(self[k, v, p - v] for v in range(p + 1)) for p in range(k + 1)]

    def F(self, ell: int) -> List[int]:
        """Coefficients of F_ell for k = 0..K: configurations with k - ell dominoes."""
        return [
            sum(self[k, v, k - ell - v] for v in range(k - ell + 1)) if k >= ell else 0
            for k in range(self.K + 1)
        ]

    def to_json(self) -> str:
        nested = {
            str(k): {
                str(v): {str(h): str(self[k, v, h]) for h in range(k + 1)}
                for v in range(k + 1)
            }
            for k in range(self.K + 1)
        }
        return json.dumps(nested, indent=2)

    def to_csv(self, ks=None) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["k", "v", "h", "count"])
        for k in range(self.K + 1) if ks is None else ks:
            for v in range(k + 1):
                for h in range(k + 1):
                    writer.writerow([k, v, h, self[k, v, h]])
        return buf.getvalue()


def _keys(K: int):
    for k in range(K + 1):
        for v in range(k + 1):
            for h in range(k + 1 - v):
                yield k, v, h


def F_ell(ell: int, K: int, table: DominoTable | None = None) -> List[int]:
    if not 0 <= ell <= K:
        raise ValueError("need 0 <= ell <= K")
    table = table or DominoTable.from_series(K)
    return table.F(ell)


def tiling_count(k: int) -> int:
    """Domino tilings of the 2 x k array."""
    return fibonacci(k + 1)


def structural_violations(series: MultiSeries) -> List[str]:
    """Row-sum, anti-diagonal and zero laws on the raw series coefficients."""
    K = series.caps[0]
    bad = []
    for k in range(K + 1):
        row = [[series.coeff((k, v, h)) for h in range(k + 1)] for v in range(k + 1)]
        if sum(map(sum, row)) != double_factorial(2 * k - 1):
            bad.append(f"row sum k={k}")
        if sum(row[v][k - v] for v in range(k + 1)) != tiling_count(k):
            bad.append(f"anti-diagonal k={k}")
        bad.extend(
            f"zero law {(k, v, h)}"
            for v in range(k + 1)
            for h in range(k + 1)
            if v + h > k and row[v][h]
        )
    # Nothing beyond degree k in w or z may appear at y^k either.
    bad.extend(f"zero law {e}" for e, _ in series.items() if e[1] + e[2] > e[0])
    return bad
