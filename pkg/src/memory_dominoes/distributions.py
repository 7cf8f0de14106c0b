"""Exact distributions of vertical, horizontal and total domino counts, and the
machinery behind the Poisson(3/2) limit of the total.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Dict, List, Sequence, Tuple

from .algebra import MultiSeries, double_factorial, series_reciprocal
from .counts import DominoTable
from .report import IdentityReport

KINDS = ("V", "H", "P")
DEFAULT_PRECISION = 50


@dataclass(frozen=True)
class ExactDist:
    k: int
    kind: str
    masses: Tuple[Fraction, ...]

    def __post_init__(self):
        if any(m < 0 for m in self.masses):
            raise ValueError("negative probability mass")
        if sum(self.masses) != 1:
            raise ValueError(f"masses sum to {sum(self.masses)}, not 1")

    def mean(self) -> Fraction:
        return sum((i * m for i, m in enumerate(self.masses)), Fraction(0))

    def factorial_moment(self, m: int) -> Fraction:
        """E[X (X-1) ... (X-m+1)]."""
        return sum(
            (math.perm(i, m) * p for i, p in enumerate(self.masses)), Fraction(0)
        )

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "kind": self.kind,
            "masses": [str(m) for m in self.masses],
            "mean": str(self.mean()),
        }


def dist(k: int, kind: str, table: DominoTable | None = None) -> ExactDist:
    """V, H or P at size k from the domino table."""
    if kind not in KINDS:
        raise ValueError(f"unknown distribution {kind!r}; expected one of {KINDS}")
    table = table or DominoTable.from_series(k)
    counts = {"V": table.by_vertical, "H": table.by_horizontal, "P": table.by_total}[kind](k)
    total = double_factorial(2 * k - 1)
    return ExactDist(k, kind, tuple(Fraction(c, total) for c in counts))


def mean_P(k: int) -> Fraction:
    """(3k - 2) / (2k - 1); 0 for the empty array."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if k == 0:
        return Fraction(0)
    return Fraction(3 * k - 2, 2 * k - 1)


def mean_H(k: int) -> Fraction:
    """Mean horizontal count, 2(k-1)/(2k-1): the total mean minus the vertical one."""
    if k == 0:
        return Fraction(0)
    return mean_P(k) - factorial_moment_V(k, 1)


def factorial_moment_V(k: int, m: int) -> Fraction:
    """k!/(k-m)! * (2k-2m-1)!! / (2k-1)!!; zero when m > k."""
    if m > k:
        return Fraction(0)
    return Fraction(
        math.perm(k, m) * double_factorial(2 * k - 2 * m - 1), double_factorial(2 * k - 1)
    )


# --------------------------------------------------------------------------
# a_{j,n} = [x^n] (1-x)^j / ((1+x)^j (1+x-x^2)^(j+1))
# --------------------------------------------------------------------------


@lru_cache(maxsize=4)
def _a_bases(n_max: int) -> Tuple[MultiSeries, MultiSeries]:
    (x,) = MultiSeries.gens("x", (n_max,))
    inv = series_reciprocal(1 + x - x**2)
    ratio = (1 - x) * series_reciprocal(1 + x) * inv
    return inv, ratio


def a_coeff(j: int, n: int) -> int:
    if j < 0 or n < 0:
        raise ValueError("indices must be nonnegative")
    inv, ratio = _a_bases(n)
    return (inv * ratio**j).coeff((n,))


@lru_cache(maxsize=8)
def a_diagonal(k: int) -> Tuple[int, ...]:
    """(a_{k,0}, a_{k-1,1}, ..., a_{0,k}), i.e. entry l is a_{k-l,l}."""
    inv, ratio = _a_bases(k)
    out = [0] * (k + 1)
    # acc = inv * ratio^j, needed only up to x^(k-j)
    acc = inv
    for j in range(k + 1):
        out[k - j] = acc.coeff((k - j,))
        if j < k:
            cap = k - j - 1
            acc = acc.truncate((cap,)) * ratio.truncate((cap,))
    return tuple(out)


def bounds_check(k: int) -> IdentityReport:
    """3^l C(k-l, l) <= (-1)^l a_{k-l,l} <= 3^l C(k, l) for 0 <= l <= k."""
    report = IdentityReport(f"binomial bounds k={k}")
    for l, a in enumerate(a_diagonal(k)):
        val = (-1) ** l * a
        lo = 3**l * math.comb(k - l, l)
        hi = 3**l * math.comb(k, l)
        report.record(l, lo <= val <= hi, f"{lo} <= {val} <= {hi}")
    return report


def P_polynomial(k: int) -> Tuple[Fraction, ...]:
    """Coefficients of sum_l (2k-2l-1)!!/(2k-1)!! a_{k-l,l} (1-z)^l in z."""
    diag = a_diagonal(k)
    num = [0] * (k + 1)
    for l, a in enumerate(diag):
        if not a:
            continue
        c = double_factorial(2 * k - 2 * l - 1) * a
        for p in range(l + 1):
            num[p] += c * math.comb(l, p) * (-1) ** p
    total = double_factorial(2 * k - 1)
    return tuple(Fraction(n, total) for n in num)


def P_bracket(k: int, l: int) -> Tuple[Fraction, Fraction, Fraction]:
    """(lower, value, upper) for the scaled l-th term of P_k in powers of (1-z)."""
    scale = Fraction(double_factorial(2 * k - 2 * l - 1), double_factorial(2 * k - 1))
    val = (-1) ** l * a_diagonal(k)[l]
    return (
        scale * 3**l * math.comb(k - l, l),
        scale * val,
        scale * 3**l * math.comb(k, l),
    )


@dataclass(frozen=True)
class PoissonGap:
    """max_p |P_{k,p} - e^(-3/2) (3/2)^p / p!|; decimal, hence approximate."""

    k: int
    gap: Decimal
    argmax: int
    precision: int
    approximate: bool = True

    def as_dict(self) -> dict:
        return {
            "k": self.k,
            "gap": str(self.gap),
            "argmax": self.argmax,
            "precision": self.precision,
            "approximate": self.approximate,
        }


def poisson_masses(n: int, precision: int = DEFAULT_PRECISION) -> List[Decimal]:
    with localcontext() as ctx:
        ctx.prec = precision
        lam = Decimal(3) / 2
        term = (-lam).exp()
        out = []
        for p in range(n + 1):
            if p:
                term = term * lam / p
            out.append(+term)
    return out


def poisson_gap(
    k: int, precision: int = DEFAULT_PRECISION, masses: Sequence[Fraction] | None = None
) -> PoissonGap:
    masses = P_polynomial(k) if masses is None else masses
    poisson = poisson_masses(len(masses) - 1, precision)
    best, where = Decimal(0), 0
    with localcontext() as ctx:
        ctx.prec = precision
        for p, (exact, approx) in enumerate(zip(masses, poisson)):
            d = abs(Decimal(exact.numerator) / Decimal(exact.denominator) - approx)
            if d > best:
                best, where = d, p
    return PoissonGap(k, best, where, precision)
