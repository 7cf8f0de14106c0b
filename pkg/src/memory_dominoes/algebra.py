"""Exact integer/rational polynomials and truncated multivariate power series.

Coefficients are Python ``int`` or :class:`fractions.Fraction`; nothing is ever
rounded.  A :class:`MultiSeries` carries one degree cap per variable and every
operation returns exactly the coefficients of the untruncated result up to
those caps.
"""
from __future__ import annotations

import math
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

Exponents = Tuple[int, ...]


class SeriesError(ValueError):
    """Raised for incompatible operands or an invalid constant term."""


class TruncationError(LookupError):
    """Raised when a coefficient beyond the truncation caps is requested."""


def double_factorial(n: int) -> int:
    """n!! with the conventions 0!! = (-1)!! = 1."""
    if n < -1:
        raise ValueError(f"double factorial undefined for {n}")
    return math.prod(range(n, 0, -2))


def fibonacci(n: int) -> int:
    """F(0) = 0, F(1) = 1, ..."""
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


# --------------------------------------------------------------------------
# Dense univariate integer polynomials
# --------------------------------------------------------------------------


class IntPoly:
    """Polynomial in one variable with integer coefficients, lowest degree first.

    The zero polynomial has ``degree == -1``.
    """

    __slots__ = ("_c",)

    def __init__(self, coefficients: Iterable[int] = ()):
        c = list(coefficients)
        for a in c:
            if not isinstance(a, int):
                raise TypeError(f"IntPoly coefficient must be int, got {type(a).__name__}")
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @property
    def coefficients(self) -> Tuple[int, ...]:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    def __getitem__(self, j: int) -> int:
        if j < 0:
            raise IndexError(j)
        return self._c[j] if j < len(self._c) else 0

    def __len__(self) -> int:
        return len(self._c)

    def __iter__(self) -> Iterator[int]:
        return iter(self._c)

    def __call__(self, value):
        acc = 0
        for a in reversed(self._c):
            acc = acc * value + a
        return acc

    @staticmethod
    def _coerce(other) -> "IntPoly":
        if isinstance(other, IntPoly):
            return other
        if isinstance(other, int):
            return IntPoly((other,))
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self._c), len(other._c))
        return IntPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self._c)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self._c or not other._c:
            return IntPoly()
        out = [0] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a:
                for j, b in enumerate(other._c):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = IntPoly((1,))
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self._c == other._c

    def __hash__(self):
        return hash(self._c)

    def __repr__(self):
        return f"IntPoly({list(self._c)})"

    def __str__(self):
        return format_poly(self._c, "x")


def format_poly(coefficients: Sequence, var: str = "x") -> str:
    """Render ``[1, 4, 2]`` as ``1 + 4x + 2x^2``."""
    parts = []
    for j, a in enumerate(coefficients):
        if a == 0:
            continue
        mag = abs(a)
        if j == 0:
            body = str(mag)
        else:
            mono = var if j == 1 else f"{var}^{j}"
            body = mono if mag == 1 else f"{mag}{mono}"
        sign = "-" if a < 0 else "+"
        if not parts:
            parts.append(body if sign == "+" else f"-{body}")
        else:
            parts.append(f" {sign} {body}")
    return "".join(parts) or "0"


# --------------------------------------------------------------------------
# Truncated multivariate power series
# --------------------------------------------------------------------------

_RINGS = (int, Fraction)


class MultiSeries:
    """Truncated power series in named variables with per-variable degree caps.

    ``ring`` is ``int`` or ``Fraction``; the two are never mixed implicitly,
    use :meth:`to_rational` to promote.  Instances are immutable.
    """

    __slots__ = ("variables", "caps", "ring", "_terms")

    def __init__(
        self,
        variables: Sequence[str],
        caps: Sequence[int],
        terms: Mapping[Exponents, object] | None = None,
        ring: type = int,
    ):
        variables = tuple(variables)
        caps = tuple(int(c) for c in caps)
        if len(variables) != len(caps):
            raise SeriesError("one cap per variable required")
        if len(set(variables)) != len(variables):
            raise SeriesError(f"duplicate variable names {variables}")
        if any(c < 0 for c in caps):
            raise SeriesError("caps must be nonnegative")
        if ring not in _RINGS:
            raise SeriesError(f"unsupported coefficient ring {ring!r}")
        clean: Dict[Exponents, object] = {}
        for e, c in (terms or {}).items():
            e = tuple(e)
            if len(e) != len(variables):
                raise SeriesError(f"exponent {e} does not match variables {variables}")
            if any(ei < 0 for ei in e):
                raise SeriesError(f"negative exponent {e}")
            if not c or any(ei > ci for ei, ci in zip(e, caps)):
                continue
            if ring is int:
                if not isinstance(c, int):
                    if isinstance(c, Fraction) and c.denominator == 1:
                        c = c.numerator
                    else:
                        raise SeriesError(f"non-integer coefficient {c!r} in integer series")
            else:
                c = Fraction(c)
            clean[e] = c
        object.__setattr__(self, "variables", variables)
        object.__setattr__(self, "caps", caps)
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("MultiSeries is immutable")

    # -- constructors ------------------------------------------------------

    @classmethod
    def constant(cls, value, variables, caps, ring=int) -> "MultiSeries":
        return cls(variables, caps, {(0,) * len(tuple(variables)): value}, ring)

    @classmethod
    def gens(cls, variables: Sequence[str], caps: Sequence[int], ring=int):
        """The generator series for each variable, e.g. ``x, y = MultiSeries.gens("xy", (4, 4))``."""
        variables = tuple(variables)
        out = []
        for i in range(len(variables)):
            e = [0] * len(variables)
            e[i] = 1
            out.append(cls(variables, caps, {tuple(e): 1}, ring))
        return tuple(out)

    def _new(self, terms, caps=None, variables=None, ring=None) -> "MultiSeries":
        return MultiSeries(
            self.variables if variables is None else variables,
            self.caps if caps is None else caps,
            terms,
            self.ring if ring is None else ring,
        )

    # -- inspection --------------------------------------------------------

    @property
    def terms(self) -> Dict[Exponents, object]:
        return dict(self._terms)

    def items(self):
        """Nonzero terms in deterministic (lexicographic exponent) order."""
        return sorted(self._terms.items())

    def index(self, var: str) -> int:
        try:
            return self.variables.index(var)
        except ValueError:
            raise SeriesError(f"no variable {var!r} in {self.variables}") from None

    def _exponents(self, exponents) -> Exponents:
        if isinstance(exponents, Mapping):
            e = [0] * len(self.variables)
            for name, d in exponents.items():
                e[self.index(name)] = d
            return tuple(e)
        e = tuple(exponents)
        if len(e) != len(self.variables):
            raise SeriesError(f"expected {len(self.variables)} exponents, got {len(e)}")
        return e

    def coeff(self, exponents):
        """Exact coefficient of a monomial; ``exponents`` is a tuple or a name->degree map."""
        e = self._exponents(exponents)
        if any(ei < 0 for ei in e):
            raise TruncationError(f"negative exponent {e}")
        if any(ei > ci for ei, ci in zip(e, self.caps)):
            raise TruncationError(f"exponent {e} exceeds caps {self.caps}")
        return self._terms.get(e, self.ring(0))

    def __getitem__(self, exponents):
        return self.coeff(exponents)

    def constant_term(self):
        return self._terms.get((0,) * len(self.variables), self.ring(0))

    def poly(self, var: str, **fixed: int) -> IntPoly:
        """Slice along ``var`` with every other variable's degree fixed (default 0)."""
        if self.ring is not int:
            raise SeriesError("IntPoly slices require an integer series")
        return IntPoly(self.coeff_list(var, **fixed))

    def coeff_list(self, var: str, **fixed: int) -> list:
        i = self.index(var)
        e = [0] * len(self.variables)
        for name, d in fixed.items():
            j = self.index(name)
            if j == i:
                raise SeriesError(f"{var} cannot be both sliced and fixed")
            e[j] = d
        out = []
        for d in range(self.caps[i] + 1):
            e[i] = d
            out.append(self.coeff(tuple(e)))
        return out

    # -- structural operations ----------------------------------------------

    def truncate(self, caps: Sequence[int]) -> "MultiSeries":
        caps = tuple(caps)
        if any(c > d for c, d in zip(caps, self.caps)):
            raise TruncationError(f"cannot raise caps {self.caps} to {caps}")
        return self._new(self._terms, caps=caps)

    def to_rational(self) -> "MultiSeries":
        return self._new(self._terms, ring=Fraction)

    def to_integer(self) -> "MultiSeries":
        """Demote a rational series whose coefficients are all integers."""
        return self._new(self._terms, ring=int)

    def map_coefficients(self, fn, ring=None) -> "MultiSeries":
        return self._new({e: fn(e, c) for e, c in self._terms.items()}, ring=ring)

    def evaluate_at_one(self, var: str) -> "MultiSeries":
        """Set ``var`` to 1, dropping it.  Only exact when the series is a
        polynomial in ``var`` below its cap."""
        i = self.index(var)
        out: Dict[Exponents, object] = {}
        for e, c in self._terms.items():
            k = e[:i] + e[i + 1 :]
            out[k] = out.get(k, 0) + c
        return MultiSeries(
            self.variables[:i] + self.variables[i + 1 :],
            self.caps[:i] + self.caps[i + 1 :],
            out,
            self.ring,
        )

    def identify(self, src: str, dst: str, cap: int | None = None) -> "MultiSeries":
        """Substitute ``src -> dst`` (merging the two variables)."""
        i, j = self.index(src), self.index(dst)
        caps = list(self.caps)
        caps[j] = caps[i] + caps[j] if cap is None else cap
        out: Dict[Exponents, object] = {}
        for e, c in self._terms.items():
            e2 = list(e)
            e2[j] += e2[i]
            e2[i] = 0
            k = tuple(e2[:i] + e2[i + 1 :])
            out[k] = out.get(k, 0) + c
        del caps[i]
        return MultiSeries(self.variables[:i] + self.variables[i + 1 :], caps, out, self.ring)

    def substitute_affine(self, var: str, new_var: str, shift, scale) -> "MultiSeries":
        """Replace ``var`` by ``shift + scale * new_var``.

        Exact only when the series is a polynomial in ``var`` within its cap
        (binomial expansion would otherwise need the truncated tail).
        """
        i = self.index(var)
        if new_var != var and new_var in self.variables:
            raise SeriesError(f"{new_var!r} already present")
        out: Dict[Exponents, object] = {}
        for e, c in self._terms.items():
            n = e[i]
            for m in range(n + 1):
                t = c * math.comb(n, m) * shift ** (n - m) * scale**m
                if not t:
                    continue
                k = e[:i] + (m,) + e[i + 1 :]
                out[k] = out.get(k, 0) + t
        variables = list(self.variables)
        variables[i] = new_var
        return MultiSeries(variables, self.caps, out, self.ring)

    def derivative(self, var: str) -> "MultiSeries":
        """Partial derivative; the cap of ``var`` drops by one."""
        i = self.index(var)
        if self.caps[i] == 0:
            raise TruncationError(f"cannot differentiate {var} at cap 0")
        caps = list(self.caps)
        caps[i] -= 1
        out = {}
        for e, c in self._terms.items():
            if e[i]:
                out[e[:i] + (e[i] - 1,) + e[i + 1 :]] = c * e[i]
        return self._new(out, caps=caps)

    # -- arithmetic ----------------------------------------------------------

    def _check(self, other: "MultiSeries") -> Tuple[int, ...]:
        if self.variables != other.variables:
            raise SeriesError(f"incompatible variables {self.variables} vs {other.variables}")
        if self.ring is not other.ring:
            raise SeriesError(
                f"mixed coefficient rings {self.ring.__name__}/{other.ring.__name__}; "
                "convert explicitly with to_rational()"
            )
        return tuple(min(a, b) for a, b in zip(self.caps, other.caps))

    def _scalar(self, value) -> "MultiSeries":
        if isinstance(value, bool) or not isinstance(value, (int, Fraction)):
            return NotImplemented
        if self.ring is int and not isinstance(value, int):
            raise SeriesError("rational scalar on an integer series; call to_rational() first")
        return MultiSeries.constant(value, self.variables, self.caps, self.ring)

    def _lift(self, other):
        return other if isinstance(other, MultiSeries) else self._scalar(other)

    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        caps = self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return self._new(out, caps=caps)

    __radd__ = __add__

    def __neg__(self):
        return self._new({e: -c for e, c in self._terms.items()})

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, MultiSeries):
            s = self._scalar(other)
            if s is NotImplemented:
                return s
            return self._new({e: c * other for e, c in self._terms.items()})
        caps = self._check(other)
        return self._new(_truncated_product(self._terms, other._terms, caps), caps=caps)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise SeriesError("only nonnegative integer powers; see series_pow")
        out = MultiSeries.constant(1, self.variables, self.caps, self.ring)
        base = self
        while n:
            if n & 1:
                out = out * base
            n >>= 1
            if n:
                base = base * base
        return out

    def __eq__(self, other):
        if not isinstance(other, MultiSeries):
            return NotImplemented
        return (
            self.variables == other.variables
            and self.caps == other.caps
            and self.ring is other.ring
            and self._terms == other._terms
        )

    def __hash__(self):
        return hash((self.variables, self.caps, frozenset(self._terms.items())))

    def __repr__(self):
        return (
            f"MultiSeries(variables={self.variables}, caps={self.caps}, "
            f"ring={self.ring.__name__}, terms={len(self._terms)})"
        )

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for e, c in self.items():
            mono = "*".join(
                v if d == 1 else f"{v}^{d}" for v, d in zip(self.variables, e) if d
            )
            parts.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(parts)


def _truncated_product(a: Mapping, b: Mapping, caps: Sequence[int]) -> Dict[Exponents, object]:
    # Bucket on the leading variable so pairs beyond its cap are never visited.
    cap0 = caps[0]
    buckets_a: Dict[int, list] = {}
    buckets_b: Dict[int, list] = {}
    for e, c in a.items():
        if e[0] <= cap0:
            buckets_a.setdefault(e[0], []).append((e, c))
    for e, c in b.items():
        if e[0] <= cap0:
            buckets_b.setdefault(e[0], []).append((e, c))
    rest = caps[1:]
    out: Dict[Exponents, object] = {}
    for da, ta in buckets_a.items():
        for db, tb in buckets_b.items():
            if da + db > cap0:
                continue
            for ea, ca in ta:
                for eb, cb in tb:
                    e = tuple(x + y for x, y in zip(ea, eb))
                    if any(d > c for d, c in zip(e[1:], rest)):
                        continue
                    out[e] = out.get(e, 0) + ca * cb
    return out


def _monomials_by_degree(caps: Sequence[int]) -> Iterator[Exponents]:
    """All exponent tuples within caps, ordered by total degree."""
    return iter(sorted(product(*(range(c + 1) for c in caps)), key=sum))


def series_add(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a + b


def series_mul(a: MultiSeries, b: MultiSeries) -> MultiSeries:
    return a * b


def series_reciprocal(a: MultiSeries) -> MultiSeries:
    """1/a via the coefficient recurrence  sum_e a_e b_{m-e} = [m == 0]."""
    c0 = a.constant_term()
    if c0 == 0:
        raise SeriesError("reciprocal of a series with zero constant term")
    if a.ring is int and c0 not in (1, -1):
        raise SeriesError(f"constant term {c0} is not a unit in the integers")
    support = [(e, c) for e, c in a._terms.items() if any(e)]
    b: Dict[Exponents, object] = {}
    for m in _monomials_by_degree(a.caps):
        acc = 1 if not any(m) else 0
        for e, c in support:
            r = tuple(x - y for x, y in zip(m, e))
            if min(r) < 0:
                continue
            t = b.get(r)
            if t:
                acc -= c * t
        if acc:
            b[m] = acc * c0 if a.ring is int else Fraction(acc) / c0
    return a._new(b)


def series_pow(a: MultiSeries, alpha) -> MultiSeries:
    """a**alpha for rational alpha and constant term 1.

    With |m| the total degree, a * E(b) = alpha * b * E(a) for the Euler
    operator E, which gives
        |m| b_m = sum_{e != 0} a_e (alpha |e| - |m - e|) b_{m-e}.
    """
    if a.ring is not Fraction:
        raise SeriesError("fractional powers need a rational series; call to_rational()")
    if a.constant_term() != 1:
        raise SeriesError("fractional power requires constant term 1")
    alpha = Fraction(alpha)
    support = [(e, c, sum(e)) for e, c in a._terms.items() if any(e)]
    b: Dict[Exponents, Fraction] = {}
    for m in _monomials_by_degree(a.caps):
        dm = sum(m)
        if dm == 0:
            b[m] = Fraction(1)
            continue
        acc = Fraction(0)
        for e, c, de in support:
            r = tuple(x - y for x, y in zip(m, e))
            if min(r) < 0:
                continue
            t = b.get(r)
            if t:
                acc += c * (alpha * de - (dm - de)) * t
        if acc:
            b[m] = acc / dm
    return a._new(b)


def series_inv_sqrt(a: MultiSeries) -> MultiSeries:
    """a**(-1/2) for a rational series with constant term 1."""
    return series_pow(a, Fraction(-1, 2))


def series_sqrt(a: MultiSeries) -> MultiSeries:
    return series_pow(a, Fraction(1, 2))


def series_exp(a: MultiSeries) -> MultiSeries:
    """exp(a) for a rational series with zero constant term, via |m| b_m = sum |e| a_e b_{m-e}."""
    if a.ring is not Fraction:
        raise SeriesError("exp needs a rational series; call to_rational()")
    if a.constant_term() != 0:
        raise SeriesError("exp requires zero constant term")
    support = [(e, c, sum(e)) for e, c in a._terms.items()]
    b: Dict[Exponents, Fraction] = {}
    for m in _monomials_by_degree(a.caps):
        dm = sum(m)
        if dm == 0:
            b[m] = Fraction(1)
            continue
        acc = Fraction(0)
        for e, c, de in support:
            r = tuple(x - y for x, y in zip(m, e))
            if min(r) < 0:
                continue
            t = b.get(r)
            if t:
                acc += de * c * t
        if acc:
            b[m] = acc / dm
    return a._new(b)


def coeff(a: MultiSeries, exponents):
    return a.coeff(exponents)
