"""Sparse Laurent polynomials in v = q^(1/2), plus exact hbar series.

Every invariant value in this package lives in Z[v, v^-1] where v is the
balanced half power of q. A power q^k is stored at v-exponent 2k, so
ordinary polynomials in q occupy even v-support and genuinely half
integral weights occupy odd support. Coefficients are arbitrary
precision Python ints. Rational numbers appear only in the hbar
expansions at q = 1 + hbar, which carry Fraction coefficients.

LaurentV values are immutable: every operation returns a fresh value and
nothing ever mutates the term map of an existing one.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Iterator, Union


class DivisionByZero(ArithmeticError):
    """Exact division with a zero divisor."""


class NotDivisible(ArithmeticError):
    """Exact division requested but the quotient does not exist in Z[v, v^-1]."""


class NotInvertible(ArithmeticError):
    """Series inversion requested for a series with zero constant term."""


class OddHalfPower(ValueError):
    """An operation that needs even v-support met an odd v-exponent."""


class LaurentV:
    """A Laurent polynomial in v with integer coefficients.

    Internally a map from v-exponent to nonzero coefficient. The map is
    canonical: no zero coefficients are ever stored, so equality and
    hashing are structural.

    >>> a = LaurentV({1: 1, -1: -1})
    >>> a * a == LaurentV({2: 1, 0: -2, -2: 1})
    True
    """

    __slots__ = ("_c",)

    def __init__(self, terms: Union[dict, Iterable[tuple[int, int]], None] = None):
        c: dict[int, int] = {}
        if terms:
            items = terms.items() if isinstance(terms, dict) else terms
            for e, coef in items:
                if not isinstance(e, int) or not isinstance(coef, int):
                    raise TypeError("exponents and coefficients must be ints")
                coef += c.pop(e, 0)
                if coef:
                    c[e] = coef
        self._c = c

    @classmethod
    def _raw(cls, c: dict[int, int]) -> "LaurentV":
        # trusted constructor: c has no zero values and is never shared
        self = object.__new__(cls)
        self._c = c
        return self

    @classmethod
    def monomial(cls, e: int, coef: int = 1) -> "LaurentV":
        return cls._raw({e: coef}) if coef else cls._raw({})

    # -- structure -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __len__(self) -> int:
        return len(self._c)

    def coefficient(self, e: int) -> int:
        return self._c.get(e, 0)

    def terms(self) -> Iterator[tuple[int, int]]:
        """Yield (exponent, coefficient) pairs in ascending exponent order."""
        for e in sorted(self._c):
            yield e, self._c[e]

    @property
    def min_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return min(self._c)

    @property
    def max_exp(self) -> int:
        if not self._c:
            raise ValueError("zero polynomial has no degree")
        return max(self._c)

    def has_even_support(self) -> bool:
        return all(e % 2 == 0 for e in self._c)

    # -- ring operations -----------------------------------------------

    def __add__(self, other: "LaurentV") -> "LaurentV":
        if not isinstance(other, LaurentV):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        acc = dict(a)
        for e, coef in b.items():
            s = acc.get(e, 0) + coef
            if s:
                acc[e] = s
            else:
                del acc[e]
        return LaurentV._raw(acc)

    def __sub__(self, other: "LaurentV") -> "LaurentV":
        if not isinstance(other, LaurentV):
            return NotImplemented
        acc = dict(self._c)
        for e, coef in other._c.items():
            s = acc.get(e, 0) - coef
            if s:
                acc[e] = s
            else:
                del acc[e]
        return LaurentV._raw(acc)

    def __neg__(self) -> "LaurentV":
        return LaurentV._raw({e: -c for e, c in self._c.items()})

    def __mul__(self, other: Union["LaurentV", int]) -> "LaurentV":
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentV._raw({e: c * other for e, c in self._c.items()})
        if not isinstance(other, LaurentV):
            return NotImplemented
        a, b = self._c, other._c
        if len(a) > len(b):
            a, b = b, a
        acc: dict[int, int] = {}
        get = acc.get
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                e = e1 + e2
                s = get(e, 0) + c1 * c2
                if s:
                    acc[e] = s
                else:
                    del acc[e]
        return LaurentV._raw(acc)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "LaurentV":
        if not isinstance(n, int) or n < 0:
            raise ValueError("only non-negative integer powers")
        acc = ONE
        for _ in range(n):
            acc = acc * self
        return acc

    def shift(self, k: int) -> "LaurentV":
        """Multiply by the monomial v^k."""
        return LaurentV._raw({e + k: c for e, c in self._c.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, LaurentV):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    # -- substitutions ---------------------------------------------------

    def substitute_v_inverse(self) -> "LaurentV":
        """The image under the ring involution v -> v^-1."""
        return LaurentV._raw({-e: c for e, c in self._c.items()})

    def eval_at_v1(self) -> int:
        """The integer value at v = 1."""
        return sum(self._c.values())

    # -- presentation ----------------------------------------------------

    def to_json(self) -> list[list]:
        """Canonical JSON form: [[e, c-string], ...] ascending in e."""
        return [[e, str(self._c[e])] for e in sorted(self._c)]

    @classmethod
    def from_json(cls, data: Iterable) -> "LaurentV":
        terms = []
        for pair in data:
            e, c = pair
            terms.append((int(e), int(c)))
        return cls(terms)

    def pretty(self, display: str = "v") -> str:
        """Human readable form, ascending exponents.

        display="q" rewrites every exponent as a power of q and insists
        on even v-support.
        """
        if display not in ("v", "q"):
            raise ValueError("display must be 'v' or 'q'")
        if not self._c:
            return "0"
        if display == "q" and not self.has_even_support():
            raise OddHalfPower(
                "polynomial has odd v-support and cannot be displayed in q"
            )
        out = []
        for e in sorted(self._c):
            c = self._c[e]
            mag = abs(c)
            exp = e if display == "v" else e // 2
            if exp == 0:
                body = str(mag)
            else:
                var = display if exp == 1 else f"{display}^{exp}"
                body = var if mag == 1 else f"{mag}{var}"
            if not out:
                out.append(body if c > 0 else f"-{body}")
            else:
                out.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentV({self.pretty()})"


ZERO = LaurentV._raw({})
ONE = LaurentV._raw({0: 1})


def exact_div(a: LaurentV, b: LaurentV) -> LaurentV:
    """The exact quotient a / b in Z[v, v^-1].

    Shifts both operands to ordinary polynomials, runs integer long
    division, and shifts back. Raises NotDivisible when any quotient
    coefficient fails to divide evenly or a remainder survives.

    >>> exact_div(LaurentV({2: 1, -2: -1}), LaurentV({1: 1, -1: -1}))
    LaurentV(v^-1 + v)
    """
    if b.is_zero():
        raise DivisionByZero("exact division by the zero polynomial")
    if a.is_zero():
        return ZERO
    ac, bc = a._c, b._c
    # when both supports are parity-homogeneous, work on a stride-2 grid
    step = 2
    pa = next(iter(ac)) & 1
    for e in ac:
        if e & 1 != pa:
            step = 1
            break
    if step == 2:
        pb = next(iter(bc)) & 1
        for e in bc:
            if e & 1 != pb:
                step = 1
                break
    alo, ahi = min(ac), max(ac)
    blo, bhi = min(bc), max(bc)
    if ahi - alo < bhi - blo:
        raise NotDivisible("divisor span exceeds dividend span")
    da = [0] * ((ahi - alo) // step + 1)
    for e, c in ac.items():
        da[(e - alo) // step] = c
    db = [0] * ((bhi - blo) // step + 1)
    for e, c in bc.items():
        db[(e - blo) // step] = c
    nb = len(db)
    lead = db[-1]
    quot = [0] * (len(da) - nb + 1)
    for i in range(len(quot) - 1, -1, -1):
        c = da[i + nb - 1]
        if c:
            qc, rem = divmod(c, lead)
            if rem:
                raise NotDivisible("leading coefficient does not divide")
            quot[i] = qc
            for j in range(nb):
                da[i + j] -= qc * db[j]
    if any(da[: nb - 1]):
        raise NotDivisible("nonzero remainder")
    qlo = alo - blo
    return LaurentV._raw(
        {qlo + step * i: c for i, c in enumerate(quot) if c}
    )


def substitute_v_inverse(a: LaurentV) -> LaurentV:
    return a.substitute_v_inverse()


def eval_at_v1(a: LaurentV) -> int:
    return a.eval_at_v1()


@dataclass(frozen=True)
class HbarSeries:
    """A truncated power series in hbar = q - 1 with Fraction coefficients.

    coeffs[k] is the coefficient of hbar^k; len(coeffs) == order + 1.
    Arithmetic truncates to the smaller order of the operands and never
    pretends to know coefficients beyond what is stored.
    """

    order: int
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be non-negative")
        if len(self.coeffs) != self.order + 1:
            raise ValueError("coefficient count must equal order + 1")

    @classmethod
    def from_list(cls, values, order: int | None = None) -> "HbarSeries":
        coeffs = [Fraction(x) for x in values]
        if order is None:
            order = len(coeffs) - 1
        coeffs = coeffs[: order + 1] + [Fraction(0)] * (order - len(coeffs) + 1)
        return cls(order, tuple(coeffs))

    def truncate(self, order: int) -> "HbarSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return HbarSeries(order, self.coeffs[: order + 1])

    def __add__(self, other: "HbarSeries") -> "HbarSeries":
        n = min(self.order, other.order)
        return HbarSeries(
            n, tuple(self.coeffs[k] + other.coeffs[k] for k in range(n + 1))
        )

    def __sub__(self, other: "HbarSeries") -> "HbarSeries":
        n = min(self.order, other.order)
        return HbarSeries(
            n, tuple(self.coeffs[k] - other.coeffs[k] for k in range(n + 1))
        )

    def __neg__(self) -> "HbarSeries":
        return HbarSeries(self.order, tuple(-c for c in self.coeffs))

    def __mul__(self, other: "HbarSeries") -> "HbarSeries":
        n = min(self.order, other.order)
        out = [Fraction(0)] * (n + 1)
        for i, ci in enumerate(self.coeffs[: n + 1]):
            if ci:
                for j in range(n + 1 - i):
                    out[i + j] += ci * other.coeffs[j]
        return HbarSeries(n, tuple(out))

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                h = "h" if k == 1 else f"h^{k}"
                parts.append(f"({c}){h}")
        return " + ".join(parts) if parts else "0"


@lru_cache(maxsize=None)
def _half_power_coeffs(e: int, order: int) -> tuple[Fraction, ...]:
    # binomial series of (1 + h)^(e/2), exact
    a = Fraction(e, 2)
    out = [Fraction(1)]
    for k in range(1, order + 1):
        out.append(out[-1] * (a - k + 1) / k)
    return tuple(out)


def hbar_expand(a: LaurentV, order: int) -> HbarSeries:
    """Expand a Laurent polynomial at q = 1 + hbar, truncated at the order.

    Each term v^e contributes the exact binomial series of (1+hbar)^(e/2);
    odd exponents are fine here because the half powers stay rational.
    """
    if order < 0:
        raise ValueError("order must be non-negative")
    out = [Fraction(0)] * (order + 1)
    for e, c in a._c.items():
        for k, b in enumerate(_half_power_coeffs(e, order)):
            out[k] += c * b
    return HbarSeries(order, tuple(out))


def series_invert(s: HbarSeries) -> HbarSeries:
    """The multiplicative inverse of a series with nonzero constant term."""
    c0 = s.coeffs[0]
    if c0 == 0:
        raise NotInvertible("series has zero constant term")
    out = [Fraction(1) / c0]
    for k in range(1, s.order + 1):
        acc = Fraction(0)
        for j in range(1, k + 1):
            acc += s.coeffs[j] * out[k - j]
        out.append(-acc / c0)
    return HbarSeries(s.order, tuple(out))
