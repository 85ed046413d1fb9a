"""Balanced q-integers, q-binomials, and cyclotomic machinery.

The balanced q-integer is {i} = v^i - v^-i. Falling products, factorials
and binomials follow the usual conventions:

    {i}_n = {i}{i-1}...{i-n+1},   {n}! = {n}_n,   [i | n] = {i}_n / {n}!

with [i | n] defined for every integer i and n >= 0; the division is
always exact. One-sided analogues [m]_q = (q^m - 1)/(q - 1) back the
q-multinomials used by the surgery weights.

Everything here is cached aggressively; the returned LaurentV values are
shared, which is safe because they are immutable.
"""

from __future__ import annotations

from functools import lru_cache

from .laurent import ONE, ZERO, LaurentV, exact_div


class OutOfRange(ValueError):
    """An index argument outside the defined range of an operation."""


class BadPartition(ValueError):
    """A q-multinomial was asked for parts that do not partition n."""


def mobius(m: int) -> int:
    """The Moebius function, by trial division.

    >>> [mobius(m) for m in range(1, 11)]
    [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    """
    if m < 1:
        raise OutOfRange("mobius is defined for m >= 1")
    out = 1
    p = 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            out = -out
        p += 1
    if m > 1:
        out = -out
    return out


@lru_cache(maxsize=None)
def qint(i: int) -> LaurentV:
    """The balanced q-integer {i} = v^i - v^-i; {0} = 0, {-i} = -{i}."""
    if i == 0:
        return ZERO
    return LaurentV({i: 1, -i: -1})


@lru_cache(maxsize=None)
def qfall(i: int, n: int) -> LaurentV:
    """The falling product {i}_n over n consecutive q-integers."""
    if n < 0:
        raise OutOfRange("falling product needs n >= 0")
    if n == 0:
        return ONE
    acc = qfall(i, n - 1) * qint(i - n + 1)
    return acc


@lru_cache(maxsize=None)
def qfact(n: int) -> LaurentV:
    """The balanced q-factorial {n}! = {n}_n."""
    return qfall(n, n)


@lru_cache(maxsize=None)
def qbinom(i: int, n: int) -> LaurentV:
    """The balanced q-binomial [i | n], total in the integer i.

    >>> qbinom(4, 2) == LaurentV({-4: 1, -2: 1, 0: 2, 2: 1, 4: 1})
    True
    >>> qbinom(-1, 3).eval_at_v1()
    -1
    """
    if n < 0:
        raise OutOfRange("q-binomial needs n >= 0")
    return exact_div(qfall(i, n), qfact(n))


@lru_cache(maxsize=None)
def qint_pos(m: int) -> LaurentV:
    """The one-sided q-integer [m]_q = 1 + q + ... + q^(m-1)."""
    if m < 0:
        raise OutOfRange("one-sided q-integer needs m >= 0")
    return LaurentV({2 * t: 1 for t in range(m)})


@lru_cache(maxsize=None)
def qfact_pos(m: int) -> LaurentV:
    """The one-sided q-factorial [m]_q!."""
    if m < 0:
        raise OutOfRange("one-sided q-factorial needs m >= 0")
    if m == 0:
        return ONE
    return qfact_pos(m - 1) * qint_pos(m)


def qmultinom(n: int, parts: tuple[int, ...]) -> LaurentV:
    """The one-sided q-multinomial [n | parts]_q.

    The parts must be non-negative and sum to n; the quotient of
    one-sided factorials is exact.
    """
    parts = tuple(parts)
    if n < 0 or any(p < 0 for p in parts) or sum(parts) != n:
        raise BadPartition(f"{parts!r} does not partition {n}")
    acc = qfact_pos(n)
    for p in parts:
        acc = exact_div(acc, qfact_pos(p))
    return acc


def _divisors(m: int) -> list[int]:
    out = []
    d = 1
    while d * d <= m:
        if m % d == 0:
            out.append(d)
            if d != m // d:
                out.append(m // d)
        d += 1
    return sorted(out)


@lru_cache(maxsize=None)
def cyclotomic(m: int) -> LaurentV:
    """The m-th cyclotomic polynomial in q, stored on even v-support.

    Built as the Moebius-weighted product over divisors; the division by
    the denominator factors is provably exact.

    >>> cyclotomic(6).pretty("q")
    '1 - q + q^2'
    """
    if m < 1:
        raise OutOfRange("cyclotomic index must be >= 1")
    num = ONE
    den = ONE
    for d in _divisors(m):
        mu = mobius(m // d)
        if mu == 0:
            continue
        factor = LaurentV({2 * d: 1, 0: -1})  # q^d - 1
        if mu == 1:
            num = num * factor
        else:
            den = den * factor
    return exact_div(num, den)


@lru_cache(maxsize=None)
def cyclotomic_sym(l: int) -> LaurentV:
    """The balanced cyclotomic polynomial in v.

    The Moebius-weighted product of balanced q-integers {d} over the
    divisors d of l. Equals v^(-phi(l)) times cyclotomic(l) for l >= 2.

    >>> cyclotomic_sym(2).pretty()
    'v^-1 + v'
    """
    if l < 1:
        raise OutOfRange("cyclotomic index must be >= 1")
    num = ONE
    den = ONE
    for d in _divisors(l):
        mu = mobius(l // d)
        if mu == 0:
            continue
        if mu == 1:
            num = num * qint(d)
        else:
            den = den * qint(d)
    return exact_div(num, den)


def d_order(f: LaurentV, l: int) -> int | None:
    """The exact order of the balanced cyclotomic at l dividing f.

    Returns None for f = 0, which is divisible by every power.
    """
    if l < 1:
        raise OutOfRange("cyclotomic index must be >= 1")
    if f.is_zero():
        return None
    phi = cyclotomic_sym(l)
    order = 0
    while True:
        try:
            f = exact_div(f, phi)
        except ArithmeticError:
            return order
        order += 1


def sym_factorization(f: LaurentV, l_max: int) -> tuple[LaurentV, list[tuple[int, int]]]:
    """Strip balanced cyclotomic factors with index up to l_max.

    Returns (residual, [(l, multiplicity), ...]) with the residual equal
    to f divided by the product of the listed factors. Zero input keeps
    an empty factor list.
    """
    if f.is_zero():
        return f, []
    factors = []
    for l in range(1, l_max + 1):
        k = d_order(f, l)
        if k:
            factors.append((l, k))
            for _ in range(k):
                f = exact_div(f, cyclotomic_sym(l))
    return f, factors
