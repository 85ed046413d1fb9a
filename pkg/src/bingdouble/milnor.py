"""Reduced colored Jones values of Milnor's links and Hopf pairings.

Milnor's link A_n is the chain obtained from the Borromean rings by
iterated Bing doubling of one component (A_2 is the Hopf link, A_3 the
Borromean rings). In the P'-basis its reduced colored Jones value
collapses to delta conditions at both ends, a product of x_coeff
factors along the chain, and one Borromean value at the tail.

The Hopf pairing oracles pair the S_l basis against V_m and P'_m; they
give an independent route to alpha and are used as end-to-end checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .bing import alpha, x_coeff
from .laurent import ONE, ZERO, LaurentV, exact_div
from .qnum import OutOfRange, cyclotomic_sym, qbinom, qfact, qfall, qint


class BadArity(ValueError):
    """A link operation was asked for fewer than three components."""


@lru_cache(maxsize=None)
def borromean_reduced(i: int, j: int, k: int) -> LaurentV:
    """Reduced colored Jones value of the Borromean rings.

    Zero unless i = j = k; on the diagonal (-1)^i {2i+1}_{i+1} / {1}.

    >>> borromean_reduced(0, 0, 0) == LaurentV({0: 1})
    True
    >>> borromean_reduced(1, 2, 1).is_zero()
    True
    """
    if i < 0 or j < 0 or k < 0:
        raise OutOfRange("colors must be >= 0")
    if not i == j == k:
        return ZERO
    value = exact_div(qfall(2 * i + 1, i + 1), qint(1))
    return -value if i % 2 else value


def milnor_reduced(colors) -> LaurentV:
    """Reduced colored Jones value of A_n at the given P'-colors.

    Zero unless the two outermost pairs of colors agree; otherwise the
    product of x_coeff(c_i, c_i, c_{i+1}) along the chain times the
    Borromean value at the tail color. For n = 3 both delta conditions
    apply and the value is borromean_reduced on the diagonal.
    """
    colors = [int(c) for c in colors]
    if len(colors) < 3:
        raise BadArity("Milnor's link needs at least 3 components")
    if any(c < 0 for c in colors):
        raise OutOfRange("colors must be >= 0")
    if colors[0] != colors[1] or colors[-2] != colors[-1]:
        return ZERO
    acc = ONE
    for i in range(1, len(colors) - 2):
        acc = acc * x_coeff(colors[i], colors[i], colors[i + 1])
        if acc.is_zero():
            return ZERO
    return acc * borromean_reduced(colors[-2], colors[-2], colors[-2])


def milnor_all_ones(n: int) -> LaurentV:
    """Closed form for all colors 1: (-1)^n F1^(n-2) F2^(n-2) F3 F4^(n-3).

    F_l is the balanced cyclotomic polynomial; a contract test pins the
    value equal to milnor_reduced([1]*n).
    """
    if n < 3:
        raise BadArity("Milnor's link needs at least 3 components")
    value = (
        cyclotomic_sym(1) ** (n - 2)
        * cyclotomic_sym(2) ** (n - 2)
        * cyclotomic_sym(3)
        * cyclotomic_sym(4) ** (n - 3)
    )
    return -value if n % 2 else value


@dataclass(frozen=True)
class PPrimeVector:
    """An element of the representation ring in the P'-basis.

    Stored as a finite map basis index -> LaurentV coefficient with no
    zero coefficients kept.
    """

    coeffs: tuple[tuple[int, LaurentV], ...]

    @classmethod
    def from_dict(cls, mapping: dict[int, LaurentV]) -> "PPrimeVector":
        items = tuple(sorted((m, c) for m, c in mapping.items() if not c.is_zero()))
        return cls(coeffs=items)

    def coefficient(self, m: int) -> LaurentV:
        for idx, c in self.coeffs:
            if idx == m:
                return c
        return ZERO

    def support(self) -> list[int]:
        return [m for m, _ in self.coeffs]

    def to_json(self) -> dict:
        return {str(m): c.to_json() for m, c in self.coeffs}


def s_in_pprime(l: int) -> PPrimeVector:
    """Expand S_l in the P'-basis: coefficient alpha(l, m) {m}! at P'_m.

    The support sits inside ceil(l/2) <= m <= 2l by the support window
    of alpha.
    """
    if l < 0:
        raise OutOfRange("basis index must be >= 0")
    mapping = {}
    for m in range((l + 1) // 2, 2 * l + 1):
        c = alpha(l, m) * qfact(m)
        if not c.is_zero():
            mapping[m] = c
    return PPrimeVector.from_dict(mapping)


def hopf_pair_Pprime_S(m: int, n: int) -> LaurentV:
    """Hopf pairing of P'_m against S_n: delta_{m,n} {2m+1}_{2m} / {m}!."""
    if m < 0 or n < 0:
        raise OutOfRange("basis indices must be >= 0")
    if m != n:
        return ZERO
    return exact_div(qfall(2 * m + 1, 2 * m), qfact(m))


@lru_cache(maxsize=None)
def hopf_pair_V_S(m: int, n: int) -> LaurentV:
    """Hopf pairing of V_m against S_n: {m+n+1}_{2n+1} / {1}."""
    if m < 0 or n < 0:
        raise OutOfRange("basis indices must be >= 0")
    return exact_div(qfall(m + n + 1, 2 * n + 1), qint(1))


@lru_cache(maxsize=None)
def hopf_pair_S_S(m: int, n: int) -> LaurentV:
    """Hopf pairing of S_m against S_n via the V-basis expansion of S_m.

    Contract: equals alpha(m, n) {2n+1}_{2n}, which is how the pairing
    serves as an independent derivation of alpha.
    """
    if m < 0 or n < 0:
        raise OutOfRange("basis indices must be >= 0")
    total = ZERO
    for k in range(m + 1):
        term = qbinom(2 * m + 1, k) * hopf_pair_V_S(2 * m - 2 * k, n)
        total = total - term if k % 2 else total + term
    return total
