"""Exact computations around Bing doubling and unified quantum invariants.

The core ring is Z[v, v^-1] with v the balanced half power of q. On top
of it sit the q-combinatorics, the change-of-basis coefficients alpha
and x_coeff with their cyclotomic order tables, reduced colored Jones
values of Milnor's links, surgery-level sums for the homology spheres
M_{i,j,k}, and a verification suite that rechecks the frozen reference
data. An HTTP service and a thin CLI expose everything.
"""

from .laurent import (
    ONE,
    ZERO,
    DivisionByZero,
    HbarSeries,
    LaurentV,
    NotDivisible,
    NotInvertible,
    OddHalfPower,
    exact_div,
    hbar_expand,
    series_invert,
)
from .qnum import (
    BadPartition,
    OutOfRange,
    cyclotomic,
    cyclotomic_sym,
    d_order,
    mobius,
    qbinom,
    qfact,
    qfact_pos,
    qfall,
    qint,
    qint_pos,
    qmultinom,
    sym_factorization,
)
from .bing import (
    DlTable,
    alpha,
    alpha_tilde,
    certificate_check,
    conjecture_scan,
    d_table,
    x_coeff,
    x_coeff_dual,
)
from .milnor import (
    BadArity,
    PPrimeVector,
    borromean_reduced,
    hopf_pair_Pprime_S,
    hopf_pair_S_S,
    hopf_pair_V_S,
    milnor_all_ones,
    milnor_reduced,
    s_in_pprime,
)
from .habiro import (
    RootResidue,
    bing_divisibility_check,
    casson_congruence_check,
    eval_at_root,
    lambda_series,
    mijk_partial,
    ohtsuki_c,
    omega,
    s_sum,
)
from .verify import CHECKS, REFERENCE_TABLES, run_suite

__version__ = "0.1.0"

__all__ = [
    "ONE",
    "ZERO",
    "DivisionByZero",
    "HbarSeries",
    "LaurentV",
    "NotDivisible",
    "NotInvertible",
    "OddHalfPower",
    "exact_div",
    "hbar_expand",
    "series_invert",
    "BadPartition",
    "OutOfRange",
    "cyclotomic",
    "cyclotomic_sym",
    "d_order",
    "mobius",
    "qbinom",
    "qfact",
    "qfact_pos",
    "qfall",
    "qint",
    "qint_pos",
    "qmultinom",
    "sym_factorization",
    "DlTable",
    "alpha",
    "alpha_tilde",
    "certificate_check",
    "conjecture_scan",
    "d_table",
    "x_coeff",
    "x_coeff_dual",
    "BadArity",
    "PPrimeVector",
    "borromean_reduced",
    "hopf_pair_Pprime_S",
    "hopf_pair_S_S",
    "hopf_pair_V_S",
    "milnor_all_ones",
    "milnor_reduced",
    "s_in_pprime",
    "RootResidue",
    "bing_divisibility_check",
    "casson_congruence_check",
    "eval_at_root",
    "lambda_series",
    "mijk_partial",
    "ohtsuki_c",
    "omega",
    "s_sum",
    "CHECKS",
    "REFERENCE_TABLES",
    "run_suite",
    "__version__",
]
