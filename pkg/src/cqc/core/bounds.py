# Copyright 2021 - 2024 Universität Tübingen, DKFZ, EMBL, and Universität zu Köln
# for the German Human Genome-Phenome Archive (GHGA)
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Closed-form lower bounds on t-pseudo-borders and on the quantum distance.

Every value is either an exact fraction or rounded down to a fixed number of
decimals, so a reported bound never exceeds the true one.
"""

import math
from decimal import ROUND_FLOOR, Decimal, localcontext
from fractions import Fraction
from math import factorial, isqrt

from cqc.core.exceptions import ParameterRangeError
from cqc.core.models import BoundReport, FormulaId

DEFAULT_DIGITS = 12

# extra decimals carried through the odd terms before the final rounding
_GUARD_DIGITS = 8


def floor_decimal(value: Fraction, digits: int) -> str:
    """``value`` rounded down to ``digits`` decimals."""
    scaled = value.numerator * 10**digits // value.denominator
    sign = "-" if scaled < 0 else ""
    whole, fraction = divmod(abs(scaled), 10**digits)
    if not digits:
        return f"{sign}{whole}"
    return f"{sign}{whole}.{fraction:0{digits}d}"


def _exact_report(
    formula_id: FormulaId,
    *,
    n: int,
    t_or_d: int | None,
    M: int,
    value: Fraction,
    note: str,
    digits: int,
) -> BoundReport:
    return BoundReport(
        formula_id=formula_id,
        n=n,
        t_or_d=t_or_d,
        M=M,
        value_numerator=value.numerator,
        value_denominator_or_precision=value.denominator,
        exact=True,
        decimal=floor_decimal(value, digits),
        validity_note=note,
    )


def half_root_floor(n: int) -> int:
    """``floor(sqrt(n / 2))``"""
    return isqrt(n // 2)


def _root_half(n: int, digits: int) -> tuple[Fraction, bool]:
    """``sqrt(n / 2)``, exact when ``2n`` is a square and rounded down otherwise."""
    root = isqrt(2 * n)
    if root * root == 2 * n:
        return Fraction(root, 2), True
    scale = 10**digits
    return Fraction(isqrt(2 * n * scale * scale), 2 * scale), False


def _exponential_partial_sum(n: int, M: int, digits: int) -> tuple[Fraction, bool]:
    """``sum_{i <= M} (n/2)^(i/2) / i!`` and whether the result is exact."""
    half = Fraction(n, 2)
    root, exact = _root_half(n, digits + _GUARD_DIGITS)
    total = Fraction(0)
    for i in range(M + 1):
        term = half ** (i // 2)
        if i % 2:
            term *= root
        total += term / factorial(i)
    return total, exact or M == 0


def _sum_report(
    formula_id: FormulaId,
    *,
    n: int,
    t_or_d: int | None,
    M: int,
    note: str,
    digits: int,
) -> BoundReport:
    total, exact = _exponential_partial_sum(n, M, digits)
    exceeds = float(total) >= math.exp(math.sqrt(n / 2))
    if exact:
        report = _exact_report(
            formula_id, n=n, t_or_d=t_or_d, M=M, value=total, note=note, digits=digits
        )
        return report.model_copy(update={"exceeds_exponential": exceeds})
    floored = total.numerator * 10**digits // total.denominator
    return BoundReport(
        formula_id=formula_id,
        n=n,
        t_or_d=t_or_d,
        M=M,
        value_numerator=floored,
        value_denominator_or_precision=digits,
        exact=False,
        decimal=floor_decimal(Fraction(floored, 10**digits), digits),
        validity_note=note,
        exceeds_exponential=exceeds,
    )


def theorem_bound(n: int, t: int, *, digits: int = DEFAULT_DIGITS) -> BoundReport:
    """Least size of a t-pseudo-border of the hypercube on ``[n]``.

    ``M = min(t - 1, floor(sqrt(n / 2)))``; odd terms carry ``sqrt(n / 2)``.
    """
    if n < 2:
        raise ParameterRangeError(name="n", value=n, requirement="n >= 2")
    if t < 1:
        raise ParameterRangeError(name="t", value=t, requirement="t >= 1")
    M = min(t - 1, half_root_floor(n))
    return _sum_report(
        FormulaId.THEOREM,
        n=n,
        t_or_d=t,
        M=M,
        note=f"Every t-pseudo-border of the hypercube on [{n}] with t = {t} has at"
        + " least this many members.",
        digits=digits,
    )


def corollary_bound(
    n: int, d: int | None, *, digits: int = DEFAULT_DIGITS
) -> BoundReport:
    """Lower bound on the quantum distance from the classical distance ``d``.

    ``M = min(floor((d - 3) / 2), floor(sqrt(n / 2)))``. ``d = None`` stands for a
    generator matrix without any column dependency.
    """
    if n % 2 or n < 2:
        raise ParameterRangeError(name="n", value=n, requirement="n must be even")
    if d is not None and d < 3:
        raise ParameterRangeError(name="d", value=d, requirement="d >= 3")
    root = half_root_floor(n)
    M = root if d is None else min((d - 3) // 2, root)
    return _sum_report(
        FormulaId.COROLLARY,
        n=n,
        t_or_d=d,
        M=M,
        note="Lower bound on the quantum distance D, valid when K != 0.",
        digits=digits,
    )


def k_layer_bound(n: int, k: int, *, digits: int = DEFAULT_DIGITS) -> BoundReport:
    """Least number of k-sets of a minimal t-pseudo-border, ``k`` even and at most
    ``min(t - 1, sqrt(n / 2))``.
    """
    if k < 0 or k % 2:
        raise ParameterRangeError(
            name="k", value=k, requirement="k must be even and non-negative"
        )
    half = k // 2
    value = Fraction(n**half, 2**half * factorial(k))
    return _exact_report(
        FormulaId.K_LAYER,
        n=n,
        t_or_d=None,
        M=k,
        value=value,
        note=f"Number of {k}-sets of a minimal t-pseudo-border when"
        + f" {k} <= min(t - 1, sqrt(n / 2)).",
        digits=digits,
    )


def simple_bound(n: int, *, digits: int = DEFAULT_DIGITS) -> BoundReport:
    """``1 + n / 2``: the empty set plus at least ``n / 2`` pairs."""
    return _exact_report(
        FormulaId.SIMPLE,
        n=n,
        t_or_d=None,
        M=2,
        value=1 + Fraction(n, 2),
        note="Needs t >= 3 for t-pseudo-borders and d >= 7 for pseudo-borders of"
        + " Cayley graphs.",
        digits=digits,
    )


def pair_count_bound(n: int, *, digits: int = DEFAULT_DIGITS) -> BoundReport:
    """Least number of 2-sets of a minimal t-pseudo-border with t >= 3."""
    return _exact_report(
        FormulaId.PAIRS,
        n=n,
        t_or_d=3,
        M=2,
        value=Fraction(n, 2),
        note="Number of 2-sets of a minimal t-pseudo-border, t >= 3.",
        digits=digits,
    )


def odd_triple_bound(n: int, *, digits: int = DEFAULT_DIGITS) -> BoundReport:
    """Least number of odd 3-sets of a minimal t-pseudo-border with t >= 4."""
    return _exact_report(
        FormulaId.ODD_TRIPLES,
        n=n,
        t_or_d=4,
        M=3,
        value=Fraction(n * (n - 2), 6),
        note="Number of odd 3-sets of a minimal t-pseudo-border, t >= 4.",
        digits=digits,
    )


def quadruple_bound(n: int, *, digits: int = DEFAULT_DIGITS) -> BoundReport:
    """Least number of 4-sets of a minimal t-pseudo-border with t >= 5."""
    return _exact_report(
        FormulaId.QUADRUPLES,
        n=n,
        t_or_d=5,
        M=4,
        value=Fraction(n * (n - 2), 24),
        note="Number of 4-sets of a minimal t-pseudo-border, t >= 5.",
        digits=digits,
    )


def stirling_floor(n: int, *, digits: int = DEFAULT_DIGITS) -> BoundReport:
    """``e^sqrt(n / 2)`` rounded down; an asymptotic reference value only."""
    if n < 0:
        raise ParameterRangeError(name="n", value=n, requirement="n >= 0")
    with localcontext() as context:
        context.prec = digits + 2 * _GUARD_DIGITS + len(str(n))
        value = (Decimal(n) / 2).sqrt().exp()
        # exp is correctly rounded to nearest, one unit less is a safe floor
        scaled = (value * Decimal(10) ** digits).to_integral_value(rounding=ROUND_FLOOR)
    floored = int(scaled) - 1
    return BoundReport(
        formula_id=FormulaId.STIRLING,
        n=n,
        t_or_d=None,
        M=half_root_floor(n),
        value_numerator=floored,
        value_denominator_or_precision=digits,
        exact=False,
        decimal=floor_decimal(Fraction(floored, 10**digits), digits),
        validity_note="Asymptotic reference for large t; never asserted.",
    )


def counting_floor_holds(size: int, n: int) -> bool:
    """Whether ``size >= 1 + n / 2``."""
    return 2 * size >= 2 + n


def decimal_value(report: BoundReport) -> Fraction:
    """The rendered decimal of ``report`` as an exact fraction."""
    return Fraction(report.decimal)
