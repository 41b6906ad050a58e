"""Plancherel and Jack measures, the character-ratio statistic, and content observables.

All probabilities and moments are exact rationals.  The normalized
statistic T is carried as its exact numerator S together with the scale
sqrt(alpha * C(n,2)); the float view appears only where a CDF is needed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import factorial

from .partitions import (
    Partition,
    alpha_content,
    box_stats,
    conjugate,
    dimension,
    enumerate_partitions,
    hook_products,
)


def binom2(k: int) -> int:
    """C(k, 2), zero for k < 2."""
    return k * (k - 1) // 2 if k >= 2 else 0


def plancherel_prob(lam: Partition) -> Fraction:
    """Plancherel probability n! / (hook product)^2 = dim(lam)^2 / n!."""
    n = sum(lam)
    if n < 1:
        raise ValueError("Plancherel measure is defined on partitions of n >= 1")
    d = dimension(lam)
    return Fraction(d * d, factorial(n))


def jack_prob(lam: Partition, alpha: Fraction) -> Fraction:
    """Jack measure alpha^n n! / (c c') with (c, c') the deformed hook products.

    Reduces to the Plancherel measure at alpha = 1.
    """
    n = sum(lam)
    if n < 1:
        raise ValueError("Jack measure is defined on partitions of n >= 1")
    alpha = Fraction(alpha)
    c, cp = hook_products(lam, alpha)
    return alpha**n * factorial(n) / (c * cp)


def level_measure(n: int, alpha: Fraction) -> dict[Partition, Fraction]:
    """The Jack measure on all partitions of n; n = 0 gives the point mass on ()."""
    if n == 0:
        return {(): Fraction(1)}
    return {lam: jack_prob(lam, alpha) for lam in enumerate_partitions(n)}


def s_value(lam: Partition, alpha: Fraction) -> Fraction:
    """Exact numerator S = sum_i [alpha*C(row_i,2) - C(col_i,2)].

    Equals the sum of the deformed contents over all boxes of the diagram.
    """
    alpha = Fraction(alpha)
    s = Fraction(0)
    for p in lam:
        s += alpha * binom2(p)
    for q in conjugate(lam):
        s -= binom2(q)
    return s


def char_ratio(lam: Partition) -> Fraction:
    """Character ratio on transpositions via the row/column binomial formula."""
    n = sum(lam)
    if n < 2:
        raise ValueError("character ratio requires n >= 2")
    num = sum(binom2(p) for p in lam) - sum(binom2(q) for q in conjugate(lam))
    return Fraction(num, binom2(n))


def t_scale(n: int, alpha: Fraction) -> float:
    """Normalization sqrt(alpha * C(n,2)) as a double."""
    return math.sqrt(float(alpha) * binom2(n))


@dataclass(frozen=True)
class TStat:
    """The normalized statistic: exact numerator plus its float image."""

    n: int
    alpha: Fraction
    s_value: Fraction
    t_float: float


def t_statistic(lam: Partition, alpha: Fraction) -> TStat:
    """Normalized character-ratio statistic T = S / sqrt(alpha*C(n,2))."""
    n = sum(lam)
    if n < 2:
        raise ValueError("t_statistic requires n >= 2")
    alpha = Fraction(alpha)
    s = s_value(lam, alpha)
    return TStat(n, alpha, s, float(s) / t_scale(n, alpha))


def content_multiset(lam: Partition, alpha: Fraction) -> list[Fraction]:
    """Deformed contents of all boxes of the diagram."""
    alpha = Fraction(alpha)
    return [alpha_content(bs.box, alpha) for bs in box_stats(lam)]


def content_elementary(lam: Partition, r: int, alpha: Fraction) -> Fraction:
    """Elementary symmetric function e_r of the deformed contents."""
    n = sum(lam)
    if not 1 <= r <= n:
        raise ValueError(f"r must be in 1..{n}, got {r}")
    # Standard one-pass recurrence; exact rationals throughout.
    e = [Fraction(1)] + [Fraction(0)] * r
    for v in content_multiset(lam, alpha):
        for k in range(r, 0, -1):
            e[k] += v * e[k - 1]
    return e[r]


def content_product(lam: Partition, m: int, alpha: Fraction) -> Fraction:
    """Product of (m + deformed content) over all boxes."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    prod = Fraction(1)
    for v in content_multiset(lam, alpha):
        prod *= m + v
    return prod
