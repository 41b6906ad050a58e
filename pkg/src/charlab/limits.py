"""Kolmogorov distances to the standard normal, rate fits, and concentration probes.

Exact distances enumerate the partition level and aggregate probabilities
by the exact numerator S before any float enters; Monte-Carlo distances
use the batch sampler with one substream per draw.  The sup over real
thresholds is realized by comparing both one-sided limits at every atom
or sample point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .measures import level_measure, s_value, t_scale
from .sampling import IncrementScan, concentration_scan, sample_batch

EXACT_N_MAX = 40


def normal_cdf(x: float) -> float:
    """Standard normal CDF via the libm complementary error function.

    math.erfc is the platform's rational-approximation implementation
    (correct to a couple of ulps), so the absolute error here is far
    below 1e-12.
    """
    return 0.5 * math.erfc(-x / math.sqrt(2.0))


@dataclass(frozen=True)
class CdfAtom:
    t_value: float
    exact_s: Fraction
    prob: Fraction
    cum_prob: Fraction


@dataclass(frozen=True)
class DistanceReport:
    n: int
    alpha: Fraction
    method: str  # "exact" | "mc"
    distance: float
    sample_count: int | None = None
    dkw_eps_99: float | None = None
    seed: int | None = None


@dataclass(frozen=True)
class RateReport:
    points: tuple[tuple[int, float], ...]
    slope: float
    intercept: float
    sup_scaled: float


def exact_cdf(n: int, alpha: Fraction) -> list[CdfAtom]:
    """All atoms of the statistic at level n, sorted by exact S, with exact masses."""
    if not 2 <= n <= EXACT_N_MAX:
        raise ValueError(f"n must be in 2..{EXACT_N_MAX} for exact enumeration")
    alpha = Fraction(alpha)
    mass: dict[Fraction, Fraction] = {}
    for lam, p in level_measure(n, alpha).items():
        s = s_value(lam, alpha)
        mass[s] = mass.get(s, Fraction(0)) + p
    scale = t_scale(n, alpha)
    atoms = []
    cum = Fraction(0)
    for s in sorted(mass):
        cum += mass[s]
        atoms.append(CdfAtom(float(s) / scale, s, mass[s], cum))
    if cum != 1:
        raise AssertionError("atom masses must sum to 1 exactly")
    return atoms


def dual_atoms(atoms: list[CdfAtom], alpha: Fraction, n: int) -> list[CdfAtom]:
    """Atoms of the reciprocal-parameter statistic, by exact transpose duality.

    S at 1/alpha on transposed diagrams is -S/alpha with the same masses,
    so the dual atom list is the exact mirror of the input.
    """
    alpha = Fraction(alpha)
    scale = t_scale(n, Fraction(1) / alpha)
    out = []
    cum = Fraction(0)
    for atom in reversed(atoms):
        s = -atom.exact_s / alpha
        cum += atom.prob
        out.append(CdfAtom(float(s) / scale, s, atom.prob, cum))
    return out


def distance_from_atoms(atoms: list[CdfAtom]) -> float:
    """Sup-distance between an atomic CDF and the normal, both sides of each jump."""
    d = 0.0
    prev = Fraction(0)
    for atom in atoms:
        ph = normal_cdf(atom.t_value)
        d = max(d, abs(float(atom.cum_prob) - ph), abs(float(prev) - ph))
        prev = atom.cum_prob
    return d


def kolmogorov_exact(n: int, alpha: Fraction) -> DistanceReport:
    """Exact Kolmogorov distance of the level-n statistic from the normal."""
    alpha = Fraction(alpha)
    return DistanceReport(n, alpha, "exact", distance_from_atoms(exact_cdf(n, alpha)))


def dkw_halfwidth(count: int, confidence: float = 0.99) -> float:
    """DKW bound on the sup-distance of an empirical CDF at the given confidence."""
    return math.sqrt(math.log(2.0 / (1.0 - confidence)) / (2.0 * count))


def distance_from_samples(t_sorted: np.ndarray) -> float:
    """Sup-distance between the empirical CDF of sorted samples and the normal."""
    count = len(t_sorted)
    ph = np.array([normal_cdf(float(v)) for v in t_sorted])
    hi = np.arange(1, count + 1) / count
    lo = np.arange(0, count) / count
    return float(max(np.max(np.abs(hi - ph)), np.max(np.abs(lo - ph))))


def kolmogorov_mc(
    n: int, alpha: Fraction, count: int, seed: int, threads: int = 1
) -> DistanceReport:
    """Monte-Carlo Kolmogorov distance over ``count`` seeded draws."""
    if n < 2:
        raise ValueError("n must be >= 2")
    if count < 1000:
        raise ValueError("count must be >= 1000")
    alpha = Fraction(alpha)
    batch = sample_batch(n, alpha, seed, count, threads=threads)
    d = distance_from_samples(np.sort(batch.t_values))
    return DistanceReport(n, alpha, "mc", d, count, dkw_halfwidth(count), seed)


def rate_fit(reports: list[DistanceReport]) -> RateReport:
    """Least-squares fit of log(distance) against log(n), plus the scaled sup."""
    if len(reports) < 3:
        raise ValueError("rate fit needs at least 3 reports")
    ns = [r.n for r in reports]
    if len(set(ns)) != len(ns):
        raise ValueError("rate fit needs distinct n values")
    if len({r.alpha for r in reports}) != 1:
        raise ValueError("rate fit needs a single alpha")
    if any(r.distance <= 0 for r in reports):
        raise ValueError("rate fit needs positive distances")
    pts = sorted((r.n, r.distance) for r in reports)
    x = np.log([p[0] for p in pts])
    y = np.log([p[1] for p in pts])
    slope, intercept = np.polyfit(x, y, 1)
    sup_scaled = max(d * math.sqrt(n) for n, d in pts)
    return RateReport(tuple(pts), float(slope), float(intercept), sup_scaled)


@dataclass(frozen=True)
class ConcentrationReport:
    n: int
    alpha: Fraction
    sample_count: int
    seed: int
    threshold: float  # 2e*sqrt(n)
    max_abs_final: int
    final_exceed_count: int
    step_bound_violations: int
    tight_bound_held: bool  # informational: |X_j| <= j-1 at every sampled step


def concentration_probe(
    n: int, count: int, alpha: Fraction, seed: int
) -> ConcentrationReport:
    """Scan sampled undeformed paths for final increments above 2e*sqrt(n).

    Also verifies |X_j| <= j at every step and records whether the tighter
    |X_j| <= j-1 content bound held (informational).
    """
    if n < 3:
        raise ValueError("n must be >= 3")
    if Fraction(alpha) != 1:
        raise ValueError("the concentration probe is defined for alpha = 1")
    threshold = 2.0 * math.e * math.sqrt(n)
    scan: IncrementScan = concentration_scan(n, seed, count, threshold)
    return ConcentrationReport(
        n,
        Fraction(1),
        count,
        seed,
        threshold,
        scan.max_abs_final,
        scan.final_exceed_count,
        scan.step_bound_violations,
        scan.max_abs_over_step <= 0,
    )
