"""Exact verification of the measure, kernel, and moment identities by enumeration.

Every check is an exact rational identity or inequality at a fixed
rational alpha: status is pass iff the relation holds with zero
tolerance.  Checks accept an injectable kernel so fault-injection tests
can confirm the suite has no blind spots.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable

from . import growth
from .growth import KernelRow, enumerate_paths, increments, plancherel_kernel
from .jackbasis import degree_space, oracle_kernel_entry
from .measures import (
    binom2,
    content_elementary,
    content_multiset,
    content_product,
    jack_prob,
    level_measure,
    s_value,
)
from .partitions import (
    Partition,
    add_box,
    addable_corners,
    alpha_content,
    conjugate,
    enumerate_partitions,
    format_partition,
)

KernelFn = Callable[[Partition, Fraction], KernelRow]

DEFAULT_ALPHAS = (
    Fraction(1),
    Fraction(2),
    Fraction(1, 2),
    Fraction(3, 2),
    Fraction(5),
)
ORACLE_ALPHAS = (Fraction(2), Fraction(1, 2), Fraction(3, 2))


@dataclass(frozen=True)
class CheckResult:
    check_id: str
    n: int
    alpha: Fraction
    lhs: Fraction
    rhs: Fraction
    relation: str  # "eq" | "le"
    status: bool
    context: str = ""

    @staticmethod
    def compare(check_id, n, alpha, lhs, rhs, relation="eq", context=""):
        ok = lhs == rhs if relation == "eq" else lhs <= rhs
        return CheckResult(check_id, n, Fraction(alpha), lhs, rhs, relation, ok, context)

    def as_dict(self) -> dict:
        return {
            "check": self.check_id,
            "n": self.n,
            "alpha": str(self.alpha),
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "relation": self.relation,
            "status": "pass" if self.status else "fail",
            "context": self.context,
        }


def _abs_gap(pairs: Iterable[tuple[Fraction, Fraction]]) -> Fraction:
    """Total absolute deviation; equals 0 iff every pair agrees exactly."""
    return sum((abs(a - b) for a, b in pairs), Fraction(0))


def check_kernel(
    n_max: int, alpha: Fraction, kernel_fn: KernelFn | None = None
) -> list[CheckResult]:
    """Row sums for every source of size <= n_max; level coherence for j <= n_max."""
    kernel_fn = kernel_fn or growth.kernel
    alpha = Fraction(alpha)
    out = []
    for j in range(1, n_max + 2):
        push: dict[Partition, Fraction] = {}
        prior = level_measure(j - 1, alpha)
        for mu in enumerate_partitions(j - 1):
            row = kernel_fn(mu, alpha)
            total = sum((p for _, p, _ in row.entries), Fraction(0))
            positive = all(p > 0 for _, p, _ in row.entries)
            covers = [b for b, _, _ in row.entries] == addable_corners(mu)
            out.append(
                CheckResult(
                    "kernel-row-sum",
                    j - 1,
                    alpha,
                    total,
                    Fraction(1),
                    "eq",
                    total == 1 and positive and covers,
                    f"mu={format_partition(mu)}",
                )
            )
            if j <= n_max:
                for box, p, _ in row.entries:
                    lam = add_box(mu, box)
                    push[lam] = push.get(lam, Fraction(0)) + prior[mu] * p
        if j <= n_max:
            for lam, mass in level_measure(j, alpha).items():
                out.append(
                    CheckResult.compare(
                        "kernel-coherence",
                        j,
                        alpha,
                        push.get(lam, Fraction(0)),
                        mass,
                        context=f"lam={format_partition(lam)}",
                    )
                )
    return out


def check_alpha_one_reduction(size_max: int) -> list[CheckResult]:
    """The deformed kernel at alpha = 1 equals the dimension-ratio rule, entrywise."""
    out = []
    for size in range(size_max + 1):
        for mu in enumerate_partitions(size):
            got = growth.kernel(mu, Fraction(1)).as_dict()
            want = plancherel_kernel(mu).as_dict()
            gap = _abs_gap((got[b], want[b]) for b in want)
            out.append(
                CheckResult.compare(
                    "alpha-one-reduction", size, Fraction(1), gap, Fraction(0),
                    context=f"mu={format_partition(mu)}",
                )
            )
    return out


def kernel_fixtures(alpha: Fraction) -> dict[Partition, dict[tuple[int, int], Fraction]]:
    """Closed-form one-step rows for every source of size <= 2."""
    a = Fraction(alpha)
    return {
        (): {(1, 1): Fraction(1)},
        (1,): {(1, 2): 1 / (a + 1), (2, 1): a / (a + 1)},
        (2,): {(1, 3): 1 / (2 * a + 1), (2, 1): 2 * a / (2 * a + 1)},
        (1, 1): {(1, 2): 2 / (a + 2), (3, 1): a / (a + 2)},
    }


def check_kernel_fixtures(
    alpha: Fraction, kernel_fn: KernelFn | None = None
) -> list[CheckResult]:
    kernel_fn = kernel_fn or growth.kernel
    alpha = Fraction(alpha)
    out = []
    for mu, expected in kernel_fixtures(alpha).items():
        got = kernel_fn(mu, alpha).as_dict()
        gap = _abs_gap((got.get(b, Fraction(0)), p) for b, p in expected.items())
        gap += sum((abs(p) for b, p in got.items() if b not in expected), Fraction(0))
        out.append(
            CheckResult.compare(
                "kernel-fixture", sum(mu), alpha, gap, Fraction(0), context=f"mu={format_partition(mu)}",
            )
        )
    return out


def conditional_moment(row: KernelRow, alpha: Fraction, power: int) -> Fraction:
    """E(X^power | source) formed exactly from one kernel row."""
    return sum(
        (p * alpha_content(b, alpha) ** power for b, p, _ in row.entries), Fraction(0)
    )


def check_conditional_moments(
    n_max: int, alpha: Fraction, kernel_fn: KernelFn | None = None
) -> list[CheckResult]:
    """One-step mean zero, constant second moment, and the fourth-moment formula."""
    kernel_fn = kernel_fn or growth.kernel
    alpha = Fraction(alpha)
    out = []
    for size in range(1, n_max):
        j = size + 1
        for mu in enumerate_partitions(size):
            row = kernel_fn(mu, alpha)
            ctx = f"mu={format_partition(mu)}"
            out.append(
                CheckResult.compare(
                    "cond-mean-zero", j, alpha,
                    conditional_moment(row, alpha, 1), Fraction(0), context=ctx,
                )
            )
            out.append(
                CheckResult.compare(
                    "cond-second-moment", j, alpha,
                    conditional_moment(row, alpha, 2), alpha * (j - 1), context=ctx,
                )
            )
            contents = content_multiset(mu, alpha)
            expected4 = (
                alpha**2 * binom2(j)
                + alpha * (alpha - 1) ** 2 * (j - 1)
                + 3 * alpha * sum(v * v for v in contents)
                + 3 * alpha * (alpha - 1) * sum(contents)
            )
            out.append(
                CheckResult.compare(
                    "cond-fourth-moment", j, alpha,
                    conditional_moment(row, alpha, 4), expected4, context=ctx,
                )
            )
    return out


def check_projection(n_max: int, alpha: Fraction) -> list[CheckResult]:
    """E(X_j | S = s) = (j-1) s / C(n,2), by full path enumeration per level."""
    if n_max > 8:
        raise ValueError("path enumeration is limited to n <= 8")
    alpha = Fraction(alpha)
    out = []
    for n in range(2, n_max + 1):
        groups: dict[Fraction, list[tuple[Fraction, list[Fraction]]]] = {}
        for path in enumerate_paths(n, alpha):
            xs = increments(path)
            s = sum(xs, Fraction(0))
            groups.setdefault(s, []).append((path.prob, xs))
        for s, members in sorted(groups.items()):
            total = sum((p for p, _ in members), Fraction(0))
            gap = Fraction(0)
            for j in range(1, n + 1):
                cond = sum((p * xs[j - 1] for p, xs in members), Fraction(0)) / total
                gap += abs(cond - (j - 1) * s / binom2(n))
            out.append(
                CheckResult.compare(
                    "projection-linearity", n, alpha, gap, Fraction(0),
                    context=f"s={s}, paths={len(members)}",
                )
            )
    return out


def check_global_moments(
    n_max: int, alpha: Fraction, kernel_fn: KernelFn | None = None
) -> list[CheckResult]:
    """Unconditional moment identities and the exact cube-moment bound chain."""
    kernel_fn = kernel_fn or growth.kernel
    alpha = Fraction(alpha)
    out = []
    for n in range(3, n_max + 1):
        prior = level_measure(n - 1, alpha)
        e2 = Fraction(0)
        e4 = Fraction(0)
        cube = Fraction(0)
        mixed = Fraction(0)
        for mu, mass in prior.items():
            row = kernel_fn(mu, alpha)
            e2 += mass * conditional_moment(row, alpha, 2)
            e4 += mass * conditional_moment(row, alpha, 4)
            cond_cube = sum(
                (p * abs(alpha_content(b, alpha)) ** 3 for b, p, _ in row.entries),
                Fraction(0),
            )
            cube += mass * cond_cube
            mixed += mass * abs(s_value(mu, alpha)) * cond_cube
        out.append(
            CheckResult.compare(
                "second-moment-global", n, alpha, e2, alpha * (n - 1),
            )
        )
        closed4 = (
            alpha**2 * binom2(n)
            + 3 * alpha**2 * binom2(n - 1)
            + alpha * (alpha - 1) ** 2 * (n - 1)
        )
        out.append(
            CheckResult.compare("fourth-moment-closed-form", n, alpha, e4, closed4)
        )
        variance = sum(
            (mass * s_value(lam, alpha) ** 2 for lam, mass in level_measure(n, alpha).items()),
            Fraction(0),
        )
        out.append(
            CheckResult.compare(
                "variance-identity", n, alpha, variance, alpha * binom2(n),
            )
        )
        if alpha == 1:
            # E(|X_n|^3) <= (n-1) sqrt(2n-3), checked through its exact
            # intermediates: squared Cauchy-Schwarz plus the product identity.
            out.append(
                CheckResult.compare(
                    "cube-moment-bound", n, alpha, cube**2, e2 * e4, relation="le",
                    context="squared comparison",
                )
            )
            out.append(
                CheckResult.compare(
                    "cube-moment-scale", n, alpha, e2 * e4,
                    Fraction((n - 1) ** 2 * (2 * n - 3)),
                )
            )
            # E(|T_{n-1}||X_n|^3) <= same bound, via sqrt((n-1) E X^4);
            # cleared of radicals by squaring and scaling by C(n-1,2).
            out.append(
                CheckResult.compare(
                    "mixed-cube-bound", n, alpha, mixed**2,
                    (n - 1) * e4 * binom2(n - 1), relation="le",
                    context="squared comparison",
                )
            )
    return out


def check_symmetric_identities(
    n_max: int, alpha: Fraction, m_values: tuple[int, ...] = (1, 2, 3)
) -> list[CheckResult]:
    """Vanishing mean of content elementaries; content-product mean m^n."""
    alpha = Fraction(alpha)
    out = []
    for n in range(1, n_max + 1):
        measure = level_measure(n, alpha)
        for r in range(1, n + 1):
            mean = sum(
                (mass * content_elementary(lam, r, alpha) for lam, mass in measure.items()),
                Fraction(0),
            )
            out.append(
                CheckResult.compare(
                    "content-elementary-mean", n, alpha, mean, Fraction(0),
                    context=f"r={r}",
                )
            )
        for m in m_values:
            mean = sum(
                (mass * content_product(lam, m, alpha) for lam, mass in measure.items()),
                Fraction(0),
            )
            out.append(
                CheckResult.compare(
                    "content-product-mean", n, alpha, mean, Fraction(m**n),
                    context=f"m={m}",
                )
            )
    return out


def check_measures(n_max: int, alpha: Fraction) -> list[CheckResult]:
    """Normalization, transpose duality, and the first three moments of S."""
    alpha = Fraction(alpha)
    inv = 1 / alpha
    out = []
    for n in range(1, n_max + 1):
        measure = level_measure(n, alpha)
        out.append(
            CheckResult.compare(
                "measure-normalization", n, alpha,
                sum(measure.values(), Fraction(0)), Fraction(1),
            )
        )
        dual_gap = _abs_gap(
            (mass, jack_prob(conjugate(lam), inv)) for lam, mass in measure.items()
        )
        out.append(
            CheckResult.compare(
                "transpose-duality", n, alpha, dual_gap, Fraction(0),
            )
        )
        s_gap = _abs_gap(
            (s_value(conjugate(lam), inv), -s_value(lam, alpha) / alpha)
            for lam in measure
        )
        out.append(CheckResult.compare("numerator-duality", n, alpha, s_gap, Fraction(0)))
        content_gap = _abs_gap(
            (sum(content_multiset(lam, alpha), Fraction(0)), s_value(lam, alpha))
            for lam in measure
        )
        out.append(
            CheckResult.compare("box-content-identity", n, alpha, content_gap, Fraction(0))
        )
        if n >= 2:
            moments = [Fraction(0)] * 4
            for lam, mass in measure.items():
                s = s_value(lam, alpha)
                moments[1] += mass * s
                moments[2] += mass * s * s
                moments[3] += mass * s**3
            out.append(
                CheckResult.compare("mean-zero", n, alpha, moments[1], Fraction(0))
            )
            out.append(
                CheckResult.compare(
                    "variance-identity", n, alpha, moments[2], alpha * binom2(n)
                )
            )
            out.append(
                CheckResult.compare(
                    "third-moment", n, alpha, moments[3],
                    alpha * (alpha - 1) * binom2(n),
                )
            )
    return out


def check_oracle_agreement(
    size_max: int, alpha: Fraction, kernel_fn: KernelFn | None = None
) -> list[CheckResult]:
    """Kernel rows equal the symmetric-function oracle's implied probabilities."""
    kernel_fn = kernel_fn or growth.kernel
    alpha = Fraction(alpha)
    out = []
    for size in range(size_max + 1):
        for mu in enumerate_partitions(size):
            row = kernel_fn(mu, alpha).as_dict()
            gap = _abs_gap(
                (row[box], oracle_kernel_entry(mu, box, alpha)) for box in row
            )
            out.append(
                CheckResult.compare(
                    "oracle-agreement", size, alpha, gap, Fraction(0),
                    context=f"mu={format_partition(mu)}",
                )
            )
    for degree in range(size_max + 2):
        space = degree_space(degree, alpha)
        gap = Fraction(0)
        for i, nu in enumerate(space.order):
            for kappa in space.order[:i]:
                gap += abs(space.pairwise_inner(nu, kappa))
        out.append(
            CheckResult.compare(
                "basis-orthogonality", degree, alpha, gap, Fraction(0),
            )
        )
    return out


def run_all(
    n_max: int = 10,
    alphas: tuple[Fraction, ...] = DEFAULT_ALPHAS,
    paths_max: int = 8,
    oracle_max: int = 7,
    oracle_alphas: tuple[Fraction, ...] = ORACLE_ALPHAS,
    include_oracle: bool = True,
) -> list[CheckResult]:
    """The full exact verification battery at every requested alpha."""
    results: list[CheckResult] = []
    for alpha in alphas:
        alpha = Fraction(alpha)
        results += check_kernel(n_max, alpha)
        results += check_kernel_fixtures(alpha)
        results += check_conditional_moments(n_max, alpha)
        results += check_projection(min(paths_max, n_max), alpha)
        results += check_global_moments(n_max, alpha)
        results += check_symmetric_identities(n_max, alpha)
        results += check_measures(n_max, alpha)
    results += check_alpha_one_reduction(n_max)
    if include_oracle:
        for alpha in oracle_alphas:
            results += check_oracle_agreement(oracle_max, Fraction(alpha))
    return results


@dataclass(frozen=True)
class VerifySummary:
    run: int
    passed: int
    failed: int
    wall_seconds: float
    failures: tuple[CheckResult, ...]


def summarize(results: list[CheckResult], wall_seconds: float = 0.0) -> VerifySummary:
    failures = tuple(r for r in results if not r.status)
    return VerifySummary(
        len(results), len(results) - len(failures), len(failures), wall_seconds, failures
    )


def timed_run_all(**kwargs) -> tuple[list[CheckResult], VerifySummary]:
    start = time.perf_counter()
    results = run_all(**kwargs)
    return results, summarize(results, time.perf_counter() - start)
