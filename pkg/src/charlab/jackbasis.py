"""Deformed symmetric-function basis built independently of the growth kernel.

This module pins down the single-box expansion coefficients from first
principles: build the degree-d orthogonal basis by Gram-Schmidt on
monomial symmetric functions under the deformed power-sum inner product

    <p_rho, p_sigma> = delta_{rho,sigma} * z_rho * alpha^len(rho),

normalized so each basis element P_nu has monomial leading coefficient 1,
then expand p_1 * P_mu in that basis.  Everything is exact rational
arithmetic at a fixed rational alpha; spaces are small (partitions of
degree <= 8), so dense Fraction linear algebra is fine.

The expansion coefficients serve as an oracle for the growth kernel:
p(mu -> lam) must equal psi'(lam/mu) * c(mu) / c(lam) with c the first
deformed hook product.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial

from .partitions import Box, Partition, add_box, addable_corners, enumerate_partitions, hook_products

ORACLE_SIZE_MAX = 7

MonomialCoeffs = dict[Partition, Fraction]


def multiply_by_power_sum(coeffs: MonomialCoeffs, r: int) -> MonomialCoeffs:
    """Multiply a monomial-basis symmetric function by the power sum p_r.

    For each term m_kappa, p_r either extends one existing part value or
    inserts a new part r; the resulting monomial coefficient is the
    multiplicity of the grown part in the target partition.
    """
    out: MonomialCoeffs = {}
    for kappa, cf in coeffs.items():
        for v in set(kappa) | {0}:
            if v == 0:
                target = tuple(sorted(kappa + (r,), reverse=True))
            else:
                parts = list(kappa)
                parts.remove(v)
                target = tuple(sorted(parts + [v + r], reverse=True))
            mult = target.count(v + r)
            out[target] = out.get(target, Fraction(0)) + cf * mult
    return {k: v for k, v in out.items() if v != 0}


def power_sum_in_monomials(rho: Partition) -> MonomialCoeffs:
    """Expand p_rho = p_{rho_1} ... p_{rho_k} in the monomial basis."""
    coeffs: MonomialCoeffs = {(): Fraction(1)}
    for r in rho:
        coeffs = multiply_by_power_sum(coeffs, r)
    return coeffs


def zee(rho: Partition) -> int:
    """The centralizer size z_rho = prod_i i^{m_i} m_i! over part multiplicities."""
    z = 1
    for v in set(rho):
        m = rho.count(v)
        z *= v**m * factorial(m)
    return z


def dominates(a: Partition, b: Partition) -> bool:
    """True if ``a`` dominates ``b`` (partial sums of a >= those of b; same size)."""
    sa = sb = 0
    for i in range(max(len(a), len(b))):
        sa += a[i] if i < len(a) else 0
        sb += b[i] if i < len(b) else 0
        if sa < sb:
            return False
    return True


def sweep_order(parts: list[Partition]) -> list[Partition]:
    """A linear extension of dominance order, ascending; ties broken reverse-lex."""
    remaining = sorted(parts, key=lambda t: tuple(reversed(t)))
    out = []
    while remaining:
        pick = next(
            p
            for p in remaining
            if not any(q != p and dominates(p, q) for q in remaining)
        )
        out.append(pick)
        remaining.remove(pick)
    return out


@dataclass(frozen=True)
class SymFunExpansion:
    """Coefficients of a homogeneous symmetric function in a named basis."""

    degree: int
    coefficients: MonomialCoeffs
    basis_tag: str  # "monomial" | "jack"


def _invert(matrix: list[list[Fraction]]) -> list[list[Fraction]]:
    """Dense exact inverse by Gauss-Jordan elimination."""
    n = len(matrix)
    a = [row[:] for row in matrix]
    inv = [[Fraction(1) if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    for col in range(n):
        piv = next(r for r in range(col, n) if a[r][col] != 0)
        a[col], a[piv] = a[piv], a[col]
        inv[col], inv[piv] = inv[piv], inv[col]
        d = a[col][col]
        a[col] = [x / d for x in a[col]]
        inv[col] = [x / d for x in inv[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
                inv[r] = [x - f * y for x, y in zip(inv[r], inv[col])]
    return inv


class DegreeSpace:
    """Exact inner-product space of degree-d symmetric functions at fixed alpha."""

    def __init__(self, degree: int, alpha: Fraction):
        self.degree = degree
        self.alpha = Fraction(alpha)
        self.parts: list[Partition] = list(enumerate_partitions(degree))
        self.index = {p: i for i, p in enumerate(self.parts)}
        k = len(self.parts)
        p_in_m = [
            [power_sum_in_monomials(rho).get(kappa, Fraction(0)) for kappa in self.parts]
            for rho in self.parts
        ]
        m_in_p = _invert(p_in_m)
        weights = [zee(rho) * self.alpha ** len(rho) for rho in self.parts]
        self.gram = [
            [
                sum(m_in_p[i][t] * m_in_p[j][t] * weights[t] for t in range(k))
                for j in range(k)
            ]
            for i in range(k)
        ]
        self.order = sweep_order(self.parts)
        self._orthogonalize()

    def inner(self, u: list[Fraction], v: list[Fraction]) -> Fraction:
        k = len(self.parts)
        total = Fraction(0)
        for i in range(k):
            if u[i]:
                row = self.gram[i]
                total += u[i] * sum(row[j] * v[j] for j in range(k) if v[j])
        return total

    def _orthogonalize(self):
        # Gram-Schmidt sweep in dominance order keeps each leading
        # monomial coefficient at 1: earlier elements never contain the
        # current leading monomial.
        k = len(self.parts)
        self.basis: dict[Partition, list[Fraction]] = {}
        done: list[Partition] = []
        self._norms: dict[Partition, Fraction] = {}
        for nu in self.order:
            vec = [Fraction(0)] * k
            vec[self.index[nu]] = Fraction(1)
            for kappa in done:
                other = self.basis[kappa]
                c = self.inner(vec, other) / self._norms[kappa]
                if c:
                    vec = [a - c * b for a, b in zip(vec, other)]
            if vec[self.index[nu]] != 1:
                raise AssertionError("leading monomial coefficient drifted from 1")
            self.basis[nu] = vec
            self._norms[nu] = self.inner(vec, vec)
            done.append(nu)

    def expansion(self, nu: Partition) -> SymFunExpansion:
        """The orthogonal basis element P_nu in the monomial basis."""
        vec = self.basis[nu]
        coeffs = {p: vec[self.index[p]] for p in self.parts if vec[self.index[p]]}
        return SymFunExpansion(self.degree, coeffs, "monomial")

    def pairwise_inner(self, nu: Partition, mu: Partition) -> Fraction:
        return self.inner(self.basis[nu], self.basis[mu])

    def expand_in_basis(self, coeffs: MonomialCoeffs) -> SymFunExpansion:
        """Rewrite a monomial-basis function in the orthogonal basis (triangular solve)."""
        vec = [coeffs.get(p, Fraction(0)) for p in self.parts]
        out: MonomialCoeffs = {}
        for nu in reversed(self.order):
            c = vec[self.index[nu]]
            if c:
                out[nu] = c
                vec = [a - c * b for a, b in zip(vec, self.basis[nu])]
        if any(vec):
            raise AssertionError("expansion residual is nonzero")
        return SymFunExpansion(self.degree, out, "jack")


@lru_cache(maxsize=128)
def degree_space(degree: int, alpha: Fraction) -> DegreeSpace:
    return DegreeSpace(degree, Fraction(alpha))


def pieri_oracle(mu: Partition, alpha: Fraction) -> dict[Box, Fraction]:
    """Single-box expansion coefficients of p_1 * P_mu, keyed by the added corner.

    Computed from the orthogonal basis alone, independently of the growth
    kernel.  Coefficients appear exactly at the addable corners of mu.
    """
    if sum(mu) > ORACLE_SIZE_MAX:
        raise ValueError(f"oracle supports |mu| <= {ORACLE_SIZE_MAX}")
    alpha = Fraction(alpha)
    lower = degree_space(sum(mu), alpha)
    upper = degree_space(sum(mu) + 1, alpha)
    product = multiply_by_power_sum(lower.expansion(mu).coefficients, 1)
    jack_coeffs = upper.expand_in_basis(product).coefficients
    out: dict[Box, Fraction] = {}
    for box in addable_corners(mu):
        lam = add_box(mu, box)
        out[box] = jack_coeffs.pop(lam, Fraction(0))
    if jack_coeffs:
        raise AssertionError(f"non-Pieri terms in p_1 * P_mu: {sorted(jack_coeffs)}")
    return out


def oracle_kernel_entry(mu: Partition, box: Box, alpha: Fraction) -> Fraction:
    """Kernel probability implied by the oracle: psi' * c(mu) / c(mu + box)."""
    alpha = Fraction(alpha)
    psi = pieri_oracle(mu, alpha)[box]
    c_mu, _ = hook_products(mu, alpha)
    c_lam, _ = hook_products(add_box(mu, box), alpha)
    return psi * c_mu / c_lam
