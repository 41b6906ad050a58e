"""Exact combinatorics of integer partitions and Young diagrams.

Partitions are plain tuples of weakly decreasing positive integers; the
empty tuple is the empty partition.  Boxes are 1-indexed ``(row, col)``
pairs.  Every probability or content computed here is an exact
:class:`fractions.Fraction`; floats never enter these code paths.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterator, NamedTuple

Partition = tuple[int, ...]
Box = tuple[int, int]


def is_partition(parts) -> bool:
    """True if ``parts`` is a weakly decreasing sequence of positive ints."""
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts) -> Partition:
    """Validate and normalize to a tuple; raises ValueError on bad input."""
    out = tuple(int(p) for p in parts)
    if not is_partition(out):
        raise ValueError(f"not a partition: {parts!r}")
    return out


def parse_partition(text: str) -> Partition:
    """Parse the bracketed text form, e.g. ``[4,2,1]``; ``[]`` is empty."""
    text = text.strip()
    if not (text.startswith("[") and text.endswith("]")):
        raise ValueError(f"partition text must be bracketed: {text!r}")
    inner = text[1:-1].strip()
    if not inner:
        return ()
    return as_partition(int(tok) for tok in inner.split(","))


def format_partition(lam: Partition) -> str:
    """Inverse of :func:`parse_partition`."""
    return "[" + ",".join(str(p) for p in lam) + "]"


def as_alpha(value) -> Fraction:
    """Coerce a deformation parameter to an exact positive rational."""
    alpha = Fraction(value)
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    return alpha


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths of ``lam``."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def content(box: Box) -> int:
    """Content of a box: column number minus row number."""
    r, c = box
    return c - r


def alpha_content(box: Box, alpha: Fraction) -> Fraction:
    """Deformed content alpha*(col-1) - (row-1)."""
    r, c = box
    return alpha * (c - 1) - (r - 1)


class BoxStats(NamedTuple):
    box: Box
    arm: int
    leg: int
    hook: int
    content: int
    alpha_content: Fraction | None


def box_stats(lam: Partition, alpha: Fraction | None = None) -> list[BoxStats]:
    """Arm, leg, hook and content of every box, row by row.

    arm = boxes to the right in the row, leg = boxes below in the column,
    hook = arm + leg + 1.  ``alpha_content`` is filled only when ``alpha``
    is supplied.
    """
    conj = conjugate(lam)
    out = []
    for i, p in enumerate(lam):
        for j in range(p):
            arm = p - j - 1
            leg = conj[j] - i - 1
            box = (i + 1, j + 1)
            ac = alpha_content(box, alpha) if alpha is not None else None
            out.append(BoxStats(box, arm, leg, arm + leg + 1, content(box), ac))
    return out


def addable_corners(lam: Partition) -> list[Box]:
    """Boxes whose addition leaves a valid partition, in increasing row order."""
    out = []
    for r in range(len(lam) + 1):
        cur = lam[r] if r < len(lam) else 0
        if r == 0 or cur < lam[r - 1]:
            out.append((r + 1, cur + 1))
    return out


def removable_corners(lam: Partition) -> list[Box]:
    """Boxes whose removal leaves a valid partition, in increasing row order."""
    out = []
    for r, p in enumerate(lam):
        nxt = lam[r + 1] if r + 1 < len(lam) else 0
        if p > nxt:
            out.append((r + 1, p))
    return out


def corners(lam: Partition) -> tuple[list[Box], list[Box]]:
    """(addable, removable) corner boxes; addable always has one more entry."""
    return addable_corners(lam), removable_corners(lam)


def add_box(lam: Partition, box: Box) -> Partition:
    """Partition obtained by adding the given addable corner box."""
    r, c = box
    rows = list(lam)
    if r == len(rows) + 1:
        if c != 1:
            raise ValueError(f"box {box} is not addable to {lam}")
        rows.append(1)
    else:
        if r < 1 or r > len(rows) or rows[r - 1] + 1 != c:
            raise ValueError(f"box {box} is not addable to {lam}")
        rows[r - 1] += 1
    if not is_partition(rows):
        raise ValueError(f"box {box} is not addable to {lam}")
    return tuple(rows)


def dimension(lam: Partition) -> int:
    """Number of standard Young tableaux of shape ``lam``: n! over the hook product.

    The division is always exact; a nonzero remainder indicates an internal
    bug and raises immediately.
    """
    n = sum(lam)
    prod = 1
    conj = conjugate(lam)
    for i, p in enumerate(lam):
        for j in range(p):
            prod *= (p - j - 1) + (conj[j] - i - 1) + 1
    q, rem = divmod(factorial(n), prod)
    if rem:
        raise AssertionError(f"hook product does not divide n! for {lam}")
    return q


def enumerate_partitions(n: int) -> Iterator[Partition]:
    """All partitions of ``n``, each exactly once, in decreasing lexicographic order."""
    if n < 0:
        raise ValueError("n must be non-negative")
    if n == 0:
        yield ()
        return
    cur: Partition = (n,)
    yield cur
    while True:
        # Find the last part larger than 1; everything after it is 1s.
        i = len(cur) - 1
        while i >= 0 and cur[i] == 1:
            i -= 1
        if i < 0:
            return
        head = cur[:i] + (cur[i] - 1,)
        cap = head[-1]
        total = len(cur) - i  # the borrowed 1 plus the trailing 1s
        tail = []
        while total > 0:
            t = min(cap, total)
            tail.append(t)
            total -= t
        cur = head + tuple(tail)
        yield cur


def hook_products(lam: Partition, alpha: Fraction) -> tuple[Fraction, Fraction]:
    """The two deformed hook products of a diagram.

    Returns (c, c') with c the product of alpha*arm + leg + 1 and c' the
    product of alpha*arm + leg + alpha over all boxes; both are exact
    rationals at the given rational alpha.  Empty diagram gives (1, 1).
    """
    alpha = Fraction(alpha)
    conj = conjugate(lam)
    c = Fraction(1)
    cp = Fraction(1)
    for i, p in enumerate(lam):
        for j in range(p):
            a = p - j - 1
            leg = conj[j] - i - 1
            base = alpha * a + leg
            c *= base + 1
            cp *= base + alpha
    return c, cp
