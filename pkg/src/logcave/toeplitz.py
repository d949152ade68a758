"""Finitely supported sequences, Toeplitz minors and character positivity.

A two-sided nonnegative rational sequence x determines the function
z -> sum x_k z^k; its restriction to n variables expands over Schur
polynomials with coefficients given by Toeplitz determinants.  Total
positivity is only ever certified up to the finite window stated by the
caller.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .partitions import partitions_up_to
from .symfunc import det_fraction, toeplitz_schur_coefficient


@dataclass(frozen=True)
class FiniteSequence:
    """Finitely supported map index -> nonnegative rational value."""

    support: dict[int, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for k, v in self.support.items():
            v = Fraction(v)
            if v < 0:
                raise ValueError(f"negative value x_{k} = {v}")
            if v:
                clean[int(k)] = v
        object.__setattr__(self, "support", clean)

    def __getitem__(self, k: int) -> Fraction:
        return self.support.get(k, Fraction(0))

    def get(self, k: int, default=Fraction(0)) -> Fraction:
        return self.support.get(k, default)

    def indices(self) -> tuple[int, int]:
        """Min and max of the support; raises on the zero sequence."""
        if not self.support:
            raise ValueError("zero sequence has no support hull")
        return min(self.support), max(self.support)

    def shifted(self, offset: int) -> "FiniteSequence":
        return FiniteSequence({k + offset: v for k, v in self.support.items()})

    def convolve(self, other: "FiniteSequence") -> "FiniteSequence":
        out: dict[int, Fraction] = {}
        for i, x in self.support.items():
            for j, y in other.support.items():
                out[i + j] = out.get(i + j, Fraction(0)) + x * y
        return FiniteSequence(out)


def toeplitz_minor(x: FiniteSequence, rows, cols) -> Fraction:
    """Exact minor det[x_{cols[b] - rows[a]}] of the Toeplitz matrix of x.

    rows and cols must be strictly increasing index lists of equal length.
    """
    rows = list(rows)
    cols = list(cols)
    if len(rows) != len(cols):
        raise ValueError("rows and cols must have equal length")
    for seq in (rows, cols):
        if any(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)):
            raise ValueError("index lists must be strictly increasing")
    mat = [[x[c - r] for c in cols] for r in rows]
    return det_fraction(mat)


def two_by_two_scan(x: FiniteSequence) -> tuple[bool, int | None]:
    """Check x_n^2 >= x_{n-1} x_{n+1} over the support hull.

    Outside the hull one side vanishes, so only interior indices can
    fail.  Returns (passed, first failing index).
    """
    if not x.support:
        return True, None
    lo, hi = x.indices()
    for n in range(lo, hi + 1):
        if x[n] ** 2 < x[n - 1] * x[n + 1]:
            return False, n
    return True, None


def character_positivity_check(
    x: FiniteSequence, n: int, weight_bound: int
) -> tuple[bool, tuple[int, ...] | None]:
    """Schur-coefficient nonnegativity of the n-variable restriction of x.

    Tests every partition-indexed coefficient with at most n parts up to
    the weight bound.  When the support reaches negative indices the
    sequence is first shifted to start at 0 (a determinant twist that
    relabels the coefficients); the failing index is reported in the
    original labels, with entries possibly negative.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    if not x.support:
        return True, None
    lo = min(x.support)
    offset = -lo if lo < 0 else 0
    y = x.shifted(offset) if offset else x
    for lam in partitions_up_to(weight_bound, max_parts=n):
        if toeplitz_schur_coefficient(y.support, lam, n) < 0:
            bad = tuple(v - offset for v in lam + (0,) * (n - len(lam)))
            return False, bad
    return True, None
