"""Exact symmetric-polynomial arithmetic in the monomial-orbit basis.

A symmetric polynomial in n variables is stored as a map from exponent
orbits (weakly decreasing exponent tuples, trailing zeros stripped) to
integer coefficients.  Products are computed through the structure
constants of the monomial basis, which depend only on the orbit shapes and
not on n; that keeps the exhaustive scans cheap even in many variables.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, Mapping

from .partitions import (
    Partition,
    SkewShape,
    arrangement_count,
    dominance_leq,
    iter_ssyt_rows,
    pad,
    partition,
)


@dataclass(frozen=True)
class MonomialExpansion:
    """A symmetric polynomial: orbit exponent tuple -> nonzero integer coefficient."""

    num_variables: int
    terms: dict[Partition, int] = field(default_factory=dict)

    def __post_init__(self):
        for k, v in self.terms.items():
            if len(k) > self.num_variables:
                raise ValueError(f"orbit {k} needs more than {self.num_variables} variables")
            if v == 0:
                raise ValueError("zero coefficient stored")

    def coefficient(self, exponents) -> int:
        return self.terms.get(partition(sorted(exponents, reverse=True)), 0)

    def is_zero(self) -> bool:
        return not self.terms

    def min_coefficient(self) -> tuple[int, Partition | None]:
        """Smallest coefficient and a witness orbit; (0, None) for the zero polynomial."""
        if not self.terms:
            return 0, None
        orbit = min(self.terms, key=lambda k: (self.terms[k], k))
        return self.terms[orbit], orbit

    def evaluate_ones(self) -> int:
        """Value at z_1 = ... = z_n = 1."""
        return sum(
            c * arrangement_count(a, self.num_variables) for a, c in self.terms.items()
        )

    def __eq__(self, other):
        return (
            isinstance(other, MonomialExpansion)
            and self.num_variables == other.num_variables
            and self.terms == other.terms
        )


@dataclass(frozen=True)
class SchurExpansion:
    """A virtual character: partition -> nonzero integer coefficient."""

    terms: dict[Partition, int] = field(default_factory=dict)

    def coefficient(self, lam: Partition) -> int:
        return self.terms.get(partition(lam), 0)

    def is_nonnegative(self) -> bool:
        return all(c >= 0 for c in self.terms.values())

    def __eq__(self, other):
        return isinstance(other, SchurExpansion) and self.terms == other.terms


@lru_cache(maxsize=None)
def kostka_table(outer: Partition, inner: Partition, max_entry: int) -> dict[Partition, int]:
    """Content-orbit counts of SSYT on outer/inner with entries <= max_entry.

    Entry [alpha] is the number of fillings whose content sorts to alpha
    (Kostka numbers, which are symmetric in the content).
    """
    shape = SkewShape(outer, inner)
    table: Counter[Partition] = Counter()
    counts = [0] * max_entry
    for rows in iter_ssyt_rows(shape, max_entry):
        for row in rows:
            for v in row:
                counts[v - 1] += 1
        # Kostka numbers are symmetric in the content, so one representative
        # per orbit suffices: keep only weakly decreasing content vectors.
        if all(counts[i] >= counts[i + 1] for i in range(max_entry - 1)):
            table[partition(counts)] += 1
        for i in range(max_entry):
            counts[i] = 0
    return dict(table)


def skew_schur(shape: SkewShape, n: int) -> MonomialExpansion:
    """The skew Schur polynomial of the shape in n variables.

    Sum over semistandard tableaux with entries <= n of their content
    monomials, collected by orbit.  A shape with a column taller than n
    gives the zero polynomial.
    """
    if n < 0:
        raise ValueError("number of variables must be >= 0")
    d = shape.size
    cap = min(n, d)
    table = kostka_table(shape.outer, shape.inner, cap)
    return MonomialExpansion(n, {a: c for a, c in table.items() if len(a) <= n})


def _multiset_perms(values: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
    """Distinct permutations of a multiset of ints."""
    items = sorted(Counter(values).items())
    n = len(values)
    out = [0] * n

    def rec(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(out)
            return
        for i, (v, c) in enumerate(items):
            if c == 0:
                continue
            items[i] = (v, c - 1)
            out[k] = v
            yield from rec(k + 1)
            items[i] = (v, c)

    yield from rec(0)


def _stabilizer_order(v: tuple[int, ...]) -> int:
    out = 1
    for c in Counter(v).values():
        out *= factorial(c)
    return out


@lru_cache(maxsize=None)
def monomial_product_row(alpha: Partition, beta: Partition) -> dict[Partition, int]:
    """Structure constants of m_alpha * m_beta in the monomial basis.

    The row is independent of the number of variables as long as each
    resulting orbit fits; callers drop orbits with too many parts.
    Computed by symmetrizing z^alpha * m_beta over len(alpha)+len(beta)
    slots, with stabilizer orders supplying the multiplicities.
    """
    if (len(alpha), alpha) < (len(beta), beta):
        return monomial_product_row(beta, alpha)
    L = len(alpha) + len(beta)
    # iterate the orbit with fewer rearrangements; the formula is symmetric
    if arrangement_count(beta, L) <= arrangement_count(alpha, L):
        fixed, moving = alpha, beta
    else:
        fixed, moving = beta, alpha
    base = pad(fixed, L)
    row: Counter[Partition] = Counter()
    for c in _multiset_perms(pad(moving, L)):
        v = tuple(base[i] + c[i] for i in range(L))
        row[partition(sorted(v, reverse=True))] += _stabilizer_order(v)
    stab = _stabilizer_order(base)
    out = {}
    for gamma, total in row.items():
        q, r = divmod(total, stab)
        if r:
            raise AssertionError("monomial structure constant not integral")
        out[gamma] = q
    return out


def multiply(a: MonomialExpansion, b: MonomialExpansion) -> MonomialExpansion:
    """Exact product of two symmetric polynomials in the same variables."""
    if a.num_variables != b.num_variables:
        raise ValueError(
            f"variable count mismatch: {a.num_variables} != {b.num_variables}"
        )
    n = a.num_variables
    out: Counter[Partition] = Counter()
    for alpha, ca in a.terms.items():
        for beta, cb in b.terms.items():
            for gamma, m in monomial_product_row(alpha, beta).items():
                if len(gamma) <= n:
                    out[gamma] += ca * cb * m
    return MonomialExpansion(n, {k: v for k, v in out.items() if v})


def subtract_and_min_coefficient(
    a: MonomialExpansion, b: MonomialExpansion
) -> tuple[MonomialExpansion, int, Partition | None]:
    """a - b, its smallest coefficient, and a witness orbit when negative.

    The witness is an exponent orbit achieving a negative coefficient (the
    minimal one); None when the difference is nonnegative.
    """
    if a.num_variables != b.num_variables:
        raise ValueError(
            f"variable count mismatch: {a.num_variables} != {b.num_variables}"
        )
    terms = dict(a.terms)
    for k, v in b.terms.items():
        nv = terms.get(k, 0) - v
        if nv:
            terms[k] = nv
        else:
            terms.pop(k, None)
    diff = MonomialExpansion(a.num_variables, terms)
    min_coeff, orbit = diff.min_coefficient()
    witness = orbit if min_coeff < 0 else None
    return diff, min_coeff, witness


def to_schur_basis(a: MonomialExpansion) -> SchurExpansion:
    """Expand a symmetric polynomial in the Schur basis of n variables.

    Repeatedly peels the dominance-maximal orbit of the top degree: its
    coefficient is the Schur coefficient of that partition, because every
    s_lambda contributes m-orbits only below lambda in dominance order.
    Lex tie-break among incomparable maxima keeps the order deterministic.
    """
    n = a.num_variables
    remaining = dict(a.terms)
    out: dict[Partition, int] = {}
    while remaining:
        top_degree = max(sum(k) for k in remaining)
        candidates = [k for k in remaining if sum(k) == top_degree]
        maximal = [
            k
            for k in candidates
            if not any(o != k and dominance_leq(k, o) for o in candidates)
        ]
        lam = max(maximal)
        coeff = remaining[lam]
        out[lam] = coeff
        for alpha, k in skew_schur(SkewShape(lam, ()), n).terms.items():
            nv = remaining.get(alpha, 0) - coeff * k
            if nv:
                remaining[alpha] = nv
            else:
                remaining.pop(alpha, None)
    return SchurExpansion(out)


def schur_to_monomials(e: SchurExpansion, n: int) -> MonomialExpansion:
    """Re-expand a Schur expansion into the monomial basis (round-trip helper)."""
    out: Counter[Partition] = Counter()
    for lam, c in e.terms.items():
        for alpha, k in skew_schur(SkewShape(lam, ()), n).terms.items():
            out[alpha] += c * k
    return MonomialExpansion(n, {k: v for k, v in out.items() if v})


def det_fraction(rows: list[list[Fraction]]) -> Fraction:
    """Exact determinant by fraction Gaussian elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("determinant needs a square matrix")
    m = [[Fraction(x) for x in r] for r in rows]
    det = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            m[col], m[piv] = m[piv], m[col]
            det = -det
        det *= m[col][col]
        inv = 1 / m[col][col]
        for r in range(col + 1, n):
            if m[r][col] != 0:
                f = m[r][col] * inv
                for c in range(col, n):
                    m[r][c] -= f * m[col][c]
    return det


def toeplitz_schur_coefficient(
    x: Mapping[int, Fraction | int], lam, n: int
) -> Fraction:
    """Coefficient of s_lam(z_1..z_n) in prod_i sum_k x_k z_i^k.

    Computed as the n x n determinant det[x_{lam_i - i + j}] over the
    finitely supported sequence x.  lam may be any weakly decreasing
    integer vector with at most n entries; missing entries are zero.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    lam = tuple(lam)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    full = lam + (0,) * (n - len(lam))
    rows = [
        [Fraction(x.get(full[i] - (i + 1) + (j + 1), 0)) for j in range(n)]
        for i in range(n)
    ]
    return det_fraction(rows)
