"""Flag valuations on polynomial subspaces and their convex bodies.

The function field is modeled by polynomials in d variables over the
rationals.  The valuation attached to the coordinate flag at the origin is
the lexicographically minimal exponent; it is additive on products and
realizes dim S = |v(S \\ 0)| once a basis is triangularized against the
lex order.  Powers of a subspace, value semigroups, inner hull
approximations, lattice-normalized volumes, growth-based degree estimates
and the Brunn-Minkowski comparison all build on that.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .geometry import (
    DegenerateBodyError,
    Point,
    compare_root_sum,
    hermite_basis,
    hull_vertices,
    hull_volume,
    in_convex_hull,
    lattice_covolume,
    minkowski_sum,
)

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class MultiPolynomial:
    """A polynomial in d variables: exponent vector -> nonzero rational coefficient."""

    dim: int
    terms: dict[Exponent, Fraction] = field(default_factory=dict)

    def __post_init__(self):
        clean = {}
        for e, c in self.terms.items():
            if len(e) != self.dim:
                raise ValueError(f"exponent {e} does not have {self.dim} entries")
            if any(x < 0 for x in e):
                raise ValueError(f"negative exponent in {e}")
            c = Fraction(c)
            if c:
                clean[tuple(int(x) for x in e)] = c
        object.__setattr__(self, "terms", clean)

    def is_zero(self) -> bool:
        return not self.terms

    def __mul__(self, other: "MultiPolynomial") -> "MultiPolynomial":
        if self.dim != other.dim:
            raise ValueError("dimension mismatch")
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(x + y for x, y in zip(e1, e2))
                v = out.get(e, Fraction(0)) + c1 * c2
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
        return MultiPolynomial(self.dim, out)

    def scaled(self, c: Fraction) -> "MultiPolynomial":
        return MultiPolynomial(self.dim, {e: v * c for e, v in self.terms.items()})

    def minus(self, other: "MultiPolynomial") -> "MultiPolynomial":
        out = dict(self.terms)
        for e, c in other.terms.items():
            v = out.get(e, Fraction(0)) - c
            if v:
                out[e] = v
            else:
                out.pop(e, None)
        return MultiPolynomial(self.dim, out)


def constant_one(dim: int) -> MultiPolynomial:
    return MultiPolynomial(dim, {(0,) * dim: Fraction(1)})


def monomial(dim: int, exponent: Exponent) -> MultiPolynomial:
    return MultiPolynomial(dim, {tuple(exponent): Fraction(1)})


def flag_valuation(f: MultiPolynomial) -> Exponent:
    """Valuation of f for the coordinate flag at the origin.

    Orders of vanishing along x1 = 0, then x2 = 0 within that stratum, and
    so on, which is exactly the lex-minimal exponent of f.  Additive on
    products; zero polynomial is not in the domain.
    """
    if f.is_zero():
        raise ValueError("the zero polynomial has no valuation")
    return min(f.terms)


class PolynomialSubspace:
    """A finite-dimensional rational subspace of polynomials containing 1.

    The basis is reduced at construction so that every element has a
    distinct lex-minimal exponent (its valuation); the pivot exponents are
    then the full valuation set of the subspace.
    """

    def __init__(self, dim: int, polys):
        self.dim = dim
        pivots: dict[Exponent, MultiPolynomial] = {}
        for f in polys:
            if f.dim != dim:
                raise ValueError("dimension mismatch in basis")
            g = _reduce_against(f, pivots)
            if not g.is_zero():
                v = flag_valuation(g)
                pivots[v] = g.scaled(1 / g.terms[v])
        self._pivots = dict(sorted(pivots.items()))
        if (0,) * dim not in self._pivots or not self.contains(constant_one(dim)):
            raise ValueError("the subspace must contain the constant 1")

    @property
    def basis(self) -> list[MultiPolynomial]:
        return list(self._pivots.values())

    @property
    def dimension(self) -> int:
        return len(self._pivots)

    def contains(self, f: MultiPolynomial) -> bool:
        return _reduce_against(f, self._pivots).is_zero()

    def valuation_set(self) -> set[Exponent]:
        """The set v(S \\ 0); its size equals dim S exactly."""
        return set(self._pivots)


def _reduce_against(
    f: MultiPolynomial, pivots: dict[Exponent, MultiPolynomial]
) -> MultiPolynomial:
    # eliminating a pivot exponent only introduces lex-larger ones,
    # so the loop advances strictly and terminates
    while not f.is_zero():
        v = flag_valuation(f)
        p = pivots.get(v)
        if p is None:
            return f
        f = f.minus(p.scaled(f.terms[v]))
    return f


def valuation_set(s: PolynomialSubspace) -> set[Exponent]:
    return s.valuation_set()


def subspace_product(s1: PolynomialSubspace, s2: PolynomialSubspace) -> PolynomialSubspace:
    """The subspace spanned by all pairwise products of basis elements."""
    if s1.dim != s2.dim:
        raise ValueError("dimension mismatch")
    return PolynomialSubspace(
        s1.dim, (f * g for f in s1.basis for g in s2.basis)
    )


def power_subspace(s: PolynomialSubspace, k: int) -> PolynomialSubspace:
    """The k-th power subspace, spanned by k-fold products of elements of s."""
    if k < 1:
        raise ValueError("k must be >= 1")
    out = s
    for _ in range(k - 1):
        out = subspace_product(out, s)
    return out


def _power_tower(s: PolynomialSubspace, k_max: int) -> list[PolynomialSubspace]:
    tower = [s]
    for _ in range(1, k_max):
        tower.append(subspace_product(tower[-1], s))
    return tower


@dataclass
class BodyApprox:
    """Inner approximation of the valuation body at a finite level.

    points are the scaled valuations v(f)/k for k <= level; hull is the
    vertex list of their convex hull; lattice is a Hermite basis of the
    group generated by the semigroup points (k, v); stable records whether
    the hull already agreed at the previous level.
    """

    level: int
    points: list[Point]
    hull: list[Point]
    lattice: list[tuple[int, ...]]
    stable: bool


def body_approximation(s: PolynomialSubspace, k_max: int) -> BodyApprox:
    """Union of valuation sets of s^k scaled by 1/k, with exact hull and lattice."""
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    tower = _power_tower(s, k_max)
    points: set[Point] = set()
    prev_points: set[Point] = set()
    generators: list[tuple[int, ...]] = []
    for k, sk in enumerate(tower, start=1):
        vs = sorted(sk.valuation_set())
        if len(vs) != sk.dimension:
            raise AssertionError("valuation set size disagrees with dimension")
        for v in vs:
            points.add(tuple(Fraction(x, k) for x in v))
            generators.append((k, *v))
        if k == k_max - 1:
            prev_points = set(points)
    hull = hull_vertices(points)
    if k_max == 1:
        stable = False
    else:
        stable = hull == hull_vertices(prev_points)
    return BodyApprox(
        level=k_max,
        points=sorted(points),
        hull=hull,
        lattice=hermite_basis(generators),
        stable=stable,
    )


def level_one_lattice(b: BodyApprox) -> list[tuple[int, ...]]:
    """Generators of the degree-zero slice of the lattice, inside Z^d.

    Rows of the Hermite basis with vanishing first coordinate span the
    intersection with (0, Z^d); translating the level-one coset there is
    the volume normalization.
    """
    return [row[1:] for row in b.lattice if row[0] == 0]


def normalized_volume(b: BodyApprox) -> Fraction:
    """Exact hull volume measured against the lattice slice.

    Raises DegenerateBodyError when the hull is lower-dimensional or the
    lattice slice does not have full rank (the subspace does not yet
    generate in the sampled range).
    """
    if not b.hull:
        raise DegenerateBodyError("empty body")
    d = len(b.hull[0])
    euclid = hull_volume(b.hull)
    covol = lattice_covolume(level_one_lattice(b), d)
    return euclid / covol


@dataclass
class DegreeEstimate:
    degree: Fraction
    residuals: list[tuple[int, int, Fraction]]
    stable: bool
    dims: list[int]


def degree_estimate(s: PolynomialSubspace, k_max: int) -> DegreeEstimate:
    """Growth degree of dim s^k, from finite differences of the last window.

    For polynomial growth dim s^k ~ deg * k^d / d!, the d-th finite
    difference over the trailing d+1 samples equals deg exactly.  The
    residuals report actual minus fitted dimension at every sampled k;
    stable is False when the last two windows disagree (non-polynomial
    range, reported rather than fatal).
    """
    d = s.dim
    if k_max < d + 1:
        raise ValueError(f"need k_max >= d+1 = {d + 1}")
    dims = [sk.dimension for sk in _power_tower(s, k_max)]

    def finite_difference(samples: list[int]) -> Fraction:
        vals = [Fraction(x) for x in samples]
        for _ in range(d):
            vals = [b - a for a, b in zip(vals, vals[1:])]
        return vals[0]

    degree = finite_difference(dims[k_max - d - 1 : k_max])
    stable = True
    if k_max >= d + 2:
        stable = finite_difference(dims[k_max - d - 2 : k_max - 1]) == degree
    # Newton forward fit through the trailing window, evaluated elsewhere
    ks = list(range(k_max - d, k_max + 1))
    ys = [Fraction(dims[k - 1]) for k in ks]

    def fitted(k: int) -> Fraction:
        total = Fraction(0)
        diffs = ys[:]
        for j in range(d + 1):
            coeff = diffs[0]
            basis = Fraction(1)
            for i in range(j):
                basis *= Fraction(k - ks[i], i + 1)
            total += coeff * basis
            diffs = [b - a for a, b in zip(diffs, diffs[1:])]
        return total

    residuals = [(k, dims[k - 1], Fraction(dims[k - 1]) - fitted(k)) for k in range(1, k_max + 1)]
    return DegreeEstimate(degree=degree, residuals=residuals, stable=stable, dims=dims)


def minkowski_inclusion_check(
    s1: PolynomialSubspace, s2: PolynomialSubspace, k_max: int
) -> tuple[bool, Point | None]:
    """Vertex sums of the two level-k_max hulls against the product's hull.

    Exact point-in-polytope tests; returns the first escaping sum point on
    failure (possible for unconverged approximations of general
    subspaces; for monomial subspaces the hulls are Newton polytopes and
    the inclusion is exact at every level).
    """
    if s1.dim != s2.dim:
        raise ValueError("dimension mismatch")
    b1 = body_approximation(s1, k_max)
    b2 = body_approximation(s2, k_max)
    b12 = body_approximation(subspace_product(s1, s2), k_max)
    for p in minkowski_sum(b1.hull, b2.hull):
        if not in_convex_hull(p, b12.hull):
            return False, p
    return True, None


@dataclass
class BrunnMinkowskiResult:
    passed: bool
    comparison_sign: int
    volumes: tuple[Fraction, Fraction, Fraction]
    degrees_stable: tuple[bool, bool, bool]


def brunn_minkowski_check(
    s1: PolynomialSubspace, s2: PolynomialSubspace, k_max: int
) -> BrunnMinkowskiResult:
    """d-th root superadditivity of volumes under the subspace product.

    All three bodies are normalized against the lattice of the product
    subspace (the finest of the three), and the d-th root comparison is
    exact rational arithmetic.  Stability flags of the three degree
    estimates are reported alongside.
    """
    if s1.dim != s2.dim:
        raise ValueError("dimension mismatch")
    d = s1.dim
    s12 = subspace_product(s1, s2)
    b1 = body_approximation(s1, k_max)
    b2 = body_approximation(s2, k_max)
    b12 = body_approximation(s12, k_max)
    covol = lattice_covolume(level_one_lattice(b12), d)
    v1 = hull_volume(b1.hull) / covol
    v2 = hull_volume(b2.hull) / covol
    v12 = hull_volume(b12.hull) / covol
    sign = compare_root_sum(v12, v1, v2, d)
    stable = tuple(
        degree_estimate(s, k_max).stable if k_max >= s.dim + 2 else False
        for s in (s1, s2, s12)
    )
    return BrunnMinkowskiResult(
        passed=sign >= 0,
        comparison_sign=sign,
        volumes=(v1, v2, v12),
        degrees_stable=stable,  # type: ignore[arg-type]
    )


def monomial_subspace(dim: int, exponents) -> PolynomialSubspace:
    """Subspace spanned by the given monomials (the origin is added if missing)."""
    exps = {tuple(int(x) for x in e) for e in exponents}
    exps.add((0,) * dim)
    return PolynomialSubspace(dim, (monomial(dim, e) for e in sorted(exps)))


def degree_bounded_monomials(dim: int, degree: int) -> PolynomialSubspace:
    """All monomials of total degree at most `degree` in dim variables."""
    def gen(rem, slots):
        if slots == 0:
            yield ()
            return
        for first in range(rem + 1):
            for rest in gen(rem - first, slots - 1):
                yield (first,) + rest

    return monomial_subspace(dim, gen(degree, dim))


def binomial_dimension(degree: int, dim: int, k: int) -> int:
    """dim of the k-th power of the degree-bounded monomial subspace: C(k*e+d, d)."""
    return comb(k * degree + dim, dim)
