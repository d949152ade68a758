import random
from fractions import Fraction
from itertools import permutations, product

import pytest
from hypothesis import given, settings, strategies as st

from logcave.partitions import SkewShape, pad, partition, partitions_up_to, subdiagrams, weyl_dimension
from logcave.symfunc import (
    MonomialExpansion,
    monomial_product_row,
    multiply,
    schur_to_monomials,
    skew_schur,
    subtract_and_min_coefficient,
    to_schur_basis,
    toeplitz_schur_coefficient,
)


def dense(expn):
    """Expand an orbit map into a full monomial dict (independent oracle)."""
    out = {}
    n = expn.num_variables
    for orb, c in expn.terms.items():
        for perm in set(permutations(pad(orb, n))):
            out[perm] = out.get(perm, 0) + c
    return out


def dense_mul(a, b):
    out = {}
    for e1, c1 in a.items():
        for e2, c2 in b.items():
            key = tuple(x + y for x, y in zip(e1, e2))
            out[key] = out.get(key, 0) + c1 * c2
    return {k: v for k, v in out.items() if v}


def brute_force_skew_schur(outer, inner, n):
    """Monomial dict of the skew Schur polynomial by filtering raw fillings."""
    shape = SkewShape(outer, inner)
    bounds = shape.row_bounds()
    cells = [(r, c) for r, (lo, hi) in enumerate(bounds) for c in range(lo, hi)]
    out = {}
    for filling in product(range(1, n + 1), repeat=len(cells)):
        grid = dict(zip(cells, filling))
        ok = True
        for (r, c), v in grid.items():
            if (r, c - 1) in grid and grid[(r, c - 1)] > v:
                ok = False
                break
            if (r - 1, c) in grid and grid[(r - 1, c)] >= v:
                ok = False
                break
        if ok:
            content = [0] * n
            for v in filling:
                content[v - 1] += 1
            key = tuple(content)
            out[key] = out.get(key, 0) + 1
    return out


@pytest.mark.parametrize(
    "outer,inner,n",
    [((2, 1), (), 2), ((2, 1), (1,), 3), ((3, 1), (1,), 2), ((2, 2), (1,), 3)],
)
def test_skew_schur_against_brute_force(outer, inner, n):
    assert dense(skew_schur(SkewShape(outer, inner), n)) == brute_force_skew_schur(
        outer, inner, n
    )


def test_skew_schur_examples():
    assert skew_schur(SkewShape((2, 1), ()), 2).terms == {(2, 1): 1}
    assert skew_schur(SkewShape((3, 2), (3, 2)), 5).terms == {(): 1}
    assert skew_schur(SkewShape((1,), ()), 3).terms == {(1,): 1}
    assert skew_schur(SkewShape((1, 1), ()), 1).is_zero()


def test_skew_schur_all_ones_is_weyl_dimension():
    for lam in [(2, 1), (3, 1), (2, 2, 1)]:
        for n in (3, 4):
            assert skew_schur(SkewShape(lam, ()), n).evaluate_ones() == weyl_dimension(
                pad(lam, n)
            )


def test_multiply_examples():
    one = MonomialExpansion(2, {(): 1})
    e1 = skew_schur(SkewShape((1,), ()), 2)
    assert multiply(e1, one) == e1
    assert multiply(e1, e1).terms == {(2,): 1, (1, 1): 2}
    s1 = skew_schur(SkewShape((1,), ()), 2)
    s11 = skew_schur(SkewShape((1, 1), ()), 2)
    assert multiply(s1, s11).terms == {(2, 1): 1}


def test_multiply_rank_mismatch():
    with pytest.raises(ValueError):
        multiply(MonomialExpansion(2, {(): 1}), MonomialExpansion(3, {(): 1}))


@settings(deadline=None, max_examples=40)
@given(st.integers(2, 4), st.data())
def test_multiply_against_dense_oracle(n, data):
    shapes = [((1,), ()), ((2,), ()), ((1, 1), ()), ((2, 1), (1,)), ((2, 2), (1,))]
    o1, i1 = data.draw(st.sampled_from(shapes))
    o2, i2 = data.draw(st.sampled_from(shapes))
    a = skew_schur(SkewShape(o1, i1), n)
    b = skew_schur(SkewShape(o2, i2), n)
    assert dense(multiply(a, b)) == dense_mul(dense(a), dense(b))


def test_monomial_product_row_symmetry():
    assert monomial_product_row((2, 1), (1,)) == monomial_product_row((1,), (2, 1))


def test_subtract_and_min_coefficient():
    a = skew_schur(SkewShape((2, 1), ()), 3)
    diff, mc, witness = subtract_and_min_coefficient(a, a)
    assert diff.is_zero() and mc == 0 and witness is None

    lin = MonomialExpansion(2, {(1,): 1})
    sq = MonomialExpansion(2, {(2,): 1})
    diff, mc, witness = subtract_and_min_coefficient(lin, sq)
    assert mc == -1 and witness == (2,)


def test_squared_midpoint_difference_is_nonnegative():
    n = 6
    s21 = skew_schur(SkewShape((2, 1), ()), n)
    s31 = skew_schur(SkewShape((3, 1), ()), n)
    s11 = skew_schur(SkewShape((1, 1), ()), n)
    _, mc, _ = subtract_and_min_coefficient(multiply(s21, s21), multiply(s31, s11))
    assert mc >= 0


def test_to_schur_basis_examples():
    s21 = skew_schur(SkewShape((2, 1), ()), 3)
    assert to_schur_basis(s21).terms == {(2, 1): 1}
    prod = multiply(
        skew_schur(SkewShape((1,), ()), 3), skew_schur(SkewShape((1, 1), ()), 3)
    )
    assert to_schur_basis(prod).terms == {(2, 1): 1, (1, 1, 1): 1}
    sq = multiply(skew_schur(SkewShape((2, 1), ()), 4), skew_schur(SkewShape((2, 1), ()), 4))
    assert to_schur_basis(sq).terms == {
        (4, 2): 1,
        (4, 1, 1): 1,
        (3, 3): 1,
        (3, 2, 1): 2,
        (3, 1, 1, 1): 1,
        (2, 2, 2): 1,
        (2, 2, 1, 1): 1,
    }


def test_to_schur_basis_round_trip():
    rng = random.Random(3)
    for _ in range(15):
        n = rng.randint(2, 4)
        terms = {}
        for lam in partitions_up_to(5, n):
            if rng.random() < 0.3:
                c = rng.randint(-3, 3)
                if c:
                    terms[lam] = c
        poly = MonomialExpansion(n, {})
        for lam, c in terms.items():
            contrib = skew_schur(SkewShape(lam, ()), n)
            scaled = MonomialExpansion(n, {k: c * v for k, v in contrib.terms.items()})
            poly, _, _ = subtract_and_min_coefficient(
                poly, MonomialExpansion(n, {k: -v for k, v in scaled.terms.items()})
            )
        expansion = to_schur_basis(poly)
        assert expansion.terms == terms
        assert schur_to_monomials(expansion, n) == poly


def test_skew_schur_expands_nonnegatively_in_schur_basis():
    for lam in [(3, 1), (2, 2), (3, 2, 1)]:
        for mu in subdiagrams(partition(lam)):
            exp = to_schur_basis(skew_schur(SkewShape(lam, mu), 4))
            assert all(c >= 0 for c in exp.terms.values())


def test_toeplitz_schur_coefficient_examples():
    assert toeplitz_schur_coefficient({0: 1}, (), 3) == 1
    assert toeplitz_schur_coefficient({0: 1, 1: 1}, (1, 1), 2) == 1
    assert toeplitz_schur_coefficient({0: 1, 1: 1}, (2,), 2) == 0


def expand_product(x: dict, n: int):
    """Coefficient dict of prod_i sum_k x_k z_i^k, one variable at a time."""
    polys = {(): 1}
    for _ in range(n):
        out = {}
        for e, c in polys.items():
            for k, v in x.items():
                out[e + (k,)] = out.get(e + (k,), 0) + c * v
        polys = out
    return polys


def test_toeplitz_identity_on_random_integer_sequences():
    rng = random.Random(11)
    for _ in range(25):
        n = rng.randint(1, 3)
        support = {}
        for k in range(rng.randint(1, 5)):
            if rng.random() < 0.8:
                support[k] = rng.randint(0, 4)
        if not any(support.values()):
            support[0] = 1
        raw = expand_product(support, n)
        # the product is symmetric: each orbit coefficient is the dense
        # coefficient at the sorted representative
        orbit_terms = {
            partition(e): c
            for e, c in raw.items()
            if c and tuple(sorted(e, reverse=True)) == e
        }
        poly = MonomialExpansion(n, orbit_terms)
        expansion = to_schur_basis(poly)
        for lam in partitions_up_to(6, n):
            assert toeplitz_schur_coefficient(support, lam, n) == expansion.coefficient(
                lam
            ), (support, lam, n)


def test_toeplitz_identity_rational_sequences_scale():
    # rational sequences: scaling x by D multiplies every coefficient by D^n
    x = {0: Fraction(1, 2), 1: Fraction(1, 3)}
    n = 2
    scaled = {k: v * 6 for k, v in x.items()}
    for lam in [(), (1,), (1, 1), (2, 1)]:
        assert toeplitz_schur_coefficient(x, lam, n) * 36 == toeplitz_schur_coefficient(
            scaled, lam, n
        )
