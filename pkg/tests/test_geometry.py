import random
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.spatial import ConvexHull

from logcave.geometry import (
    DegenerateBodyError,
    affine_rank,
    compare_root_sum,
    facet_hyperplanes,
    hermite_basis,
    hull_vertices,
    hull_volume,
    in_convex_hull,
    lattice_covolume,
    minkowski_sum,
)

SQUARE = [(0, 0), (1, 0), (0, 1), (1, 1)]


def test_in_convex_hull_basics():
    assert in_convex_hull((F(1, 2), F(1, 2)), SQUARE)
    assert in_convex_hull((1, 0), SQUARE)
    assert in_convex_hull((F(1, 3), 0), SQUARE)
    assert not in_convex_hull((2, 0), SQUARE)
    assert not in_convex_hull((F(-1, 1000), 0), SQUARE)
    assert not in_convex_hull((0, 0), [])


def test_hull_vertices_drops_non_extreme_points():
    pts = SQUARE + [(F(1, 2), F(1, 2)), (F(1, 2), 0), (0, F(1, 2))]
    assert hull_vertices(pts) == sorted(tuple(map(F, p)) for p in SQUARE)


def test_affine_rank():
    assert affine_rank([(0, 0)]) == 0
    assert affine_rank([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_rank(SQUARE) == 2


def test_volumes_of_reference_bodies():
    assert hull_volume([(F(0),), (F(2),)]) == 2
    assert hull_volume(hull_vertices([(0, 0), (1, 0), (0, 1)])) == F(1, 2)
    assert hull_volume(hull_vertices(SQUARE)) == 1
    cube = [(x, y, z) for x in (0, 1) for y in (0, 1) for z in (0, 1)]
    assert hull_volume(hull_vertices(cube)) == 1
    simplex = [(0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert hull_volume(hull_vertices(simplex)) == F(1, 6)


def test_volume_degenerate_raises():
    with pytest.raises(DegenerateBodyError):
        hull_volume([(0, 0), (1, 1), (2, 2)])


def test_facets_of_square():
    planes = facet_hyperplanes(hull_vertices(SQUARE))
    assert len(planes) == 4
    for normal, offset in planes:
        assert all(
            sum(n * x for n, x in zip(normal, v)) <= offset for v in SQUARE
        )


@pytest.mark.parametrize("seed", [1, 2, 3])
def test_random_2d_volumes_match_float_hull(seed):
    rng = random.Random(seed)
    for _ in range(10):
        pts = [
            (F(rng.randint(-9, 9), rng.randint(1, 4)), F(rng.randint(-9, 9), rng.randint(1, 4)))
            for _ in range(12)
        ]
        if affine_rank(pts) < 2:
            continue
        vol = hull_volume(hull_vertices(pts))
        h = ConvexHull(np.array([[float(a), float(b)] for a, b in pts]))
        assert abs(float(vol) - h.volume) < 1e-9


@pytest.mark.parametrize("seed", [4, 5])
def test_random_3d_volumes_match_float_hull(seed):
    rng = random.Random(seed)
    for _ in range(6):
        pts = [tuple(rng.randint(0, 6) for _ in range(3)) for _ in range(14)]
        if affine_rank(pts) < 3:
            continue
        vol = hull_volume(hull_vertices(pts))
        h = ConvexHull(np.array(pts, dtype=float))
        assert abs(float(vol) - h.volume) < 1e-9


def test_minkowski_sum():
    seg = [(F(0),), (F(1),)]
    assert minkowski_sum(seg, seg) == [(F(0),), (F(1),), (F(2),)]


def test_hermite_basis_and_covolume():
    assert hermite_basis([(1, 0), (1, 2)]) == [(1, 0), (0, 2)]
    assert hermite_basis([(0, 0)]) == []
    assert lattice_covolume([(2, 0), (0, 3), (2, 3)], 2) == 6
    assert lattice_covolume([(2,)], 1) == 2
    with pytest.raises(DegenerateBodyError):
        lattice_covolume([(1, 1)], 2)


def test_hermite_preserves_span():
    rows = [(2, 4, 6), (3, 5, 7), (1, 1, 1)]
    basis = hermite_basis(rows)
    # every original row reduces to zero against the basis
    for row in rows:
        r = list(row)
        for b in basis:
            piv = next(i for i, x in enumerate(b) if x)
            if r[piv] % b[piv] == 0:
                f = r[piv] // b[piv]
                r = [x - f * y for x, y in zip(r, b)]
        assert all(x == 0 for x in r), (row, basis)


def test_root_comparisons_exact_cases():
    assert compare_root_sum(F(4), F(1), F(1), 2) == 0
    assert compare_root_sum(F(9), F(1), F(1), 2) == 1
    assert compare_root_sum(F(3), F(1), F(1), 2) == -1
    assert compare_root_sum(F(8), F(1), F(1), 3) == 0
    assert compare_root_sum(F(27, 8), F(1, 8), F(1), 3) == 0  # 3/2 = 1/2 + 1
    assert compare_root_sum(F(7), F(1), F(1), 3) == -1
    assert compare_root_sum(F(5), F(5), F(0), 3) == 0
    assert compare_root_sum(F(0), F(0), F(0), 2) == 0


def test_root_comparisons_match_floats():
    rng = random.Random(9)
    for _ in range(300):
        a, b, c = (F(rng.randint(0, 60), rng.randint(1, 9)) for _ in range(3))
        for d in (1, 2, 3):
            sign = compare_root_sum(a, b, c, d)
            x = float(a) ** (1 / d) - float(b) ** (1 / d) - float(c) ** (1 / d)
            if abs(x) > 1e-9:
                assert sign == (1 if x > 0 else -1), (a, b, c, d)
