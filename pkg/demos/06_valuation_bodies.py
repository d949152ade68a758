"""Valuation bodies of polynomial subspaces and Brunn-Minkowski.

The lex-minimal-exponent valuation turns a subspace into lattice points;
powers of the subspace fill out a convex body whose lattice-normalized
volume measures the growth of dim S^k.  Volumes of products obey the
d-th root superadditivity, with equality for a subspace against itself.
"""

from logcave.bodies import (
    body_approximation,
    brunn_minkowski_check,
    degree_bounded_monomials,
    degree_estimate,
    flag_valuation,
    monomial,
    monomial_subspace,
    normalized_volume,
    power_subspace,
)

f = monomial(2, (2, 1))
g = monomial(2, (1, 0))
print("valuation is additive:", flag_valuation(f), "+", flag_valuation(g), "=", flag_valuation(f * g))

S = degree_bounded_monomials(2, 1)  # span{1, x, y}
print("\ndim S^k for S = degree <= 1 monomials in 2 variables:")
print("  ", [power_subspace(S, k).dimension for k in range(1, 6)])
body = body_approximation(S, 4)
print("hull vertices:", body.hull, "stable:", body.stable)
print("normalized volume:", normalized_volume(body))
print("growth degree:", degree_estimate(S, 4).degree)

# the segment [0, 2] against the lattice 2Z
S2 = monomial_subspace(1, [(2,)])
b2 = body_approximation(S2, 3)
print("\nspan{1, x^2}: hull", b2.hull, "normalized volume", normalized_volume(b2))

square = monomial_subspace(2, [(1, 0), (0, 1), (1, 1)])
r = brunn_minkowski_check(S, square, 4)
print("\nsimplex against square:")
print("  volumes (v1, v2, v12):", r.volumes)
print("  d-th root comparison sign:", r.comparison_sign, "passed:", r.passed)

r = brunn_minkowski_check(S, S, 4)
print("S against itself is the equality case:", r.comparison_sign == 0)
