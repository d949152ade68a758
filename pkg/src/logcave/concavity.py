"""Log-concavity checking over integer semigroups, and the exhaustive scanners.

The normative inequality is multiplicative and exact: an instance
(p+q)C = pA + qB passes for a multiplicity function F when

    F(C)**(p+q) >= F(A)**p * F(B)**q

as arbitrary-precision integers.  Zero values are legal and handled by the
same comparison; no logarithms are ever taken.

Scanners enumerate bounded instance families deterministically and return
reports whose content is independent of the worker count.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from math import comb, gcd
from multiprocessing import Pool
from typing import Callable, Sequence

from .lr import (
    WeightTriple,
    restriction_multiplicity,
    tensor_product_multiplicities,
    tensor_square_multiplicities,
    triple_invariant,
)
from .partitions import (
    GLWeight,
    Partition,
    SkewShape,
    contains,
    dominant_weights,
    pad,
    partition,
    partitions_up_to,
    subdiagrams,
    weight,
    weyl_dimension,
)
from .symfunc import (
    SchurExpansion,
    multiply,
    skew_schur,
    subtract_and_min_coefficient,
    to_schur_basis,
)


@dataclass(frozen=True)
class ConcavityInstance:
    """Points A, B, C of an integer semigroup with (p+q)C = pA + qB."""

    a: tuple[int, ...]
    b: tuple[int, ...]
    c: tuple[int, ...]
    p: int = 1
    q: int = 1

    def __post_init__(self):
        if self.p < 0 or self.q < 0 or self.p + self.q < 1:
            raise ValueError("need p, q >= 0 with p + q >= 1")
        m = self.p + self.q
        if len({len(self.a), len(self.b), len(self.c)}) != 1:
            raise ValueError("A, B, C must live in the same ambient space")
        for x, y, z in zip(self.a, self.b, self.c):
            if m * z != self.p * x + self.q * y:
                raise ValueError(
                    f"(p+q)C = pA + qB fails: {self.p}*{x} + {self.q}*{y} != {m}*{z}"
                )


@dataclass
class ConcavityReport:
    """Outcome of an exhaustive scan: instance count, violations, parameters."""

    checked: int
    violations: list[dict]
    params: dict

    @property
    def clean(self) -> bool:
        return not self.violations


def check_logconcave_instance(
    F: Callable[[tuple[int, ...]], int], inst: ConcavityInstance
) -> tuple[bool, tuple[int, int, int]]:
    """Evaluate one log-concavity instance exactly.

    Returns (passed, (F(A), F(B), F(C))).  Only integer multiplication and
    comparison are used, so zero multiplicities need no special casing.
    """
    fa, fb, fc = F(inst.a), F(inst.b), F(inst.c)
    if fa < 0 or fb < 0 or fc < 0:
        raise ValueError("multiplicity functions must be nonnegative")
    return fc ** (inst.p + inst.q) >= fa**inst.p * fb**inst.q, (fa, fb, fc)


# ---------------------------------------------------------------------------
# skew-shape midpoints and the square/product comparison
# ---------------------------------------------------------------------------


def _midpoint(a: Partition, b: Partition) -> Partition | None:
    """Componentwise midpoint of two partitions, or None if not integral."""
    L = max(len(a), len(b))
    pa, pb = pad(a, L), pad(b, L)
    if any((x + y) % 2 for x, y in zip(pa, pb)):
        return None
    return partition((x + y) // 2 for x, y in zip(pa, pb))


@dataclass
class SquareComparison:
    """Result of comparing s_mid^2 against s_1 * s_3 for skew shapes."""

    passed: bool
    min_coeff: int
    witness: Partition | None
    mid_outer: Partition
    mid_inner: Partition
    num_variables: int


def _square_minus_product(l1, m1, l3, m3):
    l1, m1, l3, m3 = map(partition, (l1, m1, l3, m3))
    for lam, mu in ((l1, m1), (l3, m3)):
        if not contains(lam, mu):
            raise ValueError(f"invalid skew shape {lam}/{mu}")
    l2 = _midpoint(l1, l3)
    m2 = _midpoint(m1, m3)
    if l2 is None or m2 is None:
        raise ValueError("midpoint is not integral")
    sh1, sh2, sh3 = SkewShape(l1, m1), SkewShape(l2, m2), SkewShape(l3, m3)
    n = max(1, sh1.size + sh3.size)
    mid = skew_schur(sh2, n)
    left = multiply(mid, mid)
    right = multiply(skew_schur(sh1, n), skew_schur(sh3, n))
    diff, min_coeff, witness = subtract_and_min_coefficient(left, right)
    return diff, SquareComparison(
        min_coeff >= 0, min_coeff, witness, l2, m2, n
    )


def theorem1_verify(l1, m1, l3, m3) -> SquareComparison:
    """Check coefficientwise nonnegativity of s_mid^2 - s_{l1/m1} s_{l3/m3}.

    The comparison runs in n = |l1/m1| + |l3/m3| variables, which decides
    the statement in any number of variables since no monomial of that
    degree involves more distinct variables.  A failure here would be a
    bug: the nonnegativity is a theorem.
    """
    _, result = _square_minus_product(l1, m1, l3, m3)
    return result


def slm_schur_positivity(l1, m1, l3, m3) -> tuple[bool, SchurExpansion, SquareComparison]:
    """Schur expansion of the same difference; conjecturally nonnegative.

    A negative Schur coefficient is a reportable discovery, not an error.
    """
    diff, result = _square_minus_product(l1, m1, l3, m3)
    expansion = to_schur_basis(diff)
    return expansion.is_nonnegative(), expansion, result


def skew_shapes_up_to(max_weight: int) -> list[tuple[Partition, Partition]]:
    """All skew shapes (outer, inner) with |outer| <= max_weight, fixed order."""
    return [
        (lam, mu)
        for lam in partitions_up_to(max_weight)
        for mu in subdiagrams(lam)
    ]


def _shape_parity(shape: tuple[Partition, Partition], rows: int) -> tuple:
    lam, mu = shape
    return (
        tuple(x % 2 for x in pad(lam, rows)),
        tuple(x % 2 for x in pad(mu, rows)),
    )


def _theorem1_unit(unit) -> dict | None:
    (l1, m1), (l3, m3) = unit
    r = theorem1_verify(l1, m1, l3, m3)
    if r.passed:
        return None
    return {
        "shape1": f"{fmt_shape(l1, m1)}",
        "shape3": f"{fmt_shape(l3, m3)}",
        "min_coefficient": str(r.min_coeff),
        "witness": ",".join(map(str, r.witness)),
    }


def _slm_unit(unit) -> dict | None:
    (l1, m1), (l3, m3) = unit
    ok, expansion, _ = slm_schur_positivity(l1, m1, l3, m3)
    if ok:
        return None
    bad = min(k for k, v in expansion.terms.items() if v < 0)
    return {
        "shape1": fmt_shape(l1, m1),
        "shape3": fmt_shape(l3, m3),
        "partition": ",".join(map(str, bad)),
        "coefficient": str(expansion.terms[bad]),
    }


def fmt_shape(lam: Partition, mu: Partition) -> str:
    o = ",".join(map(str, lam)) or "0"
    return f"{o}/{','.join(map(str, mu))}" if mu else o


def _run_units(worker, units: Sequence, jobs: int) -> list:
    """Apply worker to every unit, optionally on a process pool.

    Results come back in unit order regardless of the worker count, so
    reports are reproducible byte for byte.
    """
    if jobs <= 1 or len(units) < 4:
        return [worker(u) for u in units]
    chunk = max(1, len(units) // (jobs * 8))
    with Pool(processes=jobs) as pool:
        return pool.map(worker, units, chunksize=chunk)


def _skew_pair_units(max_weight: int) -> list:
    shapes = skew_shapes_up_to(max_weight)
    rows = max((len(s[0]) for s in shapes), default=1)
    groups: dict[tuple, list] = {}
    for s in shapes:
        groups.setdefault(_shape_parity(s, rows), []).append(s)
    units = []
    for sig in sorted(groups):
        members = groups[sig]
        for i in range(len(members)):
            for j in range(i, len(members)):
                units.append((members[i], members[j]))
    return units


def theorem1_scan(max_weight: int, jobs: int = 1) -> ConcavityReport:
    """Exhaustive squared-midpoint check over skew-shape pairs.

    Covers every unordered pair of skew shapes with outer weight at most
    max_weight whose componentwise midpoint is integral.  Expected
    violations: none, ever.
    """
    units = _skew_pair_units(max_weight)
    results = _run_units(_theorem1_unit, units, jobs)
    violations = [r for r in results if r is not None]
    return ConcavityReport(
        checked=len(units),
        violations=violations,
        params={"max_weight": max_weight, "pairs": "unordered"},
    )


def slm_scan(max_weight: int, jobs: int = 1) -> ConcavityReport:
    """Schur-positivity scanner for the squared-midpoint difference.

    A conjecture scanner: violations are findings written to the report.
    """
    units = _skew_pair_units(max_weight)
    results = _run_units(_slm_unit, units, jobs)
    violations = [r for r in results if r is not None]
    return ConcavityReport(
        checked=len(units),
        violations=violations,
        params={"max_weight": max_weight, "pairs": "unordered"},
    )


# ---------------------------------------------------------------------------
# triple-invariant scanners
# ---------------------------------------------------------------------------


def _primitive_pq(pq_bound: int) -> list[tuple[int, int]]:
    """Coprime (p, q) with 1 <= p <= q and p + q <= pq_bound.

    Non-primitive pairs are omitted (their inequality is a power of the
    primitive one) and (q, p) is covered by swapping the endpoints.
    """
    out = []
    for m in range(2, pq_bound + 1):
        for p in range(1, m // 2 + 1):
            q = m - p
            if gcd(p, q) == 1:
                out.append((p, q))
    return out


def _weight_triples(rank: int, bound: int) -> list[WeightTriple]:
    ws = list(dominant_weights(rank, -bound, bound))
    return [(a, b, c) for a in ws for b in ws for c in ws]


def _flat(t: WeightTriple) -> tuple[int, ...]:
    return t[0] + t[1] + t[2]


def conjecture1_scan(
    weight_bound: int, rank_bound: int, pq_bound: int = 2, jobs: int = 1
) -> ConcavityReport:
    """Scan log-concavity of the triple invariant over bounded weight triples.

    For each rank r <= rank_bound, enumerates pairs (A, B) of dominant
    weight triples with entries in [-weight_bound, weight_bound] and every
    coprime (p, q) with p + q <= pq_bound for which the weighted midpoint
    C is integral.  C stays inside the box by convexity, so all values come
    from one table.

    Instances where F(A) or F(B) vanishes pass outright (the right side is
    zero and F(C)**(p+q) >= 0 exactly), so only pairs of nonvanishing
    triples are evaluated explicitly; all instances are counted.
    """
    violations: list[dict] = []
    checked = 0
    for rank in range(1, rank_bound + 1):
        triples = _weight_triples(rank, weight_bound)
        values: dict[WeightTriple, int] = {}
        nonzero: list[WeightTriple] = []
        for t in triples:
            if sum(_flat(t)) != 0:
                continue
            v = triple_invariant(t)
            if v:
                values[t] = v
                nonzero.append(t)
        for p, q in _primitive_pq(pq_bound):
            m = p + q
            by_residue: dict[tuple, int] = {}
            nz_by_residue: dict[tuple, list[WeightTriple]] = {}
            for t in triples:
                r = tuple(x % m for x in _flat(t))
                by_residue[r] = by_residue.get(r, 0) + 1
            for t in nonzero:
                r = tuple(x % m for x in _flat(t))
                nz_by_residue.setdefault(r, []).append(t)
            # count all integral-midpoint instances arithmetically
            qinv = pow(q, -1, m)
            for r, count in sorted(by_residue.items()):
                target = tuple((-p * x * qinv) % m for x in r)
                other = by_residue.get(target, 0)
                if p == q:  # (p, q) = (1, 1): unordered pairs within a class
                    checked += count * (count + 1) // 2
                else:  # orientation matters: ordered pairs
                    checked += count * other
            # explicit checks only where both endpoint values are nonzero
            for r in sorted(nz_by_residue):
                target = tuple((-p * x * qinv) % m for x in r)
                if target not in nz_by_residue:
                    continue
                left = nz_by_residue[r]
                right = nz_by_residue[target]
                for a in left:
                    for b in right:
                        if p == q and b < a:
                            continue
                        fa = tuple(_flat(a))
                        fb = tuple(_flat(b))
                        cflat = tuple((p * x + q * y) // m for x, y in zip(fa, fb))
                        c = (
                            cflat[:rank],
                            cflat[rank : 2 * rank],
                            cflat[2 * rank :],
                        )
                        va, vb = values[a], values[b]
                        vc = triple_invariant(c)
                        if vc ** m < va**p * vb**q:
                            violations.append(
                                {
                                    "rank": rank,
                                    "p": p,
                                    "q": q,
                                    "a": fmt_triple(a),
                                    "b": fmt_triple(b),
                                    "c": fmt_triple(c),
                                    "values": [str(va), str(vb), str(vc)],
                                }
                            )
    violations.sort(key=lambda v: (v["rank"], v["p"], v["q"], v["a"], v["b"]))
    return ConcavityReport(
        checked=checked,
        violations=violations,
        params={
            "weight_bound": weight_bound,
            "rank_bound": rank_bound,
            "pq_bound": pq_bound,
            "pq_pairs": "coprime only",
        },
    )


def fmt_triple(t: WeightTriple) -> str:
    return " ".join(",".join(map(str, w)) for w in t)


@dataclass
class SaturationRow:
    k: int
    value: int
    saturation_ok: bool
    power_bound_ok: bool


def saturation_scan(t: WeightTriple, k_max: int) -> list[SaturationRow]:
    """Stretch a triple by k = 1..k_max and test saturation and the power bound.

    Saturation (a theorem): a nonzero invariant at k forces a nonzero
    invariant at 1.  The power bound c_k <= c_1**k is conjectural; a
    violation is a finding, not an error.
    """
    if k_max < 1:
        raise ValueError("k_max must be >= 1")
    base = triple_invariant(t)
    rows = []
    for k in range(1, k_max + 1):
        stretched = tuple(tuple(k * x for x in w) for w in t)
        ck = triple_invariant(stretched)
        rows.append(
            SaturationRow(
                k=k,
                value=ck,
                saturation_ok=(ck == 0 or base != 0),
                power_bound_ok=(ck <= base**k),
            )
        )
    return rows


def saturation_domain(max_weight: int, rank: int) -> list[WeightTriple]:
    """Triples (dual(lam), mu, nu) over partition triples bounded in weight.

    Raw partition triples carry no invariants (the entries cannot sum to
    zero), so the first slot is dualized; this matches the tensor-product
    reading of the invariant c^lam_{mu nu}.
    """
    parts = list(partitions_up_to(max_weight, max_parts=rank))
    out = []
    for lam in parts:
        for mu in parts:
            for nu in parts:
                dual_lam = tuple(-x for x in reversed(pad(lam, rank)))
                out.append((dual_lam, pad(mu, rank), pad(nu, rank)))
    return out


def saturation_scan_all(max_weight: int, rank: int, k_max: int) -> ConcavityReport:
    """Run saturation_scan over the bounded triple domain.

    Violations carry a "kind" field: "saturation" rows would falsify a
    theorem, "power_bound" rows are conjecture findings.
    """
    violations = []
    checked = 0
    for t in saturation_domain(max_weight, rank):
        rows = saturation_scan(t, k_max)
        checked += len(rows)
        base = rows[0].value
        for row in rows:
            if not row.saturation_ok:
                violations.append(
                    {
                        "kind": "saturation",
                        "triple": fmt_triple(t),
                        "k": row.k,
                        "values": [str(base), str(row.value)],
                    }
                )
            if not row.power_bound_ok:
                violations.append(
                    {
                        "kind": "power_bound",
                        "triple": fmt_triple(t),
                        "k": row.k,
                        "values": [str(base), str(row.value)],
                    }
                )
    return ConcavityReport(
        checked=checked,
        violations=violations,
        params={"max_weight": max_weight, "rank": rank, "k_max": k_max},
    )


def logv_inclusion_check(mu: GLWeight, nu: GLWeight) -> tuple[bool, GLWeight | None]:
    """Componentwise inclusion of V^nu (x) V^mu inside the squared midpoint module.

    Requires mu + nu even componentwise.  Returns (passed, first failing
    highest weight) comparing multiplicities of every constituent.
    """
    if len(mu) != len(nu):
        raise ValueError("rank mismatch")
    weight(mu)
    weight(nu)
    if any((x + y) % 2 for x, y in zip(mu, nu)):
        raise ValueError("midpoint is not integral")
    mid = tuple((x + y) // 2 for x, y in zip(mu, nu))
    left = tensor_product_multiplicities(mu, nu)
    right = tensor_square_multiplicities(mid)
    for lam in sorted(left):
        if left[lam] > right.get(lam, 0):
            return False, lam
    return True, None


def logv_scan(rank_bound: int, entry_bound: int) -> ConcavityReport:
    """Scan the tensor-square inclusion over bounded dominant weight pairs."""
    violations = []
    checked = 0
    for rank in range(1, rank_bound + 1):
        ws = list(dominant_weights(rank, -entry_bound, entry_bound))
        for i, mu in enumerate(ws):
            for nu in ws[i:]:
                if any((x + y) % 2 for x, y in zip(mu, nu)):
                    continue
                checked += 1
                ok, bad = logv_inclusion_check(mu, nu)
                if not ok:
                    violations.append(
                        {
                            "rank": rank,
                            "mu": ",".join(map(str, mu)),
                            "nu": ",".join(map(str, nu)),
                            "lam": ",".join(map(str, bad)),
                        }
                    )
    return ConcavityReport(
        checked=checked,
        violations=violations,
        params={"rank_bound": rank_bound, "entry_bound": entry_bound},
    )


def alpha_matrix_check(t: WeightTriple, p: int, q: int) -> tuple[bool, int, int]:
    """Compare the invariant of the circulant-averaged triple with the original.

    With alpha = p/(p+q) the image triple is
        lam' = alpha*lam + (1-alpha)*nu
        mu'  = alpha*mu  + (1-alpha)*lam
        nu'  = alpha*nu  + (1-alpha)*mu
    (alpha = 1 is the identity, alpha = 0 the cyclic rotation).  Every
    component must be integral; dominance of the averages is automatic.
    Returns (passed, value at image, value at original).
    """
    if p < 0 or q < 0 or p + q < 1:
        raise ValueError("need p, q >= 0 with p + q >= 1")
    lam, mu, nu = t
    for w in t:
        weight(w)
    m = p + q

    def mix(first: GLWeight, second: GLWeight) -> GLWeight:
        entries = []
        for x, y in zip(first, second):
            num = p * x + q * y
            if num % m:
                raise ValueError("image is not an integral weight")
            entries.append(num // m)
        return weight(entries)

    t2 = (mix(lam, nu), mix(mu, lam), mix(nu, mu))
    v2 = triple_invariant(t2)
    v1 = triple_invariant(t)
    return v2 >= v1, v2, v1


def alpha_scan(rank_bound: int, entry_bound: int, pq_bound: int = 2) -> ConcavityReport:
    """Scan the circulant inequality over bounded triples and alpha = p/(p+q).

    Only primitive (p, q) with p, q >= 1 are enumerated (alpha in (0, 1);
    the endpoints are the identity and the rotation, both trivial).
    Instances with a vanishing original invariant pass outright.
    """
    pq_pairs = []
    for m in range(2, pq_bound + 1):
        for p in range(1, m):
            if gcd(p, m - p) == 1:
                pq_pairs.append((p, m - p))
    violations = []
    checked = 0
    for rank in range(1, rank_bound + 1):
        triples = _weight_triples(rank, entry_bound)
        for p, q in pq_pairs:
            m = p + q
            for t in triples:
                lam, mu, nu = t
                if any(
                    (p * x + q * y) % m
                    for first, second in ((lam, nu), (mu, lam), (nu, mu))
                    for x, y in zip(first, second)
                ):
                    continue
                checked += 1
                v1 = triple_invariant(t)
                if v1 == 0:
                    continue
                ok, v2, _ = alpha_matrix_check(t, p, q)
                if not ok:
                    violations.append(
                        {
                            "rank": rank,
                            "p": p,
                            "q": q,
                            "triple": fmt_triple(t),
                            "values": [str(v1), str(v2)],
                        }
                    )
    return ConcavityReport(
        checked=checked,
        violations=violations,
        params={
            "rank_bound": rank_bound,
            "entry_bound": entry_bound,
            "pq_bound": pq_bound,
        },
    )


# ---------------------------------------------------------------------------
# sequence convolution
# ---------------------------------------------------------------------------


class SequencePreconditionError(ValueError):
    """An input sequence is not log-concave with contiguous support."""


def _validate_logconcave(seq: Sequence[int], name: str) -> None:
    if any(x < 0 for x in seq):
        raise SequencePreconditionError(f"{name} has a negative entry")
    support = [i for i, x in enumerate(seq) if x > 0]
    if not support:
        raise SequencePreconditionError(f"{name} is identically zero")
    lo, hi = support[0], support[-1]
    if any(seq[i] == 0 for i in range(lo, hi + 1)):
        raise SequencePreconditionError(f"{name} has an internal zero")
    for i in range(1, len(seq) - 1):
        if seq[i] ** 2 < seq[i - 1] * seq[i + 1]:
            raise SequencePreconditionError(f"{name} is not log-concave at {i}")


def convolve(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def convolution_logconcavity_check(a: Sequence[int], b: Sequence[int]) -> tuple[bool, int | None]:
    """Verify that the convolution of two log-concave sequences is log-concave.

    Both inputs must be nonnegative, log-concave, with contiguous support;
    a bad input raises SequencePreconditionError, distinct from a failing
    check.  Returns (passed, first failing index or None).
    """
    _validate_logconcave(a, "first sequence")
    _validate_logconcave(b, "second sequence")
    c = convolve(list(a), list(b))
    for i in range(1, len(c) - 1):
        if c[i] ** 2 < c[i - 1] * c[i + 1]:
            return False, i
    return True, None


def random_logconcave_sequence(rng: random.Random, max_len: int) -> list[int]:
    """A random positive log-concave integer sequence of length <= max_len.

    Built as a pointwise product of a binomial-row window and a geometric
    progression; both factors are log-concave and pointwise products of
    log-concave sequences stay log-concave.
    """
    length = rng.randint(1, max_len)
    m = rng.randint(length - 1, 2 * max_len)
    start = rng.randint(0, m - length + 1)
    t_num = rng.randint(1, 4)
    t_den = rng.randint(1, 4)
    scale = rng.randint(1, 5)
    seq = []
    for i in range(length):
        # multiply by t_num^i * t_den^(length-i) to stay integral
        seq.append(scale * comb(m, start + i) * t_num**i * t_den ** (length - i))
    return seq


def convolution_random_suite(cases: int, max_len: int, seed: int) -> ConcavityReport:
    """Seeded random convolution checks; every case is a hard assertion."""
    rng = random.Random(seed)
    violations = []
    for case in range(cases):
        a = random_logconcave_sequence(rng, max_len)
        b = random_logconcave_sequence(rng, max_len)
        ok, idx = convolution_logconcavity_check(a, b)
        if not ok:
            violations.append(
                {
                    "case": case,
                    "a": [str(x) for x in a],
                    "b": [str(x) for x in b],
                    "index": idx,
                }
            )
    return ConcavityReport(
        checked=cases,
        violations=violations,
        params={"cases": cases, "max_len": max_len, "seed": seed},
    )


# ---------------------------------------------------------------------------
# dimension and restriction scans
# ---------------------------------------------------------------------------


def weyl_logconcavity_scan(rank: int, entry_bound: int, jobs: int = 1) -> ConcavityReport:
    """Exhaustive log-concavity check of the Weyl dimension over bounded weights.

    Entries range over [0, entry_bound]; shifting by a constant changes
    neither dimensions nor midpoints, so nonnegative entries lose no
    generality for a bounded window.  Expected violations: none.
    """
    violations = []
    checked = 0
    for r in range(1, rank + 1):
        ws = list(dominant_weights(r, 0, entry_bound))
        dims = {w: weyl_dimension(w) for w in ws}
        groups: dict[tuple, list[GLWeight]] = {}
        for w in ws:
            groups.setdefault(tuple(x % 2 for x in w), []).append(w)
        for sig in sorted(groups):
            members = groups[sig]
            for i, a in enumerate(members):
                for b in members[i:]:
                    c = tuple((x + y) // 2 for x, y in zip(a, b))
                    checked += 1
                    da, db, dc = dims[a], dims[b], dims[c]
                    if dc * dc < da * db:
                        violations.append(
                            {
                                "rank": r,
                                "a": ",".join(map(str, a)),
                                "b": ",".join(map(str, b)),
                                "c": ",".join(map(str, c)),
                                "values": [str(da), str(db), str(dc)],
                            }
                        )
    return ConcavityReport(
        checked=checked,
        violations=violations,
        params={"rank": rank, "entry_bound": entry_bound},
    )


def restriction_logconcavity_scan(
    n: int, k: int, weight_bound: int, jobs: int = 1
) -> ConcavityReport:
    """Joint log-concavity of restriction multiplicities in the pair (lam, mu).

    Points are pairs of partitions (at most n and k parts) with weight at
    most weight_bound, embedded as integer vectors of length n + k; all
    integral-midpoint pairs are checked.  Expected violations: none.
    """
    if k >= n:
        raise ValueError("need k < n")
    points = [
        (lam, mu)
        for lam in partitions_up_to(weight_bound, max_parts=n)
        for mu in partitions_up_to(weight_bound, max_parts=k)
    ]
    values = {
        (lam, mu): restriction_multiplicity(lam, mu, n, k) for lam, mu in points
    }
    groups: dict[tuple, list] = {}
    for lam, mu in points:
        sig = tuple(x % 2 for x in pad(lam, n) + pad(mu, k))
        groups.setdefault(sig, []).append((lam, mu))
    violations = []
    checked = 0
    for sig in sorted(groups):
        members = groups[sig]
        for i, a in enumerate(members):
            for b in members[i:]:
                flat_a = pad(a[0], n) + pad(a[1], k)
                flat_b = pad(b[0], n) + pad(b[1], k)
                mid = tuple((x + y) // 2 for x, y in zip(flat_a, flat_b))
                c = (partition(mid[:n]), partition(mid[n:]))
                checked += 1
                fa, fb = values[a], values[b]
                fc = values.get(c)
                if fc is None:
                    fc = restriction_multiplicity(c[0], c[1], n, k)
                if fc * fc < fa * fb:
                    violations.append(
                        {
                            "a": f"{fmt_shape(*a)}",
                            "b": f"{fmt_shape(*b)}",
                            "c": f"{fmt_shape(*c)}",
                            "values": [str(fa), str(fb), str(fc)],
                        }
                    )
    return ConcavityReport(
        checked=checked,
        violations=violations,
        params={"n": n, "k": k, "weight_bound": weight_bound},
    )
