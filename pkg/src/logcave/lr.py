"""Littlewood-Richardson coefficients, triple invariants and restriction multiplicities.

Two independent computation paths are kept: counting LR skew tableaux
(default, fast) and peeling Schur coefficients out of a product of
monomial expansions (oracle).  GL weights with negative entries are
handled by determinant shifts: adding a constant to every entry of a
weight twists the module by a power of det and leaves multiplicities
unchanged.
"""

from __future__ import annotations

import os
import threading
from functools import lru_cache
from typing import Callable

from .partitions import (
    GLWeight,
    Partition,
    SkewShape,
    arrangement_count,
    contains,
    dual_weight,
    pad,
    partition,
    partitions_of,
    weight,
)
from .symfunc import kostka_table, multiply, skew_schur, to_schur_basis

WeightTriple = tuple[GLWeight, GLWeight, GLWeight]


def _check_triple(t: WeightTriple) -> int:
    lam, mu, nu = t
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise ValueError(f"rank mismatch in triple {t}")
    for w in t:
        weight(w)
    return n


@lru_cache(maxsize=None)
def lr_skew_count(outer: Partition, inner: Partition, content: Partition) -> int:
    """Number of LR tableaux: SSYT of shape outer/inner with the given content
    whose reverse reading word (rows right to left, top to bottom) is a
    lattice word.
    """
    if not contains(outer, inner):
        return 0
    if sum(outer) - sum(inner) != sum(content):
        return 0
    shape = SkewShape(outer, inner)
    bounds = shape.row_bounds()
    # cells in reverse reading order; the ballot condition is then a
    # prefix condition checked as we fill
    cells = [
        (r, c)
        for r, (lo, hi) in enumerate(bounds)
        for c in range(hi - 1, lo - 1, -1)
    ]
    if not cells:
        return 1
    m = len(content)
    counts = [0] * (m + 1)
    grid: dict[tuple[int, int], int] = {}
    total = 0

    def fill(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        hi = m
        if (r, c + 1) in grid:
            hi = min(hi, grid[(r, c + 1)])
        lo = 1
        if (r - 1, c) in grid:
            lo = max(lo, grid[(r - 1, c)] + 1)
        found = 0
        for v in range(lo, hi + 1):
            if counts[v] >= content[v - 1]:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            grid[(r, c)] = v
            found += fill(k + 1)
            del grid[(r, c)]
            counts[v] -= 1
        return found

    total = fill(0)
    return total


def _shifted_triple(lam: GLWeight, mu: GLWeight, nu: GLWeight):
    """Shift mu, nu to partitions and lam compatibly; None if lam leaves the cone."""
    a = -min(mu)
    b = -min(nu)
    mu_p = partition(x + a for x in mu)
    nu_p = partition(x + b for x in nu)
    lam_shifted = tuple(x + a + b for x in lam)
    if lam_shifted[-1] < 0:
        return None
    return partition(lam_shifted), mu_p, nu_p


def lr_coefficient(lam: GLWeight, mu: GLWeight, nu: GLWeight) -> int:
    """Multiplicity of V^lam in V^mu tensor V^nu for U(n), exact.

    All three weights must be dominant of equal rank.  Computed after a
    simultaneous determinant shift making everything a partition, then by
    counting LR skew tableaux of shape lam/mu with content nu.
    """
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise ValueError("rank mismatch")
    for w in (lam, mu, nu):
        weight(w)
    shifted = _shifted_triple(lam, mu, nu)
    if shifted is None:
        return 0
    lam_p, mu_p, nu_p = shifted
    if sum(lam_p) != sum(mu_p) + sum(nu_p):
        return 0
    if len(lam_p) > n:
        return 0
    return lr_skew_count(lam_p, mu_p, nu_p)


def lr_coefficient_schur_peel(lam: GLWeight, mu: GLWeight, nu: GLWeight) -> int:
    """Oracle path: the same multiplicity via a Schur-basis peel of the product."""
    n = len(lam)
    if len(mu) != n or len(nu) != n:
        raise ValueError("rank mismatch")
    shifted = _shifted_triple(lam, mu, nu)
    if shifted is None:
        return 0
    lam_p, mu_p, nu_p = shifted
    if len(lam_p) > n:
        return 0
    prod = multiply(
        skew_schur(SkewShape(mu_p, ()), n), skew_schur(SkewShape(nu_p, ()), n)
    )
    return to_schur_basis(prod).coefficient(lam_p)


def triple_invariant(t: WeightTriple, cache: "LRCache | None" = None) -> int:
    """Dimension of the invariants in V^lam tensor V^mu tensor V^nu.

    Fully symmetric in the three arguments; zero whenever the entries do
    not sum to zero (no torus invariants).
    """
    n = _check_triple(t)
    lam, mu, nu = t
    if sum(lam) + sum(mu) + sum(nu) != 0:
        return 0
    if cache is None:
        cache = _default_cache()
    return cache.get_or_compute(
        (lam, mu, nu, n), lambda: lr_coefficient(dual_weight(lam), mu, nu)
    )


def restriction_multiplicity(lam: Partition, mu: Partition, n: int, k: int) -> int:
    """Multiplicity of V^mu of U(k) inside V^lam of U(n), for standard U(k) in U(n).

    Equals the number of SSYT of shape lam/mu with entries <= n-k; zero
    when mu is not contained in lam.
    """
    if k >= n:
        raise ValueError(f"need k < n, got k={k}, n={n}")
    lam = partition(lam)
    mu = partition(mu)
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    if len(mu) > k:
        raise ValueError(f"{mu} has more than {k} parts")
    if not contains(lam, mu):
        return 0
    m = n - k
    d = sum(lam) - sum(mu)
    table = kostka_table(lam, mu, min(m, d))
    return sum(c * arrangement_count(a, m) for a, c in table.items() if len(a) <= m)


def tensor_product_multiplicities(w1: GLWeight, w2: GLWeight) -> dict[GLWeight, int]:
    """Full decomposition of V^w1 tensor V^w2 as a weight -> multiplicity map."""
    n = len(w1)
    if len(w2) != n:
        raise ValueError("rank mismatch")
    weight(w1)
    weight(w2)
    p1, s1 = _shift(w1)
    p2, s2 = _shift(w2)
    total = sum(p1) + sum(p2)
    out: dict[GLWeight, int] = {}
    first_cap = (p1[0] if p1 else 0) + (p2[0] if p2 else 0)
    for lam in partitions_of(total, max_parts=n, max_part=first_cap):
        c = lr_skew_count(lam, p1, p2)
        if c:
            out[tuple(x + s1 + s2 for x in pad(lam, n))] = c
    return out


def _shift(w: GLWeight) -> tuple[Partition, int]:
    shift = min(w) if min(w) < 0 else 0
    return partition(x - shift for x in w), shift


def tensor_square_multiplicities(w: GLWeight) -> dict[GLWeight, int]:
    """Decomposition of V^w tensor V^w."""
    return tensor_product_multiplicities(w, w)


def format_weight(w: GLWeight) -> str:
    return ",".join(map(str, w))


class LRCache:
    """Memo for triple invariants, optionally backed by an append-only file.

    File lines are "lam;mu;nu;n;value" in the comma-separated weight
    syntax.  Writes happen under a lock and each entry is a single
    buffered write followed by a flush, so concurrent readers never see a
    torn value; at worst two processes compute the same key and append it
    twice, which is harmless.
    """

    def __init__(self, path: str | None = None):
        self._memory: dict[tuple, int] = {}
        self._lock = threading.Lock()
        self._path = path
        if path and os.path.exists(path):
            with open(path, "r", encoding="ascii") as fh:
                for line in fh:
                    line = line.strip()
                    if not line:
                        continue
                    try:
                        lam_s, mu_s, nu_s, n_s, val_s = line.split(";")
                        key = (
                            tuple(int(x) for x in lam_s.split(",")),
                            tuple(int(x) for x in mu_s.split(",")),
                            tuple(int(x) for x in nu_s.split(",")),
                            int(n_s),
                        )
                        self._memory[key] = int(val_s)
                    except ValueError:
                        continue  # foreign or truncated line

    def get_or_compute(self, key: tuple, compute: Callable[[], int]) -> int:
        with self._lock:
            if key in self._memory:
                return self._memory[key]
        value = compute()
        with self._lock:
            self._memory[key] = value
            if self._path:
                lam, mu, nu, n = key
                line = ";".join(
                    (format_weight(lam), format_weight(mu), format_weight(nu), str(n), str(value))
                )
                with open(self._path, "a", encoding="ascii") as fh:
                    fh.write(line + "\n")
                    fh.flush()
        return value

    def __len__(self):
        return len(self._memory)


_CACHE: LRCache | None = None


def _default_cache() -> LRCache:
    global _CACHE
    if _CACHE is None:
        cache_dir = os.environ.get("LOGCAVE_CACHE_DIR")
        if cache_dir:
            os.makedirs(cache_dir, exist_ok=True)
            _CACHE = LRCache(os.path.join(cache_dir, "lr_cache.txt"))
        else:
            _CACHE = LRCache()
    return _CACHE


def reset_default_cache() -> None:
    """Drop the module-level cache (used by tests and after env changes)."""
    global _CACHE
    _CACHE = None
