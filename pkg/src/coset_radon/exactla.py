"""Exact linear algebra over the rationals, plus a mod-p cross-check path.

Rank and kernel verdicts rest on fraction-free row reduction with Python's
unbounded integers: rows are cross-multiplied, divided by their gcd and kept
in echelon form, so no floating point is ever involved. The modular path
reduces the same matrix over small prime fields with numpy; a full modular
rank is already a proof of full rational rank (a minor that is nonzero mod p
is nonzero), while deficient modular ranks only ever serve as cross-checks.
"""

from __future__ import annotations

import math
from bisect import bisect_left
from fractions import Fraction

import numpy as np

__all__ = [
    "field_nullspace",
    "field_rref",
    "int_echelon",
    "is_prime",
    "next_prime",
    "check_primes",
    "prime_divisors",
    "rank_exact",
    "rank_mod",
    "rational_nullspace",
]


# ---------------------------------------------------------------------------
# integer echelon over Q


def _normalize(row: list[int]) -> list[int]:
    g = 0
    for v in row:
        g = math.gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = [v // g for v in row]
    for v in row:
        if v > 0:
            return row
        if v < 0:
            return [-u for u in row]
    return row


def int_echelon(
    rows, ncols: int, stop_rank: int | None = None
) -> tuple[list[int], list[list[int]]]:
    """Insert integer rows one at a time, keeping a gcd-reduced echelon basis.

    Returns (pivot columns, basis rows), both sorted by pivot column. Rows
    are eliminated by integer cross-multiplication only, so every basis row
    spans exactly what the inserted rows span over the rationals. Passing
    stop_rank short-circuits once that many independent rows are found.
    """
    pivots: list[int] = []
    basis: list[list[int]] = []
    limit = ncols if stop_rank is None else min(stop_rank, ncols)
    for row in rows:
        r = list(row)
        if len(r) != ncols:
            raise ValueError(f"row of length {len(r)}, expected {ncols}")
        for p, b in zip(pivots, basis):
            x = r[p]
            if x:
                lead = b[p]
                g = math.gcd(x, lead)
                cr, cb = lead // g, x // g
                r = [cr * ri - cb * bi for ri, bi in zip(r, b)]
        piv = next((j for j, v in enumerate(r) if v), None)
        if piv is None:
            continue
        r = _normalize(r)
        pos = bisect_left(pivots, piv)
        pivots.insert(pos, piv)
        basis.insert(pos, r)
        if len(basis) >= limit:
            break
    return pivots, basis


def rank_exact(rows, ncols: int, stop_rank: int | None = None) -> int:
    return len(int_echelon(rows, ncols, stop_rank=stop_rank)[0])


def rational_nullspace(rows, ncols: int) -> list[tuple[Fraction, ...]]:
    """Basis of the rational kernel, presented in reduced row-echelon form.

    Entries are Fractions in lowest terms and each basis vector's leading
    entry is 1.
    """
    pivots, basis = int_echelon(rows, ncols)
    rank = len(pivots)
    if rank == ncols:
        return []
    rref = [[Fraction(v) for v in row] for row in basis]
    for i in range(rank):
        lead = rref[i][pivots[i]]
        rref[i] = [v / lead for v in rref[i]]
    for i in range(rank - 1, -1, -1):
        for j in range(i):
            factor = rref[j][pivots[i]]
            if factor:
                rref[j] = [a - factor * b for a, b in zip(rref[j], rref[i])]
    free = [c for c in range(ncols) if c not in set(pivots)]
    vectors = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for i, p in enumerate(pivots):
            vec[p] = -rref[i][f]
        vectors.append(vec)
    reduced, _ = field_rref(vectors)
    return [tuple(v) for v in reduced]


# ---------------------------------------------------------------------------
# generic exact elimination (Fraction or any exact field element type)


def field_rref(rows) -> tuple[list[list], list[int]]:
    """Reduced row echelon form over any exact field; returns (rows, pivots).

    Entries only need arithmetic dunders, truthiness for nonzero tests and
    exact division. Zero rows are dropped.
    """
    work = [list(r) for r in rows]
    if not work:
        return [], []
    ncols = len(work[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(work)) if work[i][c]), None)
        if pivot_row is None:
            continue
        work[r], work[pivot_row] = work[pivot_row], work[r]
        lead = work[r][c]
        work[r] = [v / lead for v in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                factor = work[i][c]
                work[i] = [a - factor * b for a, b in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def field_nullspace(rows, ncols: int, zero, one) -> list[list]:
    """Kernel basis over an exact field; zero/one are that field's constants."""
    rref, pivots = field_rref(rows)
    free = [c for c in range(ncols) if c not in set(pivots)]
    vectors = []
    for f in free:
        vec = [zero] * ncols
        vec[f] = one
        for i, p in enumerate(pivots):
            vec[p] = -rref[i][f]
        vectors.append(vec)
    return vectors


# ---------------------------------------------------------------------------
# modular path


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def next_prime(n: int) -> int:
    k = max(2, n + 1)
    while not is_prime(k):
        k += 1
    return k


def check_primes(bound: int, count: int = 3) -> list[int]:
    """The first `count` primes strictly above `bound`."""
    out = []
    p = bound
    for _ in range(count):
        p = next_prime(p)
        out.append(p)
    return out


def prime_divisors(n: int) -> list[int]:
    """Distinct prime divisors of n, ascending."""
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def _eliminate_mod(m: np.ndarray, p: int) -> np.ndarray:
    m = np.mod(m, p)
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        nz = np.nonzero(m[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            m[[r, i]] = m[[i, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        m[r] = (m[r] * inv) % p
        if r + 1 < nrows:
            col = m[r + 1 :, c]
            hit = np.nonzero(col)[0]
            if hit.size:
                m[r + 1 + hit] = (m[r + 1 + hit] - np.outer(col[hit], m[r])) % p
        r += 1
        if r == nrows:
            break
    return m[:r]


def rank_mod(rows, ncols: int, p: int, stop_rank: int | None = None) -> int:
    """Rank of an integer matrix mod p, processed in chunks with early stop."""
    limit = ncols if stop_rank is None else min(stop_rank, ncols)
    basis = np.zeros((0, ncols), dtype=np.int64)
    mat = np.asarray(rows, dtype=np.int64)
    if mat.size == 0:
        return 0
    chunk = 2048
    for start in range(0, mat.shape[0], chunk):
        block = np.vstack([basis, mat[start : start + chunk]])
        basis = _eliminate_mod(block, p)
        if basis.shape[0] >= limit:
            break
    return int(basis.shape[0])
