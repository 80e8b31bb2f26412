"""Radon systems: coset-sum matrices, exact rank, kernels and witnesses.

A system's matrix has one row per geodesic and one column per group element;
injectivity of the transform is exactly "this matrix has full column rank
over the rationals". Verdicts are never probabilistic: a full rank mod p is
already a proof of full rational rank, and deficient systems are settled by
fraction-free integer elimination with the kernel basis re-verified by exact
multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import exactla
from .errors import (
    DimensionError,
    InvalidOrderError,
    InvalidVariantError,
    NoGeodesicsError,
    NotCoprimeError,
    NotCyclicError,
    RankDisagreementError,
    UnsupportedGroupError,
)
from .geodesics import (
    Geodesic,
    homomorphisms_cn,
    maximal_geodesics,
    prime_geodesics,
)
from .groups import GroupTable, is_abelian, is_cyclic, make_direct_product

__all__ = [
    "InjectivityVerdict",
    "KernelBasis",
    "RadonSystem",
    "apply",
    "build_system",
    "composite_consistency",
    "dimension_bound_check",
    "BoundCheck",
    "group_sum_from_radon",
    "is_injective",
    "kernel",
    "kernel_witness_cyclic",
    "kernel_witness_product",
    "rank",
    "reconstruct_all",
    "reconstruct_cpxcp",
]

VARIANTS = ("prime", "maximal")


@dataclass(frozen=True)
class RadonSystem:
    """Rows (geodesics or flow orbits) and the integer incidence matrix."""

    group: GroupTable | None
    variant: str
    rows: tuple
    matrix: tuple[tuple[int, ...], ...]
    ncols: int


@dataclass(frozen=True)
class KernelBasis:
    """Kernel basis vectors in reduced row-echelon form, lowest terms."""

    vectors: tuple[tuple[Fraction, ...], ...]
    dim: int


@dataclass(frozen=True)
class InjectivityVerdict:
    order: int
    variant: str
    rows: int
    rank: int
    kernel_dim: int
    injective: bool
    frobenius_complement: bool | None
    method: str


def build_system(g: GroupTable, variant: str = "prime") -> RadonSystem:
    """Incidence matrix of the chosen geodesic family (0/1 entries)."""
    if variant == "prime":
        geos = prime_geodesics(g)
    elif variant == "maximal":
        geos = maximal_geodesics(g)
    else:
        raise InvalidVariantError(f"unknown variant {variant!r}")
    n = g.order
    matrix = []
    for geo in geos:
        row = [0] * n
        for x in geo.coset:
            row[x] = 1
        matrix.append(tuple(row))
    return RadonSystem(
        group=g,
        variant=variant,
        rows=tuple(geos),
        matrix=tuple(matrix),
        ncols=n,
    )


def apply(sys: RadonSystem, f) -> tuple:
    """Exact matrix-vector product: one coset sum per row."""
    values = list(f)
    if len(values) != sys.ncols:
        raise DimensionError(f"function has length {len(values)}, expected {sys.ncols}")
    out = []
    for row in sys.matrix:
        acc = 0
        for weight, v in zip(row, values):
            if weight:
                acc = acc + (v if weight == 1 else weight * v)
        out.append(acc)
    return tuple(out)


def rank(sys: RadonSystem) -> int:
    """Exact rational rank via fraction-free integer elimination."""
    return exactla.rank_exact(sys.matrix, sys.ncols)


def kernel(sys: RadonSystem) -> KernelBasis:
    """Exact rational kernel; every returned vector is re-checked against
    the matrix, so a KernelBasis in hand is a certificate."""
    vectors = exactla.rational_nullspace(sys.matrix, sys.ncols)
    for vec in vectors:
        if any(v for v in apply(sys, vec)):
            raise AssertionError("kernel vector fails exact annihilation check")
    return KernelBasis(vectors=tuple(vectors), dim=len(vectors))


def _max_entry(sys: RadonSystem) -> int:
    return max((max(row) for row in sys.matrix), default=1)


def decide_system(sys: RadonSystem, exact_confirm: bool = True) -> tuple[int, int, str]:
    """(rank, kernel_dim, method) with the certificate policy.

    Tries small primes first; any single full modular rank certifies full
    rational rank. Otherwise the exact integer path is authoritative (unless
    exact_confirm is off, in which case the best modular rank is reported
    as-is and flagged in the method string).
    """
    n = sys.ncols
    primes = exactla.check_primes(n * max(1, _max_entry(sys)))
    best = 0
    for p in primes:
        r = exactla.rank_mod(sys.matrix, n, p, stop_rank=n)
        best = max(best, r)
        if r == n:
            return n, 0, "modular-full-rank"
    if not exact_confirm:
        return best, n - best, "modular-unconfirmed"
    ker = kernel(sys)
    r = n - ker.dim
    if r < best:  # modular rank can never exceed the rational rank
        raise RankDisagreementError(
            f"exact rank {r} below modular rank {best}"
        )  # pragma: no cover
    return r, ker.dim, "exact-elimination"


def is_injective(
    g: GroupTable, variant: str = "prime", exact_confirm: bool = True
) -> InjectivityVerdict:
    """Injectivity verdict for the chosen variant.

    For the prime variant, noninjectivity coincides with G being a Frobenius
    complement, so that flag is reported as the definitional restatement of
    the verdict; the maximal variant carries no such flag.
    """
    sys = build_system(g, variant)
    r, kdim, method = decide_system(sys, exact_confirm=exact_confirm)
    injective = kdim == 0
    frob = (not injective) if variant == "prime" else None
    return InjectivityVerdict(
        order=g.order,
        variant=variant,
        rows=len(sys.rows),
        rank=r,
        kernel_dim=kdim,
        injective=injective,
        frobenius_complement=frob,
        method=method,
    )


def group_sum_from_radon(sys: RadonSystem, values) -> Fraction:
    """Recover the total mass of f from transform values alone.

    The cosets of any one subgroup partition the group, so summing that
    subgroup's rows gives the plain sum of f. (In point-indexed form this is
    the 1/n-weighted identity; deduplicated rows absorb the factor n.)
    """
    if sys.variant not in VARIANTS:
        raise InvalidVariantError("group sum needs a geodesic system")
    vals = list(values)
    if len(vals) != len(sys.rows):
        raise DimensionError(f"got {len(vals)} values for {len(sys.rows)} rows")
    first: Geodesic = sys.rows[0]
    sub = first.subgroup.elements
    total = sum(
        v for geo, v in zip(sys.rows, vals) if geo.subgroup.elements == sub
    )
    return Fraction(total)


def _elementary_square_prime(g: GroupTable) -> int:
    """p when G is C_p x C_p (order p^2, exponent p), else raises."""
    n = g.order
    p = math.isqrt(n)
    if p * p != n or not exactla.is_prime(p):
        raise UnsupportedGroupError(f"order {n} is not the square of a prime")
    if not is_abelian(g) or any(g.elt_order[x] != p for x in range(1, n)):
        raise UnsupportedGroupError("group is not elementary abelian of rank 2")
    return p


def reconstruct_cpxcp(sys: RadonSystem, values, x: int) -> Fraction:
    """Closed-form inversion on C_p x C_p from prime-variant coset sums.

    With rows deduplicated to one per coset, each of the p+1 subgroup
    directions contributes its coset through x once; those sums count f(x)
    p+1 times and everything else once, so subtracting the total mass and
    dividing by p isolates f(x).
    """
    if sys.variant != "prime":
        raise InvalidVariantError("reconstruction is defined on the prime system")
    g = sys.group
    p = _elementary_square_prime(g)
    vals = list(values)
    if len(vals) != len(sys.rows):
        raise DimensionError(f"got {len(vals)} values for {len(sys.rows)} rows")
    through_x = sum(
        v for geo, v in zip(sys.rows, vals) if x in geo.coset
    )
    total = group_sum_from_radon(sys, vals)
    return (Fraction(through_x) - total) / p


def reconstruct_all(sys: RadonSystem, values) -> tuple[Fraction, ...]:
    return tuple(reconstruct_cpxcp(sys, values, x) for x in range(sys.ncols))


def kernel_witness_cyclic(g: GroupTable) -> tuple[Fraction, ...]:
    """A nonzero function on a cyclic group killed by every prime coset sum.

    Writing each element as gen^t, the witness is the product over the prime
    power factors q = p^k of |G| of the factor delta_0 - delta_{q/p} applied
    to t mod q. The result is verified against the prime system before being
    returned.
    """
    if g.order < 2:
        raise NoGeodesicsError("the trivial group has no kernel witness")
    if not is_cyclic(g):
        raise NotCyclicError(f"{g.recipe} is not cyclic")
    n = g.order
    gen = g.elt_order.index(n)
    factors = []
    rest = n
    d = 2
    while d * d <= rest:
        if rest % d == 0:
            q = 1
            while rest % d == 0:
                rest //= d
                q *= d
            factors.append((d, q))
        d += 1
    if rest > 1:
        factors.append((rest, rest))
    witness = [Fraction(0)] * n
    cur = 0
    for t in range(n):
        val = 1
        for p, q in factors:
            res = t % q
            if res == 0:
                pass
            elif res == q // p:
                val = -val
            else:
                val = 0
                break
        witness[cur] = Fraction(val)
        cur = g.mul[cur][gen]
    if all(v == 0 for v in witness):
        raise AssertionError("cyclic witness degenerated to zero")
    image = apply(build_system(g, "prime"), witness)
    if any(image):
        raise AssertionError("cyclic witness fails annihilation check")
    return tuple(witness)


def kernel_witness_product(
    w1, w2, g1: GroupTable, g2: GroupTable
) -> tuple[tuple[Fraction, ...], GroupTable]:
    """Product witness f(x1, x2) = w1(x1) * w2(x2) on G1 x G2.

    Requires coprime orders; the factor kernels only glue into a product
    kernel when no prime is shared. Returns the witness together with the
    product group it lives on, verified by exact application.
    """
    if math.gcd(g1.order, g2.order) != 1:
        raise NotCoprimeError(g1.order, g2.order)
    v1 = list(w1)
    v2 = list(w2)
    if len(v1) != g1.order or len(v2) != g2.order:
        raise DimensionError("witness lengths must match the factor orders")
    product = make_direct_product(g1, g2)
    witness = [Fraction(0)] * product.order
    for i1, a in enumerate(v1):
        for i2, b in enumerate(v2):
            witness[i1 * g2.order + i2] = Fraction(a) * Fraction(b)
    image = apply(build_system(product, "prime"), witness)
    if any(image):
        raise AssertionError("product witness fails annihilation check")
    return tuple(witness), product


@dataclass(frozen=True)
class BoundCheck:
    """Outcome of the cyclic-subgroup counting bound."""

    lhs: Fraction
    rhs: Fraction
    bound_holds: bool
    subgroup_count: int


def dimension_bound_check(g: GroupTable) -> BoundCheck:
    """Counting bound: sum of 1/|H| over the prime-order cyclic subgroups S
    against 1 + (|S|-1)/|G|. When the left side is strictly smaller, the
    prime system has fewer independent rows than |G|, certifying a kernel."""
    if g.order < 2:
        raise NoGeodesicsError("the bound needs a nontrivial group")
    from .geodesics import cyclic_subgroups

    subs = [s for s in cyclic_subgroups(g) if exactla.is_prime(len(s.elements))]
    lhs = sum((Fraction(1, len(s.elements)) for s in subs), Fraction(0))
    rhs = 1 + Fraction(len(subs) - 1, g.order)
    return BoundCheck(
        lhs=lhs, rhs=rhs, bound_holds=lhs < rhs, subgroup_count=len(subs)
    )


def _smallest_prime_factor(n: int) -> int:
    d = 2
    while d * d <= n:
        if n % d == 0:
            return d
        d += 1
    return n


def composite_consistency(g: GroupTable, n: int, functions) -> bool:
    """Check that length-n coset sums reduce to prime-length data.

    For n = k*m (m the smallest prime factor) and any homomorphism gamma of
    length n: either gamma^k is trivial and the length-n sum is m times the
    length-k sum along the same generator, or the length-n transform equals
    1/m times the length-m sums taken along gamma^k at the n shifted points.
    Functions are rational vectors; each is rescaled to integers internally
    so the comparisons stay exact and cheap. Vacuously true when no
    homomorphism of length n exists.
    """
    if n < 4 or exactla.is_prime(n):
        raise InvalidOrderError(f"composite length required, got {n}")
    m = _smallest_prime_factor(n)
    k = n // m
    homs = homomorphisms_cn(g, n)
    if not homs:
        return True
    order = g.order
    scaled = []
    for f in functions:
        vals = [Fraction(v) for v in f]
        if len(vals) != order:
            raise DimensionError(f"function length {len(vals)}, expected {order}")
        denom = math.lcm(*(v.denominator for v in vals)) if vals else 1
        scaled.append([int(v * denom) for v in vals])

    def orbit_sums(vec, gen, length):
        out = [0] * order
        for x in range(order):
            acc = 0
            cur = x
            for _ in range(length):
                acc += vec[cur]
                cur = g.mul[cur][gen]
            out[x] = acc
        return out

    for hom in homs:
        gen = hom.image_generator
        gk = g.power(gen, k)
        for vec in scaled:
            long_sums = orbit_sums(vec, gen, n)
            if gk == 0:
                short = orbit_sums(vec, gen, k)
                if any(long_sums[x] != m * short[x] for x in range(order)):
                    return False
            else:
                short = orbit_sums(vec, gk, m)
                for x in range(order):
                    acc = 0
                    cur = x
                    for _ in range(n):
                        acc += short[cur]
                        cur = g.mul[cur][gen]
                    if m * long_sums[x] != acc:
                        return False
    return True
