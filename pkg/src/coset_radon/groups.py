"""Finite groups as validated Cayley tables with dense 0-based element ids.

The identity always sits at id 0. Constructors hand back immutable
GroupTable records; every one of them runs the full axiom validation, so a
GroupTable in hand is a genuine group (associativity is sampled above the
exhaustive-check threshold, and the table records which mode ran).
"""

from __future__ import annotations

import itertools
import math
import os
import random
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    AssociativityError,
    GroupSpecError,
    GroupValidationError,
    InvalidOrderError,
    MissingIdentityError,
    MissingInverseError,
    NotAbelianError,
    NotAutomorphismError,
    NotHomomorphismError,
    NotNormalError,
    NotSubgroupError,
    SizeLimitError,
)

DEFAULT_MAX_ORDER = 5040
ASSOC_EXHAUSTIVE_MAX = 256
ASSOC_SAMPLE_COUNT = 10_000

__all__ = [
    "DEFAULT_MAX_ORDER",
    "GroupTable",
    "SubgroupSet",
    "abelian_basis",
    "cyclic_subgroup",
    "from_cayley_table",
    "from_name",
    "invariant_factors",
    "is_abelian",
    "is_cyclic",
    "is_normal",
    "left_cosets",
    "make_alternating",
    "make_cyclic",
    "make_dicyclic",
    "make_dihedral",
    "make_direct_product",
    "make_semidirect",
    "make_symmetric",
    "max_group_order",
    "quotient",
    "quotient_with_projection",
    "subgroup_from_elements",
    "make_trivial",
]


def max_group_order() -> int:
    """Active order cap; the COSET_RADON_MAX_ORDER env var overrides it."""
    raw = os.environ.get("COSET_RADON_MAX_ORDER")
    if raw is None:
        return DEFAULT_MAX_ORDER
    try:
        cap = int(raw)
    except ValueError:
        raise InvalidOrderError(
            f"COSET_RADON_MAX_ORDER must be an integer, got {raw!r}"
        ) from None
    if cap < 1:
        raise InvalidOrderError(f"COSET_RADON_MAX_ORDER must be positive, got {cap}")
    return cap


@dataclass(frozen=True)
class GroupTable:
    """Immutable multiplication table plus cached per-element data."""

    order: int
    mul: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    elt_order: tuple[int, ...]
    recipe: str
    assoc_check: str  # "exhaustive" or "sampled"

    def op(self, a: int, b: int) -> int:
        return self.mul[a][b]

    def inverse(self, a: int) -> int:
        return self.inv[a]

    def power(self, a: int, k: int) -> int:
        """a**k for any integer k (negative powers go through the inverse)."""
        if k < 0:
            a, k = self.inv[a], -k
        out = 0
        row_base = a
        while k:
            if k & 1:
                out = self.mul[out][row_base]
            row_base = self.mul[row_base][row_base]
            k >>= 1
        return out

    def order_of(self, a: int) -> int:
        return self.elt_order[a]

    def elements(self) -> range:
        return range(self.order)

    def conjugate(self, x: int, a: int) -> int:
        """x * a * x^-1."""
        return self.mul[self.mul[x][a]][self.inv[x]]


@dataclass(frozen=True)
class SubgroupSet:
    """A subgroup given by its sorted element ids.

    generator is set when the subgroup is cyclic and a generating element is
    known; elements are then exactly the powers of that generator.
    """

    elements: tuple[int, ...]
    generator: int | None = None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: int) -> bool:
        return x in self._member_set()

    def _member_set(self) -> frozenset[int]:
        # cached lazily on the instance; frozen dataclass needs object.__setattr__
        cached = self.__dict__.get("_members")
        if cached is None:
            cached = frozenset(self.elements)
            object.__setattr__(self, "_members", cached)
        return cached


# ---------------------------------------------------------------------------
# validation


def _check_latin(mul: list[list[int]], n: int) -> None:
    full = set(range(n))
    for a in range(n):
        if set(mul[a]) != full:
            raise GroupValidationError(f"row {a} of the table is not a permutation")
    for b in range(n):
        if {mul[a][b] for a in range(n)} != full:
            raise GroupValidationError(f"column {b} of the table is not a permutation")


def _find_identity(mul: list[list[int]], n: int) -> int | None:
    for e in range(n):
        if all(mul[e][x] == x and mul[x][e] == x for x in range(n)):
            return e
    return None


def _check_associativity(mul: list[list[int]], n: int) -> str:
    """Exhaustive up to ASSOC_EXHAUSTIVE_MAX elements, sampled beyond."""
    if n <= ASSOC_EXHAUSTIVE_MAX:
        table = np.array(mul, dtype=np.int32)
        for a in range(n):
            lhs = table[table[a], :]  # (a*b)*c
            rhs = table[a][table]  # a*(b*c)
            if not np.array_equal(lhs, rhs):
                bad = np.argwhere(lhs != rhs)[0]
                raise AssociativityError((a, int(bad[0]), int(bad[1])))
        return "exhaustive"
    rng = random.Random(0xC05E7 ^ n)
    for _ in range(ASSOC_SAMPLE_COUNT):
        a, b, c = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            raise AssociativityError((a, b, c))
    return "sampled"


def _element_orders(mul: list[list[int]], n: int) -> list[int]:
    orders = [1] * n
    for a in range(1, n):
        cur = a
        k = 1
        while cur != 0:
            cur = mul[cur][a]
            k += 1
            if k > n:
                raise GroupValidationError(f"powers of element {a} never reach the identity")
        orders[a] = k
    return orders


def _build(mul_rows: list[list[int]], recipe: str) -> GroupTable:
    """Validate a table whose identity is already at id 0 and freeze it."""
    n = len(mul_rows)
    cap = max_group_order()
    if n > cap:
        raise SizeLimitError(f"group of order {n} exceeds the cap of {cap}")
    _check_latin(mul_rows, n)
    if any(mul_rows[0][x] != x or mul_rows[x][0] != x for x in range(n)):
        raise MissingIdentityError("element 0 is not a two-sided identity")
    inv = [-1] * n
    for a in range(n):
        b = mul_rows[a].index(0)
        if mul_rows[b][a] != 0:
            raise MissingInverseError(a)
        inv[a] = b
    mode = _check_associativity(mul_rows, n)
    orders = _element_orders(mul_rows, n)
    for a, k in enumerate(orders):
        if n % k != 0:
            raise GroupValidationError(
                f"element {a} has order {k}, which does not divide {n}"
            )
    return GroupTable(
        order=n,
        mul=tuple(tuple(row) for row in mul_rows),
        inv=tuple(inv),
        elt_order=tuple(orders),
        recipe=recipe,
        assoc_check=mode,
    )


# ---------------------------------------------------------------------------
# constructors


def make_cyclic(n: int) -> GroupTable:
    """C_n with addition mod n."""
    if n < 1:
        raise InvalidOrderError(f"cyclic group order must be >= 1, got {n}")
    mul = [[(a + b) % n for b in range(n)] for a in range(n)]
    return _build(mul, f"C{n}")


def make_trivial() -> GroupTable:
    return make_cyclic(1)


def make_direct_product(g1: GroupTable, g2: GroupTable) -> GroupTable:
    """G1 x G2 with id encoding a*|G2| + b."""
    n2 = g2.order
    n = g1.order * n2
    mul = [[0] * n for _ in range(n)]
    for a1 in range(g1.order):
        for a2 in range(n2):
            row = mul[a1 * n2 + a2]
            m1 = g1.mul[a1]
            m2 = g2.mul[a2]
            for b1 in range(g1.order):
                base = m1[b1] * n2
                for b2 in range(n2):
                    row[b1 * n2 + b2] = base + m2[b2]
    return _build(mul, f"{g1.recipe}x{g2.recipe}")


def make_dihedral(n: int) -> GroupTable:
    """D_n of order 2n; id = flip*n + rotation."""
    if n < 1:
        raise InvalidOrderError(f"dihedral parameter must be >= 1, got {n}")
    mul = [[0] * (2 * n) for _ in range(2 * n)]
    for e1, k1 in itertools.product(range(2), range(n)):
        row = mul[e1 * n + k1]
        for e2, k2 in itertools.product(range(2), range(n)):
            if e2 == 0:
                val = e1 * n + (k1 + k2) % n
            else:
                val = (1 - e1) * n + (k2 - k1) % n
            row[e2 * n + k2] = val
    return _build(mul, f"D{n}")


def make_dicyclic(n: int) -> GroupTable:
    """Dic_n of order 4n (n >= 2); Dic_2 is the quaternion group."""
    if n < 2:
        raise InvalidOrderError(f"dicyclic parameter must be >= 2, got {n}")
    m2 = 2 * n
    size = 4 * n
    mul = [[0] * size for _ in range(size)]
    for m1, k1 in itertools.product(range(2), range(m2)):
        row = mul[m1 * m2 + k1]
        for mm, k2 in itertools.product(range(2), range(m2)):
            if mm == 0:
                val = m1 * m2 + (k1 + k2) % m2
            elif m1 == 0:
                val = m2 + (k2 - k1) % m2
            else:
                # b^2 = a^n folds the double flip back into the rotations
                val = (k2 - k1 + n) % m2
            row[mm * m2 + k2] = val
    return _build(mul, f"Dic{n}")


def _perm_parity(p: tuple[int, ...]) -> int:
    seen = [False] * len(p)
    parity = 0
    for start in range(len(p)):
        if seen[start]:
            continue
        length = 0
        cur = start
        while not seen[cur]:
            seen[cur] = True
            cur = p[cur]
            length += 1
        parity ^= (length - 1) & 1
    return parity


def _perm_group(perms: list[tuple[int, ...]], recipe: str) -> GroupTable:
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    mul = [[0] * n for _ in range(n)]
    for i, p in enumerate(perms):
        row = mul[i]
        for j, q in enumerate(perms):
            row[j] = index[tuple(p[q[k]] for k in range(len(q)))]
    return _build(mul, recipe)


def make_symmetric(n: int) -> GroupTable:
    """S_n on n letters, elements in lexicographic order."""
    if n < 1:
        raise InvalidOrderError(f"symmetric degree must be >= 1, got {n}")
    size = math.factorial(n)
    cap = max_group_order()
    if size > cap:
        raise SizeLimitError(f"S_{n} has order {size}, above the cap of {cap}")
    perms = sorted(itertools.permutations(range(n)))
    return _perm_group(perms, f"S{n}")


def make_alternating(n: int) -> GroupTable:
    """A_n, the even permutations of n letters."""
    if n < 1:
        raise InvalidOrderError(f"alternating degree must be >= 1, got {n}")
    size = max(1, math.factorial(n) // 2)
    cap = max_group_order()
    if size > cap:
        raise SizeLimitError(f"A_{n} has order {size}, above the cap of {cap}")
    perms = sorted(p for p in itertools.permutations(range(n)) if _perm_parity(p) == 0)
    return _perm_group(perms, f"A{n}")


def make_semidirect(
    normal: GroupTable, acting: GroupTable, action: list[list[int]] | tuple
) -> GroupTable:
    """Semidirect product N x| H for a supplied action of H on N.

    action[h] is the permutation of N's ids giving the automorphism applied
    by the acting element h. Each permutation must be an automorphism of N
    and h -> action[h] must itself be a homomorphism; both are checked
    exhaustively before any multiplication happens.
    """
    nn, nh = normal.order, acting.order
    if len(action) != nh:
        raise NotHomomorphismError((len(action), nh))
    perms = [tuple(a) for a in action]
    full = set(range(nn))
    for h, phi in enumerate(perms):
        if len(phi) != nn or set(phi) != full:
            raise NotAutomorphismError(h, (-1, -1))
        for x in range(nn):
            for y in range(nn):
                if phi[normal.mul[x][y]] != normal.mul[phi[x]][phi[y]]:
                    raise NotAutomorphismError(h, (x, y))
    for h1 in range(nh):
        for h2 in range(nh):
            composed = tuple(perms[h1][perms[h2][x]] for x in range(nn))
            if perms[acting.mul[h1][h2]] != composed:
                raise NotHomomorphismError((h1, h2))
    size = nn * nh
    mul = [[0] * size for _ in range(size)]
    for n1, h1 in itertools.product(range(nn), range(nh)):
        row = mul[n1 * nh + h1]
        phi = perms[h1]
        for n2, h2 in itertools.product(range(nn), range(nh)):
            row[n2 * nh + h2] = normal.mul[n1][phi[n2]] * nh + acting.mul[h1][h2]
    return _build(mul, f"semidirect({normal.recipe},{acting.recipe})")


def from_cayley_table(raw, recipe: str | None = None) -> GroupTable:
    """Validate an arbitrary square table and wrap it as a group.

    If the two-sided identity is not element 0, ids 0 and the identity are
    swapped so the 0-at-identity convention holds.
    """
    rows = [list(r) for r in raw]
    n = len(rows)
    if n < 1:
        raise InvalidOrderError("empty table")
    for i, r in enumerate(rows):
        if len(r) != n:
            raise GroupValidationError(f"row {i} has length {len(r)}, expected {n}")
        for v in r:
            if not isinstance(v, int) or not 0 <= v < n:
                raise GroupValidationError(f"row {i} holds {v!r}, outside 0..{n - 1}")
    _check_latin(rows, n)
    e = _find_identity(rows, n)
    if e is None:
        raise MissingIdentityError("table has no two-sided identity element")
    label = recipe or f"table({n})"
    if e != 0:
        swap = list(range(n))
        swap[0], swap[e] = e, 0
        rows = [[swap[rows[swap[a]][swap[b]]] for b in range(n)] for a in range(n)]
        label += f"[id was {e}]"
    return _build(rows, label)


# ---------------------------------------------------------------------------
# subgroups, cosets, quotients


def cyclic_subgroup(g: GroupTable, x: int) -> SubgroupSet:
    """The subgroup generated by a single element."""
    elems = []
    cur = 0
    while True:
        elems.append(cur)
        cur = g.mul[cur][x]
        if cur == 0:
            break
    return SubgroupSet(tuple(sorted(elems)), generator=x)


def subgroup_from_elements(g: GroupTable, elems) -> SubgroupSet:
    """Check closure, identity and inverses, then wrap the set."""
    got = sorted(set(elems))
    members = set(got)
    if 0 not in members:
        raise NotSubgroupError("subgroup must contain the identity 0")
    for a in got:
        if g.inv[a] not in members:
            raise NotSubgroupError(f"inverse of {a} is missing from the set")
        for b in got:
            if g.mul[a][b] not in members:
                raise NotSubgroupError(f"set is not closed: {a}*{b} escapes it")
    generator = None
    for x in got:
        if g.elt_order[x] == len(got):
            generator = x
            break
    return SubgroupSet(tuple(got), generator=generator)


def left_cosets(g: GroupTable, sub: SubgroupSet) -> list[tuple[int, ...]]:
    """All left cosets x*H, each sorted, ordered by their minimal member."""
    seen = [False] * g.order
    cosets = []
    for x in range(g.order):
        if seen[x]:
            continue
        coset = sorted(g.mul[x][h] for h in sub.elements)
        for y in coset:
            seen[y] = True
        cosets.append(tuple(coset))
    return cosets


def is_normal(g: GroupTable, sub: SubgroupSet) -> tuple[int, int] | None:
    """None when normal, else a witness (x, h) with x*h*x^-1 outside."""
    members = frozenset(sub.elements)
    for x in range(g.order):
        for h in sub.elements:
            if g.conjugate(x, h) not in members:
                return (x, h)
    return None


def quotient_with_projection(
    g: GroupTable, sub: SubgroupSet
) -> tuple[GroupTable, tuple[int, ...]]:
    """Quotient group G/H plus the element -> coset id projection map."""
    witness = is_normal(g, sub)
    if witness is not None:
        raise NotNormalError(witness)
    cosets = left_cosets(g, sub)  # sorted by minimal member; identity coset first
    proj = [0] * g.order
    for ci, coset in enumerate(cosets):
        for x in coset:
            proj[x] = ci
    k = len(cosets)
    mul = [[0] * k for _ in range(k)]
    for ci, coset in enumerate(cosets):
        for cj, other in enumerate(cosets):
            mul[ci][cj] = proj[g.mul[coset[0]][other[0]]]
    q = _build(mul, f"{g.recipe}/<order {len(sub)}>")
    return q, tuple(proj)


def quotient(g: GroupTable, sub: SubgroupSet) -> GroupTable:
    return quotient_with_projection(g, sub)[0]


# ---------------------------------------------------------------------------
# structure of abelian groups


def is_abelian(g: GroupTable) -> bool:
    return all(
        g.mul[a][b] == g.mul[b][a]
        for a in range(g.order)
        for b in range(a + 1, g.order)
    )


def is_cyclic(g: GroupTable) -> bool:
    return g.order in g.elt_order or g.order == 1


def abelian_basis(g: GroupTable) -> list[tuple[int, int]]:
    """Generators (element, order) splitting an abelian group into cyclics.

    Orders come out as a divisibility chain d_1 >= d_2 >= ... (each dividing
    the previous), found by repeatedly splitting off an element of maximal
    order and lifting the basis of the quotient back up.
    """
    if not is_abelian(g):
        raise NotAbelianError(f"{g.recipe} is not abelian")
    return _abelian_basis_inner(g)


def _abelian_basis_inner(g: GroupTable) -> list[tuple[int, int]]:
    if g.order == 1:
        return []
    d = max(g.elt_order)
    x = g.elt_order.index(d)
    sub = cyclic_subgroup(g, x)
    q, proj = quotient_with_projection(g, sub)
    powers = {}
    cur = 0
    for k in range(d):
        powers[cur] = k
        cur = g.mul[cur][x]
    out = [(x, d)]
    for yq, m in _abelian_basis_inner(q):
        y = proj.index(yq)
        s = powers[g.power(y, m)]
        # max order of x makes s a multiple of m, so the lift lands on order m
        if s % m != 0:
            raise GroupValidationError("abelian basis lift failed; table is corrupt")
        y = g.mul[y][g.power(x, (-(s // m)) % d)]
        out.append((y, m))
    return out


def invariant_factors(g: GroupTable) -> list[int]:
    """Invariant factors d_1 | d_2 | ... | d_k with product |G| (abelian only)."""
    return [d for _, d in reversed(abelian_basis(g))]


_ATOM_RE = re.compile(r"^(Dic|C|D|S|A)(\d+)$")

_ATOM_MAKERS = {
    "C": make_cyclic,
    "D": make_dihedral,
    "Dic": make_dicyclic,
    "S": make_symmetric,
    "A": make_alternating,
}


def from_name(spec: str) -> GroupTable:
    """Build a group from a short expression: atoms C/D/Dic/S/A followed by
    a number, combined left-associatively with x for direct products."""
    parts = spec.strip().split("x")
    if not parts or any(not p for p in parts):
        raise GroupSpecError(f"cannot parse group expression {spec!r}")
    built = None
    for part in parts:
        m = _ATOM_RE.match(part.strip())
        if m is None:
            raise GroupSpecError(
                f"cannot parse {part.strip()!r} in {spec!r}; expected one of "
                "Cn, Dn, Dicn, Sn, An"
            )
        g = _ATOM_MAKERS[m.group(1)](int(m.group(2)))
        built = g if built is None else make_direct_product(built, g)
    return built
