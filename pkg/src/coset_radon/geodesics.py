"""Geodesics: left cosets of nontrivial cyclic subgroups.

A homomorphism from C_n into G is pinned down by the image of 1, so we
represent it by that generator. Geodesics of prime length are the rows of
the injectivity systems; the maximal variant instead takes cosets of the
cyclic subgroups not contained in any larger cyclic subgroup.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidOrderError, NoGeodesicsError
from .groups import GroupTable, SubgroupSet, cyclic_subgroup, left_cosets

__all__ = [
    "Geodesic",
    "Homomorphism",
    "composite_orbit",
    "cyclic_subgroups",
    "homomorphisms_cn",
    "maximal_cyclic_subgroups",
    "maximal_geodesics",
    "prime_geodesics",
]


@dataclass(frozen=True)
class Homomorphism:
    """A map C_n -> G, t -> gen^t; nontrivial means gen is not the identity."""

    domain_order: int
    image_generator: int

    @property
    def nontrivial(self) -> bool:
        return self.image_generator != 0


@dataclass(frozen=True)
class Geodesic:
    """One left coset of a nontrivial cyclic subgroup."""

    subgroup: SubgroupSet
    rep: int
    coset: tuple[int, ...]


def homomorphisms_cn(g: GroupTable, n: int) -> list[Homomorphism]:
    """All nontrivial homomorphisms C_n -> G, ordered by generator id."""
    if n < 2:
        raise InvalidOrderError(f"domain order must be >= 2, got {n}")
    return [
        Homomorphism(n, x)
        for x in range(1, g.order)
        if g.power(x, n) == 0
    ]


def cyclic_subgroups(g: GroupTable) -> list[SubgroupSet]:
    """All distinct nontrivial cyclic subgroups, sorted by (order, elements)."""
    seen: dict[tuple[int, ...], SubgroupSet] = {}
    for x in range(1, g.order):
        sub = cyclic_subgroup(g, x)
        seen.setdefault(sub.elements, sub)
    return sorted(seen.values(), key=lambda s: (len(s.elements), s.elements))


def maximal_cyclic_subgroups(g: GroupTable) -> list[SubgroupSet]:
    """Cyclic subgroups not strictly contained in a larger cyclic subgroup."""
    subs = cyclic_subgroups(g)
    sets = [frozenset(s.elements) for s in subs]
    out = []
    for i, s in enumerate(sets):
        if not any(j != i and s < t for j, t in enumerate(sets)):
            out.append(subs[i])
    return out


def _geodesics_for(g: GroupTable, subs: list[SubgroupSet]) -> list[Geodesic]:
    rows = []
    for sub in subs:
        for coset in left_cosets(g, sub):
            rows.append(Geodesic(subgroup=sub, rep=coset[0], coset=coset))
    return rows


def prime_geodesics(g: GroupTable) -> list[Geodesic]:
    """Deduplicated geodesics of prime length, the rows that matter.

    Composite-length coset sums are recoverable from these, so nothing else
    enters the linear systems. One geodesic per (subgroup, coset) pair: the
    p-1 generators of each order-p subgroup all trace the same coset.
    """
    if g.order < 2:
        raise NoGeodesicsError("the trivial group has no geodesics")
    from .exactla import is_prime

    subs = [s for s in cyclic_subgroups(g) if is_prime(len(s.elements))]
    return _geodesics_for(g, subs)


def maximal_geodesics(g: GroupTable) -> list[Geodesic]:
    """Geodesics of the maximal variant: cosets of maximal cyclic subgroups."""
    if g.order < 2:
        raise NoGeodesicsError("the trivial group has no geodesics")
    return _geodesics_for(g, maximal_cyclic_subgroups(g))


def composite_orbit(g: GroupTable, hom: Homomorphism, x: int) -> tuple[int, ...]:
    """The multiset {x * gen^t : t in C_n}, returned sorted.

    Each member of the coset x*<gen> shows up n / |<gen>| times.
    """
    out = []
    cur = x
    for _ in range(hom.domain_order):
        out.append(cur)
        cur = g.mul[cur][hom.image_generator]
    return tuple(sorted(out))
