"""Brute-force isomorphism and embedding search for small groups.

Meant for cross-checks and suite plumbing at desk scale (orders well under
a few hundred): generator images are chosen by element order and extended
to a full homomorphism by closure, so the search space stays tiny for the
groups handled here.
"""

from __future__ import annotations

from collections import Counter

from .groups import GroupTable

__all__ = [
    "are_isomorphic",
    "find_embedding",
    "find_isomorphism",
    "generating_sequence",
]


def generating_sequence(g: GroupTable) -> list[int]:
    """A short generating list, grown greedily by smallest missing id."""
    gens: list[int] = []
    closed = {0}
    while len(closed) < g.order:
        x = min(set(range(g.order)) - closed)
        gens.append(x)
        frontier = [0]
        closed = {0}
        while frontier:
            cur = frontier.pop()
            for gen in gens:
                nxt = g.mul[cur][gen]
                if nxt not in closed:
                    closed.add(nxt)
                    frontier.append(nxt)
    return gens


def _extend_hom(
    h: GroupTable, g: GroupTable, gens: list[int], images: list[int]
) -> list[int] | None:
    """Grow {gens -> images} into a full homomorphism h -> g, or None."""
    phi = [-1] * h.order
    phi[0] = 0
    frontier = [0]
    while frontier:
        x = frontier.pop()
        for gen, img in zip(gens, images):
            y = h.mul[x][gen]
            iy = g.mul[phi[x]][img]
            if phi[y] == -1:
                phi[y] = iy
                frontier.append(y)
            elif phi[y] != iy:
                return None
    # reachability from e under right multiplication by generators is all of h
    if -1 in phi:
        raise AssertionError("generating sequence failed to generate")
    for a in range(h.order):
        for b in range(h.order):
            if phi[h.mul[a][b]] != g.mul[phi[a]][phi[b]]:
                return None
    return phi


def _search(h: GroupTable, g: GroupTable, injective: bool) -> list[int] | None:
    gens = generating_sequence(h)
    if not gens:
        return [0] if g.order >= 1 else None
    candidates = []
    for gen in gens:
        d = h.order_of(gen)
        if injective:
            pool = [x for x in range(g.order) if g.order_of(x) == d]
        else:
            pool = [x for x in range(g.order) if d % g.order_of(x) == 0]
        if not pool:
            return None
        candidates.append(pool)

    def rec(k: int, chosen: list[int]):
        if k == len(gens):
            phi = _extend_hom(h, g, gens, chosen)
            if phi is not None and (not injective or len(set(phi)) == h.order):
                return phi
            return None
        for img in candidates[k]:
            got = rec(k + 1, chosen + [img])
            if got is not None:
                return got
        return None

    return rec(0, [])


def find_embedding(h: GroupTable, g: GroupTable) -> list[int] | None:
    """An injective homomorphism h -> g as an image list, or None."""
    if g.order % h.order != 0:
        return None
    return _search(h, g, injective=True)


def find_isomorphism(g: GroupTable, h: GroupTable) -> list[int] | None:
    if g.order != h.order:
        return None
    if Counter(g.elt_order) != Counter(h.elt_order):
        return None
    return _search(g, h, injective=True)


def are_isomorphic(g: GroupTable, h: GroupTable) -> bool:
    return find_isomorphism(g, h) is not None
