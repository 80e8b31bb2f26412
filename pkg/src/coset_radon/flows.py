"""Successor flows: a two-point update rule that generalizes coset lines.

A flow on a finite set assigns to every ordered pair (a, b) a successor
s(a, b) subject to three axioms: s(a, a) = a; if a != b then s(a, b) != b;
and s(s(a, b), b) = a. Stepping (a, b) -> (b, s(a, b)) is then a bijection
on pairs, so pair space breaks into cycles. The points visited by one cycle,
with multiplicity, play the role of a geodesic; summing a function over them
gives a transform whose injectivity can be settled by the same exact rank
machinery as the group case.

On a group the rule s(a, b) = b a^{-1} b reproduces coset geometry: the
orbit through (a, b) visits exactly the coset a<a^{-1}b>, each point once.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import FlowAxiomError, InvalidOrderError
from .groups import GroupTable
from .radon import RadonSystem

__all__ = [
    "FlowOrbit",
    "SuccessorFlow",
    "constant_flow",
    "flow_orbits",
    "flow_radon_system",
    "group_flow",
    "validate_flow",
]


@dataclass(frozen=True)
class SuccessorFlow:
    """Validated successor table: table[a][b] = s(a, b)."""

    size: int
    table: tuple[tuple[int, ...], ...]
    label: str


@dataclass(frozen=True)
class FlowOrbit:
    """One cycle of the pair-step map, recorded from its smallest state."""

    states: tuple[tuple[int, int], ...]
    period: int

    @property
    def stationary(self) -> bool:
        return self.period == 1

    def visit_counts(self, size: int) -> tuple[int, ...]:
        """How often each point appears as the first pair coordinate."""
        counts = [0] * size
        for a, _ in self.states:
            counts[a] += 1
        return tuple(counts)

    def projection(self) -> tuple[int, ...]:
        """Sorted distinct points visited (first coordinates)."""
        return tuple(sorted({a for a, _ in self.states}))


def validate_flow(size: int, table, label: str = "flow") -> SuccessorFlow:
    """Check the three axioms; report the first violated one with a witness."""
    if size < 1:
        raise InvalidOrderError(f"flow needs at least one point, got {size}")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    if len(rows) != size or any(len(r) != size for r in rows):
        raise FlowAxiomError("shape", (size, len(rows)))
    for a in range(size):
        for b in range(size):
            v = rows[a][b]
            if not 0 <= v < size:
                raise FlowAxiomError("range", (a, b, v))
    for a in range(size):
        if rows[a][a] != a:
            raise FlowAxiomError("fixed-diagonal", (a, rows[a][a]))
    for a in range(size):
        for b in range(size):
            if a != b and rows[a][b] == b:
                raise FlowAxiomError("avoids-target", (a, b))
    for a in range(size):
        for b in range(size):
            if rows[rows[a][b]][b] != a:
                raise FlowAxiomError("reflection", (a, b, rows[a][b]))
    return SuccessorFlow(size=size, table=rows, label=label)


def group_flow(g: GroupTable) -> SuccessorFlow:
    """s(a, b) = b a^{-1} b on a group's element ids."""
    table = [
        [g.mul[b][g.mul[g.inv[a]][b]] for b in range(g.order)]
        for a in range(g.order)
    ]
    return validate_flow(g.order, table, label=f"group:{g.recipe}")


def constant_flow(size: int) -> SuccessorFlow:
    """s(a, b) = a: every pair is already its own mirror."""
    if size < 1:
        raise InvalidOrderError(f"flow needs at least one point, got {size}")
    table = [[a] * size for a in range(size)]
    return validate_flow(size, table, label=f"constant:{size}")


def _step(flow: SuccessorFlow, state: tuple[int, int]) -> tuple[int, int]:
    a, b = state
    return (b, flow.table[a][b])


def flow_orbits(flow: SuccessorFlow) -> list[FlowOrbit]:
    """All cycles of the pair-step map, each anchored at its lexicographically
    smallest state. The step map is a bijection (reflection gives the inverse
    step), so every pair lies on exactly one cycle."""
    seen = [[False] * flow.size for _ in range(flow.size)]
    orbits = []
    for a in range(flow.size):
        for b in range(flow.size):
            if seen[a][b]:
                continue
            cycle = []
            cur = (a, b)
            while not seen[cur[0]][cur[1]]:
                seen[cur[0]][cur[1]] = True
                cycle.append(cur)
                cur = _step(flow, cur)
            if cur != (a, b):
                raise AssertionError("pair-step walk re-entered mid-cycle")
            start = min(range(len(cycle)), key=lambda i: cycle[i])
            states = tuple(cycle[start:] + cycle[:start])
            orbits.append(FlowOrbit(states=states, period=len(states)))
    orbits.sort(key=lambda o: o.states[0])
    return orbits


def flow_radon_system(flow: SuccessorFlow) -> RadonSystem:
    """Summation rows from the nonstationary orbits, duplicates merged.

    Stationary orbits are the diagonal pairs (a, a); they would read off f(a)
    directly and are excluded, matching the exclusion of trivial subgroups.
    """
    if flow.size < 2:
        raise InvalidOrderError("flow transform needs at least two points")
    rows = []
    vectors = []
    seen = set()
    for orbit in flow_orbits(flow):
        if orbit.stationary:
            continue
        vec = orbit.visit_counts(flow.size)
        if vec in seen:
            continue
        seen.add(vec)
        rows.append(orbit.states[0])
        vectors.append(vec)
    return RadonSystem(
        group=None,
        variant="flow",
        rows=tuple(rows),
        matrix=tuple(vectors),
        ncols=flow.size,
    )
