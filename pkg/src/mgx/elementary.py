"""Cycle signatures and the real-elementary-subgraph expansion of the
characteristic polynomial.

An elementary subgraph is a vertex-disjoint union of edges and cycles; it is
real when every cycle has value +1 or -1.  Summing
``(-1)^(sigma(B)/2 + omega(B)) * 2^(cycles(B))`` over the real elementary
subgraphs on j vertices gives a_j.  This is exponential and serves only as
an independent check on :func:`mgx.spectra.charpoly`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import GraphError, MixedGraph
from .spectra import ConsistencyError, GaussianInt, IntPolynomial

ENUMERATION_VERTEX_CAP = 14


class EnumerationCapError(ValueError):
    pass


@dataclass(frozen=True)
class CycleSignature:
    forward: int
    backward: int

    @property
    def sigma(self) -> int:
        return abs(self.forward - self.backward)


@dataclass(frozen=True)
class ElementarySubgraph:
    k2_edges: tuple[tuple[int, int], ...]
    cycles: tuple[tuple[int, ...], ...]
    sigma: int

    @property
    def order(self) -> int:
        return 2 * len(self.k2_edges) + sum(len(c) for c in self.cycles)

    @property
    def omega(self) -> int:
        return len(self.k2_edges) + len(self.cycles)

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    def weight(self) -> int:
        if self.sigma % 2:
            raise ConsistencyError("real elementary subgraph with odd signature")
        return (-1) ** (self.sigma // 2 + self.omega) * 2 ** self.cycle_count


def _check_cycle(g: MixedGraph, cycle: Sequence[int]) -> None:
    if len(cycle) < 3 or len(set(cycle)) != len(cycle):
        raise GraphError(f"{list(cycle)} is not a cycle")
    for a, b in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
        if not g.has_edge(a, b):
            raise GraphError(f"{list(cycle)} is not a cycle: {a}-{b} missing")


def signature(g: MixedGraph, cycle: Sequence[int]) -> CycleSignature:
    """Forward and backward arc counts along the closed traversal ``cycle``."""
    _check_cycle(g, cycle)
    f = b = 0
    for a, c in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
        d = g.direction(a, c)
        if d > 0:
            f += 1
        elif d < 0:
            b += 1
    return CycleSignature(f, b)


def cycle_value(g: MixedGraph, cycle: Sequence[int]) -> GaussianInt:
    """Product of H entries h_{12} h_{23} ... h_{l1} along the traversal."""
    _check_cycle(g, cycle)
    unit = {0: GaussianInt(1, 0), 1: GaussianInt(0, 1), -1: GaussianInt(0, -1)}
    value = GaussianInt(1, 0)
    for a, c in zip(cycle, tuple(cycle[1:]) + (cycle[0],)):
        value = value * unit[g.direction(a, c)]
    return value


def is_real(g: MixedGraph, cycle: Sequence[int]) -> bool:
    value = cycle_value(g, cycle)
    real = value.im == 0
    if real != (signature(g, cycle).sigma % 2 == 0):
        raise ConsistencyError(f"cycle value {value} disagrees with signature parity")
    return real


def simple_cycles(g: MixedGraph) -> list[tuple[int, ...]]:
    """Every cycle of the underlying graph, once, as a traversal from its
    smallest vertex toward the smaller of its two cycle neighbours."""
    out = []
    adj = g.adjacency
    for s in range(g.n):
        path = [s]
        on_path = {s}

        def extend(x: int) -> None:
            for y in adj[x]:
                if y == s and len(path) >= 3 and path[1] < path[-1]:
                    out.append(tuple(path))
                elif y > s and y not in on_path:
                    path.append(y)
                    on_path.add(y)
                    extend(y)
                    path.pop()
                    on_path.remove(y)

        extend(s)
    return out


def real_elementary_subgraphs(g: MixedGraph) -> Iterator[ElementarySubgraph]:
    """All real elementary subgraphs, the empty one included.

    The search walks vertices in increasing order; the current vertex is left
    out, paired with a larger free neighbour, or made the smallest vertex of
    a real cycle on free vertices.  Every subgraph is produced once.
    """
    if g.n > ENUMERATION_VERTEX_CAP:
        raise EnumerationCapError(f"{g.n} vertices exceeds the cap of {ENUMERATION_VERTEX_CAP}")
    by_start: list[list[tuple[int, tuple[int, ...], int]]] = [[] for _ in range(g.n)]
    for c in simple_cycles(g):
        if is_real(g, c):
            mask = 0
            for v in c:
                mask |= 1 << v
            by_start[c[0]].append((mask, c, signature(g, c).sigma))
    adj = g.adjacency
    k2: list[tuple[int, int]] = []
    cyc: list[tuple[int, ...]] = []

    def walk(v: int, used: int, sigma: int) -> Iterator[ElementarySubgraph]:
        while v < g.n and used >> v & 1:
            v += 1
        if v == g.n:
            yield ElementarySubgraph(tuple(k2), tuple(cyc), sigma)
            return
        yield from walk(v + 1, used, sigma)
        for w in adj[v]:
            if w > v and not used >> w & 1:
                k2.append((v, w))
                yield from walk(v + 1, used | 1 << v | 1 << w, sigma)
                k2.pop()
        for mask, c, s in by_start[v]:
            if not mask & used:
                cyc.append(c)
                yield from walk(v + 1, used | mask, sigma + s)
                cyc.pop()

    yield from walk(0, 0, 0)


def charpoly_by_enumeration(g: MixedGraph) -> IntPolynomial:
    coeffs = [0] * (g.n + 1)
    for b in real_elementary_subgraphs(g):
        coeffs[b.order] += b.weight()
    if coeffs[0] != 1:
        raise ConsistencyError("empty subgraph must contribute a_0 = 1")
    return IntPolynomial(tuple(coeffs))


def coefficient_by_enumeration(g: MixedGraph, j: int) -> int:
    if not 0 <= j <= g.n:
        raise ValueError(f"coefficient index {j} outside 0..{g.n}")
    return charpoly_by_enumeration(g)[j]
