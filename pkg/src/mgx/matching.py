"""Matchings of the underlying graph: maximum matchings, i-matching counts,
constrained matching numbers and an exhaustive oracle."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

import networkx as nx

from .graph import MixedGraph

BRUTE_FORCE_EDGE_CAP = 24


class MatchingCapError(ValueError):
    pass


@dataclass(frozen=True)
class MatchingProfile:
    """Counts ``m_0..m_m`` of i-edge matchings; ``m`` is the matching number."""

    counts: tuple[int, ...]

    @property
    def m(self) -> int:
        return len(self.counts) - 1

    def __getitem__(self, i: int) -> int:
        if i < 0 or i >= len(self.counts):
            return 0
        return self.counts[i]


def maximum_matching(g: MixedGraph) -> frozenset[tuple[int, int]]:
    """A maximum-cardinality matching (Edmonds' blossom algorithm via networkx)."""
    mate = nx.max_weight_matching(g.to_networkx(), maxcardinality=True)
    return frozenset((min(a, b), max(a, b)) for a, b in mate)


@lru_cache(maxsize=200_000)
def _matching_number(n: int, pairs: tuple[tuple[int, int], ...]) -> int:
    if not pairs:
        return 0
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(pairs)
    return len(nx.max_weight_matching(nxg, maxcardinality=True))


def matching_number(g: MixedGraph) -> int:
    """m(G); depends only on the underlying graph, so results are cached on it."""
    return _matching_number(g.n, g.pairs)


def max_matching_avoiding(g: MixedGraph, forbidden: Iterable[tuple[int, int]]) -> int:
    """Matching number of G with the ``forbidden`` edges removed."""
    forbidden = {(min(u, v), max(u, v)) for u, v in forbidden}
    missing = forbidden - set(g.pairs)
    if missing:
        raise ValueError(f"forbidden edges not in graph: {sorted(missing)}")
    return _matching_number(g.n, tuple(p for p in g.pairs if p not in forbidden))


def max_matching_through(g: MixedGraph, edges: Iterable[tuple[int, int]]) -> int:
    """Largest matching that uses at least one of ``edges`` (0 if ``edges`` is empty)."""
    best = 0
    for u, v in edges:
        rest = tuple(p for p in g.pairs if u not in p and v not in p)
        best = max(best, 1 + _matching_number(g.n, rest))
    return best


def matching_counts(g: MixedGraph) -> MatchingProfile:
    """Exact i-matching counts.

    Expands along the lowest live vertex u: every matching either leaves u
    uncovered (all edges at u deleted) or contains exactly one edge uv (the
    pair u, v contracted away).  Memoised on the induced vertex set.
    """
    adj = [0] * g.n
    for u, v in g.pairs:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    memo: dict[int, list[int]] = {}

    def counts(mask: int) -> list[int]:
        # drop vertices with no live neighbour; they never change the counts
        while mask:
            low = mask & -mask
            u = low.bit_length() - 1
            if adj[u] & mask:
                break
            mask ^= low
        else:
            return [1]
        hit = memo.get(mask)
        if hit is not None:
            return hit
        rest = mask ^ (1 << u)
        total = list(counts(rest))
        nbrs = adj[u] & rest
        while nbrs:
            bit = nbrs & -nbrs
            nbrs ^= bit
            sub = counts(rest ^ bit)
            if len(total) < len(sub) + 1:
                total.extend([0] * (len(sub) + 1 - len(total)))
            for i, c in enumerate(sub):
                total[i + 1] += c
        memo[mask] = total
        return total

    return MatchingProfile(tuple(counts((1 << g.n) - 1)))


def brute_force_matching_number(g: MixedGraph) -> int:
    """Exhaustive search over sets of pairwise independent edges."""
    if g.m_edges > BRUTE_FORCE_EDGE_CAP:
        raise MatchingCapError(f"{g.m_edges} edges exceeds the cap of {BRUTE_FORCE_EDGE_CAP}")
    pairs = g.pairs
    best = 0

    def search(i: int, used: int, size: int) -> None:
        nonlocal best
        if size + (len(pairs) - i) <= best:
            return
        if i == len(pairs):
            best = max(best, size)
            return
        u, v = pairs[i]
        if not used & ((1 << u) | (1 << v)):
            search(i + 1, used | (1 << u) | (1 << v), size + 1)
        search(i + 1, used, size)

    search(0, 0, 0)
    return best


def brute_force_matching_counts(g: MixedGraph) -> MatchingProfile:
    """i-matching counts by visiting every independent edge subset (oracle)."""
    if g.m_edges > BRUTE_FORCE_EDGE_CAP:
        raise MatchingCapError(f"{g.m_edges} edges exceeds the cap of {BRUTE_FORCE_EDGE_CAP}")
    pairs = g.pairs
    tally = [0] * (g.n // 2 + 1)

    def search(i: int, used: int, size: int) -> None:
        if i == len(pairs):
            tally[size] += 1
            return
        u, v = pairs[i]
        if not used & ((1 << u) | (1 << v)):
            search(i + 1, used | (1 << u) | (1 << v), size + 1)
        search(i + 1, used, size)

    search(0, 0, 0)
    while len(tally) > 1 and tally[-1] == 0:
        tally.pop()
    return MatchingProfile(tuple(tally))


def is_matching(g: MixedGraph, edges: Iterable[tuple[int, int]]) -> bool:
    seen: set[int] = set()
    for u, v in edges:
        if not g.has_edge(u, v) or u in seen or v in seen:
            return False
        seen.update((u, v))
    return True
