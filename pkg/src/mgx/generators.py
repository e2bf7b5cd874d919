"""Graph families, orientation enumeration and seeded random corpora."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator

import networkx as nx

from .graph import (
    Edge,
    GraphError,
    MixedGraph,
    Orientation,
    all_cycles_if_disjoint,
    cycle_graph,
    from_networkx,
    path_graph,
    star_graph,
)

ORIENTATION_EDGE_CAP = 20
FAMILIES = ("path", "cycle", "star", "random_tree", "unicyclic_all", "random_connected")


@dataclass(frozen=True)
class GeneratorSpec:
    family: str
    n: int
    extra: int = 0  # random_connected: edges added to the spanning tree
    count: int = 1  # random families: number of graphs
    seed: int = 0


def enumerate_orientations(g: MixedGraph) -> Iterator[MixedGraph]:
    """All 3^|E| mixed graphs over the underlying graph of ``g``.

    Each edge is undirected, an arc u->v or an arc v->u; the last edge varies
    fastest.
    """
    if g.m_edges > ORIENTATION_EDGE_CAP:
        raise GraphError(f"{g.m_edges} edges exceeds the orientation cap of {ORIENTATION_EDGE_CAP}")
    choices = (Orientation.UNDIRECTED, Orientation.FORWARD, Orientation.BACKWARD)
    pairs = g.pairs
    for flags in itertools.product(choices, repeat=len(pairs)):
        yield MixedGraph(g.n, tuple(Edge(u, v, f) for (u, v), f in zip(pairs, flags)))


def random_orientation(g: MixedGraph, rng: random.Random) -> MixedGraph:
    return g.with_orientations([rng.choice((0, 1, -1)) for _ in g.edges])


def random_tree(n: int, rng: random.Random) -> MixedGraph:
    """Uniform labelled tree (random Pruefer sequence)."""
    if n <= 2:
        return path_graph(n)
    seq = [rng.randrange(n) for _ in range(n - 2)]
    return from_networkx(nx.from_prufer_sequence(seq))


def random_connected(n: int, extra: int, rng: random.Random) -> MixedGraph:
    """Uniform random tree plus ``extra`` distinct random chords (as many as fit)."""
    tree = random_tree(n, rng)
    present = set(tree.pairs)
    free = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in present]
    chords = rng.sample(free, min(extra, len(free)))
    return MixedGraph.build(n, sorted(present | set(chords)))


def random_gnp(n: int, p: float, rng: random.Random) -> MixedGraph:
    return MixedGraph.build(n, [(u, v) for u in range(n) for v in range(u + 1, n)
                                if rng.random() < p])


def random_cactus(n: int, rng: random.Random) -> MixedGraph:
    """Random connected graph whose cycles are pairwise vertex-disjoint."""
    lengths = []
    left = n
    while left >= 3 and rng.random() < 0.7:
        q = rng.randint(3, left)
        lengths.append(q)
        left -= q
    verts = list(range(n))
    rng.shuffle(verts)
    pieces, edges, pos = [], [], 0
    for q in lengths:
        cyc = verts[pos:pos + q]
        pos += q
        edges += [(cyc[i], cyc[(i + 1) % q]) for i in range(q)]
        pieces.append(cyc)
    pieces += [[v] for v in verts[pos:]]
    if len(pieces) > 1:
        skeleton = random_tree(len(pieces), rng)
        for a, b in skeleton.pairs:
            edges.append((rng.choice(pieces[a]), rng.choice(pieces[b])))
    return MixedGraph.build(n, edges)


def random_disconnected(rng: random.Random, max_parts: int = 4, max_part: int = 5) -> MixedGraph:
    """Disjoint union of 2..max_parts random connected pieces, labels shuffled."""
    parts = [random_connected(rng.randint(1, max_part), rng.randint(0, 2), rng)
             for _ in range(rng.randint(2, max_parts))]
    n = sum(p.n for p in parts)
    labels = list(range(n))
    rng.shuffle(labels)
    edges, offset = [], 0
    for p in parts:
        edges += [(labels[u + offset], labels[v + offset]) for u, v in p.pairs]
        offset += p.n
    return MixedGraph.build(n, edges)


def unicyclic_all(n: int) -> Iterator[MixedGraph]:
    """Every labelled connected unicyclic graph on ``n`` vertices, once.

    For each cycle vertex set and cyclic order (fixed start, one direction),
    every other vertex chooses a parent; choices whose parent chains all end
    on the cycle give the forest hanging off it.
    """
    everyone = range(n)
    for q in range(3, n + 1):
        for ring in itertools.combinations(everyone, q):
            on = set(ring)
            rest = [v for v in everyone if v not in on]
            for perm in itertools.permutations(ring[1:]):
                if perm[0] > perm[-1]:
                    continue
                order = (ring[0],) + perm
                cyc = [(order[i], order[(i + 1) % q]) for i in range(q)]
                options = [[w for w in everyone if w != r] for r in rest]
                for parents in itertools.product(*options):
                    parent = dict(zip(rest, parents))
                    if all(_reaches(r, parent, on) for r in rest):
                        yield MixedGraph.build(n, cyc + list(parent.items()))


def _reaches(v: int, parent: dict[int, int], roots: set[int]) -> bool:
    seen = set()
    while v not in roots:
        if v in seen:
            return False
        seen.add(v)
        v = parent[v]
    return True


def disjoint_cycle_census(n: int) -> list[MixedGraph]:
    """One representative per isomorphism class of connected graphs on ``n``
    vertices whose cycles are pairwise vertex-disjoint (trees included).

    Built as spanning tree plus chords; representatives are deduplicated with
    a Weisfeiler-Lehman hash and an exact isomorphism test.
    """
    if n <= 0:
        return []
    if n == 1:
        return [MixedGraph(1)]
    buckets: dict[str, list[nx.Graph]] = {}
    out: list[MixedGraph] = []
    for tree in nx.nonisomorphic_trees(n):
        tree = nx.convert_node_labels_to_integers(tree)
        missing = [(u, v) for u in range(n) for v in range(u + 1, n) if not tree.has_edge(u, v)]
        for k in range(n // 3 + 1):
            for chords in itertools.combinations(missing, k):
                cand = MixedGraph.build(n, list(tree.edges()) + list(chords))
                if all_cycles_if_disjoint(cand) is None:
                    continue
                nxg = cand.to_networkx()
                key = nx.weisfeiler_lehman_graph_hash(nxg)
                same = buckets.setdefault(key, [])
                if any(nx.is_isomorphic(nxg, other) for other in same):
                    continue
                same.append(nxg)
                out.append(cand)
    return sorted(out, key=lambda g: (g.m_edges, g.pairs))


def unicyclic_census(n: int) -> list[MixedGraph]:
    return [g for g in disjoint_cycle_census(n) if g.m_edges == n]


def generate(spec: GeneratorSpec) -> Iterator[MixedGraph]:
    """Graphs of a named family; random families are reproducible from ``seed``."""
    if spec.n < 0 or spec.count < 0 or spec.extra < 0:
        raise ValueError("sizes must be non-negative")
    rng = random.Random(spec.seed)
    if spec.family == "path":
        yield path_graph(spec.n)
    elif spec.family == "cycle":
        yield cycle_graph(spec.n)
    elif spec.family == "star":
        if spec.n < 1:
            raise ValueError("a star needs a centre")
        yield star_graph(spec.n)
    elif spec.family == "random_tree":
        for _ in range(spec.count):
            yield random_tree(spec.n, rng)
    elif spec.family == "unicyclic_all":
        yield from unicyclic_all(spec.n)
    elif spec.family == "random_connected":
        if spec.n < 1:
            raise ValueError("a connected graph needs a vertex")
        for _ in range(spec.count):
            yield random_connected(spec.n, spec.extra, rng)
    else:
        raise ValueError(f"unknown family {spec.family!r}; choose from {', '.join(FAMILIES)}")
