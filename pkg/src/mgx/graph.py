"""Mixed graphs: representation, structural queries, surgery and file formats.

A mixed graph is a simple graph in which every edge is either undirected or
an arc.  Vertices are dense integers ``0..n-1``.  Each edge is stored once, on
its canonical pair ``u < v``, with an orientation flag; dropping the flag gives
the underlying graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from enum import IntEnum
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, NamedTuple, Sequence

import networkx as nx


class GraphError(ValueError):
    """Malformed graph, unknown vertex or unparsable graph file."""


class Orientation(IntEnum):
    UNDIRECTED = 0
    FORWARD = 1  # arc u -> v on the canonical pair u < v
    BACKWARD = -1  # arc v -> u


class Edge(NamedTuple):
    u: int
    v: int
    orientation: Orientation = Orientation.UNDIRECTED

    @property
    def is_arc(self) -> bool:
        return self.orientation != Orientation.UNDIRECTED

    @property
    def tail(self) -> int | None:
        if self.orientation == Orientation.FORWARD:
            return self.u
        if self.orientation == Orientation.BACKWARD:
            return self.v
        return None

    @property
    def head(self) -> int | None:
        if self.orientation == Orientation.FORWARD:
            return self.v
        if self.orientation == Orientation.BACKWARD:
            return self.u
        return None

    @property
    def pair(self) -> tuple[int, int]:
        return (self.u, self.v)


def make_edge(u: int, v: int, arc: bool = False) -> Edge:
    """Edge between ``u`` and ``v``; with ``arc=True`` it is the arc u -> v."""
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    if not arc:
        return Edge(min(u, v), max(u, v), Orientation.UNDIRECTED)
    if u < v:
        return Edge(u, v, Orientation.FORWARD)
    return Edge(v, u, Orientation.BACKWARD)


@dataclass(frozen=True)
class MixedGraph:
    """Immutable simple mixed graph on vertices ``0..n-1``.

    ``origin`` optionally records, for each vertex, its id in the graph this
    one was cut from (see :func:`delete_vertices`).  It does not take part in
    equality or hashing.
    """

    n: int
    edges: tuple[Edge, ...] = ()
    origin: tuple[int, ...] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or self.n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {self.n!r}")
        edges = tuple(sorted(Edge(int(e[0]), int(e[1]), Orientation(e[2])) for e in self.edges))
        seen = set()
        for e in edges:
            if not (0 <= e.u < e.v < self.n):
                raise GraphError(f"edge {e.u}-{e.v} is not a canonical pair inside 0..{self.n - 1}")
            if e.pair in seen:
                raise GraphError(f"multiple edges on {e.u}-{e.v}")
            seen.add(e.pair)
        object.__setattr__(self, "edges", edges)
        if self.origin is not None and len(self.origin) != self.n:
            raise GraphError("origin map length differs from vertex count")

    @classmethod
    def build(cls, n: int, undirected: Iterable[Sequence[int]] = (),
              arcs: Iterable[Sequence[int]] = ()) -> MixedGraph:
        """Graph from undirected pairs and ``(tail, head)`` arcs."""
        edges = [make_edge(u, v) for u, v in undirected]
        edges += [make_edge(t, h, arc=True) for t, h in arcs]
        return cls(n, tuple(edges))

    @property
    def m_edges(self) -> int:
        return len(self.edges)

    @cached_property
    def pairs(self) -> tuple[tuple[int, int], ...]:
        return tuple(e.pair for e in self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        nbrs: list[list[int]] = [[] for _ in range(self.n)]
        for u, v, _ in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(a)) for a in nbrs)

    @cached_property
    def _flags(self) -> dict[tuple[int, int], int]:
        return {(e.u, e.v): int(e.orientation) for e in self.edges}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self._flags

    def direction(self, u: int, v: int) -> int:
        """+1 for an arc u -> v, -1 for an arc v -> u, 0 if undirected.

        Raises GraphError when u and v are not adjacent.
        """
        key = (u, v) if u < v else (v, u)
        try:
            flag = self._flags[key]
        except KeyError:
            raise GraphError(f"{u} and {v} are not adjacent") from None
        return flag if u < v else -flag

    def underlying(self) -> MixedGraph:
        return MixedGraph(self.n, tuple(Edge(u, v) for u, v, _ in self.edges), self.origin)

    def reversed(self) -> MixedGraph:
        """Same graph with every arc reversed."""
        return MixedGraph(self.n, tuple(Edge(u, v, Orientation(-o)) for u, v, o in self.edges),
                          self.origin)

    def with_orientations(self, flags: Sequence[int]) -> MixedGraph:
        """Re-orient the edges (in stored order) with the given flags."""
        if len(flags) != len(self.edges):
            raise GraphError("one flag per edge expected")
        return MixedGraph(self.n, tuple(Edge(e.u, e.v, Orientation(f))
                                        for e, f in zip(self.edges, flags)))

    def without_edges(self, pairs: Iterable[tuple[int, int]]) -> MixedGraph:
        drop = {(min(u, v), max(u, v)) for u, v in pairs}
        return MixedGraph(self.n, tuple(e for e in self.edges if e.pair not in drop), self.origin)

    def to_networkx(self) -> nx.Graph:
        """Underlying undirected graph as a networkx Graph."""
        g = nx.Graph()
        g.add_nodes_from(range(self.n))
        g.add_edges_from(self.pairs)
        return g

    def __str__(self) -> str:
        parts = []
        for e in self.edges:
            if e.is_arc:
                parts.append(f"{e.tail}->{e.head}")
            else:
                parts.append(f"{e.u}-{e.v}")
        return f"MixedGraph(n={self.n}: {', '.join(parts)})"


# ---------------------------------------------------------------------------
# named families (underlying graphs, all edges undirected)


def path_graph(n: int) -> MixedGraph:
    return MixedGraph.build(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> MixedGraph:
    if n < 3:
        raise GraphError("a cycle needs at least 3 vertices")
    return MixedGraph.build(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> MixedGraph:
    """Star on ``n`` vertices with centre 0."""
    return MixedGraph.build(n, [(0, i) for i in range(1, n)])


def complete_graph(n: int) -> MixedGraph:
    return MixedGraph.build(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def from_networkx(g: nx.Graph) -> MixedGraph:
    """Undirected mixed graph from a networkx graph, relabelled to 0..n-1."""
    nodes = sorted(g.nodes())
    index = {v: i for i, v in enumerate(nodes)}
    return MixedGraph.build(len(nodes), [(index[a], index[b]) for a, b in g.edges()])


def disjoint_union(*graphs: MixedGraph) -> MixedGraph:
    edges = []
    offset = 0
    for g in graphs:
        edges += [Edge(u + offset, v + offset, o) for u, v, o in g.edges]
        offset += g.n
    return MixedGraph(offset, tuple(edges))


# ---------------------------------------------------------------------------
# structure


def component_vertex_sets(g: MixedGraph) -> list[list[int]]:
    """Vertex sets of the connected components, ordered by smallest vertex."""
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        stack, comp = [s], []
        while stack:
            x = stack.pop()
            comp.append(x)
            for y in g.adjacency[x]:
                if not seen[y]:
                    seen[y] = True
                    stack.append(y)
        out.append(sorted(comp))
    return out


def components(g: MixedGraph) -> list[MixedGraph]:
    """Connected components as induced mixed subgraphs (ids re-densified)."""
    return [induced_subgraph(g, vs) for vs in component_vertex_sets(g)]


def is_connected(g: MixedGraph) -> bool:
    return g.n > 0 and len(component_vertex_sets(g)) == 1


def cycle_space_dim(g: MixedGraph) -> int:
    """|E| - |V| + number of components, on the underlying graph."""
    return g.m_edges - g.n + len(component_vertex_sets(g))


def pendant_and_quasi_pendant(g: MixedGraph) -> list[tuple[int, int]]:
    """All (pendant, quasi-pendant) pairs.

    An isolated edge (both ends of degree one) is reported once, with its
    smaller endpoint as the pendant.
    """
    out = []
    for p in range(g.n):
        if g.degree(p) != 1:
            continue
        q = g.adjacency[p][0]
        if g.degree(q) > 1 or p < q:
            out.append((p, q))
    return out


def quasi_pendant_vertices(g: MixedGraph) -> set[int]:
    return {q for p, q in pendant_and_quasi_pendant(g) if g.degree(q) > 1}


def induced_subgraph(g: MixedGraph, keep: Iterable[int]) -> MixedGraph:
    keep = sorted(set(keep))
    for v in keep:
        if not 0 <= v < g.n:
            raise GraphError(f"unknown vertex {v}")
    index = {v: i for i, v in enumerate(keep)}
    edges = tuple(Edge(index[u], index[v], o) for u, v, o in g.edges
                  if u in index and v in index)
    base = g.origin
    origin = tuple(keep) if base is None else tuple(base[v] for v in keep)
    return MixedGraph(len(keep), edges, origin)


def delete_vertices(g: MixedGraph, xs: Iterable[int]) -> MixedGraph:
    """G - X.  Remaining vertices are renumbered; ``result.origin[new]`` is the old id.

    (``origin`` composes: it always refers back to the root graph of a chain
    of deletions.)
    """
    xs = set(xs)
    for v in xs:
        if not (isinstance(v, int) and 0 <= v < g.n):
            raise GraphError(f"unknown vertex {v!r}")
    return induced_subgraph(g, (v for v in range(g.n) if v not in xs))


def old_to_new(sub: MixedGraph) -> dict[int, int]:
    if sub.origin is None:
        return {v: v for v in range(sub.n)}
    return {old: new for new, old in enumerate(sub.origin)}


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[frozenset[int], ...]
    cut_vertices: frozenset[int]


def blocks(g: MixedGraph) -> BlockDecomposition:
    """Biconnected components of the underlying graph (isolated vertices belong to none)."""
    return _blocks_of(g.n, g.pairs)


@lru_cache(maxsize=100_000)
def _blocks_of(n: int, pairs: tuple[tuple[int, int], ...]) -> BlockDecomposition:
    nxg = nx.Graph()
    nxg.add_nodes_from(range(n))
    nxg.add_edges_from(pairs)
    bl = sorted((frozenset(b) for b in nx.biconnected_components(nxg)), key=lambda b: sorted(b))
    return BlockDecomposition(tuple(bl), frozenset(nx.articulation_points(nxg)))


def cycle_traversal(g: MixedGraph, vertices: Iterable[int]) -> tuple[int, ...]:
    """Canonical traversal of the cycle on ``vertices``.

    Starts at the smallest vertex and steps first to its smaller cycle
    neighbour.  The vertex set must induce a chordless cycle.
    """
    vs = set(vertices)
    start = min(vs)
    nb = [w for w in g.adjacency[start] if w in vs]
    if len(nb) != 2:
        raise GraphError(f"{sorted(vs)} does not induce a cycle")
    walk = [start, min(nb)]
    while len(walk) < len(vs):
        nxt = [w for w in g.adjacency[walk[-1]] if w in vs and w != walk[-2]]
        if len(nxt) != 1:
            raise GraphError(f"{sorted(vs)} does not induce a cycle")
        walk.append(nxt[0])
    if not g.has_edge(walk[-1], start):
        raise GraphError(f"{sorted(vs)} does not induce a cycle")
    return tuple(walk)


def all_cycles_if_disjoint(g: MixedGraph) -> list[tuple[int, ...]] | None:
    """All cycles when they are pairwise vertex-disjoint, else None.

    Present exactly when every block is a single edge or a chordless cycle
    and no vertex lies on two cycle blocks.  Each cycle comes back as its
    canonical traversal; a forest gives an empty list.
    """
    found = _disjoint_cycles(g.n, g.pairs)
    return None if found is None else list(found)


@lru_cache(maxsize=100_000)
def _disjoint_cycles(n: int, pairs: tuple[tuple[int, int], ...]) -> tuple[tuple[int, ...], ...] | None:
    g = MixedGraph.build(n, pairs)
    cycles = []
    covered: set[int] = set()
    for b in blocks(g).blocks:
        if len(b) == 2:
            continue
        n_edges = sum(1 for u, v in pairs if u in b and v in b)
        if n_edges != len(b):
            return None
        if covered & b:
            return None
        covered |= b
        cycles.append(cycle_traversal(g, b))
    return tuple(sorted(cycles))


# ---------------------------------------------------------------------------
# file formats


def to_mg(g: MixedGraph) -> str:
    lines = [f"n {g.n}"]
    for e in g.edges:
        if e.is_arc:
            lines.append(f"a {e.tail} {e.head}")
        else:
            lines.append(f"e {e.u} {e.v}")
    return "\n".join(lines) + "\n"


def iter_mg(text: str) -> Iterator[MixedGraph]:
    """Parse one or more graphs in ``.mg`` format; each starts with an ``n`` line."""
    n = None
    start = 0
    und: list[tuple[int, int]] = []
    arcs: list[tuple[int, int]] = []

    def finish() -> MixedGraph:
        try:
            return MixedGraph.build(n, und, arcs)
        except GraphError as exc:
            raise GraphError(f"graph starting on line {start}: {exc}") from None

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        try:
            if tok[0] == "n" and len(tok) == 2:
                if n is not None:
                    yield finish()
                n, und, arcs, start = int(tok[1]), [], [], lineno
            elif tok[0] in ("e", "a") and len(tok) == 3:
                if n is None:
                    raise GraphError("edge before 'n' line")
                pair = (int(tok[1]), int(tok[2]))
                (und if tok[0] == "e" else arcs).append(pair)
            else:
                raise GraphError(f"unrecognised record {line!r}")
        except ValueError as exc:
            raise GraphError(f"line {lineno}: {exc}") from None
    if n is not None:
        yield finish()


def parse_mg(text: str) -> MixedGraph:
    graphs = list(iter_mg(text))
    if len(graphs) != 1:
        raise GraphError(f"expected exactly one graph, found {len(graphs)}")
    return graphs[0]


def to_json_dict(g: MixedGraph) -> dict:
    edges = []
    for e in g.edges:
        if e.is_arc:
            edges.append({"u": e.tail, "v": e.head, "kind": "a"})
        else:
            edges.append({"u": e.u, "v": e.v, "kind": "e"})
    return {"n": g.n, "edges": edges}


def from_json_dict(d: dict) -> MixedGraph:
    try:
        und = [(x["u"], x["v"]) for x in d["edges"] if x["kind"] == "e"]
        arcs = [(x["u"], x["v"]) for x in d["edges"] if x["kind"] == "a"]
        if any(x["kind"] not in ("e", "a") for x in d["edges"]):
            raise GraphError("edge kind must be 'e' or 'a'")
        return MixedGraph.build(int(d["n"]), und, arcs)
    except (KeyError, TypeError) as exc:
        raise GraphError(f"bad JSON graph: {exc}") from None


def load_graph(path: str) -> MixedGraph:
    with open(path) as fh:
        text = fh.read()
    if path.endswith(".json"):
        try:
            return from_json_dict(json.loads(text))
        except json.JSONDecodeError as exc:
            raise GraphError(f"{path}: {exc}") from None
    return parse_mg(text)
