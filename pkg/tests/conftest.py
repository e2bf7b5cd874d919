import numpy as np
import pytest
from hypothesis import strategies as st

from mgx.graph import Edge, MixedGraph, Orientation


@st.composite
def mixed_graphs(draw, min_n=1, max_n=8, connected=False, chords=None):
    """Random mixed graph; every possible edge is present independently.

    With ``chords`` the graph is a random spanning tree plus that many extra
    edges (as many as fit) instead.
    """
    n = draw(st.integers(min_n, max_n))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    if (connected or chords is not None) and n > 1:
        # random spanning tree first
        order = draw(st.permutations(range(n)))
        tree = {tuple(sorted((order[i], order[draw(st.integers(0, i - 1))]))) for i in range(1, n)}
    else:
        tree = set()
    if chords is None:
        keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
        chosen = [p for p, k in zip(pairs, keep) if k or p in tree]
    else:
        free = [p for p in pairs if p not in tree]
        k = min(draw(chords) if isinstance(chords, st.SearchStrategy) else chords, len(free))
        extra = draw(st.lists(st.sampled_from(free), min_size=k, max_size=k, unique=True)) if k else []
        chosen = sorted(tree | set(extra))
    flags = draw(st.lists(st.sampled_from(list(Orientation)), min_size=len(chosen),
                          max_size=len(chosen)))
    return MixedGraph(n, tuple(Edge(u, v, f) for (u, v), f in zip(chosen, flags)))


def dense_hermitian(g: MixedGraph) -> np.ndarray:
    """Complex Hermitian adjacency built directly from the edge list (float oracle)."""
    h = np.zeros((g.n, g.n), dtype=complex)
    for e in g.edges:
        if e.is_arc:
            h[e.tail, e.head] = 1j
            h[e.head, e.tail] = -1j
        else:
            h[e.u, e.v] = h[e.v, e.u] = 1
    return h


def float_inertia(g: MixedGraph, tol=1e-7) -> tuple[int, int, int]:
    if g.n == 0:
        return (0, 0, 0)
    ev = np.linalg.eigvalsh(dense_hermitian(g))
    return (int((ev > tol).sum()), int((ev < -tol).sum()), int((abs(ev) <= tol).sum()))


def float_charpoly(g: MixedGraph) -> list[int]:
    if g.n == 0:
        return [1]
    coeffs = np.poly(np.linalg.eigvalsh(dense_hermitian(g)))
    return [int(round(c.real)) for c in coeffs]


@pytest.fixture
def triangle_sigma2() -> MixedGraph:
    # arcs 0->1, 1->2, undirected 2-0
    return MixedGraph.build(3, [(2, 0)], [(0, 1), (1, 2)])


ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def acceptance_line():
    """Record one pass/fail line per acceptance criterion (printed in the summary)."""
    def record(label: str, passed: bool, detail: str) -> bool:
        line = f"{'PASS' if passed else 'FAIL'}  {label}: {detail}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        return passed
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
