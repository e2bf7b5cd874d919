"""Verification suites: each pairs a deterministic corpus of mixed graphs
with an exact per-graph check of one inertia result.

A check returns ``None`` when the graph behaves as predicted and an
``(expected, actual)`` pair otherwise.  Checks depend only on the graph, so
any recorded failure can be replayed with :func:`check_instance`.
"""

from __future__ import annotations

import itertools
import logging
import random
import time
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Iterator

from . import generators as gen
from .elementary import charpoly_by_enumeration
from .graph import (
    MixedGraph,
    all_cycles_if_disjoint,
    complete_graph,
    components,
    cycle_graph,
    cycle_space_dim,
    delete_vertices,
    is_connected,
    path_graph,
    pendant_and_quasi_pendant,
    quasi_pendant_vertices,
    to_json_dict,
)
from .matching import matching_number
from .spectra import IntPolynomial, graph_charpoly, graph_inertia, inertia_from_charpoly
from .structure import (
    StructureError,
    avoids_attachment_edges,
    characterize_inertia_min,
    characterize_n_minus_max,
    characterize_p_plus_max,
    check_extremal_consequences,
    classify_unicyclic,
    contracted_tree_condition,
    cycle_inertia_formula,
    cycle_rank_formula,
    cycle_sigma,
    cyclic_vertices,
    in_class_g,
    inertia_bounds,
    literal_even_signs,
    predict_coefficient_signs,
)

log = logging.getLogger(__name__)

Mismatch = tuple[object, object]
MAX_RECORDED_FAILURES = 50
MAX_RECORDED_NOTES = 20
RANK_COMPUTE_LIMIT = 12  # rank-formula computes H-rank only up to this order


@dataclass(frozen=True)
class Caps:
    max_n: int
    samples: int
    seed: int
    orientation_cap: int = 729


@dataclass
class CheckLog:
    """Side channel for a check: free-text notes and named counters."""

    notes: list[str] = field(default_factory=list)
    tally: Counter = field(default_factory=Counter)

    def note(self, text: str) -> None:
        self.notes.append(text)

    def count(self, key: str) -> None:
        self.tally[key] += 1


@dataclass
class SuiteResult:
    suite: str
    checked: int = 0
    failures: list[dict] = field(default_factory=list)
    failure_count: int = 0
    millis: int = 0
    notes: list[str] = field(default_factory=list)
    note_count: int = 0
    strata: dict[int, list[int]] = field(default_factory=dict)  # n -> [checked, failed]
    tally: Counter = field(default_factory=Counter)

    @property
    def passed(self) -> bool:
        return self.failure_count == 0

    def to_json(self) -> dict:
        out = {"suite": self.suite, "checked": self.checked, "failures": self.failures,
               "millis": self.millis}
        if self.failure_count > len(self.failures):
            out["failure_count"] = self.failure_count
        if self.note_count:
            out["notes"] = self.notes
            out["note_count"] = self.note_count
        if self.tally:
            out["tally"] = dict(sorted(self.tally.items()))
        return out

    def strata_rows(self) -> list[tuple[int, int, int]]:
        return [(n, c, f) for n, (c, f) in sorted(self.strata.items())]


@dataclass(frozen=True)
class Suite:
    name: str
    summary: str
    corpus: Callable[[Caps], Iterable[MixedGraph]]
    check: Callable[[MixedGraph, CheckLog], Mismatch | None]
    defaults: Caps


# ---------------------------------------------------------------------------
# corpora


def _all_orientations(graphs: Iterable[MixedGraph]) -> Iterator[MixedGraph]:
    for g in graphs:
        yield from gen.enumerate_orientations(g)


def _capped_orientations(graphs: Iterable[MixedGraph], cap: int, seed: int) -> Iterator[MixedGraph]:
    """All orientations when there are at most ``cap``, else ``cap`` seeded random ones."""
    for index, g in enumerate(graphs):
        if 3 ** g.m_edges <= cap:
            yield from gen.enumerate_orientations(g)
        else:
            rng = random.Random(f"{seed}:{index}:{g.pairs}")
            for _ in range(cap):
                yield gen.random_orientation(g, rng)


def cycle_corpus(caps: Caps) -> Iterator[MixedGraph]:
    return _all_orientations(cycle_graph(n) for n in range(3, caps.max_n + 1))


LABELLED_UNICYCLIC_LIMIT = 5


def unicyclic_corpus(caps: Caps) -> Iterator[MixedGraph]:
    """Every labelled unicyclic graph up to LABELLED_UNICYCLIC_LIMIT vertices and
    one graph per isomorphism class above it, each with all orientations."""
    for n in range(3, caps.max_n + 1):
        if n <= LABELLED_UNICYCLIC_LIMIT:
            yield from _all_orientations(gen.unicyclic_all(n))
        else:
            yield from _all_orientations(gen.unicyclic_census(n))


def labelled_unicyclic_sample(n: int, per_graph: int, seed: int) -> Iterator[MixedGraph]:
    """Every labelled unicyclic graph on ``n`` vertices, each with ``per_graph``
    seeded random orientations (for sizes where all orientations are too many)."""
    rng = random.Random(seed)
    for g in gen.unicyclic_all(n):
        for _ in range(per_graph):
            yield gen.random_orientation(g, rng)


def bowtie() -> MixedGraph:
    return MixedGraph.build(5, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)])


def oracle_family(max_n: int) -> list[MixedGraph]:
    fam = [path_graph(n) for n in range(1, max_n + 1)]
    fam += [cycle_graph(n) for n in range(3, max_n + 1)]
    for n in range(4, max_n + 1):
        fam += [g for g in gen.unicyclic_census(n) if g != cycle_graph(n)]
    if max_n >= 4:
        fam.append(complete_graph(4))
    if max_n >= 5:
        fam.append(bowtie())
    return fam


def _random_mixed(caps: Caps, min_n: int = 1) -> Iterator[MixedGraph]:
    rng = random.Random(caps.seed)
    for _ in range(caps.samples):
        n = rng.randint(min_n, caps.max_n)
        g = gen.random_gnp(n, rng.uniform(0.15, 0.6), rng)
        yield gen.random_orientation(g, rng)


def _random_sparse(caps: Caps) -> Iterator[MixedGraph]:
    rng = random.Random(caps.seed)
    for _ in range(caps.samples):
        n = rng.randint(2, caps.max_n)
        g = gen.random_connected(n, rng.randint(0, 3), rng)
        yield gen.random_orientation(g, rng)


def _random_trees(caps: Caps) -> Iterator[MixedGraph]:
    rng = random.Random(caps.seed)
    for _ in range(caps.samples):
        yield gen.random_orientation(gen.random_tree(rng.randint(1, caps.max_n), rng), rng)


def _random_disconnected(caps: Caps) -> Iterator[MixedGraph]:
    rng = random.Random(caps.seed)
    for _ in range(caps.samples):
        yield gen.random_orientation(gen.random_disconnected(rng), rng)


RANDOM_CONNECTED_MAX_N = 10


def characterization_corpus(caps: Caps) -> Iterator[MixedGraph]:
    """Census of connected disjoint-cycle graphs up to ``max_n`` vertices
    (orientations capped per graph) followed by ``samples`` random connected
    graphs, half with vertex-disjoint cycles and half unrestricted."""
    census = (g for n in range(1, caps.max_n + 1) for g in gen.disjoint_cycle_census(n))
    yield from _capped_orientations(census, caps.orientation_cap, caps.seed)
    rng = random.Random(caps.seed)
    for i in range(caps.samples):
        n = rng.randint(2, RANDOM_CONNECTED_MAX_N)
        if i % 2:
            g = gen.random_connected(n, rng.randint(1, 3), rng)
        else:
            g = gen.random_cactus(n, rng)
        yield gen.random_orientation(g, rng)


def bounds_corpus(caps: Caps) -> Iterator[MixedGraph]:
    yield from cycle_corpus(Caps(min(caps.max_n, 8), 0, caps.seed))
    yield from unicyclic_corpus(Caps(min(caps.max_n, 6), 0, caps.seed))
    yield from _random_mixed(caps)
    yield from _random_trees(Caps(14, caps.samples // 4, caps.seed))
    yield from _random_disconnected(Caps(caps.max_n, caps.samples // 4, caps.seed))


def rank_corpus(caps: Caps) -> Iterator[MixedGraph]:
    yield from cycle_corpus(caps)
    for n in range(3, 51):
        for sigma in range(n + 1):
            yield cycle_graph(n).with_orientations([1] * sigma + [0] * (n - sigma))


# ---------------------------------------------------------------------------
# checks


def _ring(g: MixedGraph) -> tuple[int, ...]:
    return tuple(range(g.n))


def check_cycle(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    sigma = cycle_sigma(g, _ring(g))
    want = cycle_inertia_formula(g.n, sigma)
    by_charpoly = graph_inertia(g, "descartes")
    by_congruence = graph_inertia(g, "congruence")
    if want == by_charpoly == by_congruence:
        return None
    return (list(want.as_tuple()),
            {"sigma": sigma, "descartes": list(by_charpoly.as_tuple()),
             "congruence": list(by_congruence.as_tuple())})


def check_cycle_rank(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    sigma = cycle_sigma(g, _ring(g))
    table = cycle_rank_formula(g.n, sigma)
    inertia_table = cycle_inertia_formula(g.n, sigma).rank
    actual = {"inertia_table": inertia_table}
    if g.n <= RANK_COMPUTE_LIMIT:
        actual["computed"] = graph_inertia(g).rank
    if all(v == table for v in actual.values()):
        return None
    return ({"sigma": sigma, "rank": table}, actual)


def check_unicyclic(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    cls = classify_unicyclic(g)
    got = graph_inertia(g)
    if cls.predicted == got:
        return None
    return ({"case": cls.case.value, "inertia": list(cls.predicted.as_tuple())},
            list(got.as_tuple()))


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def check_coefficient_signs(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    poly = graph_charpoly(g)
    pred = predict_coefficient_signs(g)
    literal = literal_even_signs(g)
    actual_even = tuple(_sign(poly[2 * i]) for i in range(g.n // 2 + 1))
    if not pred.odd_all_zero and pred.odd_leading_sign:
        ctx.count("odd_leading_nonzero")
    if literal != actual_even:
        ctx.note(f"even-sign table literal boundary: {to_json_dict(g)} "
                     f"literal {list(literal)} vs actual {list(actual_even)}")
    bad = pred.mismatches(poly)
    if not bad:
        return None
    return ({"k": pred.k, "even_signs": list(pred.even_signs),
             "odd_leading_sign": pred.odd_leading_sign}, {"charpoly": list(poly.coeffs),
                                                          "mismatches": bad})


def check_charpoly_oracle(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    fast, slow = graph_charpoly(g), charpoly_by_enumeration(g)
    if fast == slow:
        return None
    return (list(slow.coeffs), list(fast.coeffs))


def check_inertia_agreement(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    a, b = graph_inertia(g, "descartes"), graph_inertia(g, "congruence")
    if a == b:
        return None
    return (list(a.as_tuple()), list(b.as_tuple()))


def check_tree(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    got = graph_inertia(g)
    m = matching_number(g)
    if got.p_plus == got.n_minus == m:
        return None
    return ([m, m], [got.p_plus, got.n_minus])


def check_components(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    parts = components(g)
    product = IntPolynomial((1,))
    for p in parts:
        product = product * graph_charpoly(p)
    whole = graph_charpoly(g)
    inertias = [inertia_from_charpoly(graph_charpoly(p)) for p in parts]
    got = inertia_from_charpoly(whole)
    summed = [sum(x.p_plus for x in inertias), sum(x.n_minus for x in inertias)]
    if whole == product and [got.p_plus, got.n_minus] == summed:
        return None
    return ({"charpoly": list(product.coeffs), "inertia": summed},
            {"charpoly": list(whole.coeffs), "inertia": [got.p_plus, got.n_minus]})


def check_bounds(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    lo, hi = inertia_bounds(g)
    got = graph_inertia(g)
    if lo <= got.p_plus <= hi and lo <= got.n_minus <= hi:
        return None
    return ([lo, hi], [got.p_plus, got.n_minus])


def check_vertex_deletion(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    whole = graph_inertia(g)
    bad = []
    for u in range(g.n):
        sub = graph_inertia(delete_vertices(g, [u]))
        if not (whole.p_plus - 1 <= sub.p_plus <= whole.p_plus
                and whole.n_minus - 1 <= sub.n_minus <= whole.n_minus
                and whole.rank - 2 <= sub.rank <= whole.rank):
            bad.append({"vertex": u, "inertia": list(sub.as_tuple())})
    if not bad:
        return None
    return ({"inertia": list(whole.as_tuple()), "windows": "p-1..p, n-1..n, rank-2..rank"}, bad)


def check_pendant_deletion(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    whole = graph_inertia(g)
    m = matching_number(g)
    bad = []
    for p, q in pendant_and_quasi_pendant(g):
        sub = graph_inertia(delete_vertices(g, [p, q]))
        if (sub.p_plus, sub.n_minus) != (whole.p_plus - 1, whole.n_minus - 1):
            bad.append({"pair": [p, q], "inertia": list(sub.as_tuple())})
    for v in sorted(quasi_pendant_vertices(g)):
        mv = matching_number(delete_vertices(g, [v]))
        if mv != m - 1:
            bad.append({"quasi_pendant": v, "m(G-v)": mv, "m(G)": m})
    if not bad:
        return None
    return ({"inertia": list(whole.as_tuple())}, bad)


@lru_cache(maxsize=50_000)
def _odd_cactus_forms(n: int, pairs: tuple[tuple[int, int], ...]) -> tuple[bool, bool] | None:
    g = MixedGraph.build(n, pairs)
    if not in_class_g(g):
        return None
    cycles = all_cycles_if_disjoint(g)
    if any(len(c) % 2 == 0 for c in cycles):
        return None
    return avoids_attachment_edges(g, cycles), contracted_tree_condition(g)


def check_characterize_max(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    got = graph_inertia(g)
    m, c = matching_number(g), cycle_space_dim(g)
    expected = {"p_plus_max": characterize_p_plus_max(g),
                "n_minus_max": characterize_n_minus_max(g)}
    actual = {"p_plus_max": got.p_plus == m + c, "n_minus_max": got.n_minus == m + c}
    for key, hit in actual.items():
        if hit:
            ctx.count(key)
    forms = _odd_cactus_forms(g.n, g.pairs)
    if forms is not None:
        expected["matching_form"] = expected["tree_form"] = True
        actual["matching_form"] = actual["tree_form"] = forms[0] == forms[1]
    if expected == actual:
        return None
    return (expected, actual)


def check_characterize_min(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    got = graph_inertia(g)
    m, c = matching_number(g), cycle_space_dim(g)
    predicted = characterize_inertia_min(g)
    actual = {"p_plus_min": got.p_plus == m - c, "n_minus_min": got.n_minus == m - c}
    for key, hit in actual.items():
        if hit:
            ctx.count(key)
    if actual == {"p_plus_min": predicted, "n_minus_min": predicted}:
        return None
    return ({"p_plus_min": predicted, "n_minus_min": predicted}, actual)


def check_extremal(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
    if not cyclic_vertices(g):
        return None
    got = graph_inertia(g)
    m, c = matching_number(g), cycle_space_dim(g)
    bad = []
    for which, target in (("max", m + c), ("min", m - c)):
        if got.p_plus != target:
            continue
        report = check_extremal_consequences(g, which)
        ctx.count(f"attains_{which}")
        for line in report.literal_notes:
            ctx.note(f"minimum-case item (ii) with m+c fails: {to_json_dict(g)} {line}")
        bad += [{"which": which, "vertex": x.vertex, "item": x.item, "detail": x.detail}
                for x in report.failures()]
    if not bad:
        return None
    return ("all items hold", bad)


# ---------------------------------------------------------------------------
# registry


def _connected_only(check):
    def wrapped(g: MixedGraph, ctx: CheckLog) -> Mismatch | None:
        if not is_connected(g):
            raise StructureError("characterisation suites take connected graphs only")
        return check(g, ctx)
    return wrapped


SUITES: dict[str, Suite] = {s.name: s for s in [
    Suite("cycles", "mixed cycle inertia table vs both exact methods",
          cycle_corpus, check_cycle, Caps(10, 0, 0)),
    Suite("rank-formula", "mixed cycle rank table", rank_corpus, check_cycle_rank, Caps(10, 0, 0)),
    Suite("unicyclic", "unicyclic inertia classification", unicyclic_corpus, check_unicyclic,
          Caps(7, 0, 0)),
    Suite("coefficient-signs", "unicyclic characteristic polynomial coefficient signs",
          unicyclic_corpus, check_coefficient_signs, Caps(7, 0, 0)),
    Suite("charpoly-oracle", "Faddeev-LeVerrier vs elementary subgraph expansion",
          lambda caps: _all_orientations(oracle_family(caps.max_n)), check_charpoly_oracle,
          Caps(6, 0, 0)),
    Suite("inertia-agreement", "Descartes inertia vs congruence inertia", _random_mixed,
          check_inertia_agreement, Caps(12, 10_000, 0)),
    Suite("trees", "mixed trees have p+ = n- = m", _random_trees, check_tree, Caps(14, 1000, 0)),
    Suite("components", "characteristic polynomial is multiplicative over components",
          _random_disconnected, check_components, Caps(14, 500, 0)),
    Suite("bounds", "m - c <= p+, n- <= m + c", bounds_corpus, check_bounds, Caps(10, 2000, 0)),
    Suite("vertex-deletion", "inertia windows under single vertex deletion", _random_mixed,
          check_vertex_deletion, Caps(10, 2000, 0)),
    Suite("pendant-deletion", "pendant/quasi-pendant deletion lowers p+ and n- by one",
          _random_sparse, check_pendant_deletion, Caps(10, 2000, 0)),
    Suite("characterize-max", "predicates for p+ = m + c and n- = m + c",
          characterization_corpus, _connected_only(check_characterize_max), Caps(8, 5000, 0)),
    Suite("characterize-min", "predicate for p+ = m - c and n- = m - c",
          characterization_corpus, _connected_only(check_characterize_min), Caps(8, 5000, 0)),
    Suite("extremal-consequences", "vertex-deletion consequences of attaining a bound",
          characterization_corpus, check_extremal, Caps(8, 5000, 0)),
]}


def resolve_caps(name: str, max_n: int | None = None, samples: int | None = None,
                 seed: int | None = None, orientation_cap: int | None = None) -> Caps:
    d = SUITES[name].defaults
    return Caps(d.max_n if max_n is None else max_n,
                d.samples if samples is None else samples,
                d.seed if seed is None else seed,
                d.orientation_cap if orientation_cap is None else orientation_cap)


def check_instance(name: str, g: MixedGraph) -> Mismatch | None:
    """Replay one suite check on a single graph."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}")
    return SUITES[name].check(g, CheckLog())


def run_suite(name: str, max_n: int | None = None, samples: int | None = None,
              seed: int | None = None, orientation_cap: int | None = None,
              limit: int | None = None) -> SuiteResult:
    """Run a registered suite; ``limit`` truncates the corpus (for smoke tests)."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    suite = SUITES[name]
    caps = resolve_caps(name, max_n, samples, seed, orientation_cap)
    result = SuiteResult(name)
    start = time.perf_counter()
    corpus = suite.corpus(caps)
    if limit is not None:
        corpus = itertools.islice(corpus, limit)
    for g in corpus:
        ctx = CheckLog()
        try:
            bad = suite.check(g, ctx)
        except (ArithmeticError, ValueError, AssertionError) as exc:
            bad = ("no error", f"{type(exc).__name__}: {exc}")
        result.checked += 1
        row = result.strata.setdefault(g.n, [0, 0])
        row[0] += 1
        result.tally.update(ctx.tally)
        for note in ctx.notes:
            result.note_count += 1
            if len(result.notes) < MAX_RECORDED_NOTES:
                result.notes.append(note)
        if bad is not None:
            row[1] += 1
            result.failure_count += 1
            if len(result.failures) < MAX_RECORDED_FAILURES:
                expected, actual = bad
                result.failures.append({"graph": to_json_dict(g), "expected": expected,
                                        "actual": actual})
    result.millis = int((time.perf_counter() - start) * 1000)
    if result.note_count:
        log.info("%s: %d logged notes", name, result.note_count)
    return result
