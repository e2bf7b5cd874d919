"""Closed-form inertia results for mixed graphs and the predicates that
characterise graphs attaining the matching/cycle-space bounds.

Everything here predicts inertia from combinatorial data (cycle length,
cycle signature, matching numbers).  It never looks at the matrix; the
verification suites compare these predictions against :mod:`mgx.spectra`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from .elementary import signature
from .graph import (
    MixedGraph,
    all_cycles_if_disjoint,
    blocks,
    cycle_space_dim,
    delete_vertices,
    induced_subgraph,
    is_connected,
    quasi_pendant_vertices,
)
from .matching import matching_counts, matching_number, max_matching_avoiding, max_matching_through
from .spectra import Inertia, IntPolynomial, graph_inertia


class StructureError(ValueError):
    """Input outside the class of graphs a result is stated for."""


def _sgn(x: int) -> int:
    return (x > 0) - (x < 0)


# ---------------------------------------------------------------------------
# mixed cycles


def cycle_inertia_formula(n: int, sigma: int) -> Inertia:
    """(p+, n-, nullity) of a mixed n-cycle with signature ``sigma``."""
    if n < 3:
        raise StructureError("a cycle has at least 3 vertices")
    if sigma < 0:
        raise StructureError("signature is non-negative")
    if n % 2 == 0:
        if sigma % 2 == 1 or (n + sigma) % 4 == 2:
            p = m = n // 2
        else:
            p = m = (n - 2) // 2
    elif sigma % 2 == 1:
        p = m = (n - 1) // 2
    else:
        up = (n + 1) // 2, (n - 1) // 2
        # n = 1 mod 4 with sigma = 0 mod 4, or n = 3 mod 4 with sigma = 2 mod 4
        if (n % 4 == 1) == (sigma % 4 == 0):
            p, m = up
        else:
            m, p = up
    return Inertia(p, m, n - p - m)


def cycle_rank_formula(n: int, sigma: int) -> int:
    if n < 3:
        raise StructureError("a cycle has at least 3 vertices")
    if n % 2 == 1:
        r = n - 1 if sigma % 2 == 1 else n
    elif sigma % 2 == 1 or (n + sigma) % 4 == 2:
        r = n
    else:
        r = n - 2
    if r != cycle_inertia_formula(n, sigma).rank:
        raise AssertionError(f"rank table and inertia table disagree at n={n}, sigma={sigma}")
    return r


def cycle_sigma(g: MixedGraph, cycle) -> int:
    return signature(g, cycle).sigma


# ---------------------------------------------------------------------------
# unicyclic graphs


class UnicyclicCase(Enum):
    MINUS_ONE_BOTH = "MinusOneBoth"  # (m-1, m-1)
    PLUS_ONE_POSITIVE = "PlusOnePositive"  # (m+1, m)
    PLUS_ONE_NEGATIVE = "PlusOneNegative"  # (m, m+1)
    BALANCED = "Balanced"  # (m, m)


@dataclass(frozen=True)
class UnicyclicData:
    cycle: tuple[int, ...]
    q: int
    sigma: int
    m: int
    m_without_cycle: int  # m(G - V(C))
    incident_edges: tuple[tuple[int, int], ...]
    max_through_incident: int  # largest matching using an edge incident to the cycle

    @property
    def delta(self) -> int:
        return abs(self.sigma - self.q)

    @property
    def no_max_matching_uses_incident(self) -> bool:
        return self.max_through_incident < self.m

    @property
    def exceptional_even(self) -> bool:
        """q, sigma even, |sigma - q| = 0 mod 4 and no maximum matching uses an incident edge."""
        return (self.q % 2 == 0 and self.sigma % 2 == 0 and self.delta % 4 == 0
                and self.no_max_matching_uses_incident)

    @property
    def cycle_saturates(self) -> bool:
        """m(G) = m(G - V(C)) + (q - 1)/2."""
        return 2 * self.m == 2 * self.m_without_cycle + self.q - 1


def unicyclic_data(g: MixedGraph) -> UnicyclicData:
    if not is_connected(g) or g.m_edges != g.n:
        raise StructureError("graph is not connected unicyclic")
    cycles = all_cycles_if_disjoint(g)
    if cycles is None or len(cycles) != 1:
        raise StructureError("graph is not connected unicyclic")
    cycle = cycles[0]
    on = set(cycle)
    incident = tuple(p for p in g.pairs if (p[0] in on) != (p[1] in on))
    return UnicyclicData(
        cycle=cycle,
        q=len(cycle),
        sigma=cycle_sigma(g, cycle),
        m=matching_number(g),
        m_without_cycle=matching_number(delete_vertices(g, on)),
        incident_edges=incident,
        max_through_incident=max_matching_through(g, incident),
    )


@dataclass(frozen=True)
class UnicyclicClass:
    case: UnicyclicCase
    predicted: Inertia
    evidence: UnicyclicData


def classify_unicyclic(g: MixedGraph) -> UnicyclicClass:
    d = unicyclic_data(g)
    m = d.m
    odd_even = d.q % 2 == 1 and d.sigma % 2 == 0
    if d.exceptional_even:
        case, p, n = UnicyclicCase.MINUS_ONE_BOTH, m - 1, m - 1
    elif odd_even and d.delta % 4 == 1 and d.cycle_saturates:
        case, p, n = UnicyclicCase.PLUS_ONE_POSITIVE, m + 1, m
    elif odd_even and d.delta % 4 == 3 and d.cycle_saturates:
        case, p, n = UnicyclicCase.PLUS_ONE_NEGATIVE, m, m + 1
    else:
        case, p, n = UnicyclicCase.BALANCED, m, m
    return UnicyclicClass(case, Inertia(p, n, g.n - p - n), d)


@dataclass(frozen=True)
class SignPrediction:
    """Predicted signs of the characteristic polynomial coefficients.

    ``even_signs[i]`` is sgn(a_{2i}); ``odd_leading_sign`` is sgn(a_{2m+1}).
    When ``odd_all_zero`` every odd coefficient vanishes; otherwise a_{2i+1}
    vanishes for i > k and the earlier odd coefficients are unconstrained.
    """

    k: int
    even_signs: tuple[int, ...]
    odd_leading_sign: int
    odd_leading_index: int
    odd_all_zero: bool

    def mismatches(self, p: IntPolynomial) -> list[str]:
        n = p.degree
        a = list(p.coeffs) + [0, 0]
        out = []
        for i, s in enumerate(self.even_signs):
            if _sgn(a[2 * i]) != s:
                out.append(f"sgn(a_{2 * i}) = {_sgn(a[2 * i])}, predicted {s}")
        for j in range(1, n + 1, 2):
            i = (j - 1) // 2
            if (self.odd_all_zero or i > self.k) and a[j] != 0:
                out.append(f"a_{j} = {a[j]}, predicted 0")
        j = self.odd_leading_index
        if _sgn(a[j]) != self.odd_leading_sign:
            out.append(f"sgn(a_{j}) = {_sgn(a[j])}, predicted {self.odd_leading_sign}")
        return out


def predict_coefficient_signs(g: MixedGraph) -> SignPrediction:
    d = unicyclic_data(g)
    m = d.m
    k = m - 1 if d.exceptional_even else m
    even = tuple((-1) ** i if i <= k else 0 for i in range(g.n // 2 + 1))
    odd_all_zero = d.q % 2 == 0 or d.sigma % 2 == 1
    lead = 0
    if not odd_all_zero:
        rest = delete_vertices(g, d.cycle)
        if matching_counts(rest)[m - (d.q - 1) // 2] > 0:
            lead = (-1) ** (m + (d.delta + 1) // 2)
    return SignPrediction(k, even, lead, 2 * m + 1, odd_all_zero)


def literal_even_signs(g: MixedGraph) -> tuple[int, ...]:
    """sgn(a_{2i}) read case by case from the four-branch even-coefficient table,
    including its i <= q/2 bound in the branch with no incident i-matching."""
    d = unicyclic_data(g)
    out = []
    for i in range(g.n // 2 + 1):
        if d.q % 2 == 1 or d.sigma % 2 == 1 or d.delta % 4 == 2:
            ok = i <= d.m
        else:
            incident_i = 1 <= i <= d.max_through_incident
            ok = i <= d.m if incident_i else i <= d.q // 2
        out.append((-1) ** i if ok else 0)
    return tuple(out)


# ---------------------------------------------------------------------------
# graphs whose cycles are pairwise vertex-disjoint


def cyclic_vertices(g: MixedGraph) -> set[int]:
    """Vertices lying on some cycle (members of a block with three or more vertices)."""
    out: set[int] = set()
    for b in blocks(g).blocks:
        if len(b) >= 3:
            out |= b
    return out


def cycle_attachment_edges(g: MixedGraph, cycles) -> tuple[tuple[int, int], ...]:
    """Edges off every cycle that have an endpoint on some cycle.

    This includes an edge joining two different cycles: each of its ends is
    outside the other end's cycle.
    """
    on_cycle = {v: i for i, c in enumerate(cycles) for v in c}
    out = []
    for u, v in g.pairs:
        cu, cv = on_cycle.get(u), on_cycle.get(v)
        if (cu is not None or cv is not None) and cu != cv:
            out.append((u, v))
    return tuple(out)


@dataclass(frozen=True)
class CactusDecomposition:
    cycles: tuple[tuple[int, ...], ...]
    node_of: tuple[int, ...]  # vertex of G -> node of T_G
    cyclic_nodes: frozenset[int]
    t_g: MixedGraph
    bracket_t_g: MixedGraph  # induced by the non-cyclic nodes; origin gives T_G node ids
    f_edges: tuple[tuple[int, int], ...] = field(default=())


def in_class_g(g: MixedGraph) -> bool:
    """Connected, at least one cycle, cycles pairwise disjoint, and not a bare cycle."""
    if not is_connected(g):
        return False
    cycles = all_cycles_if_disjoint(g)
    return bool(cycles) and not (len(cycles) == 1 and g.m_edges == g.n == len(cycles[0]))


def _contract(g: MixedGraph, cycles) -> tuple[tuple[int, ...], frozenset[int], MixedGraph]:
    cycle_of = {v: i for i, c in enumerate(cycles) for v in c}
    node_of: list[int] = []
    cycle_node: dict[int, int] = {}
    cyclic = set()
    count = 0
    for v in range(g.n):
        if v in cycle_of:
            c = cycle_of[v]
            if c not in cycle_node:
                cycle_node[c] = count
                cyclic.add(count)
                count += 1
            node_of.append(cycle_node[c])
        else:
            node_of.append(count)
            count += 1
    pairs = set()
    for u, v in g.pairs:
        a, b = node_of[u], node_of[v]
        if a == b:
            continue
        key = (min(a, b), max(a, b))
        if key in pairs:
            raise StructureError("contracting the cycles produced a multiple edge")
        pairs.add(key)
    return tuple(node_of), frozenset(cyclic), MixedGraph.build(count, sorted(pairs))


def cactus_decomposition(g: MixedGraph) -> CactusDecomposition:
    if not is_connected(g):
        raise StructureError("graph is not connected")
    cycles = all_cycles_if_disjoint(g)
    if cycles is None:
        raise StructureError("two cycles share a vertex")
    if not cycles:
        raise StructureError("graph contains no cycle")
    if not in_class_g(g):
        raise StructureError("graph is a disjoint union of cycles")
    node_of, cyclic, t_g = _contract(g, cycles)
    bracket = induced_subgraph(t_g, [x for x in range(t_g.n) if x not in cyclic])
    return CactusDecomposition(tuple(cycles), node_of, cyclic, t_g, bracket,
                               cycle_attachment_edges(g, cycles))


def contracted_tree_condition(g: MixedGraph) -> bool:
    """m(T_G) = m([T_G]) for a connected graph with vertex-disjoint cycles.

    Outside the class G the contraction still makes sense: a tree is its own
    T_G and [T_G], and a bare cycle contracts to one cyclic node.
    """
    cycles = all_cycles_if_disjoint(g)
    if cycles is None or not is_connected(g):
        raise StructureError("needs a connected graph with vertex-disjoint cycles")
    _, cyclic, t_g = _contract(g, cycles)
    bracket = induced_subgraph(t_g, [x for x in range(t_g.n) if x not in cyclic])
    return matching_number(t_g) == matching_number(bracket)


# ---------------------------------------------------------------------------
# bounds and characterisations


def inertia_bounds(g: MixedGraph) -> tuple[int, int]:
    """(m - c, m + c): both p+ and n- lie in this window."""
    m, c = matching_number(g), cycle_space_dim(g)
    return m - c, m + c


def _cycle_data(g: MixedGraph):
    if not is_connected(g):
        raise StructureError("characterisations are stated for connected graphs")
    cycles = all_cycles_if_disjoint(g)
    if cycles is None:
        return None
    return cycles, [(len(c), cycle_sigma(g, c)) for c in cycles]


def avoids_attachment_edges(g: MixedGraph, cycles) -> bool:
    """Some maximum matching uses no edge of cycle_attachment_edges."""
    return max_matching_avoiding(g, cycle_attachment_edges(g, cycles)) == matching_number(g)


def _odd_cycles_with(qs, residue: int) -> bool:
    return all(q % 2 == 1 and s % 2 == 0 and abs(s - q) % 4 == residue for q, s in qs)


def characterize_p_plus_max(g: MixedGraph) -> bool:
    """Predicts p+ = m + c."""
    data = _cycle_data(g)
    if data is None:
        return False
    cycles, qs = data
    return _odd_cycles_with(qs, 1) and avoids_attachment_edges(g, cycles)


def characterize_n_minus_max(g: MixedGraph) -> bool:
    """Predicts n- = m + c."""
    data = _cycle_data(g)
    if data is None:
        return False
    cycles, qs = data
    return _odd_cycles_with(qs, 3) and (avoids_attachment_edges(g, cycles)
                                        or contracted_tree_condition(g))


def characterize_inertia_min(g: MixedGraph) -> bool:
    """Predicts p+ = m - c (and equally n- = m - c)."""
    data = _cycle_data(g)
    if data is None:
        return False
    _, qs = data
    even = all(q % 2 == 0 and s % 2 == 0 and abs(s - q) % 4 == 0 for q, s in qs)
    return even and contracted_tree_condition(g)


@dataclass(frozen=True)
class ExtremalItem:
    vertex: int
    item: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class ExtremalReport:
    which: str
    items: tuple[ExtremalItem, ...]
    literal_notes: tuple[str, ...] = ()

    @property
    def passed(self) -> bool:
        return all(x.passed for x in self.items)

    def failures(self) -> list[ExtremalItem]:
        return [x for x in self.items if not x.passed]


def check_extremal_consequences(g: MixedGraph, which: str) -> ExtremalReport:
    """Check the per-vertex consequences of p+ attaining m + c ("max") or m - c ("min").

    For the minimum, item (ii) is checked as p+(G-v) = m(G-v) - c(G-v); the
    form with m + c is recorded in ``literal_notes`` whenever it fails.
    """
    if which not in ("max", "min"):
        raise ValueError("which must be 'max' or 'min'")
    on_cycle = sorted(cyclic_vertices(g))
    if not on_cycle:
        raise StructureError("graph contains no cycle")
    inertia = graph_inertia(g)
    m, c = matching_number(g), cycle_space_dim(g)
    target = m + c if which == "max" else m - c
    if inertia.p_plus != target:
        raise StructureError(f"p+ = {inertia.p_plus} does not attain the {which} bound {target}")
    quasi = quasi_pendant_vertices(g)
    disjoint = all_cycles_if_disjoint(g) is not None
    items, notes = [], []
    for v in on_cycle:
        h = delete_vertices(g, [v])
        hi = graph_inertia(h)
        hm, hc = matching_number(h), cycle_space_dim(h)
        p, r, hr = inertia.p_plus, inertia.rank, hi.rank
        if which == "max":
            checks = [
                ("i", hi.p_plus == p - 1, f"p+(G-v)={hi.p_plus}, p+(G)={p}"),
                ("ii", hi.p_plus == hm + hc, f"p+(G-v)={hi.p_plus}, m+c={hm + hc}"),
                ("iii", hm == m, f"m(G-v)={hm}, m(G)={m}"),
                ("iv", hc == c - 1, f"c(G-v)={hc}, c(G)={c}"),
                ("v", r - 2 <= hr <= r - 1, f"rank(G-v)={hr}, rank(G)={r}"),
            ]
        else:
            checks = [
                ("i", hi.p_plus == p, f"p+(G-v)={hi.p_plus}, p+(G)={p}"),
                ("ii", hi.p_plus == hm - hc, f"p+(G-v)={hi.p_plus}, m-c={hm - hc}"),
                ("iii", hm == m - 1, f"m(G-v)={hm}, m(G)={m}"),
                ("iv", hc == c - 1, f"c(G-v)={hc}, c(G)={c}"),
                ("v", r - 1 <= hr <= r, f"rank(G-v)={hr}, rank(G)={r}"),
            ]
            if hi.p_plus != hm + hc:
                notes.append(f"v={v}: p+(G-v)={hi.p_plus} != m(G-v)+c(G-v)={hm + hc}")
        checks += [
            ("vi", v not in quasi, "quasi-pendant" if v in quasi else "not quasi-pendant"),
            ("vii", disjoint, "cycles vertex-disjoint" if disjoint else "cycles intersect"),
        ]
        items += [ExtremalItem(v, name, ok, detail) for name, ok, detail in checks]
    return ExtremalReport(which, tuple(items), tuple(notes))


def classification_summary(g: MixedGraph) -> dict:
    """Everything ``mgx classify`` reports, as plain JSON-able data."""
    inertia = graph_inertia(g)
    m, c = matching_number(g), cycle_space_dim(g)
    out: dict = {
        "n": g.n,
        "inertia": list(inertia.as_tuple()),
        "matching_number": m,
        "cycle_space_dim": c,
        "bounds": [m - c, m + c],
        "attains": {
            "p_plus_max": inertia.p_plus == m + c,
            "n_minus_max": inertia.n_minus == m + c,
            "p_plus_min": inertia.p_plus == m - c,
            "n_minus_min": inertia.n_minus == m - c,
        },
    }
    cycles = all_cycles_if_disjoint(g)
    out["cycles"] = None if cycles is None else [
        {"vertices": list(cy), "q": len(cy), "sigma": cycle_sigma(g, cy)} for cy in cycles]
    if is_connected(g):
        out["characterizations"] = {
            "p_plus_max": characterize_p_plus_max(g),
            "n_minus_max": characterize_n_minus_max(g),
            "inertia_min": characterize_inertia_min(g),
        }
    if is_connected(g) and g.m_edges == g.n:
        cls = classify_unicyclic(g)
        out["unicyclic"] = {"case": cls.case.value, "predicted": list(cls.predicted.as_tuple()),
                            "q": cls.evidence.q, "sigma": cls.evidence.sigma}
    if in_class_g(g):
        dec = cactus_decomposition(g)
        out["cactus"] = {
            "m_t_g": matching_number(dec.t_g),
            "m_bracket_t_g": matching_number(dec.bracket_t_g),
            "f_edges": [list(e) for e in dec.f_edges],
        }
    return out
