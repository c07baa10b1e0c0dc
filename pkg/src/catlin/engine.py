"""Certified construction of a d-coloring with a maximum-size color class.

Given a graph of maximum degree at most d (d >= 3) with no clique on
d + 1 vertices, :func:`catlin_color` produces a proper d-coloring in
which one color class is a maximum independent set.  The construction
follows the inductive argument behind Catlin's strengthening of Brooks'
theorem and certifies itself as it goes: every structural claim the
argument relies on is re-checked at runtime against the exact solvers,
and a failed check raises :class:`InternalInvariantViolation` with a
witness instead of returning a wrong answer.

The three cases, dispatched in this order:

* a clique on d vertices exists: delete it, reduce the rest (possibly
  adding one edge between two outside neighbors of the clique), color
  recursively, and extend to the clique by a matching between clique
  vertices and colors;
* d >= 4 and no d-clique: remove a maximum independent set, color the
  rest with d - 1 colors recursively, and give the removed set color d;
* d = 3 and triangle-free: start from any maximum independent set and
  repeatedly swap it along an alternating path until the leftover graph
  has no odd cycle, then 2-color the leftover.  Color 3 goes on the
  final independent set, so the big class is always class 3 here.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterator

from .errors import InternalInvariantViolation, PreconditionViolation
from .graph import (
    Coloring,
    Decomposition,
    Graph,
    RelabelMap,
    path_cycle_decomposition,
    two_color_bipartite,
)
from .solvers import (
    MatchingProblem,
    alpha_and_witness,
    exists_mis_avoiding,
    find_clique_of_size,
    min_odd_cycle_mis,
    perfect_color_matching,
)

# The alpha bookkeeping of a clique reduction is re-checked against the
# exact solver whenever the reduced graph is at most this large.
ALPHA_CHECK_LIMIT = 14

CASE_MISSING_NEIGHBOR = "missing-neighbor"
CASE_ONE = "case1"
CASE_TWO = "case2"
CASE_FORCED_NONMONO = "forced-nonmono"
CASE_FORCED_NONMONO_UNVERIFIED = "forced-nonmono-unverified"


@dataclass(frozen=True)
class ColoringInstance:
    """A validated input pair: the graph and the palette size d."""

    graph: Graph
    d: int


@dataclass(frozen=True)
class AlternatingPath:
    """A path alternating between outside vertices and independent-set vertices.

    Even positions (0, 2, ...) lie outside the independent set, odd
    positions inside it, so a valid path always has even length.
    """

    vertices: tuple[int, ...]


@dataclass(frozen=True)
class CliqueWitness:
    """A d-clique plus each member's unique neighbor outside the clique.

    ``outside[i]`` is the one neighbor of ``clique[i]`` not in the
    clique, or None when ``clique[i]`` has no outside neighbor.
    """

    clique: tuple[int, ...]
    outside: tuple[int | None, ...]

    def distinct_outside(self) -> tuple[int, ...]:
        return tuple(sorted({a for a in self.outside if a is not None}))


@dataclass(frozen=True)
class ReducedInstance:
    """Outcome of a clique reduction.

    ``g2`` is the graph handed to the recursion (the graph minus the
    clique, plus at most one edge between outside neighbors; endpoints
    of ``added_edge`` are in g2's labels).  ``alpha_shift`` records the
    claimed relation alpha(G) = alpha(G minus clique) + alpha_shift;
    in every case alpha(G) = alpha(g2) + 1.  ``alpha_checked`` is True
    when those claims were verified against the exact solver.
    """

    g2: Graph
    added_edge: tuple[int, int] | None
    case_tag: str
    relabel: RelabelMap
    alpha_shift: int
    alpha_checked: bool = False


@dataclass(frozen=True)
class AugmentationRecord:
    """One accepted independent-set swap in the base case."""

    start: int
    path: tuple[int, ...]
    result_set: tuple[int, ...]
    odd_cycles_before: int
    odd_cycles_after: int
    candidates_tried: int


@dataclass(frozen=True)
class TraceStep:
    """One level of the recursion, parent before children."""

    case: str  # "base" | "mis-removal" | "clique"
    n: int
    d: int
    case_tag: str | None = None
    alpha_checked: bool = False
    augmentations: tuple[AugmentationRecord, ...] = ()
    fallback_used: bool = False
    initial_odd_cycles: int = 0
    final_odd_cycles: int = 0


@dataclass(frozen=True)
class CatlinResult:
    """A certified coloring: the big class has maximum-independent-set size."""

    coloring: Coloring
    big_class: int
    big_class_size: int
    trace: tuple[TraceStep, ...] = ()


def validate_instance(g: Graph, d: int) -> ColoringInstance:
    """Check the theorem's hypotheses: d >= 3, max degree <= d, no (d+1)-clique."""
    if d < 3:
        raise PreconditionViolation("palette size d must be at least 3", d)
    if g.max_degree > d:
        offender = next(v for v in range(g.n) if g.degree(v) > d)
        raise PreconditionViolation(
            f"maximum degree {g.max_degree} exceeds d={d}", offender
        )
    clique = find_clique_of_size(g, d + 1)
    if clique is not None:
        raise PreconditionViolation(f"graph contains K_{d + 1}", clique)
    return ColoringInstance(g, d)


def catlin_color(g: Graph, d: int) -> CatlinResult:
    """Color g with d colors so that one class is a maximum independent set."""
    validate_instance(g, d)
    if g.n == 0:
        return CatlinResult(Coloring(d, ()), d, 0, ())
    clique = find_clique_of_size(g, d)
    if clique is not None:
        witness = build_clique_witness(g, clique, d)
        reduced = reduce_clique_case(g, d, witness)
        sub = catlin_color(reduced.g2, d)
        result = extend_coloring(sub, witness, reduced.relabel, d)
        step = TraceStep(
            "clique",
            g.n,
            d,
            case_tag=reduced.case_tag,
            alpha_checked=reduced.alpha_checked,
        )
        return replace(result, trace=(step,) + result.trace)
    if d >= 4:
        return mis_removal_step(g, d)
    return base_case_color(g)


def mis_removal_step(g: Graph, d: int) -> CatlinResult:
    """Remove a maximum independent set, recurse with d - 1 colors, use color d on it.

    Requires d >= 4 and no d-clique.  The removed set is maximum, hence
    maximal, so the rest has maximum degree at most d - 1; that and the
    absence of a (d-1)+1 clique in the rest are both re-checked.
    """
    if d < 4:
        raise PreconditionViolation("independent-set removal needs d >= 4", d)
    if g.max_degree > d:
        raise PreconditionViolation(f"maximum degree exceeds d={d}", g.max_degree)
    clique = find_clique_of_size(g, d)
    if clique is not None:
        raise PreconditionViolation(f"graph contains K_{d}", clique)
    mis = alpha_and_witness(g)
    rest, relabel = g.induced_delete(mis.witness)
    if rest.max_degree > d - 1:
        raise InternalInvariantViolation("degree after independent-set removal", rest)
    if find_clique_of_size(rest, d) is not None:
        raise InternalInvariantViolation("clique after independent-set removal", rest)
    sub = catlin_color(rest, d - 1)
    colors = [0] * g.n
    for new_id, old_id in enumerate(relabel.inverse):
        colors[old_id] = sub.coloring.colors[new_id]
    for v in mis.witness:
        colors[v] = d
    step = TraceStep("mis-removal", g.n, d)
    return CatlinResult(
        Coloring(d, tuple(colors)),
        big_class=d,
        big_class_size=len(mis.witness),
        trace=(step,) + sub.trace,
    )


# --------------------------------------------------------------------------
# Base case: d = 3, triangle-free.


def base_case_color(
    g: Graph, *, initial_independent_set: tuple[int, ...] | None = None
) -> CatlinResult:
    """Triangle-free, max degree <= 3: 3-coloring with class 3 of maximum size.

    Starts from any maximum independent set (a specific one may be
    forced for testing) and swaps it along alternating paths until the
    rest of the graph is free of odd cycles; each swap must strictly
    reduce the odd cycle count and introduce no new odd cycle.  When no
    candidate path achieves that, the exhaustive fallback replaces the
    set wholesale with an odd-cycle-minimizing one.
    """
    if g.max_degree > 3:
        raise PreconditionViolation("maximum degree exceeds 3", g.max_degree)
    triangle = find_clique_of_size(g, 3)
    if triangle is not None:
        raise PreconditionViolation("graph contains a triangle", triangle)
    mis = alpha_and_witness(g)
    if initial_independent_set is None:
        members = mis.witness
    else:
        members = tuple(sorted(initial_independent_set))
        if not g.is_independent(members):
            raise PreconditionViolation("forced set is not independent", members)
        if len(set(members)) != mis.alpha:
            raise PreconditionViolation("forced set is not maximum", members)

    augmentations: list[AugmentationRecord] = []
    fallback_used = False
    initial_odd: int | None = None
    while True:
        rest, relabel = g.induced_delete(members)
        if rest.max_degree > 2:
            raise InternalInvariantViolation("leftover degree exceeds 2", rest)
        decomp = path_cycle_decomposition(rest)
        if initial_odd is None:
            initial_odd = decomp.odd_cycle_count
        if decomp.odd_cycle_count == 0:
            break
        improved = _augment_once(g, members, rest, relabel, decomp, augmentations)
        if improved is not None:
            members = improved
            continue
        # No alternating path works; fall back to exhaustive selection.
        fallback_used = True
        chosen = min_odd_cycle_mis(g)
        if chosen.odd_cycle_count > 0:
            raise InternalInvariantViolation(
                "every maximum independent set leaves an odd cycle", g
            )
        members = chosen.witness

    two = two_color_bipartite(rest)
    if two.coloring is None:
        raise InternalInvariantViolation("leftover graph not bipartite", rest)
    colors = [0] * g.n
    for new_id, old_id in enumerate(relabel.inverse):
        colors[old_id] = two.coloring.colors[new_id]
    for v in members:
        colors[v] = 3
    step = TraceStep(
        "base",
        g.n,
        3,
        augmentations=tuple(augmentations),
        fallback_used=fallback_used,
        initial_odd_cycles=initial_odd,
        final_odd_cycles=decomp.odd_cycle_count,
    )
    return CatlinResult(
        Coloring(3, tuple(colors)),
        big_class=3,
        big_class_size=len(members),
        trace=(step,),
    )


def max_alternating_path(
    g: Graph, independent_set: tuple[int, ...], start: int
) -> AlternatingPath:
    """Longest alternating path from ``start``, ties broken lexicographically.

    Paths alternate between vertices outside the (maximal) independent
    set and vertices inside it; after the start, every outside vertex on
    the path must be non-isolated in the graph minus the set, and the
    outside vertices must stay pairwise non-adjacent.
    """
    members = tuple(sorted(set(independent_set)))
    member_set = set(members)
    if not g.is_independent(members):
        raise PreconditionViolation("set is not independent", members)
    for v in range(g.n):
        if v in member_set:
            continue
        if not any(u in member_set for u in g.adj[v]):
            raise PreconditionViolation("set is not maximal", v)
    if not 0 <= start < g.n:
        raise PreconditionViolation("start vertex out of range", start)
    if start in member_set:
        raise PreconditionViolation("start must lie outside the set", start)
    best: tuple[int, ...] | None = None
    for path in _alternating_paths(g, member_set, start):
        if best is None or (-len(path), path) < (-len(best), best):
            best = path
    if best is None:
        raise InternalInvariantViolation("no alternating path from start", start)
    return AlternatingPath(best)


def augment(
    g: Graph, independent_set: tuple[int, ...], path: AlternatingPath
) -> tuple[int, ...]:
    """Symmetric difference of the set with the path's vertices.

    The result is certified independent and of unchanged size; a
    violation raises, which the base case treats as a rejected
    candidate.
    """
    members = tuple(sorted(set(independent_set)))
    member_set = set(members)
    seq = path.vertices
    if len(seq) < 2 or len(seq) % 2 != 0:
        raise PreconditionViolation("alternating path needs an even vertex count", seq)
    if len(set(seq)) != len(seq):
        raise PreconditionViolation("path repeats a vertex", seq)
    for i, v in enumerate(seq):
        if (v in member_set) != (i % 2 == 1):
            raise PreconditionViolation("path does not alternate with the set", seq)
        if i and not g.has_edge(seq[i - 1], v):
            raise PreconditionViolation("path steps along a non-edge", seq)
    swapped = tuple(sorted(member_set.symmetric_difference(seq)))
    if not g.is_independent(swapped):
        raise InternalInvariantViolation("swapped set is not independent", swapped)
    if len(swapped) != len(members):
        raise InternalInvariantViolation("swapped set changed size", swapped)
    return swapped


def _alternating_paths(
    g: Graph, member_set: set[int], start: int
) -> Iterator[tuple[int, ...]]:
    # Depth-first enumeration of every even-length alternating path from
    # `start`.  Even positions stay pairwise non-adjacent; outside
    # vertices after the start must have a neighbor outside the set.
    outside_mask = 0
    for v in range(g.n):
        if v not in member_set:
            outside_mask |= 1 << v
    path = [start]
    used = {start}
    evens_mask = 1 << start

    def extend() -> Iterator[tuple[int, ...]]:
        nonlocal evens_mask
        cur = path[-1]
        if len(path) % 2 == 1:
            # At an outside vertex; step into the set.
            for u in g.adj[cur]:
                if u in member_set and u not in used:
                    path.append(u)
                    used.add(u)
                    yield tuple(path)
                    yield from extend()
                    path.pop()
                    used.remove(u)
        else:
            # At a set vertex; step to a fresh outside vertex that is
            # non-isolated outside and non-adjacent to the even ones.
            for u in g.adj[cur]:
                if u in member_set or u in used:
                    continue
                if not g.masks[u] & outside_mask:
                    continue
                if g.masks[u] & evens_mask:
                    continue
                path.append(u)
                used.add(u)
                evens_mask |= 1 << u
                yield from extend()
                path.pop()
                used.remove(u)
                evens_mask &= ~(1 << u)

    yield from extend()


def _augment_once(
    g: Graph,
    members: tuple[int, ...],
    rest: Graph,
    relabel: RelabelMap,
    decomp: Decomposition,
    log: list[AugmentationRecord],
) -> tuple[int, ...] | None:
    # One accepted swap, or None when every candidate fails.  Candidates
    # are alternating paths from vertices of the first odd cycle, longest
    # first (then lexicographic), starting from the smallest cycle vertex.
    member_set = set(members)
    before = {frozenset(relabel.to_original(c)) for c in decomp.odd_cycles()}
    count_before = decomp.odd_cycle_count
    first_cycle = sorted(relabel.to_original(decomp.odd_cycles()[0]))
    tried = 0
    for start in first_cycle:
        candidates = sorted(
            _alternating_paths(g, member_set, start), key=lambda p: (-len(p), p)
        )
        for path in candidates:
            tried += 1
            try:
                swapped = augment(g, members, AlternatingPath(path))
            except InternalInvariantViolation:
                continue
            rest2, relabel2 = g.induced_delete(swapped)
            decomp2 = path_cycle_decomposition(rest2)
            if decomp2.odd_cycle_count >= count_before:
                continue
            after = {frozenset(relabel2.to_original(c)) for c in decomp2.odd_cycles()}
            if not after <= before:
                continue
            log.append(
                AugmentationRecord(
                    start=start,
                    path=path,
                    result_set=swapped,
                    odd_cycles_before=count_before,
                    odd_cycles_after=decomp2.odd_cycle_count,
                    candidates_tried=tried,
                )
            )
            return swapped
    return None


# --------------------------------------------------------------------------
# Clique case.


def build_clique_witness(g: Graph, clique: tuple[int, ...], d: int) -> CliqueWitness:
    """Record each clique vertex's outside neighbor and sanity-check the setup.

    With max degree <= d, a vertex of a d-clique has at most one
    neighbor outside it.  If all d outside neighbors exist and coincide,
    that common vertex would complete a (d+1)-clique, so the input
    contradicts the hypotheses and the engine refuses to continue.
    """
    members = tuple(sorted(set(clique)))
    if len(members) != d:
        raise PreconditionViolation("clique must have exactly d vertices", members)
    if g.max_degree > d:
        raise PreconditionViolation(f"maximum degree exceeds d={d}", g.max_degree)
    member_set = set(members)
    for u in members:
        for v in members:
            if u < v and not g.has_edge(u, v):
                raise PreconditionViolation("clique vertices not adjacent", (u, v))
    outside: list[int | None] = []
    for v in members:
        external = [u for u in g.adj[v] if u not in member_set]
        if len(external) > 1:
            raise InternalInvariantViolation(
                "clique vertex with several outside neighbors", (v, tuple(external))
            )
        outside.append(external[0] if external else None)
    if all(a is not None for a in outside) and len(set(outside)) == 1:
        raise InternalInvariantViolation(
            "all outside neighbors coincide; a (d+1)-clique was missed", outside
        )
    return CliqueWitness(members, tuple(outside))


def reduce_clique_case(g: Graph, d: int, witness: CliqueWitness) -> ReducedInstance:
    """Delete the clique and decide how the rest must be prepared.

    The decision ladder:

    a. some clique vertex has no outside neighbor: recurse on the rest
       unchanged; that vertex accepts any color left over, and the rest's
       maximum independent set extends by it (shift +1).
    b. the distinct outside neighbors are pairwise adjacent: no edge can
       be added, but they can never share a color either; recurse
       unchanged (shift +1).
    c. some outside neighbor is avoidable (a maximum independent set of
       the rest exists without it): add an edge from an avoidable one to
       a non-neighbor in the outside set; the avoided set survives, so
       the addition costs nothing (shift +1).
    d. every maximum independent set of the rest contains all outside
       neighbors: any added edge inside the outside set lowers its
       independence number by exactly one (shift 0).

    Candidate edges are tried in ascending order; one is accepted only
    if the result keeps maximum degree <= d and stays free of
    (d+1)-cliques.  If every candidate fails, the reduction degrades to
    recursing on the unchanged rest and lets the coloring extension
    enforce that the outside neighbors are not monochromatic.

    For small leftovers the claimed alpha arithmetic is re-checked
    against the exact solver.
    """
    gprime, relabel = g.induced_delete(witness.clique)
    distinct = witness.distinct_outside()
    a_new = sorted(relabel.forward[a] for a in distinct)
    tag: str
    edge: tuple[int, int] | None
    shift: int
    g2 = gprime
    if any(a is None for a in witness.outside):
        tag, edge, shift = CASE_MISSING_NEIGHBOR, None, 1
    else:
        addable = [
            (a, b)
            for a, b in itertools.combinations(a_new, 2)
            if not gprime.has_edge(a, b)
        ]
        if not addable:
            # Pairwise adjacent outside set: never monochromatic as is.
            tag, edge, shift = CASE_FORCED_NONMONO, None, 1
        else:
            avoidable = [
                a for a in a_new if exists_mis_avoiding(gprime, a) is not None
            ]
            if avoidable:
                tag, shift = CASE_ONE, 1
                pairs = sorted(
                    {
                        (min(a, b), max(a, b))
                        for a in avoidable
                        for b in a_new
                        if b != a and not gprime.has_edge(a, b)
                    }
                )
            else:
                tag, shift = CASE_TWO, 0
                pairs = addable
            edge = None
            for a, b in pairs:
                candidate = gprime.add_edge(a, b)
                if candidate.max_degree > d:
                    continue
                if find_clique_of_size(candidate, d + 1) is not None:
                    continue
                edge = (a, b)
                g2 = candidate
                break
            if edge is None:
                tag, shift = CASE_FORCED_NONMONO_UNVERIFIED, 1
                g2 = gprime

    checked = False
    if gprime.n <= ALPHA_CHECK_LIMIT:
        alpha_prime = alpha_and_witness(gprime).alpha
        alpha_two = alpha_and_witness(g2).alpha
        if alpha_two != alpha_prime + shift - 1:
            raise InternalInvariantViolation(
                "alpha bookkeeping after clique reduction",
                (tag, alpha_prime, alpha_two, shift),
            )
        checked = True
    return ReducedInstance(g2, edge, tag, relabel, shift, checked)


def extend_coloring(
    sub: CatlinResult, witness: CliqueWitness, relabel: RelabelMap, d: int
) -> CatlinResult:
    """Pull a coloring of the reduced graph back and color the clique by matching.

    Each clique vertex must avoid the color of its outside neighbor;
    a perfect matching between clique vertices and the d colors exists
    whenever the outside neighbors do not all share one color.  Every
    color class grows by exactly one, which keeps the big class maximum;
    both facts are asserted.
    """
    n = len(relabel.inverse) + len(witness.clique)
    colors = [0] * n
    for new_id, old_id in enumerate(relabel.inverse):
        colors[old_id] = sub.coloring.colors[new_id]
    forbidden = tuple(
        None if a is None else colors[a] for a in witness.outside
    )
    matching = perfect_color_matching(MatchingProblem(d, forbidden))
    if matching is None:
        raise InternalInvariantViolation(
            "clique extension blocked: outside neighbors are monochromatic", witness
        )
    for slot, v in enumerate(witness.clique):
        colors[v] = matching.assignment[slot]
    coloring = Coloring(d, tuple(colors))
    before = sub.coloring.class_sizes()
    after = coloring.class_sizes()
    for c in range(1, d + 1):
        if after.get(c, 0) != before.get(c, 0) + 1:
            raise InternalInvariantViolation(
                "a color class did not grow by exactly one", c
            )
    return CatlinResult(
        coloring,
        big_class=sub.big_class,
        big_class_size=sub.big_class_size + 1,
        trace=sub.trace,
    )


def trace_summary(trace: tuple[TraceStep, ...]) -> dict:
    """Aggregate a trace for reporting: case mix, swap and fallback counts."""
    cases: dict[str, int] = {}
    augmentations = 0
    fallbacks = 0
    alpha_checks = 0
    for step in trace:
        key = step.case if step.case_tag is None else f"{step.case}:{step.case_tag}"
        cases[key] = cases.get(key, 0) + 1
        augmentations += len(step.augmentations)
        fallbacks += 1 if step.fallback_used else 0
        alpha_checks += 1 if step.alpha_checked else 0
    return {
        "depth": len(trace),
        "cases": cases,
        "augmentations": augmentations,
        "fallbacks": fallbacks,
        "alpha_checks": alpha_checks,
    }
