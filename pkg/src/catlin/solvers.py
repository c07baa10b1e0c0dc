"""Exact exponential-time solvers used as in-process oracles.

Everything here is deterministic: branch vertices, enumeration orders
and reported witnesses are all fixed by ascending vertex id, so repeated
runs (and cross-checks in the test suite) see identical answers.  Sizes
are guarded by per-solver capacity limits; the ``CATLIN_MAX_N``
environment variable overrides all of them at once.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import CapacityError, PreconditionViolation
from .graph import Graph, path_cycle_decomposition

MAX_N_ENV = "CATLIN_MAX_N"

ALPHA_DEFAULT_LIMIT = 64
CHROMATIC_DEFAULT_LIMIT = 12
ENUMERATION_DEFAULT_LIMIT = 24


def _capacity(default: int, override: int | None) -> int:
    if override is not None:
        return override
    env = os.environ.get(MAX_N_ENV)
    return int(env) if env else default


def _check_capacity(g: Graph, default: int, override: int | None, what: str) -> None:
    limit = _capacity(default, override)
    if g.n > limit:
        raise CapacityError(f"{what}: n={g.n} exceeds limit {limit}")


@dataclass(frozen=True)
class MisResult:
    """A maximum independent set: its size and one witness set."""

    alpha: int
    witness: tuple[int, ...]


@dataclass(frozen=True)
class OddCycleMis:
    """A maximum independent set chosen to minimize leftover odd cycles."""

    alpha: int
    witness: tuple[int, ...]
    odd_cycle_count: int


@dataclass(frozen=True)
class MatchingProblem:
    """Assign colors 1..d to d left slots, one forbidden color per slot.

    ``forbidden[i]`` is the color slot i must avoid, or None when slot i
    is unconstrained.
    """

    d: int
    forbidden: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if self.d < 1:
            raise PreconditionViolation("palette must be nonempty", self.d)
        if len(self.forbidden) != self.d:
            raise PreconditionViolation(
                "one forbidden entry per slot required", self.forbidden
            )
        for c in self.forbidden:
            if c is not None and not 1 <= c <= self.d:
                raise PreconditionViolation("forbidden color out of palette", c)


@dataclass(frozen=True)
class PerfectMatching:
    """A bijection slot -> color; ``assignment[i]`` is the color of slot i."""

    assignment: tuple[int, ...]


def _clique_cover_bound(masks: tuple[int, ...], remaining: int) -> int:
    # Greedy partition of `remaining` into cliques; the independence
    # number of the induced subgraph is at most the number of parts.
    bound = 0
    rest = remaining
    while rest:
        v = (rest & -rest).bit_length() - 1
        rest &= rest - 1
        candidates = rest & masks[v]
        while candidates:
            u = (candidates & -candidates).bit_length() - 1
            rest &= ~(1 << u)
            candidates &= masks[u] & rest
        bound += 1
    return bound


def _max_independent_set(masks: tuple[int, ...], universe: int) -> tuple[int, int]:
    """Branch and bound; returns (size, member mask) of a maximum independent set.

    Branches on a maximum-degree vertex (smallest id on ties), include
    branch first, and prunes with the greedy clique-cover bound, so the
    reported witness is a fixed function of the input.
    """
    best_size = -1
    best_mask = 0

    def recurse(remaining: int, chosen: int, size: int) -> None:
        nonlocal best_size, best_mask
        branch = -1
        branch_deg = 0
        r = remaining
        while r:
            v = (r & -r).bit_length() - 1
            r &= r - 1
            deg = (masks[v] & remaining).bit_count()
            if deg > branch_deg:
                branch_deg = deg
                branch = v
        if branch == -1:
            # Everything left is isolated; take it all.
            total = size + remaining.bit_count()
            if total > best_size:
                best_size = total
                best_mask = chosen | remaining
            return
        if size + _clique_cover_bound(masks, remaining) <= best_size:
            return
        bit = 1 << branch
        recurse(remaining & ~(masks[branch] | bit), chosen | bit, size + 1)
        recurse(remaining & ~bit, chosen, size)

    recurse(universe, 0, 0)
    return best_size, best_mask


def _mask_members(mask: int) -> tuple[int, ...]:
    members = []
    while mask:
        members.append((mask & -mask).bit_length() - 1)
        mask &= mask - 1
    return tuple(members)


def alpha_and_witness(g: Graph, max_n: int | None = None) -> MisResult:
    """Independence number with a deterministic maximum independent set."""
    _check_capacity(g, ALPHA_DEFAULT_LIMIT, max_n, "alpha_and_witness")
    size, mask = _max_independent_set(g.masks, (1 << g.n) - 1)
    return MisResult(size, _mask_members(mask))


def exists_mis_avoiding(
    g: Graph, v: int, max_n: int | None = None
) -> tuple[int, ...] | None:
    """A maximum independent set of g avoiding v, or None if all contain v.

    Works by comparing alpha(g - v) with alpha(g); the witness found in
    the smaller graph is lifted back to g's labels.
    """
    if not 0 <= v < g.n:
        raise PreconditionViolation("vertex out of range", v)
    _check_capacity(g, ALPHA_DEFAULT_LIMIT, max_n, "exists_mis_avoiding")
    whole = alpha_and_witness(g, max_n)
    sub, relabel = g.induced_delete([v])
    reduced = alpha_and_witness(sub, max_n)
    if reduced.alpha == whole.alpha:
        return relabel.to_original(reduced.witness)
    return None


def find_clique_of_size(
    g: Graph, r: int, max_n: int | None = None
) -> tuple[int, ...] | None:
    """The lexicographically least r-clique of g, or None.

    Only vertices of degree >= r - 1 can participate, so the search is
    restricted to them up front.
    """
    if r < 1:
        raise PreconditionViolation("clique size must be positive", r)
    if r == 1:
        return (0,) if g.n else None
    eligible = 0
    for v in range(g.n):
        if g.degree(v) >= r - 1:
            eligible |= 1 << v
    masks = g.masks

    def extend(prefix: list[int], allowed: int, need: int) -> tuple[int, ...] | None:
        if need == 0:
            return tuple(prefix)
        if allowed.bit_count() < need:
            return None
        rest = allowed
        while rest:
            v = (rest & -rest).bit_length() - 1
            rest &= rest - 1
            prefix.append(v)
            found = extend(prefix, rest & masks[v], need - 1)
            if found is not None:
                return found
            prefix.pop()
        return None

    return extend([], eligible, r)


def perfect_color_matching(problem: MatchingProblem) -> PerfectMatching | None:
    """Perfect matching of slots to colors avoiding the forbidden entries.

    Standard augmenting-path search, slots in index order and colors
    ascending, so the returned bijection is deterministic.  Returns None
    exactly when no perfect matching exists (all slots forbidding one
    and the same color).
    """
    d = problem.d
    owner: list[int] = [0] * (d + 1)  # color -> slot + 1, 0 when free

    def try_assign(slot: int, visited: set[int]) -> bool:
        # Free colors first, so unconstrained instances come out as the
        # identity; reassignment only happens when it must.
        for c in range(1, d + 1):
            if c != problem.forbidden[slot] and c not in visited and owner[c] == 0:
                visited.add(c)
                owner[c] = slot + 1
                return True
        for c in range(1, d + 1):
            if c == problem.forbidden[slot] or c in visited:
                continue
            visited.add(c)
            if try_assign(owner[c] - 1, visited):
                owner[c] = slot + 1
                return True
        return False

    for slot in range(d):
        if not try_assign(slot, set()):
            return None
    assignment = [0] * d
    for c in range(1, d + 1):
        assignment[owner[c] - 1] = c
    return PerfectMatching(tuple(assignment))


def brute_chromatic(g: Graph, max_n: int | None = None) -> int:
    """Exact chromatic number by trying k = 1, 2, ... colors.

    Vertices are ordered by decreasing degree and a new color is only
    opened when all used ones fail, which breaks the color-permutation
    symmetry.  Intended for small graphs; guarded by a capacity limit.
    """
    _check_capacity(g, CHROMATIC_DEFAULT_LIMIT, max_n, "brute_chromatic")
    if g.n == 0:
        return 0
    order = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    colors = [0] * g.n

    def place(i: int, used: int, k: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        taken = {colors[u] for u in g.adj[v]}
        for c in range(1, min(k, used + 1) + 1):
            if c in taken:
                continue
            colors[v] = c
            if place(i + 1, max(used, c), k):
                return True
        colors[v] = 0
        return False

    for k in range(1, g.n + 1):
        if place(0, 0, k):
            return k
    raise AssertionError("unreachable: n colors always suffice")


def min_odd_cycle_mis(g: Graph, max_n: int | None = None) -> OddCycleMis:
    """Among all maximum independent sets, one minimizing odd cycles left behind.

    Enumerates every maximum independent set in lexicographic order and
    counts odd cycles in the graph minus the set; ties keep the earlier
    set.  Requires a triangle-free graph of maximum degree <= 3 (so the
    leftover graph decomposes into paths and cycles) and is capacity
    limited: the enumeration can be exponential.
    """
    if g.max_degree > 3:
        raise PreconditionViolation("maximum degree exceeds 3", g.max_degree)
    triangle = find_clique_of_size(g, 3)
    if triangle is not None:
        raise PreconditionViolation("graph contains a triangle", triangle)
    _check_capacity(g, ENUMERATION_DEFAULT_LIMIT, max_n, "min_odd_cycle_mis")

    alpha = alpha_and_witness(g, max_n).alpha
    masks = g.masks
    best: tuple[int, tuple[int, ...]] | None = None

    def survey(chosen: tuple[int, ...]) -> None:
        nonlocal best
        rest, _ = g.induced_delete(chosen)
        count = path_cycle_decomposition(rest).odd_cycle_count
        if best is None or count < best[0]:
            best = (count, chosen)

    def walk(idx: int, chosen: list[int], banned: int, size: int) -> None:
        if size == alpha:
            # Maximum sets cannot extend; record and stop this branch.
            survey(tuple(chosen))
            return
        if idx == g.n:
            return
        above = ((1 << g.n) - 1) & ~((1 << idx) - 1)
        available = above & ~banned
        if size + _clique_cover_bound(masks, available) < alpha:
            return
        if not banned & (1 << idx):
            chosen.append(idx)
            walk(idx + 1, chosen, banned | masks[idx] | (1 << idx), size + 1)
            chosen.pop()
        walk(idx + 1, chosen, banned, size)

    walk(0, [], 0, 0)
    assert best is not None  # alpha is attained by at least one set
    return OddCycleMis(alpha, best[1], best[0])
