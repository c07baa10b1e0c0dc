"""Seeded graph generation: G(n, p), triangle-free subcubic, named graphs.

All randomness flows from a SplitMix64 stream, so a corpus is pinned
down by integer seeds alone and can be regenerated in any language that
implements the same mixer (the constants below are the standard ones).
Draws happen in a fixed documented order; acceptance corpora rely on
this never changing.
"""

from __future__ import annotations

from .errors import PreconditionViolation
from .graph import Graph, build_graph

_MASK64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15

# Rejection sampling proposes at most this many edges per vertex before
# giving up on a denser graph; the partial graph is still returned.
PROPOSALS_PER_VERTEX = 8


class SplitMix64:
    """The SplitMix64 generator (Steele, Lea and Flood's mixer).

    state += 0x9E3779B97F4A7C15; z = state;
    z = (z ^ z >> 30) * 0xBF58476D1CE4E5B9;
    z = (z ^ z >> 27) * 0x94D049BB133111EB;
    output z ^ z >> 31.
    """

    def __init__(self, seed: int):
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GOLDEN) & _MASK64
        z = self._state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform-ish draw in [0, bound); plain modulo, bias is negligible
        for the desk-scale bounds used here."""
        if bound <= 0:
            raise PreconditionViolation("bound must be positive", bound)
        return self.next_u64() % bound


def derive_seed(seed: int, index: int) -> int:
    """Per-instance seed for item ``index`` of a corpus rooted at ``seed``."""
    return SplitMix64((seed ^ (index * _GOLDEN)) & _MASK64).next_u64()


def gnp(n: int, p: float, seed: int) -> Graph:
    """Erdős–Rényi G(n, p): one draw per vertex pair, pairs in ascending order."""
    if n < 0:
        raise PreconditionViolation("vertex count must be nonnegative", n)
    if not 0.0 <= p <= 1.0:
        raise PreconditionViolation("edge probability must be in [0, 1]", p)
    rng = SplitMix64(seed)
    threshold = int(p * (1 << 64))
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.next_u64() < threshold:
                edges.append((u, v))
    return build_graph(n, edges)


def random_triangle_free_subcubic(n: int, seed: int) -> Graph:
    """Random graph with max degree <= 3 and no triangle, by rejection.

    Proposes 8 * n random vertex pairs (two draws each, consumed whether
    or not the pair is accepted); a pair becomes an edge only if both
    endpoints have degree < 3 and share no neighbor.
    """
    if n < 0:
        raise PreconditionViolation("vertex count must be nonnegative", n)
    rng = SplitMix64(seed)
    adj: list[set[int]] = [set() for _ in range(n)]
    for _ in range(PROPOSALS_PER_VERTEX * n):
        u = rng.below(n)
        v = rng.below(n)
        if u == v or v in adj[u]:
            continue
        if len(adj[u]) >= 3 or len(adj[v]) >= 3:
            continue
        if adj[u] & adj[v]:
            continue
        adj[u].add(v)
        adj[v].add(u)
    return Graph(n, tuple(tuple(sorted(nbrs)) for nbrs in adj))


def _cycle(k: int) -> Graph:
    return build_graph(k, [(i, (i + 1) % k) for i in range(k)])


def _complete(k: int) -> Graph:
    return build_graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def _complete_bipartite(a: int, b: int) -> Graph:
    return build_graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def _paw() -> Graph:
    # Triangle with one pendant edge.
    return build_graph(4, [(0, 1), (0, 2), (1, 2), (0, 3)])


def _pc5() -> Graph:
    # C_5 with one pendant on each cycle vertex.
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def _k4_pendants() -> Graph:
    # K_4 with one pendant on each vertex.
    edges = [(i, j) for i in range(4) for j in range(i + 1, 4)]
    edges += [(i, i + 4) for i in range(4)]
    return build_graph(8, edges)


def _prism() -> Graph:
    # Two triangles joined by a perfect matching.
    edges = [(0, 1), (0, 2), (1, 2), (3, 4), (3, 5), (4, 5)]
    edges += [(i, i + 3) for i in range(3)]
    return build_graph(6, edges)


def _petersen() -> Graph:
    # Outer 5-cycle, inner 5-cycle with step 2, spokes between them.
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return build_graph(10, edges)


def _cube() -> Graph:
    # Q_3: vertices are 3-bit strings, edges flip one bit.
    edges = []
    for v in range(8):
        for bit in (1, 2, 4):
            if v < v ^ bit:
                edges.append((v, v ^ bit))
    return build_graph(8, edges)


NAMED_GRAPHS: dict[str, Graph] = {
    "c4": _cycle(4),
    "c5": _cycle(5),
    "c6": _cycle(6),
    "c7": _cycle(7),
    "k3": _complete(3),
    "k4": _complete(4),
    "k5": _complete(5),
    "k33": _complete_bipartite(3, 3),
    "k44": _complete_bipartite(4, 4),
    "paw": _paw(),
    "pc5": _pc5(),
    "k4-pendants": _k4_pendants(),
    "prism": _prism(),
    "petersen": _petersen(),
    "cube": _cube(),
}


def named(name: str) -> Graph:
    """One of the built-in graphs; raises with the catalog on a bad name."""
    try:
        return NAMED_GRAPHS[name]
    except KeyError:
        known = ", ".join(sorted(NAMED_GRAPHS))
        raise PreconditionViolation(f"unknown graph {name!r}; known: {known}") from None
