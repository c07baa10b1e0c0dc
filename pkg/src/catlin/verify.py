"""Independent checking of colorings and engine results.

The verifier trusts nothing about how a coloring was produced: it
rescans edges, recounts class sizes and recomputes the independence
number with the exact solver.  Failures are collected as human-readable
strings, each carrying a concrete witness.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .engine import CatlinResult, catlin_color
from .graph import Coloring, Graph
from .solvers import alpha_and_witness, brute_chromatic


@dataclass
class VerificationReport:
    """Everything a run can be judged by.

    ``proper`` reflects edge conflicts only; palette and bookkeeping
    problems show up in ``failures`` and flip ``catlin_ok`` instead.
    ``alpha`` and ``chi`` stay None unless the respective oracle ran.
    """

    proper: bool
    colors_used: int
    class_sizes: dict[int, int]
    alpha: int | None = None
    chi: int | None = None
    catlin_ok: bool | None = None
    failures: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "proper": self.proper,
            "colors_used": self.colors_used,
            "class_sizes": {str(c): s for c, s in sorted(self.class_sizes.items())},
            "alpha": self.alpha,
            "chi": self.chi,
            "catlin_ok": self.catlin_ok,
            "failures": list(self.failures),
        }


def verify_proper(g: Graph, coloring: Coloring, d: int) -> VerificationReport:
    """Check totality, palette bounds and edge conflicts by full scan."""
    failures: list[str] = []
    proper = True
    if coloring.n != g.n:
        failures.append(
            f"coloring covers {coloring.n} vertices, graph has {g.n}"
        )
        return VerificationReport(False, 0, {}, failures=failures)
    for v, c in enumerate(coloring.colors):
        if not 1 <= c <= d:
            failures.append(f"color out of palette: vertex {v} has color {c}")
    for u, v in g.edges():
        if coloring.colors[u] == coloring.colors[v]:
            proper = False
            failures.append(
                f"edge conflict: ({u}, {v}) both colored {coloring.colors[u]}"
            )
    return VerificationReport(
        proper=proper,
        colors_used=coloring.colors_used(),
        class_sizes=coloring.class_sizes(),
        failures=failures,
    )


def verify_catlin(g: Graph, result: CatlinResult, d: int) -> VerificationReport:
    """Full certification: properness plus the maximum-class claim.

    Recomputes the independence number, so inherits the exact solver's
    capacity limit.
    """
    report = verify_proper(g, result.coloring, d)
    if report.colors_used > d:
        report.failures.append(
            f"{report.colors_used} colors used, palette allows {d}"
        )
    mis = alpha_and_witness(g)
    report.alpha = mis.alpha
    big = result.big_class
    actual_size = report.class_sizes.get(big, 0)
    if actual_size != result.big_class_size:
        report.failures.append(
            f"class {big} has {actual_size} vertices, result claims"
            f" {result.big_class_size}"
        )
    if actual_size != mis.alpha:
        report.failures.append(
            f"class {big} has {actual_size} vertices, maximum independent"
            f" set has {mis.alpha}"
        )
    members = result.coloring.class_members(big)
    if not g.is_independent(members):
        report.failures.append(f"class {big} is not independent")
    report.catlin_ok = not report.failures
    return report


def verify_brooks(g: Graph, d: int) -> VerificationReport:
    """Check the chromatic-number corollary: chi(G) <= d, by construction and oracle.

    Runs the engine for the constructive bound and the brute-force
    chromatic number for the exact value; both must come in at most d.
    The maximum-class claim is not judged here, so ``catlin_ok`` stays
    None.
    """
    result = catlin_color(g, d)
    report = verify_proper(g, result.coloring, d)
    report.chi = brute_chromatic(g)
    if report.chi > d:
        report.failures.append(f"chromatic number {report.chi} exceeds {d}")
    if report.colors_used > d:
        report.failures.append(
            f"{report.colors_used} colors used, palette allows {d}"
        )
    return report
