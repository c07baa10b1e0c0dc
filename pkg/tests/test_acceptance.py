"""Acceptance gate: the eight release criteria, one test and one printed line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the verdict lines.
The big corpus sweep is shared by the criteria that consume it.
"""

from __future__ import annotations

import time
from itertools import product

import pytest

from catlin.engine import base_case_color, catlin_color
from catlin.formats import decode_graph6, encode_graph6, parse_dimacs, write_dimacs
from catlin.generate import derive_seed, gnp, named
from catlin.graph import path_cycle_decomposition
from catlin.solvers import MatchingProblem, brute_chromatic, perfect_color_matching
from catlin.suite import run_base_case_suite, run_theorem_suite

THEOREM_COUNT = 10_000
BASE_COUNT = 1_000
TIME_BUDGET_SECONDS = 300.0


def conclude(number: int, description: str, problems: list[str]) -> None:
    verdict = "PASS" if not problems else "FAIL"
    line = f"[criterion {number}] {verdict} - {description}"
    if problems:
        line += f" ({problems[0]}{'; ...' if len(problems) > 1 else ''})"
    print(line, flush=True)
    assert not problems, problems[:5]


@pytest.fixture(scope="session")
def theorem_sweep():
    start = time.perf_counter()
    summary = run_theorem_suite(THEOREM_COUNT, compute_chi=True)
    elapsed = time.perf_counter() - start
    return summary, elapsed


@pytest.fixture(scope="session")
def base_sweep():
    return run_base_case_suite(BASE_COUNT)


def test_criterion_1_theorem_property_suite(theorem_sweep):
    summary, elapsed = theorem_sweep
    problems = []
    if summary.failed:
        problems.append(
            f"{summary.failed} failures, counterexamples {summary.counterexamples[:3]}"
        )
    if summary.passed == 0:
        problems.append("no instance actually ran")
    for record in summary.records:
        if record.outcome == "precondition":
            continue
        if not record.ok:
            problems.append(f"run {record.index} d={record.d}: {record.message}")
            break
    if elapsed >= TIME_BUDGET_SECONDS:
        problems.append(f"sweep took {elapsed:.1f}s, budget {TIME_BUDGET_SECONDS}s")
    conclude(
        1,
        f"{THEOREM_COUNT} random graphs x palettes 3,4,5: engine + certificate, "
        f"{summary.passed} colored runs all verified in {elapsed:.1f}s",
        problems,
    )


def test_criterion_2_chromatic_corollary(theorem_sweep):
    summary, _ = theorem_sweep
    problems = []
    checked = 0
    for record in summary.records:
        if record.outcome == "precondition":
            continue
        if record.chi is None:
            problems.append(f"run {record.index} d={record.d}: oracle skipped")
            break
        checked += 1
        if record.chi > record.d or record.colors_used > record.d:
            problems.append(
                f"run {record.index}: chi={record.chi}, used={record.colors_used},"
                f" d={record.d}"
            )
            break
    if checked == 0:
        problems.append("no instance checked")
    conclude(
        2,
        f"exact chromatic number <= d and colors used <= d on {checked} runs",
        problems,
    )


def test_criterion_3_base_case_augmentation(base_sweep):
    summary = base_sweep
    problems = []
    if summary.failed or summary.skipped:
        problems.append(f"{summary.failed} failed, {summary.skipped} skipped")
    for record in summary.records:
        if record.augmentations > record.initial_odd_cycles:
            problems.append(
                f"run {record.index}: {record.augmentations} swaps for"
                f" {record.initial_odd_cycles} initial odd cycles"
            )
            break
    fallbacks = sum(record.fallbacks for record in summary.records)
    conclude(
        3,
        f"{BASE_COUNT} triangle-free subcubic graphs through the base case,"
        f" swaps bounded by initial odd cycles, {fallbacks} fallback activations",
        problems,
    )


def test_criterion_4_golden_trace():
    problems = []
    g = named("pc5")
    result = base_case_color(g, initial_independent_set=(5, 6, 7, 8, 9))
    step = result.trace[0]
    if len(step.augmentations) != 1:
        problems.append(f"expected exactly one swap, saw {len(step.augmentations)}")
    else:
        swap = step.augmentations[0]
        if swap.path != (0, 5):
            problems.append(f"path {swap.path} != (0, 5)")
        if swap.result_set != (0, 6, 7, 8, 9):
            problems.append(f"swapped set {swap.result_set}")
    rest, relabel = g.induced_delete((0, 6, 7, 8, 9))
    decomp = path_cycle_decomposition(rest)
    if [relabel.to_original(p) for p in decomp.paths] != [(1, 2, 3, 4)]:
        problems.append("leftover is not the path 1-2-3-4")
    if relabel.to_original(decomp.isolated) != (5,):
        problems.append("vertex 5 should be isolated in the leftover")
    if decomp.odd_cycle_count != 0:
        problems.append("odd cycle survived the swap")
    if result.coloring.class_members(3) != (0, 6, 7, 8, 9):
        problems.append(f"class 3 is {result.coloring.class_members(3)}")
    if result.big_class_size != 5:
        problems.append(f"big class size {result.big_class_size} != 5")
    conclude(
        4,
        "pendant-cycle worked example: forced start set, one swap (0,5),"
        " leftover path + isolated vertex, class 3 of size 5",
        problems,
    )


def test_criterion_5_named_results():
    problems = []
    petersen = catlin_color(named("petersen"), 3)
    if petersen.big_class_size != 4:
        problems.append(f"petersen big class {petersen.big_class_size} != 4")
    if brute_chromatic(named("petersen")) != 3:
        problems.append("petersen chromatic number != 3")
    paw = catlin_color(named("paw"), 3)
    if paw.big_class_size != 2:
        problems.append(f"paw big class {paw.big_class_size} != 2")
    if paw.trace[0].case != "clique":
        problems.append(f"paw dispatched to {paw.trace[0].case}, not the clique case")
    k4 = catlin_color(named("k4"), 4)
    if k4.big_class_size != 1:
        problems.append(f"K_4 big class {k4.big_class_size} != 1")
    if [s.case for s in k4.trace] != ["clique"]:
        problems.append("K_4 should be one clique step over an empty remainder")
    conclude(
        5,
        "named graphs: Petersen 4 + chi 3, paw 2 via clique case, K_4 at d=4 -> 1",
        problems,
    )


def test_criterion_6_clique_alpha_bookkeeping(theorem_sweep):
    summary, _ = theorem_sweep
    problems = []
    clique_steps = 0
    for record in summary.records:
        if record.outcome == "precondition":
            continue
        steps = sum(
            count for case, count in record.cases.items() if case.startswith("clique")
        )
        clique_steps += steps
        # Corpus graphs have n <= 12, so every reduction is small enough
        # for the solver cross-check; a missing check is a failure.
        if record.alpha_checks != steps:
            problems.append(
                f"run {record.index} d={record.d}: {steps} clique steps,"
                f" {record.alpha_checks} alpha checks"
            )
            break
    if clique_steps == 0:
        problems.append("corpus exercised no clique reduction at all")
    conclude(
        6,
        f"independence-number bookkeeping re-proved by the exact solver on"
        f" {clique_steps} clique reductions",
        problems,
    )


def test_criterion_7_matching_exhaustive():
    problems = []
    checked = 0
    for d in (3, 4, 5):
        for forbidden in product((None, *range(1, d + 1)), repeat=d):
            checked += 1
            matching = perfect_color_matching(MatchingProblem(d, forbidden))
            blocked = all(f is not None for f in forbidden) and len(set(forbidden)) == 1
            if blocked:
                if matching is not None:
                    problems.append(f"{forbidden} should admit no matching")
                    break
            elif matching is None:
                problems.append(f"{forbidden} should admit a matching")
                break
            else:
                seen = sorted(matching.assignment)
                if seen != list(range(1, d + 1)):
                    problems.append(f"{forbidden} -> non-bijection {matching}")
                    break
                if any(c == f for c, f in zip(matching.assignment, forbidden)):
                    problems.append(f"{forbidden} -> forbidden color used")
                    break
        if problems:
            break
    conclude(
        7,
        f"clique-to-color matchings, all {checked} forbidden lists for d in 3..5:"
        " solvable exactly when some two constraints differ",
        problems,
    )


def test_criterion_8_codec_round_trips():
    problems = []
    literals = {"@": 1, "A_": 2, "A?": 2}
    for text, n in literals.items():
        g = decode_graph6(text)
        if g.n != n or encode_graph6(g) != text:
            problems.append(f"literal {text!r} did not round-trip")
    if tuple(decode_graph6("A_").edges()) != ((0, 1),):
        problems.append('"A_" should decode to a single edge')
    if decode_graph6("A?").edge_count != 0:
        problems.append('"A?" should decode to two isolated vertices')
    count = 0
    for i in range(1000):
        n = i % 41
        p = (1 + i % 9) / 10
        g = gnp(n, p, derive_seed(0xC0DEC, i))
        count += 1
        if decode_graph6(encode_graph6(g)).adj != g.adj:
            problems.append(f"graph6 round-trip failed at instance {i}")
            break
        if parse_dimacs(write_dimacs(g)).adj != g.adj:
            problems.append(f"DIMACS round-trip failed at instance {i}")
            break
    conclude(
        8,
        f"graph6 + DIMACS decode(encode(G)) identity on {count} random graphs"
        " and the hand-encoded literals",
        problems,
    )
