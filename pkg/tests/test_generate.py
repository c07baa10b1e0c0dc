from __future__ import annotations

import pytest

from catlin.engine import validate_instance
from catlin.errors import PreconditionViolation
from catlin.generate import (
    NAMED_GRAPHS,
    SplitMix64,
    derive_seed,
    gnp,
    named,
    random_triangle_free_subcubic,
)
from catlin.solvers import find_clique_of_size


class TestSplitMix64:
    def test_reference_vector_seed_zero(self):
        # Published test vector for the standard SplitMix64 stream.
        rng = SplitMix64(0)
        assert [rng.next_u64() for _ in range(3)] == [
            0xE220A8397B1DCDAF,
            0x6E789E6AA1B965F4,
            0x06C45D188009454F,
        ]

    def test_seed_is_masked_to_64_bits(self):
        assert SplitMix64(1 << 64).next_u64() == SplitMix64(0).next_u64()

    def test_below_range(self):
        rng = SplitMix64(99)
        draws = [rng.below(7) for _ in range(200)]
        assert all(0 <= x < 7 for x in draws)
        assert len(set(draws)) == 7

    def test_below_rejects_empty_range(self):
        with pytest.raises(PreconditionViolation):
            SplitMix64(0).below(0)

    def test_derive_seed_is_stable_and_spread(self):
        first = [derive_seed(0xCA71, i) for i in range(100)]
        assert first == [derive_seed(0xCA71, i) for i in range(100)]
        assert len(set(first)) == 100
        assert derive_seed(1, 0) != derive_seed(2, 0)


class TestGnp:
    def test_probability_zero(self):
        assert gnp(5, 0.0, 7).edge_count == 0

    def test_probability_one(self):
        g = gnp(5, 1.0, 7)
        assert g.edge_count == 10

    def test_deterministic(self):
        a = gnp(8, 0.3, 123)
        b = gnp(8, 0.3, 123)
        assert a.adj == b.adj
        assert a.adj != gnp(8, 0.3, 124).adj

    def test_frozen_sample(self):
        # Pins the draw order (ascending pairs, one draw per pair).
        g = gnp(8, 0.3, 42)
        assert tuple(g.edges()) == (
            (0, 2), (0, 3), (0, 5), (0, 7), (1, 5), (2, 5),
            (2, 6), (3, 4), (3, 7), (4, 7), (5, 6),
        )

    def test_bad_arguments(self):
        with pytest.raises(PreconditionViolation):
            gnp(-1, 0.5, 0)
        with pytest.raises(PreconditionViolation):
            gnp(5, 1.5, 0)


class TestTriangleFreeSubcubic:
    def test_empty(self):
        assert random_triangle_free_subcubic(0, 3).n == 0

    def test_deterministic(self):
        a = random_triangle_free_subcubic(20, 5)
        b = random_triangle_free_subcubic(20, 5)
        assert a.adj == b.adj

    def test_always_valid_base_case_input(self):
        for i in range(200):
            g = random_triangle_free_subcubic(4 + i % 17, derive_seed(7, i))
            assert g.max_degree <= 3
            assert find_clique_of_size(g, 3) is None
            validate_instance(g, 3)

    def test_not_trivially_empty(self):
        g = random_triangle_free_subcubic(20, 5)
        assert g.edge_count > 0


class TestNamed:
    def test_five_cycle(self):
        g = named("c5")
        assert tuple(g.edges()) == ((0, 1), (0, 4), (1, 2), (2, 3), (3, 4))

    def test_paw(self):
        assert tuple(named("paw").edges()) == ((0, 1), (0, 2), (0, 3), (1, 2))

    def test_pendant_cycle_edge_set(self):
        want = {(0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
                (0, 5), (1, 6), (2, 7), (3, 8), (4, 9)}
        assert set(named("pc5").edges()) == want

    def test_petersen_structure(self):
        g = named("petersen")
        assert g.n == 10
        assert g.edge_count == 15
        assert all(g.degree(v) == 3 for v in range(10))
        for i in range(5):
            assert g.has_edge(i, (i + 1) % 5)          # outer cycle
            assert g.has_edge(5 + i, 5 + (i + 2) % 5)  # inner pentagram
            assert g.has_edge(i, i + 5)                # spokes
        assert find_clique_of_size(g, 3) is None

    def test_unknown_name(self):
        with pytest.raises(PreconditionViolation, match="petersen"):
            named("dodecahedron")

    def test_catalog_passes_graph_invariants(self):
        for name, g in NAMED_GRAPHS.items():
            g.validate()
            assert g.n > 0, name
