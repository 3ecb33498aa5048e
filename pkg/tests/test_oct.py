import math
import random

import pytest

from qisbench.brute import (
    BudgetExceededError,
    brute_maximal_independent_sets,
    brute_oct,
)
from qisbench.graphs import (
    Graph,
    delete_vertices,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_random,
    is_bipartite,
)
from qisbench.oct_solver import (
    enumerate_maximal_is,
    eppstein_bound,
    eppstein_bound_ceil,
    min_oct,
)


class TestEnumerate:
    def test_known_families(self):
        assert set(enumerate_maximal_is(gen_complete(3))) == {
            frozenset({1}),
            frozenset({2}),
            frozenset({3}),
        }
        assert set(enumerate_maximal_is(gen_path(3))) == {
            frozenset({1, 3}),
            frozenset({2}),
        }
        c5 = enumerate_maximal_is(gen_cycle(5))
        assert len(c5) == 5 and all(len(s) == 2 for s in c5)

    def test_matches_subset_filter(self):
        for seed in range(25):
            g = gen_random(9, 0.1 + 0.03 * seed, seed)
            assert set(enumerate_maximal_is(g)) == set(
                brute_maximal_independent_sets(g)
            )

    def test_size_cap(self):
        g = gen_path(5)
        capped = enumerate_maximal_is(g, size_cap=2)
        assert set(capped) == {
            s for s in enumerate_maximal_is(g) if len(s) <= 2
        }

    def test_size_limit(self):
        with pytest.raises(BudgetExceededError):
            enumerate_maximal_is(Graph(31))


class TestEppstein:
    def test_known_values(self):
        assert eppstein_bound(9, 3) == 27
        assert eppstein_bound(7, 2) == 12
        assert eppstein_bound(9, 4) == pytest.approx(27.0)
        assert eppstein_bound_ceil(9, 4) == 27

    def test_fractional_branch(self):
        # 4k < n makes 3^(4k-n) 4^(n-3k) a non-integer rational.
        bound = eppstein_bound(9, 2)
        assert bound == pytest.approx(4.0 ** 3 / 3.0)
        assert eppstein_bound_ceil(9, 2) == 22

    def test_ceil_exact_on_cube_roots(self):
        for n in range(1, 60):
            value = eppstein_bound_ceil(n, n)
            assert (value - 1) ** 3 < 3**n <= value**3

    def test_bad_k(self):
        with pytest.raises(ValueError):
            eppstein_bound(5, 0)
        with pytest.raises(ValueError):
            eppstein_bound(5, 6)

    def test_counts_respect_bound(self):
        for seed in range(30):
            g = gen_random(12, 0.2 + 0.02 * seed, 50 + seed)
            sizes = sorted(len(s) for s in enumerate_maximal_is(g))
            for k in range(1, g.n + 1):
                assert sum(1 for s in sizes if s <= k) <= eppstein_bound_ceil(g.n, k)


class TestMinOct:
    def test_bipartite_is_empty(self):
        assert min_oct(gen_cycle(6)).transversal == frozenset()
        assert min_oct(gen_path(7)).transversal == frozenset()

    def test_odd_cycle(self):
        assert len(min_oct(gen_cycle(5)).transversal) == 1

    def test_complete_graph(self):
        assert len(min_oct(gen_complete(4)).transversal) == 2

    def test_disconnected_flagged(self):
        two_triangles = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        result = min_oct(two_triangles)
        assert result.split_by_component
        assert len(result.transversal) == 2

    def test_matches_brute(self):
        for seed in range(30):
            g = gen_random(9, 0.2 + 0.02 * seed, 100 + seed)
            got = min_oct(g)
            assert len(got.transversal) == brute_oct(g)[0]
            remainder, _ = delete_vertices(g, got.transversal)
            assert is_bipartite(remainder)[0]

    def test_quantum_inner_valid(self):
        # Randomized inner solver still yields a genuine transversal.
        for seed in range(10):
            g = gen_random(10, 0.5, 200 + seed)
            got = min_oct(g, inner="quantum", rng=random.Random(seed))
            remainder, _ = delete_vertices(g, got.transversal)
            assert is_bipartite(remainder)[0]

    def test_charge_accounting(self):
        g = gen_cycle(5)
        result = min_oct(g)
        # Five maximal sets, each of size 2, each charged 2^((5-2)/5).
        assert result.candidates_examined == 5
        assert result.charged_cost == pytest.approx(5 * 2 ** (3 / 5))

    def test_size_limit_and_bad_inner(self):
        with pytest.raises(BudgetExceededError):
            min_oct(Graph(26))
        with pytest.raises(ValueError):
            min_oct(gen_path(3), inner="magic")
