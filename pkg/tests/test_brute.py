import itertools

import pytest

from qisbench.brute import (
    BudgetExceededError,
    OracleBudget,
    brute_alpha,
    brute_has_k_clique,
    brute_maximal_independent_sets,
    brute_oct,
    is_independent,
    is_maximal_is,
)
from qisbench.graphs import (
    Graph,
    complement,
    gen_complete,
    gen_cycle,
    gen_path,
    gen_petersen,
    gen_random,
)


class TestPredicates:
    def test_path_examples(self):
        p3 = gen_path(3)
        assert is_independent(p3, {1, 3}) and is_maximal_is(p3, {1, 3})
        assert is_independent(p3, {1}) and not is_maximal_is(p3, {1})
        assert not is_independent(gen_complete(3), {1, 2})

    def test_empty_set(self):
        assert is_independent(gen_path(3), set())
        assert not is_maximal_is(gen_path(3), set())
        assert is_maximal_is(Graph(0), set())


class TestBruteAlpha:
    def test_known_values(self):
        assert brute_alpha(gen_cycle(5))[0] == 2
        assert brute_alpha(gen_complete(7))[0] == 1
        assert brute_alpha(Graph(6))[0] == 6
        assert brute_alpha(gen_petersen())[0] == 4

    def test_witness_is_independent_and_sized(self):
        for seed in range(20):
            g = gen_random(10, 0.4, seed)
            size, witness = brute_alpha(g)
            assert len(witness) == size
            assert is_independent(g, witness)

    def test_budget_enforced(self):
        with pytest.raises(BudgetExceededError):
            brute_alpha(Graph(6), OracleBudget(alpha=5))

    def test_gallai_identity(self):
        # alpha(g) + (minimum vertex cover) = n, cover checked by subsets.
        for seed in range(30):
            g = gen_random(8, 0.5, 100 + seed)
            alpha = brute_alpha(g)[0]
            tau = min(
                size
                for size in range(g.n + 1)
                for cover in itertools.combinations(g.vertices(), size)
                if all(u in cover or v in cover for u, v in g.edges)
            )
            assert alpha + tau == g.n

    def test_complement_clique_duality(self):
        for seed in range(20):
            g = gen_random(8, 0.5, 200 + seed)
            alpha = brute_alpha(g)[0]
            comp = complement(g)
            assert brute_has_k_clique(comp, alpha)
            assert alpha == g.n or not brute_has_k_clique(comp, alpha + 1)


class TestBruteOct:
    def test_known_values(self):
        assert brute_oct(gen_cycle(4))[0] == 0
        assert brute_oct(gen_cycle(5))[0] == 1
        two_triangles = Graph(6, [(1, 2), (2, 3), (1, 3), (4, 5), (5, 6), (4, 6)])
        assert brute_oct(two_triangles)[0] == 2

    def test_witness_leaves_bipartite(self):
        from qisbench.graphs import delete_vertices, is_bipartite

        for seed in range(15):
            g = gen_random(8, 0.5, 300 + seed)
            _, witness = brute_oct(g)
            remainder, _ = delete_vertices(g, witness)
            assert is_bipartite(remainder)[0]

    def test_budget_enforced(self):
        with pytest.raises(BudgetExceededError):
            brute_oct(Graph(16))


class TestBruteClique:
    def test_known_values(self):
        assert brute_has_k_clique(gen_complete(5), 5)
        assert not brute_has_k_clique(gen_cycle(5), 3)
        assert not brute_has_k_clique(gen_petersen(), 3)  # girth 5
        assert brute_has_k_clique(gen_petersen(), 2)


class TestSubsetFilter:
    def test_matches_definition(self):
        g = gen_random(6, 0.5, 11)
        sets = brute_maximal_independent_sets(g)
        assert len(sets) == len(set(sets))
        assert all(is_maximal_is(g, s) for s in sets)
