import random

import pytest

from helpers import (
    perm_achieved_weights,
    perm_cycles,
    perm_cycle_weight,
    perm_has_zero_cycle,
    random_digraph,
    random_graph,
)
from zerocycle.errors import BudgetExceeded
from zerocycle.graphs import (
    WeightedDigraph,
    check_cycle,
    check_family,
    complete_digraph,
    path_weight,
)
from zerocycle.groups import GroupSpec, omega
from zerocycle.oracle import (
    SearchBudget,
    distinct_weight_paths,
    find_heavy_triple,
    find_zero_cycle,
    iter_simple_cycles,
    mono_hamiltonian_path,
)
from zerocycle.solver import build_extremal_digraph

Z5 = GroupSpec.cyclic(5)


def order4_lemma_failure_fixture():
    """The order-4 complete digraph (restricted to its stated edges) on which
    the length->=3 path-family statement fails: v=0, x=1, y=2, u=3 over Z_3."""
    z3 = GroupSpec.cyclic(3)
    edges = {
        (1, 2): (0,), (2, 1): (0,),
        (0, 1): (1,), (0, 2): (1,), (1, 3): (1,), (2, 3): (1,),
    }
    return WeightedDigraph(z3, (0, 1, 2, 3), None, edges)


class TestCycleEnumeration:
    def test_counts_match_permutation_enumerator(self):
        rng = random.Random(5)
        for n in (3, 4, 5):
            g = random_digraph(4, n, rng)
            mine = {c.vertices for c in iter_simple_cycles(g)}
            assert mine == perm_cycles(g)
        for n in (4, 5, 6):
            g = random_graph(3, n, rng)
            mine = {c.vertices for c in iter_simple_cycles(g)}
            assert mine == perm_cycles(g)

    def test_weights_match(self):
        g = random_digraph(6, 5, random.Random(8))
        for c in iter_simple_cycles(g):
            assert c.weight == perm_cycle_weight(g, c.vertices)

    def test_deterministic(self):
        g = random_digraph(5, 6, random.Random(2))
        a = [c.vertices for c in iter_simple_cycles(g)]
        b = [c.vertices for c in iter_simple_cycles(g)]
        assert a == b


class TestFindZeroCycle:
    def test_inverse_two_cycle(self):
        g = WeightedDigraph(Z5, (0, 1), None, {(0, 1): (1,), (1, 0): (4,)})
        w = find_zero_cycle(g)
        assert w is not None and w.vertices == (0, 1) and w.weight == (0,)

    def test_extremal_k5_has_none(self):
        g = build_extremal_digraph(5)
        assert sum(1 for _ in iter_simple_cycles(g)) == 84
        assert find_zero_cycle(g) is None

    def test_order4_fixture_min_len_3(self):
        g = order4_lemma_failure_fixture()
        assert find_zero_cycle(g, min_len=3) is None
        # and the only cycle at all is the zero 2-cycle x, y
        w = find_zero_cycle(g, min_len=2)
        assert w is not None and w.vertices == (1, 2)

    def test_negative_agrees_with_permutation_scan(self):
        rng = random.Random(13)
        for _ in range(40):
            g = random_digraph(7, 5, rng)
            assert (find_zero_cycle(g) is not None) == perm_has_zero_cycle(g)
        for _ in range(30):
            g = random_graph(4, 5, rng)
            assert (find_zero_cycle(g, min_len=3) is not None) == \
                perm_has_zero_cycle(g, min_len=3)

    def test_budget_raises_not_none(self):
        g = build_extremal_digraph(6)
        with pytest.raises(BudgetExceeded):
            find_zero_cycle(g, budget=SearchBudget(max_nodes=10))

    def test_stats_counter(self):
        g = build_extremal_digraph(4)
        stats = {}
        assert find_zero_cycle(g, stats=stats) is None
        assert stats["cycles_enumerated"] == sum(1 for _ in iter_simple_cycles(g))

    def test_threshold_smoke(self):
        # random weightings at the guaranteed order always contain a zero cycle
        for k in (2, 3, 4, 5, 6):
            n = k + 2 * omega(k)
            rng = random.Random(100 + k)
            for _ in range(30):
                g = random_digraph(k, n, rng)
                w = find_zero_cycle(g)
                assert w is not None
                check_cycle(g, w)
                assert w.weight == g.group.zero()


class TestDistinctWeightPaths:
    def test_single_path(self):
        g = complete_digraph(GroupSpec.cyclic(2), 3)
        found = distinct_weight_paths(g, 0, 2, 1)
        assert found.family is not None
        assert found.family.paths[0].vertices == (0, 1, 2)

    def test_detour_gives_two_weights(self):
        # w(xu) != w(xy) + w(yu) makes v,x,u and v,x,y,u distinct
        vals = {(1, 3): 2, (1, 2): 1, (2, 3): 0}
        g = complete_digraph(Z5, 4, lambda u, v: (vals.get((u, v), 0),))
        assert path_weight(g, (0, 1, 3)) != path_weight(g, (0, 1, 2, 3))
        found = distinct_weight_paths(g, 0, 3, 2)
        assert found.family is not None
        check_family(g, found.family, 2, 0, 3)

    def test_extremal_k4_shortfall(self):
        g = build_extremal_digraph(4)
        found = distinct_weight_paths(g, 0, 3, 4)
        assert found.family is None
        assert found.achieved == {(0,), (1,)}

    def test_achieved_matches_permutation_scan(self):
        rng = random.Random(21)
        for _ in range(20):
            g = random_digraph(5, 5, rng)
            found = distinct_weight_paths(g, 0, 4, 5)
            expected = perm_achieved_weights(g, 0, 4, min_order=3)
            assert found.family is not None or found.achieved == expected

    def test_avoid_internal(self):
        g = complete_digraph(Z5, 5, lambda u, v: ((u + 2 * v) % 5,))
        found = distinct_weight_paths(g, 0, 4, 1, avoid_internal=(1, 2))
        for p in found.family.paths:
            assert not set(p.vertices[1:-1]) & {1, 2}

    def test_budget_carries_partial(self):
        g = complete_digraph(Z5, 6, lambda u, v: ((u * v) % 5,))
        with pytest.raises(BudgetExceeded) as err:
            distinct_weight_paths(g, 0, 5, 5, budget=SearchBudget(max_nodes=5))
        assert err.value.partial is not None

    def test_rejects_unnormalized_directed(self):
        g = WeightedDigraph(Z5, (0, 1, 2), {0: (1,), 1: (0,), 2: (0,)},
                            {(u, v): (0,) for u in range(3) for v in range(3) if u != v})
        with pytest.raises(ValueError):
            distinct_weight_paths(g, 0, 2, 1)


class TestHeavyTriple:
    def test_all_zero_has_none(self):
        wp = {(u, v): (0,) for u in range(4) for v in range(4) if u != v}
        assert find_heavy_triple(wp, (1,), Z5) is None

    def test_definition_instance(self):
        wp = {(u, v): (0,) for u in range(3) for v in range(3) if u != v}
        wp[(0, 1)] = (1,)
        wp[(1, 2)] = (1,)
        wp[(0, 2)] = (4,)
        ht = find_heavy_triple(wp, (1,), Z5)
        assert ht is not None and (ht.x, ht.y, ht.z, ht.c) == (0, 1, 2, (1,))

    def test_rejects_out_of_range_value(self):
        wp = {(0, 1): (2,), (1, 0): (0,)}
        with pytest.raises(ValueError):
            find_heavy_triple(wp, (1,), Z5)

    def test_agrees_with_exhaustive_scan(self):
        rng = random.Random(31)
        group = GroupSpec.cyclic(7)
        vals = [(0,), (1,), (6,)]
        for _ in range(60):
            wp = {(u, v): rng.choice(vals)
                  for u in range(6) for v in range(6) if u != v}
            found = find_heavy_triple(wp, (1,), group)
            brute = [
                (x, y, z, c)
                for x in range(6) for y in range(6) for z in range(6)
                if len({x, y, z}) == 3
                for c in ((1,), (6,))
                if wp[(x, y)] == c and wp[(y, z)] == c
                and wp[(x, z)] == group.neg(c)
            ]
            assert (found is not None) == bool(brute)
            if found:
                assert (found.x, found.y, found.z, found.c) in brute


class TestMonoHamiltonianPath:
    def test_two_vertices(self):
        g = complete_digraph(Z5, 2, lambda u, v: (2,))
        p = mono_hamiltonian_path(g, (2,))
        assert p is not None and len(p.vertices) == 2

    def test_zero_dag_plus_constant(self):
        # zero edges descend (a DAG); all others weigh c: the ascending
        # order is a monochromatic Hamiltonian path
        g = complete_digraph(Z5, 5, lambda u, v: ((0,) if u > v else (2,)))
        p = mono_hamiltonian_path(g, (2,))
        assert p is not None
        for a, b in zip(p.vertices, p.vertices[1:]):
            assert g.weight(a, b) == (2,)

    def test_agrees_with_factorial_scan(self):
        from itertools import permutations

        rng = random.Random(41)
        for _ in range(30):
            vals = [(0,), (1,), (4,)]
            g = complete_digraph(Z5, 5, lambda u, v: rng.choice(vals))
            c = (1,)
            found = mono_hamiltonian_path(g, c)
            brute = any(
                all(g.weight(p[i], p[i + 1]) == c for i in range(4))
                for p in permutations(range(5))
            )
            assert (found is not None) == brute
            if found:
                for a, b in zip(found.vertices, found.vertices[1:]):
                    assert g.weight(a, b) == c

    def test_requires_complete(self):
        g = WeightedDigraph(Z5, (0, 1, 2), None, {(0, 1): (1,)})
        with pytest.raises(ValueError):
            mono_hamiltonian_path(g, (1,))
