"""Independent brute-force oracles used to cross-check the package.

Everything here deliberately avoids the package's search machinery:
cycles and paths are enumerated from vertex subsets and permutations, and
weights are recomputed from scratch.
"""

from __future__ import annotations

from itertools import combinations, permutations

from zerocycle.graphs import WeightedDigraph, WeightedGraph
from zerocycle.groups import GroupSpec


def perm_cycles(g):
    """All simple cycles as canonical vertex tuples, via subset/permutation scan."""
    verts = g.vertices
    floor = 2 if g.directed else 3
    out = set()
    for size in range(floor, len(verts) + 1):
        for subset in combinations(verts, size):
            base = subset[0]
            for rest in permutations(subset[1:]):
                cyc = (base,) + rest
                if not g.directed and size >= 3 and cyc[1] > cyc[-1]:
                    continue
                if all(g.has_edge(cyc[i], cyc[(i + 1) % size]) for i in range(size)):
                    out.add(cyc)
    return out


def perm_cycle_weight(g, cyc):
    total = g.group.zero()
    for v in cyc:
        total = g.group.add(total, g.vertex_weight[v])
    for i in range(len(cyc)):
        total = g.group.add(total, g.weight(cyc[i], cyc[(i + 1) % len(cyc)]))
    return total


def perm_has_zero_cycle(g, min_len=0):
    zero = g.group.zero()
    floor = 2 if g.directed else 3
    for cyc in perm_cycles(g):
        if len(cyc) >= max(floor, min_len) and perm_cycle_weight(g, cyc) == zero:
            return True
    return False


def perm_paths(g, s, t, min_order=2):
    """All simple s--t paths as vertex tuples, via subset/permutation scan."""
    verts = [v for v in g.vertices if v not in (s, t)]
    out = []
    for size in range(max(0, min_order - 2), len(verts) + 1):
        for subset in combinations(verts, size):
            for mid in permutations(subset):
                path = (s,) + mid + (t,)
                if all(g.has_edge(path[i], path[i + 1]) for i in range(len(path) - 1)):
                    out.append(path)
    return out


def perm_path_weight(g, path):
    total = g.group.zero()
    for v in path:
        total = g.group.add(total, g.vertex_weight[v])
    for a, b in zip(path, path[1:]):
        total = g.group.add(total, g.weight(a, b))
    return total


def perm_achieved_weights(g, s, t, min_order=3):
    return {perm_path_weight(g, p) for p in perm_paths(g, s, t, min_order=min_order)}


def digraph_from_matrix(k, rows):
    """Complete digraph over Z_k from a weight matrix (None on the diagonal)."""
    n = len(rows)
    group = GroupSpec.cyclic(k)
    edges = {}
    for u in range(n):
        for v in range(n):
            if u != v:
                edges[(u, v)] = (rows[u][v] % k,)
    return WeightedDigraph(group, tuple(range(n)), None, edges)


def random_digraph(k, n, rng):
    group = GroupSpec.cyclic(k)
    edges = {}
    for u in range(n):
        for v in range(n):
            if u != v:
                edges[(u, v)] = (rng.randrange(k),)
    return WeightedDigraph(group, tuple(range(n)), None, edges)


def random_graph(k, n, rng, vertex_weights=True):
    group = GroupSpec.cyclic(k)
    vw = {v: (rng.randrange(k) if vertex_weights else 0,) for v in range(n)}
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            edges[(u, v)] = (rng.randrange(k),)
    return WeightedGraph(group, tuple(range(n)), vw, edges)
