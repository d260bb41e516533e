"""Ground-truth brute-force engines.

Simple-cycle and simple-path enumeration (exhaustive, deterministic), zero
cycle search, distinct-weight path families, heavy triples, and
monochromatic Hamiltonian paths.  Everything here trades asymptotics for
exactness: the intended scale is n <= 12.

Running out of budget raises BudgetExceeded; it is never conflated with a
negative answer.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import BudgetExceeded
from .graphs import (
    CycleWitness,
    Graph,
    Pair,
    PathFamily,
    PathWitness,
    WeightedDigraph,
    path_weight,
)
from .groups import GroupElem, GroupSpec


@dataclass(frozen=True)
class SearchBudget:
    """Caps for an enumeration: node count and optional wall-clock deadline."""

    max_nodes: Optional[int] = None
    deadline_s: Optional[float] = None

    def __post_init__(self):
        if self.max_nodes is not None and self.max_nodes < 1:
            raise ValueError(f"max_nodes must be >= 1, got {self.max_nodes}")


class _Meter:
    """Counts enumeration nodes against a budget."""

    __slots__ = ("budget", "nodes", "_t0")

    def __init__(self, budget: Optional[SearchBudget]):
        self.budget = budget
        self.nodes = 0
        self._t0 = time.monotonic() if budget and budget.deadline_s else None

    def tick(self, partial=None) -> None:
        self.nodes += 1
        b = self.budget
        if b is None:
            return
        if b.max_nodes is not None and self.nodes > b.max_nodes:
            raise BudgetExceeded(
                f"node budget {b.max_nodes} exhausted", nodes=self.nodes, partial=partial
            )
        if self._t0 is not None and time.monotonic() - self._t0 > b.deadline_s:
            raise BudgetExceeded(
                f"deadline {b.deadline_s}s exhausted", nodes=self.nodes, partial=partial
            )


def iter_simple_cycles(g: Graph, min_len: int = 0,
                       budget: Optional[SearchBudget] = None) -> Iterator[CycleWitness]:
    """Enumerate every simple cycle of g exactly once, deterministically.

    DFS rooted at each vertex in ascending order; a cycle is reported at the
    root that is its smallest vertex.  Undirected cycles are emitted in the
    orientation with second vertex smaller than last.  Weights include
    vertex weights.
    """
    directed = g.directed
    floor = 2 if directed else 3
    min_len = max(min_len, floor)
    meter = _Meter(budget)
    group = g.group

    for root in g.vertices:
        # path holds (vertex, weight-so-far incl. vertices and path edges)
        stack = [(root, group.add(group.zero(), g.vertex_weight[root]), (root,))]
        while stack:
            current, acc, path = stack.pop()
            meter.tick()
            if len(path) >= min_len and g.has_edge(current, root):
                if directed or path[1] < path[-1]:
                    yield CycleWitness(path, directed, group.add(acc, g.weight(current, root)))
            on_path = set(path)
            for nxt in reversed(g.successors(current)):
                if nxt <= root or nxt in on_path:
                    continue
                w = group.add(group.add(acc, g.weight(current, nxt)), g.vertex_weight[nxt])
                stack.append((nxt, w, path + (nxt,)))


def find_zero_cycle(g: Graph, min_len: int = 0, budget: Optional[SearchBudget] = None,
                    stats: Optional[dict] = None) -> Optional[CycleWitness]:
    """First simple cycle of length >= min_len with weight equal to the identity.

    Returns None only after exhausting every simple cycle; running out of
    budget raises BudgetExceeded instead.
    """
    zero = g.group.zero()
    count = 0
    found = None
    try:
        for cyc in iter_simple_cycles(g, min_len=min_len, budget=budget):
            count += 1
            if cyc.weight == zero:
                found = cyc
                break
    finally:
        if stats is not None:
            stats["cycles_enumerated"] = stats.get("cycles_enumerated", 0) + count
    return found


def iter_simple_paths(g: Graph, start: int, end: int, forbidden=(), min_order: int = 2,
                      budget: Optional[SearchBudget] = None,
                      partial=None) -> Iterator[PathWitness]:
    """Enumerate simple start--end paths in DFS order (neighbors ascending).

    ``forbidden`` vertices may not appear as internal vertices.  Weights
    include vertex weights.
    """
    if start == end:
        raise ValueError("path endpoints must differ")
    meter = _Meter(budget)
    group = g.group
    banned = set(forbidden) - {start, end}

    stack = [(start, group.add(group.zero(), g.vertex_weight[start]), (start,))]
    while stack:
        current, acc, path = stack.pop()
        meter.tick(partial=partial)
        if current == end:
            if len(path) >= min_order:
                yield PathWitness(path, acc)
            continue
        on_path = set(path)
        for nxt in reversed(g.successors(current)):
            if nxt in on_path or (nxt != end and nxt in banned):
                continue
            w = group.add(group.add(acc, g.weight(current, nxt)), g.vertex_weight[nxt])
            stack.append((nxt, w, path + (nxt,)))


@dataclass(frozen=True)
class PathSearch:
    """Result of a distinct-weight path family search.

    On success ``family`` holds r paths and ``achieved`` at least their
    weights; on failure ``family`` is None and ``achieved`` is the complete
    set of weights realizable by qualifying paths.
    """

    family: Optional[PathFamily]
    achieved: frozenset[GroupElem]


def distinct_weight_paths(g: Graph, v: int, u: int, r: int, min_order: int = 3,
                          avoid_internal=(), budget: Optional[SearchBudget] = None) -> PathSearch:
    """Search for r v--u paths of order >= min_order with pairwise-distinct weights.

    Enumerates simple v--u paths, keeping the first path found for each new
    weight; stops as soon as r distinct weights are seen.  If fewer exist
    the full achieved weight set is returned with no family.  Directed
    inputs must have zero vertex weights.
    """
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if v == u:
        raise ValueError("path endpoints must differ")
    if g.directed and not g.zero_vertex_weights():
        raise ValueError("directed path search requires normalized vertex weights")
    first: dict[GroupElem, PathWitness] = {}
    for path in iter_simple_paths(g, v, u, forbidden=avoid_internal, min_order=min_order,
                                  budget=budget, partial=first):
        if path.weight not in first:
            first[path.weight] = path
            if len(first) >= r:
                family = PathFamily(v, u, tuple(first.values()))
                return PathSearch(family, frozenset(first))
    return PathSearch(None, frozenset(first))


@dataclass(frozen=True)
class HeavyTriple:
    """Vertices (x, y, z) with w'(xy) = w'(yz) = c and w'(xz) = -c."""

    x: int
    y: int
    z: int
    c: GroupElem


def find_heavy_triple(wprime: dict[Pair, GroupElem], a: GroupElem,
                      group: GroupSpec) -> Optional[HeavyTriple]:
    """Scan all ordered triples of a derived weighting for a heavy triple.

    Every value of ``wprime`` must lie in {0, a, -a}; c ranges over {a, -a}.
    Deterministic: triples ascend lexicographically.
    """
    zero = group.zero()
    neg_a = group.neg(a)
    allowed = {zero, a, neg_a}
    for pair, w in wprime.items():
        if w not in allowed:
            raise ValueError(f"derived weight {w} on {pair} outside {{0, a, -a}}")
    verts = sorted({p for pair in wprime for p in pair})
    signs = ((a, neg_a), (neg_a, a))
    for x in verts:
        for y in verts:
            if y == x:
                continue
            for z in verts:
                if z == x or z == y:
                    continue
                wxy = wprime[(x, y)]
                for c, minus_c in signs:
                    if wxy == c and wprime[(y, z)] == c and wprime[(x, z)] == minus_c:
                        return HeavyTriple(x, y, z, c)
    return None


def mono_hamiltonian_path(g: WeightedDigraph, c: GroupElem,
                          budget: Optional[SearchBudget] = None) -> Optional[PathWitness]:
    """Backtracking search for a Hamiltonian path all of whose edges weigh c.

    Requires a complete digraph.  Deterministic: start vertices and
    extensions ascend.
    """
    if not g.directed or not g.is_complete:
        raise ValueError("mono_hamiltonian_path requires a complete digraph")
    n = g.n
    meter = _Meter(budget)

    def extend(path: list[int], used: set[int]) -> Optional[tuple[int, ...]]:
        meter.tick()
        if len(path) == n:
            return tuple(path)
        for nxt in g.vertices:
            if nxt in used or g.weight(path[-1], nxt) != c:
                continue
            path.append(nxt)
            used.add(nxt)
            got = extend(path, used)
            if got is not None:
                return got
            path.pop()
            used.remove(nxt)
        return None

    for start in g.vertices:
        got = extend([start], {start})
        if got is not None:
            return PathWitness(got, path_weight(g, got))
    return None
