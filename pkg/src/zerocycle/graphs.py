"""Weighted graph model: directed and undirected simple graphs with group
weights on vertices and edges, the weight transforms used by the solvers,
witness types with their checkers, and the JSON codec.

The weight of a subgraph (path or cycle) is the sum of the weights of its
vertices and edges.  Directed solvers assume vertex weights have been folded
into outgoing edges first (``normalize_vertex_weights``), which leaves every
cycle weight unchanged.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Optional, Union

from .errors import CodecError
from .groups import GroupElem, GroupSpec

Pair = tuple[int, int]


def _norm_vertex_weights(group, vertices, vertex_weight) -> dict[int, GroupElem]:
    if vertex_weight is None:
        return {v: group.zero() for v in vertices}
    out = {}
    for v in vertices:
        if v not in vertex_weight:
            raise ValueError(f"missing vertex weight for {v}")
        out[v] = group.make(vertex_weight[v])
    if len(vertex_weight) != len(out):
        extra = set(vertex_weight) - set(out)
        raise ValueError(f"vertex weights given for non-vertices {sorted(extra)}")
    return out


@dataclass(frozen=True, eq=False)
class WeightedDigraph:
    """A simple directed graph with weights in a finite abelian group.

    Vertices are integer labels (deletion keeps labels stable); edges are a
    partial map over ordered pairs.  Treat instances as immutable.
    """

    group: GroupSpec
    vertices: tuple[int, ...]
    vertex_weight: dict[int, GroupElem]
    edge_weight: dict[Pair, GroupElem]

    directed = True

    def __post_init__(self):
        verts = tuple(sorted(set(int(v) for v in self.vertices)))
        if len(verts) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        object.__setattr__(self, "vertices", verts)
        vset = set(verts)
        object.__setattr__(
            self, "vertex_weight", _norm_vertex_weights(self.group, verts, self.vertex_weight)
        )
        edges = {}
        for (u, v), w in self.edge_weight.items():
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) references unknown vertex")
            edges[(u, v)] = self.group.make(w)
        object.__setattr__(self, "edge_weight", edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def is_complete(self) -> bool:
        return len(self.edge_weight) == self.n * (self.n - 1)

    @cached_property
    def _out(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edge_weight:
            adj[u].append(v)
        return {u: tuple(sorted(vs)) for u, vs in adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return (u, v) in self.edge_weight

    def weight(self, u: int, v: int) -> GroupElem:
        try:
            return self.edge_weight[(u, v)]
        except KeyError:
            raise ValueError(f"no edge ({u}, {v})") from None

    def neighbors_out(self, u: int) -> tuple[int, ...]:
        return self._out[u]

    def successors(self, u: int) -> tuple[int, ...]:
        return self._out[u]

    def induced(self, keep: Iterable[int]) -> "WeightedDigraph":
        kset = set(keep)
        return WeightedDigraph(
            self.group,
            tuple(v for v in self.vertices if v in kset),
            {v: w for v, w in self.vertex_weight.items() if v in kset},
            {e: w for e, w in self.edge_weight.items() if e[0] in kset and e[1] in kset},
        )

    def without(self, *drop: int) -> "WeightedDigraph":
        dset = set(drop)
        return self.induced(v for v in self.vertices if v not in dset)

    def zero_vertex_weights(self) -> bool:
        zero = self.group.zero()
        return all(w == zero for w in self.vertex_weight.values())


@dataclass(frozen=True, eq=False)
class WeightedGraph:
    """A simple undirected graph with group weights on vertices and edges.

    Edges are stored with u < v.  Treat instances as immutable.
    """

    group: GroupSpec
    vertices: tuple[int, ...]
    vertex_weight: dict[int, GroupElem]
    edge_weight: dict[Pair, GroupElem]

    directed = False

    def __post_init__(self):
        verts = tuple(sorted(set(int(v) for v in self.vertices)))
        if len(verts) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        object.__setattr__(self, "vertices", verts)
        vset = set(verts)
        object.__setattr__(
            self, "vertex_weight", _norm_vertex_weights(self.group, verts, self.vertex_weight)
        )
        edges = {}
        for (u, v), w in self.edge_weight.items():
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if u not in vset or v not in vset:
                raise ValueError(f"edge ({u}, {v}) references unknown vertex")
            key = (u, v) if u < v else (v, u)
            if key in edges and edges[key] != self.group.make(w):
                raise ValueError(f"conflicting duplicate edge {key}")
            edges[key] = self.group.make(w)
        object.__setattr__(self, "edge_weight", edges)

    @property
    def n(self) -> int:
        return len(self.vertices)

    @cached_property
    def is_complete(self) -> bool:
        return len(self.edge_weight) == self.n * (self.n - 1) // 2

    @cached_property
    def _adj(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for u, v in self.edge_weight:
            adj[u].append(v)
            adj[v].append(u)
        return {u: tuple(sorted(vs)) for u, vs in adj.items()}

    def has_edge(self, u: int, v: int) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edge_weight

    def weight(self, u: int, v: int) -> GroupElem:
        key = (u, v) if u < v else (v, u)
        try:
            return self.edge_weight[key]
        except KeyError:
            raise ValueError(f"no edge {{{u}, {v}}}") from None

    def neighbors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def successors(self, u: int) -> tuple[int, ...]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        return len(self._adj[u])

    def min_degree(self) -> int:
        return min(self.degree(v) for v in self.vertices)

    def induced(self, keep: Iterable[int]) -> "WeightedGraph":
        kset = set(keep)
        return WeightedGraph(
            self.group,
            tuple(v for v in self.vertices if v in kset),
            {v: w for v, w in self.vertex_weight.items() if v in kset},
            {e: w for e, w in self.edge_weight.items() if e[0] in kset and e[1] in kset},
        )

    def without(self, *drop: int) -> "WeightedGraph":
        dset = set(drop)
        return self.induced(v for v in self.vertices if v not in dset)

    def zero_vertex_weights(self) -> bool:
        zero = self.group.zero()
        return all(w == zero for w in self.vertex_weight.values())


Graph = Union[WeightedDigraph, WeightedGraph]


def complete_digraph(group: GroupSpec, n: int, weight_fn=None) -> WeightedDigraph:
    """Complete digraph on vertices 0..n-1; weight_fn(u, v) supplies weights."""
    zero = group.zero()
    edges = {}
    for u in range(n):
        for v in range(n):
            if u != v:
                edges[(u, v)] = weight_fn(u, v) if weight_fn else zero
    return WeightedDigraph(group, tuple(range(n)), None, edges)


def complete_graph(group: GroupSpec, n: int, weight_fn=None, vertex_fn=None) -> WeightedGraph:
    """Complete undirected graph on 0..n-1 with optional weight functions."""
    zero = group.zero()
    vw = {v: (vertex_fn(v) if vertex_fn else zero) for v in range(n)}
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            edges[(u, v)] = weight_fn(u, v) if weight_fn else zero
    return WeightedGraph(group, tuple(range(n)), vw, edges)


# ---------------------------------------------------------------------------
# Witnesses


@dataclass(frozen=True)
class CycleWitness:
    """A simple cycle given by its vertex sequence (closing edge implied)."""

    vertices: tuple[int, ...]
    directed: bool
    weight: GroupElem

    def to_doc(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "directed": self.directed,
            "weight": list(self.weight),
        }


@dataclass(frozen=True)
class PathWitness:
    """A simple path given by its vertex sequence."""

    vertices: tuple[int, ...]
    weight: GroupElem

    @property
    def order(self) -> int:
        return len(self.vertices)

    def to_doc(self) -> dict:
        return {"vertices": list(self.vertices), "weight": list(self.weight)}


@dataclass(frozen=True)
class PathFamily:
    """Paths sharing endpoints (start, end) with pairwise-distinct weights."""

    start: int
    end: int
    paths: tuple[PathWitness, ...]

    @property
    def r(self) -> int:
        return len(self.paths)

    def weights(self) -> list[GroupElem]:
        return [p.weight for p in self.paths]

    def to_doc(self) -> dict:
        return {
            "start": self.start,
            "end": self.end,
            "paths": [p.to_doc() for p in self.paths],
        }


def path_weight(g: Graph, vertices) -> GroupElem:
    """Weight of the path subgraph: its vertices plus its edges."""
    verts = tuple(vertices)
    if len(set(verts)) != len(verts):
        raise ValueError(f"path revisits a vertex: {verts}")
    total = g.group.zero()
    for v in verts:
        total = g.group.add(total, g.vertex_weight[v])
    for a, b in zip(verts, verts[1:]):
        total = g.group.add(total, g.weight(a, b))
    return total


def cycle_weight(g: Graph, vertices) -> GroupElem:
    """Weight of the cycle subgraph: its vertices, path edges, and closing edge."""
    verts = tuple(vertices)
    if len(verts) < (2 if g.directed else 3):
        raise ValueError(f"cycle too short: {verts}")
    total = path_weight(g, verts)
    return g.group.add(total, g.weight(verts[-1], verts[0]))


def check_cycle(g: Graph, witness: CycleWitness, min_len: int = 0, forbidden=()) -> None:
    """Re-validate a cycle witness against the graph; raises ValueError on any defect."""
    if witness.directed != g.directed:
        raise ValueError("witness orientation does not match graph")
    verts = witness.vertices
    floor = 2 if g.directed else 3
    if len(verts) < max(floor, min_len):
        raise ValueError(f"cycle of length {len(verts)} below minimum {max(floor, min_len)}")
    bad = set(verts) & set(forbidden)
    if bad:
        raise ValueError(f"cycle touches forbidden vertices {sorted(bad)}")
    recomputed = cycle_weight(g, verts)
    if recomputed != witness.weight:
        raise ValueError(f"cycle weight mismatch: claimed {witness.weight}, actual {recomputed}")


def check_path(g: Graph, witness: PathWitness, min_order: int = 2) -> None:
    """Re-validate a path witness; raises ValueError on any defect."""
    if len(witness.vertices) < min_order:
        raise ValueError(f"path order {len(witness.vertices)} below minimum {min_order}")
    recomputed = path_weight(g, witness.vertices)
    if recomputed != witness.weight:
        raise ValueError(f"path weight mismatch: claimed {witness.weight}, actual {recomputed}")


def check_family(g: Graph, family: PathFamily, r: int, start: int, end: int,
                 min_order: int = 3) -> None:
    """Re-validate a distinct-weight path family; raises ValueError on any defect."""
    if family.start != start or family.end != end:
        raise ValueError(f"family endpoints ({family.start}, {family.end}) != ({start}, {end})")
    if len(family.paths) != r:
        raise ValueError(f"family has {len(family.paths)} paths, expected {r}")
    for p in family.paths:
        if p.vertices[0] != start or p.vertices[-1] != end:
            raise ValueError(f"path {p.vertices} does not run {start} -> {end}")
        check_path(g, p, min_order=min_order)
    weights = [p.weight for p in family.paths]
    if len(set(weights)) != len(weights):
        raise ValueError(f"family weights not pairwise distinct: {weights}")


# ---------------------------------------------------------------------------
# Weight transforms


def normalize_vertex_weights(g: WeightedDigraph) -> WeightedDigraph:
    """Fold every vertex weight into its outgoing edges and zero the vertices.

    Every directed cycle keeps its weight: a cycle uses exactly one outgoing
    edge per vertex it visits.
    """
    if not g.directed:
        raise ValueError("normalize_vertex_weights requires a directed graph")
    if g.zero_vertex_weights():
        return g
    edges = {
        (u, v): g.group.add(w, g.vertex_weight[u]) for (u, v), w in g.edge_weight.items()
    }
    return WeightedDigraph(g.group, g.vertices, None, edges)


def derived_weighting(g: WeightedDigraph, u: int, exclude=()) -> dict[Pair, GroupElem]:
    """w'(xy) = w(xy) + w(yu) - w(xu) over ordered pairs avoiding u and `exclude`.

    Cycle weights are preserved on the remaining vertices: the u-terms
    telescope around any cycle.
    """
    if not g.directed:
        raise ValueError("derived weighting requires a directed graph")
    if not g.zero_vertex_weights():
        raise ValueError("derived weighting requires zero vertex weights")
    skip = set(exclude) | {u}
    rest = [v for v in g.vertices if v not in skip]
    out = {}
    for x in rest:
        for y in rest:
            if x == y:
                continue
            if not (g.has_edge(x, y) and g.has_edge(y, u) and g.has_edge(x, u)):
                raise ValueError(f"missing edge among ({x}, {y}, {u})")
            out[(x, y)] = g.group.sub(
                g.group.add(g.weight(x, y), g.weight(y, u)), g.weight(x, u)
            )
    return out


def quotient_weighting(g: WeightedDigraph, u: int, d: int, exclude=()) -> WeightedDigraph:
    """Divide the derived weighting by d, producing a graph over Z_{k/d}.

    Requires every derived weight to be a multiple of d (as a residue).  A
    zero cycle of the quotient graph is a zero cycle of ``g`` on the same
    vertex sequence.
    """
    k = g.group.modulus()
    if d <= 1 or d >= k or k % d != 0:
        raise ValueError(f"d={d} is not a proper divisor > 1 of k={k}")
    derived = derived_weighting(g, u, exclude=exclude)
    edges = {}
    for (x, y), w in derived.items():
        if w[0] % d != 0:
            raise ValueError(
                f"derived weight {w[0]} on pair ({x}, {y}) is not a multiple of {d}"
            )
        edges[(x, y)] = (w[0] // d,)
    skip = set(exclude) | {u}
    verts = tuple(v for v in g.vertices if v not in skip)
    return WeightedDigraph(GroupSpec.cyclic(k // d), verts, None, edges)


# ---------------------------------------------------------------------------
# JSON codec
#
# Schema: {"directed": bool, "group": [k_1, ...], "n": int,
#          "vertex_weights": [[...residues...], ...],
#          "edges": [[u, v, [...residues...]], ...]}
# Vertices are 0-indexed; undirected edges are stored with u < v.


def graph_to_doc(g: Graph) -> dict:
    if g.vertices != tuple(range(g.n)):
        raise ValueError("only graphs on contiguous vertices 0..n-1 serialize")
    edges = sorted((u, v, list(w)) for (u, v), w in g.edge_weight.items())
    return {
        "directed": g.directed,
        "group": list(g.group.factors),
        "n": g.n,
        "vertex_weights": [list(g.vertex_weight[v]) for v in g.vertices],
        "edges": [[u, v, w] for u, v, w in edges],
    }


def serialize_graph(g: Graph) -> str:
    return json.dumps(graph_to_doc(g))


def _doc_residues(raw, group: GroupSpec, where: str) -> GroupElem:
    if not isinstance(raw, list) or len(raw) != len(group.factors):
        raise CodecError("schema", f"{where}: expected {len(group.factors)} residues")
    vals = []
    for r, f in zip(raw, group.factors):
        if not isinstance(r, int) or isinstance(r, bool):
            raise CodecError("schema", f"{where}: residue {r!r} is not an integer")
        if not 0 <= r < f:
            raise CodecError("residue-range", f"{where}: residue {r} out of range [0, {f})")
        vals.append(r)
    return tuple(vals)


def graph_from_doc(doc) -> Graph:
    if not isinstance(doc, dict):
        raise CodecError("schema", "document is not a JSON object")
    for key in ("directed", "group", "n", "vertex_weights", "edges"):
        if key not in doc:
            raise CodecError("schema", f"missing field {key!r}")
    directed = doc["directed"]
    if not isinstance(directed, bool):
        raise CodecError("schema", "field 'directed' must be a boolean")
    raw_group = doc["group"]
    if (not isinstance(raw_group, list) or not raw_group
            or not all(isinstance(f, int) and f >= 2 for f in raw_group)):
        raise CodecError("schema", "field 'group' must be a list of integers >= 2")
    group = GroupSpec(tuple(raw_group))
    n = doc["n"]
    if not isinstance(n, int) or n < 0:
        raise CodecError("schema", "field 'n' must be a nonnegative integer")
    raw_vw = doc["vertex_weights"]
    if not isinstance(raw_vw, list) or len(raw_vw) != n:
        raise CodecError("schema", f"vertex_weights must list {n} weight vectors")
    vertex_weight = {
        v: _doc_residues(raw, group, f"vertex_weights[{v}]") for v, raw in enumerate(raw_vw)
    }
    if not isinstance(doc["edges"], list):
        raise CodecError("schema", "field 'edges' must be a list")
    edges: dict[Pair, GroupElem] = {}
    for i, raw in enumerate(doc["edges"]):
        where = f"edges[{i}]"
        if not isinstance(raw, list) or len(raw) != 3:
            raise CodecError("schema", f"{where}: expected [u, v, weight]")
        u, v, raw_w = raw
        if not isinstance(u, int) or not isinstance(v, int) or not (0 <= u < n and 0 <= v < n):
            raise CodecError("schema", f"{where}: endpoints ({u}, {v}) out of range")
        if u == v:
            raise CodecError("self-loop", f"{where}: self-loop at vertex {u}")
        key = (u, v) if directed or u < v else (v, u)
        if key in edges:
            raise CodecError("duplicate-edge", f"{where}: duplicate edge ({u}, {v})")
        edges[key] = _doc_residues(raw_w, group, where)

    cls = WeightedDigraph if directed else WeightedGraph
    return cls(group, tuple(range(n)), vertex_weight, edges)


def parse_graph(text: str) -> Graph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodecError("malformed-json", f"invalid JSON at line {exc.lineno}: {exc.msg}") from exc
    return graph_from_doc(doc)
