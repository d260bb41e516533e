"""Desk-scale experiment harness.

Exhaustive and seeded-random sweeps that verify the zero-cycle theorems at
their exact thresholds, probe the largest order admitting a zero-cycle-free
complete digraph, and search the two open questions.  Every experiment is
reproducible: random weights come from a splittable counter-based generator
keyed by (seed, instance index), exhaustive scans run in fixed shard order,
and reports are byte-stable apart from the timing block.

Exhaustive scans over complete-digraph weightings optionally prune by graph
automorphisms (vertex relabelings): only weight vectors that are
lexicographically minimal in their relabeling orbit are tested, which is
sound because zero-cycle-freeness is invariant under relabeling.
"""

from __future__ import annotations

import hashlib
import json
import multiprocessing
import random
import time
from dataclasses import dataclass, field
from itertools import combinations, permutations
from typing import Callable, Optional

from .errors import BudgetExceeded
from .graphs import (
    WeightedDigraph,
    WeightedGraph,
    check_cycle,
    graph_to_doc,
)
from .groups import GroupSpec, ResidueSet, classify_near_ap, is_near_ap, omega, shift_set
from .oracle import SearchBudget, find_zero_cycle
from .solver import build_extremal_undirected, theorem_main_solve
from .undirected import theorem_undirected_solve

_SHARD_SIZE = 1 << 16

OUTCOME_WITNESS = "witness_found"
OUTCOME_NONE = "exhausted_no_witness"
OUTCOME_BUDGET = "budget_exhausted"


@dataclass
class ExperimentConfig:
    """Parameters of one experiment; the seed is mandatory for random runs."""

    task: str
    k: Optional[int] = None
    n: Optional[int] = None
    strategy: str = "exhaustive"
    trials: Optional[int] = None
    seed: Optional[int] = None
    budget: Optional[int] = None
    jobs: int = 1
    prune: bool = True
    kmax: Optional[int] = None
    n_max: Optional[int] = None
    generator: Optional[str] = None
    which: Optional[str] = None
    space_cap: int = 2 ** 33
    output: Optional[str] = None

    def __post_init__(self):
        if self.strategy not in ("exhaustive", "random"):
            raise ValueError(f"unknown strategy {self.strategy!r}")
        if self.strategy == "random" and self.seed is None:
            raise ValueError("random strategy requires a seed")
        if self.jobs < 1:
            raise ValueError("jobs must be >= 1")

    def require_space(self, size: int) -> None:
        if self.strategy == "exhaustive" and size > self.space_cap:
            raise ValueError(
                f"exhaustive space of size {size} exceeds the cap {self.space_cap}; "
                "use --strategy random or raise the cap"
            )

    def to_doc(self) -> dict:
        # jobs is an execution detail, not an experiment parameter: reports
        # must be identical for serial and sharded runs
        doc = {
            "task": self.task,
            "strategy": self.strategy,
            "prune": self.prune,
            "space_cap": self.space_cap,
        }
        for key in ("k", "n", "trials", "seed", "budget", "kmax", "n_max", "generator",
                    "which"):
            val = getattr(self, key)
            if val is not None:
                doc[key] = val
        return doc


@dataclass
class BoundReport:
    """Outcome of one experiment, serializable deterministically."""

    task: dict
    outcome: str
    witness: Optional[dict] = None
    counters: dict = field(default_factory=dict)
    findings: list = field(default_factory=list)
    notes: list = field(default_factory=list)
    wall_time_s: float = 0.0

    def to_doc(self, include_timing: bool = True) -> dict:
        doc = {
            "task": self.task,
            "outcome": self.outcome,
            "witness": self.witness,
            "counters": self.counters,
            "findings": self.findings,
            "notes": self.notes,
        }
        if include_timing:
            doc["timing"] = {"wall_time_s": round(self.wall_time_s, 6)}
        return doc

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_doc(include_timing), sort_keys=True, indent=2)

    def exit_code(self) -> int:
        if self.outcome == OUTCOME_WITNESS:
            return 2
        if self.outcome == OUTCOME_BUDGET:
            return 3
        return 0


def child_rng(seed: int, index: int) -> random.Random:
    """Independent deterministic stream for instance ``index`` of run ``seed``."""
    digest = hashlib.blake2b(f"{seed}:{index}".encode(), digest_size=8).digest()
    return random.Random(int.from_bytes(digest, "big"))


def random_complete_digraph(group: GroupSpec, n: int, rng: random.Random) -> WeightedDigraph:
    order = group.order
    edges = {}
    for u in range(n):
        for v in range(n):
            if u != v:
                edges[(u, v)] = group.element_at(rng.randrange(order))
    return WeightedDigraph(group, tuple(range(n)), None, edges)


def random_complete_graph(group: GroupSpec, n: int, rng: random.Random) -> WeightedGraph:
    order = group.order
    vw = {v: group.element_at(rng.randrange(order)) for v in range(n)}
    edges = {}
    for u in range(n):
        for v in range(u + 1, n):
            edges[(u, v)] = group.element_at(rng.randrange(order))
    return WeightedGraph(group, tuple(range(n)), vw, edges)


def random_min_degree_graph(group: GroupSpec, n: int, min_deg: int,
                            rng: random.Random) -> WeightedGraph:
    """Random weighted graph on n vertices with minimum degree >= min_deg.

    Starts complete and removes shuffled edges while both endpoints stay
    above the bound, then assigns uniform vertex and edge weights.
    """
    if min_deg > n - 1:
        raise ValueError(f"min degree {min_deg} impossible on {n} vertices")
    present = {(u, v) for u in range(n) for v in range(u + 1, n)}
    degree = {v: n - 1 for v in range(n)}
    order = list(present)
    order.sort()
    rng.shuffle(order)
    for u, v in order:
        if degree[u] > min_deg and degree[v] > min_deg:
            present.discard((u, v))
            degree[u] -= 1
            degree[v] -= 1
    gorder = group.order
    vw = {v: group.element_at(rng.randrange(gorder)) for v in range(n)}
    edges = {e: group.element_at(rng.randrange(gorder)) for e in sorted(present)}
    return WeightedGraph(group, tuple(range(n)), vw, edges)


# ---------------------------------------------------------------------------
# Fast tables for exhaustive scans


def _ordered_pairs(n: int) -> list[tuple[int, int]]:
    return [(u, v) for u in range(n) for v in range(n) if u != v]


def _digraph_cycle_table(n: int, min_len: int = 2) -> list[tuple[int, ...]]:
    """Every simple cycle of the complete digraph K_n as a tuple of edge indices."""
    from .graphs import complete_digraph
    from .oracle import iter_simple_cycles

    pairs = _ordered_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    dummy = complete_digraph(GroupSpec.cyclic(2), n)
    cycles = []
    for cyc in iter_simple_cycles(dummy, min_len=min_len):
        verts = cyc.vertices
        eidx = [index[(verts[i], verts[i + 1])] for i in range(len(verts) - 1)]
        eidx.append(index[(verts[-1], verts[0])])
        cycles.append(tuple(eidx))
    return cycles


def _relabel_perms(n: int) -> list[tuple[int, ...]]:
    """Edge-index permutations induced by the non-identity vertex relabelings."""
    pairs = _ordered_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    perms = []
    for sigma in permutations(range(n)):
        if sigma == tuple(range(n)):
            continue
        perms.append(tuple(index[(sigma[u], sigma[v])] for (u, v) in pairs))
    return perms


def _is_canonical(w, perms) -> bool:
    for perm in perms:
        for j, pj in enumerate(perm):
            a, b = w[j], w[pj]
            if a < b:
                break
            if a > b:
                return False
    return True


def _iter_weightings(k: int, m: int, lo: int, hi: int):
    """Yield digit vectors lo..hi-1 of the k-ary odometer of length m."""
    digits = []
    x = lo
    for _ in range(m):
        x, r = divmod(x, k)
        digits.append(r)
    digits.reverse()
    w = list(digits)
    for _ in range(lo, hi):
        yield w
        i = m - 1
        while i >= 0:
            w[i] += 1
            if w[i] < k:
                break
            w[i] = 0
            i -= 1


def _shards(total: int) -> list[tuple[int, int]]:
    return [(lo, min(lo + _SHARD_SIZE, total)) for lo in range(0, total, _SHARD_SIZE)]


def _run_shards(worker: Callable, args_list: list, jobs: int) -> list:
    if jobs <= 1 or len(args_list) <= 1:
        return [worker(a) for a in args_list]
    with multiprocessing.Pool(min(jobs, len(args_list))) as pool:
        return pool.map(worker, args_list)


def _merge_scan(results: list) -> dict:
    merged = {"scanned": 0, "tested": 0, "witness_index": None, "witness": None}
    for res in results:
        merged["scanned"] += res["scanned"]
        merged["tested"] += res["tested"]
        if merged["witness_index"] is None and res["witness_index"] is not None:
            merged["witness_index"] = res["witness_index"]
            merged["witness"] = res["witness"]
    return merged


# -- f-bound worker ---------------------------------------------------------


def _fbound_shard(args) -> dict:
    k, n, lo, hi, prune = args
    m = n * (n - 1)
    cycles = _digraph_cycle_table(n)
    perms = _relabel_perms(n) if prune else []
    scanned = tested = 0
    for idx, w in enumerate(_iter_weightings(k, m, lo, hi)):
        scanned += 1
        if prune and not _is_canonical(w, perms):
            continue
        tested += 1
        hit = False
        for cyc in cycles:
            s = 0
            for e in cyc:
                s += w[e]
            if s % k == 0:
                hit = True
                break
        if not hit:
            return {"scanned": scanned, "tested": tested,
                    "witness_index": lo + idx, "witness": list(w)}
    return {"scanned": scanned, "tested": tested, "witness_index": None, "witness": None}


def _digraph_from_digits(k: int, n: int, digits) -> WeightedDigraph:
    pairs = _ordered_pairs(n)
    edges = {p: (digits[i] % k,) for i, p in enumerate(pairs)}
    return WeightedDigraph(GroupSpec.cyclic(k), tuple(range(n)), None, edges)


def probe_f_lower(k: int, n: int, cfg: ExperimentConfig) -> BoundReport:
    """Search Z_k-weightings of the complete digraph K_n for one with no zero cycle.

    Exhaustive mode certifies: no witness means every weighting of order n
    has a zero cycle.  Any witness is re-validated by the unlimited-budget
    oracle before the report is written.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    t0 = time.monotonic()
    m = n * (n - 1)
    counters: dict = {}
    witness_doc = None
    notes = []
    if cfg.strategy == "exhaustive":
        total = k ** m
        cfg.require_space(total)
        results = _run_shards(
            _fbound_shard, [(k, n, lo, hi, cfg.prune) for lo, hi in _shards(total)], cfg.jobs
        )
        merged = _merge_scan(results)
        counters = {"weightings_scanned": merged["scanned"],
                    "weightings_tested": merged["tested"]}
        outcome = OUTCOME_NONE
        if merged["witness"] is not None:
            g = _digraph_from_digits(k, n, merged["witness"])
            if find_zero_cycle(g) is not None:
                raise RuntimeError("scan produced an invalid zero-cycle-free witness")
            witness_doc = graph_to_doc(g)
            outcome = OUTCOME_WITNESS
            counters["witness_index"] = merged["witness_index"]
        else:
            notes.append(f"f({k}) < {n}: every Z_{k} weighting of K_{n} has a zero cycle")
    else:
        if cfg.trials is None:
            raise ValueError("random strategy requires --trials")
        outcome = OUTCOME_NONE
        tested = 0
        group = GroupSpec.cyclic(k)
        for i in range(cfg.trials):
            rng = child_rng(cfg.seed, i)
            g = random_complete_digraph(group, n, rng)
            tested += 1
            if find_zero_cycle(g, budget=_budget(cfg)) is None:
                witness_doc = graph_to_doc(g)
                outcome = OUTCOME_WITNESS
                counters["witness_trial"] = i
                break
        counters["weightings_tested"] = tested
    report = BoundReport(task=cfg.to_doc(), outcome=outcome, witness=witness_doc,
                         counters=counters, notes=notes, wall_time_s=time.monotonic() - t0)
    report.notes.append("exhaustive negatives are certificates at this order only; "
                        "they are evidence, not proof, for other orders")
    return report


def _budget(cfg: ExperimentConfig) -> Optional[SearchBudget]:
    return SearchBudget(max_nodes=cfg.budget) if cfg.budget else None


# -- question 1 -------------------------------------------------------------


_Q1_VALUES = (0, 1, -1)


def _q1_shard(args) -> dict:
    n, lo, hi, prune = args
    m = n * (n - 1)
    cycles = _digraph_cycle_table(n)
    perms = _relabel_perms(n) if prune else []
    ham_paths = []
    pairs = _ordered_pairs(n)
    index = {p: i for i, p in enumerate(pairs)}
    for perm in permutations(range(n)):
        ham_paths.append(tuple(index[(perm[i], perm[i + 1])] for i in range(n - 1)))
    scanned = tested = 0
    for idx, digits in enumerate(_iter_weightings(3, m, lo, hi)):
        scanned += 1
        if prune and not _is_canonical(digits, perms):
            continue
        tested += 1
        w = [_Q1_VALUES[d] for d in digits]
        ok = False
        for cyc in cycles:
            s = 0
            for e in cyc:
                s += w[e]
            if s == 0:
                ok = True
                break
        if not ok:
            for path in ham_paths:
                first = w[path[0]]
                if first == 0:
                    continue
                if all(w[e] == first for e in path):
                    ok = True
                    break
        if not ok:
            return {"scanned": scanned, "tested": tested,
                    "witness_index": lo + idx, "witness": list(digits)}
    return {"scanned": scanned, "tested": tested, "witness_index": None, "witness": None}


def _q1_validate(n: int, digits) -> bool:
    """Independent check of a question-1 counterexample candidate.

    True if the weighting really has no zero-weight cycle (integer sums)
    and no monochromatic nonzero Hamiltonian path; pure permutation-based
    enumeration, separate from the table scan.
    """
    pairs = _ordered_pairs(n)
    w = {p: _Q1_VALUES[digits[i]] for i, p in enumerate(pairs)}
    for size in range(2, n + 1):
        for subset in combinations(range(n), size):
            base = subset[0]
            for rest in permutations(subset[1:]):
                cyc = (base,) + rest
                total = sum(w[(cyc[i], cyc[(i + 1) % size])] for i in range(size))
                if total == 0:
                    return False
    for perm in permutations(range(n)):
        vals = [w[(perm[i], perm[i + 1])] for i in range(n - 1)]
        if vals[0] != 0 and all(x == vals[0] for x in vals):
            return False
    return True


def question1_search(n: int, cfg: ExperimentConfig) -> BoundReport:
    """Exhaustively test the zero-cycle / monochromatic-Hamiltonian-path disjunction.

    Weights range over {0, 1, -1} with ordinary integer addition.  A
    counterexample (neither a zero-weight cycle nor a Hamiltonian path of
    constant nonzero weight) is re-validated independently before being
    reported.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    t0 = time.monotonic()
    m = n * (n - 1)
    total = 3 ** m
    cfg.require_space(total)
    results = _run_shards(
        _q1_shard, [(n, lo, hi, cfg.prune) for lo, hi in _shards(total)], cfg.jobs
    )
    merged = _merge_scan(results)
    counters = {"weightings_scanned": merged["scanned"],
                "weightings_tested": merged["tested"]}
    witness_doc = None
    findings = []
    outcome = OUTCOME_NONE
    if merged["witness"] is not None:
        digits = merged["witness"]
        if not _q1_validate(n, digits):
            raise RuntimeError("question-1 candidate failed independent validation")
        pairs = _ordered_pairs(n)
        witness_doc = {
            "n": n,
            "edges": [[u, v, _Q1_VALUES[digits[i]]] for i, (u, v) in enumerate(pairs)],
        }
        outcome = OUTCOME_WITNESS
        counters["witness_index"] = merged["witness_index"]
        findings.append(f"counterexample at n={n}: the disjunction fails")
    else:
        findings.append(f"n={n}: every {{0,1,-1}} weighting satisfies the disjunction "
                        "(evidence, not proof)")
    return BoundReport(task=cfg.to_doc(), outcome=outcome, witness=witness_doc,
                       counters=counters, findings=findings,
                       wall_time_s=time.monotonic() - t0)


# -- undirected exhaustive tables -------------------------------------------


def _undirected_tables(g: WeightedGraph, min_len: int = 3):
    """Cycle table of an undirected graph: (vertex-index tuple, edge-index tuple)."""
    from .oracle import iter_simple_cycles

    zero_g = WeightedGraph(GroupSpec.cyclic(2), g.vertices,
                           None, {e: (0,) for e in g.edge_weight})
    edge_list = sorted(g.edge_weight)
    eindex = {e: i for i, e in enumerate(edge_list)}
    vindex = {v: i for i, v in enumerate(g.vertices)}
    cycles = []
    for cyc in iter_simple_cycles(zero_g, min_len=min_len):
        verts = cyc.vertices
        vidx = tuple(vindex[v] for v in verts)
        eidx = []
        for i in range(len(verts)):
            a, b = verts[i], verts[(i + 1) % len(verts)]
            eidx.append(eindex[(a, b) if a < b else (b, a)])
        cycles.append((vidx, tuple(eidx)))
    return edge_list, cycles


def _undirected_has_zero_cycle(vdigits, edigits, cycles, k) -> bool:
    for vidx, eidx in cycles:
        s = 0
        for i in vidx:
            s += vdigits[i]
        for i in eidx:
            s += edigits[i]
        if s % k == 0:
            return True
    return False


def _weighted_graph_from_digits(g: WeightedGraph, k: int, vdigits, edigits) -> WeightedGraph:
    group = GroupSpec.cyclic(k)
    edge_list = sorted(g.edge_weight)
    vw = {v: (vdigits[i] % k,) for i, v in enumerate(g.vertices)}
    ew = {e: (edigits[i] % k,) for i, e in enumerate(edge_list)}
    return WeightedGraph(group, g.vertices, vw, ew)


# -- theorem sweeps ----------------------------------------------------------


def verify_theorem_sweep(which: str, k: int, cfg: ExperimentConfig) -> BoundReport:
    """Verify a theorem at its exact threshold over many weightings.

    A failure would falsify the underlying theorem: the failing instance is
    dumped as the witness (expected count: zero, always).
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    t0 = time.monotonic()
    group = GroupSpec.cyclic(k)
    counters: dict = {"failures": 0}
    witness_doc = None
    findings: list = []

    try:
        if which == "main":
            n = cfg.n or (k + 2 * omega(k))
            counters["n"] = n
            fallbacks = 0
            trials = cfg.trials or 1000
            for i in range(trials):
                g = random_complete_digraph(group, n, child_rng(cfg.seed, i))
                cyc = find_zero_cycle(g, budget=_budget(cfg))
                trace: list = []
                solved = theorem_main_solve(g, budget=_budget(cfg), trace=trace)
                fallbacks += sum(1 for s in trace if s == "OracleFallback")
                if cyc is None or cyc.weight != group.zero() or solved.weight != group.zero():
                    counters["failures"] += 1
                    witness_doc = graph_to_doc(g)
                    findings.append(f"trial {i}: threshold instance without zero cycle")
                    break
            counters["trials"] = trials
            counters["solver_fallbacks"] = fallbacks
        elif which == "corollary":
            n = cfg.n or (k + 1 + 2 * omega(k))
            counters["n"] = n
            if cfg.strategy == "exhaustive":
                from .graphs import complete_graph

                base = complete_graph(group, n)
                edge_list, cycles = _undirected_tables(base, min_len=3)
                me = len(edge_list)
                total = k ** (n + me)
                cfg.require_space(total)
                tested = 0
                for digits in _iter_weightings(k, n + me, 0, total):
                    tested += 1
                    if not _undirected_has_zero_cycle(digits[:n], digits[n:], cycles, k):
                        counters["failures"] += 1
                        bad = _weighted_graph_from_digits(base, k, digits[:n], digits[n:])
                        if find_zero_cycle(bad, min_len=3) is not None:
                            raise RuntimeError("table scan disagreed with the oracle")
                        witness_doc = graph_to_doc(bad)
                        break
                counters["weightings_tested"] = tested
            else:
                trials = cfg.trials or 1000
                for i in range(trials):
                    g = random_complete_graph(group, n, child_rng(cfg.seed, i))
                    cyc = find_zero_cycle(g, min_len=3, budget=_budget(cfg))
                    if cyc is None:
                        counters["failures"] += 1
                        witness_doc = graph_to_doc(g)
                        break
                counters["trials"] = trials
        elif which == "undirected":
            min_deg = 2 * k - 1
            if cfg.strategy == "exhaustive":
                from .graphs import complete_graph

                n = cfg.n or 2 * k
                counters["n"] = n
                base = complete_graph(group, n)
                edge_list, cycles = _undirected_tables(base, min_len=3)
                me = len(edge_list)
                total = k ** (n + me)
                cfg.require_space(total)
                tested = 0
                for digits in _iter_weightings(k, n + me, 0, total):
                    tested += 1
                    g = _weighted_graph_from_digits(base, k, digits[:n], digits[n:])
                    cyc = theorem_undirected_solve(g, budget=_budget(cfg))
                    if cyc.weight != group.zero():
                        counters["failures"] += 1
                        witness_doc = graph_to_doc(g)
                        break
                counters["weightings_tested"] = tested
            else:
                trials = cfg.trials or 1000
                gen = cfg.generator or "complete"
                for i in range(trials):
                    rng = child_rng(cfg.seed, i)
                    if gen == "complete":
                        g = random_complete_graph(group, cfg.n or 2 * k, rng)
                    else:
                        n = rng.randrange(2 * k, (cfg.n_max or 8) + 1)
                        g = random_min_degree_graph(group, n, min_deg, rng)
                    cyc = theorem_undirected_solve(g, budget=_budget(cfg))
                    if cyc.weight != group.zero():
                        counters["failures"] += 1
                        witness_doc = graph_to_doc(g)
                        break
                counters["trials"] = trials
        else:
            raise ValueError(f"unknown theorem {which!r}")
    except BudgetExceeded as exc:
        return BoundReport(task=cfg.to_doc(), outcome=OUTCOME_BUDGET,
                           counters={**counters, "nodes": exc.nodes},
                           wall_time_s=time.monotonic() - t0)

    outcome = OUTCOME_WITNESS if counters["failures"] else OUTCOME_NONE
    if not counters["failures"]:
        findings.append(f"theorem '{which}' held on every instance at its threshold")
    return BoundReport(task=cfg.to_doc(), outcome=outcome, witness=witness_doc,
                       counters=counters, findings=findings,
                       wall_time_s=time.monotonic() - t0)


def verify_lemma_inc(kmax: int, cfg: Optional[ExperimentConfig] = None) -> BoundReport:
    """Exhaustively check the divisor/unit dichotomy for every subset of Z_k, k <= kmax.

    For each near arithmetic progression the classifier's claim is asserted
    directly against the brute-force shift set.
    """
    if kmax > 16:
        raise ValueError(f"kmax capped at 16, got {kmax}")
    cfg = cfg or ExperimentConfig(task="lemma-inc", kmax=kmax)
    t0 = time.monotonic()
    import math as _math

    per_k = {}
    violations = []
    for k in range(2, kmax + 1):
        stats = {"subsets": 0, "near_aps": 0, "divisor": 0, "unit": 0}
        for mask in range(1, 1 << k):
            members = frozenset(i for i in range(k) if mask >> i & 1)
            a_set = ResidueSet(k, members)
            stats["subsets"] += 1
            if not is_near_ap(a_set):
                continue
            stats["near_aps"] += 1
            cls = classify_near_ap(a_set)
            shifts = shift_set(a_set).members
            if cls.kind == "divisor":
                stats["divisor"] += 1
                if not all(x % cls.d == 0 for x in shifts):
                    violations.append({"k": k, "set": sorted(members), "kind": "divisor"})
            elif cls.kind == "unit":
                stats["unit"] += 1
                ok = (_math.gcd(cls.a, k) == 1
                      and shifts <= {0, cls.a, (k - cls.a) % k})
                if not ok:
                    violations.append({"k": k, "set": sorted(members), "kind": "unit"})
            else:
                violations.append({"k": k, "set": sorted(members), "kind": "not_near_ap"})
        per_k[str(k)] = stats
    outcome = OUTCOME_WITNESS if violations else OUTCOME_NONE
    findings = ([f"{len(violations)} dichotomy violations"] if violations
                else [f"dichotomy holds for every subset of Z_k, k <= {kmax}"])
    return BoundReport(task=cfg.to_doc(), outcome=outcome,
                       witness={"violations": violations} if violations else None,
                       counters={"per_k": per_k}, findings=findings,
                       wall_time_s=time.monotonic() - t0)


# -- question 2 --------------------------------------------------------------


def _min_degree_graphs(n: int, min_deg: int):
    """All labeled graphs on 0..n-1 with minimum degree >= min_deg."""
    pairs = list(combinations(range(n), 2))
    m = len(pairs)
    for mask in range(1 << m):
        degree = [0] * n
        for i in range(m):
            if mask >> i & 1:
                u, v = pairs[i]
                degree[u] += 1
                degree[v] += 1
        if all(d >= min_deg for d in degree):
            edges = {pairs[i]: (0,) for i in range(m) if mask >> i & 1}
            yield edges


def question2_probe(k: int, cfg: ExperimentConfig) -> BoundReport:
    """Search for a zero-cycle-free Z_k-weighted graph of minimum degree k+1.

    A witness would refute the conjectured degree bound.  The known
    boundary, the clique-join construction of minimum degree exactly k, is
    re-verified and its edge-count identity recorded.
    """
    if k < 2:
        raise ValueError(f"k must be >= 2, got {k}")
    t0 = time.monotonic()
    group = GroupSpec.cyclic(k)
    counters: dict = {"instances_tested": 0}
    findings: list = []
    notes: list = []
    witness_doc = None

    # the min-degree-k boundary construction stays zero-cycle-free
    tree_path = [(i, i + 1) for i in range(2)]
    boundary = build_extremal_undirected(k, tree_path)
    if find_zero_cycle(boundary, min_len=3) is not None:
        raise RuntimeError("boundary construction unexpectedly contains a zero cycle")
    t = len(tree_path) + 1
    edge_count = len(boundary.edge_weight)
    expect = k * boundary.n - k * (k + 1) // 2
    if edge_count != expect:
        raise RuntimeError(f"edge-count identity failed: {edge_count} != {expect}")
    notes.append(f"boundary: min degree {boundary.min_degree()} construction on "
                 f"{boundary.n} vertices is zero-cycle-free; edges = kn - k(k+1)/2 = {expect}")

    gen = cfg.generator or ("exhaustive-small" if cfg.strategy == "exhaustive" else "random")
    if gen == "exhaustive-small":
        n_max = cfg.n_max or (k + 3)
        for n in range(k + 2, n_max + 1):
            for edges in _min_degree_graphs(n, k + 1):
                base = WeightedGraph(group, tuple(range(n)), None, dict(edges))
                edge_list, cycles = _undirected_tables(base, min_len=3)
                me = len(edge_list)
                total = k ** (n + me)
                cfg.require_space(total)
                counters["graphs"] = counters.get("graphs", 0) + 1
                for digits in _iter_weightings(k, n + me, 0, total):
                    counters["instances_tested"] += 1
                    if not _undirected_has_zero_cycle(digits[:n], digits[n:], cycles, k):
                        bad = _weighted_graph_from_digits(base, k, digits[:n], digits[n:])
                        if find_zero_cycle(bad, min_len=3) is not None:
                            raise RuntimeError("table scan disagreed with the oracle")
                        witness_doc = graph_to_doc(bad)
                        findings.append(f"refutation: min degree {k + 1} graph on {n} "
                                        "vertices with no zero cycle")
                        break
                if witness_doc:
                    break
            if witness_doc:
                break
    elif gen == "random":
        trials = cfg.trials or 1000
        n_max = cfg.n_max or 8
        for i in range(trials):
            rng = child_rng(cfg.seed, i)
            n = rng.randrange(k + 2, n_max + 1)
            g = random_min_degree_graph(group, n, k + 1, rng)
            counters["instances_tested"] += 1
            if find_zero_cycle(g, min_len=3, budget=_budget(cfg)) is None:
                if find_zero_cycle(g, min_len=3) is not None:
                    continue  # budgeted miss, unlimited check found one
                witness_doc = graph_to_doc(g)
                findings.append(f"refutation: min degree {k + 1} graph with no zero cycle")
                break
        counters["trials"] = trials
    else:
        raise ValueError(f"unknown generator {gen!r}")

    outcome = OUTCOME_WITNESS if witness_doc else OUTCOME_NONE
    if not witness_doc:
        findings.append(f"no zero-cycle-free graph of min degree {k + 1} found "
                        "(evidence for the conjecture, not proof)")
    return BoundReport(task=cfg.to_doc(), outcome=outcome, witness=witness_doc,
                       counters=counters, findings=findings, notes=notes,
                       wall_time_s=time.monotonic() - t0)
