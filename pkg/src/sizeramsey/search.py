"""Exhaustive search for the smallest arrowing graphs.

Graphs with a fixed number of edges are generated one isomorphism class at
a time.  Every connected graph with m >= 2 edges arises from a connected
graph with m - 1 edges by adding an edge, either between two existing
vertices (drop any cycle edge) or to a new pendant vertex (drop a leaf), so
level m is obtained by extending all of level m - 1 and deduplicating by
canonical form.  Representatives are the canonically relabelled graphs,
listed by (vertex count, canonical form); search results depend only on
that order.
"""

from __future__ import annotations

import logging
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations_with_replacement
from typing import Iterator

from sizeramsey import __version__
from sizeramsey.arrowing import has_good_colouring
from sizeramsey.decomposition import is_biconnected
from sizeramsey.graph import Graph, canonical_labeling, disjoint_union
from sizeramsey.graph6 import encode
from sizeramsey.patterns import InstanceTooLarge, TargetPattern

log = logging.getLogger(__name__)

MAX_ENUM_EDGES = 13
PRUNING_PROFILES = ("none", "c3_minimal_claims", "c3_aggressive")


@dataclass(frozen=True)
class EnumerationSpec:
    edge_count: int
    min_vertices: int | None = None
    max_vertices: int | None = None
    connected_only: bool = True
    pruning_profile: str = "none"
    override: bool = False

    def __post_init__(self):
        if self.edge_count < 1:
            raise ValueError("edge_count must be at least 1")
        if self.pruning_profile not in PRUNING_PROFILES:
            raise ValueError(f"unknown pruning profile {self.pruning_profile!r}")
        if self.vertex_range[0] > self.vertex_range[1]:
            raise ValueError("inconsistent vertex bounds")

    @property
    def vertex_range(self) -> tuple[int, int]:
        m = self.edge_count
        lo = math.ceil((1 + math.sqrt(1 + 8 * m)) / 2)
        hi = m + 1 if self.connected_only else 2 * m
        if self.min_vertices is not None:
            lo = max(lo, self.min_vertices)
        if self.max_vertices is not None:
            hi = min(hi, self.max_vertices)
        return lo, hi


def _canonical_rep(g: Graph) -> tuple[bytes, Graph]:
    order, code = canonical_labeling(g)
    n = g.vertex_count
    key = bytes([n]) + code.to_bytes((n * (n - 1) // 2 + 7) // 8, "big")
    perm = [0] * n
    for pos, v in enumerate(order):
        perm[v] = pos
    return key, g.relabel(perm)


def _sorted_classes(found: dict[bytes, Graph]) -> tuple[Graph, ...]:
    return tuple(found[k] for k in sorted(found, key=lambda k: (k[0], k)))


@lru_cache(maxsize=None)
def connected_classes(m: int) -> tuple[Graph, ...]:
    """One canonical representative per connected graph with m edges."""
    if m == 1:
        return (Graph(2, [(0, 1)]),)
    found: dict[bytes, Graph] = {}
    for parent in connected_classes(m - 1):
        n = parent.vertex_count
        edges = list(parent.edges)
        adj = parent.adjacency
        children = []
        for u in range(n):
            for v in range(u + 1, n):
                if not adj[u] >> v & 1:
                    children.append(Graph(n, edges + [(u, v)]))
            if n < 64:
                children.append(Graph(n + 1, edges + [(u, n)]))
        for child in children:
            key, rep = _canonical_rep(child)
            if key not in found:
                found[key] = rep
    log.debug("connected classes with %d edges: %d", m, len(found))
    return _sorted_classes(found)


@lru_cache(maxsize=None)
def all_classes(m: int) -> tuple[Graph, ...]:
    """One representative per graph with m edges and no isolated vertices."""
    found: dict[bytes, Graph] = {}
    for parts in _partitions(m):
        pools = []
        for size, mult in _multiplicities(parts):
            pools.append(list(combinations_with_replacement(connected_classes(size), mult)))
        for combo in _product(pools):
            g = disjoint_union(*[c for group in combo for c in group])
            key, rep = _canonical_rep(g)
            found.setdefault(key, rep)
    return _sorted_classes(found)


def _partitions(m: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    largest = m if largest is None else largest
    if m == 0:
        yield ()
        return
    for first in range(min(m, largest), 0, -1):
        for rest in _partitions(m - first, first):
            yield (first,) + rest


def _multiplicities(parts: tuple[int, ...]) -> list[tuple[int, int]]:
    out: dict[int, int] = {}
    for p in parts:
        out[p] = out.get(p, 0) + 1
    return sorted(out.items())


def _product(pools: list[list]) -> Iterator[tuple]:
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for tail in _product(pools[1:]):
            yield (head,) + tail


# -- pruning profiles for C3 lower bounds ------------------------------------

def satisfies_c3_minimal_claims(g: Graph) -> bool:
    """Min degree >= 2, max degree <= 3 and 2-connected: necessary for a
    minimal graph with at most 4n-2 edges arrowing (nK2, C3)."""
    degs = g.degrees()
    return min(degs) >= 2 and max(degs) <= 3 and is_biconnected(g)


def satisfies_c3_aggressive(g: Graph) -> bool:
    """Adds 3-regularity and every edge lying on a triangle."""
    if not satisfies_c3_minimal_claims(g):
        return False
    if any(d != 3 for d in g.degrees()):
        return False
    adj = g.adjacency
    return all(adj[u] & adj[v] for u, v in g.edges)


_FILTERS = {
    "none": None,
    "c3_minimal_claims": satisfies_c3_minimal_claims,
    "c3_aggressive": satisfies_c3_aggressive,
}


def enumerate_graphs(spec: EnumerationSpec) -> Iterator[Graph]:
    if spec.edge_count > MAX_ENUM_EDGES and not spec.override:
        raise InstanceTooLarge(
            f"enumeration of {spec.edge_count}-edge graphs exceeds the guard of "
            f"{MAX_ENUM_EDGES}; pass an explicit override"
        )
    lo, hi = spec.vertex_range
    pool = connected_classes(spec.edge_count) if spec.connected_only else all_classes(spec.edge_count)
    keep = _FILTERS[spec.pruning_profile]
    for g in pool:
        if lo <= g.vertex_count <= hi and (keep is None or keep(g)):
            yield g


# -- minimum arrowing size ---------------------------------------------------

@dataclass
class SearchRecord:
    target: TargetPattern
    n: int
    connected_only: bool
    status: str
    value: int | None = None
    lo: int | None = None
    hi: int | None = None
    witness: str | None = None
    graphs_examined: int = 0
    wall_time: float = 0.0
    engine_version: str = __version__

    STATUSES = ("exact", "lower_bound_only", "upper_bound_only")

    def __post_init__(self):
        if self.status not in self.STATUSES:
            raise ValueError(f"unknown status {self.status!r}")
        if self.status == "exact":
            if self.value is None:
                raise ValueError("exact record needs a value")
            self.lo = self.hi = self.value

    @property
    def key(self) -> tuple[str, int, bool]:
        return (str(self.target), self.n, self.connected_only)

    def same_result(self, other: "SearchRecord") -> bool:
        return (self.status, self.value, self.lo, self.hi) == (
            other.status, other.value, other.lo, other.hi)

    def describe(self) -> str:
        kind = "r_c" if self.connected_only else "r"
        head = f"{kind}({self.n}K2, {self.target})"
        if self.status == "exact":
            return f"{head} = {self.value}"
        if self.status == "lower_bound_only":
            return f"{head} >= {self.lo}"
        return f"{head} <= {self.hi}"


def _arrows_job(args: tuple[Graph, int, TargetPattern]) -> bool:
    g, n, h = args
    return has_good_colouring(g, n, h).arrows


def minimum_arrowing_size(
    target: TargetPattern,
    n: int,
    connected_only: bool = True,
    max_edges: int = 10,
    *,
    jobs: int = 1,
    pruning: str = "none",
    override: bool = False,
) -> SearchRecord:
    """Scan m = 1..max_edges and return the first m with an arrowing graph.

    The witness is the first arrowing graph in enumeration order.  The
    pruning profiles only apply to C3 at sizes m <= 4n - 2, where the
    structural conditions on a minimal arrowing graph hold; larger m are
    always scanned in full.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if pruning != "none" and not (target.kind == "cycle" and target.order == 3):
        raise ValueError("pruning profiles are only valid for the C3 target")
    start = time.perf_counter()
    examined = 0
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs > 1 else None
    try:
        for m in range(1, max_edges + 1):
            profile = pruning if m <= 4 * n - 2 else "none"
            graphs = list(enumerate_graphs(
                EnumerationSpec(m, connected_only=connected_only,
                                pruning_profile=profile, override=override)))
            if m < n:
                # fewer than n edges never hold a red nK2; the all-red colouring is good
                examined += len(graphs)
                continue
            jobs_args = [(g, n, target) for g in graphs]
            if pool is not None:
                verdicts = pool.map(_arrows_job, jobs_args, chunksize=max(1, len(graphs) // (4 * jobs)))
            else:
                verdicts = map(_arrows_job, jobs_args)
            for idx, hit in enumerate(verdicts):
                if hit:
                    examined += idx + 1
                    return SearchRecord(
                        target, n, connected_only, "exact", value=m,
                        witness=encode(graphs[idx]), graphs_examined=examined,
                        wall_time=time.perf_counter() - start,
                    )
            examined += len(graphs)
            log.info("m=%d: none of %d graphs arrows (%dK2, %s)", m, len(graphs), n, target)
    finally:
        if pool is not None:
            pool.shutdown(cancel_futures=True)
    return SearchRecord(
        target, n, connected_only, "lower_bound_only", lo=max_edges + 1,
        graphs_examined=examined, wall_time=time.perf_counter() - start,
    )


def check_exact_record(rec: SearchRecord) -> list[str]:
    """Problems with an exact record's witness (empty list when sound)."""
    from sizeramsey.graph import is_connected
    from sizeramsey.graph6 import decode

    if rec.status != "exact":
        return []
    if rec.witness is None:
        return ["exact record without witness"]
    g = decode(rec.witness)
    problems = []
    if g.edge_count != rec.value:
        problems.append(f"witness has {g.edge_count} edges, record says {rec.value}")
    if rec.connected_only and not is_connected(g):
        problems.append("witness is not connected")
    if g.edge_count <= 30 and not has_good_colouring(g, rec.n, rec.target).arrows:
        problems.append("witness does not arrow")
    return problems


def count_classes(m: int, connected_only: bool = True) -> int:
    return len(connected_classes(m) if connected_only else all_classes(m))

