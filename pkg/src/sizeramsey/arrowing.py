"""Deciding G -> (nK2, H) for a path or cycle H.

A red/blue colouring of G is good when the red graph has matching number
at most n-1 and the blue graph has no copy of H.  Enlarging the blue set can
only shrink the red matching number, so G fails to arrow iff some
inclusion-maximal H-free edge set B leaves ``nu(G - B) <= n - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from sizeramsey.graph import EdgeSubset, Graph, _mask, iter_bits, max_matching_mates, maximum_matching
from sizeramsey.patterns import (
    InstanceTooLarge,
    TargetPattern,
    contains_target,
    extension_ok,
)

MAX_SEARCH_EDGES = 30
MAX_ORACLE_EDGES = 18


@dataclass(frozen=True)
class EdgeColouring:
    host: Graph
    blue: int

    def __post_init__(self):
        EdgeSubset(self.blue, self.host.edge_count)

    @property
    def red(self) -> int:
        return self.host.full_mask & ~self.blue

    def colour_of(self, i: int) -> str:
        return "blue" if self.blue >> i & 1 else "red"

    def lines(self) -> list[str]:
        """``u-v:red|blue`` in edge-index order."""
        return [f"{u}-{v}:{self.colour_of(i)}" for i, (u, v) in enumerate(self.host.edges)]


@dataclass(frozen=True)
class SearchStats:
    nodes: int = 0
    maximal_sets: int = 0


@dataclass(frozen=True)
class ArrowingVerdict:
    arrows: bool
    witness: EdgeColouring | None = None
    stats: SearchStats = field(default_factory=SearchStats)


@dataclass(frozen=True)
class ColouringCheck:
    """Outcome of :func:`verify_colouring`.

    ``status`` is ``"good"``, ``"red_violation"`` (``matching`` then holds n
    disjoint red edges) or ``"blue_violation"``.
    """

    status: str
    matching: tuple[int, ...] | None = None

    @property
    def good(self) -> bool:
        return self.status == "good"


def verify_colouring(c: EdgeColouring, n: int, h: TargetPattern) -> ColouringCheck:
    """Classify a colouring; the red matching is checked before the blue target."""
    red_matching = maximum_matching(c.host, c.red)
    if len(red_matching) >= n:
        return ColouringCheck("red_violation", red_matching[:n])
    if contains_target(c.host, h, c.blue):
        return ColouringCheck("blue_violation")
    return ColouringCheck("good")


def _check_args(g: Graph, n: int, limit: int) -> None:
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    if g.edge_count > limit:
        raise InstanceTooLarge(f"instance too large: {g.edge_count} edges > {limit}")


def _red_nu(n_vertices: int, edges: Sequence[tuple[int, int]], mask: int) -> int:
    nbrs: list[list[int]] = [[] for _ in range(n_vertices)]
    for i in iter_bits(mask):
        u, v = edges[i]
        nbrs[u].append(v)
        nbrs[v].append(u)
    mate = max_matching_mates(n_vertices, nbrs)
    return sum(1 for x in mate if x >= 0) // 2


def has_good_colouring(g: Graph, n: int, h: TargetPattern) -> ArrowingVerdict:
    """Decide whether ``g -> (nK2, h)``; on failure return a good colouring.

    Depth-first over edges in index order, trying blue before red.  Blue is
    allowed only while the blue graph stays h-free.  A branch dies once the
    red edges fixed so far already carry a greedy matching of size n.  At a
    leaf the blue set must be maximal (every red edge would complete a blue
    h), then the exact red matching number decides.  The first good leaf in
    this order is returned.
    """
    _check_args(g, n, MAX_SEARCH_EDGES)
    m = g.edge_count
    nv = g.vertex_count
    edges = g.edges
    blue_adj = [0] * nv
    nodes = 0
    leaves = 0
    witness = -1

    def rec(i: int, blue: int, red: int, covered: int, greedy: int) -> bool:
        nonlocal nodes, leaves, witness
        nodes += 1
        if i == m:
            for j in iter_bits(red):
                a, b = edges[j]
                if extension_ok(blue_adj, a, b, h):
                    return False
            leaves += 1
            if _red_nu(nv, edges, red) <= n - 1:
                witness = blue
                return True
            return False
        u, v = edges[i]
        bit = 1 << i
        if extension_ok(blue_adj, u, v, h):
            blue_adj[u] |= 1 << v
            blue_adj[v] |= 1 << u
            done = rec(i + 1, blue | bit, red, covered, greedy)
            blue_adj[u] &= ~(1 << v)
            blue_adj[v] &= ~(1 << u)
            if done:
                return True
        ends = (1 << u) | (1 << v)
        if not covered & ends:
            if greedy + 1 >= n:
                return False
            return rec(i + 1, blue, red | bit, covered | ends, greedy + 1)
        return rec(i + 1, blue, red | bit, covered, greedy)

    found = rec(0, 0, 0, 0, 0)
    stats = SearchStats(nodes, leaves)
    if found:
        return ArrowingVerdict(False, EdgeColouring(g, witness), stats)
    return ArrowingVerdict(True, None, stats)


def _brute_nu_table(g: Graph) -> list[int]:
    """Matching number of every edge subset, by the recurrence on the lowest
    edge: skip it, or take it and drop every edge meeting it."""
    m = g.edge_count
    touching = []
    for i, (u, v) in enumerate(g.edges):
        t = 0
        for j, (a, b) in enumerate(g.edges):
            if a in (u, v) or b in (u, v):
                t |= 1 << j
        touching.append(t)
    nu = [0] * (1 << m)
    for mask in range(1, 1 << m):
        low = (mask & -mask).bit_length() - 1
        skip = nu[mask & ~(1 << low)]
        take = 1 + nu[mask & ~touching[low]]
        nu[mask] = skip if skip > take else take
    return nu


def naive_arrowing_oracle(g: Graph, n: int, h: TargetPattern) -> ArrowingVerdict:
    """Ground truth by trying all 2^|E| colourings.

    Independent of the search: its own matching recurrence and a full
    containment test on every blue set.  The witness is the good colouring
    with the smallest blue mask.
    """
    _check_args(g, n, MAX_ORACLE_EDGES)
    m = g.edge_count
    full = (1 << m) - 1
    nu = _brute_nu_table(g)
    examined = 0
    for blue in range(1 << m):
        if nu[full & ~blue] >= n:
            continue
        examined += 1
        if not contains_target(g, h, blue):
            return ArrowingVerdict(False, EdgeColouring(g, blue), SearchStats(1 << m, examined))
    return ArrowingVerdict(True, None, SearchStats(1 << m, examined))


def min_red_matching_oracle(g: Graph, h: TargetPattern) -> int:
    """Smallest red matching number over colourings with h-free blue part;
    ``g -> (nK2, h)`` iff this is at least n.  Brute force, shares nothing
    with the search."""
    if g.edge_count > MAX_ORACLE_EDGES:
        raise InstanceTooLarge(f"instance too large: {g.edge_count} edges > {MAX_ORACLE_EDGES}")
    full = g.full_mask
    nu = _brute_nu_table(g)
    for blue in sorted(range(full + 1), key=lambda b: nu[full & ~b]):
        if not contains_target(g, h, blue):
            return nu[full & ~blue]
    raise AssertionError("the empty blue set is always target-free")


def arrows(g: Graph, n: int, h: TargetPattern) -> bool:
    return has_good_colouring(g, n, h).arrows


def colouring_from_masks(g: Graph, blue: EdgeSubset | int) -> EdgeColouring:
    return EdgeColouring(g, _mask(blue))
