"""Containment tests for blue path/cycle targets.

Everything here works on subgraph (not induced) containment.  The core
routines take a list of adjacency bitsets so the colouring search can call
them on a mutable blue graph without building Graph objects.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterator, Sequence

from sizeramsey.graph import EdgeSubset, Graph, _mask, iter_bits, popcount

MAX_MAXIMAL_SET_EDGES = 30


class InstanceTooLarge(ValueError):
    """Raised when a search guard on the instance size is exceeded."""


@dataclass(frozen=True)
class TargetPattern:
    """Blue target: a path on ``order`` vertices or a cycle on ``order`` vertices."""

    kind: str
    order: int

    def __post_init__(self):
        if self.kind == "path":
            if self.order < 2:
                raise ValueError("paths need at least 2 vertices")
        elif self.kind == "cycle":
            if self.order < 3:
                raise ValueError("cycles need at least 3 vertices")
        else:
            raise ValueError(f"unknown target kind {self.kind!r}")

    @classmethod
    def path(cls, m: int) -> "TargetPattern":
        return cls("path", m)

    @classmethod
    def cycle(cls, k: int) -> "TargetPattern":
        return cls("cycle", k)

    @classmethod
    def parse(cls, text: str) -> "TargetPattern":
        """Parse ``P3``, ``C4`` and similar (case-insensitive)."""
        m = re.fullmatch(r"\s*([PpCc])\s*_?(\d+)\s*", text)
        if not m:
            raise ValueError(f"cannot parse target {text!r}; expected e.g. P3 or C4")
        kind = "path" if m.group(1).upper() == "P" else "cycle"
        return cls(kind, int(m.group(2)))

    def __str__(self) -> str:
        return f"{'P' if self.kind == 'path' else 'C'}{self.order}"


P3 = TargetPattern.path(3)
C3 = TargetPattern.cycle(3)
C4 = TargetPattern.cycle(4)


# -- bitset kernels ----------------------------------------------------------

def _longest_from(adj: Sequence[int], v: int, avoid: int, cap: int) -> int:
    """Vertex count of the longest simple path starting at ``v`` that avoids
    the vertex mask ``avoid``; stops early once ``cap`` vertices are reached."""
    best = 1

    def dfs(u: int, used: int, length: int) -> bool:
        nonlocal best
        if length > best:
            best = length
            if best >= cap:
                return True
        for w in iter_bits(adj[u] & ~used):
            if dfs(w, used | (1 << w), length + 1):
                return True
        return False

    dfs(v, avoid | (1 << v), 1)
    return best


def _has_path(adj: Sequence[int], m: int) -> bool:
    """True iff the graph contains a path on ``m`` vertices."""
    if m == 2:
        return any(adj)
    if m == 3:
        return any(a & (a - 1) for a in adj)
    for v, a in enumerate(adj):
        if a and _longest_from(adj, v, 0, m) >= m:
            return True
    return False


def _has_path_between(adj: Sequence[int], s: int, t: int, edges: int, avoid: int = 0) -> bool:
    """True iff some simple s-t path has exactly ``edges`` edges."""
    target = 1 << t

    def dfs(u: int, used: int, left: int) -> bool:
        if left == 1:
            return bool(adj[u] & target)
        for w in iter_bits(adj[u] & ~used & ~target):
            if dfs(w, used | (1 << w), left - 1):
                return True
        return False

    return dfs(s, avoid | (1 << s), edges)


def _has_cycle(adj: Sequence[int], k: int) -> bool:
    n = len(adj)
    if k == 3:
        for u in range(n):
            a = adj[u]
            for v in iter_bits(a >> (u + 1) << (u + 1)):
                if a & adj[v]:
                    return True
        return False
    if k == 4:
        for u in range(n):
            for v in range(u + 1, n):
                if popcount(adj[u] & adj[v]) >= 2:
                    return True
        return False
    # a k-cycle through its smallest vertex s: s-w ... -s with k edges,
    # every other vertex larger than s
    for s in range(n):
        low = (1 << (s + 1)) - 1
        for w in iter_bits(adj[s] & ~low):
            if _has_path_between(adj, w, s, k - 1, avoid=low & ~(1 << s)):
                return True
    return False


def contains_in_adjacency(adj: Sequence[int], h: TargetPattern) -> bool:
    if h.kind == "path":
        return _has_path(adj, h.order)
    return _has_cycle(adj, h.order)


def extension_ok(adj: Sequence[int], u: int, v: int, h: TargetPattern) -> bool:
    """Given an h-free graph ``adj`` without edge uv, is it still h-free
    after adding uv?  Only copies through uv need checking."""
    bu, bv = 1 << u, 1 << v
    if h.kind == "path":
        m = h.order
        if m == 2:
            return False
        if m == 3:
            return not adj[u] and not adj[v]
        # a path through uv: a simple path from u avoiding v glued to a
        # disjoint one from v; enumerate the u-side, extend greedily on v-side
        return not _path_through_edge(adj, u, v, m)
    k = h.order
    if k == 3:
        return not (adj[u] & adj[v])
    if k == 4:
        for a in iter_bits(adj[u] & ~bv):
            if adj[a] & adj[v] & ~bu:
                return False
        return True
    return not _has_path_between(adj, u, v, k - 1)


def _path_through_edge(adj: Sequence[int], u: int, v: int, m: int) -> bool:
    def dfs(x: int, used: int, length: int) -> bool:
        # ``length`` vertices on the u-side so far, ending at x
        need = m - length
        if _longest_from(adj, v, used, need) >= need:
            return True
        for w in iter_bits(adj[x] & ~used):
            if dfs(w, used | (1 << w), length + 1):
                return True
        return False

    return dfs(u, (1 << u) | (1 << v), 1)


def mask_adjacency(g: Graph, mask: int) -> list[int]:
    adj = [0] * g.vertex_count
    for i in iter_bits(mask):
        a, b = g.edges[i]
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return adj


# -- public operations -------------------------------------------------------

def contains_target(g: Graph, h: TargetPattern, mask: int | None = None) -> bool:
    """True iff ``g`` (restricted to ``mask`` if given) has a subgraph
    isomorphic to ``h``."""
    adj = list(g.adjacency) if mask is None else mask_adjacency(g, mask)
    return contains_in_adjacency(adj, h)


def blue_extension_ok(g: Graph, blue: EdgeSubset | int, e: int, h: TargetPattern) -> bool:
    """Can edge ``e`` join the h-free blue set without creating a blue h?"""
    bmask = _mask(blue)
    assert not bmask >> e & 1, "edge already blue"
    adj = mask_adjacency(g, bmask)
    assert not contains_in_adjacency(adj, h), "blue set already contains the target"
    u, v = g.edges[e]
    return extension_ok(adj, u, v, h)


def maximal_target_free_sets(g: Graph, h: TargetPattern) -> Iterator[EdgeSubset]:
    """Yield every inclusion-maximal h-free edge subset exactly once.

    Branches on edges in index order (take, then skip); a skipped edge must
    end up blocked, otherwise the leaf is not maximal.
    """
    m = g.edge_count
    if m > MAX_MAXIMAL_SET_EDGES:
        raise InstanceTooLarge(f"instance too large: {m} edges > {MAX_MAXIMAL_SET_EDGES}")
    edges = g.edges
    adj = [0] * g.vertex_count
    skipped: list[int] = []

    def rec(i: int, blue: int) -> Iterator[int]:
        if i == m:
            for j in skipped:
                a, b = edges[j]
                if extension_ok(adj, a, b, h):
                    return
            yield blue
            return
        u, v = edges[i]
        if extension_ok(adj, u, v, h):
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            yield from rec(i + 1, blue | (1 << i))
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        skipped.append(i)
        yield from rec(i + 1, blue)
        skipped.pop()

    for bits in rec(0, 0):
        yield EdgeSubset(bits, m)
