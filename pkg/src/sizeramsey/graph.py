"""Small simple graphs with bitset adjacency, matchings and canonical labelling.

Vertices are ``0..n-1`` with ``n <= 64``.  Edges are kept as a sorted tuple of
pairs ``(u, v)`` with ``u < v``; the position of a pair in that tuple is its
edge index, and edge subsets everywhere in the package are plain integer
bitmasks over those indices.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

MAX_VERTICES = 64


def popcount(x: int) -> int:
    return bin(x).count("1")


def iter_bits(x: int) -> Iterator[int]:
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


@dataclass(frozen=True)
class Graph:
    """Immutable simple undirected graph.

    ``edges`` is normalised on construction (pairs oriented ``u < v`` and
    sorted), so two Graphs compare equal iff they are the same labelled graph.
    """

    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    adjacency: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __init__(self, vertex_count: int, edges: Iterable[Sequence[int]] = ()):
        if not 1 <= vertex_count <= MAX_VERTICES:
            raise ValueError(f"vertex_count must be in 1..{MAX_VERTICES}, got {vertex_count}")
        norm = set()
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) out of range for {vertex_count} vertices")
            pair = (u, v) if u < v else (v, u)
            if pair in norm:
                raise ValueError(f"duplicate edge {pair}")
            norm.add(pair)
        ordered = tuple(sorted(norm))
        adj = [0] * vertex_count
        for u, v in ordered:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", ordered)
        object.__setattr__(self, "adjacency", tuple(adj))

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.edges)) - 1

    def degree(self, v: int) -> int:
        return popcount(self.adjacency[v])

    def degrees(self) -> list[int]:
        return [popcount(a) for a in self.adjacency]

    def neighbours(self, v: int) -> list[int]:
        return list(iter_bits(self.adjacency[v]))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def edge_index(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        try:
            return self._index[(u, v)]
        except KeyError:
            raise KeyError(f"no edge ({u}, {v})") from None

    @property
    def _index(self) -> dict[tuple[int, int], int]:
        idx = self.__dict__.get("_index_cache")
        if idx is None:
            idx = {e: i for i, e in enumerate(self.edges)}
            object.__setattr__(self, "_index_cache", idx)
        return idx

    def incident_mask(self, v: int) -> int:
        """Bitmask of the edge indices incident to ``v``."""
        m = 0
        for i, (a, b) in enumerate(self.edges):
            if a == v or b == v:
                m |= 1 << i
        return m

    def edge_subgraph(self, mask: int) -> "Graph":
        """The spanning subgraph keeping only the edges in ``mask``."""
        return Graph(self.vertex_count, [self.edges[i] for i in iter_bits(mask)])

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed to ``perm[v]``."""
        return Graph(self.vertex_count, [(perm[u], perm[v]) for u, v in self.edges])

    def __repr__(self) -> str:
        return f"Graph({self.vertex_count}, {list(self.edges)!r})"


@dataclass(frozen=True)
class EdgeSubset:
    """A set of edge indices of some host graph, stored as a bitmask."""

    bits: int
    host_edge_count: int

    def __post_init__(self):
        if self.bits < 0 or self.bits >> self.host_edge_count:
            raise ValueError(
                f"edge mask {self.bits:#x} has bits outside 0..{self.host_edge_count - 1}"
            )

    @classmethod
    def of(cls, g: Graph, indices: Iterable[int]) -> "EdgeSubset":
        bits = 0
        for i in indices:
            bits |= 1 << i
        return cls(bits, g.edge_count)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.bits)

    def __len__(self) -> int:
        return popcount(self.bits)

    def __contains__(self, i: int) -> bool:
        return bool(self.bits >> i & 1)


def _mask(s: EdgeSubset | int) -> int:
    return s.bits if isinstance(s, EdgeSubset) else int(s)


# -- named graphs used throughout tests and constructions --------------------

def path_graph(k: int) -> Graph:
    """P_k: path on k vertices."""
    return Graph(k, [(i, i + 1) for i in range(k - 1)])


def cycle_graph(k: int) -> Graph:
    """C_k: cycle on k vertices."""
    if k < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(k, [(i, (i + 1) % k) for i in range(k)])


def complete_graph(k: int) -> Graph:
    return Graph(k, [(i, j) for i in range(k) for j in range(i + 1, k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(i, a + j) for i in range(a) for j in range(b)])


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def k33_minus_edge() -> Graph:
    """K_{3,3} minus the edge joining the first vertex of each side."""
    return delete_edges(complete_bipartite(3, 3), 1 << 0)


def disjoint_union(*gs: Graph) -> Graph:
    edges = []
    offset = 0
    for g in gs:
        edges.extend((u + offset, v + offset) for u, v in g.edges)
        offset += g.vertex_count
    return Graph(offset, edges)


# -- structural operations ---------------------------------------------------

def delete_edges(g: Graph, s: EdgeSubset | int) -> Graph:
    """Remove the edges in ``s``; the vertex set is unchanged and the result
    gets fresh edge indices from its own sorted edge list."""
    mask = _mask(s)
    if mask >> g.edge_count:
        raise ValueError("edge subset not valid for this graph")
    return g.edge_subgraph(g.full_mask & ~mask)


def delete_vertex(g: Graph, v: int) -> Graph:
    if not 0 <= v < g.vertex_count:
        raise ValueError(f"vertex {v} out of range")
    if g.vertex_count == 1:
        raise ValueError("cannot delete the only vertex")
    shift = lambda x: x - (x > v)  # noqa: E731
    return Graph(
        g.vertex_count - 1,
        [(shift(a), shift(b)) for a, b in g.edges if a != v and b != v],
    )


def components(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components (isolated vertices included)."""
    seen = 0
    comps = []
    adj = g.adjacency
    for s in range(g.vertex_count):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in iter_bits(frontier):
                nxt |= adj[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(comp)
    return comps


def is_connected(g: Graph) -> bool:
    """True iff the graph has a single component; an isolated vertex in a
    graph of order >= 2 makes it disconnected."""
    return len(components(g)) == 1


def edges_connected(g: Graph, mask: int) -> bool:
    """True iff the edges in ``mask`` all lie in one component of the
    subgraph they span (vacuously true for the empty set)."""
    if not mask:
        return True
    adj = [0] * g.vertex_count
    touched = 0
    for i in iter_bits(mask):
        u, v = g.edges[i]
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        touched |= (1 << u) | (1 << v)
    start = touched & -touched
    comp = frontier = start
    while frontier:
        nxt = 0
        for v in iter_bits(frontier):
            nxt |= adj[v]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == touched


# -- maximum matching (Edmonds' blossom algorithm) ---------------------------

def max_matching_mates(n: int, nbrs: Sequence[Sequence[int]]) -> list[int]:
    """Maximum matching of a general graph given as neighbour lists.

    Returns ``mate`` with ``mate[v] == -1`` for unmatched vertices.  Classic
    O(V^3) augmenting-path search with blossom contraction via base labels.
    """
    mate = [-1] * n
    # greedy start keeps the number of augmentations small
    for u in range(n):
        if mate[u] == -1:
            for w in nbrs[u]:
                if mate[w] == -1:
                    mate[u], mate[w] = w, u
                    break

    for root in range(n):
        if mate[root] != -1 or not nbrs[root]:
            continue
        parent = [-1] * n
        base = list(range(n))
        used = [False] * n
        used[root] = True
        q = deque([root])
        found = -1

        def lca(a: int, b: int) -> int:
            seen = [False] * n
            while True:
                a = base[a]
                seen[a] = True
                if mate[a] == -1:
                    break
                a = parent[mate[a]]
            while True:
                b = base[b]
                if seen[b]:
                    return b
                b = parent[mate[b]]

        def mark_path(v: int, b: int, child: int, blossom: list[bool]) -> None:
            while base[v] != b:
                blossom[base[v]] = blossom[base[mate[v]]] = True
                parent[v] = child
                child = mate[v]
                v = parent[mate[v]]

        while q and found == -1:
            v = q.popleft()
            for to in nbrs[v]:
                if base[v] == base[to] or mate[v] == to:
                    continue
                if to == root or (mate[to] != -1 and parent[mate[to]] != -1):
                    cur = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, cur, to, blossom)
                    mark_path(to, cur, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = cur
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif parent[to] == -1:
                    parent[to] = v
                    if mate[to] == -1:
                        found = to
                        break
                    used[mate[to]] = True
                    q.append(mate[to])

        v = found
        while v != -1:
            pv = parent[v]
            ppv = mate[pv]
            mate[v], mate[pv] = pv, v
            v = ppv
    return mate


def maximum_matching(g: Graph, mask: int | None = None) -> tuple[int, ...]:
    """Edge indices of one maximum matching, optionally restricted to the
    edges in ``mask``."""
    if mask is None:
        mask = g.full_mask
    nbrs: list[list[int]] = [[] for _ in range(g.vertex_count)]
    for i in iter_bits(mask):
        u, v = g.edges[i]
        nbrs[u].append(v)
        nbrs[v].append(u)
    mate = max_matching_mates(g.vertex_count, nbrs)
    return tuple(sorted(g.edge_index(u, mate[u]) for u in range(g.vertex_count) if u < mate[u]))


def matching_number(g: Graph, mask: int | None = None) -> int:
    return len(maximum_matching(g, mask))


def is_matching(g: Graph, mask: int) -> bool:
    used = 0
    for i in iter_bits(mask):
        u, v = g.edges[i]
        b = (1 << u) | (1 << v)
        if used & b:
            return False
        used |= b
    return True


# -- canonical form ----------------------------------------------------------

def _refine(adj: Sequence[int], cells: list[int]) -> list[int]:
    """Equitable refinement of an ordered partition (cells are vertex masks).

    Cells split by their neighbour counts into every current cell; split
    pieces are ordered by that count vector, so the result depends only on
    the labelled input up to relabelling.
    """
    changed = True
    while changed:
        changed = False
        out = []
        for cell in cells:
            if cell & (cell - 1) == 0:
                out.append(cell)
                continue
            groups: dict[tuple[int, ...], int] = {}
            for v in iter_bits(cell):
                a = adj[v]
                sig = tuple(popcount(a & c) for c in cells)
                groups[sig] = groups.get(sig, 0) | (1 << v)
            if len(groups) > 1:
                changed = True
                out.extend(groups[s] for s in sorted(groups))
            else:
                out.append(cell)
        cells = out
    return cells


def _code(adj: Sequence[int], order: Sequence[int]) -> int:
    """Upper-triangle adjacency bits under the vertex order, row-major,
    earliest pair in the most significant position."""
    n = len(order)
    code = 0
    for i in range(n):
        ai = adj[order[i]]
        for j in range(i + 1, n):
            code = (code << 1) | (ai >> order[j] & 1)
    return code


def canonical_labeling(g: Graph) -> tuple[list[int], int]:
    """Return ``(order, code)``: ``order[i]`` is the vertex placed at position
    ``i`` and ``code`` is the minimal adjacency code over all orders admitted
    by individualisation-refinement.

    Vertices that are twins (same neighbourhood apart from each other) are
    swapped by an automorphism fixing the current partition, so only one
    vertex per twin class is individualised at each branch point.
    """
    n = g.vertex_count
    adj = g.adjacency
    by_deg: dict[int, int] = {}
    for v in range(n):
        d = popcount(adj[v])
        by_deg[d] = by_deg.get(d, 0) | (1 << v)
    start = _refine(adj, [by_deg[d] for d in sorted(by_deg)])

    best_code = -1
    best_order: list[int] = []

    def search(cells: list[int]) -> None:
        nonlocal best_code, best_order
        target = -1
        for i, c in enumerate(cells):
            if c & (c - 1):
                target = i
                break
        if target < 0:
            order = [c.bit_length() - 1 for c in cells]
            code = _code(adj, order)
            if best_code < 0 or code < best_code:
                best_code, best_order = code, order
            return
        cell = cells[target]
        reps: list[int] = []
        for v in iter_bits(cell):
            bv = 1 << v
            if any(
                (adj[v] & ~(1 << r)) == (adj[r] & ~bv) for r in reps
            ):
                continue
            reps.append(v)
        for v in reps:
            bv = 1 << v
            nxt = cells[:target] + [bv, cell & ~bv] + cells[target + 1:]
            search(_refine(adj, nxt))

    search(start)
    return best_order, best_code


def canonical_form(g: Graph) -> bytes:
    """Byte string equal for two graphs iff they are isomorphic."""
    n = g.vertex_count
    _, code = canonical_labeling(g)
    nbits = n * (n - 1) // 2
    return bytes([n]) + code.to_bytes((nbits + 7) // 8, "big")


def canonical_graph(g: Graph) -> Graph:
    """The canonically relabelled copy of ``g``."""
    order, _ = canonical_labeling(g)
    perm = [0] * g.vertex_count
    for pos, v in enumerate(order):
        perm[v] = pos
    return g.relabel(perm)
