"""Block structure, deletable edge sets, end-cuts and explicit good colourings.

These are executable forms of the structural steps used in lower-bound
arguments for r̂_c(nK2, P3) and r̂_c(nK2, C3).  :func:`heuristic_refuter`
composes them into a sound but incomplete search for good colourings: every
colouring it returns has been checked, and returning nothing proves nothing.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from sizeramsey.graph import (
    EdgeSubset,
    Graph,
    _mask,
    components,
    edges_connected,
    is_connected,
    is_matching,
    iter_bits,
    matching_number,
    popcount,
)
from sizeramsey.patterns import TargetPattern, contains_target, extension_ok


# -- blocks ------------------------------------------------------------------

@dataclass(frozen=True)
class Block:
    vertices: frozenset[int]
    edges: int  # edge-index mask in the host graph

    @property
    def size(self) -> int:
        return popcount(self.edges)

    @property
    def is_k2(self) -> bool:
        return len(self.vertices) == 2

    def is_cycle(self) -> bool:
        return len(self.vertices) >= 3 and self.size == len(self.vertices)


@dataclass(frozen=True)
class BlockDecomposition:
    blocks: tuple[Block, ...]
    cut_vertices: frozenset[int]
    end_blocks: tuple[int, ...]
    # block-cut tree: cut vertex -> indices of the blocks containing it
    tree: dict[int, tuple[int, ...]] = field(compare=False)

    @property
    def non_cut_vertices(self) -> frozenset[int]:
        allv = frozenset().union(*(b.vertices for b in self.blocks))
        return allv - self.cut_vertices

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b.vertices]


def block_decompose(g: Graph) -> BlockDecomposition:
    """Biconnected components by the Hopcroft-Tarjan edge-stack method."""
    if not is_connected(g):
        raise ValueError("block decomposition needs a connected graph")
    n = g.vertex_count
    adj = g.adjacency
    disc = [-1] * n
    low = [0] * n
    stack: list[tuple[int, int]] = []
    blocks: list[Block] = []
    cuts: set[int] = set()
    timer = 0

    def visit(u: int, parent: int) -> None:
        nonlocal timer
        disc[u] = low[u] = timer
        timer += 1
        children = 0
        for w in iter_bits(adj[u]):
            if disc[w] == -1:
                children += 1
                stack.append((u, w))
                visit(w, u)
                low[u] = min(low[u], low[w])
                if low[w] >= disc[u]:
                    if parent != -1 or children > 1:
                        cuts.add(u)
                    verts: set[int] = set()
                    emask = 0
                    while True:
                        a, b = stack.pop()
                        verts.update((a, b))
                        emask |= 1 << g.edge_index(a, b)
                        if (a, b) == (u, w):
                            break
                    blocks.append(Block(frozenset(verts), emask))
            elif w != parent and disc[w] < disc[u]:
                stack.append((u, w))
                low[u] = min(low[u], disc[w])

    if n > 1:
        visit(0, -1)
    blocks.sort(key=lambda b: (min(b.vertices), sorted(b.vertices)))
    tree = {c: tuple(i for i, b in enumerate(blocks) if c in b.vertices) for c in sorted(cuts)}
    ends = tuple(i for i, b in enumerate(blocks) if len(b.vertices & cuts) == 1)
    return BlockDecomposition(tuple(blocks), frozenset(cuts), ends, tree)


def cut_vertices_brute(g: Graph) -> set[int]:
    """Cut vertices by deleting each vertex and counting components."""
    base = len(components(g))
    out = set()
    for v in range(g.vertex_count):
        keep = [x for x in range(g.vertex_count) if x != v]
        if not keep:
            continue
        idx = {x: i for i, x in enumerate(keep)}
        h = Graph(len(keep), [(idx[a], idx[b]) for a, b in g.edges if v not in (a, b)])
        if len(components(h)) > base:
            out.add(v)
    return out


def is_biconnected(g: Graph) -> bool:
    """2-connected: connected, at least 3 vertices, no cut vertex."""
    if g.vertex_count < 3 or not is_connected(g):
        return False
    return not block_decompose(g).cut_vertices


# -- deletable edge sets -----------------------------------------------------

def deletable_partition(g: Graph, e1: EdgeSubset | int) -> tuple[int, int] | None:
    """Split ``e1`` into (star E2, matching E3) with the remaining edges
    connected and nonadjacent to E3; ``None`` if no split works.

    For a fixed star centre it is best to put every edge of e1 at that
    centre into E2, so trying each centre (and the empty star) is complete.
    """
    mask = _mask(e1)
    rest = g.full_mask & ~mask
    if not edges_connected(g, rest):
        return None
    rest_vertices = 0
    for i in iter_bits(rest):
        a, b = g.edges[i]
        rest_vertices |= (1 << a) | (1 << b)
    for c in list(range(g.vertex_count)) + [None]:
        star = 0 if c is None else mask & g.incident_mask(c)
        if c is not None and not star:
            continue
        e3 = mask & ~star
        if not is_matching(g, e3):
            continue
        if any(rest_vertices >> a & 1 or rest_vertices >> b & 1
               for a, b in (g.edges[i] for i in iter_bits(e3))):
            continue
        return star, e3
    return None


def is_deletable_edge_set(g: Graph, e1: EdgeSubset | int) -> bool:
    return deletable_partition(g, e1) is not None


# -- end-cuts ----------------------------------------------------------------

@dataclass(frozen=True)
class EndCutProfile:
    """Local shape at an end-cut ``vertex``.

    ``t1`` counts neighbours in the parent block (0 at the root), ``t2`` the
    K2 blocks hanging at the vertex, and ``cycle_paths`` lists, for each
    cycle block, the path left after removing the vertex, in traversal order.
    """

    vertex: int
    t1: int
    t2: int
    cycle_paths: tuple[tuple[int, ...], ...] = ()
    other_blocks: int = 0
    descendants: frozenset[int] = frozenset()
    is_root: bool = False
    p_override: tuple[int, ...] | None = None

    @classmethod
    def from_counts(cls, t1: int, t2: int, p: tuple[int, ...]) -> "EndCutProfile":
        """Arithmetic-only profile (no host graph)."""
        if any(pi < 1 for pi in p):
            raise ValueError("cycle blocks have at least 3 vertices, so p_i >= 1")
        return cls(-1, t1, t2, p_override=tuple(p))

    @property
    def t(self) -> int:
        return len(self.p)

    @property
    def p(self) -> tuple[int, ...]:
        if self.p_override is not None:
            return self.p_override
        return tuple(len(path) - 1 for path in self.cycle_paths)

    @property
    def x(self) -> int:
        """Number of edges the end-cut colouring colours."""
        return self.t1 + self.t2 + 2 * self.t + sum(self.p)

    @property
    def y(self) -> int:
        """Red matching number of that colouring."""
        return 1 + sum((pi + 1) // 3 for pi in self.p)


def descendants_brute(g: Graph, root: int, v: int) -> set[int]:
    """Vertices u != v all of whose u-root paths pass through v."""
    if v == root:
        return set(range(g.vertex_count)) - {v}
    keep = [x for x in range(g.vertex_count) if x != v]
    idx = {x: i for i, x in enumerate(keep)}
    h = Graph(len(keep), [(idx[a], idx[b]) for a, b in g.edges if v not in (a, b)])
    comp_of_root = next(c for c in components(h) if c >> idx[root] & 1)
    return {x for x in keep if not comp_of_root >> idx[x] & 1}


def _cycle_path(g: Graph, block: Block, v: int) -> tuple[int, ...]:
    """Walk the cycle ``block`` from v's smaller neighbour to its other one."""
    nbrs = sorted(w for w in block.vertices if g.has_edge(v, w))
    path = [nbrs[0]]
    prev = v
    while path[-1] != nbrs[1]:
        cur = path[-1]
        nxt = next(w for w in sorted(block.vertices)
                   if w != prev and w != v and g.has_edge(cur, w))
        prev = cur
        path.append(nxt)
    return tuple(path)


def find_end_cuts(g: Graph, root: int, dec: BlockDecomposition | None = None) -> list[EndCutProfile]:
    """End-cuts relative to the cut vertex ``root`` with their profiles.

    The block-cut tree is rooted at ``root``; the descendants of a cut vertex
    are the vertices strictly below it, and its parent block is the block it
    was reached through.
    """
    dec = dec or block_decompose(g)
    if not dec.cut_vertices:
        raise ValueError("graph is 2-connected: there are no cut vertices")
    if root not in dec.cut_vertices:
        raise ValueError(f"root {root} is not a cut vertex")
    parent_block: dict[int, int | None] = {root: None}
    order = [root]
    children: dict[int, list[int]] = {}
    seen_blocks: set[int] = set()
    i = 0
    while i < len(order):
        c = order[i]
        i += 1
        kids = []
        for b in dec.tree[c]:
            if b in seen_blocks:
                continue
            seen_blocks.add(b)
            kids.append(b)
            for c2 in dec.blocks[b].vertices & dec.cut_vertices:
                if c2 != c and c2 not in parent_block:
                    parent_block[c2] = b
                    order.append(c2)
        children[c] = kids

    def below(c: int) -> set[int]:
        out: set[int] = set()
        for b in children[c]:
            for w in dec.blocks[b].vertices:
                if w != c:
                    out.add(w)
                    if w in dec.cut_vertices:
                        out |= below(w)
        return out

    profiles = []
    for c in order:
        desc = below(c) if c != root else set(range(g.vertex_count)) - {c}
        if desc & dec.cut_vertices:
            continue
        pb = parent_block[c]
        t1 = 0 if pb is None else sum(1 for w in dec.blocks[pb].vertices if g.has_edge(c, w))
        t2 = 0
        paths = []
        other = 0
        for b in children[c]:
            blk = dec.blocks[b]
            if blk.is_k2:
                t2 += 1
            elif blk.is_cycle():
                paths.append(_cycle_path(g, blk, c))
            else:
                other += 1
        profiles.append(EndCutProfile(
            c, t1, t2, tuple(paths), other, frozenset(desc), is_root=(c == root)))
    return profiles


# -- explicit colourings -----------------------------------------------------

@dataclass(frozen=True)
class PartialColouring:
    host: Graph
    red: int
    blue: int

    @property
    def coloured(self) -> int:
        return self.red | self.blue


def cycle_order(g: Graph) -> list[int]:
    """Edge indices of a cycle graph in traversal order from edge 0."""
    degs = g.degrees()
    used = [d for d in degs if d]
    if not used or any(d != 2 for d in used) or not edges_connected(g, g.full_mask):
        raise ValueError("graph is not a cycle")
    u, v = g.edges[0]
    order = [0]
    prev, cur = u, v
    while cur != u:
        nxt = next(w for w in iter_bits(g.adjacency[cur]) if w != prev)
        order.append(g.edge_index(cur, nxt))
        prev, cur = cur, nxt
    return order


def cycle_colouring(g: Graph):
    """Colour a cycle red, red, blue, red, red, blue, ... from edge 0."""
    from sizeramsey.arrowing import EdgeColouring

    blue = 0
    for pos, e in enumerate(cycle_order(g)):
        if pos % 3 == 2:
            blue |= 1 << e
    return EdgeColouring(g, blue)


def end_cut_colouring(g: Graph, profile: EndCutProfile) -> PartialColouring:
    """Red on every edge at the end-cut; along each cycle path, blue, red,
    red, blue, ... from one end to the other.  Colours ``profile.x`` edges
    with red matching number ``profile.y`` and no blue P3."""
    v = profile.vertex
    if not 0 <= v < g.vertex_count or profile.other_blocks:
        raise ValueError("profile does not describe an end-cut with K2/cycle blocks")
    if g.degree(v) != profile.t1 + profile.t2 + 2 * profile.t:
        raise ValueError("stale profile: degree of the end-cut does not match")
    red = g.incident_mask(v)
    blue = 0
    try:
        for path in profile.cycle_paths:
            for k in range(len(path) - 1):
                e = g.edge_index(path[k], path[k + 1])
                if k % 3 == 0:
                    blue |= 1 << e
                else:
                    red |= 1 << e
    except KeyError as exc:
        raise ValueError(f"stale profile: {exc}") from None
    return PartialColouring(g, red, blue)


# -- heuristic refuter -------------------------------------------------------

class _Refuter:
    """Memoised search over edge-subgraphs of ``g`` for a blue h-free set
    with small red matching number."""

    STAR_CANDIDATES = 4

    def __init__(self, g: Graph, h: TargetPattern):
        self.g = g
        self.h = h
        self.memo: dict[int, int] = {}

    def nu_red(self, mask: int, blue: int) -> int:
        return matching_number(self.g, mask & ~blue)

    def ok(self, blue: int) -> bool:
        return not contains_target(self.g, self.h, blue)

    def best(self, mask: int) -> int:
        """Blue mask within ``mask``; the red part is ``mask & ~blue``."""
        if mask not in self.memo:
            # recursion only ever moves to proper subsets of ``mask``
            self.memo[mask] = self._solve(mask)
        return self.memo[mask]

    def _components(self, mask: int) -> list[int]:
        g = self.g
        rest = mask
        out = []
        while rest:
            low = (rest & -rest).bit_length() - 1
            comp = 1 << low
            verts = (1 << g.edges[low][0]) | (1 << g.edges[low][1])
            grew = True
            while grew:
                grew = False
                for i in iter_bits(rest & ~comp):
                    a, b = g.edges[i]
                    if verts >> a & 1 or verts >> b & 1:
                        comp |= 1 << i
                        verts |= (1 << a) | (1 << b)
                        grew = True
            out.append(comp)
            rest &= ~comp
        return out

    def _solve(self, mask: int) -> int:
        if not mask:
            return 0
        if self.ok(mask):
            return mask
        comps = self._components(mask)
        if len(comps) > 1:
            blue = 0
            for c in comps:
                blue |= self.best(c)
            return blue
        cands = [self._greedy(mask, sorted(iter_bits(mask))),
                 self._greedy(mask, self._degree_order(mask))]
        sub, vmap = self._compact(mask)
        if self.h.kind == "cycle" and self.h.order == 3:
            cands.extend(self._c3_moves(mask, sub, vmap))
        if self.h.kind == "path" and self.h.order == 3:
            cands.extend(self._p3_moves(mask, sub, vmap))
        cands.extend(self._star_moves(mask))
        best_blue, best_nu = 0, None
        for blue in cands:
            if blue is None or not self.ok(blue):
                continue
            nu = self.nu_red(mask, blue)
            if best_nu is None or nu < best_nu:
                best_blue, best_nu = blue, nu
        return best_blue

    def _greedy(self, mask: int, order: list[int]) -> int:
        adj = [0] * self.g.vertex_count
        blue = 0
        for i in order:
            a, b = self.g.edges[i]
            if extension_ok(adj, a, b, self.h):
                adj[a] |= 1 << b
                adj[b] |= 1 << a
                blue |= 1 << i
        return blue

    def _degree_order(self, mask: int) -> list[int]:
        deg = [0] * self.g.vertex_count
        for i in iter_bits(mask):
            a, b = self.g.edges[i]
            deg[a] += 1
            deg[b] += 1
        return sorted(iter_bits(mask), key=lambda i: (deg[self.g.edges[i][0]] + deg[self.g.edges[i][1]], i))

    def _compact(self, mask: int) -> tuple[Graph, list[int]]:
        verts = sorted({x for i in iter_bits(mask) for x in self.g.edges[i]})
        idx = {x: k for k, x in enumerate(verts)}
        sub = Graph(len(verts), [(idx[a], idx[b]) for a, b in (self.g.edges[i] for i in iter_bits(mask))])
        return sub, verts

    def _lift(self, sub: Graph, vmap: list[int], sub_mask: int) -> int:
        out = 0
        for i in iter_bits(sub_mask):
            a, b = sub.edges[i]
            out |= 1 << self.g.edge_index(vmap[a], vmap[b])
        return out

    def _star_moves(self, mask: int) -> list[int]:
        """Red star at a vertex, edges isolated by its removal blue, recurse."""
        g = self.g
        deg: dict[int, int] = {}
        for i in iter_bits(mask):
            for x in g.edges[i]:
                deg[x] = deg.get(x, 0) + 1
        centres = sorted(deg, key=lambda x: (-deg[x], x))[: self.STAR_CANDIDATES]
        centres += [x for x in sorted(deg) if deg[x] == 2 and x not in centres][:2]
        out = []
        for c in centres:
            star = mask & g.incident_mask(c)
            rest = mask & ~star
            isolated = 0
            for comp in self._components(rest):
                if popcount(comp) == 1:
                    isolated |= comp
            out.append(isolated | self.best(rest & ~isolated))
        return out

    def _c3_moves(self, mask: int, sub: Graph, vmap: list[int]) -> list[int]:
        out = []
        # edges on no triangle can always be blue
        adj = sub.adjacency
        lone = 0
        for i, (a, b) in enumerate(sub.edges):
            if not adj[a] & adj[b]:
                lone |= 1 << i
        if lone:
            lone_g = self._lift(sub, vmap, lone)
            out.append(lone_g | self.best(mask & ~lone_g))
        # split at a cut vertex: triangles live inside blocks
        dec = block_decompose(sub)
        if dec.cut_vertices and len(dec.blocks) > 1:
            blue = 0
            for blk in dec.blocks:
                blue |= self.best(self._lift(sub, vmap, blk.edges))
            out.append(blue)
        return out

    def _p3_moves(self, mask: int, sub: Graph, vmap: list[int]) -> list[int]:
        out = []
        if all(d == 2 for d in sub.degrees()):
            out.append(self._lift(sub, vmap, cycle_colouring(sub).blue))
            return out
        dec = block_decompose(sub)
        if not dec.cut_vertices:
            return out
        root = min(dec.cut_vertices)
        for prof in find_end_cuts(sub, root, dec):
            if prof.other_blocks:
                continue
            part = end_cut_colouring(sub, prof)
            gone = {prof.vertex} | set(prof.descendants)
            rest = 0
            for i, (a, b) in enumerate(sub.edges):
                if a not in gone and b not in gone:
                    rest |= 1 << i
            rest_g = self._lift(sub, vmap, rest)
            out.append(self._lift(sub, vmap, part.blue) | self.best(rest_g))
        return out


def heuristic_refuter(g: Graph, n: int, h: TargetPattern):
    """Try to build a good (nK2, h)-colouring from the structural strategies.

    Returns a colouring that passed :func:`verify_colouring`, or ``None``.
    """
    from sizeramsey.arrowing import EdgeColouring, verify_colouring

    if not (h.order == 3 and h.kind in ("path", "cycle")):
        raise ValueError("the refuter handles the P3 and C3 targets only")
    if n < 1:
        raise ValueError("n must be positive")
    blue = _Refuter(g, h).best(g.full_mask)
    colouring = EdgeColouring(g, blue)
    if verify_colouring(colouring, n, h).good:
        return colouring
    return None


def extend_by_deletable(g: Graph, e2: int, e3: int, rest_colouring_blue: int):
    """Colour E2 red and E3 blue on top of a colouring of the remainder
    (given by its blue mask in ``g``'s edge indices)."""
    from sizeramsey.arrowing import EdgeColouring

    return EdgeColouring(g, (rest_colouring_blue | e3) & ~e2)


__all__ = [
    "Block", "BlockDecomposition", "EndCutProfile", "PartialColouring",
    "block_decompose", "cut_vertices_brute", "is_biconnected",
    "deletable_partition", "is_deletable_edge_set", "descendants_brute",
    "find_end_cuts", "cycle_order", "cycle_colouring", "end_cut_colouring",
    "heuristic_refuter", "extend_by_deletable",
]
