"""Upper-bound graphs and closed-form bounds for r̂_c(nK2, H).

Each family is a chain of small arrowing blocks joined by bridges:

* ``p3_chain``: copies of C4 (each arrows (2K2, P3)), plus a P3 when n is odd;
* ``c4_chain``: copies of K_{3,3}-e (each arrows (2K2, C4)), plus a C4 when n is odd;
* ``c3_chain``: n triangles.

Bridges join the lowest-numbered vertex of consecutive components.
"""

from __future__ import annotations

from dataclasses import dataclass

from sizeramsey.graph import Graph, cycle_graph, disjoint_union, k33_minus_edge, path_graph
from sizeramsey.patterns import TargetPattern

FAMILIES = ("p3_chain", "c4_chain", "c3_chain")


@dataclass(frozen=True)
class ConstructionFamily:
    family: str
    n: int

    def __post_init__(self):
        if self.family not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}; choose from {FAMILIES}")
        if self.n < 1:
            raise ValueError("n must be positive")

    @property
    def target(self) -> TargetPattern:
        return {
            "p3_chain": TargetPattern.path(3),
            "c4_chain": TargetPattern.cycle(4),
            "c3_chain": TargetPattern.cycle(3),
        }[self.family]


def chain(parts: list[Graph]) -> Graph:
    """Disjoint union of ``parts`` with a bridge between the first vertices
    of each consecutive pair."""
    g = disjoint_union(*parts)
    starts = []
    offset = 0
    for p in parts:
        starts.append(offset)
        offset += p.vertex_count
    bridges = list(zip(starts, starts[1:]))
    return Graph(g.vertex_count, list(g.edges) + bridges)


def components_for(fam: ConstructionFamily) -> list[Graph]:
    n = fam.n
    if fam.family == "c3_chain":
        return [cycle_graph(3)] * n
    block, tail = {
        "p3_chain": (cycle_graph(4), path_graph(3)),
        "c4_chain": (k33_minus_edge(), cycle_graph(4)),
    }[fam.family]
    parts = [block] * (n // 2)
    if n % 2:
        parts.append(tail)
    return parts


def build(fam: ConstructionFamily | str, n: int | None = None) -> Graph:
    if isinstance(fam, str):
        fam = ConstructionFamily(fam, n)
    return chain(components_for(fam))


# -- formulas ----------------------------------------------------------------

def path_upper_bound(m: int, n: int) -> int:
    """Bound of Vito, Nabila, Safitri and Silaban for r̂_c(nK2, P_m)."""
    if n < 1 or m < 3:
        raise ValueError("need n >= 1 and m >= 3")
    if n % 2 == 0:
        return n * (m + 2) // 2 - 1
    return (n + 1) * (m + 2) // 2 - 3


def p3_value(n: int) -> int:
    """r̂_c(nK2, P3) = floor((5n - 1) / 2)."""
    if n < 1:
        raise ValueError("n must be positive")
    return (5 * n - 1) // 2


def c4_upper_bound(n: int) -> int:
    """floor((9n - 1) / 2); conjectured to be the exact value."""
    if n < 1:
        raise ValueError("n must be positive")
    return (9 * n - 1) // 2


def c3_value(n: int) -> int:
    """r̂_c(nK2, C3) = 4n - 1."""
    if n < 1:
        raise ValueError("n must be positive")
    return 4 * n - 1


def upper_bound_formula(target: TargetPattern, n: int) -> int:
    """Best known upper bound on r̂_c(nK2, target).

    Paths use the general P_m bound (which is exact for P3); C3 and C4 use
    their chain constructions.
    """
    if target.kind == "path":
        return path_upper_bound(target.order, n)
    if target.order == 3:
        return c3_value(n)
    if target.order == 4:
        return c4_upper_bound(n)
    raise ValueError(f"no bound available for {target}")


def formula_status(target: TargetPattern) -> str:
    """Whether the formula for ``target`` is a theorem value or a conjecture."""
    if target.kind == "path" and target.order == 3:
        return "exact"
    if target.kind == "cycle" and target.order == 3:
        return "exact"
    if target.kind == "cycle" and target.order == 4:
        return "conjectured"
    return "upper bound"


def family_for(target: TargetPattern) -> str | None:
    return {"P3": "p3_chain", "C4": "c4_chain", "C3": "c3_chain"}.get(str(target))
