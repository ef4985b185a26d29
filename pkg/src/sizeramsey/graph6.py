"""graph6 encoding (short form, up to 62 vertices)."""

from __future__ import annotations

from sizeramsey.graph import Graph

HEADER = ">>graph6<<"
MAX_G6_VERTICES = 62


class Graph6Error(ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} at byte offset {offset}")
        self.offset = offset


def encode(g: Graph) -> str:
    n = g.vertex_count
    if n > MAX_G6_VERTICES:
        raise ValueError(f"graph6 short form holds at most {MAX_G6_VERTICES} vertices")
    adj = g.adjacency
    bits = []
    for j in range(1, n):
        aj = adj[j]
        for i in range(j):
            bits.append(aj >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    out = [chr(n + 63)]
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k:k + 6]:
            v = (v << 1) | b
        out.append(chr(v + 63))
    return "".join(out)


def decode(text: str | bytes) -> Graph:
    if isinstance(text, bytes):
        text = text.decode("ascii", errors="replace")
    text = text.strip("\r\n")
    base = 0
    if text.startswith(HEADER):
        base = len(HEADER)
        text = text[base:]
    if not text:
        raise Graph6Error("empty graph6 string", base)
    for k, ch in enumerate(text):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + k)
    n = ord(text[0]) - 63
    if n == 63:
        raise Graph6Error("long-form graph6 (more than 62 vertices) is not supported", base)
    if n == 0:
        raise Graph6Error("graph6 order 0 is not supported", base)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = text[1:]
    if len(body) != need:
        raise Graph6Error(
            f"expected {need} data bytes for {n} vertices, found {len(body)}",
            base + 1 + min(len(body), need),
        )
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[pos // 6]) - 63
            if byte >> (5 - pos % 6) & 1:
                edges.append((i, j))
            pos += 1
    if pos % 6:
        last = ord(body[-1]) - 63
        if last & ((1 << (6 - pos % 6)) - 1):
            raise Graph6Error("nonzero padding bits", base + len(body))
    return Graph(n, edges)
