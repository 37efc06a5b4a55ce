"""Immutable simple undirected graphs with 1-based vertex ids.

Construction validates loop-freeness and id ranges; duplicate edges are
collapsed.  Adjacency is queryable both as neighbor lists and as a dense
matrix.  The module also provides the standard generator families used by
the test corpus, connected-component utilities, and two text formats:
a plain edge-list format and the standard graph6 encoding (bit-exact, so
externally generated corpora ingest cleanly).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np


class GraphFormatError(ValueError):
    """Raised when a graph file or line cannot be parsed."""


class Graph:
    """Simple undirected graph on vertices 1..n, immutable after construction.

    Internally vertices are stored 0-based; every public interface uses
    1-based ids.
    """

    __slots__ = ("n", "edges", "_adj", "_masks", "_degrees")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]]):
        if n < 1:
            raise ValueError(f"vertex count must be >= 1, got {n}")
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (1 <= u <= n) or not (1 <= v <= n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop ({u},{u}) is not allowed")
            seen.add((u, v) if u < v else (v, u))
        self.n = n
        self.edges = tuple(sorted(seen))
        adj: list[list[int]] = [[] for _ in range(n)]
        masks = [0] * n
        for u, v in self.edges:
            adj[u - 1].append(v - 1)
            adj[v - 1].append(u - 1)
            masks[u - 1] |= 1 << (v - 1)
            masks[v - 1] |= 1 << (u - 1)
        self._adj = tuple(tuple(sorted(a)) for a in adj)
        self._masks = tuple(masks)
        self._degrees = tuple(len(a) for a in self._adj)

    # -- queries ---------------------------------------------------------

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Degree sequence indexed by vertex id (position u-1 is d(u))."""
        return self._degrees

    def degree(self, u: int) -> int:
        return self._degrees[u - 1]

    def neighbors(self, u: int) -> tuple[int, ...]:
        return tuple(w + 1 for w in self._adj[u - 1])

    def adjacency(self, u: int, v: int) -> bool:
        return bool(self._masks[u - 1] >> (v - 1) & 1)

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.n, self.n), dtype=np.int64)
        for u, v in self.edges:
            a[u - 1, v - 1] = 1
            a[v - 1, u - 1] = 1
        return a

    # -- dunder ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, e={self.edge_count})"

    def __getstate__(self):
        return (self.n, self.edges)

    def __setstate__(self, state):
        n, edges = state
        self.__init__(n, edges)


def build_graph(n: int, edge_list: Iterable[tuple[int, int]]) -> Graph:
    """Validate and build a graph from a 1-based edge list."""
    return Graph(n, edge_list)


# -- generator families ---------------------------------------------------

def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph with the given part sizes.

    Vertices are numbered part by part; two vertices are adjacent iff they
    lie in distinct parts.
    """
    if not parts:
        raise ValueError("at least one part is required")
    if any(p < 1 for p in parts):
        raise ValueError(f"part sizes must be positive, got {list(parts)}")
    n = sum(parts)
    bounds = []
    start = 1
    for p in parts:
        bounds.append(range(start, start + p))
        start += p
    edges = [
        (u, v)
        for i in range(len(parts))
        for j in range(i + 1, len(parts))
        for u in bounds[i]
        for v in bounds[j]
    ]
    return Graph(n, edges)


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycles need n >= 3, got {n}")
    return Graph(n, [(i, i + 1) for i in range(1, n)] + [(n, 1)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)])


def star_graph(n: int) -> Graph:
    """Star on n vertices: center 1 joined to 2..n."""
    return Graph(n, [(1, v) for v in range(2, n + 1)])


def petersen_graph() -> Graph:
    outer = [(i, i % 5 + 1) for i in range(1, 6)]
    spokes = [(i, i + 5) for i in range(1, 6)]
    inner = [(i + 5, (i + 1) % 5 + 6) for i in range(1, 6)]
    return Graph(10, outer + spokes + inner)


def paw_graph() -> Graph:
    """Triangle with a pendant vertex attached."""
    return Graph(4, [(1, 2), (2, 3), (1, 3), (3, 4)])


_FAMILY_BUILDERS = {
    "complete_multipartite": lambda params: complete_multipartite(params),
    "path": lambda params: path_graph(*params),
    "cycle": lambda params: cycle_graph(*params),
    "complete": lambda params: complete_graph(*params),
    "star": lambda params: star_graph(*params),
    "petersen": lambda params: petersen_graph(),
    "paw": lambda params: paw_graph(),
}


@dataclass(frozen=True)
class GraphFamily:
    """A named parametric graph family, e.g. GraphFamily('cycle', (5,))."""

    kind: str
    params: tuple[int, ...] = ()

    def build(self) -> Graph:
        if self.kind not in _FAMILY_BUILDERS:
            raise ValueError(f"unknown family kind {self.kind!r}")
        return _FAMILY_BUILDERS[self.kind](self.params)


# -- components ------------------------------------------------------------

def connected_components(g: Graph) -> tuple[tuple[int, ...], ...]:
    """Vertex sets of the connected components, each sorted, in order of
    smallest member."""
    unseen = set(range(g.n))
    comps = []
    while unseen:
        start = min(unseen)
        stack = [start]
        comp = {start}
        unseen.discard(start)
        while stack:
            w = stack.pop()
            for x in g._adj[w]:
                if x in unseen:
                    unseen.discard(x)
                    comp.add(x)
                    stack.append(x)
        comps.append(tuple(sorted(w + 1 for w in comp)))
    return tuple(comps)


def is_connected(g: Graph) -> bool:
    return len(connected_components(g)) == 1


def induced_subgraph(g: Graph, vertices: Sequence[int]) -> Graph:
    """Induced subgraph on the given 1-based vertices, relabelled 1..k in
    the given order."""
    index = {u: i + 1 for i, u in enumerate(vertices)}
    edges = [
        (index[u], index[v])
        for u, v in g.edges
        if u in index and v in index
    ]
    return Graph(len(vertices), edges)


def bipartition(g: Graph) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """2-coloring of g, or None if an odd cycle exists.

    For each component the vertex with the smallest id goes into the first
    class, which makes the returned witness deterministic.
    """
    color = [-1] * g.n
    for comp in connected_components(g):
        start = comp[0] - 1
        color[start] = 0
        queue = [start]
        while queue:
            w = queue.pop()
            for x in g._adj[w]:
                if color[x] == -1:
                    color[x] = 1 - color[w]
                    queue.append(x)
                elif color[x] == color[w]:
                    return None
    part0 = tuple(u + 1 for u in range(g.n) if color[u] == 0)
    part1 = tuple(u + 1 for u in range(g.n) if color[u] == 1)
    return part0, part1


# -- edge-list format ------------------------------------------------------

def parse_edgelist(text: str) -> Graph:
    """Parse the plain edge-list format.

    An optional first data line ``n <int>`` declares the vertex count;
    every other non-empty, non-``#`` line is ``u v`` with 1-based ids.
    Without a header the vertex count is the largest id seen.
    """
    declared_n: int | None = None
    pairs: list[tuple[int, int]] = []
    saw_data = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        tokens = line.split()
        if not saw_data and tokens[0] == "n":
            if len(tokens) != 2:
                raise GraphFormatError(f"line {lineno}: malformed header {line!r}")
            try:
                declared_n = int(tokens[1])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad vertex count {tokens[1]!r}") from None
            saw_data = True
            continue
        saw_data = True
        if len(tokens) != 2:
            raise GraphFormatError(f"line {lineno}: expected 'u v', got {line!r}")
        try:
            u, v = int(tokens[0]), int(tokens[1])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: non-integer vertex id in {line!r}") from None
        if u < 1 or v < 1:
            raise GraphFormatError(f"line {lineno}: vertex ids are 1-based, got {line!r}")
        if u == v:
            raise GraphFormatError(f"line {lineno}: self-loop ({u},{u}) is not allowed")
        pairs.append((u, v))
    if declared_n is None:
        if not pairs:
            raise GraphFormatError("empty input: need a header 'n <int>' or at least one edge")
        declared_n = max(max(u, v) for u, v in pairs)
    for u, v in pairs:
        if u > declared_n or v > declared_n:
            raise GraphFormatError(f"edge ({u},{v}) inconsistent with declared n={declared_n}")
    return Graph(declared_n, pairs)


def emit_edgelist(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


# -- graph6 format ---------------------------------------------------------
#
# graph6 packs the upper triangle of the adjacency matrix in column-major
# order -- bits (1,2), (1,3), (2,3), (1,4), ... -- into 6-bit chunks, each
# offset by 63.  Vertex counts below 63 use a single size byte; larger
# counts (up to 258047) use '~' followed by three bytes of an 18-bit size.

_G6_HEADER = ">>graph6<<"


def emit_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(n + 63)]
    elif n <= 258047:
        out = ["~", chr((n >> 12) + 63), chr(((n >> 6) & 63) + 63), chr((n & 63) + 63)]
    else:
        raise ValueError(f"graph6 supports at most 258047 vertices, got {n}")
    bits = 0
    nbits = 0
    for v in range(2, n + 1):
        row = g._masks[v - 1]
        for u in range(1, v):
            bits = bits << 1 | (row >> (u - 1) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(bits + 63))
                bits = nbits = 0
    if nbits:
        out.append(chr((bits << (6 - nbits)) + 63))
    return "".join(out)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise GraphFormatError("empty graph6 line")
    data = [ord(c) - 63 for c in s]
    if any(d < 0 or d > 63 for d in data):
        raise GraphFormatError(f"invalid graph6 character in {s!r}")
    if data[0] == 63:
        if len(data) < 4:
            raise GraphFormatError(f"truncated graph6 size in {s!r}")
        n = data[1] << 12 | data[2] << 6 | data[3]
        body = data[4:]
    else:
        n = data[0]
        body = data[1:]
    if n < 1:
        raise GraphFormatError(f"graph6 vertex count must be >= 1, got {n}")
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise GraphFormatError(
            f"graph6 body for n={n} needs {need} characters, got {len(body)}"
        )
    edges = []
    idx = 0
    for v in range(2, n + 1):
        for u in range(1, v):
            if body[idx // 6] >> (5 - idx % 6) & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)
