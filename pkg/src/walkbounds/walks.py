"""Exact walk counting in unbounded integer arithmetic.

A k-walk is a sequence of k vertices in which consecutive vertices are
adjacent.  The per-vertex counts obey

    w_1(u) = 1,        w_{k+1}(u) = sum over neighbors v of w_k(v),

and the totals w_k(G) sum the per-vertex counts.  Counts grow like
mu^{k-1} and overflow machine words quickly, so everything here is plain
Python integers; downstream inequality checks then stay exact-rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .graphs import Graph


class WalkTable:
    """Per-vertex and total walk counts of one graph up to a horizon.

    The table grows incrementally: asking for a larger horizon extends the
    cached columns in place, so sharing one table across many bound
    evaluations is cheap.
    """

    __slots__ = ("graph", "_per", "_totals")

    def __init__(self, graph: Graph, horizon: int = 1):
        if horizon < 1:
            raise ValueError(f"horizon must be >= 1, got {horizon}")
        self.graph = graph
        self._per: list[tuple[int, ...]] = [(1,) * graph.n]
        self._totals: list[int] = [graph.n]
        self.extend(horizon)

    @property
    def horizon(self) -> int:
        return len(self._per)

    def extend(self, horizon: int) -> "WalkTable":
        adj = self.graph._adj
        while len(self._per) < horizon:
            prev = self._per[-1]
            nxt = tuple(sum(prev[v] for v in adj[u]) for u in range(self.graph.n))
            self._per.append(nxt)
            self._totals.append(sum(nxt))
        return self

    def per_vertex(self, k: int) -> tuple[int, ...]:
        """Counts of k-walks by start vertex; position u-1 is w_k(u)."""
        if k < 1:
            raise ValueError(f"walk length must be >= 1, got {k}")
        self.extend(k)
        return self._per[k - 1]

    def count(self, k: int, u: int) -> int:
        return self.per_vertex(k)[u - 1]

    def total(self, k: int) -> int:
        if k < 1:
            raise ValueError(f"walk length must be >= 1, got {k}")
        self.extend(k)
        return self._totals[k - 1]

    def totals(self, upto: int) -> tuple[int, ...]:
        self.extend(upto)
        return tuple(self._totals[:upto])


def walk_table(g: Graph, horizon: int) -> WalkTable:
    return WalkTable(g, horizon)


def walk_pair_counts(g: Graph, r: int) -> tuple[tuple[int, ...], ...]:
    """Matrix of w_r(u,v): walks of r vertices from u to v.

    Equals the (r-1)-th power of the adjacency matrix; r=1 is the identity
    pattern (zero-step walks).
    """
    if r < 1:
        raise ValueError(f"walk length must be >= 1, got {r}")
    n = g.n
    adj = g._adj
    m = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for _ in range(r - 1):
        m = [
            [sum(m[w][j] for w in adj[i]) for j in range(n)]
            for i in range(n)
        ]
    return tuple(tuple(row) for row in m)


def closed_walks(g: Graph, k: int) -> int:
    """Trace of the k-th adjacency power: closed walks on k+1 vertices.

    k=1 gives 0 (no loops); k=2 gives twice the edge count.
    """
    if k < 1:
        raise ValueError(f"power must be >= 1, got {k}")
    pair = walk_pair_counts(g, k + 1)
    return sum(pair[i][i] for i in range(g.n))


@dataclass(frozen=True)
class IdentityCheck:
    name: str
    params: tuple[tuple[str, int], ...]
    lhs: Any
    rhs: Any

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs


@dataclass(frozen=True)
class IdentityReport:
    checks: tuple[IdentityCheck, ...]

    @property
    def all_equal(self) -> bool:
        return all(c.equal for c in self.checks)

    def failures(self) -> tuple[IdentityCheck, ...]:
        return tuple(c for c in self.checks if not c.equal)


def check_walk_identities(g: Graph, pmax: int = 3, qmax: int = 3, rmax: int = 3) -> IdentityReport:
    """Exact-integer consistency identities relating walk statistics.

    Edge sums run over ordered adjacent pairs (each edge counted twice),
    the quadratic-form convention used throughout this package:

      sum_u d(u)^2                        = w_3
      sum_{ordered uv in E} d(u) d(v)     = w_4
      sum_u w_p(u)^2                      = w_{2p-1}
      sum_u w_p(u) w_q(u)                 = w_{p+q-1}
      sum_v w_r(u,v) w_p(v)               = w_{p+r-1}(u)    (for every u)
      sum_{u,v} w_r(u,v) w_p(u) w_q(v)    = w_{p+q+r-2}

    The fifth line reflects that concatenating an r-vertex walk u..v with a
    p-vertex walk starting at v shares the vertex v, leaving p+r-1 vertices;
    w_r(u,v) counts walks on r vertices throughout (walk_pair_counts).
    """
    if min(pmax, qmax, rmax) < 1:
        raise ValueError("identity bounds must be >= 1")
    n = g.n
    horizon = max(4, 2 * pmax - 1, pmax + qmax - 1, pmax + rmax, pmax + qmax + rmax - 2)
    wt = walk_table(g, horizon)
    degs = g.degrees
    checks: list[IdentityCheck] = []

    checks.append(IdentityCheck(
        "degree_squares", (), sum(d * d for d in degs), wt.total(3)))

    edge_prod = sum(degs[u - 1] * degs[v - 1] for u, v in g.edges) * 2
    checks.append(IdentityCheck("edge_degree_products", (), edge_prod, wt.total(4)))

    for p in range(1, pmax + 1):
        wp = wt.per_vertex(p)
        checks.append(IdentityCheck(
            "start_count_squares", (("p", p),),
            sum(x * x for x in wp), wt.total(2 * p - 1)))
        for q in range(1, qmax + 1):
            wq = wt.per_vertex(q)
            checks.append(IdentityCheck(
                "start_count_products", (("p", p), ("q", q)),
                sum(a * b for a, b in zip(wp, wq)), wt.total(p + q - 1)))

    pair_by_r = {r: walk_pair_counts(g, r) for r in range(1, rmax + 1)}
    for r in range(1, rmax + 1):
        pair = pair_by_r[r]
        for p in range(1, pmax + 1):
            wp = wt.per_vertex(p)
            lhs = tuple(sum(pair[u][v] * wp[v] for v in range(n)) for u in range(n))
            checks.append(IdentityCheck(
                "pair_times_start", (("r", r), ("p", p)),
                lhs, wt.per_vertex(p + r - 1)))
            for q in range(1, qmax + 1):
                wq = wt.per_vertex(q)
                total = sum(
                    pair[u][v] * wp[u] * wq[v]
                    for u in range(n) for v in range(n)
                )
                checks.append(IdentityCheck(
                    "pair_double_sum", (("r", r), ("p", p), ("q", q)),
                    total, wt.total(p + q + r - 2)))

    return IdentityReport(tuple(checks))


def brute_force_walk_counts(g: Graph, k: int) -> tuple[tuple[int, ...], int]:
    """Independent oracle: enumerate every vertex sequence of length k and
    keep those whose consecutive entries are adjacent.

    Exponential in k; for cross-checking the recurrence on tiny graphs.
    """
    from itertools import product

    per = [0] * g.n
    for seq in product(range(g.n), repeat=k):
        if all(g._masks[seq[i]] >> seq[i + 1] & 1 for i in range(k - 1)):
            per[seq[0]] += 1
    return tuple(per), sum(per)
