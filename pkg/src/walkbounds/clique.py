"""Exact clique number and the clique quadratic form over the simplex.

The quadratic form x'Ax of the adjacency matrix, maximized over the
probability simplex, equals (omega-1)/omega where omega is the clique
number; the maximum is attained exactly when the support of x induces a
complete omega-partite graph with equal part weights.  Edge sums follow
the ordered-pair convention used package-wide, so the cap is (omega-1)/omega
rather than the halved unordered constant.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graphs import Graph


@dataclass(frozen=True)
class CliqueResult:
    omega: int
    witness: tuple[int, ...]


def _greedy_coloring_bound(g: Graph, candidates: list[int]) -> int:
    """Number of colors used by greedy coloring of the induced candidates;
    an upper bound on the largest clique inside them."""
    colors: dict[int, int] = {}
    for v in candidates:
        used = {colors[w] for w in g._adj[v] if w in colors}
        c = 0
        while c in used:
            c += 1
        colors[v] = c
    return max(colors.values()) + 1 if colors else 0


def clique_number(g: Graph) -> CliqueResult:
    """Exact maximum clique via branch and bound.

    Branching explores vertices in descending-degree order with a greedy
    coloring bound recomputed per node; the witness returned afterwards is
    the lexicographically least maximum clique by vertex id, so results are
    deterministic.
    """
    n = g.n
    order = sorted(range(n), key=lambda v: (-len(g._adj[v]), v))
    masks = g._masks
    best = 1  # a single vertex is always a clique

    def expand(size: int, cand: list[int]) -> None:
        nonlocal best
        if not cand:
            best = max(best, size)
            return
        if size + _greedy_coloring_bound(g, cand) <= best:
            return
        for i, v in enumerate(cand):
            if size + len(cand) - i <= best:
                return
            rest = [w for w in cand[i + 1:] if masks[v] >> w & 1]
            expand(size + 1, rest)

    expand(0, order)
    omega = best

    # lexicographically least omega-clique by 1-based vertex id
    witness: list[int] = []

    def lex_dfs(start: int, chosen: list[int]) -> bool:
        if len(chosen) == omega:
            witness.extend(chosen)
            return True
        for v in range(start, n):
            if n - v < omega - len(chosen):
                return False
            if all(masks[v] >> w & 1 for w in chosen):
                if lex_dfs(v + 1, chosen + [v]):
                    return True
        return False

    lex_dfs(0, [])
    return CliqueResult(omega, tuple(w + 1 for w in witness))


@dataclass(frozen=True)
class SimplexVector:
    """Nonnegative vertex weights with a declared normalization
    ('sum' for unit entry sum, 'norm' for unit Euclidean norm)."""

    entries: tuple
    normalization: str = "sum"

    def __post_init__(self):
        if self.normalization not in ("sum", "norm"):
            raise ValueError(f"unknown normalization {self.normalization!r}")
        if any(e < 0 for e in self.entries):
            raise ValueError("simplex vector entries must be nonnegative")

    def check_normalized(self, tol: float = 1e-12) -> bool:
        if self.normalization == "sum":
            return abs(float(sum(self.entries)) - 1.0) <= tol
        return abs(float(sum(e * e for e in self.entries)) - 1.0) <= tol


def uniform_vector(n: int) -> SimplexVector:
    return SimplexVector((Fraction(1, n),) * n, "sum")


def ms_quadratic_form(g: Graph, x: Sequence) -> object:
    """Ordered-pair edge sum sum_{(i,j) adjacent} x_i x_j = x'Ax.

    Exact when the entries are exact (ints or Fractions); float entries give
    a float.  Entries must be nonnegative.
    """
    entries = x.entries if isinstance(x, SimplexVector) else tuple(x)
    if len(entries) != g.n:
        raise ValueError(f"weight vector has {len(entries)} entries for n={g.n}")
    if any(e < 0 for e in entries):
        raise ValueError("weights must be nonnegative")
    return 2 * sum(entries[u - 1] * entries[v - 1] for u, v in g.edges)


def ms_maximize(
    g: Graph,
    iters: int = 600,
    restarts: int = 30,
    seed: int = 0,
) -> tuple[SimplexVector, float]:
    """Heuristic maximum of the clique quadratic form over the simplex.

    Replicator dynamics x_i <- x_i (Ax)_i / (x'Ax) from the uniform start
    plus random simplex starts.  The iteration is monotone ascent, so the
    best value found is a valid lower bound on the true maximum; it is
    never a certificate.  Ties within 1e-12 break toward the
    lexicographically least weight vector.
    """
    if iters < 1 or restarts < 1:
        raise ValueError("iters and restarts must be >= 1")
    n = g.n
    if g.edge_count == 0:
        return uniform_vector(n), 0.0
    a = g.adjacency_matrix().astype(float)
    rng = np.random.default_rng(seed)

    starts = [np.full(n, 1.0 / n)]
    for _ in range(restarts - 1):
        w = rng.exponential(size=n)
        starts.append(w / w.sum())

    best_x: np.ndarray | None = None
    best_val = -1.0
    for x in starts:
        for _ in range(iters):
            ax = a @ x
            form = float(x @ ax)
            if form <= 0.0:
                break
            nxt = x * ax / form
            if np.abs(nxt - x).max() < 1e-15:
                x = nxt
                break
            x = nxt
        val = float(x @ (a @ x))
        if val > best_val + 1e-12 or (
            abs(val - best_val) <= 1e-12
            and best_x is not None
            and tuple(x) < tuple(best_x)
        ):
            best_val, best_x = val, x.copy()
    assert best_x is not None
    return SimplexVector(tuple(float(v) for v in best_x), "sum"), max(best_val, 0.0)


@dataclass(frozen=True)
class MsEqualityReport:
    """Both sides of the equality characterization for one weight vector.

    numeric_equal: the form reaches (omega-1)/omega within tolerance.
    structural_equal: the support induces a complete omega-partite graph
    with equal part sums.  The two verdicts agree exactly when the
    characterization does.
    """

    form_value: float
    cap: Fraction
    numeric_equal: bool
    support: tuple[int, ...]
    support_complete_multipartite: bool
    parts: tuple[tuple[int, ...], ...] | None
    part_sums: tuple[float, ...] | None
    parts_count_is_omega: bool
    equal_part_sums: bool
    structural_equal: bool

    @property
    def agreement(self) -> bool:
        return self.numeric_equal == self.structural_equal


def _noncoadjacency_parts(g: Graph, vertices: tuple[int, ...]) -> tuple[tuple[int, ...], ...] | None:
    """Partition of the given vertices into independent classes whose cross
    pairs are all edges, or None if non-adjacency is not transitive there."""
    vs = list(vertices)
    parts: list[list[int]] = []
    for v in vs:
        placed = False
        for part in parts:
            if all(not g.adjacency(v, w) for w in part):
                part.append(v)
                placed = True
                break
        if not placed:
            parts.append([v])
    # verify: inside parts no edges (true by construction), across all edges
    for i in range(len(parts)):
        for j in range(i + 1, len(parts)):
            for u in parts[i]:
                for w in parts[j]:
                    if not g.adjacency(u, w):
                        return None
    return tuple(tuple(p) for p in parts)


def ms_equality_witness_check(
    g: Graph, x: Sequence, tol: float = 1e-9
) -> MsEqualityReport:
    """Evaluate both sides of the equality characterization for sum-one x."""
    entries = x.entries if isinstance(x, SimplexVector) else tuple(x)
    if len(entries) != g.n:
        raise ValueError(f"weight vector has {len(entries)} entries for n={g.n}")
    total = float(sum(entries))
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"weights must sum to one, got {total}")
    omega = clique_number(g).omega
    cap = Fraction(omega - 1, omega)
    form = ms_quadratic_form(g, entries)
    numeric_equal = abs(float(form) - float(cap)) <= tol

    support = tuple(u for u in g.vertices if float(entries[u - 1]) > 1e-12)
    parts = _noncoadjacency_parts(g, support)
    complete_mp = parts is not None
    part_sums = None
    equal_sums = False
    parts_is_omega = False
    if parts is not None:
        part_sums = tuple(float(sum(entries[u - 1] for u in p)) for p in parts)
        equal_sums = max(part_sums) - min(part_sums) <= tol
        parts_is_omega = len(parts) == omega
    structural = complete_mp and parts_is_omega and equal_sums
    return MsEqualityReport(
        form_value=float(form),
        cap=cap,
        numeric_equal=numeric_equal,
        support=support,
        support_complete_multipartite=complete_mp,
        parts=parts,
        part_sums=part_sums,
        parts_count_is_omega=parts_is_omega,
        equal_part_sums=equal_sums,
        structural_equal=structural,
    )


def brute_force_clique_number(g: Graph) -> int:
    """Subset-enumeration oracle for cross-checking on tiny graphs."""
    from itertools import combinations

    for size in range(g.n, 0, -1):
        for combo in combinations(range(g.n), size):
            if all(
                g._masks[u] >> v & 1
                for i, u in enumerate(combo)
                for v in combo[i + 1:]
            ):
                return size
    return 0
