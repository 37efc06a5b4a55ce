"""Exhaustive enumeration of small graphs up to isomorphism.

One representative per isomorphism class is produced for n <= 8, in a
deterministic order.  Deduplication uses a canonical form: the minimum
upper-triangle bit string (column-major, the graph6 bit order) over all
vertex relabellings.  A full minimum over n! permutations is intractable
at n = 8, so the search is restricted to permutations that respect the
stable coloring computed by iterated neighborhood refinement; the refined
coloring is an isomorphism invariant, hence the restricted minimum is
still a canonical form.  A prefix-pruned depth-first search with state
memoization keeps highly symmetric graphs (one big color class) cheap.
"""

from __future__ import annotations

from itertools import permutations
from typing import Iterator

from .graphs import Graph

MAX_ENUM_VERTICES = 8

_class_cache: dict[int, tuple[int, ...]] = {}


def _refine_colors(n: int, masks: tuple[int, ...]) -> list[int]:
    """Stable vertex coloring by iterated (color, neighbor-color multiset)
    refinement, with canonically ranked color keys."""
    colors = [bin(m).count("1") for m in masks]
    ncls = len(set(colors))
    for _ in range(n):
        keys = []
        for v in range(n):
            m = masks[v]
            neigh = sorted(colors[u] for u in range(n) if m >> u & 1)
            keys.append((colors[v], tuple(neigh)))
        rank = {k: i for i, k in enumerate(sorted(set(keys)))}
        colors = [rank[k] for k in keys]
        new_ncls = len(set(colors))
        if new_ncls == ncls:
            break
        ncls = new_ncls
    return colors


def canonical_key(n: int, masks: tuple[int, ...]) -> int:
    """Canonical adjacency bit string (column-major upper triangle) as an int.

    Isomorphic graphs map to the same key; the key decodes back to a graph
    via :func:`graph_from_key`.
    """
    if n == 1:
        return 0
    colors = _refine_colors(n, masks)
    classes: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        classes.setdefault(c, []).append(v)
    # Smallest classes first (iso-invariant order: ties broken by the
    # canonically ranked color) to fix the most constrained vertices early.
    ordered = sorted(classes.values(), key=lambda vs: (len(vs), colors[vs[0]]))
    class_of_depth: list[list[int]] = []
    for cls in ordered:
        class_of_depth.extend([cls] * len(cls))

    best: list[int] | None = None
    cols: list[int] = []
    placed: list[int] = []
    used = 0

    def dfs(depth: int) -> None:
        nonlocal best, used
        if depth == n:
            if best is None or cols < best:
                best = cols.copy()
            return
        cands = []
        for v in class_of_depth[depth]:
            if used >> v & 1:
                continue
            m = masks[v]
            col = 0
            for p in placed:
                col = col << 1 | (m >> p & 1)
            cands.append((col, v))
        cands.sort()
        # Drop a candidate when swapping it with an already kept candidate
        # is an automorphism (identical adjacency outside the pair): the two
        # subtrees then realize identical column strings.
        kept: list[tuple[int, int]] = []
        for col, v in cands:
            twin = False
            for col2, u in kept:
                if col2 == col:
                    pair = 1 << v | 1 << u
                    if masks[v] & ~pair == masks[u] & ~pair:
                        twin = True
                        break
            if not twin:
                kept.append((col, v))
        for col, v in kept:
            cols.append(col)
            if best is not None and cols > best[: depth + 1]:
                cols.pop()
                break  # ascending columns: the rest are no better
            placed.append(v)
            used |= 1 << v
            dfs(depth + 1)
            used &= ~(1 << v)
            placed.pop()
            cols.pop()

    dfs(0)
    assert best is not None
    key = 0
    for d in range(1, n):
        key = key << d | best[d]
    return key


def graph_from_key(n: int, key: int) -> Graph:
    """Rebuild a graph from its column-major upper-triangle bit string."""
    total = n * (n - 1) // 2
    edges = []
    idx = 0
    for v in range(2, n + 1):
        for u in range(1, v):
            if key >> (total - 1 - idx) & 1:
                edges.append((u, v))
            idx += 1
    return Graph(n, edges)


def _graph_key(g: Graph) -> int:
    return canonical_key(g.n, g._masks)


def brute_force_key(g: Graph) -> int:
    """Reference canonical form: minimum bit string over all n! relabellings.

    Exponential; intended for cross-checking canonical_key at n <= 6.
    """
    n = g.n
    best: tuple[int, ...] | None = None
    for perm in permutations(range(n)):
        bits = tuple(
            1 if g._masks[perm[v]] >> perm[u] & 1 else 0
            for v in range(1, n)
            for u in range(v)
        )
        if best is None or bits < best:
            best = bits
    key = 0
    for b in best or ():
        key = key << 1 | b
    return key


def _edge_count_of_key(n: int, key: int) -> int:
    return bin(key).count("1")


def _all_class_keys(n: int) -> tuple[int, ...]:
    """Canonical keys of every isomorphism class on n vertices, by extending
    each (n-1)-vertex class with one new vertex over all neighbor subsets."""
    if n in _class_cache:
        return _class_cache[n]
    if n == 1:
        keys: tuple[int, ...] = (0,)
    else:
        prev = _all_class_keys(n - 1)
        found: set[int] = set()
        new_bit = 1 << (n - 1)
        for pkey in prev:
            base_masks = graph_from_key(n - 1, pkey)._masks
            for subset in range(1 << (n - 1)):
                trial = tuple(
                    m | new_bit if subset >> v & 1 else m
                    for v, m in enumerate(base_masks)
                ) + (subset,)
                found.add(canonical_key(n, trial))
        keys = tuple(sorted(found, key=lambda k: (_edge_count_of_key(n, k), k)))
    _class_cache[n] = keys
    return keys


def enumerate_graphs(n: int, connected_only: bool = False) -> Iterator[Graph]:
    """Yield one representative per isomorphism class of n-vertex graphs.

    Deterministic order: ascending edge count, then canonical key.
    """
    if not (1 <= n <= MAX_ENUM_VERTICES):
        raise ValueError(f"enumeration supports 1 <= n <= {MAX_ENUM_VERTICES}, got {n}")
    from .graphs import is_connected

    for key in _all_class_keys(n):
        g = graph_from_key(n, key)
        if connected_only and not is_connected(g):
            continue
        yield g


def connected_corpus(max_n: int) -> list[Graph]:
    """All connected graphs with 1 <= v(G) <= max_n, one per class."""
    out: list[Graph] = []
    for n in range(1, max_n + 1):
        out.extend(enumerate_graphs(n, connected_only=True))
    return out
