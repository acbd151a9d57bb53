"""Isomorphism-free enumeration of small graphs.

Connected graphs are built one vertex at a time (every prefix connected),
with degree-target pruning for the cubic/subcubic families and duplicate
rejection via a walk-profile invariant plus canonical adjacency confirmation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .graph import Graph, GraphError, canon_adjacency


@dataclass(frozen=True)
class GraphClassFilter:
    max_degree: int | None = None
    min_degree: int | None = None
    regular: int | None = None
    connected: bool = True
    bipartite: bool | None = None
    edge_parity: str | None = None  # "even" | "odd"

    def __post_init__(self):
        if (
            self.max_degree is not None
            and self.min_degree is not None
            and self.min_degree > self.max_degree
        ):
            raise GraphError("min_degree exceeds max_degree")
        if self.regular is not None:
            for bound, cmp in ((self.max_degree, -1), (self.min_degree, 1)):
                if bound is not None and (bound - self.regular) * cmp > 0:
                    raise GraphError("regular degree conflicts with degree bounds")
        if self.edge_parity not in (None, "even", "odd"):
            raise GraphError(f"bad edge_parity {self.edge_parity!r}")

    @property
    def effective_max(self) -> int | None:
        return self.regular if self.regular is not None else self.max_degree

    @property
    def effective_min(self) -> int:
        if self.regular is not None:
            return self.regular
        return self.min_degree or 0


CUBIC = GraphClassFilter(regular=3, connected=True)
SUBCUBIC_MIN2 = GraphClassFilter(max_degree=3, min_degree=2, connected=True)
SUBCUBIC = GraphClassFilter(max_degree=3, connected=True)


def _invariant(masks: tuple[int, ...]):
    """Cheap isomorphism invariant: per-vertex degree/triangle/4-walk profile."""
    n = len(masks)
    degs = [m.bit_count() for m in masks]
    a2 = [[(masks[u] & masks[v]).bit_count() for v in range(n)] for u in range(n)]
    prof = []
    for v in range(n):
        nbrs = [u for u in range(n) if masks[v] >> u & 1]
        tri = sum(a2[v][u] for u in nbrs)
        w4 = sum(x * x for x in a2[v]) + degs[v] * degs[v]
        prof.append((degs[v], tri, w4, tuple(sorted(degs[u] for u in nbrs))))
    return (n, sum(degs) // 2, tuple(sorted(prof)))


def _is_bipartite_masks(masks) -> bool:
    n = len(masks)
    side = [-1] * n
    for s in range(n):
        if side[s] >= 0:
            continue
        side[s] = 0
        stack = [s]
        while stack:
            v = stack.pop()
            mv = masks[v]
            while mv:
                low = mv & -mv
                u = low.bit_length() - 1
                mv ^= low
                if side[u] < 0:
                    side[u] = 1 - side[v]
                    stack.append(u)
                elif side[u] == side[v]:
                    return False
    return True


class _Dedup:
    """Invariant-bucketed store; canonical forms computed only on collisions."""

    def __init__(self):
        self.table: dict = {}
        self.items: list[tuple[int, ...]] = []

    def add(self, masks: tuple[int, ...]) -> bool:
        inv = _invariant(masks)
        bucket = self.table.get(inv)
        if bucket is None:
            self.table[inv] = [[masks, None]]
            self.items.append(masks)
            return True
        canon = canon_adjacency(masks)
        for entry in bucket:
            if entry[1] is None:
                entry[1] = canon_adjacency(entry[0])
            if entry[1] == canon:
                return False
        bucket.append([masks, canon])
        self.items.append(masks)
        return True


def _prune(masks, degs, n: int, lo: int, hi: int, regular: bool) -> bool:
    """Can this prefix still extend to an n-vertex graph with degrees in [lo, hi]?"""
    r = n - len(masks)
    need_total = 0
    deficit_total = 0
    for d in degs:
        need = lo - d
        if need > r:
            return False
        if need > 0:
            need_total += need
        deficit_total += hi - d
    if need_total > hi * r:
        return False
    if regular:
        if deficit_total > hi * r:
            return False
        if r == 0 and deficit_total:
            return False
        if (hi * r - deficit_total) % 2:
            return False
    return True


def _twin_classes(masks, eligible):
    """Group eligible vertices into interchangeable (twin) classes."""
    groups: dict[tuple, list[int]] = {}
    for v in eligible:
        false_key = masks[v]
        true_key = masks[v] | 1 << v
        groups.setdefault(("f", false_key), []).append(v)
        groups.setdefault(("t", true_key), []).append(v)
    return [sorted(g) for g in groups.values() if len(g) > 1]


def _connected_masks(n: int, lo: int, hi: int, regular: bool, bipartite_only: bool):
    """All connected graphs on exactly n vertices with final degrees in [lo, hi]
    (lo/regular enforced by the caller at the last level), as mask tuples."""
    if n < 1:
        return []
    level: list[tuple[int, ...]] = [(0,)]
    if not _prune(level[0], [0], n, lo, hi, regular):
        level = []
    for k in range(1, n):
        dedup = _Dedup()
        for masks in level:
            degs = [m.bit_count() for m in masks]
            eligible = [v for v in range(k) if degs[v] < hi]
            if not eligible:
                continue
            twins = _twin_classes(masks, eligible)
            max_d = min(hi, len(eligible))
            for d in range(1, max_d + 1):
                for subset in combinations(eligible, d):
                    chosen = set(subset)
                    ok = True
                    for cls in twins:
                        inside = [v for v in cls if v in chosen]
                        if inside and inside != cls[: len(inside)]:
                            ok = False
                            break
                    if not ok:
                        continue
                    new_mask = 0
                    child = list(masks)
                    for v in subset:
                        new_mask |= 1 << v
                        child[v] |= 1 << k
                    child.append(new_mask)
                    cdegs = [m.bit_count() for m in child]
                    if not _prune(child, cdegs, n, lo, hi, regular):
                        continue
                    if bipartite_only and not _is_bipartite_masks(child):
                        continue
                    dedup.add(tuple(child))
        level = dedup.items
    return level


def _masks_to_graph(masks) -> Graph:
    n = len(masks)
    edges = []
    for u in range(n):
        mv = masks[u] >> (u + 1) << (u + 1)
        while mv:
            low = mv & -mv
            edges.append((u, low.bit_length() - 1))
            mv ^= low
    return Graph(n, tuple(sorted(edges)))


def _passes_final(g: Graph, flt: GraphClassFilter) -> bool:
    degs = g.degrees
    if flt.regular is not None and any(d != flt.regular for d in degs):
        return False
    if flt.min_degree is not None and any(d < flt.min_degree for d in degs):
        return False
    if flt.max_degree is not None and any(d > flt.max_degree for d in degs):
        return False
    if flt.bipartite is not None and (g.bipartition() is not None) != flt.bipartite:
        return False
    if flt.edge_parity is not None and g.m % 2 != (0 if flt.edge_parity == "even" else 1):
        return False
    return True


def enumerate_graphs(n: int, flt: GraphClassFilter) -> Iterator[Graph]:
    """One representative per isomorphism class matching the filter,
    deterministic order across runs.  Infeasible filters yield nothing."""
    if n < 0:
        raise GraphError("n must be nonnegative")
    if n == 0:
        return
    if flt.regular is not None and (n * flt.regular) % 2:
        return  # handshake parity
    hi = flt.effective_max
    if hi is None:
        hi = n - 1
    lo = flt.effective_min
    if flt.connected and n >= 2:
        lo = max(lo, 1)
    if flt.connected:
        for masks in _connected_masks(
            n, lo, hi, flt.regular is not None, flt.bipartite is True
        ):
            g = _masks_to_graph(masks)
            if _passes_final(g, flt):
                yield g
    else:
        yield from _enumerate_disconnected(n, flt, hi)


def _enumerate_disconnected(n: int, flt: GraphClassFilter, hi: int) -> Iterator[Graph]:
    """Compose multisets of connected pieces (small n only)."""
    pieces: dict[int, list[Graph]] = {}
    sub = GraphClassFilter(
        max_degree=flt.effective_max,
        min_degree=flt.min_degree,
        regular=flt.regular,
        connected=True,
        bipartite=flt.bipartite,
    )
    for s in range(1, n + 1):
        pieces[s] = list(enumerate_graphs(s, sub))

    def rec(remaining: int, max_size: int, max_idx: int, acc: list[Graph]):
        if remaining == 0:
            yield list(acc)
            return
        for s in range(min(remaining, max_size), 0, -1):
            start = max_idx if s == max_size else 0
            for i in range(start, len(pieces[s])):
                acc.append(pieces[s][i])
                yield from rec(remaining - s, s, i, acc)
                acc.pop()

    for combo in rec(n, n, 0, []):
        if len(combo) == 1 and flt.connected:
            continue
        offset = 0
        edges = []
        for piece in combo:
            edges.extend((u + offset, v + offset) for u, v in piece.edges)
            offset += piece.n
        g = Graph(n, tuple(sorted(edges)))
        if _passes_final(g, flt):
            yield g


def enumerate_trees(n: int) -> Iterator[Graph]:
    """Non-isomorphic trees on n vertices (via networkx), deterministic order."""
    import networkx as nx

    if n <= 1:
        if n == 1:
            yield Graph(1, ())
        return
    if n == 2:
        yield Graph(2, ((0, 1),))
        return
    for t in nx.nonisomorphic_trees(n):
        yield Graph(n, tuple(sorted(tuple(sorted(e)) for e in t.edges())))
