"""Exact search for locally irregular edge-colorings.

One backtracking engine drives everything: variables are *groups* of edges
(single edges for chi_irr, whole decomposition elements for element-uniform
search, vertex bundles for the balanced-forest colorer).  Pruning is by
closure: once every active edge at both endpoints of an edge is colored, the
equal-degree test for that edge is final and can cut the branch.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

from .graph import Graph, GraphError
from .irregularity import EdgeColoring, verify_coloring

COLORED = "colored"
REFUTED = "refuted"
NOT_DECOMPOSABLE = "not_decomposable"
EXCEEDED_BUDGET = "exceeded_budget"


@dataclass(frozen=True)
class SolveResult:
    status: str
    k: int | None
    coloring: EdgeColoring | None
    nodes: int
    elapsed: float


class _Budget(Exception):
    pass


def edge_order(g: Graph, eids=None) -> list[int]:
    """Branching order: descending endpoint degree sum, ties by edge id."""
    if eids is None:
        eids = range(g.m)
    deg = g.degrees
    return sorted(eids, key=lambda e: (-(deg[g.edges[e][0]] + deg[g.edges[e][1]]), e))


def search_groups(
    g: Graph,
    groups: list[tuple[int, ...]],
    k: int,
    pair_ok: dict[tuple[int, int], bool] | None = None,
    node_budget: int | None = None,
    fixed: dict[int, int] | None = None,
):
    """Find a coloring with colors 1..k constant on each group, every color
    class locally irregular on the union of the groups' edges.

    ``pair_ok[(i, j)]`` (i < j, incident groups) says whether groups i and j
    may share a color.  ``fixed`` pins group indices to colors (disables the
    canonical color-order symmetry breaking).  Returns (assignment | None,
    nodes); raises _Budget when the node budget runs out.
    """
    active = [e for grp in groups for e in grp]
    rem = [0] * g.n
    for e in active:
        u, v = g.edges[e]
        rem[u] += 1
        rem[v] += 1
    cnt = [[0] * (k + 1) for _ in range(g.n)]
    ecolor = [0] * g.m
    marks = _marks(g.m, active)
    inc_active = [
        tuple((e, u) for e, u in g.incidence[v] if marks[e]) for v in range(g.n)
    ]
    # incident earlier groups for the pair rule
    later_checks: list[list[tuple[int, bool]]] = [[] for _ in groups]
    if pair_ok is not None:
        vert_of = [set() for _ in groups]
        for i, grp in enumerate(groups):
            for e in grp:
                vert_of[i].update(g.edges[e])
        for i in range(len(groups)):
            for j in range(i + 1, len(groups)):
                if vert_of[i] & vert_of[j]:
                    later_checks[j].append((i, pair_ok.get((i, j), True)))

    assign = [0] * len(groups)
    nodes = 0

    def place(gi: int, c: int) -> list[int] | None:
        """Color group gi with c; return completed-vertex list or None on conflict."""
        done = []
        grp = groups[gi]
        for e in grp:
            ecolor[e] = c
            for v in g.edges[e]:
                cnt[v][c] += 1
                rem[v] -= 1
        for e in grp:
            for v in g.edges[e]:
                if rem[v] == 0:
                    done.append(v)
        ok = True
        for v in set(done):
            for e, u in inc_active[v]:
                if rem[u] == 0 and ecolor[e]:
                    ce = ecolor[e]
                    if cnt[v][ce] == cnt[u][ce]:
                        ok = False
                        break
            if not ok:
                break
        if ok:
            return done
        unplace(gi, c)
        return None

    def unplace(gi: int, c: int):
        for e in groups[gi]:
            ecolor[e] = 0
            for v in g.edges[e]:
                cnt[v][c] -= 1
                rem[v] += 1

    def dfs(gi: int, max_used: int) -> bool:
        nonlocal nodes
        if gi == len(groups):
            return True
        if fixed is not None and gi in fixed:
            choices = [fixed[gi]]
        else:
            choices = range(1, min(max_used + 1, k) + 1)
        for c in choices:
            nodes += 1
            if node_budget is not None and nodes > node_budget:
                raise _Budget
            if pair_ok is not None:
                bad = False
                for i, ok_same in later_checks[gi]:
                    if assign[i] == c and not ok_same:
                        bad = True
                        break
                if bad:
                    continue
            if place(gi, c) is None:
                continue
            assign[gi] = c
            if dfs(gi + 1, max(max_used, c)):
                return True
            assign[gi] = 0
            unplace(gi, c)
        return False

    found = dfs(0, 0)
    return (list(assign) if found else None), nodes


def _marks(m: int, active) -> list[bool]:
    marks = [False] * m
    for e in active:
        marks[e] = True
    return marks


def _assignment_to_coloring(g: Graph, groups, assignment, k) -> EdgeColoring:
    colors = [0] * g.m
    for grp, c in zip(groups, assignment):
        for e in grp:
            colors[e] = c
    return EdgeColoring(tuple(colors), k)


def chi_irr(g: Graph, k_max: int, node_budget: int | None = None) -> SolveResult:
    """Exact locally irregular chromatic index, searching k = 1..k_max in order."""
    if k_max < 1:
        raise GraphError("k_max must be at least 1")
    start = time.perf_counter()
    if g.m == 0:
        return SolveResult(COLORED, 0, EdgeColoring((), 0), 0, time.perf_counter() - start)
    # every nonempty locally irregular class has >= 2 edges, so floor(m/2)
    # colors always suffice when any coloring exists at all
    bound = g.m // 2
    total = 0
    groups = [(e,) for e in edge_order(g)]
    for k in range(1, min(k_max, bound) + 1):
        try:
            assignment, nodes = search_groups(g, groups, k, node_budget=node_budget)
        except _Budget:
            return SolveResult(EXCEEDED_BUDGET, None, None, total, time.perf_counter() - start)
        total += nodes
        if assignment is not None:
            col = _assignment_to_coloring(g, groups, assignment, k)
            assert verify_coloring(g, col).valid
            return SolveResult(COLORED, k, col, total, time.perf_counter() - start)
    status = NOT_DECOMPOSABLE if k_max >= bound else REFUTED
    return SolveResult(status, None, None, total, time.perf_counter() - start)


@dataclass(frozen=True)
class DecomposabilityCertificate:
    decomposable: bool
    coloring: EdgeColoring | None  # witness when decomposable
    refuted_up_to: int | None  # sound bound exhausted when not
    nodes: int


def is_decomposable(g: Graph, node_budget: int | None = None) -> DecomposabilityCertificate:
    """Decide decomposability by exhaustive search up to floor(m/2) colors."""
    bound = max(1, g.m // 2)
    res = chi_irr(g, bound, node_budget=node_budget)
    if res.status == COLORED:
        return DecomposabilityCertificate(True, res.coloring, None, res.nodes)
    if res.status == EXCEEDED_BUDGET:
        raise GraphError("node budget exhausted before decomposability was decided")
    return DecomposabilityCertificate(False, None, g.m // 2, res.nodes)


def element_uniform_search(
    g: Graph,
    d,
    k_max: int,
    enforce_property_ii: bool = True,
    node_budget: int | None = None,
) -> SolveResult:
    """Search colorings constant on each decomposition element.

    With ``enforce_property_ii``, two incident elements may share a color only
    if every vertex they share is central for one of them.
    """
    from .decompose import validate_decomposition

    report = validate_decomposition(g, d, mode="any")
    if not report.valid:
        raise GraphError(f"invalid decomposition: {report.failures[0]}")
    start = time.perf_counter()
    rank = {e: i for i, e in enumerate(edge_order(g))}
    order = sorted(range(len(d.elements)), key=lambda i: min(rank[e] for e in d.elements[i].edges))
    groups = [tuple(d.elements[i].edges) for i in order]
    pair_ok = None
    if enforce_property_ii:
        pair_ok = {}
        for a in range(len(order)):
            for b in range(a + 1, len(order)):
                ea, eb = d.elements[order[a]], d.elements[order[b]]
                shared = set(ea.vertices) & set(eb.vertices)
                if shared:
                    pair_ok[(a, b)] = all(
                        v in ea.central_vertices or v in eb.central_vertices for v in shared
                    )
    total = 0
    for k in range(1, k_max + 1):
        try:
            assignment, nodes = search_groups(g, groups, k, pair_ok=pair_ok, node_budget=node_budget)
        except _Budget:
            return SolveResult(EXCEEDED_BUDGET, None, None, total, time.perf_counter() - start)
        total += nodes
        if assignment is not None:
            col = _assignment_to_coloring(g, groups, assignment, k)
            assert verify_coloring(g, col).valid
            return SolveResult(COLORED, k, col, total, time.perf_counter() - start)
    return SolveResult(REFUTED, None, None, total, time.perf_counter() - start)
