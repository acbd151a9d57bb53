"""Structure-driven colorers.

Each function here produces a locally irregular edge-coloring for a graph
class where a color bound is known: subcubic graphs with a strongly pertinent
decomposition (4 colors), fully subdivided multigraphs (2), balanced forests
(2), parity-constrained graphs (4, or 6 in the exceptional-size case), and
balanced bipartite graphs (4).  Proper edge-coloring (Vizing bound) is the
endgame primitive.  Everything is verified before being returned; when a
local extension rule does not apply, the subcubic colorer falls back to the
exhaustive element-uniform search, and the fallback is counted.
"""

from __future__ import annotations

from dataclasses import dataclass

from .decompose import TWO_PATH, Decomposition, validate_decomposition
from .graph import Graph, GraphError, fully_subdivide
from .irregularity import EdgeColoring, verify_coloring
from .solver import COLORED, edge_order, element_uniform_search, search_groups


# -- parity machinery ---------------------------------------------------------


@dataclass(frozen=True)
class ParityPair:
    """A graph with a 0/1 vertex signature prescribing color-count parities."""

    graph: Graph
    signature: tuple[int, ...]

    def __post_init__(self):
        if len(self.signature) != self.graph.n:
            raise GraphError(
                f"signature has {len(self.signature)} entries for {self.graph.n} vertices"
            )
        if any(s not in (0, 1) for s in self.signature):
            raise GraphError("signature values must be 0 or 1")

    def violations(self) -> tuple[str, ...]:
        """Propriety check: (P1) 0-signed vertices have even degree; (P2) no
        component carries exactly one 1-signed vertex."""
        out = []
        deg = self.graph.degrees
        for v, s in enumerate(self.signature):
            if s == 0 and deg[v] % 2:
                out.append(f"(P1) vertex {v} has signature 0 but odd degree {deg[v]}")
        for comp in self.graph.components():
            ones = [v for v in comp if self.signature[v] == 1]
            if len(ones) == 1:
                out.append(
                    f"(P2) component {comp} has exactly one vertex of signature 1 ({ones[0]})"
                )
        return tuple(out)

    @property
    def is_proper(self) -> bool:
        return not self.violations()


@dataclass(frozen=True)
class Bipartition:
    """Vertex bipartition with the all-even-degrees side distinguished."""

    even_side: frozenset[int]
    other_side: frozenset[int]

    def violations(self, g: Graph) -> tuple[str, ...]:
        out = []
        if self.even_side & self.other_side:
            out.append("the two sides overlap")
        if self.even_side | self.other_side != frozenset(range(g.n)):
            out.append("the two sides do not cover the vertex set")
        for u, v in g.edges:
            if {u, v} <= self.even_side or {u, v} <= self.other_side:
                out.append(f"edge ({u},{v}) lies inside one side")
                break
        for v in sorted(self.even_side):
            if v < g.n and g.degrees[v] % 2:
                out.append(f"even-side vertex {v} has odd degree {g.degrees[v]}")
        return tuple(out)


def vertex_parity_color(p: ParityPair, k_max: int = 6) -> EdgeColoring:
    """Minimal-k edge coloring where, at every vertex v, each appearing color
    has an edge count of parity ``signature[v]``.

    Four colors suffice whenever the number of 1-signed vertices differs from
    3, six always; failures inside those bounds indicate a bug, not an input
    problem, so the search is exhaustive per k.
    """
    if k_max < 1:
        raise GraphError("k_max must be at least 1")
    bad = p.violations()
    if bad:
        raise GraphError(f"improper parity pair: {bad[0]}")
    g = p.graph
    if g.m == 0:
        return EdgeColoring((), 0)
    order = edge_order(g)
    for k in range(1, k_max + 1):
        colors = _parity_search(g, order, p.signature, k)
        if colors is not None:
            return EdgeColoring(tuple(colors), k)
    raise GraphError(f"no vertex-parity coloring with at most {k_max} colors")


def _parity_search(g: Graph, order, sig, k: int):
    cnt = [[0] * (k + 1) for _ in range(g.n)]
    rem = list(g.degrees)
    # number of appearing colors at v whose current parity disagrees with sig;
    # each further edge at v flips one color's parity, so wrong[v] <= rem[v]
    wrong = [0] * g.n
    ecol = [0] * g.m

    def bump(x, c, delta):
        before = cnt[x][c]
        after = before + delta
        was = before > 0 and before % 2 != sig[x]
        now = after > 0 and after % 2 != sig[x]
        wrong[x] += now - was
        cnt[x][c] = after
        rem[x] -= delta

    def dfs(i, max_used):
        if i == len(order):
            return True
        e = order[i]
        u, v = g.edges[e]
        for c in range(1, min(max_used + 1, k) + 1):
            bump(u, c, 1)
            bump(v, c, 1)
            if wrong[u] <= rem[u] and wrong[v] <= rem[v]:
                ecol[e] = c
                if dfs(i + 1, max(max_used, c)):
                    return True
                ecol[e] = 0
            bump(u, c, -1)
            bump(v, c, -1)
        return False

    return list(ecol) if dfs(0, 0) else None


# -- balanced forests ---------------------------------------------------------


def color_balanced_forest_2(f: Graph, b: Bipartition) -> EdgeColoring:
    """2-color a balanced forest, monochromatically at each even-side vertex.

    Every edge of a balanced forest has exactly one even-side endpoint, so the
    even-side edge bundles partition the edges and the search space collapses
    to one color choice per bundle.
    """
    if f.m != f.n - len(f.components()):
        raise GraphError("input is not a forest")
    bad = b.violations(f)
    if bad:
        raise GraphError(f"invalid bipartition: {bad[0]}")
    if f.m == 0:
        return EdgeColoring((), 0)
    bundles = [
        tuple(e for e, _ in f.incidence[v]) for v in sorted(b.even_side) if f.incidence[v]
    ]
    rank = {e: i for i, e in enumerate(edge_order(f))}
    bundles.sort(key=lambda grp: min(rank[e] for e in grp))
    for k in (1, 2):
        assignment, _ = search_groups(f, bundles, k)
        if assignment is not None:
            colors = [0] * f.m
            for grp, c in zip(bundles, assignment):
                for e in grp:
                    colors[e] = c
            col = EdgeColoring(tuple(colors), k)
            assert verify_coloring(f, col).valid
            return col
    raise GraphError("balanced forest refused a 2-color bundle coloring (bug)")


# -- proper edge coloring -----------------------------------------------------


def _exact_edge_color(g: Graph, k: int, budget: int):
    """Backtracking proper k-edge-coloring; None on refutation or budget."""
    order = edge_order(g)
    ecol = [0] * g.m
    nodes = 0

    def dfs(i, max_used):
        nonlocal nodes
        if i == len(order):
            return True
        e = order[i]
        u, v = g.edges[e]
        taken = {ecol[f] for x in (u, v) for f, _ in g.incidence[x]}
        for c in range(1, min(max_used + 1, k) + 1):
            if c in taken:
                continue
            nodes += 1
            if nodes > budget:
                raise _ExactBudget
            ecol[e] = c
            if dfs(i + 1, max(max_used, c)):
                return True
            ecol[e] = 0
        return False

    try:
        found = dfs(0, 0)
    except _ExactBudget:
        return None
    return list(ecol) if found else None


class _ExactBudget(Exception):
    pass


def proper_edge_color(g: Graph) -> EdgeColoring:
    """Proper edge coloring with at most max degree + 1 colors.

    A budgeted exact search tries to finish with max-degree colors first
    (class 1 graphs at desk scale); otherwise fan rotation with
    alternating-path inversion guarantees the +1 bound."""
    if g.multigraph and len(set(g.edges)) != g.m:
        raise GraphError("proper_edge_color requires a simple graph")
    if g.m == 0:
        return EdgeColoring((), 0)
    delta = max(g.degrees)
    exact = _exact_edge_color(g, delta, budget=200_000)
    if exact is not None:
        return EdgeColoring(tuple(exact), delta)
    kk = delta + 1
    ecol = [0] * g.m
    at: list[dict[int, int]] = [dict() for _ in range(g.n)]  # color -> edge id

    def free(v):
        return next(c for c in range(1, kk + 1) if c not in at[v])

    def other(e, x):
        u, v = g.edges[e]
        return v if x == u else u

    def uncolor(e):
        c = ecol[e]
        if c:
            u, v = g.edges[e]
            del at[u][c]
            del at[v][c]
            ecol[e] = 0

    def set_color(e, c):
        uncolor(e)
        u, v = g.edges[e]
        ecol[e] = c
        at[u][c] = e
        at[v][c] = e

    def invert_path(start, first, second):
        """Flip colors along the maximal path from start alternating
        first/second; start has no first-colored edge afterwards iff it had one."""
        x, want = start, first
        path = []
        while True:
            e = at[x].get(want)
            if e is None:
                break
            path.append(e)
            x = other(e, x)
            want = first if want == second else second
        for e in path:
            uncolor(e)
        want = second
        x = start
        for e in path:
            set_color(e, want)
            x = other(e, x)
            want = first if want == second else second

    for e0 in range(g.m):
        u, v0 = g.edges[e0]
        fan = [v0]
        fan_edges = [e0]
        used = {v0}
        while True:
            last = fan[-1]
            step = None
            for c in range(1, kk + 1):
                if c in at[last]:
                    continue
                e2 = at[u].get(c)
                if e2 is not None and other(e2, u) not in used:
                    step = e2
                    break
            if step is None:
                break
            w = other(step, u)
            fan.append(w)
            fan_edges.append(step)
            used.add(w)
        d = free(fan[-1])
        if d in at[u]:
            c = free(u)
            invert_path(u, d, c)
        # rotate the longest fan prefix that still ends at a d-free vertex
        cut = None
        for j in range(len(fan) - 1, -1, -1):
            # rotating the prefix shifts each fan edge's color one step down,
            # so every shifted color must be absent at its receiving vertex
            if d not in at[fan[j]] and all(
                ecol[fan_edges[i + 1]] not in at[fan[i]] for i in range(j)
            ):
                cut = j
                break
        if cut is None:
            raise GraphError("fan rotation failed (bug)")
        shift = [ecol[fan_edges[i + 1]] for i in range(cut)]
        for i in range(cut, -1, -1):
            uncolor(fan_edges[i])
        for i in range(cut):
            set_color(fan_edges[i], shift[i])
        set_color(fan_edges[cut], d)
    col = EdgeColoring(tuple(ecol), kk)
    for v in range(g.n):
        seen = [ecol[e] for e, _ in g.incidence[v]]
        assert len(seen) == len(set(seen))
    return col


def subdivided_base(g: Graph) -> Graph:
    """Recover the cubic base graph b with fully_subdivide(b) == g exactly
    (same vertex and edge ids); raises on any shape mismatch."""
    deg = g.degrees
    n_base = sum(1 for d in deg if d == 3)
    if any(deg[v] != 3 for v in range(n_base)) or any(
        deg[v] != 2 for v in range(n_base, g.n)
    ):
        raise GraphError("not a fully subdivided cubic graph in canonical layout")
    edges = []
    for s in range(n_base, g.n):
        nb = g.neighbors(s)
        if len(nb) != 2 or any(x >= n_base for x in nb):
            raise GraphError("not a fully subdivided cubic graph in canonical layout")
        edges.append((nb[0], nb[1]))
    try:
        base = Graph(n_base, tuple(edges))
    except GraphError as exc:
        raise GraphError(f"not a fully subdivided cubic graph: {exc}") from exc
    if fully_subdivide(base) != g:
        raise GraphError("subdivision vertex ids do not follow the canonical layout")
    return base


def induced_coloring_from_subdivided_proper(g: Graph, proper: EdgeColoring) -> EdgeColoring:
    """Lift a proper coloring of the cubic base onto its full subdivision:
    both halves of each subdivided edge inherit the base edge's color, so each
    color class is a disjoint union of 2-paths."""
    base = subdivided_base(g)
    if len(proper.colors) != base.m:
        raise GraphError(f"coloring has {len(proper.colors)} entries for {base.m} base edges")
    for v in range(base.n):
        seen = [proper.colors[e] for e, _ in base.incidence[v]]
        if len(seen) != len(set(seen)):
            raise GraphError(f"base coloring is not proper at vertex {v}")
    colors = [0] * g.m
    for e in range(base.m):
        colors[2 * e] = colors[2 * e + 1] = proper.colors[e]
    col = EdgeColoring(tuple(colors), proper.k)
    assert verify_coloring(g, col).valid
    return col


# -- fully subdivided multigraphs ---------------------------------------------
#
# A 2-coloring of the subdivision of a base multigraph is a per-base-edge
# state (color at the u half, color at the v half).  Local irregularity of
# the subdivision reduces to constraints at the original vertices only: a
# half of color c belonging to a monochromatic edge forbids a total c-count
# of 2 at its endpoint, a half of a split edge forbids a c-count of 1.

_STATES = ((1, 1), (1, 2), (2, 1), (2, 2))


def _half_at(base: Graph, e: int, v: int, st) -> int:
    return st[0] if v == base.edges[e][0] else st[1]


def _halves_ok(halves) -> bool:
    total = {1: 0, 2: 0}
    forb = {1: set(), 2: set()}
    for c, mono in halves:
        total[c] += 1
        forb[c].add(2 if mono else 1)
    return total[1] not in forb[1] and total[2] not in forb[2]


def _vertex_states_ok(base: Graph, states, v: int) -> bool:
    halves = []
    for e, _ in base.incidence[v]:
        st = states[e]
        halves.append((_half_at(base, e, v, st), st[0] == st[1]))
    return _halves_ok(halves)


def _csp_states(base: Graph):
    """Complete backtracking over base-edge states; closure pruning at
    vertices whose incident edges are all decided."""
    order = edge_order(base)
    states: list[tuple[int, int] | None] = [None] * base.m
    rem = list(base.degrees)

    def dfs(i):
        if i == len(order):
            return True
        e = order[i]
        u, v = base.edges[e]
        rem[u] -= 1
        rem[v] -= 1
        choices = _STATES[:2] if i == 0 else _STATES  # global color swap symmetry
        for st in choices:
            states[e] = st
            if all(rem[x] > 0 or _vertex_states_ok(base, states, x) for x in (u, v)):
                if dfs(i + 1):
                    return True
        states[e] = None
        rem[u] += 1
        rem[v] += 1
        return False

    return list(states) if dfs(0) else None


def _fundamental_cycles(base: Graph):
    """Cycles (vertex list, edge list) through each non-tree edge of a BFS
    spanning tree; base must be connected with at least one edge."""
    start = min(v for v in range(base.n) if base.degrees[v] > 0)
    parent: dict[int, tuple[int, int]] = {}
    depth = {start: 0}
    tree_edges = set()
    queue = [start]
    qi = 0
    while qi < len(queue):
        x = queue[qi]
        qi += 1
        for e, y in base.incidence[x]:
            if y not in depth:
                depth[y] = depth[x] + 1
                parent[y] = (x, e)
                tree_edges.add(e)
                queue.append(y)
    cycles = []
    for e, (u, v) in enumerate(base.edges):
        if e in tree_edges:
            continue
        pu, pv = [u], [v]
        a, b = u, v
        while depth[a] > depth[b]:
            a = parent[a][0]
            pu.append(a)
        while depth[b] > depth[a]:
            b = parent[b][0]
            pv.append(b)
        while a != b:
            a = parent[a][0]
            pu.append(a)
            b = parent[b][0]
            pv.append(b)
        verts = pu + pv[:-1][::-1]
        eids = [parent[x][1] for x in pu[:-1]]
        eids += [parent[x][1] for x in reversed(pv[:-1])]
        eids.append(e)
        cycles.append((verts, eids))
    return cycles


def _extend_over_cycle(base: Graph, states, verts, eids) -> bool:
    """Assign states to the cycle's edges so every cycle vertex stays valid
    against its already-decided incident halves.  Cyclic DP over the four
    edge states; writes into ``states`` and returns True on success."""
    length = len(eids)
    on_cycle = set(eids)
    old: dict[int, list] = {}
    for v in verts:
        halves = []
        for e, _ in base.incidence[v]:
            if e in on_cycle:
                continue
            st = states[e]
            halves.append((_half_at(base, e, v, st), st[0] == st[1]))
        old[v] = halves

    def ok(v, e_prev, st_prev, e_cur, st_cur):
        halves = list(old[v])
        for e, st in ((e_prev, st_prev), (e_cur, st_cur)):
            halves.append((_half_at(base, e, v, st), st[0] == st[1]))
        return _halves_ok(halves)

    for s0 in _STATES:
        layers: list[dict] = [{s0: None}]
        dead = False
        for i in range(1, length):
            cur = {}
            for sp in layers[-1]:
                for sc in _STATES:
                    if sc not in cur and ok(verts[i], eids[i - 1], sp, eids[i], sc):
                        cur[sc] = sp
            if not cur:
                dead = True
                break
            layers.append(cur)
        if dead:
            continue
        for slast in layers[-1]:
            if ok(verts[0], eids[-1], slast, eids[0], s0):
                seq = [slast]
                for i in range(length - 1, 0, -1):
                    seq.append(layers[i][seq[-1]])
                seq.reverse()
                for e, st in zip(eids, seq):
                    states[e] = st
                return True
    return False


def _connected_subdivision_states(base: Graph):
    """States for one connected base component (not an odd cycle)."""
    if base.m == 0:
        return []
    if base.is_cycle():
        if base.m % 2:
            raise GraphError(f"base component is an odd cycle of length {base.m}")
        # walk the cycle, alternating monochromatic colors edge by edge
        states = [None] * base.m
        v, prev_e, color = 0, None, 1
        for _ in range(base.m):
            e = next(e for e, _ in base.incidence[v] if e != prev_e and states[e] is None)
            states[e] = (color, color)
            color = 3 - color
            v = base.edges[e][0] if base.edges[e][1] == v else base.edges[e][1]
            prev_e = e
        return states
    if base.m == base.n - 1:
        # tree: the subdivision is a balanced forest with the subdivision
        # vertices as the all-even side, monochromatic by the forest lemma
        s = fully_subdivide(base)
        b = Bipartition(
            frozenset(range(base.n, base.n + base.m)), frozenset(range(base.n))
        )
        col = color_balanced_forest_2(s, b)
        return [(col.colors[2 * e], col.colors[2 * e + 1]) for e in range(base.m)]
    for verts, eids in _fundamental_cycles(base):
        remainder = sorted(set(range(base.m)) - set(eids))
        if remainder:
            sub = base.subgraph(remainder)
            if any(_component_is_odd_cycle(sub, comp) for comp in sub.components()):
                continue
            sub_states = _subdivision_states(sub)
        else:
            sub_states = []
        states: list = [None] * base.m
        for local, e in enumerate(remainder):
            states[e] = sub_states[local]
        if _extend_over_cycle(base, states, verts, eids):
            return states
    states = _csp_states(base)
    if states is None:
        raise GraphError("no 2-coloring of the subdivision exists (bug: component is not an odd cycle)")
    return states


def _component_is_odd_cycle(g: Graph, comp) -> bool:
    eids = [e for e, (u, _) in enumerate(g.edges) if u in set(comp)]
    return (
        len(eids) == len(comp)
        and len(eids) % 2 == 1
        and all(sum(1 for e, _ in g.incidence[v] if e in set(eids)) == 2 for v in comp)
    )


def _subdivision_states(base: Graph):
    states: list = [None] * base.m
    for comp in base.components():
        cset = set(comp)
        eids = [e for e, (u, _) in enumerate(base.edges) if u in cset]
        if not eids:
            continue
        sub = base.subgraph(eids)
        sub_states = _connected_subdivision_states(sub)
        for local, e in enumerate(sorted(eids)):
            states[e] = sub_states[local]
    return states


def color_fully_subdivided_2(g_base: Graph) -> EdgeColoring:
    """2-color the full subdivision of a loopless multigraph, none of whose
    components is an odd cycle (odd cycles are the sole obstruction)."""
    states = _subdivision_states(g_base)
    colors = [0] * (2 * g_base.m)
    for e in range(g_base.m):
        colors[2 * e] = states[e][0]
        colors[2 * e + 1] = states[e][1]
    k = 2 if any(c == 2 for c in colors) else (1 if colors else 0)
    col = EdgeColoring(tuple(colors), k)
    assert verify_coloring(fully_subdivide(g_base), col).valid
    return col


# -- balanced bipartite graphs --------------------------------------------------


def _cycle_run_coloring(g: Graph) -> EdgeColoring:
    """3-color a cycle of length 4k+2 as runs 11 22 ... 11 22 33: every color
    class is a disjoint union of 2-paths."""
    if not g.is_cycle() or g.m % 4 != 2:
        raise GraphError("run pattern applies to cycles of length 4k+2 only")
    colors = [0] * g.m
    v, prev_e = 0, None
    for i in range(g.m):
        e = next(e for e, _ in g.incidence[v] if e != prev_e and colors[e] == 0)
        colors[e] = 3 if i >= g.m - 2 else 1 + (i // 2) % 2
        v = g.edges[e][0] if g.edges[e][1] == v else g.edges[e][1]
        prev_e = e
    col = EdgeColoring(tuple(colors), 3)
    assert verify_coloring(g, col).valid
    return col


def color_balanced_4(g: Graph, b: Bipartition) -> EdgeColoring:
    """4-color a connected bipartite graph whose even_side has all even
    degrees.

    With other_side size different from 3 a vertex-parity coloring (0 on the
    even side, 1 elsewhere) is locally irregular outright, since every edge
    then joins an even count to an odd one.  With exactly 3 vertices on the
    other side, the graph is the full subdivision of a multigraph on those
    vertices; the subdivision colorer finishes, except when that multigraph
    is a triangle (g is then a 6-cycle) and the run pattern is used instead.
    """
    bad = b.violations(g)
    if bad:
        raise GraphError(f"not a balanced bipartition: {bad[0]}")
    if not g.is_connected():
        raise GraphError("color_balanced_4 expects a connected graph")
    if g.m == 0:
        return EdgeColoring((), 0)
    others = sorted(b.other_side)
    if len(others) != 3:
        sig = tuple(0 if v in b.even_side else 1 for v in range(g.n))
        col = vertex_parity_color(ParityPair(g, sig), 4)
        rep = verify_coloring(g, col)
        if not rep.valid:
            raise GraphError("parity coloring failed local irregularity (bug)")
        return col
    # every even-side vertex has even degree with at most 3 possible
    # neighbors, hence degree exactly 2: g fully subdivides a multigraph H
    idx = {v: i for i, v in enumerate(others)}
    base_edges = []
    owners = []
    for w in sorted(b.even_side):
        nb = g.neighbors(w)
        if not nb:
            continue
        if len(nb) != 2:
            raise GraphError(f"even-side vertex {w} has degree {g.degrees[w]}, expected 2")
        base_edges.append((idx[nb[0]], idx[nb[1]]))
        owners.append(w)
    h = Graph(3, tuple(base_edges), multigraph=True)
    if h.is_cycle() and h.m % 2:
        return _cycle_run_coloring(g)
    col_s = color_fully_subdivided_2(h)
    gid = {}
    for e, (u, v) in enumerate(g.edges):
        gid[(u, v)] = e
    colors = [0] * g.m
    for e, (a, c) in enumerate(h.edges):
        w = owners[e]
        ea = gid[tuple(sorted((w, others[a])))]
        ec = gid[tuple(sorted((w, others[c])))]
        colors[ea] = col_s.colors[2 * e]
        colors[ec] = col_s.colors[2 * e + 1]
    col = EdgeColoring(tuple(colors), col_s.k)
    rep = verify_coloring(g, col)
    if not rep.valid:
        raise GraphError("subdivision route produced an invalid coloring (bug)")
    return col


# -- subcubic 4-coloring --------------------------------------------------------


@dataclass
class SubcubicStats:
    """Which extension rules fired while coloring, and how often the
    exhaustive fallback was needed."""

    free_color: int = 0
    direct: int = 0
    recolor: int = 0
    swaps: int = 0
    pair_removal: int = 0
    endgame: int = 0
    base_cases: int = 0
    fallbacks: int = 0


def element_properties_ok(
    g: Graph, d: Decomposition, col: EdgeColoring
) -> tuple[bool, tuple[str, ...]]:
    """Check element-uniformity and the central-incidence rule: two incident
    elements of the same color may only meet at vertices central for one."""
    failures = []
    for el in d.elements:
        cs = {col.colors[e] for e in el.edges}
        if len(cs) != 1:
            failures.append(f"element {el.edges} is not monochromatic: colors {sorted(cs)}")
    els = d.elements
    for i in range(len(els)):
        for j in range(i + 1, len(els)):
            ci = col.colors[els[i].edges[0]]
            if ci != col.colors[els[j].edges[0]]:
                continue
            shared = set(els[i].vertices) & set(els[j].vertices)
            for v in sorted(shared):
                if v not in els[i].central_vertices and v not in els[j].central_vertices:
                    failures.append(
                        f"same-colored elements {els[i].edges} and {els[j].edges}"
                        f" meet at non-central vertex {v}"
                    )
    return (not failures, tuple(failures))


def color_subcubic_4(
    g: Graph,
    d: Decomposition,
    stats: SubcubicStats | None = None,
    trace: list | None = None,
) -> EdgeColoring:
    """Element-uniform 4-coloring of a subcubic graph from a strongly
    pertinent decomposition.

    Recursive extension: repeatedly remove the 2-path with the fewest
    conflicts, color the rest, then reinstate it by the first applicable
    rule — a color free of its neighborhood, direct placement, recoloring an
    incident element, an element-level color-pair swap, or removing a second
    2-path and placing the pair jointly.  When every remaining element is a
    2-path centered at a degree-2 vertex, a proper coloring of the contracted
    base finishes at once.  Anything still unresolved goes to the exhaustive
    element-uniform search, whose success is guaranteed for strongly
    pertinent inputs; fallbacks are counted in ``stats``.
    """
    if max(g.degrees, default=0) > 3:
        raise GraphError("color_subcubic_4 requires maximum degree at most 3")
    report = validate_decomposition(g, d, mode="strongly_pertinent")
    if not report.valid:
        raise GraphError(f"decomposition is not strongly pertinent: {report.failures[0]}")
    if stats is None:
        stats = SubcubicStats()
    els = list(d.elements)
    n_el = len(els)
    vsets = [set(el.vertices) for el in els]
    adj_el = [
        sorted(j for j in range(n_el) if j != i and vsets[i] & vsets[j]) for i in range(n_el)
    ]
    memo: dict[frozenset, dict | None] = {}

    def log(msg):
        if trace is not None:
            trace.append(msg)

    def check(assign) -> bool:
        cnt: dict[int, dict[int, int]] = {}
        for i, c in assign.items():
            for e in els[i].edges:
                for v in g.edges[e]:
                    cnt.setdefault(v, {})
                    cnt[v][c] = cnt[v].get(c, 0) + 1
        for i, c in assign.items():
            for e in els[i].edges:
                u, v = g.edges[e]
                if cnt[u][c] == cnt[v][c]:
                    return False
        for i, c in assign.items():
            for j in adj_el[i]:
                if j > i and assign.get(j) == c:
                    for v in vsets[i] & vsets[j]:
                        if (
                            v not in els[i].central_vertices
                            and v not in els[j].central_vertices
                        ):
                            return False
        return True

    def brute(active):
        order_local = sorted(active)
        assign: dict[int, int] = {}

        def rec(pos, max_used):
            if pos == len(order_local):
                return dict(assign) if check(assign) else None
            i = order_local[pos]
            for c in range(1, min(max_used + 1, 4) + 1):
                assign[i] = c
                r = rec(pos + 1, max(max_used, c))
                if r is not None:
                    return r
            del assign[i]
            return None

        return rec(0, 0)

    def place(assign, p):
        inc_colors = {assign[j] for j in adj_el[p] if j in assign}
        for c in range(1, 5):
            if c not in inc_colors:
                out = dict(assign)
                out[p] = c
                # an element with no same-colored incident element is alone
                # in its class around its own vertices, hence safe
                assert check(out)
                stats.free_color += 1
                log(f"free-color {c} for element {p}")
                return out
        for c in range(1, 5):
            out = dict(assign)
            out[p] = c
            if check(out):
                stats.direct += 1
                log(f"direct {c} for element {p}")
                return out
        return None

    def elem_swap(assign, a, b, seed):
        comp = {seed}
        stack = [seed]
        while stack:
            i = stack.pop()
            for j in adj_el[i]:
                if j not in comp and assign.get(j) in (a, b):
                    comp.add(j)
                    stack.append(j)
        out = dict(assign)
        for i in comp:
            out[i] = b if out[i] == a else a
        return out, frozenset(comp)

    def try_endgame(active):
        act_deg: dict[int, int] = {}
        for i in active:
            for e in els[i].edges:
                for v in g.edges[e]:
                    act_deg[v] = act_deg.get(v, 0) + 1
        for i in active:
            el = els[i]
            if el.kind != TWO_PATH or act_deg[el.central_vertices[0]] != 2:
                return None
        order_act = sorted(active)
        base_verts = sorted({v for i in active for v in els[i].pendant_vertices})
        bidx = {v: k for k, v in enumerate(base_verts)}
        bedges = []
        for i in order_act:
            a, c = els[i].pendant_vertices
            bedges.append((bidx[a], bidx[c]))
        if len({tuple(sorted(x)) for x in bedges}) != len(bedges):
            return None  # parallel base edges: proper colorer does not apply
        pc = proper_edge_color(Graph(len(base_verts), tuple(bedges)))
        if pc.k > 4:
            return None
        out = {i: pc.colors[k] for k, i in enumerate(order_act)}
        return out if check(out) else None

    def solve(active: frozenset):
        if active in memo:
            return memo[active]
        memo[active] = res = _solve(active)
        return res

    def _solve(active):
        if not active:
            return {}
        two_paths = [i for i in active if els[i].kind == TWO_PATH]
        total_edges = sum(len(els[i].edges) for i in active)
        if total_edges <= 4 or not two_paths:
            if len(active) > 8:
                return None
            r = brute(active)
            if r is not None:
                stats.base_cases += 1
                log(f"base case on {len(active)} elements")
            return r
        eg = try_endgame(active)
        if eg is not None:
            stats.endgame += 1
            log("endgame: proper coloring of the contracted base")
            return eg

        def key(i):
            nconf = sum(1 for j in adj_el[i] if j in active)
            return (nconf, els[i].central_vertices[0], els[i].edges)

        p = min(two_paths, key=key)
        sub = solve(active - {p})
        if sub is not None:
            r = place(sub, p)
            if r is not None:
                return r
            for j in (j for j in adj_el[p] if j in sub):
                for c2 in range(1, 5):
                    if c2 == sub[j]:
                        continue
                    alt = dict(sub)
                    alt[j] = c2
                    if check(alt):
                        r = place(alt, p)
                        if r is not None:
                            stats.recolor += 1
                            log(f"recolor element {j} -> {c2}")
                            return r
            seen = set()
            for j in (j for j in adj_el[p] if j in sub):
                a = sub[j]
                for b2 in range(1, 5):
                    if b2 == a:
                        continue
                    alt, comp = elem_swap(sub, a, b2, j)
                    sig = (frozenset((a, b2)), comp)
                    if sig in seen:
                        continue
                    seen.add(sig)
                    if check(alt):
                        r = place(alt, p)
                        if r is not None:
                            stats.swaps += 1
                            log(f"swap{{{a},{b2}}} seeded at element {j}")
                            return r
        partners = [i for i in two_paths if i != p and i in adj_el[p]]
        for rsel in sorted(partners, key=key)[:2]:
            sub2 = solve(active - {p, rsel})
            if sub2 is None:
                continue
            for cp in range(1, 5):
                for cr in range(1, 5):
                    alt = dict(sub2)
                    alt[p] = cp
                    alt[rsel] = cr
                    if check(alt):
                        stats.pair_removal += 1
                        log(f"pair-removal of elements {p} and {rsel}")
                        return alt
        return None

    result = solve(frozenset(range(n_el)))
    if result is None:
        stats.fallbacks += 1
        log("fallback: exhaustive element-uniform search")
        res = element_uniform_search(g, d, 4, enforce_property_ii=True)
        if res.status != COLORED:
            raise GraphError(
                "element-uniform 4-coloring refuted; decomposition is not colorable"
            )
        col = res.coloring
    else:
        colors = [0] * g.m
        for i, c in result.items():
            for e in els[i].edges:
                colors[e] = c
        col = EdgeColoring(tuple(colors), max(result.values(), default=0))
    assert verify_coloring(g, col).valid
    ok, fails = element_properties_ok(g, d, col)
    assert ok, fails
    return col
