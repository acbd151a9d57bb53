"""Batch verification campaigns and the two figure-instance experiments."""

from __future__ import annotations

import json
import multiprocessing
import os
import time
from dataclasses import dataclass, field

from .constructive import color_subcubic_4
from .decompose import (
    DecompositionError,
    enumerate_two_path_decompositions,
    strongly_pertinent_decomposition,
)
from .enumerate import GraphClassFilter, enumerate_graphs, enumerate_trees
from .graph import Graph, GraphError, cube_graph, write_graph6
from .irregularity import EdgeColoring
from .solver import (
    COLORED,
    EXCEEDED_BUDGET,
    NOT_DECOMPOSABLE,
    REFUTED,
    SolveResult,
    chi_irr,
    element_uniform_search,
)

CHECKPOINT_VERSION = 1


class BudgetExhausted(RuntimeError):
    """Raised when a campaign hits its node budget; a checkpoint (if
    configured) holds the completed levels."""


@dataclass
class CampaignReport:
    family: str
    n_max: int
    bound: int
    method: str
    per_n: dict[int, int] = field(default_factory=dict)  # decomposable graphs tested
    non_decomposable: dict[int, int] = field(default_factory=dict)
    histogram: dict[int, int] = field(default_factory=dict)  # colors used -> count
    exceeders: list[str] = field(default_factory=list)  # graph6, sorted
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.exceeders

    @property
    def tested(self) -> int:
        return sum(self.per_n.values())

    def to_json(self) -> str:
        return json.dumps(
            {
                "family": self.family,
                "n_max": self.n_max,
                "bound": self.bound,
                "method": self.method,
                "per_n": {str(k): v for k, v in sorted(self.per_n.items())},
                "non_decomposable": {
                    str(k): v for k, v in sorted(self.non_decomposable.items())
                },
                "histogram": {str(k): v for k, v in sorted(self.histogram.items())},
                "exceeders": sorted(self.exceeders),
            },
            indent=2,
        )

    def histogram_csv(self) -> str:
        lines = ["colors,count"]
        for k in sorted(self.histogram):
            lines.append(f"{k},{self.histogram[k]}")
        return "\n".join(lines) + "\n"


FAMILIES = {
    "cubic": GraphClassFilter(regular=3, connected=True),
    "subcubic": GraphClassFilter(max_degree=3, connected=True),
    "subcubic-min2": GraphClassFilter(max_degree=3, min_degree=2, connected=True),
    "all": GraphClassFilter(connected=True),
}


def _test_one(g: Graph, bound: int, method: str, node_budget: int | None):
    """Classify one graph: ('skip', 0) for non-decomposable inputs, otherwise
    ('ok'|'exceeder', colors used)."""
    if g.m == 0:
        return ("ok", 0)
    if method == "exact":
        res = chi_irr(g, max(bound, 1), node_budget=node_budget)
        if res.status == COLORED:
            return ("ok", res.k)
        if res.status == NOT_DECOMPOSABLE:
            return ("skip", 0)
        if res.status == EXCEEDED_BUDGET:
            raise BudgetExhausted(f"node budget hit on {write_graph6(g)}")
        # refuted within the bound: find the true value for the report
        full = chi_irr(g, max(1, g.m // 2), node_budget=node_budget)
        if full.status == EXCEEDED_BUDGET:
            raise BudgetExhausted(f"node budget hit on {write_graph6(g)}")
        if full.status == NOT_DECOMPOSABLE:
            return ("skip", 0)
        return ("exceeder", full.k)
    if method == "constructive":
        try:
            d = strongly_pertinent_decomposition(g)
        except DecompositionError:
            return ("skip", 0)
        col = color_subcubic_4(g, d)
        return (("exceeder" if col.k > bound else "ok"), col.k)
    raise GraphError(f"unknown method {method!r}")


def _worker(args):
    g6, bound, method, node_budget = args
    from .graph import parse_graph6

    g = parse_graph6(g6)
    try:
        kind, k = _test_one(g, bound, method, node_budget)
    except BudgetExhausted:
        return (g6, "budget", 0)
    return (g6, kind, k)


def _load_checkpoint(path: str, params: dict):
    if not path or not os.path.exists(path):
        return None
    with open(path) as fh:
        data = json.load(fh)
    if data.get("version") != CHECKPOINT_VERSION or data.get("params") != params:
        return None
    return data


def _save_checkpoint(path: str, params: dict, done_n: int, report: CampaignReport):
    payload = {
        "version": CHECKPOINT_VERSION,
        "params": params,
        "done_n": done_n,
        "per_n": {str(k): v for k, v in report.per_n.items()},
        "non_decomposable": {str(k): v for k, v in report.non_decomposable.items()},
        "histogram": {str(k): v for k, v in report.histogram.items()},
        "exceeders": sorted(report.exceeders),
    }
    tmp = path + ".tmp"
    with open(tmp, "w") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)


def run_campaign(
    family: GraphClassFilter | str,
    n_max: int,
    bound: int,
    method: str = "exact",
    jobs: int = 1,
    checkpoint: str | None = None,
    node_budget: int | None = None,
    progress=None,
) -> CampaignReport:
    """Test every enumerated decomposable graph of the family up to n_max
    against the color bound.  Per-level checkpointing; resuming with the same
    parameters reproduces the same final report."""
    if isinstance(family, str):
        name = family
        flt = FAMILIES[family]
    else:
        name = repr(family)
        flt = family
    if method not in ("exact", "constructive"):
        raise GraphError(f"unknown method {method!r}")
    params = {
        "family": name,
        "n_max": n_max,
        "bound": bound,
        "method": method,
        "filter": repr(flt),
    }
    report = CampaignReport(name, n_max, bound, method)
    start_n = 1
    state = _load_checkpoint(checkpoint, params) if checkpoint else None
    if state is not None:
        report.per_n = {int(k): v for k, v in state["per_n"].items()}
        report.non_decomposable = {
            int(k): v for k, v in state["non_decomposable"].items()
        }
        report.histogram = {int(k): v for k, v in state["histogram"].items()}
        report.exceeders = list(state["exceeders"])
        start_n = state["done_n"] + 1
    t0 = time.perf_counter()
    for n in range(start_n, n_max + 1):
        graphs = list(enumerate_graphs(n, flt))
        if jobs > 1 and len(graphs) > 1:
            tasks = [(write_graph6(g), bound, method, node_budget) for g in graphs]
            with multiprocessing.Pool(jobs) as pool:
                results = pool.map(_worker, tasks, chunksize=8)
        else:
            results = []
            for g in graphs:
                try:
                    kind, k = _test_one(g, bound, method, node_budget)
                except BudgetExhausted:
                    kind, k = "budget", 0
                results.append((write_graph6(g), kind, k))
        if any(kind == "budget" for _, kind, _ in results):
            # drop the whole level: a partially counted level would be
            # double-counted on resume
            if checkpoint:
                _save_checkpoint(checkpoint, params, n - 1, report)
            raise BudgetExhausted(f"campaign aborted at n={n}; checkpoint holds n<{n}")
        for g6, kind, k in sorted(results):
            if kind == "skip":
                report.non_decomposable[n] = report.non_decomposable.get(n, 0) + 1
            else:
                report.per_n[n] = report.per_n.get(n, 0) + 1
                report.histogram[k] = report.histogram.get(k, 0) + 1
                if kind == "exceeder":
                    report.exceeders.append(g6)
        if checkpoint:
            _save_checkpoint(checkpoint, params, n, report)
        if progress is not None:
            progress(n, len(graphs))
    report.exceeders = sorted(report.exceeders)
    report.elapsed = time.perf_counter() - t0
    return report


# -- tree search (first figure) -------------------------------------------------


@dataclass(frozen=True)
class TreeSearchReport:
    witness: Graph
    chi: int
    refutation_nodes: int  # exhaustive nodes proving 2 colors impossible
    trees_scanned: int
    max_degree_5_plus_ok: bool  # decomposable trees with max degree >= 5 need <= 2


def find_tree_needing_3(max_edges: int = 10) -> TreeSearchReport:
    """Scan trees by increasing edge count for the first one with locally
    irregular chromatic index 3; along the way confirm that decomposable
    trees of maximum degree at least 5 never need a third color."""
    witness = None
    witness_chi = 0
    refut_nodes = 0
    scanned = 0
    delta5_ok = True
    for m in range(1, max_edges + 1):
        for t in enumerate_trees(m + 1):
            scanned += 1
            res = chi_irr(t, 3)
            if res.status != COLORED:
                continue
            if max(t.degrees) >= 5 and res.k > 2:
                delta5_ok = False
            if res.k == 3 and witness is None:
                recheck = chi_irr(t, 2)
                assert recheck.status == REFUTED
                confirm = chi_irr(t, 3)
                assert confirm.status == COLORED and confirm.k == 3
                witness = t
                witness_chi = 3
                refut_nodes = recheck.nodes
        if witness is not None and m >= max_edges:
            break
    if witness is None:
        raise GraphError(f"no tree with chromatic index 3 within {max_edges} edges")
    return TreeSearchReport(witness, witness_chi, refut_nodes, scanned, delta5_ok)


# -- subdivided-cube experiment (second figure) ----------------------------------


def fig6_instance() -> Graph:
    """The 3-cube with one edge subdivided three times and the rest once:
    22 vertices, 26 edges."""
    base = cube_graph()
    edges = []
    nxt = base.n
    for e, (u, v) in enumerate(base.edges):
        inner = 3 if e == 0 else 1
        chain = [u] + list(range(nxt, nxt + inner)) + [v]
        nxt += inner
        edges.extend(zip(chain, chain[1:]))
    return Graph(nxt, tuple(edges))


@dataclass(frozen=True)
class Fig6Report:
    instance: Graph
    refuted: "DecompositionWitness"
    two_colorable: "DecompositionWitness"
    decompositions_scanned: int


@dataclass(frozen=True)
class DecompositionWitness:
    decomposition_json: str
    status: str
    k: int | None
    coloring_json: str | None


def fig6_experiment(max_scan: int = 200_000) -> Fig6Report:
    """Scan 2-path decompositions of the subdivided cube for two witnesses:
    one refuting 3 element-uniform colors and one admitting 2."""
    g = fig6_instance()
    assert g.n == 22 and g.m == 26
    refuted = None
    two_col = None
    scanned = 0
    for d in enumerate_two_path_decompositions(g):
        scanned += 1
        if two_col is None:
            res2 = element_uniform_search(g, d, 2, enforce_property_ii=False)
            if res2.status == COLORED:
                two_col = DecompositionWitness(
                    d.to_json(), COLORED, res2.k, res2.coloring.to_json()
                )
        if refuted is None:
            res3 = element_uniform_search(g, d, 3, enforce_property_ii=False)
            if res3.status == REFUTED:
                refuted = DecompositionWitness(d.to_json(), REFUTED, None, None)
        if (refuted and two_col) or scanned >= max_scan:
            break
    if refuted is None or two_col is None:
        raise GraphError(
            f"witness search exhausted after {scanned} decompositions"
            f" (refuted={refuted is not None}, two_colorable={two_col is not None})"
        )
    return Fig6Report(g, refuted, two_col, scanned)
