import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from locirr.constructive import (
    Bipartition,
    ParityPair,
    SubcubicStats,
    color_balanced_4,
    color_balanced_forest_2,
    color_fully_subdivided_2,
    color_subcubic_4,
    element_properties_ok,
    induced_coloring_from_subdivided_proper,
    proper_edge_color,
    subdivided_base,
    vertex_parity_color,
)
from locirr.decompose import strongly_pertinent_decomposition
from locirr.graph import (
    Graph,
    GraphError,
    complete_graph,
    cube_graph,
    cycle_graph,
    fully_subdivide,
    path_graph,
    star_graph,
)
from locirr.irregularity import EdgeColoring, verify_coloring
from locirr.solver import COLORED, chi_irr

PETERSEN = Graph(
    10,
    ((0, 1), (1, 2), (2, 3), (3, 4), (0, 4),
     (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
     (5, 7), (7, 9), (9, 6), (6, 8), (8, 5)),
)


class TestParityPair:
    def test_p1_violation_named(self):
        p = ParityPair(path_graph(2), (0, 1, 1))  # vertex 0 has degree 1
        assert any(v.startswith("(P1) vertex 0") for v in p.violations())

    def test_p2_violation_named(self):
        p = ParityPair(cycle_graph(4), (0, 1, 0, 0))
        assert any(v.startswith("(P2)") for v in p.violations())

    def test_degree_parity_signature_is_proper(self, connected_small):
        for g in connected_small:
            sig = tuple(d % 2 for d in g.degrees)
            assert ParityPair(g, sig).is_proper

    def test_signature_length_checked(self):
        with pytest.raises(GraphError):
            ParityPair(path_graph(2), (0, 1))
        with pytest.raises(GraphError):
            ParityPair(path_graph(2), (0, 1, 2))


class TestVertexParity:
    def test_c4_all_even(self):
        col = vertex_parity_color(ParityPair(cycle_graph(4), (0, 0, 0, 0)))
        assert col.k == 1

    def test_claw_all_odd(self):
        col = vertex_parity_color(ParityPair(star_graph(3), (1, 1, 1, 1)))
        assert col.k == 1

    def test_p3_center_even(self):
        col = vertex_parity_color(ParityPair(path_graph(2), (1, 0, 1)))
        assert col.k == 1

    def test_improper_rejected(self):
        with pytest.raises(GraphError) as exc:
            vertex_parity_color(ParityPair(path_graph(2), (0, 0, 1)))
        assert "(P1)" in str(exc.value)

    def test_parity_table_matches_signature(self, connected_small):
        rng = random.Random(7)
        for g in connected_small:
            if g.m == 0 or g.m > 10:
                continue
            sigs = {tuple(d % 2 for d in g.degrees)}
            if g.n >= 2:
                sigs.add((1,) * g.n)
            for _ in range(3):
                sig = tuple(
                    rng.randint(0, 1) if g.degrees[v] % 2 == 0 else 1
                    for v in range(g.n)
                )
                if ParityPair(g, sig).is_proper:
                    sigs.add(sig)
            for sig in sigs:
                pair = ParityPair(g, sig)
                if not pair.is_proper:
                    continue
                col = vertex_parity_color(pair)
                assert oracles.parity_table_ok(g, col.colors, sig)
                limit = 4 if sum(sig) != 3 else 6
                assert col.k <= limit

    def test_minimality(self):
        # C6 with alternating signature needs more than one color
        g = cycle_graph(6)
        sig = (1, 1, 1, 1, 1, 1)
        col = vertex_parity_color(ParityPair(g, sig))
        assert col.k == 2
        # exhaustive check that one color is indeed impossible: a single class
        # would give every vertex an even count 2
        assert not oracles.parity_table_ok(g, (1,) * 6, sig)


class TestBalancedForest:
    def test_star_center_even(self):
        g = star_graph(4)
        col = color_balanced_forest_2(g, Bipartition(frozenset({0}), frozenset({1, 2, 3, 4})))
        assert col.k == 1

    def test_p5_internal(self):
        g = path_graph(4)
        col = color_balanced_forest_2(g, Bipartition(frozenset({1, 3}), frozenset({0, 2, 4})))
        assert col.k == 2 and verify_coloring(g, col).valid
        assert col.colors[0] == col.colors[1] and col.colors[2] == col.colors[3]

    def test_p3(self):
        g = path_graph(2)
        col = color_balanced_forest_2(g, Bipartition(frozenset({1}), frozenset({0, 2})))
        assert col.k == 1

    def test_not_a_forest(self):
        with pytest.raises(GraphError):
            color_balanced_forest_2(
                cycle_graph(4), Bipartition(frozenset({0, 2}), frozenset({1, 3}))
            )

    def test_odd_even_side_rejected(self):
        with pytest.raises(GraphError):
            color_balanced_forest_2(
                path_graph(2), Bipartition(frozenset({0, 2}), frozenset({1}))
            )

    def test_monochromatic_on_subdivided_trees(self):
        import networkx as nx

        for seed in range(25):
            nxt = nx.random_labeled_tree(random.Random(seed).randint(2, 9), seed=seed)
            t = Graph(nxt.number_of_nodes(), tuple(nxt.edges()))
            s = fully_subdivide(t)
            even = frozenset(range(t.n, s.n))  # subdivision vertices, degree 2
            col = color_balanced_forest_2(s, Bipartition(even, frozenset(range(t.n))))
            assert col.k <= 2 and verify_coloring(s, col).valid
            for v in even:
                assert len({col.colors[e] for e, _ in s.incidence[v]}) == 1


class TestProperEdgeColoring:
    def test_star(self):
        assert proper_edge_color(star_graph(3)).k == 3

    def test_c4(self):
        assert proper_edge_color(cycle_graph(4)).k == 2

    def test_petersen_class_two(self):
        col = proper_edge_color(PETERSEN)
        assert col.k == 4
        assert not oracles.proper_k_colorable(PETERSEN, 3)

    def test_cube_class_one(self):
        assert proper_edge_color(cube_graph()).k == 3

    @given(st.randoms(use_true_random=False))
    @settings(max_examples=150, deadline=None)
    def test_proper_within_vizing(self, rng):
        from conftest import random_graph

        g = random_graph(rng, n_max=9, p=0.5)
        col = proper_edge_color(g)
        delta = max(g.degrees, default=0)
        assert col.k <= delta + 1
        for v in range(g.n):
            seen = [col.colors[e] for e, _ in g.incidence[v]]
            assert len(seen) == len(set(seen))
        if col.k == delta + 1 and g.m <= 10:
            assert not oracles.proper_k_colorable(g, delta)


class TestSubdividedBase:
    def test_k4_round_trip(self):
        s = fully_subdivide(complete_graph(4))
        assert subdivided_base(s) == complete_graph(4)

    def test_non_subdivided_rejected(self):
        with pytest.raises(GraphError):
            subdivided_base(complete_graph(4))
        with pytest.raises(GraphError):
            subdivided_base(fully_subdivide(star_graph(3)))  # base not cubic

    def test_induced_from_c4_base(self):
        # the subdivision of a cycle is a doubled cycle; both halves of each
        # base edge inherit its color
        s = fully_subdivide(cube_graph())
        col = induced_coloring_from_subdivided_proper(s, proper_edge_color(cube_graph()))
        assert verify_coloring(s, col).valid
        for e in range(cube_graph().m):
            assert col.colors[2 * e] == col.colors[2 * e + 1]

    def test_induced_k4(self):
        s = fully_subdivide(complete_graph(4))
        col = induced_coloring_from_subdivided_proper(s, proper_edge_color(complete_graph(4)))
        assert col.k == 3 and verify_coloring(s, col).valid

    def test_improper_base_coloring_rejected(self):
        s = fully_subdivide(complete_graph(4))
        with pytest.raises(GraphError):
            induced_coloring_from_subdivided_proper(s, EdgeColoring((1,) * 6, 1))


class TestFullySubdivided2:
    def check(self, base, expect_k=None):
        col = color_fully_subdivided_2(base)
        s = fully_subdivide(base)
        assert verify_coloring(s, col).valid
        assert col.k <= 2
        if expect_k is not None:
            assert col.k == expect_k
        return col

    def test_claw(self):
        self.check(star_graph(3), expect_k=1)

    def test_c4(self):
        self.check(cycle_graph(4), expect_k=2)

    def test_k4(self):
        self.check(complete_graph(4))

    def test_path(self):
        self.check(path_graph(3), expect_k=2)

    def test_multigraph_bases(self):
        two_cycle = Graph(2, ((0, 1), (0, 1)), multigraph=True)
        self.check(two_cycle)
        theta = Graph(2, ((0, 1), (0, 1), (0, 1)), multigraph=True)
        self.check(theta)
        figure_eight = Graph(3, ((0, 1), (0, 1), (0, 2), (0, 2)), multigraph=True)
        self.check(figure_eight)

    def test_odd_cycles_rejected(self):
        for m in (3, 5, 7):
            with pytest.raises(GraphError) as exc:
                color_fully_subdivided_2(cycle_graph(m))
            assert "odd cycle" in str(exc.value)

    def test_odd_cycle_component_rejected(self):
        g = Graph(7, ((0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 6), (6, 3)))
        with pytest.raises(GraphError):
            color_fully_subdivided_2(g)


class TestBalanced4:
    def test_subdivided_claw(self):
        s = fully_subdivide(star_graph(3))
        b = Bipartition(frozenset(range(4, 7)), frozenset(range(4)))
        col = color_balanced_4(s, b)
        assert col.k == 1 and verify_coloring(s, col).valid

    def test_c4(self):
        b = Bipartition(frozenset({0, 2}), frozenset({1, 3}))
        col = color_balanced_4(cycle_graph(4), b)
        assert col.k <= 4 and verify_coloring(cycle_graph(4), col).valid

    def test_c6_gap_case(self):
        # three degree-2 vertices on the non-even side force the subdivision
        # route, whose base is an odd cycle; the run-pattern handler kicks in
        g = cycle_graph(6)
        b = Bipartition(frozenset({0, 2, 4}), frozenset({1, 3, 5}))
        col = color_balanced_4(g, b)
        assert verify_coloring(g, col).valid
        assert col.k == 3 == chi_irr(g, 3).k

    def test_unbalanced_rejected(self):
        g = path_graph(2)  # even side would need vertex degrees all even
        with pytest.raises(GraphError):
            color_balanced_4(g, Bipartition(frozenset({0, 2}), frozenset({1})))

    def test_non_bipartition_rejected(self):
        with pytest.raises(GraphError):
            color_balanced_4(
                cycle_graph(4), Bipartition(frozenset({0, 1}), frozenset({2, 3}))
            )


class TestSubcubic4:
    def run(self, g, expect_max=4):
        d = strongly_pertinent_decomposition(g)
        stats = SubcubicStats()
        col = color_subcubic_4(g, d, stats=stats)
        assert col.k <= expect_max
        assert verify_coloring(g, col).valid
        ok, failures = element_properties_ok(g, d, col)
        assert ok, failures
        return col, stats

    def test_claw(self):
        col, _ = self.run(star_graph(3))
        assert col.k == 1

    def test_c4(self):
        col, _ = self.run(cycle_graph(4))
        assert col.k == 2

    def test_k4(self):
        self.run(complete_graph(4))

    def test_cube(self):
        self.run(cube_graph())

    def test_petersen(self):
        self.run(PETERSEN)

    def test_subdivided_claw_instance(self):
        g = Graph(6, ((0, 1), (0, 2), (0, 3), (2, 4), (3, 5)))
        col, _ = self.run(g)
        assert col.k == 1  # the whole element is one locally irregular graph

    def test_trace_names_rules(self):
        g = cube_graph()
        d = strongly_pertinent_decomposition(g)
        trace: list[str] = []
        color_subcubic_4(g, d, trace=trace)
        assert trace

    def test_non_subcubic_rejected(self):
        g = star_graph(4)
        with pytest.raises(GraphError):
            color_subcubic_4(g, strongly_pertinent_decomposition(g))

    def test_element_properties_detect_breakage(self):
        g = cycle_graph(4)
        d = strongly_pertinent_decomposition(g)
        # split an element across two colors: property (i) must fail
        bad = EdgeColoring((1, 2, 1, 2), 2)
        ok, failures = element_properties_ok(g, d, bad)
        assert not ok and failures
