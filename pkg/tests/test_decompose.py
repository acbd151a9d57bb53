import pytest

from locirr.decompose import (
    CLAW,
    SUBDIVIDED_CLAW,
    TWO_PATH,
    Decomposition,
    DecompositionError,
    Element,
    classify_two_path,
    conflicts,
    enumerate_two_path_decompositions,
    pertinent_decomposition,
    strongly_pertinent_decomposition,
    two_path_decomposition,
    validate_decomposition,
)
from locirr.graph import Graph, GraphError, complete_graph, cycle_graph, path_graph, star_graph
from locirr.solver import COLORED, chi_irr, element_uniform_search

BULL = Graph(5, ((0, 1), (0, 2), (0, 3), (1, 2), (1, 4)))
# the smallest graph whose only pertinent decomposition uses K_{1,3}'':
# a claw at the single degree-3 vertex leaves two isolated edges behind
K13PP = Graph(6, ((0, 1), (0, 2), (0, 3), (2, 4), (3, 5)))


class TestElement:
    def test_two_path(self):
        el = Element.from_edges(path_graph(2), (0, 1))
        assert (el.kind, el.central_vertices, el.pendant_vertices) == (
            TWO_PATH, (1,), (0, 2),
        )

    def test_claw(self):
        el = Element.from_edges(star_graph(3), (0, 1, 2))
        assert (el.kind, el.central_vertices) == (CLAW, (0,))
        assert el.pendant_vertices == (1, 2, 3)

    def test_subdivided_claw(self):
        el = Element.from_edges(K13PP, (0, 1, 2, 3, 4))
        assert el.kind == SUBDIVIDED_CLAW
        assert el.central_vertices == (0, 2, 3)
        assert el.pendant_vertices == (1, 4, 5)

    def test_rejects_other_shapes(self):
        with pytest.raises(DecompositionError):
            Element.from_edges(cycle_graph(3), (0, 1, 2))  # triangle
        with pytest.raises(DecompositionError):
            Element.from_edges(path_graph(3), (0, 2))  # disjoint edges
        with pytest.raises(DecompositionError):
            Element.from_edges(path_graph(3), (0, 1, 2))  # path of length 3

    def test_json_round_trip(self):
        d = pertinent_decomposition(BULL)
        assert Decomposition.from_json(BULL, d.to_json()) == d


class TestTwoPath:
    def test_p3(self):
        d = two_path_decomposition(path_graph(2))
        assert [el.kind for el in d.elements] == [TWO_PATH]

    def test_c4(self):
        d = two_path_decomposition(cycle_graph(4))
        assert len(d.elements) == 2
        assert validate_decomposition(cycle_graph(4), d, "pertinent").valid

    def test_k4(self):
        d = two_path_decomposition(complete_graph(4))
        assert len(d.elements) == 3
        assert validate_decomposition(complete_graph(4), d, "any").valid

    def test_odd_component_reported(self):
        with pytest.raises(DecompositionError) as exc:
            two_path_decomposition(cycle_graph(5))
        assert "odd size 5" in str(exc.value)

    def test_componentwise(self):
        g = Graph(7, ((0, 1), (1, 2), (3, 4), (4, 5), (5, 6), (3, 6)))
        d = two_path_decomposition(g)
        assert len(d.elements) == 3

    def test_succeeds_on_every_even_connected_graph(self, connected_small):
        for g in connected_small:
            if g.m % 2 or g.m == 0:
                continue
            d = two_path_decomposition(g)
            assert validate_decomposition(g, d, "any").valid
            assert all(el.kind == TWO_PATH for el in d.elements)


class TestPertinent:
    def test_claw_graph(self):
        d = pertinent_decomposition(star_graph(3))
        assert [el.kind for el in d.elements] == [CLAW]

    def test_bull(self):
        d = strongly_pertinent_decomposition(BULL)
        kinds = sorted(el.kind for el in d.elements)
        assert kinds == [TWO_PATH, CLAW]
        assert validate_decomposition(BULL, d, "strongly_pertinent").valid
        claw = next(el for el in d.elements if el.kind == CLAW)
        assert claw.central_vertices == (0,)

    def test_even_graph_gets_no_claw(self):
        d = pertinent_decomposition(cycle_graph(4))
        assert all(el.kind == TWO_PATH for el in d.elements)

    def test_subdivided_claw_golden_instance(self):
        d = strongly_pertinent_decomposition(K13PP)
        assert [el.kind for el in d.elements] == [SUBDIVIDED_CLAW]
        assert validate_decomposition(K13PP, d, "strongly_pertinent").valid

    def test_edge_count_law(self, subcubic_small):
        weight = {TWO_PATH: 2, CLAW: 3, SUBDIVIDED_CLAW: 5}
        for g in subcubic_small:
            if g.m == 0 or chi_irr(g, max(1, g.m // 2)).status != COLORED:
                continue
            d = pertinent_decomposition(g)
            assert sum(weight[el.kind] for el in d.elements) == g.m

    def test_strong_pertinence_means_colorable_here(self):
        # a decomposable graph on which one claw placement defeats the
        # 4-color element-uniform search; the builder must sidestep it
        g = Graph(
            8,
            ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5), (2, 6), (2, 7),
             (3, 6), (3, 7), (4, 6), (5, 7)),
        )
        assert chi_irr(g, 2).status == COLORED
        d = strongly_pertinent_decomposition(g)
        assert validate_decomposition(g, d, "strongly_pertinent").valid
        res = element_uniform_search(g, d, 4, enforce_property_ii=True)
        assert res.status == COLORED


class TestValidate:
    def test_wrong_shape(self):
        g = cycle_graph(4)
        bogus = Element(TWO_PATH, (0, 1, 2, 3), (0,), (1, 2, 3))
        report = validate_decomposition(g, Decomposition((bogus,), g))
        assert not report.valid

    def test_partition_failure(self):
        g = cycle_graph(4)
        el = Element.from_edges(g, (0, 1))
        report = validate_decomposition(g, Decomposition((el,), g))
        assert not report.valid
        assert any("partition" in f for f in report.failures)

    def test_mislabeled_roles(self):
        g = path_graph(2)
        bogus = Element(TWO_PATH, (0, 1), (0,), (1, 2))
        report = validate_decomposition(g, Decomposition((bogus,), g))
        assert not report.valid

    def test_two_claws_in_one_component(self):
        g = Graph(7, ((0, 1), (0, 2), (0, 3), (3, 4), (4, 5), (4, 6)))
        d = Decomposition(
            (Element.from_edges(g, (0, 1, 2)), Element.from_edges(g, (3, 4, 5))), g
        )
        assert validate_decomposition(g, d, "any").valid
        assert not validate_decomposition(g, d, "pertinent").valid

    def test_avoidable_subdivided_claw_flagged(self):
        # a plain claw at vertex 0 leaves an even residual, so the pertinent
        # decomposition built around a K_{1,3}'' at vertex 3 is not strong
        g = Graph(8, ((0, 1), (0, 2), (0, 3), (3, 4), (3, 5), (4, 6), (5, 7)))
        d = Decomposition(
            (
                Element.from_edges(g, (2, 3, 4, 5, 6)),
                Element.from_edges(g, (0, 1)),
            ),
            g,
        )
        assert validate_decomposition(g, d, "pertinent").valid
        report = validate_decomposition(g, d, "strongly_pertinent")
        assert not report.valid
        assert any("plain claw" in f for f in report.failures)

    def test_bad_mode(self):
        with pytest.raises(GraphError):
            validate_decomposition(cycle_graph(4), two_path_decomposition(cycle_graph(4)), "x")


class TestConflicts:
    def test_c4(self):
        g = cycle_graph(4)
        d = two_path_decomposition(g)
        for el in d.elements:
            assert conflicts(d, el)[0] == 1

    def test_bull_two_path(self):
        d = pertinent_decomposition(BULL)
        tp = next(el for el in d.elements if el.kind == TWO_PATH)
        n, hits = conflicts(d, tp)
        assert n == 1 and hits[0].kind == CLAW

    def test_foreign_element(self):
        d = two_path_decomposition(cycle_graph(4))
        alien = Element.from_edges(path_graph(2), (0, 1))
        with pytest.raises(GraphError):
            conflicts(d, alien)

    def test_matches_pairwise_oracle(self, subcubic_small):
        for g in subcubic_small:
            if g.m == 0 or g.m % 2:
                continue
            d = two_path_decomposition(g)
            for el in d.elements:
                naive = sum(
                    1
                    for q in d.elements
                    if q != el and set(q.vertices) & set(el.vertices)
                )
                assert conflicts(d, el)[0] == naive


class TestClassify:
    def test_c4_type_c(self):
        g = cycle_graph(4)
        d = two_path_decomposition(g)
        assert {classify_two_path(d, el) for el in d.elements} == {"c"}

    def test_type_a(self):
        g = Graph(5, ((0, 1), (1, 2), (2, 3), (2, 4)))
        d = Decomposition(
            (Element.from_edges(g, (0, 1)), Element.from_edges(g, (2, 3))), g
        )
        p = next(el for el in d.elements if el.central_vertices == (1,))
        assert classify_two_path(d, p) == "a"

    def test_type_b(self):
        g = Graph(6, ((0, 1), (0, 2), (0, 3), (1, 4), (1, 5)))
        d = Decomposition(
            (Element.from_edges(g, (0, 1, 2)), Element.from_edges(g, (3, 4))), g
        )
        p = next(el for el in d.elements if el.kind == TWO_PATH)
        assert classify_two_path(d, p) == "b"

    def test_non_subcubic_rejected(self):
        g = star_graph(4)
        d = Decomposition(
            (Element.from_edges(g, (0, 1)), Element.from_edges(g, (2, 3))), g
        )
        with pytest.raises(GraphError):
            classify_two_path(d, d.elements[0])

    def test_claw_rejected(self):
        g = star_graph(3)
        d = pertinent_decomposition(g)
        with pytest.raises(GraphError):
            classify_two_path(d, d.elements[0])


class TestEnumeration:
    def test_c4_has_two(self):
        ds = list(enumerate_two_path_decompositions(cycle_graph(4)))
        assert len(ds) == 2
        assert len({tuple(sorted(el.edges for el in d.elements)) for d in ds}) == 2

    def test_odd_rejected(self):
        with pytest.raises(DecompositionError):
            list(enumerate_two_path_decompositions(cycle_graph(5)))

    def test_all_outputs_valid(self):
        g = complete_graph(4)
        seen = set()
        for d in enumerate_two_path_decompositions(g):
            assert validate_decomposition(g, d, "any").valid
            key = tuple(sorted(el.edges for el in d.elements))
            assert key not in seen
            seen.add(key)
        assert seen
