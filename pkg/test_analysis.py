"""
Tests for non-commuting graph analysis: AC/CC tests, centralizer
structure, chi-graphs and per-group reports.

Usage:
    pytest test_analysis.py
"""
import json

import pytest

from ncgraph.analysis import (
    NOT_APPLICABLE,
    NOT_COMPUTED,
    SKIPPED,
    analyze,
    analyze_group,
    build_ncg,
    cc_quotient_omega_check,
    central_quotient_order,
    centralizer_partition,
    chi_graph,
    chi_group_check,
    chi_literal_graph,
    chi_record,
    commutativity_transitive,
    degree_bound_check,
    eq1_verify,
    exchange_extend,
    get_predicate,
    has_abelian_maximal_subgroup,
    is_ac,
    is_cc,
    kregular_omega,
    lazy_witness_for,
    maximal_noncommuting_set,
    omega_fast,
    pgroup_case,
    verify_centralizer_cover,
    verify_lazy_witness,
    verify_transitivity_witness,
)
from ncgraph.errors import (
    AbelianGroup,
    BadInput,
    CapExceeded,
    NotAcGroup,
    NotMaximal,
    OutOfRange,
    SpecMismatch,
)
from ncgraph.groups import ALTERNATING, ElementSet, LazyPermGroup, build_group


@pytest.fixture(scope="module")
def q8():
    return build_ncg(build_group("Q:8"))


@pytest.fixture(scope="module")
def s4():
    return build_ncg(build_group("S:4"))


def ids(ctx, *labels):
    return [ctx.group.index_of(label) for label in labels]


# ---------------------------------------------------------------------------
# Graph construction
# ---------------------------------------------------------------------------

class TestBuildNcg:
    def test_quaternion_graph(self, q8):
        graph = q8.graph
        assert graph.vertex_count == 6
        assert all(graph.degree(v) == 4 for v in range(6))
        assert [graph.label(v) for v in range(6)] == ["x", "x^3", "y", "xy", "x^2y", "x^3y"]
        assert q8.element_of(2) == q8.group.index_of("y")
        assert q8.vertex_of[q8.group.index_of("y")] == 2

    def test_vertex_counts(self):
        assert build_ncg(build_group("D:3")).graph.vertex_count == 5
        assert build_ncg(build_group("D:6")).graph.vertex_count == 10
        assert build_ncg(build_group("C:5")).graph.vertex_count == 0

    def test_distinct_centralizers(self, q8):
        reps = [rep for rep, _ in q8.distinct_centralizers]
        assert reps == ids(q8, "x", "y", "xy")
        assert [len(c) for _, c in q8.distinct_centralizers] == [4, 4, 4]


# ---------------------------------------------------------------------------
# AC / CC / transitivity
# ---------------------------------------------------------------------------

class TestAcTests:
    @pytest.mark.parametrize("text", ["Q:8", "Q:16", "D:3", "D:8", "H:3", "Q:8xC:3", "C:6"])
    def test_ac_groups(self, text):
        ctx = build_ncg(build_group(text))
        assert is_ac(ctx) == (True, None)
        assert commutativity_transitive(ctx) == (True, None)

    def test_symmetric_group_is_not_ac(self, s4):
        ac, (a, x, y) = is_ac(s4)
        assert not ac
        group = s4.group
        assert x in group.centralizer(a) and y in group.centralizer(a)
        assert not group.commutes(x, y)

    def test_transitivity_witness(self, s4):
        transitive, triple = commutativity_transitive(s4)
        assert not transitive
        assert verify_transitivity_witness(s4.group, *triple)

    def test_catalogued_s4_triple(self, s4):
        assert verify_transitivity_witness(s4.group, *ids(s4, "(3 4)", "(1 2)(3 4)", "(1 3)(2 4)"))
        assert not verify_transitivity_witness(s4.group, *ids(s4, "()", "(1 2)", "(3 4)"))

    def test_cc(self):
        assert is_cc(build_ncg(build_group("Q:8")))
        assert is_cc(build_ncg(build_group("Q:16")))
        assert not is_cc(build_ncg(build_group("D:8")))


class TestLazyWitnesses:
    def test_a10_triple(self):
        group = LazyPermGroup(10, ALTERNATING)
        triple = lazy_witness_for(group)
        assert triple == ("(1 2)(3 4)", "(5 6)(7 8)", "(2 3)(9 10)")
        check = verify_lazy_witness(group, triple)
        assert check.xy_commute and check.yz_commute and not check.xz_commute
        assert check.violates
        assert check.to_dict()["violates_transitivity"] is True

    @pytest.mark.parametrize("degree,kind", [(4, "symmetric"), (12, "symmetric"), (6, ALTERNATING), (9, ALTERNATING)])
    def test_catalogued_triples_violate(self, degree, kind):
        group = LazyPermGroup(degree, kind)
        assert verify_lazy_witness(group, lazy_witness_for(group)).violates

    def test_no_witness_for_small_alternating(self):
        assert lazy_witness_for(LazyPermGroup(5, ALTERNATING)) is None


# ---------------------------------------------------------------------------
# Centralizer structure
# ---------------------------------------------------------------------------

class TestStructure:
    def test_partition_blocks(self, q8):
        blocks = centralizer_partition(q8)
        assert [q8.labels_of(b) for b in blocks] == [["x", "x^3"], ["y", "x^2y"], ["xy", "x^3y"]]

    def test_partition_matches_complement_components(self):
        ctx = build_ncg(build_group("D:6"))
        blocks = {b.as_set() for b in centralizer_partition(ctx)}
        components = {
            frozenset(ctx.element_of(v) for v in c) for c in ctx.graph.complement().components()
        }
        assert blocks == components

    @pytest.mark.parametrize("l", range(2, 9))
    def test_quaternion_omega(self, l):
        assert omega_fast(build_ncg(build_group(f"Q:{4 * l}"))) == l + 1

    def test_not_ac_raises_with_witness(self, s4):
        with pytest.raises(NotAcGroup) as excinfo:
            centralizer_partition(s4)
        assert excinfo.value.witness == is_ac(s4)[1]

    @pytest.mark.parametrize("text,lhs,rhs", [("Q:8", 8, 8), ("D:3", 6, 6), ("H:3", 27, 27)])
    def test_counting_identity(self, text, lhs, rhs):
        assert eq1_verify(build_ncg(build_group(text))) == (True, lhs, rhs)

    def test_counting_identity_terms_for_d3(self):
        ctx = build_ncg(build_group("D:3"))
        assert omega_fast(ctx) == 4
        assert sum(len(c) for _, c in ctx.distinct_centralizers) == 9

    def test_maximal_noncommuting_set(self, q8):
        assert q8.labels_of(maximal_noncommuting_set(q8)) == ["x", "y", "xy"]
        d12 = build_ncg(build_group("D:6"))
        assert len(maximal_noncommuting_set(d12)) == 4
        with pytest.raises(AbelianGroup):
            maximal_noncommuting_set(build_ncg(build_group("C:5")))

    def test_centralizer_cover(self, q8):
        assert verify_centralizer_cover(q8, maximal_noncommuting_set(q8))
        with pytest.raises(NotMaximal):
            verify_centralizer_cover(q8, ElementSet(()))
        with pytest.raises(NotMaximal):
            verify_centralizer_cover(q8, ElementSet.of(ids(q8, "x")))
        with pytest.raises(NotMaximal):
            verify_centralizer_cover(q8, ElementSet.of(ids(q8, "x^2", "x", "y")))
        with pytest.raises(NotMaximal):
            verify_centralizer_cover(q8, ElementSet.of(ids(q8, "x", "x^3", "y")))

    def test_exchange_adds_when_possible(self, q8):
        x, y, xy = ids(q8, "x", "y", "xy")
        assert list(exchange_extend(q8, [x, y], xy)) == sorted([x, y, xy])

    def test_exchange_swaps_commuting_member(self, q8):
        x, y, xy, x3 = ids(q8, "x", "y", "xy", "x^3")
        assert list(exchange_extend(q8, [x, y, xy], x3)) == sorted([x3, y, xy])

    def test_exchange_errors(self, q8, s4):
        x, x2, x3 = ids(q8, "x", "x^2", "x^3")
        with pytest.raises(OutOfRange):
            exchange_extend(q8, [x], 99)
        with pytest.raises(BadInput):
            exchange_extend(q8, [x], x2)
        with pytest.raises(BadInput):
            exchange_extend(q8, [x, x3], q8.group.index_of("y"))
        with pytest.raises(NotAcGroup):
            exchange_extend(s4, [1], 2)

    def test_degree_bound(self, q8):
        assert degree_bound_check(q8)
        assert degree_bound_check(build_ncg(build_group("D:9")))

    @pytest.mark.parametrize("text,expected", [("Q:8", 3), ("H:3", 4), ("Q:16", None)])
    def test_kregular(self, text, expected):
        assert kregular_omega(build_ncg(build_group(text))) == expected

    @pytest.mark.parametrize("text", ["Q:16xC:3", "Q:8xC:5", "Q:32", "Q:8", "Q:8xC:2", "Q:8xC:4", "Q:16xC:2"])
    def test_cc_quotient(self, text):
        assert cc_quotient_omega_check(build_group(text))

    @pytest.mark.parametrize("text", ["D:8", "Q:12", "Q:8xD:3", "Q:8xC:2xC:3"])
    def test_cc_quotient_rejects_other_specs(self, text):
        with pytest.raises(SpecMismatch):
            cc_quotient_omega_check(build_group(text))


class TestPGroups:
    def test_case_iii(self):
        case = pgroup_case(build_ncg(build_group("D:8")))
        assert case == {
            "prime": 2,
            "central_quotient_order": 8,
            "case": "iii",
            "expected_omega": 5,
            "holds": True,
        }

    @pytest.mark.parametrize("text,p", [("Q:8", 2), ("H:3", 3), ("H:5", 5)])
    def test_case_i(self, text, p):
        case = pgroup_case(build_ncg(build_group(text)))
        assert case["case"] == "i"
        assert case["expected_omega"] == p + 1
        assert case["holds"]

    def test_not_applicable(self):
        assert pgroup_case(build_ncg(build_group("D:3"))) is None
        assert pgroup_case(build_ncg(build_group("C:4"))) is None

    def test_abelian_maximal_subgroup(self):
        assert has_abelian_maximal_subgroup(build_ncg(build_group("Q:16")))
        with pytest.raises(BadInput):
            has_abelian_maximal_subgroup(build_ncg(build_group("D:3")))

    def test_central_quotient_order(self, q8):
        assert central_quotient_order(q8) == 4


# ---------------------------------------------------------------------------
# Chi-graphs
# ---------------------------------------------------------------------------

class TestChi:
    def test_abelian_predicate_recovers_ncg(self, q8):
        assert chi_graph(q8.group, "abelian") == q8.graph
        d5 = build_group("D:5")
        assert chi_graph(d5, "abelian") == build_ncg(d5).graph

    def test_callable_predicate(self, q8):
        assert chi_graph(q8.group, lambda g, s: g.is_abelian_subset(s)) == q8.graph

    def test_cyclic_predicate_on_quaternion(self, q8):
        assert chi_group_check(q8.group, "cyclic") == (True, True)

    def test_literal_polarity(self, q8):
        literal = chi_literal_graph(q8.group, "abelian")
        assert literal.vertex_count == 8
        assert literal.degree(0) == 7
        record = chi_record(q8.group, "abelian")
        assert record == {
            "centralizers_have_property": True,
            "graph_is_matroid": True,
            "agree": True,
            "literal_graph_is_matroid": False,
        }

    def test_errors(self):
        with pytest.raises(BadInput):
            get_predicate("nilpotent")
        with pytest.raises(CapExceeded):
            chi_graph(build_group("D:10"), "abelian", max_order=10)


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------

class TestReports:
    def test_quaternion_report(self):
        report = analyze_group(build_group("Q:8"))
        assert report.spec == "Q:8"
        assert report.center_order == 2
        assert report.is_ac is True and report.is_cc is True
        assert report.is_matroid["verdict"] is True
        assert report.is_matroid["methods"]["exchange_property"] is True
        assert report.omega == {"value": 3, "methods": {"fast-path": 3, "search": 3, "oracle": 3}}
        assert report.alpha == 2
        assert report.complement_component_sizes == [2, 2, 2]
        assert report.distinct_centralizer_orders == [4, 4, 4]
        assert report.eq1_holds is True
        assert report.degree_bound_holds is True
        assert report.centralizer_cover_holds is True
        assert report.kregular_omega == 3
        assert report.central_quotient_order == 4
        assert report.pgroup_case["case"] == "i"
        assert report.witnesses["maximal_noncommuting_set"] == ["x", "y", "xy"]
        assert report.witnesses["maximal_set_note"] == "size equals omega"
        assert report.witnesses["non_ac_triple"] is None
        assert report.chi["abelian"]["agree"] is True
        assert report.timing == SKIPPED

    def test_non_ac_report(self):
        report = analyze_group(build_group("S:4"))
        assert report.is_ac is False
        assert report.is_matroid["verdict"] is False
        methods = report.omega["methods"]
        assert methods["fast-path"] == SKIPPED
        assert methods["search"] == methods["oracle"] == report.omega["value"]
        assert len(report.witnesses["non_ac_triple"]) == 3
        assert len(report.witnesses["transitivity_triple"]) == 3
        assert report.witnesses["maximal_set_note"] == "maximal, possibly < omega"
        assert report.eq1_holds == SKIPPED
        assert report.pgroup_case == NOT_APPLICABLE

    def test_abelian_report(self):
        report = analyze_group(build_group("C:4"))
        assert report.is_abelian is True
        assert report.omega["value"] == 0
        assert report.alpha == 0
        assert report.witnesses["maximal_noncommuting_set"] == SKIPPED
        assert report.witnesses["maximal_set_note"] == "abelian group"
        assert report.kregular_omega == NOT_APPLICABLE
        assert report.centralizer_cover_holds == SKIPPED

    def test_lazy_report(self):
        group = build_group("S:12")
        report = analyze(group)
        assert report.order == 479001600
        assert report.omega == NOT_COMPUTED
        assert report.witnesses["lazy_transitivity"]["violates_transitivity"] is True

    def test_search_skipped_above_vertex_limit(self):
        report = analyze_group(build_group("S:4"), search_max_vertices=10)
        assert report.omega["methods"]["search"] == SKIPPED
        assert report.alpha == SKIPPED

    def test_chi_skipped_above_order_limit(self):
        assert analyze_group(build_group("D:6"), chi_max_order=8).chi == SKIPPED

    def test_timing(self):
        report = analyze_group(build_group("D:4"), timing=True)
        assert set(report.timing) >= {"build_ncg", "ac", "matroid", "omega", "structure"}

    def test_reports_are_deterministic(self):
        first = json.dumps(analyze_group(build_group("Q:12xC:2")).to_dict())
        second = json.dumps(analyze_group(build_group("Q:12xC:2")).to_dict())
        assert first == second
