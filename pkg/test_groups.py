"""
Tests for the group engine: Cayley tables, imports, the spec grammar,
lazy permutation groups and the built-in families.

Usage:
    pytest test_groups.py
"""
import json
import random

import numpy as np
import pytest

from ncgraph.errors import (
    CapExceeded,
    MalformedPermutation,
    OutOfRange,
    ParameterError,
    ParityViolation,
    ProductOfLazy,
    SpecSyntaxError,
    TableValidationError,
)
from ncgraph.groups import (
    ALTERNATING,
    FiniteGroup,
    LazyPermGroup,
    build_group,
    cycle_label,
    direct_product,
    dump_cayley_table,
    enumerate_permutations,
    family_catalog,
    find_law_violation,
    get_families,
    group_from_document,
    load_cayley_table,
    parity,
    parse_spec,
    verify_group_laws,
)

# Order-5 loop: Latin square with identity 0, every element self-inverse, not associative
LOOP_5 = [
    [0, 1, 2, 3, 4],
    [1, 0, 3, 4, 2],
    [2, 4, 0, 1, 3],
    [3, 2, 4, 0, 1],
    [4, 3, 1, 2, 0],
]


# ---------------------------------------------------------------------------
# FiniteGroup
# ---------------------------------------------------------------------------

class TestFiniteGroup:
    def test_quaternion_basics(self):
        q8 = build_group("Q:8")
        assert q8.order == 8
        assert q8.labels[:4] == ("1", "x", "x^2", "x^3")
        assert list(q8.center()) == [0, 2]
        assert q8.element_order(1) == 4
        assert q8.element_order(q8.index_of("y")) == 4
        assert not q8.is_abelian()

    def test_inverse_and_negative_powers(self):
        q8 = build_group("Q:8")
        x = q8.index_of("x")
        assert q8.inverse(x) == q8.index_of("x^3")
        assert q8.power(x, -1) == q8.inverse(x)
        assert q8.power(x, 4) == 0

    def test_commutator_is_identity_exactly_for_commuting_pairs(self):
        d4 = build_group("D:4")
        for x in d4.elements():
            for y in d4.elements():
                assert (d4.commutator(x, y) == 0) == d4.commutes(x, y)

    def test_centralizer_contains_center_and_element(self):
        d6 = build_group("D:6")
        for a in d6.elements():
            centralizer = d6.centralizer(a)
            assert a in centralizer
            assert d6.center().as_set() <= centralizer.as_set()

    def test_index_out_of_range(self):
        c3 = build_group("C:3")
        with pytest.raises(OutOfRange):
            c3.multiply(0, 3)
        with pytest.raises(OutOfRange):
            c3.index_of("nope")

    def test_generated_subgroup_reindexes_from_identity(self):
        q16 = build_group("Q:16")
        sub = q16.generated_subgroup([1])
        assert sub.order == 8
        assert sub.parent_indices[0] == 0
        assert list(sub.parent_indices) == sorted(sub.parent_indices)
        assert sub.is_abelian()
        verify_group_laws(sub)

    def test_subset_predicates(self):
        q8 = build_group("Q:8")
        x, y = q8.index_of("x"), q8.index_of("y")
        assert q8.is_abelian_subset([0, x, q8.index_of("x^3")])
        assert not q8.is_abelian_subset([x, y])
        assert q8.is_cyclic_subset(q8.closure([x]))
        assert not q8.is_cyclic_subset(q8.closure([x, y]))

    def test_direct_product(self):
        group = direct_product(build_group("Q:8"), build_group("C:3"))
        assert group.order == 24
        assert group.labels[0] == "1,1"
        assert len(group.center()) == 6
        verify_group_laws(group)


# ---------------------------------------------------------------------------
# Law checks and Cayley table import
# ---------------------------------------------------------------------------

class TestCayleyTables:
    def test_loop_fails_associativity(self):
        violation, warnings = find_law_violation(np.array(LOOP_5))
        assert violation is not None
        assert violation.law == "associativity"
        assert warnings == []

    def test_non_associative_document_rejected(self):
        with pytest.raises(TableValidationError) as excinfo:
            group_from_document({"order": 5, "table": LOOP_5})
        assert excinfo.value.law == "associativity"
        assert len(excinfo.value.indices) == 3

    @pytest.mark.parametrize("table,law", [
        ([[0, 1, 2], [1, 1, 0], [2, 0, 1]], "latin-row"),
        ([[0, 0], [0, 0]], "identity"),
        ([[0, 5], [1, 0]], "range"),
    ])
    def test_first_violated_law_is_named(self, table, law):
        with pytest.raises(TableValidationError) as excinfo:
            group_from_document({"order": len(table), "table": table})
        assert excinfo.value.law == law

    def test_shape_errors(self):
        with pytest.raises(TableValidationError) as excinfo:
            group_from_document({"order": 3, "table": [[0, 1], [1, 0]]})
        assert excinfo.value.law == "shape"
        with pytest.raises(TableValidationError):
            group_from_document({"order": 2, "table": [[0, 1], [1, 0]], "labels": ["e"]})

    def test_identity_is_moved_to_index_zero(self):
        group = group_from_document({"order": 2, "table": [[1, 0], [0, 1]], "labels": ["a", "e"]})
        assert group.labels == ("e", "a")
        assert group.table.tolist() == [[0, 1], [1, 0]]

    def test_large_tables_skip_associativity(self):
        violation, warnings = find_law_violation(build_group("C:6").table, associativity_limit=4)
        assert violation is None
        assert warnings == ["SkippedAssociativityCheck"]

    def test_dump_and_load(self, tmp_path):
        q8 = build_group("Q:8")
        path = tmp_path / "q8.json"
        path.write_text(dump_cayley_table(q8))
        loaded = load_cayley_table(path)
        assert loaded.spec == f"imported:{path}"
        assert np.array_equal(loaded.table, q8.table)
        assert loaded.labels == q8.labels

    def test_invalid_json_is_a_shape_error(self, tmp_path):
        path = tmp_path / "broken.json"
        path.write_text("{not json")
        with pytest.raises(TableValidationError) as excinfo:
            load_cayley_table(path)
        assert excinfo.value.law == "shape"

    def test_cayley_dict_document(self):
        document = build_group("C:3").to_cayley_dict()
        assert document == {"order": 3, "table": [[0, 1, 2], [1, 2, 0], [2, 0, 1]], "labels": ["1", "x", "x^2"]}
        assert json.loads(dump_cayley_table(build_group("C:3"))) == document


# ---------------------------------------------------------------------------
# Spec grammar
# ---------------------------------------------------------------------------

class TestSpecs:
    def test_canonical_rendering(self):
        spec = parse_spec(" q:16 X c:3 ")
        assert spec.render() == "Q:16xC:3"
        assert spec.order == 48
        assert not spec.is_single

    @pytest.mark.parametrize("text,position", [
        ("", 0),
        ("Z:3", 0),
        ("Q16", 1),
        ("Q:", 2),
        ("Q:8 y", 4),
    ])
    def test_syntax_errors_report_position(self, text, position):
        with pytest.raises(SpecSyntaxError) as excinfo:
            parse_spec(text)
        assert excinfo.value.position == position
        assert excinfo.value.text == text

    @pytest.mark.parametrize("text", ["Q:6", "Q:4", "H:4", "D:0", "C:0"])
    def test_illegal_parameters(self, text):
        with pytest.raises(ParameterError):
            parse_spec(text)

    def test_build_sets_canonical_spec(self):
        assert build_group("q:8 x c:5").spec == "Q:8xC:5"

    def test_cap_exceeded(self):
        with pytest.raises(CapExceeded) as excinfo:
            build_group("D:100", max_order=50)
        assert excinfo.value.order == 200
        with pytest.raises(CapExceeded):
            build_group("Q:8xC:3", max_order=20)

    def test_large_symmetric_groups_are_lazy(self):
        group = build_group("S:8")
        assert isinstance(group, LazyPermGroup)
        assert group.order == 40320
        with pytest.raises(ProductOfLazy):
            build_group("S:8xC:2")


# ---------------------------------------------------------------------------
# Lazy permutation groups
# ---------------------------------------------------------------------------

class TestLazyPermGroup:
    def test_cycle_parsing_composes_right_to_left(self):
        s4 = LazyPermGroup(4)
        assert s4.from_cycles("(1 2)") == (2, 1, 3, 4)
        assert cycle_label(s4.from_cycles("(1 2)(2 3)")) == "(1 2 3)"
        assert s4.from_cycles("(1,2)(3,4)") == s4.from_cycles("(1 2)(3 4)")

    def test_orders(self):
        assert LazyPermGroup(10).order == 3628800
        assert LazyPermGroup(10, ALTERNATING).order == 1814400
        assert LazyPermGroup(10, ALTERNATING).spec == "A:10"

    def test_validation(self):
        a4 = LazyPermGroup(4, ALTERNATING)
        with pytest.raises(ParityViolation):
            a4.from_cycles("(1 2)")
        with pytest.raises(MalformedPermutation):
            a4.element([1, 1, 2, 3])
        with pytest.raises(MalformedPermutation):
            a4.from_cycles("(1 5)")

    def test_inverse_and_commutation(self):
        s5 = LazyPermGroup(5)
        p = s5.from_cycles("(1 2 3)")
        assert s5.compose(p, s5.inverse(p)) == s5.identity()
        assert s5.perm_commutes(p, s5.from_cycles("(4 5)"))
        assert not s5.perm_commutes(p, s5.from_cycles("(3 4)"))

    def test_enumeration(self):
        perms = list(enumerate_permutations(3))
        assert perms[0] == (1, 2, 3)
        assert len(perms) == 6
        assert len(list(enumerate_permutations(4, ALTERNATING))) == 12
        assert parity((2, 1, 3)) == 1

    def test_alternating_products_stay_even(self):
        a10 = build_group("A:10")
        assert isinstance(a10, LazyPermGroup)
        rng = random.Random(0)
        for _ in range(1000):
            p = a10.random_element(rng)
            q = a10.random_element(rng)
            product = a10.compose(p, q)
            assert sorted(product) == list(range(1, 11))
            assert parity(product) == 0
            assert a10.element(product) == product


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------

class TestFamilies:
    def test_catalog_order(self):
        assert [tag for tag, _, _ in family_catalog()] == ["S", "A", "D", "Q", "C", "H"]

    @pytest.mark.parametrize("text,order", [
        ("S:4", 24), ("A:4", 12), ("A:5", 60), ("D:1", 2), ("D:7", 14),
        ("Q:12", 12), ("C:1", 1), ("H:2", 8), ("H:3", 27),
    ])
    def test_orders_and_presentations(self, text, order):
        tag, value = text.split(":")
        family = get_families()[tag]
        group = build_group(text)
        assert group.order == order == family.order(int(value))
        assert family.check_presentation(group, int(value)) == []
        verify_group_laws(group)

    def test_degenerate_parameters_are_abelian(self):
        assert build_group("D:2").is_abelian()
        assert build_group("A:3").is_abelian()
        assert not build_group("D:3").is_abelian()

    def test_heisenberg_center(self):
        h3 = build_group("H:3")
        assert len(h3.center()) == 3
        assert all(len(h3.centralizer(a)) == 9 for a in h3.elements() if a not in h3.center())

    def test_symmetric_labels_are_cycles(self):
        s4 = build_group("S:4")
        assert s4.labels[0] == "()"
        for label in ("(3 4)", "(1 2)(3 4)", "(1 3)(2 4)"):
            s4.index_of(label)
        assert isinstance(build_group("S:3"), FiniteGroup)
