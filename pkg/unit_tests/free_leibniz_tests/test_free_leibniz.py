import pytest

from anchored_module import AnchoredModule
from axiom_checks import SampleGrid, all_pass, check_leibniz
from coeff_algebra import Derivation, ElementSyntaxError
from free_leibniz import (
    FreeLeibniz,
    FreeLeibnizInstance,
    evaluate_expression,
    format_free_element,
    parse_free_element,
)
from linquot import Bounds, BoundsMismatch, TruncationOverflow


def _free(anchors, gens, bounds):
    module = AnchoredModule.from_mapping({"vars": ["x"], "generators": list(gens), "anchor": anchors})
    return FreeLeibniz(module, bounds)


THREE = _free([["1"], ["1"], ["1"]], ("e1", "e2", "e3"), Bounds(3, 1))


@pytest.mark.parametrize(
    "expression, normal_form",
    [
        ("[(e1),(e2)]", "(e1)⊗(e2)"),
        ("[(e1),(e2)⊗(e3)]", "(e1)⊗(e2)⊗(e3)"),
        ("[(e1)⊗(e2),(e3)]", "(e1)⊗(e2)⊗(e3) - (e2)⊗(e1)⊗(e3)"),
        ("<x> ((e1)⊗(e2))", "(e1)⊗(x*e2) - (e2)"),
        ("{(e1),(e1)}", "2 (e1)⊗(e1)"),
        ("2/3 (e1) - (e1)", "-1/3 (e1)"),
    ],
)
def test_expand_normal_forms(expression, normal_form):
    assert format_free_element(THREE, evaluate_expression(THREE, expression)) == normal_form


def test_ascii_tensor_sign():
    u = evaluate_expression(THREE, "[(e1),(e2)]")
    assert format_free_element(THREE, u, ascii=True) == "(e1) ox (e2)"


def test_leibniz_rule_on_the_empty_action():
    # [a, f b] = f [a, b] + a(a)(f) b
    lhs = evaluate_expression(THREE, "[(e1), (x*e2)]")
    rhs = evaluate_expression(THREE, "<x> [(e1),(e2)] + (e2)")
    assert lhs == rhs


def test_bracket_leaving_the_weight_bound_overflows():
    with pytest.raises(TruncationOverflow):
        evaluate_expression(THREE, "[ (e1)⊗(e2), (e3)⊗(e1) ]")


def test_parse_errors_are_element_syntax_errors():
    with pytest.raises(ElementSyntaxError):
        parse_free_element(THREE, "(e4)")
    with pytest.raises(ElementSyntaxError):
        evaluate_expression(THREE, "[(e1), (e2)")


@pytest.fixture
def two_generators():
    return _free([["1"], ["x"]], ("e1", "e2"), Bounds(3, 3))


def test_word_basis_order_and_counts():
    small = _free([["1"]], ("e",), Bounds(2, 1))
    words = small.word_basis
    # weight 2 first, then by degree descending
    assert len(words) == 2 + 3
    assert [len(w) for w in words] == [2, 2, 2, 1, 1]
    assert format_free_element(small, small.word_element(words[-1])) == "(e)"


def test_induced_anchor_is_the_commutator(two_generators):
    u = parse_free_element(two_generators, "(e1)⊗(e2)")
    # [d/dx, x d/dx] = d/dx
    assert two_generators.induced_anchor(u) == Derivation.partial(two_generators.algebra, 0)


def test_include_follows_coordinates(two_generators):
    M = two_generators.module
    x = M.algebra.gens[0]
    u = two_generators.include(M.element((x + 1, 0)))
    assert format_free_element(two_generators, u) == "(x*e1) + (e1)"


def test_elements_at_different_bounds_do_not_mix(two_generators):
    other = FreeLeibniz(two_generators.module, Bounds(2, 3))
    a = two_generators.word_element(two_generators.letter("e1"))
    b = other.word_element(other.letter("e1"))
    with pytest.raises(BoundsMismatch):
        a + b
    with pytest.raises(BoundsMismatch):
        two_generators.bracket(a, b)


def test_free_instance_satisfies_the_leibniz_suite():
    free = _free([["1"], ["x"]], ("e1", "e2"), Bounds(3, 1))
    instance = FreeLeibnizInstance(free)
    reports = check_leibniz(instance, SampleGrid.for_instance(instance, limit=2000, seed=3))
    assert all_pass(reports), [r.identity for r in reports if r.verdict_text != "PASS"]
