import pytest
from sympy import QQ

from axiom_checks import (
    SampleGrid,
    all_pass,
    check_courant,
    check_leibniz,
    check_loday,
    check_module,
    check_symmetric,
    find_report,
)
from coeff_algebra import CoefficientAlgebra, ElementSyntaxError
from pseudoalgebra_core import (
    AdjointModule,
    AnchorModule,
    DorfmanInstance,
    MissingCapability,
    StructureConstantInstance,
    StructureConstants,
    pairing_right_anchor,
    parse_dorfman_element,
    parse_sc_element,
    unsymmetrized_right_anchor,
    zero_right_anchor,
)

X = CoefficientAlgebra(("x",))
XY = CoefficientAlgebra(("x", "y"))


def _failing(reports):
    return [r.identity for r in reports if not r.verdict]


@pytest.fixture
def dorfman():
    return DorfmanInstance(X)


def test_bracket_of_a_generalized_vector_with_itself(dorfman):
    u = parse_dorfman_element(dorfman, "∂x + [x] dx")
    assert dorfman.format_element(dorfman.bracket(u, u)) == "dx"


def test_pairing_is_half_the_contraction(dorfman):
    p = dorfman.pairing(dorfman.vector_field(0), dorfman.one_form(0))
    assert p == X.constant(QQ(1, 2))


def test_D_pairs_to_the_anchor(dorfman):
    f = X.gens[0] ** 2
    v = dorfman.vector_field(0, X.gens[0])
    assert dorfman.pairing(dorfman.D(f), v) == dorfman.anchor(v).apply(f)


def test_parser_accepts_zero_and_signs(dorfman):
    assert not parse_dorfman_element(dorfman, "0")
    u = parse_dorfman_element(dorfman, "-[x^2] ∂x + dx")
    assert dorfman.format_element(u) == "[-x^2] ∂x + dx"
    with pytest.raises(ElementSyntaxError):
        parse_dorfman_element(dorfman, "∂y")


def test_dorfman_needs_a_variable():
    with pytest.raises(ValueError):
        DorfmanInstance(CoefficientAlgebra(()))


def test_courant_symmetric_and_loday_suites_pass(dorfman):
    grid = SampleGrid.for_instance(dorfman)
    assert _failing(check_courant(dorfman, grid)) == []
    assert _failing(check_symmetric(dorfman, grid)) == []
    assert _failing(check_loday(dorfman, pairing_right_anchor(dorfman), grid)) == []
    assert _failing(check_leibniz(dorfman, grid)) == []
    assert _failing(check_module(AnchorModule(dorfman), dorfman, grid)) == []


def test_two_variables_on_a_subsample():
    E = DorfmanInstance(XY, sample_degree=2)
    grid = SampleGrid.for_instance(E, limit=300, seed=11)
    assert _failing(check_courant(E, grid)) == []
    assert _failing(check_symmetric(E, grid)) == []


def test_scaled_pairing_breaks_the_differential_condition():
    E = DorfmanInstance(X, pairing_scale=1, d_scale=2)
    report = find_report(check_courant(E, SampleGrid.for_instance(E)), "diff_cond_first")
    assert not report.verdict
    assert report.failures[0].witness


def test_unsymmetrized_right_anchor_breaks_lod_s1():
    E = DorfmanInstance(X)
    reports = check_loday(E, unsymmetrized_right_anchor(E), SampleGrid.for_instance(E))
    assert not find_report(reports, "lod_s1").verdict


def test_idempotent_structure_constants_fail_jacobi():
    E = StructureConstantInstance(StructureConstants(1, [[[1]]], ("e",)))
    jacobi = find_report(check_leibniz(E, SampleGrid.for_instance(E)), "jacobi")
    assert not jacobi.verdict
    assert jacobi.failures[0].witness == ("e", "e", "e")
    assert jacobi.failures[0].residual == "e"


NILPOTENT = StructureConstants.from_mapping(
    {"dim": 2, "names": ["e1", "e2"], "table": [[[0, 1], [0, 0]], [[0, 0], [0, 0]]]}
)


def test_nilpotent_structure_constants_are_leibniz():
    E = StructureConstantInstance(NILPOTENT)
    grid = SampleGrid.for_instance(E)
    assert all_pass(check_leibniz(E, grid))
    assert all_pass(check_module(AdjointModule(E), E, grid))
    assert all_pass(check_loday(E, zero_right_anchor(E), grid))


def test_sc_parse_and_format():
    E = StructureConstantInstance(NILPOTENT)
    u = parse_sc_element(E, "e1 - [1/2] e2")
    assert E.format_element(u) == "e1 - [1/2] e2"
    assert E.format_element(E.bracket(u, u)) == "e2"
    with pytest.raises(ElementSyntaxError):
        parse_sc_element(E, "e3")


def test_sc_has_no_pairing():
    E = StructureConstantInstance(NILPOTENT)
    with pytest.raises(MissingCapability):
        E.pairing(E.label_element(0), E.label_element(1))
    with pytest.raises(MissingCapability):
        pairing_right_anchor(E)(E.algebra.one, E.label_element(0), E.label_element(0))


def test_structure_constant_table_shape_is_checked():
    with pytest.raises(ValueError):
        StructureConstants(2, [[[0, 1], [0, 0]]])
    with pytest.raises(ValueError):
        StructureConstants.from_mapping({"dim": 1})
