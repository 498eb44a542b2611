import pytest

from anchored_module import AnchoredModule
from axiom_checks import (
    SampleGrid,
    all_pass,
    check_generalized_courant,
    check_module,
    check_square_lemmas,
    check_symmetric,
    find_report,
)
from courant import (
    SymmetryViolation,
    build_associated_courant,
    default_pair_bounds,
    dorfman_courant_data,
    inv_generator,
    perturbed_dorfman_courant,
)
from coeff_algebra import CoefficientAlgebra
from free_leibniz import FreeLeibniz, FreeLeibnizInstance, parse_free_element
from linquot import Bounds, SaturationConfig
from pseudoalgebra_core import DorfmanInstance, StructureConstantInstance, StructureConstants
from sym_leibniz import build_quotient

NILPOTENT = StructureConstants(2, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]], ("e1", "e2"))


def _free(bounds):
    module = AnchoredModule.from_mapping({"vars": ["x"], "generators": ["e"], "anchor": [["1"]]})
    return FreeLeibniz(module, bounds)


def _courant_of_fs(bounds):
    quotient = build_quotient(_free(bounds), SaturationConfig())
    return quotient, build_associated_courant(quotient, SaturationConfig())


def _evaluated(report):
    return report.sample_count - report.skipped


# -- structure constants ------------------------------------------------------------


@pytest.fixture(scope="module")
def nilpotent():
    E = StructureConstantInstance(NILPOTENT)
    return E, build_associated_courant(E, SaturationConfig())


def test_inv_kills_the_top_square(nilpotent):
    E, data = nilpotent
    square = data.values
    e1, e2 = E.label_element(0), E.label_element(1)
    assert square.format_element(inv_generator(square, e1, e1, e2)) == "{e2}⊙{e2}"
    assert not square.tensor(e2, e2)
    assert len(square.quotient.cobasis) == 2


def test_pairing_is_the_class_of_the_square(nilpotent):
    E, data = nilpotent
    e1 = E.label_element(0)
    assert data.values.format_element(data.pairing(e1, e1)) == "{e1}⊙{e1}"


def test_default_pair_bounds_without_grading(nilpotent):
    E, _ = nilpotent
    assert default_pair_bounds(E) == Bounds(1, 0)


SC_SUITES = {
    "module": ("vvw", "wvv", "vwv", "leib_rule"),
    "lemmas": ("inv_covariance", "right_kills_inv", "right_balancing"),
    "courant": ("left_act", "right_act", "equal", "pairing_symmetry", "pairing_bilinearity"),
}


def _sc_reports(E, data, suite, layer):
    square = data.balanced if layer == "balanced" else data.values
    grid = SampleGrid(square.sample_bounds)
    if suite == "module":
        return check_module(square, E, grid)
    if suite == "lemmas":
        return check_square_lemmas(data.balanced, grid)
    return check_generalized_courant(data, grid)


@pytest.mark.parametrize(
    "suite, layer, identity",
    [("module", layer, identity) for layer in ("balanced", "reduced") for identity in SC_SUITES["module"]]
    + [("lemmas", "balanced", identity) for identity in SC_SUITES["lemmas"]]
    + [("courant", "reduced", identity) for identity in SC_SUITES["courant"]],
)
def test_sc_square_identity_holds_on_samples(nilpotent, suite, layer, identity):
    E, data = nilpotent
    report = find_report(_sc_reports(E, data, suite, layer), identity)
    assert report.verdict_text == "PASS", report.lines()
    assert _evaluated(report) > 0


# -- C(FS) for one generator with a(e) = d/dx ---------------------------------------


@pytest.fixture(scope="module")
def fs_courant():
    return _courant_of_fs(Bounds(4, 1))


def test_pair_bounds_follow_the_base_bounds(fs_courant):
    quotient, data = fs_courant
    assert default_pair_bounds(quotient) == Bounds(4, 1)
    assert data.values.bounds == Bounds(4, 1)
    assert data.name == "C(FS)"


def test_reduced_square_is_a_quotient_of_the_balanced_one(fs_courant):
    _, data = fs_courant
    reduced = data.values
    assert reduced.quotient.relations.rank >= data.balanced.quotient.relations.rank
    assert len(reduced.generators) > 0
    for _, free, rel, quot in reduced.dimensions_by_weight():
        assert free == rel + quot


def test_generalized_courant_suite_on_fs(fs_courant):
    _, data = fs_courant
    grid = SampleGrid(data.values.sample_bounds, limit=500)
    reports = check_generalized_courant(data, grid)
    assert all_pass(reports), [r.identity for r in reports if r.verdict_text != "PASS"]
    assert [r.identity for r in reports] == [
        "left_act",
        "right_act",
        "equal",
        "pairing_symmetry",
        "pairing_bilinearity",
    ]


@pytest.mark.parametrize("layer", ["balanced", "reduced"])
def test_square_is_a_module_over_fs(fs_courant, layer):
    quotient, data = fs_courant
    square = data.balanced if layer == "balanced" else data.values
    reports = check_module(square, quotient, SampleGrid(square.sample_bounds, limit=500))
    assert all_pass(reports), [r.identity for r in reports if r.verdict_text != "PASS"]
    for identity in ("vvw", "wvv", "vwv", "leib_rule"):
        assert _evaluated(find_report(reports, identity)) > 0, identity


def test_square_lemmas_on_fs(fs_courant):
    _, data = fs_courant
    reports = check_square_lemmas(data.balanced, SampleGrid(data.balanced.sample_bounds, limit=500))
    assert all_pass(reports), [r.identity for r in reports if r.verdict_text != "PASS"]
    for identity in ("inv_covariance", "right_kills_inv", "right_balancing"):
        assert _evaluated(find_report(reports, identity)) > 0, identity


@pytest.fixture(scope="module")
def small_fs_courant():
    return _courant_of_fs(Bounds(3, 1))


def test_square_actions_on_e_times_e(small_fs_courant):
    quotient, data = small_fs_courant
    free = quotient.free
    e = parse_free_element(free, "(e)")
    ee = parse_free_element(free, "(e)⊗(e)")
    # e⊗e maps to dx under the anchor, so it survives in FS
    assert quotient.project(ee) == ee
    for square in (data.balanced, data.values):
        p = square.raw_tensor(e, e)
        assert square.mu_left(e, p) == 2 * square.raw_tensor(ee, e)
        assert square.mu_right(e, p) == -2 * square.raw_tensor(ee, e)


def test_low_weight_courant_reports_vacuous_module_checks():
    quotient, data = _courant_of_fs(Bounds(2, 1))
    assert data.values.bounds == Bounds(2, 1)
    reports = check_module(data.values, quotient, SampleGrid(data.values.sample_bounds))
    vvw = find_report(reports, "vvw")
    assert vvw.verdict
    assert vvw.vacuous
    assert vvw.verdict_text == "VACUOUS"
    assert "VACUOUS" in vvw.lines()[0]
    assert not all_pass(reports)


def test_free_algebra_is_refused():
    free = FreeLeibnizInstance(_free(Bounds(2, 2)))
    reports = check_symmetric(free, SampleGrid.for_instance(free))
    with pytest.raises(SymmetryViolation, match="S1"):
        build_associated_courant(free, SaturationConfig(), symmetry_reports=reports)


# -- Dorfman ------------------------------------------------------------------------


@pytest.fixture
def dorfman():
    E = DorfmanInstance(CoefficientAlgebra(("x",)), sample_degree=2)
    return E, SampleGrid.for_instance(E)


def test_standard_pairing_satisfies_the_relations(dorfman):
    E, grid = dorfman
    assert all_pass(check_generalized_courant(dorfman_courant_data(E), grid))


def test_perturbed_pairing_breaks_equal_and_left_act(dorfman):
    E, grid = dorfman
    reports = check_generalized_courant(perturbed_dorfman_courant(E), grid)
    assert not find_report(reports, "equal").verdict
    assert not find_report(reports, "left_act").verdict
    assert find_report(reports, "pairing_symmetry").verdict
