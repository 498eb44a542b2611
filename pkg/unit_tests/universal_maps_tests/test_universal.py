import pytest

from anchored_module import AnchoredMap, AnchoredModule, AnchorIncompatibility
from axiom_checks import SampleGrid, all_pass, find_report
from courant import build_associated_courant, dorfman_courant_data, perturbed_dorfman_courant
from free_leibniz import FreeLeibniz, FreeLeibnizInstance, parse_free_element
from linquot import Bounds, SaturationConfig
from pseudoalgebra_core import (
    DorfmanInstance,
    StructureConstantInstance,
    StructureConstants,
    parse_dorfman_element,
    parse_sc_element,
)
from sym_leibniz import build_quotient
from universal_maps import (
    NonVanishingOnIdeal,
    NonVanishingOnInv,
    build_extended_morphism,
    descend_to_symmetric,
    extend_to_free,
    verify_descent,
    verify_free_extension,
)

CONFIG = SaturationConfig()
DX = AnchoredModule.from_mapping({"vars": ["x"], "generators": ["e"], "anchor": [["1"]]})


def _dorfman_map(text="∂x + [x] dx"):
    target = DorfmanInstance(DX.algebra)
    return AnchoredMap(DX, target, (parse_dorfman_element(target, text),))


def _pipeline(bounds, target_data=None, phi=None):
    quotient = build_quotient(FreeLeibniz(DX, bounds), CONFIG)
    source = build_associated_courant(quotient, CONFIG)
    phi = phi or _dorfman_map()
    target_data = target_data or dorfman_courant_data(phi.target)
    return quotient, build_extended_morphism(phi, quotient, source, target_data, limit=2000, seed=0)


@pytest.fixture
def free():
    return FreeLeibniz(DX, Bounds(3, 2))


@pytest.fixture
def extension(free):
    return extend_to_free(_dorfman_map(), free)


def test_words_go_to_nested_brackets(free, extension):
    target = extension.target
    assert target.format_element(extension(parse_free_element(free, "(e)⊗(e)"))) == "dx"
    assert target.format_element(extension(parse_free_element(free, "(x*e)"))) == "[x] ∂x + [x^2] dx"


def test_extension_is_a_morphism(free, extension):
    reports = verify_free_extension(extension, SampleGrid(free.bounds, limit=1500, seed=1))
    assert all_pass(reports), [r.identity for r in reports if r.verdict_text != "PASS"]


def test_anchor_mismatch_is_refused(free):
    with pytest.raises(AnchorIncompatibility):
        extend_to_free(_dorfman_map("[x] ∂x"), free)


def test_descent_into_the_free_algebra_itself_fails():
    free = FreeLeibniz(DX, Bounds(2, 2))
    target = FreeLeibnizInstance(free)
    phi = AnchoredMap(DX, target, (parse_free_element(free, "(e)"),))
    quotient = build_quotient(free, CONFIG)
    with pytest.raises(NonVanishingOnIdeal) as info:
        descend_to_symmetric(extend_to_free(phi, free), quotient)
    assert info.value.witness.startswith("J1")


def test_descent_into_dorfman_is_well_defined():
    free = FreeLeibniz(DX, Bounds(2, 2))
    quotient = build_quotient(free, CONFIG)
    phi1 = descend_to_symmetric(extend_to_free(_dorfman_map(), free), quotient)
    reports = verify_descent(phi1, SampleGrid(quotient.bounds))
    assert all_pass(reports)
    assert find_report(reports, "phi1_on_generators").sample_count == 1


def test_dorfman_target_at_full_bounds():
    _, morphism = _pipeline(Bounds(3, 3))
    assert all_pass(morphism.reports), [r.identity for r in morphism.reports if r.verdict_text != "PASS"]
    assert find_report(morphism.reports, "phi2_inv_vanishing").sample_count > 0
    assert find_report(morphism.reports, "resp_sc_prod").verdict


def test_perturbed_pairing_does_not_descend():
    phi = _dorfman_map()
    # Inv generators first appear at pair weight 3
    with pytest.raises(NonVanishingOnInv) as info:
        _pipeline(Bounds(3, 1), perturbed_dorfman_courant(phi.target), phi)
    assert info.value.witness.startswith("Inv(")


def test_self_inclusion_is_the_identity():
    quotient = build_quotient(FreeLeibniz(DX, Bounds(2, 1)), CONFIG)
    source = build_associated_courant(quotient, CONFIG)
    letter = quotient.project(parse_free_element(quotient.free, "(e)"))
    phi = AnchoredMap(DX, quotient, (letter,))
    morphism = build_extended_morphism(phi, quotient, source, source, limit=2000, seed=0)
    for label, image in morphism.phi1.table.items():
        assert image == quotient.label_element(label)


def test_zero_anchor_module_into_structure_constants():
    module = AnchoredModule.from_mapping({"vars": [], "generators": ["e1", "e2"], "anchor": [[], []]})
    sc = StructureConstantInstance(
        StructureConstants(2, [[[0, 1], [0, 0]], [[0, 0], [0, 0]]], ("e1", "e2"))
    )
    phi = AnchoredMap(module, sc, (parse_sc_element(sc, "e1"), parse_sc_element(sc, "e2")))
    quotient = build_quotient(FreeLeibniz(module, Bounds(3, 0)), CONFIG)
    source = build_associated_courant(quotient, CONFIG)
    target = build_associated_courant(sc, CONFIG)
    morphism = build_extended_morphism(phi, quotient, source, target, limit=2000, seed=0)
    assert all_pass(morphism.reports), [r.identity for r in morphism.reports if r.verdict_text != "PASS"]
    e1e1 = parse_free_element(quotient.free, "(e1)⊗(e1)")
    assert sc.format_element(morphism.phi1(e1e1)) == "e2"
