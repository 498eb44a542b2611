import pytest

from anchored_module import (
    AnchoredMap,
    AnchoredModule,
    AnchorIncompatibility,
    format_derivation,
    require_anchored,
    validate_anchored_map,
)
from coeff_algebra import AlgebraMismatch, Derivation, parse_poly
from pseudoalgebra_core import (
    DorfmanInstance,
    StructureConstantInstance,
    StructureConstants,
    parse_dorfman_element,
    parse_sc_element,
)


def _module(rows, gens=("e1", "e2"), variables=("x",)):
    return AnchoredModule.from_mapping({"vars": list(variables), "generators": list(gens), "anchor": rows})


def test_anchor_is_a_linear():
    M = _module([["1"], ["x"]])
    x = M.algebra.gens[0]
    m = M.element((x, M.algebra.one))
    # x * d/dx + x * d/dx
    assert M.anchor_of(m) == Derivation(M.algebra, (2 * x,))


def test_zero_anchor_detection():
    assert _module([[], []], variables=()).has_zero_anchor()
    assert not _module([["0"], ["x^2"]]).has_zero_anchor()


@pytest.mark.parametrize(
    "raw",
    [
        {"vars": ["x"], "generators": ["e"]},
        {"vars": ["x"], "generators": ["e1", "e2"], "anchor": [["1"]]},
        {"vars": ["x"], "generators": ["e1", "e2"], "anchor": [["1", "0"], ["x"]]},
        {"vars": ["x"], "generators": ["e", "e"], "anchor": [["1"], ["1"]]},
        {"vars": ["x"], "generators": ["x"], "anchor": [["1"]]},
    ],
)
def test_rejects_malformed_mappings(raw):
    with pytest.raises(ValueError):
        AnchoredModule.from_mapping(raw)


def test_generator_index_names_known_generators():
    M = _module([["1"], ["x"]])
    assert M.generator_index("e2") == 1
    with pytest.raises(KeyError):
        M.generator_index("e3")


def test_element_format():
    M = _module([["1"], ["x"]])
    m = M.generator(1, parse_poly(M.algebra, "x + 1"))
    assert m.format() == "(x + 1)*e2"


@pytest.fixture
def dorfman_map():
    M = _module([["1"]], gens=("e",))
    dorfman = DorfmanInstance(M.algebra)

    def build(text):
        return AnchoredMap(M, dorfman, (parse_dorfman_element(dorfman, text),))

    return build


def test_vector_part_carries_the_anchor(dorfman_map):
    report = validate_anchored_map(dorfman_map("∂x + [x] dx"))
    assert report.verdict
    assert "PASS" in report.lines()[0]


def test_wrong_anchor_is_refused(dorfman_map):
    phi = dorfman_map("[x] ∂x")
    assert not validate_anchored_map(phi).verdict
    with pytest.raises(AnchorIncompatibility, match="'e'"):
        require_anchored(phi)


def test_image_count_must_match_rank():
    M = _module([["1"]], gens=("e",))
    with pytest.raises(ValueError):
        AnchoredMap(M, DorfmanInstance(M.algebra), ())


def test_structure_constants_need_a_module_over_the_rationals():
    sc = StructureConstantInstance(StructureConstants(1, [[[0]]], ("e",)))
    image = parse_sc_element(sc, "e")
    with pytest.raises(AlgebraMismatch, match="QQ"):
        AnchoredMap(_module([["1"]], gens=("e",)), sc, (image,))
    over_q = AnchoredMap(_module([[]], gens=("e",), variables=()), sc, (image,))
    assert require_anchored(over_q).verdict


def test_format_derivation():
    M = _module([["1"], ["x^2"]])
    assert format_derivation(M.anchors[0]) == "∂x"
    assert format_derivation(M.anchors[1]) == "[x^2] ∂x"
    assert format_derivation(Derivation.zero(M.algebra)) == "0"
