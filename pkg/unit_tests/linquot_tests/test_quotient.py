import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from sympy import QQ

from linquot import (
    Bounds,
    Combination,
    Grade,
    QuotientSpace,
    SaturationConfig,
    SaturationFailure,
    TruncationOverflow,
    accumulate,
    echelonize,
    piece_from_labels,
    saturate,
)

PIECE = piece_from_labels(
    [("ab", Grade(2, 0)), ("ba", Grade(2, 0)), ("a", Grade(1, 0)), ("b", Grade(1, 0)), ("c", Grade(1, 1))]
)

coeffs = st.integers(-3, 3)
vectors = st.lists(coeffs, min_size=PIECE.size, max_size=PIECE.size)


def _add(u, v):
    out = dict(u)
    for k, c in v.items():
        accumulate(out, k, c)
    return out


def _scale(u, c):
    return {k: v * QQ(c) for k, v in u.items() if v * QQ(c)}


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors, max_size=4), vectors)
def test_projection_is_idempotent_and_kills_relations(relations, v):
    span = echelonize(relations, PIECE)
    once = span.reduce(v)
    assert span.reduce(once) == once
    for r in relations:
        assert span.contains(r)
    # v - p(v) lies in the span
    diff = _add(dict((i, QQ(c)) for i, c in enumerate(v) if c), _scale(once, -1))
    assert span.contains(diff)


@settings(max_examples=60, deadline=None)
@given(st.lists(vectors, max_size=4), vectors, vectors, coeffs)
def test_projection_is_linear(relations, u, v, c):
    span = echelonize(relations, PIECE)
    combined = [a + c * b for a, b in zip(u, v)]
    assert span.reduce(combined) == _add(span.reduce(u), _scale(span.reduce(v), c))


def test_pivots_prefer_earlier_columns():
    span = echelonize([{0: 1, 1: -1}, {1: 1, 2: 1}], PIECE)
    assert span.pivots == (0, 1)
    quotient = QuotientSpace(PIECE, span)
    assert quotient.cobasis == ("a", "b", "c")
    assert quotient.project_terms({"ab": 1}) == {"a": QQ(-1)}


def test_dimensions_by_weight():
    span = echelonize([{0: 1, 1: 1}, {2: 1}], PIECE)
    rows = QuotientSpace(PIECE, span).dimensions_by_weight()
    assert rows == [(1, 3, 1, 2), (2, 2, 1, 1)]


def test_to_vector_rejects_labels_outside_the_piece():
    with pytest.raises(TruncationOverflow):
        PIECE.to_vector({"zz": 1})


def test_combination_arithmetic_drops_zero_terms():
    u = Combination({"a": 1, "b": 2})
    v = Combination({"a": 1})
    assert (u - v) == Combination.of("b", 2)
    assert not (u - u)
    assert not (u * 0)
    assert (2 * v).coefficient("a") == QQ(2)


def test_bounds_reject_empty_weights():
    with pytest.raises(ValueError):
        Bounds(0, 1)
    with pytest.raises(ValueError):
        Bounds(1, -1)


def test_bounds_check_reports_grade_and_limits():
    bounds = Bounds(2, 1)
    assert bounds.fits(Grade(2, 1))
    with pytest.raises(TruncationOverflow, match="wmax=2") as info:
        bounds.check(Grade(3, 0), "bracket")
    assert info.value.grade == Grade(3, 0)


def test_bounds_from_mapping_requires_both_keys():
    with pytest.raises(ValueError):
        Bounds.from_mapping({"wmax": 2})
    assert Bounds.from_mapping({"wmax": 2, "pmax": 0}) == Bounds(2, 0)


SHIFT = {"a": "b", "b": "c", "c": "d", "d": "z"}
CHAIN = piece_from_labels([(label, Grade(1, 0)) for label in "abcd"])


def _shift(row):
    return [lambda: Combination({SHIFT[k]: v for k, v in row.items()})]


def test_closure_runs_until_it_leaves_the_piece():
    def family(delta):
        if delta == 0:
            return [lambda: Combination({"a": 1, "b": -1})]
        return []

    result = saturate(CHAIN, family, SaturationConfig(delta_max=4), closure=_shift)
    assert result.subspace.rank == 3
    assert result.discarded == 1
    assert result.delta == 2
    assert result.rank_history == (3, 3, 3)


def test_without_closure_only_generators_count():
    result = saturate(CHAIN, lambda d: [lambda: Combination({"a": 1, "b": -1})], SaturationConfig())
    assert result.subspace.rank == 1
    assert result.discarded == 0


def test_growing_family_fails_to_stabilize():
    def family(delta):
        return [lambda: Combination.of("abcd"[min(delta, 3)])]

    with pytest.raises(SaturationFailure) as info:
        saturate(CHAIN, family, SaturationConfig(delta_max=3), context="chain")
    assert info.value.rank_history == (1, 2, 3, 4)


def test_saturation_config_rejects_unknown_keys():
    with pytest.raises(ValueError):
        SaturationConfig.from_mapping({"delta": 3})
    assert SaturationConfig.from_mapping({"delta_max": 4}).delta_max == 4
    with pytest.raises(ValueError):
        SaturationConfig(delta_max=1, stable_rounds=2)
