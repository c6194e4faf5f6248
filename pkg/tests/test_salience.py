import math

import pytest
from hypothesis import given, strategies as st

from appraisal_explainer import (
    Dimension,
    Query,
    UserProfile,
    build_unified_context,
    compute_salience,
    dominant_dimensions,
    lexical_salience,
    normalize,
)
from appraisal_explainer.errors import InvalidScore, ScorerUnavailable

SARAH_QUERY = "I'm hungry and in a hurry, can you make something in 15 minutes?"


def _context(registry, lexicons, profile, text):
    return build_unified_context(profile, Query(text=text), registry, lexicons)


def test_lexical_formula_reduced_profile(registry, lexicons):
    # goals only, no preference keywords: Urgency = 2*1 (query "hurry") + 2
    # (time bonus) = 4; GoalRelevance = 1*2 (profile hits) + 1 (goals bonus) = 3.
    profile = UserProfile(user_id="u", goals=("healthy", "nutritious"))
    raw = lexical_salience(_context(registry, lexicons, profile, SARAH_QUERY), registry)
    assert raw[Dimension.URGENCY] == 4.0
    assert raw[Dimension.GOAL_RELEVANCE] == 3.0


def test_lexical_formula_sarah_fixture(sarah_context, registry):
    # The bundled profile adds the "quick" preference, an extra Urgency
    # profile hit on top of the reduced-profile numbers.
    raw = lexical_salience(sarah_context, registry)
    assert raw[Dimension.URGENCY] == 5.0
    assert raw[Dimension.GOAL_RELEVANCE] == 3.0
    for dim in (
        Dimension.PREDICTABILITY_SURPRISE,
        Dimension.VALENCE,
        Dimension.AGENCY,
        Dimension.NORMATIVE_SIGNIFICANCE,
    ):
        assert raw[dim] == 0.0


def test_lexical_zero_signal(registry, lexicons):
    profile = UserProfile(user_id="u")
    raw = lexical_salience(_context(registry, lexicons, profile, "feed me"), registry)
    assert all(value == 0.0 for value in raw.values())


def test_adding_urgency_keyword_raises_only_urgency(registry, lexicons):
    profile = UserProfile(user_id="u", goals=("healthy",))
    base = lexical_salience(_context(registry, lexicons, profile, "dinner ideas"), registry)
    bumped = lexical_salience(
        _context(registry, lexicons, profile, "dinner ideas asap"), registry
    )
    for dim in Dimension:
        expected_delta = 2.0 if dim == Dimension.URGENCY else 0.0
        assert bumped[dim] - base[dim] == expected_delta


def test_normalize_arithmetic():
    raw = dict(zip(Dimension, [4.0, 3.0, 1.0, 1.0, 1.0, 0.0]))
    weights = normalize(raw)
    assert weights == dict(zip(Dimension, [0.4, 0.3, 0.1, 0.1, 0.1, 0.0]))


def test_normalize_all_zero_uniform():
    weights = normalize({dim: 0.0 for dim in Dimension})
    assert weights == {dim: 1.0 / 6.0 for dim in Dimension}


def test_normalize_single_nonzero():
    raw = {dim: 0.0 for dim in Dimension}
    raw[Dimension.AGENCY] = 7.5
    weights = normalize(raw)
    assert weights[Dimension.AGENCY] == 1.0
    assert sum(weights.values()) == 1.0


@pytest.mark.parametrize("bad", [-1.0, float("nan"), float("inf")])
def test_normalize_rejects_invalid(bad):
    raw = {dim: 1.0 for dim in Dimension}
    raw[Dimension.VALENCE] = bad
    with pytest.raises(InvalidScore):
        normalize(raw)


def test_normalize_rejects_missing_dimension():
    raw = {dim: 1.0 for dim in list(Dimension)[:5]}
    with pytest.raises(InvalidScore):
        normalize(raw)


@given(
    st.lists(
        st.floats(min_value=0, max_value=1e6, allow_nan=False),
        min_size=6,
        max_size=6,
    )
)
def test_normalize_sums_to_one(values):
    weights = normalize(dict(zip(Dimension, values)))
    assert abs(math.fsum(weights.values()) - 1.0) <= 1e-9


@given(
    st.lists(
        st.floats(min_value=0, max_value=100, allow_nan=False),
        min_size=6,
        max_size=6,
    ),
    st.floats(min_value=0.01, max_value=50),
)
def test_scaling_raw_scores_keeps_ranking(values, scale):
    raw = dict(zip(Dimension, values))
    scaled = {dim: value * scale for dim, value in raw.items()}
    assert dominant_dimensions(normalize(raw), k=6) == dominant_dimensions(
        normalize(scaled), k=6
    )


def test_dominant_sarah(sarah_context, registry):
    weights = normalize(lexical_salience(sarah_context, registry))
    dominant = dominant_dimensions(weights, k=3)
    assert set(dominant) == {
        Dimension.URGENCY,
        Dimension.GOAL_RELEVANCE,
        Dimension.PREDICTABILITY_SURPRISE,
    }
    assert dominant[0] == Dimension.URGENCY


def test_dominant_uniform_uses_enum_order():
    weights = {dim: 1.0 / 6.0 for dim in Dimension}
    assert dominant_dimensions(weights, k=3) == (
        Dimension.PREDICTABILITY_SURPRISE,
        Dimension.GOAL_RELEVANCE,
        Dimension.VALENCE,
    )


def test_dominant_k6_sorted_by_weight_then_order():
    weights = dict(zip(Dimension, [0.1, 0.3, 0.1, 0.3, 0.1, 0.1]))
    dominant = dominant_dimensions(weights, k=6)
    assert dominant == (
        Dimension.GOAL_RELEVANCE,
        Dimension.URGENCY,
        Dimension.PREDICTABILITY_SURPRISE,
        Dimension.VALENCE,
        Dimension.AGENCY,
        Dimension.NORMATIVE_SIGNIFICANCE,
    )


def test_dominant_threshold_mode():
    weights = dict(zip(Dimension, [0.5, 0.3, 0.2, 0.0, 0.0, 0.0]))
    selected = dominant_dimensions(weights, k=3, threshold=0.25)
    assert selected == (Dimension.PREDICTABILITY_SURPRISE, Dimension.GOAL_RELEVANCE)


def test_compute_salience_profile_shape(sarah_context, registry):
    profile = compute_salience(sarah_context, registry, k=3)
    assert profile.scorer_id == "lexical"
    assert abs(sum(profile.weights.values()) - 1.0) <= 1e-9
    assert len(profile.dominant) == 3


def test_compute_salience_remote_without_endpoint_raises(sarah_context, registry, monkeypatch):
    monkeypatch.delenv("APPRAISAL_NLI_URL", raising=False)
    with pytest.raises(ScorerUnavailable):
        compute_salience(sarah_context, registry, scorer="remote")
