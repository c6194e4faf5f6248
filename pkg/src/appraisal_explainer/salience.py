"""Dimension salience: raw scoring, L1 normalization, dominant selection.

Two scorers share one contract (raw non-negative score per dimension): a
deterministic lexical scorer over keyword hits and structural bonuses, and a
remote entailment scorer that treats the composite context text as a premise
against each dimension's canonical statement.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .context import UnifiedContext
from .errors import ConfigError, InvalidScore, ProtocolError, ScorerUnavailable
from .registry import Dimension, Registry
from .remote import EntailmentEndpoint, request_entailment_scores

UNIFORM_WEIGHT = 1.0 / 6.0

SCORER_LEXICAL = "lexical"
SCORER_REMOTE = "remote-entailment"
SCORER_FALLBACK = "lexical (fallback from remote-entailment)"


@dataclass(frozen=True)
class LexicalWeights:
    """Constants of the lexical scorer; query hits outweigh profile hits."""

    query_hit: float = 2.0
    profile_hit: float = 1.0
    time_constraint_bonus: float = 2.0
    sentiment_bonus: float = 1.0
    goals_bonus: float = 1.0
    constraints_bonus: float = 1.0


@dataclass(frozen=True)
class SalienceProfile:
    """Normalized per-dimension weights plus the ordered dominant dimensions."""

    weights: dict[Dimension, float]
    dominant: tuple[Dimension, ...]
    scorer_id: str


def lexical_salience(
    context: UnifiedContext,
    registry: Registry,
    weights: LexicalWeights = LexicalWeights(),
) -> dict[Dimension, float]:
    """Raw salience per dimension from keyword hits and structural bonuses.

    raw(d) = query_hit * |query hits for d| + profile_hit * |profile hits for d|
    plus: time bonus on Urgency when a time constraint parsed, sentiment bonus
    on Valence when the query tallied any sentiment word, goals bonus on
    GoalRelevance when the profile has goals, and constraints bonus on
    NormativeSignificance when the profile has dietary constraints.
    """
    raw: dict[Dimension, float] = {}
    for dim in Dimension:
        hits = context.keyword_hits.get(dim)
        score = 0.0
        if hits is not None:
            score += weights.query_hit * len(hits.query)
            score += weights.profile_hit * len(hits.profile)
        raw[dim] = score
    if context.time_constraint_minutes is not None:
        raw[Dimension.URGENCY] += weights.time_constraint_bonus
    if context.sentiment.total > 0:
        raw[Dimension.VALENCE] += weights.sentiment_bonus
    if context.profile.goals:
        raw[Dimension.GOAL_RELEVANCE] += weights.goals_bonus
    if context.profile.dietary_constraints:
        raw[Dimension.NORMATIVE_SIGNIFICANCE] += weights.constraints_bonus
    return raw


def remote_entailment_salience(
    context: UnifiedContext,
    registry: Registry,
    endpoint: EntailmentEndpoint,
) -> dict[Dimension, float]:
    """Entailment confidence per dimension from the remote scorer.

    The composite context text is the premise; each dimension's canonical
    statement is a hypothesis. The response must cover exactly the six
    dimensions or the call fails with ProtocolError.
    """
    hypotheses = [
        (info.id.value, info.canonical_statement) for info in registry.dimensions
    ]
    keyed = request_entailment_scores(endpoint, context.composite_text, hypotheses)
    expected = {dim.value for dim in Dimension}
    if set(keyed) != expected:
        raise ProtocolError(
            f"entailment response covered {sorted(keyed)} instead of the six dimensions"
        )
    return {dim: keyed[dim.value] for dim in Dimension}


def normalize(raw: dict[Dimension, float]) -> dict[Dimension, float]:
    """L1-normalize a raw score map; an all-zero map becomes exactly uniform."""
    missing = [dim for dim in Dimension if dim not in raw]
    if missing:
        raise InvalidScore(f"raw scores missing dimensions: {[d.value for d in missing]}")
    for dim in Dimension:
        value = raw[dim]
        if not isinstance(value, (int, float)) or isinstance(value, bool):
            raise InvalidScore(f"raw score for {dim.value} is not a number")
        if not math.isfinite(value) or value < 0:
            raise InvalidScore(f"raw score for {dim.value} is invalid: {value}")
    total = math.fsum(raw[dim] for dim in Dimension)
    if total == 0.0:
        return {dim: UNIFORM_WEIGHT for dim in Dimension}
    return {dim: raw[dim] / total for dim in Dimension}


def dominant_dimensions(
    weights: dict[Dimension, float],
    k: int = 3,
    threshold: float | None = None,
) -> tuple[Dimension, ...]:
    """Top-k dimensions by weight, ties broken by the fixed dimension order.

    When ``threshold`` is given it replaces top-k selection: every dimension
    whose weight reaches the threshold is kept, in the same ordering.
    """
    ordered = sorted(Dimension, key=lambda dim: (-weights[dim], dim.order))
    if threshold is not None:
        return tuple(dim for dim in ordered if weights[dim] >= threshold)
    return tuple(ordered[: max(0, k)])


def compute_salience(
    context: UnifiedContext,
    registry: Registry,
    scorer: str = SCORER_LEXICAL,
    *,
    k: int = 3,
    threshold: float | None = None,
    endpoint: EntailmentEndpoint | None = None,
    fallback: bool = False,
    lexical_weights: LexicalWeights = LexicalWeights(),
) -> SalienceProfile:
    """Run the selected scorer, normalize, and pick dominant dimensions.

    With ``fallback`` enabled, an unreachable remote scorer degrades to the
    lexical scorer and the scorer_id records that it did.
    """
    if scorer == SCORER_LEXICAL:
        raw = lexical_salience(context, registry, lexical_weights)
        scorer_id = SCORER_LEXICAL
    elif scorer in ("remote", SCORER_REMOTE):
        try:
            ep = endpoint or EntailmentEndpoint.from_env()
            if ep is None:
                raise ScorerUnavailable(
                    "entailment endpoint not configured (set APPRAISAL_NLI_URL)"
                )
            raw = remote_entailment_salience(context, registry, ep)
            scorer_id = SCORER_REMOTE
        except ScorerUnavailable:
            if not fallback:
                raise
            raw = lexical_salience(context, registry, lexical_weights)
            scorer_id = SCORER_FALLBACK
    else:
        raise ConfigError(f"unknown scorer {scorer!r} (expected 'lexical' or 'remote')")
    weights = normalize(raw)
    dominant = dominant_dimensions(weights, k=k, threshold=threshold)
    return SalienceProfile(weights=weights, dominant=dominant, scorer_id=scorer_id)
