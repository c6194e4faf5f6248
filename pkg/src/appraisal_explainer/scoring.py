"""Per-dimension candidate scoring, composite ranking, constraint filtering.

Every dimension score lands in [0, 1] and every nonzero score carries at
least one human-readable evidence string; the explanation stage quotes the
evidence verbatim. Composite scores accumulate in the fixed dimension order
so results are bit-reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass

from .context import UnifiedContext, tally_sentiment, tokenize
from .errors import DuplicateCandidate, IncompleteVector, NoCandidates
from .lexicons import Lexicons
from .registry import Dimension
from .salience import SalienceProfile


@dataclass(frozen=True)
class ScoringConstants:
    """Tunable constants of the per-dimension scoring formulas."""

    urgency_time_weight: float = 0.7
    urgency_keyword_weight: float = 0.3
    urgency_keyword_saturation: float = 2.0
    agency_saturation: float = 3.0


@dataclass(frozen=True)
class Candidate:
    """One recommendable item, e.g. a recipe."""

    id: str
    name: str
    description: str = ""
    prep_time_minutes: int = 1
    ingredients: tuple[str, ...] = ()
    tags: tuple[str, ...] = ()
    customization_options: int = 0

    @classmethod
    def from_dict(cls, record: dict) -> "Candidate":
        return cls(
            id=record["id"],
            name=record["name"],
            description=record.get("description", ""),
            prep_time_minutes=int(record.get("prep_time_minutes", 1)),
            ingredients=tuple(record.get("ingredients", ())),
            tags=tuple(record.get("tags", ())),
            customization_options=int(record.get("customization_options", 0)),
        )

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "name": self.name,
            "description": self.description,
            "prep_time_minutes": self.prep_time_minutes,
            "ingredients": list(self.ingredients),
            "tags": list(self.tags),
            "customization_options": self.customization_options,
        }


@dataclass(frozen=True)
class AppraisalVector:
    """A candidate's per-dimension alignment scores with supporting evidence."""

    candidate_id: str
    scores: dict[Dimension, float]
    evidence: dict[Dimension, tuple[str, ...]]


@dataclass(frozen=True)
class RankedEntry:
    candidate_id: str
    composite: float
    vector: AppraisalVector
    candidate: Candidate | None = None


@dataclass(frozen=True)
class Exclusion:
    candidate_id: str
    reason: str


@dataclass(frozen=True)
class RankedList:
    entries: tuple[RankedEntry, ...]
    excluded: tuple[Exclusion, ...]


def _clamp01(value: float) -> float:
    return 0.0 if value < 0.0 else 1.0 if value > 1.0 else value


def candidate_terms(candidate: Candidate) -> frozenset[str]:
    """Token set of name, description, and tags (ingredients excluded)."""
    tokens = tokenize(candidate.name)
    tokens += tokenize(candidate.description)
    for tag in candidate.tags:
        tokens += tokenize(tag)
    return frozenset(tokens)


def _unique(values) -> tuple[str, ...]:
    seen: set[str] = set()
    out: list[str] = []
    for value in values:
        if value not in seen:
            seen.add(value)
            out.append(value)
    return tuple(out)


def _score_urgency(candidate, context, lexicons, constants):
    limit = context.time_constraint_minutes
    prep = candidate.prep_time_minutes
    if limit is None:
        time_fit = 1.0
        time_evidence = f"no time limit given; prep time {prep} min"
    else:
        time_fit = _clamp01(1.0 - max(0, prep - limit) / limit)
        if prep <= limit:
            time_evidence = f"prep time {prep} min is within the {limit} minutes available"
        else:
            time_evidence = f"prep time {prep} min exceeds the {limit} minutes available"
    hits = sorted(lexicons.words_for(Dimension.URGENCY) & candidate_terms(candidate))
    keyword_part = min(1.0, len(hits) / constants.urgency_keyword_saturation)
    score = _clamp01(
        constants.urgency_time_weight * time_fit
        + constants.urgency_keyword_weight * keyword_part
    )
    evidence = [time_evidence]
    if hits:
        evidence.append("urgency keywords matched: " + ", ".join(hits))
    return score, tuple(evidence)


def _score_goal_relevance(candidate, context):
    goals = _unique(context.profile.goals)
    if not goals:
        return 0.0, ()
    terms = candidate_terms(candidate)
    matched = sorted(goal for goal in goals if goal in terms)
    score = _clamp01(len(matched) / max(1, len(goals)))
    if not matched:
        return score, ()
    return score, ("matches your goals: " + ", ".join(matched),)


def _score_valence(candidate, lexicons):
    tally = tally_sentiment(candidate.description, lexicons)
    pos, neg = tally.positive_hits, tally.negative_hits
    score = _clamp01(0.5 + 0.5 * (pos - neg) / max(1, pos + neg))
    if tally.total == 0:
        evidence = "description sentiment: neutral (no lexicon matches)"
    else:
        words = ", ".join(tally.matched_words)
        evidence = f"description sentiment: {pos} positive, {neg} negative ({words})"
    return score, (evidence,)


def _score_predictability(candidate, context):
    candidate_set = {
        value.strip().lower()
        for value in candidate.tags + candidate.ingredients
        if value.strip()
    }
    familiar = set(context.profile.familiar_items)
    union = candidate_set | familiar
    if not union:
        return 0.0, ()
    shared = sorted(candidate_set & familiar)
    score = _clamp01(len(shared) / len(union))
    if not shared:
        return score, ()
    return score, ("shares familiar items: " + ", ".join(shared),)


def _score_agency(candidate, lexicons, constants):
    tag_tokens: set[str] = set()
    for tag in candidate.tags:
        tag_tokens.update(tokenize(tag))
    hits = sorted(lexicons.words_for(Dimension.AGENCY) & tag_tokens)
    total = candidate.customization_options + len(hits)
    score = min(1.0, total / constants.agency_saturation)
    evidence: list[str] = []
    if candidate.customization_options > 0:
        evidence.append(f"{candidate.customization_options} documented customization options")
    if hits:
        evidence.append("customization tags matched: " + ", ".join(hits))
    return _clamp01(score), tuple(evidence)


def _constraint_satisfied(constraint: str, candidate: Candidate) -> tuple[bool, str]:
    """Check one dietary constraint tag against a candidate.

    Rules: the constraint is satisfied when it appears verbatim among the
    candidate's tags; otherwise a "no-<word>" or "<word>-free" constraint is
    satisfied when <word> appears nowhere in the tag/ingredient tokens; any
    other untagged constraint is a violation.
    """
    tags_lower = {tag.strip().lower() for tag in candidate.tags}
    if constraint in tags_lower:
        return True, ""
    banned = None
    if constraint.startswith("no-"):
        banned = constraint[3:]
    elif constraint.endswith("-free"):
        banned = constraint[: -len("-free")]
    if banned:
        item_tokens: set[str] = set()
        for value in candidate.tags + candidate.ingredients:
            item_tokens.update(tokenize(value))
        if banned in item_tokens:
            return False, f"contains {banned}"
        return True, ""
    return False, f"not tagged {constraint}"


def _score_normative(candidate, context):
    constraints = _unique(context.profile.dietary_constraints)
    if not constraints:
        return 1.0, ("no dietary constraints apply",)
    violations = []
    for constraint in constraints:
        ok, detail = _constraint_satisfied(constraint, candidate)
        if not ok:
            violations.append(f"violates '{constraint}': {detail}")
    if violations:
        return 0.0, tuple(violations)
    return 1.0, ("satisfies dietary constraints: " + ", ".join(constraints),)


def score_dimension(
    candidate: Candidate,
    dim: Dimension,
    context: UnifiedContext,
    lexicons: Lexicons,
    constants: ScoringConstants = ScoringConstants(),
) -> tuple[float, tuple[str, ...]]:
    """Score ``candidate`` on one dimension; returns (score in [0,1], evidence)."""
    if dim == Dimension.URGENCY:
        return _score_urgency(candidate, context, lexicons, constants)
    if dim == Dimension.GOAL_RELEVANCE:
        return _score_goal_relevance(candidate, context)
    if dim == Dimension.VALENCE:
        return _score_valence(candidate, lexicons)
    if dim == Dimension.PREDICTABILITY_SURPRISE:
        return _score_predictability(candidate, context)
    if dim == Dimension.AGENCY:
        return _score_agency(candidate, lexicons, constants)
    return _score_normative(candidate, context)


def appraisal_vector(
    candidate: Candidate,
    context: UnifiedContext,
    lexicons: Lexicons,
    constants: ScoringConstants = ScoringConstants(),
) -> AppraisalVector:
    """All six dimension scores for one candidate."""
    scores: dict[Dimension, float] = {}
    evidence: dict[Dimension, tuple[str, ...]] = {}
    for dim in Dimension:
        score, hints = score_dimension(candidate, dim, context, lexicons, constants)
        scores[dim] = score
        evidence[dim] = hints
    return AppraisalVector(candidate_id=candidate.id, scores=scores, evidence=evidence)


def composite_score(vector: AppraisalVector, salience: SalienceProfile) -> float:
    """Salience-weighted sum of the vector's scores, in fixed dimension order."""
    missing = [
        dim.value
        for dim in Dimension
        if dim not in vector.scores or dim not in salience.weights
    ]
    if missing:
        raise IncompleteVector(f"missing dimensions: {missing}")
    total = 0.0
    for dim in Dimension:
        total += salience.weights[dim] * vector.scores[dim]
    return total


def rank_vectors(
    vectors: list[AppraisalVector],
    salience: SalienceProfile,
    filter_normative: bool = True,
    candidates_by_id: dict[str, Candidate] | None = None,
) -> RankedList:
    """Rank precomputed vectors: filter normative violations, sort by composite.

    Entries sort by composite descending with candidate id as the tie-break;
    the excluded list keeps input order.
    """
    entries: list[RankedEntry] = []
    excluded: list[Exclusion] = []
    for vector in vectors:
        if filter_normative and vector.scores.get(Dimension.NORMATIVE_SIGNIFICANCE) == 0.0:
            reason = "; ".join(vector.evidence.get(Dimension.NORMATIVE_SIGNIFICANCE, ()))
            excluded.append(Exclusion(vector.candidate_id, reason or "normative violation"))
            continue
        candidate = (candidates_by_id or {}).get(vector.candidate_id)
        entries.append(
            RankedEntry(
                vector.candidate_id, composite_score(vector, salience), vector, candidate
            )
        )
    entries.sort(key=lambda entry: (-entry.composite, entry.candidate_id))
    return RankedList(entries=tuple(entries), excluded=tuple(excluded))


def rank_candidates(
    candidates: list[Candidate],
    context: UnifiedContext,
    salience: SalienceProfile,
    *,
    lexicons: Lexicons,
    constants: ScoringConstants = ScoringConstants(),
    filter_normative: bool = True,
) -> RankedList:
    """Score and rank a candidate set against the context and salience profile."""
    if not candidates:
        raise NoCandidates("candidate set is empty")
    seen: set[str] = set()
    for candidate in candidates:
        if candidate.id in seen:
            raise DuplicateCandidate(f"duplicate candidate id: {candidate.id!r}")
        seen.add(candidate.id)
    vectors = [
        appraisal_vector(candidate, context, lexicons, constants)
        for candidate in candidates
    ]
    return rank_vectors(
        vectors,
        salience,
        filter_normative=filter_normative,
        candidates_by_id={candidate.id: candidate for candidate in candidates},
    )
