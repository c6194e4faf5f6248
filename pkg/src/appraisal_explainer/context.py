"""Unified context assembly: profile plus query, reduced to appraisal signals.

Tokenization is deliberately simple (lowercase, split on non-alphanumerics,
no stemming) so every downstream count can be recomputed by hand.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from .errors import EmptyQuery
from .lexicons import Lexicons
from .registry import Dimension, Registry

MAX_CONSTRAINT_MINUTES = 24 * 60

_TOKEN_RE = re.compile(r"[a-z0-9]+")

# Recognized duration forms: "<N> minutes", "<N> min(s)", "<N>-minute",
# "half an hour" (30) and "an hour" (60). First match in text order wins.
_DURATION_RE = re.compile(
    r"(\d+)\s*-?\s*min(?:ute)?s?\b"
    r"|\bhalf\s+an\s+hour\b"
    r"|\ban\s+hour\b",
    re.IGNORECASE,
)


def tokenize(text: str) -> list[str]:
    """Lowercase word tokens of ``text``; punctuation and hyphens split."""
    return _TOKEN_RE.findall(text.lower())


def parse_time_constraint(text: str) -> int | None:
    """First parseable duration in ``text`` as minutes, or None.

    Total function: any input (including empty) yields a result without
    raising. Durations outside 1..1440 minutes are not durations.
    """
    if not text:
        return None
    for match in _DURATION_RE.finditer(text):
        digits = match.group(1)
        if digits is None:
            return 30 if match.group(0).lower().lstrip().startswith("half") else 60
        minutes = int(digits)
        if 1 <= minutes <= MAX_CONSTRAINT_MINUTES:
            return minutes
    return None


@dataclass(frozen=True)
class SentimentTally:
    """Whole-word sentiment matches; one entry per occurrence."""

    matched_positive: tuple[str, ...] = ()
    matched_negative: tuple[str, ...] = ()

    @property
    def positive_hits(self) -> int:
        return len(self.matched_positive)

    @property
    def negative_hits(self) -> int:
        return len(self.matched_negative)

    @property
    def matched_words(self) -> tuple[str, ...]:
        return self.matched_positive + self.matched_negative

    @property
    def total(self) -> int:
        return self.positive_hits + self.negative_hits


def tally_sentiment(text: str, lexicons: Lexicons) -> SentimentTally:
    """Count positive/negative lexicon words in ``text``, once per occurrence."""
    positive: list[str] = []
    negative: list[str] = []
    for token in tokenize(text):
        if token in lexicons.positive:
            positive.append(token)
        elif token in lexicons.negative:
            negative.append(token)
    return SentimentTally(tuple(positive), tuple(negative))


@dataclass(frozen=True)
class UserProfile:
    """Long-term user profile; keyword fields are lowercase-normalized."""

    user_id: str
    description: str = ""
    goals: tuple[str, ...] = ()
    preference_keywords: tuple[str, ...] = ()
    dietary_constraints: tuple[str, ...] = ()
    familiar_items: tuple[str, ...] = ()
    history_queries: tuple[str, ...] = ()

    def __post_init__(self):
        for name in ("goals", "preference_keywords", "dietary_constraints", "familiar_items"):
            values = tuple(v.strip().lower() for v in getattr(self, name) if v.strip())
            object.__setattr__(self, name, values)
        object.__setattr__(self, "history_queries", tuple(self.history_queries))

    @classmethod
    def from_dict(cls, record: dict) -> "UserProfile":
        return cls(
            user_id=record["user_id"],
            description=record.get("description", ""),
            goals=tuple(record.get("goals", ())),
            preference_keywords=tuple(record.get("preference_keywords", ())),
            dietary_constraints=tuple(record.get("dietary_constraints", ())),
            familiar_items=tuple(record.get("familiar_items", ())),
            history_queries=tuple(record.get("history_queries", ())),
        )


@dataclass(frozen=True)
class Query:
    """A single natural-language request."""

    text: str
    timestamp: str | None = None

    def __post_init__(self):
        if not self.text or not self.text.strip():
            raise EmptyQuery("query text is empty")


@dataclass(frozen=True)
class SourceHits:
    """Keyword matches for one dimension, deduplicated per source."""

    query: tuple[str, ...] = ()
    profile: tuple[str, ...] = ()

    @property
    def all(self) -> tuple[str, ...]:
        merged = list(self.query)
        merged.extend(w for w in self.profile if w not in self.query)
        return tuple(merged)


@dataclass(frozen=True)
class UnifiedContext:
    """Everything the salience and scoring stages need about the situation."""

    profile: UserProfile
    query: Query
    composite_text: str
    time_constraint_minutes: int | None
    sentiment: SentimentTally
    keyword_hits: dict[Dimension, SourceHits] = field(default_factory=dict)


def _ordered_matches(tokens: list[str], words: frozenset[str]) -> tuple[str, ...]:
    seen: set[str] = set()
    out: list[str] = []
    for token in tokens:
        if token in words and token not in seen:
            seen.add(token)
            out.append(token)
    return tuple(out)


def _composite_text(profile: UserProfile, query: Query) -> str:
    parts = []
    if profile.description.strip():
        parts.append(profile.description.strip())
    if profile.goals:
        parts.append("Goals: " + ", ".join(profile.goals) + ".")
    parts.append(query.text.strip())
    return " ".join(parts)


def build_unified_context(
    profile: UserProfile,
    query: Query,
    registry: Registry,
    lexicons: Lexicons,
) -> UnifiedContext:
    """Merge profile and query into the signals the pipeline consumes.

    Keyword hits are collected per dimension from two sources: tokens of the
    query text, and tokens of the profile's goals and preference keywords.
    Sentiment is tallied over the query text only (the momentary signal).
    """
    if not query.text.strip():
        raise EmptyQuery("query text is empty")
    query_tokens = tokenize(query.text)
    profile_tokens: list[str] = []
    for keyword in profile.goals + profile.preference_keywords:
        profile_tokens.extend(tokenize(keyword))
    hits: dict[Dimension, SourceHits] = {}
    for info in registry.dimensions:
        words = lexicons.words_for(info.id)
        hits[info.id] = SourceHits(
            query=_ordered_matches(query_tokens, words),
            profile=_ordered_matches(profile_tokens, words),
        )
    return UnifiedContext(
        profile=profile,
        query=query,
        composite_text=_composite_text(profile, query),
        time_constraint_minutes=parse_time_constraint(query.text),
        sentiment=tally_sentiment(query.text, lexicons),
        keyword_hits=hits,
    )
