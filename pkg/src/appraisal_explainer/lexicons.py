"""Keyword and sentiment lexicons: bundled defaults, file overrides."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path

from .errors import ConfigError
from .registry import Dimension, parse_dimension


@dataclass(frozen=True)
class Lexicons:
    """Per-dimension keyword lists plus a positive/negative sentiment lexicon."""

    dimension_words: dict[Dimension, frozenset[str]]
    positive: frozenset[str]
    negative: frozenset[str]

    def words_for(self, dim: Dimension) -> frozenset[str]:
        return self.dimension_words.get(dim, frozenset())


def _normalize(words) -> frozenset[str]:
    if not isinstance(words, (list, tuple)):
        raise ConfigError("lexicon word lists must be JSON arrays of strings")
    cleaned = set()
    for word in words:
        if not isinstance(word, str):
            raise ConfigError(f"lexicon entries must be strings, got {word!r}")
        word = word.strip().lower()
        if word:
            cleaned.add(word)
    return frozenset(cleaned)


@lru_cache(maxsize=1)
def _bundled_doc() -> str:
    return resources.files(__package__).joinpath("data/lexicons.json").read_text("utf-8")


def load_lexicons(source: str | Path | dict | None = None) -> Lexicons:
    """Load the bundled lexicons, with per-key overrides from ``source``.

    A source document replaces exactly the dimension lists and sentiment
    lists it names; everything else keeps the bundled defaults.
    """
    doc = json.loads(_bundled_doc())
    if source is not None:
        override = source if isinstance(source, dict) else json.loads(
            Path(source).read_text("utf-8")
        )
        if not isinstance(override, dict):
            raise ConfigError("lexicons document must be a JSON object")
        for key, words in override.get("dimensions", {}).items():
            parse_dimension(key)
            doc["dimensions"][key] = words
        for key, words in override.get("sentiment", {}).items():
            if key not in ("positive", "negative"):
                raise ConfigError(f"unknown sentiment lexicon {key!r}")
            doc["sentiment"][key] = words
    dimension_words = {
        parse_dimension(key): _normalize(words)
        for key, words in doc["dimensions"].items()
    }
    return Lexicons(
        dimension_words=dimension_words,
        positive=_normalize(doc["sentiment"]["positive"]),
        negative=_normalize(doc["sentiment"]["negative"]),
    )
