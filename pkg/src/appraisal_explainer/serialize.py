"""JSON-facing views of the engine's result objects.

Dictionaries are built in the fixed dimension order so serialized output is
byte-stable for identical inputs.
"""

from __future__ import annotations

from .explanation import ComparisonReport, ExplanationPlan
from .registry import Dimension
from .salience import SalienceProfile
from .scoring import RankedList


def salience_to_dict(profile: SalienceProfile) -> dict:
    return {
        "scorer_id": profile.scorer_id,
        "weights": {dim.value: profile.weights[dim] for dim in Dimension},
        "dominant": [dim.value for dim in profile.dominant],
    }


def ranking_to_dict(ranked: RankedList) -> dict:
    return {
        "entries": [
            {
                "candidate_id": entry.candidate_id,
                "composite": entry.composite,
                "scores": {dim.value: entry.vector.scores[dim] for dim in Dimension},
                "evidence": {
                    dim.value: list(entry.vector.evidence.get(dim, ()))
                    for dim in Dimension
                },
            }
            for entry in ranked.entries
        ],
        "excluded": [
            {"candidate_id": exclusion.candidate_id, "reason": exclusion.reason}
            for exclusion in ranked.excluded
        ],
    }


def _finding_to_dict(finding) -> dict:
    return {
        "dimension": finding.dimension.value,
        "display_name": finding.display_name,
        "weight": finding.weight,
        "score": finding.score,
        "evidence": list(finding.evidence),
    }


def plan_to_dict(plan: ExplanationPlan) -> dict:
    return {
        "candidate": plan.candidate.to_dict(),
        "dominant": [_finding_to_dict(f) for f in plan.dominant],
        "per_dimension": [_finding_to_dict(f) for f in plan.per_dimension],
        "context_summary": plan.context_summary,
        "composite": plan.composite,
    }


def comparison_to_dict(report: ComparisonReport) -> dict:
    return report.to_dict()
