"""End-to-end orchestration shared by the CLI, the scenario runner, and scripts."""

from __future__ import annotations

from dataclasses import dataclass

from .config import RunConfig
from .context import Query, UnifiedContext, UserProfile, build_unified_context
from .errors import RealizerUnavailable
from .explanation import (
    MODE_APPRAISAL,
    MODE_BASELINE,
    ComparisonReport,
    ExplanationPlan,
    PromptTemplates,
    build_plan,
    build_prompt,
    compare,
    load_prompt_templates,
    realize_baseline_template,
    realize_llm,
    realize_template,
)
from .lexicons import Lexicons, load_lexicons
from .registry import Registry, load_registry
from .remote import ChatEndpoint
from .runlog import RunLog
from .salience import SalienceProfile, compute_salience
from .scoring import Candidate, RankedList, rank_candidates


@dataclass
class EngineData:
    """The three data bundles commands load once per invocation."""

    registry: Registry
    lexicons: Lexicons
    prompts: PromptTemplates


def load_engine_data(cfg: RunConfig) -> EngineData:
    return EngineData(
        registry=load_registry(cfg.registry_path),
        lexicons=load_lexicons(cfg.lexicons_path),
        prompts=load_prompt_templates(cfg.prompts_path),
    )


@dataclass
class PipelineResult:
    context: UnifiedContext
    salience: SalienceProfile
    ranked: RankedList | None = None
    plan: ExplanationPlan | None = None
    explanation: str | None = None
    baseline: str | None = None
    comparison: ComparisonReport | None = None


def salience_stage(
    profile: UserProfile,
    query: Query,
    data: EngineData,
    cfg: RunConfig,
) -> tuple[UnifiedContext, SalienceProfile]:
    context = build_unified_context(profile, query, data.registry, data.lexicons)
    salience = compute_salience(
        context,
        data.registry,
        scorer=cfg.scorer,
        k=cfg.top_k,
        threshold=cfg.threshold,
        fallback=cfg.fallback,
        lexical_weights=cfg.salience,
    )
    return context, salience


def realize_appraisal(
    plan: ExplanationPlan,
    data: EngineData,
    cfg: RunConfig,
    runlog: RunLog,
) -> str:
    """Realize the appraisal explanation with the configured realizer.

    The llm realizer degrades to the template realizer when unavailable and
    fallback is enabled; the run log flags the degraded record.
    """
    if cfg.realizer == "template":
        text = realize_template(plan)
        runlog.record(mode=MODE_APPRAISAL, realizer="template", response=text)
        return text
    bundle = build_prompt(MODE_APPRAISAL, plan=plan, templates=data.prompts)
    try:
        endpoint = ChatEndpoint.from_env()
        if endpoint is None:
            raise RealizerUnavailable(
                "chat endpoint not configured (set APPRAISAL_LLM_URL)"
            )
        return realize_llm(bundle, endpoint, runlog=runlog)
    except RealizerUnavailable:
        if not cfg.fallback:
            raise
        text = realize_template(plan)
        runlog.record(
            mode=MODE_APPRAISAL,
            realizer="template",
            response=text,
            prompt=bundle.to_dict(),
            fallback=True,
        )
        return text


def realize_baseline(
    context: UnifiedContext,
    candidates: list[Candidate],
    data: EngineData,
    cfg: RunConfig,
    runlog: RunLog,
) -> str:
    """Realize the non-appraisal baseline with the configured realizer."""
    if cfg.realizer == "template":
        text = realize_baseline_template(context, candidates)
        runlog.record(mode=MODE_BASELINE, realizer="template", response=text)
        return text
    bundle = build_prompt(
        MODE_BASELINE, context=context, candidates=candidates, templates=data.prompts
    )
    try:
        endpoint = ChatEndpoint.from_env()
        if endpoint is None:
            raise RealizerUnavailable(
                "chat endpoint not configured (set APPRAISAL_LLM_URL)"
            )
        return realize_llm(bundle, endpoint, runlog=runlog)
    except RealizerUnavailable:
        if not cfg.fallback:
            raise
        text = realize_baseline_template(context, candidates)
        runlog.record(
            mode=MODE_BASELINE,
            realizer="template",
            response=text,
            prompt=bundle.to_dict(),
            fallback=True,
        )
        return text


def run_pipeline(
    profile: UserProfile,
    query: Query,
    candidates: list[Candidate],
    data: EngineData,
    cfg: RunConfig,
    runlog: RunLog,
    *,
    want_appraisal: bool = True,
    want_baseline: bool = False,
    want_compare: bool = False,
) -> PipelineResult:
    """Run context, salience, ranking, and the requested realizations."""
    context, salience = salience_stage(profile, query, data, cfg)
    ranked = rank_candidates(
        candidates,
        context,
        salience,
        lexicons=data.lexicons,
        constants=cfg.scoring,
        filter_normative=cfg.filter_normative,
    )
    result = PipelineResult(context=context, salience=salience, ranked=ranked)
    need_plan = want_appraisal or want_compare
    if need_plan:
        result.plan = build_plan(ranked, salience, context, data.registry)
        result.explanation = realize_appraisal(result.plan, data, cfg, runlog)
    if want_baseline or want_compare:
        result.baseline = realize_baseline(context, candidates, data, cfg, runlog)
    if want_compare:
        result.comparison = compare(result.explanation, result.baseline, result.plan)
    return result
