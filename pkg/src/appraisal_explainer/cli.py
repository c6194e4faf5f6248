"""Command-line surface: salience, rank, explain, scenario, schemas.

Exit codes: 0 success, 1 pipeline error, 2 input or configuration error.
All commands are byte-deterministic under the lexical scorer and template
realizer given identical inputs and configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .config import (
    FORMAT_JSON,
    RunConfig,
    load_candidates,
    load_config_file,
    load_profile,
    validate_config,
)
from .context import Query
from .errors import EngineError, InputError
from .fixtures import FIXTURE_NAMES, load_fixture
from .pipeline import EngineData, load_engine_data, run_pipeline, salience_stage
from .registry import Dimension
from .runlog import RunLog
from .schemas import SCHEMAS
from .serialize import (
    comparison_to_dict,
    plan_to_dict,
    ranking_to_dict,
    salience_to_dict,
)


def _common_flags() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="path to a run-configuration JSON file")
    common.add_argument("--registry", help="registry JSON overriding/extending the bundled catalog")
    common.add_argument("--lexicons", help="lexicons JSON overriding the bundled word lists")
    common.add_argument("--prompts", help="prompt-template JSON overriding the bundled templates")
    common.add_argument("--profile", help="user profile JSON path")
    common.add_argument("--query", help="natural-language query text")
    common.add_argument("--candidates", help="candidate-set JSON path")
    common.add_argument("--scorer", choices=["lexical", "remote"], help="salience scorer")
    common.add_argument("--realizer", choices=["template", "llm"], help="explanation realizer")
    common.add_argument("--baseline", action="store_true", help="emit the non-appraisal baseline")
    common.add_argument("--compare", action="store_true", help="emit both texts plus a comparison report")
    common.add_argument("--top-k", type=int, dest="top_k", help="number of dominant dimensions (1..6)")
    common.add_argument("--threshold", type=float, help="select dominant dimensions by weight threshold instead of top-k")
    common.add_argument(
        "--no-normative-filter",
        dest="filter_normative",
        action="store_false",
        default=None,
        help="keep normative violators in the ranked entries",
    )
    common.add_argument(
        "--fallback",
        action="store_true",
        default=None,
        help="degrade to the lexical scorer / template realizer when a remote service is unreachable",
    )
    common.add_argument("--out", help="directory for run artifacts")
    common.add_argument("--format", choices=[FORMAT_JSON, "text"], help="output format")
    return common


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="appraise",
        description="Appraisal-based salience, ranking, and explanation engine.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common_flags()
    sub.add_parser("salience", parents=[common], help="score dimension salience for a profile and query")
    sub.add_parser("rank", parents=[common], help="rank candidates against the salience profile")
    sub.add_parser("explain", parents=[common], help="run the full pipeline and emit an explanation")
    scenario = sub.add_parser("scenario", parents=[common], help="run a bundled scenario fixture end to end")
    scenario.add_argument("name", nargs="?", help="fixture name")
    schemas = sub.add_parser("schemas", parents=[common], help="print the published JSON schemas")
    schemas.add_argument("name", nargs="?", help="print only this schema")
    return parser


def _resolve_config(args: argparse.Namespace) -> RunConfig:
    cfg = load_config_file(args.config) if args.config else RunConfig()
    if args.registry:
        cfg.registry_path = args.registry
    if args.lexicons:
        cfg.lexicons_path = args.lexicons
    if args.prompts:
        cfg.prompts_path = args.prompts
    if args.profile:
        cfg.profile_path = args.profile
    if args.candidates:
        cfg.candidates_path = args.candidates
    if args.scorer:
        cfg.scorer = args.scorer
    if args.realizer:
        cfg.realizer = args.realizer
    if args.top_k is not None:
        cfg.top_k = args.top_k
    if args.threshold is not None:
        cfg.threshold = args.threshold
    if args.fallback is not None:
        cfg.fallback = args.fallback
    if args.filter_normative is not None:
        cfg.filter_normative = args.filter_normative
    if args.format:
        cfg.output_format = args.format
    if args.out:
        cfg.out_dir = args.out
    validate_config(cfg)
    return cfg


def _require(value, flag: str):
    if not value:
        raise InputError(f"{flag} is required for this command")
    return value


def _print_json(payload) -> None:
    print(json.dumps(payload, indent=2, ensure_ascii=False))


def _out_dir(cfg: RunConfig) -> Path | None:
    if cfg.out_dir is None:
        return None
    path = Path(cfg.out_dir)
    path.mkdir(parents=True, exist_ok=True)
    return path


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2, ensure_ascii=False) + "\n", "utf-8")


def _render_salience_text(payload: dict) -> str:
    lines = [f"scorer: {payload['scorer_id']}", "weights:"]
    for dim in Dimension:
        lines.append(f"  {dim.value:<24} {payload['weights'][dim.value]:.4f}")
    lines.append("dominant: " + ", ".join(payload["dominant"]))
    return "\n".join(lines)


def _render_ranking_text(payload: dict) -> str:
    lines = []
    for position, entry in enumerate(payload["entries"], start=1):
        lines.append(f"{position}. {entry['candidate_id']}  composite={entry['composite']:.4f}")
        for dim in Dimension:
            evidence = entry["evidence"][dim.value]
            suffix = f"  ({'; '.join(evidence)})" if evidence else ""
            lines.append(f"   {dim.value:<24} {entry['scores'][dim.value]:.4f}{suffix}")
    if payload["excluded"]:
        lines.append("excluded:")
        for exclusion in payload["excluded"]:
            lines.append(f"  {exclusion['candidate_id']}: {exclusion['reason']}")
    if not lines:
        lines.append("(no entries)")
    return "\n".join(lines)


def _render_comparison_text(payload: dict) -> str:
    lines = []
    for side in ("appraisal", "baseline"):
        report = payload[side]
        names = ", ".join(report["dimensions"]) if report["dimensions"] else "(none)"
        lines.append(
            f"{side}: mentions dimensions {names}; "
            f"evidence strings found: {len(report['evidence'])}; "
            f"length {report['length']}"
        )
    return "\n".join(lines)


def cmd_salience(args: argparse.Namespace, cfg: RunConfig) -> int:
    profile = load_profile(_require(cfg.profile_path, "--profile"))
    query = Query(text=_require(args.query, "--query"))
    data = load_engine_data(cfg)
    _, salience = salience_stage(profile, query, data, cfg)
    payload = salience_to_dict(salience)
    out = _out_dir(cfg)
    if out is not None:
        _write_json(out / "salience.json", payload)
    if cfg.output_format == FORMAT_JSON:
        _print_json(payload)
    else:
        print(_render_salience_text(payload))
    return 0


def cmd_rank(args: argparse.Namespace, cfg: RunConfig) -> int:
    profile = load_profile(_require(cfg.profile_path, "--profile"))
    query = Query(text=_require(args.query, "--query"))
    candidates = load_candidates(_require(cfg.candidates_path, "--candidates"))
    data = load_engine_data(cfg)
    runlog = RunLog()
    result = run_pipeline(
        profile, query, candidates, data, cfg, runlog,
        want_appraisal=False, want_baseline=False, want_compare=False,
    )
    payload = ranking_to_dict(result.ranked)
    out = _out_dir(cfg)
    if out is not None:
        _write_json(out / "salience.json", salience_to_dict(result.salience))
        _write_json(out / "ranking.json", payload)
    if cfg.output_format == FORMAT_JSON:
        _print_json(payload)
    else:
        print(_render_ranking_text(payload))
    return 0


def cmd_explain(args: argparse.Namespace, cfg: RunConfig) -> int:
    profile = load_profile(_require(cfg.profile_path, "--profile"))
    query = Query(text=_require(args.query, "--query"))
    candidates = load_candidates(_require(cfg.candidates_path, "--candidates"))
    data = load_engine_data(cfg)
    runlog = RunLog()
    want_compare = bool(args.compare)
    baseline_only = bool(args.baseline) and not want_compare
    result = run_pipeline(
        profile, query, candidates, data, cfg, runlog,
        want_appraisal=not baseline_only,
        want_baseline=bool(args.baseline) or want_compare,
        want_compare=want_compare,
    )
    out = _out_dir(cfg)
    if out is not None:
        _write_json(out / "salience.json", salience_to_dict(result.salience))
        _write_json(out / "ranking.json", ranking_to_dict(result.ranked))
        if result.plan is not None:
            _write_json(out / "plan.json", plan_to_dict(result.plan))
        if result.explanation is not None:
            (out / "explanation.txt").write_text(result.explanation + "\n", "utf-8")
        if result.baseline is not None:
            (out / "baseline.txt").write_text(result.baseline + "\n", "utf-8")
        if result.comparison is not None:
            _write_json(out / "comparison.json", comparison_to_dict(result.comparison))
        runlog.write(out / "runlog.jsonl")
    if want_compare:
        payload = {
            "appraisal": result.explanation,
            "baseline": result.baseline,
            "comparison": comparison_to_dict(result.comparison),
        }
        if cfg.output_format == FORMAT_JSON:
            _print_json(payload)
        else:
            print("=== appraisal explanation ===")
            print(result.explanation)
            print("=== baseline explanation ===")
            print(result.baseline)
            print("=== comparison ===")
            print(_render_comparison_text(payload["comparison"]))
        return 0
    text = result.baseline if baseline_only else result.explanation
    mode = "baseline" if baseline_only else "appraisal"
    if cfg.output_format == FORMAT_JSON:
        _print_json({"mode": mode, "explanation": text})
    else:
        print(text)
    return 0


def cmd_scenario(args: argparse.Namespace, cfg: RunConfig) -> int:
    if not args.name or args.name not in FIXTURE_NAMES:
        print(
            f"unknown fixture {args.name!r}; available: {', '.join(FIXTURE_NAMES)}",
            file=sys.stderr,
        )
        return 2
    fixture = load_fixture(args.name)
    data = load_engine_data(cfg)
    runlog = RunLog()
    result = run_pipeline(
        fixture.profile,
        fixture.query,
        list(fixture.candidates),
        data,
        cfg,
        runlog,
        want_appraisal=True,
        want_baseline=True,
        want_compare=False,
    )
    out = Path(cfg.out_dir) if cfg.out_dir else Path("appraisal-runs") / fixture.name
    out.mkdir(parents=True, exist_ok=True)
    _write_json(out / "salience.json", salience_to_dict(result.salience))
    _write_json(out / "ranking.json", ranking_to_dict(result.ranked))
    _write_json(out / "plan.json", plan_to_dict(result.plan))
    (out / "explanation.txt").write_text(result.explanation + "\n", "utf-8")
    (out / "baseline.txt").write_text(result.baseline + "\n", "utf-8")
    runlog.write(out / "runlog.jsonl")
    computed = frozenset(result.salience.dominant)
    passed = computed == fixture.expected_dominant
    print(f"scenario {fixture.name}: {'PASS' if passed else 'FAIL'}")
    print("  dominant: " + ", ".join(dim.value for dim in result.salience.dominant))
    print("  expected: " + ", ".join(sorted(dim.value for dim in fixture.expected_dominant)))
    print(f"  artifacts: {out}")
    return 0 if passed else 1


def cmd_schemas(args: argparse.Namespace, cfg: RunConfig) -> int:
    if args.name:
        if args.name not in SCHEMAS:
            print(
                f"unknown schema {args.name!r}; available: {', '.join(sorted(SCHEMAS))}",
                file=sys.stderr,
            )
            return 2
        _print_json(SCHEMAS[args.name])
    else:
        _print_json(SCHEMAS)
    return 0


COMMANDS = {
    "salience": cmd_salience,
    "rank": cmd_rank,
    "explain": cmd_explain,
    "scenario": cmd_scenario,
    "schemas": cmd_schemas,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = _resolve_config(args)
        return COMMANDS[args.command](args, cfg)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
