import pytest

from appraisal_explainer import (
    Dimension,
    build_prompt,
    compute_salience,
    lexical_salience,
    normalize,
    realize_llm,
    realize_template,
    remote_entailment_salience,
)
from appraisal_explainer.errors import (
    EmptyCompletion,
    ProtocolError,
    RealizerUnavailable,
    ScorerUnavailable,
)
from appraisal_explainer.explanation import MODE_APPRAISAL, build_plan
from appraisal_explainer.remote import ChatEndpoint, EntailmentEndpoint
from appraisal_explainer.runlog import RunLog
from appraisal_explainer.scoring import rank_candidates

from stub_servers import chat_response, dead_url, nli_response_for, stub_server

CANNED = [0.9, 0.7, 0.3, 0.95, 0.2, 0.1]


def test_entailment_pass_through(sarah_context, registry):
    with stub_server(lambda payload: (200, nli_response_for(payload, CANNED))) as server:
        raw = remote_entailment_salience(
            sarah_context, registry, EntailmentEndpoint(url=server.url)
        )
    assert raw == dict(zip(Dimension, CANNED))
    sent = server.requests[0]
    assert sent["premise"] == sarah_context.composite_text
    assert [h["dimension"] for h in sent["hypotheses"]] == [d.value for d in Dimension]
    statements = {info.id.value: info.canonical_statement for info in registry.dimensions}
    for hypothesis in sent["hypotheses"]:
        assert hypothesis["text"] == statements[hypothesis["dimension"]]


def test_entailment_scores_are_keyed_not_positional(sarah_context, registry):
    with stub_server(
        lambda payload: (200, nli_response_for(payload, CANNED, reverse=True))
    ) as server:
        raw = remote_entailment_salience(
            sarah_context, registry, EntailmentEndpoint(url=server.url)
        )
    assert raw == dict(zip(Dimension, CANNED))


def test_entailment_arity_error(sarah_context, registry):
    with stub_server(
        lambda payload: (200, nli_response_for(payload, CANNED, drop_last=True))
    ) as server:
        with pytest.raises(ProtocolError):
            remote_entailment_salience(
                sarah_context, registry, EntailmentEndpoint(url=server.url)
            )


def test_entailment_unknown_dimension_error(sarah_context, registry):
    def respond(payload):
        body = nli_response_for(payload, CANNED)
        body["scores"][0]["dimension"] = "Mystery"
        return 200, body

    with stub_server(respond) as server:
        with pytest.raises(ProtocolError):
            remote_entailment_salience(
                sarah_context, registry, EntailmentEndpoint(url=server.url)
            )


def test_entailment_out_of_range_score(sarah_context, registry):
    with stub_server(
        lambda payload: (200, nli_response_for(payload, [1.5, 0.1, 0.1, 0.1, 0.1, 0.1]))
    ) as server:
        with pytest.raises(ProtocolError):
            remote_entailment_salience(
                sarah_context, registry, EntailmentEndpoint(url=server.url)
            )


def test_entailment_non_json_body(sarah_context, registry):
    with stub_server(lambda payload: (200, "this is not json")) as server:
        with pytest.raises(ProtocolError):
            remote_entailment_salience(
                sarah_context, registry, EntailmentEndpoint(url=server.url)
            )


def test_entailment_http_error_is_unavailable(sarah_context, registry):
    with stub_server(lambda payload: (500, {"error": "boom"})) as server:
        with pytest.raises(ScorerUnavailable):
            remote_entailment_salience(
                sarah_context, registry, EntailmentEndpoint(url=server.url)
            )


def test_entailment_connection_refused(sarah_context, registry):
    endpoint = EntailmentEndpoint(url=dead_url(), timeout=2.0)
    with pytest.raises(ScorerUnavailable):
        remote_entailment_salience(sarah_context, registry, endpoint)


def test_remote_fallback_equals_lexical(sarah_context, registry, monkeypatch):
    monkeypatch.setenv("APPRAISAL_NLI_URL", dead_url())
    profile = compute_salience(sarah_context, registry, scorer="remote", fallback=True)
    direct = normalize(lexical_salience(sarah_context, registry))
    assert profile.weights == direct
    assert profile.scorer_id != "lexical"
    assert "fallback" in profile.scorer_id


def test_remote_salience_via_env(sarah_context, registry, monkeypatch):
    with stub_server(lambda payload: (200, nli_response_for(payload, CANNED))) as server:
        monkeypatch.setenv("APPRAISAL_NLI_URL", server.url)
        profile = compute_salience(sarah_context, registry, scorer="remote")
    assert profile.scorer_id == "remote-entailment"
    assert profile.weights == normalize(dict(zip(Dimension, CANNED)))


@pytest.fixture
def sarah_bundle(sarah, sarah_context, registry, lexicons):
    salience = compute_salience(sarah_context, registry)
    ranked = rank_candidates(
        list(sarah.candidates), sarah_context, salience, lexicons=lexicons
    )
    plan = build_plan(ranked, salience, sarah_context, registry)
    return plan, build_prompt(MODE_APPRAISAL, plan=plan)


def test_llm_returns_completion_verbatim(sarah_bundle):
    _, bundle = sarah_bundle
    canned = "Here is a friendly explanation.\nIt cites urgency."
    runlog = RunLog()
    with stub_server(lambda payload: (200, chat_response(canned))) as server:
        text = realize_llm(bundle, ChatEndpoint(url=server.url), runlog=runlog)
        sent = server.requests[0]
    assert text == canned
    assert sent["model"] == "gpt-4o"
    assert sent["messages"][0]["role"] == "system"
    assert sent["messages"][1]["content"] == bundle.user_message()
    assert sent["temperature"] == 0.0
    record = runlog.records[0]
    assert record.response == canned
    assert record.prompt["sections"] == [list(s) for s in bundle.sections]
    assert record.started_at and record.finished_at


def test_llm_empty_completion(sarah_bundle):
    _, bundle = sarah_bundle
    with stub_server(lambda payload: (200, chat_response(""))) as server:
        with pytest.raises(EmptyCompletion):
            realize_llm(bundle, ChatEndpoint(url=server.url))


def test_llm_transport_error(sarah_bundle):
    _, bundle = sarah_bundle
    with pytest.raises(RealizerUnavailable):
        realize_llm(bundle, ChatEndpoint(url=dead_url(), timeout=2.0))


def test_llm_fallback_matches_template(sarah_bundle, monkeypatch):
    from appraisal_explainer.config import RunConfig
    from appraisal_explainer.pipeline import load_engine_data, realize_appraisal

    plan, _ = sarah_bundle
    monkeypatch.setenv("APPRAISAL_LLM_URL", dead_url())
    cfg = RunConfig(realizer="llm", fallback=True)
    runlog = RunLog()
    text = realize_appraisal(plan, load_engine_data(cfg), cfg, runlog)
    assert text == realize_template(plan)
    assert runlog.records[-1].fallback is True
    assert runlog.records[-1].realizer == "template"


def test_llm_auth_header_sent(sarah_bundle):
    _, bundle = sarah_bundle
    with stub_server(lambda payload: (200, chat_response("ok then"))) as server:
        endpoint = ChatEndpoint(url=server.url, api_key="secret-key")
        realize_llm(bundle, endpoint)
        headers = server.headers[0]
    assert headers.get("Authorization") == "Bearer secret-key"
