"""The response generator lineup and its registry wiring."""

from __future__ import annotations

import random

import pytest

from parley.config import EngineConfig
from parley.contracts import Constraints, SystemAction
from parley.discourse import DiscourseState, EntityRecord
from parley.flows import FlowState, load_all_flows
from parley.nlu import analyze
from parley.rgs import (
    CenterRg,
    FlowRg,
    FunctionalRg,
    PersonaRg,
    TurnContext,
    build_registry,
    render_menu,
)
from parley.types import INTRO_TOPIC, TOPICS


@pytest.fixture(scope="module")
def flows():
    return load_all_flows()


def ctx_for(
    utterance: str = "sounds good",
    action: str = "converse",
    topic: str | None = "music",
    **overrides,
) -> TurnContext:
    fields = dict(
        action=SystemAction(action),
        constraints=Constraints(topic=topic),
        nlu=analyze(utterance) if utterance else None,
        discourse=DiscourseState(),
        turn_index=4,
        rng=random.Random(13),
        config=EngineConfig(),
    )
    fields.update(overrides)
    return TurnContext(**fields)


# ------------------------------------------------------------------- flow rg


def test_flow_rg_advances_and_commits_on_demand(flows):
    rg = FlowRg(flows["music"])
    ctx = ctx_for()
    out = rg.respond(ctx)
    assert out and not out[0].null_flag
    state = ctx.flow_states["music"]
    assert state.active_miniflow is None  # nothing moves until commit
    out[0].commit()
    assert state.active_miniflow is not None


def test_flow_rg_hands_off_to_universal_questions(flows):
    rg = FlowRg(flows["music"])
    ctx = ctx_for()
    state = FlowState(topic="music")
    # burn the whole script
    for miniflow in flows["music"].miniflows:
        state.visited_miniflows.add(miniflow.name)
        for node in miniflow.nodes.values():
            for template in node.templates:
                state.used_templates.add(template.template_id)
    ctx.flow_states["music"] = state
    out = rg.respond(ctx)
    assert not out[0].null_flag
    out[0].commit()
    assert state.pending_universal is not None
    assert ("music", "would_you_rather") in ctx.used_universal


def test_flow_rg_answers_pending_universal_first(flows):
    rg = FlowRg(flows["nature"])
    ctx = ctx_for("the beach for sure", topic="nature")
    state = FlowState(topic="nature", pending_universal=("would_you_rather", 0))
    ctx.flow_states["nature"] = state
    out = rg.respond(ctx)
    assert not out[0].null_flag
    assert "beach" in (out[0].parts.ground or "").lower()
    out[0].commit()
    assert state.pending_universal is None


def test_note_loss_suspends_an_active_flow(flows):
    rg = FlowRg(flows["music"])
    ctx = ctx_for()
    rg.respond(ctx)[0].commit()
    assert ctx.flow_states["music"].suspended is False
    rg.note_loss(ctx)
    assert ctx.flow_states["music"].suspended is True


def test_note_loss_ignores_a_flow_that_never_started(flows):
    rg = FlowRg(flows["music"])
    ctx = ctx_for()
    rg.note_loss(ctx)
    assert "music" not in ctx.flow_states or not ctx.flow_states["music"].suspended


# ------------------------------------------------------------ center persona


def test_center_rg_stamps_the_facts_own_topic():
    rg = CenterRg()
    discourse = DiscourseState().record_entity(
        EntityRecord("the beatles", "Q1299", "band", "user", 3), current_turn=3
    )
    # constraint says movies, but the centered fact is about music
    ctx = ctx_for(topic="movies", discourse=discourse)
    out = rg.respond(ctx)
    assert not out[0].null_flag
    assert out[0].topic == "music"


def test_persona_rg_needs_a_question_about_the_bot():
    rg = PersonaRg()
    assert rg.respond(ctx_for("i like pizza"))[0].null_flag
    out = rg.respond(ctx_for("whats your favorite song?"))
    assert not out[0].null_flag
    assert "Piano Man" in out[0].parts.body
    assert "What about you?" in out[0].parts.body


# --------------------------------------------------------------- functional


def test_render_menu_reads_naturally():
    assert render_menu(("sports", "video_games", "tv")) == "sports, video games, or tv"
    assert render_menu(("books",)) == "books"


def test_functional_closing_and_usage():
    rg = FunctionalRg()
    closing = rg.respond(ctx_for("stop", action="conv_closing"))
    assert not closing[0].null_flag
    usage = rg.respond(ctx_for("what can you do", action="advise_usage"))
    assert "topic" in usage[0].parts.body or "chat" in usage[0].parts.body


def test_functional_repeat_replays_the_last_response():
    rg = FunctionalRg()
    ctx = ctx_for("say that again", action="perform_repeat",
                  last_response="The Beatles formed in Liverpool.")
    out = rg.respond(ctx)
    assert "The Beatles formed in Liverpool." in out[0].parts.body
    # nothing said yet: own up instead of repeating nothing
    bare = rg.respond(ctx_for("say that again", action="perform_repeat"))
    assert "said anything yet" in bare[0].parts.body


def test_functional_menu_lists_the_offered_topics():
    rg = FunctionalRg()
    ctx = ctx_for("what can we talk about", action="list_options",
                  menu_topics=("sports", "movies", "books"))
    out = rg.respond(ctx)
    assert "sports, movies, or books" in out[0].parts.body
    assert out[0].dialogue_acts == ("open-question",)
    empty = rg.respond(ctx_for("what can we talk about", action="list_options"))
    assert empty[0].null_flag


def test_functional_greet_needs_a_known_name():
    rg = FunctionalRg()
    anon = rg.respond(ctx_for("hello", action="greet", topic=INTRO_TOPIC))
    assert anon[0].null_flag
    known = rg.respond(
        ctx_for("hello", action="greet", topic=INTRO_TOPIC,
                user_name="Alice", previous_topics=("harry_potter",))
    )
    body = known[0].parts.body
    assert "Alice" in body
    assert "harry potter" in body


# ----------------------------------------------------------------- registry


def test_registry_covers_every_topic_for_converse(flows):
    registry = build_registry(flows)
    for topic in TOPICS:
        names = [rg.name for rg in registry.lookup(SystemAction("converse"), topic)]
        assert any(name.startswith("flow:") for name in names), topic
        assert "center" in names
        assert "persona" in names


def test_registry_music_lineup_in_priority_order(flows):
    registry = build_registry(flows)
    names = [rg.name for rg in registry.lookup(SystemAction("converse"), "music")]
    assert names == ["flow:music", "kg", "center", "persona"]


def test_registry_intro_greets(flows):
    registry = build_registry(flows)
    names = [rg.name for rg in registry.lookup(SystemAction("greet"), INTRO_TOPIC)]
    assert names[0] == "flow:intro"
    assert "functional" in names


def test_registry_functional_actions_have_a_generator(flows):
    registry = build_registry(flows)
    for kind in ("conv_closing", "perform_repeat", "advise_usage",
                 "repeat_request", "wait_prompting", "red_response", "list_options"):
        names = [rg.name for rg in registry.lookup(SystemAction(kind), None)]
        assert "functional" in names, kind
