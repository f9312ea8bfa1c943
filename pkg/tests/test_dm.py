"""Dialogue manager: action policy, constraints, pooling, ranking."""

from __future__ import annotations

import random

import pytest

from parley.config import EngineConfig
from parley.contracts import Constraints, ResponseCandidate, ResponseParts, null_candidate
from parley.dm import (
    DmView,
    build_response,
    build_response_pool,
    choose_initiative,
    decide_action,
    fallback_candidate,
    fresh_topics,
    generate_constraints,
    passes_hard_gate,
    rank_responses,
    score_candidate,
)
from parley.nlu import analyze, detect_topic
from parley.types import INTRO_TOPIC, TOPICS


def view(**kwargs) -> DmView:
    defaults = dict(turn_index=5, current_topic="music")
    defaults.update(kwargs)
    return DmView(**defaults)


def act_for(utterance: str, **view_kwargs):
    nlu = analyze(utterance)
    signal = detect_topic(utterance)
    return decide_action(nlu, signal, view(**view_kwargs))


def cand(
    body: str,
    rg: str = "flow:music",
    topic: str | None = "music",
    acts: tuple[str, ...] = ("statement-non-opinion",),
    annotations: tuple[tuple[str, str], ...] = (),
) -> ResponseCandidate:
    return ResponseCandidate(
        rg_name=rg,
        parts=ResponseParts(body=body),
        topic=topic,
        dialogue_acts=acts,
        entity_annotations=annotations,
    )


# --------------------------------------------------------------- the policy


def test_stop_outranks_everything():
    assert act_for("stop").kind == "conv_closing"
    assert act_for("goodbye", turn_index=1).kind == "conv_closing"


def test_sensitive_question_gets_red_response():
    action = act_for("can you give me medical advice about my heart")
    assert action.kind == "red_response"


def test_repeat_and_wait_intents():
    assert act_for("can you say that again").kind == "perform_repeat"
    assert act_for("hold on a second").kind == "wait_prompting"


def test_empty_utterance_asks_for_a_repeat():
    assert act_for("").kind == "repeat_request"
    # even on the first turn, silence beats a greeting
    assert act_for("", turn_index=1).kind == "repeat_request"


def test_first_turn_greets():
    assert act_for("hello there", turn_index=1, current_topic=None).kind == "greet"


def test_usage_question_and_menu_request():
    assert act_for("what can you do").kind == "advise_usage"
    assert act_for("what can we talk about").kind == "list_options"


def test_explicit_topic_request_changes_topic():
    action = act_for("lets talk about movies", current_topic="music")
    assert action.kind == "topic_change"


def test_signal_for_current_topic_is_not_a_change():
    assert act_for("lets talk about music", current_topic="music").kind == "converse"


def test_lost_topic_triggers_change():
    assert act_for("ok", signal_less_streak=2).kind == "topic_change"
    assert act_for("ok", signal_less_streak=1).kind == "converse"


def test_intro_with_drought_moves_to_a_real_topic():
    action = act_for("yeah", current_topic=INTRO_TOPIC, signal_less_streak=2)
    assert action.kind == "topic_change"


# ---------------------------------------------------------------- initiative


def test_fresh_topics_respects_affinity_and_exclusions():
    v = view(
        affinity_order=("books", "music", "sports"),
        visited_topics=frozenset({"books"}),
        disinterested_topics=frozenset({"sports"}),
    )
    fresh = fresh_topics(v)
    assert fresh[0] == "music"
    assert "books" not in fresh and "sports" not in fresh


def test_fresh_topics_never_empty():
    v = view(
        visited_topics=frozenset(TOPICS),
        disinterested_topics=frozenset(TOPICS),
    )
    assert fresh_topics(v)


def test_initiative_proposes_one_topic_by_default():
    mode, options = choose_initiative(view())
    assert mode == "topic"
    assert len(options) == 1
    assert options[0] == TOPICS[0]


def test_initiative_menu_after_too_many_system_changes():
    mode, options = choose_initiative(view(system_initiative_streak=2))
    assert mode == "menu"
    assert len(options) == 3


def test_initiative_menu_when_fallbacks_stack():
    mode, _ = choose_initiative(view(fallback_streak=2))
    assert mode == "menu"


def test_initiative_menu_every_third_change():
    assert choose_initiative(view(initiated_changes=3))[0] == "menu"
    assert choose_initiative(view(initiated_changes=6))[0] == "menu"
    assert choose_initiative(view(initiated_changes=2))[0] == "topic"
    assert choose_initiative(view(initiated_changes=0))[0] == "topic"


# --------------------------------------------------------------- constraints


def test_greet_constraints_target_the_intro():
    nlu = analyze("hi")
    c = generate_constraints(
        decide_action(nlu, detect_topic("hi"), view(turn_index=1, current_topic=None)),
        nlu,
        detect_topic("hi"),
        view(turn_index=1, current_topic=None),
    )
    assert c.topic == INTRO_TOPIC
    assert c.new_topic_flag


def test_topic_change_constraints_are_hard():
    nlu = analyze("lets talk about movies")
    signal = detect_topic("lets talk about movies")
    v = view(current_topic="music")
    c = generate_constraints(decide_action(nlu, signal, v), nlu, signal, v)
    assert c.topic == "movies"
    assert c.topic_hardness == "hard"
    assert c.new_topic_flag


def test_system_target_overrides_signal():
    nlu = analyze("ok")
    signal = detect_topic("ok")
    v = view(signal_less_streak=2)
    action = decide_action(nlu, signal, v)
    c = generate_constraints(action, nlu, signal, v, target_topic="dinosaurs")
    assert c.topic == "dinosaurs"


def test_converse_keeps_topic_soft():
    nlu = analyze("i saw a great movie. what do you think of popcorn?")
    signal = detect_topic("what do you think of popcorn")
    c = generate_constraints(
        decide_action(nlu, signal, view()), nlu, signal, view(), linked_ids=("Q1",)
    )
    assert c.topic == "music"
    assert c.topic_hardness == "soft"
    assert c.entity_mentions == ("Q1",)
    # the act to respond to is the last sentence's
    assert c.dialogue_act == nlu.acts[-1]


# ----------------------------------------------------------------- the pool


def test_pool_drops_nulls_silently():
    kept, dropped = build_response_pool([null_candidate("kg", "music")], set())
    assert not kept
    assert dropped[0][1] == "null"


def test_pool_drops_profanity_but_not_mask_listed_words():
    bad = cand("well damn that is a song")
    fine = cand("i love classic rock and bass lines")
    kept, dropped = build_response_pool([bad, fine], set())
    assert [c.parts.body for c in kept] == ["i love classic rock and bass lines"]
    assert dropped[0][1] == "profanity"


def test_pool_drops_already_spoken_bodies():
    spoken = {"the beatles formed in liverpool"}
    kept, dropped = build_response_pool(
        [cand("the beatles formed in liverpool"), cand("something new")], spoken
    )
    assert [c.parts.body for c in kept] == ["something new"]
    assert dropped[0][1] == "repetition"


# ------------------------------------------------------------------ ranking


def test_hard_topic_gate():
    constraints = Constraints(topic="movies", topic_hardness="hard")
    assert passes_hard_gate(cand("x", topic="movies"), constraints)
    assert not passes_hard_gate(cand("x", topic="music"), constraints)
    assert not passes_hard_gate(cand("x", topic=None), constraints)


def test_hard_entity_gate():
    constraints = Constraints(
        topic="music", entity_mentions=("Q1299",), entity_hardness="hard"
    )
    hit = cand("x", annotations=(("the beatles", "Q1299"),))
    miss = cand("x")
    assert passes_hard_gate(hit, constraints)
    assert not passes_hard_gate(miss, constraints)


def test_topic_match_outscores_mismatch():
    cfg = EngineConfig()
    constraints = Constraints(topic="music")
    on = score_candidate(cand("x", topic="music"), constraints, cfg)
    off = score_candidate(cand("x", topic="movies"), constraints, cfg)
    neutral = score_candidate(cand("x", topic=None), constraints, cfg)
    assert on > neutral > off


def test_entity_overlap_scores_higher():
    cfg = EngineConfig()
    constraints = Constraints(topic="music", entity_mentions=("Q1299",))
    with_entity = cand("x", annotations=(("the beatles", "Q1299"),))
    without = cand("x")
    assert score_candidate(with_entity, constraints, cfg) > score_candidate(
        without, constraints, cfg
    )


def test_questions_get_answered_not_echoed():
    cfg = EngineConfig()
    asked = Constraints(topic="music", dialogue_act="yes-no-question")
    answer = cand("i do love that song")
    counter_question = cand("do you like jazz?", acts=("yes-no-question",))
    assert score_candidate(answer, asked, cfg) > score_candidate(
        counter_question, asked, cfg
    )
    # and after a statement, handing the turn back is preferred
    stated = Constraints(topic="music", dialogue_act="statement-opinion")
    assert score_candidate(counter_question, stated, cfg) > score_candidate(
        answer, stated, cfg
    )


def test_length_band_penalty():
    cfg = EngineConfig()
    constraints = Constraints(topic="music")
    comfortable = cand("a sentence that is comfortably inside the band")
    tiny = cand("ok")
    assert score_candidate(comfortable, constraints, cfg) > score_candidate(
        tiny, constraints, cfg
    )


def test_ranking_is_stable_for_ties():
    constraints = Constraints(topic="music")
    first = cand("one", rg="flow:music")
    second = cand("two", rg="flow:music")
    ranked = rank_responses([first, second], constraints)
    assert [c.parts.body for c in ranked] == ["one", "two"]


def test_prior_breaks_score_ties():
    constraints = Constraints(topic="music", dialogue_act="statement-opinion")
    kg = cand("fact one", rg="kg", acts=("yes-no-question",))
    flow = cand("flow line", rg="flow:music", acts=("yes-no-question",))
    ranked = rank_responses([kg, flow], constraints)
    assert ranked[0].rg_name == "flow:music"


def test_uniform_weight_rescaling_keeps_the_winner():
    base = EngineConfig()
    scaled = base.merged(
        {"ranker_weights": {k: v * 7.0 for k, v in base.ranker_weights.items()}}
    )
    constraints = Constraints(topic="music", entity_mentions=("Q1299",))
    pool = [
        cand("plain statement", topic="music"),
        cand("about the beatles", topic="music", annotations=(("beatles", "Q1299"),)),
        cand("off topic", topic="movies", acts=("yes-no-question",)),
    ]
    a = rank_responses(list(pool), constraints, base)
    b = rank_responses(list(pool), constraints, scaled)
    assert [c.parts.body for c in a] == [c.parts.body for c in b]


def test_gated_candidates_never_rank():
    constraints = Constraints(topic="movies", topic_hardness="hard")
    ranked = rank_responses([cand("x", topic="music")], constraints)
    assert ranked == []


def test_score_is_attached_to_ranked_candidates():
    ranked = rank_responses([cand("x")], Constraints(topic="music"))
    assert ranked[0].score is not None


# ----------------------------------------------------------------- fallback


def test_fallback_suggests_a_topic():
    rng = random.Random(3)
    fb = fallback_candidate("board_games", rng)
    assert fb.rg_name == "fallback"
    assert "board games" in fb.parts.body
    assert fb.topic is None


def test_fallback_escalates_to_a_menu():
    rng = random.Random(3)
    fb = fallback_candidate("sports", rng, menu_options=("sports", "tv", "books"))
    assert "sports, tv, or books" in fb.parts.body
    assert fb.dialogue_acts == ("open-question",)


# ----------------------------------------------------------------- assembly


def test_build_response_joins_parts_in_order():
    parts = ResponseParts(body="What do you think?", ground="Right.", opener="I love it.")
    assert build_response(parts) == "Right. I love it. What do you think?"


def test_build_response_prepends_prefix_and_tidies_whitespace():
    parts = ResponseParts(body="  What  about you?")
    out = build_response(parts, prefix="yeah, I find it interesting too. Hhmm, anyways,")
    assert out == "yeah, I find it interesting too. Hhmm, anyways, What about you?"


def test_build_response_handles_body_only():
    assert build_response(ResponseParts(body="Hello.")) == "Hello."
