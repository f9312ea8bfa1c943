"""Flow graphs: loading, advancing, suspension, and the universal
question miniflows."""

import random

import pytest

from parley.flows import (
    FlowError,
    FlowState,
    advance,
    load_all_flows,
    load_flow,
    persona_answer,
    question_bank,
    reactive_prefix,
    universal_miniflow,
)
from parley.nlu import analyze
from parley.types import INTRO_TOPIC, TOPIC_SET


@pytest.fixture(scope="module")
def flows():
    return load_all_flows()


def _write_flow(tmp_path, text):
    path = tmp_path / "test.flow"
    path.write_text(text)
    return path


MINIMAL = """
topic: music
miniflows:
  - name: one
    entry: a
    done: [b]
    nodes:
      a:
        templates:
          - body: "Question one?"
        transitions:
          - default: true
            target: b
      b:
        templates:
          - body: "The end."
        transitions: []
"""


# ---------------------------------------------------------------- loading


def test_every_topic_has_a_flow(flows):
    assert set(flows) == TOPIC_SET | {INTRO_TOPIC}


def test_intro_flow_has_at_least_five_miniflows(flows):
    assert len(flows[INTRO_TOPIC].miniflows) >= 5


def test_minimal_flow_parses(tmp_path):
    graph = load_flow(_write_flow(tmp_path, MINIMAL))
    assert graph.topic == "music"
    assert graph.miniflow("one").entry == "a"


def test_unknown_topic_rejected(tmp_path):
    with pytest.raises(FlowError, match="unknown topic"):
        load_flow(_write_flow(tmp_path, MINIMAL.replace("music", "snorkeling")))


def test_missing_entry_rejected(tmp_path):
    with pytest.raises(FlowError, match="entry"):
        load_flow(_write_flow(tmp_path, MINIMAL.replace("entry: a", "entry: zz")))


def test_dangling_transition_target_rejected(tmp_path):
    with pytest.raises(FlowError, match="does not exist"):
        load_flow(_write_flow(tmp_path, MINIMAL.replace("target: b", "target: zz", 1)))


def test_unknown_act_rejected(tmp_path):
    bad = MINIMAL.replace("- default: true", "- acts: [shouting]\n            default: true")
    with pytest.raises(FlowError, match="shouting"):
        load_flow(_write_flow(tmp_path, bad))


def test_transition_needs_acts_or_default(tmp_path):
    bad = MINIMAL.replace("- default: true\n            target: b", "- target: b")
    with pytest.raises(FlowError, match="acts or default"):
        load_flow(_write_flow(tmp_path, bad))


def test_entity_dictionary_requires_ids(tmp_path):
    bad = "topic: music\nentity_dictionary:\n  guitar: strings\n" + MINIMAL.split("\n", 1)[1]
    with pytest.raises(FlowError, match="non-Q-id"):
        load_flow(_write_flow(tmp_path, bad))


def test_bundled_flows_have_no_unreachable_nodes(flows):
    for graph in flows.values():
        for miniflow in graph.miniflows:
            reachable = {miniflow.entry}
            frontier = [miniflow.entry]
            while frontier:
                node = miniflow.nodes[frontier.pop()]
                for transition in node.transitions:
                    if transition.target not in reachable:
                        reachable.add(transition.target)
                        frontier.append(transition.target)
            assert reachable == set(miniflow.nodes), (
                f"{graph.topic}:{miniflow.name} has unreachable nodes "
                f"{set(miniflow.nodes) - reachable}"
            )


# --------------------------------------------------------------- advancing


def test_fresh_state_emits_entry_templates(flows):
    state = FlowState(topic="music")
    out = advance(flows["music"], state, None, False, random.Random(1))
    assert not out[0].null_flag
    assert out[0].parts.body.endswith("?")
    # Nothing committed yet.
    assert state.active_miniflow is None


def test_commit_moves_the_state(flows):
    state = FlowState(topic="music")
    out = advance(flows["music"], state, None, False, random.Random(1))
    out[0].commit()
    assert state.active_miniflow == "listening"
    assert state.node == "ask_genre"
    assert len(state.used_templates) == 1


def test_keyword_transition_fills_match_slot(flows):
    state = FlowState(topic="animals")
    rng = random.Random(3)
    advance(flows["animals"], state, None, False, rng)[0].commit()
    out = advance(flows["animals"], state, analyze("maybe a hedgehog"), False, rng)
    text = " ".join(out[0].parts.pieces())
    assert "hedgehog" in text
    notes = dict(out[0].entity_annotations)
    assert notes.get("hedgehog") == "Q95000001"


def test_templates_never_repeat_within_a_conversation(flows):
    state = FlowState(topic="tv")
    rng = random.Random(5)
    spoken = []
    for _ in range(20):
        out = advance(flows["tv"], state, analyze("yes i suppose so"), False, rng)
        winner = out[0]
        if winner.null_flag:
            break
        winner.commit()
        spoken.append(winner.parts.body)
    assert spoken
    assert len(spoken) == len(set(spoken))


def test_exhausted_flow_reports_null(flows):
    graph = flows["pirates"]
    state = FlowState(topic="pirates")
    state.used_templates = {
        t.template_id
        for m in graph.miniflows
        for n in m.nodes.values()
        for t in n.templates
    }
    out = advance(graph, state, analyze("sure"), False, random.Random(1))
    assert out[0].null_flag


def test_resumption_prepends_a_connective(flows):
    state = FlowState(topic="music")
    rng = random.Random(11)
    advance(flows["music"], state, None, False, rng)[0].commit()
    state.suspended = True  # the engine lost a turn to another generator
    out = advance(flows["music"], state, analyze("mostly rock i guess"), False, rng)
    opener = out[0].parts.opener or ""
    assert opener.startswith(("Anyway", "Anyways", "So anyway", "But anyway", "Hmm", "So,"))
    out[0].commit()
    assert state.suspended is False


def test_state_topic_must_match_graph(flows):
    with pytest.raises(FlowError):
        advance(flows["music"], FlowState(topic="tv"), None, False, random.Random(1))


# ------------------------------------------------------- universal questions


def test_question_banks_are_complete():
    for kind in ("would_you_rather", "hypothetical"):
        bank = question_bank(kind)
        assert bank, kind
        for entry in bank:
            assert entry["topic"] in TOPIC_SET
            assert entry["question"].endswith("?")


def test_wyr_asks_then_follows_up_with_matched_ack():
    state = FlowState(topic="nature")
    used = set()
    out = universal_miniflow("would_you_rather", "nature", state, used, None)
    assert "mountains, or, at the beach" in out[0].parts.body
    out[0].commit()
    assert ("nature", "would_you_rather") in used
    out = universal_miniflow(
        "would_you_rather", "nature", state, used, analyze("definitely the beach")
    )
    follow = out[0]
    assert follow.parts.ground == "Choosing the beach is a good choice!"
    assert "search for shells" in follow.parts.body
    follow.commit()
    assert state.pending_universal is None


def test_wyr_only_once_per_topic():
    state = FlowState(topic="nature")
    used = {("nature", "would_you_rather")}
    out = universal_miniflow("would_you_rather", "nature", state, used, None)
    assert out[0].null_flag


def test_hypothetical_available_independently_of_wyr():
    state = FlowState(topic="food")
    used = {("food", "would_you_rather")}
    out = universal_miniflow("hypothetical", "food", state, used, None)
    assert "one food to live on" in out[0].parts.body


def test_topic_without_bank_entry_is_null():
    state = FlowState(topic="news")
    out = universal_miniflow("hypothetical", "news", state, set(), None)
    assert out[0].null_flag


# ----------------------------------------------------------------- persona


def test_persona_answers_favorite_song():
    answer = persona_answer("what is your favorite song?")
    assert answer.startswith("I like a lot of different songs")
    assert "Piano Man" in answer


def test_persona_generic_favorite_fallback():
    assert persona_answer("what is your favorite quasar?") is not None


def test_reactive_prefix_for_user_question():
    prefix = reactive_prefix(analyze("what's your favorite song?"))
    assert prefix.endswith("But anyways,")


def test_reactive_prefix_for_appreciation():
    prefix = reactive_prefix(analyze("wow thats interesting"))
    assert prefix == "yeah, I find it interesting too. Hhmm, anyways,"


def test_no_prefix_for_plain_statements():
    assert reactive_prefix(analyze("i had cereal for breakfast")) is None
