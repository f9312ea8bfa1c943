"""Fun-fact corpus and the centering fact generator."""

import pytest

from parley.discourse import DiscourseState, EntityRecord
from parley.facts import (
    FactError,
    FactIndex,
    FunFact,
    centering_respond,
    default_fact_index,
    load_fact_index,
)
from parley.types import TOPIC_SET


@pytest.fixture(scope="module")
def index():
    return default_fact_index()


def test_fact_shape_validated():
    with pytest.raises(FactError):
        FunFact(1, "", "animals", frozenset({"x"}))
    with pytest.raises(FactError):
        FunFact(1, "something", "animals", frozenset())


def test_bundled_corpus_covers_every_topic(index):
    assert {fact.topic for fact in index} == TOPIC_SET
    assert len(index) > 100


def test_bundled_fact_ids_unique(index):
    ids = [fact.fact_id for fact in index]
    assert len(ids) == len(set(ids))


def test_load_rejects_malformed_rows(tmp_path):
    path = tmp_path / "facts.jsonl"
    path.write_text('{"fact_id": 1, "topic": "animals", "keys": [], "text": "x"}\n')
    with pytest.raises(FactError, match="facts.jsonl:1"):
        load_fact_index(path)


def test_word_keys_are_normalized(tmp_path):
    path = tmp_path / "facts.jsonl"
    path.write_text(
        '{"fact_id": 1, "topic": "music", "keys": ["The Beatles!"], "text": "x"}\n'
    )
    index = load_fact_index(path)
    assert index.by_key("the beatles")


def _center(surface, eid, turn=1):
    return EntityRecord(surface, eid, "other", "system", turn)


def test_centered_entity_surface_pulls_matching_fact(index):
    d = DiscourseState().record_entity(_center("hedgehogs", "Q95000001"))
    out = centering_respond(d, set(), index, topic="animals")
    bodies = [c.parts.body for c in out if not c.null_flag]
    assert any("oldest mammals" in b for b in bodies)
    top = out[0]
    assert top.entity_annotations == (("hedgehogs", "Q95000001"),)
    assert top.parts.opener and "hedgehogs" in top.parts.opener


def test_entity_id_key_beats_topic_fallback(index):
    d = DiscourseState().record_entity(
        EntityRecord("the beatles", "Q1299", "band", "user", 1)
    )
    out = centering_respond(d, set(), index, topic="music")
    assert "love" in out[0].parts.body


def test_used_facts_never_repeat(index):
    d = DiscourseState().record_entity(_center("hedgehogs", "Q95000001"))
    used = set()
    seen = []
    for _ in range(10):
        out = centering_respond(d, used, index, topic="animals")
        winner = out[0]
        if winner.null_flag:
            break
        winner.commit()
        seen.append(winner.parts.body)
    assert len(seen) == len(set(seen))
    assert len(seen) >= 2


def test_topic_fallback_when_no_entity_matches(index):
    out = centering_respond(DiscourseState(), set(), index, topic="pirates")
    assert not out[0].null_flag
    assert out[0].parts.opener == "Here's something interesting."


def test_null_when_topic_exhausted(index):
    used = {fact.fact_id for fact in index if fact.topic == "pirates"}
    out = centering_respond(DiscourseState(), used, index, topic="pirates")
    assert len(out) == 1 and out[0].null_flag


def test_no_topic_and_no_centers_is_null(index):
    out = centering_respond(DiscourseState(), set(), index, topic=None)
    assert out[0].null_flag
