"""The persistent user model and its store."""

from __future__ import annotations

import json

import pytest

from parley.config import EngineConfig
from parley.nlu import analyze
from parley.types import TOPICS
from parley.users import (
    UserModelError,
    UserRecord,
    UserStore,
    capture_attributes,
    capture_name,
    personalized_topics,
    signals_disinterest,
    update_user,
)


# ------------------------------------------------------------------- capture


def test_name_capture_variants():
    assert capture_name("my name is alice") == "Alice"
    assert capture_name("you can call me bob") == "Bob"
    assert capture_name("im sam") == "Sam"
    assert capture_name("i am priya") == "Priya"


def test_name_capture_rejects_noise():
    assert capture_name("im really happy today") is None
    assert capture_name("my name is the") is None
    assert capture_name("whats your name") is None


def test_attribute_capture():
    found = capture_attributes("my dog is named biscuit and hes very good")
    assert found["pet_name"] == "biscuit"
    assert capture_attributes("my favorite color is teal")["favorite_color"] == "teal"
    assert capture_attributes("im from portland, been here ages")["hometown"] == "portland"


def test_disinterest_markers():
    assert signals_disinterest("this is boring")
    assert signals_disinterest("can we try something else")
    assert signals_disinterest("im not interested in that")
    assert not signals_disinterest("thats so interesting")


# ------------------------------------------------------------------- updates


def test_positive_sentiment_bumps_affinity():
    record = UserRecord(user_id="u")
    update_user(record, analyze("i love this so much"), "music")
    assert record.affinities["music"] == pytest.approx(0.2)
    update_user(record, analyze("this is wonderful"), "music")
    assert record.affinities["music"] == pytest.approx(0.4)


def test_affinity_caps_at_one():
    record = UserRecord(user_id="u", affinities={"music": 0.95})
    update_user(record, analyze("i love it"), "music")
    assert record.affinities["music"] == 1.0


def test_disinterest_drops_affinity_with_a_floor():
    record = UserRecord(user_id="u", affinities={"sports": 0.2})
    update_user(record, analyze("this is boring"), "sports")
    assert record.affinities["sports"] == 0.0


def test_update_ignores_non_topics():
    record = UserRecord(user_id="u")
    update_user(record, analyze("i love this"), None)
    update_user(record, analyze("i love this"), "intro")
    assert record.affinities == {}


def test_name_is_captured_once():
    record = UserRecord(user_id="u")
    update_user(record, analyze("my name is alice"), None)
    update_user(record, analyze("my name is bob"), None)
    assert record.name == "Alice"


def test_attributes_keep_first_value():
    record = UserRecord(user_id="u")
    update_user(record, analyze("my cat is called mochi"), None)
    update_user(record, analyze("my cat is called luna"), None)
    assert record.attributes["pet_name"] == "mochi"


def test_custom_bump_sizes_from_config():
    cfg = EngineConfig().merged({"interest_bump": 0.5, "disinterest_drop": 0.1})
    record = UserRecord(user_id="u")
    update_user(record, analyze("i love this"), "books", cfg)
    assert record.affinities["books"] == pytest.approx(0.5)


# ----------------------------------------------------------- personalization


def test_personalized_topics_orders_by_affinity():
    record = UserRecord(user_id="u", affinities={"books": 0.9, "tv": 0.4})
    order = personalized_topics(record)
    assert order[0] == "books"
    assert order[1] == "tv"
    assert set(order) == set(TOPICS)


def test_personalized_topics_tiebreak_is_the_default_order():
    record = UserRecord(user_id="u", affinities={"movies": 0.5, "sports": 0.5})
    order = personalized_topics(record)
    # sports precedes movies in the default ordering
    assert order.index("sports") < order.index("movies")


def test_personalized_topics_without_a_record():
    assert personalized_topics(None) == TOPICS
    assert personalized_topics(UserRecord(user_id="u")) == TOPICS


# ----------------------------------------------------------------- the store


def test_store_round_trip_is_byte_identical(tmp_path):
    path = tmp_path / "users.json"
    store = UserStore(path)
    alice = store.get("alice")
    alice.name = "Alice"
    alice.affinities["music"] = 0.4
    alice.attributes["pet_name"] = "biscuit"
    alice.conversations = 2
    alice.topics_discussed.append("music")
    store.get("bob")
    store.save()
    first = path.read_bytes()

    again = UserStore(path)
    assert again.get("alice").name == "Alice"
    assert again.get("alice").affinities == {"music": 0.4}
    again.save()
    assert path.read_bytes() == first


def test_store_creates_records_on_demand(tmp_path):
    store = UserStore(tmp_path / "users.json")
    assert not store.known("zoe")
    record = store.get("zoe")
    assert record.user_id == "zoe"
    assert store.known("zoe")


def test_store_rejects_unknown_schema(tmp_path):
    path = tmp_path / "users.json"
    path.write_text(json.dumps({"schema": 999, "users": []}))
    with pytest.raises(UserModelError):
        UserStore(path)


def test_record_round_trip():
    record = UserRecord(
        user_id="u", name="Sam", affinities={"tv": 0.6},
        attributes={"hometown": "austin"}, conversations=3,
        topics_discussed=["tv", "books"],
    )
    assert UserRecord.from_dict(record.to_dict()) == record
