"""Log analytics: rating attribution, length stats, experiment splits."""

from __future__ import annotations

import random

import pytest

from parley.analytics import (
    ab_topic_distribution,
    attribute_ratings,
    load_logs,
    turn_length_stats,
)
from parley.logs import CandidateLog, ConversationLog, TurnLog


def turn(i: int, topic: str | None, rg: str, user: str = "ok", response: str = "Sure.") -> TurnLog:
    return TurnLog(
        turn_index=i,
        user_utterance=user,
        acts=("other",),
        intents=(),
        sentiment="neutral",
        topic_signal=("none", None),
        coref=(),
        entities=(),
        action="converse",
        constraint_topic=topic,
        constraint_hardness="soft",
        entity_mentions=(),
        candidates=(),
        winner_rg=rg,
        prefix=None,
        response=response,
        current_topic=topic,
        initiative=None,
    )


def conversation(
    session_id: str,
    topics: list[str],
    rgs: list[str] | None = None,
    rating: int | None = None,
    variant: str | None = None,
) -> ConversationLog:
    rgs = rgs if rgs is not None else [f"flow:{t}" for t in topics]
    turns = [turn(i + 1, t, rg) for i, (t, rg) in enumerate(zip(topics, rgs))]
    return ConversationLog(
        session_id=session_id, seed=1, turns=turns, rating=rating, variant=variant
    )


# -------------------------------------------------------------- attribution


def test_three_turn_boundary_is_inclusive():
    log = conversation("a", ["music"] * 3 + ["tv"] * 2, rating=4)
    report = attribute_ratings([log])
    assert "music" in report["topics"]
    assert "tv" not in report["topics"]
    assert report["topics"]["music"]["mean"] == 4.0
    assert report["topics"]["music"]["histogram"]["4"] == 1


def test_generators_follow_the_same_rule():
    log = conversation(
        "a",
        ["music"] * 5,
        rgs=["flow:music", "kg", "kg", "kg", "flow:music"],
        rating=2,
    )
    report = attribute_ratings([log])
    assert "kg" in report["rgs"]
    assert "flow:music" not in report["rgs"]


def test_unrated_conversations_are_skipped():
    rated = conversation("a", ["books"] * 4, rating=5)
    unrated = conversation("b", ["books"] * 4, rating=None)
    report = attribute_ratings([rated, unrated])
    assert report["topics"]["books"]["count"] == 1


def test_means_and_histograms_across_conversations():
    logs = [
        conversation("a", ["sports"] * 3, rating=5),
        conversation("b", ["sports"] * 6, rating=2),
        conversation("c", ["sports"] * 2, rating=1),  # under the bar
    ]
    summary = attribute_ratings(logs)["topics"]["sports"]
    assert summary["count"] == 2
    assert summary["mean"] == pytest.approx(3.5)
    assert summary["histogram"] == {"1": 0, "2": 1, "3": 0, "4": 0, "5": 1}


def test_attribution_matches_brute_force_on_generated_logs():
    rng = random.Random(404)
    topics = ["music", "tv", "sports", "books", "nature"]
    logs = []
    for i in range(60):
        picked = [rng.choice(topics) for _ in range(rng.randint(1, 12))]
        rating = rng.choice([None, 1, 2, 3, 4, 5])
        logs.append(conversation(f"c{i}", picked, rating=rating))

    report = attribute_ratings(logs)

    for topic in topics:
        expected = []
        for log in logs:
            if log.rating is None:
                continue
            count = sum(1 for t in log.turns if t.current_topic == topic)
            if count >= 3:
                expected.append(log.rating)
        if expected:
            assert report["topics"][topic]["count"] == len(expected)
            assert report["topics"][topic]["mean"] == sum(expected) / len(expected)
        else:
            assert topic not in report["topics"]


# -------------------------------------------------------------- length stats


def test_turn_length_stats_exact_values():
    logs = [
        conversation("a", ["music"] * 2),
        conversation("b", ["tv"] * 4),
        conversation("c", ["books"] * 6),
    ]
    stats = turn_length_stats(logs)
    assert stats["conversations"] == 3
    assert stats["turns"]["mean"] == 4.0
    assert stats["turns"]["median"] == 4.0
    assert stats["turns"]["min"] == 2
    assert stats["turns"]["max"] == 6
    assert stats["user_words_mean"] == 1.0
    assert stats["system_words_mean"] == 1.0


def test_median_of_an_even_count():
    logs = [conversation("a", ["tv"] * n) for n in (1, 2, 3, 10)]
    assert turn_length_stats(logs)["turns"]["median"] == 2.5


def test_stats_on_no_logs():
    assert turn_length_stats([]) == {"conversations": 0}


# ---------------------------------------------------------------- ab splits


def test_ab_distribution_normalizes_per_variant():
    logs = [
        conversation("a", ["music", "music", "tv"], variant="A"),
        conversation("b", ["tv"], variant="A"),
        conversation("c", ["books"] * 5, variant="B"),
        conversation("d", ["sports"] * 3, variant=None),  # not in the experiment
    ]
    dist = ab_topic_distribution(logs)
    assert set(dist) == {"A", "B"}
    assert dist["A"]["music"] == pytest.approx(0.5)
    assert dist["A"]["tv"] == pytest.approx(0.5)
    assert dist["B"] == {"books": 1.0}
    assert sum(dist["A"].values()) == pytest.approx(1.0)


# ------------------------------------------------------------------- loading


def test_load_logs_round_trip(tmp_path):
    logs = [
        conversation("a", ["music"] * 3, rating=4, variant="A"),
        conversation("b", ["tv"] * 2),
    ]
    path = tmp_path / "logs.jsonl"
    path.write_text("\n".join(log.dumps() for log in logs) + "\n")
    loaded = load_logs(path)
    assert [l.dumps() for l in loaded] == [l.dumps() for l in logs]
