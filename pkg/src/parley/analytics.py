"""Offline analysis over conversation logs.

Ratings are attributed conservatively: a conversation's rating counts
toward a topic or generator only when it held at least three turns of
that conversation, enough involvement to plausibly have shaped the
score.  Everything here is pure arithmetic over logs, so results are
reproducible from the log files alone.
"""

from __future__ import annotations

import json
from collections import Counter
from pathlib import Path
from typing import Iterable

from .logs import ConversationLog

MIN_ATTRIBUTION_TURNS = 3

RATING_VALUES = (1, 2, 3, 4, 5)


def load_logs(path: str | Path) -> list[ConversationLog]:
    """Read a JSONL file of conversation logs."""
    logs = []
    with open(path, encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if line:
                logs.append(ConversationLog.loads(line))
    return logs


def _summary(samples: list[int]) -> dict:
    histogram = {str(v): 0 for v in RATING_VALUES}
    for rating in samples:
        histogram[str(rating)] += 1
    return {
        "count": len(samples),
        "mean": sum(samples) / len(samples),
        "histogram": histogram,
    }


def attribute_ratings(logs: Iterable[ConversationLog]) -> dict:
    """Mean rating and 1-5 histogram per topic and per generator.

    Only rated conversations contribute, and only to the topics and
    generators that carried at least ``MIN_ATTRIBUTION_TURNS`` turns of
    that conversation.
    """
    topic_samples: dict[str, list[int]] = {}
    rg_samples: dict[str, list[int]] = {}
    for log in logs:
        if log.rating is None:
            continue
        topic_turns = Counter(
            turn.current_topic for turn in log.turns if turn.current_topic
        )
        rg_turns = Counter(turn.winner_rg for turn in log.turns)
        for topic, count in topic_turns.items():
            if count >= MIN_ATTRIBUTION_TURNS:
                topic_samples.setdefault(topic, []).append(log.rating)
        for rg, count in rg_turns.items():
            if count >= MIN_ATTRIBUTION_TURNS:
                rg_samples.setdefault(rg, []).append(log.rating)
    return {
        "topics": {t: _summary(s) for t, s in sorted(topic_samples.items())},
        "rgs": {r: _summary(s) for r, s in sorted(rg_samples.items())},
    }


def _word_count(text: str) -> int:
    return len(text.split())


def turn_length_stats(logs: Iterable[ConversationLog]) -> dict:
    """Turns per conversation and words per side of each exchange."""
    turn_counts: list[int] = []
    user_words: list[int] = []
    system_words: list[int] = []
    for log in logs:
        turn_counts.append(len(log.turns))
        for turn in log.turns:
            user_words.append(_word_count(turn.user_utterance))
            system_words.append(_word_count(turn.response))
    if not turn_counts:
        return {"conversations": 0}
    ordered = sorted(turn_counts)
    middle = len(ordered) // 2
    if len(ordered) % 2:
        median = float(ordered[middle])
    else:
        median = (ordered[middle - 1] + ordered[middle]) / 2
    return {
        "conversations": len(turn_counts),
        "turns": {
            "mean": sum(turn_counts) / len(turn_counts),
            "median": median,
            "min": min(turn_counts),
            "max": max(turn_counts),
        },
        "user_words_mean": sum(user_words) / len(user_words) if user_words else 0.0,
        "system_words_mean": (
            sum(system_words) / len(system_words) if system_words else 0.0
        ),
    }


def ab_topic_distribution(logs: Iterable[ConversationLog]) -> dict:
    """Per-variant share of turns spent on each topic.

    Conversations without a variant tag are not part of any experiment
    and are left out.  Shares within a variant sum to one.
    """
    per_variant: dict[str, Counter] = {}
    for log in logs:
        if log.variant is None:
            continue
        counts = per_variant.setdefault(log.variant, Counter())
        for turn in log.turns:
            if turn.current_topic:
                counts[turn.current_topic] += 1
    out: dict[str, dict[str, float]] = {}
    for variant, counts in sorted(per_variant.items()):
        total = sum(counts.values())
        if total == 0:
            out[variant] = {}
            continue
        out[variant] = {
            topic: counts[topic] / total for topic in sorted(counts)
        }
    return out


def render_report(report: dict) -> str:
    """Readable text for the CLI; data stays JSON-friendly."""
    return json.dumps(report, indent=2, sort_keys=True)
