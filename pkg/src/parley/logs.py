"""Structured records of what happened each turn.

A turn log captures the whole pipeline for one exchange: what the user
said, how it was analyzed, every candidate considered, and what was
finally spoken.  A conversation log bundles the turns with the seed and
the user snapshot, which together are enough to replay the conversation
bit for bit or to feed the offline analytics.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

SCHEMA_VERSION = 1


class LogError(ValueError):
    pass


@dataclass(frozen=True)
class CandidateLog:
    """One candidate as the ranker saw it.

    ``status`` is "won", "ranked", "gated" (failed a hard constraint),
    or "dropped:<reason>" from the pool filters.
    """

    rg_name: str
    body: str
    ground: str | None
    opener: str | None
    topic: str | None
    dialogue_acts: tuple[str, ...]
    score: float | None
    status: str

    def to_dict(self) -> dict:
        return {
            "rg_name": self.rg_name,
            "body": self.body,
            "ground": self.ground,
            "opener": self.opener,
            "topic": self.topic,
            "dialogue_acts": list(self.dialogue_acts),
            "score": self.score,
            "status": self.status,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "CandidateLog":
        return cls(
            rg_name=raw["rg_name"],
            body=raw["body"],
            ground=raw.get("ground"),
            opener=raw.get("opener"),
            topic=raw.get("topic"),
            dialogue_acts=tuple(raw.get("dialogue_acts", [])),
            score=raw.get("score"),
            status=raw["status"],
        )


@dataclass(frozen=True)
class TurnLog:
    turn_index: int
    user_utterance: str
    acts: tuple[str, ...]
    intents: tuple[str, ...]
    sentiment: str
    topic_signal: tuple[str, str | None]
    coref: tuple[dict, ...]      # pronoun, entity_id, entity_type, antecedent
    entities: tuple[dict, ...]   # linked mentions: surface, entity_id, type, source
    action: str
    constraint_topic: str | None
    constraint_hardness: str
    entity_mentions: tuple[str, ...]
    candidates: tuple[CandidateLog, ...]
    winner_rg: str
    prefix: str | None
    response: str
    current_topic: str | None
    initiative: str | None       # "topic", "menu", or None when the user led
    menu_options: tuple[str, ...] = ()

    def to_dict(self) -> dict:
        return {
            "turn_index": self.turn_index,
            "user_utterance": self.user_utterance,
            "acts": list(self.acts),
            "intents": list(self.intents),
            "sentiment": self.sentiment,
            "topic_signal": {"kind": self.topic_signal[0], "topic": self.topic_signal[1]},
            "coref": [dict(b) for b in self.coref],
            "entities": [dict(e) for e in self.entities],
            "action": self.action,
            "constraint_topic": self.constraint_topic,
            "constraint_hardness": self.constraint_hardness,
            "entity_mentions": list(self.entity_mentions),
            "candidates": [c.to_dict() for c in self.candidates],
            "winner_rg": self.winner_rg,
            "prefix": self.prefix,
            "response": self.response,
            "current_topic": self.current_topic,
            "initiative": self.initiative,
            "menu_options": list(self.menu_options),
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "TurnLog":
        signal = raw.get("topic_signal", {})
        return cls(
            turn_index=raw["turn_index"],
            user_utterance=raw["user_utterance"],
            acts=tuple(raw.get("acts", [])),
            intents=tuple(raw.get("intents", [])),
            sentiment=raw.get("sentiment", "neutral"),
            topic_signal=(signal.get("kind", "none"), signal.get("topic")),
            coref=tuple(raw.get("coref", [])),
            entities=tuple(raw.get("entities", [])),
            action=raw["action"],
            constraint_topic=raw.get("constraint_topic"),
            constraint_hardness=raw.get("constraint_hardness", "soft"),
            entity_mentions=tuple(raw.get("entity_mentions", [])),
            candidates=tuple(
                CandidateLog.from_dict(c) for c in raw.get("candidates", [])
            ),
            winner_rg=raw["winner_rg"],
            prefix=raw.get("prefix"),
            response=raw["response"],
            current_topic=raw.get("current_topic"),
            initiative=raw.get("initiative"),
            menu_options=tuple(raw.get("menu_options", [])),
        )


@dataclass
class ConversationLog:
    session_id: str
    seed: int
    user_id: str | None = None
    user_snapshot: dict | None = None
    variant: str | None = None
    turns: list[TurnLog] = field(default_factory=list)
    rating: int | None = None

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "session_id": self.session_id,
            "seed": self.seed,
            "user_id": self.user_id,
            "user_snapshot": self.user_snapshot,
            "variant": self.variant,
            "turns": [t.to_dict() for t in self.turns],
            "rating": self.rating,
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "ConversationLog":
        if raw.get("schema") != SCHEMA_VERSION:
            raise LogError(f"unsupported log schema {raw.get('schema')!r}")
        return cls(
            session_id=raw["session_id"],
            seed=raw["seed"],
            user_id=raw.get("user_id"),
            user_snapshot=raw.get("user_snapshot"),
            variant=raw.get("variant"),
            turns=[TurnLog.from_dict(t) for t in raw.get("turns", [])],
            rating=raw.get("rating"),
        )

    def dumps(self) -> str:
        """One canonical line; equal conversations serialize equally."""
        return json.dumps(self.to_dict(), sort_keys=True, separators=(",", ":"))

    @classmethod
    def loads(cls, line: str) -> "ConversationLog":
        return cls.from_dict(json.loads(line))
