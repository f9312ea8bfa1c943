"""Per-conversation discourse model.

Tracks which entities have been mentioned (attributed to user or system),
the topics under discussion, and the current turn's pronoun bindings.  The
centered-entity view drives coreference, entity linking, and fact retrieval,
so its ordering rules (recency with refresh-on-re-mention) live here and
nowhere else.

Operations are value-semantic: they return a new state and never mutate the
input, so a state can be handed between threads safely as long as each
session serializes its own turns.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from .types import DISCOURSE_ENTITY_TYPES, is_qid, normalize_surface

SCHEMA_VERSION = 1


class DiscourseError(ValueError):
    pass


@dataclass(frozen=True)
class EntityRecord:
    surface_form: str
    entity_id: str          # "" for unlinked mentions, else a Q-id
    entity_type: str
    source: str             # "user" | "system"
    turn_index: int
    confidence: float = 1.0

    def validate(self) -> None:
        if self.source not in ("user", "system"):
            raise DiscourseError(f"bad source {self.source!r}")
        if self.entity_type not in DISCOURSE_ENTITY_TYPES:
            raise DiscourseError(f"bad entity type {self.entity_type!r}")
        if self.turn_index < 0:
            raise DiscourseError("turn_index must be non-negative")
        if self.entity_id and not is_qid(self.entity_id):
            raise DiscourseError(f"entity_id {self.entity_id!r} is not a Q-id")
        if not 0.0 <= self.confidence <= 1.0:
            raise DiscourseError("confidence outside [0, 1]")
        if self.source == "system" and self.confidence != 1.0:
            # RGs record their own introductions; there is no recognition
            # uncertainty to attach.
            raise DiscourseError("system-sourced records must carry confidence 1.0")

    def dedupe_key(self) -> tuple:
        if self.entity_id:
            return (self.entity_id, self.turn_index, self.source)
        return (normalize_surface(self.surface_form), self.turn_index, self.source)


@dataclass(frozen=True)
class DiscourseState:
    entities: tuple = ()                 # EntityRecord, oldest first
    center_capacity: int = 5
    topic_history: tuple = ()            # (topic, start_turn), start_turns strictly increasing
    pronoun_bindings: dict = field(default_factory=dict)  # pronoun occurrence key -> entity_id

    def record_entity(self, rec: EntityRecord, current_turn: int | None = None) -> "DiscourseState":
        rec.validate()
        if current_turn is not None and rec.turn_index > current_turn:
            raise DiscourseError(
                f"turn_index {rec.turn_index} exceeds current turn {current_turn}"
            )
        key = rec.dedupe_key()
        if any(existing.dedupe_key() == key for existing in self.entities):
            return self
        return replace(self, entities=self.entities + (rec,))

    def centered_entities(self, k: int | None = None) -> list[EntityRecord]:
        """The k most recently mentioned distinct linked entities, most
        recent first.  Unlinked mentions are excluded: downstream consumers
        need knowledge-base ids."""
        if k is None:
            k = self.center_capacity
        if k < 1:
            raise DiscourseError("k must be >= 1")
        latest: dict[str, tuple[int, int, EntityRecord]] = {}
        for pos, rec in enumerate(self.entities):
            if not rec.entity_id:
                continue
            latest[rec.entity_id] = (rec.turn_index, pos, rec)  # refresh on re-mention
        ordered = sorted(latest.values(), key=lambda item: (item[0], item[1]), reverse=True)
        return [rec for _, _, rec in ordered[:k]]

    def entities_by_type(self, entity_type: str) -> list[EntityRecord]:
        matches = [r for r in self.entities if r.entity_type == entity_type]
        matches.reverse()
        return matches

    def note_topic(self, topic: str, turn: int) -> "DiscourseState":
        if self.topic_history:
            last_topic, last_turn = self.topic_history[-1]
            if topic == last_topic:
                return self
            if turn <= last_turn:
                raise DiscourseError(
                    f"topic start {turn} not after previous start {last_turn}"
                )
        return replace(self, topic_history=self.topic_history + ((topic, turn),))

    def current_topic(self) -> str | None:
        return self.topic_history[-1][0] if self.topic_history else None

    def bind_pronoun(self, occurrence: str, entity_id: str) -> "DiscourseState":
        bindings = dict(self.pronoun_bindings)
        bindings[occurrence] = entity_id
        return replace(self, pronoun_bindings=bindings)

    def clear_bindings(self) -> "DiscourseState":
        if not self.pronoun_bindings:
            return self
        return replace(self, pronoun_bindings={})

    # -- session-state record serialization (line-delimited, schema 1) -----

    def to_records(self) -> list[dict]:
        records: list[dict] = [
            {
                "schema": SCHEMA_VERSION,
                "kind": "discourse_meta",
                "center_capacity": self.center_capacity,
                "topic_history": [list(item) for item in self.topic_history],
                "pronoun_bindings": dict(self.pronoun_bindings),
            }
        ]
        for rec in self.entities:
            records.append(
                {
                    "schema": SCHEMA_VERSION,
                    "kind": "entity",
                    "surface_form": rec.surface_form,
                    "entity_id": rec.entity_id,
                    "entity_type": rec.entity_type,
                    "source": rec.source,
                    "turn_index": rec.turn_index,
                    "confidence": rec.confidence,
                }
            )
        return records

    @classmethod
    def from_records(cls, records: list[dict]) -> "DiscourseState":
        state = cls()
        entities: list[EntityRecord] = []
        for record in records:
            if record.get("schema", 1) > SCHEMA_VERSION:
                raise DiscourseError(
                    f"unsupported discourse schema {record.get('schema')}"
                )
            kind = record.get("kind")
            if kind == "discourse_meta":
                state = replace(
                    state,
                    center_capacity=record["center_capacity"],
                    topic_history=tuple(tuple(item) for item in record["topic_history"]),
                    pronoun_bindings=dict(record["pronoun_bindings"]),
                )
            elif kind == "entity":
                entities.append(
                    EntityRecord(
                        surface_form=record["surface_form"],
                        entity_id=record["entity_id"],
                        entity_type=record["entity_type"],
                        source=record["source"],
                        turn_index=record["turn_index"],
                        confidence=record["confidence"],
                    )
                )
            else:
                raise DiscourseError(f"unknown record kind {kind!r}")
        return replace(state, entities=tuple(entities))
