"""The contract between the dialogue manager and response generators.

The DM decides a system action, derives constraints describing the next
system utterance, and hands both to whichever generators are registered
for the (action, topic) pair.  Generators answer with multi-part
candidates; a candidate that cannot meet the contract is a null
response rather than filler text.  Winning candidates may carry a
commit callback so that per-conversation bookkeeping (used templates,
spent knowledge-graph relations) only advances for the response that
was actually said.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Callable

from .types import DIALOGUE_ACT_SET, INTRO_TOPIC, TOPIC_SET, is_qid

ACTION_KINDS = (
    "perform_repeat",
    "conv_closing",
    "advise_usage",
    "greet",
    "repeat_request",
    "wait_prompting",
    "red_response",
    "topic_change",
    "list_options",
    "converse",
)
ACTION_KIND_SET = frozenset(ACTION_KINDS)

# Actions the DM resolves with functional templates; topical RGs are not
# consulted for them.
FUNCTIONAL_ACTIONS = frozenset(
    {"perform_repeat", "conv_closing", "advise_usage", "repeat_request",
     "wait_prompting", "red_response", "list_options"}
)

HARDNESS = ("hard", "soft")


class ContractError(ValueError):
    pass


@dataclass(frozen=True)
class SystemAction:
    """What kind of turn the system is about to take; one kind per turn."""

    kind: str

    def __post_init__(self) -> None:
        if self.kind not in ACTION_KIND_SET:
            raise ContractError(f"unknown action kind {self.kind!r}")


@dataclass(frozen=True)
class Constraints:
    """Conditions the next system utterance must (hard) or should (soft)
    satisfy."""

    topic: str | None = None
    entity_mentions: tuple[str, ...] = ()
    dialogue_act: str | None = None
    new_topic_flag: bool = False
    topic_hardness: str = "soft"
    entity_hardness: str = "soft"

    def __post_init__(self) -> None:
        if self.topic is not None and self.topic not in TOPIC_SET | {INTRO_TOPIC}:
            raise ContractError(f"unknown topic {self.topic!r}")
        if self.dialogue_act is not None and self.dialogue_act not in DIALOGUE_ACT_SET:
            raise ContractError(f"unknown dialogue act {self.dialogue_act!r}")
        for eid in self.entity_mentions:
            if not is_qid(eid):
                raise ContractError(f"entity mention {eid!r} is not a Q-id")
        if self.topic_hardness not in HARDNESS or self.entity_hardness not in HARDNESS:
            raise ContractError("hardness must be 'hard' or 'soft'")
        if self.topic_hardness == "hard" and self.topic is None:
            raise ContractError("hard topic constraint needs a topic")


@dataclass(frozen=True)
class ResponseParts:
    """The labeled segments of a system response.

    The ground is strictly backward looking, the opener eases the
    transition, and the body carries the new content that drives the
    conversation forward.  Only the body is mandatory.
    """

    body: str
    ground: str | None = None
    opener: str | None = None

    def pieces(self) -> tuple[str, ...]:
        return tuple(p for p in (self.ground, self.opener, self.body) if p)


@dataclass(frozen=True)
class ResponseCandidate:
    rg_name: str
    parts: ResponseParts | None
    topic: str | None
    dialogue_acts: tuple[str, ...] = ()
    entity_annotations: tuple[tuple[str, str], ...] = ()  # (surface, entity_id)
    score: float = 0.0
    null_flag: bool = False
    # Applied by the engine only when this candidate wins the turn.
    commit: Callable[[], None] | None = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.null_flag:
            if self.parts is not None:
                raise ContractError("null candidates carry no parts")
            return
        if self.parts is None or not self.parts.body.strip():
            raise ContractError(f"{self.rg_name}: body required unless null_flag")
        for act in self.dialogue_acts:
            if act not in DIALOGUE_ACT_SET:
                raise ContractError(f"unknown dialogue act {act!r}")
        for surface, eid in self.entity_annotations:
            if eid and not is_qid(eid):
                raise ContractError(f"annotation id {eid!r} is not a Q-id")
            if not surface:
                raise ContractError("annotation surface must be non-empty")

    def with_score(self, score: float) -> "ResponseCandidate":
        return replace(self, score=score)


NULL_CANDIDATE_PARTS = None


def null_candidate(rg_name: str, topic: str | None = None) -> ResponseCandidate:
    return ResponseCandidate(
        rg_name=rg_name, parts=None, topic=topic, null_flag=True
    )


@dataclass
class TopicState:
    """Topical bookkeeping for one conversation."""

    current_topic: str | None = None
    turn_distribution: dict[str, int] = field(default_factory=dict)
    history: list[str] = field(default_factory=list)
    user_entities: list[str] = field(default_factory=list)
    system_entities: list[str] = field(default_factory=list)
    disinterested: set[str] = field(default_factory=set)

    def enter_topic(self, topic: str) -> None:
        if topic != self.current_topic:
            if not self.history or self.history[-1] != topic:
                self.history.append(topic)
            self.current_topic = topic

    def count_turn(self) -> None:
        topic = self.current_topic or INTRO_TOPIC
        self.turn_distribution[topic] = self.turn_distribution.get(topic, 0) + 1

    def note_user_entity(self, entity_id: str) -> None:
        if entity_id and entity_id not in self.user_entities:
            self.user_entities.append(entity_id)

    def note_system_entity(self, entity_id: str) -> None:
        if entity_id and entity_id not in self.system_entities:
            self.system_entities.append(entity_id)

    def visited(self) -> set[str]:
        return set(self.history)


class RgRegistry:
    """Lookup from (action kind, topic) to the generators able to serve
    it, plus the generators consulted on every turn."""

    def __init__(self) -> None:
        self._entries: dict[tuple[str, str | None], list] = {}
        self._always_run: list = []

    def register(
        self,
        rg,
        actions: tuple[str, ...],
        topics: tuple[str | None, ...] | None = None,
    ) -> None:
        """Register a generator for the given action kinds; with no
        topics it answers the action regardless of topic."""
        for action in actions:
            if action not in ACTION_KIND_SET:
                raise ContractError(f"unknown action kind {action!r}")
            for topic in topics if topics is not None else (None,):
                self._entries.setdefault((action, topic), []).append(rg)

    def register_always(self, rg) -> None:
        self._always_run.append(rg)

    @property
    def always_run(self) -> tuple:
        return tuple(self._always_run)

    def lookup(self, action: SystemAction, topic: str | None) -> list:
        """Registered handlers for the pair plus the always-run set,
        deduplicated, registration order preserved."""
        handles: list = []
        for rg in self._entries.get((action.kind, topic), ()):
            if rg not in handles:
                handles.append(rg)
        for rg in self._entries.get((action.kind, None), ()):
            if rg not in handles:
                handles.append(rg)
        for rg in self._always_run:
            if rg not in handles:
                handles.append(rg)
        return handles

    def topics_covered(self, action_kind: str) -> set[str]:
        return {
            topic for (kind, topic) in self._entries if kind == action_kind and topic
        }
