"""Dialogue management: pick an action, constrain it, rank what the
generators offer, and assemble the final utterance.

The manager never generates content itself.  It decides *what kind* of
turn to take, expresses that as constraints, and arbitrates between the
candidates that come back.  The one exception is the fallback prompt,
used when every generator returns null or everything is filtered out.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass

from .config import EngineConfig
from .contracts import Constraints, ResponseCandidate, ResponseParts, SystemAction
from .filters import contains_profanity
from .nlu import NluResult, TopicSignal, is_usage_question, wants_topic_options
from .rgs import functional_templates, render_menu
from .types import INTRO_TOPIC, QUESTION_ACTS, TOPICS


@dataclass(frozen=True)
class DmView:
    """The slice of session state the action policy reads."""

    turn_index: int
    current_topic: str | None
    signal_less_streak: int = 0
    visited_topics: frozenset[str] = frozenset()
    disinterested_topics: frozenset[str] = frozenset()
    initiated_changes: int = 0
    system_initiative_streak: int = 0
    fallback_streak: int = 0
    affinity_order: tuple[str, ...] = ()


def decide_action(
    nlu: NluResult,
    signal: TopicSignal,
    view: DmView,
    config: EngineConfig | None = None,
) -> SystemAction:
    """Map the analyzed turn to one of the ten action kinds.

    Safety and housekeeping intents outrank everything; topic movement
    comes next; converse is the default.
    """
    cfg = config or EngineConfig()
    intents = nlu.intents
    if "stop" in intents:
        return SystemAction("conv_closing")
    if "red_question" in intents:
        return SystemAction("red_response")
    if "repeat_request_by_user" in intents:
        return SystemAction("perform_repeat")
    if "wait" in intents:
        return SystemAction("wait_prompting")
    if not nlu.utterance.strip():
        return SystemAction("repeat_request")
    if view.turn_index <= 1:
        return SystemAction("greet")
    if is_usage_question(nlu.utterance):
        return SystemAction("advise_usage")
    if wants_topic_options(nlu.utterance):
        return SystemAction("list_options")
    if signal.topic is not None and signal.topic != view.current_topic:
        return SystemAction("topic_change")
    if view.current_topic is None or view.current_topic == INTRO_TOPIC:
        if view.signal_less_streak >= cfg.lost_topic_turns:
            return SystemAction("topic_change")
        return SystemAction("converse")
    if view.signal_less_streak >= cfg.lost_topic_turns:
        return SystemAction("topic_change")
    return SystemAction("converse")


def fresh_topics(view: DmView) -> tuple[str, ...]:
    """Topics worth proposing, best first: unvisited and not disliked,
    in the user's affinity order.  Falls back to merely not-disliked,
    then to everything, so the list is never empty."""
    order = list(view.affinity_order) or list(TOPICS)
    fresh = [
        t for t in order
        if t not in view.visited_topics and t not in view.disinterested_topics
    ]
    if not fresh:
        fresh = [t for t in order if t not in view.disinterested_topics] or order
    return tuple(fresh)


def choose_initiative(
    view: DmView, config: EngineConfig | None = None
) -> tuple[str, tuple[str, ...]]:
    """What the system proposes when it takes initiative: either
    ("topic", (topic,)) or ("menu", options) when it is time to hand
    the choice back to the user."""
    cfg = config or EngineConfig()
    fresh = fresh_topics(view)
    wants_menu = (
        view.system_initiative_streak >= cfg.max_system_initiatives
        or view.fallback_streak >= 2
        or (view.initiated_changes > 0 and view.initiated_changes % cfg.menu_cadence == 0)
    )
    if wants_menu:
        return "menu", tuple(fresh[:3])
    return "topic", (fresh[0],)


def generate_constraints(
    action: SystemAction,
    nlu: NluResult,
    signal: TopicSignal,
    view: DmView,
    linked_ids: tuple[str, ...] = (),
    target_topic: str | None = None,
) -> Constraints:
    """Express the chosen action as constraints for the generators."""
    # the last sentence is the one a reply has to answer
    act = nlu.acts[-1] if nlu.acts else None
    if action.kind == "greet":
        return Constraints(
            topic=INTRO_TOPIC,
            entity_mentions=linked_ids,
            dialogue_act=act,
            new_topic_flag=True,
        )
    if action.kind == "topic_change":
        topic = target_topic if target_topic is not None else signal.topic
        return Constraints(
            topic=topic,
            entity_mentions=linked_ids,
            dialogue_act=act,
            new_topic_flag=True,
            topic_hardness="hard",
        )
    return Constraints(
        topic=view.current_topic,
        entity_mentions=linked_ids,
        dialogue_act=act,
    )


# ---------------------------------------------------------------------------
# pooling and ranking


def build_response_pool(
    candidates: list[ResponseCandidate], spoken_bodies: set[str]
) -> tuple[list[ResponseCandidate], list[tuple[ResponseCandidate, str]]]:
    """Filter the raw candidates; returns (kept, dropped-with-reason).

    Nulls go silently; profane text is dropped outright (the innocent
    words on the mask list survive the check, so "classic rock" is
    fine); a body the system already said in this conversation is
    dropped.
    """
    kept: list[ResponseCandidate] = []
    dropped: list[tuple[ResponseCandidate, str]] = []
    for cand in candidates:
        if cand.null_flag:
            dropped.append((cand, "null"))
            continue
        if contains_profanity(" ".join(cand.parts.pieces())):
            dropped.append((cand, "profanity"))
            continue
        if cand.parts.body in spoken_bodies:
            dropped.append((cand, "repetition"))
            continue
        kept.append(cand)
    return kept, dropped


def _base_name(rg_name: str) -> str:
    return rg_name.split(":", 1)[0]


def passes_hard_gate(cand: ResponseCandidate, constraints: Constraints) -> bool:
    if constraints.topic_hardness == "hard":
        if cand.topic != constraints.topic:
            return False
    if constraints.entity_hardness == "hard":
        ids = {eid for _, eid in cand.entity_annotations if eid}
        if not ids & set(constraints.entity_mentions):
            return False
    return True


def score_candidate(
    cand: ResponseCandidate,
    constraints: Constraints,
    config: EngineConfig,
) -> float:
    """Weighted soft features; hard constraints are gated elsewhere."""
    weights = config.ranker_weights
    if cand.topic is None:
        topic_feat = 0.5
    else:
        topic_feat = 1.0 if cand.topic == constraints.topic else 0.0
    ids = {eid for _, eid in cand.entity_annotations if eid}
    entity_feat = 1.0 if ids & set(constraints.entity_mentions) else 0.0
    asks = any(act in QUESTION_ACTS for act in cand.dialogue_acts)
    if constraints.dialogue_act in QUESTION_ACTS:
        act_feat = 1.0 if not asks else 0.0  # answer first, don't dodge
    else:
        act_feat = 1.0 if asks else 0.5  # keep handing the turn back
    prior = config.rg_priors.get(_base_name(cand.rg_name), 0.0)
    low, high = config.length_band
    length = len(cand.parts.body)
    length_feat = 0.0 if low <= length <= high else 1.0
    return (
        weights["topic"] * topic_feat
        + weights["entity"] * entity_feat
        + weights["act"] * act_feat
        + weights["prior"] * prior
        + weights["length"] * length_feat
    )


def rank_responses(
    pool: list[ResponseCandidate],
    constraints: Constraints,
    config: EngineConfig | None = None,
) -> list[ResponseCandidate]:
    """Hard-gate then score; highest first, ties broken by generator
    prior and then submission order (a stable argmax, so uniformly
    rescaling the weights cannot change the winner)."""
    cfg = config or EngineConfig()
    gated = [c for c in pool if passes_hard_gate(c, constraints)]
    scored = [c.with_score(score_candidate(c, constraints, cfg)) for c in gated]
    indexed = list(enumerate(scored))
    indexed.sort(
        key=lambda pair: (
            -pair[1].score,
            -cfg.rg_priors.get(_base_name(pair[1].rg_name), 0.0),
            pair[0],
        )
    )
    return [cand for _, cand in indexed]


def fallback_candidate(
    suggestion: str,
    rng: random.Random,
    menu_options: tuple[str, ...] = (),
) -> ResponseCandidate:
    """The last-resort prompt: suggest a topic, or show a menu once
    fallbacks start stacking up."""
    templates = functional_templates()
    if menu_options:
        body = rng.choice(templates["menu"]).format(options=render_menu(menu_options))
        acts: tuple[str, ...] = ("open-question",)
    else:
        body = rng.choice(templates["fallback"]).format(
            topic=suggestion.replace("_", " ")
        )
        acts = ("yes-no-question",)
    return ResponseCandidate(
        rg_name="fallback",
        parts=ResponseParts(body=body),
        topic=None,
        dialogue_acts=acts,
    )


# ---------------------------------------------------------------------------
# final assembly

_SPACE_RE = re.compile(r"\s+")


def build_response(parts: ResponseParts, prefix: str | None = None) -> str:
    """Join prefix, ground, opener, and body into the spoken line."""
    pieces = list(parts.pieces())
    if prefix:
        pieces.insert(0, prefix.strip())
    text = _SPACE_RE.sub(" ", " ".join(p.strip() for p in pieces if p.strip()))
    return text.strip()
