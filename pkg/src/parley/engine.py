"""The conversation engine: one object per deployment, one session per
conversation.

A turn runs a fixed pipeline: analyze the utterance, resolve pronouns
against the discourse model, link entity mentions, update the user
model, pick an action, constrain it, collect candidates from the
generators, filter and rank them, commit the winner's state changes,
and assemble the spoken line.  Every step lands in the turn log, which
carries enough detail to replay the conversation bit for bit and to
drive the live inspector.

All randomness flows through one generator seeded per session, so the
same seed, user snapshot, and utterances always reproduce the same
conversation.
"""

from __future__ import annotations

import random
from functools import lru_cache

from .config import EngineConfig
from .contracts import ResponseCandidate, SystemAction, TopicState
from .coref import resolve, scan_current_entities
from .discourse import DiscourseState, EntityRecord
from .dm import (
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
)
from .flows import NAME_MINIFLOW, FlowState, reactive_prefix
from .gazetteer import Gazetteer, default_gazetteer
from .kg import KgUsage
from .linking import LinkContext, link_utterance
from .logs import CandidateLog, ConversationLog, TurnLog
from .nlu import analyze, detect_topic
from .rgs import FlowRg, TurnContext, build_registry, functional_templates
from .types import INTRO_TOPIC, TOPIC_SET, TYPE_TO_TOPIC, normalize_surface
from .users import UserRecord, personalized_topics, signals_disinterest, update_user


class EngineError(RuntimeError):
    pass


@lru_cache(maxsize=None)
def _types_for_topic(topic: str | None) -> frozenset[str]:
    if topic is None:
        return frozenset()
    return frozenset(t for t, tp in TYPE_TO_TOPIC.items() if tp == topic)


def _cand_log(cand: ResponseCandidate, score: float | None, status: str) -> CandidateLog:
    parts = cand.parts
    return CandidateLog(
        rg_name=cand.rg_name,
        body=parts.body if parts is not None else "",
        ground=parts.ground if parts is not None else None,
        opener=parts.opener if parts is not None else None,
        topic=cand.topic,
        dialogue_acts=cand.dialogue_acts,
        score=score,
        status=status,
    )


class Engine:
    """Shared, immutable resources: configuration, gazetteer, and the
    generator registry.  Cheap to hold, safe to share across sessions."""

    def __init__(self, config: EngineConfig | None = None) -> None:
        self.config = config or EngineConfig()
        self.gazetteer: Gazetteer = default_gazetteer()
        self.registry = build_registry()

    def new_session(
        self,
        seed: int,
        user: UserRecord | None = None,
        session_id: str | None = None,
        variant: str | None = None,
    ) -> "Session":
        return Session(
            self, seed, user=user, session_id=session_id, variant=variant
        )


class Session:
    """All mutable state for one conversation."""

    def __init__(
        self,
        engine: Engine,
        seed: int,
        user: UserRecord | None = None,
        session_id: str | None = None,
        variant: str | None = None,
    ) -> None:
        self.engine = engine
        self.config = engine.config
        self.seed = seed
        self.session_id = session_id if session_id is not None else f"s{seed}"
        self.variant = variant
        self.user = user
        # frozen before any turn touches the record, so a log replays
        # against the same starting point
        self.user_snapshot = user.to_dict() if user is not None else None
        self.rng = random.Random(seed)
        self.discourse = DiscourseState(center_capacity=engine.config.center_capacity)
        self.topic_state = TopicState()
        self.flow_states: dict[str, FlowState] = {}
        self.used_universal: set[tuple[str, str]] = set()
        self.kg_usage = KgUsage()
        self.used_facts: set[int] = set()
        self.spoken_bodies: set[str] = set()
        self.turn_index = 0
        self.last_response: str | None = None
        self.signal_less_streak = 0
        self.fallback_streak = 0
        self.system_initiative_streak = 0
        self.initiated_changes = 0
        self.turns: list[TurnLog] = []
        self.rating: int | None = None
        self.closed = False
        if user is not None and user.name:
            # we know who this is; don't ask again
            state = FlowState(topic=INTRO_TOPIC)
            state.visited_miniflows.add(NAME_MINIFLOW)
            self.flow_states[INTRO_TOPIC] = state

    # -- the turn pipeline --------------------------------------------------

    def take_turn(self, utterance: str) -> TurnLog:
        if self.closed:
            raise EngineError("session is closed")
        self.turn_index += 1
        turn = self.turn_index
        cfg = self.config
        nlu_result = analyze(utterance)

        # pronouns first, while the previous turns are still the most
        # recent thing in the discourse model
        current = scan_current_entities(utterance, self.engine.gazetteer, turn)
        bindings = resolve(
            utterance, self.discourse, turn, current_turn_entities=current, config=cfg
        )
        for b in bindings:
            self.discourse = self.discourse.bind_pronoun(
                f"{turn}:{b.token_index}:{b.pronoun}", b.entity_id
            )

        current_topic = self.topic_state.current_topic
        context = LinkContext(
            prior_system_utterance=self.last_response,
            expected_types=_types_for_topic(current_topic),
            current_topic=current_topic if current_topic in TOPIC_SET else None,
        )
        mentions = link_utterance(
            utterance, context, self.discourse, self.engine.gazetteer, cfg
        )

        mention_ids: list[str] = []
        for m in mentions:
            if m.entity_id not in mention_ids:
                mention_ids.append(m.entity_id)
            self.discourse = self.discourse.record_entity(
                EntityRecord(m.span.surface, m.entity_id, m.entity_type, "user", turn),
                current_turn=turn,
            )
            self.topic_state.note_user_entity(m.entity_id)
        for b in bindings:
            if b.entity_id not in mention_ids:
                mention_ids.append(b.entity_id)

        signal = detect_topic(utterance, tuple(m.entity_type for m in mentions))

        norm = normalize_surface(utterance)
        active_topic = current_topic if current_topic in TOPIC_SET else signal.topic
        if self.user is not None:
            update_user(self.user, nlu_result, active_topic, cfg)
        if signals_disinterest(norm) and current_topic in TOPIC_SET:
            self.topic_state.disinterested.add(current_topic)
            # treat an explicit "this is boring" as the topic being lost
            self.signal_less_streak = max(self.signal_less_streak, cfg.lost_topic_turns)

        view = DmView(
            turn_index=turn,
            current_topic=current_topic,
            signal_less_streak=self.signal_less_streak,
            visited_topics=frozenset(self.topic_state.visited())
            | frozenset(self.user.topics_discussed if self.user else ()),
            disinterested_topics=frozenset(self.topic_state.disinterested),
            initiated_changes=self.initiated_changes,
            system_initiative_streak=self.system_initiative_streak,
            fallback_streak=self.fallback_streak,
            affinity_order=personalized_topics(self.user),
        )
        action = decide_action(nlu_result, signal, view, cfg)

        initiative: str | None = None
        target_topic: str | None = None
        menu_options: tuple[str, ...] = ()
        if action.kind == "topic_change":
            if signal.topic is not None and signal.topic != current_topic:
                target_topic = signal.topic
                self.system_initiative_streak = 0
            else:
                initiative, options = choose_initiative(view, cfg)
                if initiative == "menu":
                    action = SystemAction("list_options")
                    menu_options = options
                    self.system_initiative_streak = 0
                else:
                    target_topic = options[0]
                    self.initiated_changes += 1
                    self.system_initiative_streak += 1
        elif action.kind == "list_options":
            menu_options = fresh_topics(view)[:3]
            self.system_initiative_streak = 0

        constraints = generate_constraints(
            action, nlu_result, signal, view, tuple(mention_ids), target_topic
        )
        ctx = TurnContext(
            action=action,
            constraints=constraints,
            nlu=nlu_result,
            discourse=self.discourse,
            turn_index=turn,
            rng=self.rng,
            config=cfg,
            flow_states=self.flow_states,
            used_universal=self.used_universal,
            kg_usage=self.kg_usage,
            used_facts=self.used_facts,
            last_response=self.last_response,
            user_name=self.user.name if self.user else None,
            previous_topics=tuple(self.user.topics_discussed) if self.user else (),
            menu_topics=menu_options,
        )
        generators = self.engine.registry.lookup(action, constraints.topic)
        raw: list[ResponseCandidate] = []
        for rg in generators:
            raw.extend(rg.respond(ctx))

        kept, dropped = build_response_pool(raw, self.spoken_bodies)
        gated = [c for c in kept if not passes_hard_gate(c, constraints)]
        ranked = rank_responses(kept, constraints, cfg)

        if ranked:
            winner = ranked[0]
            self.fallback_streak = 0
        else:
            fresh = fresh_topics(view)
            menu = fresh[:3] if self.fallback_streak >= 1 else ()
            winner = fallback_candidate(fresh[0], self.rng, menu_options=menu)
            if menu:
                menu_options = menu
            self.fallback_streak += 1

        if winner.commit is not None:
            winner.commit()
        for rg in generators:
            if isinstance(rg, FlowRg) and rg.name != winner.rg_name:
                rg.note_loss(ctx)

        old_topic = current_topic
        if winner.topic is not None and winner.topic != old_topic:
            self.topic_state.enter_topic(winner.topic)
            self.discourse = self.discourse.note_topic(winner.topic, turn)
            if old_topic is not None:
                # leaving mid-flow: remember to resume with a connective
                state = self.flow_states.get(old_topic)
                if state is not None and state.active_miniflow is not None:
                    state.suspended = True
        self.topic_state.count_turn()

        for surface, eid in winner.entity_annotations:
            record = self.engine.gazetteer.get(eid)
            etype = record.entity_type if record is not None else "other"
            self.discourse = self.discourse.record_entity(
                EntityRecord(surface, eid, etype, "system", turn, 1.0),
                current_turn=turn,
            )
            self.topic_state.note_system_entity(eid)

        prefix: str | None = None
        base = winner.rg_name.split(":", 1)[0]
        if (
            action.kind == "greet"
            and base == "flow"
            and self.user is not None
            and self.user.name
            and self.user.conversations > 0
        ):
            prefix = self.rng.choice(functional_templates()["greet_prefix"]).format(
                name=self.user.name
            )
        elif base in ("flow", "kg", "center"):
            prefix = reactive_prefix(nlu_result)

        response = build_response(winner.parts, prefix=prefix)
        self.spoken_bodies.add(winner.parts.body)
        self.last_response = response

        if signal.kind != "none":
            self.signal_less_streak = 0
        elif action.kind in ("converse", "topic_change", "greet"):
            if winner.rg_name == "fallback":
                self.signal_less_streak += 1
            else:
                self.signal_less_streak = 0

        cand_logs = [
            _cand_log(cand, None, f"dropped:{reason}") for cand, reason in dropped
        ]
        cand_logs.extend(_cand_log(cand, None, "gated") for cand in gated)
        cand_logs.extend(
            _cand_log(cand, cand.score, "won" if i == 0 else "ranked")
            for i, cand in enumerate(ranked)
        )
        if winner.rg_name == "fallback":
            cand_logs.append(_cand_log(winner, None, "won"))

        log = TurnLog(
            turn_index=turn,
            user_utterance=utterance,
            acts=nlu_result.acts,
            intents=tuple(sorted(nlu_result.intents)),
            sentiment=nlu_result.sentiment,
            topic_signal=(signal.kind, signal.topic),
            coref=tuple(
                {
                    "pronoun": b.pronoun,
                    "entity_id": b.entity_id,
                    "entity_type": b.entity_type,
                    "antecedent": b.antecedent_surface,
                }
                for b in bindings
            ),
            entities=tuple(
                {
                    "surface": m.span.surface,
                    "entity_id": m.entity_id,
                    "entity_type": m.entity_type,
                    "source": m.source,
                }
                for m in mentions
            ),
            action=action.kind,
            constraint_topic=constraints.topic,
            constraint_hardness=constraints.topic_hardness,
            entity_mentions=tuple(mention_ids),
            candidates=tuple(cand_logs),
            winner_rg=winner.rg_name,
            prefix=prefix,
            response=response,
            current_topic=self.topic_state.current_topic,
            initiative=initiative,
            menu_options=menu_options,
        )
        self.turns.append(log)
        return log

    # -- wrap-up -------------------------------------------------------------

    def end_session(self, rating: int | None = None) -> ConversationLog:
        if self.closed:
            raise EngineError("session is closed")
        if rating is not None and not 1 <= rating <= 5:
            raise ValueError(f"rating must be 1..5, got {rating}")
        self.closed = True
        self.rating = rating
        if self.user is not None:
            self.user.conversations += 1
            for topic in self.topic_state.history:
                if topic in TOPIC_SET and topic not in self.user.topics_discussed:
                    self.user.topics_discussed.append(topic)
        return self.to_log()

    def to_log(self) -> ConversationLog:
        return ConversationLog(
            session_id=self.session_id,
            seed=self.seed,
            user_id=self.user.user_id if self.user else None,
            user_snapshot=self.user_snapshot,
            variant=self.variant,
            turns=list(self.turns),
            rating=self.rating,
        )


def replay(engine: Engine, log: ConversationLog) -> ConversationLog:
    """Re-run a logged conversation from its seed and user snapshot.

    The result serializes identically to the original; anything less is
    a determinism bug.
    """
    user = (
        UserRecord.from_dict(log.user_snapshot)
        if log.user_snapshot is not None
        else None
    )
    session = engine.new_session(
        log.seed, user=user, session_id=log.session_id, variant=log.variant
    )
    for turn in log.turns:
        session.take_turn(turn.user_utterance)
    return session.end_session(log.rating)
