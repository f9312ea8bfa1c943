"""The response generators, behind one shared call signature.

Each generator takes the per-turn :class:`TurnContext` and returns
candidates (possibly null).  Generators never mutate conversation
state directly; anything that must persist rides in a candidate's
commit callback, which the engine runs only for the winner.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import yaml

from .config import EngineConfig
from .contracts import (
    Constraints,
    ResponseCandidate,
    ResponseParts,
    RgRegistry,
    SystemAction,
    null_candidate,
)
from .dataio import data_path
from .discourse import DiscourseState
from .facts import FactIndex, centering_respond, default_fact_index
from .flows import (
    FlowGraph,
    FlowState,
    advance,
    load_all_flows,
    persona_answer,
    universal_miniflow,
)
from .gazetteer import Gazetteer, default_gazetteer
from .kg import KG_TOPICS, KgStore, KgUsage, default_kg, kg_respond, load_kg_templates
from .nlu import NluResult
from .types import INTRO_TOPIC, TOPICS

DEFAULT_FUNCTIONAL = "templates/functional.yaml"

FUNCTIONAL_KINDS = (
    "perform_repeat",
    "conv_closing",
    "advise_usage",
    "repeat_request",
    "wait_prompting",
    "red_response",
    "list_options",
)


@dataclass
class TurnContext:
    """Everything a generator may consult for one turn."""

    action: SystemAction
    constraints: Constraints
    nlu: NluResult | None
    discourse: DiscourseState
    turn_index: int
    rng: random.Random
    config: EngineConfig
    # Mutable per-conversation stores, advanced only through commits.
    flow_states: dict[str, FlowState] = field(default_factory=dict)
    used_universal: set[tuple[str, str]] = field(default_factory=set)
    kg_usage: KgUsage = field(default_factory=KgUsage)
    used_facts: set[int] = field(default_factory=set)
    # Read-only context for the functional generator.
    last_response: str | None = None
    user_name: str | None = None
    previous_topics: tuple[str, ...] = ()
    menu_topics: tuple[str, ...] = ()


class FlowRg:
    """One topic's scripted call-flow, plus its universal questions."""

    def __init__(self, graph: FlowGraph) -> None:
        self.graph = graph
        self.topic = graph.topic
        self.name = f"flow:{graph.topic}"

    def state(self, ctx: TurnContext) -> FlowState:
        return ctx.flow_states.setdefault(self.topic, FlowState(topic=self.topic))

    def respond(self, ctx: TurnContext) -> list[ResponseCandidate]:
        state = self.state(ctx)
        if state.pending_universal is not None:
            kind = state.pending_universal[0]
            return universal_miniflow(
                kind, self.topic, state, ctx.used_universal, ctx.nlu, rg_name=self.name
            )
        entity_mentioned = bool(ctx.constraints.entity_mentions)
        out = advance(
            self.graph, state, ctx.nlu, entity_mentioned, ctx.rng, rg_name=self.name
        )
        if not (len(out) == 1 and out[0].null_flag):
            return out
        # The scripted material is spent; offer the one-shot questions.
        for kind in ("would_you_rather", "hypothetical"):
            out = universal_miniflow(
                kind, self.topic, state, ctx.used_universal, ctx.nlu, rg_name=self.name
            )
            if not out[0].null_flag:
                return out
        return [null_candidate(self.name, self.topic)]

    def note_loss(self, ctx: TurnContext) -> None:
        """Mark the flow suspended when another generator took the
        floor mid-flow, so resumption glues on a connective."""
        state = ctx.flow_states.get(self.topic)
        if state is not None and state.active_miniflow is not None:
            state.suspended = True


class KgRg:
    name = "kg"

    def __init__(
        self,
        store: KgStore | None = None,
        templates: dict | None = None,
        gazetteer: Gazetteer | None = None,
    ) -> None:
        self.store = store if store is not None else default_kg()
        self.templates = templates if templates is not None else load_kg_templates()
        self.gazetteer = gazetteer if gazetteer is not None else default_gazetteer()

    def respond(self, ctx: TurnContext) -> list[ResponseCandidate]:
        return kg_respond(
            ctx.constraints,
            ctx.discourse,
            ctx.kg_usage,
            self.store,
            self.templates,
            self.gazetteer,
            ctx.turn_index,
            nlu=ctx.nlu,
            config=ctx.config,
            rg_name=self.name,
        )


class CenterRg:
    name = "center"

    def __init__(self, index: FactIndex | None = None) -> None:
        self.index = index if index is not None else default_fact_index()

    def respond(self, ctx: TurnContext) -> list[ResponseCandidate]:
        return centering_respond(
            ctx.discourse,
            ctx.used_facts,
            self.index,
            topic=ctx.constraints.topic,
            rg_name=self.name,
        )


class PersonaRg:
    """Answers questions about the bot itself; null on everything else."""

    name = "persona"

    def respond(self, ctx: TurnContext) -> list[ResponseCandidate]:
        if ctx.nlu is None or "user_question" not in ctx.nlu.intents:
            return [null_candidate(self.name, ctx.constraints.topic)]
        answer = persona_answer(ctx.nlu.utterance)
        if answer is None:
            return [null_candidate(self.name, ctx.constraints.topic)]
        return [
            ResponseCandidate(
                rg_name=self.name,
                parts=ResponseParts(body=f"{answer} What about you?"),
                topic=ctx.constraints.topic,
                dialogue_acts=("statement-opinion", "open-question"),
            )
        ]


@lru_cache(maxsize=None)
def functional_templates(path_key: str | None = None) -> dict:
    file_path = Path(path_key) if path_key else data_path(DEFAULT_FUNCTIONAL)
    with open(file_path, encoding="utf-8") as handle:
        return yaml.safe_load(handle)


def render_menu(options: tuple[str, ...]) -> str:
    names = [topic.replace("_", " ") for topic in options]
    if len(names) > 1:
        return ", ".join(names[:-1]) + ", or " + names[-1]
    return names[0] if names else ""


class FunctionalRg:
    """Short scripted responses for the housekeeping actions."""

    name = "functional"

    def __init__(self, templates: dict | None = None) -> None:
        self.templates = (
            templates if templates is not None else functional_templates()
        )

    def _pick(self, ctx: TurnContext, key: str) -> str:
        return ctx.rng.choice(self.templates[key])

    def respond(self, ctx: TurnContext) -> list[ResponseCandidate]:
        kind = ctx.action.kind
        topic = ctx.constraints.topic
        if kind == "conv_closing":
            body, acts = self._pick(ctx, "closing"), ("statement-non-opinion",)
        elif kind == "advise_usage":
            body, acts = self._pick(ctx, "usage"), ("statement-non-opinion",)
        elif kind == "repeat_request":
            body, acts = self._pick(ctx, "repeat_request"), ("yes-no-question",)
        elif kind == "wait_prompting":
            body, acts = self._pick(ctx, "wait"), ("statement-non-opinion",)
        elif kind == "red_response":
            body, acts = self._pick(ctx, "red"), ("statement-non-opinion",)
        elif kind == "perform_repeat":
            if ctx.last_response:
                body = f"{self._pick(ctx, 'repeat_prefix')} {ctx.last_response}"
            else:
                body = self._pick(ctx, "no_repeat")
            acts = ("statement-non-opinion",)
        elif kind == "list_options":
            if not ctx.menu_topics:
                return [null_candidate(self.name, topic)]
            body = self._pick(ctx, "menu").format(options=render_menu(ctx.menu_topics))
            acts = ("open-question",)
        elif kind == "greet":
            if not ctx.user_name:
                return [null_candidate(self.name, topic)]
            if ctx.previous_topics:
                body = self._pick(ctx, "greet_repeat").format(
                    name=ctx.user_name,
                    topic=ctx.previous_topics[-1].replace("_", " "),
                )
            else:
                body = self._pick(ctx, "greet_repeat_no_topic").format(
                    name=ctx.user_name
                )
            acts = ("statement-non-opinion", "open-question")
        else:
            return [null_candidate(self.name, topic)]
        return [
            ResponseCandidate(
                rg_name=self.name,
                parts=ResponseParts(body=body),
                topic=topic,
                dialogue_acts=acts,
            )
        ]


def build_registry(
    flows: dict[str, FlowGraph] | None = None,
    kg_rg: KgRg | None = None,
    center: CenterRg | None = None,
    functional: FunctionalRg | None = None,
) -> RgRegistry:
    """The standard generator lineup.

    Every topic gets its flow for converse and topic-change turns; the
    knowledge-graph generator joins on its four topics; fun facts and
    the functional generator cover everything else.
    """
    flows = flows if flows is not None else load_all_flows()
    registry = RgRegistry()
    for topic in (*TOPICS, INTRO_TOPIC):
        graph = flows.get(topic)
        if graph is None:
            continue
        rg = FlowRg(graph)
        actions = ("converse", "topic_change")
        if topic == INTRO_TOPIC:
            actions = ("greet", "converse", "topic_change")
        registry.register(rg, actions=actions, topics=(topic,))
    registry.register(
        kg_rg if kg_rg is not None else KgRg(),
        actions=("converse", "topic_change"),
        topics=tuple(sorted(KG_TOPICS)),
    )
    registry.register(
        center if center is not None else CenterRg(),
        actions=("converse", "topic_change"),
    )
    registry.register(
        functional if functional is not None else FunctionalRg(),
        actions=(*FUNCTIONAL_KINDS, "greet"),
    )
    registry.register_always(PersonaRg())
    return registry
