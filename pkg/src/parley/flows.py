"""Topic call-flows built from independent miniflows.

A flow file gives one topic a set of miniflows; each miniflow is a
small graph whose transitions are conditioned on the user's dialogue
acts and optional preconditions (an entity being mentioned, keywords,
sentiment).  Nodes carry multi-part templates; a template is never
said twice in one conversation.  Miniflows compose in any order, so a
flow survives suspension while another generator holds the floor and
resumes with a connective.

Would-you-rather and hypothetical questions are universal miniflows:
data-file entries enabled per topic, asked at most once per kind per
topic per conversation.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import yaml

from .contracts import ResponseCandidate, ResponseParts, null_candidate
from .dataio import data_path, read_wordlist
from .nlu import NluResult
from .types import DIALOGUE_ACT_SET, INTRO_TOPIC, TOPIC_SET, is_qid, normalize_surface

FLOW_DIR = "flows"
DEFAULT_CONNECTIVES = "flows/connectives.txt"
WYR_BANK = "questions/wyr.yaml"
HYPOTHETICAL_BANK = "questions/hypothetical.yaml"

_MATCH_SLOT = "{match}"

# The intro flow may carry a miniflow with this name that asks who it is
# talking to; sessions that already know skip it.
NAME_MINIFLOW = "greeting_name"


class FlowError(ValueError):
    pass


@dataclass(frozen=True)
class FlowTemplate:
    template_id: str
    body: str
    ground: str | None = None
    opener: str | None = None

    def needs_match(self) -> bool:
        return any(
            _MATCH_SLOT in part
            for part in (self.body, self.ground or "", self.opener or "")
        )

    def fill(self, match: str | None) -> ResponseParts:
        def sub(text: str | None) -> str | None:
            if text is None:
                return None
            return text.replace(_MATCH_SLOT, match or "")

        return ResponseParts(body=sub(self.body), ground=sub(self.ground),
                             opener=sub(self.opener))


@dataclass(frozen=True)
class FlowTransition:
    target: str
    required_acts: frozenset[str] = frozenset()
    default: bool = False
    entity_present: bool = False
    keywords: tuple[str, ...] = ()
    sentiment: str | None = None

    def matches(self, nlu: NluResult, entity_mentioned: bool) -> tuple[bool, str | None]:
        """Whether this edge fires for the turn; second element is the
        matched keyword, used to fill the {match} slot."""
        if not self.default and not (self.required_acts & set(nlu.acts)):
            return False, None
        if self.entity_present and not entity_mentioned:
            return False, None
        if self.sentiment is not None and nlu.sentiment != self.sentiment:
            return False, None
        match: str | None = None
        if self.keywords:
            tokens = normalize_surface(nlu.utterance)
            padded = f" {tokens} "
            for keyword in self.keywords:
                if f" {keyword} " in padded:
                    match = keyword
                    break
            if match is None:
                return False, None
        return True, match


@dataclass(frozen=True)
class FlowNode:
    node_id: str
    templates: tuple[FlowTemplate, ...]
    transitions: tuple[FlowTransition, ...]


@dataclass(frozen=True)
class Miniflow:
    name: str
    entry: str
    nodes: dict[str, FlowNode]
    done_states: frozenset[str]


@dataclass(frozen=True)
class FlowGraph:
    topic: str
    miniflows: tuple[Miniflow, ...]
    entity_dictionary: dict[str, str]

    def miniflow(self, name: str) -> Miniflow:
        for flow in self.miniflows:
            if flow.name == name:
                return flow
        raise FlowError(f"unknown miniflow {name!r}")


@dataclass
class FlowState:
    """Mutable per-conversation position inside one topic's flow."""

    topic: str
    active_miniflow: str | None = None
    node: str | None = None
    visited_miniflows: set[str] = field(default_factory=set)
    used_templates: set[str] = field(default_factory=set)
    suspended: bool = False
    pending_universal: tuple[str, int] | None = None  # (kind, bank index)


# ---------------------------------------------------------------------------
# loading


def _parse_template(raw: dict, template_id: str) -> FlowTemplate:
    if not isinstance(raw, dict) or "body" not in raw or not str(raw["body"]).strip():
        raise FlowError(f"template {template_id} needs a non-empty body")
    extras = set(raw) - {"body", "ground", "opener"}
    if extras:
        raise FlowError(f"template {template_id}: unknown keys {sorted(extras)}")
    return FlowTemplate(
        template_id=template_id,
        body=str(raw["body"]),
        ground=str(raw["ground"]) if raw.get("ground") else None,
        opener=str(raw["opener"]) if raw.get("opener") else None,
    )


def _parse_transition(raw: dict, where: str) -> FlowTransition:
    if "target" not in raw:
        raise FlowError(f"{where}: transition needs a target")
    acts = frozenset(str(a) for a in raw.get("acts", ()))
    unknown = acts - DIALOGUE_ACT_SET
    if unknown:
        raise FlowError(f"{where}: unknown dialogue acts {sorted(unknown)}")
    default = bool(raw.get("default", False))
    if not acts and not default:
        raise FlowError(f"{where}: transition needs acts or default: true")
    pre = raw.get("preconditions") or {}
    extras = set(pre) - {"entity_present", "keywords", "sentiment"}
    if extras:
        raise FlowError(f"{where}: unknown preconditions {sorted(extras)}")
    sentiment = pre.get("sentiment")
    if sentiment is not None and sentiment not in ("positive", "negative", "neutral"):
        raise FlowError(f"{where}: bad sentiment {sentiment!r}")
    return FlowTransition(
        target=str(raw["target"]),
        required_acts=acts,
        default=default,
        entity_present=bool(pre.get("entity_present", False)),
        keywords=tuple(normalize_surface(str(k)) for k in pre.get("keywords", ())),
        sentiment=sentiment,
    )


def load_flow(path: str | Path) -> FlowGraph:
    """Parse and validate one flow definition file."""
    file_path = Path(path)
    with open(file_path, encoding="utf-8") as handle:
        raw = yaml.safe_load(handle)
    if not isinstance(raw, dict) or "topic" not in raw:
        raise FlowError(f"{file_path.name}: flow file needs a topic")
    topic = str(raw["topic"])
    if topic not in TOPIC_SET | {INTRO_TOPIC}:
        raise FlowError(f"{file_path.name}: unknown topic {topic!r}")
    dictionary = {}
    for surface, eid in (raw.get("entity_dictionary") or {}).items():
        if not is_qid(str(eid)):
            raise FlowError(f"{file_path.name}: {surface!r} maps to non-Q-id {eid!r}")
        dictionary[normalize_surface(str(surface))] = str(eid)
    miniflows: list[Miniflow] = []
    names: set[str] = set()
    for block in raw.get("miniflows", ()):
        name = str(block.get("name", ""))
        if not name or name in names:
            raise FlowError(f"{file_path.name}: missing or duplicate miniflow name {name!r}")
        names.add(name)
        nodes: dict[str, FlowNode] = {}
        for node_id, node_raw in (block.get("nodes") or {}).items():
            templates = tuple(
                _parse_template(t, f"{name}:{node_id}:{i}")
                for i, t in enumerate(node_raw.get("templates", ()))
            )
            if not templates:
                raise FlowError(f"{file_path.name}: node {name}:{node_id} has no templates")
            transitions = tuple(
                _parse_transition(t, f"{file_path.name}:{name}:{node_id}")
                for t in node_raw.get("transitions", ())
            )
            nodes[str(node_id)] = FlowNode(
                node_id=str(node_id), templates=templates, transitions=transitions
            )
        entry = str(block.get("entry", ""))
        if entry not in nodes:
            raise FlowError(f"{file_path.name}: {name}: entry {entry!r} not among nodes")
        done = frozenset(str(d) for d in block.get("done", ()))
        for state_name in done:
            if state_name not in nodes:
                raise FlowError(f"{file_path.name}: {name}: done state {state_name!r} missing")
        for node in nodes.values():
            for transition in node.transitions:
                if transition.target not in nodes:
                    raise FlowError(
                        f"{file_path.name}: {name}:{node.node_id} -> "
                        f"{transition.target!r} does not exist"
                    )
        miniflows.append(Miniflow(name=name, entry=entry, nodes=nodes, done_states=done))
    if not miniflows:
        raise FlowError(f"{file_path.name}: flow has no miniflows")
    return FlowGraph(topic=topic, miniflows=tuple(miniflows), entity_dictionary=dictionary)


@lru_cache(maxsize=None)
def load_all_flows() -> dict[str, FlowGraph]:
    """Every bundled .flow file, keyed by topic."""
    flows: dict[str, FlowGraph] = {}
    for file_path in sorted(data_path(FLOW_DIR).glob("*.flow")):
        graph = load_flow(file_path)
        if graph.topic in flows:
            raise FlowError(f"duplicate flow for topic {graph.topic!r}")
        flows[graph.topic] = graph
    return flows


@lru_cache(maxsize=None)
def connectives() -> tuple[str, ...]:
    return tuple(read_wordlist(data_path(DEFAULT_CONNECTIVES)))


# ---------------------------------------------------------------------------
# advancing


def _annotate(parts: ResponseParts, dictionary: dict[str, str]) -> tuple[tuple[str, str], ...]:
    """Entity annotations for dictionary surfaces appearing in the
    emitted text."""
    if not dictionary:
        return ()
    text = normalize_surface(" ".join(parts.pieces()))
    padded = f" {text} "
    notes: list[tuple[str, str]] = []
    seen: set[str] = set()
    for surface, eid in dictionary.items():
        if eid not in seen and f" {surface} " in padded:
            notes.append((surface, eid))
            seen.add(eid)
    return tuple(notes)


def _emit(
    graph: FlowGraph,
    state: FlowState,
    miniflow: Miniflow,
    node: FlowNode,
    match: str | None,
    rng: random.Random,
    rg_name: str,
    max_candidates: int = 2,
    resuming: bool = False,
) -> list[ResponseCandidate]:
    unused = [
        t for t in node.templates
        if t.template_id not in state.used_templates
        and (match is not None or not t.needs_match())
    ]
    if not unused:
        return []
    order = list(unused)
    rng.shuffle(order)
    connective = rng.choice(connectives()) if resuming else None
    candidates: list[ResponseCandidate] = []
    for template in order[:max_candidates]:
        parts = template.fill(match)
        if connective:
            opener = f"{connective} {parts.opener}" if parts.opener else connective
            parts = ResponseParts(body=parts.body, ground=parts.ground, opener=opener)
        annotations = _annotate(parts, graph.entity_dictionary)

        def commit(template_id=template.template_id, node_id=node.node_id,
                   miniflow_name=miniflow.name) -> None:
            state.active_miniflow = miniflow_name
            state.node = node_id
            state.visited_miniflows.add(miniflow_name)
            state.used_templates.add(template_id)
            state.suspended = False

        candidates.append(
            ResponseCandidate(
                rg_name=rg_name,
                parts=parts,
                topic=graph.topic,
                dialogue_acts=_acts_of(parts),
                entity_annotations=annotations,
                commit=commit,
            )
        )
    return candidates


def _acts_of(parts: ResponseParts) -> tuple[str, ...]:
    acts: list[str] = []
    body = parts.body.rstrip()
    if body.endswith("?"):
        lowered = normalize_surface(body)
        head = lowered.split()[0] if lowered.split() else ""
        if head in ("what", "who", "when", "where", "why", "which", "how"):
            acts.append("wh-question")
        else:
            acts.append("yes-no-question")
    else:
        acts.append("statement-non-opinion")
    return tuple(acts)


def _next_miniflow(graph: FlowGraph, state: FlowState) -> Miniflow | None:
    for miniflow in graph.miniflows:
        if miniflow.name not in state.visited_miniflows:
            if any(
                t.template_id not in state.used_templates
                for t in miniflow.nodes[miniflow.entry].templates
                if not t.needs_match()
            ):
                return miniflow
    return None


def advance(
    graph: FlowGraph,
    state: FlowState,
    nlu: NluResult | None,
    entity_mentioned: bool,
    rng: random.Random,
    rg_name: str = "flow",
) -> list[ResponseCandidate]:
    """One step of the flow: follow a matching transition, or enter the
    next unvisited miniflow, or return a null response.

    Candidates mutate the state only through their commit, so a losing
    candidate leaves the flow exactly where it was.
    """
    if state.topic != graph.topic:
        raise FlowError(f"state topic {state.topic!r} does not match graph")
    resuming = state.suspended
    if state.active_miniflow is None:
        miniflow = _next_miniflow(graph, state)
        if miniflow is None:
            return [null_candidate(rg_name, graph.topic)]
        node = miniflow.nodes[miniflow.entry]
        return _emit(graph, state, miniflow, node, None, rng, rg_name,
                     resuming=resuming) or [null_candidate(rg_name, graph.topic)]

    miniflow = graph.miniflow(state.active_miniflow)
    node = miniflow.nodes[state.node]
    spent = False
    if nlu is not None:
        for transition in node.transitions:
            fired, match = transition.matches(nlu, entity_mentioned)
            if not fired:
                continue
            target = miniflow.nodes[transition.target]
            emitted = _emit(graph, state, miniflow, target, match, rng, rg_name,
                            resuming=resuming)
            if emitted:
                return emitted
            spent = True  # matched but templates used up: move to the next miniflow
            break
    if spent or state.node in miniflow.done_states or not node.transitions:
        next_flow = _next_miniflow(graph, state)
        if next_flow is not None:
            entry = next_flow.nodes[next_flow.entry]
            emitted = _emit(graph, state, next_flow, entry, None, rng, rg_name,
                            resuming=resuming)
            if emitted:
                return emitted
    return [null_candidate(rg_name, graph.topic)]


# ---------------------------------------------------------------------------
# universal miniflows: would-you-rather and hypothetical


@lru_cache(maxsize=None)
def question_bank(kind: str) -> tuple[dict, ...]:
    if kind == "would_you_rather":
        file_path = data_path(WYR_BANK)
    elif kind == "hypothetical":
        file_path = data_path(HYPOTHETICAL_BANK)
    else:
        raise FlowError(f"unknown question kind {kind!r}")
    with open(file_path, encoding="utf-8") as handle:
        raw = yaml.safe_load(handle) or []
    entries: list[dict] = []
    for i, entry in enumerate(raw):
        for key in ("topic", "question", "answer", "closer"):
            if key not in entry:
                raise FlowError(f"{file_path.name}[{i}]: missing {key!r}")
        entries.append(entry)
    return tuple(entries)


def universal_miniflow(
    kind: str,
    topic: str,
    state: FlowState,
    used: set[tuple[str, str]],
    nlu: NluResult | None,
    rg_name: str = "flow",
) -> list[ResponseCandidate]:
    """Ask (or follow up on) the topic's would-you-rather or
    hypothetical question; at most one of each kind per topic."""
    if state.pending_universal is not None and state.pending_universal[0] == kind:
        _, index = state.pending_universal
        entry = question_bank(kind)[index]
        ground = "That's an interesting answer!"
        if nlu is not None:
            for option, ack in (entry.get("options") or {}).items():
                if normalize_surface(option) in normalize_surface(nlu.utterance):
                    ground = ack
                    break

        def commit_followup() -> None:
            state.pending_universal = None

        body = f"{entry['answer']} {entry['closer']}"
        return [
            ResponseCandidate(
                rg_name=rg_name,
                parts=ResponseParts(ground=ground, body=body),
                topic=topic,
                dialogue_acts=("statement-opinion",),
                commit=commit_followup,
            )
        ]
    if (topic, kind) in used:
        return [null_candidate(rg_name, topic)]
    bank = question_bank(kind)
    for index, entry in enumerate(bank):
        if entry["topic"] == topic:
            def commit_ask(index=index) -> None:
                used.add((topic, kind))
                state.pending_universal = (kind, index)

            return [
                ResponseCandidate(
                    rg_name=rg_name,
                    parts=ResponseParts(body=entry["question"]),
                    topic=topic,
                    dialogue_acts=("open-question",),
                    commit=commit_ask,
                )
            ]
    return [null_candidate(rg_name, topic)]


# ---------------------------------------------------------------------------
# reactive prefixes


_FAVORITE_RE = re.compile(
    r"\b(?:whats|what is|what are) your favorite ([a-z ]+?)(?:\?|$)"
)
_LIKE_RE = re.compile(r"\bdo you (?:like|enjoy|love) ([a-z ]+?)(?:\?|$)")
_ABOUT_YOU_MARKERS = ("who are you", "what are you", "tell me about yourself")


@lru_cache(maxsize=None)
def persona_store(path_key: str | None = None) -> dict:
    file_path = Path(path_key) if path_key else data_path("persona/persona.yaml")
    with open(file_path, encoding="utf-8") as handle:
        return yaml.safe_load(handle)


def persona_answer(utterance: str, persona: dict | None = None) -> str | None:
    """The persona's direct answer to a personal question, if it has one."""
    persona = persona if persona is not None else persona_store()
    norm = normalize_surface(utterance)
    if any(marker in norm for marker in _ABOUT_YOU_MARKERS):
        return persona["about"]
    match = _FAVORITE_RE.search(norm)
    if match:
        subject = match.group(1).strip()
        favorites = persona.get("favorites", {})
        for key, answer in favorites.items():
            if key in subject.split() or subject == key:
                return answer
        return persona.get("favorite_generic")
    match = _LIKE_RE.search(norm)
    if match:
        subject = match.group(1).strip()
        likes = persona.get("likes", {})
        for key, answer in likes.items():
            if key in subject.split():
                return answer
    return None


def reactive_prefix(
    nlu: NluResult,
    persona: dict | None = None,
) -> str | None:
    """Text to prepend to the next response: an answer to the user's
    personal question, or an acknowledgement of their appreciation."""
    persona = persona if persona is not None else persona_store()
    if "user_question" in nlu.intents:
        answer = persona_answer(nlu.utterance, persona)
        if answer:
            return f"{answer} But anyways,"
    if "compliment" in nlu.intents or "appreciation" in nlu.acts:
        return persona["acknowledgement"]
    return None
