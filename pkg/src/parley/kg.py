"""Knowledge-graph grounded responses over a local triple store.

Four topics (movies, music, sports, tv) each carry a closed relation
inventory; triples are validated against it at load time.  Responses
anchor on a focus entity — the entity from the previous turn, then a
user-mentioned entity, then a per-topic fallback — and each (entity,
relation) pair grounds at most one response per conversation.  When an
entity is spent, or has held focus too long, the generator walks the
graph to a related entity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path

import yaml

from .config import EngineConfig
from .contracts import Constraints, ResponseCandidate, ResponseParts, null_candidate
from .dataio import data_path, read_jsonl
from .discourse import DiscourseState
from .gazetteer import Gazetteer
from .nlu import NluResult
from .types import TYPE_TO_TOPIC, is_qid

DEFAULT_TRIPLES = "kg/triples.jsonl"
DEFAULT_TEMPLATES = "kg/templates.yaml"
DEFAULT_FALLBACKS = "kg/fallback_entities.yaml"

RELATION_INVENTORY: dict[str, frozenset[str]] = {
    "movies": frozenset(
        {"cast", "voiceCast", "spouse", "childrenNum", "genre", "awards"}
    ),
    "music": frozenset(
        {"performer", "genre", "awards", "memberOf", "instrument", "label"}
    ),
    "sports": frozenset(
        {"team", "position", "participant", "spouse", "childrenNum", "awards"}
    ),
    "tv": frozenset({"cast", "role", "creator", "director", "genre", "awards"}),
}
KG_TOPICS = frozenset(RELATION_INVENTORY)

# Entity types whose mentions anchor each topic's conversation.
FOCUS_TYPES: dict[str, frozenset[str]] = {
    "movies": frozenset({"movie", "actor", "director"}),
    "music": frozenset({"musician", "band", "song"}),
    "sports": frozenset({"athlete", "sports_team"}),
    "tv": frozenset({"tv_show"}),
}

# Any type a graph walk may switch focus to (never a literal).
_SWITCHABLE = frozenset().union(*FOCUS_TYPES.values())


class KgError(ValueError):
    pass


@dataclass(frozen=True)
class Triple:
    subject: str
    relation: str
    object: str
    object_kind: str  # "entity" | "literal"

    def __post_init__(self) -> None:
        if not is_qid(self.subject):
            raise KgError(f"subject {self.subject!r} is not a Q-id")
        if self.object_kind not in ("entity", "literal"):
            raise KgError(f"bad object_kind {self.object_kind!r}")
        if self.object_kind == "entity" and not is_qid(self.object):
            raise KgError(f"entity object {self.object!r} is not a Q-id")
        if not self.object:
            raise KgError("empty object")


class KgStore:
    """Immutable triple collection indexed by subject and by pair."""

    def __init__(self, triples: list[Triple]) -> None:
        self._triples = tuple(triples)
        self._by_subject: dict[str, list[Triple]] = {}
        self._by_pair: dict[tuple[str, str], list[Triple]] = {}
        for triple in self._triples:
            self._by_subject.setdefault(triple.subject, []).append(triple)
            self._by_pair.setdefault((triple.subject, triple.relation), []).append(triple)

    def __len__(self) -> int:
        return len(self._triples)

    def __iter__(self):
        return iter(self._triples)

    def relations_for(self, subject: str) -> list[str]:
        seen: list[str] = []
        for triple in self._by_subject.get(subject, ()):
            if triple.relation not in seen:
                seen.append(triple.relation)
        return seen

    def objects(self, subject: str, relation: str) -> list[Triple]:
        return list(self._by_pair.get((subject, relation), ()))

    def has_subject(self, subject: str) -> bool:
        return subject in self._by_subject

    def subjects(self) -> list[str]:
        return list(self._by_subject)


def topic_of_subject(subject: str, gazetteer: Gazetteer) -> str:
    record = gazetteer.get(subject)
    if record is None:
        raise KgError(f"subject {subject} not in gazetteer")
    topic = TYPE_TO_TOPIC.get(record.entity_type)
    if topic not in KG_TOPICS:
        raise KgError(
            f"subject {subject} has type {record.entity_type!r}, "
            "outside the knowledge-graph topics"
        )
    return topic


def load_kg(path: str | Path | None = None, gazetteer: Gazetteer | None = None) -> KgStore:
    """Read and validate the triples file.

    Every subject must resolve through the gazetteer so its topic's
    relation inventory can be enforced; violations name the line.
    """
    if gazetteer is None:
        from .gazetteer import default_gazetteer

        gazetteer = default_gazetteer()
    file_path = Path(path) if path is not None else data_path(DEFAULT_TRIPLES)
    triples: list[Triple] = []
    for line_no, row in read_jsonl(file_path):
        try:
            triple = Triple(
                subject=row["subject"],
                relation=row["relation"],
                object=str(row["object"]),
                object_kind=row.get("object_kind", "literal"),
            )
            topic = topic_of_subject(triple.subject, gazetteer)
            if triple.relation not in RELATION_INVENTORY[topic]:
                raise KgError(
                    f"relation {triple.relation!r} not in the {topic} inventory"
                )
        except (KgError, KeyError) as exc:
            raise KgError(f"{file_path.name}:{line_no}: {exc}") from exc
        triples.append(triple)
    return KgStore(triples)


@lru_cache(maxsize=None)
def default_kg() -> KgStore:
    return load_kg()


@dataclass
class KgUsage:
    """Per-conversation knowledge-graph bookkeeping."""

    used_relations: set[tuple[str, str]] = field(default_factory=set)
    entity_turn_counts: dict[str, int] = field(default_factory=dict)
    familiarity: dict[str, str] = field(default_factory=dict)  # entity -> unknown/familiar/unfamiliar
    pending_probe: str | None = None
    pending_question: tuple[str, str] | None = None  # (entity, relation) asked last turn
    probed: set[str] = field(default_factory=set)

    def spend(self, entity: str, relation: str) -> None:
        self.used_relations.add((entity, relation))
        self.entity_turn_counts[entity] = self.entity_turn_counts.get(entity, 0) + 1


# ---------------------------------------------------------------------------
# templates


@lru_cache(maxsize=None)
def _template_file(path_key: str) -> dict:
    with open(path_key, encoding="utf-8") as handle:
        raw = yaml.safe_load(handle)
    for topic in raw:
        if topic not in KG_TOPICS | {"shared"}:
            raise KgError(f"unknown template topic {topic!r}")
    return raw


def load_kg_templates(path: str | Path | None = None) -> dict:
    file_path = Path(path) if path is not None else data_path(DEFAULT_TEMPLATES)
    return _template_file(str(file_path))


def template_for(templates: dict, topic: str, relation: str) -> dict | None:
    block = templates.get(topic, {})
    if relation in block and relation != "familiarity_probe":
        return block[relation]
    return templates.get("shared", {}).get(relation)


def relation_order(templates: dict, topic: str) -> list[str]:
    """Relations in authored priority order: topic-specific first."""
    order = [r for r in templates.get(topic, {}) if r != "familiarity_probe"]
    for relation in templates.get("shared", {}):
        if relation not in order:
            order.append(relation)
    return order


@lru_cache(maxsize=None)
def fallback_entities(topic: str, path_key: str | None = None) -> tuple[str, ...]:
    file_path = Path(path_key) if path_key else data_path(DEFAULT_FALLBACKS)
    with open(file_path, encoding="utf-8") as handle:
        raw = yaml.safe_load(handle)
    entries = raw.get(topic, ())
    return tuple(str(e) for e in entries)


# ---------------------------------------------------------------------------
# focus selection


def _has_material(entity: str, usage: KgUsage, store: KgStore) -> bool:
    return any(
        (entity, relation) not in usage.used_relations
        for relation in store.relations_for(entity)
    )


def _focus_entity(
    constraints: Constraints,
    discourse: DiscourseState,
    usage: KgUsage,
    store: KgStore,
    turn_index: int,
    topic: str,
) -> str | None:
    focus_types = FOCUS_TYPES[topic]

    def usable(entity_id: str) -> bool:
        return store.has_subject(entity_id) and _has_material(entity_id, usage, store)

    # The entity mentioned in the previous turn (either speaker) wins.
    recent = [
        rec for rec in reversed(discourse.entities)
        if rec.turn_index >= turn_index - 1
        and rec.entity_id
        and rec.entity_type in focus_types
    ]
    for rec in recent:
        if usable(rec.entity_id):
            return rec.entity_id
    # Then anything the user brought up earlier.
    for rec in discourse.centered_entities(10):
        if rec.source == "user" and rec.entity_type in focus_types and usable(rec.entity_id):
            return rec.entity_id
    for eid in constraints.entity_mentions:
        if usable(eid):
            return eid
    for eid in fallback_entities(topic):
        if usable(eid):
            return eid
    return None


def switch_entity(
    current: str,
    store: KgStore,
    usage: KgUsage,
    gazetteer: Gazetteer,
) -> str | None:
    """Walk one hop to a related entity worth talking about.

    Candidates are entity-valued objects of the current subject's
    triples that have their own triples; unvisited ones first, then by
    popularity, then by id.  Returns None when the graph offers nothing.
    """
    related: list[str] = []
    for relation in store.relations_for(current):
        for triple in store.objects(current, relation):
            if triple.object_kind != "entity" or triple.object == current:
                continue
            record = gazetteer.get(triple.object)
            if record is None or record.entity_type not in _SWITCHABLE:
                continue
            if not store.has_subject(triple.object):
                continue
            if not _has_material(triple.object, usage, store):
                continue
            if triple.object not in related:
                related.append(triple.object)
    if not related:
        return None

    def sort_key(eid: str) -> tuple:
        visited = eid in usage.entity_turn_counts
        return (visited, -gazetteer.get(eid).popularity, eid)

    return sorted(related, key=sort_key)[0]


# ---------------------------------------------------------------------------
# realization


def _render_object(triple: Triple, gazetteer: Gazetteer) -> str:
    if triple.object_kind == "entity":
        record = gazetteer.get(triple.object)
        if record is not None:
            return record.canonical_name
    return triple.object


def _join(names: list[str]) -> str:
    if len(names) == 1:
        return names[0]
    return ", ".join(names[:-1]) + " and " + names[-1]


def _realize(
    template: dict,
    subject_name: str,
    triples: list[Triple],
    gazetteer: Gazetteer,
) -> tuple[str, list[tuple[str, str]]]:
    names = [_render_object(t, gazetteer) for t in triples]
    body = template["fact"].format(
        subject=subject_name, object=names[0], objects=_join(names)
    )
    follow_up = template.get("follow_up")
    if follow_up:
        body = f"{body} {follow_up.format(subject=subject_name, object=names[0])}"
    annotations = [
        (name, t.object)
        for name, t in zip(names, triples)
        if t.object_kind == "entity"
    ]
    return body, annotations


def _resolve_probe_answer(usage: KgUsage, nlu: NluResult | None) -> None:
    """Fold the user's answer to last turn's seen-it probe into the
    familiarity map; no answer leaves it unknown but never re-asks."""
    if usage.pending_probe is None or nlu is None:
        return
    entity = usage.pending_probe
    if "yes-answer" in nlu.acts or "agree" in nlu.acts:
        usage.familiarity[entity] = "familiar"
    elif "no-answer" in nlu.acts:
        usage.familiarity[entity] = "unfamiliar"
    else:
        usage.familiarity.setdefault(entity, "unknown")
    usage.pending_probe = None


def kg_respond(
    constraints: Constraints,
    discourse: DiscourseState,
    usage: KgUsage,
    store: KgStore,
    templates: dict,
    gazetteer: Gazetteer,
    turn_index: int,
    nlu: NluResult | None = None,
    config: EngineConfig | None = None,
    rg_name: str = "kg",
) -> list[ResponseCandidate]:
    """Candidates grounded in the triple store, or a null response.

    At most one fact is realized per (entity, relation) pair per
    conversation; the bookkeeping lives in ``usage`` and is only
    advanced by the winning candidate's commit.
    """
    cfg = config or EngineConfig()
    topic = constraints.topic
    if topic not in KG_TOPICS:
        return [null_candidate(rg_name, topic)]
    _resolve_probe_answer(usage, nlu)

    # A question-first turn was committed last turn: answer it now.
    if usage.pending_question is not None:
        entity, relation = usage.pending_question
        if (entity, relation) not in usage.used_relations:
            triples = store.objects(entity, relation)
            template = template_for(templates, topic, relation)
            if triples and template:
                subject_name = _subject_name(entity, gazetteer)
                body, notes = _realize(template, subject_name, triples, gazetteer)
                notes.insert(0, (subject_name, entity))

                def commit_answer(entity=entity, relation=relation) -> None:
                    usage.spend(entity, relation)
                    usage.pending_question = None

                return [
                    ResponseCandidate(
                        rg_name=rg_name,
                        parts=ResponseParts(ground=_answer_ground(nlu), body=body),
                        topic=topic,
                        dialogue_acts=("statement-non-opinion",),
                        entity_annotations=tuple(notes),
                        commit=commit_answer,
                    )
                ]
        usage.pending_question = None

    focus = _focus_entity(constraints, discourse, usage, store, turn_index, topic)
    if focus is None:
        return [null_candidate(rg_name, topic)]
    threshold = cfg.kg_entity_turn_threshold
    if usage.entity_turn_counts.get(focus, 0) >= threshold or not _has_material(
        focus, usage, store
    ):
        switched = switch_entity(focus, store, usage, gazetteer)
        if switched is None:
            # Nothing adjacent in the graph; fall back to a fresh anchor.
            for eid in fallback_entities(topic):
                if (
                    eid != focus
                    and usage.entity_turn_counts.get(eid, 0) < threshold
                    and store.has_subject(eid)
                    and _has_material(eid, usage, store)
                ):
                    switched = eid
                    break
        if switched is None:
            return [null_candidate(rg_name, topic)]
        focus = switched

    subject_name = _subject_name(focus, gazetteer)
    candidates: list[ResponseCandidate] = []

    # For shows we have not asked about yet, lead with a familiarity
    # probe so later templates can assume the user has (not) seen it.
    probe_template = templates.get(topic, {}).get("familiarity_probe")
    focus_record = gazetteer.get(focus)
    if (
        probe_template
        and focus not in usage.probed
        and usage.familiarity.get(focus) is None
        and focus_record is not None
        and focus_record.entity_type in FOCUS_TYPES[topic]
    ):
        def commit_probe(focus=focus) -> None:
            usage.pending_probe = focus
            usage.probed.add(focus)
            usage.entity_turn_counts[focus] = usage.entity_turn_counts.get(focus, 0) + 1

        candidates.append(
            ResponseCandidate(
                rg_name=rg_name,
                parts=ResponseParts(body=probe_template.format(subject=subject_name)),
                topic=topic,
                dialogue_acts=("yes-no-question",),
                entity_annotations=((subject_name, focus),),
                commit=commit_probe,
            )
        )

    familiar = usage.familiarity.get(focus)
    for relation in relation_order(templates, topic):
        if len(candidates) >= 3:
            break
        if (focus, relation) in usage.used_relations:
            continue
        triples = store.objects(focus, relation)
        if not triples:
            continue
        template = template_for(templates, topic, relation)
        if template is None:
            continue
        if template.get("requires_familiarity") and familiar != "familiar":
            continue
        question = template.get("question")
        if question and not any(c.dialogue_acts == ("yes-no-question",) for c in candidates):
            def commit_question(focus=focus, relation=relation) -> None:
                usage.pending_question = (focus, relation)
                usage.entity_turn_counts[focus] = (
                    usage.entity_turn_counts.get(focus, 0) + 1
                )

            candidates.append(
                ResponseCandidate(
                    rg_name=rg_name,
                    parts=ResponseParts(body=question.format(subject=subject_name)),
                    topic=topic,
                    dialogue_acts=("wh-question",),
                    entity_annotations=((subject_name, focus),),
                    commit=commit_question,
                )
            )
            continue
        body, notes = _realize(template, subject_name, triples, gazetteer)
        notes.insert(0, (subject_name, focus))
        acts = ["statement-non-opinion"]
        if template.get("follow_up", "").rstrip().endswith("?"):
            acts.append("yes-no-question")

        def commit_fact(focus=focus, relation=relation) -> None:
            usage.spend(focus, relation)

        candidates.append(
            ResponseCandidate(
                rg_name=rg_name,
                parts=ResponseParts(body=body),
                topic=topic,
                dialogue_acts=tuple(acts),
                entity_annotations=tuple(notes),
                commit=commit_fact,
            )
        )
    if not candidates:
        return [null_candidate(rg_name, topic)]
    return candidates


def _subject_name(entity_id: str, gazetteer: Gazetteer) -> str:
    record = gazetteer.get(entity_id)
    return record.canonical_name if record else entity_id


def _answer_ground(nlu: NluResult | None) -> str:
    if nlu is not None and nlu.sentiment == "positive":
        return "Nice choice."
    return "Ah, I see."
