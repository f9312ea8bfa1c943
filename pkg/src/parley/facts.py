"""Fun-fact retrieval for the centering generators.

Facts are indexed by keys: knowledge-base ids and plain concept words.
Retrieval intersects the keys with the centered entities (ids and
surface forms); when nothing matches an entity, facts filed under the
current topic still apply.  A fact is never told twice in one
conversation.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

from .contracts import ResponseCandidate, ResponseParts, null_candidate
from .dataio import data_path, read_jsonl
from .discourse import DiscourseState
from .types import is_qid, normalize_surface

DEFAULT_FACTS = "facts/facts.jsonl"

_LEAD_INS = (
    "I heard this trivia fact about {key}.",
    "Here's a fact I read about {key}!",
    "I came across something interesting about {key}.",
)
_TOPIC_LEAD_IN = "Here's something interesting."


class FactError(ValueError):
    pass


@dataclass(frozen=True)
class FunFact:
    fact_id: int
    text: str
    topic: str
    keys: frozenset[str]

    def __post_init__(self) -> None:
        if not self.text:
            raise FactError("empty fact text")
        if not self.keys:
            raise FactError("fact needs at least one key")


class FactIndex:
    def __init__(self, facts: list[FunFact]) -> None:
        self._facts = tuple(facts)
        self._by_key: dict[str, list[FunFact]] = {}
        self._by_topic: dict[str, list[FunFact]] = {}
        for fact in self._facts:
            for key in sorted(fact.keys):
                self._by_key.setdefault(key, []).append(fact)
            self._by_topic.setdefault(fact.topic, []).append(fact)

    def __len__(self) -> int:
        return len(self._facts)

    def __iter__(self):
        return iter(self._facts)

    def by_key(self, key: str) -> list[FunFact]:
        return list(self._by_key.get(key, ()))

    def by_topic(self, topic: str) -> list[FunFact]:
        return list(self._by_topic.get(topic, ()))


def load_fact_index(path: str | Path | None = None) -> FactIndex:
    file_path = Path(path) if path is not None else data_path(DEFAULT_FACTS)
    facts: list[FunFact] = []
    for line_no, row in read_jsonl(file_path):
        try:
            keys = frozenset(
                k if is_qid(str(k)) else normalize_surface(str(k))
                for k in row["keys"]
            )
            facts.append(
                FunFact(
                    fact_id=len(facts),
                    text=str(row["text"]),
                    topic=str(row["topic"]),
                    keys=keys,
                )
            )
        except (FactError, KeyError) as exc:
            raise FactError(f"{file_path.name}:{line_no}: {exc}") from exc
    return FactIndex(facts)


@lru_cache(maxsize=None)
def default_fact_index() -> FactIndex:
    return load_fact_index()


def centering_respond(
    discourse: DiscourseState,
    used: set[int],
    index: FactIndex,
    topic: str | None,
    rg_name: str = "center",
    max_candidates: int = 2,
) -> list[ResponseCandidate]:
    """Unused facts matching the discourse centers, topic facts as a
    last resort; null when the well is dry."""
    matches: list[tuple[FunFact, str, str | None]] = []  # (fact, key surface, entity_id)
    seen: set[int] = set()
    for record in discourse.centered_entities(10):
        surfaces = {normalize_surface(record.surface_form)}
        for fact in index.by_key(record.entity_id) if record.entity_id else ():
            if fact.fact_id not in used and fact.fact_id not in seen:
                matches.append((fact, record.surface_form, record.entity_id))
                seen.add(fact.fact_id)
        for surface in surfaces:
            for fact in index.by_key(surface):
                if fact.fact_id not in used and fact.fact_id not in seen:
                    matches.append((fact, record.surface_form, record.entity_id or None))
                    seen.add(fact.fact_id)
    if not matches and topic is not None:
        for fact in index.by_topic(topic):
            if fact.fact_id not in used and fact.fact_id not in seen:
                matches.append((fact, "", None))
                seen.add(fact.fact_id)
    if not matches:
        return [null_candidate(rg_name, topic)]

    candidates: list[ResponseCandidate] = []
    for position, (fact, key_surface, entity_id) in enumerate(matches[:max_candidates]):
        if key_surface:
            opener = _LEAD_INS[fact.fact_id % len(_LEAD_INS)].format(key=key_surface)
        else:
            opener = _TOPIC_LEAD_IN
        annotations = ()
        if entity_id:
            annotations = ((key_surface, entity_id),)

        def commit(fact_id=fact.fact_id) -> None:
            used.add(fact_id)

        candidates.append(
            ResponseCandidate(
                rg_name=rg_name,
                parts=ResponseParts(opener=opener, body=fact.text),
                # the fact's own topic, so a hard topic constraint can
                # gate out trivia that trails the previous subject
                topic=fact.topic,
                dialogue_acts=("statement-non-opinion",),
                entity_annotations=annotations,
                commit=commit,
            )
        )
    return candidates
