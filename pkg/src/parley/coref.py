"""Rule-based pronoun resolution over the discourse model.

Pronouns resolve against recently centered entities plus entities
linked earlier in the same utterance, filtered by type compatibility:
gendered singular pronouns take person types, "they" prefers group
types (bands, teams) before falling back to persons, and "it" takes
works and games but never organizations. Non-referential "it" ("it is
raining") is filtered out by pattern before any binding is attempted.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from typing import Sequence

from .config import EngineConfig
from .discourse import DiscourseState, EntityRecord
from .metrics import EvalMetrics
from .nlu import pleonastic_it_spans
from .types import IT_TYPES, PERSON_TYPES, PLURAL_PERSON_TYPES, normalize_surface

LOG = logging.getLogger(__name__)

# Normalized token -> pronoun group. Contracted forms appear here
# because normalization strips apostrophes ("it's" -> "its").
PRONOUN_GROUPS: dict[str, str] = {
    "he": "masculine", "him": "masculine", "his": "masculine", "hes": "masculine",
    "she": "feminine", "her": "feminine", "hers": "feminine", "shes": "feminine",
    "they": "plural", "them": "plural", "their": "plural",
    "theirs": "plural", "theyre": "plural",
    "it": "neuter", "its": "neuter",
}

# Which entity types each group may resolve to. "plural" is special
# cased in _compatible: group types outrank everything else.
_GROUP_TYPES: dict[str, frozenset[str]] = {
    "masculine": PERSON_TYPES,
    "feminine": PERSON_TYPES,
    "neuter": IT_TYPES,
}


@dataclass(frozen=True)
class PronounBinding:
    """One resolved pronoun occurrence."""

    pronoun: str
    token_index: int
    entity_id: str
    entity_type: str
    antecedent_surface: str


def _compatible(group: str, candidates: Sequence[EntityRecord]) -> EntityRecord | None:
    """First candidate the pronoun group accepts.

    Plural pronouns prefer group entities (bands, teams); failing
    that they take whatever was mentioned most recently, since "they"
    ranges over casts, characters and fan bases too.
    """
    if group == "plural":
        for record in candidates:
            if record.entity_type in PLURAL_PERSON_TYPES:
                return record
        return candidates[0] if candidates else None
    allowed = _GROUP_TYPES[group]
    for record in candidates:
        if record.entity_type in allowed:
            return record
    return None


def _pleonastic_token_indexes(utterance: str) -> set[int]:
    """Token positions of "it" that sit inside a non-referential
    construction."""
    lowered = utterance.lower()
    spans = pleonastic_it_spans(lowered)
    if not spans:
        return set()
    skip: set[int] = set()
    token_index = 0
    for match in re.finditer(r"\S+", lowered):
        if normalize_surface(match.group()) in ("it", "its"):
            for start, end in spans:
                if start <= match.start() < end:
                    skip.add(token_index)
                    break
        if normalize_surface(match.group()):
            token_index += 1
    return skip


def resolve(
    utterance: str,
    discourse: DiscourseState,
    turn_index: int,
    current_turn_entities: Sequence[EntityRecord] = (),
    config: EngineConfig | None = None,
) -> list[PronounBinding]:
    """Bind each referential pronoun in the utterance, or leave it
    unbound when nothing in reach is type-compatible.

    ``current_turn_entities`` are entities already spotted earlier in
    this same utterance; they outrank discourse candidates since they
    are the most recent mention of all. Discourse candidates are the
    centered entities from the last ``coref_turn_window`` turns.
    """
    cfg = config or EngineConfig()
    tokens = normalize_surface(utterance).split()
    if not tokens:
        return []
    window_floor = turn_index - cfg.coref_turn_window
    discourse_candidates = [
        record
        for record in discourse.centered_entities()
        if record.turn_index >= window_floor
    ]
    pleonastic = _pleonastic_token_indexes(utterance)
    bindings: list[PronounBinding] = []
    for index, token in enumerate(tokens):
        group = PRONOUN_GROUPS.get(token)
        if group is None:
            continue
        if group == "neuter" and index in pleonastic:
            continue
        # Same-utterance antecedents first, closest preceding mention
        # leading, then the centered entities.
        preceding = [
            record
            for record in reversed(list(current_turn_entities))
            if _precedes(record, index, tokens)
        ]
        winner = _compatible(group, [*preceding, *discourse_candidates])
        if winner is None:
            continue
        bindings.append(
            PronounBinding(
                pronoun=token,
                token_index=index,
                entity_id=winner.entity_id,
                entity_type=winner.entity_type,
                antecedent_surface=winner.surface_form,
            )
        )
    return bindings


def _precedes(record: EntityRecord, pronoun_index: int, tokens: list[str]) -> bool:
    """True if the record's surface occurs in the token stream strictly
    before the pronoun position."""
    surface_tokens = normalize_surface(record.surface_form).split()
    if not surface_tokens:
        return False
    limit = pronoun_index - len(surface_tokens) + 1
    for start in range(0, max(0, limit)):
        if tokens[start : start + len(surface_tokens)] == surface_tokens:
            return True
    return False


def scan_current_entities(utterance, gazetteer, turn_index: int) -> list[EntityRecord]:
    """Cheap exact scan for named entities in the current utterance.

    Coreference runs before full entity linking, yet a name earlier in
    the same utterance can be the antecedent ("the beatles ... they").
    This pass takes only unambiguous, distinctive exact matches; the
    proper linker with its ranking runs afterwards.
    """
    from .linking import is_distinctive  # deferred: linking imports nlu widely

    tokens = normalize_surface(utterance).split()
    found: list[EntityRecord] = []
    max_len = min(gazetteer.max_surface_tokens, len(tokens))
    i = 0
    while i < len(tokens):
        advanced = False
        for length in range(min(max_len, len(tokens) - i), 0, -1):
            surface = " ".join(tokens[i : i + length])
            records = gazetteer.surface_map.get(surface)
            if not records:
                continue
            if len(records) == 1 and is_distinctive(tokens[i : i + length]):
                record = records[0]
                found.append(
                    EntityRecord(
                        surface_form=surface,
                        entity_id=record.entity_id,
                        entity_type=record.entity_type,
                        source="user",
                        turn_index=turn_index,
                    )
                )
                i += length
                advanced = True
            break
        if not advanced:
            i += 1
    return found


def evaluate_coref(resolver, dataset: Sequence[dict]) -> EvalMetrics:
    """Score a resolver on labeled instances.

    Each instance carries ``utterance``, ``discourse`` (a
    DiscourseState), ``turn_index`` and ``gold``: a mapping from
    pronoun token index to entity id, empty when every pronoun should
    stay unbound. A correct binding is a tp; a binding where none was
    expected (or to the wrong entity) is a fp; a missing or wrong
    binding where one was expected is a fn.
    """
    if not dataset:
        raise ValueError("empty dataset")
    tp = fp = fn = 0
    for instance in dataset:
        gold: dict[int, str] = dict(instance["gold"])
        predicted = resolver(
            instance["utterance"],
            instance["discourse"],
            instance["turn_index"],
            instance.get("current_turn_entities", ()),
        )
        seen: set[int] = set()
        for binding in predicted:
            expected = gold.get(binding.token_index)
            seen.add(binding.token_index)
            if expected is None:
                fp += 1
            elif expected == binding.entity_id:
                tp += 1
            else:
                fp += 1
                fn += 1
        for token_index in gold:
            if token_index not in seen:
                fn += 1
    return EvalMetrics.from_counts(tp=tp, fp=fp, fn=fn)
