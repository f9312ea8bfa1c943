"""Synthetic labeled data for the entity linker and the coreference
rules.

Entity-mention instances come from per-type templates: a system prompt
that elicits the type, and a user reply with one slot filled by a
gazetteer name. Entities are split by popularity rank so train and
test never share an entity. The coreference set follows the same
recipe with a pronoun in the user reply whose gold antecedent is the
entity the system prompt named.
"""

from __future__ import annotations

import logging
import random
import re
import string
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path

import yaml

from .coref import scan_current_entities
from .dataio import data_path, read_jsonl, write_jsonl
from .discourse import DiscourseState, EntityRecord
from .gazetteer import Gazetteer, GazetteerRecord
from .linking import LinkContext, is_distinctive
from .metrics import EvalMetrics
from .types import ENTITY_TYPES, normalize_surface

LOG = logging.getLogger(__name__)

DEFAULT_TEMPLATES = "synth/templates.yaml"

_SLOT_RE = re.compile(r"\[([a-z_]+)\]")


class SynthDataError(ValueError):
    """Raised for unusable templates or impossible generation requests."""


@dataclass(frozen=True)
class SynthTemplate:
    """One user-reply template plus the system prompts that set it up."""

    context_turns: tuple[str, ...]
    user_template: str

    def __post_init__(self) -> None:
        slots = _SLOT_RE.findall(self.user_template)
        if len(slots) != 1:
            raise SynthDataError(
                f"template needs exactly one slot, got {len(slots)}: "
                f"{self.user_template!r}"
            )
        if slots[0] not in ENTITY_TYPES:
            raise SynthDataError(f"unknown slot type [{slots[0]}]")
        if not self.context_turns:
            raise SynthDataError("template has no context turns")
        marker = f"[{slots[0]}]"
        at = self.user_template.index(marker)
        before = self.user_template[:at]
        after = self.user_template[at + len(marker):]
        if (before and not before.endswith(" ")) or (
            after and not after.startswith((" ", "?", ".", "!", ","))
        ):
            raise SynthDataError(f"slot not token-aligned: {self.user_template!r}")

    @property
    def slot_type(self) -> str:
        return _SLOT_RE.search(self.user_template).group(1)

    def fill(self, surface: str) -> tuple[str, tuple[int, int]]:
        """Substitute the slot; returns the utterance and the gold
        token span in the normalized tokenization."""
        marker = f"[{self.slot_type}]"
        at = self.user_template.index(marker)
        prefix = self.user_template[:at]
        utterance = self.user_template.replace(marker, surface)
        start = len(normalize_surface(prefix).split())
        width = len(normalize_surface(surface).split())
        return utterance, (start, start + width)


@lru_cache(maxsize=None)
def _raw_template_file(path_key: str) -> dict:
    with open(path_key, encoding="utf-8") as handle:
        return yaml.safe_load(handle)


def load_templates(path: str | Path | None = None) -> dict[str, list[SynthTemplate]]:
    """Bundled (or given) template file -> type -> templates."""
    file_path = Path(path) if path is not None else data_path(DEFAULT_TEMPLATES)
    raw = _raw_template_file(str(file_path))
    table: dict[str, list[SynthTemplate]] = {}
    for key, block in raw.items():
        if key == "openers":
            continue
        if key not in ENTITY_TYPES:
            raise SynthDataError(f"unknown entity type in {file_path.name}: {key!r}")
        contexts = tuple(str(c) for c in block.get("contexts", ()))
        table[key] = [
            SynthTemplate(context_turns=contexts, user_template=str(u))
            for u in block.get("users", ())
        ]
    return table


def load_openers(path: str | Path | None = None) -> tuple[str, ...]:
    file_path = Path(path) if path is not None else data_path(DEFAULT_TEMPLATES)
    return tuple(str(o) for o in _raw_template_file(str(file_path)).get("openers", ()))


@dataclass(frozen=True)
class SynthDataset:
    """Train/test rows with disjoint entity inventories."""

    train: tuple[dict, ...]
    test: tuple[dict, ...]

    def entity_ids(self, split: str) -> set[str]:
        rows = self.train if split == "train" else self.test
        return {row["gold_id"] for row in rows}


def _ranked_entities(gazetteer: Gazetteer, entity_type: str) -> list[GazetteerRecord]:
    pool = [r for r in gazetteer if r.entity_type == entity_type]
    pool.sort(key=lambda r: (-r.popularity, r.entity_id))
    return pool


def _make_row(
    template: SynthTemplate,
    record: GazetteerRecord,
    openers: tuple[str, ...],
    rng: random.Random,
) -> dict:
    surface = rng.choice(record.surfaces())
    utterance, span = template.fill(surface)
    context = [rng.choice(template.context_turns)]
    if openers and rng.random() < 0.3:
        context.insert(0, rng.choice(openers))
    return {
        "context": context,
        "utterance": utterance,
        "gold_span": list(span),
        "gold_id": record.entity_id,
    }


def generate_synthetic_data(
    templates: dict[str, list[SynthTemplate]],
    gazetteer: Gazetteer,
    n_per_type: int,
    popularity_cutoff: int,
    seed: int,
    types: list[str] | None = None,
    openers: tuple[str, ...] = (),
) -> SynthDataset:
    """Build a labeled mention dataset.

    Entities of each type are ranked by popularity; ranks up to
    ``popularity_cutoff`` feed the train split and the remainder are
    held out for test (a type whose inventory fits inside the cutoff
    gets no test rows). Test size is a tenth of ``n_per_type``. The
    same seed always yields the identical dataset.
    """
    if n_per_type < 0:
        raise SynthDataError("n_per_type must be non-negative")
    if popularity_cutoff < 1:
        raise SynthDataError("popularity_cutoff must be at least 1")
    wanted = sorted(types) if types is not None else sorted(templates)
    if not wanted:
        raise SynthDataError("no types to generate")
    rng = random.Random(seed)
    train: list[dict] = []
    test: list[dict] = []
    for entity_type in wanted:
        type_templates = templates.get(entity_type)
        if not type_templates:
            raise SynthDataError(f"no templates for type {entity_type!r}")
        ranked = _ranked_entities(gazetteer, entity_type)
        if not ranked:
            raise SynthDataError(f"no entities of type {entity_type!r}")
        train_pool = ranked[:popularity_cutoff]
        test_pool = ranked[popularity_cutoff:]
        if not test_pool:
            LOG.warning(
                "type %s has %d entities, all inside the cutoff; no test rows",
                entity_type, len(ranked),
            )
        for _ in range(n_per_type):
            train.append(
                _make_row(rng.choice(type_templates), rng.choice(train_pool),
                          openers, rng)
            )
        n_test = n_per_type // 10 if test_pool else 0
        for _ in range(n_test):
            test.append(
                _make_row(rng.choice(type_templates), rng.choice(test_pool),
                          openers, rng)
            )
    return SynthDataset(train=tuple(train), test=tuple(test))


# ---------------------------------------------------------------------------
# typo injection

_LETTERS = string.ascii_lowercase


def _typo(token: str, rng: random.Random) -> str:
    """One character-level edit, guaranteed to change the token."""
    ops = ["substitute", "transpose", "delete", "insert"]
    while True:
        op = rng.choice(ops)
        if op == "substitute":
            i = rng.randrange(len(token))
            alternatives = [c for c in _LETTERS if c != token[i]]
            return token[:i] + rng.choice(alternatives) + token[i + 1:]
        if op == "transpose" and len(token) >= 2:
            i = rng.randrange(len(token) - 1)
            if token[i] != token[i + 1]:
                return token[:i] + token[i + 1] + token[i] + token[i + 2:]
        if op == "delete" and len(token) >= 2:
            i = rng.randrange(len(token))
            return token[:i] + token[i + 1:]
        if op == "insert":
            i = rng.randrange(len(token) + 1)
            return token[:i] + rng.choice(_LETTERS) + token[i:]


def with_typos(rows: tuple[dict, ...] | list[dict], seed: int) -> list[dict]:
    """Copy of the rows with one typo inside each gold span.

    Utterances come back in normalized tokenization so the gold token
    offsets still hold.
    """
    rng = random.Random(seed)
    out: list[dict] = []
    for row in rows:
        tokens = normalize_surface(row["utterance"]).split()
        start, end = row["gold_span"]
        candidates = [i for i in range(start, min(end, len(tokens)))
                      if len(tokens[i]) >= 3]
        if not candidates:
            candidates = list(range(start, min(end, len(tokens))))
        target = rng.choice(candidates)
        tokens = list(tokens)
        tokens[target] = _typo(tokens[target], rng)
        out.append({**row, "utterance": " ".join(tokens)})
    return out


# ---------------------------------------------------------------------------
# evaluation harness

def unique_mention_rows(rows, gazetteer) -> list[dict]:
    """Rows whose gold surface has exactly one exact gazetteer match.

    Mentions that share a name with another entity (The Office US and
    UK, the Uncharted movie and game) are a popularity and context
    judgment call, so recall guarantees are only meaningful on the
    unambiguous remainder.
    """
    kept = []
    for row in rows:
        tokens = normalize_surface(row["utterance"]).split()
        start, end = row["gold_span"]
        surface = " ".join(tokens[start:end])
        if len(gazetteer.exact(surface)) == 1:
            kept.append(row)
    return kept


def evaluate_nel(system, rows) -> EvalMetrics:
    """Score a linker on labeled rows.

    ``system(utterance, context, discourse)`` must return linked
    mentions with token spans. A prediction is a tp when its id equals
    the row's gold id and the spans overlap; every other prediction is
    a fp; a gold with no matching prediction is a fn.
    """
    rows = list(rows)
    if not rows:
        raise SynthDataError("empty dataset")
    tp = fp = fn = 0
    for row in rows:
        context = LinkContext(
            prior_system_utterance=row["context"][-1] if row["context"] else None
        )
        predictions = system(row["utterance"], context, DiscourseState())
        start, end = row["gold_span"]
        matched = False
        for mention in predictions:
            overlaps = mention.span.start_token < end and start < mention.span.end_token
            if not matched and overlaps and mention.entity_id == row["gold_id"]:
                tp += 1
                matched = True
            else:
                fp += 1
        if not matched:
            fn += 1
    return EvalMetrics.from_counts(tp=tp, fp=fp, fn=fn)


def save_dataset(path: str | Path, rows) -> None:
    write_jsonl(path, list(rows))


def load_dataset(path: str | Path) -> list[dict]:
    return [row for _, row in read_jsonl(path)]


# ---------------------------------------------------------------------------
# coreference instances

# type -> (system prompt with {name}, user reply with {pronoun},
# pronoun choices). Prompts keep a cue word so the context scan can
# type-check the name.
_COREF_SCHEMES: dict[str, tuple[str, str, tuple[str, ...]]] = {
    "musician": (
        "Do you know the songs by {name}? I really like the early ones.",
        "yes i love {pronoun}",
        ("him", "her"),
    ),
    "actor": (
        "{name} has been in some great movies. Are you a fan?",
        "{pronoun} is so talented",
        ("he", "she"),
    ),
    "director": (
        "I just rewatched a movie directed by {name}.",
        "{pronoun} makes great movies",
        ("he", "she"),
    ),
    "athlete": (
        "{name} had an amazing season. Do you follow sports?",
        "i think {pronoun} is incredible",
        ("he", "she"),
    ),
    "author": (
        "Have you read anything by the author {name}?",
        "i love {pronoun} books",
        ("his", "her"),
    ),
    "band": (
        "Have you listened to the band {name} lately?",
        "yes i love {pronoun}",
        ("them",),
    ),
    "sports_team": (
        "The {name} played last night. Do you watch that team?",
        "{pronoun} are my favorite team",
        ("they",),
    ),
    "movie": (
        "Have you seen the movie {name}?",
        "{pronoun} is one of my favorites",
        ("it",),
    ),
    "tv_show": (
        "{name} is a great show. Why do you like it?",
        "{pronoun} is really funny",
        ("it",),
    ),
    "song": (
        "I really like the song {name}. Do you know it?",
        "i love {pronoun} so much",
        ("it",),
    ),
    "book": (
        "The book {name} is a classic. Have you read it?",
        "{pronoun} is my favorite book",
        ("it",),
    ),
    "board_game": (
        "Have you ever played the board game {name}?",
        "{pronoun} is so much fun",
        ("it",),
    ),
    "video_game": (
        "I have been playing the game {name} this week. Do you play?",
        "{pronoun} is a great game",
        ("it",),
    ),
}

# user replies where "it" is non-referential; gold is empty.
_PLEONASTIC_REPLIES = (
    "it is really hot today where i live",
    "it looks like it might snow tonight",
    "it takes me an hour to get home",
    "what time is it right now",
)


def _unambiguous(gazetteer: Gazetteer, record: GazetteerRecord) -> bool:
    """Canonical surface maps back to exactly this record, and the
    exact scan would accept it (so the context reconstruction in
    :func:`coref_instances_from_rows` cannot miss it)."""
    norm = normalize_surface(record.canonical_name)
    held = gazetteer.surface_map.get(norm, ())
    if len(held) != 1 or held[0].entity_id != record.entity_id:
        return False
    return is_distinctive(norm.split())


def _coref_pool(gazetteer: Gazetteer, entity_type: str, top: int = 40):
    pool = [r for r in _ranked_entities(gazetteer, entity_type)[:top]
            if _unambiguous(gazetteer, r)]
    if not pool:
        raise SynthDataError(f"no unambiguous entities of type {entity_type!r}")
    return pool


def _binding_row(context, reply_template, pronoun, gold_id):
    utterance = reply_template.format(pronoun=pronoun)
    prefix = reply_template[: reply_template.index("{pronoun}")]
    token_index = len(normalize_surface(prefix).split())
    return {
        "context": list(context),
        "utterance": utterance,
        "bindings": [
            {"pronoun": normalize_surface(pronoun), "token_index": token_index,
             "gold_id": gold_id}
        ],
    }


def generate_coref_dataset(gazetteer: Gazetteer, n: int = 60, seed: int = 23) -> list[dict]:
    """Labeled pronoun-resolution rows.

    Most rows are single-antecedent (the prompt names an entity, the
    reply refers back with a type-matching pronoun); every sixth row
    alternates between a two-entity prompt pair and a pleonastic
    negative with empty gold.
    """
    if n < 1:
        raise SynthDataError("n must be positive")
    rng = random.Random(seed)
    types = sorted(_COREF_SCHEMES)
    pools = {t: _coref_pool(gazetteer, t) for t in types}
    rows: list[dict] = []
    specials = 0
    while len(rows) < n:
        i = len(rows)
        if i % 6 == 5:
            specials += 1
            if specials % 2 == 1:
                # he + it against a (movie, actor) prompt pair
                movie = rng.choice(pools["movie"])
                actor = rng.choice(pools["actor"])
                context = [
                    _COREF_SCHEMES["movie"][0].format(name=movie.canonical_name),
                    _COREF_SCHEMES["actor"][0].format(name=actor.canonical_name),
                ]
                rows.append({
                    "context": context,
                    "utterance": "he was great in it",
                    "bindings": [
                        {"pronoun": "he", "token_index": 0,
                         "gold_id": actor.entity_id},
                        {"pronoun": "it", "token_index": 4,
                         "gold_id": movie.entity_id},
                    ],
                })
            else:
                show = rng.choice(pools["tv_show"])
                context = [
                    _COREF_SCHEMES["tv_show"][0].format(name=show.canonical_name)
                ]
                rows.append({
                    "context": context,
                    "utterance": rng.choice(_PLEONASTIC_REPLIES),
                    "bindings": [],
                })
            continue
        entity_type = types[i % len(types)]
        prompt, reply, pronouns = _COREF_SCHEMES[entity_type]
        record = rng.choice(pools[entity_type])
        context = [prompt.format(name=record.canonical_name)]
        rows.append(
            _binding_row(context, reply, rng.choice(pronouns), record.entity_id)
        )
    return rows


def coref_instances_from_rows(rows, gazetteer: Gazetteer) -> list[dict]:
    """Rebuild resolver inputs from file rows.

    Context turns are system-side; their entities are recovered by the
    same exact scan the engine trusts for its own output, then recorded
    as system mentions turn by turn.
    """
    instances = []
    for row in rows:
        state = DiscourseState()
        for turn_index, turn in enumerate(row["context"]):
            for found in scan_current_entities(turn, gazetteer, turn_index):
                record = EntityRecord(
                    surface_form=found.surface_form,
                    entity_id=found.entity_id,
                    entity_type=found.entity_type,
                    source="system",
                    turn_index=turn_index,
                )
                state = state.record_entity(record)
        turn_index = len(row["context"])
        instances.append({
            "utterance": row["utterance"],
            "discourse": state,
            "turn_index": turn_index,
            "gold": {b["token_index"]: b["gold_id"] for b in row["bindings"]},
            "current_turn_entities": scan_current_entities(
                row["utterance"], gazetteer, turn_index
            ),
        })
    return instances
