"""Mention detection and entity linking against the gazetteer.

The pipeline is detect -> retrieve -> rank. Detection favours the
longest exact gazetteer match, falls back to fuzzy lookup over content
token runs, and pre-links any span that repeats an entity the system
itself introduced (those bypass ranking entirely, per the discourse
model). Ranking blends string similarity, popularity normalized within
the candidate set, and a context score.

Everything here is pure: no call mutates the gazetteer, the discourse
state or the candidates it was handed.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from functools import lru_cache

from .config import EngineConfig
from .dataio import data_path, read_wordlist
from .discourse import DiscourseState
from .gazetteer import Gazetteer, GazetteerRecord
from .nlu import stopwords
from .types import normalize_surface

LOG = logging.getLogger(__name__)


@dataclass(frozen=True)
class MentionSpan:
    """A candidate entity mention, as token offsets into the
    normalized utterance ([start_token, end_token))."""

    start_token: int
    end_token: int
    surface: str

    def __post_init__(self) -> None:
        if not (0 <= self.start_token < self.end_token):
            raise ValueError(f"bad span [{self.start_token}, {self.end_token})")

    def overlaps(self, other: "MentionSpan") -> bool:
        return self.start_token < other.end_token and other.start_token < self.end_token


@dataclass(frozen=True)
class EntityCandidate:
    """One scored link hypothesis for a mention."""

    record: GazetteerRecord
    string_similarity: float
    popularity_score: float = 0.0
    context_score: float = 0.0
    total: float = 0.0


@dataclass(frozen=True)
class LinkedMention:
    """Final linking decision for one span."""

    span: MentionSpan
    entity_id: str
    entity_type: str
    # "gazetteer" for ranked links, "discourse" for pre-linked repeats
    # of system-introduced entities.
    source: str = "gazetteer"
    candidate: EntityCandidate | None = None


@dataclass(frozen=True)
class LinkContext:
    """What the surrounding dialogue contributes to linking decisions."""

    prior_system_utterance: str | None = None
    expected_types: frozenset[str] = frozenset()
    current_topic: str | None = None


EMPTY_CONTEXT = LinkContext()


# Words in the running conversation that cue an entity type. Looked up
# per token of the user utterance and of the last system prompt.
CUE_TYPES: dict[str, frozenset[str]] = {
    "watch": frozenset({"movie", "tv_show", "sports_team"}),
    "watching": frozenset({"movie", "tv_show", "sports_team"}),
    "watched": frozenset({"movie", "tv_show", "sports_team"}),
    "seen": frozenset({"movie", "tv_show"}),
    "movie": frozenset({"movie"}),
    "movies": frozenset({"movie"}),
    "film": frozenset({"movie"}),
    "films": frozenset({"movie"}),
    "show": frozenset({"tv_show"}),
    "shows": frozenset({"tv_show"}),
    "series": frozenset({"tv_show", "book"}),
    "sitcom": frozenset({"tv_show"}),
    "episode": frozenset({"tv_show"}),
    "episodes": frozenset({"tv_show"}),
    "listen": frozenset({"song", "band", "musician"}),
    "listening": frozenset({"song", "band", "musician"}),
    "hear": frozenset({"song"}),
    "heard": frozenset({"song", "band", "musician"}),
    "song": frozenset({"song"}),
    "songs": frozenset({"song"}),
    "track": frozenset({"song"}),
    "tune": frozenset({"song"}),
    "sing": frozenset({"song"}),
    "singing": frozenset({"song"}),
    "band": frozenset({"band"}),
    "bands": frozenset({"band"}),
    "singer": frozenset({"musician"}),
    "musician": frozenset({"musician"}),
    "artist": frozenset({"musician", "band"}),
    "rapper": frozenset({"musician"}),
    "album": frozenset({"band", "musician", "song"}),
    "albums": frozenset({"band", "musician"}),
    "concert": frozenset({"band", "musician"}),
    "play": frozenset({"video_game", "board_game", "song", "sports_team"}),
    "playing": frozenset({"video_game", "board_game", "song", "sports_team"}),
    "played": frozenset({"video_game", "board_game", "song", "sports_team"}),
    "game": frozenset({"video_game", "board_game"}),
    "games": frozenset({"video_game", "board_game"}),
    "gaming": frozenset({"video_game"}),
    "team": frozenset({"sports_team"}),
    "teams": frozenset({"sports_team"}),
    "fan": frozenset({"sports_team", "band", "musician"}),
    "cheer": frozenset({"sports_team"}),
    "compete": frozenset({"sports_team", "athlete"}),
    "player": frozenset({"athlete"}),
    "athlete": frozenset({"athlete"}),
    "sport": frozenset({"sports_team", "athlete"}),
    "sports": frozenset({"sports_team", "athlete"}),
    "read": frozenset({"book", "author"}),
    "reading": frozenset({"book", "author"}),
    "book": frozenset({"book"}),
    "books": frozenset({"book"}),
    "novel": frozenset({"book"}),
    "novels": frozenset({"book"}),
    "author": frozenset({"author"}),
    "writer": frozenset({"author"}),
    "wrote": frozenset({"author"}),
    "actor": frozenset({"actor"}),
    "actress": frozenset({"actor"}),
    "acting": frozenset({"actor"}),
    "performer": frozenset({"actor", "musician"}),
    "performance": frozenset({"actor", "musician"}),
    "starring": frozenset({"actor"}),
    "starred": frozenset({"actor"}),
    "director": frozenset({"director"}),
    "directed": frozenset({"director"}),
    "writes": frozenset({"author"}),
    "writing": frozenset({"author"}),
    "plays": frozenset({"athlete", "sports_team", "video_game", "board_game"}),
    "root": frozenset({"sports_team"}),
    "rooting": frozenset({"sports_team"}),
}


@lru_cache(maxsize=None)
def common_words() -> frozenset[str]:
    return frozenset(read_wordlist(data_path("nlu/common_words.txt")))


def cue_types_for(text: str) -> frozenset[str]:
    """Entity types cued by wording in the given text."""
    cued: set[str] = set()
    for token in normalize_surface(text).split():
        cued.update(CUE_TYPES.get(token, ()))
    return frozenset(cued)


def _active_cues(utterance: str, context: LinkContext) -> frozenset[str]:
    cued = set(context.expected_types)
    cued.update(cue_types_for(utterance))
    if context.prior_system_utterance:
        cued.update(cue_types_for(context.prior_system_utterance))
    return frozenset(cued)


def is_distinctive(tokens: list[str]) -> bool:
    """A span stands on its own if any token is neither a stopword nor
    an everyday word."""
    return any(t not in stopwords() and t not in common_words() for t in tokens)


def _gate(
    span_tokens: list[str],
    record_types: set[str],
    record_topics: set[str],
    cues: frozenset[str],
    current_topic: str | None,
) -> bool:
    if is_distinctive(span_tokens):
        return True
    if cues & record_types:
        return True
    if current_topic is not None and current_topic in record_topics:
        return True
    return False


def _best_fuzzy_span(
    tokens: list[str],
    taken: list[bool],
    run_start: int,
    run_end: int,
    span_cap: int,
    cues: frozenset[str],
    context: LinkContext,
    gazetteer: Gazetteer,
    cfg: EngineConfig,
) -> tuple[int, int] | None:
    """Highest-similarity unclaimed span in the run that clears its
    detection floor, or None. Longer spans win similarity ties."""
    best: tuple[float, int, int, int] | None = None
    for a in range(run_start, run_end):
        if taken[a] or tokens[a] in stopwords():
            continue
        for b in range(a + 1, min(a + span_cap, run_end) + 1):
            if any(taken[a:b]):
                break
            if tokens[b - 1] in stopwords():
                continue
            surface = " ".join(tokens[a:b])
            for record, sim in gazetteer.search(surface, cfg.sim_threshold, 5):
                if sim >= 1.0:
                    continue  # exact matches were pass 2's call
                cued = record.entity_type in cues or (
                    context.current_topic is not None
                    and record.topic == context.current_topic
                )
                floor = cfg.cued_detect_threshold if cued else cfg.detect_threshold
                if sim < floor:
                    continue
                if not cued and not is_distinctive(tokens[a:b]):
                    continue
                key = (sim, b - a, -a)
                if best is None or key > (best[0], best[2] - best[1], -best[1]):
                    best = (sim, a, b)
                break  # hits are similarity-sorted; first qualifier is best
    if best is None:
        return None
    return best[1], best[2]


def detect_mentions(
    utterance: str,
    context: LinkContext,
    discourse: DiscourseState,
    gazetteer: Gazetteer,
    config: EngineConfig | None = None,
) -> list[tuple[MentionSpan, str | None]]:
    """Find mention spans; the second element is a pre-linked id for
    repeats of system-introduced entities, else None.

    Spans never overlap and come back in utterance order. Coreference
    must already have run: pronouns are stopwords here and will not
    produce spans.
    """
    cfg = config or EngineConfig()
    tokens = normalize_surface(utterance).split()
    if not tokens:
        return []
    cues = _active_cues(utterance, context)
    taken = [False] * len(tokens)
    found: list[tuple[MentionSpan, str | None]] = []

    def claim(start: int, end: int, entity_id: str | None) -> None:
        for k in range(start, end):
            taken[k] = True
        span = MentionSpan(start, end, " ".join(tokens[start:end]))
        found.append((span, entity_id))

    # Pass 1: re-mentions of system-introduced entities carry their
    # stored ids and skip the ranker.
    for record in reversed(discourse.entities):
        if record.source != "system":
            continue
        surfaces = {normalize_surface(record.surface_form)}
        gaz = gazetteer.get(record.entity_id)
        if gaz is not None:
            surfaces.update(normalize_surface(s) for s in gaz.surfaces())
        for surface in sorted(surfaces, key=len, reverse=True):
            s_tokens = surface.split()
            if not s_tokens:
                continue
            for start in range(0, len(tokens) - len(s_tokens) + 1):
                end = start + len(s_tokens)
                if any(taken[start:end]):
                    continue
                if tokens[start:end] == s_tokens:
                    claim(start, end, record.entity_id)

    # Pass 2: longest exact gazetteer match, left to right.
    max_len = min(gazetteer.max_surface_tokens, len(tokens))
    i = 0
    while i < len(tokens):
        if taken[i]:
            i += 1
            continue
        matched = False
        for length in range(min(max_len, len(tokens) - i), 0, -1):
            if any(taken[i : i + length]):
                continue
            surface = " ".join(tokens[i : i + length])
            records = gazetteer.surface_map.get(surface)
            if not records:
                continue
            if _gate(
                tokens[i : i + length],
                {r.entity_type for r in records},
                {r.topic for r in records},
                cues,
                context.current_topic,
            ):
                claim(i, i + length, None)
                i += length
                matched = True
            break
        if not matched:
            i += 1

    # Pass 3: fuzzy spans over leftover token runs, for typos. A cue
    # word ends a run (it describes a type, it is not part of a name);
    # stopwords stay inside so "kings of leon" stays searchable, but a
    # span must contain at least one content token.
    runs: list[tuple[int, int]] = []
    start = None
    for idx, token in enumerate(tokens):
        free = not taken[idx] and token not in CUE_TYPES
        if free and start is None:
            start = idx
        elif not free and start is not None:
            runs.append((start, idx))
            start = None
    if start is not None:
        runs.append((start, len(tokens)))
    span_cap = min(max_len, 6)
    for run_start, run_end in runs:
        while True:
            best = _best_fuzzy_span(
                tokens, taken, run_start, run_end, span_cap, cues, context,
                gazetteer, cfg,
            )
            if best is None:
                break
            claim(best[0], best[1], None)

    found.sort(key=lambda pair: pair[0].start_token)
    return found


def retrieve_candidates(
    gazetteer: Gazetteer,
    surface: str,
    max_n: int = 10,
    min_similarity: float = 0.45,
) -> list[EntityCandidate]:
    """Fuzzy candidate pull; only string_similarity is filled in."""
    return [
        EntityCandidate(record=record, string_similarity=sim)
        for record, sim in gazetteer.search(surface, min_similarity, max_n)
    ]


def rank_candidates(
    mention: MentionSpan,
    candidates: list[EntityCandidate],
    context: LinkContext,
    discourse: DiscourseState,
    config: EngineConfig | None = None,
) -> EntityCandidate | None:
    """Score candidates and return the winner, or None if nothing
    clears the link threshold.

    total = w_sim * similarity + w_pop * popularity + w_ctx * context,
    with popularity normalized by the max within this candidate set.
    Ties break toward higher raw popularity, then lexicographic id.
    """
    cfg = config or EngineConfig()
    if not candidates:
        return None
    # An exact surface match caps the pool: popularity and context
    # arbitrate among same-name entities, they never promote a merely
    # similar name over a verbatim one.
    if any(c.string_similarity >= 1.0 for c in candidates):
        candidates = [c for c in candidates if c.string_similarity >= 1.0]
    cues = _active_cues(mention.surface, context)
    topic = context.current_topic or discourse.current_topic()
    max_pop = max(c.record.popularity for c in candidates)
    weights = cfg.link_weights
    scored: list[EntityCandidate] = []
    for cand in candidates:
        pop = cand.record.popularity / max_pop if max_pop > 0 else 0.0
        ctx = 1.0 if (
            (topic is not None and cand.record.topic == topic)
            or cand.record.entity_type in cues
        ) else 0.0
        total = (
            weights["similarity"] * cand.string_similarity
            + weights["popularity"] * pop
            + weights["context"] * ctx
        )
        scored.append(
            replace(cand, popularity_score=pop, context_score=ctx, total=total)
        )
    scored.sort(
        key=lambda c: (-c.total, -c.record.popularity, c.record.entity_id)
    )
    winner = scored[0]
    if winner.total < cfg.link_threshold:
        return None
    return winner


def link_utterance(
    utterance: str,
    context: LinkContext,
    discourse: DiscourseState,
    gazetteer: Gazetteer,
    config: EngineConfig | None = None,
) -> list[LinkedMention]:
    """End-to-end detect -> retrieve -> rank for one utterance."""
    cfg = config or EngineConfig()
    linked: list[LinkedMention] = []
    for span, pre_id in detect_mentions(utterance, context, discourse, gazetteer, cfg):
        if pre_id is not None:
            record = gazetteer.get(pre_id)
            entity_type = record.entity_type if record else _discourse_type(
                discourse, pre_id
            )
            linked.append(
                LinkedMention(
                    span=span,
                    entity_id=pre_id,
                    entity_type=entity_type,
                    source="discourse",
                )
            )
            continue
        candidates = retrieve_candidates(
            gazetteer, span.surface, cfg.max_candidates, cfg.sim_threshold
        )
        winner = rank_candidates(span, candidates, context, discourse, cfg)
        if winner is None:
            continue
        linked.append(
            LinkedMention(
                span=span,
                entity_id=winner.record.entity_id,
                entity_type=winner.record.entity_type,
                candidate=winner,
            )
        )
    return linked


def _discourse_type(discourse: DiscourseState, entity_id: str) -> str:
    for record in reversed(discourse.entities):
        if record.entity_id == entity_id:
            return record.entity_type
    return "other"
