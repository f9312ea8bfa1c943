"""Entity name inventory with fuzzy surface lookup.

The gazetteer is a flat JSONL file of named entities (movies, bands,
teams, ...), each with a canonical name, optional alternative names, a
type from the closed type inventory, a popularity count and a topic.
Lookup is typo tolerant: candidate surfaces are pulled through a
character-trigram inverted index, then scored with a blend of trigram
overlap and normalized edit distance.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from pathlib import Path

from .dataio import DataFileError, data_path, read_jsonl
from .types import ENTITY_TYPES, TOPIC_SET, TYPE_TO_TOPIC, is_qid, normalize_surface

LOG = logging.getLogger(__name__)

DEFAULT_GAZETTEER = "gazetteer/gazetteer.jsonl"


class GazetteerError(ValueError):
    """Raised for structural problems with the entity inventory."""


@dataclass(frozen=True)
class GazetteerRecord:
    """One known entity."""

    entity_id: str
    canonical_name: str
    entity_type: str
    popularity: int
    topic: str
    alt_names: tuple[str, ...] = ()

    def surfaces(self) -> tuple[str, ...]:
        return (self.canonical_name, *self.alt_names)


def trigrams(text: str) -> frozenset[str]:
    """Character trigrams of a normalized string.

    Strings shorter than three characters contribute themselves as a
    single gram so they still index and compare.
    """
    norm = normalize_surface(text)
    if len(norm) < 3:
        return frozenset((norm,)) if norm else frozenset()
    return frozenset(norm[i : i + 3] for i in range(len(norm) - 2))


def osa_distance(a: str, b: str) -> int:
    """Edit distance counting insert, delete, substitute and adjacent
    transposition (each cost 1, no substring edited twice)."""
    if a == b:
        return 0
    la, lb = len(a), len(b)
    if la == 0 or lb == 0:
        return la or lb
    prev2: list[int] = []
    prev = list(range(lb + 1))
    for i in range(1, la + 1):
        row = [i] + [0] * lb
        for j in range(1, lb + 1):
            cost = 0 if a[i - 1] == b[j - 1] else 1
            row[j] = min(prev[j] + 1, row[j - 1] + 1, prev[j - 1] + cost)
            if (
                i > 1
                and j > 1
                and a[i - 1] == b[j - 2]
                and a[i - 2] == b[j - 1]
            ):
                row[j] = min(row[j], prev2[j - 2] + 1)
        prev2, prev = prev, row
    return prev[lb]


def surface_similarity(a: str, b: str) -> float:
    """Mean of trigram Jaccard and normalized edit similarity, both
    computed on normalized strings. Result is in [0, 1]."""
    na, nb = normalize_surface(a), normalize_surface(b)
    if not na and not nb:
        return 1.0
    if not na or not nb:
        return 0.0
    ta, tb = trigrams(na), trigrams(nb)
    union = len(ta | tb)
    jaccard = len(ta & tb) / union if union else 0.0
    edit = 1.0 - osa_distance(na, nb) / max(len(na), len(nb))
    return (jaccard + edit) / 2.0


class Gazetteer:
    """In-memory entity inventory with exact and fuzzy lookup.

    Immutable after construction, so one instance is shared read-only
    by every session.
    """

    def __init__(self, records: list[GazetteerRecord]):
        if not records:
            raise GazetteerError("empty_gazetteer")
        self._records = list(records)
        self._by_id: dict[str, GazetteerRecord] = {}
        # normalized surface -> records carrying it (canonical or alt)
        self.surface_map: dict[str, tuple[GazetteerRecord, ...]] = {}
        self._gram_index: dict[str, list[str]] = {}
        self._gram_counts: dict[str, int] = {}  # surface -> its gram count
        self.max_surface_tokens = 0
        for record in self._records:
            if record.entity_id in self._by_id:
                raise GazetteerError(f"duplicate entity id {record.entity_id}")
            self._by_id[record.entity_id] = record
            for surface in record.surfaces():
                norm = normalize_surface(surface)
                if not norm:
                    continue
                held = self.surface_map.get(norm, ())
                if record not in held:
                    self.surface_map[norm] = held + (record,)
                self.max_surface_tokens = max(
                    self.max_surface_tokens, len(norm.split())
                )
                if norm not in self._gram_counts:
                    grams = trigrams(norm)
                    self._gram_counts[norm] = len(grams)
                    for gram in grams:
                        self._gram_index.setdefault(gram, []).append(norm)

    def __len__(self) -> int:
        return len(self._records)

    def __iter__(self):
        return iter(self._records)

    def get(self, entity_id: str) -> GazetteerRecord | None:
        return self._by_id.get(entity_id)

    def exact(self, surface: str) -> tuple[GazetteerRecord, ...]:
        """Records whose canonical or alternative name equals the
        surface after normalization."""
        return self.surface_map.get(normalize_surface(surface), ())

    def search(
        self,
        surface: str,
        min_similarity: float,
        limit: int,
    ) -> list[tuple[GazetteerRecord, float]]:
        """Fuzzy lookup.

        Returns up to ``limit`` (record, similarity) pairs with
        similarity >= ``min_similarity``, best first. Similarity per
        record is the max over its surfaces. Ties fall back to higher
        popularity, then lexicographic id, so the ordering is total
        and reproducible.
        """
        query = normalize_surface(surface)
        if not query:
            return []
        query_grams = trigrams(query)
        overlap: dict[str, int] = {}
        for gram in query_grams:
            for cand in self._gram_index.get(gram, ()):
                overlap[cand] = overlap.get(cand, 0) + 1
        best: dict[str, tuple[float, GazetteerRecord]] = {}
        qg = len(query_grams)
        qlen = len(query)
        for cand_surface, shared in overlap.items():
            union = qg + self._gram_counts[cand_surface] - shared
            jaccard = shared / union if union else 0.0
            # Cheap upper bound on the blend: edit similarity can never
            # beat 1 - length_difference / longer_length. Skip the DP
            # for candidates that cannot reach the floor.
            longer = max(qlen, len(cand_surface))
            edit_cap = 1.0 - abs(qlen - len(cand_surface)) / longer
            if (jaccard + edit_cap) / 2.0 < min_similarity:
                continue
            edit = 1.0 - osa_distance(query, cand_surface) / longer
            score = (jaccard + edit) / 2.0
            if score < min_similarity:
                continue
            for record in self.surface_map[cand_surface]:
                prior = best.get(record.entity_id)
                if prior is None or score > prior[0]:
                    best[record.entity_id] = (score, record)
        ranked = sorted(
            best.values(),
            key=lambda pair: (-pair[0], -pair[1].popularity, pair[1].entity_id),
        )
        return [(record, score) for score, record in ranked[:limit]]

    @classmethod
    def load(cls, path: Path | str | None = None) -> "Gazetteer":
        """Read and validate a gazetteer file."""
        file_path = Path(path) if path is not None else data_path(DEFAULT_GAZETTEER)
        records: list[GazetteerRecord] = []
        seen: set[str] = set()
        for line_no, row in read_jsonl(file_path):
            entity_id = row.get("id", "")
            if not is_qid(entity_id):
                raise DataFileError(file_path, line_no, f"bad entity id {entity_id!r}")
            if entity_id in seen:
                raise DataFileError(file_path, line_no, f"duplicate id {entity_id}")
            seen.add(entity_id)
            canonical = str(row.get("canonical", "")).strip()
            if not canonical:
                raise DataFileError(file_path, line_no, "missing canonical name")
            entity_type = row.get("type", "")
            if entity_type not in ENTITY_TYPES:
                raise DataFileError(
                    file_path, line_no, f"unknown entity type {entity_type!r}"
                )
            if "popularity" in row:
                popularity = row["popularity"]
                if not isinstance(popularity, int) or popularity < 0:
                    raise DataFileError(
                        file_path, line_no, "popularity must be a non-negative integer"
                    )
            else:
                # Tolerated but worth surfacing: the record can never
                # win a popularity tie.
                LOG.warning("%s:%d: no popularity for %s", file_path, line_no, entity_id)
                popularity = 0
            topic = row.get("topic") or TYPE_TO_TOPIC[entity_type]
            if topic not in TOPIC_SET:
                raise DataFileError(file_path, line_no, f"unknown topic {topic!r}")
            alts = tuple(str(a) for a in row.get("alts", []))
            records.append(
                GazetteerRecord(
                    entity_id=entity_id,
                    canonical_name=canonical,
                    entity_type=entity_type,
                    popularity=popularity,
                    topic=topic,
                    alt_names=alts,
                )
            )
        LOG.info("loaded %d gazetteer records from %s", len(records), file_path)
        return cls(records)


_DEFAULT: Gazetteer | None = None


def default_gazetteer() -> Gazetteer:
    """The bundled gazetteer, loaded once per process."""
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Gazetteer.load()
    return _DEFAULT
