"""The persistent user model: who we talked to, what they enjoyed, and
the small personal details they offered.

Records live in one JSON file per store and survive across
conversations.  Everything here is additive and forgiving: a failed
pattern simply captures nothing.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from pathlib import Path

from .config import EngineConfig
from .nlu import NluResult, stopwords
from .types import TOPIC_SET, TOPICS

SCHEMA_VERSION = 1


class UserModelError(ValueError):
    pass


@dataclass
class UserRecord:
    user_id: str
    name: str | None = None
    # topic -> [0, 1] interest estimate
    affinities: dict[str, float] = field(default_factory=dict)
    # free-form captured details, e.g. pet_name, favorite_color
    attributes: dict[str, str] = field(default_factory=dict)
    conversations: int = 0
    topics_discussed: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "user_id": self.user_id,
            "name": self.name,
            "affinities": dict(sorted(self.affinities.items())),
            "attributes": dict(sorted(self.attributes.items())),
            "conversations": self.conversations,
            "topics_discussed": list(self.topics_discussed),
        }

    @classmethod
    def from_dict(cls, raw: dict) -> "UserRecord":
        if raw.get("schema") != SCHEMA_VERSION:
            raise UserModelError(f"unsupported user record schema {raw.get('schema')!r}")
        return cls(
            user_id=raw["user_id"],
            name=raw.get("name"),
            affinities={k: float(v) for k, v in raw.get("affinities", {}).items()},
            attributes=dict(raw.get("attributes", {})),
            conversations=int(raw.get("conversations", 0)),
            topics_discussed=list(raw.get("topics_discussed", [])),
        )


# ---------------------------------------------------------------------------
# capture patterns

_NAME_PATTERNS = (
    re.compile(r"\bmy name is ([a-z]+)"),
    re.compile(r"\bcall me ([a-z]+)"),
    re.compile(r"\byou can call me ([a-z]+)"),
    re.compile(r"^i am ([a-z]+)$"),
    re.compile(r"^im ([a-z]+)$"),
    re.compile(r"^its ([a-z]+)$"),
)

# attribute key -> patterns whose first group is the value
_ATTRIBUTE_PATTERNS: dict[str, tuple[re.Pattern, ...]] = {
    "pet_name": (
        re.compile(r"\bmy (?:dog|cat|pet|puppy|kitten)s? (?:is |are )?(?:named|called) ([a-z]+)"),
        re.compile(r"\bmy (?:dog|cat|pet|puppy|kitten)s? name is ([a-z]+)"),
        re.compile(r"\b(?:hes|shes|its) (?:named|called) ([a-z]+)"),
    ),
    "favorite_color": (
        re.compile(r"\bmy favorite color is ([a-z]+)"),
    ),
    "hometown": (
        re.compile(r"\bi(?: a|)m from ([a-z ]+?)(?:$|[.,])"),
        re.compile(r"\bi live in ([a-z ]+?)(?:$|[.,])"),
    ),
}

_DISINTEREST_RE = re.compile(
    r"\b(boring|bored|not interested|dont want to talk about|"
    r"something else|change the subject|i hate (?:this|that|it))\b"
)


def _clean_token(token: str) -> str | None:
    token = token.strip()
    if not token or token in stopwords() or len(token) < 2:
        return None
    return token


def capture_name(normalized: str) -> str | None:
    """The user's name if this turn introduces one, title-cased."""
    for pattern in _NAME_PATTERNS:
        match = pattern.search(normalized)
        if match:
            token = _clean_token(match.group(1))
            if token:
                return token.capitalize()
    return None


def capture_attributes(normalized: str) -> dict[str, str]:
    found: dict[str, str] = {}
    for key, patterns in _ATTRIBUTE_PATTERNS.items():
        for pattern in patterns:
            match = pattern.search(normalized)
            if match:
                value = match.group(1).strip()
                if value and value not in stopwords():
                    found[key] = value
                    break
    return found


def signals_disinterest(normalized: str) -> bool:
    return bool(_DISINTEREST_RE.search(normalized))


def update_user(
    record: UserRecord,
    nlu: NluResult,
    topic: str | None,
    config: EngineConfig | None = None,
) -> None:
    """Fold one analyzed user turn into the record.

    Positive sentiment on a topic bumps its affinity (capped at 1);
    explicit disinterest drops it (floored at 0).  Names and personal
    details are captured once and never overwritten by later matches.
    """
    cfg = config or EngineConfig()
    from .types import normalize_surface

    norm = normalize_surface(nlu.utterance)
    if record.name is None:
        name = capture_name(norm)
        if name:
            record.name = name
    for key, value in capture_attributes(norm).items():
        record.attributes.setdefault(key, value)
    if topic in TOPIC_SET:
        current = record.affinities.get(topic, 0.0)
        if signals_disinterest(norm):
            record.affinities[topic] = max(0.0, round(current - cfg.disinterest_drop, 6))
        elif nlu.sentiment == "positive":
            record.affinities[topic] = min(1.0, round(current + cfg.interest_bump, 6))


def personalized_topics(record: UserRecord | None) -> tuple[str, ...]:
    """All topics, best affinity first; unscored topics keep their
    default order after the scored ones."""
    if record is None or not record.affinities:
        return TOPICS
    default_rank = {topic: i for i, topic in enumerate(TOPICS)}
    return tuple(
        sorted(
            TOPICS,
            key=lambda t: (-record.affinities.get(t, 0.0), default_rank[t]),
        )
    )


# ---------------------------------------------------------------------------
# persistence


class UserStore:
    """All known users, backed by one JSON file."""

    def __init__(self, path: str | Path) -> None:
        self.path = Path(path)
        self._records: dict[str, UserRecord] = {}
        if self.path.exists():
            raw = json.loads(self.path.read_text(encoding="utf-8"))
            if raw.get("schema") != SCHEMA_VERSION:
                raise UserModelError(
                    f"unsupported user store schema {raw.get('schema')!r}"
                )
            for entry in raw.get("users", []):
                record = UserRecord.from_dict(entry)
                self._records[record.user_id] = record

    def get(self, user_id: str) -> UserRecord:
        if user_id not in self._records:
            self._records[user_id] = UserRecord(user_id=user_id)
        return self._records[user_id]

    def known(self, user_id: str) -> bool:
        return user_id in self._records

    def save(self) -> None:
        payload = {
            "schema": SCHEMA_VERSION,
            "users": [
                self._records[user_id].to_dict()
                for user_id in sorted(self._records)
            ],
        }
        tmp = self.path.with_suffix(".tmp")
        tmp.write_text(
            json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8"
        )
        tmp.replace(self.path)
