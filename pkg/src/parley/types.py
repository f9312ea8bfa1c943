"""Shared vocabulary: entity types, topics, dialogue acts, and id validation.

Everything downstream (discourse tracking, linking, coreference, dialogue
management) agrees on these closed sets, so they live in one place.
"""

from __future__ import annotations

import re

# Knowledge-base entity types the gazetteer supports.
ENTITY_TYPES = (
    "movie",
    "actor",
    "director",
    "tv_show",
    "song",
    "musician",
    "band",
    "athlete",
    "sports_team",
    "book",
    "author",
    "board_game",
    "video_game",
)
ENTITY_TYPE_SET = frozenset(ENTITY_TYPES)

# Discourse records may additionally carry "other" (e.g. animals surfaced by
# flow dictionaries) even though the gazetteer itself never stores it.
OTHER_TYPE = "other"
DISCOURSE_ENTITY_TYPES = ENTITY_TYPE_SET | {OTHER_TYPE}

# Person-like types a singular gendered pronoun may resolve to.
PERSON_TYPES = frozenset({"actor", "director", "musician", "athlete", "author"})
# Group-of-people types preferred by "they"/"them"/"their".
PLURAL_PERSON_TYPES = frozenset({"band", "sports_team"})
# Types "it" may resolve to (organizations such as sports teams excluded).
IT_TYPES = frozenset({"movie", "tv_show", "song", "book", "board_game", "video_game"})

# Conversation topics, in default presentation order.  "music" is supported
# by three response generators and rounds out the published inventory.
TOPICS = (
    "sports",
    "movies",
    "books",
    "nature",
    "news",
    "animals",
    "astronomy",
    "comic_books",
    "dinosaurs",
    "harry_potter",
    "nutrition",
    "pirates",
    "video_games",
    "board_games",
    "tv",
    "food",
    "hobbies",
    "music",
)
TOPIC_SET = frozenset(TOPICS)

# Reserved topic for the get-to-know-you flow at conversation start; never
# offered in menus.
INTRO_TOPIC = "intro"

TYPE_TO_TOPIC = {
    "movie": "movies",
    "actor": "movies",
    "director": "movies",
    "tv_show": "tv",
    "song": "music",
    "musician": "music",
    "band": "music",
    "athlete": "sports",
    "sports_team": "sports",
    "book": "books",
    "author": "books",
    "board_game": "board_games",
    "video_game": "video_games",
}

# Collapsed dialogue-act tagset.  Closed: the tagger must emit exactly one of
# these per sentence.
DIALOGUE_ACTS = (
    "backchannel",
    "backchannel-in-question-form",
    "statement-non-opinion",
    "statement-opinion",
    "yes-no-question",
    "wh-question",
    "open-question",
    "agree",
    "disagree",
    "yes-answer",
    "no-answer",
    "appreciation",
    "command",
    "other",
)
DIALOGUE_ACT_SET = frozenset(DIALOGUE_ACTS)

QUESTION_ACTS = frozenset({"yes-no-question", "wh-question", "open-question"})

_QID_RE = re.compile(r"^Q\d+$")


def is_qid(value: str) -> bool:
    """True if value matches the knowledge-base id pattern (Q + digits)."""
    return bool(_QID_RE.match(value))


def normalize_surface(text: str) -> str:
    """Canonical form for matching surface strings: lowercase, collapsed
    whitespace, punctuation stripped. Apostrophes are removed rather
    than spaced so "don't" and "dont" normalize identically."""
    text = text.lower().replace("'", "").replace("’", "")
    text = re.sub(r"[^a-z0-9 ]+", " ", text)
    return " ".join(text.split())
