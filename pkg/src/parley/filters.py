"""Content filtering for candidate responses.

Two lists drive the profanity check: blocked vocabulary (whole words
and substring stems) and a mask list of innocent words that contain a
stem. Mask words are swapped for a placeholder before the scan and the
original text is left untouched, so "classic rock" passes while
"dumbass" does not, whatever the tokenization around it.
"""

from __future__ import annotations

import logging
from functools import lru_cache

from .dataio import data_path, read_wordlist
from .types import normalize_surface

LOG = logging.getLogger(__name__)

_PLACEHOLDER = "ok"


@lru_cache(maxsize=None)
def _blocked() -> tuple[frozenset[str], tuple[str, ...]]:
    whole: set[str] = set()
    stems: list[str] = []
    for entry in read_wordlist(data_path("nlu/profanity.txt")):
        if entry.startswith("*"):
            stems.append(normalize_surface(entry[1:]))
        else:
            whole.add(normalize_surface(entry))
    return frozenset(whole), tuple(stems)


@lru_cache(maxsize=None)
def mask_words() -> frozenset[str]:
    return frozenset(
        normalize_surface(w) for w in read_wordlist(data_path("nlu/mask_list.txt"))
    )


def contains_profanity(text: str) -> bool:
    """True if any token of the masked text is blocked.

    Tokens on the mask list are replaced by a harmless placeholder
    first; stems are then matched as substrings of the remaining
    tokens and whole-word entries as exact tokens.
    """
    whole, stems = _blocked()
    masked = mask_words()
    for token in normalize_surface(text).split():
        if token in masked:
            token = _PLACEHOLDER
        if token in whole:
            return True
        if any(stem in token for stem in stems):
            return True
    return False
