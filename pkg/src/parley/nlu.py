"""Shallow understanding of user turns.

Everything here is rule- and lexicon-driven: clause segmentation,
dialogue-act tagging over a closed tag set, topic cue detection,
special-intent spotting (stop, repeat, sensitive questions, ...) and a
small word-list sentiment vote. The lexicons live under ``data/nlu``
and are loaded once per process.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Sequence

import yaml

from .dataio import data_path, read_wordlist
from .types import (
    DIALOGUE_ACTS,
    QUESTION_ACTS,
    TOPICS,
    TYPE_TO_TOPIC,
    normalize_surface,
)

LOG = logging.getLogger(__name__)


class NluError(ValueError):
    """Raised for inputs the understanding layer cannot accept."""


# ---------------------------------------------------------------------------
# lexicon loading


@lru_cache(maxsize=None)
def stopwords() -> frozenset[str]:
    return frozenset(read_wordlist(data_path("nlu/stopwords.txt")))


@lru_cache(maxsize=None)
def positive_words() -> frozenset[str]:
    return frozenset(read_wordlist(data_path("nlu/positive_words.txt")))


@lru_cache(maxsize=None)
def negative_words() -> frozenset[str]:
    return frozenset(read_wordlist(data_path("nlu/negative_words.txt")))


@lru_cache(maxsize=None)
def _red_patterns() -> tuple[re.Pattern[str], ...]:
    lines = read_wordlist(data_path("nlu/red_patterns.txt"))
    return tuple(re.compile(p, re.IGNORECASE) for p in lines)


@lru_cache(maxsize=None)
def _pleonastic_patterns() -> tuple[re.Pattern[str], ...]:
    lines = read_wordlist(data_path("nlu/pleonastic_it.txt"))
    return tuple(re.compile(p, re.IGNORECASE) for p in lines)


@lru_cache(maxsize=None)
def topic_keywords() -> dict[str, tuple[str, ...]]:
    """Topic name -> cue phrases, as authored in ``nlu/topics.yaml``."""
    path = data_path("nlu/topics.yaml")
    with open(path, encoding="utf-8") as handle:
        raw = yaml.safe_load(handle)
    table: dict[str, tuple[str, ...]] = {}
    for topic, words in raw.items():
        if topic not in TOPICS:
            raise NluError(f"unknown topic in {path.name}: {topic!r}")
        table[topic] = tuple(str(w).lower() for w in words)
    return table


@lru_cache(maxsize=None)
def _topic_cue_regexes() -> tuple[tuple[str, str, re.Pattern[str]], ...]:
    cues = []
    for topic, words in topic_keywords().items():
        for word in words:
            cues.append((topic, word, re.compile(rf"\b{re.escape(word)}\b")))
    # Longest cue first so "board games" beats "games".
    cues.sort(key=lambda c: (-len(c[1]), c[0], c[1]))
    return tuple(cues)


# ---------------------------------------------------------------------------
# segmentation

_SENTENCE_BOUNDARY = re.compile(r"(?<=[.!?;])\s+")
# Always split before these connectives; they reliably open a new clause.
_COORD_STRONG = re.compile(r"\s+(?=(?:and also|and then|but also)\b)")
# Split before a bare coordinator only when a pronoun subject follows.
_COORD_PRONOUN = re.compile(
    r"\s+(?=(?:and|but|because|so)\s+(?:i|we|you|he|she|they|it)\b)"
)


def segment(utterance: str) -> list[str]:
    """Split an utterance into clause-level segments.

    Sentence punctuation always separates; coordinating connectives
    separate when what follows looks like a new clause. Tokens are
    never dropped, so joining the segments with spaces restores the
    original wording.
    """
    if not utterance or not utterance.strip():
        raise NluError("empty utterance")
    segments: list[str] = []
    for piece in _SENTENCE_BOUNDARY.split(utterance.strip()):
        if piece.strip():
            segments.extend(_split_clauses(piece))
    return segments


def _split_clauses(piece: str) -> list[str]:
    parts: list[str] = []
    for chunk in _COORD_STRONG.split(piece):
        parts.extend(_COORD_PRONOUN.split(chunk))
    merged: list[str] = []
    for part in parts:
        # A fragment too short to stand alone rejoins its neighbour.
        if merged and (len(part.split()) < 3 or len(merged[-1].split()) < 2):
            merged[-1] = f"{merged[-1]} {part}"
        else:
            merged.append(part)
    return merged


# ---------------------------------------------------------------------------
# dialogue acts

_FILLERS = ("and", "also", "but", "so", "then", "or", "well", "oh", "um", "uh", "hey")

_YES_WORDS = ("yes", "yeah", "yep", "yup", "sure", "absolutely", "definitely", "certainly")
_NO_WORDS = ("no", "nope", "nah", "negative")

_BACKCHANNEL_FORMS = frozenset(
    {"uh huh", "uhhuh", "mhm", "mm", "hmm", "hm", "huh", "oh", "ah", "ohh",
     "i see", "gotcha", "okay", "ok", "alright", "all right", "right", "fair enough"}
)
_BACKCHANNEL_QUESTION_FORMS = frozenset(
    {"really", "oh really", "is that so", "is that right", "seriously",
     "for real", "no kidding", "you think so", "oh yeah"}
)
_APPRECIATION_FORMS = frozenset(
    {"cool", "awesome", "amazing", "wow", "nice", "wonderful", "incredible",
     "neat", "impressive", "lovely"}
)
_APPRECIATION_MARKERS = (
    "thats so cool", "thats cool", "thats awesome", "thats amazing",
    "thats great", "thats interesting", "thats really interesting",
    "so cool", "how interesting", "i appreciate", "love it", "love that",
    "good to know",
)
_AGREE_FORMS = frozenset(
    {"i agree", "me too", "same", "same here", "exactly", "true",
     "thats true", "totally", "for sure", "i know right"}
)
_DISAGREE_MARKERS = ("i disagree", "i dont agree", "i dont think so", "not really true")
_OPEN_FORMS = frozenset(
    {"how about you", "what about you", "what else", "anything else", "your turn"}
)
_OPEN_PREFIXES = ("tell me about", "tell me more", "talk to me about", "did you know")
_WH_WORDS = frozenset(
    {"what", "who", "whom", "whose", "when", "where", "why", "which", "how"}
)
_AUX_WORDS = frozenset(
    {"do", "does", "did", "is", "are", "was", "were", "am", "can", "could",
     "will", "would", "should", "shall", "have", "has", "had", "may", "might",
     "dont", "doesnt", "didnt", "isnt", "arent", "wasnt", "werent", "cant",
     "couldnt", "wont", "wouldnt", "shouldnt", "havent", "hasnt", "hadnt"}
)
_COMMAND_HEADS = frozenset(
    {"lets", "please", "stop", "play", "repeat", "switch", "change", "skip",
     "pause", "resume", "say", "show", "give", "start", "open"}
)
_OPINION_RE = re.compile(
    r"\bi(?:\s+\w+){0,2}\s+(?:like|love|hate|enjoy|prefer|think|believe|feel|guess)\b"
)
_OPINION_MARKERS = ("my favorite", "in my opinion", "id rather", "i would rather", "im a fan")


def tag_dialogue_acts(sentences: Sequence[str]) -> list[str]:
    """Assign one act tag per segment, parallel to ``sentences``."""
    return [_tag_sentence(s) for s in sentences]


def _tag_sentence(sentence: str) -> str:
    norm = normalize_surface(sentence)
    tokens = norm.split()
    if not tokens:
        return "other"
    if norm in _BACKCHANNEL_QUESTION_FORMS:
        return "backchannel-in-question-form"
    if norm in _APPRECIATION_FORMS or any(m in norm for m in _APPRECIATION_MARKERS):
        return "appreciation"
    if norm in _AGREE_FORMS or "i agree" in norm:
        return "agree"
    if any(m in norm for m in _DISAGREE_MARKERS) or norm == "no way":
        return "disagree"
    if norm in _BACKCHANNEL_FORMS:
        return "backchannel"

    stripped = list(tokens)
    while stripped and stripped[0] in _FILLERS:
        stripped.pop(0)
    if not stripped:
        return "backchannel"
    head = stripped[0]
    rest = " ".join(stripped)

    if head in _YES_WORDS or rest.startswith("of course"):
        return "yes-answer"
    if head in _NO_WORDS or rest.startswith("not yet") or rest.startswith("not really"):
        return "no-answer"
    if rest in _OPEN_FORMS or any(rest.startswith(p) for p in _OPEN_PREFIXES):
        return "open-question"
    if head in _WH_WORDS:
        return "wh-question"
    if head in _AUX_WORDS:
        return "yes-no-question"
    if sentence.rstrip().endswith("?"):
        return "backchannel-in-question-form" if len(tokens) <= 2 else "yes-no-question"
    if head in _COMMAND_HEADS or rest.startswith("talk about") or rest.startswith("let us"):
        return "command"
    if (
        _OPINION_RE.search(norm)
        or any(m in norm for m in _OPINION_MARKERS)
        or any(t in positive_words() or t in negative_words() for t in tokens)
    ):
        return "statement-opinion"
    return "statement-non-opinion"


# ---------------------------------------------------------------------------
# topic cues


@dataclass(frozen=True)
class TopicSignal:
    """How (and whether) the current turn points at a topic.

    ``kind`` is ``explicit`` for a direct cue word, ``entity_implied``
    when only a linked entity's type suggests the topic, and ``none``
    otherwise (in which case ``topic`` is None).
    """

    kind: str
    topic: str | None = None

    def __post_init__(self) -> None:
        if self.kind not in ("explicit", "entity_implied", "none"):
            raise NluError(f"bad topic signal kind: {self.kind!r}")
        if (self.topic is None) != (self.kind == "none"):
            raise NluError("topic must be set exactly when a cue was found")


NO_TOPIC = TopicSignal(kind="none")


def detect_topic(utterance: str, entity_types: Iterable[str] = ()) -> TopicSignal:
    """Find the topic the turn points at, if any.

    A cue word in the utterance wins over types of linked entities;
    with several cue hits the longest cue phrase decides.
    """
    norm = normalize_surface(utterance)
    for topic, _, regex in _topic_cue_regexes():
        if regex.search(norm):
            return TopicSignal(kind="explicit", topic=topic)
    for etype in entity_types:
        topic = TYPE_TO_TOPIC.get(etype)
        if topic is not None:
            return TopicSignal(kind="entity_implied", topic=topic)
    return NO_TOPIC


# ---------------------------------------------------------------------------
# special intents

SPECIAL_INTENTS = frozenset(
    {"stop", "repeat_request_by_user", "wait", "dont_know", "complaint",
     "compliment", "user_question", "red_question"}
)

_STOP_FORMS = frozenset(
    {"stop", "stop it", "please stop", "stop talking", "goodbye", "good bye",
     "bye", "bye bye", "exit", "quit", "turn off", "i have to go", "gotta go",
     "i need to go"}
)
_REPEAT_MARKERS = (
    "say that again", "can you repeat", "repeat that", "what did you say",
    "what was that", "come again", "i didnt hear", "i didnt catch",
)
_WAIT_MARKERS = (
    "hold on", "hang on", "give me a second", "give me a minute",
    "one moment", "just a second", "just a sec", "wait a",
)
_DONT_KNOW_MARKERS = (
    "i dont know", "i dunno", "dunno", "no idea", "not sure", "im not sure",
    "i have no idea", "hard to say",
)
_COMPLAINT_MARKERS = (
    "youre not listening", "you are not listening", "that doesnt make sense",
    "you already said that", "you said that already", "this is boring",
    "youre wrong", "thats wrong", "you dont understand", "youre not making sense",
    "thats not what i said",
)
_COMPLIMENT_MARKERS = (
    "youre smart", "you are smart", "youre so smart", "youre funny",
    "youre cool", "youre awesome", "i like you", "i like talking to you",
    "good job", "well done", "youre the best",
)


def detect_special_intents(utterance: str, acts: Sequence[str]) -> frozenset[str]:
    """Spot intents that short-circuit normal topic handling."""
    norm = normalize_surface(utterance)
    padded = f" {norm} "
    found: set[str] = set()
    if norm in _STOP_FORMS:
        found.add("stop")
    if norm == "wait" or any(m in norm for m in _WAIT_MARKERS):
        found.add("wait")
    if any(m in norm for m in _REPEAT_MARKERS):
        found.add("repeat_request_by_user")
    if any(m in norm for m in _DONT_KNOW_MARKERS):
        found.add("dont_know")
    if any(m in norm for m in _COMPLAINT_MARKERS):
        found.add("complaint")
    if any(m in norm for m in _COMPLIMENT_MARKERS):
        found.add("compliment")
    if any(p.search(utterance) for p in _red_patterns()):
        found.add("red_question")
    elif (
        any(a in QUESTION_ACTS for a in acts)
        and (" you " in padded or " your " in padded or padded.endswith(" you "))
    ):
        found.add("user_question")
    return frozenset(found)


_USAGE_MARKERS = (
    "what can you do", "what do you do", "how does this work",
    "how do you work", "how do i use", "what are you for", "what is this",
    "instructions", "how do i talk to you",
)
_OPTIONS_MARKERS = (
    "what can we talk about", "what else can we talk about", "what topics",
    "list of topics", "what are my options", "what are the options",
    "what else is there", "what do you like to talk about",
)


def is_usage_question(utterance: str) -> bool:
    norm = normalize_surface(utterance)
    return any(m in norm for m in _USAGE_MARKERS)


def wants_topic_options(utterance: str) -> bool:
    norm = normalize_surface(utterance)
    return any(m in norm for m in _OPTIONS_MARKERS)


# ---------------------------------------------------------------------------
# sentiment

_NEGATORS = frozenset(
    {"not", "no", "never", "dont", "didnt", "doesnt", "isnt", "wasnt",
     "cant", "wont", "aint", "hardly", "barely", "nothing", "nobody"}
)


def sentiment(utterance: str) -> str:
    """Three-way lexicon vote; a negator within two tokens flips a hit."""
    tokens = normalize_surface(utterance).split()
    score = 0
    for i, token in enumerate(tokens):
        value = 0
        if token in positive_words():
            value = 1
        elif token in negative_words():
            value = -1
        if value and any(t in _NEGATORS for t in tokens[max(0, i - 2):i]):
            value = -value
        score += value
    if score > 0:
        return "positive"
    if score < 0:
        return "negative"
    return "neutral"


# ---------------------------------------------------------------------------
# pleonastic "it"


def pleonastic_it_spans(sentence: str) -> list[tuple[int, int]]:
    """Character spans of non-referential "it" constructions.

    A pronoun whose offset falls inside one of these spans must not be
    resolved against the discourse model.
    """
    spans: list[tuple[int, int]] = []
    for pattern in _pleonastic_patterns():
        for match in pattern.finditer(sentence):
            spans.append((match.start(), match.end()))
    return spans


# ---------------------------------------------------------------------------
# bundled result


@dataclass(frozen=True)
class NluResult:
    """Everything the shallow pass knows about one user turn."""

    utterance: str
    sentences: tuple[str, ...]
    acts: tuple[str, ...]
    intents: frozenset[str]
    sentiment: str
    topic_signal: TopicSignal = NO_TOPIC

    def __post_init__(self) -> None:
        if len(self.sentences) != len(self.acts):
            raise NluError("acts must align with sentences")
        for act in self.acts:
            if act not in DIALOGUE_ACTS:
                raise NluError(f"unknown dialogue act: {act!r}")

    def has_question(self) -> bool:
        return any(a in QUESTION_ACTS for a in self.acts)


def analyze(utterance: str) -> NluResult:
    """Run the full shallow pass. Topic detection happens later, once
    entity linking has run, via :func:`detect_topic`.

    An empty or blank utterance (a dropped capture, say) analyzes to an
    empty result rather than an error; deciding what to do about it is
    the dialogue manager's call.
    """
    if not utterance.strip():
        return NluResult(
            utterance=utterance,
            sentences=(),
            acts=(),
            intents=frozenset(),
            sentiment="neutral",
        )
    sentences = tuple(segment(utterance))
    acts = tuple(tag_dialogue_acts(sentences))
    return NluResult(
        utterance=utterance,
        sentences=sentences,
        acts=acts,
        intents=detect_special_intents(utterance, acts),
        sentiment=sentiment(utterance),
    )
