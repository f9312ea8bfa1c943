import pytest
from hypothesis import given, strategies as st

from parley import nlu
from parley.types import DIALOGUE_ACTS


# -- segmentation ----------------------------------------------------------

def test_segment_on_punctuation():
    assert nlu.segment("I love movies. What about you?") == [
        "I love movies.",
        "What about you?",
    ]


def test_segment_splits_coordinated_clauses():
    parts = nlu.segment("i like the beatles and they were great")
    assert parts == ["i like the beatles", "and they were great"]


def test_segment_keeps_np_coordination_together():
    # "and" joining noun phrases is not a clause boundary.
    assert nlu.segment("i like cats and dogs") == ["i like cats and dogs"]


def test_segment_preserves_wording():
    text = "yes! i watched it yesterday and i loved every minute"
    assert " ".join(nlu.segment(text)) == text


def test_segment_rejects_empty():
    with pytest.raises(nlu.NluError):
        nlu.segment("   ")


# -- dialogue acts ---------------------------------------------------------

@pytest.mark.parametrize(
    "sentence,act",
    [
        ("yes", "yes-answer"),
        ("yeah sure", "yes-answer"),
        ("no", "no-answer"),
        ("nah not really", "no-answer"),
        ("what is your favorite movie", "wh-question"),
        ("do you like jazz?", "yes-no-question"),
        ("have you seen it", "yes-no-question"),
        ("how about you", "open-question"),
        ("tell me about the beatles", "open-question"),
        ("i love horror movies", "statement-opinion"),
        ("i always like to watch the maple leafs compete", "statement-opinion"),
        ("the movie came out in 1994", "statement-non-opinion"),
        ("uh huh", "backchannel"),
        ("okay", "backchannel"),
        ("really", "backchannel-in-question-form"),
        ("is that so", "backchannel-in-question-form"),
        ("that's so cool", "appreciation"),
        ("wow", "appreciation"),
        ("i agree", "agree"),
        ("me too", "agree"),
        ("i don't think so", "disagree"),
        ("let's talk about music", "command"),
        ("play some music", "command"),
    ],
)
def test_act_tagging(sentence, act):
    assert nlu.tag_dialogue_acts([sentence]) == [act]


def test_acts_always_in_inventory():
    for text in ("hmm?", "well and so", "@#$", "NO WAY"):
        for act in nlu.tag_dialogue_acts([text]):
            assert act in DIALOGUE_ACTS


# -- topic cues ------------------------------------------------------------

def test_explicit_topic_cue():
    signal = nlu.detect_topic("i want to talk about movies")
    assert (signal.kind, signal.topic) == ("explicit", "movies")


def test_longest_cue_wins():
    signal = nlu.detect_topic("do you play board games")
    assert signal.topic == "board_games"


def test_entity_implied_topic():
    signal = nlu.detect_topic("i like them a lot", entity_types=["band"])
    assert (signal.kind, signal.topic) == ("entity_implied", "music")


def test_no_topic_signal():
    signal = nlu.detect_topic("that is nice")
    assert signal is nlu.NO_TOPIC
    with pytest.raises(nlu.NluError):
        nlu.TopicSignal(kind="explicit", topic=None)


# -- special intents -------------------------------------------------------

@pytest.mark.parametrize(
    "utterance,intent",
    [
        ("stop", "stop"),
        ("goodbye", "stop"),
        ("can you repeat that", "repeat_request_by_user"),
        ("what did you say", "repeat_request_by_user"),
        ("hold on a moment", "wait"),
        ("i don't know", "dont_know"),
        ("you already said that", "complaint"),
        ("you're so smart", "compliment"),
        ("who should i vote for", "red_question"),
    ],
)
def test_special_intents(utterance, intent):
    acts = nlu.tag_dialogue_acts(nlu.segment(utterance))
    assert intent in nlu.detect_special_intents(utterance, acts)


def test_user_question_intent_needs_second_person():
    acts = ["wh-question"]
    assert "user_question" in nlu.detect_special_intents(
        "what is your favorite color", acts
    )
    assert "user_question" not in nlu.detect_special_intents(
        "what year did the movie come out", acts
    )


def test_red_question_takes_precedence_over_user_question():
    text = "do you think i should buy this stock"
    acts = nlu.tag_dialogue_acts(nlu.segment(text))
    intents = nlu.detect_special_intents(text, acts)
    assert "red_question" in intents
    assert "user_question" not in intents


def test_usage_and_options_helpers():
    assert nlu.is_usage_question("what can you do?")
    assert not nlu.is_usage_question("what can you tell me about jazz")
    assert nlu.wants_topic_options("what else can we talk about")
    assert not nlu.wants_topic_options("let's talk about books")


# -- sentiment -------------------------------------------------------------

def test_sentiment_vote():
    assert nlu.sentiment("i love this, it is wonderful") == "positive"
    assert nlu.sentiment("that was terrible and boring") == "negative"
    assert nlu.sentiment("the movie came out in june") == "neutral"


def test_sentiment_negation_flip():
    assert nlu.sentiment("i do not like it") == "negative"
    assert nlu.sentiment("not bad") == "positive"


# -- pleonastic it ---------------------------------------------------------

@pytest.mark.parametrize(
    "sentence",
    [
        "it is raining",
        "it's pretty cold today",
        "it takes two hours",
        "what time is it",
        "it seems like a good idea",
    ],
)
def test_pleonastic_spans_found(sentence):
    assert nlu.pleonastic_it_spans(sentence)


def test_referential_it_has_no_span():
    assert nlu.pleonastic_it_spans("it is really funny") == []
    assert nlu.pleonastic_it_spans("i watched it yesterday") == []


# -- bundled analysis ------------------------------------------------------

def test_analyze_alignment_and_intents():
    result = nlu.analyze("I love the Beatles. Can you repeat that?")
    assert len(result.sentences) == len(result.acts) == 2
    assert "repeat_request_by_user" in result.intents
    assert result.sentiment == "positive"
    assert result.has_question()


def test_analyze_rejects_mismatched_result():
    with pytest.raises(nlu.NluError):
        nlu.NluResult(
            utterance="x",
            sentences=("a", "b"),
            acts=("backchannel",),
            intents=frozenset(),
            sentiment="neutral",
        )


@given(st.text(alphabet=st.characters(codec="ascii"), min_size=1, max_size=80))
def test_analyze_total_on_printable_input(text):
    """Any non-blank input gets a full, aligned analysis."""
    if not text.strip():
        return
    result = nlu.analyze(text)
    assert result.sentences
    assert len(result.sentences) == len(result.acts)
    assert all(a in DIALOGUE_ACTS for a in result.acts)
    assert result.sentiment in ("positive", "negative", "neutral")
