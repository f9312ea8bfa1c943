from parley.types import (
    DIALOGUE_ACTS,
    ENTITY_TYPES,
    IT_TYPES,
    PERSON_TYPES,
    PLURAL_PERSON_TYPES,
    TOPICS,
    TYPE_TO_TOPIC,
    is_qid,
    normalize_surface,
)


def test_normalize_lowercases_and_collapses():
    assert normalize_surface("  The   OFFICE ") == "the office"
    assert normalize_surface("Spider-Man: Homecoming") == "spider man homecoming"


def test_normalize_strips_apostrophes_inside_words():
    # Contractions keep their letters joined so marker tables can
    # list a single form.
    assert normalize_surface("That's it, don't stop") == "thats it dont stop"
    assert normalize_surface("it’s") == "its"


def test_normalize_empty_and_symbols():
    assert normalize_surface("!!!") == ""
    assert normalize_surface("") == ""


def test_qid_pattern():
    assert is_qid("Q79784")
    assert is_qid("Q2307373")
    assert not is_qid("q79784")
    assert not is_qid("Q")
    assert not is_qid("79784")
    assert not is_qid("Q79784x")


def test_entity_type_inventory_is_closed_and_mapped():
    assert len(ENTITY_TYPES) == 13
    for etype in ENTITY_TYPES:
        assert etype in TYPE_TO_TOPIC
        assert TYPE_TO_TOPIC[etype] in TOPICS


def test_pronoun_type_groups_are_subsets():
    assert PERSON_TYPES <= set(ENTITY_TYPES)
    assert PLURAL_PERSON_TYPES <= set(ENTITY_TYPES)
    assert IT_TYPES <= set(ENTITY_TYPES)
    assert "sports_team" not in IT_TYPES
    assert not (PERSON_TYPES & IT_TYPES)


def test_dialogue_act_inventory():
    assert len(DIALOGUE_ACTS) == 14
    assert "statement-opinion" in DIALOGUE_ACTS
    assert "backchannel-in-question-form" in DIALOGUE_ACTS
