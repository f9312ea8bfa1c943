import random

import pytest
from hypothesis import given, strategies as st

from parley.dataio import data_path
from parley.discourse import DiscourseState
from parley.gazetteer import Gazetteer, GazetteerRecord
from parley.linking import LinkContext, MentionSpan, LinkedMention, link_utterance
from parley.synthdata import (
    SynthDataError,
    SynthTemplate,
    _typo,
    coref_instances_from_rows,
    evaluate_nel,
    generate_coref_dataset,
    generate_synthetic_data,
    load_dataset,
    load_openers,
    load_templates,
    unique_mention_rows,
    with_typos,
)
from parley.types import normalize_surface


def record(eid, name, etype, pop, topic, alts=()):
    return GazetteerRecord(
        entity_id=eid,
        canonical_name=name,
        entity_type=etype,
        popularity=pop,
        topic=topic,
        alt_names=tuple(alts),
    )


# -- templates ---------------------------------------------------------------

def test_bundled_templates_cover_all_slot_types(gaz):
    table = load_templates()
    present = {r.entity_type for r in gaz}
    assert present <= set(table)
    for entity_type, templates in table.items():
        assert templates, entity_type
        for template in templates:
            assert template.slot_type == entity_type
            assert template.context_turns


def test_openers_load():
    assert len(load_openers()) >= 3


def test_template_rejects_zero_and_two_slots():
    with pytest.raises(SynthDataError):
        SynthTemplate(("prompt",), "no slot here")
    with pytest.raises(SynthDataError):
        SynthTemplate(("prompt",), "i like [movie] and [movie]")


def test_template_rejects_unknown_type_and_empty_context():
    with pytest.raises(SynthDataError):
        SynthTemplate(("prompt",), "i like [sandwich]")
    with pytest.raises(SynthDataError):
        SynthTemplate((), "i like [movie]")


def test_template_rejects_glued_slot():
    with pytest.raises(SynthDataError):
        SynthTemplate(("prompt",), "i like the[movie]")


def test_fill_span_matches_surface():
    template = SynthTemplate(("What do you watch?",), "i really like [movie] a lot")
    utterance, (start, end) = template.fill("The Dark Knight")
    tokens = normalize_surface(utterance).split()
    assert tokens[start:end] == ["the", "dark", "knight"]


def test_fill_span_at_sentence_start():
    template = SynthTemplate(("Name a movie.",), "[movie] is my favorite")
    utterance, span = template.fill("Parasite")
    assert utterance.startswith("Parasite")
    assert span == (0, 1)


# -- generation --------------------------------------------------------------

@pytest.fixture(scope="module")
def dataset(gaz):
    return generate_synthetic_data(
        load_templates(), gaz, n_per_type=40, popularity_cutoff=30,
        seed=7, openers=load_openers(),
    )


def test_generation_is_deterministic(gaz):
    kwargs = dict(n_per_type=25, popularity_cutoff=30, seed=7)
    first = generate_synthetic_data(load_templates(), gaz, **kwargs)
    second = generate_synthetic_data(load_templates(), gaz, **kwargs)
    assert first == second
    other = generate_synthetic_data(
        load_templates(), gaz, n_per_type=25, popularity_cutoff=30, seed=8
    )
    assert other != first


def test_train_test_entities_disjoint(dataset):
    assert not dataset.entity_ids("train") & dataset.entity_ids("test")


def test_test_split_is_a_tenth(dataset, gaz):
    types = {r.entity_type for r in gaz}
    assert len(dataset.train) == 40 * len(types)
    assert len(dataset.test) == 4 * len(types)


def test_gold_spans_resolve_to_gold_entity(dataset, gaz):
    for row in dataset.train[:200]:
        tokens = normalize_surface(row["utterance"]).split()
        start, end = row["gold_span"]
        surface = " ".join(tokens[start:end])
        assert row["gold_id"] in {r.entity_id for r in gaz.exact(surface)}


def test_type_subset_and_bad_arguments(gaz):
    table = load_templates()
    only = generate_synthetic_data(
        table, gaz, n_per_type=5, popularity_cutoff=30, seed=1, types=["movie"]
    )
    assert {gaz.get(i).entity_type for i in only.entity_ids("train")} == {"movie"}
    with pytest.raises(SynthDataError):
        generate_synthetic_data(table, gaz, -1, 30, seed=1)
    with pytest.raises(SynthDataError):
        generate_synthetic_data(table, gaz, 5, 0, seed=1)
    with pytest.raises(SynthDataError):
        generate_synthetic_data({}, gaz, 5, 30, seed=1)


def test_cutoff_swallowing_type_yields_no_test_rows(gaz):
    data = generate_synthetic_data(
        load_templates(), gaz, n_per_type=10, popularity_cutoff=100000,
        seed=3, types=["movie"],
    )
    assert data.train and not data.test


# -- typo injection ----------------------------------------------------------

def test_typos_are_deterministic_and_inside_the_span(dataset):
    first = with_typos(dataset.test, seed=11)
    assert first == with_typos(dataset.test, seed=11)
    for clean, noisy in zip(dataset.test, first):
        assert noisy["gold_id"] == clean["gold_id"]
        assert noisy["gold_span"] == clean["gold_span"]
        before = normalize_surface(clean["utterance"]).split()
        after = noisy["utterance"].split()
        assert len(before) == len(after)
        changed = [i for i, (a, b) in enumerate(zip(before, after)) if a != b]
        start, end = clean["gold_span"]
        assert len(changed) == 1
        assert start <= changed[0] < end


@given(
    st.text(alphabet=st.sampled_from("abcdefghij"), min_size=1, max_size=8),
    st.integers(min_value=0, max_value=10_000),
)
def test_typo_changes_token_by_at_most_one_char(token, seed):
    noisy = _typo(token, random.Random(seed))
    assert noisy != token
    assert abs(len(noisy) - len(token)) <= 1


# -- scoring conventions -----------------------------------------------------

def _mention(start, end, surface, eid):
    return LinkedMention(
        span=MentionSpan(start, end, surface),
        entity_id=eid,
        entity_type="movie",
        source="gazetteer",
        candidate=None,
    )


def test_evaluate_nel_counts():
    rows = [
        {"context": ["x?"], "utterance": "parasite", "gold_span": [0, 1], "gold_id": "Q1"},
        {"context": ["x?"], "utterance": "chicago", "gold_span": [0, 1], "gold_id": "Q2"},
        {"context": ["x?"], "utterance": "dunkirk", "gold_span": [0, 1], "gold_id": "Q3"},
    ]
    answers = {
        "parasite": [_mention(0, 1, "parasite", "Q1")],  # tp
        "chicago": [_mention(0, 1, "chicago", "Q9")],    # wrong id: fp + fn
        "dunkirk": [],                                   # miss: fn
    }
    metrics = evaluate_nel(lambda utt, ctx, disc: answers[utt], rows)
    assert (metrics.tp, metrics.fp, metrics.fn) == (1, 1, 2)
    assert metrics.precision == 0.5
    assert metrics.recall == pytest.approx(1 / 3)


def test_evaluate_nel_requires_span_overlap():
    rows = [{"context": [], "utterance": "a b parasite",
             "gold_span": [2, 3], "gold_id": "Q1"}]
    offset = lambda utt, ctx, disc: [_mention(0, 1, "a", "Q1")]
    metrics = evaluate_nel(offset, rows)
    assert (metrics.tp, metrics.fp, metrics.fn) == (0, 1, 1)


def test_evaluate_nel_rejects_empty():
    with pytest.raises(SynthDataError):
        evaluate_nel(lambda *a: [], [])


def test_unique_mention_rows_drops_shared_names():
    gazetteer = Gazetteer([
        record("Q1", "Chicago", "movie", 900, "movies"),
        record("Q2", "Chicago", "band", 500, "music"),
        record("Q3", "Parasite", "movie", 800, "movies"),
    ])
    rows = [
        {"utterance": "i like chicago", "gold_span": [2, 3], "gold_id": "Q1"},
        {"utterance": "i like parasite", "gold_span": [2, 3], "gold_id": "Q3"},
    ]
    kept = unique_mention_rows(rows, gazetteer)
    assert [r["gold_id"] for r in kept] == ["Q3"]


def test_linker_perfect_on_small_unique_sample(gaz):
    data = generate_synthetic_data(
        load_templates(), gaz, n_per_type=30, popularity_cutoff=30,
        seed=5, openers=load_openers(),
    )
    rows = unique_mention_rows(data.test, gaz)
    assert rows
    system = lambda utt, ctx, disc: link_utterance(utt, ctx, disc, gaz)
    assert evaluate_nel(system, rows).recall == 1.0


# -- coreference set ---------------------------------------------------------

def test_coref_dataset_shape_and_determinism(gaz):
    rows = generate_coref_dataset(gaz, n=60, seed=23)
    assert len(rows) == 60
    assert rows == generate_coref_dataset(gaz, n=60, seed=23)
    pair_rows = [r for r in rows if len(r["bindings"]) == 2]
    negatives = [r for r in rows if not r["bindings"]]
    assert len(pair_rows) == 5 and len(negatives) == 5
    for row in pair_rows:
        assert row["utterance"] == "he was great in it"
        assert len(row["context"]) == 2


def test_coref_rows_token_index_points_at_pronoun(gaz):
    for row in generate_coref_dataset(gaz, n=60, seed=23):
        tokens = normalize_surface(row["utterance"]).split()
        for binding in row["bindings"]:
            assert tokens[binding["token_index"]] == binding["pronoun"]


def test_bundled_coref_file_matches_generator(gaz):
    bundled = load_dataset(data_path("synth/coref_eval.jsonl"))
    assert bundled == generate_coref_dataset(gaz, n=60, seed=23)


def test_instance_reconstruction_recovers_antecedents(gaz):
    rows = generate_coref_dataset(gaz, n=18, seed=23)
    instances = coref_instances_from_rows(rows, gaz)
    assert len(instances) == len(rows)
    for row, instance in zip(rows, instances):
        assert instance["turn_index"] == len(row["context"])
        gold_ids = {b["gold_id"] for b in row["bindings"]}
        seen = {e.entity_id for e in instance["discourse"].centered_entities(10)}
        seen |= {e.entity_id for e in instance["current_turn_entities"]}
        assert gold_ids <= seen


def test_coref_dataset_rejects_nonpositive_n(gaz):
    with pytest.raises(SynthDataError):
        generate_coref_dataset(gaz, n=0, seed=1)
