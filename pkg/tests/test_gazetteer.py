import json

import pytest
from hypothesis import given, strategies as st

from parley.dataio import DataFileError
from parley.gazetteer import (
    Gazetteer,
    GazetteerError,
    GazetteerRecord,
    osa_distance,
    surface_similarity,
    trigrams,
)


def record(eid, name, etype="movie", pop=100, alts=(), topic=None):
    return GazetteerRecord(
        entity_id=eid,
        canonical_name=name,
        entity_type=etype,
        popularity=pop,
        topic=topic or "movies",
        alt_names=tuple(alts),
    )


# -- string primitives -----------------------------------------------------

def test_trigrams_basic():
    assert trigrams("abcd") == {"abc", "bcd"}
    assert trigrams("ab") == {"ab"}
    assert trigrams("") == frozenset()


def test_osa_distance_cases():
    assert osa_distance("kitten", "kitten") == 0
    assert osa_distance("kitten", "sitting") == 3
    assert osa_distance("ab", "ba") == 1          # one transposition
    assert osa_distance("freinds", "friends") == 1
    assert osa_distance("", "abc") == 3


def test_similarity_freinds_frozen_value():
    # Hand-derived: trigram Jaccard 1/9, edit similarity 6/7, mean of
    # the two. The transposition metric is what keeps this above the
    # retrieval floor of 0.45.
    expected = (1 / 9 + 6 / 7) / 2
    assert surface_similarity("freinds", "friends") == pytest.approx(expected)
    assert surface_similarity("freinds", "friends") > 0.45


def test_similarity_maple_laefs_frozen_value():
    assert surface_similarity("maple laefs", "maple leafs") == pytest.approx(
        0.6468531468531469
    )


def test_similarity_bounds_and_identity():
    assert surface_similarity("The Office", "the office") == 1.0
    assert surface_similarity("zzzzqq", "friends") < 0.2
    assert surface_similarity("", "") == 1.0
    assert surface_similarity("a", "") == 0.0


@given(st.text(max_size=20), st.text(max_size=20))
def test_similarity_symmetric_and_bounded(a, b):
    s = surface_similarity(a, b)
    assert 0.0 <= s <= 1.0
    assert s == pytest.approx(surface_similarity(b, a))


# -- index construction ----------------------------------------------------

def test_empty_gazetteer_rejected():
    with pytest.raises(GazetteerError, match="empty_gazetteer"):
        Gazetteer([])


def test_duplicate_id_rejected():
    with pytest.raises(GazetteerError, match="duplicate"):
        Gazetteer([record("Q1", "A"), record("Q1", "B")])


def test_exact_lookup_covers_alt_names():
    g = Gazetteer([record("Q1", "The Office US", alts=["the office"])])
    assert g.exact("The Office")[0].entity_id == "Q1"
    assert g.exact("the office us")[0].entity_id == "Q1"
    assert g.exact("nothing here") == ()


def test_fuzzy_lookup_via_alt_name():
    g = Gazetteer([record("Q1", "Some Show", alts=["the office us"])])
    hits = g.search("the office", 0.45, 5)
    assert hits and hits[0][0].entity_id == "Q1"
    assert hits[0][1] < 1.0


def test_search_threshold_and_limit():
    g = Gazetteer([record(f"Q{i}", f"movie number {i}", pop=i) for i in range(1, 8)])
    hits = g.search("movie number 3", 0.45, 4)
    assert len(hits) == 4
    assert hits[0][0].entity_id == "Q3"
    assert g.search("zzzzqq", 0.45, 4) == []


def test_search_tie_breaks_on_popularity_then_id():
    g = Gazetteer(
        [
            record("Q9", "Chicago", pop=500),
            record("Q2", "Chicago", pop=900),
            record("Q5", "Chicago", pop=900),
        ]
    )
    ids = [r.entity_id for r, _ in g.search("chicago", 0.45, 5)]
    assert ids == ["Q2", "Q5", "Q9"]


# -- file loading ----------------------------------------------------------

def write_rows(path, rows):
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n")


GOOD_ROW = {
    "id": "Q1",
    "canonical": "The Office",
    "alts": ["the office us"],
    "type": "tv_show",
    "popularity": 1000,
    "topic": "tv",
}


def test_load_good_file(tmp_path):
    p = tmp_path / "g.jsonl"
    write_rows(p, [GOOD_ROW])
    g = Gazetteer.load(p)
    assert len(g) == 1
    rec = g.get("Q1")
    assert rec.alt_names == ("the office us",)
    assert rec.topic == "tv"


def test_load_defaults_topic_from_type(tmp_path):
    p = tmp_path / "g.jsonl"
    write_rows(p, [{k: v for k, v in GOOD_ROW.items() if k != "topic"}])
    assert Gazetteer.load(p).get("Q1").topic == "tv"


def test_load_missing_popularity_warns_and_zeroes(tmp_path, caplog):
    p = tmp_path / "g.jsonl"
    write_rows(p, [{k: v for k, v in GOOD_ROW.items() if k != "popularity"}])
    with caplog.at_level("WARNING"):
        g = Gazetteer.load(p)
    assert g.get("Q1").popularity == 0
    assert any("popularity" in m for m in caplog.messages)


@pytest.mark.parametrize(
    "patch",
    [
        {"id": "banana"},
        {"canonical": "  "},
        {"type": "planet"},
        {"popularity": -3},
        {"popularity": 2.5},
        {"topic": "gardening"},
    ],
)
def test_load_rejects_bad_fields(tmp_path, patch):
    p = tmp_path / "g.jsonl"
    write_rows(p, [{**GOOD_ROW, **patch}])
    with pytest.raises(DataFileError):
        Gazetteer.load(p)


def test_load_rejects_duplicate_ids(tmp_path):
    p = tmp_path / "g.jsonl"
    write_rows(p, [GOOD_ROW, GOOD_ROW])
    with pytest.raises(DataFileError, match="duplicate"):
        Gazetteer.load(p)


# -- bundled data ----------------------------------------------------------

def test_bundled_gazetteer_anchors(gaz):
    assert gaz.get("Q79784").canonical_name == "Friends"
    assert gaz.get("Q2307373").canonical_name == "The Dresden Files"
    assert gaz.get("Q7826440").entity_type == "sports_team"
    assert len(gaz) > 1500


def test_bundled_gazetteer_search_fixtures(gaz):
    assert any(
        r.entity_id == "Q7826440" for r, _ in gaz.search("maple leafs", 0.45, 10)
    )
    assert any(r.entity_id == "Q79784" for r, _ in gaz.search("freinds", 0.45, 10))
    assert any(
        r.entity_id == "Q2307373" for r, _ in gaz.search("dresden files", 0.45, 10)
    )
