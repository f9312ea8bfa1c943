import pytest

from parley.dataio import DataFileError, read_jsonl, read_wordlist, write_jsonl


def test_jsonl_round_trip(tmp_path):
    path = tmp_path / "out.jsonl"
    rows = [{"b": 2, "a": 1}, {"x": "y"}]
    write_jsonl(path, rows)
    assert [row for _, row in read_jsonl(path)] == rows
    # keys are sorted on disk for diff-stable files
    assert path.read_text().splitlines()[0] == '{"a": 1, "b": 2}'


def test_read_jsonl_reports_true_line_numbers(tmp_path):
    path = tmp_path / "in.jsonl"
    path.write_text('# header\n\n{"a": 1}\n')
    assert read_jsonl(path) == [(3, {"a": 1})]


def test_read_jsonl_raises_with_location(tmp_path):
    path = tmp_path / "bad.jsonl"
    path.write_text('{"a": 1}\nnot json\n')
    with pytest.raises(DataFileError, match="bad.jsonl:2"):
        read_jsonl(path)


def test_write_jsonl_is_atomic_on_failure(tmp_path):
    path = tmp_path / "out.jsonl"
    write_jsonl(path, [{"a": 1}])

    class Boom:
        pass

    with pytest.raises(TypeError):
        write_jsonl(path, [{"a": Boom()}])
    # the original content survives a failed rewrite
    assert read_jsonl(path) == [(1, {"a": 1})]
    assert list(tmp_path.iterdir()) == [path]


def test_read_wordlist_skips_comments(tmp_path):
    path = tmp_path / "words.txt"
    path.write_text("# comment\nalpha\n\n beta \n")
    assert read_wordlist(path) == ["alpha", "beta"]
