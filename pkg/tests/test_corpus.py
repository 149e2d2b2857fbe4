import json

import pytest

from skillgrep.corpus import ingest_postings, ingest_skill_lexicon
from skillgrep.errors import DuplicateId, FileUnreadable, FormatError


def write_jsonl(path, rows):
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8")


def posting_row(i, **over):
    row = {
        "id": f"p{i}",
        "title": "Software Engineer",
        "company": "Acme Inc",
        "description": "python and sql",
    }
    row.update(over)
    return row


def test_three_valid_records(tmp_path):
    path = tmp_path / "c.jsonl"
    write_jsonl(path, [posting_row(i) for i in range(3)])
    corpus = ingest_postings(path, "jsonl")
    assert len(corpus) == 3
    (m,) = corpus.source_manifest
    assert (m.total, m.valid, m.skipped) == (3, 3, 0)


def test_missing_title_is_skipped_and_counted(tmp_path):
    path = tmp_path / "c.jsonl"
    row = posting_row(0)
    del row["title"]
    write_jsonl(path, [row])
    corpus = ingest_postings(path, "jsonl")
    assert len(corpus) == 0
    (m,) = corpus.source_manifest
    assert (m.total, m.valid, m.skipped) == (1, 0, 1)


def test_id_collision_across_files(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    write_jsonl(a, [posting_row(1)])
    write_jsonl(b, [posting_row(1)])
    with pytest.raises(DuplicateId):
        ingest_postings([a, b], "jsonl")


def test_ingest_is_deterministic(tmp_path):
    path = tmp_path / "c.jsonl"
    write_jsonl(path, [posting_row(i, description=f"skill {i}") for i in range(10)])
    c1 = ingest_postings(path, "jsonl")
    c2 = ingest_postings(path, "jsonl")
    assert c1 == c2
    assert [p.id for p in c1.postings] == [f"p{i}" for i in range(10)]


def test_manifest_accounting_property(tmp_path):
    rows = [posting_row(i) for i in range(5)]
    rows[1] = {"id": "bad"}  # missing everything else
    rows[3] = posting_row(3, date_posted="not-a-date")
    path = tmp_path / "c.jsonl"
    write_jsonl(path, rows)
    corpus = ingest_postings(path, "jsonl")
    (m,) = corpus.source_manifest
    assert m.valid + m.skipped == m.total == 5
    assert m.skipped == 2


def test_non_json_line_skipped_not_fatal(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text(
        json.dumps(posting_row(0)) + "\n<<<garbage>>>\n" + json.dumps(posting_row(1)) + "\n"
    )
    corpus = ingest_postings(path, "jsonl")
    assert len(corpus) == 2
    assert corpus.source_manifest[0].skipped == 1


def test_csv_roundtrip(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text(
        "id,title,company,description,location,date_posted\n"
        'p1,Engineer,Acme,"python, sql",Austin TX,2026-01-15\n'
        "p2,Analyst,Bravo,excel,,\n"
    )
    corpus = ingest_postings(path, "csv")
    assert len(corpus) == 2
    assert corpus.postings[0].description_raw == "python, sql"
    assert corpus.postings[1].location is None


def test_csv_missing_header_is_format_error(tmp_path):
    path = tmp_path / "c.csv"
    path.write_text("id,title\np1,Engineer\n")
    with pytest.raises(FormatError):
        ingest_postings(path, "csv")


def test_missing_file(tmp_path):
    with pytest.raises(FileUnreadable):
        ingest_postings(tmp_path / "nope.jsonl", "jsonl")


def test_unknown_format(tmp_path):
    with pytest.raises(ValueError):
        ingest_postings(tmp_path / "x", "xml")


def test_lexicon_parse_line(tmp_path):
    path = tmp_path / "skills.csv"
    path.write_text("machine learning, 4120\n")
    (entry,) = ingest_skill_lexicon(path)
    assert entry.surface == "machine learning"
    assert entry.cooccurrence_count == 4120
    assert entry.word_count == 2


def test_lexicon_empty_file(tmp_path):
    path = tmp_path / "skills.csv"
    path.write_text("")
    assert ingest_skill_lexicon(path) == []


def test_lexicon_negative_count(tmp_path):
    path = tmp_path / "skills.csv"
    path.write_text("python, -3\n")
    with pytest.raises(FormatError):
        ingest_skill_lexicon(path)


def test_lexicon_word_count_invariant(fixtures_dir):
    for entry in ingest_skill_lexicon(fixtures_dir / "skill_lexicon.csv"):
        assert entry.word_count == len(entry.surface.split())
        assert entry.cooccurrence_count >= 0
