import struct

import pytest

from skillgrep.errors import FileUnreadable, FormatError, VersionMismatch
from skillgrep.persist import (
    DICT_MAGIC,
    FORMAT_VERSION,
    INDEX_MAGIC,
    load_dictionary,
    load_index,
    save_dictionary,
    save_index,
)
from skillgrep.query import Query, execute_query


def test_dictionary_roundtrip(dictionary, tmp_path):
    path = tmp_path / "dict.bin"
    save_dictionary(dictionary, path)
    loaded = load_dictionary(path)
    assert loaded.forms_to_lemma == dictionary.forms_to_lemma
    assert loaded.lemma_set == dictionary.lemma_set
    assert loaded.max_key_words == dictionary.max_key_words


def test_dictionary_serialization_deterministic(dictionary, tmp_path):
    a, b = tmp_path / "a.bin", tmp_path / "b.bin"
    save_dictionary(dictionary, a)
    save_dictionary(dictionary, b)
    assert a.read_bytes() == b.read_bytes()


def test_index_roundtrip_identical_query_results(index, company_store, tmp_path):
    path = tmp_path / "index.bin"
    save_index(index, path)
    loaded = load_index(path)

    assert loaded.stats == index.stats
    assert loaded.forms_to_lemma == index.forms_to_lemma
    assert list(loaded.docs) == list(index.docs)

    q = Query(
        skills=frozenset({"python", "scala"}),
        technologies=frozenset({"jquery"}),
        departments=frozenset({"Engineering"}),
        degree_keywords=frozenset({"bachelor degree"}),
        revenue_kusd_range=(1000, None),
        employees_range=(50, 200),
    )
    before = [r.to_json() for r in execute_query(q, index, company_store)]
    after = [r.to_json() for r in execute_query(q, loaded, company_store)]
    assert before == after


def test_index_serialization_deterministic(index, tmp_path):
    a, b = tmp_path / "a.bin", tmp_path / "b.bin"
    save_index(index, a)
    save_index(index, b)
    assert a.read_bytes() == b.read_bytes()


def test_version_mismatch_fails_cleanly(index, tmp_path):
    path = tmp_path / "index.bin"
    save_index(index, path)
    blob = bytearray(path.read_bytes())
    blob[4:8] = struct.pack("<I", FORMAT_VERSION + 1)
    path.write_bytes(bytes(blob))
    with pytest.raises(VersionMismatch):
        load_index(path)


def test_wrong_magic_rejected(dictionary, index, tmp_path):
    dpath = tmp_path / "dict.bin"
    ipath = tmp_path / "index.bin"
    save_dictionary(dictionary, dpath)
    save_index(index, ipath)
    assert dpath.read_bytes()[:4] == DICT_MAGIC
    assert ipath.read_bytes()[:4] == INDEX_MAGIC
    with pytest.raises(FormatError):
        load_index(dpath)
    with pytest.raises(FormatError):
        load_dictionary(ipath)


def test_truncated_file_rejected(index, tmp_path):
    path = tmp_path / "index.bin"
    save_index(index, path)
    blob = path.read_bytes()
    path.write_bytes(blob[: len(blob) // 2])
    with pytest.raises(FormatError):
        load_index(path)


def test_missing_file(tmp_path):
    with pytest.raises(FileUnreadable):
        load_index(tmp_path / "nope.bin")
