"""Versioned binary serialization for the lemma dictionary and the index.

Both artifacts open with 4 magic bytes and a little-endian u32 format
version; loading anything else is a hard error. The full field layout is
documented in docs/FILE_FORMATS.md. Writers emit sections in sorted order
so identical inputs serialize byte-identically.
"""

from __future__ import annotations

import struct
from io import BufferedReader, BufferedWriter
from pathlib import Path

from .errors import FileUnreadable, FormatError, VersionMismatch
from .indexer import DocEntry, IndexStats, LemmaCount, PostingIndex
from .skills import LemmaDictionary

DICT_MAGIC = b"SKGD"
INDEX_MAGIC = b"SKGX"
FORMAT_VERSION = 1

_U16 = struct.Struct("<H")
_U32 = struct.Struct("<I")
_U64 = struct.Struct("<Q")
_F64 = struct.Struct("<d")


def _w_u16(fh: BufferedWriter, v: int) -> None:
    fh.write(_U16.pack(v))


def _w_u32(fh: BufferedWriter, v: int) -> None:
    fh.write(_U32.pack(v))


def _w_u64(fh: BufferedWriter, v: int) -> None:
    fh.write(_U64.pack(v))


def _w_f64(fh: BufferedWriter, v: float) -> None:
    fh.write(_F64.pack(v))


def _w_str(fh: BufferedWriter, s: str) -> None:
    data = s.encode("utf-8")
    if len(data) > 0xFFFF:
        raise FormatError(f"string too long to serialize ({len(data)} bytes)")
    _w_u16(fh, len(data))
    fh.write(data)


def _read(fh: BufferedReader, n: int) -> bytes:
    data = fh.read(n)
    if len(data) != n:
        raise FormatError("truncated file")
    return data


def _r_u16(fh) -> int:
    return _U16.unpack(_read(fh, 2))[0]


def _r_u32(fh) -> int:
    return _U32.unpack(_read(fh, 4))[0]


def _r_u64(fh) -> int:
    return _U64.unpack(_read(fh, 8))[0]


def _r_f64(fh) -> float:
    return _F64.unpack(_read(fh, 8))[0]


def _r_str(fh) -> str:
    return _read(fh, _r_u16(fh)).decode("utf-8")


def _check_header(fh, magic: bytes, what: str) -> None:
    got = _read(fh, 4)
    if got != magic:
        raise FormatError(f"not a {what} file (magic {got!r})")
    version = _r_u32(fh)
    if version != FORMAT_VERSION:
        raise VersionMismatch(
            f"{what} format version {version} unsupported (expected {FORMAT_VERSION})"
        )


def save_dictionary(dictionary: LemmaDictionary, path: str | Path) -> None:
    with open(path, "wb") as fh:
        fh.write(DICT_MAGIC)
        _w_u32(fh, FORMAT_VERSION)
        lemmas = sorted(dictionary.lemma_set)
        lemma_idx = {lemma: i for i, lemma in enumerate(lemmas)}
        _w_u32(fh, len(lemmas))
        for lemma in lemmas:
            _w_str(fh, lemma)
        items = sorted(dictionary.forms_to_lemma.items())
        _w_u32(fh, len(items))
        for form, lemma in items:
            _w_str(fh, form)
            _w_u32(fh, lemma_idx[lemma])


def load_dictionary(path: str | Path) -> LemmaDictionary:
    try:
        fh = open(path, "rb")
    except OSError as exc:
        raise FileUnreadable(f"cannot read dictionary {path}: {exc}") from exc
    with fh:
        _check_header(fh, DICT_MAGIC, "lemma dictionary")
        lemmas = [_r_str(fh) for _ in range(_r_u32(fh))]
        forms_to_lemma = {}
        for _ in range(_r_u32(fh)):
            form = _r_str(fh)
            forms_to_lemma[form] = lemmas[_r_u32(fh)]
    max_key_words = max((len(k.split()) for k in forms_to_lemma), default=1)
    return LemmaDictionary(
        forms_to_lemma=forms_to_lemma,
        lemma_set=frozenset(lemmas),
        max_key_words=max_key_words,
    )


def save_index(index: PostingIndex, path: str | Path) -> None:
    with open(path, "wb") as fh:
        fh.write(INDEX_MAGIC)
        _w_u32(fh, FORMAT_VERSION)
        _w_u32(fh, index.stats.n_docs)
        _w_f64(fh, index.stats.avg_doc_len)
        _w_u32(fh, index.min_df)
        _w_u64(fh, index.build_timestamp)

        lemmas = sorted(index.stats.df)
        lemma_idx = {lemma: i for i, lemma in enumerate(lemmas)}
        _w_u32(fh, len(lemmas))
        for lemma in lemmas:
            _w_str(fh, lemma)
            _w_u32(fh, index.stats.df[lemma])

        forms = sorted(index.forms_to_lemma.items())
        _w_u32(fh, len(forms))
        for form, lemma in forms:
            _w_str(fh, form)
            _w_u32(fh, lemma_idx[lemma])

        _w_u32(fh, len(index.docs))
        for doc in index.docs.values():
            _w_str(fh, doc.posting_id)
            _w_u32(fh, doc.doc_len)
            _w_str(fh, doc.company_domain or "")
            _w_str(fh, doc.level)
            _w_str(fh, doc.title_text)
            depts = sorted(doc.departments)
            _w_u16(fh, len(depts))
            for d in depts:
                _w_str(fh, d)
            grams = sorted(doc.title_ngrams)
            _w_u32(fh, len(grams))
            for g in grams:
                _w_str(fh, g)
            _w_u32(fh, len(doc.description_tokens))
            for tok in doc.description_tokens:
                _w_str(fh, tok)
            skills = sorted(doc.bag)
            _w_u32(fh, len(skills))
            for lemma in skills:
                entry = doc.bag[lemma]
                _w_u32(fh, lemma_idx[lemma])
                _w_u32(fh, entry.total)
                _w_f64(fh, doc.ltu[lemma])
                _w_f64(fh, doc.scaled_tfidf[lemma])
                _w_f64(fh, doc.weights[lemma])
                _w_f64(fh, doc.final_scores[lemma])
                form_items = sorted(entry.forms.items())
                _w_u16(fh, len(form_items))
                for form, count in form_items:
                    _w_str(fh, form)
                    _w_u32(fh, count)


def load_index(path: str | Path) -> PostingIndex:
    try:
        fh = open(path, "rb")
    except OSError as exc:
        raise FileUnreadable(f"cannot read index {path}: {exc}") from exc
    with fh:
        _check_header(fh, INDEX_MAGIC, "posting index")
        n_docs = _r_u32(fh)
        avg_doc_len = _r_f64(fh)
        min_df = _r_u32(fh)
        build_timestamp = _r_u64(fh)

        lemmas: list[str] = []
        df: dict[str, int] = {}
        for _ in range(_r_u32(fh)):
            lemma = _r_str(fh)
            lemmas.append(lemma)
            df[lemma] = _r_u32(fh)

        forms_to_lemma = {}
        for _ in range(_r_u32(fh)):
            form = _r_str(fh)
            forms_to_lemma[form] = lemmas[_r_u32(fh)]

        docs: dict[str, DocEntry] = {}
        for _ in range(_r_u32(fh)):
            pid = _r_str(fh)
            doc_len = _r_u32(fh)
            domain = _r_str(fh) or None
            level = _r_str(fh)
            title_text = _r_str(fh)
            departments = frozenset(_r_str(fh) for _ in range(_r_u16(fh)))
            grams = frozenset(_r_str(fh) for _ in range(_r_u32(fh)))
            desc_tokens = tuple(_r_str(fh) for _ in range(_r_u32(fh)))
            bag: dict[str, LemmaCount] = {}
            ltu: dict[str, float] = {}
            scaled: dict[str, float] = {}
            weights: dict[str, float] = {}
            finals: dict[str, float] = {}
            for _ in range(_r_u32(fh)):
                lemma = lemmas[_r_u32(fh)]
                total = _r_u32(fh)
                ltu[lemma] = _r_f64(fh)
                scaled[lemma] = _r_f64(fh)
                weights[lemma] = _r_f64(fh)
                finals[lemma] = _r_f64(fh)
                forms = {}
                for _ in range(_r_u16(fh)):
                    form = _r_str(fh)
                    forms[form] = _r_u32(fh)
                bag[lemma] = LemmaCount(total=total, forms=forms)
            docs[pid] = DocEntry(
                posting_id=pid,
                doc_len=doc_len,
                bag=bag,
                ltu=ltu,
                scaled_tfidf=scaled,
                weights=weights,
                final_scores=finals,
                company_domain=domain,
                title_text=title_text,
                title_ngrams=grams,
                level=level,
                departments=departments,
                description_tokens=desc_tokens,
            )

    stats = IndexStats(n_docs=n_docs, avg_doc_len=avg_doc_len, df=df)
    return PostingIndex(
        stats=stats,
        docs=docs,
        forms_to_lemma=forms_to_lemma,
        min_df=min_df,
        build_timestamp=build_timestamp,
    )
