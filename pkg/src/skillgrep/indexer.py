"""Bag-of-skills extraction and LTU-weighted posting index construction.

Descriptions are scanned for lemma-dictionary keys (original or normalized
surface forms) with longest-match-first, non-overlapping matching. Term
weights use sub-linear term frequency with pivoted document-length
normalization:

    ltu = (log2(tf) + 1) * log2(n_docs / df) / (0.8 + 0.2 * doc_len / avg_doc_len)

and each document's weights are scaled so its maximum is 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping

from .companies import AliasTable, normalize_company_name, resolve_website
from .corpus import Corpus
from .errors import DomainError, EmptyCorpus, NoTitleNgrams
from .skills import LemmaDictionary
from .titles import (
    DEFAULT_TITLE_STOPWORDS,
    TitleTaxonomy,
    TitleVocab,
    build_title_vocab,
    default_taxonomy,
    generate_title_ngrams,
    normalize_title,
    parse_title,
)

# Sentence punctuation stripped from token edges before dictionary matching.
# Dots are stripped from the right only (".net" survives, "etc." loses its
# dot); +/#/&/-/ / are never stripped ("c++", "c#", "r&d", "c#/.net").
_EDGE_PUNCT = frozenset("\"'`()[]{}<>,;:!?")


@dataclass
class LemmaCount:
    """Occurrence count of one lemma, broken down by matched surface form."""

    total: int = 0
    forms: dict[str, int] = field(default_factory=dict)


BagOfSkills = dict[str, LemmaCount]


@dataclass(frozen=True)
class IndexStats:
    n_docs: int
    avg_doc_len: float
    df: dict[str, int]


@dataclass
class DocEntry:
    """Everything the index retains about one posting."""

    posting_id: str
    doc_len: int
    bag: BagOfSkills
    ltu: dict[str, float]
    scaled_tfidf: dict[str, float]
    weights: dict[str, float]
    final_scores: dict[str, float]
    company_domain: str | None
    title_text: str
    title_ngrams: frozenset[str]
    level: str
    departments: frozenset[str]
    description_tokens: tuple[str, ...]


@dataclass
class PostingIndex:
    stats: IndexStats
    docs: dict[str, DocEntry]
    forms_to_lemma: dict[str, str]
    min_df: int
    build_timestamp: int = 0

    def lemma_for(self, skill: str) -> str | None:
        """Resolve a user-facing skill string to a retained lemma, if any."""
        from .skills import normalize_skill

        folded = " ".join(skill.lower().split())
        if not folded:
            return None
        hit = self.forms_to_lemma.get(folded)
        if hit is not None:
            return hit
        return self.forms_to_lemma.get(normalize_skill(folded).normalized)


def fold_description(text: str) -> tuple[str, ...]:
    """Lowercase and tokenize free text for dictionary matching.

    Only token-edge sentence punctuation is stripped; skill-internal
    characters (&, +, #, /, -, leading dots) are preserved so original
    surface forms like "c#/.net" and "e-mail" stay observable.
    """
    tokens = []
    for raw in text.lower().split():
        tok = raw
        while tok and tok[0] in _EDGE_PUNCT:
            tok = tok[1:]
        while tok and (tok[-1] in _EDGE_PUNCT or tok[-1] == "."):
            tok = tok[:-1]
        if tok:
            tokens.append(tok)
    return tuple(tokens)


def generate_bow(description: str, dictionary: LemmaDictionary) -> BagOfSkills:
    """Count dictionary-key occurrences in a description.

    Matching is longest-first over whitespace tokens and non-overlapping: a
    "machine learning" hit consumes both words, so "learning" alone is not
    also counted. Each hit increments the lemma total and the matched
    surface form's count.
    """
    tokens = fold_description(description)
    bag: BagOfSkills = {}
    max_n = dictionary.max_key_words
    i = 0
    n_tokens = len(tokens)
    while i < n_tokens:
        matched = 0
        for n in range(min(max_n, n_tokens - i), 0, -1):
            gram = " ".join(tokens[i : i + n])
            lemma = dictionary.lookup(gram)
            if lemma is not None:
                entry = bag.setdefault(lemma, LemmaCount())
                entry.total += 1
                entry.forms[gram] = entry.forms.get(gram, 0) + 1
                matched = n
                break
        i += matched if matched else 1
    return bag


def doc_length(bag: BagOfSkills) -> int:
    return sum(entry.total for entry in bag.values())


def compute_document_frequencies(
    bags: Mapping[str, BagOfSkills], min_df: int = 2
) -> tuple[IndexStats, dict[str, BagOfSkills]]:
    """Document frequencies with a minimum-df floor.

    Lemmas below min_df are removed from every bag; documents whose length
    drops to zero are removed from the corpus. n_docs and avg_doc_len are
    computed over the retained documents only.
    """
    if min_df < 1:
        raise ValueError("min_df must be >= 1")
    df_all: dict[str, int] = {}
    for bag in bags.values():
        for lemma in bag:
            df_all[lemma] = df_all.get(lemma, 0) + 1
    keep = {lemma for lemma, n in df_all.items() if n >= min_df}

    retained: dict[str, BagOfSkills] = {}
    for doc_id, bag in bags.items():
        filtered = {lemma: counts for lemma, counts in bag.items() if lemma in keep}
        if doc_length(filtered) > 0:
            retained[doc_id] = filtered
    if not retained:
        raise EmptyCorpus(
            f"no document survives min_df={min_df} over {len(bags)} documents"
        )
    n_docs = len(retained)
    avg_doc_len = sum(doc_length(b) for b in retained.values()) / n_docs
    df = {lemma: df_all[lemma] for lemma in sorted(keep)}
    return IndexStats(n_docs=n_docs, avg_doc_len=avg_doc_len, df=df), retained


def compute_ltu(tf: int, df: int, stats: IndexStats, doc_len: int) -> float:
    """Pivoted-length-normalized term weight for one (term, document) pair."""
    if tf < 1:
        raise DomainError(f"tf must be >= 1, got {tf}")
    if not 1 <= df <= stats.n_docs:
        raise DomainError(f"df must be in [1, n_docs={stats.n_docs}], got {df}")
    if doc_len < 1:
        raise DomainError(f"doc_len must be >= 1, got {doc_len}")
    if stats.avg_doc_len <= 0:
        raise DomainError(f"avg_doc_len must be positive, got {stats.avg_doc_len}")
    return (math.log2(tf) + 1.0) * math.log2(stats.n_docs / df) / (
        0.8 + 0.2 * doc_len / stats.avg_doc_len
    )


def scale_tfidf(ltu_map: Mapping[str, float]) -> dict[str, float]:
    """Scale a document's weights so the maximum is exactly 1.

    An all-zero map has nothing to scale and is returned unchanged.
    """
    if not ltu_map:
        return {}
    top = max(ltu_map.values())
    if top <= 0.0:
        return dict(ltu_map)
    return {lemma: v / top for lemma, v in ltu_map.items()}


def build_index(
    corpus: Corpus,
    dictionary: LemmaDictionary,
    taxonomy: TitleTaxonomy | None = None,
    alias_table: AliasTable | None = None,
    min_df: int = 2,
    ngram_min_freq: int = 3,
    title_stopwords: frozenset[str] = DEFAULT_TITLE_STOPWORDS,
    build_timestamp: int = 0,
    title_vocab: TitleVocab | None = None,
) -> PostingIndex:
    """Run the whole per-posting pipeline and assemble the index.

    Stages: title normalization/parsing and ngram generation, company
    resolution through the alias table, bag-of-skills extraction, df
    filtering, LTU weighting, per-document scaling, then title-conditioned
    skill weights and final scores. Deterministic for identical inputs
    (build_timestamp defaults to 0 so rebuilds are byte-identical).
    """
    if taxonomy is None:
        taxonomy = default_taxonomy()

    normalized_titles = {p.id: normalize_title(p.title_raw) for p in corpus.postings}
    if title_vocab is None:
        title_vocab = build_title_vocab(
            normalized_titles.values(), min_freq=ngram_min_freq, stopwords=title_stopwords
        )

    bags = {p.id: generate_bow(p.description_raw, dictionary) for p in corpus.postings}
    stats, retained = compute_document_frequencies(bags, min_df=min_df)

    retained_lemmas = set(stats.df)
    forms_to_lemma = {
        form: lemma
        for form, lemma in dictionary.forms_to_lemma.items()
        if lemma in retained_lemmas
    }

    docs: dict[str, DocEntry] = {}
    for posting in corpus.postings:
        bag = retained.get(posting.id)
        if bag is None:
            continue
        title = normalized_titles[posting.id]
        level, departments = parse_title(title, taxonomy)
        ngrams = generate_title_ngrams(title, title_vocab, title_stopwords)
        domain = None
        if alias_table is not None:
            match = resolve_website(
                normalize_company_name(posting.company_name_raw),
                posting.location,
                alias_table,
            )
            domain = match.domain if match else None
        dlen = doc_length(bag)
        ltu = {
            lemma: compute_ltu(counts.total, stats.df[lemma], stats, dlen)
            for lemma, counts in sorted(bag.items())
        }
        docs[posting.id] = DocEntry(
            posting_id=posting.id,
            doc_len=dlen,
            bag={lemma: bag[lemma] for lemma in sorted(bag)},
            ltu=ltu,
            scaled_tfidf=scale_tfidf(ltu),
            weights={},
            final_scores={},
            company_domain=domain,
            title_text=title.text,
            title_ngrams=ngrams.ngrams,
            level=level,
            departments=departments,
            description_tokens=fold_description(posting.description_raw),
        )

    index = PostingIndex(
        stats=stats,
        docs=docs,
        forms_to_lemma=forms_to_lemma,
        min_df=min_df,
        build_timestamp=build_timestamp,
    )
    _attach_weights(index)
    return index


def _attach_weights(index: PostingIndex) -> None:
    """Materialize averaged skill weights and final scores on every document.

    Documents with no admitted title ngrams fall back to weight 1.0 for all
    their skills (pure scaled-LTU ranking).
    """
    from .weights import average_posting_weights, build_count_matrix, final_scores

    matrix = build_count_matrix(index)
    for doc in index.docs.values():
        try:
            doc.weights = average_posting_weights(doc, matrix)
        except NoTitleNgrams:
            doc.weights = {lemma: 1.0 for lemma in doc.bag}
    table = final_scores(index, {pid: d.weights for pid, d in index.docs.items()})
    for pid, doc in index.docs.items():
        doc.final_scores = table[pid]
