"""Title-conditioned skill weighting.

A skill characteristic of a title ("c++" under "software engineer") should
outrank one that is merely common everywhere. The weight of a skill under a
title ngram is the ratio of its conditional to its global relative term
frequency:

    weight(skill, g) = (count[g, skill] / ngram_total[g])
                       / (global_count[skill] / global_total)

A posting's weight for a skill is the arithmetic mean over the posting's
title ngrams, and the final per-skill score multiplies that weight into the
scaled LTU value.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import TYPE_CHECKING, Mapping

from .errors import DomainError, NoTitleNgrams

if TYPE_CHECKING:
    from .indexer import DocEntry, PostingIndex


@dataclass
class CountMatrix:
    """Term-frequency mass of every skill, globally and under each title ngram."""

    counts: dict[tuple[str, str], int] = field(default_factory=dict)
    ngram_totals: dict[str, int] = field(default_factory=dict)
    global_counts: dict[str, int] = field(default_factory=dict)
    global_total: int = 0


def build_count_matrix(index: "PostingIndex") -> CountMatrix:
    """Aggregate tf per (title ngram, lemma) over all indexed documents."""
    m = CountMatrix()
    for doc in index.docs.values():
        for lemma, entry in doc.bag.items():
            tf = entry.total
            m.global_counts[lemma] = m.global_counts.get(lemma, 0) + tf
            m.global_total += tf
            for gram in doc.title_ngrams:
                key = (gram, lemma)
                m.counts[key] = m.counts.get(key, 0) + tf
                m.ngram_totals[gram] = m.ngram_totals.get(gram, 0) + tf
    return m


def skill_weight(skill: str, ngram: str, m: CountMatrix) -> float:
    """Conditional-over-global relative frequency ratio; 0 when never co-seen."""
    joint = m.counts.get((ngram, skill), 0)
    if joint == 0:
        return 0.0
    gram_total = m.ngram_totals.get(ngram, 0)
    global_count = m.global_counts.get(skill, 0)
    if gram_total <= 0 or global_count <= 0 or m.global_total <= 0:
        raise DomainError(
            f"inconsistent count matrix for ({ngram!r}, {skill!r}): "
            f"joint={joint}, gram_total={gram_total}, "
            f"global={global_count}/{m.global_total}"
        )
    return (joint / gram_total) / (global_count / m.global_total)


def average_posting_weights(doc: "DocEntry", m: CountMatrix) -> dict[str, float]:
    """Mean skill weight over the posting's title ngrams, per BOW lemma."""
    grams = sorted(doc.title_ngrams)
    if not grams:
        raise NoTitleNgrams(f"posting {doc.posting_id!r} has no title ngrams")
    return {
        lemma: sum(skill_weight(lemma, g, m) for g in grams) / len(grams)
        for lemma in doc.bag
    }


def final_scores(
    index: "PostingIndex", weights: Mapping[str, Mapping[str, float]]
) -> dict[str, dict[str, float]]:
    """Per posting, per lemma: averaged weight times scaled LTU."""
    out: dict[str, dict[str, float]] = {}
    for pid, doc in index.docs.items():
        w = weights[pid]
        out[pid] = {
            lemma: w[lemma] * doc.scaled_tfidf[lemma] for lemma in doc.bag
        }
    return out
