"""Job-title normalization, level/department classification, title ngrams.

Titles are normalized in three passes (character cleanup, trailing-level
stripping, token substitutions), then classified against a hand-editable
taxonomy of title ngrams. Ngram generation feeds the skill-weighting stage:
a title contributes its admitted unigrams and bigrams as conditioning
variables for skill weights.
"""

from __future__ import annotations

import csv
import re
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from pathlib import Path
from typing import Iterable, Mapping

from .errors import EmptyTitle, FileUnreadable, FormatError

LEVELS = ("C-Level", "VP-Level", "Director", "Manager", "Non-Manager")
LEVEL_RANK = {level: rank for rank, level in enumerate(reversed(LEVELS))}

DEPARTMENTS = (
    "Administrative",
    "Computing & IT",
    "Engineering",
    "Educator",
    "Finance",
    "HR",
    "Marketing",
    "Sales",
    "Operations",
    "Legal",
    "Medical",
    "Other",
)

_ROMAN_TAILS = frozenset({"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix", "x"})
_LEVEL_WORDS = frozenset({"level", "lvl"})
_DASHED_SENIORITY = frozenset({"senior", "junior", "sr", "jr"})

# Characters that merely separate title parts; &, +, #, ., ', - carry meaning.
_SPACED_CHARS = re.compile(r"[,;:|/\\()\[\]{}<>\"!?*_~]")

# Function words only. "senior", "junior", "lead" are deliberately absent:
# they carry level signal.
DEFAULT_TITLE_STOPWORDS = frozenset(
    """a an and as at by for from in into of on or per the to with""".split()
)


@dataclass(frozen=True)
class NormalizedTitle:
    text: str
    acronym_variants: frozenset[str] = frozenset()

    def words(self) -> list[str]:
        return self.text.split()


@dataclass(frozen=True)
class TitleTaxonomy:
    """Manually curated map from title ngrams to level and departments."""

    ngram_to_level: dict[str, str]
    ngram_to_departments: dict[str, frozenset[str]]
    max_ngram_words: int

    @classmethod
    def from_file(cls, path: str | Path) -> "TitleTaxonomy":
        """Load ``ngram,level,departments`` CSV (departments ';'-separated)."""
        levels: dict[str, str] = {}
        departments: dict[str, frozenset[str]] = {}
        try:
            with open(path, newline="", encoding="utf-8") as fh:
                rows = list(csv.reader(fh))
        except OSError as exc:
            raise FileUnreadable(f"cannot read taxonomy {path}: {exc}") from exc
        for lineno, row in enumerate(rows, start=1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            if row == ["ngram", "level", "departments"]:
                continue
            if len(row) != 3:
                raise FormatError(f"{path}:{lineno}: expected 'ngram,level,departments'")
            ngram = " ".join(row[0].lower().split())
            level = row[1].strip()
            depts = frozenset(d.strip() for d in row[2].split(";") if d.strip())
            if level not in LEVELS:
                raise FormatError(f"{path}:{lineno}: unknown level {level!r}")
            bad = depts - set(DEPARTMENTS)
            if bad:
                raise FormatError(f"{path}:{lineno}: unknown departments {sorted(bad)}")
            levels[ngram] = level
            departments[ngram] = depts
        max_n = max((len(g.split()) for g in levels), default=1)
        return cls(levels, departments, max_n)


@dataclass(frozen=True)
class TitleVocab:
    """Frequency- and stopword-filtered grams admitted for ngram generation."""

    unigrams: frozenset[str]
    bigrams: frozenset[str]
    min_freq: int


@dataclass(frozen=True)
class TitleNgramSet:
    ngrams: frozenset[str]

    def __iter__(self):
        return iter(self.ngrams)

    def __len__(self) -> int:
        return len(self.ngrams)


def _load_tsv_table(path) -> dict[str, str]:
    table = {}
    with open(path, encoding="utf-8") as fh:
        for line in fh:
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 2:
                raise FormatError(f"{path}: expected two tab-separated columns")
            table[parts[0].strip()] = parts[1].strip()
    return table


def _load_list(path) -> frozenset[str]:
    with open(path, encoding="utf-8") as fh:
        return frozenset(
            line.strip() for line in fh if line.strip() and not line.startswith("#")
        )


@lru_cache(maxsize=1)
def default_substitutions() -> dict[str, str]:
    with resources.as_file(
        resources.files("skillgrep.data") / "title_substitutions.tsv"
    ) as p:
        return _load_tsv_table(p)


@lru_cache(maxsize=1)
def default_acronyms() -> frozenset[str]:
    with resources.as_file(resources.files("skillgrep.data") / "title_acronyms.txt") as p:
        return _load_list(p)


@lru_cache(maxsize=1)
def default_taxonomy() -> TitleTaxonomy:
    with resources.as_file(resources.files("skillgrep.data") / "title_taxonomy.csv") as p:
        return TitleTaxonomy.from_file(p)


def normalize_title(
    raw: str,
    substitutions: Mapping[str, str] | None = None,
    acronyms: frozenset[str] | None = None,
) -> NormalizedTitle:
    """Normalize one raw title.

    Passes, in order: character-level cleanup (separators spaced out,
    lowercased), sequence-level stripping of trailing level markers (roman
    numerals I-X, "level N", "- senior i"-style tails), token-level
    substitutions ("vp" -> "vice president"). Tokens listed in the acronym
    table contribute dotted variants ("ceo" -> "c.e.o.") alongside the text.
    """
    if substitutions is None:
        substitutions = default_substitutions()
    if acronyms is None:
        acronyms = default_acronyms()
    if not raw or not raw.strip():
        raise EmptyTitle(f"empty title: {raw!r}")

    text = _SPACED_CHARS.sub(" ", raw.lower())
    tokens = text.split()
    tokens = _strip_level_tail(tokens)

    out: list[str] = []
    for tok in tokens:
        sub = substitutions.get(tok)
        out.extend(sub.split() if sub is not None else [tok])

    final = " ".join(out)
    variants = frozenset(
        ".".join(tok) + "." for tok in out if tok in acronyms
    )
    return NormalizedTitle(text=final, acronym_variants=variants)


def _strip_level_tail(tokens: list[str]) -> list[str]:
    kept = list(tokens)
    while kept:
        last = kept[-1]
        if last in _ROMAN_TAILS or last.isdigit() or last == "-":
            kept.pop()
            continue
        if last in _LEVEL_WORDS:
            kept.pop()
            continue
        if last in _DASHED_SENIORITY and len(kept) >= 2 and kept[-2] == "-":
            kept.pop()
            kept.pop()
            continue
        break
    # A title that is nothing but level markers keeps its original form.
    return kept if kept else list(tokens)


def parse_title(
    title: NormalizedTitle, taxonomy: TitleTaxonomy | None = None
) -> tuple[str, frozenset[str]]:
    """Classify a normalized title into (management level, departments).

    All contiguous word ngrams of the title (plus its acronym variants) are
    looked up in the taxonomy; the most senior matched level wins and the
    matched departments are unioned. No match: (Non-Manager, {Other}).
    """
    if taxonomy is None:
        taxonomy = default_taxonomy()
    words = title.words()
    candidates = set(title.acronym_variants)
    max_n = min(taxonomy.max_ngram_words, len(words)) if words else 0
    for n in range(1, max_n + 1):
        for i in range(len(words) - n + 1):
            candidates.add(" ".join(words[i : i + n]))

    best_rank = -1
    level = "Non-Manager"
    departments: set[str] = set()
    for gram in candidates:
        hit = taxonomy.ngram_to_level.get(gram)
        if hit is None:
            continue
        if LEVEL_RANK[hit] > best_rank:
            best_rank = LEVEL_RANK[hit]
            level = hit
        departments |= taxonomy.ngram_to_departments[gram]
    return level, frozenset(departments) if departments else frozenset({"Other"})


def build_title_vocab(
    titles: Iterable[NormalizedTitle],
    min_freq: int = 3,
    stopwords: frozenset[str] = DEFAULT_TITLE_STOPWORDS,
) -> TitleVocab:
    """Count unigrams/bigrams across titles and admit the frequent ones.

    A gram is admitted when its total occurrence count reaches min_freq and
    none of its constituent words is a stopword.
    """
    if min_freq < 1:
        raise ValueError("min_freq must be >= 1")
    uni: Counter[str] = Counter()
    bi: Counter[str] = Counter()
    for title in titles:
        words = title.words()
        uni.update(words)
        bi.update(" ".join(pair) for pair in zip(words, words[1:]))
    unigrams = frozenset(
        w for w, c in uni.items() if c >= min_freq and w not in stopwords
    )
    bigrams = frozenset(
        g
        for g, c in bi.items()
        if c >= min_freq and not any(w in stopwords for w in g.split())
    )
    return TitleVocab(unigrams=unigrams, bigrams=bigrams, min_freq=min_freq)


def generate_title_ngrams(
    title: NormalizedTitle,
    vocab: TitleVocab,
    stopwords: frozenset[str] = DEFAULT_TITLE_STOPWORDS,
) -> TitleNgramSet:
    """Unigrams and consecutive bigrams of the title admitted by the vocab."""
    words = title.words()
    grams = {w for w in words if w not in stopwords and w in vocab.unigrams}
    grams |= {
        g
        for g in (" ".join(pair) for pair in zip(words, words[1:]))
        if g in vocab.bigrams
    }
    return TitleNgramSet(ngrams=frozenset(grams))
