"""Skill normalization, lemmatization, and the lemma dictionary.

A raw skill surface ("C# & .NET") is kept in two forms: the lowercased
original and a pattern-normalized variant. Both become keys of the lemma
dictionary, which maps every observed form onto one canonical lemma skill.
The lemma is the unit everything downstream (indexing, weighting, search)
operates on.
"""

from __future__ import annotations

import math
import re
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping

from .corpus import RawSkillEntry
from .errors import EmptySkill, FileUnreadable, FormatError

# Characters that act as "and"-connectors inside skill strings.
_CONNECTORS = frozenset("&+/")

# "r&d" keeps its ampersand; it is a skill in its own right, not a conjunction.
_CONNECTOR_EXEMPT = frozenset({"r&d"})

# Single letter joined to a word by a dash ("e-mail", "x-ray"): drop the dash.
# Longer hyphenated skills ("full-stack") keep theirs.
_LETTER_DASH_WORD = re.compile(r"(?<![a-z0-9])([a-z0-9])-([a-z0-9]{2,})")


@dataclass(frozen=True)
class SkillForms:
    """Lowercased original and pattern-normalized variants of one surface."""

    original: str
    normalized: str


class LemmaLexicon:
    """Word-ngram to canonical-lemma lookups; absent ngrams map to themselves."""

    def __init__(self, entries: Mapping[str, str]):
        self.entries = dict(entries)
        self.max_ngram_words = max(
            (len(k.split()) for k in self.entries), default=1
        )

    def __contains__(self, ngram: str) -> bool:
        return ngram in self.entries

    def lemma(self, ngram: str) -> str:
        return self.entries.get(ngram, ngram)

    @classmethod
    def from_file(cls, path: str | Path) -> "LemmaLexicon":
        """Load a TSV of ``surface_ngram<TAB>lemma_ngram`` rows.

        Lines starting with ``#`` and blank lines are ignored.
        """
        entries: dict[str, str] = {}
        for lineno, line in enumerate(_read_lines(path), start=1):
            if not line.strip() or line.lstrip().startswith("#"):
                continue
            parts = line.rstrip("\n").split("\t")
            if len(parts) != 2 or not parts[0].strip() or not parts[1].strip():
                raise FormatError(f"{path}:{lineno}: expected 'surface<TAB>lemma'")
            entries[parts[0].strip()] = parts[1].strip()
        return cls(entries)


@dataclass(frozen=True)
class LemmaDictionary:
    """Map from every observed skill form to its lemma, plus the lemma set."""

    forms_to_lemma: dict[str, str]
    lemma_set: frozenset[str]
    max_key_words: int = field(default=1)

    def lookup(self, form: str) -> str | None:
        return self.forms_to_lemma.get(form)

    def __contains__(self, form: str) -> bool:
        return form in self.forms_to_lemma

    def __len__(self) -> int:
        return len(self.forms_to_lemma)


def normalize_skill(surface: str) -> SkillForms:
    """Produce the (original, normalized) pair for one skill surface.

    original: lowercased, whitespace-collapsed surface.
    normalized: original with and-connectors ("&", "+", "/") spelled out as
    "and" when they join two parts of a token (so "c++" survives, "r&d" is
    exempt) and letter-dash-word dashes removed ("e-mail" -> "email").
    """
    original = " ".join(surface.lower().split())
    if not original:
        raise EmptySkill(f"empty skill surface: {surface!r}")
    return SkillForms(original=original, normalized=_normalize_text(original))


def _normalize_text(text: str) -> str:
    tokens = [_substitute_connectors(tok) for tok in text.split()]
    joined = " ".join(tokens)
    joined = _LETTER_DASH_WORD.sub(r"\1\2", joined)
    return " ".join(joined.split())


def _substitute_connectors(token: str) -> str:
    if token in _CONNECTOR_EXEMPT:
        return token
    if all(c in _CONNECTORS for c in token):
        return "and"
    out: list[str] = []
    for i, ch in enumerate(token):
        if ch in _CONNECTORS:
            joins_before = any(c not in _CONNECTORS for c in token[:i])
            joins_after = any(c not in _CONNECTORS for c in token[i + 1:])
            if joins_before and joins_after:
                out.append(" and ")
                continue
        out.append(ch)
    return "".join(out)


def lemmatize_skill(forms: SkillForms, lexicon: LemmaLexicon) -> str:
    """Rewrite the normalized form ngram-by-ngram through the lexicon.

    Contiguous word ngrams are tried longest-first (3, 2, 1 words); a hit is
    replaced by its lemma and the scan continues after it, so replacements
    never overlap. Words with no lexicon entry pass through unchanged.
    """
    words = forms.normalized.split()
    max_n = min(3, lexicon.max_ngram_words) if lexicon.entries else 1
    out: list[str] = []
    i = 0
    while i < len(words):
        hit = None
        for n in range(min(max_n, len(words) - i), 0, -1):
            gram = " ".join(words[i : i + n])
            if gram in lexicon:
                hit = (lexicon.lemma(gram), n)
                break
        if hit is None:
            out.append(words[i])
            i += 1
        else:
            out.append(hit[0])
            i += hit[1]
    return " ".join(out)


def default_thresholds(max_words: int = 8) -> dict[int, int]:
    """Per-word-count minimum co-occurrence counts; multiword skills need fewer."""
    return {n: max(2, math.ceil(8 / n)) for n in range(1, max_words + 1)}


def filter_skills(
    entries: Iterable[RawSkillEntry], thresholds: Mapping[int, int]
) -> list[RawSkillEntry]:
    """Keep entries whose count meets the threshold for their word count.

    Word counts beyond the largest configured key reuse that key's threshold.
    """
    if not thresholds:
        raise ValueError("thresholds must cover word_count 1..max")
    top = max(thresholds)
    kept = []
    for e in entries:
        bar = thresholds.get(e.word_count, thresholds[top])
        if e.cooccurrence_count >= bar:
            kept.append(e)
    return kept


def load_stoplist(path: str | Path) -> set[str]:
    """One lemma per line; ``#`` comments and blank lines ignored."""
    terms = set()
    for line in _read_lines(path):
        term = line.strip()
        if term and not term.startswith("#"):
            terms.add(term)
    return terms


def build_lemma_dictionary(
    entries: Iterable[RawSkillEntry],
    lexicon: LemmaLexicon,
    stoplist: set[str] | frozenset[str] = frozenset(),
) -> LemmaDictionary:
    """Build the forms -> lemma map from filtered lexicon entries.

    Both the original and the normalized form of each entry key its lemma;
    every surviving lemma also maps to itself. Entries whose lemma is
    stoplisted are dropped entirely, and no stoplisted term survives as a
    key. When two lemmas claim the same form, the one whose source entry has
    the higher co-occurrence count wins; ties go to the lexicographically
    smaller lemma. Self-mappings are never displaced.
    """
    # key -> (count, lemma) best claim so far
    claims: dict[str, tuple[int, str]] = {}
    lemmas: set[str] = set()
    for entry in entries:
        forms = normalize_skill(entry.surface)
        lemma = lemmatize_skill(forms, lexicon)
        if lemma in stoplist:
            continue
        lemmas.add(lemma)
        for key in {forms.original, forms.normalized}:
            if key in stoplist:
                continue
            incumbent = claims.get(key)
            challenger = (entry.cooccurrence_count, lemma)
            if incumbent is None:
                claims[key] = challenger
            elif challenger[0] > incumbent[0] or (
                challenger[0] == incumbent[0] and challenger[1] < incumbent[1]
            ):
                claims[key] = challenger

    forms_to_lemma = {key: lemma for key, (_, lemma) in claims.items()}
    for lemma in lemmas:
        forms_to_lemma[lemma] = lemma  # self-map beats any colliding claim
    # Deterministic layout regardless of entry order.
    forms_to_lemma = dict(sorted(forms_to_lemma.items()))
    max_key_words = max((len(k.split()) for k in forms_to_lemma), default=1)
    return LemmaDictionary(
        forms_to_lemma=forms_to_lemma,
        lemma_set=frozenset(lemmas),
        max_key_words=max_key_words,
    )


def most_frequent_lemmas(
    entries: Iterable[RawSkillEntry], lexicon: LemmaLexicon, n: int = 1000
) -> list[str]:
    """Candidate stoplist: the n most frequent lemmas by co-occurrence mass.

    This is a generator for human review, not an automatic filter; the
    shipped curated stoplist is the default.
    """
    mass: Counter[str] = Counter()
    for entry in entries:
        lemma = lemmatize_skill(normalize_skill(entry.surface), lexicon)
        mass[lemma] += entry.cooccurrence_count
    return [lemma for lemma, _ in sorted(mass.items(), key=lambda kv: (-kv[1], kv[0]))[:n]]


def _read_lines(path: str | Path) -> list[str]:
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.readlines()
    except OSError as exc:
        raise FileUnreadable(f"cannot read {path}: {exc}") from exc
