"""Aggregate job-market analytics over a built index and company store.

Four views: top skills (optionally within an industry), most-adopted
technologies, companies carrying a full technology set, and the companies
hiring hardest for a skill + degree combination. Each emits a ranked
(label, score) list capped at k, ties broken lexicographically.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Iterable

from .companies import CompanyStore
from .errors import UnknownIndustry, UnknownSkill
from .indexer import PostingIndex
from .query import EMPLOYEE_CAP, phrase_in_tokens


@dataclass(frozen=True)
class RankedList:
    items: tuple[tuple[str, float], ...]
    k: int

    def labels(self) -> list[str]:
        return [label for label, _ in self.items]

    def to_json(self) -> list[dict]:
        return [{"label": label, "score": score} for label, score in self.items]

    def to_csv(self) -> str:
        lines = ["label,score"]
        for label, score in self.items:
            quoted = f'"{label}"' if ("," in label or '"' in label) else label
            lines.append(f"{quoted},{score}")
        return "\n".join(lines) + "\n"


def _ranked(scores: dict[str, float], k: int) -> RankedList:
    ordered = sorted(scores.items(), key=lambda kv: (-kv[1], kv[0]))[:k]
    return RankedList(items=tuple(ordered), k=k)


def top_skills(
    index: PostingIndex,
    k: int = 40,
    companies: CompanyStore | None = None,
    industry: str | None = None,
) -> RankedList:
    """Skills ranked by summed final score, optionally within one industry.

    Final score (weight x scaled LTU) rather than raw frequency, so
    boilerplate cannot dominate the list.
    """
    domains: set[str] | None = None
    if industry is not None:
        if companies is None:
            raise UnknownIndustry("industry filter requires a company store")
        wanted = industry.lower()
        domains = {
            c.domain for c in companies if (c.industry or "").lower() == wanted
        }
        if not domains:
            raise UnknownIndustry(f"no company carries industry {industry!r}")
    totals: dict[str, float] = {}
    for doc in index.docs.values():
        if domains is not None and doc.company_domain not in domains:
            continue
        for lemma, score in doc.final_scores.items():
            totals[lemma] = totals.get(lemma, 0.0) + score
    return _ranked(totals, k)


def top_technologies(
    index: PostingIndex, companies: CompanyStore, k: int = 40
) -> RankedList:
    """Technologies ranked by how many index-referenced companies carry them."""
    referenced = {
        doc.company_domain for doc in index.docs.values() if doc.company_domain
    }
    counts: dict[str, float] = {}
    for domain in referenced:
        record = companies.get(domain)
        if record is None:
            continue
        for tech in record.technographics:
            counts[tech] = counts.get(tech, 0.0) + 1
    return _ranked(counts, k)


def companies_by_technology(
    companies: CompanyStore, technologies: Iterable[str], k: int = 40
) -> RankedList:
    """Companies carrying ALL named technologies, by neutral attribute score.

    With no query in play the posting-level and feedback factors are
    neutral, so the score reduces to the traffic and size factors.
    """
    wanted = {t.lower() for t in technologies}
    scores: dict[str, float] = {}
    for record in companies:
        if not wanted <= record.technographics:
            continue
        score = 1.0
        if record.alexa_rank is not None:
            score *= 1.0 / (1.0 + math.log10(record.alexa_rank))
        if record.employees:
            score *= min(
                1.0, math.log10(1 + record.employees) / math.log10(1 + EMPLOYEE_CAP)
            )
        scores[record.domain] = score
    return _ranked(scores, k)


def top_recruiters(
    index: PostingIndex, skill: str, degree_keyword: str, k: int = 40
) -> RankedList:
    """Companies by number of postings needing the skill plus the degree."""
    lemma = index.lemma_for(skill)
    if lemma is None or lemma not in index.stats.df:
        raise UnknownSkill(f"skill {skill!r} is not in the index")
    counts: dict[str, float] = {}
    for doc in index.docs.values():
        if doc.company_domain is None:
            continue
        if lemma not in doc.bag:
            continue
        if not phrase_in_tokens(degree_keyword, doc.description_tokens):
            continue
        counts[doc.company_domain] = counts.get(doc.company_domain, 0.0) + 1
    return _ranked(counts, k)


def emit(ranked: RankedList, fmt: str = "json") -> str:
    if fmt == "csv":
        return ranked.to_csv()
    return json.dumps(ranked.to_json(), indent=2) + "\n"
