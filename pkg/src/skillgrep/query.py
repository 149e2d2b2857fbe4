"""Conjunctive multi-attribute search and multiplicative relevance ranking.

A posting is returned only when it satisfies every populated query filter
simultaneously (the deliberate contrast with engines that match any one
keyword). Matches are ranked by

    rank = attribute_score * mean(weight of each user-given skill)
    attribute_score = feedback * af * ef * nlf * cks

where af derives from web-traffic rank, ef from employee count, nlf from
the posting's distinct-lemma coverage, and cks is the square root of the
company's micro-industry keyword score. Absent company attributes
contribute a neutral 1.0 and are flagged in the returned factors.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from typing import Iterable, Mapping

from .companies import CompanyRecord, CompanyStore
from .errors import UnknownSkill
from .feedback import FeedbackStore
from .indexer import DocEntry, PostingIndex, fold_description
from .titles import LEVEL_RANK

EMPLOYEE_CAP = 10**6
LEMMA_COVERAGE_CAP = 20


@dataclass(frozen=True)
class Query:
    """One multi-attribute search. At least one field must be populated.

    Set-valued fields are conjunctive against multi-valued posting/company
    attributes (skills, technologies, micro_industries, degree/free
    keywords: all must hold) and disjunctive against single-valued ones
    (industries, management_levels: the value must be one of them);
    departments match when any query department is among the posting's.
    """

    skills: frozenset[str] = frozenset()
    technologies: frozenset[str] = frozenset()
    industries: frozenset[str] = frozenset()
    micro_industries: frozenset[str] = frozenset()
    revenue_kusd_range: tuple[int | None, int | None] | None = None
    employees_range: tuple[int | None, int | None] | None = None
    departments: frozenset[str] = frozenset()
    management_levels: frozenset[str] = frozenset()
    degree_keywords: frozenset[str] = frozenset()
    free_keywords: frozenset[str] = frozenset()

    def __post_init__(self):
        if not any(self.populated_fields()):
            raise ValueError("query must populate at least one field")
        for name in ("revenue_kusd_range", "employees_range"):
            rng = getattr(self, name)
            if rng is not None:
                lo, hi = rng
                if lo is not None and hi is not None and lo > hi:
                    raise ValueError(f"{name}: min {lo} > max {hi}")

    def populated_fields(self) -> list[str]:
        out = []
        for f in fields(self):
            v = getattr(self, f.name)
            if v:
                out.append(f.name)
        return out

    def company_constrained(self) -> bool:
        return bool(
            self.technologies
            or self.industries
            or self.micro_industries
            or self.revenue_kusd_range is not None
            or self.employees_range is not None
        )

    def to_json(self) -> dict:
        return {
            "skills": sorted(self.skills),
            "technologies": sorted(self.technologies),
            "industries": sorted(self.industries),
            "micro_industries": sorted(self.micro_industries),
            "revenue_kusd_range": list(self.revenue_kusd_range)
            if self.revenue_kusd_range
            else None,
            "employees_range": list(self.employees_range)
            if self.employees_range
            else None,
            "departments": sorted(self.departments),
            "management_levels": sorted(self.management_levels),
            "degree_keywords": sorted(self.degree_keywords),
            "free_keywords": sorted(self.free_keywords),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "Query":
        def fs(key):
            return frozenset(obj.get(key) or [])

        def rng(key):
            v = obj.get(key)
            if v is None:
                return None
            lo, hi = v
            return (lo, hi)

        return cls(
            skills=fs("skills"),
            technologies=fs("technologies"),
            industries=fs("industries"),
            micro_industries=fs("micro_industries"),
            revenue_kusd_range=rng("revenue_kusd_range"),
            employees_range=rng("employees_range"),
            departments=fs("departments"),
            management_levels=fs("management_levels"),
            degree_keywords=fs("degree_keywords"),
            free_keywords=fs("free_keywords"),
        )


@dataclass(frozen=True)
class RankingFactors:
    feedback: float
    af: float
    ef: float
    nlf: float
    cks: float
    neutral: frozenset[str] = frozenset()

    def product(self) -> float:
        return self.feedback * self.af * self.ef * self.nlf * self.cks

    def to_json(self) -> dict:
        return {
            "feedback": self.feedback,
            "af": self.af,
            "ef": self.ef,
            "nlf": self.nlf,
            "cks": self.cks,
            "neutral": sorted(self.neutral),
        }


@dataclass(frozen=True)
class SearchResult:
    posting_id: str
    company_domain: str | None
    rank_score: float
    matched_skills: dict[str, float]
    factors: RankingFactors

    def to_json(self) -> dict:
        return {
            "posting_id": self.posting_id,
            "company_domain": self.company_domain,
            "rank_score": self.rank_score,
            "matched_skills": dict(sorted(self.matched_skills.items())),
            "factors": self.factors.to_json(),
        }


@dataclass(frozen=True)
class CompanyGroup:
    domain: str | None
    best_score: float
    results: tuple[SearchResult, ...]
    summary: CompanyRecord | None = None

    def to_json(self) -> dict:
        summary = None
        if self.summary is not None:
            c = self.summary
            summary = {
                "domain": c.domain,
                "employees": c.employees,
                "revenue_kusd": c.revenue_kusd,
                "industry": c.industry,
                "alexa_rank": c.alexa_rank,
                "social_followers": c.social_followers,
                "technographics": sorted(c.technographics),
            }
        return {
            "domain": self.domain,
            "best_score": self.best_score,
            "results": [r.to_json() for r in self.results],
            "company": summary,
        }


def resolve_query_skills(skills: Iterable[str], index: PostingIndex) -> dict[str, str]:
    """Map each user skill string to its retained lemma, or raise UnknownSkill."""
    resolved = {}
    unknown = []
    for skill in sorted(skills):
        lemma = index.lemma_for(skill)
        if lemma is None:
            unknown.append(skill)
        else:
            resolved[skill] = lemma
    if unknown:
        raise UnknownSkill(f"skills not in the index dictionary: {unknown}")
    return resolved


def phrase_in_tokens(phrase: str, tokens: tuple[str, ...]) -> bool:
    """True when the folded phrase occurs as consecutive tokens."""
    words = list(fold_description(phrase))
    if not words:
        return False
    n = len(words)
    return any(list(tokens[i : i + n]) == words for i in range(len(tokens) - n + 1))


def _matches_company(q: Query, record: CompanyRecord | None) -> bool:
    if not q.company_constrained():
        return True
    if record is None:
        return False  # MissingCompanyRecord: excluded from company-filtered queries
    if q.technologies and not {t.lower() for t in q.technologies} <= record.technographics:
        return False
    if q.industries:
        industry = (record.industry or "").lower()
        if industry not in {i.lower() for i in q.industries}:
            return False
    if q.micro_industries:
        named = {m.lower() for m in q.micro_industries}
        if not named <= set(record.micro_industries):
            return False
    if q.revenue_kusd_range is not None:
        if record.revenue_kusd is None or not _in_range(
            record.revenue_kusd, q.revenue_kusd_range
        ):
            return False
    if q.employees_range is not None:
        if record.employees is None or not _in_range(
            record.employees, q.employees_range
        ):
            return False
    return True


def _in_range(value: int, rng: tuple[int | None, int | None]) -> bool:
    lo, hi = rng
    if lo is not None and value < lo:
        return False
    if hi is not None and value > hi:
        return False
    return True


def _matches_posting(q: Query, doc: DocEntry, lemmas: Mapping[str, str]) -> bool:
    for lemma in lemmas.values():
        if lemma not in doc.bag:
            return False
    if q.departments:
        wanted = {d.lower() for d in q.departments}
        if not wanted & {d.lower() for d in doc.departments}:
            return False
    if q.management_levels:
        if doc.level.lower() not in {l.lower() for l in q.management_levels}:
            return False
    for phrase in sorted(q.degree_keywords | q.free_keywords):
        if not phrase_in_tokens(phrase, doc.description_tokens):
            return False
    return True


def attribute_score(
    record: CompanyRecord | None,
    doc: DocEntry,
    feedback: FeedbackStore | None = None,
    micro_industries: frozenset[str] = frozenset(),
) -> tuple[float, RankingFactors]:
    """The multiplicative company/posting factor and its breakdown.

    Factor stand-ins (each bounded in (0,1], neutral 1.0 when its attribute
    is absent):
      af  = 1 / (1 + log10(alexa_rank))
      ef  = min(1, log10(1 + employees) / log10(1 + 10^6))
      nlf = min(1, distinct BOW lemmas / 20)
      feedback = log2(2 + clicks) / corpus max, 1.0 with no click data
      cks = sqrt(mean of named micro-industry scores), 1.0 when none named
    """
    neutral = set()

    if record is not None and record.alexa_rank is not None:
        af = 1.0 / (1.0 + math.log10(record.alexa_rank))
    else:
        af = 1.0
        neutral.add("af")

    if record is not None and record.employees:
        ef = min(1.0, math.log10(1 + record.employees) / math.log10(1 + EMPLOYEE_CAP))
    else:
        ef = 1.0
        neutral.add("ef")

    nlf = min(1.0, len(doc.bag) / LEMMA_COVERAGE_CAP)

    if feedback is not None and feedback.has_data():
        fb = feedback.factor(doc.posting_id)
    else:
        fb = 1.0
        neutral.add("feedback")

    if micro_industries and record is not None:
        scores = [
            record.micro_industries.get(m.lower(), 0.0) for m in sorted(micro_industries)
        ]
        cks = math.sqrt(sum(scores) / len(scores))
    else:
        cks = 1.0
        if micro_industries:
            neutral.add("cks")

    factors = RankingFactors(
        feedback=fb, af=af, ef=ef, nlf=nlf, cks=cks, neutral=frozenset(neutral)
    )
    return factors.product(), factors


def rank_score(
    q: Query,
    doc: DocEntry,
    attr: float,
    weights: Mapping[str, float],
    skill_lemmas: Mapping[str, str] | None = None,
) -> float:
    """attribute score times the mean weight of the user-given skills.

    ``weights`` is the posting's lemma -> averaged-weight map. A query with
    no skills ranks on the attribute score alone (neutral 1.0 skill term).
    Under conjunctive matching every query skill is present, so each one
    contributes its full weight to the mean.
    """
    if not q.skills:
        return attr * 1.0
    if skill_lemmas is None:
        skill_lemmas = {s: " ".join(s.lower().split()) for s in q.skills}
    ws = [weights[skill_lemmas[s]] for s in sorted(q.skills)]
    return attr * (sum(ws) / len(ws))


def execute_query(
    q: Query,
    index: PostingIndex,
    companies: CompanyStore | None = None,
    feedback: FeedbackStore | None = None,
    offset: int = 0,
    limit: int | None = None,
) -> list[SearchResult]:
    """All postings satisfying every populated filter, ranked.

    Results sort by rank score descending, ties broken by posting id
    ascending, then the offset/limit window is applied.
    """
    lemmas = resolve_query_skills(q.skills, index) if q.skills else {}
    results: list[SearchResult] = []
    for doc in index.docs.values():
        if not _matches_posting(q, doc, lemmas):
            continue
        record = companies.get(doc.company_domain) if companies else None
        if not _matches_company(q, record):
            continue
        attr, factors = attribute_score(record, doc, feedback, q.micro_industries)
        score = rank_score(q, doc, attr, doc.weights, lemmas)
        results.append(
            SearchResult(
                posting_id=doc.posting_id,
                company_domain=doc.company_domain,
                rank_score=score,
                matched_skills={l: doc.final_scores[l] for l in lemmas.values()},
                factors=factors,
            )
        )
    results.sort(key=lambda r: (-r.rank_score, r.posting_id))
    if limit is None:
        return results[offset:]
    return results[offset : offset + limit]


def group_by_company(
    results: Iterable[SearchResult],
    companies: CompanyStore | None = None,
    top_n: int | None = None,
) -> list[CompanyGroup]:
    """Group ranked results by company, best member score first.

    Members keep their rank order inside each group; groups tie-break on
    domain. Results with no resolved company group together at the end of
    equal scores under domain None.
    """
    by_domain: dict[str | None, list[SearchResult]] = {}
    for r in results:
        by_domain.setdefault(r.company_domain, []).append(r)
    groups = [
        CompanyGroup(
            domain=domain,
            best_score=max(m.rank_score for m in members),
            results=tuple(members),
            summary=companies.get(domain) if companies else None,
        )
        for domain, members in by_domain.items()
    ]
    groups.sort(key=lambda g: (-g.best_score, g.domain is None, g.domain or ""))
    if top_n is not None:
        groups = groups[:top_n]
    return groups


def search_payload(
    q: Query,
    index: PostingIndex,
    companies: CompanyStore | None = None,
    feedback: FeedbackStore | None = None,
    offset: int = 0,
    limit: int | None = None,
    group_limit: int | None = None,
) -> dict:
    """The canonical search response: ranked results plus company groups.

    The CLI and the HTTP service both emit exactly this payload, so their
    outputs are comparable as JSON values. Groups are computed over the
    full match set (top ``group_limit`` companies); ``offset``/``limit``
    window only the flat result list.
    """
    results = execute_query(q, index, companies, feedback)
    window = results[offset : offset + limit] if limit is not None else results[offset:]
    groups = group_by_company(results, companies, top_n=group_limit)
    return {
        "query": q.to_json(),
        "total_matches": len(results),
        "results": [r.to_json() for r in window],
        "groups": [g.to_json() for g in groups],
    }


def find_contacts(
    domains: Iterable[str],
    store: CompanyStore,
    min_level: str = "Manager",
    departments: frozenset[str] = frozenset({"HR"}),
) -> dict[str, list]:
    """Recruiting-relevant contacts per domain.

    Default filter: management level at or above Manager, or any department
    overlap with HR; both knobs are overridable. Unknown domains yield
    empty lists.
    """
    floor = LEVEL_RANK[min_level]
    out: dict[str, list] = {}
    for domain in domains:
        record = store.get(domain)
        if record is None:
            out[domain] = []
            continue
        out[domain] = [
            c
            for c in record.contacts
            if LEVEL_RANK[c.level] >= floor or (set(c.departments) & set(departments))
        ]
    return out
