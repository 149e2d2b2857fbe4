"""Company-name normalization, alias-table website resolution, attributes.

The name->website step stands in for a proprietary resolution service: a
local alias table answers exact hits at confidence 1.0 and token-Jaccard
fuzzy hits at their similarity, floored at 0.6. Firmographic attributes and
contacts load from a JSONL store keyed by domain.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Mapping

from .errors import EmptyName, FileUnreadable, FormatError
from .titles import TitleTaxonomy, normalize_title, parse_title

# Legal-form tokens dropped only at the edges of a name.
DEFAULT_EDGE_TOKENS = frozenset(
    """llc ltd corp inc co plc llp lp pllc pc gmbh sa ag nv bv pty srl kk the
    """.split()
)

# Generic tokens dropped anywhere in a name; not useful to recognize a company.
DEFAULT_NAME_STOPWORDS = frozenset(
    """technologies technology management service services pvt group solutions
    solution holdings holding international enterprises enterprise consulting
    partners company companies corporation incorporated limited corporate com
    """.split()
)

FUZZY_FLOOR = 0.6


@dataclass(frozen=True)
class NormalizedCompanyName:
    text: str

    def tokens(self) -> list[str]:
        return self.text.split()


@dataclass(frozen=True)
class WebsiteMatch:
    domain: str
    confidence: float


@dataclass(frozen=True)
class Contact:
    name: str
    title_raw: str
    level: str
    departments: frozenset[str]


@dataclass(frozen=True)
class CompanyRecord:
    domain: str
    employees: int | None = None
    revenue_kusd: int | None = None
    industry: str | None = None
    micro_industries: dict[str, float] = field(default_factory=dict)
    technographics: frozenset[str] = frozenset()
    alexa_rank: int | None = None
    social_followers: int | None = None
    contacts: tuple[Contact, ...] = ()


def normalize_company_name(
    raw: str,
    edge_tokens: frozenset[str] = DEFAULT_EDGE_TOKENS,
    stopwords: frozenset[str] = DEFAULT_NAME_STOPWORDS,
) -> NormalizedCompanyName:
    """Reduce a raw company name to its matchable core.

    Lowercase, "'s" -> "s", non-alphanumerics to spaces; legal-form tokens
    dropped from the edges, generic stopword tokens dropped anywhere. Either
    dropping stage is undone if it would delete the whole name.
    """
    if not raw or not raw.strip():
        raise EmptyName(f"empty company name: {raw!r}")
    s = raw.lower().replace("'s", "s").replace("’s", "s")
    s = "".join(ch if ch.isalnum() else " " for ch in s)
    tokens = s.split()
    if not tokens:
        raise EmptyName(f"company name has no alphanumeric content: {raw!r}")

    trimmed = list(tokens)
    while trimmed and trimmed[0] in edge_tokens:
        trimmed.pop(0)
    while trimmed and trimmed[-1] in edge_tokens:
        trimmed.pop()
    if not trimmed:
        trimmed = tokens

    kept = [t for t in trimmed if t not in stopwords]
    if not kept:
        kept = trimmed
    return NormalizedCompanyName(text=" ".join(kept))


@dataclass(frozen=True)
class AliasTable:
    """Normalized alias -> registrable domain, with optional row locations."""

    alias_to_domain: dict[str, str]
    alias_locations: dict[str, str] = field(default_factory=dict)

    @classmethod
    def from_file(cls, path: str | Path) -> "AliasTable":
        """Load ``alias,domain[,location]`` CSV; aliases are normalized on load."""
        import csv

        alias_to_domain: dict[str, str] = {}
        locations: dict[str, str] = {}
        try:
            with open(path, newline="", encoding="utf-8") as fh:
                rows = list(csv.reader(fh))
        except OSError as exc:
            raise FileUnreadable(f"cannot read alias table {path}: {exc}") from exc
        for lineno, row in enumerate(rows, start=1):
            if not row or row[0].lstrip().startswith("#"):
                continue
            if [c.strip().lower() for c in row[:2]] == ["alias", "domain"]:
                continue
            if len(row) < 2:
                raise FormatError(f"{path}:{lineno}: expected 'alias,domain[,location]'")
            alias = normalize_company_name(row[0]).text
            domain = row[1].strip().lower()
            if not domain or "/" in domain or ":" in domain:
                raise FormatError(
                    f"{path}:{lineno}: domain must be bare and lowercase: {row[1]!r}"
                )
            existing = alias_to_domain.get(alias)
            if existing is not None and existing != domain:
                raise FormatError(
                    f"{path}:{lineno}: alias {alias!r} maps to both "
                    f"{existing!r} and {domain!r}"
                )
            alias_to_domain[alias] = domain
            if len(row) >= 3 and row[2].strip():
                locations[alias] = row[2].strip().lower()
        return cls(alias_to_domain=alias_to_domain, alias_locations=locations)


def token_jaccard(a: str, b: str) -> float:
    ta, tb = set(a.split()), set(b.split())
    if not ta or not tb:
        return 0.0
    return len(ta & tb) / len(ta | tb)


def resolve_website(
    name: NormalizedCompanyName,
    location: str | None = None,
    table: AliasTable | None = None,
) -> WebsiteMatch | None:
    """Resolve a normalized name to a domain, or None when nothing is close.

    Exact alias hit: confidence 1.0. Otherwise the best token-Jaccard alias
    wins with confidence equal to the similarity, returned only at >= 0.6.
    Location breaks ties between equally similar candidates when the alias
    rows carry one.
    """
    if table is None or not table.alias_to_domain:
        return None
    exact = table.alias_to_domain.get(name.text)
    if exact is not None:
        return WebsiteMatch(domain=exact, confidence=1.0)

    loc = location.strip().lower() if location else None
    best: tuple | None = None
    for alias, domain in table.alias_to_domain.items():
        sim = token_jaccard(name.text, alias)
        if sim < FUZZY_FLOOR:
            continue
        alias_loc = table.alias_locations.get(alias)
        loc_match = bool(loc and alias_loc and (alias_loc in loc or loc in alias_loc))
        key = (-sim, not loc_match, domain, alias)
        if best is None or key < best[0]:
            best = (key, sim, domain)
    if best is None:
        return None
    return WebsiteMatch(domain=best[2], confidence=best[1])


class CompanyStore:
    """Immutable domain-keyed attribute store loaded from JSONL."""

    def __init__(self, records: Mapping[str, CompanyRecord]):
        self.records = dict(records)

    def get(self, domain: str | None) -> CompanyRecord | None:
        if domain is None:
            return None
        return self.records.get(domain)

    def __len__(self) -> int:
        return len(self.records)

    def __iter__(self):
        return iter(self.records.values())

    @classmethod
    def from_file(
        cls, path: str | Path, taxonomy: TitleTaxonomy | None = None
    ) -> "CompanyStore":
        records: dict[str, CompanyRecord] = {}
        try:
            with open(path, encoding="utf-8") as fh:
                lines = fh.readlines()
        except OSError as exc:
            raise FileUnreadable(f"cannot read company store {path}: {exc}") from exc
        for lineno, line in enumerate(lines, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise FormatError(f"{path}:{lineno}: invalid JSON: {exc}") from exc
            rec = _parse_company(obj, f"{path}:{lineno}", taxonomy)
            if rec.domain in records:
                raise FormatError(f"{path}:{lineno}: duplicate domain {rec.domain!r}")
            records[rec.domain] = rec
        return cls(records)


def _parse_company(
    obj: dict, where: str, taxonomy: TitleTaxonomy | None
) -> CompanyRecord:
    domain = obj.get("domain")
    if not isinstance(domain, str) or not domain:
        raise FormatError(f"{where}: missing domain")
    micro = obj.get("micro_industries") or {}
    for k, v in micro.items():
        if not isinstance(v, (int, float)) or not 0.0 <= v <= 1.0:
            raise FormatError(f"{where}: micro-industry score {k}={v!r} outside [0,1]")
    alexa = obj.get("alexa_rank")
    if alexa is not None and (not isinstance(alexa, int) or alexa < 1):
        raise FormatError(f"{where}: alexa_rank must be a positive integer")
    for fieldname in ("employees", "revenue_kusd", "social_followers"):
        v = obj.get(fieldname)
        if v is not None and (not isinstance(v, int) or v < 0):
            raise FormatError(f"{where}: {fieldname} must be a non-negative integer")
    contacts = []
    for c in obj.get("contacts") or []:
        name = c.get("name", "")
        title_raw = c.get("title_raw") or c.get("title") or ""
        if not title_raw:
            raise FormatError(f"{where}: contact without title")
        level, departments = parse_title(normalize_title(title_raw), taxonomy)
        contacts.append(
            Contact(name=name, title_raw=title_raw, level=level, departments=departments)
        )
    return CompanyRecord(
        domain=domain.lower(),
        employees=obj.get("employees"),
        revenue_kusd=obj.get("revenue_kusd"),
        industry=obj.get("industry"),
        micro_industries={k.lower(): float(v) for k, v in micro.items()},
        technographics=frozenset(t.lower() for t in obj.get("technographics") or []),
        alexa_rank=alexa,
        social_followers=obj.get("social_followers"),
        contacts=tuple(contacts),
    )


def lookup_attributes(domain: str, store: CompanyStore) -> CompanyRecord | None:
    """The company record for a domain, or None; attributes are never invented."""
    return store.get(domain)
