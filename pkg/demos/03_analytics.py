#!/usr/bin/env python3
"""Market analytics over the fixture corpus: the four aggregate views.

Run from the repo root:  python3 demos/03_analytics.py
"""

from pathlib import Path

from skillgrep.analytics import (
    companies_by_technology,
    top_recruiters,
    top_skills,
    top_technologies,
)
from skillgrep.companies import AliasTable, CompanyStore
from skillgrep.corpus import ingest_postings, ingest_skill_lexicon
from skillgrep.indexer import build_index
from skillgrep.skills import (
    LemmaLexicon,
    build_lemma_dictionary,
    default_thresholds,
    filter_skills,
    load_stoplist,
)

ROOT = Path(__file__).resolve().parents[1]
FIXTURES = ROOT / "fixtures"
DATA = ROOT / "src" / "skillgrep" / "data"

dictionary = build_lemma_dictionary(
    filter_skills(
        ingest_skill_lexicon(FIXTURES / "skill_lexicon.csv"), default_thresholds()
    ),
    LemmaLexicon.from_file(DATA / "lemma_lexicon.tsv"),
    load_stoplist(DATA / "skill_stoplist.txt"),
)
index = build_index(
    ingest_postings(FIXTURES / "postings.jsonl", "jsonl"),
    dictionary,
    alias_table=AliasTable.from_file(FIXTURES / "aliases.csv"),
)
companies = CompanyStore.from_file(FIXTURES / "companies.jsonl")


def show(title, ranked, k=8):
    print(f"\n== {title} ==")
    for label, score in ranked.items[:k]:
        print(f"  {score:10.3f}  {label}")


show("top skills, whole corpus (sum of final scores)", top_skills(index, k=40))
for industry in ("restaurant chain", "staffing services", "health services"):
    show(
        f"top skills in the {industry} industry",
        top_skills(index, k=40, companies=companies, industry=industry),
    )
show(
    "top technologies by adopting companies",
    top_technologies(index, companies, k=40),
)
show(
    "companies using BOTH tableau and mongodb",
    companies_by_technology(companies, ["tableau", "mongodb"], k=40),
)
show(
    "top recruiters wanting java plus a master degree",
    top_recruiters(index, "java", "master degree", k=40),
)
