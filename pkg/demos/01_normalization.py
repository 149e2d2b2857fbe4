#!/usr/bin/env python3
"""Tour of the text-normalization layers: skills, titles, company names.

Run from the repo root:  python3 demos/01_normalization.py
"""

from pathlib import Path

from skillgrep.companies import normalize_company_name
from skillgrep.skills import LemmaLexicon, lemmatize_skill, normalize_skill
from skillgrep.titles import normalize_title, parse_title

DATA = Path(__file__).resolve().parents[1] / "src" / "skillgrep" / "data"


print("== skill normalization ==")
# Connector characters become "and" when they join two things; "r&d" is
# exempt and "c++" is untouched because its pluses join nothing.
for surface in ["e-mail", "c#/.net", "c# & .net", "R&D", "c++", "design + build"]:
    forms = normalize_skill(surface)
    print(f"  {surface!r:20} -> original={forms.original!r:18} normalized={forms.normalized!r}")

print("\n== lemmatization ==")
lexicon = LemmaLexicon.from_file(DATA / "lemma_lexicon.tsv")
for surface in ["systems installations", "system installing", "data analyses", "java"]:
    lemma = lemmatize_skill(normalize_skill(surface), lexicon)
    print(f"  {surface!r:26} -> {lemma!r}")

print("\n== title normalization and classification ==")
for raw in [
    "VP of Engineering",
    "Software Engineer II",
    "Sr. Accountant - Senior I",
    "Director, Marketing & Sales",
    "CEO",
]:
    title = normalize_title(raw)
    level, departments = parse_title(title)
    extra = f" variants={sorted(title.acronym_variants)}" if title.acronym_variants else ""
    print(f"  {raw!r:30} -> {title.text!r:36} [{level}; {', '.join(sorted(departments))}]{extra}")

print("\n== company-name normalization ==")
for raw in [
    "Macy's",
    "Amazon Web Services, Inc",
    "ABC Technologies LLC",
    "The BrightForge Software Co",
    "LLC",
]:
    print(f"  {raw!r:30} -> {normalize_company_name(raw).text!r}")
