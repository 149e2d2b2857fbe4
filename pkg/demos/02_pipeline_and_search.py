#!/usr/bin/env python3
"""End-to-end walkthrough: lexicon -> dictionary -> index -> search.

Builds everything in memory from the shipped fixtures, then runs the
flagship conjunctive query (python + scala skills, jQuery technology,
engineering vertical, bachelor degree, revenue > 1M USD, 50-200 employees)
and prints the company-grouped results with their ranking factors.

Run from the repo root:  python3 demos/02_pipeline_and_search.py
"""

from pathlib import Path

from skillgrep.companies import AliasTable, CompanyStore
from skillgrep.corpus import ingest_postings, ingest_skill_lexicon
from skillgrep.indexer import build_index
from skillgrep.query import Query, execute_query, find_contacts, group_by_company
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

# 1. skill dictionary: threshold-filter the lexicon, normalize, lemmatize
entries = ingest_skill_lexicon(FIXTURES / "skill_lexicon.csv")
kept = filter_skills(entries, default_thresholds())
dictionary = build_lemma_dictionary(
    kept,
    LemmaLexicon.from_file(DATA / "lemma_lexicon.tsv"),
    load_stoplist(DATA / "skill_stoplist.txt"),
)
print(f"lexicon: {len(entries)} surfaces -> {len(kept)} kept -> "
      f"{len(dictionary.lemma_set)} lemmas / {len(dictionary.forms_to_lemma)} forms")

# 2. corpus + index (BOW, df filter, LTU, scaling, title weights)
corpus = ingest_postings(FIXTURES / "postings.jsonl", "jsonl")
aliases = AliasTable.from_file(FIXTURES / "aliases.csv")
index = build_index(corpus, dictionary, alias_table=aliases)
print(f"index: {index.stats.n_docs} postings, {len(index.stats.df)} lemmas, "
      f"avg doc len {index.stats.avg_doc_len:.2f}")

# 3. what the ranking machinery thinks one posting is about
doc = index.docs["post-0002"]
print(f"\ntop skills for {doc.posting_id} ({doc.title_text!r}):")
for lemma, score in sorted(doc.final_scores.items(), key=lambda kv: -kv[1])[:5]:
    print(f"  {lemma:18} final={score:7.3f}  weight={doc.weights[lemma]:6.3f}  "
          f"scaled_ltu={doc.scaled_tfidf[lemma]:5.3f}")

# 4. the flagship conjunctive query
companies = CompanyStore.from_file(FIXTURES / "companies.jsonl")
query = Query(
    skills=frozenset({"python", "scala"}),
    technologies=frozenset({"jquery"}),
    departments=frozenset({"Engineering"}),
    degree_keywords=frozenset({"bachelor degree"}),
    revenue_kusd_range=(1000, None),
    employees_range=(50, 200),
)
results = execute_query(query, index, companies)
print(f"\nflagship query matches {len(results)} postings "
      "(every populated filter must hold):")
for group in group_by_company(results, companies, top_n=40):
    rec = group.summary
    print(f"  {group.domain}  best={group.best_score:.4f}  "
          f"(employees={rec.employees}, revenue={rec.revenue_kusd} kUSD)")
    for r in group.results:
        f = r.factors
        print(f"    {r.posting_id}  rank={r.rank_score:.4f}  "
              f"[feedback={f.feedback:.2f} af={f.af:.2f} ef={f.ef:.2f} "
              f"nlf={f.nlf:.2f} cks={f.cks:.2f}]")

# 5. recruiting contacts for the winning companies
domains = [g.domain for g in group_by_company(results, companies, top_n=3)]
print("\nrecruiting contacts (level >= Manager or HR department):")
for domain, contacts in find_contacts(domains, companies).items():
    for c in contacts:
        print(f"  {domain:18}  {c.name} - {c.title_raw} [{c.level}]")
