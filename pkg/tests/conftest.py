import pytest
from pathlib import Path

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


@pytest.fixture(scope="session")
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def lemma_lexicon() -> LemmaLexicon:
    return LemmaLexicon.from_file(DATA / "lemma_lexicon.tsv")


@pytest.fixture(scope="session")
def stoplist() -> set[str]:
    return load_stoplist(DATA / "skill_stoplist.txt")


@pytest.fixture(scope="session")
def dictionary(lemma_lexicon, stoplist):
    entries = ingest_skill_lexicon(FIXTURES / "skill_lexicon.csv")
    kept = filter_skills(entries, default_thresholds())
    return build_lemma_dictionary(kept, lemma_lexicon, stoplist)


@pytest.fixture(scope="session")
def corpus():
    return ingest_postings(FIXTURES / "postings.jsonl", "jsonl")


@pytest.fixture(scope="session")
def alias_table() -> AliasTable:
    return AliasTable.from_file(FIXTURES / "aliases.csv")


@pytest.fixture(scope="session")
def company_store() -> CompanyStore:
    return CompanyStore.from_file(FIXTURES / "companies.jsonl")


@pytest.fixture(scope="session")
def index(corpus, dictionary, alias_table):
    return build_index(corpus, dictionary, alias_table=alias_table)
