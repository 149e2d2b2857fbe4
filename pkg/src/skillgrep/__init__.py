"""skillgrep: skill extraction, ranking, and multi-attribute job search."""

__version__ = "0.1.0"

from .corpus import Corpus, JobPosting, RawSkillEntry, ingest_postings, ingest_skill_lexicon
from .skills import (
    LemmaDictionary,
    LemmaLexicon,
    SkillForms,
    build_lemma_dictionary,
    default_thresholds,
    filter_skills,
    lemmatize_skill,
    load_stoplist,
    normalize_skill,
)
from .titles import (
    NormalizedTitle,
    TitleTaxonomy,
    build_title_vocab,
    generate_title_ngrams,
    normalize_title,
    parse_title,
)
from .companies import (
    AliasTable,
    CompanyRecord,
    CompanyStore,
    WebsiteMatch,
    lookup_attributes,
    normalize_company_name,
    resolve_website,
)
from .indexer import (
    IndexStats,
    PostingIndex,
    build_index,
    compute_document_frequencies,
    compute_ltu,
    generate_bow,
    scale_tfidf,
)
from .weights import (
    CountMatrix,
    average_posting_weights,
    build_count_matrix,
    final_scores,
    skill_weight,
)
from .query import (
    CompanyGroup,
    Query,
    RankingFactors,
    SearchResult,
    attribute_score,
    execute_query,
    find_contacts,
    group_by_company,
    rank_score,
)
from .analytics import (
    RankedList,
    companies_by_technology,
    top_recruiters,
    top_skills,
    top_technologies,
)
from .persist import load_dictionary, load_index, save_dictionary, save_index
