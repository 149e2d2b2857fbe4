"""Command-line entry point for the full pipeline.

Subcommands: ingest, build-dict, build-index, query, analyze, contacts,
serve. Machine-readable output (JSON or CSV per --format) goes to stdout,
diagnostics to stderr. Exit codes: 0 success, 1 usage, 2 input data error,
3 internal invariant violation.

`SKILLGREP_CONFIG` may point at a key=value config file whose keys mirror
ServiceConfig; explicit flags override it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import analytics
from .companies import AliasTable, CompanyStore
from .corpus import ingest_postings, ingest_skill_lexicon
from .errors import SkillgrepError, StartupError
from .feedback import FeedbackStore
from .indexer import build_index
from .persist import load_dictionary, load_index, save_dictionary, save_index
from .query import Query, find_contacts, search_payload
from .service import ServiceConfig
from .skills import (
    LemmaLexicon,
    build_lemma_dictionary,
    default_thresholds,
    filter_skills,
    load_stoplist,
)
from .titles import TitleTaxonomy

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2
EXIT_INTERNAL = 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _config_from_env() -> ServiceConfig | None:
    path = os.environ.get("SKILLGREP_CONFIG")
    if not path:
        return None
    return ServiceConfig.from_file(path)


def _parse_range(text: str) -> tuple[int | None, int | None]:
    """``min:max`` with either end omissible (``50:``, ``:200``, ``50:200``)."""
    if ":" not in text:
        raise ValueError(f"range must be min:max, got {text!r}")
    lo_s, _, hi_s = text.partition(":")
    lo = int(lo_s) if lo_s.strip() else None
    hi = int(hi_s) if hi_s.strip() else None
    return lo, hi


def _split_csv(text: str | None) -> frozenset[str]:
    if not text:
        return frozenset()
    return frozenset(t.strip() for t in text.split(",") if t.strip())


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="skillgrep", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", parents=[], help="validate and count postings files")
    p.add_argument("--postings", required=True, nargs="+")
    p.add_argument("--input-format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--out", help="write the merged corpus as canonical JSONL")

    p = sub.add_parser("build-dict", help="build the lemma dictionary artifact")
    p.add_argument("--lexicon", required=True, help="surface,count CSV")
    p.add_argument("--lemma-lexicon", help="surface<TAB>lemma TSV (default: shipped)")
    p.add_argument("--stoplist", help="one lemma per line (default: shipped)")
    p.add_argument("--out", required=True)

    p = sub.add_parser("build-index", help="build the posting index artifact")
    p.add_argument("--corpus", required=True, nargs="+")
    p.add_argument("--input-format", choices=["jsonl", "csv"], default="jsonl")
    p.add_argument("--dict", required=True, dest="dict_path")
    p.add_argument("--out", required=True)
    p.add_argument("--aliases", help="alias,domain CSV for company resolution")
    p.add_argument("--taxonomy", help="title taxonomy CSV (default: shipped)")
    p.add_argument("--min-df", type=int, default=2)
    p.add_argument("--min-ngram-freq", type=int, default=3)
    p.add_argument("--timestamp", type=int, default=0,
                   help="build timestamp to embed (0 keeps builds byte-identical)")
    p.add_argument("--emit-matrix", metavar="PATH",
                   help="also write the (title ngram, skill) count matrix as TSV")

    p = sub.add_parser("query", help="run a conjunctive search over an index")
    p.add_argument("--index", required=True)
    p.add_argument("--companies", help="company attribute store JSONL")
    p.add_argument("--feedback-log")
    p.add_argument("--skills")
    p.add_argument("--tech")
    p.add_argument("--industry")
    p.add_argument("--micro-industry")
    p.add_argument("--dept")
    p.add_argument("--level")
    p.add_argument("--degree")
    p.add_argument("--keyword")
    p.add_argument("--revenue-min", type=int)
    p.add_argument("--revenue-max", type=int)
    p.add_argument("--employees", help="min:max (either end omissible)")
    p.add_argument("--group-by", choices=["company", "none"], default="company")
    p.add_argument("--k", type=int, default=40)
    p.add_argument("--offset", type=int, default=0)
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("analyze", help="aggregate market analytics")
    asub = p.add_subparsers(dest="analytic", required=True)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--index", required=True)
    common.add_argument("--companies")
    common.add_argument("--k", type=int, default=40)
    common.add_argument("--format", choices=["json", "csv"], default="json")
    a = asub.add_parser("top-skills", parents=[common])
    a.add_argument("--industry")
    asub.add_parser("top-technologies", parents=[common])
    a = asub.add_parser("companies-by-technology", parents=[common])
    a.add_argument("--tech", required=True)
    a = asub.add_parser("top-recruiters", parents=[common])
    a.add_argument("--skill", required=True)
    a.add_argument("--degree", required=True)

    p = sub.add_parser("contacts", help="recruiting contacts for companies")
    p.add_argument("--companies", required=True)
    p.add_argument("--domains", required=True)
    p.add_argument("--min-level", default="Manager")
    p.add_argument("--departments", default="HR")
    p.add_argument("--format", choices=["json", "csv"], default="json")

    p = sub.add_parser("serve", help="run the HTTP service")
    p.add_argument("--config")
    p.add_argument("--index")
    p.add_argument("--companies")
    p.add_argument("--aliases")
    p.add_argument("--listen", default=None)
    p.add_argument("--feedback-log", default=None)

    return parser


def _cmd_ingest(args) -> int:
    corpus = ingest_postings(args.postings, args.input_format)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            for posting in corpus.postings:
                row = {
                    "id": posting.id,
                    "title": posting.title_raw,
                    "company": posting.company_name_raw,
                    "description": posting.description_raw,
                }
                if posting.location:
                    row["location"] = posting.location
                if posting.date_posted:
                    row["date_posted"] = posting.date_posted
                fh.write(json.dumps(row, sort_keys=True) + "\n")
    manifest = [
        {"path": m.path, "total": m.total, "valid": m.valid, "skipped": m.skipped}
        for m in corpus.source_manifest
    ]
    print(json.dumps({"postings": len(corpus), "manifest": manifest}, indent=2))
    return EXIT_OK


def _data_dir() -> Path:
    return Path(__file__).parent / "data"


def _cmd_build_dict(args) -> int:
    entries = ingest_skill_lexicon(args.lexicon)
    lexicon_path = args.lemma_lexicon or _data_dir() / "lemma_lexicon.tsv"
    stoplist_path = args.stoplist or _data_dir() / "skill_stoplist.txt"
    lexicon = LemmaLexicon.from_file(lexicon_path)
    stoplist = load_stoplist(stoplist_path)
    kept = filter_skills(entries, default_thresholds())
    dictionary = build_lemma_dictionary(kept, lexicon, stoplist)
    save_dictionary(dictionary, args.out)
    print(
        json.dumps(
            {
                "entries": len(entries),
                "kept_after_threshold": len(kept),
                "forms": len(dictionary.forms_to_lemma),
                "lemmas": len(dictionary.lemma_set),
                "out": str(args.out),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_build_index(args) -> int:
    corpus = ingest_postings(args.corpus, args.input_format)
    dictionary = load_dictionary(args.dict_path)
    taxonomy = TitleTaxonomy.from_file(args.taxonomy) if args.taxonomy else None
    aliases = AliasTable.from_file(args.aliases) if args.aliases else None
    index = build_index(
        corpus,
        dictionary,
        taxonomy=taxonomy,
        alias_table=aliases,
        min_df=args.min_df,
        ngram_min_freq=args.min_ngram_freq,
        build_timestamp=args.timestamp,
    )
    save_index(index, args.out)
    if args.emit_matrix:
        from .weights import build_count_matrix

        matrix = build_count_matrix(index)
        with open(args.emit_matrix, "w", encoding="utf-8") as fh:
            fh.write("# ngram\tskill\tcount\n")
            fh.write(f"# global_total\t{matrix.global_total}\n")
            for (gram, lemma), count in sorted(matrix.counts.items()):
                fh.write(f"{gram}\t{lemma}\t{count}\n")
    print(
        json.dumps(
            {
                "postings": len(corpus),
                "indexed": index.stats.n_docs,
                "lemmas": len(index.stats.df),
                "avg_doc_len": index.stats.avg_doc_len,
                "out": str(args.out),
            },
            indent=2,
        )
    )
    return EXIT_OK


def _query_from_args(args) -> Query:
    revenue = None
    if args.revenue_min is not None or args.revenue_max is not None:
        revenue = (args.revenue_min, args.revenue_max)
    employees = _parse_range(args.employees) if args.employees else None
    return Query(
        skills=_split_csv(args.skills),
        technologies=_split_csv(args.tech),
        industries=_split_csv(args.industry),
        micro_industries=_split_csv(args.micro_industry),
        revenue_kusd_range=revenue,
        employees_range=employees,
        departments=_split_csv(args.dept),
        management_levels=_split_csv(args.level),
        degree_keywords=_split_csv(args.degree),
        free_keywords=_split_csv(args.keyword),
    )


def _cmd_query(args) -> int:
    index = load_index(args.index)
    config = _config_from_env()
    store_path = args.companies or (config.attribute_store_path if config else None)
    companies = CompanyStore.from_file(store_path) if store_path else None
    feedback_path = args.feedback_log or (
        config.feedback_log_path if config else None
    )
    feedback = FeedbackStore(feedback_path) if feedback_path else None
    try:
        q = _query_from_args(args)
    except ValueError as exc:
        print(f"skillgrep query: {exc}", file=sys.stderr)
        return EXIT_USAGE
    payload = search_payload(
        q,
        index,
        companies,
        feedback,
        offset=args.offset,
        limit=args.k,
        group_limit=args.k,
    )
    if args.group_by == "none":
        payload["groups"] = []
    if args.format == "csv":
        print("posting_id,company_domain,rank_score")
        for row in payload["results"]:
            print(f"{row['posting_id']},{row['company_domain'] or ''},{row['rank_score']}")
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_analyze(args) -> int:
    index = load_index(args.index)
    config = _config_from_env()
    store_path = args.companies or (config.attribute_store_path if config else None)
    companies = CompanyStore.from_file(store_path) if store_path else None
    if args.analytic == "top-skills":
        ranked = analytics.top_skills(
            index, k=args.k, companies=companies, industry=args.industry
        )
    elif args.analytic == "top-technologies":
        if companies is None:
            print("skillgrep analyze: --companies required", file=sys.stderr)
            return EXIT_USAGE
        ranked = analytics.top_technologies(index, companies, k=args.k)
    elif args.analytic == "companies-by-technology":
        if companies is None:
            print("skillgrep analyze: --companies required", file=sys.stderr)
            return EXIT_USAGE
        ranked = analytics.companies_by_technology(
            companies, sorted(_split_csv(args.tech)), k=args.k
        )
    else:
        ranked = analytics.top_recruiters(index, args.skill, args.degree, k=args.k)
    sys.stdout.write(analytics.emit(ranked, args.format))
    return EXIT_OK


def _cmd_contacts(args) -> int:
    companies = CompanyStore.from_file(args.companies)
    domains = sorted(_split_csv(args.domains))
    got = find_contacts(
        domains,
        companies,
        min_level=args.min_level,
        departments=_split_csv(args.departments),
    )
    payload = {
        domain: [
            {
                "name": c.name,
                "title_raw": c.title_raw,
                "level": c.level,
                "departments": sorted(c.departments),
            }
            for c in contacts
        ]
        for domain, contacts in got.items()
    }
    if args.format == "csv":
        print("domain,name,title,level")
        for domain, contacts in payload.items():
            for c in contacts:
                print(f"{domain},{c['name']},{c['title_raw']},{c['level']}")
    else:
        print(json.dumps(payload, indent=2, sort_keys=True))
    return EXIT_OK


def _cmd_serve(args) -> int:
    from .service import run

    if args.config:
        config = ServiceConfig.from_file(args.config)
    else:
        config = _config_from_env()
    if config is None:
        if not (args.index and args.companies and args.aliases):
            print(
                "skillgrep serve: provide --config/SKILLGREP_CONFIG or "
                "--index/--companies/--aliases",
                file=sys.stderr,
            )
            return EXIT_USAGE
        config = ServiceConfig(
            index_path=args.index,
            attribute_store_path=args.companies,
            alias_table_path=args.aliases,
        )
    overrides = {
        "index_path": args.index,
        "attribute_store_path": args.companies,
        "alias_table_path": args.aliases,
        "listen_address": args.listen,
        "feedback_log_path": args.feedback_log,
    }
    for key, value in overrides.items():
        if value is not None:
            setattr(config, key, value)
    run(config)
    return EXIT_OK


_COMMANDS = {
    "ingest": _cmd_ingest,
    "build-dict": _cmd_build_dict,
    "build-index": _cmd_build_index,
    "query": _cmd_query,
    "analyze": _cmd_analyze,
    "contacts": _cmd_contacts,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except StartupError as exc:
        print(f"skillgrep: {exc}", file=sys.stderr)
        return EXIT_DATA
    except SkillgrepError as exc:
        print(f"skillgrep: {exc}", file=sys.stderr)
        return EXIT_DATA
    except ValueError as exc:
        print(f"skillgrep: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Exception as exc:  # pragma: no cover - invariant violations
        print(f"skillgrep: internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    raise SystemExit(main())
