import random

import pytest
from hypothesis import given, strategies as st

import oracles
from skillgrep.corpus import Corpus, JobPosting
from skillgrep.errors import DomainError, EmptyCorpus
from skillgrep.indexer import (
    IndexStats,
    build_index,
    compute_document_frequencies,
    compute_ltu,
    fold_description,
    generate_bow,
    scale_tfidf,
)
from skillgrep.skills import LemmaDictionary


def make_dict(forms_to_lemma):
    return LemmaDictionary(
        forms_to_lemma=dict(forms_to_lemma),
        lemma_set=frozenset(forms_to_lemma.values()),
        max_key_words=max((len(k.split()) for k in forms_to_lemma), default=1),
    )


EMAIL_DICT = make_dict({"e-mail": "email", "email": "email"})


class TestGenerateBow:
    def test_repeated_key(self):
        bag = generate_bow("email and email", EMAIL_DICT)
        assert bag["email"].total == 2
        assert bag["email"].forms == {"email": 2}

    def test_original_and_normalized_forms_tracked(self):
        bag = generate_bow("Send e-mail, then check email.", EMAIL_DICT)
        assert bag["email"].total == 2
        assert bag["email"].forms == {"e-mail": 1, "email": 1}

    def test_no_keys_empty_bag(self):
        assert generate_bow("nothing relevant here", EMAIL_DICT) == {}

    def test_longest_match_non_overlapping(self):
        d = make_dict(
            {"machine learning": "machine learning", "learning": "learning"}
        )
        bag = generate_bow("machine learning and learning", d)
        assert bag["machine learning"].total == 1
        assert bag["learning"].total == 1

    def test_punctuation_edges(self):
        d = make_dict({"python": "python", "c++": "c++", ".net": ".net"})
        bag = generate_bow("We use (Python), C++, and .NET.", d)
        assert bag["python"].total == 1
        assert bag["c++"].total == 1
        assert bag[".net"].total == 1

    def test_matches_oracle_on_fixture_descriptions(self, corpus, dictionary):
        for posting in corpus.postings:
            got = generate_bow(posting.description_raw, dictionary)
            want = oracles.bow_counts(
                posting.description_raw, dictionary.forms_to_lemma
            )
            assert {l: c.total for l, c in got.items()} == {
                l: v["total"] for l, v in want.items()
            }
            assert {l: c.forms for l, c in got.items()} == {
                l: v["forms"] for l, v in want.items()
            }


class TestDocumentFrequencies:
    def bags_from(self, docs):
        return {pid: generate_bow(text, EMAIL_DICT) for pid, text in docs.items()}

    def test_rare_lemma_removed(self):
        d = make_dict({"a": "a", "b": "b"})
        bags = {
            "d1": generate_bow("a b", d),
            "d2": generate_bow("b", d),
        }
        stats, retained = compute_document_frequencies(bags, min_df=2)
        assert "a" not in stats.df
        assert stats.df == {"b": 2}
        assert all("a" not in bag for bag in retained.values())

    def test_min_df_one_keeps_everything(self):
        d = make_dict({"a": "a", "b": "b"})
        bags = {"d1": generate_bow("a", d), "d2": generate_bow("b", d), "d3": {}}
        stats, retained = compute_document_frequencies(bags, min_df=1)
        assert stats.n_docs == 2  # the empty doc is dropped
        assert stats.df == {"a": 1, "b": 1}

    def test_doc_emptied_by_filter_is_dropped(self):
        d = make_dict({"a": "a", "b": "b"})
        bags = {"d1": generate_bow("a a a", d), "d2": generate_bow("b", d),
                "d3": generate_bow("b", d)}
        stats, retained = compute_document_frequencies(bags, min_df=2)
        assert "d1" not in retained
        assert stats.n_docs == 2

    def test_all_docs_dropped_is_empty_corpus(self):
        d = make_dict({"a": "a"})
        bags = {"d1": generate_bow("a", d)}
        with pytest.raises(EmptyCorpus):
            compute_document_frequencies(bags, min_df=2)

    def test_twenty_doc_synthetic_matches_oracle(self, dictionary):
        rng = random.Random(7)
        keys = sorted(dictionary.forms_to_lemma)[:40]
        postings = []
        for i in range(20):
            words = rng.sample(keys, rng.randrange(2, 8))
            postings.append({"id": f"d{i}", "description": " . ".join(words)})
        bags = {
            p["id"]: generate_bow(p["description"], dictionary) for p in postings
        }
        stats, _ = compute_document_frequencies(bags, min_df=2)
        want = oracles.full_index(postings, dictionary.forms_to_lemma, min_df=2)
        assert stats.df == want["df"]
        assert stats.n_docs == want["n_docs"]
        assert stats.avg_doc_len == pytest.approx(want["avg_doc_len"], abs=1e-12)


class TestComputeLtu:
    def stats(self, n_docs, avg):
        return IndexStats(n_docs=n_docs, avg_doc_len=avg, df={})

    def test_anchor_value(self):
        got = compute_ltu(tf=3, df=2, stats=self.stats(8, 10.0), doc_len=10)
        assert got == pytest.approx(5.169925001442312, abs=1e-9)

    def test_df_equals_ndocs_is_zero(self):
        for tf in (1, 2, 17):
            assert compute_ltu(tf, 6, self.stats(6, 4.0), doc_len=9) == 0.0

    def test_unit_value(self):
        assert compute_ltu(1, 4, self.stats(8, 5.0), doc_len=5) == pytest.approx(1.0)

    def test_domain_errors(self):
        s = self.stats(8, 5.0)
        with pytest.raises(DomainError):
            compute_ltu(0, 2, s, 5)
        with pytest.raises(DomainError):
            compute_ltu(1, 0, s, 5)
        with pytest.raises(DomainError):
            compute_ltu(1, 9, s, 5)
        with pytest.raises(DomainError):
            compute_ltu(1, 2, s, 0)

    def test_random_tuples_match_independent_evaluator(self):
        rng = random.Random(99)
        for _ in range(1000):
            n_docs = rng.randrange(1, 5000)
            df = rng.randrange(1, n_docs + 1)
            tf = rng.randrange(1, 400)
            doc_len = rng.randrange(1, 2000)
            avg = rng.uniform(0.5, 2000.0)
            got = compute_ltu(tf, df, self.stats(n_docs, avg), doc_len)
            want = oracles.ltu_value(tf, df, n_docs, doc_len, avg)
            assert got == pytest.approx(want, abs=1e-9)

    @given(
        tf=st.integers(1, 10**6),
        df=st.integers(1, 999),
        n_docs=st.integers(1000, 10**6),
        doc_len=st.integers(1, 10**4),
    )
    def test_monotone_in_tf(self, tf, df, n_docs, doc_len):
        s = self.stats(n_docs, 50.0)
        assert compute_ltu(tf + 1, df, s, doc_len) > compute_ltu(tf, df, s, doc_len)

    @given(
        tf=st.integers(1, 10**6),
        df=st.integers(1, 998),
        doc_len=st.integers(1, 10**4),
    )
    def test_monotone_decreasing_in_df(self, tf, df, doc_len):
        s = self.stats(1000, 50.0)
        assert compute_ltu(tf, df, s, doc_len) > compute_ltu(tf, df + 1, s, doc_len)

    @given(
        tf=st.integers(1, 10**6),
        df=st.integers(1, 999),
        short=st.integers(1, 49),
        long=st.integers(51, 10**4),
    )
    def test_pivoted_length_prefers_short_docs(self, tf, df, short, long):
        s = self.stats(1000, 50.0)
        assert compute_ltu(tf, df, s, short) > compute_ltu(tf, df, s, long)


class TestScaleTfidf:
    def test_divides_by_max(self):
        assert scale_tfidf({"a": 2.0, "b": 4.0}) == {"a": 0.5, "b": 1.0}

    def test_singleton(self):
        assert scale_tfidf({"a": 3.7}) == {"a": 1.0}

    def test_all_zero_unchanged(self):
        assert scale_tfidf({"a": 0.0, "b": 0.0}) == {"a": 0.0, "b": 0.0}

    def test_empty(self):
        assert scale_tfidf({}) == {}


class TestBuildIndex:
    def test_three_doc_toy_matches_reference(self, dictionary):
        postings = [
            {"id": "t1", "description": "python sql python communication"},
            {"id": "t2", "description": "python excel"},
            {"id": "t3", "description": "sql excel excel tableau sql"},
        ]
        corpus = Corpus(
            postings=tuple(
                JobPosting(
                    id=p["id"],
                    title_raw="Software Engineer",
                    company_name_raw="Acme",
                    description_raw=p["description"],
                )
                for p in postings
            )
        )
        index = build_index(corpus, dictionary, min_df=1)
        want = oracles.full_index(postings, dictionary.forms_to_lemma, min_df=1)
        assert index.stats.df == want["df"]
        for pid, wdoc in want["docs"].items():
            doc = index.docs[pid]
            assert doc.doc_len == wdoc["doc_len"]
            for lemma, v in wdoc["ltu"].items():
                assert doc.ltu[lemma] == pytest.approx(v, abs=1e-9)
            for lemma, v in wdoc["scaled"].items():
                assert doc.scaled_tfidf[lemma] == pytest.approx(v, abs=1e-9)

    def test_scaled_max_is_one(self, index):
        for doc in index.docs.values():
            values = list(doc.scaled_tfidf.values())
            assert all(0.0 <= v <= 1.0 + 1e-12 for v in values)
            if any(v > 0 for v in doc.ltu.values()):
                assert max(values) == pytest.approx(1.0, abs=1e-12)

    def test_empty_descriptions_raise(self, dictionary):
        corpus = Corpus(
            postings=tuple(
                JobPosting(
                    id=f"e{i}",
                    title_raw="Clerk",
                    company_name_raw="Acme",
                    description_raw="no known lexicon words here",
                )
                for i in range(3)
            )
        )
        with pytest.raises(EmptyCorpus):
            build_index(corpus, dictionary)

    def test_fixture_index_sanity(self, index, corpus):
        assert index.stats.n_docs == len(index.docs) <= len(corpus)
        for lemma, df in index.stats.df.items():
            assert 1 <= df <= index.stats.n_docs
        for doc in index.docs.values():
            assert doc.doc_len > 0
            assert set(doc.ltu) == set(doc.bag) == set(doc.scaled_tfidf)
            assert set(doc.weights) == set(doc.bag) == set(doc.final_scores)


def test_fold_description_rules():
    assert fold_description('Great "opportunity": Python, (C++), .NET!') == (
        "great",
        "opportunity",
        "python",
        "c++",
        ".net",
    )
    assert fold_description("e-mail etc. and/or c#/.net") == (
        "e-mail",
        "etc",
        "and/or",
        "c#/.net",
    )
