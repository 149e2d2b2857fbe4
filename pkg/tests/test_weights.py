import random

import pytest

import oracles
from skillgrep.corpus import Corpus, JobPosting
from skillgrep.errors import DomainError, NoTitleNgrams
from skillgrep.indexer import build_index
from skillgrep.skills import LemmaDictionary
from skillgrep.titles import TitleVocab
from skillgrep.weights import (
    CountMatrix,
    average_posting_weights,
    build_count_matrix,
    final_scores,
    skill_weight,
)


def tiny_corpus(rows):
    return Corpus(
        postings=tuple(
            JobPosting(
                id=pid,
                title_raw=title,
                company_name_raw="Acme",
                description_raw=desc,
            )
            for pid, title, desc in rows
        )
    )


def tiny_dict(lemmas):
    return LemmaDictionary(
        forms_to_lemma={l: l for l in lemmas},
        lemma_set=frozenset(lemmas),
        max_key_words=max(len(l.split()) for l in lemmas),
    )


VOCAB = TitleVocab(
    unigrams=frozenset({"software", "engineer", "analyst", "nurse", "cook"}),
    bigrams=frozenset({"software engineer"}),
    min_freq=1,
)


def build_tiny_index(rows, lemmas, min_df=1):
    return build_index(
        tiny_corpus(rows), tiny_dict(lemmas), min_df=min_df, title_vocab=VOCAB
    )


class TestCountMatrix:
    def test_five_doc_matrix_matches_brute_force(self):
        rows = [
            ("d1", "Software Engineer", "python python sql"),
            ("d2", "Software Engineer II", "python java"),
            ("d3", "Data Analyst", "sql excel excel"),
            ("d4", "Registered Nurse", "care care care"),
            ("d5", "Line Cook", "care sql"),
        ]
        index = build_tiny_index(
            rows, ["python", "sql", "java", "excel", "care"]
        )
        m = build_count_matrix(index)
        want = oracles.count_matrix(
            [
                (set(d.title_ngrams), {l: c.total for l, c in d.bag.items()})
                for d in index.docs.values()
            ]
        )
        assert m.counts == want["counts"]
        assert m.ngram_totals == want["ngram_totals"]
        assert m.global_counts == want["global_counts"]
        assert m.global_total == want["global_total"]

    def test_absent_ngram_absent_from_matrix(self):
        rows = [("d1", "Software Engineer", "python")]
        index = build_tiny_index(rows, ["python"])
        m = build_count_matrix(index)
        assert not any(g == "nurse" for g, _ in m.counts)
        assert "nurse" not in m.ngram_totals

    def test_single_document_counts_equal_tf(self):
        rows = [("d1", "Software Engineer", "python python sql")]
        index = build_tiny_index(rows, ["python", "sql"])
        m = build_count_matrix(index)
        doc = index.docs["d1"]
        for g in doc.title_ngrams:
            assert m.counts[(g, "python")] == 2
            assert m.counts[(g, "sql")] == 1

    def test_conditional_probabilities_sum_to_one(self, index):
        m = build_count_matrix(index)
        by_gram = {}
        for (g, l), c in m.counts.items():
            by_gram.setdefault(g, 0)
            by_gram[g] += c
        for g, total in by_gram.items():
            assert total == m.ngram_totals[g]
            assert sum(
                c / m.ngram_totals[g] for (gg, _), c in m.counts.items() if gg == g
            ) == pytest.approx(1.0, abs=1e-9)

    def test_matrix_consistency_invariants(self, index):
        m = build_count_matrix(index)
        assert m.global_total == sum(m.global_counts.values())
        assert sum(m.ngram_totals.values()) == sum(m.counts.values())
        assert all(c >= 0 for c in m.counts.values())


class TestSkillWeight:
    def test_exclusive_skill_weight(self):
        # "care" appears only under the "nurse" ngram, and those docs hold
        # nothing else: conditional prob 1 -> weight = global_total / global("care")
        rows = [
            ("d1", "Registered Nurse", "care care"),
            ("d2", "Software Engineer", "python sql"),
            ("d3", "Software Engineer", "python"),
        ]
        index = build_tiny_index(rows, ["care", "python", "sql"])
        m = build_count_matrix(index)
        got = skill_weight("care", "nurse", m)
        want = oracles.weight_value(m.__dict__ | {"counts": m.counts}, "nurse", "care")
        assert got == pytest.approx(m.global_total / m.global_counts["care"])
        assert got == pytest.approx(want)

    def test_uniform_skill_weight_is_one(self):
        # python is the only skill anywhere: conditional == global everywhere
        rows = [
            ("d1", "Software Engineer", "python python"),
            ("d2", "Data Analyst", "python"),
        ]
        index = build_tiny_index(rows, ["python"])
        m = build_count_matrix(index)
        for g in ("software", "engineer", "analyst"):
            assert skill_weight("python", g, m) == pytest.approx(1.0)

    def test_zero_when_never_coseen(self):
        rows = [
            ("d1", "Software Engineer", "python"),
            ("d2", "Data Analyst", "excel"),
        ]
        index = build_tiny_index(rows, ["python", "excel"])
        m = build_count_matrix(index)
        assert skill_weight("excel", "software", m) == 0.0

    def test_inconsistent_matrix_raises(self):
        m = CountMatrix(counts={("g", "l"): 3}, ngram_totals={}, global_counts={}, global_total=0)
        with pytest.raises(DomainError):
            skill_weight("l", "g", m)

    def test_common_skill_damping(self):
        rng = random.Random(4242)
        for _ in range(500):
            gram_total = rng.randrange(10, 500)
            joint = rng.randrange(1, gram_total + 1)
            global_total = rng.randrange(gram_total * 2, gram_total * 50)
            g_a = rng.randrange(joint, global_total)
            g_b = rng.randrange(joint, g_a) if g_a > joint else joint
            m = CountMatrix(
                counts={("g", "a"): joint, ("g", "b"): joint},
                ngram_totals={"g": gram_total},
                global_counts={"a": g_a, "b": g_b},
                global_total=global_total,
            )
            wa, wb = skill_weight("a", "g", m), skill_weight("b", "g", m)
            if g_a > g_b:
                assert wa < wb
            else:
                assert wa == pytest.approx(wb)


class TestAveragedWeights:
    def test_single_ngram_average_is_weight(self):
        rows = [("d1", "Nurse", "care python")]
        index = build_tiny_index(rows, ["care", "python"])
        m = build_count_matrix(index)
        doc = index.docs["d1"]
        assert doc.title_ngrams == frozenset({"nurse"})
        got = average_posting_weights(doc, m)
        assert got["care"] == pytest.approx(skill_weight("care", "nurse", m))

    def test_mean_of_two(self):
        m = CountMatrix(
            counts={("g1", "x"): 2, ("g2", "y"): 1},
            ngram_totals={"g1": 2, "g2": 1},
            global_counts={"x": 2, "y": 1},
            global_total=3,
        )
        # weight(x,g1) = (2/2)/(2/3) = 1.5 ; weight(x,g2) = 0
        from skillgrep.indexer import DocEntry, LemmaCount

        doc = DocEntry(
            posting_id="p",
            doc_len=2,
            bag={"x": LemmaCount(total=2, forms={"x": 2})},
            ltu={},
            scaled_tfidf={},
            weights={},
            final_scores={},
            company_domain=None,
            title_text="g1 g2",
            title_ngrams=frozenset({"g1", "g2"}),
            level="Non-Manager",
            departments=frozenset({"Other"}),
            description_tokens=("x", "x"),
        )
        got = average_posting_weights(doc, m)
        assert got["x"] == pytest.approx((1.5 + 0.0) / 2)

    def test_no_ngrams_raises(self):
        from skillgrep.indexer import DocEntry, LemmaCount

        doc = DocEntry(
            posting_id="p",
            doc_len=1,
            bag={"x": LemmaCount(total=1, forms={"x": 1})},
            ltu={},
            scaled_tfidf={},
            weights={},
            final_scores={},
            company_domain=None,
            title_text="zzz",
            title_ngrams=frozenset(),
            level="Non-Manager",
            departments=frozenset({"Other"}),
            description_tokens=("x",),
        )
        with pytest.raises(NoTitleNgrams):
            average_posting_weights(doc, CountMatrix())

    def test_fallback_weight_is_one_in_index(self, dictionary):
        corpus = tiny_corpus(
            [
                ("d1", "Zzyzx Wrangler", "python sql"),
                ("d2", "Software Engineer", "python excel"),
            ]
        )
        index = build_index(corpus, dictionary, min_df=1, title_vocab=VOCAB)
        assert index.docs["d1"].title_ngrams == frozenset()
        assert all(w == 1.0 for w in index.docs["d1"].weights.values())

    def test_full_corpus_matches_brute_force(self, index):
        m = build_count_matrix(index)
        matrix_dict = {
            "counts": m.counts,
            "ngram_totals": m.ngram_totals,
            "global_counts": m.global_counts,
            "global_total": m.global_total,
        }
        for doc in index.docs.values():
            if not doc.title_ngrams:
                continue
            want = oracles.averaged_weights(
                matrix_dict, set(doc.title_ngrams), set(doc.bag)
            )
            got = average_posting_weights(doc, m)
            for lemma, v in want.items():
                assert got[lemma] == pytest.approx(v, abs=1e-9)


class TestFinalScores:
    def test_product(self, index):
        table = final_scores(index, {pid: d.weights for pid, d in index.docs.items()})
        for pid, doc in index.docs.items():
            for lemma in doc.bag:
                assert table[pid][lemma] == pytest.approx(
                    doc.weights[lemma] * doc.scaled_tfidf[lemma], abs=1e-12
                )
                assert table[pid][lemma] >= 0.0

    def test_zero_scaled_gives_zero(self):
        rows = [
            ("d1", "Software Engineer", "python sql"),
            ("d2", "Data Analyst", "python sql"),
        ]
        # python/sql in every doc: df == n_docs -> ltu 0 -> scaled stays 0
        index = build_tiny_index(rows, ["python", "sql"], min_df=1)
        doc = index.docs["d1"]
        assert all(v == 0.0 for v in doc.ltu.values())
        assert all(v == 0.0 for v in doc.final_scores.values())

    def test_top_skill_matches_argmax_of_product(self, index):
        for doc in index.docs.values():
            if not doc.final_scores:
                continue
            best = max(doc.final_scores, key=lambda l: (doc.final_scores[l], l))
            want = max(
                doc.bag,
                key=lambda l: (doc.weights[l] * doc.scaled_tfidf[l], l),
            )
            assert best == want

    def test_ranking_invariant_under_ltu_scaling(self):
        rows = [
            ("d1", "Software Engineer", "python python sql java"),
            ("d2", "Data Analyst", "sql excel"),
            ("d3", "Line Cook", "java excel excel"),
        ]
        index = build_tiny_index(rows, ["python", "sql", "java", "excel"])
        rank_before = {
            pid: sorted(d.final_scores, key=lambda l: (-d.final_scores[l], l))
            for pid, d in index.docs.items()
        }
        # multiply every LTU value in one document by a positive constant;
        # rescaling cancels in the per-document argsort
        doc = index.docs["d1"]
        scaled_ltu = {l: v * 7.5 for l, v in doc.ltu.items()}
        from skillgrep.indexer import scale_tfidf

        rescored = {
            l: doc.weights[l] * s for l, s in scale_tfidf(scaled_ltu).items()
        }
        rank_after = sorted(rescored, key=lambda l: (-rescored[l], l))
        assert rank_after == rank_before["d1"]
