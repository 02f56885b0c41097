from __future__ import annotations

import math

import pytest

from conceptsearch.corpus import Document
from conceptsearch.index import (
    InvertedIndex,
    IndexingError,
    base_score,
    build_index,
)


def doc(doc_id, tokens, text=None):
    return Document(doc_id, text if text is not None else " ".join(tokens), list(tokens), None)


def simple_index(rows, categories=None):
    docs = [doc(doc_id, tokens) for doc_id, tokens in rows]
    cats = categories or {doc_id: ("general",) for doc_id, _ in rows}
    return build_index(docs, cats)


class TestBuildIndex:
    def test_postings_shape_and_sorting(self):
        idx = simple_index([("d2", ["b", "a", "b"]), ("d1", ["a"])])
        assert idx.postings["a"] == [("d1", 1), ("d2", 1)]
        assert idx.postings["b"] == [("d2", 2)]
        assert idx.num_docs == 2
        assert idx.doc_lengths == {"d1": 1, "d2": 3}

    def test_missing_assignment_rejected(self):
        docs = [doc("d1", ["a"]), doc("d2", ["b"])]
        with pytest.raises(IndexingError, match="d2"):
            build_index(docs, {"d1": ("general",)})

    def test_empty_assignment_rejected(self):
        with pytest.raises(IndexingError):
            build_index([doc("d1", ["a"])], {"d1": ()})

    def test_snippet_is_first_160_chars(self):
        long_text = "x" * 500
        docs = [Document("d1", long_text, ["x"], None)]
        idx = build_index(docs, {"d1": ("general",)})
        assert idx.snippets["d1"] == "x" * 160

    def test_zero_length_doc_indexable(self):
        idx = build_index([doc("d1", [])], {"d1": ("general",)})
        assert idx.doc_lengths["d1"] == 0


class TestPersistence:
    def test_roundtrip_identity(self, tmp_path):
        idx = simple_index(
            [("d1", ["a", "b"]), ("d2", ["b", "b", "c"])],
            {"d1": ("music",), "d2": ("music", "sports")},
        )
        idx.save(tmp_path / "ix")
        loaded = InvertedIndex.load(tmp_path / "ix")
        assert loaded.postings == idx.postings
        assert loaded.doc_lengths == idx.doc_lengths
        assert loaded.categories == idx.categories
        assert loaded.num_docs == idx.num_docs
        assert loaded.snippets == idx.snippets

    def test_rebuild_is_byte_identical(self, tmp_path):
        rows = [("d1", ["a", "b"]), ("d2", ["b", "c", "c"])]
        simple_index(rows).save(tmp_path / "x")
        simple_index(rows).save(tmp_path / "y")
        for name in ("postings.tsv", "meta.json"):
            assert (tmp_path / "x" / name).read_bytes() == (tmp_path / "y" / name).read_bytes()

    def test_whitespace_doc_id_rejected_at_save(self, tmp_path):
        idx = simple_index([("bad id", ["a"])])
        with pytest.raises(IndexingError):
            idx.save(tmp_path / "ix")

    def test_doc_id_with_colon_survives(self, tmp_path):
        idx = simple_index([("ns:42", ["a"])])
        idx.save(tmp_path / "ix")
        loaded = InvertedIndex.load(tmp_path / "ix")
        assert loaded.postings["a"] == [("ns:42", 1)]


class TestBaseScore:
    def test_frozen_single_doc_value(self):
        # N=1, one-term doc: idf = 1 + ln(1/2), score = idf^2
        idx = simple_index([("d1", ["piano"])])
        got = base_score(["piano"], "d1", idx)
        idf = 1.0 + math.log(1 / 2)
        assert got == pytest.approx(idf * idf, abs=1e-12)
        assert got == pytest.approx(0.09416, abs=1e-5)

    def test_no_overlap_scores_zero(self):
        idx = simple_index([("d1", ["piano"])])
        assert base_score(["guitar"], "d1", idx) == 0.0

    def test_coord_fraction_applies(self):
        idx = simple_index([("d1", ["a"]), ("d2", ["a", "b"])])
        one_term = base_score(["a"], "d1", idx)
        half_matched = base_score(["a", "zzz"], "d1", idx)
        assert half_matched == pytest.approx(one_term / 2, abs=1e-12)

    def test_identical_docs_score_identically(self):
        idx = simple_index([("d1", ["a", "b"]), ("d2", ["a", "b"])])
        assert base_score(["a", "b"], "d1", idx) == base_score(["a", "b"], "d2", idx)

    def test_higher_tf_scores_higher(self):
        idx = simple_index([("d1", ["a", "a", "x", "x"]), ("d2", ["a", "x", "x", "x"])])
        assert base_score(["a"], "d1", idx) > base_score(["a"], "d2", idx)

    def test_length_normalization_penalizes_long_docs(self):
        idx = simple_index([("d1", ["a", "x"]), ("d2", ["a"] + ["x"] * 7)])
        assert base_score(["a"], "d1", idx) > base_score(["a"], "d2", idx)

    def test_duplicate_query_terms_count_once(self):
        idx = simple_index([("d1", ["a", "b"])])
        assert base_score(["a", "a"], "d1", idx) == base_score(["a"], "d1", idx)

    def test_unknown_doc_raises(self):
        idx = simple_index([("d1", ["a"])])
        with pytest.raises(IndexingError):
            base_score(["a"], "nope", idx)

    def test_zero_length_doc_scores_zero(self):
        idx = build_index([doc("d1", []), doc("d2", ["a"])],
                          {"d1": ("g",), "d2": ("g",)})
        assert base_score(["a"], "d1", idx) == 0.0
