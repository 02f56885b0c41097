from __future__ import annotations

import json

import numpy as np
import pytest

from conceptsearch.corpus import Document
from conceptsearch.engine import MODES, SearchEngine
from conceptsearch.evaluate import (
    JudgmentError,
    accuracy,
    dcg,
    load_judgments,
    load_queries,
    ndcg,
    run_benchmark,
)
from conceptsearch.index import build_index
from conftest import make_tvdb


class TestAccuracy:
    def test_fraction_of_top_ten(self):
        results = [f"d{i}" for i in range(10)]
        assert accuracy(results, {"d0", "d3", "d7"}) == pytest.approx(0.3)

    def test_divisor_fixed_at_ten_for_short_lists(self):
        assert accuracy(["d0", "d1"], {"d0", "d1"}) == pytest.approx(0.2)

    def test_only_first_ten_count(self):
        results = [f"d{i}" for i in range(15)]
        assert accuracy(results, {"d12"}) == 0.0

    def test_no_relevant_is_zero(self):
        assert accuracy(["d0"], set()) == 0.0


class TestDcg:
    def test_frozen_value(self):
        assert dcg([2, 2, 1], 3) == pytest.approx(4.63093, abs=1e-5)

    def test_first_position_unlogged(self):
        assert dcg([2], 10) == 2.0
        assert dcg([0, 2], 10) == 2.0  # rel_2 / log2(2) = 2

    def test_rank_positions_beyond_p_ignored(self):
        assert dcg([2, 2, 2, 2], 2) == pytest.approx(4.0)

    def test_positions_beyond_list_contribute_zero(self):
        assert dcg([1], 10) == 1.0

    def test_all_zero_rels(self):
        assert dcg([0, 0, 0], 3) == 0.0

    def test_invalid_p_rejected(self):
        with pytest.raises(ValueError):
            dcg([1], 0)

    def test_swapping_high_rel_earlier_never_hurts(self):
        rng = np.random.default_rng(42)
        for _ in range(200):
            rels = list(rng.integers(0, 3, size=8))
            i = int(rng.integers(0, 7))
            swapped = rels.copy()
            swapped[i], swapped[i + 1] = swapped[i + 1], swapped[i]
            if rels[i] < rels[i + 1]:
                assert dcg(swapped, 8) >= dcg(rels, 8)


class TestNdcg:
    def test_frozen_value(self):
        assert ndcg([1, 2, 2], 3) == pytest.approx(0.92030, abs=1e-5)

    def test_ideal_ordering_is_exactly_one(self):
        assert ndcg([2, 2, 1, 0], 4) == 1.0

    def test_zero_ideal_gives_zero(self):
        assert ndcg([0, 0], 2) == 0.0

    def test_bounded_by_one_over_permutations(self):
        rng = np.random.default_rng(42)
        for _ in range(300):
            rels = list(rng.integers(0, 3, size=6))
            perm = list(rng.permutation(rels))
            assert 0.0 <= ndcg(perm, 6) <= 1.0 + 1e-12


class TestJudgmentFiles:
    def test_load_and_group(self, tmp_path):
        p = tmp_path / "j.jsonl"
        rows = [
            {"query": "piano", "doc_id": "d1", "rel": 2},
            {"query": "piano", "doc_id": "d2", "rel": 0},
            {"query": "football", "doc_id": "d1", "rel": 1},
        ]
        p.write_text("\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8")
        got = load_judgments(p)
        assert got == {"piano": {"d1": 2, "d2": 0}, "football": {"d1": 1}}

    def test_out_of_range_rel_rejected(self, tmp_path):
        p = tmp_path / "j.jsonl"
        p.write_text('{"query": "x", "doc_id": "d", "rel": 3}\n', encoding="utf-8")
        with pytest.raises(JudgmentError, match="line 1"):
            load_judgments(p)

    def test_queries_with_optional_user_column(self, tmp_path):
        p = tmp_path / "q.txt"
        p.write_text("piano lessons\tu1\nfootball\n", encoding="utf-8")
        assert load_queries(p) == [("piano lessons", "u1"), ("football", None)]


TVDB = make_tvdb(
    ("education", "music", "sports"),
    {"piano": [0.0, 1.0, 0.0], "football": [0.0, 0.0, 1.0]},
)


def bench_engine():
    def doc(doc_id, tokens):
        return Document(doc_id, " ".join(tokens), list(tokens), None)

    docs = [
        doc("m1", ["piano", "piano", "pad", "pad"]),
        doc("m2", ["piano", "pad", "pad", "pad"]),
        doc("s1", ["football", "piano", "pad", "pad"]),
    ]
    cats = {"m1": ("music",), "m2": ("music",), "s1": ("sports",)}
    return SearchEngine(build_index(docs, cats), TVDB)


class TestRunBenchmark:
    def make_files(self, tmp_path, queries, judgments):
        qp = tmp_path / "q.txt"
        qp.write_text("\n".join(queries) + "\n", encoding="utf-8")
        jp = tmp_path / "j.jsonl"
        jp.write_text(
            "\n".join(json.dumps(r) for r in judgments) + "\n", encoding="utf-8"
        )
        return qp, jp

    def test_rows_per_query_per_mode_plus_average(self, tmp_path):
        qp, jp = self.make_files(
            tmp_path,
            ["piano\tu1"],
            [
                {"query": "piano", "doc_id": "m1", "rel": 2},
                {"query": "piano", "doc_id": "m2", "rel": 1},
                {"query": "piano", "doc_id": "s1", "rel": 0},
            ],
        )
        report = run_benchmark(qp, jp, bench_engine())
        assert {r.mode for r in report.rows} == set(MODES)
        assert len(report.rows) == len(MODES)
        tsv = report.to_tsv()
        lines = tsv.strip().split("\n")
        assert lines[0].split("\t") == [
            "mode", "query", "user", "accuracy", "dcg", "ndcg", "latency_ms",
        ]
        average_rows = [l for l in lines if "\tAverage\t" in l]
        assert len(average_rows) == len(MODES)

    def test_identical_rankings_give_identical_metrics(self, tmp_path):
        # no profile, no clicks: every mode ranks the same, metrics agree
        qp, jp = self.make_files(
            tmp_path,
            ["piano"],
            [
                {"query": "piano", "doc_id": "m1", "rel": 2},
                {"query": "piano", "doc_id": "m2", "rel": 1},
            ],
        )
        report = run_benchmark(qp, jp, bench_engine())
        metrics = {(r.mode): (r.accuracy, r.dcg, r.ndcg) for r in report.rows}
        assert len(set(metrics.values())) == 1

    def test_metrics_match_direct_computation(self, tmp_path):
        qp, jp = self.make_files(
            tmp_path,
            ["piano"],
            [
                {"query": "piano", "doc_id": "m1", "rel": 2},
                {"query": "piano", "doc_id": "s1", "rel": 1},
            ],
        )
        engine = bench_engine()
        report = run_benchmark(qp, jp, engine, modes=("baseline",))
        row = report.rows[0]
        ranked = [r.doc_id for r in engine.run("piano", mode="baseline", k=10)]
        rels = [{"m1": 2, "s1": 1}.get(d, 0) for d in ranked]
        assert row.accuracy == pytest.approx(accuracy(ranked, {"m1", "s1"}))
        assert row.dcg == pytest.approx(dcg(rels, 10))
        assert row.ndcg == pytest.approx(ndcg(rels, 10))

    def test_unjudged_query_skipped_with_warning(self, tmp_path):
        qp, jp = self.make_files(
            tmp_path,
            ["piano", "mystery"],
            [{"query": "piano", "doc_id": "m1", "rel": 2}],
        )
        with pytest.warns(UserWarning, match="mystery"):
            report = run_benchmark(qp, jp, bench_engine())
        assert report.skipped == ["mystery"]
        assert all(r.query == "piano" for r in report.rows)

    def test_json_mirror_carries_averages_and_latency(self, tmp_path):
        qp, jp = self.make_files(
            tmp_path,
            ["piano"],
            [{"query": "piano", "doc_id": "m1", "rel": 2}],
        )
        report = run_benchmark(qp, jp, bench_engine())
        payload = json.loads(report.to_json())
        assert payload["p"] == 10
        for mode in ("baseline", "comprehensive"):
            block = payload["modes"][mode]
            assert "average" in block and "ndcg" in block["average"]
            assert "latency" in block and "median_ms" in block["latency"]
            assert block["latency"]["median_ms"] >= 0.0

    def test_unknown_mode_rejected(self, tmp_path):
        qp, jp = self.make_files(
            tmp_path, ["piano"], [{"query": "piano", "doc_id": "m1", "rel": 2}]
        )
        with pytest.raises(ValueError):
            run_benchmark(qp, jp, bench_engine(), modes=("nonsense",))
