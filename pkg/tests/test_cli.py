from __future__ import annotations

import json

import pytest

from conceptsearch.cli import main
from conceptsearch.synth import toy_corpus


@pytest.fixture(scope="module")
def corpus_path(tmp_path_factory):
    path = tmp_path_factory.mktemp("corpus") / "docs.jsonl"
    toy_corpus().write_jsonl(path)
    return path


@pytest.fixture()
def pipeline(tmp_path, corpus_path):
    """Run build-tvdb, classify, index once and hand back the artifact paths."""
    tvdb = tmp_path / "terms.tvdb"
    assignments = tmp_path / "assignments.jsonl"
    model = tmp_path / "model.json"
    index_dir = tmp_path / "index"
    assert main(["build-tvdb", "--corpus", str(corpus_path), "--out", str(tvdb)]) == 0
    assert main([
        "classify", "--corpus", str(corpus_path), "--tvdb", str(tvdb),
        "--model", str(model), "--out", str(assignments),
    ]) == 0
    assert main([
        "index", "--corpus", str(corpus_path),
        "--assignments", str(assignments), "--out", str(index_dir),
    ]) == 0
    return {
        "corpus": corpus_path, "tvdb": tvdb, "assignments": assignments,
        "model": model, "index": index_dir,
    }


class TestPipeline:
    def test_artifacts_exist(self, pipeline):
        assert pipeline["tvdb"].is_file()
        assert pipeline["model"].is_file()
        assert pipeline["assignments"].is_file()
        assert (pipeline["index"] / "postings.tsv").is_file()
        assert (pipeline["index"] / "meta.json").is_file()

    def test_rebuild_is_byte_identical(self, pipeline, tmp_path):
        tvdb2 = tmp_path / "again.tvdb"
        assignments2 = tmp_path / "again.jsonl"
        index2 = tmp_path / "again-index"
        main(["build-tvdb", "--corpus", str(pipeline["corpus"]), "--out", str(tvdb2)])
        main([
            "classify", "--corpus", str(pipeline["corpus"]),
            "--tvdb", str(tvdb2), "--out", str(assignments2),
        ])
        main([
            "index", "--corpus", str(pipeline["corpus"]),
            "--assignments", str(assignments2), "--out", str(index2),
        ])
        assert tvdb2.read_bytes() == pipeline["tvdb"].read_bytes()
        assert assignments2.read_bytes() == pipeline["assignments"].read_bytes()
        for name in ("postings.tsv", "meta.json"):
            assert (index2 / name).read_bytes() == (pipeline["index"] / name).read_bytes()

    def test_search_prints_ranked_rows(self, pipeline, capsys):
        rc = main([
            "search", "--index", str(pipeline["index"]), "--tvdb", str(pipeline["tvdb"]),
            "--query", "piano",
        ])
        assert rc == 0
        lines = capsys.readouterr().out.strip().split("\n")
        assert lines
        for rank, line in enumerate(lines, start=1):
            cols = line.split("\t")
            assert len(cols) == 4
            assert int(cols[0]) == rank
            float(cols[2])  # parseable score

    def test_search_k_limits_rows(self, pipeline, capsys):
        main([
            "search", "--index", str(pipeline["index"]), "--tvdb", str(pipeline["tvdb"]),
            "--query", "piano", "--k", "2",
        ])
        assert len(capsys.readouterr().out.strip().split("\n")) == 2

    def test_eval_writes_tsv_and_json(self, pipeline, tmp_path, capsys):
        queries = tmp_path / "queries.txt"
        queries.write_text("piano\tu1\n", encoding="utf-8")
        judgments = tmp_path / "judgments.jsonl"
        judgments.write_text(
            json.dumps({"query": "piano", "doc_id": "d03", "rel": 2}) + "\n",
            encoding="utf-8",
        )
        json_out = tmp_path / "report.json"
        rc = main([
            "eval", "--index", str(pipeline["index"]), "--tvdb", str(pipeline["tvdb"]),
            "--queries", str(queries), "--judgments", str(judgments),
            "--json-out", str(json_out),
        ])
        assert rc == 0
        out = capsys.readouterr().out
        header = out.split("\n", 1)[0]
        assert header.split("\t") == [
            "mode", "query", "user", "accuracy", "dcg", "ndcg", "latency_ms",
        ]
        assert "Average" in out
        payload = json.loads(json_out.read_text(encoding="utf-8"))
        assert set(payload["modes"]) == {
            "baseline", "personalized", "history", "comprehensive",
        }

    def test_eval_mode_subset(self, pipeline, tmp_path, capsys):
        queries = tmp_path / "queries.txt"
        queries.write_text("piano\n", encoding="utf-8")
        judgments = tmp_path / "judgments.jsonl"
        judgments.write_text(
            json.dumps({"query": "piano", "doc_id": "d03", "rel": 1}) + "\n",
            encoding="utf-8",
        )
        rc = main([
            "eval", "--index", str(pipeline["index"]), "--tvdb", str(pipeline["tvdb"]),
            "--queries", str(queries), "--judgments", str(judgments),
            "--modes", "baseline,history",
        ])
        assert rc == 0
        out = capsys.readouterr().out
        assert "\npersonalized\t" not in out
        assert out.startswith("mode\t") and "baseline\t" in out


class TestConfig:
    def test_flags_override_config_file(self, tmp_path, corpus_path, capsys):
        missing = tmp_path / "missing.jsonl"
        cfg = tmp_path / "search.conf"
        cfg.write_text(f"corpus = {missing}\n", encoding="utf-8")
        out = tmp_path / "t.tvdb"
        # config alone points at a missing corpus and fails
        assert main(["build-tvdb", "--config", str(cfg), "--out", str(out)]) == 1
        assert "missing.jsonl" in capsys.readouterr().err
        # the flag wins over the config value
        rc = main([
            "build-tvdb", "--config", str(cfg),
            "--corpus", str(corpus_path), "--out", str(out),
        ])
        assert rc == 0
        assert out.is_file()

    def test_env_var_config_used_when_flag_absent(
        self, tmp_path, corpus_path, monkeypatch
    ):
        cfg = tmp_path / "env.conf"
        cfg.write_text(f'corpus = "{corpus_path}"\n', encoding="utf-8")
        monkeypatch.setenv("MCSA_CONFIG", str(cfg))
        out = tmp_path / "env.tvdb"
        assert main(["build-tvdb", "--out", str(out)]) == 0
        assert out.is_file()

    def test_bad_config_line_reports_location(self, tmp_path, capsys):
        cfg = tmp_path / "bad.conf"
        cfg.write_text("corpus\n", encoding="utf-8")
        assert main(["build-tvdb", "--config", str(cfg), "--out", "x"]) == 1
        assert "line 1" in capsys.readouterr().err


class TestExitCodes:
    def test_missing_input_is_one(self, tmp_path, capsys):
        rc = main(["build-tvdb", "--corpus", str(tmp_path / "nope.jsonl"), "--out", "x"])
        assert rc == 1
        assert capsys.readouterr().err.startswith("error:")

    def test_unknown_subcommand_is_usage_error(self):
        with pytest.raises(SystemExit) as exc:
            main(["frobnicate"])
        assert exc.value.code == 2

    def test_unknown_mode_flag_is_usage_error(self, pipeline):
        with pytest.raises(SystemExit) as exc:
            main([
                "search", "--index", str(pipeline["index"]),
                "--tvdb", str(pipeline["tvdb"]), "--query", "piano", "--mode", "turbo",
            ])
        assert exc.value.code == 2

    def test_blank_query_is_one(self, pipeline, capsys):
        rc = main([
            "search", "--index", str(pipeline["index"]),
            "--tvdb", str(pipeline["tvdb"]), "--query", "   ",
        ])
        assert rc == 1
        assert "error:" in capsys.readouterr().err

    def test_eval_unknown_mode_name_is_one(self, pipeline, tmp_path, capsys):
        queries = tmp_path / "q.txt"
        queries.write_text("piano\n", encoding="utf-8")
        judgments = tmp_path / "j.jsonl"
        judgments.write_text(
            json.dumps({"query": "piano", "doc_id": "d03", "rel": 1}) + "\n",
            encoding="utf-8",
        )
        rc = main([
            "eval", "--index", str(pipeline["index"]), "--tvdb", str(pipeline["tvdb"]),
            "--queries", str(queries), "--judgments", str(judgments),
            "--modes", "baseline,turbo",
        ])
        assert rc == 1
        assert "turbo" in capsys.readouterr().err
