"""Command-line pipeline driver: build-tvdb, classify, index, search, eval, serve."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import (
    LinearClassifier,
    assign_categories,
    load_assignments,
    save_assignments,
    train_classifier,
)
from .clicklog import ClickLog
from .config import CONFIG_ENV_VAR, Config, ConfigError, load_config
from .corpus import IngestError, default_stopwords, load_corpus, load_stopwords
from .docvec import doc_vector
from .engine import MODES, SearchEngine
from .evaluate import run_benchmark
from .index import InvertedIndex, IndexingError, build_index
from .profiles import ProfileStore
from .search import EmptyQueryError
from .tvdb import TVDB, TvdbError, build_concept_space, build_tvdb


class CliError(Exception):
    """A user-facing failure: printed to stderr, exit code 1."""


def _stopwords(cfg: Config) -> frozenset[str]:
    if cfg.stopwords:
        return load_stopwords(cfg.stopwords)
    return default_stopwords()


def _require(value: str | None, flag: str) -> str:
    if not value:
        raise CliError(f"missing required input: provide {flag} or set it in the config")
    return value


def _require_file(value: str | None, flag: str) -> str:
    path = _require(value, flag)
    if not Path(path).exists():
        raise CliError(f"{flag}: no such file or directory: {path}")
    return path


def _load_gender_lexicon(path: str | None) -> dict[str, list[str]]:
    if not path:
        return {}
    try:
        data = json.loads(Path(path).read_text(encoding="utf-8"))
    except (OSError, json.JSONDecodeError) as exc:
        raise CliError(f"cannot read gender lexicon {path}: {exc}") from exc
    return {k: list(v) for k, v in data.items()}


def _engine(cfg: Config) -> SearchEngine:
    index = InvertedIndex.load(_require_file(cfg.index_dir, "--index"))
    tvdb = TVDB.load(_require_file(cfg.tvdb, "--tvdb"))
    return SearchEngine(
        index,
        tvdb,
        stopwords=_stopwords(cfg),
        profiles=ProfileStore(cfg.profiles),
        clicks=ClickLog(cfg.click_log, hot_min=cfg.hot_min),
        gender_lexicon=_load_gender_lexicon(cfg.gender_lexicon),
    )


# ---- subcommands ----------------------------------------------------------


def cmd_build_tvdb(cfg: Config, args: argparse.Namespace) -> int:
    corpus_path = _require_file(cfg.corpus, "--corpus")
    out = _require(args.out, "--out")
    docs, _ = load_corpus(corpus_path, _stopwords(cfg))
    space = build_concept_space(docs)
    tvdb = build_tvdb(docs, space)
    tvdb.save(out)
    print(f"wrote {len(tvdb)} term vectors over {len(space)} concepts to {out}")
    return 0


def cmd_classify(cfg: Config, args: argparse.Namespace) -> int:
    corpus_path = _require_file(cfg.corpus, "--corpus")
    tvdb_path = _require_file(cfg.tvdb, "--tvdb")
    out = _require(args.out, "--out")
    docs, stats = load_corpus(corpus_path, _stopwords(cfg))
    tvdb = TVDB.load(tvdb_path)
    vectors = {doc.id: doc_vector(doc, tvdb, stats) for doc in docs}
    labeled = [(vectors[doc.id], doc.labels) for doc in docs if doc.labels]
    classifier = train_classifier(
        labeled, tvdb.space, lam=cfg.lam, epochs=cfg.epochs, seed=cfg.seed
    )
    if args.model:
        classifier.save(args.model)
    assignments = [assign_categories(vectors[doc.id], classifier) for doc in docs]
    save_assignments(assignments, out)
    print(f"assigned categories for {len(assignments)} documents to {out}")
    return 0


def cmd_index(cfg: Config, args: argparse.Namespace) -> int:
    corpus_path = _require_file(cfg.corpus, "--corpus")
    assignments_path = _require_file(args.assignments, "--assignments")
    out = _require(args.out, "--out")
    docs, _ = load_corpus(corpus_path, _stopwords(cfg))
    assignments = load_assignments(assignments_path)
    index = build_index(docs, assignments)
    index.save(out)
    print(f"indexed {index.num_docs} documents into {out}")
    return 0


def cmd_search(cfg: Config, args: argparse.Namespace) -> int:
    engine = _engine(cfg)
    try:
        results = engine.run(args.query, user_id=args.user, mode=args.mode, k=cfg.k)
    except EmptyQueryError as exc:
        raise CliError(str(exc)) from exc
    for r in results:
        concept = r.matched_concept if r.matched_concept is not None else "-"
        print(f"{r.rank}\t{r.doc_id}\t{r.base_score:.6f}\t{concept}")
    return 0


def cmd_eval(cfg: Config, args: argparse.Namespace) -> int:
    engine = _engine(cfg)
    queries_path = _require_file(cfg.queries, "--queries")
    judgments_path = _require_file(cfg.judgments, "--judgments")
    modes = MODES if args.modes == "all" else tuple(args.modes.split(","))
    for mode in modes:
        if mode not in MODES:
            raise CliError(f"unknown mode {mode!r} (choose from {', '.join(MODES)})")
    report = run_benchmark(queries_path, judgments_path, engine, modes=modes, k=cfg.k)
    sys.stdout.write(report.to_tsv())
    if args.json_out:
        Path(args.json_out).write_text(report.to_json(), encoding="utf-8")
    return 0


def cmd_serve(cfg: Config, args: argparse.Namespace) -> int:
    import uvicorn

    from .service import create_app

    app = create_app(_engine(cfg), static_dir=cfg.ui_dir)
    uvicorn.run(app, host=args.host, port=cfg.port)
    return 0


# ---- argument wiring --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="conceptsearch",
        description="Personalized semantic search over a concept-space term vector database.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--config", help=f"config file (or ${CONFIG_ENV_VAR})")
        p.add_argument("--stopwords", help="stopword file; packaged default if omitted")

    p = sub.add_parser("build-tvdb", help="build the term vector database")
    common(p)
    p.add_argument("--corpus", help="JSONL corpus with labeled documents")
    p.add_argument("--out", help="output TVDB file")
    p.set_defaults(func=cmd_build_tvdb)

    p = sub.add_parser("classify", help="train the classifier and assign categories")
    common(p)
    p.add_argument("--corpus")
    p.add_argument("--tvdb")
    p.add_argument("--model", help="optional path for the trained model JSON")
    p.add_argument("--out", help="output assignments JSONL")
    p.add_argument("--seed", type=int)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--epochs", type=int)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("index", help="build the inverted index")
    common(p)
    p.add_argument("--corpus")
    p.add_argument("--assignments", help="assignments JSONL from classify")
    p.add_argument("--out", help="output index directory")
    p.set_defaults(func=cmd_index)

    p = sub.add_parser("search", help="run one query")
    common(p)
    p.add_argument("--index", dest="index_dir")
    p.add_argument("--tvdb")
    p.add_argument("--query", required=True)
    p.add_argument("--mode", default="baseline", choices=MODES)
    p.add_argument("--user")
    p.add_argument("--k", type=int)
    p.add_argument("--profiles", help="profiles directory")
    p.add_argument("--clicks", dest="click_log", help="click log JSONL")
    p.add_argument("--gender-lexicon", dest="gender_lexicon")
    p.set_defaults(func=cmd_search)

    p = sub.add_parser("eval", help="run the benchmark harness")
    common(p)
    p.add_argument("--index", dest="index_dir")
    p.add_argument("--tvdb")
    p.add_argument("--queries")
    p.add_argument("--judgments")
    p.add_argument("--modes", default="all", help="'all' or comma-separated mode list")
    p.add_argument("--k", type=int)
    p.add_argument("--profiles")
    p.add_argument("--clicks", dest="click_log")
    p.add_argument("--gender-lexicon", dest="gender_lexicon")
    p.add_argument("--json-out", help="also write the JSON report here")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("serve", help="serve the HTTP API")
    common(p)
    p.add_argument("--index", dest="index_dir")
    p.add_argument("--tvdb")
    p.add_argument("--profiles")
    p.add_argument("--clicks", dest="click_log")
    p.add_argument("--gender-lexicon", dest="gender_lexicon")
    p.add_argument("--port", type=int)
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--ui-dir", dest="ui_dir", help="static directory for the web UI")
    p.set_defaults(func=cmd_serve)

    return parser


_CONFIG_KEYS = (
    "corpus",
    "stopwords",
    "tvdb",
    "index_dir",
    "profiles",
    "click_log",
    "gender_lexicon",
    "judgments",
    "queries",
    "ui_dir",
    "hot_min",
    "k",
    "seed",
    "lam",
    "epochs",
    "port",
)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = load_config(getattr(args, "config", None))
        overrides = {
            key: getattr(args, key) for key in _CONFIG_KEYS if getattr(args, key, None) is not None
        }
        cfg = cfg.apply_overrides(**overrides)
        return args.func(cfg, args)
    except (CliError, ConfigError, IngestError, TvdbError, IndexingError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entrypoint() -> None:
    sys.exit(main())
