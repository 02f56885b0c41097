"""Ranking quality metrics and the multi-mode benchmark harness."""

from __future__ import annotations

import json
import math
import statistics
import time
import warnings
from dataclasses import dataclass, field
from pathlib import Path
from typing import Collection, Sequence

from .engine import MODES, SearchEngine

ACCURACY_CUTOFF = 10
DEFAULT_P = 10


class JudgmentError(ValueError):
    """Raised for malformed judgment or query files."""


def accuracy(result_ids: Sequence[str], relevant: Collection[str]) -> float:
    """Fraction of the top 10 that is relevant; the divisor is fixed at 10."""
    top = list(result_ids)[:ACCURACY_CUTOFF]
    return len(set(top) & set(relevant)) / ACCURACY_CUTOFF


def dcg(rels: Sequence[float], p: int) -> float:
    """rel_1 + sum_{i=2..p} rel_i / log2(i); positions beyond the list add 0."""
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    total = float(rels[0]) if rels else 0.0
    for i in range(2, min(p, len(rels)) + 1):
        total += rels[i - 1] / math.log2(i)
    return total


def ndcg(rels: Sequence[float], p: int) -> float:
    """dcg / ideal dcg over the same rels sorted descending; 0 when ideal is 0."""
    ideal = dcg(sorted(rels, reverse=True), p)
    if ideal == 0.0:
        return 0.0
    return dcg(rels, p) / ideal


@dataclass(frozen=True)
class Judgment:
    query: str
    doc_id: str
    rel: int

    def __post_init__(self) -> None:
        if self.rel not in (0, 1, 2):
            raise JudgmentError(f"rel must be 0, 1, or 2, got {self.rel!r}")


def load_judgments(path: str | Path) -> dict[str, dict[str, int]]:
    """JSONL {"query","doc_id","rel"} grouped into query -> doc -> rel."""
    out: dict[str, dict[str, int]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
                j = Judgment(rec["query"], rec["doc_id"], int(rec["rel"]))
            except (json.JSONDecodeError, KeyError, TypeError, ValueError) as exc:
                raise JudgmentError(f"{path}: line {lineno}: bad judgment: {exc}") from exc
            out.setdefault(j.query, {})[j.doc_id] = j.rel
    return out


def load_queries(path: str | Path) -> list[tuple[str, str | None]]:
    """One query per line, with an optional TAB-separated user id."""
    out: list[tuple[str, str | None]] = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip():
            continue
        query, sep, user = line.partition("\t")
        out.append((query.strip(), user.strip() if sep and user.strip() else None))
    return out


@dataclass
class QueryResult:
    """Metrics for one query under one mode."""

    mode: str
    query: str
    user: str | None
    accuracy: float
    dcg: float
    ndcg: float
    latency_ms: float


@dataclass
class EvalReport:
    """Per-query rows, per-mode averages, and per-mode latency stats."""

    p: int
    rows: list[QueryResult] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)

    def rows_for(self, mode: str) -> list[QueryResult]:
        return [r for r in self.rows if r.mode == mode]

    def modes(self) -> list[str]:
        seen = dict.fromkeys(r.mode for r in self.rows)
        return list(seen)

    def averages(self, mode: str) -> dict[str, float]:
        rows = self.rows_for(mode)
        if not rows:
            return {"accuracy": 0.0, "dcg": 0.0, "ndcg": 0.0}
        return {
            "accuracy": sum(r.accuracy for r in rows) / len(rows),
            "dcg": sum(r.dcg for r in rows) / len(rows),
            "ndcg": sum(r.ndcg for r in rows) / len(rows),
        }

    def latency(self, mode: str) -> dict[str, float]:
        samples = [r.latency_ms for r in self.rows_for(mode)]
        if not samples:
            return {"median_ms": 0.0, "mean_ms": 0.0}
        return {
            "median_ms": statistics.median(samples),
            "mean_ms": statistics.fmean(samples),
        }

    def to_tsv(self) -> str:
        lines = ["mode\tquery\tuser\taccuracy\tdcg\tndcg\tlatency_ms"]
        for r in self.rows:
            lines.append(
                f"{r.mode}\t{r.query}\t{r.user or '-'}\t"
                f"{r.accuracy:.4f}\t{r.dcg:.4f}\t{r.ndcg:.4f}\t{r.latency_ms:.3f}"
            )
        for mode in self.modes():
            avg = self.averages(mode)
            lat = self.latency(mode)
            lines.append(
                f"{mode}\tAverage\t-\t{avg['accuracy']:.4f}\t{avg['dcg']:.4f}\t"
                f"{avg['ndcg']:.4f}\t{lat['median_ms']:.3f}"
            )
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        payload = {
            "p": self.p,
            "skipped_queries": self.skipped,
            "modes": {
                mode: {
                    "per_query": [
                        {
                            "query": r.query,
                            "user": r.user,
                            "accuracy": r.accuracy,
                            "dcg": r.dcg,
                            "ndcg": r.ndcg,
                            "latency_ms": r.latency_ms,
                        }
                        for r in self.rows_for(mode)
                    ],
                    "average": self.averages(mode),
                    "latency": self.latency(mode),
                }
                for mode in self.modes()
            },
        }
        return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def run_benchmark(
    queries_path: str | Path,
    judgments_path: str | Path,
    engine: SearchEngine,
    modes: Sequence[str] = MODES,
    p: int = DEFAULT_P,
    k: int = DEFAULT_P,
) -> EvalReport:
    """Run every query under every mode and collect quality + latency metrics.

    Queries with no judgments are skipped with a warning and excluded from
    the averages. Relevance for the accuracy metric means rel >= 1.
    """
    for mode in modes:
        if mode not in MODES:
            raise ValueError(f"unknown mode {mode!r}")
    queries = load_queries(queries_path)
    judgments = load_judgments(judgments_path)
    report = EvalReport(p=p)
    for query, user in queries:
        judged = judgments.get(query)
        if not judged:
            warnings.warn(f"query {query!r} has no judgments; skipping", stacklevel=2)
            report.skipped.append(query)
            continue
        relevant = {doc for doc, rel in judged.items() if rel >= 1}
        for mode in modes:
            started = time.perf_counter()
            results = engine.run(query, user_id=user, mode=mode, k=k)
            elapsed_ms = (time.perf_counter() - started) * 1000.0
            ranked_ids = [r.doc_id for r in results]
            rels = [judged.get(doc_id, 0) for doc_id in ranked_ids]
            report.rows.append(
                QueryResult(
                    mode=mode,
                    query=query,
                    user=user,
                    accuracy=accuracy(ranked_ids, relevant),
                    dcg=dcg(rels, p),
                    ndcg=ndcg(rels, p),
                    latency_ms=elapsed_ms,
                )
            )
    return report
