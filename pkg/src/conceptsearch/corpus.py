"""Corpus loading, tokenization, and collection statistics."""

from __future__ import annotations

import json
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

# Maximal runs of Unicode letters/digits; underscore is excluded on purpose.
_TOKEN_RE = re.compile(r"[^\W_]+", re.UNICODE)

_VALID_GENDERS = ("female", "male", "unspecified")


class IngestError(ValueError):
    """Raised when a corpus or stopword file cannot be ingested."""


@dataclass
class Document:
    """One corpus record: raw text plus its token stream and optional labels."""

    id: str
    text: str
    tokens: list[str]
    labels: set[str] | None = None


@dataclass
class CorpusStats:
    """Collection-level counts shared by the vector and scoring formulas."""

    num_docs: int
    doc_freq: dict[str, int]
    doc_length: dict[str, int]


def tokenize(text: str, stopwords: frozenset[str] = frozenset()) -> list[str]:
    """Lowercase letter/digit runs with stopwords removed.

    Order and duplicates are preserved; no stemming is applied.
    """
    return [t for t in _TOKEN_RE.findall(text.lower()) if t not in stopwords]


def term_frequency(term: str, doc: Document) -> int:
    """Occurrences of ``term`` in the document's token stream."""
    return doc.tokens.count(term)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Read a stopword file: one term per line, blanks and '#' comments ignored."""
    terms: set[str] = set()
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read stopword file {path}: {exc}") from exc
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        terms.add(line.lower())
    return frozenset(terms)


def default_stopwords() -> frozenset[str]:
    """The small English stopword list shipped with the package."""
    ref = resources.files(__package__) / "data" / "stopwords_en.txt"
    terms = set()
    for line in ref.read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            terms.add(line.lower())
    return frozenset(terms)


def compute_stats(docs: list[Document]) -> CorpusStats:
    """Document count, per-term document frequency, and per-doc token length."""
    doc_freq: Counter[str] = Counter()
    doc_length: dict[str, int] = {}
    for doc in docs:
        doc_length[doc.id] = len(doc.tokens)
        doc_freq.update(set(doc.tokens))
    return CorpusStats(num_docs=len(docs), doc_freq=dict(doc_freq), doc_length=doc_length)


def load_corpus(
    path: str | Path, stopwords: frozenset[str] = frozenset()
) -> tuple[list[Document], CorpusStats]:
    """Load a JSONL corpus ({"id", "text", "labels"?} per line) and its stats.

    Raises IngestError naming the offending line for malformed records and
    for duplicate document ids.
    """
    docs: list[Document] = []
    seen: set[str] = set()
    try:
        fh = open(path, encoding="utf-8")
    except OSError as exc:
        raise IngestError(f"cannot read corpus {path}: {exc}") from exc
    with fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise IngestError(f"{path}: line {lineno}: invalid JSON: {exc.msg}") from exc
            if not isinstance(rec, dict):
                raise IngestError(f"{path}: line {lineno}: record is not an object")
            doc_id = rec.get("id")
            text = rec.get("text")
            if not isinstance(doc_id, str) or not doc_id:
                raise IngestError(f"{path}: line {lineno}: missing or empty 'id'")
            if not isinstance(text, str):
                raise IngestError(f"{path}: line {lineno}: missing 'text'")
            if doc_id in seen:
                raise IngestError(f"{path}: line {lineno}: duplicate document id {doc_id!r}")
            seen.add(doc_id)
            labels: set[str] | None = None
            if "labels" in rec and rec["labels"] is not None:
                raw = rec["labels"]
                if not isinstance(raw, list) or not all(
                    isinstance(x, str) and x for x in raw
                ):
                    raise IngestError(
                        f"{path}: line {lineno}: 'labels' must be a list of non-empty strings"
                    )
                labels = set(raw)
            docs.append(Document(doc_id, text, tokenize(text, stopwords), labels))
    return docs, compute_stats(docs)
