"""Inverted index construction, persistence, and base relevance scoring."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .classify import CategoryAssignment
from .corpus import Document

META_VERSION = 1
SNIPPET_CHARS = 160

POSTINGS_FILE = "postings.tsv"
META_FILE = "meta.json"


class IndexingError(ValueError):
    """Raised for index build, persistence, or consistency problems."""


@dataclass
class InvertedIndex:
    """Postings plus the per-document metadata the scorers need."""

    postings: dict[str, list[tuple[str, int]]]
    doc_lengths: dict[str, int]
    categories: dict[str, tuple[str, ...]]
    num_docs: int
    snippets: dict[str, str] = field(default_factory=dict)
    _tf: dict[str, dict[str, int]] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self._tf:
            self._tf = {t: dict(pairs) for t, pairs in self.postings.items()}

    def term_frequency(self, term: str, doc_id: str) -> int:
        return self._tf.get(term, {}).get(doc_id, 0)

    def doc_freq(self, term: str) -> int:
        return len(self.postings.get(term, ()))

    def matching_docs(self, term: str) -> list[str]:
        return [doc_id for doc_id, _ in self.postings.get(term, ())]

    def has_doc(self, doc_id: str) -> bool:
        return doc_id in self.doc_lengths

    def save(self, dirpath: str | Path) -> None:
        """Write postings.tsv + meta.json; rebuilds are byte-identical."""
        d = Path(dirpath)
        d.mkdir(parents=True, exist_ok=True)
        for doc_id in self.doc_lengths:
            if any(ch.isspace() for ch in doc_id):
                raise IndexingError(
                    f"document id {doc_id!r} contains whitespace; cannot persist postings"
                )
        lines = []
        for term in sorted(self.postings):
            pairs = " ".join(f"{doc_id}:{tf}" for doc_id, tf in self.postings[term])
            lines.append(f"{term}\t{pairs}")
        (d / POSTINGS_FILE).write_text(
            "\n".join(lines) + ("\n" if lines else ""), encoding="utf-8", newline="\n"
        )
        meta = {
            "version": META_VERSION,
            "num_docs": self.num_docs,
            "doc_lengths": self.doc_lengths,
            "categories": {k: list(v) for k, v in self.categories.items()},
            "snippets": self.snippets,
        }
        (d / META_FILE).write_text(
            json.dumps(meta, sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )

    @classmethod
    def load(cls, dirpath: str | Path) -> "InvertedIndex":
        d = Path(dirpath)
        try:
            meta = json.loads((d / META_FILE).read_text(encoding="utf-8"))
        except OSError as exc:
            raise IndexingError(f"cannot read index meta: {exc}") from exc
        if meta.get("version") != META_VERSION:
            raise IndexingError(f"{d}: unsupported index version {meta.get('version')!r}")
        postings: dict[str, list[tuple[str, int]]] = {}
        try:
            text = (d / POSTINGS_FILE).read_text(encoding="utf-8")
        except OSError as exc:
            raise IndexingError(f"cannot read postings: {exc}") from exc
        for lineno, line in enumerate(text.splitlines(), start=1):
            if not line:
                continue
            term, sep, rest = line.partition("\t")
            if not sep:
                raise IndexingError(f"postings line {lineno}: malformed row")
            pairs = []
            for chunk in rest.split(" "):
                doc_id, sep2, tf = chunk.rpartition(":")
                if not sep2:
                    raise IndexingError(f"postings line {lineno}: malformed pair {chunk!r}")
                pairs.append((doc_id, int(tf)))
            postings[term] = pairs
        return cls(
            postings=postings,
            doc_lengths={k: int(v) for k, v in meta["doc_lengths"].items()},
            categories={k: tuple(v) for k, v in meta["categories"].items()},
            num_docs=int(meta["num_docs"]),
            snippets=dict(meta.get("snippets", {})),
        )


def build_index(
    corpus: Sequence[Document],
    assignments: Iterable[CategoryAssignment] | Mapping[str, Sequence[str]],
) -> InvertedIndex:
    """Index every document; each one must carry a category assignment."""
    if isinstance(assignments, Mapping):
        cat_map = {k: tuple(v) for k, v in assignments.items()}
    else:
        cat_map = {a.doc_id: tuple(a.categories) for a in assignments}
    postings: dict[str, list[tuple[str, int]]] = {}
    doc_lengths: dict[str, int] = {}
    categories: dict[str, tuple[str, ...]] = {}
    snippets: dict[str, str] = {}
    for doc in sorted(corpus, key=lambda doc: doc.id):
        if doc.id not in cat_map:
            raise IndexingError(f"document {doc.id!r} has no category assignment")
        if not cat_map[doc.id]:
            raise IndexingError(f"document {doc.id!r} has an empty category assignment")
        doc_lengths[doc.id] = len(doc.tokens)
        categories[doc.id] = tuple(cat_map[doc.id])
        snippets[doc.id] = doc.text[:SNIPPET_CHARS]
        for term, tf in Counter(doc.tokens).items():
            postings.setdefault(term, []).append((doc.id, tf))
    # postings already sorted by doc id because docs were visited in id order
    return InvertedIndex(
        postings=postings,
        doc_lengths=doc_lengths,
        categories=categories,
        num_docs=len(doc_lengths),
        snippets=snippets,
    )


def base_score(query_terms: Sequence[str], doc_id: str, index: InvertedIndex) -> float:
    """Coordination-scaled sum of sqrt(tf) * idf^2 / sqrt(doc length).

    idf(t) = 1 + ln(N / (df(t) + 1)); terms absent from the doc contribute
    nothing, and a doc sharing no terms with the query scores 0.
    """
    distinct = list(dict.fromkeys(query_terms))
    if not distinct:
        return 0.0
    length = index.doc_lengths.get(doc_id)
    if length is None:
        raise IndexingError(f"unknown document {doc_id!r}")
    if length == 0:
        return 0.0
    matched = 0
    acc = 0.0
    for term in distinct:
        tf = index.term_frequency(term, doc_id)
        if tf == 0:
            continue
        matched += 1
        idf = 1.0 + math.log(index.num_docs / (index.doc_freq(term) + 1))
        acc += math.sqrt(tf) * idf * idf
    if matched == 0:
        return 0.0
    coord = matched / len(distinct)
    return coord * acc / math.sqrt(length)
