"""Concept space construction and the term vector database (TVDB)."""

from __future__ import annotations

import json
import math
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .corpus import CorpusStats, Document

TVDB_VERSION = 1


class TvdbError(ValueError):
    """Raised for TVDB build or file-format problems."""


@dataclass(frozen=True)
class ConceptSpace:
    """Ordered, duplicate-free category labels; one vector dimension per label."""

    concepts: tuple[str, ...]

    def __post_init__(self) -> None:
        if len(set(self.concepts)) != len(self.concepts):
            raise TvdbError("concept labels must be distinct")
        if any(not c for c in self.concepts):
            raise TvdbError("concept labels must be non-empty")

    def __len__(self) -> int:
        return len(self.concepts)

    def index(self, label: str) -> int:
        return self.concepts.index(label)


@dataclass(eq=False)
class TermVector:
    """A term's distribution over the concept space.

    Stored vectors are normalized to sum 1; lookups of unseen terms yield an
    all-zero vector with ``known=False``.
    """

    term: str
    dims: np.ndarray
    known: bool = True


def build_concept_space(corpus: list[Document]) -> ConceptSpace:
    """Distinct labels over all labeled docs, sorted lexicographically."""
    labels = {label for doc in corpus if doc.labels for label in doc.labels}
    if not labels:
        raise TvdbError("corpus has no labeled documents")
    return ConceptSpace(tuple(sorted(labels)))


def raw_tightness(
    concept: str,
    term: str,
    corpus: list[Document],
    stats: CorpusStats | None = None,
) -> float:
    """Unnormalized association between a concept and a term.

    Sums log(1+tf)/log(1+length) over the labeled docs belonging to the
    concept; zero-length docs contribute 0.
    """
    total = 0.0
    for doc in corpus:
        if not doc.labels or concept not in doc.labels:
            continue
        length = stats.doc_length[doc.id] if stats is not None else len(doc.tokens)
        if length == 0:
            continue
        tf = doc.tokens.count(term)
        if tf:
            total += math.log(1 + tf) / math.log(1 + length)
    return total


def normalize_term_vector(raw: np.ndarray) -> np.ndarray | None:
    """Scale raw tightness values to sum 1; ``None`` signals an all-zero input."""
    total = float(raw.sum())
    if total == 0.0:
        return None
    return raw / total


@dataclass
class TVDB:
    """Term vector database: the concept space plus one vector per known term."""

    space: ConceptSpace
    vectors: dict[str, TermVector] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.vectors)

    def lookup(self, term: str) -> TermVector:
        """Stored vector, or a zero vector flagged unknown."""
        hit = self.vectors.get(term)
        if hit is not None:
            return hit
        return TermVector(term, np.zeros(len(self.space)), known=False)

    def save(self, path: str | Path) -> None:
        """Write the pinned file format: JSON header line, then one term per line.

        Rows are ``term TAB <m floats>`` with floats at 17 significant digits,
        space-separated, LF line endings, terms sorted for byte determinism.
        """
        header = json.dumps(
            {"version": TVDB_VERSION, "concepts": list(self.space.concepts)},
            separators=(",", ":"),
        )
        lines = [header]
        for term in sorted(self.vectors):
            dims = self.vectors[term].dims
            lines.append(term + "\t" + " ".join(f"{x:.17g}" for x in dims))
        Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8", newline="\n")

    @classmethod
    def load(cls, path: str | Path) -> "TVDB":
        text = Path(path).read_text(encoding="utf-8")
        lines = text.split("\n")
        if not lines or not lines[0].strip():
            raise TvdbError(f"{path}: missing header line")
        try:
            header = json.loads(lines[0])
        except json.JSONDecodeError as exc:
            raise TvdbError(f"{path}: line 1: invalid header JSON: {exc.msg}") from exc
        version = header.get("version")
        if version != TVDB_VERSION:
            raise TvdbError(f"{path}: unsupported version {version!r}")
        concepts = header.get("concepts")
        if not isinstance(concepts, list) or not concepts:
            raise TvdbError(f"{path}: header has no concepts")
        space = ConceptSpace(tuple(concepts))
        m = len(space)
        vectors: dict[str, TermVector] = {}
        for lineno, line in enumerate(lines[1:], start=2):
            if not line:
                continue
            term, sep, rest = line.partition("\t")
            if not sep or not term:
                raise TvdbError(f"{path}: line {lineno}: malformed row")
            parts = rest.split(" ")
            if len(parts) != m:
                raise TvdbError(
                    f"{path}: line {lineno}: expected {m} values, found {len(parts)}"
                )
            try:
                dims = np.array([float(p) for p in parts])
            except ValueError as exc:
                raise TvdbError(f"{path}: line {lineno}: bad float: {exc}") from exc
            if term in vectors:
                raise TvdbError(f"{path}: line {lineno}: duplicate term {term!r}")
            vectors[term] = TermVector(term, dims)
        return cls(space, vectors)


def build_tvdb(corpus: list[Document], space: ConceptSpace) -> TVDB:
    """Build term vectors for every term occurring in a labeled document.

    Terms whose raw vectors are all zero are excluded rather than stored.
    """
    m = len(space)
    concept_idx = {c: i for i, c in enumerate(space.concepts)}
    raw: dict[str, np.ndarray] = {}
    for doc in corpus:
        if not doc.labels:
            continue
        unknown = set(doc.labels) - concept_idx.keys()
        if unknown:
            raise TvdbError(
                f"document {doc.id!r} labeled with concepts outside the space: {sorted(unknown)}"
            )
        length = len(doc.tokens)
        if length == 0:
            continue
        denom = math.log(1 + length)
        rows = [concept_idx[label] for label in doc.labels]
        for term, tf in Counter(doc.tokens).items():
            contribution = math.log(1 + tf) / denom
            vec = raw.get(term)
            if vec is None:
                vec = raw[term] = np.zeros(m)
            for i in rows:
                vec[i] += contribution
    vectors: dict[str, TermVector] = {}
    for term, vec in raw.items():
        dims = normalize_term_vector(vec)
        if dims is not None:
            vectors[term] = TermVector(term, dims)
    return TVDB(space, vectors)
