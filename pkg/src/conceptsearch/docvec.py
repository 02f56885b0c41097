"""TFIDF weighting and concept-space document vectors."""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass

import numpy as np

from .corpus import CorpusStats, Document
from .tvdb import TVDB


class StatsMismatchError(RuntimeError):
    """A term occurs in a document but the stats say it occurs nowhere."""


def tfidf(term: str, doc: Document, stats: CorpusStats) -> float:
    """tf(term, doc) * log10(num_docs / doc_freq); 0 when the term is absent."""
    tf = doc.tokens.count(term)
    if tf == 0:
        return 0.0
    df = stats.doc_freq.get(term, 0)
    if df == 0:
        raise StatsMismatchError(
            f"term {term!r} appears in document {doc.id!r} but has zero document frequency"
        )
    return tf * math.log10(stats.num_docs / df)


@dataclass(eq=False)
class DocVector:
    """L2-normalized concept-space vector for a document.

    ``degenerate`` marks documents with no known terms or all-zero TFIDF
    weights; their dims stay all-zero instead of being normalized.
    """

    doc_id: str
    dims: np.ndarray
    degenerate: bool = False


def doc_vector_from_weights(
    doc_id: str, weights: dict[str, float], tvdb: TVDB
) -> DocVector:
    """Weighted sum of known term vectors, L2-normalized.

    Scaling every weight by a positive constant leaves the result unchanged.
    """
    acc = np.zeros(len(tvdb.space))
    for term, weight in weights.items():
        tv = tvdb.vectors.get(term)
        if tv is None or weight == 0.0:
            continue
        acc += weight * tv.dims
    norm = float(np.linalg.norm(acc))
    if norm == 0.0:
        return DocVector(doc_id, acc, degenerate=True)
    return DocVector(doc_id, acc / norm)


def doc_vector(doc: Document, tvdb: TVDB, stats: CorpusStats) -> DocVector:
    """Sum TFIDF-weighted term vectors over the doc's distinct known terms."""
    weights: dict[str, float] = {}
    for term, tf in Counter(doc.tokens).items():
        if term not in tvdb.vectors:
            continue
        df = stats.doc_freq.get(term, 0)
        if df == 0:
            raise StatsMismatchError(
                f"term {term!r} appears in document {doc.id!r} but has zero document frequency"
            )
        weights[term] = tf * math.log10(stats.num_docs / df)
    return doc_vector_from_weights(doc.id, weights, tvdb)
