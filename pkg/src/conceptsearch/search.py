"""Query vectors, category weighting, and grouped result ranking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection, Sequence

import numpy as np

from .corpus import tokenize
from .index import InvertedIndex, base_score
from .tvdb import TVDB, ConceptSpace

MAX_WEIGHT_CONCEPTS = 3


class EmptyQueryError(ValueError):
    """The query contains no terms after tokenization and stopword removal."""


@dataclass(eq=False)
class QueryVector:
    """Sum of the term vectors of the query's distinct keywords."""

    keywords: tuple[str, ...]
    dims: np.ndarray


def query_vector(query: str, tvdb: TVDB, stopwords: frozenset[str] = frozenset()) -> QueryVector:
    """Tokenize the query and add up term vectors; unknown terms add zero."""
    tokens = tokenize(query, stopwords)
    if not tokens:
        raise EmptyQueryError("query is empty after tokenization and stopword removal")
    keywords = tuple(dict.fromkeys(tokens))
    dims = np.zeros(len(tvdb.space))
    for term in keywords:
        dims += tvdb.lookup(term).dims
    return QueryVector(keywords, dims)


@dataclass(frozen=True)
class CategoryWeightVector:
    """At most three concepts with positive weights normalized to sum 1,
    ordered by descending weight (ties broken toward the lower label)."""

    entries: tuple[tuple[str, float], ...]

    def labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.entries)

    def best_match(self, categories: Collection[str]) -> float:
        """Largest weight among concepts shared with ``categories``; 0 if disjoint."""
        best = 0.0
        for label, weight in self.entries:
            if label in categories and weight > best:
                best = weight
        return best

    def best_concept(self, categories: Collection[str]) -> str | None:
        """The shared concept with the highest weight, or None if disjoint."""
        for label, _ in self.entries:
            if label in categories:
                return label
        return None


def category_weights(dims: np.ndarray, space: ConceptSpace) -> CategoryWeightVector | None:
    """Top (at most 3) strictly positive dims, renormalized to sum 1.

    Returns None when the vector is all zero; never pads below three.
    """
    positive = [
        (label, float(value))
        for label, value in zip(space.concepts, dims)
        if value > 0.0
    ]
    if not positive:
        return None
    positive.sort(key=lambda pair: (-pair[1], pair[0]))
    top = positive[:MAX_WEIGHT_CONCEPTS]
    total = sum(value for _, value in top)
    return CategoryWeightVector(tuple((label, value / total) for label, value in top))


@dataclass(eq=False)
class SearchHit:
    """One candidate document with its base score and matched weight concept."""

    doc_id: str
    base_score: float
    matched_concept: str | None = None


@dataclass(eq=False)
class ResultSet:
    """Grouped candidate ordering plus the base-score extremes used later."""

    hits: list[SearchHit]
    topscore: float
    lastscore: float
    weights: CategoryWeightVector | None = None

    def doc_ids(self) -> list[str]:
        return [hit.doc_id for hit in self.hits]


def search(
    index: InvertedIndex,
    query: str,
    tvdb: TVDB,
    stopwords: frozenset[str] = frozenset(),
) -> ResultSet:
    """Retrieve and order every document matching at least one query term.

    Candidates are grouped by the query's category weights (heaviest concept
    first, then docs matching no weighted concept), ordered by base score
    within each group, with doc id as the final tie-break. Documents outside
    the weighted concepts are appended, never dropped.
    """
    qv = query_vector(query, tvdb, stopwords)
    weights = category_weights(qv.dims, tvdb.space)

    candidates: set[str] = set()
    for term in qv.keywords:
        candidates.update(index.matching_docs(term))
    if not candidates:
        return ResultSet([], 0.0, 0.0, weights)

    scores = {doc_id: base_score(qv.keywords, doc_id, index) for doc_id in candidates}
    no_match_group = len(weights.entries) if weights is not None else 0

    def group_of(doc_id: str) -> int:
        if weights is None:
            return 0
        matched = weights.best_concept(index.categories.get(doc_id, ()))
        if matched is None:
            return no_match_group
        return weights.labels().index(matched)

    ordered = sorted(candidates, key=lambda d: (group_of(d), -scores[d], d))
    hits = []
    for doc_id in ordered:
        matched = (
            weights.best_concept(index.categories.get(doc_id, ()))
            if weights is not None
            else None
        )
        hits.append(SearchHit(doc_id, scores[doc_id], matched))
    return ResultSet(hits, max(scores.values()), min(scores.values()), weights)
