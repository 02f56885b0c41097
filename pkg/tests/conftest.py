from __future__ import annotations

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from conceptsearch.corpus import Document, compute_stats, tokenize
from conceptsearch.synth import toy_corpus
from conceptsearch.tvdb import ConceptSpace, TVDB, TermVector, build_concept_space, build_tvdb


def docs_from_records(records: list[dict]) -> list[Document]:
    return [
        Document(
            rec["id"],
            rec["text"],
            tokenize(rec["text"]),
            set(rec["labels"]) if rec.get("labels") else None,
        )
        for rec in records
    ]


@pytest.fixture(scope="session")
def toy():
    """The fixed 12-doc, 3-concept corpus plus its stats, space, and TVDB."""
    corpus = toy_corpus()
    docs = docs_from_records(corpus.records)
    stats = compute_stats(docs)
    space = build_concept_space(docs)
    tvdb = build_tvdb(docs, space)
    return {"corpus": corpus, "docs": docs, "stats": stats, "space": space, "tvdb": tvdb}


def make_tvdb(concepts: tuple[str, ...], vectors: dict[str, list[float]]) -> TVDB:
    """Hand-built TVDB for tests that need exact vector values."""
    space = ConceptSpace(concepts)
    return TVDB(
        space,
        {term: TermVector(term, np.array(dims, dtype=float)) for term, dims in vectors.items()},
    )
