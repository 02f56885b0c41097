"""Deterministic synthetic corpora, profiles, and judgments for benchmarks."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .profiles import UserProfile


@dataclass
class PlantedCorpus:
    """A generated corpus with known category structure.

    ``records`` are JSONL-ready dicts; ``concept_of`` maps each doc id to the
    concept whose vocabulary dominates it (mixed docs map to a tuple of two).
    """

    concepts: list[str]
    records: list[dict] = field(default_factory=list)
    pools: dict[str, list[str]] = field(default_factory=dict)
    shared_pool: list[str] = field(default_factory=list)
    concept_of: dict[str, tuple[str, ...]] = field(default_factory=dict)

    def write_jsonl(self, path: str | Path) -> None:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            for rec in self.records:
                fh.write(json.dumps(rec) + "\n")

    def doc_ids_of(self, concept: str) -> list[str]:
        return [
            doc_id
            for doc_id, owners in self.concept_of.items()
            if owners == (concept,)
        ]


def _pool(name: str, size: int) -> list[str]:
    return [f"{name}{i:02d}" for i in range(size)]


def planted_corpus(
    concepts: list[str] | None = None,
    docs_per_concept: int = 30,
    mixed_docs: int = 10,
    vocab_size: int = 20,
    doc_len: int = 15,
    shared_vocab: int = 0,
    shared_per_doc: int = 0,
    label_docs: bool = True,
    label_mixed: bool = False,
    seed: int = 7,
) -> PlantedCorpus:
    """Generate docs drawn from per-concept vocabulary pools.

    Pure docs sample ``doc_len`` tokens from their concept's pool (plus
    ``shared_per_doc`` tokens from a shared pool when configured). Mixed docs
    split their tokens evenly between two concepts' pools and are unlabeled
    unless ``label_mixed`` is set.
    """
    if concepts is None:
        concepts = ["education", "music", "sports"]
    rng = np.random.default_rng(seed)
    pools = {c: _pool(c, vocab_size) for c in concepts}
    shared = _pool("shared", shared_vocab)
    out = PlantedCorpus(concepts=list(concepts), pools=pools, shared_pool=shared)

    def sample(pool: list[str], n: int) -> list[str]:
        return [pool[int(i)] for i in rng.integers(0, len(pool), size=n)]

    for c_i, concept in enumerate(concepts):
        for d_i in range(docs_per_concept):
            doc_id = f"{concept}-{d_i:03d}"
            tokens = sample(pools[concept], doc_len)
            if shared and shared_per_doc:
                tokens += sample(shared, shared_per_doc)
            rec: dict = {"id": doc_id, "text": " ".join(tokens)}
            if label_docs:
                rec["labels"] = [concept]
            out.records.append(rec)
            out.concept_of[doc_id] = (concept,)
    for m_i in range(mixed_docs):
        a = concepts[m_i % len(concepts)]
        b = concepts[(m_i + 1) % len(concepts)]
        half = doc_len // 2
        tokens = sample(pools[a], half) + sample(pools[b], doc_len - half)
        doc_id = f"mixed-{m_i:03d}"
        rec = {"id": doc_id, "text": " ".join(tokens)}
        if label_mixed:
            rec["labels"] = [a, b]
        out.records.append(rec)
        out.concept_of[doc_id] = (a, b)
    return out


def toy_corpus() -> PlantedCorpus:
    """A fixed 12-doc, 3-concept corpus with cross-concept term overlap.

    Includes a multi-label doc and repeated terms so the tightness and
    TFIDF formulas all see non-trivial inputs.
    """
    concepts = ["education", "music", "sports"]
    rows = [
        ("d01", "piano piano keys melody", ["music"]),
        ("d02", "guitar melody concert piano", ["music"]),
        ("d03", "concert hall melody melody singing", ["music"]),
        ("d04", "piano lessons practice school", ["music", "education"]),
        ("d05", "school teacher lessons homework", ["education"]),
        ("d06", "teacher grades homework exam exam", ["education"]),
        ("d07", "exam practice study school piano", ["education"]),
        ("d08", "study homework library school", ["education"]),
        ("d09", "football goal match referee", ["sports"]),
        ("d10", "match stadium goal goal fans", ["sports"]),
        ("d11", "training practice match football", ["sports"]),
        ("d12", "referee whistle stadium training", ["sports"]),
    ]
    out = PlantedCorpus(concepts=concepts)
    for doc_id, text, labels in rows:
        out.records.append({"id": doc_id, "text": text, "labels": labels})
        out.concept_of[doc_id] = tuple(sorted(labels))
    return out


def planted_users(corpus: PlantedCorpus, n_users: int = 5) -> list[UserProfile]:
    """Profiles whose occupation and hobbies use a concept's exclusive terms."""
    users = []
    for i in range(n_users):
        concept = corpus.concepts[i % len(corpus.concepts)]
        pool = corpus.pools[concept]
        users.append(
            UserProfile(
                user_id=f"user-{i:02d}",
                occupation=f"{pool[0]} {pool[1]}",
                hobbies=[pool[2], pool[3]],
                gender="unspecified",
            )
        )
    return users


def user_concept(corpus: PlantedCorpus, user: UserProfile) -> str:
    """The concept a planted user's profile points at."""
    first = user.occupation.split()[0]
    for concept, pool in corpus.pools.items():
        if first in pool:
            return concept
    raise ValueError(f"profile {user.user_id!r} does not use planted vocabulary")


def shared_queries(corpus: PlantedCorpus, n_queries: int = 20, seed: int = 11) -> list[str]:
    """Ambiguous queries built from the shared vocabulary pool."""
    if len(corpus.shared_pool) < 2:
        raise ValueError("corpus has no shared vocabulary to build queries from")
    rng = np.random.default_rng(seed)
    queries = []
    for _ in range(n_queries):
        a, b = rng.choice(len(corpus.shared_pool), size=2, replace=False)
        queries.append(f"{corpus.shared_pool[int(a)]} {corpus.shared_pool[int(b)]}")
    return queries


def judgments_for_concept(
    corpus: PlantedCorpus, queries: list[str], concept: str
) -> list[dict]:
    """rel=2 for every pure doc of ``concept``, rel=0 for all other docs."""
    rows = []
    for query in queries:
        for doc_id, owners in corpus.concept_of.items():
            rel = 2 if owners == (concept,) else 0
            rows.append({"query": query, "doc_id": doc_id, "rel": rel})
    return rows


def write_jsonl(rows: list[dict], path: str | Path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for row in rows:
            fh.write(json.dumps(row) + "\n")
