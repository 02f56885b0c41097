"""One-vs-rest linear classifier over concept-space document vectors."""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Collection, Sequence

import numpy as np

from .docvec import DocVector
from .tvdb import ConceptSpace

DEFAULT_LAMBDA = 1e-4
DEFAULT_EPOCHS = 50
DEFAULT_SEED = 42

MODEL_VERSION = 1


class TrainingError(ValueError):
    """Raised when the classifier cannot be trained or applied."""


@dataclass
class LinearClassifier:
    """Per-concept hinge-loss linear models sharing one concept space.

    Concepts flagged in ``degenerate`` lacked positive or negative training
    examples; their models reject everything (constant negative margin).
    """

    space: ConceptSpace
    weights: dict[str, np.ndarray]
    bias: dict[str, float]
    degenerate: frozenset[str]
    lam: float = DEFAULT_LAMBDA
    epochs: int = DEFAULT_EPOCHS
    seed: int = DEFAULT_SEED

    def decision_values(self, dims: np.ndarray) -> np.ndarray:
        """Signed margins, one per concept in space order."""
        if dims.shape != (len(self.space),):
            raise TrainingError(
                f"vector has {dims.shape[0] if dims.ndim == 1 else dims.shape} dims, "
                f"classifier expects {len(self.space)}"
            )
        return np.array(
            [float(self.weights[c] @ dims) + self.bias[c] for c in self.space.concepts]
        )

    def save(self, path: str | Path) -> None:
        payload = {
            "version": MODEL_VERSION,
            "concepts": {
                c: {
                    "weights": [float(x) for x in self.weights[c]],
                    "bias": self.bias[c],
                    "lambda": self.lam,
                    "epochs": self.epochs,
                    "seed": self.seed,
                    "degenerate": c in self.degenerate,
                }
                for c in self.space.concepts
            },
        }
        Path(path).write_text(
            json.dumps(payload, sort_keys=True, indent=2) + "\n", encoding="utf-8"
        )

    @classmethod
    def load(cls, path: str | Path) -> "LinearClassifier":
        payload = json.loads(Path(path).read_text(encoding="utf-8"))
        if payload.get("version") != MODEL_VERSION:
            raise TrainingError(f"{path}: unsupported model version")
        entries = payload["concepts"]
        space = ConceptSpace(tuple(sorted(entries)))
        weights = {c: np.array(entries[c]["weights"], dtype=float) for c in entries}
        bias = {c: float(entries[c]["bias"]) for c in entries}
        degenerate = frozenset(c for c in entries if entries[c].get("degenerate"))
        first = next(iter(entries.values()))
        return cls(
            space,
            weights,
            bias,
            degenerate,
            lam=float(first["lambda"]),
            epochs=int(first["epochs"]),
            seed=int(first["seed"]),
        )


@dataclass(eq=False)
class CategoryAssignment:
    """Categories assigned to one document, plus the raw margins behind them."""

    doc_id: str
    categories: tuple[str, ...]
    decision_values: np.ndarray


def _fit_binary(
    X: np.ndarray, y: np.ndarray, lam: float, epochs: int, seed: int
) -> tuple[np.ndarray, float]:
    """Pegasos-style SGD on hinge loss with L2 regularization.

    The bias rides along as an extra always-1 feature so a single update
    rule covers it; the same seed always yields the same weights.
    """
    n, m = X.shape
    Xa = np.hstack([X, np.ones((n, 1))])
    w = np.zeros(m + 1)
    rng = np.random.default_rng(seed)
    t = 0
    for _ in range(epochs):
        for i in rng.permutation(n):
            t += 1
            eta = 1.0 / (lam * t)
            margin = y[i] * float(w @ Xa[i])
            w *= 1.0 - eta * lam
            if margin < 1.0:
                w += eta * y[i] * Xa[i]
    return w[:m], float(w[m])


def train_classifier(
    examples: Sequence[tuple[DocVector, Collection[str]]],
    space: ConceptSpace,
    lam: float = DEFAULT_LAMBDA,
    epochs: int = DEFAULT_EPOCHS,
    seed: int = DEFAULT_SEED,
) -> LinearClassifier:
    """Train one binary hinge-loss model per concept (one-vs-rest).

    ``examples`` pairs each DocVector with its label set. A concept with no
    positive or no negative examples gets a flagged reject-all model.
    """
    if not examples:
        raise TrainingError("empty training set")
    m = len(space)
    for vec, _ in examples:
        if vec.dims.shape != (m,):
            raise TrainingError(
                f"document {vec.doc_id!r} has {vec.dims.shape[0]} dims, expected {m}"
            )
    X = np.stack([vec.dims for vec, _ in examples])
    weights: dict[str, np.ndarray] = {}
    bias: dict[str, float] = {}
    degenerate: set[str] = set()
    for concept in space.concepts:
        y = np.array([1.0 if concept in labels else -1.0 for _, labels in examples])
        if not (y > 0).any() or not (y < 0).any():
            degenerate.add(concept)
            weights[concept] = np.zeros(m)
            bias[concept] = -1.0
            continue
        weights[concept], bias[concept] = _fit_binary(X, y, lam, epochs, seed)
    return LinearClassifier(
        space, weights, bias, frozenset(degenerate), lam=lam, epochs=epochs, seed=seed
    )


def assign_categories(vec: DocVector, classifier: LinearClassifier) -> CategoryAssignment:
    """All concepts with positive margin; if none, the argmax concept.

    Ties in the argmax fallback go to the lexicographically lower label.
    """
    values = classifier.decision_values(vec.dims)
    concepts = classifier.space.concepts
    chosen = [c for c, v in zip(concepts, values) if v > 0.0]
    if not chosen:
        best = min(range(len(concepts)), key=lambda i: (-values[i], concepts[i]))
        chosen = [concepts[best]]
    return CategoryAssignment(vec.doc_id, tuple(sorted(chosen)), values)


def save_assignments(assignments: Sequence[CategoryAssignment], path: str | Path) -> None:
    """Write assignments as JSONL {"id", "categories"} rows in input order."""
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        for a in assignments:
            fh.write(
                json.dumps({"id": a.doc_id, "categories": list(a.categories)}) + "\n"
            )


def load_assignments(path: str | Path) -> dict[str, tuple[str, ...]]:
    """Read JSONL assignments into a doc id -> categories map."""
    out: dict[str, tuple[str, ...]] = {}
    with open(path, encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            if not line.strip():
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError as exc:
                raise TrainingError(
                    f"{path}: line {lineno}: invalid JSON: {exc.msg}"
                ) from exc
            out[rec["id"]] = tuple(rec["categories"])
    return out
