"""Append-only click log with replayable per-user and global counts."""

from __future__ import annotations

import json
import os
import threading
import time
from collections import Counter
from pathlib import Path

DEFAULT_HOT_MIN = 10


class ClickLogError(RuntimeError):
    """Raised when a click cannot be recorded or the log cannot be replayed."""


class ClickLog:
    """Click counts backed by an append-only JSONL file.

    Every record is written and flushed to disk before the in-memory counts
    change, so a failed write leaves the counts untouched. A ``path`` of None
    keeps the log purely in memory.
    """

    def __init__(self, path: str | Path | None = None, hot_min: int = DEFAULT_HOT_MIN):
        self.path = Path(path) if path is not None else None
        self.hot_min = hot_min
        self.per_user: dict[str, Counter[str]] = {}
        self.global_counts: Counter[str] = Counter()
        self._lock = threading.Lock()
        if self.path is not None and self.path.exists():
            self._replay(self.path)

    def _replay(self, path: Path) -> None:
        with open(path, encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                if not line.strip():
                    continue
                try:
                    rec = json.loads(line)
                    user, doc = rec["user_id"], rec["doc_id"]
                except (json.JSONDecodeError, KeyError, TypeError) as exc:
                    raise ClickLogError(f"{path}: line {lineno}: bad click record") from exc
                self._bump(user, doc)

    def _bump(self, user_id: str, doc_id: str) -> None:
        self.per_user.setdefault(user_id, Counter())[doc_id] += 1
        self.global_counts[doc_id] += 1

    def record(self, user_id: str, doc_id: str, ts: float | None = None) -> None:
        """Durably append one click, then update the counts."""
        with self._lock:
            if self.path is not None:
                line = json.dumps(
                    {"user_id": user_id, "doc_id": doc_id, "ts": ts if ts is not None else time.time()}
                )
                try:
                    with open(self.path, "a", encoding="utf-8", newline="\n") as fh:
                        fh.write(line + "\n")
                        fh.flush()
                        os.fsync(fh.fileno())
                except OSError as exc:
                    raise ClickLogError(f"cannot record click: {exc}") from exc
            self._bump(user_id, doc_id)

    def user_count(self, user_id: str | None, doc_id: str) -> int:
        if user_id is None:
            return 0
        return self.per_user.get(user_id, Counter()).get(doc_id, 0)

    def global_count(self, doc_id: str) -> int:
        return self.global_counts.get(doc_id, 0)

    def is_hot(self, doc_id: str) -> bool:
        """A hot link has at least ``hot_min`` clicks across all users."""
        return self.global_count(doc_id) >= self.hot_min
