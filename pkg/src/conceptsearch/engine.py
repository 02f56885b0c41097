"""End-to-end search: retrieval, profile re-scoring, and history re-ranking."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Collection

from .clicklog import ClickLog
from .index import InvertedIndex
from .personalize import gender_flag, history_rerank, personalize_score
from .profiles import ProfileStore, ProfileVectors, UserProfile, empty_profile, profile_vectors
from .search import ResultSet, search
from .tvdb import TVDB

MODES = ("baseline", "personalized", "history", "comprehensive")
DEFAULT_K = 10


class UnknownModeError(ValueError):
    """The requested ranking mode does not exist."""


@dataclass(eq=False)
class RankedResult:
    """One row of a final ranking, carrying everything the wire format needs."""

    doc_id: str
    rank: int
    base_score: float
    new_score: float
    categories: tuple[str, ...]
    matched_concept: str | None
    clicked: bool
    hot: bool
    snippet: str = ""


class SearchEngine:
    """Binds the read-only artifacts (index, TVDB) to the mutable user state
    (profiles, click log) and runs every ranking mode over one code path."""

    def __init__(
        self,
        index: InvertedIndex,
        tvdb: TVDB,
        stopwords: frozenset[str] = frozenset(),
        profiles: ProfileStore | None = None,
        clicks: ClickLog | None = None,
        gender_lexicon: dict[str, Collection[str]] | None = None,
    ):
        self.index = index
        self.tvdb = tvdb
        self.stopwords = stopwords
        self.profiles = profiles if profiles is not None else ProfileStore()
        self.clicks = clicks if clicks is not None else ClickLog()
        self.gender_lexicon = gender_lexicon or {}
        self._vector_cache: dict[str, ProfileVectors] = {}

    # ---- profile handling -------------------------------------------------

    def profile_for(self, user_id: str | None) -> UserProfile:
        """Stored profile, or an empty one for unknown/anonymous users."""
        profile = self.profiles.get(user_id)
        if profile is None:
            return empty_profile(user_id or "anonymous")
        return profile

    def put_profile(self, profile: UserProfile) -> None:
        self.profiles.put(profile)
        self._vector_cache.pop(profile.user_id, None)

    def vectors_for(self, profile: UserProfile) -> ProfileVectors:
        cached = self._vector_cache.get(profile.user_id)
        if cached is None:
            cached = profile_vectors(profile, self.tvdb, self.stopwords)
            self._vector_cache[profile.user_id] = cached
        return cached

    def record_click(self, user_id: str, doc_id: str) -> None:
        self.clicks.record(user_id, doc_id)

    # ---- ranking ----------------------------------------------------------

    def _doc_gender_flag(self, doc_id: str, profile: UserProfile) -> int:
        if profile.gender == "unspecified" or not self.gender_lexicon:
            return 0
        markers = self.gender_lexicon.get(profile.gender)
        if not markers:
            return 0
        for term in markers:
            if self.index.term_frequency(term, doc_id) > 0:
                return 1
        return 0

    def _personalized_order(
        self, rs: ResultSet, profile: UserProfile
    ) -> tuple[list[str], dict[str, float]]:
        """Gated profile re-scoring.

        Only results whose categories overlap the profile vectors (or that
        trip the gender flag) receive the re-score; the rest keep their base
        score. With no eligible result the baseline order stands.
        """
        vectors = self.vectors_for(profile)
        base_order = rs.doc_ids()
        new_scores = {hit.doc_id: hit.base_score for hit in rs.hits}
        if vectors.is_empty() and (
            profile.gender == "unspecified" or not self.gender_lexicon
        ):
            return base_order, new_scores
        any_eligible = False
        for hit in rs.hits:
            categories = self.index.categories.get(hit.doc_id, ())
            occ = vectors.occupation.best_match(categories) if vectors.occupation else 0.0
            hob = vectors.hobbies.best_match(categories) if vectors.hobbies else 0.0
            gen = self._doc_gender_flag(hit.doc_id, profile)
            if occ > 0.0 or hob > 0.0 or gen:
                any_eligible = True
                new_scores[hit.doc_id] = personalize_score(
                    hit.base_score,
                    rs.topscore,
                    rs.lastscore,
                    occupation_match=occ,
                    hobby_match=hob,
                    gender_match=gen,
                )
        if not any_eligible:
            return base_order, new_scores
        order = sorted(new_scores, key=lambda d: (-new_scores[d], d))
        return order, new_scores

    def run(self, query: str, user_id: str | None = None, mode: str = "comprehensive",
            k: int = DEFAULT_K) -> list[RankedResult]:
        """Execute one search and return the top-k rows of the chosen mode."""
        if mode not in MODES:
            raise UnknownModeError(f"unknown mode {mode!r}")
        rs = search(self.index, query, self.tvdb, self.stopwords)
        profile = self.profile_for(user_id)

        if mode == "baseline":
            order = rs.doc_ids()
            new_scores = {hit.doc_id: hit.base_score for hit in rs.hits}
        elif mode == "personalized":
            order, new_scores = self._personalized_order(rs, profile)
        elif mode == "history":
            order = history_rerank(rs.doc_ids(), self.clicks, user_id)
            new_scores = {hit.doc_id: hit.base_score for hit in rs.hits}
        else:  # comprehensive
            order, new_scores = self._personalized_order(rs, profile)
            order = history_rerank(order, self.clicks, user_id)

        by_id = {hit.doc_id: hit for hit in rs.hits}
        results = []
        for position, doc_id in enumerate(order[:k], start=1):
            hit = by_id[doc_id]
            results.append(
                RankedResult(
                    doc_id=doc_id,
                    rank=position,
                    base_score=hit.base_score,
                    new_score=new_scores[doc_id],
                    categories=self.index.categories.get(doc_id, ()),
                    matched_concept=hit.matched_concept,
                    clicked=self.clicks.user_count(user_id, doc_id) > 0,
                    hot=self.clicks.is_hot(doc_id),
                    snippet=self.index.snippets.get(doc_id, ""),
                )
            )
        return results
