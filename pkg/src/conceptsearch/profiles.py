"""User profiles and their category weight vectors."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path

from .corpus import tokenize
from .search import CategoryWeightVector, category_weights, query_vector
from .tvdb import TVDB

GENDERS = ("female", "male", "unspecified")


class ProfileError(ValueError):
    """Raised for invalid profile contents or files."""


@dataclass
class UserProfile:
    user_id: str
    occupation: str = ""
    hobbies: list[str] = field(default_factory=list)
    gender: str = "unspecified"

    def __post_init__(self) -> None:
        if not self.user_id:
            raise ProfileError("user_id must be non-empty")
        if self.gender not in GENDERS:
            raise ProfileError(
                f"gender must be one of {GENDERS}, got {self.gender!r}"
            )

    def to_dict(self) -> dict:
        return {
            "user_id": self.user_id,
            "occupation": self.occupation,
            "hobbies": list(self.hobbies),
            "gender": self.gender,
        }

    @classmethod
    def from_dict(cls, rec: dict) -> "UserProfile":
        if not isinstance(rec, dict):
            raise ProfileError("profile must be a JSON object")
        hobbies = rec.get("hobbies", [])
        if not isinstance(hobbies, list) or not all(isinstance(h, str) for h in hobbies):
            raise ProfileError("hobbies must be a list of strings")
        return cls(
            user_id=rec.get("user_id", ""),
            occupation=rec.get("occupation", "") or "",
            hobbies=list(hobbies),
            gender=rec.get("gender", "unspecified") or "unspecified",
        )


def empty_profile(user_id: str) -> UserProfile:
    return UserProfile(user_id=user_id)


@dataclass
class ProfileVectors:
    """Category weight vectors mined from a profile.

    ``occupation`` comes from the occupation text, ``hobbies`` from all hobby
    texts concatenated; either is None when its text yields a zero vector.
    """

    occupation: CategoryWeightVector | None = None
    hobbies: CategoryWeightVector | None = None

    def is_empty(self) -> bool:
        return self.occupation is None and self.hobbies is None


def profile_vectors(
    profile: UserProfile, tvdb: TVDB, stopwords: frozenset[str] = frozenset()
) -> ProfileVectors:
    """Build the occupation and hobby weight vectors for a profile."""

    def weights_from(text: str) -> CategoryWeightVector | None:
        if not tokenize(text, stopwords):
            return None
        qv = query_vector(text, tvdb, stopwords)
        return category_weights(qv.dims, tvdb.space)

    return ProfileVectors(
        occupation=weights_from(profile.occupation),
        hobbies=weights_from(" ".join(profile.hobbies)),
    )


class ProfileStore:
    """Profiles kept in memory and mirrored to one JSON file per user."""

    def __init__(self, dirpath: str | Path | None = None):
        self.dirpath = Path(dirpath) if dirpath is not None else None
        self._profiles: dict[str, UserProfile] = {}
        if self.dirpath is not None and self.dirpath.exists():
            for p in sorted(self.dirpath.glob("*.json")):
                profile = UserProfile.from_dict(json.loads(p.read_text(encoding="utf-8")))
                self._profiles[profile.user_id] = profile

    def get(self, user_id: str | None) -> UserProfile | None:
        if user_id is None:
            return None
        return self._profiles.get(user_id)

    def put(self, profile: UserProfile) -> None:
        if any(ch in profile.user_id for ch in "/\\") or profile.user_id in (".", ".."):
            raise ProfileError(f"user_id {profile.user_id!r} is not storable")
        self._profiles[profile.user_id] = profile
        if self.dirpath is not None:
            self.dirpath.mkdir(parents=True, exist_ok=True)
            path = self.dirpath / f"{profile.user_id}.json"
            path.write_text(
                json.dumps(profile.to_dict(), sort_keys=True, indent=2) + "\n",
                encoding="utf-8",
            )

    def user_ids(self) -> list[str]:
        return sorted(self._profiles)
