"""Key=value configuration with CLI flag overrides."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields
from pathlib import Path

from .classify import DEFAULT_EPOCHS, DEFAULT_LAMBDA, DEFAULT_SEED
from .clicklog import DEFAULT_HOT_MIN
from .engine import DEFAULT_K
from .personalize import GENDER_BOOST, HOBBY_BOOST, OCCUPATION_BOOST

CONFIG_ENV_VAR = "MCSA_CONFIG"

_INT_KEYS = {"hot_min", "k", "seed", "epochs", "port"}
_FLOAT_KEYS = {"lam"}
# accepted spellings in config files -> dataclass field
_ALIASES = {"lambda": "lam", "index": "index_dir", "clicks": "click_log"}


class ConfigError(ValueError):
    """Raised for unreadable or malformed configuration."""


@dataclass
class Config:
    corpus: str | None = None
    stopwords: str | None = None
    tvdb: str | None = None
    index_dir: str | None = None
    profiles: str | None = None
    click_log: str | None = None
    gender_lexicon: str | None = None
    judgments: str | None = None
    queries: str | None = None
    ui_dir: str | None = None
    hot_min: int = DEFAULT_HOT_MIN
    k: int = DEFAULT_K
    seed: int = DEFAULT_SEED
    lam: float = DEFAULT_LAMBDA
    epochs: int = DEFAULT_EPOCHS
    port: int = 8000

    # The profile significance weights are fixed by design, not configurable;
    # they are surfaced here read-only.
    @property
    def occupation_boost(self) -> float:
        return OCCUPATION_BOOST

    @property
    def hobby_boost(self) -> float:
        return HOBBY_BOOST

    @property
    def gender_boost(self) -> float:
        return GENDER_BOOST

    @classmethod
    def field_names(cls) -> set[str]:
        return {f.name for f in fields(cls)}

    @classmethod
    def load(cls, path: str | Path) -> "Config":
        """Parse ``key = value`` lines; blanks and '#' comments are ignored."""
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config {path}: {exc}") from exc
        cfg = cls()
        names = cls.field_names()
        for lineno, line in enumerate(text.splitlines(), start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ConfigError(f"{path}: line {lineno}: expected key = value")
            key = key.strip().lower().replace("-", "_")
            key = _ALIASES.get(key, key)
            value = value.strip().strip("\"'")
            if key not in names:
                raise ConfigError(f"{path}: line {lineno}: unknown key {key!r}")
            try:
                if key in _INT_KEYS:
                    setattr(cfg, key, int(value))
                elif key in _FLOAT_KEYS:
                    setattr(cfg, key, float(value))
                else:
                    setattr(cfg, key, value)
            except ValueError as exc:
                raise ConfigError(f"{path}: line {lineno}: bad value for {key}: {exc}") from exc
        return cfg

    def apply_overrides(self, **overrides) -> "Config":
        """Return a copy with any non-None override values applied (flags win)."""
        out = Config(**{f.name: getattr(self, f.name) for f in fields(self)})
        names = self.field_names()
        for key, value in overrides.items():
            if value is None:
                continue
            if key not in names:
                raise ConfigError(f"unknown config override {key!r}")
            setattr(out, key, value)
        return out


def load_config(explicit_path: str | None) -> Config:
    """Load from an explicit path, else $MCSA_CONFIG, else built-in defaults."""
    path = explicit_path or os.environ.get(CONFIG_ENV_VAR)
    if path:
        return Config.load(path)
    return Config()
