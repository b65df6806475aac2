"""Pipeline thresholds.

None of the defaults were tuned on data; they are plausible starting points.
Config files are flat ``key = value`` text, ``#`` starts a comment.
"""
from __future__ import annotations

import dataclasses
from dataclasses import dataclass, fields
from pathlib import Path
from typing import Iterable, Mapping

from paracomp.errors import ConfigError

_RATIOS = {"min_lcs_ratio", "max_overlap"}


@dataclass(frozen=True)
class Config:
    # retrieval
    min_tree_freq: int = 2
    min_lcs_ratio: float = 0.5
    min_lcs_len: int = 3
    max_trees: int = 200
    max_affix_len: int = 8
    min_lemma_score: int = 2
    max_new_lemmas: int = 1000
    bootstrap_rounds: int = 1
    # slot discovery
    max_overlap: float = 0.1
    max_slots: int = 200
    # inflector
    dev_fraction: float = 0.1
    seed: int = 0
    max_context: int = 6

    def __post_init__(self):
        for f in fields(self):
            value = getattr(self, f.name)
            if f.type == "int" and (isinstance(value, bool) or not isinstance(value, int)):
                raise ConfigError(f"{f.name} must be an integer, got {value!r}")
            if f.type == "float" and not isinstance(value, (int, float)):
                raise ConfigError(f"{f.name} must be a number, got {value!r}")
            if value < 0:
                raise ConfigError(f"{f.name} must be >= 0, got {value!r}")
            if f.name in _RATIOS and value > 1:
                raise ConfigError(f"{f.name} must lie in [0, 1], got {value!r}")
        if not 0 <= self.dev_fraction <= 0.5:
            raise ConfigError(f"dev_fraction must lie in [0, 0.5], got {self.dev_fraction!r}")
        if self.max_slots < 1:
            raise ConfigError("max_slots must be >= 1")

    def replace(self, **changes) -> "Config":
        return dataclasses.replace(self, **changes)

    def with_overrides(self, overrides: Mapping[str, str]) -> "Config":
        """Return a copy with string-valued overrides parsed to the field types."""
        return self.replace(**_coerce(overrides))

    @classmethod
    def from_file(cls, path: str | Path) -> "Config":
        path = Path(path)
        try:
            text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise ConfigError(f"{path}: not valid UTF-8") from exc
        return cls().with_overrides(parse_config_text(text, str(path)))

    def to_text(self) -> str:
        return "".join(f"{f.name} = {getattr(self, f.name)}\n" for f in fields(self))


def parse_config_text(text: str, origin: str = "<config>") -> dict[str, str]:
    out = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{origin}:{lineno}: expected key = value")
        key, value = (part.strip() for part in line.split("=", 1))
        out[key] = value
    return out


def parse_assignments(items: Iterable[str]) -> dict[str, str]:
    """Parse ``KEY=VALUE`` command-line overrides."""
    out = {}
    for item in items:
        if "=" not in item:
            raise ConfigError(f"override {item!r} is not KEY=VALUE")
        key, value = item.split("=", 1)
        out[key.strip()] = value.strip()
    return out


def _coerce(raw: Mapping[str, str]) -> dict:
    types = {f.name: f.type for f in fields(Config)}
    out = {}
    for key, value in raw.items():
        if key not in types:
            raise ConfigError(f"unknown config key {key!r}")
        try:
            out[key] = int(value) if types[key] == "int" else float(value)
        except ValueError:
            raise ConfigError(f"{key}: cannot parse {value!r} as {types[key]}") from None
    return out
