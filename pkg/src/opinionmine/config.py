"""Run configuration: a TOML file merged with command-line overrides."""

from __future__ import annotations

import hashlib
import json
from dataclasses import asdict, dataclass, fields
from pathlib import Path
from typing import Optional

try:
    import tomllib
except ModuleNotFoundError:  # Python < 3.11
    import tomli as tomllib

from opinionmine.errors import ConfigError


@dataclass
class RunConfig:
    posts: Optional[str] = None
    format: Optional[str] = None
    stopwords: Optional[str] = None
    lexicon: Optional[str] = None
    translate_table: Optional[str] = None
    split_ratio: float = 0.85
    seed: int = 0
    alpha: float = 1.0
    lam: float = 1e-4
    epochs: int = 20
    k: int = 3
    knn_weighting: str = "uniform"
    tn_convention: str = "paper"
    label_source: str = "lexicon"
    svm_normalize: bool = False
    top_k: int = 100
    out: str = "out"

    def validate(self) -> "RunConfig":
        if not 0.0 < self.split_ratio < 1.0:
            raise ConfigError(f"split_ratio must lie in (0, 1), got {self.split_ratio}")
        if self.k < 1:
            raise ConfigError(f"k must be >= 1, got {self.k}")
        if not self.alpha > 0:
            raise ConfigError(f"alpha must be > 0, got {self.alpha}")
        if not self.lam > 0:
            raise ConfigError(f"lambda must be > 0, got {self.lam}")
        if self.epochs < 1:
            raise ConfigError(f"epochs must be >= 1, got {self.epochs}")
        if self.top_k < 1:
            raise ConfigError(f"top_k must be >= 1, got {self.top_k}")
        if self.seed < 0:
            raise ConfigError(f"seed must be unsigned, got {self.seed}")
        choices = {
            "format": (None, "jsonl", "csv"),
            "knn_weighting": ("uniform", "inverse"),
            "tn_convention": ("paper", "standard"),
            "label_source": ("lexicon", "gold"),
        }
        for name, allowed in choices.items():
            if getattr(self, name) not in allowed:
                raise ConfigError(f"{name} must be one of {[a for a in allowed if a]}, got {getattr(self, name)!r}")
        return self

    def digest(self) -> str:
        blob = json.dumps(asdict(self), sort_keys=True).encode("utf-8")
        return hashlib.sha256(blob).hexdigest()


# TOML / flag spellings that differ from the attribute names
ALIASES = {"lambda": "lam", "split-ratio": "split_ratio", "translate-table": "translate_table",
           "knn-weighting": "knn_weighting", "tn-convention": "tn_convention",
           "label-source": "label_source", "top-k": "top_k", "svm-normalize": "svm_normalize"}


def load_config(path=None, overrides: Optional[dict] = None) -> RunConfig:
    """Defaults, then the TOML file (if any), then non-None overrides."""
    values: dict = {}
    if path is not None:
        try:
            with open(path, "rb") as fh:
                raw = tomllib.load(fh)
        except FileNotFoundError as exc:
            raise ConfigError(f"config file not found: {path}") from exc
        except tomllib.TOMLDecodeError as exc:
            raise ConfigError(f"{path}: {exc}") from exc
        base = Path(path).parent
        for key, value in raw.items():
            name = ALIASES.get(key, key)
            if name in ("posts", "stopwords", "lexicon", "translate_table", "out") and isinstance(value, str):
                value = str(base / value) if not Path(value).is_absolute() else value
            values[name] = value
    for key, value in (overrides or {}).items():
        if value is not None:
            values[ALIASES.get(key, key)] = value

    known = {f.name: f for f in fields(RunConfig)}
    unknown = sorted(set(values) - set(known))
    if unknown:
        raise ConfigError(f"unknown config keys: {unknown}")
    cfg = RunConfig()
    for name, value in values.items():
        default = getattr(cfg, name)
        if isinstance(default, bool):
            if not isinstance(value, bool):
                raise ConfigError(f"{name} must be a boolean")
        elif isinstance(default, int) and not isinstance(value, int):
            raise ConfigError(f"{name} must be an integer")
        elif isinstance(default, float):
            if not isinstance(value, (int, float)) or isinstance(value, bool):
                raise ConfigError(f"{name} must be a number")
            value = float(value)
        setattr(cfg, name, value)
    return cfg.validate()
