"""Runtime limits and defaults, overridable through environment variables."""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace

from .errors import ValidationError

_OUTPUT_FORMATS = ("json", "table")


@dataclass(frozen=True)
class Config:
    modulus_cap: int = 10_000_000
    subgroup_enumeration_cap: int = 1_000_000
    prime_search_bound: int = 1_000_000
    period_degree_cap: int = 24
    seed: int = 0
    output_format: str = "json"

    def __post_init__(self) -> None:
        for name in ("modulus_cap", "subgroup_enumeration_cap",
                     "prime_search_bound", "period_degree_cap"):
            if getattr(self, name) < 1:
                raise ValidationError(f"{name} must be a positive integer")
        if self.output_format not in _OUTPUT_FORMATS:
            raise ValidationError(
                f"output_format must be one of {_OUTPUT_FORMATS}")


DEFAULT_CONFIG = Config()


def config_from_env(base: Config | None = None) -> Config:
    """Build a Config, letting upper-cased field names in os.environ override."""
    cfg = base or DEFAULT_CONFIG
    overrides = {}
    for field in fields(Config):
        raw = os.environ.get(field.name.upper())
        if raw is None:
            continue
        if field.type == "int":
            try:
                overrides[field.name] = int(raw)
            except ValueError:
                raise ValidationError(
                    f"environment override {field.name.upper()}={raw!r} "
                    "is not an integer") from None
        else:
            overrides[field.name] = raw
    return replace(cfg, **overrides) if overrides else cfg
