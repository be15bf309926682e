"""CLI defaults, optionally overridden by a key=value file.

The file is named by ``--config`` or the ``UNITSUMS_CONFIG`` environment
variable.  Lines look like ``a_cap = 500``; ``#`` starts a comment.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, fields, replace
from pathlib import Path

ENV_VAR = "UNITSUMS_CONFIG"
FORMATS = ("json", "tsv", "pretty")


@dataclass(frozen=True)
class CliConfig:
    uvw_bound: int = 100
    y_bound: int = 10_000
    a_cap: int = 1000
    sc_cap: int = 3000
    u_max: int = 1000
    precision_cap: int = 4096
    format: str = "pretty"
    verbosity: int = 0

    def __post_init__(self):
        for f in fields(self):
            v = getattr(self, f.name)
            if f.type == "int" and f.name != "verbosity" and v <= 0:
                raise ValueError(f"{f.name} must be positive, got {v}")
        if self.format not in FORMATS:
            raise ValueError(f"format must be one of {FORMATS}, got {self.format!r}")

    def updated(self, **changes) -> "CliConfig":
        return replace(self, **{k: v for k, v in changes.items() if v is not None})


def parse_config_text(text: str, base: CliConfig | None = None) -> CliConfig:
    base = base or CliConfig()
    types = {f.name: f.type for f in fields(CliConfig)}
    changes = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ValueError(f"config line {lineno}: expected key=value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        if key not in types:
            raise ValueError(f"config line {lineno}: unknown key {key!r}")
        changes[key] = int(value.replace("_", "")) if types[key] == "int" else value
    return base.updated(**changes)


def load_config(path: str | os.PathLike | None = None) -> CliConfig:
    path = path or os.environ.get(ENV_VAR)
    if not path:
        return CliConfig()
    return parse_config_text(Path(path).read_text())
