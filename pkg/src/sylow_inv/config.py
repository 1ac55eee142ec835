"""Resource caps and run configuration.

Caps can be overridden through the ``SYLOW_INV_CAPS`` environment variable,
either as JSON (``{"enum": 4096}``) or as ``key=value`` pairs separated by
commas (``enum=4096,orbit=1024``).
"""
from __future__ import annotations

import json
import os
from dataclasses import dataclass, field, fields, replace

ENV_VAR = "SYLOW_INV_CAPS"


@dataclass(frozen=True)
class Caps:
    field_order: int = 2**16
    exponent: int = 2**20
    enum: int = 2**13
    orbit: int = 2**12
    dim: int = 6000


def _parse_override(text: str) -> dict:
    text = text.strip()
    if not text:
        return {}
    if text.startswith("{"):
        return dict(json.loads(text))
    out = {}
    for part in text.split(","):
        key, _, val = part.partition("=")
        out[key.strip()] = val.strip()
    return out


def caps() -> Caps:
    """Current caps, re-read from the environment on every call."""
    raw = os.environ.get(ENV_VAR, "")
    base = Caps()
    if not raw:
        return base
    names = {f.name for f in fields(Caps)}
    upd = {}
    for key, val in _parse_override(raw).items():
        if key not in names:
            raise ValueError(f"unknown cap {key!r} in {ENV_VAR}")
        upd[key] = int(val)
    return replace(base, **upd)


FAMILIES = ("gu-even", "gu-odd", "sp", "o-plus", "o-minus", "o-odd")
SUITES = ("group", "steenrod", "psi", "degrees", "invariance", "norms",
          "oracle", "certificates", "examples")


class ConfigInvalid(ValueError):
    pass


@dataclass(frozen=True)
class GridPoint:
    family: str
    m: int
    q: int


@dataclass
class RunConfig:
    """What a verification run covers.

    ``grid`` lists the (family, m, q) points used by the group-level suites;
    the polynomial suites use their own fixed small grids.
    """
    suites: tuple = SUITES
    grid: tuple = ()
    mutant: str | None = None
    timings: bool = False
    extra: dict = field(default_factory=dict)

    def validate(self) -> "RunConfig":
        bad = [s for s in self.suites if s not in SUITES]
        if bad:
            raise ConfigInvalid(f"unknown suite(s): {', '.join(bad)}")
        for g in self.grid:
            if g.family not in FAMILIES:
                raise ConfigInvalid(f"unknown family {g.family!r}")
            if g.m < 1:
                raise ConfigInvalid("m must be at least 1")
        return self

    def to_json(self) -> dict:
        return {
            "suites": list(self.suites),
            "grid": [[g.family, g.m, g.q] for g in self.grid],
            "mutant": self.mutant,
        }
