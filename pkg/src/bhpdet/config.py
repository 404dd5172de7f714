"""Sweep configuration shared by the CLI, the report builders and the scripts."""

from __future__ import annotations

import os
from dataclasses import dataclass, field

DEFAULT_B_MAX = 10
DEFAULT_CASES = 20
DEFAULT_SEED = 0
SEED_ENV = "BHPDET_SEED"


@dataclass(frozen=True)
class SweepConfig:
    command: str
    b_max: int = DEFAULT_B_MAX
    c_max: int | None = None
    families: tuple = field(default=())
    cases: int = DEFAULT_CASES
    seed: int = DEFAULT_SEED
    jobs: int = 1

    def params(self) -> dict:
        """The bounds that shape the sweep, as recorded in the report."""
        if self.command == "hyper":
            return {"cases": self.cases}
        out = {"b_max": self.b_max}
        if self.command == "theorem":
            out["c_max"] = self.b_max if self.c_max is None else self.c_max
        if self.command == "lemmas":
            out["families"] = list(self.families)
        return out


def resolve_seed(cli_seed: int | None) -> int:
    """The environment variable wins over the flag; the flag over the default."""
    env = os.environ.get(SEED_ENV)
    if env is not None and env.strip():
        return int(env)
    return DEFAULT_SEED if cli_seed is None else cli_seed
