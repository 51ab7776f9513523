"""TOML config loading -> CliConfig dataclass."""

from __future__ import annotations

import logging
import os
import sys
from dataclasses import dataclass, field, replace
from pathlib import Path

from .errors import ParameterError

if sys.version_info >= (3, 11):
    import tomllib
else:  # pragma: no cover - backport with identical API
    import tomli as tomllib

log = logging.getLogger(__name__)

CONFIG_NAME = "tokengraphs.toml"
SEED_ENV = "TOKENGRAPHS_SEED"
MAX_SEED = 2**64 - 1


@dataclass
class BudgetConfig:
    """Per-case solver caps. ``None`` means unbounded."""
    node_limit: int | None = 50_000_000
    timeout: float | None = 600.0     # seconds, per case


@dataclass
class CliConfig:
    suite: str = "fast"
    seed: int = 0
    max_n: int = 12
    include_slow: bool = False
    jobs: int = 1
    out: Path | None = None
    budgets: BudgetConfig = field(default_factory=BudgetConfig)

    def __post_init__(self) -> None:
        if not 0 <= self.seed <= MAX_SEED:
            raise ParameterError(f"seed: must be a 64-bit unsigned value, got {self.seed}")
        if self.max_n <= 0:
            raise ParameterError(f"max_n: must be positive, got {self.max_n}")
        if self.jobs <= 0:
            raise ParameterError(f"jobs: must be positive, got {self.jobs}")
        if self.budgets.node_limit is not None and self.budgets.node_limit <= 0:
            raise ParameterError(f"node_limit: must be positive, got {self.budgets.node_limit}")
        if self.budgets.timeout is not None and self.budgets.timeout <= 0:
            raise ParameterError(f"timeout: must be positive, got {self.budgets.timeout}")


def find_config() -> Path | None:
    """Look for tokengraphs.toml in the working directory, then next to the package."""
    candidates = [
        Path(CONFIG_NAME),
        Path(__file__).resolve().parent.parent / CONFIG_NAME,
    ]
    for p in candidates:
        if p.exists():
            return p
    return None


def parse_seed(text: str, source: str) -> int:
    try:
        seed = int(text)
    except ValueError:
        raise ParameterError(f"{source}: seed must be an integer, got {text!r}") from None
    if not 0 <= seed <= MAX_SEED:
        raise ParameterError(f"{source}: seed must be a 64-bit unsigned value, got {seed}")
    return seed


def _optional(raw: dict, key: str, default):
    """A missing key means the default; ``-1`` disables the cap."""
    value = raw.get(key, default)
    return None if value == -1 else value


def load_config(path: Path | None) -> CliConfig:
    """Load a TOML config file (or defaults when ``path`` is None) and apply the seed env var."""
    raw: dict = {}
    if path is not None:
        with open(path, "rb") as f:
            raw = tomllib.load(f)
    verify = raw.get("verify", {})
    budgets_raw = raw.get("budgets", {})
    defaults = BudgetConfig()

    config = CliConfig(
        suite=verify.get("suite", "fast"),
        seed=verify.get("seed", 0),
        max_n=verify.get("max_n", 12),
        include_slow=verify.get("include_slow", False),
        jobs=verify.get("jobs", 1),
        out=Path(verify["out"]) if verify.get("out") else None,
        budgets=BudgetConfig(
            node_limit=_optional(budgets_raw, "node_limit", defaults.node_limit),
            timeout=_optional(budgets_raw, "timeout", defaults.timeout),
        ),
    )

    env_seed = os.environ.get(SEED_ENV)
    if env_seed:
        config = replace(config, seed=parse_seed(env_seed, SEED_ENV))

    log.debug("Loaded config from %s: suite=%s seed=%d", path or "defaults", config.suite, config.seed)
    return config
