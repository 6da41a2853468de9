"""Pipeline configuration: dataclass, key=value config files, validation."""

from __future__ import annotations

from dataclasses import dataclass, field, fields, replace
from pathlib import Path

from .errors import ConfigError
from .stats import KS_RULES

DEFAULT_T_GRID = (15, 20, 25, 30, 35, 40, 45)


@dataclass(frozen=True)
class PipelineConfig:
    input_path: str
    input_format: str = "jsonl"
    output_dir: str = "out"
    stopwords_path: str | None = None
    min_df: int = 15
    max_df_ratio: float = 0.5
    t_grid: tuple[int, ...] = DEFAULT_T_GRID
    seed: int = 42
    iterations: int = 1000
    alpha_lda: float | None = None  # None -> 50/t
    beta_lda: float = 0.01
    npmi_threshold: float = 0.5
    min_pair_count: int = 5
    ks_alpha: float = 0.05
    ks_rule: str = "two_tailed"
    histogram_bins: int = 40
    hexbin_gridsize: int = 20

    def validate(self) -> "PipelineConfig":
        if not self.input_path:
            raise ConfigError("input_path is required")
        if self.input_format not in ("jsonl", "csv"):
            raise ConfigError(f"input_format must be jsonl or csv, got {self.input_format!r}")
        if not self.t_grid:
            raise ConfigError("t_grid must list at least one topic count")
        if any((not isinstance(t, int)) or t < 2 for t in self.t_grid):
            raise ConfigError("every t_grid entry must be an integer >= 2")
        if self.min_df < 1:
            raise ConfigError("min_df must be >= 1")
        if not 0.0 < self.max_df_ratio <= 1.0:
            raise ConfigError("max_df_ratio must be in (0, 1]")
        if self.iterations < 1:
            raise ConfigError("iterations must be >= 1")
        if self.alpha_lda is not None and self.alpha_lda <= 0:
            raise ConfigError("alpha_lda must be > 0")
        if self.beta_lda <= 0:
            raise ConfigError("beta_lda must be > 0")
        if not 0.0 < self.ks_alpha < 1.0:
            raise ConfigError("ks_alpha must be in (0, 1)")
        if self.ks_rule not in KS_RULES:
            raise ConfigError(f"ks_rule must be one of {KS_RULES}, got {self.ks_rule!r}")
        if self.histogram_bins < 1:
            raise ConfigError("histogram_bins must be >= 1")
        if self.hexbin_gridsize < 1:
            raise ConfigError("hexbin_gridsize must be >= 1")
        return self


_INT_KEYS = {"min_df", "seed", "iterations", "histogram_bins", "hexbin_gridsize", "min_pair_count"}
_FLOAT_KEYS = {"max_df_ratio", "alpha_lda", "beta_lda", "ks_alpha", "npmi_threshold"}
_KNOWN_KEYS = {f.name for f in fields(PipelineConfig)}


def parse_t_grid(raw: str) -> tuple[int, ...]:
    try:
        return tuple(int(part) for part in raw.split(",") if part.strip())
    except ValueError:
        raise ConfigError(f"t_grid must be comma-separated integers, got {raw!r}") from None


def _coerce(key: str, raw: str):
    try:
        if key == "t_grid":
            return parse_t_grid(raw)
        if key in _INT_KEYS:
            return int(raw)
        if key in _FLOAT_KEYS:
            return float(raw)
    except ValueError:
        raise ConfigError(f"config key {key!r}: cannot parse {raw!r}") from None
    return raw


def read_config_file(path: str | Path) -> dict:
    """Flat key=value file; '#' starts a comment, blank lines ignored."""
    values: dict = {}
    for line_no, line in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{line_no}: expected key=value, got {line!r}")
        key, raw = (part.strip() for part in line.split("=", 1))
        if key not in _KNOWN_KEYS:
            raise ConfigError(f"{path}:{line_no}: unknown config key {key!r}")
        values[key] = _coerce(key, raw)
    return values


def build_config(file_values: dict | None = None, **overrides) -> PipelineConfig:
    """File values first, explicit overrides (CLI flags) on top."""
    merged = dict(file_values or {})
    merged.update({k: v for k, v in overrides.items() if v is not None})
    unknown = set(merged) - _KNOWN_KEYS
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}")
    if "input_path" not in merged:
        raise ConfigError("input_path is required (flag --input or config file)")
    return PipelineConfig(**merged).validate()
