"""
Agent sweeps: one experiment protocol trained under many agent configurations.

Files written under the sweep directory:
    sweep.csv       one row per variant: label, agent shape, final mean and std
    <variant>/      that variant's training outputs (curve.csv, final.csv, checkpoints)

Every variant uses the same master seed, so the exploration and evaluation
streams of seed ``s`` are shared across variants.
"""
import itertools
import logging
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple, Union

import pandas as pd
from pydantic import ValidationError

from drrn.core.errors import ConfigError
from drrn.core.models import AgentConfig, Architecture, ExperimentConfig, SweepConfig
from drrn.harness.training import TrainingResult, train

logger = logging.getLogger("Trainer")

SWEEP_FILE = "sweep.csv"

# Agent fields an architecture does not read
IGNORED_FIELDS = {Architecture.LINEAR: ("layers", "hidden_dim")}


@dataclass(frozen=True)
class SweepVariant:
    label: str
    config: ExperimentConfig

    @property
    def slug(self) -> str:
        """Directory-safe form of the label."""
        return re.sub(r"[^A-Za-z0-9.-]+", "_", self.label).strip("_")


@dataclass
class SweepResult:
    variants: List[SweepVariant]
    results: List[TrainingResult]

    def by_label(self) -> Dict[str, TrainingResult]:
        return {variant.label: result for variant, result in zip(self.variants, self.results)}

    @property
    def summary(self) -> pd.DataFrame:
        rows = []
        for variant, result in zip(self.variants, self.results):
            agent = variant.config.agent
            final = result.curve.final
            rows.append(
                {
                    "label": variant.label,
                    "arch": agent.arch.value,
                    "layers": agent.layers,
                    "hidden_dim": agent.hidden_dim,
                    "action_hidden_dim": agent.action_width,
                    "interaction": agent.interaction.value,
                    "episodes": final.episodes,
                    "mean": final.mean,
                    "std": final.std,
                }
            )
        return pd.DataFrame(rows)


def _agent_variant(base: AgentConfig, overrides: Dict, name: Optional[str]) -> Tuple[AgentConfig, Dict]:
    try:
        agent = AgentConfig.model_validate({**base.model_dump(), **overrides})
    except ValidationError as e:
        raise ConfigError(f"sweep variant {name or overrides}: {e}") from e
    ignored = [field for field in IGNORED_FIELDS.get(agent.arch, ()) if field in overrides]
    if ignored:
        overrides = {key: value for key, value in overrides.items() if key not in ignored}
        agent = agent.model_copy(update={field: getattr(base, field) for field in ignored})
    return agent, overrides


def expand_sweep(sweep: SweepConfig) -> List[SweepVariant]:
    """
    List the sweep's variants: grid combinations in axis order, then the named variants.

    Combinations that produce an identical agent are kept once.

    Raises:
        ConfigError: A combination is not a valid agent configuration.
    """
    requested: List[Tuple[Optional[str], Dict]] = []
    axes = list(sweep.grid)
    for values in itertools.product(*(sweep.grid[axis] for axis in axes)):
        requested.append((None, dict(zip(axes, values))))
    requested += [(name, dict(overrides)) for name, overrides in sweep.variants.items()]

    variants: List[SweepVariant] = []
    seen = set()
    for name, overrides in requested:
        agent, overrides = _agent_variant(sweep.base.agent, overrides, name)
        key = agent.model_dump_json()
        if key in seen:
            continue
        seen.add(key)
        label = name or ",".join(f"{field}={value}" for field, value in overrides.items()) or "base"
        variants.append(SweepVariant(label, sweep.base.model_copy(update={"agent": agent})))
    return variants


def run_sweep(
    sweep: SweepConfig,
    master_seed: Optional[int] = None,
    workers: Optional[int] = None,
    out_dir: Union[str, Path, None] = None,
) -> SweepResult:
    """
    Train every variant of ``sweep`` in turn.

    Args:
        sweep (SweepConfig): Base experiment, grid and named variants.
        master_seed (Optional[int]): Overrides the base experiment's master seed.
        workers (Optional[int]): Parallel seed workers within each variant.
        out_dir: When given, ``sweep.csv`` and one output directory per variant are written there.
    """
    variants = expand_sweep(sweep)
    logger.info(f"Sweep of {len(variants)} variants on {sweep.base.game.name}")
    results = []
    for variant in variants:
        logger.info(f"Variant {variant.label}")
        variant_dir = Path(out_dir) / variant.slug if out_dir is not None else None
        results.append(train(variant.config, master_seed=master_seed, workers=workers, out_dir=variant_dir))
    result = SweepResult(variants, results)
    if out_dir is not None:
        Path(out_dir).mkdir(parents=True, exist_ok=True)
        result.summary.to_csv(Path(out_dir) / SWEEP_FILE, index=False)
    return result
