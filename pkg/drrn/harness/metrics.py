"""
Metrics files and checkpoints of a training run.

Files written under the output directory:
    curve.csv                 episodes, mean, std (aggregated over seeds)
    final.csv                 seed, episodes, mean, std (each seed's last evaluation)
    blocks.csv                per-seed evaluation, exploration return and TD error per block
    checkpoints/seed-<s>/     episodes-<n>.ckpt snapshots and final.ckpt
"""
import logging
from pathlib import Path
from typing import TYPE_CHECKING, List, Union

import pandas as pd

from drrn.agents import save_agent

if TYPE_CHECKING:
    from drrn.harness.training import LearningCurve, SeedRun, TrainingResult

logger = logging.getLogger("Trainer")

CURVE_FILE = "curve.csv"
FINAL_FILE = "final.csv"
BLOCKS_FILE = "blocks.csv"
CHECKPOINT_DIR = "checkpoints"


def curve_frame(curve: "LearningCurve") -> pd.DataFrame:
    return pd.DataFrame(
        {
            "episodes": [point.episodes for point in curve.points],
            "mean": [point.mean for point in curve.points],
            "std": [point.std for point in curve.points],
        }
    )


def final_frame(runs: List["SeedRun"]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {"seed": run.seed, "episodes": run.final.episodes, "mean": run.final.eval_mean, "std": run.final.eval_std}
            for run in runs
        ]
    )


def blocks_frame(runs: List["SeedRun"]) -> pd.DataFrame:
    return pd.DataFrame(
        [
            {
                "seed": run.seed,
                "episodes": block.episodes,
                "eval_mean": block.eval_mean,
                "eval_std": block.eval_std,
                "train_return": block.train_return,
                "td_error": block.td_error,
            }
            for run in runs
            for block in run.blocks
        ]
    )


def checkpoint_path(out_dir: Union[str, Path], seed: int, episodes: Union[int, None] = None) -> Path:
    """Location of a seed's snapshot (``episodes`` given) or final checkpoint."""
    name = "final.ckpt" if episodes is None else f"episodes-{episodes}.ckpt"
    return Path(out_dir) / CHECKPOINT_DIR / f"seed-{seed}" / name


def write_training_outputs(result: "TrainingResult", out_dir: Union[str, Path]) -> Path:
    """
    Write metrics files and per-seed checkpoints.

    Args:
        result (TrainingResult): Finished training run.
        out_dir: Output directory, created if missing.

    Returns:
        Path: The output directory.
    """
    out_dir = Path(out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    curve_frame(result.curve).to_csv(out_dir / CURVE_FILE, index=False)
    final_frame(result.runs).to_csv(out_dir / FINAL_FILE, index=False)
    blocks_frame(result.runs).to_csv(out_dir / BLOCKS_FILE, index=False)
    for run in result.runs:
        for episodes, snapshot in sorted(run.snapshots.items()):
            save_agent(snapshot, checkpoint_path(out_dir, run.seed, episodes))
        save_agent(run.agent, checkpoint_path(out_dir, run.seed))
    logger.info(f"Wrote metrics and checkpoints to {out_dir}")
    return out_dir
