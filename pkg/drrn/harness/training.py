"""
Block-wise experience-replay training across independent seeds.

Per seed: evaluate the untrained agent, then repeatedly generate a block of
episodes into replay memory, run the replay epochs, and evaluate again. The
learning curve averages the per-seed evaluations point by point.

Random streams are labelled per seed (see ``drrn.core.seeding``):
``init`` (weights), ``explore`` (episode generation), ``replay``
(mini-batch shuffles) and ``eval`` (one stream per curve point), so
evaluation never perturbs training and results do not depend on worker
scheduling.
"""
import copy
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Dict, List, Optional, Union

import numpy as np

from drrn.agents import TextAgent, create_agent, learn
from drrn.core.config import settings
from drrn.core.models import ExperimentConfig, GameSpec, ReplayScope
from drrn.core.seeding import make_rng
from drrn.engine import load_game_file
from drrn.harness.evaluation import evaluate
from drrn.harness.episodes import run_episode
from drrn.harness.metrics import write_training_outputs
from drrn.harness.replay import ReplayMemory, epoch_batches

logger = logging.getLogger("Trainer")


@dataclass(frozen=True)
class CurvePoint:
    episodes: int
    mean: float
    std: float


@dataclass
class LearningCurve:
    """Evaluation results by training episodes seen, strictly increasing."""
    points: List[CurvePoint] = field(default_factory=list)

    def append(self, point: CurvePoint) -> None:
        if self.points and point.episodes <= self.points[-1].episodes:
            raise ValueError("curve episodes must be strictly increasing")
        self.points.append(point)

    @property
    def episodes(self) -> List[int]:
        return [point.episodes for point in self.points]

    @property
    def means(self) -> List[float]:
        return [point.mean for point in self.points]

    @property
    def final(self) -> CurvePoint:
        return self.points[-1]

    def first_reaching(self, threshold: float) -> Optional[int]:
        """Episodes seen at the first point whose mean reaches ``threshold``."""
        for point in self.points:
            if point.mean >= threshold:
                return point.episodes
        return None


@dataclass
class BlockRecord:
    """
    Per-seed result of one training block.

    Attributes:
        episodes (int): Training episodes seen after the block.
        eval_mean (float): Evaluation mean after the block.
        eval_std (float): Evaluation standard deviation after the block.
        train_return (float): Mean return of the block's exploration episodes.
        td_error (float): Mean squared TD error over the block's mini-batches (NaN when frozen).
    """
    episodes: int
    eval_mean: float
    eval_std: float
    train_return: float = float("nan")
    td_error: float = float("nan")


@dataclass
class SeedRun:
    """One seed's trained agent, evaluation history and snapshots."""
    seed: int
    agent: TextAgent
    blocks: List[BlockRecord]
    snapshots: Dict[int, TextAgent] = field(default_factory=dict)

    @property
    def curve(self) -> LearningCurve:
        curve = LearningCurve()
        for block in self.blocks:
            curve.append(CurvePoint(block.episodes, block.eval_mean, block.eval_std))
        return curve

    @property
    def final(self) -> BlockRecord:
        return self.blocks[-1]


@dataclass
class TrainingResult:
    config: ExperimentConfig
    master_seed: int
    runs: List[SeedRun]
    curve: LearningCurve

    @property
    def agents(self) -> Dict[int, TextAgent]:
        return {run.seed: run.agent for run in self.runs}


def _evaluate_point(
    agent: TextAgent, game: GameSpec, config: ExperimentConfig, master_seed: int, seed: int, episodes: int
):
    return evaluate(agent, game, config.eval_episodes, make_rng(master_seed, "seed", seed, "eval", episodes))


def train_seed(config: ExperimentConfig, game: GameSpec, seed: int, master_seed: int) -> SeedRun:
    """
    Train one agent from scratch on ``game``.

    Args:
        config (ExperimentConfig): Experiment settings.
        game (GameSpec): Loaded game.
        seed (int): Run label; selects the run's random streams.
        master_seed (int): Root of all streams.

    Returns:
        SeedRun: Trained agent, per-block records and snapshot copies.
    """
    agent = create_agent(config.agent, game, make_rng(master_seed, "seed", seed, "init"))
    explore_rng = make_rng(master_seed, "seed", seed, "explore")
    replay_rng = make_rng(master_seed, "seed", seed, "replay")
    memory = ReplayMemory(config.replay_capacity)

    mean, std = _evaluate_point(agent, game, config, master_seed, seed, 0)
    run = SeedRun(seed=seed, agent=agent, blocks=[BlockRecord(0, mean, std)])
    seen = 0
    while seen < config.episodes:
        size = min(config.episodes_per_block, config.episodes - seen)
        block = []
        returns = []
        for _ in range(size):
            result = run_episode(agent, game, explore_rng, record=True)
            block.extend(result.transitions)
            returns.append(result.final_reward)
        memory.extend(block)
        previous, seen = seen, seen + size

        td_error = float("nan")
        if not config.freeze:
            if config.replay_scope == ReplayScope.MEMORY:
                data = list(memory)
            else:
                data = memory.newest(len(block))
            errors = [
                learn(agent, batch, config.eta)
                for _ in range(config.epochs_per_block)
                for batch in epoch_batches(data, replay_rng, config.batch_size)
            ]
            td_error = float(np.mean(errors)) if errors else float("nan")

        mean, std = _evaluate_point(agent, game, config, master_seed, seed, seen)
        run.blocks.append(BlockRecord(seen, mean, std, float(np.mean(returns)), td_error))
        logger.info(
            f"seed {seed}: {seen}/{config.episodes} episodes, eval {mean:.3f} (std {std:.3f}), "
            f"td error {td_error:.4f}"
        )
        for mark in config.snapshot_episodes:
            if previous < mark <= seen:
                run.snapshots[mark] = copy.deepcopy(agent)
    return run


def aggregate_curve(runs: List[SeedRun]) -> LearningCurve:
    """
    Average per-seed evaluations point by point.

    The std of a point is the population std across seeds of the per-seed means.
    """
    if not runs:
        raise ValueError("no runs to aggregate")
    curve = LearningCurve()
    for i, block in enumerate(runs[0].blocks):
        means = np.array([run.blocks[i].eval_mean for run in runs])
        curve.append(CurvePoint(block.episodes, float(means.mean()), float(means.std())))
    return curve


def train(
    config: ExperimentConfig,
    master_seed: Optional[int] = None,
    workers: Optional[int] = None,
    out_dir: Union[str, Path, None] = None,
) -> TrainingResult:
    """
    Train one agent per configured seed and build the learning curve.

    Args:
        config (ExperimentConfig): Experiment settings; ``config.game`` must point to a game file.
        master_seed (Optional[int]): Overrides ``config.master_seed``.
        workers (Optional[int]): Parallel seed workers (default ``settings.workers``).
        out_dir: When given, metrics files and checkpoints are written there.

    Returns:
        TrainingResult: Runs ordered as ``config.seeds`` and the aggregated curve.
    """
    master_seed = config.master_seed if master_seed is None else master_seed
    workers = workers or settings.workers
    game = load_game_file(config.game)
    logger.info(
        f"Training {config.agent.arch.value} on '{game.title}' for {config.episodes} episodes, "
        f"seeds {config.seeds}, master seed {master_seed}"
    )
    if workers > 1 and len(config.seeds) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(train_seed, config, game, seed, master_seed) for seed in config.seeds]
            runs = [future.result() for future in futures]
    else:
        runs = [train_seed(config, game, seed, master_seed) for seed in config.seeds]

    result = TrainingResult(config=config, master_seed=master_seed, runs=runs, curve=aggregate_curve(runs))
    final = result.curve.final
    logger.info(f"Final mean reward {final.mean:.3f} (std {final.std:.3f}) after {final.episodes} episodes")
    if out_dir is not None:
        write_training_outputs(result, out_dir)
    return result
