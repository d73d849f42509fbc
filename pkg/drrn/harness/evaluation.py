import logging
from typing import Optional, Tuple, Union

import numpy as np

from drrn.agents import TextAgent
from drrn.core.models import GameSpec
from drrn.harness.episodes import ActionRewrite, run_episode

logger = logging.getLogger("Evaluator")


def episode_returns(
    agent: TextAgent,
    game: GameSpec,
    episodes: int,
    rng: Union[int, np.random.Generator],
    rewrite: Optional[ActionRewrite] = None,
) -> np.ndarray:
    """Final rewards of ``episodes`` softmax-policy episodes, without learning."""
    if episodes < 1:
        raise ValueError("evaluation needs at least one episode")
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    return np.array(
        [run_episode(agent, game, rng, record=False, rewrite=rewrite).final_reward for _ in range(episodes)]
    )


def evaluate(
    agent: TextAgent,
    game: GameSpec,
    episodes: int,
    rng: Union[int, np.random.Generator],
    rewrite: Optional[ActionRewrite] = None,
) -> Tuple[float, float]:
    """
    Mean and standard deviation of the final reward under softmax selection.

    Args:
        agent (TextAgent): Agent to evaluate (unchanged).
        game (GameSpec): Game to play.
        episodes (int): Number of episodes.
        rng: Seed or generator; a fixed seed gives identical results.
        rewrite: Optional action-text substitution (paraphrase evaluation).

    Returns:
        Tuple[float, float]: Mean and population standard deviation.
    """
    returns = episode_returns(agent, game, episodes, rng, rewrite)
    mean, std = float(returns.mean()), float(returns.std())
    logger.debug(f"Evaluated {episodes} episodes: mean {mean:.3f}, std {std:.3f}")
    return mean, std
