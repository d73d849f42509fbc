"""
Episode generation under softmax exploration.
"""
import logging
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Sequence

import numpy as np

from drrn.agents import TextAgent
from drrn.core.models import GameSpec, TransitionTuple
from drrn.core.seeding import child_seed
from drrn.engine import reset, step

logger = logging.getLogger("GameEngine")

# Maps presented action texts to the texts the agent reads
ActionRewrite = Callable[[Sequence[str]], List[str]]


@dataclass
class EpisodeResult:
    """
    Outcome of one played episode.

    Attributes:
        total_reward (float): Undiscounted sum of rewards; this is the episode's final reward.
        last_reward (float): Reward of the last step (the ending reward unless the cap hit).
        steps (int): Steps taken.
        truncated (bool): Stopped by the step cap.
        transitions (List[TransitionTuple]): Recorded tuples (empty unless recording).
    """
    total_reward: float
    last_reward: float
    steps: int
    truncated: bool
    transitions: List[TransitionTuple] = field(default_factory=list)

    @property
    def final_reward(self) -> float:
        return self.total_reward


def run_episode(
    agent: TextAgent,
    game: GameSpec,
    rng: np.random.Generator,
    record: bool = True,
    rewrite: Optional[ActionRewrite] = None,
) -> EpisodeResult:
    """
    Play one episode, selecting actions by softmax over the agent's Q-values.

    The engine's stream is seeded from ``rng`` first, then ``rng`` drives the
    agent's choices, so a fixed generator state reproduces the episode.

    Args:
        agent (TextAgent): Acting agent (not updated).
        game (GameSpec): Game to play.
        rng (np.random.Generator): Episode stream.
        record (bool): Collect transition tuples.
        rewrite: Substitution applied to the presented action texts before the
            agent reads them; game dynamics are unaffected.

    Returns:
        EpisodeResult: Rewards, length and the recorded tuples.
    """
    handle, observation = reset(game, child_seed(rng))
    transitions: List[TransitionTuple] = []
    reward = 0.0
    while not observation.done:
        seen = rewrite(observation.action_texts) if rewrite else list(observation.action_texts)
        choice = agent.act(observation.state_text, seen, rng)
        reward, next_observation = step(handle, choice)
        if record:
            terminal = next_observation.done and not next_observation.truncated
            next_seen = next_observation.action_texts
            if rewrite and not terminal:
                next_seen = rewrite(next_seen)
            transitions.append(
                TransitionTuple(
                    state_text=observation.state_text,
                    action_texts=seen,
                    action_index=choice,
                    action_text=seen[choice],
                    reward=reward,
                    next_state_text=next_observation.state_text,
                    next_action_texts=[] if terminal else list(next_seen),
                    terminal=terminal,
                )
            )
        observation = next_observation
    logger.debug(
        f"Episode finished after {handle.step_index} steps with return {handle.total_reward:.2f}"
        f"{' (step cap)' if handle.truncated else ''}"
    )
    return EpisodeResult(
        total_reward=handle.total_reward,
        last_reward=reward,
        steps=handle.step_index,
        truncated=handle.truncated,
        transitions=transitions,
    )
