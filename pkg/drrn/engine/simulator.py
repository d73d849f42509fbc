"""
Episode simulation over a validated game.

An ``EpisodeHandle`` is single-owner: it carries its own random stream, which
drives both the action shuffles and the sampling of stochastic outcomes, so a
fixed seed reproduces the full trajectory bit for bit.
"""
from dataclasses import dataclass, field
from typing import List, Tuple, Union

import numpy as np

from drrn.core.errors import EpisodeError
from drrn.core.models import GameSpec, Observation

SeedLike = Union[int, np.random.SeedSequence, np.random.Generator]


@dataclass
class EpisodeHandle:
    """Mutable position of one episode inside a game."""
    game: GameSpec
    rng: np.random.Generator
    state_id: str
    permutation: List[int] = field(default_factory=list)
    step_index: int = 0
    done: bool = False
    truncated: bool = False
    total_reward: float = 0.0


def _shuffle(handle: EpisodeHandle) -> None:
    state = handle.game.state(handle.state_id)
    if state.actions:
        handle.permutation = handle.rng.permutation(len(state.actions)).tolist()
    else:
        handle.permutation = []


def _observe(handle: EpisodeHandle) -> Observation:
    state = handle.game.state(handle.state_id)
    return Observation(
        state_id=state.id,
        state_text=state.text,
        action_texts=[state.actions[i].text for i in handle.permutation],
        presented_permutation=list(handle.permutation),
        step_index=handle.step_index,
        done=handle.done,
        truncated=handle.truncated,
    )


def reset(game: GameSpec, seed: SeedLike) -> Tuple[EpisodeHandle, Observation]:
    """
    Start a new episode at the game's start state.

    Args:
        game (GameSpec): A validated game.
        seed: Integer seed, SeedSequence or Generator for the episode's stream.

    Returns:
        Tuple[EpisodeHandle, Observation]: The handle and the first observation.
    """
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    handle = EpisodeHandle(game=game, rng=rng, state_id=game.start)
    handle.done = game.start_state.is_terminal
    _shuffle(handle)
    return handle, _observe(handle)


def step(handle: EpisodeHandle, choice: int) -> Tuple[float, Observation]:
    """
    Take the presented action at position ``choice``.

    The reward is the terminal reward when the next state ends the game and
    the step penalty otherwise, including the step that hits the cap.

    Args:
        handle (EpisodeHandle): The running episode.
        choice (int): Index into the presented action list.

    Returns:
        Tuple[float, Observation]: Reward and the next observation.

    Raises:
        EpisodeError: The episode is finished or the choice is out of range.
    """
    if handle.done:
        raise EpisodeError("cannot step a finished episode")
    if not 0 <= choice < len(handle.permutation):
        raise EpisodeError(
            f"choice {choice} out of range for {len(handle.permutation)} presented actions"
        )
    game = handle.game
    action = game.state(handle.state_id).actions[handle.permutation[choice]]
    if action.is_deterministic:
        next_id = action.outcomes[0].next
    else:
        cumulative = np.cumsum([outcome.probability for outcome in action.outcomes])
        pick = int(np.searchsorted(cumulative, handle.rng.random(), side="right"))
        next_id = action.outcomes[min(pick, len(action.outcomes) - 1)].next

    handle.state_id = next_id
    handle.step_index += 1
    next_state = game.state(next_id)
    if next_state.is_terminal:
        reward = float(next_state.terminal_reward)
        handle.done = True
    else:
        reward = float(game.step_penalty)
        if handle.step_index >= game.max_steps:
            handle.done = True
            handle.truncated = True
    handle.total_reward += reward
    _shuffle(handle)
    return reward, _observe(handle)
