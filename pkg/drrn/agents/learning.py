"""
Q-learning updates on replayed transition tuples.
"""
import logging
from typing import Sequence

import numpy as np

from drrn.agents.agent import TextAgent
from drrn.core.models import TransitionTuple
from drrn.neural.gradients import sgd_step

logger = logging.getLogger("Trainer")


def td_target(reward: float, next_q: Sequence[float], terminal: bool, gamma: float) -> float:
    """
    Q-learning target ``y = r`` at a terminal state, else ``r + gamma * max(next_q)``.

    Args:
        reward (float): r_k.
        next_q: Q-values of the feasible actions at s_{k+1}.
        terminal (bool): s_{k+1} ends the game.
        gamma (float): Discount factor.

    Raises:
        ValueError: ``next_q`` is empty for a non-terminal transition.
    """
    if terminal:
        return float(reward)
    next_q = np.asarray(next_q, dtype=np.float64)
    if next_q.size == 0:
        raise ValueError("non-terminal transition without next-action values")
    return float(reward + gamma * next_q.max())


def learn(agent: TextAgent, batch: Sequence[TransitionTuple], eta: float) -> float:
    """
    One SGD step per tuple of a mini-batch, in order.

    Each target is recomputed with the parameters as updated by the tuples
    before it, and only the taken action is backpropagated.

    Args:
        agent (TextAgent): Agent updated in place.
        batch: Transition tuples.
        eta (float): Learning rate.

    Returns:
        float: Mean squared TD error of the batch (before each tuple's update).
    """
    if not batch:
        raise ValueError("cannot learn from an empty batch")
    network = agent.network
    params = agent.parameters
    gamma = agent.config.gamma
    squared_errors = []
    for transition in batch:
        next_q = () if transition.terminal else agent.q_values(
            transition.next_state_text, transition.next_action_texts
        )
        target = td_target(transition.reward, next_q, transition.terminal, gamma)
        q, trace = network.evaluate_action(
            agent.state_bow(transition.state_text),
            agent.action_bows(transition.action_texts),
            transition.action_index,
        )
        delta = q - target
        squared_errors.append(delta * delta)
        if delta != 0.0:
            sgd_step(params, network.backprop(trace, delta), eta)
    return float(np.mean(squared_errors))
