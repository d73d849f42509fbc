"""
Softmax (Boltzmann) action selection.
"""
from typing import Sequence

import numpy as np


def softmax_probabilities(q: Sequence[float], alpha: float) -> np.ndarray:
    """
    Selection probabilities ``exp(alpha * q_i) / sum_j exp(alpha * q_j)``.

    The maximum is subtracted before exponentiation, so the result is
    unchanged by adding a constant to every q-value and never overflows.

    Args:
        q: Q-values of the feasible actions (non-empty).
        alpha (float): Scaling factor, > 0.

    Returns:
        np.ndarray: Probability vector aligned with ``q``.
    """
    q = np.asarray(q, dtype=np.float64)
    if q.size == 0:
        raise ValueError("cannot select from an empty action list")
    if alpha <= 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    weights = np.exp(alpha * (q - q.max()))
    return weights / weights.sum()


def select_action(q: Sequence[float], alpha: float, rng: np.random.Generator) -> int:
    """Sample an action index from the softmax distribution over ``q``."""
    probabilities = softmax_probabilities(q, alpha)
    return int(rng.choice(probabilities.size, p=probabilities))


def greedy_index(q: Sequence[float]) -> int:
    """Index of the largest q-value; ties go to the lowest index."""
    q = np.asarray(q, dtype=np.float64)
    if q.size == 0:
        raise ValueError("cannot select from an empty action list")
    return int(np.argmax(q))
