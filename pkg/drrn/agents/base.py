"""
Common interface of the Q-function approximators.

A network scores one state against a variable-length list of feasible
actions and backpropagates the TD error through a single taken action.
"""
from abc import ABC, abstractmethod
from dataclasses import dataclass
from typing import Any, Dict, List, Sequence, Tuple

import numpy as np

from drrn.core.models import Architecture
from drrn.neural.gradients import Gradients
from drrn.text.vocabulary import BowVector


@dataclass(eq=False)
class ForwardTrace:
    """
    Everything backprop needs for one (state, action) pair.

    Attributes:
        state_input (BowVector): Input of the state side (the concatenated input
            for single-tower baselines).
        action_input (BowVector): Input of the action side (None for single-tower baselines).
        state_activations (List[np.ndarray]): h_{1,s} .. h_{L,s} (or the single tower's layers).
        action_activations (List[np.ndarray]): h_{1,a} .. h_{L,a} (empty for baselines).
        q (float): Q-value of the pair.
        cache (Any): Interaction / output-head intermediates.
        slot (int): Output slot for multi-output baselines.
    """
    state_input: BowVector
    action_input: Any
    state_activations: List[np.ndarray]
    action_activations: List[np.ndarray]
    q: float
    cache: Any = None
    slot: int = 0


@dataclass(eq=False)
class ScoredActions:
    """Q-values aligned with the presented action order, plus their traces."""
    q: np.ndarray
    traces: List[ForwardTrace]

    def __len__(self) -> int:
        return len(self.traces)


class QNetwork(ABC):
    arch: Architecture

    @abstractmethod
    def parameters(self) -> Dict[str, np.ndarray]:
        """Live parameter arrays keyed by name (updated in place by SGD)."""

    @abstractmethod
    def score(self, state: BowVector, actions: Sequence[BowVector]) -> ScoredActions:
        """Q-value of every feasible action at ``state``."""

    @abstractmethod
    def evaluate_action(
        self, state: BowVector, actions: Sequence[BowVector], index: int
    ) -> Tuple[float, ForwardTrace]:
        """Q-value and trace of the action at ``index`` only."""

    @abstractmethod
    def backprop(self, trace: ForwardTrace, delta_q: float) -> Gradients:
        """``delta_q * dQ/dtheta`` for the traced pair; other actions get no gradient."""

    def check_actions(self, actions: Sequence[BowVector]) -> None:
        if not actions:
            raise ValueError("cannot score an empty action list")
