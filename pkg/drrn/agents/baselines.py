"""
Single-network baselines that consume concatenated bag-of-words inputs.

- Per-action DQN scores each concatenated (state, action) pair with one output.
- Max-action DQN reads the state followed by one fixed-width slot per action
  (presented order, zero padded) and emits one output per slot.
- The linear baseline is a max-action model without hidden layers.
"""
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from drrn.agents.base import ForwardTrace, QNetwork, ScoredActions
from drrn.core.errors import DimensionMismatchError
from drrn.core.models import Architecture
from drrn.neural.gradients import Gradients
from drrn.neural.layers import AffineLayer, Tower
from drrn.text.vocabulary import BowVector, concat_bows


class PerActionDQN(QNetwork):
    arch = Architecture.PA_DQN

    def __init__(self, tower: Tower, head: AffineLayer, state_dim: int, action_dim: int):
        if tower.input_dim != state_dim + action_dim or head.input_dim != tower.output_dim or head.output_dim != 1:
            raise DimensionMismatchError("per-action DQN layers do not chain")
        self.tower = tower
        self.head = head
        self.state_dim = state_dim
        self.action_dim = action_dim

    @classmethod
    def initialize(cls, state_dim: int, action_dim: int, layers: int, hidden_dim: int, rng: np.random.Generator):
        tower = Tower.initialize("tower", [state_dim + action_dim] + [hidden_dim] * layers, rng)
        head = AffineLayer.initialize("head", hidden_dim, 1, rng)
        return cls(tower, head, state_dim, action_dim)

    def parameters(self) -> Dict[str, np.ndarray]:
        return {**self.tower.parameters(), **self.head.parameters()}

    def q_value(self, state: BowVector, action: BowVector) -> Tuple[float, ForwardTrace]:
        x = concat_bows([state, action], [self.state_dim, self.action_dim])
        activations = self.tower.forward(x)
        q = float(self.head.forward(activations[-1])[0])
        return q, ForwardTrace(x, None, activations, [], q)

    def score(self, state, actions):
        self.check_actions(actions)
        traces = [self.q_value(state, action)[1] for action in actions]
        return ScoredActions(np.array([trace.q for trace in traces]), traces)

    def evaluate_action(self, state, actions, index):
        return self.q_value(state, actions[index])

    def backprop(self, trace: ForwardTrace, delta_q: float) -> Gradients:
        grads, grad_top = self.head.backward(trace.state_activations[-1], np.array([delta_q]))
        tower_grads, _ = self.tower.backward(trace.state_input, trace.state_activations, grad_top)
        grads.update(tower_grads)
        return grads


class MaxActionDQN(QNetwork):
    arch = Architecture.MA_DQN

    def __init__(
        self,
        tower: Optional[Tower],
        head: AffineLayer,
        state_dim: int,
        action_dim: int,
        max_actions: int,
    ):
        input_dim = state_dim + max_actions * action_dim
        top_dim = tower.output_dim if tower is not None else input_dim
        if (tower is not None and tower.input_dim != input_dim) or head.input_dim != top_dim:
            raise DimensionMismatchError("max-action DQN layers do not chain")
        if head.output_dim != max_actions:
            raise DimensionMismatchError("one output slot per action is required")
        self.tower = tower
        self.head = head
        self.state_dim = state_dim
        self.action_dim = action_dim
        self.max_actions = max_actions

    @classmethod
    def initialize(
        cls,
        state_dim: int,
        action_dim: int,
        max_actions: int,
        layers: int,
        hidden_dim: int,
        rng: np.random.Generator,
    ):
        input_dim = state_dim + max_actions * action_dim
        tower = Tower.initialize("tower", [input_dim] + [hidden_dim] * layers, rng)
        head = AffineLayer.initialize("head", hidden_dim, max_actions, rng)
        return cls(tower, head, state_dim, action_dim, max_actions)

    def parameters(self) -> Dict[str, np.ndarray]:
        params = self.tower.parameters() if self.tower is not None else {}
        return {**params, **self.head.parameters()}

    def check_actions(self, actions):
        super().check_actions(actions)
        if len(actions) > self.max_actions:
            raise DimensionMismatchError(
                f"{len(actions)} actions exceed the {self.max_actions} output slots"
            )

    def _forward(self, state: BowVector, actions: Sequence[BowVector]):
        slots = list(actions) + [None] * (self.max_actions - len(actions))
        x = concat_bows([state] + slots, [self.state_dim] + [self.action_dim] * self.max_actions)
        activations = self.tower.forward(x) if self.tower is not None else []
        top = activations[-1] if activations else x
        return x, activations, self.head.forward(top)

    def score(self, state, actions):
        self.check_actions(actions)
        x, activations, outputs = self._forward(state, actions)
        # Only the first |A_t| slots are eligible
        traces = [
            ForwardTrace(x, None, activations, [], float(outputs[slot]), cache=outputs, slot=slot)
            for slot in range(len(actions))
        ]
        return ScoredActions(outputs[: len(actions)].copy(), traces)

    def evaluate_action(self, state, actions, index):
        trace = self.score(state, actions).traces[index]
        return trace.q, trace

    def backprop(self, trace: ForwardTrace, delta_q: float) -> Gradients:
        grad_out = np.zeros(self.max_actions)
        grad_out[trace.slot] = delta_q
        top = trace.state_activations[-1] if trace.state_activations else trace.state_input
        grads, grad_top = self.head.backward(top, grad_out)
        if self.tower is not None:
            tower_grads, _ = self.tower.backward(trace.state_input, trace.state_activations, grad_top)
            grads.update(tower_grads)
        return grads


class LinearQ(MaxActionDQN):
    arch = Architecture.LINEAR

    def __init__(self, head: AffineLayer, state_dim: int, action_dim: int, max_actions: int):
        super().__init__(None, head, state_dim, action_dim, max_actions)

    @classmethod
    def initialize(cls, state_dim: int, action_dim: int, max_actions: int, rng: np.random.Generator):
        head = AffineLayer.initialize("head", state_dim + max_actions * action_dim, max_actions, rng)
        return cls(head, state_dim, action_dim, max_actions)
