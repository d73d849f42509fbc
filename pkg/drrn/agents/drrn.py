"""
Deep reinforcement relevance network: separate state and action towers whose
final embeddings are paired by an interaction function.
"""
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from drrn.agents.base import ForwardTrace, QNetwork, ScoredActions
from drrn.core.errors import DimensionMismatchError
from drrn.core.models import Architecture, InteractionKind
from drrn.neural.gradients import Gradients, accumulate
from drrn.neural.interaction import Interaction, build_interaction
from drrn.neural.layers import Tower, init_params
from drrn.text.vocabulary import BowVector


class DRRNetwork(QNetwork):
    arch = Architecture.DRRN

    def __init__(self, state_tower: Tower, action_tower: Tower, interaction: Interaction):
        if state_tower.output_dim != interaction.state_dim or action_tower.output_dim != interaction.action_dim:
            raise DimensionMismatchError("tower outputs do not match the interaction")
        self.state_tower = state_tower
        self.action_tower = action_tower
        self.interaction = interaction

    @classmethod
    def initialize(
        cls,
        state_dim: int,
        action_dim: int,
        layers: int,
        hidden_dim: int,
        rng: np.random.Generator,
        action_hidden_dim: Optional[int] = None,
        interaction: InteractionKind = InteractionKind.INNER_PRODUCT,
        interaction_hidden: Optional[int] = None,
        tied: bool = False,
    ) -> "DRRNetwork":
        """
        Random DRRN with ``layers`` hidden layers per side.

        Tied networks share one tower between both sides and need equal
        input dimensions (a shared vocabulary).
        """
        action_hidden_dim = action_hidden_dim or hidden_dim
        if tied:
            if state_dim != action_dim or action_hidden_dim != hidden_dim:
                raise DimensionMismatchError("tied towers need identical state and action dimensions")
            tower = init_params({"tower": [state_dim] + [hidden_dim] * layers}, rng)["tower"]
            state_tower = action_tower = tower
        else:
            towers = init_params(
                {
                    "state": [state_dim] + [hidden_dim] * layers,
                    "action": [action_dim] + [action_hidden_dim] * layers,
                },
                rng,
            )
            state_tower, action_tower = towers["state"], towers["action"]
        pairing = build_interaction(interaction, hidden_dim, action_hidden_dim, rng, hidden_dim=interaction_hidden)
        return cls(state_tower, action_tower, pairing)

    @property
    def tied(self) -> bool:
        return self.state_tower is self.action_tower

    def parameters(self) -> Dict[str, np.ndarray]:
        return {
            **self.state_tower.parameters(),
            **self.action_tower.parameters(),
            **self.interaction.parameters(),
        }

    def embed_state(self, state: BowVector) -> np.ndarray:
        return self.state_tower.forward(state)[-1]

    def embed_action(self, action: BowVector) -> np.ndarray:
        return self.action_tower.forward(action)[-1]

    def _pair(self, state: BowVector, state_acts, action: BowVector) -> ForwardTrace:
        action_acts = self.action_tower.forward(action)
        q, cache = self.interaction.forward(state_acts[-1], action_acts[-1])
        return ForwardTrace(state, action, state_acts, action_acts, q, cache)

    def q_value(self, state: BowVector, action: BowVector) -> Tuple[float, ForwardTrace]:
        """Q(s, a) = g(h_{L,s}, h_{L,a}) and its trace."""
        trace = self._pair(state, self.state_tower.forward(state), action)
        return trace.q, trace

    def score(self, state: BowVector, actions: Sequence[BowVector]) -> ScoredActions:
        self.check_actions(actions)
        state_acts = self.state_tower.forward(state)
        traces = [self._pair(state, state_acts, action) for action in actions]
        return ScoredActions(np.array([trace.q for trace in traces]), traces)

    def evaluate_action(self, state, actions, index):
        return self.q_value(state, actions[index])

    def backprop(self, trace: ForwardTrace, delta_q: float) -> Gradients:
        hs = trace.state_activations[-1]
        ha = trace.action_activations[-1]
        grad_hs, grad_ha, grads = self.interaction.backward(hs, ha, trace.cache, delta_q)
        state_grads, _ = self.state_tower.backward(trace.state_input, trace.state_activations, grad_hs)
        action_grads, _ = self.action_tower.backward(trace.action_input, trace.action_activations, grad_ha)
        # Tied towers share names, so both sides accumulate into one gradient
        for name, value in list(state_grads.items()) + list(action_grads.items()):
            accumulate(grads, name, value)
        return grads
