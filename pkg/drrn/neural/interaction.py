"""
Interaction functions g(h_s, h_a) pairing the final state and action embeddings.
"""
from abc import ABC, abstractmethod
from typing import Any, Dict, Optional, Tuple

import numpy as np

from drrn.core.errors import DimensionMismatchError
from drrn.core.models import InteractionKind
from drrn.neural.gradients import Gradients
from drrn.neural.layers import AffineLayer, init_uniform


class Interaction(ABC):
    kind: InteractionKind

    def __init__(self, state_dim: int, action_dim: int):
        self.state_dim = state_dim
        self.action_dim = action_dim

    def _check(self, hs: np.ndarray, ha: np.ndarray) -> None:
        if hs.shape != (self.state_dim,) or ha.shape != (self.action_dim,):
            raise DimensionMismatchError(
                f"{self.kind.value} expects ({self.state_dim}, {self.action_dim}) "
                f"embeddings, got ({hs.shape}, {ha.shape})"
            )

    def parameters(self) -> Dict[str, np.ndarray]:
        return {}

    @abstractmethod
    def forward(self, hs: np.ndarray, ha: np.ndarray) -> Tuple[float, Any]:
        """Q-value and a cache for backward."""

    @abstractmethod
    def backward(
        self, hs: np.ndarray, ha: np.ndarray, cache: Any, delta_q: float
    ) -> Tuple[np.ndarray, np.ndarray, Gradients]:
        """Gradients of ``delta_q * Q`` w.r.t. hs, ha and the interaction's own parameters."""


class InnerProduct(Interaction):
    kind = InteractionKind.INNER_PRODUCT

    def __init__(self, dim: int):
        super().__init__(dim, dim)

    def forward(self, hs, ha):
        self._check(hs, ha)
        return float(hs @ ha), None

    def backward(self, hs, ha, cache, delta_q):
        return delta_q * ha, delta_q * hs, {}


class Bilinear(Interaction):
    """``Q = h_s^T B h_a``; B may be rectangular when the towers differ in width."""
    kind = InteractionKind.BILINEAR

    def __init__(self, B: np.ndarray, name: str = "interaction"):
        super().__init__(B.shape[0], B.shape[1])
        self.name = name
        self.B = B

    def parameters(self):
        return {f"{self.name}.B": self.B}

    def forward(self, hs, ha):
        self._check(hs, ha)
        Bha = self.B @ ha
        return float(hs @ Bha), Bha

    def backward(self, hs, ha, cache, delta_q):
        grads = {f"{self.name}.B": delta_q * np.outer(hs, ha)}
        return delta_q * cache, delta_q * (self.B.T @ hs), grads


class ConcatMLP(Interaction):
    """One tanh hidden layer over ``[h_s; h_a]`` followed by a linear scalar output."""
    kind = InteractionKind.CONCAT_MLP

    def __init__(self, state_dim: int, action_dim: int, hidden: AffineLayer, output: AffineLayer):
        super().__init__(state_dim, action_dim)
        if hidden.input_dim != state_dim + action_dim or output.input_dim != hidden.output_dim or output.output_dim != 1:
            raise DimensionMismatchError("concat_mlp layers do not chain to a scalar output")
        self.hidden = hidden
        self.output = output

    def parameters(self):
        return {**self.hidden.parameters(), **self.output.parameters()}

    def forward(self, hs, ha):
        self._check(hs, ha)
        z = np.concatenate([hs, ha])
        u = np.tanh(self.hidden.forward(z))
        return float(self.output.forward(u)[0]), (z, u)

    def backward(self, hs, ha, cache, delta_q):
        z, u = cache
        grads, grad_u = self.output.backward(u, np.array([delta_q]))
        pre = grad_u * (1.0 - u) * (1.0 + u)
        hidden_grads, grad_z = self.hidden.backward(z, pre)
        grads.update(hidden_grads)
        return grad_z[: self.state_dim], grad_z[self.state_dim:], grads


def build_interaction(
    kind: InteractionKind,
    state_dim: int,
    action_dim: int,
    rng: np.random.Generator,
    hidden_dim: Optional[int] = None,
    name: str = "interaction",
) -> Interaction:
    """
    Construct an interaction with freshly initialized parameters.

    Args:
        kind (InteractionKind): inner_product, bilinear or concat_mlp.
        state_dim (int): Final state embedding width.
        action_dim (int): Final action embedding width.
        rng (np.random.Generator): Parameter stream.
        hidden_dim (Optional[int]): concat_mlp hidden width (defaults to state_dim).
        name (str): Parameter name prefix.
    """
    kind = InteractionKind(kind)
    if kind == InteractionKind.INNER_PRODUCT:
        if state_dim != action_dim:
            raise DimensionMismatchError(
                f"inner_product needs equal embedding widths, got {state_dim} and {action_dim}"
            )
        return InnerProduct(state_dim)
    if kind == InteractionKind.BILINEAR:
        return Bilinear(init_uniform(rng, (state_dim, action_dim)), name=name)
    width = hidden_dim or state_dim
    return ConcatMLP(
        state_dim,
        action_dim,
        AffineLayer.initialize(f"{name}.hidden", state_dim + action_dim, width, rng),
        AffineLayer.initialize(f"{name}.output", width, 1, rng),
    )
