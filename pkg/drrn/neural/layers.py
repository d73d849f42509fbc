"""
Dense feed-forward building blocks with hand-derived backpropagation.

Layer ``l`` maps ``h_{l-1}`` to ``h_l = tanh(W_l h_{l-1} + b_l)`` with
``h_0 = x``; parameters are named ``"<tower>.<l>.W"`` and ``"<tower>.<l>.b"``.
"""
from typing import Dict, List, Mapping, Sequence, Tuple, Union

import numpy as np

from drrn.core.errors import DimensionMismatchError
from drrn.neural.gradients import Gradients, SparseColumns
from drrn.text.vocabulary import BowVector

INIT_SCALE = 0.05

LayerInput = Union[BowVector, np.ndarray]


def init_uniform(rng: np.random.Generator, shape, scale: float = INIT_SCALE) -> np.ndarray:
    """I.i.d. uniform values on [-scale, scale]."""
    return rng.uniform(-scale, scale, size=shape)


def _input_dim(x: LayerInput) -> int:
    return x.dim if isinstance(x, BowVector) else int(np.shape(x)[0])


def _affine(W: np.ndarray, b: np.ndarray, x: LayerInput) -> np.ndarray:
    if _input_dim(x) != W.shape[1]:
        raise DimensionMismatchError(f"input of dim {_input_dim(x)} into layer expecting {W.shape[1]}")
    if isinstance(x, BowVector):
        return W[:, x.indices] @ x.counts + b
    return W @ x + b


def _weight_grad(delta: np.ndarray, x: LayerInput):
    if isinstance(x, BowVector):
        return SparseColumns(x.indices, np.outer(delta, x.counts))
    return np.outer(delta, x)


class Tower:
    """Stack of tanh layers embedding one side's input."""

    def __init__(self, name: str, weights: Sequence[np.ndarray], biases: Sequence[np.ndarray]):
        if len(weights) < 1 or len(weights) != len(biases):
            raise DimensionMismatchError("a tower needs L >= 1 layers with one bias per weight")
        for l, (W, b) in enumerate(zip(weights, biases), start=1):
            if W.ndim != 2 or b.shape != (W.shape[0],):
                raise DimensionMismatchError(f"layer {l} of {name}: W {W.shape} does not match b {b.shape}")
            if l > 1 and W.shape[1] != weights[l - 2].shape[0]:
                raise DimensionMismatchError(f"layer {l} of {name} does not chain with layer {l - 1}")
        self.name = name
        self.weights = list(weights)
        self.biases = list(biases)

    @classmethod
    def initialize(cls, name: str, dims: Sequence[int], rng: np.random.Generator) -> "Tower":
        """
        Random tower with layer widths ``dims = [input, h_1, ..., h_L]``.
        """
        if len(dims) < 2 or any(d < 1 for d in dims):
            raise DimensionMismatchError(f"invalid tower dims {list(dims)}")
        weights, biases = [], []
        for fan_in, fan_out in zip(dims[:-1], dims[1:]):
            weights.append(init_uniform(rng, (fan_out, fan_in)))
            biases.append(init_uniform(rng, fan_out))
        return cls(name, weights, biases)

    @property
    def depth(self) -> int:
        return len(self.weights)

    @property
    def input_dim(self) -> int:
        return self.weights[0].shape[1]

    @property
    def output_dim(self) -> int:
        return self.weights[-1].shape[0]

    def parameters(self) -> Dict[str, np.ndarray]:
        params = {}
        for l, (W, b) in enumerate(zip(self.weights, self.biases), start=1):
            params[f"{self.name}.{l}.W"] = W
            params[f"{self.name}.{l}.b"] = b
        return params

    def forward(self, x: LayerInput) -> List[np.ndarray]:
        """
        Activations ``[h_1, ..., h_L]`` for input ``x`` (sparse BOW or dense vector).
        """
        activations = []
        h = x
        for W, b in zip(self.weights, self.biases):
            h = np.tanh(_affine(W, b, h))
            activations.append(h)
        return activations

    def backward(self, x: LayerInput, activations: Sequence[np.ndarray], grad_top: np.ndarray) -> Tuple[Gradients, np.ndarray]:
        """
        Backpropagate a gradient w.r.t. the top activation ``h_L``.

        Uses delta_L = g * (1 - h_L) * (1 + h_L) and
        delta_{l-1} = W_l^T delta_l * (1 - h_{l-1}) * (1 + h_{l-1}),
        with dW_l = delta_l h_{l-1}^T and db_l = delta_l.

        Returns:
            Tuple[Gradients, np.ndarray]: Parameter gradients and delta_1.
        """
        grads: Gradients = {}
        h_top = activations[-1]
        delta = grad_top * (1.0 - h_top) * (1.0 + h_top)
        for l in range(self.depth, 0, -1):
            below = activations[l - 2] if l > 1 else x
            grads[f"{self.name}.{l}.W"] = _weight_grad(delta, below)
            grads[f"{self.name}.{l}.b"] = delta
            if l > 1:
                delta = (self.weights[l - 1].T @ delta) * (1.0 - below) * (1.0 + below)
        return grads, delta


class AffineLayer:
    """Linear output head ``y = W x + b`` without activation, so Q can take any value."""

    def __init__(self, name: str, W: np.ndarray, b: np.ndarray):
        if W.ndim != 2 or b.shape != (W.shape[0],):
            raise DimensionMismatchError(f"{name}: W {W.shape} does not match b {b.shape}")
        self.name = name
        self.W = W
        self.b = b

    @classmethod
    def initialize(cls, name: str, fan_in: int, fan_out: int, rng: np.random.Generator) -> "AffineLayer":
        return cls(name, init_uniform(rng, (fan_out, fan_in)), init_uniform(rng, fan_out))

    @property
    def input_dim(self) -> int:
        return self.W.shape[1]

    @property
    def output_dim(self) -> int:
        return self.W.shape[0]

    def parameters(self) -> Dict[str, np.ndarray]:
        return {f"{self.name}.W": self.W, f"{self.name}.b": self.b}

    def forward(self, x: LayerInput) -> np.ndarray:
        return _affine(self.W, self.b, x)

    def backward(self, x: LayerInput, grad_out: np.ndarray) -> Tuple[Gradients, np.ndarray]:
        """Parameter gradients and the gradient w.r.t. a dense input."""
        grads: Gradients = {
            f"{self.name}.W": _weight_grad(grad_out, x),
            f"{self.name}.b": grad_out,
        }
        return grads, self.W.T @ grad_out


def init_params(shape: Mapping[str, Sequence[int]], rng: Union[int, np.random.Generator]) -> Dict[str, Tower]:
    """
    Initialize one tower per side from a seeded stream.

    Args:
        shape: Layer widths ``[input, h_1, ..., h_L]`` keyed by tower name;
            towers are drawn in mapping order.
        rng: Seed or generator.

    Returns:
        Dict[str, Tower]: Towers with weights and biases uniform on [-0.05, 0.05].
    """
    rng = rng if isinstance(rng, np.random.Generator) else np.random.default_rng(rng)
    return {name: Tower.initialize(name, dims, rng) for name, dims in shape.items()}
