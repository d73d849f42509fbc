"""
Gradient containers and the plain SGD update.

First-layer weight gradients of a bag-of-words input are nonzero only in the
columns of tokens present in the text, so they are kept as ``SparseColumns``
and scattered into the weight matrix on update.
"""
from dataclasses import dataclass
from typing import Dict, Mapping, Union

import numpy as np

from drrn.core.errors import DimensionMismatchError


@dataclass(frozen=True, eq=False)
class SparseColumns:
    """
    Gradient of a weight matrix restricted to a set of columns.

    Attributes:
        columns (np.ndarray): Column indices; may repeat after accumulation.
        values (np.ndarray): Shape (rows, len(columns)) column blocks.
    """
    columns: np.ndarray
    values: np.ndarray

    def dense(self, shape) -> np.ndarray:
        out = np.zeros(shape)
        np.add.at(out, (slice(None), self.columns), self.values)
        return out

    def __add__(self, other: "SparseColumns") -> "SparseColumns":
        return SparseColumns(
            np.concatenate([self.columns, other.columns]),
            np.concatenate([self.values, other.values], axis=1),
        )


GradValue = Union[np.ndarray, SparseColumns]
Gradients = Dict[str, GradValue]


def accumulate(grads: Gradients, name: str, value: GradValue, shape=None) -> None:
    """
    Add ``value`` into ``grads[name]``; tied parameters receive several contributions.

    Args:
        grads (Gradients): Gradient dictionary, updated in place.
        name (str): Parameter name.
        value: Dense array or SparseColumns.
        shape: Parameter shape, needed only to mix dense and sparse contributions.
    """
    current = grads.get(name)
    if current is None:
        grads[name] = value
    elif isinstance(current, SparseColumns) and isinstance(value, SparseColumns):
        grads[name] = current + value
    else:
        if shape is None:
            shape = current.shape if isinstance(current, np.ndarray) else value.shape
        left = current.dense(shape) if isinstance(current, SparseColumns) else current
        right = value.dense(shape) if isinstance(value, SparseColumns) else value
        grads[name] = left + right


def densify(grads: Gradients, params: Mapping[str, np.ndarray]) -> Dict[str, np.ndarray]:
    """Dense gradient for every parameter, zeros where no gradient flowed."""
    dense = {}
    for name, param in params.items():
        value = grads.get(name)
        if value is None:
            dense[name] = np.zeros_like(param)
        elif isinstance(value, SparseColumns):
            dense[name] = value.dense(param.shape)
        else:
            dense[name] = np.asarray(value, dtype=float).reshape(param.shape)
    return dense


def sgd_step(params: Mapping[str, np.ndarray], grads: Gradients, eta: float) -> Mapping[str, np.ndarray]:
    """
    In-place descent step ``theta <- theta - eta * grad`` with one constant rate.

    ``grads`` are gradients of (Q - y)^2 / 2, i.e. (Q - y) * dQ/dtheta, so this is
    the same as ``theta + eta * d * dQ/dtheta`` with TD error d = y - Q.

    Args:
        params: Named parameter arrays, updated in place.
        grads (Gradients): Gradients keyed by parameter name.
        eta (float): Learning rate.

    Returns:
        The updated parameters (the same mapping).
    """
    for name, grad in grads.items():
        param = params[name]
        if isinstance(grad, SparseColumns):
            np.subtract.at(param, (slice(None), grad.columns), eta * grad.values)
        else:
            if np.shape(grad) != param.shape:
                raise DimensionMismatchError(
                    f"gradient for {name} has shape {np.shape(grad)}, expected {param.shape}"
                )
            param -= eta * grad
    return params
