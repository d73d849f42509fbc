from typing import Callable, Dict, Mapping

import numpy as np


def numerical_gradient(
    f: Callable[[], float], params: Mapping[str, np.ndarray], eps: float = 1e-5
) -> Dict[str, np.ndarray]:
    """
    Central finite-difference gradient of a scalar function of named parameters.

    Each entry is perturbed in place by +/- eps and restored.
    """
    grads = {}
    for name, param in params.items():
        grad = np.zeros_like(param)
        for index in np.ndindex(param.shape):
            original = param[index]
            param[index] = original + eps
            upper = f()
            param[index] = original - eps
            lower = f()
            param[index] = original
            grad[index] = (upper - lower) / (2.0 * eps)
        grads[name] = grad
    return grads


def relative_error(analytic: np.ndarray, numeric: np.ndarray, floor: float = 1e-12) -> float:
    """``|a - n| / max(|a| + |n|, floor)`` over whole arrays."""
    diff = np.linalg.norm(np.ravel(analytic) - np.ravel(numeric))
    scale = np.linalg.norm(np.ravel(analytic)) + np.linalg.norm(np.ravel(numeric))
    return float(diff / max(scale, floor))
