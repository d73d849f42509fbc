"""
Principal component analysis of embedding vectors.
"""
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from drrn.core.errors import AnalysisError


@dataclass(frozen=True)
class PcaProjection:
    """
    Attributes:
        points (np.ndarray): (n, k) projections, columns ordered by decreasing variance.
        explained_variance_ratio (np.ndarray): Share of total variance per component.
        components (np.ndarray): (d, k) orthonormal principal directions.
        mean (np.ndarray): Mean removed before projecting.
    """
    points: np.ndarray
    explained_variance_ratio: np.ndarray
    components: np.ndarray
    mean: np.ndarray


def pca_project(vectors: Sequence[Sequence[float]], k: int) -> PcaProjection:
    """
    Project vectors onto their top ``k`` principal components.

    Uses the eigendecomposition of the sample covariance. Each component's sign
    is fixed so that its largest-magnitude entry is positive, which makes the
    output deterministic.

    Args:
        vectors: n vectors of equal dimension d.
        k (int): Number of components, 1 <= k <= rank of the centered data.

    Returns:
        PcaProjection: Projected points, variance ratios, components and mean.

    Raises:
        AnalysisError: ``k`` exceeds the rank of the centered data.
    """
    data = np.asarray(vectors, dtype=np.float64)
    if data.ndim != 2 or data.shape[0] < 2:
        raise AnalysisError("PCA needs at least two vectors of equal dimension")
    if k < 1:
        raise AnalysisError("k must be at least 1")
    mean = data.mean(axis=0)
    centered = data - mean
    rank = int(np.linalg.matrix_rank(centered))
    if k > rank:
        raise AnalysisError(f"k={k} exceeds the rank {rank} of the centered vectors")

    covariance = centered.T @ centered / (data.shape[0] - 1)
    eigenvalues, eigenvectors = np.linalg.eigh(covariance)
    order = np.argsort(eigenvalues)[::-1]
    eigenvalues = np.clip(eigenvalues[order], 0.0, None)
    components = eigenvectors[:, order[:k]]
    pivots = np.argmax(np.abs(components), axis=0)
    signs = np.sign(components[pivots, np.arange(k)])
    components = components * np.where(signs == 0, 1.0, signs)

    return PcaProjection(
        points=centered @ components,
        explained_variance_ratio=eigenvalues[:k] / eigenvalues.sum(),
        components=components,
        mean=mean,
    )


def back_project(projection: PcaProjection) -> np.ndarray:
    """Reconstruct the (uncentered) vectors from their projections."""
    return projection.points @ projection.components.T + projection.mean
