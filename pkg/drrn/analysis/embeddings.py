"""
Final-layer text embeddings of DRRN agents and their joint PCA projection
across training checkpoints.
"""
import logging
from dataclasses import dataclass
from typing import List, Mapping, Sequence

import numpy as np

from drrn.agents import TextAgent
from drrn.analysis.pca import pca_project
from drrn.core.errors import AnalysisError

logger = logging.getLogger("Analysis")


@dataclass(frozen=True)
class EmbeddingCapture:
    """
    Attributes:
        state_text (str): Embedded state.
        action_texts (List[str]): Embedded actions, in the given order.
        state (np.ndarray): h_{L,s}.
        actions (np.ndarray): (m, d_a) rows h_{L,a} per action.
        q (np.ndarray): Q-value per action.
        inner_products (np.ndarray): <h_{L,s}, h_{L,a}> per action (NaN when the widths differ).
    """
    state_text: str
    action_texts: List[str]
    state: np.ndarray
    actions: np.ndarray
    q: np.ndarray
    inner_products: np.ndarray


@dataclass(frozen=True)
class ProjectedPoint:
    point_id: str
    side: str
    x: float
    y: float
    checkpoint: str


def capture_embeddings(agent: TextAgent, state_text: str, action_texts: Sequence[str]) -> EmbeddingCapture:
    """
    Record the final-layer embeddings of one state and its candidate actions.

    Raises:
        ConfigError: The agent is not a DRRN.
    """
    state = agent.embed_state(state_text)
    actions = np.array([agent.embed_action(text) for text in action_texts])
    if actions.shape[1] == state.shape[0]:
        inner = actions @ state
    else:
        inner = np.full(len(action_texts), np.nan)
    q = np.array([agent.q_values(state_text, [text])[0] for text in action_texts])
    return EmbeddingCapture(state_text, list(action_texts), state, actions, q, inner)


def project_captures(captures: Mapping[str, EmbeddingCapture], k: int = 2) -> List[ProjectedPoint]:
    """
    Project every captured embedding with one PCA fitted over all checkpoints.

    Args:
        captures: Capture per checkpoint label, in output order.
        k (int): 1 or 2 output coordinates (y is 0 when k == 1).

    Returns:
        List[ProjectedPoint]: ``state`` and ``action-<i>`` points per checkpoint.

    Raises:
        AnalysisError: State and action embeddings live in different spaces.
    """
    if k not in (1, 2):
        raise AnalysisError("projections are written with one or two coordinates")
    labels, vectors = [], []
    for checkpoint, capture in captures.items():
        if capture.actions.shape[1] != capture.state.shape[0]:
            raise AnalysisError("state and action embeddings have different widths")
        labels.append((checkpoint, "state", "state"))
        vectors.append(capture.state)
        for i, action in enumerate(capture.actions):
            labels.append((checkpoint, "action", f"action-{i}"))
            vectors.append(action)
    projection = pca_project(vectors, k)
    logger.debug(f"Projected {len(vectors)} embeddings, explained variance {projection.explained_variance_ratio}")
    return [
        ProjectedPoint(
            point_id=point_id,
            side=side,
            x=float(coords[0]),
            y=float(coords[1]) if k == 2 else 0.0,
            checkpoint=checkpoint,
        )
        for (checkpoint, side, point_id), coords in zip(labels, projection.points)
    ]
